//! The shipped parameter files against tables written out from the defining
//! relations, entry by entry.

use std::path::PathBuf;
use std::sync::Arc;

use drinfeld_hecke::classification::{build_h_mu, low_dim_family, MuParams};
use drinfeld_hecke::format::{load_deformation, parse_mu};
use drinfeld_hecke::{AlgebraElement, Deformation, FieldSpec, GroupElement, GroupTable, Matrix};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn symmetric(n: usize, p: u64) -> Arc<GroupTable> {
    Arc::new(GroupTable::symmetric(n, FieldSpec::new(p).unwrap()).unwrap())
}

/// λ(g, v_i) = (g(i) − i) g.
fn golden_lambda(d: &mut Deformation) {
    let grp = d.group().clone();
    for g in grp.ids() {
        for i in 1..=grp.n() {
            let c = grp.field().from_i64(grp.image(g, i) as i64 - i as i64);
            d.lambda.set(g, i, AlgebraElement::term(g, c));
        }
    }
}

/// κ(v_i, v_j) = Σ_{k ≠ i, j} ((i j k) − (j i k)).
fn cyclic_kappa(d: &mut Deformation) {
    let grp = d.group().clone();
    let f = *grp.field();
    for i in 1..=grp.n() {
        for j in i + 1..=grp.n() {
            let mut x = AlgebraElement::zero();
            for k in (1..=grp.n()).filter(|&k| k != i && k != j) {
                x.add_term(grp.cycle_id(&[i, j, k]).unwrap(), &f.one());
                x.add_term(grp.cycle_id(&[j, i, k]).unwrap(), &-f.one());
            }
            d.kappa.set(i, j, x).unwrap();
        }
    }
}

#[test]
fn cyclic_family_files() {
    for n in [3, 4] {
        let mut d = Deformation::trivial(symmetric(n, 5));
        golden_lambda(&mut d);
        cyclic_kappa(&mut d);
        assert_eq!(load_deformation(fixture(&format!("example_1_1_n{n}.json"))).unwrap(), d, "n = {n}");
    }
    let mu = parse_mu(&std::fs::read_to_string(fixture("example_1_1_mu.json")).unwrap()).unwrap();
    assert_eq!(build_h_mu(&mu).unwrap(), load_deformation(fixture("example_1_1_n3.json")).unwrap());
}

#[test]
fn golden_rule_file() {
    let mut d = Deformation::trivial(symmetric(3, 7));
    golden_lambda(&mut d);
    assert_eq!(load_deformation(fixture("golden_rule.json")).unwrap(), d);
}

#[test]
fn two_scalar_a_file() {
    // m = 1, m' = 2, n = 4 over F_7.
    let grp = symmetric(4, 7);
    let f = *grp.field();
    let a = |i: usize, j: usize| -> i64 {
        match (i.min(j), i.max(j)) {
            (1, 2) | (1, 3) => if i < j { 1 } else { -1 },
            (2, 3) => if i < j { 2 } else { -2 },
            _ => 0,
        }
    };
    let mut d = Deformation::trivial(grp.clone());
    for g in grp.ids() {
        for i in 1..=4 {
            let mut x = AlgebraElement::zero();
            for j in (1..=4).filter(|&j| j != i) {
                let c = a(i, j) - a(grp.image(g, i), grp.image(g, j));
                let t = grp.cycle_id(&[i, j]).unwrap();
                x.add_term(grp.mul(g, t), &f.from_i64(c));
            }
            d.lambda.set(g, i, x);
        }
    }
    let block = AlgebraElement::from_terms([
        (grp.cycle_id(&[1, 3, 2]).unwrap(), f.one()),
        (grp.cycle_id(&[1, 2, 3]).unwrap(), -f.one()),
    ]);
    d.kappa.set(1, 2, block.clone()).unwrap();
    d.kappa.set(2, 3, block.clone()).unwrap();
    d.kappa.set(1, 3, block.neg()).unwrap();
    assert_eq!(load_deformation(fixture("example_3_4.json")).unwrap(), d);
}

#[test]
fn unipotent_char2_file() {
    let f2 = FieldSpec::with_char2_override(2).unwrap();
    let g = Matrix::from_rows(vec![vec![f2.one(), f2.one()], vec![f2.zero(), f2.one()]]).unwrap();
    let grp = Arc::new(GroupTable::from_generators(&[GroupElement::Matrix(g)], f2, 64).unwrap());
    assert_eq!(grp.order(), 2);
    let gid = grp.ids().find(|&x| x != grp.identity()).unwrap();
    let mut d = Deformation::trivial(grp.clone());
    d.lambda.set(gid, 2, AlgebraElement::group(grp.identity(), &f2));
    d.kappa.set(1, 2, AlgebraElement::group(gid, &f2)).unwrap();
    assert_eq!(load_deformation(fixture("example_4_3.json")).unwrap(), d);
}

#[test]
fn low_dim_and_failing_files() {
    let f5 = FieldSpec::new(5).unwrap();
    assert_eq!(
        load_deformation(fixture("s8_n2_family.json")).unwrap(),
        low_dim_family(2, &[f5.one(), f5.one()], f5).unwrap()
    );
    let grp = symmetric(3, 5);
    let mut d = Deformation::trivial(grp.clone());
    d.kappa.set(1, 2, AlgebraElement::group(grp.identity(), &f5)).unwrap();
    assert_eq!(load_deformation(fixture("non_invariant_kappa.json")).unwrap(), d);
}

#[test]
fn two_scalar_a_is_the_mu_family_with_c_equal_a123() {
    let f = FieldSpec::new(7).unwrap();
    let mut mu = MuParams::zero(4, f);
    mu.set_a(1, 2, f.one());
    mu.set_a(1, 3, f.one());
    mu.set_a(2, 3, f.from_i64(2));
    mu.c = mu.a_triple(1, 2, 3);
    assert_eq!(mu.c, f.from_i64(-1));
    assert_eq!(build_h_mu(&mu).unwrap(), load_deformation(fixture("example_3_4.json")).unwrap());
}
