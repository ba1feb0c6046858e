//! The n = 3 table of λ as printed, with (a1, a2, a3) = (a12, a23, a31),
//! compared against the general construction.

use std::sync::Arc;

use drinfeld_hecke::classification::*;
use drinfeld_hecke::pbw::*;
use drinfeld_hecke::*;

/// `(g, i, terms)`: each term is a coefficient vector over
/// `[1, a1, a2, a3, b1, b2, b3]` and a cycle (empty for the identity).
type Entry = (Vec<usize>, usize, Vec<([i64; 7], Vec<usize>)>);

fn printed() -> Vec<Entry> {
    let e = vec![];
    let t12 = vec![1,2]; let t13 = vec![1,3]; let t23 = vec![2,3];
    let c123 = vec![1,2,3]; let c132 = vec![1,3,2];
    vec![
     (t12.clone(),1, vec![([0,1,0,0,0,0,0],e.clone()),([0,0,0,0,1,0,0],t12.clone()),([0,0,-1,-1,0,0,0],c132.clone())]),
     (t12.clone(),2, vec![([0,-1,0,0,0,0,0],e.clone()),([0,0,0,0,-1,0,0],t12.clone()),([0,0,1,1,0,0,0],c123.clone())]),
     (t12.clone(),3, vec![([0,0,1,1,0,0,0],c132.clone()),([0,0,-1,-1,0,0,0],c123.clone())]),
     (t23.clone(),1, vec![([0,1,0,1,0,0,0],c132.clone()),([0,1,0,1,0,0,0],c123.clone())]),
     (t23.clone(),2, vec![([0,0,1,0,0,0,0],e.clone()),([0,0,0,0,0,1,0],t23.clone()),([0,-1,0,-1,0,0,0],c132.clone())]),
     (t23.clone(),3, vec![([1,0,0,0,0,0,0],e.clone()),([1,0,0,0,0,0,0],t23.clone()),([-1,0,0,0,0,0,0],c123.clone())]),
     (t13.clone(),2, vec![([0,1,1,0,0,0,0],c132.clone()),([0,-1,-1,0,0,0,0],c123.clone())]),
     (t13.clone(),1, vec![([0,0,0,-1,0,0,0],e.clone()),([0,0,0,0,0,0,-1],t13.clone()),([0,1,1,0,0,0,0],c123.clone())]),
     (t13.clone(),3, vec![([0,0,0,1,0,0,0],e.clone()),([0,-1,-1,0,0,0,0],c132.clone()),([0,0,0,0,0,0,1],t13.clone())]),
     (c123.clone(),1, vec![([0,1,-1,0,0,0,0],t13.clone()),([0,0,-1,-1,0,0,0],t23.clone()),([0,0,0,0,1,0,0],c123.clone())]),
     (c123.clone(),2, vec![([0,0,1,1,0,0,0],t12.clone()),([0,-1,1,0,0,0,0],t13.clone()),([0,0,0,0,0,1,0],c123.clone())]),
     (c123.clone(),3, vec![([0,0,1,1,0,0,0],t23.clone()),([0,0,-1,-1,0,0,0],t12.clone()),([0,0,0,0,0,0,1],c123.clone())]),
     (c132.clone(),1, vec![([0,0,1,-1,0,0,0],t12.clone()),([0,1,0,-1,0,0,0],t23.clone()),([0,0,0,0,0,0,-1],c132.clone())]),
     (c132.clone(),2, vec![([0,-1,0,1,0,0,0],t23.clone()),([0,-1,1,0,0,0,0],t13.clone()),([0,0,0,0,0,-1,0],c132.clone())]),
     (c132.clone(),3, vec![([0,1,-1,0,0,0,0],t13.clone()),([0,0,-1,1,0,0,0],t12.clone()),([0,0,0,0,-1,0,0],c132.clone())]),
    ]
}

fn tables(vals: [i64; 6]) -> (Deformation, Deformation, GroupTable) {
    let f = FieldSpec::rationals();
    let grp = Arc::new(GroupTable::symmetric(3, f).unwrap());
    let [a1, a2, a3, b1, b2, c] = vals;
    let coeffs = [1, a1, a2, a3, b1, b2, -(b1 + b2)];
    let mut mu = MuParams::zero(3, f);
    mu.set_a(1, 2, f.from_i64(a1));
    mu.set_a(2, 3, f.from_i64(a2));
    mu.set_a(3, 1, f.from_i64(a3));
    mu.set_b(1, f.from_i64(b1));
    mu.set_b(2, f.from_i64(b2));
    mu.c = f.from_i64(c);
    let generated = build_h_mu(&mu).unwrap();
    let mut table = Deformation::trivial(grp.clone());
    table.kappa = generated.kappa.clone();
    for (g, i, terms) in printed() {
        let gid = grp.cycle_id(&g).unwrap();
        let mut x = AlgebraElement::zero();
        for (cs, el) in terms {
            let id = if el.is_empty() { grp.identity() } else { grp.cycle_id(&el).unwrap() };
            let v: i64 = cs.iter().zip(coeffs.iter()).map(|(a, b)| a * b).sum();
            x.add_term(id, &f.from_i64(v));
        }
        table.lambda.set(gid, i, x);
    }
    let grp = GroupTable::symmetric(3, f).unwrap();
    (generated, table, grp)
}

const GENERIC: [i64; 6] = [1, 2, 5, 11, 3, 7];

#[test]
fn kappa_has_uniform_coefficient_c() {
    let (generated, _, grp) = tables(GENERIC);
    let f = *grp.field();
    for (i, j, k) in [(1, 2, 3), (1, 3, 2), (2, 3, 1)] {
        let expected = AlgebraElement::from_terms([
            (grp.cycle_id(&[i, j, k]).unwrap(), f.from_i64(7)),
            (grp.cycle_id(&[i, k, j]).unwrap(), f.from_i64(-7)),
        ]);
        assert_eq!(generated.kappa.get(i, j), expected);
    }
}

#[test]
fn supports_agree_entrywise() {
    let (generated, table, grp) = tables(GENERIC);
    for g in grp.ids() {
        for i in 1..=3 {
            let a: Vec<_> = generated.lambda.get(g, i).support().collect();
            let b: Vec<_> = table.lambda.get(g, i).support().collect();
            assert_eq!(a, b, "support of lambda({}, v{i})", grp.element(g));
        }
    }
}

#[test]
fn exact_agreement_where_the_printed_values_match() {
    let (generated, table, grp) = tables(GENERIC);
    let agree = [(vec![1, 2], 3), (vec![1, 3], 2), (vec![1, 3, 2], 1)];
    for (g, i) in agree {
        let g = grp.cycle_id(&g).unwrap();
        assert_eq!(generated.lambda.get(g, i), table.lambda.get(g, i));
    }
}

#[test]
fn generated_table_is_pbw_and_printed_table_is_not() {
    let (generated, table, _) = tables(GENERIC);
    assert!(check_pbw(&generated, CheckOptions::default()).unwrap().is_pbw());
    let r = check_pbw(&table, CheckOptions::default()).unwrap();
    assert!(!r.is_pbw());
    assert!(!r.verdicts[0]);
}
