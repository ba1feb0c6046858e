//! Families with G-invariant κ, the c-bump, the two-parameter family and
//! the scaling (cλ, c²κ).

use std::error::Error;

use drinfeld_hecke::classification::{build_h_mu, bump_c, invariant_kappa_params, scale_params, two_param_family};
use drinfeld_hecke::pbw::{check_pbw, kappa_is_invariant, CheckOptions};
use drinfeld_hecke::FieldSpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(5)?;
    let opts = CheckOptions::default();
    let k = |x: i64| field.from_i64(x);

    let mu = invariant_kappa_params(k(2), k(1), &[k(1), k(3), k(4)], &[k(1), k(0), k(2)], 4, field)?;
    let d = build_h_mu(&mu)?;
    println!("invariant family: PBW {}, kappa invariant {}", check_pbw(&d, opts)?.is_pbw(), kappa_is_invariant(&d));

    let bumped = build_h_mu(&bump_c(&mu, &k(1)))?;
    println!("after c -> c + 1: PBW {}", check_pbw(&bumped, opts)?.is_pbw());

    let two = two_param_family(k(3), k(4), 4, field)?;
    println!("two-parameter family (3, 4): PBW {}", check_pbw(&two, opts)?.is_pbw());

    for c in 0..5 {
        let scaled = scale_params(&k(c), &two);
        assert!(check_pbw(&scaled, opts)?.is_pbw());
    }
    // Scaling κ linearly breaks a family whose a_ijk differ across triples.
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_3_4.json");
    let e = drinfeld_hecke::format::load_deformation(path)?;
    let two7 = e.field().from_i64(2);
    let mixed = drinfeld_hecke::Deformation::new(e.lambda.scale(&two7), e.kappa.scale(&two7))?;
    let r = check_pbw(&mixed, opts)?;
    let w = r.witness().expect("linear scaling fails");
    println!("(2 lambda, 2 kappa) on example_3_4: {}", w.describe(e.group()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
