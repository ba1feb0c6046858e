//! Pass from (λ, κ') to an isomorphic (0, κ) when char F does not divide |G|.

use std::error::Error;

use drinfeld_hecke::classification::{build_h_mu, MuParams};
use drinfeld_hecke::convert::{convert_and_verify, DEFAULT_DEGREE};
use drinfeld_hecke::pbw::{check_pbw, kappa_is_invariant, CheckOptions};
use drinfeld_hecke::FieldSpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(7)?;
    let mut mu = MuParams::zero(3, field);
    mu.set_a(1, 2, field.from_i64(3));
    mu.set_a(2, 3, field.from_i64(1));
    mu.set_b(1, field.one());
    mu.c = field.from_i64(2);
    let d = build_h_mu(&mu)?;

    let (result, report) = convert_and_verify(&d, DEFAULT_DEGREE)?;
    let grp = d.group();
    for (i, g) in result.gamma.iter().enumerate() {
        println!("gamma(v{}) = {}", i + 1, g.display(grp));
    }
    let converted = result.converted();
    assert!(check_pbw(&converted, CheckOptions::default())?.is_pbw());
    assert!(kappa_is_invariant(&converted));
    println!("isomorphism checks: {:?}", report.checks);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
