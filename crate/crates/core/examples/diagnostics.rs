//! Witnesses for a failing pair and the support diagnostics for a PBW one.

use std::error::Error;

use drinfeld_hecke::format::load_deformation;
use drinfeld_hecke::pbw::{check_pbw, diagnose_kappa_support, diagnose_lambda, symmetric_lemmas, CheckOptions};
use drinfeld_hecke::rewrite::RewriteSystem;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

    let bad = load_deformation(format!("{dir}/non_invariant_kappa.json"))?;
    let report = check_pbw(&bad, CheckOptions::default())?;
    let w = report.witness().expect("fails");
    println!("{}", w.describe(bad.group()));
    let rs = RewriteSystem::new(bad.clone());
    if let Some(o) = rs.check_confluence()?.witness {
        println!("{}", o.describe(bad.group()));
    }

    let good = load_deformation(format!("{dir}/example_3_4.json"))?;
    let kappa = diagnose_kappa_support(&good);
    let lambda = diagnose_lambda(&good);
    let lemmas = symmetric_lemmas(&good)?;
    println!(
        "example_3_4: kappa support ok {}, lambda ok {}, S_n lemmas ok {}",
        kappa.passed(),
        lambda.passed(),
        lemmas.passed()
    );
    assert!(kappa.passed() && lambda.passed() && lemmas.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
