//! Seeded campaign comparing the five conditions with confluence.

use std::error::Error;

use drinfeld_hecke::crossval::crossval;
use drinfeld_hecke::FieldSpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = crossval(3, FieldSpec::new(5)?, 60, 7)?;
    let m = report.matrix();
    println!("{}", report.summary());
    println!("  both PBW: {}, both not PBW: {}", m[1][1], m[0][0]);
    assert!(report.all_agree());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
