//! Build H_μ for a random tuple, confirm it is PBW, and read μ back.

use std::error::Error;

use drinfeld_hecke::classification::{build_h_mu, extract_mu, free_parameter_count, MuParams};
use drinfeld_hecke::pbw::{check_pbw, CheckOptions};
use drinfeld_hecke::FieldSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 4;
    let field = FieldSpec::new(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut draw = || field.from_i64(rng.gen_range(0..7));

    let mut mu = MuParams::zero(n, field);
    for i in 1..=n {
        for j in i + 1..=n {
            mu.set_a(i, j, draw());
        }
    }
    for k in 1..n {
        mu.set_b(k, draw());
    }
    mu.c = draw();
    println!("{} free parameters for n = {n}", free_parameter_count(n));

    let d = build_h_mu(&mu)?;
    let report = check_pbw(&d, CheckOptions::default())?;
    println!("H_mu is PBW: {}", report.is_pbw());
    assert!(report.is_pbw());

    let back = extract_mu(&d)?;
    assert_eq!(back, mu);
    assert_eq!(build_h_mu(&back)?, d);
    println!("extract then build reproduces the tables; c = {}", back.c);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
