//! Read, write and re-read parameter and μ files.

use std::error::Error;

use drinfeld_hecke::classification::extract_mu;
use drinfeld_hecke::format::{deformation_to_string, load_deformation, mu_to_string, parse_deformation, parse_mu};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for name in ["example_1_1_n3", "example_3_4", "example_4_3", "s8_n2_family"] {
        let d = load_deformation(format!("{dir}/{name}.json"))?;
        let text = deformation_to_string(&d);
        assert_eq!(parse_deformation(&text)?, d);
        println!("{name}: n = {}, |G| = {}, {}", d.group().n(), d.group().order(), d.field());
    }
    let d = load_deformation(format!("{dir}/example_3_4.json"))?;
    let mu = extract_mu(&d)?;
    let text = mu_to_string(&mu);
    assert_eq!(parse_mu(&text)?, mu);
    print!("{text}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
