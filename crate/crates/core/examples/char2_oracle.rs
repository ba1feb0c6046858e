//! Characteristic 2, where only the rewriting oracle is used: the unipotent
//! Z/2 matrix group on F_2^2, and the four-parameter family for S_2.

use std::error::Error;

use drinfeld_hecke::classification::low_dim_family;
use drinfeld_hecke::format::load_deformation;
use drinfeld_hecke::pbw::{check_pbw, CheckOptions};
use drinfeld_hecke::rewrite::RewriteSystem;
use drinfeld_hecke::{Error as DhaError, FieldSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_4_3.json");
    let d = load_deformation(path)?;
    assert!(matches!(check_pbw(&d, CheckOptions::default()), Err(DhaError::Char2CheckerRefused)));
    let rs = RewriteSystem::new(d);
    println!("matrix group of order {}: PBW = {}", rs.group().order(), rs.check_confluence()?.confluent);
    let nf = rs.normal_form(&rs.parse("M[[1,1],[0,1]] v2")?)?;
    println!("  g w = {}", nf.display(rs.group()));

    let f2 = FieldSpec::with_char2_override(2)?;
    let mut passing = 0;
    for bits in 0..16u32 {
        let params: Vec<_> = (0..4).map(|k| f2.from_i64(((bits >> k) & 1) as i64)).collect();
        let d = low_dim_family(2, &params, f2)?;
        if RewriteSystem::new(d).check_confluence()?.confluent {
            passing += 1;
        }
    }
    println!("S_2 over F_2: {passing}/16 tuples (a, b, c, d) are PBW");
    assert_eq!(passing, 16);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
