//! Reduce words to PBW normal form, and confirm both reduction orders agree.

use std::error::Error;

use drinfeld_hecke::format::load_deformation;
use drinfeld_hecke::rewrite::{RewriteSystem, Strategy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/golden_rule.json");
    let rs = RewriteSystem::new(load_deformation(path)?);
    let grp = rs.group();

    for word in ["g[2,1,3] v1", "g[2,3,1] v1 v3", "v3 v2 v1 g[3,2,1]", "2 v1 v2 - g[2,1,3] v1"] {
        let x = rs.parse(word)?;
        let left = rs.normal_form_with(&x, Strategy::Leftmost)?;
        let right = rs.normal_form_with(&x, Strategy::Rightmost)?;
        assert_eq!(left, right);
        println!("{word}  =>  {}", left.display(grp));
    }
    println!("filtered dimension up to degree 2: {}", rs.filtered_dimension(2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
