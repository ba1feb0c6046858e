//! Dimensions one and two: only the trivial pair for n = 1, and the (a, b)
//! family with κ = 0 for n = 2.

use std::error::Error;
use std::sync::Arc;

use drinfeld_hecke::classification::low_dim_family;
use drinfeld_hecke::pbw::{check_pbw, CheckOptions};
use drinfeld_hecke::{AlgebraElement, Deformation, FieldSpec, GroupTable};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(5)?;
    let opts = CheckOptions::default();

    let grp = Arc::new(GroupTable::symmetric(1, field)?);
    let mut d = Deformation::trivial(grp.clone());
    d.lambda.set(grp.identity(), 1, AlgebraElement::group(grp.identity(), &field));
    println!("n = 1, lambda(1, v1) = 1: PBW {}", check_pbw(&d, opts)?.is_pbw());

    let d = low_dim_family(2, &[field.one(), field.one()], field)?;
    let grp = d.group().clone();
    let t = grp.cycle_id(&[1, 2])?;
    println!("n = 2, (a, b) = (1, 1): lambda((1 2), v1) = {}", d.lambda.get(t, 1).display(&grp));
    println!("  PBW {}", check_pbw(&d, opts)?.is_pbw());

    let mut bent = d.clone();
    bent.kappa.set(1, 2, AlgebraElement::group(t, &field))?;
    println!("  with kappa(v1, v2) = (1 2): PBW {}", check_pbw(&bent, opts)?.is_pbw());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
