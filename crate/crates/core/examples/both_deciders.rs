//! λ(g, v_i) = (g(i) − i)g with κ(v_i, v_j) = Σ_k ((i j k) − (i k j)), checked
//! by both deciders for n = 3 and n = 4.

use std::error::Error;

use drinfeld_hecke::classification::{build_h_mu, MuParams};
use drinfeld_hecke::pbw::{check_pbw, CheckOptions};
use drinfeld_hecke::rewrite::RewriteSystem;
use drinfeld_hecke::FieldSpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [3, 4] {
        let field = FieldSpec::new(5)?;
        let mut mu = MuParams::zero(n, field);
        for k in 1..n {
            mu.set_b(k, field.one());
        }
        mu.c = field.one();
        let d = build_h_mu(&mu)?;

        let conditions = check_pbw(&d, CheckOptions::default())?;
        let rs = RewriteSystem::new(d);
        let confluence = rs.check_confluence()?;
        println!(
            "n = {n}: conditions {:?}, confluence {} over {} overlaps",
            conditions.verdicts, confluence.confluent, confluence.overlaps_checked
        );
        assert!(conditions.is_pbw() && confluence.confluent);

        let nf = rs.normal_form(&rs.parse("v2 v1")?)?;
        println!("  v2 v1 = {}", nf.display(rs.group()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
