//! Seeded campaigns comparing the five-condition verdict with the
//! confluence verdict.

use rayon::prelude::*;

use crate::error::Result;
use crate::parameters::{random_params_in, Profile};
use crate::pbw::{check_pbw, CheckOptions};
use crate::rewrite::RewriteSystem;
use crate::groups::GroupTable;
use crate::scalars::FieldSpec;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOutcome {
    pub index: usize,
    pub seed: u64,
    pub profile: Profile,
    pub checker: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossvalReport {
    pub n: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub outcomes: Vec<SampleOutcome>,
}

/// Per-sample seed, so sample `k` does not depend on how many precede it.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (index as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
}

/// Profiles cycle general, mu-family, perturbed-mu by sample index.
pub fn profile_for(index: usize) -> Profile {
    Profile::ALL[index % Profile::ALL.len()]
}

pub fn crossval(n: usize, field: FieldSpec, samples: usize, seed: u64) -> Result<CrossvalReport> {
    let grp = Arc::new(GroupTable::symmetric(n, field)?);
    let outcomes = (0..samples)
        .into_par_iter()
        .map(|index| {
            let s = sample_seed(seed, index);
            let profile = profile_for(index);
            let d = random_params_in(&grp, s, profile)?;
            let checker = check_pbw(&d, CheckOptions::default())?.is_pbw();
            let oracle = RewriteSystem::new(d).check_confluence()?.confluent;
            Ok(SampleOutcome {
                index,
                seed: s,
                profile,
                checker,
                oracle,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossvalReport {
        n,
        field,
        seed,
        outcomes,
    })
}

impl CrossvalReport {
    pub fn agreements(&self) -> usize {
        self.outcomes.iter().filter(|o| o.checker == o.oracle).count()
    }

    pub fn all_agree(&self) -> bool {
        self.agreements() == self.outcomes.len()
    }

    /// `matrix[checker][oracle]`, indexed by verdict (`false = 0`).
    pub fn matrix(&self) -> [[usize; 2]; 2] {
        let mut m = [[0; 2]; 2];
        for o in &self.outcomes {
            m[o.checker as usize][o.oracle as usize] += 1;
        }
        m
    }

    pub fn summary(&self) -> String {
        format!(
            "{}/{} agreement (n = {}, {}, seed {})",
            self.agreements(),
            self.outcomes.len(),
            self.n,
            self.field,
            self.seed
        )
    }

    /// Deterministic JSON (no timings).
    pub fn to_json(&self) -> serde_json::Value {
        let m = self.matrix();
        let mut by_profile = serde_json::Map::new();
        for p in Profile::ALL {
            let xs: Vec<_> = self.outcomes.iter().filter(|o| o.profile == p).collect();
            by_profile.insert(
                p.name().into(),
                serde_json::json!({
                    "samples": xs.len(),
                    "pbw": xs.iter().filter(|o| o.checker).count(),
                    "agree": xs.iter().filter(|o| o.checker == o.oracle).count(),
                }),
            );
        }
        let disagreements: Vec<serde_json::Value> = self
            .outcomes
            .iter()
            .filter(|o| o.checker != o.oracle)
            .map(|o| {
                serde_json::json!({
                    "index": o.index, "seed": o.seed, "profile": o.profile.name(),
                    "checker": o.checker, "oracle": o.oracle,
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "characteristic": self.field.characteristic(),
            "seed": self.seed,
            "samples": self.outcomes.len(),
            "agreements": self.agreements(),
            "matrix": {
                "checker_true_oracle_true": m[1][1],
                "checker_true_oracle_false": m[1][0],
                "checker_false_oracle_true": m[0][1],
                "checker_false_oracle_false": m[0][0],
            },
            "by_profile": by_profile,
            "disagreements": disagreements,
        })
    }
}
