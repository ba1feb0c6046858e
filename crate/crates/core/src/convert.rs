//! Nonmodular conversion of `H_{λ,κ'}` into an isomorphic `H_{0,κ}`.
//!
//! With `|G|` invertible, `γ(v) = (1/|G|) Σ_{a,b} λ_{ab}(b, ^{b⁻¹}v) a` and
//! `κ(u, v) = γ(u)γ(v) − γ(v)γ(u) + λ(γ(u), v) − λ(γ(v), u) + κ'(u, v)`.
//! The map `f(v) = v + γ(v)` carries the relations of `H_{0,κ}` into
//! `H_{λ,κ'}`; [`verify_isomorphism`] checks this with the rewriting system.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{algebra_to_json, TermJson};
use crate::group_algebra::AlgebraElement;
use crate::parameters::{Deformation, KappaParam, LambdaParam};
use crate::pbw::{check_pbw, CheckOptions};
use crate::rewrite::{NcSum, RewriteSystem};

pub const DEFAULT_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct ConversionResult {
    /// `gamma[i - 1] = γ(v_i)`.
    pub gamma: Vec<AlgebraElement>,
    pub kappa_converted: KappaParam,
    /// Set by [`convert_and_verify`] once the isomorphism checks pass.
    pub iso_verified_to_degree: Option<usize>,
}

impl ConversionResult {
    /// `(0, κ)`.
    pub fn converted(&self) -> Deformation {
        let grp = self.kappa_converted.group().clone();
        Deformation {
            lambda: LambdaParam::zero(grp),
            kappa: self.kappa_converted.clone(),
        }
    }
}

pub fn gamma(lambda: &LambdaParam) -> Result<Vec<AlgebraElement>> {
    let grp = lambda.group();
    let field = grp.field();
    let inv_order = field.inverse_of_integer(grp.order() as i64)?;
    let mut out = vec![AlgebraElement::zero(); grp.n()];
    for (i, slot) in out.iter_mut().enumerate() {
        for b in grp.ids() {
            let binv = grp.inverse(b);
            let image = grp.act(binv, &grp.basis_vector(i + 1));
            // λ_{ab}(b, ·) lands on h = ab, so a = h b⁻¹.
            for (h, x) in lambda.eval_vector(b, &image).terms() {
                slot.add_term(grp.mul(h, binv), x);
            }
        }
        *slot = slot.scale(&inv_order);
    }
    Ok(out)
}

/// Requires `(λ, κ')` to be PBW and `char F ∤ |G|`.
pub fn convert(d: &Deformation) -> Result<ConversionResult> {
    let grp = d.group();
    grp.field().inverse_of_integer(grp.order() as i64)?;
    if !check_pbw(d, CheckOptions::default())?.is_pbw() {
        return Err(Error::NotPbwInput);
    }
    let gamma = gamma(&d.lambda)?;
    let n = grp.n();
    let mut kappa = KappaParam::zero(grp.clone());
    for i in 1..=n {
        for j in i + 1..=n {
            let (gu, gv) = (&gamma[i - 1], &gamma[j - 1]);
            let value = gu
                .mul(gv, grp)
                .sub(&gv.mul(gu, grp))
                .add(&d.lambda.eval_basis(gu, j))
                .sub(&d.lambda.eval_basis(gv, i))
                .add(&d.kappa.get(i, j));
            kappa.set(i, j, value)?;
        }
    }
    Ok(ConversionResult {
        gamma,
        kappa_converted: kappa,
        iso_verified_to_degree: None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoChecks {
    /// `f(v_i)f(v_j) − f(v_j)f(v_i) − κ(v_i, v_j)` reduces to 0.
    pub commutators: bool,
    /// `g f(v_i) − f(ᵍv_i) g` reduces to 0.
    pub group_relations: bool,
    /// Filtered dimensions of both algebras agree up to the degree.
    pub dimensions: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsoReport {
    pub checks: IsoChecks,
    pub degree: usize,
    pub dimensions: Vec<(u128, u128)>,
    /// The first failing relation, if any.
    pub failure: Option<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.checks.commutators && self.checks.group_relations && self.checks.dimensions
    }
}

/// Certificate that `f` is a filtered isomorphism through degree `m`.
pub fn verify_isomorphism(d: &Deformation, result: &ConversionResult, m: usize) -> Result<IsoReport> {
    let grp = d.group();
    let n = grp.n();
    let source = RewriteSystem::new(d.clone());
    let target = RewriteSystem::new(result.converted());
    let f: Vec<NcSum> = (1..=n)
        .map(|i| NcSum::vector(i, grp).add(&NcSum::from_algebra(&result.gamma[i - 1], grp)))
        .collect();
    let mut failure: Option<String> = None;

    let mut commutators = true;
    for i in 1..=n {
        for j in i + 1..=n {
            let rel = f[i - 1]
                .mul(&f[j - 1])
                .sub(&f[j - 1].mul(&f[i - 1]))
                .sub(&NcSum::from_algebra(&result.kappa_converted.get(i, j), grp));
            let nf = source.normal_form(&rel)?;
            if !nf.is_zero() && commutators {
                commutators = false;
                failure.get_or_insert(format!(
                    "commutator relation (v{i}, v{j}) leaves {}",
                    nf.display(grp)
                ));
            }
        }
    }

    let mut group_relations = true;
    'outer: for g in grp.ids() {
        let gw = NcSum::from_algebra(&AlgebraElement::group(g, grp.field()), grp);
        for i in 1..=n {
            let mut image = NcSum::zero();
            for (j, c) in grp.basis_image(g, i) {
                image = image.add(&f[j - 1].scale(c));
            }
            let rel = gw.mul(&f[i - 1]).sub(&image.mul(&gw));
            let nf = source.normal_form(&rel)?;
            if !nf.is_zero() {
                group_relations = false;
                failure.get_or_insert(format!(
                    "group relation (g = {}, v{i}) leaves {}",
                    grp.element(g),
                    nf.display(grp)
                ));
                break 'outer;
            }
        }
    }

    let mut dims = Vec::new();
    let mut dimensions = true;
    for k in 0..=m {
        match (source.filtered_dimension(k), target.filtered_dimension(k)) {
            (Ok(a), Ok(b)) => {
                dimensions &= a == b;
                dims.push((a, b));
            }
            _ => {
                dimensions = false;
                failure.get_or_insert("a rewriting system is not confluent".into());
                break;
            }
        }
    }
    if !dimensions {
        failure.get_or_insert("filtered dimensions differ".into());
    }
    Ok(IsoReport {
        checks: IsoChecks {
            commutators,
            group_relations,
            dimensions,
        },
        degree: m,
        dimensions: dims,
        failure,
    })
}

/// [`convert`] followed by [`verify_isomorphism`] at degree `m`.
pub fn convert_and_verify(d: &Deformation, m: usize) -> Result<(ConversionResult, IsoReport)> {
    let mut result = convert(d)?;
    let report = verify_isomorphism(d, &result, m)?;
    if report.passed() {
        result.iso_verified_to_degree = Some(m);
    }
    Ok((result, report))
}

#[derive(Serialize)]
struct GammaEntry {
    i: usize,
    value: Vec<TermJson>,
}

/// `{gamma, checks, degree}` plus the dimension table and any failure.
pub fn certificate_json(d: &Deformation, result: &ConversionResult, report: &IsoReport) -> serde_json::Value {
    let grp = d.group();
    let gamma: Vec<GammaEntry> = result
        .gamma
        .iter()
        .enumerate()
        .map(|(k, x)| GammaEntry {
            i: k + 1,
            value: algebra_to_json(x, grp),
        })
        .collect();
    let dims: Vec<serde_json::Value> = report
        .dimensions
        .iter()
        .enumerate()
        .map(|(k, (a, b))| serde_json::json!({"degree": k, "source": a.to_string(), "target": b.to_string()}))
        .collect();
    serde_json::json!({
        "gamma": gamma,
        "checks": report.checks,
        "degree": report.degree,
        "passed": report.passed(),
        "dimensions": dims,
        "failure": report.failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::{build_h_mu, MuParams};
    use crate::scalars::FieldSpec;

    fn golden(p: u64) -> Deformation {
        let field = FieldSpec::new(p).unwrap();
        let mut mu = MuParams::zero(3, field);
        mu.set_b(1, field.one());
        mu.set_b(2, field.one());
        build_h_mu(&mu).unwrap()
    }

    #[test]
    fn golden_rule_gamma() {
        let d = golden(7);
        let field = *d.field();
        let one = d.group().identity();
        let g = gamma(&d.lambda).unwrap();
        for i in 1..=3 {
            assert_eq!(g[i - 1], AlgebraElement::term(one, field.from_i64(i as i64 - 2)));
        }
        let (res, report) = convert_and_verify(&d, 3).unwrap();
        assert!(res.kappa_converted.is_zero());
        assert!(report.passed(), "{:?}", report.failure);
        assert_eq!(res.iso_verified_to_degree, Some(3));
    }

    #[test]
    fn modular_case_is_refused() {
        let d = golden(3);
        assert!(matches!(gamma(&d.lambda), Err(Error::ModularObstruction { m: 6, p: 3 })));
    }

    #[test]
    fn wrong_gamma_fails_group_relations() {
        let d = golden(7);
        let mut res = convert(&d).unwrap();
        let one = d.group().identity();
        res.gamma[0].add_term(one, &d.field().one());
        let report = verify_isomorphism(&d, &res, 3).unwrap();
        assert!(report.checks.commutators);
        assert!(!report.checks.group_relations);
    }
}
