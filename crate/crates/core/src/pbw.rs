//! The five PBW conditions on `(λ, κ)`, with failure witnesses, and the
//! consequences they force on the support of `κ` and `λ`.
//!
//! Every condition is linear in each vector slot, so it is enough to test it
//! on basis vectors. Antisymmetry lets conditions (2) and (3) run over
//! `i < j` and conditions (4) and (5) over `i < j < k`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{algebra_to_json, ElementJson, TermJson};
use crate::group_algebra::AlgebraElement;
use crate::groups::{ElementId, GroupTable};
use crate::linalg;
use crate::parameters::{AlphaBeta, Deformation};
use crate::scalars::Scalar;

/// Where a condition fails. `g` and `h` are the group elements quantified in
/// the condition (absent when it has none), `indices` the basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub condition: u8,
    pub g: Option<ElementId>,
    pub h: Option<ElementId>,
    pub indices: Vec<usize>,
    pub discrepancy: Discrepancy,
}

/// The nonzero difference of the two sides.
#[derive(Clone, Debug, PartialEq)]
pub enum Discrepancy {
    /// Conditions (1), (2) and (5) live in `FG`.
    Algebra(AlgebraElement),
    /// Conditions (3) and (4) live in `V`.
    Vector(Vec<Scalar>),
}

impl Discrepancy {
    pub fn is_zero(&self) -> bool {
        match self {
            Discrepancy::Algebra(x) => x.is_zero(),
            Discrepancy::Vector(v) => v.iter().all(Scalar::is_zero),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    /// `verdicts[k - 1]` for condition `k`.
    pub verdicts: [bool; 5],
    /// First failure of each condition in iteration order.
    pub witnesses: [Option<Witness>; 5],
    pub elapsed_ms: f64,
}

impl ConditionReport {
    pub fn is_pbw(&self) -> bool {
        self.verdicts.iter().all(|&v| v)
    }

    /// Failure of the lowest-numbered failing condition.
    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.iter().flatten().next()
    }

    pub fn to_json(&self, grp: &GroupTable) -> serde_json::Value {
        let mut conditions = serde_json::Map::new();
        for (k, v) in self.verdicts.iter().enumerate() {
            conditions.insert((k + 1).to_string(), (*v).into());
        }
        serde_json::json!({
            "pbw": self.is_pbw(),
            "conditions": conditions,
            "witness": self.witness().map(|w| w.to_json(grp)),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

#[derive(Serialize)]
struct WitnessJson {
    condition: u8,
    g: Option<ElementJson>,
    h: Option<ElementJson>,
    indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy_vector: Option<Vec<String>>,
}

impl Witness {
    pub fn to_json(&self, grp: &GroupTable) -> serde_json::Value {
        let el = |x: Option<ElementId>| x.map(|g| ElementJson::from_element(grp.element(g)));
        let (alg, vec) = match &self.discrepancy {
            Discrepancy::Algebra(x) => (Some(algebra_to_json(x, grp)), None),
            Discrepancy::Vector(v) => (None, Some(v.iter().map(|s| s.to_string()).collect())),
        };
        serde_json::to_value(WitnessJson {
            condition: self.condition,
            g: el(self.g),
            h: el(self.h),
            indices: self.indices.clone(),
            discrepancy: alg,
            discrepancy_vector: vec,
        })
        .expect("serializable")
    }

    /// One-line summary such as `condition 2 fails at g = (2 3), (v1, v2)`.
    pub fn describe(&self, grp: &GroupTable) -> String {
        let mut s = format!("condition {} fails", self.condition);
        let mut parts = Vec::new();
        if let Some(g) = self.g {
            parts.push(format!("g = {}", grp.element(g)));
        }
        if let Some(h) = self.h {
            parts.push(format!("h = {}", grp.element(h)));
        }
        let vs: Vec<String> = self.indices.iter().map(|i| format!("v{i}")).collect();
        parts.push(format!("({})", vs.join(", ")));
        s.push_str(" at ");
        s.push_str(&parts.join(", "));
        s
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Run the conditions in characteristic 2, where they are not known to
    /// characterize PBW.
    pub force_char2: bool,
}

fn gate(d: &Deformation, opts: CheckOptions) -> Result<()> {
    if d.field().is_char2() && !opts.force_char2 {
        return Err(Error::Char2CheckerRefused);
    }
    Ok(())
}

/// `λ(g, ʰv_i) = Σ_j M_ji λ(g, v_j)`.
fn lambda_at_image(d: &Deformation, g: ElementId, h: ElementId, i: usize) -> AlgebraElement {
    let grp = d.group();
    let mut out = AlgebraElement::zero();
    for (j, c) in grp.basis_image(h, i) {
        out.add_scaled(c, d.lambda.get(g, *j));
    }
    out
}

/// `κ(ᵍv_i, ᵍv_j)`.
fn kappa_at_images(d: &Deformation, g: ElementId, i: usize, j: usize) -> AlgebraElement {
    let grp = d.group();
    let mut out = AlgebraElement::zero();
    for (a, x) in grp.basis_image(g, i) {
        for (b, y) in grp.basis_image(g, j) {
            if a != b {
                out.add_scaled(&(x * y), &d.kappa.get(*a, *b));
            }
        }
    }
    out
}

/// `ʰv_i − ᵍv_i` as a dense vector.
fn image_difference(grp: &GroupTable, h: ElementId, g: ElementId, i: usize) -> Vec<Scalar> {
    let field = grp.field();
    let mut v = vec![field.zero(); grp.n()];
    for (j, c) in grp.basis_image(h, i) {
        v[j - 1] += c;
    }
    for (j, c) in grp.basis_image(g, i) {
        v[j - 1] -= c;
    }
    v
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += &(c * x);
    }
}

/// `λ(gh, v_i) − λ(g, ʰv_i)h − gλ(h, v_i)`.
pub fn condition1(d: &Deformation, g: ElementId, h: ElementId, i: usize) -> AlgebraElement {
    let grp = d.group();
    d.lambda
        .get(grp.mul(g, h), i)
        .sub(&lambda_at_image(d, g, h, i).right_mul(h, grp))
        .sub(&d.lambda.get(h, i).left_mul(g, grp))
}

/// `κ(ᵍv_i, ᵍv_j)g − gκ(v_i, v_j) − λ(λ(g, v_j), v_i) + λ(λ(g, v_i), v_j)`.
pub fn condition2(d: &Deformation, g: ElementId, i: usize, j: usize) -> AlgebraElement {
    let grp = d.group();
    let lhs = kappa_at_images(d, g, i, j)
        .right_mul(g, grp)
        .sub(&d.kappa.get(i, j).left_mul(g, grp));
    let rhs = d
        .lambda
        .eval_basis(d.lambda.get(g, j), i)
        .sub(&d.lambda.eval_basis(d.lambda.get(g, i), j));
    lhs.sub(&rhs)
}

/// `λ_h(g, v_i)(ʰv_j − ᵍv_j) − λ_h(g, v_j)(ʰv_i − ᵍv_i)`.
pub fn condition3(d: &Deformation, g: ElementId, h: ElementId, i: usize, j: usize) -> Vec<Scalar> {
    let grp = d.group();
    let mut out = vec![grp.field().zero(); grp.n()];
    let a = d.lambda.basis_coefficient(h, g, i);
    let b = d.lambda.basis_coefficient(h, g, j);
    axpy(&mut out, &a, &image_difference(grp, h, g, j));
    axpy(&mut out, &-b, &image_difference(grp, h, g, i));
    out
}

/// `κ_g(v_i, v_j)(ᵍv_k − v_k) + κ_g(v_j, v_k)(ᵍv_i − v_i) + κ_g(v_k, v_i)(ᵍv_j − v_j)`.
pub fn condition4(d: &Deformation, g: ElementId, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let grp = d.group();
    let one = grp.identity();
    let mut out = vec![grp.field().zero(); grp.n()];
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        let coeff = d.kappa.basis_coefficient(g, a, b);
        axpy(&mut out, &coeff, &image_difference(grp, g, one, c));
    }
    out
}

/// `λ(κ(v_i, v_j), v_k) + λ(κ(v_j, v_k), v_i) + λ(κ(v_k, v_i), v_j)`.
pub fn condition5(d: &Deformation, i: usize, j: usize, k: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        out.add_assign(&d.lambda.eval_basis(&d.kappa.get(a, b), c));
    }
    out
}

/// All quantified tuples of condition `k`, in witness order.
fn tuples(grp: &GroupTable, k: u8) -> Vec<(Option<ElementId>, Option<ElementId>, Vec<usize>)> {
    let n = grp.n();
    let mut out = Vec::new();
    let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| vec![i, j]));
    let triples = || {
        (1..=n).flat_map(move |i| {
            (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| vec![i, j, k]))
        })
    };
    match k {
        1 => {
            for g in grp.ids() {
                for h in grp.ids() {
                    out.extend((1..=n).map(|i| (Some(g), Some(h), vec![i])));
                }
            }
        }
        2 => {
            for g in grp.ids() {
                out.extend(pairs().map(|p| (Some(g), None, p)));
            }
        }
        3 => {
            for g in grp.ids() {
                for h in grp.ids() {
                    out.extend(pairs().map(|p| (Some(g), Some(h), p)));
                }
            }
        }
        4 => {
            for g in grp.ids() {
                out.extend(triples().map(|t| (Some(g), None, t)));
            }
        }
        5 => out.extend(triples().map(|t| (None, None, t))),
        _ => unreachable!("conditions are numbered 1..=5"),
    }
    out
}

/// Re-evaluates condition `k` at one tuple.
pub fn condition_discrepancy(
    d: &Deformation,
    k: u8,
    g: Option<ElementId>,
    h: Option<ElementId>,
    idx: &[usize],
) -> Discrepancy {
    let need = |x: Option<ElementId>| x.expect("condition quantifies over this group element");
    match k {
        1 => Discrepancy::Algebra(condition1(d, need(g), need(h), idx[0])),
        2 => Discrepancy::Algebra(condition2(d, need(g), idx[0], idx[1])),
        3 => Discrepancy::Vector(condition3(d, need(g), need(h), idx[0], idx[1])),
        4 => Discrepancy::Vector(condition4(d, need(g), idx[0], idx[1], idx[2])),
        5 => Discrepancy::Algebra(condition5(d, idx[0], idx[1], idx[2])),
        _ => panic!("no condition {k}"),
    }
}

/// Checks condition `k` (1..=5); `Ok(None)` when it holds.
pub fn check_condition(d: &Deformation, k: u8, opts: CheckOptions) -> Result<Option<Witness>> {
    gate(d, opts)?;
    if !(1..=5).contains(&k) {
        return Err(Error::Parse(format!("there is no PBW condition {k}")));
    }
    Ok(first_failure(d, k))
}

fn first_failure(d: &Deformation, k: u8) -> Option<Witness> {
    tuples(d.group(), k).into_par_iter().find_map_first(|(g, h, idx)| {
        let disc = condition_discrepancy(d, k, g, h, &idx);
        (!disc.is_zero()).then_some(Witness {
            condition: k,
            g,
            h,
            indices: idx,
            discrepancy: disc,
        })
    })
}

/// All five conditions.
pub fn check_pbw(d: &Deformation, opts: CheckOptions) -> Result<ConditionReport> {
    gate(d, opts)?;
    let start = Instant::now();
    let witnesses: [Option<Witness>; 5] = std::array::from_fn(|k| first_failure(d, k as u8 + 1));
    let verdicts = std::array::from_fn(|k| witnesses[k].is_none());
    Ok(ConditionReport {
        verdicts,
        witnesses,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Violated consequences, each a readable line. Empty means all hold.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnosis {
    pub violations: Vec<String>,
}

impl Diagnosis {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn flag(&mut self, msg: String) {
        self.violations.push(msg);
    }

    pub fn merge(&mut self, other: Diagnosis) {
        self.violations.extend(other.violations);
    }
}

fn kappa_matrix(d: &Deformation, g: ElementId) -> linalg::Mat {
    let n = d.group().n();
    (1..=n)
        .map(|a| (1..=n).map(|b| d.kappa.basis_coefficient(g, a, b)).collect())
        .collect()
}

fn bilinear(m: &linalg::Mat, u: &[Scalar], v: &[Scalar], zero: &Scalar) -> Scalar {
    let mut s = zero.clone();
    for (a, ua) in u.iter().enumerate() {
        for (b, vb) in v.iter().enumerate() {
            if !ua.is_zero() && !vb.is_zero() {
                s += &(&(ua * vb) * &m[a][b]);
            }
        }
    }
    s
}

/// Support of `κ` on a PBW pair: for each `g` with `κ_g ≢ 0`, either `g` acts
/// trivially, or `V^g` is a hyperplane on which `κ_g` vanishes, or
/// `codim V^g = 2` with `ker κ_g = V^g`. For `S_n` the support must also
/// consist of 3-cycles.
pub fn diagnose_kappa_support(d: &Deformation) -> Diagnosis {
    let grp = d.group();
    let field = grp.field();
    let zero = field.zero();
    let mut out = Diagnosis::default();
    for g in grp.ids() {
        let k = kappa_matrix(d, g);
        if k.iter().flatten().all(Scalar::is_zero) {
            continue;
        }
        let name = grp.element(g);
        let fixed = grp.fixed_space_basis(g);
        match grp.fixed_space_codim(g) {
            0 => {}
            1 => {
                for u in &fixed {
                    for v in &fixed {
                        if !bilinear(&k, u, v, &zero).is_zero() {
                            out.flag(format!("kappa_{name} is nonzero on its fixed hyperplane"));
                        }
                    }
                }
            }
            2 => {
                // Left kernel {u : uᵀK = 0}.
                let ker = linalg::nullspace(&linalg::transpose(&k), grp.n(), field);
                let mut joint = ker.clone();
                joint.extend(fixed.iter().cloned());
                if ker.len() != fixed.len() || linalg::rank(&joint) != fixed.len() {
                    out.flag(format!("ker kappa_{name} differs from the fixed space"));
                }
            }
            c => out.flag(format!("kappa is supported on {name} with codim V^g = {c}")),
        }
        if grp.is_symmetric() {
            let mut lengths: Vec<usize> = grp.perm(g).expect("permutation").cycles().iter().map(Vec::len).collect();
            lengths.retain(|&l| l > 1);
            if lengths != [3] {
                out.flag(format!("kappa is supported on {name}, not a 3-cycle"));
            }
        }
    }
    out
}

fn element_order(grp: &GroupTable, g: ElementId) -> usize {
    let mut x = g;
    let mut k = 1;
    while x != grp.identity() {
        x = grp.mul(x, g);
        k += 1;
    }
    k
}

/// Consequences of PBW for `λ`, checked over the whole group:
/// (1) `λ(1, ·) = 0`; (2) `gλ(g⁻¹, v) = −λ(g, ^{g⁻¹}v)g⁻¹`;
/// (3) `λ(g^j, v) = Σ_{t<j} g^{j−1−t} λ(g, ^{g^t}v) g^t`;
/// (4) `λ(g, ·)` lives on `h` with `h⁻¹g` trivial or a reflection, and
/// vanishes on `V^{h⁻¹g}` in the reflection case;
/// (5) for `g ≠ 1`, `λ_1(g, ·)` vanishes unless `g` is a reflection, and then
/// it vanishes on `V^g`.
pub fn diagnose_lambda(d: &Deformation) -> Diagnosis {
    let grp = d.group();
    let n = grp.n();
    let one = grp.identity();
    let mut out = Diagnosis::default();
    for i in 1..=n {
        if !d.lambda.get(one, i).is_zero() {
            out.flag(format!("(1) lambda(1, v{i}) is nonzero"));
        }
    }
    for g in grp.ids() {
        let name = grp.element(g);
        let ginv = grp.inverse(g);
        for i in 1..=n {
            let lhs = d.lambda.get(ginv, i).left_mul(g, grp);
            let rhs = lambda_at_image(d, g, ginv, i).right_mul(ginv, grp);
            if !lhs.add(&rhs).is_zero() {
                out.flag(format!("(2) fails at g = {name}, v{i}"));
            }
        }
        // (3): power[j] = g^j.
        let ord = element_order(grp, g);
        let mut powers = vec![one];
        for _ in 0..ord {
            powers.push(grp.mul(*powers.last().unwrap(), g));
        }
        for j in 1..=ord {
            for i in 1..=n {
                let mut sum = AlgebraElement::zero();
                for t in 0..j {
                    let term = lambda_at_image(d, g, powers[t], i)
                        .left_mul(powers[j - 1 - t], grp)
                        .right_mul(powers[t], grp);
                    sum.add_assign(&term);
                }
                if &sum != d.lambda.get(powers[j], i) {
                    out.flag(format!("(3) fails at g = {name}, j = {j}, v{i}"));
                }
            }
        }
        // (4)
        let mut support = std::collections::BTreeSet::new();
        for i in 1..=n {
            support.extend(d.lambda.get(g, i).support());
        }
        for h in support {
            let r = grp.mul(grp.inverse(h), g);
            match grp.fixed_space_codim(r) {
                0 => {}
                1 => {
                    for u in grp.fixed_space_basis(r) {
                        if !d.lambda.coefficient(h, g, &u).is_zero() {
                            out.flag(format!(
                                "(4) lambda_h(g, .) is nonzero on V^(h^-1 g) for g = {name}, h = {}",
                                grp.element(h)
                            ));
                        }
                    }
                }
                _ => out.flag(format!(
                    "(4) lambda(g, .) is supported on h = {} for g = {name}, but h^-1 g is not a reflection",
                    grp.element(h)
                )),
            }
        }
        // (5)
        let codim = grp.fixed_space_codim(g);
        if codim == 0 {
            continue;
        }
        let test: Vec<Vec<Scalar>> = if codim == 1 {
            grp.fixed_space_basis(g)
        } else {
            (1..=n).map(|i| grp.basis_vector(i)).collect()
        };
        for u in test {
            if !d.lambda.coefficient(one, g, &u).is_zero() {
                out.flag(format!("(5) lambda_1(g, .) is nonzero where it must vanish, g = {name}"));
            }
        }
    }
    out
}

/// Consequences specific to `S_n` permuting coordinates (`n > 2`, `p ≠ 2`):
/// `λ_{g(i j)}(g, v_i) = −λ_{g(i j)}(g, v_j)`; `λ_c(c, v) = 0` on `V^c`;
/// `λ(g, v_1 + … + v_n) = 0`; `Σ β_k = 0`; the equalities
/// `κ_{(ijk)}(v_i,v_j) = κ_{(ijk)}(v_j,v_k) = κ_{(ijk)}(v_k,v_i) = κ_{(ikj)}(v_i,v_k) = −κ_{(ikj)}(v_k,v_i)`;
/// and `κ(v_i, v_j) = Σ_k κ_{(ijk)}(v_i, v_j)((i j k) − (i k j))`.
pub fn symmetric_lemmas(d: &Deformation) -> Result<Diagnosis> {
    let grp = d.group();
    crate::parameters::require_symmetric_classifiable(grp)?;
    let n = grp.n();
    let field = grp.field();
    let mut out = Diagnosis::default();
    let ones = vec![field.one(); n];
    for g in grp.ids() {
        let name = grp.element(g);
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                let h = grp.mul(g, grp.cycle_id(&[i, j])?);
                let x = d.lambda.basis_coefficient(h, g, i);
                let y = d.lambda.basis_coefficient(h, g, j);
                if !(&x + &y).is_zero() {
                    out.flag(format!("opposite-on-reflections fails at g = {name}, i = {i}, j = {j}"));
                }
            }
        }
        for u in grp.fixed_space_basis(g) {
            if !d.lambda.coefficient(g, g, &u).is_zero() {
                out.flag(format!("lambda_c(c, v) is nonzero on V^c for c = {name}"));
            }
        }
        if !d.lambda.eval_vector(g, &ones).is_zero() {
            out.flag(format!("lambda(g, v1 + ... + vn) is nonzero for g = {name}"));
        }
    }
    let ab = AlphaBeta::extract(&d.lambda)?;
    let mut total = field.zero();
    for b in ab.betas() {
        total += b;
    }
    if !total.is_zero() {
        out.flag(format!("beta sum is {total}, not 0"));
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let c = grp.cycle_id(&[i, j, k])?;
                let cinv = grp.cycle_id(&[i, k, j])?;
                let vals = [
                    d.kappa.basis_coefficient(c, i, j),
                    d.kappa.basis_coefficient(c, j, k),
                    d.kappa.basis_coefficient(c, k, i),
                    d.kappa.basis_coefficient(cinv, i, k),
                    -d.kappa.basis_coefficient(cinv, k, i),
                ];
                if vals.iter().any(|v| v != &vals[0]) {
                    out.flag(format!("kappa equalities fail on ({i} {j} {k})"));
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let mut expected = AlgebraElement::zero();
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let c = grp.cycle_id(&[i, j, k])?;
                let x = d.kappa.basis_coefficient(c, i, j);
                expected.add_term(c, &x);
                expected.add_term(grp.cycle_id(&[i, k, j])?, &-x);
            }
            if expected != d.kappa.get(i, j) {
                out.flag(format!("kappa(v{i}, v{j}) is not of 3-cycle form"));
            }
        }
    }
    Ok(out)
}

/// Exact `G`-invariance `κ(ᵍu, ᵍv)g = gκ(u, v)` on basis pairs.
pub fn kappa_is_invariant(d: &Deformation) -> bool {
    let grp = d.group();
    let n = grp.n();
    grp.ids().all(|g| {
        (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                kappa_at_images(d, g, i, j).right_mul(g, grp) == d.kappa.get(i, j).left_mul(g, grp)
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::{build_h_mu, MuParams};
    use crate::scalars::FieldSpec;
    use std::sync::Arc;

    fn cyclic_family(n: usize, p: u64) -> Deformation {
        let field = FieldSpec::new(p).unwrap();
        let mut mu = MuParams::zero(n, field);
        for k in 1..n {
            mu.set_b(k, field.one());
        }
        mu.c = field.one();
        build_h_mu(&mu).unwrap()
    }

    #[test]
    fn trivial_pair_passes() {
        let grp = Arc::new(GroupTable::symmetric(3, FieldSpec::new(5).unwrap()).unwrap());
        let r = check_pbw(&Deformation::trivial(grp), CheckOptions::default()).unwrap();
        assert!(r.is_pbw() && r.witness().is_none());
    }

    #[test]
    fn cyclic_family_passes_and_diagnoses() {
        let d = cyclic_family(3, 5);
        assert!(check_pbw(&d, CheckOptions::default()).unwrap().is_pbw());
        assert!(diagnose_kappa_support(&d).passed());
        assert!(diagnose_lambda(&d).passed());
        assert!(symmetric_lemmas(&d).unwrap().passed());
        assert!(kappa_is_invariant(&d));
    }

    #[test]
    fn non_invariant_kappa_fails_condition_two() {
        let field = FieldSpec::new(5).unwrap();
        let grp = Arc::new(GroupTable::symmetric(3, field).unwrap());
        let mut d = Deformation::trivial(grp.clone());
        d.kappa
            .set(1, 2, AlgebraElement::group(grp.identity(), &field))
            .unwrap();
        let r = check_pbw(&d, CheckOptions::default()).unwrap();
        assert!(!r.verdicts[1]);
        let w = r.witness().unwrap();
        assert_eq!(w.condition, 2);
        assert_eq!(condition_discrepancy(&d, 2, w.g, w.h, &w.indices), w.discrepancy);
        // (1 3) is also a failing tuple: κ(v3, v2)g − gκ(v1, v2) = −g.
        let t13 = grp.cycle_id(&[1, 3]).unwrap();
        assert_eq!(condition2(&d, t13, 1, 2), AlgebraElement::term(t13, field.from_i64(-1)));
    }

    #[test]
    fn char2_is_refused() {
        let field = FieldSpec::with_char2_override(2).unwrap();
        let grp = Arc::new(GroupTable::symmetric(2, field).unwrap());
        let d = Deformation::trivial(grp);
        assert!(matches!(
            check_pbw(&d, CheckOptions::default()),
            Err(Error::Char2CheckerRefused)
        ));
        assert!(check_pbw(&d, CheckOptions { force_char2: true }).unwrap().is_pbw());
    }
}
