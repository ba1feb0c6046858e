//! Classification of the PBW deformations for `S_n` permuting coordinates.
//!
//! For `n > 2` every such deformation is `H_μ` for a tuple
//! `μ = (a_ij, b_k, c)`: `C(n, 2)` antisymmetric `a`'s, `n − 1` free `b`'s
//! (with `b_n = −(b_1 + … + b_{n−1})`) and one `c`. [`build_h_mu`] expands a
//! tuple into parameter tables and [`extract_mu`] reads it back. Dimensions
//! 1 and 2 are handled by [`low_dim_family`].

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group_algebra::AlgebraElement;
use crate::groups::{GroupTable, Permutation};
use crate::parameters::{self, AlphaBeta, Deformation, KappaParam, LambdaParam};
use crate::scalars::{FieldSpec, Scalar};

/// The tuple `μ = (a_ij, b_k, c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuParams {
    n: usize,
    field: FieldSpec,
    a: BTreeMap<(usize, usize), Scalar>,
    b: Vec<Scalar>,
    pub c: Scalar,
}

impl MuParams {
    pub fn zero(n: usize, field: FieldSpec) -> Self {
        let mut a = BTreeMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                a.insert((i, j), field.zero());
            }
        }
        Self {
            n,
            field,
            a,
            b: vec![field.zero(); n.saturating_sub(1)],
            c: field.zero(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Sets `a_ij` (and so `a_ji = −a_ij`).
    pub fn set_a(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        if i < j {
            self.a.insert((i, j), value);
        } else {
            self.a.insert((j, i), -value);
        }
    }

    pub fn a(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.a[&(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.a[&(j, i)],
            std::cmp::Ordering::Equal => self.field.zero(),
        }
    }

    /// `a_ijk = a_ij a_jk + a_jk a_ki + a_ki a_ij`.
    pub fn a_triple(&self, i: usize, j: usize, k: usize) -> Scalar {
        parameters::triple(|x, y| self.a(x, y), i, j, k)
    }

    /// Sets `b_k` for `1 ≤ k < n`.
    pub fn set_b(&mut self, k: usize, value: Scalar) {
        assert!(k >= 1 && k < self.n, "b_{k} is not a free parameter");
        self.b[k - 1] = value;
    }

    /// `b_k` with `k` read mod `n`; `b_n = −(b_1 + … + b_{n−1})`.
    pub fn b(&self, k: usize) -> Scalar {
        let k = (k + self.n - 1) % self.n + 1;
        if k == self.n {
            let mut s = self.field.zero();
            for x in &self.b {
                s -= x;
            }
            s
        } else {
            self.b[k - 1].clone()
        }
    }

    /// The free `b_1..b_{n−1}`.
    pub fn free_b(&self) -> &[Scalar] {
        &self.b
    }

    /// `a_ij` for `i < j` in lexicographic order.
    pub fn a_entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.a.iter().map(|(k, v)| (*k, v))
    }

    /// Number of free scalars stored in the tuple.
    pub fn free_parameter_count(&self) -> usize {
        self.a.len() + self.b.len() + 1
    }
}

/// `C(n, 2) + (n − 1) + 1`.
pub fn free_parameter_count(n: usize) -> usize {
    n * (n - 1) / 2 + (n - 1) + 1
}

/// Expands `μ` into `(λ, κ)` over a fresh `S_n` table.
pub fn build_h_mu(mu: &MuParams) -> Result<Deformation> {
    let grp = Arc::new(GroupTable::symmetric(mu.n, mu.field)?);
    build_h_mu_in(&grp, mu)
}

/// `λ(g, v_i) = Σ_{k=0}^{g(i)−i+n−1} b_{i+k} g + Σ_{j≠i} (a_ij − a_{g(i)g(j)}) g(i j)`
/// and `κ(v_i, v_j) = Σ_{k≠i,j} (c − a_123 + a_ijk) ((i j k) − (i k j))`.
pub fn build_h_mu_in(grp: &Arc<GroupTable>, mu: &MuParams) -> Result<Deformation> {
    let n = mu.n;
    if n <= 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "H_mu is defined for n > 2; use the low-dimensional families",
        });
    }
    if !grp.is_symmetric() || grp.n() != n || grp.field() != &mu.field {
        return Err(Error::NotSymmetricGroup);
    }
    let field = mu.field;
    let mut lambda = LambdaParam::zero(grp.clone());
    for g in grp.ids() {
        for i in 1..=n {
            let gi = grp.image(g, i);
            let mut value = AlgebraElement::zero();
            // Literal sum: when g(i) = i it runs over all n values of b and vanishes.
            let mut diag = field.zero();
            for k in 0..=(gi + n - 1 - i) {
                diag += &mu.b(i + k);
            }
            value.add_term(g, &diag);
            for j in (1..=n).filter(|&j| j != i) {
                let coeff = &mu.a(i, j) - &mu.a(gi, grp.image(g, j));
                let gt = grp.mul(g, grp.cycle_id(&[i, j])?);
                value.add_term(gt, &coeff);
            }
            lambda.set(g, i, value);
        }
    }
    let mut kappa = KappaParam::zero(grp.clone());
    let base = &mu.c - &mu.a_triple(1, 2, 3);
    for i in 1..=n {
        for j in i + 1..=n {
            let mut value = AlgebraElement::zero();
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let coeff = &base + &mu.a_triple(i, j, k);
                value.add_term(grp.cycle_id(&[i, j, k])?, &coeff);
                value.add_term(grp.cycle_id(&[i, k, j])?, &-&coeff);
            }
            kappa.set(i, j, value)?;
        }
    }
    Ok(Deformation { lambda, kappa })
}

/// Reads `μ` off a PBW pair: `a_ij = ¼ λ_1((i j), v_i − v_j)`,
/// `b_k = ½ λ_{s_k}(s_k, v_k − v_{k+1})`, `c = κ_{(1 2 3)}(v_1, v_2)`.
pub fn extract_mu(d: &Deformation) -> Result<MuParams> {
    let ab = AlphaBeta::extract(&d.lambda)?;
    let grp = d.group();
    let n = grp.n();
    let mut mu = MuParams::zero(n, *grp.field());
    for i in 1..=n {
        for j in i + 1..=n {
            mu.set_a(i, j, ab.alpha(i, j));
        }
    }
    for k in 1..n {
        mu.set_b(k, ab.beta(k));
    }
    mu.c = d.kappa.basis_coefficient(grp.cycle_id(&[1, 2, 3])?, 1, 2);
    Ok(mu)
}

/// The families for `n = 1` (only the trivial pair, no parameters) and
/// `n = 2` (`(a, b)`, or `(a, b, c, d)` in characteristic 2).
pub fn low_dim_family(n: usize, params: &[Scalar], field: FieldSpec) -> Result<Deformation> {
    if n == 0 || n > 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "low-dimensional families cover n = 1 and n = 2",
        });
    }
    let grp = Arc::new(GroupTable::symmetric(n, field)?);
    low_dim_family_in(&grp, params)
}

pub fn low_dim_family_in(grp: &Arc<GroupTable>, params: &[Scalar]) -> Result<Deformation> {
    let n = grp.n();
    let field = *grp.field();
    let mut d = Deformation::trivial(grp.clone());
    match n {
        1 => {
            if !params.is_empty() {
                return Err(Error::FamilyArity {
                    expected: 0,
                    found: params.len(),
                });
            }
        }
        2 => {
            let expected = if field.is_char2() { 4 } else { 2 };
            if params.len() != expected {
                return Err(Error::FamilyArity {
                    expected,
                    found: params.len(),
                });
            }
            let t = grp.cycle_id(&[1, 2])?;
            let one = grp.identity();
            let shift = AlgebraElement::from_terms([(one, params[0].clone()), (t, params[1].clone())]);
            d.lambda.set(t, 1, shift.clone());
            // In characteristic 2 the minus sign is invisible.
            d.lambda.set(t, 2, shift.neg());
            if expected == 4 {
                let k = AlgebraElement::from_terms([(one, params[2].clone()), (t, params[3].clone())]);
                d.kappa.set(1, 2, k)?;
            }
        }
        _ => {
            return Err(Error::UnsupportedDimension {
                n,
                reason: "low-dimensional families cover n = 1 and n = 2",
            })
        }
    }
    Ok(d)
}

/// The tuple with `a_ij = (d + a_1i a_1j)/(a_1i − a_1j)` for `i, j ≠ 1`, so that
/// `a_ijk = d` on every triple and the expanded `κ` is `c Σ ((i j k) − (i k j))`.
///
/// `a_first_row[m]` is `a_1(m+2)`; `b[m]` is `b_(m+1)`.
pub fn invariant_kappa_params(
    c: Scalar,
    d: Scalar,
    a_first_row: &[Scalar],
    b: &[Scalar],
    n: usize,
    field: FieldSpec,
) -> Result<MuParams> {
    if n <= 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "invariant families are defined for n > 2",
        });
    }
    if a_first_row.len() != n - 1 {
        return Err(Error::FamilyArity {
            expected: n - 1,
            found: a_first_row.len(),
        });
    }
    if b.len() != n - 1 {
        return Err(Error::FamilyArity {
            expected: n - 1,
            found: b.len(),
        });
    }
    let a1 = |i: usize| &a_first_row[i - 2];
    let mut mu = MuParams::zero(n, field);
    for i in 2..=n {
        mu.set_a(1, i, a1(i).clone());
    }
    for i in 2..=n {
        for j in i + 1..=n {
            let diff = a1(i) - a1(j);
            if diff.is_zero() {
                return Err(Error::DistinctnessViolation { i, j });
            }
            let num = &d + &(a1(i) * a1(j));
            mu.set_a(i, j, num.checked_div(&diff)?);
        }
    }
    for (k, x) in b.iter().enumerate() {
        mu.set_b(k + 1, x.clone());
    }
    mu.c = c;
    Ok(mu)
}

/// `λ(g, v_i) = a (g(i) − i) g` and `κ(v_i, v_j) = b Σ_{k≠i,j} ((i j k) − (i k j))`.
pub fn two_param_family(a: Scalar, b: Scalar, n: usize, field: FieldSpec) -> Result<Deformation> {
    if n <= 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the two-parameter family is defined for n > 2",
        });
    }
    let grp = Arc::new(GroupTable::symmetric(n, field)?);
    let mut d = Deformation::trivial(grp.clone());
    for g in grp.ids() {
        for i in 1..=n {
            let shift = field.from_i64(grp.image(g, i) as i64 - i as i64);
            d.lambda.set(g, i, AlgebraElement::term(g, &a * &shift));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let mut value = AlgebraElement::zero();
            for k in (1..=n).filter(|&k| k != i && k != j) {
                value.add_term(grp.cycle_id(&[i, j, k])?, &b);
                value.add_term(grp.cycle_id(&[i, k, j])?, &-&b);
            }
            d.kappa.set(i, j, value)?;
        }
    }
    Ok(d)
}

/// `c ↦ c + δ`.
pub fn bump_c(mu: &MuParams, delta: &Scalar) -> MuParams {
    let mut out = mu.clone();
    out.c = &out.c + delta;
    out
}

/// `(λ, κ) ↦ (cλ, c²κ)`.
pub fn scale_params(c: &Scalar, d: &Deformation) -> Deformation {
    d.scale(c)
}

/// `(i j k)` as a permutation, for callers building tables by hand.
pub fn three_cycle(n: usize, i: usize, j: usize, k: usize) -> Result<Permutation> {
    Permutation::cycle(n, &[i, j, k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn zero_tuple_builds_trivial_pair() {
        let d = build_h_mu(&MuParams::zero(4, f(5))).unwrap();
        assert!(d.lambda.is_zero() && d.kappa.is_zero());
    }

    #[test]
    fn b_n_is_derived() {
        let field = f(7);
        let mut mu = MuParams::zero(4, field);
        mu.set_b(1, field.from_i64(2));
        mu.set_b(2, field.from_i64(3));
        mu.set_b(3, field.from_i64(4));
        assert_eq!(mu.b(4), field.from_i64(-9));
        assert_eq!(mu.b(0), mu.b(4));
        assert_eq!(mu.b(5), mu.b(1));
    }

    #[test]
    fn golden_rule_expansion() {
        let n = 4;
        let field = FieldSpec::rationals();
        let mut mu = MuParams::zero(n, field);
        for k in 1..n {
            mu.set_b(k, field.one());
        }
        let d = build_h_mu(&mu).unwrap();
        let grp = d.group();
        assert!(d.kappa.is_zero());
        for g in grp.ids() {
            for i in 1..=n {
                let shift = field.from_i64(grp.image(g, i) as i64 - i as i64);
                assert_eq!(*d.lambda.get(g, i), AlgebraElement::term(g, shift));
            }
        }
    }

    #[test]
    fn two_scalar_a_extracts() {
        // m = 1, m' = 2, n = 4, p = 7.
        let field = f(7);
        let mut mu = MuParams::zero(4, field);
        mu.set_a(1, 2, field.from_i64(1));
        mu.set_a(1, 3, field.from_i64(1));
        mu.set_a(2, 3, field.from_i64(2));
        mu.c = mu.a_triple(1, 2, 3);
        assert_eq!(mu.c, field.from_i64(-1));
        let d = build_h_mu(&mu).unwrap();
        assert_eq!(extract_mu(&d).unwrap(), mu);
    }

    #[test]
    fn invariant_family_sample() {
        let field = f(5);
        let mu = invariant_kappa_params(
            field.one(),
            field.zero(),
            &[field.from_i64(1), field.from_i64(2)],
            &[field.zero(), field.zero()],
            3,
            field,
        )
        .unwrap();
        assert_eq!(mu.a(2, 3), field.from_i64(3));
        assert!(mu.a_triple(1, 2, 3).is_zero());
        let err = invariant_kappa_params(
            field.one(),
            field.zero(),
            &[field.from_i64(1), field.from_i64(1)],
            &[field.zero(), field.zero()],
            3,
            field,
        );
        assert!(matches!(err, Err(Error::DistinctnessViolation { i: 2, j: 3 })));
    }

    #[test]
    fn two_param_family_matches_tuple() {
        for n in [3, 4] {
            let field = f(5);
            let (a, b) = (field.from_i64(2), field.from_i64(3));
            let direct = two_param_family(a.clone(), b.clone(), n, field).unwrap();
            let mut mu = MuParams::zero(n, field);
            for k in 1..n {
                mu.set_b(k, a.clone());
            }
            mu.c = b;
            assert_eq!(direct, build_h_mu(&mu).unwrap());
        }
    }

    #[test]
    fn low_dim_arity() {
        assert!(low_dim_family(1, &[], f(5)).unwrap().lambda.is_zero());
        assert!(matches!(
            low_dim_family(1, &[f(5).one()], f(5)),
            Err(Error::FamilyArity { expected: 0, found: 1 })
        ));
        assert!(matches!(
            low_dim_family(2, &[f(5).one()], f(5)),
            Err(Error::FamilyArity { expected: 2, found: 1 })
        ));
        let f2 = FieldSpec::with_char2_override(2).unwrap();
        assert!(low_dim_family(2, &[f2.zero(), f2.zero(), f2.one(), f2.zero()], f2).is_ok());
    }

    #[test]
    fn parameter_count() {
        for n in 3..=6 {
            assert_eq!(free_parameter_count(n), (n * n + n) / 2);
            assert_eq!(MuParams::zero(n, f(5)).free_parameter_count(), (n * n + n) / 2);
        }
    }
}
