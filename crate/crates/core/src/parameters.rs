//! The deformation parameters `λ: FG ⊗ V → FG` and alternating
//! `κ: V ⊗ V → FG`, the group action on them, and the `α`/`β` scalars read
//! off `λ` for the symmetric group.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classification::{self, MuParams};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgebraElement, ZERO};
use crate::groups::{ElementId, GroupTable};
use crate::scalars::{FieldSpec, Scalar};

/// Values `λ(g, v_i)` on group elements and basis vectors; everything else is
/// obtained by linear extension at evaluation time.
#[derive(Clone, Debug)]
pub struct LambdaParam {
    group: Arc<GroupTable>,
    table: BTreeMap<(ElementId, usize), AlgebraElement>,
}

impl PartialEq for LambdaParam {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl LambdaParam {
    pub fn zero(group: Arc<GroupTable>) -> Self {
        Self {
            group,
            table: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn set(&mut self, g: ElementId, i: usize, value: AlgebraElement) {
        assert!((1..=self.group.n()).contains(&i), "basis index {i} out of range");
        if value.is_zero() {
            self.table.remove(&(g, i));
        } else {
            self.table.insert((g, i), value);
        }
    }

    /// `λ(g, v_i)`.
    pub fn get(&self, g: ElementId, i: usize) -> &AlgebraElement {
        self.table.get(&(g, i)).unwrap_or(&ZERO)
    }

    /// Nonzero table entries in `(g, i)` order.
    pub fn entries(&self) -> impl Iterator<Item = (ElementId, usize, &AlgebraElement)> {
        self.table.iter().map(|((g, i), x)| (*g, *i, x))
    }

    /// `λ(g, v)` for a coefficient vector `v`.
    pub fn eval_vector(&self, g: ElementId, v: &[Scalar]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (k, c) in v.iter().enumerate() {
            out.add_scaled(c, self.get(g, k + 1));
        }
        out
    }

    /// `λ(x, v_i)` for `x ∈ FG`.
    pub fn eval_basis(&self, x: &AlgebraElement, i: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (g, c) in x.terms() {
            out.add_scaled(c, self.get(g, i));
        }
        out
    }

    /// The bilinear extension `λ(x, v) = Σ_g x_g Σ_i v_i λ(g, v_i)`.
    pub fn eval(&self, x: &AlgebraElement, v: &[Scalar]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (g, c) in x.terms() {
            out.add_scaled(c, &self.eval_vector(g, v));
        }
        out
    }

    /// The coefficient `λ_h(g, v)`.
    pub fn coefficient(&self, h: ElementId, g: ElementId, v: &[Scalar]) -> Scalar {
        let field = self.group.field();
        let mut acc = field.zero();
        for (k, c) in v.iter().enumerate() {
            if let Some(x) = self.get(g, k + 1).coeff(h) {
                acc += &(c * x);
            }
        }
        acc
    }

    /// `λ_h(g, v_i)`.
    pub fn basis_coefficient(&self, h: ElementId, g: ElementId, i: usize) -> Scalar {
        self.get(g, i).coefficient(h, self.group.field())
    }

    /// `(ʰλ)(g, v) = ʰ(λ(h⁻¹gh, ʰ⁻¹v))`.
    pub fn act(&self, h: ElementId) -> LambdaParam {
        let grp = &self.group;
        let h_inv = grp.inverse(h);
        let mut out = LambdaParam::zero(grp.clone());
        for g in grp.ids() {
            let pulled = grp.conjugate_element(h_inv, g);
            for i in 1..=grp.n() {
                let v = grp.act(h_inv, &grp.basis_vector(i));
                let value = self.eval_vector(pulled, &v).conjugate(h, grp);
                out.set(g, i, value);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LambdaParam {
        let mut out = LambdaParam::zero(self.group.clone());
        for (g, i, x) in self.entries() {
            out.set(g, i, x.scale(c));
        }
        out
    }
}

/// Values `κ(v_i, v_j)` for `i < j`; alternation supplies the rest.
#[derive(Clone, Debug)]
pub struct KappaParam {
    group: Arc<GroupTable>,
    table: BTreeMap<(usize, usize), AlgebraElement>,
}

impl PartialEq for KappaParam {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl KappaParam {
    pub fn zero(group: Arc<GroupTable>) -> Self {
        Self {
            group,
            table: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Sets `κ(v_i, v_j)`; `κ(v_j, v_i)` becomes its negative.
    pub fn set(&mut self, i: usize, j: usize, value: AlgebraElement) -> Result<()> {
        let n = self.group.n();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Parse(format!(
                "kappa index pair ({i}, {j}) must be distinct indices in 1..={n}"
            )));
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.neg())
        };
        if value.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
        Ok(())
    }

    /// `κ(v_i, v_j)` for any indices.
    pub fn get(&self, i: usize, j: usize) -> AlgebraElement {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => AlgebraElement::zero(),
            std::cmp::Ordering::Less => self.table.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .table
                .get(&(j, i))
                .map(AlgebraElement::neg)
                .unwrap_or_default(),
        }
    }

    /// Nonzero entries `(i, j, κ(v_i, v_j))` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &AlgebraElement)> {
        self.table.iter().map(|((i, j), x)| (*i, *j, x))
    }

    /// Bilinear alternating extension.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((i, j), x) in &self.table {
            // u_i v_j - u_j v_i
            let c = &(&u[i - 1] * &v[j - 1]) - &(&u[j - 1] * &v[i - 1]);
            out.add_scaled(&c, x);
        }
        out
    }

    /// `κ_g(u, v)`.
    pub fn coefficient(&self, g: ElementId, u: &[Scalar], v: &[Scalar]) -> Scalar {
        self.eval(u, v).coefficient(g, self.group.field())
    }

    /// `κ_g(v_i, v_j)`.
    pub fn basis_coefficient(&self, g: ElementId, i: usize, j: usize) -> Scalar {
        self.get(i, j).coefficient(g, self.group.field())
    }

    /// `(ʰκ)(v, w) = ʰ(κ(ʰ⁻¹v, ʰ⁻¹w))`.
    pub fn act(&self, h: ElementId) -> KappaParam {
        let grp = &self.group;
        let h_inv = grp.inverse(h);
        let mut out = KappaParam::zero(grp.clone());
        for i in 1..=grp.n() {
            for j in i + 1..=grp.n() {
                let u = grp.act(h_inv, &grp.basis_vector(i));
                let v = grp.act(h_inv, &grp.basis_vector(j));
                out.set(i, j, self.eval(&u, &v).conjugate(h, grp))
                    .expect("indices valid");
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> KappaParam {
        let mut out = KappaParam::zero(self.group.clone());
        for (i, j, x) in self.entries() {
            out.set(i, j, x.scale(c)).expect("indices valid");
        }
        out
    }
}

/// A parameter pair `(λ, κ)` over a common group.
#[derive(Clone, Debug, PartialEq)]
pub struct Deformation {
    pub lambda: LambdaParam,
    pub kappa: KappaParam,
}

impl Deformation {
    pub fn new(lambda: LambdaParam, kappa: KappaParam) -> Result<Self> {
        if !Arc::ptr_eq(&lambda.group, &kappa.group) {
            return Err(Error::Parse(
                "lambda and kappa must share one group table".into(),
            ));
        }
        Ok(Self { lambda, kappa })
    }

    /// The undeformed skew group algebra `S(V) # G`.
    pub fn trivial(group: Arc<GroupTable>) -> Self {
        Self {
            lambda: LambdaParam::zero(group.clone()),
            kappa: KappaParam::zero(group),
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.lambda.group
    }

    pub fn field(&self) -> &FieldSpec {
        self.lambda.group.field()
    }

    /// `(cλ, c²κ)`.
    pub fn scale(&self, c: &Scalar) -> Deformation {
        Deformation {
            lambda: self.lambda.scale(c),
            kappa: self.kappa.scale(&(c * c)),
        }
    }
}

/// The scalars `α_ij = ¼ λ_1((i j), v_i − v_j)` and
/// `β_k = ½ λ_{s_k}(s_k, v_k − v_{k+1})`, indices on `β` taken mod `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBeta {
    n: usize,
    alpha: BTreeMap<(usize, usize), Scalar>,
    beta: Vec<Scalar>,
}

impl AlphaBeta {
    pub fn extract(lambda: &LambdaParam) -> Result<Self> {
        let grp = lambda.group();
        let n = grp.n();
        require_symmetric_classifiable(grp)?;
        let field = grp.field();
        let quarter = field.inverse_of_integer(4)?;
        let half = field.inverse_of_integer(2)?;
        let mut alpha = BTreeMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let t = grp.cycle_id(&[i, j])?;
                let v = difference(grp, i, j);
                let a = &quarter * &lambda.coefficient(grp.identity(), t, &v);
                alpha.insert((i, j), a);
            }
        }
        let mut beta = Vec::with_capacity(n);
        for k in 1..=n {
            let s = grp.simple_id(k)?;
            let next = if k == n { 1 } else { k + 1 };
            let v = difference(grp, k, next);
            beta.push(&half * &lambda.coefficient(s, s, &v));
        }
        Ok(Self { n, alpha, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `α_ij`, antisymmetric; `α_ii = 0`.
    pub fn alpha(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.alpha[&(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.alpha[&(j, i)],
            std::cmp::Ordering::Equal => self.beta[0].field().zero(),
        }
    }

    /// `α_ij α_jk + α_jk α_ki + α_ki α_ij`.
    pub fn alpha_triple(&self, i: usize, j: usize, k: usize) -> Scalar {
        triple(|a, b| self.alpha(a, b), i, j, k)
    }

    /// `ᵍα_ij = α_{g(i) g(j)}`.
    pub fn alpha_translated(&self, grp: &GroupTable, g: ElementId, i: usize, j: usize) -> Scalar {
        self.alpha(grp.image(g, i), grp.image(g, j))
    }

    pub fn alpha_triple_translated(
        &self,
        grp: &GroupTable,
        g: ElementId,
        i: usize,
        j: usize,
        k: usize,
    ) -> Scalar {
        self.alpha_triple(grp.image(g, i), grp.image(g, j), grp.image(g, k))
    }

    /// `β_k` with `k` read mod `n` (index 0 aliases `n`).
    pub fn beta(&self, k: usize) -> Scalar {
        self.beta[(k + self.n - 1) % self.n].clone()
    }

    pub fn betas(&self) -> &[Scalar] {
        &self.beta
    }
}

pub(crate) fn triple(f: impl Fn(usize, usize) -> Scalar, i: usize, j: usize, k: usize) -> Scalar {
    let (ij, jk, ki) = (f(i, j), f(j, k), f(k, i));
    &(&(&ij * &jk) + &(&jk * &ki)) + &(&ki * &ij)
}

/// `v_i − v_j`.
pub(crate) fn difference(grp: &GroupTable, i: usize, j: usize) -> Vec<Scalar> {
    let field = grp.field();
    let mut v = vec![field.zero(); grp.n()];
    v[i - 1] = field.one();
    v[j - 1] = -&field.one();
    v
}

pub(crate) fn require_symmetric_classifiable(grp: &GroupTable) -> Result<()> {
    if !grp.is_symmetric() {
        return Err(Error::NotSymmetricGroup);
    }
    if grp.n() <= 2 {
        return Err(Error::UnsupportedDimension {
            n: grp.n(),
            reason: "the classification tuple is defined for n > 2; use the low-dimensional families",
        });
    }
    if grp.field().is_char2() {
        return Err(Error::Char2Rejected);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Sparse random tables with no structure imposed.
    General,
    /// A random classification tuple expanded into parameters.
    MuFamily,
    /// A `MuFamily` sample with one table coefficient changed.
    PerturbedMu,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::General, Profile::MuFamily, Profile::PerturbedMu];

    pub fn name(self) -> &'static str {
        match self {
            Profile::General => "general",
            Profile::MuFamily => "mu-family",
            Profile::PerturbedMu => "perturbed-mu",
        }
    }
}

/// Uniform over `F_p`; integers in `[-5, 5]` over `Q`.
pub(crate) fn random_scalar(rng: &mut impl Rng, field: &FieldSpec) -> Scalar {
    match field.characteristic() {
        0 => field.from_i64(rng.gen_range(-5..=5)),
        p => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn random_nonzero(rng: &mut impl Rng, field: &FieldSpec) -> Scalar {
    loop {
        let x = random_scalar(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Deterministic pseudo-random parameters for `S_n` over `field`.
pub fn random_params(n: usize, field: FieldSpec, seed: u64, profile: Profile) -> Result<Deformation> {
    let grp = Arc::new(GroupTable::symmetric(n, field)?);
    random_params_in(&grp, seed, profile)
}

/// As [`random_params`], reusing an existing `S_n` table.
pub fn random_params_in(grp: &Arc<GroupTable>, seed: u64, profile: Profile) -> Result<Deformation> {
    if !grp.is_symmetric() {
        return Err(Error::NotSymmetricGroup);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = *grp.field();
    match profile {
        Profile::General => {
            let zero_lambda = rng.gen_bool(0.25);
            let zero_kappa = rng.gen_bool(0.25);
            let mut lambda = LambdaParam::zero(grp.clone());
            let mut kappa = KappaParam::zero(grp.clone());
            let density = 1.0 / grp.order() as f64;
            if !zero_lambda {
                for g in grp.ids() {
                    for i in 1..=grp.n() {
                        lambda.set(g, i, sparse_element(&mut rng, grp, density));
                    }
                }
            }
            if !zero_kappa {
                for i in 1..=grp.n() {
                    for j in i + 1..=grp.n() {
                        kappa.set(i, j, sparse_element(&mut rng, grp, density))?;
                    }
                }
            }
            Ok(Deformation { lambda, kappa })
        }
        Profile::MuFamily => random_mu_family(&mut rng, grp),
        Profile::PerturbedMu => {
            let mut d = random_mu_family(&mut rng, grp)?;
            let n = grp.n();
            let h = ElementId::nth(rng.gen_range(0..grp.order()));
            let delta = random_nonzero(&mut rng, &field);
            let flip_kappa = n >= 2 && rng.gen_bool(0.5);
            if flip_kappa {
                let i = rng.gen_range(1..n);
                let j = rng.gen_range(i + 1..=n);
                let mut x = d.kappa.get(i, j);
                x.add_term(h, &delta);
                d.kappa.set(i, j, x)?;
            } else {
                let g = ElementId::nth(rng.gen_range(0..grp.order()));
                let i = rng.gen_range(1..=n);
                let mut x = d.lambda.get(g, i).clone();
                x.add_term(h, &delta);
                d.lambda.set(g, i, x);
            }
            Ok(d)
        }
    }
}

fn sparse_element(rng: &mut impl Rng, grp: &GroupTable, density: f64) -> AlgebraElement {
    let field = grp.field();
    let mut x = AlgebraElement::zero();
    for h in grp.ids() {
        if rng.gen_bool(density) {
            x.add_term(h, &random_scalar(rng, field));
        }
    }
    x
}

fn random_mu_family(rng: &mut impl Rng, grp: &Arc<GroupTable>) -> Result<Deformation> {
    let field = *grp.field();
    let n = grp.n();
    if n <= 2 {
        let arity = if n == 1 { 0 } else { 2 };
        let params: Vec<Scalar> = (0..arity).map(|_| random_scalar(rng, &field)).collect();
        return classification::low_dim_family_in(grp, &params);
    }
    let mut mu = MuParams::zero(n, field);
    for i in 1..=n {
        for j in i + 1..=n {
            mu.set_a(i, j, random_scalar(rng, &field));
        }
    }
    for k in 1..n {
        mu.set_b(k, random_scalar(rng, &field));
    }
    mu.c = random_scalar(rng, &field);
    classification::build_h_mu_in(grp, &mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::build_h_mu;

    fn s3(p: u64) -> Arc<GroupTable> {
        Arc::new(GroupTable::symmetric(3, FieldSpec::new(p).unwrap()).unwrap())
    }

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
    fn kappa_alternates() {
        let d = cyclic_family(3, 5);
        let grp = d.group().clone();
        let v = vec![grp.field().from_i64(2), grp.field().from_i64(3), grp.field().one()];
        assert!(d.kappa.eval(&v, &v).is_zero());
        let (e1, e2) = (grp.basis_vector(1), grp.basis_vector(2));
        assert_eq!(d.kappa.eval(&e2, &e1), d.kappa.eval(&e1, &e2).neg());
        let expected = AlgebraElement::group(grp.cycle_id(&[1, 2, 3]).unwrap(), grp.field())
            .sub(&AlgebraElement::group(grp.cycle_id(&[1, 3, 2]).unwrap(), grp.field()));
        assert_eq!(d.kappa.eval(&e1, &e2), expected);
        assert!(d.kappa.basis_coefficient(grp.cycle_id(&[1, 2, 3]).unwrap(), 1, 2).is_one());
    }

    #[test]
    fn golden_rule_values() {
        let grp = s3(5);
        let field = *grp.field();
        let mut mu = MuParams::zero(3, field);
        mu.set_b(1, field.one());
        mu.set_b(2, field.one());
        let d = build_h_mu(&mu).unwrap();
        for g in grp.ids() {
            for i in 1..=3 {
                let shift = grp.image(g, i) as i64 - i as i64;
                assert_eq!(
                    *d.lambda.get(g, i),
                    AlgebraElement::term(g, field.from_i64(shift))
                );
            }
        }
        let one = AlgebraElement::group(grp.identity(), &field);
        assert!(d.lambda.eval(&one, &grp.basis_vector(2)).is_zero());
        assert!(d.lambda.eval(&AlgebraElement::zero(), &grp.basis_vector(2)).is_zero());
    }

    #[test]
    fn identity_action_and_inverse_action() {
        let d = random_params(3, FieldSpec::new(7).unwrap(), 3, Profile::General).unwrap();
        let grp = d.group().clone();
        assert_eq!(d.kappa.act(grp.identity()), d.kappa);
        assert_eq!(d.lambda.act(grp.identity()), d.lambda);
        for h in grp.ids() {
            let hi = grp.inverse(h);
            assert_eq!(d.kappa.act(h).act(hi), d.kappa);
            assert_eq!(d.lambda.act(h).act(hi), d.lambda);
        }
    }

    #[test]
    fn cyclic_kappa_is_invariant() {
        let d = cyclic_family(3, 0);
        for h in d.group().ids() {
            assert_eq!(d.kappa.act(h), d.kappa);
        }
    }

    #[test]
    fn action_composes() {
        // ʰ'(ʰκ) = ʰ'ʰκ, exhaustively on S₃.
        let d = random_params(3, FieldSpec::new(5).unwrap(), 11, Profile::General).unwrap();
        let grp = d.group().clone();
        for h in grp.ids() {
            for h2 in grp.ids() {
                let hh = grp.mul(h2, h);
                assert_eq!(d.kappa.act(h).act(h2), d.kappa.act(hh));
                assert_eq!(d.lambda.act(h).act(h2), d.lambda.act(hh));
            }
        }
    }

    #[test]
    fn alpha_beta_of_golden_rule() {
        let n = 4;
        let field = FieldSpec::new(7).unwrap();
        let mut mu = MuParams::zero(n, field);
        for k in 1..n {
            mu.set_b(k, field.one());
        }
        let ab = AlphaBeta::extract(&build_h_mu(&mu).unwrap().lambda).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                assert!(ab.alpha(i, j).is_zero());
            }
        }
        for k in 1..n {
            assert!(ab.beta(k).is_one());
        }
        assert_eq!(ab.beta(n), field.from_i64(1 - n as i64));
        assert_eq!(ab.beta(0), ab.beta(n));
    }

    #[test]
    fn alpha_beta_of_zero_and_errors() {
        let grp = s3(5);
        let ab = AlphaBeta::extract(&LambdaParam::zero(grp.clone())).unwrap();
        assert!(ab.betas().iter().all(Scalar::is_zero));
        let s2 = Arc::new(GroupTable::symmetric(2, FieldSpec::new(5).unwrap()).unwrap());
        assert!(matches!(
            AlphaBeta::extract(&LambdaParam::zero(s2)),
            Err(Error::UnsupportedDimension { .. })
        ));
        let f2 = FieldSpec::with_char2_override(2).unwrap();
        let s3f2 = Arc::new(GroupTable::symmetric(3, f2).unwrap());
        assert!(matches!(
            AlphaBeta::extract(&LambdaParam::zero(s3f2)),
            Err(Error::Char2Rejected)
        ));
    }

    #[test]
    fn random_params_deterministic() {
        let f = FieldSpec::new(5).unwrap();
        for profile in Profile::ALL {
            let a = random_params(3, f, 99, profile).unwrap();
            let b = random_params(3, f, 99, profile).unwrap();
            assert_eq!(a, b);
        }
    }
}
