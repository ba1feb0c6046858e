//! Finite groups acting linearly on `V ≅ Fⁿ`.
//!
//! Basis vectors are indexed `1..=n`. Products follow `(gh)(i) = g(h(i))`:
//! `gh` applies `h` first. Matrices act on coefficient columns, so the
//! image of `v_i` under `g` is column `i` of its matrix.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::{FieldSpec, Scalar};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// The cycle `c[0] → c[1] → … → c[0]`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        Self::from_cycles(n, &[cycle])
    }

    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} is not valid in S_{n}"
                    )));
                }
                used[a] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid cycle notation `{text}`"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let entries = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !entries.is_empty() {
                cycles.push(entries);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(n, &[i, j])
    }

    /// `s_k = (k k+1)` for `k < n`, and `s_n = (n 1)`.
    pub fn simple(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidPermutation(format!("s_{k} is not defined for n = {n}")));
        }
        Self::transposition(n, k, if k == n { 1 } else { k + 1 })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Self { images }
    }

    /// Disjoint cycles, fixed points included, each starting at its least entry.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Minimal number of transpositions in a factorization: `n` minus the
    /// number of cycles.
    pub fn reflection_length(&self) -> usize {
        self.degree() - self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

/// An invertible `n × n` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        let m = Self { n, entries };
        if linalg::rank(&m.rows()) != n {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize, field: &FieldSpec) -> Self {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry in row `r`, column `c`, both 1-based.
    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[(r - 1) * self.n + (c - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn compose(&self, other: &Matrix) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let field = self.entries[0].field();
        let mut entries = Vec::with_capacity(n * n);
        for r in 1..=n {
            for c in 1..=n {
                let mut acc = field.zero();
                for k in 1..=n {
                    acc += &(self.entry(r, k) * other.entry(k, c));
                }
                entries.push(acc);
            }
        }
        Ok(Self { n, entries })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let field = self.entries[0].field();
        let mut aug: linalg::Mat = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
                row
            })
            .collect();
        linalg::row_reduce(&mut aug);
        Self {
            n,
            entries: aug.into_iter().flat_map(|row| row[n..].to_vec()).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let field = self.entries[0].field();
        (1..=self.n)
            .map(|r| {
                let mut acc = field.zero();
                for c in 1..=self.n {
                    acc += &(self.entry(r, c) * &v[c - 1]);
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", xs.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Matrix(Matrix),
}

impl GroupElement {
    pub fn dim(&self) -> usize {
        match self {
            GroupElement::Perm(p) => p.degree(),
            GroupElement::Matrix(m) => m.dim(),
        }
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.compose(b).map(GroupElement::Perm),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                a.compose(b).map(GroupElement::Matrix)
            }
            _ => Err(Error::Parse(
                "cannot compose a permutation with a matrix".into(),
            )),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(p.inverse()),
            GroupElement::Matrix(m) => GroupElement::Matrix(m.inverse()),
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Permutation::identity(p.degree())),
            GroupElement::Matrix(m) => {
                GroupElement::Matrix(Matrix::identity(m.dim(), &m.entries[0].field()))
            }
        }
    }

    /// `ᵍv` in the basis `v_1..v_n`.
    pub fn act_on_vector(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(match self {
            GroupElement::Perm(p) => {
                let mut out = v.to_vec();
                for i in 1..=p.degree() {
                    out[p.apply(i) - 1] = v[i - 1].clone();
                }
                out
            }
            GroupElement::Matrix(m) => m.apply(v),
        })
    }

    /// Matrix of the action, `M[j][i]` being the `v_j` coefficient of `ᵍv_i`.
    pub fn action_matrix(&self, field: &FieldSpec) -> linalg::Mat {
        match self {
            GroupElement::Perm(p) => {
                let n = p.degree();
                let mut m = vec![vec![field.zero(); n]; n];
                for i in 1..=n {
                    m[p.apply(i) - 1][i - 1] = field.one();
                }
                m
            }
            GroupElement::Matrix(m) => m.rows(),
        }
    }

    /// Reflection length; only defined for permutations.
    pub fn reflection_length(&self) -> Option<usize> {
        match self {
            GroupElement::Perm(p) => Some(p.reflection_length()),
            GroupElement::Matrix(_) => None,
        }
    }

    /// `codim V^g = rank(M − I)`.
    pub fn fixed_space_codim(&self, field: &FieldSpec) -> usize {
        if let GroupElement::Perm(p) = self {
            return p.reflection_length();
        }
        linalg::rank(&self.minus_identity(field))
    }

    /// A basis of the fixed space `V^g`.
    pub fn fixed_space_basis(&self, field: &FieldSpec) -> Vec<Vec<Scalar>> {
        linalg::nullspace(&self.minus_identity(field), self.dim(), field)
    }

    fn minus_identity(&self, field: &FieldSpec) -> linalg::Mat {
        let mut m = self.action_matrix(field);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= &field.one();
        }
        m
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            GroupElement::Perm(p) => Some(p),
            GroupElement::Matrix(_) => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// Position of an element inside a [`GroupTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn nth(k: usize) -> Self {
        Self(k as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// All of `S_n` permuting coordinates.
    SymmetricPermutation,
    Permutation,
    Matrix,
}

/// A fully enumerated finite group with multiplication and inverse lookup.
///
/// Elements are sorted (one-line images lexicographically for permutations),
/// so iteration order is deterministic.
#[derive(Debug)]
pub struct GroupTable {
    n: usize,
    field: FieldSpec,
    kind: GroupKind,
    elements: Vec<GroupElement>,
    lookup: HashMap<GroupElement, ElementId>,
    products: Vec<ElementId>,
    inverses: Vec<ElementId>,
    identity: ElementId,
    basis_images: Vec<Vec<Vec<(usize, Scalar)>>>,
    codims: Vec<usize>,
    generators: Vec<GroupElement>,
}

impl GroupTable {
    /// `S_n` acting on `Fⁿ` by permuting coordinates.
    pub fn symmetric(n: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension {
                n,
                reason: "the permutation representation needs n >= 1",
            });
        }
        let mut elements = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            elements.push(GroupElement::Perm(Permutation {
                images: current.clone(),
            }));
            if !next_permutation(&mut current) {
                break;
            }
        }
        Self::build(n, field, GroupKind::SymmetricPermutation, elements, Vec::new())
    }

    /// Closure of `generators` under multiplication.
    pub fn from_generators(
        generators: &[GroupElement],
        field: FieldSpec,
        cap: usize,
    ) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Parse("at least one generator is required".into()))?;
        let n = first.dim();
        for g in generators {
            if g.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.dim(),
                });
            }
            if let GroupElement::Matrix(m) = g {
                if m.entries.iter().any(|x| x.characteristic() != field.characteristic()) {
                    return Err(Error::MixedFields(
                        field.characteristic(),
                        m.entries[0].characteristic(),
                    ));
                }
            }
        }
        let identity = first.identity_like();
        let mut seen: HashMap<GroupElement, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone(), ());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x)?;
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupCapExceeded(cap));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<GroupElement> = seen.into_keys().collect();
        let kind = match first {
            GroupElement::Perm(_) if elements.len() == factorial(n) => {
                GroupKind::SymmetricPermutation
            }
            GroupElement::Perm(_) => GroupKind::Permutation,
            GroupElement::Matrix(_) => GroupKind::Matrix,
        };
        Self::build(n, field, kind, elements, generators.to_vec())
    }

    fn build(
        n: usize,
        field: FieldSpec,
        kind: GroupKind,
        mut elements: Vec<GroupElement>,
        generators: Vec<GroupElement>,
    ) -> Result<Self> {
        elements.sort();
        let lookup: HashMap<GroupElement, ElementId> = elements
            .iter()
            .enumerate()
            .map(|(k, g)| (g.clone(), ElementId(k as u32)))
            .collect();
        let order = elements.len();
        let mut products = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let ab = a.compose(b)?;
                products.push(*lookup.get(&ab).ok_or(Error::NotInGroup)?);
            }
        }
        let inverses = elements
            .iter()
            .map(|g| lookup.get(&g.inverse()).copied().ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        let identity = lookup[&elements[0].identity_like()];
        let basis_images = elements
            .iter()
            .map(|g| {
                let m = g.action_matrix(&field);
                (0..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&j| !m[j][i].is_zero())
                            .map(|j| (j + 1, m[j][i].clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let codims = elements.iter().map(|g| g.fixed_space_codim(&field)).collect();
        Ok(Self {
            n,
            field,
            kind,
            elements,
            lookup,
            products,
            inverses,
            identity,
            basis_images,
            codims,
            generators,
        })
    }

    /// The generators this table was closed from; empty for [`GroupTable::symmetric`].
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn is_symmetric(&self) -> bool {
        self.kind == GroupKind::SymmetricPermutation
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, g: ElementId) -> &GroupElement {
        &self.elements[g.index()]
    }

    pub fn id_of(&self, g: &GroupElement) -> Option<ElementId> {
        self.lookup.get(g).copied()
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.products[a.index() * self.order() + b.index()]
    }

    pub fn inverse(&self, g: ElementId) -> ElementId {
        self.inverses[g.index()]
    }

    /// `h g h⁻¹`.
    pub fn conjugate_element(&self, h: ElementId, g: ElementId) -> ElementId {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    /// Nonzero coordinates of `ᵍv_i` as `(j, coefficient)` pairs.
    pub fn basis_image(&self, g: ElementId, i: usize) -> &[(usize, Scalar)] {
        &self.basis_images[g.index()][i - 1]
    }

    pub fn act(&self, g: ElementId, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.n];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.basis_image(g, i + 1) {
                out[j - 1] += &(m * c);
            }
        }
        out
    }

    pub fn fixed_space_codim(&self, g: ElementId) -> usize {
        self.codims[g.index()]
    }

    pub fn fixed_space_basis(&self, g: ElementId) -> Vec<Vec<Scalar>> {
        self.element(g).fixed_space_basis(&self.field)
    }

    pub fn perm(&self, g: ElementId) -> Option<&Permutation> {
        self.element(g).as_perm()
    }

    /// `g(i)` for permutation groups.
    pub fn image(&self, g: ElementId, i: usize) -> usize {
        self.perm(g).expect("permutation group").apply(i)
    }

    pub fn perm_id(&self, p: &Permutation) -> Result<ElementId> {
        self.id_of(&GroupElement::Perm(p.clone()))
            .ok_or(Error::NotInGroup)
    }

    pub fn cycle_id(&self, cycle: &[usize]) -> Result<ElementId> {
        self.perm_id(&Permutation::cycle(self.n, cycle)?)
    }

    /// `s_k`, with `s_n = (n 1)`.
    pub fn simple_id(&self, k: usize) -> Result<ElementId> {
        self.perm_id(&Permutation::simple(self.n, k)?)
    }

    /// Standard basis vector `v_i` as coefficients.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.n];
        v[i - 1] = self.field.one();
        v
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
