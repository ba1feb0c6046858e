//! Elements of the group algebra `FG`.

use std::collections::BTreeMap;

use crate::groups::{ElementId, GroupTable};
use crate::scalars::{FieldSpec, Scalar};

/// A finitely supported map `G → F`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<ElementId, Scalar>,
}

pub(crate) static ZERO: AlgebraElement = AlgebraElement {
    terms: BTreeMap::new(),
};

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `g`.
    pub fn group(g: ElementId, field: &FieldSpec) -> Self {
        Self::term(g, field.one())
    }

    pub fn term(g: ElementId, c: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term(g, &c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ElementId, Scalar)>) -> Self {
        let mut x = Self::zero();
        for (g, c) in terms {
            x.add_term(g, &c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &Scalar)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn support(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, g: ElementId) -> Option<&Scalar> {
        self.terms.get(&g)
    }

    /// `x_g`, zero when absent.
    pub fn coefficient(&self, g: ElementId, field: &FieldSpec) -> Scalar {
        self.coeff(g).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add_term(&mut self, g: ElementId, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (g, c) in &other.terms {
            self.add_term(*g, c);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &AlgebraElement) {
        if c.is_zero() {
            return;
        }
        for (g, x) in &other.terms {
            self.add_term(*g, &(c * x));
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, &-c);
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(g, x)| (*g, c * x)).collect(),
        }
    }

    /// Convolution `Σ x_g y_h (gh)`.
    pub fn mul(&self, other: &AlgebraElement, group: &GroupTable) -> AlgebraElement {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(group.mul(*g, *h), &(a * b));
            }
        }
        out
    }

    /// `g · self`.
    pub fn left_mul(&self, g: ElementId, group: &GroupTable) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(h, c)| (group.mul(g, *h), c.clone())).collect(),
        }
    }

    /// `self · g`.
    pub fn right_mul(&self, g: ElementId, group: &GroupTable) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(h, c)| (group.mul(*h, g), c.clone())).collect(),
        }
    }

    /// `Σ x_g (h g h⁻¹)`.
    pub fn conjugate(&self, h: ElementId, group: &GroupTable) -> AlgebraElement {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (group.conjugate_element(h, *g), c.clone()))
                .collect(),
        }
    }

    /// Human readable form such as `2·(1 2) + (1 2 3)`.
    pub fn display(&self, group: &GroupTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| {
                let name = if *g == group.identity() {
                    "1".to_string()
                } else {
                    group.element(*g).to_string()
                };
                if c.is_one() {
                    name
                } else {
                    format!("{c}·{name}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}
