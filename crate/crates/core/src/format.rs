//! JSON interchange: parameter files, group specs and μ files.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`); integers are accepted on
//! read. Permutations are arrays of images, matrices arrays of rows.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classification::MuParams;
use crate::error::{Error, Result};
use crate::group_algebra::AlgebraElement;
use crate::groups::{ElementId, GroupElement, GroupKind, GroupTable, Matrix, Permutation, DEFAULT_GROUP_CAP};
use crate::parameters::{Deformation, KappaParam, LambdaParam};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Text(String),
    Int(i64),
}

impl ScalarJson {
    pub fn parse(&self, field: &FieldSpec) -> Result<Scalar> {
        match self {
            ScalarJson::Text(s) => field.parse(s),
            ScalarJson::Int(k) => Ok(field.from_i64(*k)),
        }
    }
}

impl From<&Scalar> for ScalarJson {
    fn from(s: &Scalar) -> Self {
        ScalarJson::Text(s.to_string())
    }
}

/// A group element: images of a permutation, or matrix rows (a flat
/// row-major list of `n²` entries is also read).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Perm(Vec<usize>),
    Rows(Vec<Vec<ScalarJson>>),
    Flat(Vec<ScalarJson>),
}

impl ElementJson {
    pub fn from_element(g: &GroupElement) -> Self {
        match g {
            GroupElement::Perm(p) => ElementJson::Perm(p.images().to_vec()),
            GroupElement::Matrix(m) => ElementJson::Rows(
                m.rows()
                    .iter()
                    .map(|r| r.iter().map(ScalarJson::from).collect())
                    .collect(),
            ),
        }
    }

    pub fn to_element(&self, field: &FieldSpec) -> Result<GroupElement> {
        let scalars = |row: &[ScalarJson]| row.iter().map(|x| x.parse(field)).collect::<Result<Vec<_>>>();
        match self {
            ElementJson::Perm(images) => Ok(GroupElement::Perm(Permutation::from_images(images.clone())?)),
            ElementJson::Rows(rows) => {
                let rows = rows.iter().map(|r| scalars(r)).collect::<Result<Vec<_>>>()?;
                Ok(GroupElement::Matrix(Matrix::from_rows(rows)?))
            }
            ElementJson::Flat(entries) => {
                let n = (entries.len() as f64).sqrt().round() as usize;
                if n * n != entries.len() {
                    return Err(Error::Parse(format!(
                        "flat matrix with {} entries is not square",
                        entries.len()
                    )));
                }
                Ok(GroupElement::Matrix(Matrix::new(n, scalars(entries)?)?))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupSpec {
    SymmetricPermutation { n: usize },
    Permutation { generators: Vec<ElementJson> },
    Matrix { generators: Vec<ElementJson> },
}

impl GroupSpec {
    pub fn of(grp: &GroupTable) -> Self {
        let gens = || grp.generators().iter().map(ElementJson::from_element).collect();
        match grp.kind() {
            GroupKind::SymmetricPermutation => GroupSpec::SymmetricPermutation { n: grp.n() },
            GroupKind::Permutation => GroupSpec::Permutation { generators: gens() },
            GroupKind::Matrix => GroupSpec::Matrix { generators: gens() },
        }
    }

    pub fn build(&self, n: usize, field: FieldSpec) -> Result<GroupTable> {
        let table = match self {
            GroupSpec::SymmetricPermutation { n: m } => {
                if *m != n {
                    return Err(Error::DimensionMismatch { expected: n, found: *m });
                }
                GroupTable::symmetric(n, field)?
            }
            GroupSpec::Permutation { generators } | GroupSpec::Matrix { generators } => {
                let gens = generators
                    .iter()
                    .map(|g| g.to_element(&field))
                    .collect::<Result<Vec<_>>>()?;
                let is_matrix = matches!(self, GroupSpec::Matrix { .. });
                if gens.iter().any(|g| matches!(g, GroupElement::Matrix(_)) != is_matrix) {
                    return Err(Error::Parse("generator kind does not match group type".into()));
                }
                GroupTable::from_generators(&gens, field, DEFAULT_GROUP_CAP)?
            }
        };
        if table.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: table.n(),
            });
        }
        Ok(table)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub g: ElementJson,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaEntry {
    pub g: ElementJson,
    pub i: usize,
    pub value: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KappaEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<TermJson>,
}

/// The on-disk parameter file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamFile {
    pub characteristic: u64,
    pub n: usize,
    pub group: GroupSpec,
    #[serde(default)]
    pub lambda: Vec<LambdaEntry>,
    #[serde(default)]
    pub kappa: Vec<KappaEntry>,
}

pub fn algebra_to_json(x: &AlgebraElement, grp: &GroupTable) -> Vec<TermJson> {
    x.terms()
        .map(|(g, c)| TermJson {
            g: ElementJson::from_element(grp.element(g)),
            coeff: c.into(),
        })
        .collect()
}

pub fn algebra_from_json(terms: &[TermJson], grp: &GroupTable) -> Result<AlgebraElement> {
    let mut x = AlgebraElement::zero();
    for t in terms {
        let g = element_id(&t.g, grp)?;
        x.add_term(g, &t.coeff.parse(grp.field())?);
    }
    Ok(x)
}

fn element_id(g: &ElementJson, grp: &GroupTable) -> Result<ElementId> {
    let e = g.to_element(grp.field())?;
    if e.dim() != grp.n() {
        return Err(Error::DimensionMismatch {
            expected: grp.n(),
            found: e.dim(),
        });
    }
    grp.id_of(&e).ok_or(Error::NotInGroup)
}

impl ParamFile {
    /// Full tables: every `(g, i)` for λ and every `i < j` for κ, zero or not.
    pub fn from_deformation(d: &Deformation) -> Self {
        let grp = d.group();
        let mut lambda = Vec::new();
        for g in grp.ids() {
            for i in 1..=grp.n() {
                lambda.push(LambdaEntry {
                    g: ElementJson::from_element(grp.element(g)),
                    i,
                    value: algebra_to_json(d.lambda.get(g, i), grp),
                });
            }
        }
        let mut kappa = Vec::new();
        for i in 1..=grp.n() {
            for j in i + 1..=grp.n() {
                kappa.push(KappaEntry {
                    i,
                    j,
                    value: algebra_to_json(&d.kappa.get(i, j), grp),
                });
            }
        }
        ParamFile {
            characteristic: grp.field().characteristic(),
            n: grp.n(),
            group: GroupSpec::of(grp),
            lambda,
            kappa,
        }
    }

    /// Characteristic 2 is admitted here; the checker applies its own gate.
    pub fn to_deformation(&self) -> Result<Deformation> {
        let field = FieldSpec::with_char2_override(self.characteristic)?;
        let grp = Arc::new(self.group.build(self.n, field)?);
        let n = grp.n();
        let mut lambda = LambdaParam::zero(grp.clone());
        let mut seen = std::collections::HashSet::new();
        for e in &self.lambda {
            if e.i == 0 || e.i > n {
                return Err(Error::Parse(format!("lambda index {} out of range 1..={n}", e.i)));
            }
            let g = element_id(&e.g, &grp)?;
            if !seen.insert((g, e.i)) {
                return Err(Error::Parse(format!(
                    "duplicate lambda entry for g = {}, i = {}",
                    grp.element(g),
                    e.i
                )));
            }
            lambda.set(g, e.i, algebra_from_json(&e.value, &grp)?);
        }
        let mut kappa = KappaParam::zero(grp.clone());
        let mut seen = std::collections::HashSet::new();
        for e in &self.kappa {
            if !(1 <= e.i && e.i < e.j && e.j <= n) {
                return Err(Error::Parse(format!(
                    "kappa entry ({}, {}) must satisfy 1 <= i < j <= {n}",
                    e.i, e.j
                )));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(Error::Parse(format!("duplicate kappa entry ({}, {})", e.i, e.j)));
            }
            kappa.set(e.i, e.j, algebra_from_json(&e.value, &grp)?)?;
        }
        Deformation::new(lambda, kappa)
    }
}

pub fn parse_deformation(text: &str) -> Result<Deformation> {
    let file: ParamFile = serde_json::from_str(text)?;
    file.to_deformation()
}

pub fn load_deformation(path: impl AsRef<Path>) -> Result<Deformation> {
    parse_deformation(&std::fs::read_to_string(path)?)
}

/// Canonical pretty JSON with a trailing newline.
pub fn deformation_to_string(d: &Deformation) -> String {
    to_pretty(&ParamFile::from_deformation(d))
}

pub fn save_deformation(d: &Deformation, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, deformation_to_string(d))?;
    Ok(())
}

/// Indented JSON that keeps any array or object fitting in `INLINE_WIDTH`
/// columns on one line.
pub(crate) fn to_pretty<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = String::new();
    write_value(&v, 0, &mut s);
    s.push('\n');
    s
}

const INLINE_WIDTH: usize = 80;

fn inline_value(v: &serde_json::Value) -> String {
    use serde_json::Value;
    match v {
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(inline_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, x)| format!("{}: {}", serde_json::to_string(k).expect("serializable"), inline_value(x)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => serde_json::to_string(other).expect("serializable"),
    }
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let inline = inline_value(v);
    if !matches!(v, Value::Array(_) | Value::Object(_)) || 2 * indent + inline.len() <= INLINE_WIDTH {
        out.push_str(&inline);
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(key).expect("serializable"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
        }
        _ => unreachable!(),
    }
    out.push_str(&"  ".repeat(indent));
    out.push(if matches!(v, Value::Array(_)) { ']' } else { '}' });
}

/// μ file: `a` keyed by `"i,j"` with `i < j` (missing entries are zero),
/// `b` holding `b_1..b_{n−1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuFile {
    pub characteristic: u64,
    pub n: usize,
    #[serde(default)]
    pub a: BTreeMap<String, ScalarJson>,
    #[serde(default)]
    pub b: Vec<ScalarJson>,
    pub c: ScalarJson,
}

impl MuFile {
    pub fn from_mu(mu: &MuParams) -> Self {
        MuFile {
            characteristic: mu.field().characteristic(),
            n: mu.n(),
            a: mu
                .a_entries()
                .map(|((i, j), x)| (format!("{i},{j}"), x.into()))
                .collect(),
            b: mu.free_b().iter().map(ScalarJson::from).collect(),
            c: (&mu.c).into(),
        }
    }

    pub fn to_mu(&self) -> Result<MuParams> {
        let field = FieldSpec::with_char2_override(self.characteristic)?;
        let n = self.n;
        let mut mu = MuParams::zero(n, field);
        for (key, x) in &self.a {
            let bad = || Error::Parse(format!("invalid a key `{key}`, expected \"i,j\" with i < j"));
            let (i, j) = key.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            if !(1 <= i && i < j && j <= n) {
                return Err(bad());
            }
            mu.set_a(i, j, x.parse(&field)?);
        }
        if self.b.len() != n.saturating_sub(1) {
            return Err(Error::FamilyArity {
                expected: n.saturating_sub(1),
                found: self.b.len(),
            });
        }
        for (k, x) in self.b.iter().enumerate() {
            mu.set_b(k + 1, x.parse(&field)?);
        }
        mu.c = self.c.parse(&field)?;
        Ok(mu)
    }
}

pub fn parse_mu(text: &str) -> Result<MuParams> {
    let file: MuFile = serde_json::from_str(text)?;
    file.to_mu()
}

pub fn mu_to_string(mu: &MuParams) -> String {
    to_pretty(&MuFile::from_mu(mu))
}
