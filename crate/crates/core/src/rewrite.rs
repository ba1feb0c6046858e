//! A rewriting system for `H_{λ,κ}` whose irreducible words are the PBW
//! monomials `v_1^{e_1} ⋯ v_n^{e_n} g`, and a diamond-lemma confluence test.
//!
//! Rules, applied to adjacent tokens:
//! - R1: `g h → (gh)`
//! - R2: `g v_i → Σ_j M_ji v_j g + λ(g, v_i)`
//! - R3: `v_j v_i → v_i v_j − κ(v_i, v_j)` for `j > i`
//!
//! The identity of `G` is the empty word, so it never appears as a token.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_algebra::AlgebraElement;
use crate::groups::{ElementId, GroupElement, GroupTable, Matrix, Permutation};
use crate::parameters::Deformation;
use crate::scalars::Scalar;

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    /// Basis vector `v_i`, 1-based.
    V(usize),
    /// A non-identity group element.
    G(ElementId),
}

pub type Word = Vec<Token>;

/// A finite linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NcSum {
    terms: BTreeMap<Word, Scalar>,
}

impl NcSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(w, &c);
        s
    }

    /// `Σ x_g g` as a sum of single-token words.
    pub fn from_algebra(x: &AlgebraElement, grp: &GroupTable) -> Self {
        let mut s = Self::zero();
        for (g, c) in x.terms() {
            s.add_term(group_word(grp, g), c);
        }
        s
    }

    pub fn vector(i: usize, grp: &GroupTable) -> Self {
        Self::word(vec![Token::V(i)], grp.field().one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &NcSum) -> NcSum {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NcSum) -> NcSum {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NcSum {
        let mut out = NcSum::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(c * x));
        }
        out
    }

    /// Concatenation product. Adjacent group tokens are left for R1.
    pub fn mul(&self, other: &NcSum) -> NcSum {
        let mut out = NcSum::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(x * y));
            }
        }
        out
    }
}

fn group_word(grp: &GroupTable, g: ElementId) -> Word {
    if g == grp.identity() {
        Vec::new()
    } else {
        vec![Token::G(g)]
    }
}

/// `v_1^{e_1} ⋯ v_n^{e_n} g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMonomial {
    pub exponents: Vec<u32>,
    pub g: ElementId,
}

impl NormalMonomial {
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn to_word(&self, grp: &GroupTable) -> Word {
        let mut w = Word::new();
        for (i, e) in self.exponents.iter().enumerate() {
            w.extend(std::iter::repeat_n(Token::V(i + 1), *e as usize));
        }
        w.extend(group_word(grp, self.g));
        w
    }
}

/// A fully reduced element: coefficients on PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalForm {
    pub terms: BTreeMap<NormalMonomial, Scalar>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_sum(&self, grp: &GroupTable) -> NcSum {
        let mut s = NcSum::zero();
        for (m, c) in &self.terms {
            s.add_term(m.to_word(grp), c);
        }
        s
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let x = out.terms.entry(m.clone()).or_insert_with(|| c.field().zero());
            *x -= c;
            if x.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    /// Highest degree first, e.g. `v1·v2 + 4·g[2,3,1] + g[3,1,2]`.
    pub fn display(&self, grp: &GroupTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| b.exponents.cmp(&a.exponents))
                .then_with(|| a.g.cmp(&b.g))
        });
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, false) => {}
                (0, true) => out.push_str("- "),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, e) in m.exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("v{}", i + 1)),
                    _ => factors.push(format!("v{}^{e}", i + 1)),
                }
            }
            if m.g != grp.identity() {
                factors.push(token_name(grp, m.g));
            }
            let body = factors.join("·");
            match (mag.is_one(), body.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&body),
                (false, true) => write!(out, "{mag}").unwrap(),
                (false, false) => write!(out, "{mag}·{body}").unwrap(),
            }
        }
        out
    }
}

/// Word-syntax name of a group element: `g[2,1,3]` or `M[[1,1],[0,1]]`.
pub fn token_name(grp: &GroupTable, g: ElementId) -> String {
    match grp.element(g) {
        GroupElement::Perm(p) => {
            let imgs: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
            format!("g[{}]", imgs.join(","))
        }
        GroupElement::Matrix(m) => format!("M{m}"),
    }
}

pub fn word_display(grp: &GroupTable, w: &[Token]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = w
        .iter()
        .map(|t| match t {
            Token::V(i) => format!("v{i}"),
            Token::G(g) => token_name(grp, *g),
        })
        .collect();
    parts.join(" ")
}

/// Which redex to contract first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Ranking that every rule application strictly decreases, compared
/// lexicographically: v-degree, then pairs (group token, later v-token), then
/// inversions among v-indices, then the number of group tokens.
pub fn rank(w: &[Token]) -> (usize, usize, usize, usize) {
    let mut degree = 0;
    let mut groups = 0;
    let mut group_before_v = 0;
    let mut inversions = 0;
    let mut seen_v: Vec<usize> = Vec::new();
    for t in w {
        match t {
            Token::V(i) => {
                degree += 1;
                group_before_v += groups;
                inversions += seen_v.iter().filter(|&&j| j > *i).count();
                seen_v.push(*i);
            }
            Token::G(_) => groups += 1,
        }
    }
    (degree, group_before_v, inversions, groups)
}

/// An overlap whose two reductions disagree.
#[derive(Clone, Debug)]
pub struct OverlapWitness {
    /// The ambiguous word, with the identity shown as an empty word for the
    /// unit overlap.
    pub word: Word,
    pub family: &'static str,
    pub left: NormalForm,
    pub right: NormalForm,
}

impl OverlapWitness {
    pub fn difference(&self) -> NormalForm {
        self.left.sub(&self.right)
    }

    pub fn describe(&self, grp: &GroupTable) -> String {
        let word = if self.family == "unit" {
            format!("1 {}", word_display(grp, &self.word))
        } else {
            word_display(grp, &self.word)
        };
        format!(
            "overlap ({word}) does not resolve: difference {}",
            self.difference().display(grp)
        )
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub overlaps_checked: usize,
    pub witness: Option<OverlapWitness>,
    pub elapsed_ms: f64,
}

impl ConfluenceReport {
    pub fn to_json(&self, grp: &GroupTable) -> serde_json::Value {
        serde_json::json!({
            "pbw": self.confluent,
            "overlaps_checked": self.overlaps_checked,
            "witness": self.witness.as_ref().map(|w| serde_json::json!({
                "family": w.family,
                "word": word_display(grp, &w.word),
                "left": w.left.display(grp),
                "right": w.right.display(grp),
            })),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Overlap {
    /// `1 · v_i`: the unit against R2.
    Unit(usize),
    /// `g h v_i`: R1 against R2.
    GroupGroupVector(ElementId, ElementId, usize),
    /// `g v_j v_i`, `j > i`: R2 against R3.
    GroupVectorVector(ElementId, usize, usize),
    /// `v_k v_j v_i`, `k > j > i`: R3 against R3.
    Vectors(usize, usize, usize),
}

/// `H_{λ,κ}` presented by R1–R3.
pub struct RewriteSystem {
    d: Deformation,
    budget: u64,
    confluence: OnceLock<ConfluenceReport>,
}

impl RewriteSystem {
    pub fn new(d: Deformation) -> Self {
        Self::with_budget(d, DEFAULT_STEP_BUDGET)
    }

    pub fn with_budget(d: Deformation, budget: u64) -> Self {
        Self {
            d,
            budget,
            confluence: OnceLock::new(),
        }
    }

    pub fn deformation(&self) -> &Deformation {
        &self.d
    }

    pub fn group(&self) -> &GroupTable {
        self.d.group()
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn redex(&self, w: &[Token], strategy: Strategy) -> Option<usize> {
        let reducible = |p: usize| match (w[p], w[p + 1]) {
            (Token::G(_), _) => true,
            (Token::V(j), Token::V(i)) => j > i,
            (Token::V(_), Token::G(_)) => false,
        };
        let n = w.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find(|&p| reducible(p)),
            Strategy::Rightmost => (0..n).rev().find(|&p| reducible(p)),
        }
    }

    /// Contracts the pair at `p`, `p + 1` into `out` with factor `c`.
    fn apply(&self, w: &[Token], p: usize, c: &Scalar, out: &mut Vec<(Word, Scalar)>) {
        let grp = self.group();
        let splice = |mid: &[Token]| {
            let mut x = Vec::with_capacity(w.len() + 1);
            x.extend_from_slice(&w[..p]);
            x.extend_from_slice(mid);
            x.extend_from_slice(&w[p + 2..]);
            x
        };
        let push_algebra = |x: &AlgebraElement, sign: &Scalar, out: &mut Vec<(Word, Scalar)>| {
            for (h, a) in x.terms() {
                out.push((splice(&group_word(grp, h)), &(sign * a) * c));
            }
        };
        match (w[p], w[p + 1]) {
            (Token::G(a), Token::G(b)) => {
                out.push((splice(&group_word(grp, grp.mul(a, b))), c.clone()));
            }
            (Token::G(g), Token::V(i)) => {
                for (j, m) in grp.basis_image(g, i) {
                    out.push((splice(&[Token::V(*j), Token::G(g)]), m * c));
                }
                push_algebra(self.d.lambda.get(g, i), &grp.field().one(), out);
            }
            (Token::V(j), Token::V(i)) => {
                out.push((splice(&[Token::V(i), Token::V(j)]), c.clone()));
                push_algebra(&self.d.kappa.get(i, j), &-grp.field().one(), out);
            }
            (Token::V(_), Token::G(_)) => unreachable!("not a redex"),
        }
    }

    /// One rewriting step at the redex chosen by `strategy`; `None` if `w` is
    /// irreducible.
    pub fn step(&self, w: &[Token], strategy: Strategy) -> Option<NcSum> {
        let p = self.redex(w, strategy)?;
        let mut out = Vec::new();
        self.apply(w, p, &self.group().field().one(), &mut out);
        let mut s = NcSum::zero();
        for (w, c) in out {
            s.add_term(w, &c);
        }
        Some(s)
    }

    fn to_monomial(&self, w: &[Token]) -> NormalMonomial {
        let grp = self.group();
        let mut exponents = vec![0u32; grp.n()];
        let mut g = grp.identity();
        for t in w {
            match t {
                Token::V(i) => exponents[i - 1] += 1,
                Token::G(h) => g = *h,
            }
        }
        NormalMonomial { exponents, g }
    }

    pub fn normal_form(&self, x: &NcSum) -> Result<NormalForm> {
        self.normal_form_with(x, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, x: &NcSum, strategy: Strategy) -> Result<NormalForm> {
        let mut pending: BTreeMap<Word, Scalar> = x.terms.clone();
        let mut out: BTreeMap<NormalMonomial, Scalar> = BTreeMap::new();
        let mut steps = 0u64;
        let mut produced = Vec::new();
        while let Some((w, c)) = pending.pop_first() {
            let Some(p) = self.redex(&w, strategy) else {
                let m = self.to_monomial(&w);
                let entry = out.entry(m.clone()).or_insert_with(|| c.field().zero());
                *entry += &c;
                if entry.is_zero() {
                    out.remove(&m);
                }
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(Error::StepBudgetExceeded(self.budget));
            }
            produced.clear();
            self.apply(&w, p, &c, &mut produced);
            for (v, a) in produced.drain(..) {
                if a.is_zero() {
                    continue;
                }
                match pending.get_mut(&v) {
                    Some(x) => {
                        *x += &a;
                        if x.is_zero() {
                            pending.remove(&v);
                        }
                    }
                    None => {
                        pending.insert(v, a);
                    }
                }
            }
        }
        Ok(NormalForm { terms: out })
    }

    fn overlaps(&self) -> Vec<Overlap> {
        let grp = self.group();
        let n = grp.n();
        let one = grp.identity();
        let non_identity = || grp.ids().filter(move |&g| g != one);
        let mut out: Vec<Overlap> = (1..=n).map(Overlap::Unit).collect();
        for g in non_identity() {
            for h in non_identity() {
                out.extend((1..=n).map(|i| Overlap::GroupGroupVector(g, h, i)));
            }
        }
        for g in non_identity() {
            for i in 1..=n {
                out.extend((i + 1..=n).map(|j| Overlap::GroupVectorVector(g, j, i)));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                out.extend((j + 1..=n).map(|k| Overlap::Vectors(k, j, i)));
            }
        }
        out
    }

    fn resolve(&self, o: Overlap) -> Result<Option<OverlapWitness>> {
        let grp = self.group();
        let one = grp.field().one();
        let reduce_at = |w: &Word, p: usize| -> Result<NormalForm> {
            let mut out = Vec::new();
            self.apply(w, p, &one, &mut out);
            let mut s = NcSum::zero();
            for (v, c) in out {
                s.add_term(v, &c);
            }
            self.normal_form(&s)
        };
        let (word, family, left, right) = match o {
            Overlap::Unit(i) => {
                let w = vec![Token::V(i)];
                let direct = self.normal_form(&NcSum::vector(i, grp))?;
                // R2 with g = 1 would give v_i + λ(1, v_i).
                let via_r2 = NcSum::vector(i, grp)
                    .add(&NcSum::from_algebra(self.d.lambda.get(grp.identity(), i), grp));
                (w, "unit", direct, self.normal_form(&via_r2)?)
            }
            Overlap::GroupGroupVector(g, h, i) => {
                let w = vec![Token::G(g), Token::G(h), Token::V(i)];
                (w.clone(), "group-group-vector", reduce_at(&w, 0)?, reduce_at(&w, 1)?)
            }
            Overlap::GroupVectorVector(g, j, i) => {
                let w = vec![Token::G(g), Token::V(j), Token::V(i)];
                (w.clone(), "group-vector-vector", reduce_at(&w, 0)?, reduce_at(&w, 1)?)
            }
            Overlap::Vectors(k, j, i) => {
                let w = vec![Token::V(k), Token::V(j), Token::V(i)];
                (w.clone(), "vector-vector-vector", reduce_at(&w, 0)?, reduce_at(&w, 1)?)
            }
        };
        Ok((left != right).then_some(OverlapWitness {
            word,
            family,
            left,
            right,
        }))
    }

    /// Resolves every overlap ambiguity. Overlaps of three group tokens are
    /// skipped: both sides reduce to the same product by associativity of `G`.
    pub fn check_confluence(&self) -> Result<ConfluenceReport> {
        if let Some(r) = self.confluence.get() {
            return Ok(r.clone());
        }
        let start = Instant::now();
        let overlaps = self.overlaps();
        let found = overlaps
            .par_iter()
            .map(|&o| self.resolve(o))
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        let witness = match found {
            None => None,
            Some(Ok(w)) => w,
            Some(Err(e)) => return Err(e),
        };
        let report = ConfluenceReport {
            confluent: witness.is_none(),
            overlaps_checked: overlaps.len(),
            witness,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        };
        Ok(self.confluence.get_or_init(|| report).clone())
    }

    /// Number of PBW monomials of degree at most `m`:
    /// `|G| · Σ_{k≤m} C(n + k − 1, k)`.
    pub fn filtered_dimension(&self, m: usize) -> Result<u128> {
        if !self.check_confluence()?.confluent {
            return Err(Error::NotConfluent);
        }
        let grp = self.group();
        let n = grp.n() as u128;
        let mut total = 1u128;
        let mut binom = 1u128;
        for k in 1..=m as u128 {
            binom = binom * (n + k - 1) / k;
            total += binom;
        }
        Ok(grp.order() as u128 * total)
    }

    /// Parses the word syntax against this system's group.
    pub fn parse(&self, text: &str) -> Result<NcSum> {
        parse_sum(self.group(), text)
    }
}

fn split_tokens(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced `]`".into()));
                }
                cur.push(ch);
            }
            c if depth == 0 && (c.is_whitespace() || c == '·' || c == '*') => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if depth > 0 && c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced `[`".into()));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_list(text: &str) -> Result<Vec<String>> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, found `{text}`")))?;
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            c => cur.push(c),
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur);
    }
    Ok(out.into_iter().map(|s| s.trim().to_string()).collect())
}

fn parse_group_token(grp: &GroupTable, tok: &str) -> Result<Word> {
    let element = if let Some(rest) = tok.strip_prefix('g') {
        let images = parse_list(rest)?
            .iter()
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{s}` in `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        GroupElement::Perm(Permutation::from_images(images)?)
    } else if let Some(rest) = tok.strip_prefix('M') {
        let rows = parse_list(rest)?
            .iter()
            .map(|r| parse_list(r)?.iter().map(|x| grp.field().parse(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GroupElement::Matrix(Matrix::from_rows(rows)?)
    } else {
        return Err(Error::Parse(format!("unknown token `{tok}`")));
    };
    if element.dim() != grp.n() {
        return Err(Error::DimensionMismatch {
            expected: grp.n(),
            found: element.dim(),
        });
    }
    let id = grp.id_of(&element).ok_or(Error::NotInGroup)?;
    Ok(group_word(grp, id))
}

fn parse_vector_token(grp: &GroupTable, tok: &str) -> Result<Word> {
    let body = &tok[1..];
    let (idx, exp) = match body.split_once('^') {
        Some((i, e)) => (i, e),
        None => (body, "1"),
    };
    let bad = || Error::Parse(format!("bad vector token `{tok}`"));
    let i: usize = idx.parse().map_err(|_| bad())?;
    let e: usize = exp.parse().map_err(|_| bad())?;
    if i == 0 || i > grp.n() {
        return Err(Error::Parse(format!("`{tok}` is outside v1..v{}", grp.n())));
    }
    Ok(vec![Token::V(i); e])
}

/// Parses sums such as `2 v1 v2 - g[2,1,3] v1`, `v2·g[2,1,3] + g[2,1,3]` or
/// `M[[1,1],[0,1]] v2`. A leading scalar token scales its term; `1` alone is
/// the unit.
pub fn parse_sum(grp: &GroupTable, text: &str) -> Result<NcSum> {
    let field = grp.field();
    let mut out = NcSum::zero();
    let mut sign = field.one();
    let mut coeff: Option<Scalar> = None;
    let mut word = Word::new();
    let mut any = false;
    let mut flush = |sign: &Scalar, coeff: &mut Option<Scalar>, word: &mut Word, any: &mut bool| {
        if *any {
            let c = coeff.take().unwrap_or_else(|| field.one());
            out.add_term(std::mem::take(word), &(sign * &c));
        }
        *any = false;
    };
    for tok in split_tokens(text)? {
        match tok.as_str() {
            "+" | "-" => {
                flush(&sign, &mut coeff, &mut word, &mut any);
                sign = if tok == "-" { -field.one() } else { field.one() };
            }
            t if t.starts_with('v') => {
                word.extend(parse_vector_token(grp, t)?);
                any = true;
            }
            t if t.starts_with('g') || t.starts_with('M') => {
                word.extend(parse_group_token(grp, t)?);
                any = true;
            }
            t => {
                let c = field.parse(t)?;
                if any {
                    return Err(Error::Parse(format!("scalar `{t}` must precede the word")));
                }
                coeff = Some(match coeff.take() {
                    Some(x) => &x * &c,
                    None => c,
                });
                any = true;
            }
        }
    }
    flush(&sign, &mut coeff, &mut word, &mut any);
    Ok(out)
}
