//! Linear inequalities over the symbols `a_i`, `b_i` (and, for Hibi's
//! inequalities, `h*_i`), their conversion to h*-coordinates and rendering.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomials::{AbDecomposition, HStarVector};
use crate::rational::{coeff_prefix, fmt_q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    A(i64),
    B(i64),
    H(i64),
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::A(i) => write!(f, "a_{i}"),
            Sym::B(i) => write!(f, "b_{i}"),
            Sym::H(i) => write!(f, "h*_{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SuperA,
    CorA,
    Variant1,
    Variant2,
    Variant3,
    Dos1,
    Dos2,
    Dos3,
    Refinement,
    Baseline,
    Hibi,
    Conjecture,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::SuperA => "superA",
            Family::CorA => "corA",
            Family::Variant1 => "variant1",
            Family::Variant2 => "variant2",
            Family::Variant3 => "variant3",
            Family::Dos1 => "dos1",
            Family::Dos2 => "dos2",
            Family::Dos3 => "dos3",
            Family::Refinement => "refinement",
            Family::Baseline => "baseline",
            Family::Hibi => "hibi",
            Family::Conjecture => "conjecture",
        }
    }

    /// Families proved only for polytopes with an interior lattice point.
    pub fn needs_interior(&self) -> bool {
        !matches!(self, Family::SuperA | Family::CorA | Family::Baseline)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_prime: Option<i64>,
}

impl Params {
    pub fn rr(r: i64, r_prime: i64) -> Self {
        Self {
            alpha: None,
            r: Some(r),
            r_prime: Some(r_prime),
        }
    }

    pub fn arr(alpha: i64, r: i64, r_prime: i64) -> Self {
        Self {
            alpha: Some(alpha),
            r: Some(r),
            r_prime: Some(r_prime),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [self.alpha, self.r, self.r_prime]
            .iter()
            .flatten()
            .map(|x| x.to_string())
            .collect();
        if parts.is_empty() {
            Ok(())
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

/// One side of an inequality: a sparse map with no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Terms(pub BTreeMap<Sym, Q>);

impl Terms {
    pub fn add(&mut self, s: Sym, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(s).or_insert_with(|| qi(0));
        *e += c;
        if e.is_zero() {
            self.0.remove(&s);
        }
    }

    pub fn add_range(&mut self, sym: impl Fn(i64) -> Sym, lo: i64, hi: i64) {
        for i in lo..=hi {
            self.add(sym(i), qi(1));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Sym, &Q)> {
        self.0.iter()
    }
}

fn render_side<'a>(terms: impl Iterator<Item = (&'a Sym, &'a Q)>) -> String {
    let parts: Vec<String> = terms.map(|(s, c)| format!("{}{}", coeff_prefix(c), s)).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `lhs <= rhs`, stored exactly as the generating statement prints it
/// (indices are not reduced by symmetry).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormAB {
    pub family: Family,
    pub params: Params,
    /// The point(s) of `Q(r, r')` the form was built from, in the order
    /// `lambda`, `mu`, `lambda'` as the family uses them.
    pub vertices: Vec<Vec<Q>>,
    /// Smallest dimension for which the generating statement applies.
    pub d_min: i64,
    /// Largest such dimension, if bounded (only the dimension-7 conjectures).
    pub d_max: Option<i64>,
    pub lhs: Terms,
    pub rhs: Terms,
}

impl LinearFormAB {
    pub fn new(family: Family, params: Params, vertices: Vec<Vec<Q>>, d_min: i64, lhs: Terms, rhs: Terms) -> Self {
        Self {
            family,
            params,
            vertices,
            d_min,
            d_max: None,
            lhs,
            rhs,
        }
    }

    pub fn is_conjecture(&self) -> bool {
        self.family == Family::Conjecture
    }

    pub fn applies_at(&self, d: i64) -> bool {
        d >= self.d_min && self.d_max.is_none_or(|m| d <= m)
    }

    /// `rhs - lhs`, as a map without zero entries.
    pub fn net(&self) -> Terms {
        let mut t = self.rhs.clone();
        for (s, c) in self.lhs.iter() {
            t.add(*s, -c.clone());
        }
        t
    }

    /// Net coefficients after the symmetries `a_i = a_{d-i}` and
    /// `b_i = b_{s-1-i}` move every index to the lower half.
    pub fn clamped(&self, d: i64, s: i64) -> Result<Terms> {
        let mut t = Terms::default();
        for (sym, c) in self.net().iter() {
            t.add(clamp(*sym, d, s)?, c.clone());
        }
        Ok(t)
    }

    /// The clamped form rendered with negative terms on the left.
    pub fn render_clamped(&self, d: i64, s: i64) -> Result<String> {
        let t = self.clamped(d, s)?;
        Ok(render_split(&t))
    }

    pub fn label(&self) -> String {
        let mut out = format!("{}{}", self.family, self.params);
        if !self.vertices.is_empty() {
            let vs: Vec<String> = self.vertices.iter().map(|v| super::qpoly::fmt_vertex(v)).collect();
            out.push(' ');
            out.push_str(&vs.join(" "));
        }
        out
    }

    /// Exact value of `rhs - lhs` on a decomposed h*-vector.
    pub fn evaluate(&self, h: &HStarVector, ab: &AbDecomposition) -> Result<Q> {
        let mut v = qi(0);
        for (sym, c) in self.net().iter() {
            v += c * qi(symbol_value(*sym, h, ab)?);
        }
        Ok(v)
    }
}

impl fmt::Display for LinearFormAB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <= {}",
            render_side(self.lhs.iter()),
            render_side(self.rhs.iter())
        )
    }
}

fn render_split(t: &Terms) -> String {
    let neg: Vec<(&Sym, Q)> = t
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(s, c)| (s, -c.clone()))
        .collect();
    let pos: Vec<(&Sym, &Q)> = t.iter().filter(|(_, c)| c.is_positive()).collect();
    format!(
        "{} <= {}",
        render_side(neg.iter().map(|(s, c)| (*s, c))),
        render_side(pos.into_iter())
    )
}

fn out_of_range(sym: Sym, d: i64, s: i64) -> Error {
    Error::IndexOutOfRange(format!("{sym} with d = {d}, s = {s}"))
}

fn clamp(sym: Sym, d: i64, s: i64) -> Result<Sym> {
    match sym {
        Sym::A(i) if 0 <= i && i <= d => Ok(Sym::A(i.min(d - i))),
        Sym::B(i) if 0 <= i && i < s => Ok(Sym::B(i.min(s - 1 - i))),
        Sym::H(i) if 0 <= i && i <= d => Ok(sym),
        _ => Err(out_of_range(sym, d, s)),
    }
}

fn symbol_value(sym: Sym, h: &HStarVector, ab: &AbDecomposition) -> Result<i64> {
    let (d, s) = (ab.d as i64, ab.s as i64);
    let idx = |i: i64, len: usize| (0 <= i && (i as usize) < len).then_some(i as usize);
    match sym {
        Sym::A(i) => idx(i, ab.a.len()).map(|i| ab.a[i]),
        Sym::B(i) => idx(i, ab.b.len()).map(|i| ab.b[i]),
        Sym::H(i) => idx(i, h.coeffs().len()).map(|i| h.coeffs()[i]),
    }
    .ok_or_else(|| out_of_range(sym, d, s))
}

/// `sum coeffs[i] h*_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFormH {
    pub d: usize,
    pub s: usize,
    pub coeffs: Vec<Q>,
}

impl LinearFormH {
    pub fn zero(d: usize, s: usize) -> Self {
        Self {
            d,
            s,
            coeffs: vec![qi(0); d + 1],
        }
    }

    /// `rhs - lhs` from two lists of `(index, coefficient)`.
    pub fn from_sides(d: usize, s: usize, lhs: &[(usize, i64)], rhs: &[(usize, i64)]) -> Self {
        let mut f = Self::zero(d, s);
        for &(i, c) in lhs {
            f.coeffs[i] -= qi(c);
        }
        for &(i, c) in rhs {
            f.coeffs[i] += qi(c);
        }
        f
    }

    pub fn is_balanced(&self) -> bool {
        self.coeffs.iter().sum::<Q>().is_zero()
    }

    pub fn is_strictly_balanced(&self) -> bool {
        self.coeffs[1..].iter().sum::<Q>().is_zero()
    }

    pub fn evaluate(&self, h: &HStarVector) -> Q {
        self.coeffs.iter().zip(h.coeffs()).map(|(c, &x)| c * qi(x)).sum()
    }

    pub fn scaled(&self, k: &Q) -> Self {
        Self {
            d: self.d,
            s: self.s,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for LinearFormH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = Terms::default();
        for (i, c) in self.coeffs.iter().enumerate() {
            t.add(Sym::H(i as i64), c.clone());
        }
        f.write_str(&render_split(&t))
    }
}

impl Serialize for LinearFormH {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(fmt_q).collect();
        coeffs.serialize(s)
    }
}

/// h*-coefficients of `a_i` (for `0 <= i <= d`).
fn a_in_h(i: usize, d: usize) -> impl Iterator<Item = (usize, i64)> {
    (0..=i)
        .map(|k| (k, 1))
        .chain((d + 1 - i..=d).filter(move |_| i > 0).map(|k| (k, -1)))
}

/// h*-coefficients of `b_i` (for `0 <= i < s`).
fn b_in_h(i: usize, s: usize) -> impl Iterator<Item = (usize, i64)> {
    (s - i..=s).map(|k| (k, 1)).chain((0..=i).map(|k| (k, -1)))
}

/// Substitutes the defining expressions of `a_i` and `b_i` in terms of
/// h*-coefficients. Indices must lie in `0..=d` (a, h*) and `0..s` (b).
pub fn ab_to_h_form(f: &LinearFormAB, d: usize, s: usize) -> Result<LinearFormH> {
    terms_to_h(&f.net(), d, s)
}

pub fn terms_to_h(t: &Terms, d: usize, s: usize) -> Result<LinearFormH> {
    let mut out = LinearFormH::zero(d, s);
    for (sym, c) in t.iter() {
        let sym = clamp(*sym, d as i64, s as i64)?;
        let expansion: Vec<(usize, i64)> = match sym {
            Sym::A(i) => a_in_h(i as usize, d).collect(),
            Sym::B(i) => b_in_h(i as usize, s).collect(),
            Sym::H(i) => vec![(i as usize, 1)],
        };
        for (k, sign) in expansion {
            out.coeffs[k] += c * qi(sign);
        }
    }
    Ok(out)
}
