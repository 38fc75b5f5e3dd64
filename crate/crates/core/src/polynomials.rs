//! h*-vectors, Ehrhart series conversions and the symmetric a/b decomposition
//! `(1 + t + ... + t^(l-1)) h*(t) = a(t) + t^l b(t)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficients `(h*_0, ..., h*_d)` of an h*-polynomial. Trailing zeros are
/// kept so the length is always `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HStarVector {
    coeffs: Vec<i64>,
}

impl HStarVector {
    /// Accepts any vector with `h*_0 = 1`, non-negative entries and `d >= 1`.
    /// Realizability is not checked.
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidVector(format!(
                "need at least 2 coefficients (d >= 1), got {}",
                coeffs.len()
            )));
        }
        if coeffs[0] != 1 {
            return Err(Error::InvalidVector(format!("h*_0 must be 1, got {}", coeffs[0])));
        }
        if let Some((i, c)) = coeffs.iter().enumerate().find(|(_, c)| **c < 0) {
            return Err(Error::InvalidVector(format!("h*_{i} = {c} is negative")));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Degree `s` of the polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    /// Codegree `l = d + 1 - s`.
    pub fn codegree(&self) -> usize {
        self.dim() + 1 - self.degree()
    }

    /// `h*_d > 0`, i.e. the polytope has an interior lattice point.
    pub fn has_interior_point(&self) -> bool {
        self.coeffs[self.dim()] > 0
    }

    pub fn is_palindromic(&self) -> bool {
        let d = self.dim();
        (0..=d).all(|i| self.coeffs[i] == self.coeffs[d - i])
    }

    /// Sum of coefficients (the normalized volume).
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.coeffs))
    }
}

impl FromStr for HStarVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HStarVector::new(parse_int_list(s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct HStarRepr {
    d: usize,
    coeffs: Vec<i64>,
}

impl Serialize for HStarVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HStarRepr {
            d: self.dim(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HStarVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HStarRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.d + 1 {
            return Err(serde::de::Error::custom(format!(
                "d = {} but {} coefficients",
                repr.d,
                repr.coeffs.len()
            )));
        }
        HStarVector::new(repr.coeffs).map_err(serde::de::Error::custom)
    }
}

/// Parses `"1,2,3"` (whitespace tolerated).
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {:?}", t.trim())))
        })
        .collect()
}

pub(crate) fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Palindromic pair `(a, b)` with `a` of length `d + 1` and `b` of length `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbDecomposition {
    pub d: usize,
    pub s: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl AbDecomposition {
    pub fn codegree(&self) -> usize {
        self.d + 1 - self.s
    }

    fn check_invariants(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InconsistentDecomposition(m));
        if self.s > self.d {
            return bad(format!("degree {} exceeds dimension {}", self.s, self.d));
        }
        if self.a.len() != self.d + 1 {
            return bad(format!("a has length {}, expected {}", self.a.len(), self.d + 1));
        }
        if self.b.len() != self.s {
            return bad(format!("b has length {}, expected {}", self.b.len(), self.s));
        }
        if self.a[0] != 1 {
            return bad(format!("a_0 = {}", self.a[0]));
        }
        if !is_palindrome(&self.a) {
            return bad("a is not palindromic".into());
        }
        if !is_palindrome(&self.b) {
            return bad("b is not palindromic".into());
        }
        Ok(())
    }
}

fn is_palindrome(xs: &[i64]) -> bool {
    xs.iter().eq(xs.iter().rev())
}

pub fn degree_codegree(h: &HStarVector) -> (usize, usize) {
    (h.degree(), h.codegree())
}

/// The unique decomposition with `a_j = h_0 + ... + h_j - (h_{d-j+1} + ... + h_d)`
/// and `b_i = -(h_0 + ... + h_i) + (h_{s-i} + ... + h_s)`.
pub fn decompose(h: &HStarVector) -> AbDecomposition {
    let d = h.dim();
    let s = h.degree();
    let c = h.coeffs();
    let mut prefix = vec![0i64; d + 2];
    for i in 0..=d {
        prefix[i + 1] = prefix[i] + c[i];
    }
    // sum of c[lo..=hi]
    let range = |lo: usize, hi: usize| prefix[hi + 1] - prefix[lo];
    let a = (0..=d)
        .map(|j| {
            let tail = if j == 0 { 0 } else { range(d + 1 - j, d) };
            range(0, j) - tail
        })
        .collect();
    let b = (0..s).map(|i| range(s - i, s) - range(0, i)).collect();
    AbDecomposition { d, s, a, b }
}

/// Inverse of [`decompose`]: divides `a(t) + t^l b(t)` by `1 + ... + t^(l-1)`.
pub fn recompose(ab: &AbDecomposition) -> Result<HStarVector> {
    ab.check_invariants()?;
    let d = ab.d;
    let l = ab.codegree();
    let mut num = ab.a.clone();
    for (i, bi) in ab.b.iter().enumerate() {
        num[l + i] += bi;
    }
    // Division by (1 + t + ... + t^(l-1)) == multiplication by (1 - t) then
    // division by (1 - t^l): h_k = sum_{j >= 0} c_{k - j l}, c = (1 - t) num.
    let mut diff = vec![0i64; d + 2];
    for k in 0..=d + 1 {
        diff[k] = num.get(k).copied().unwrap_or(0) - if k > 0 { num[k - 1] } else { 0 };
    }
    let mut h = vec![0i64; d + 2];
    for k in 0..=d + 1 {
        h[k] = diff[k] + if k >= l { h[k - l] } else { 0 };
    }
    if h[d + 1] != 0 {
        return Err(Error::InconsistentDecomposition(
            "a(t) + t^l b(t) is not divisible by 1 + t + ... + t^(l-1)".into(),
        ));
    }
    h.truncate(d + 1);
    let hv = HStarVector::new(h).map_err(|e| Error::InconsistentDecomposition(e.to_string()))?;
    if hv.degree() != ab.s {
        return Err(Error::InconsistentDecomposition(format!(
            "quotient has degree {} but s = {}",
            hv.degree(),
            ab.s
        )));
    }
    if decompose(&hv) != *ab {
        return Err(Error::InconsistentDecomposition(
            "quotient does not decompose back".into(),
        ));
    }
    Ok(hv)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `f_P(m) = sum_i h*_i C(m + d - i, d)` for `m = 0..=m_max`.
pub fn ehrhart_values(h: &HStarVector, m_max: usize) -> Vec<BigInt> {
    let d = h.dim() as i64;
    (0..=m_max as i64)
        .map(|m| {
            h.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| BigInt::from(c) * binomial(m + d - i as i64, d))
                .sum()
        })
        .collect()
}

/// Recovers the first `d + 1` numerator coefficients of
/// `sum_m f(m) t^m = h*(t) / (1 - t)^(d+1)` from `f(0..=d)`.
pub fn hstar_from_values(d: usize, values: &[BigInt]) -> Result<Vec<BigInt>> {
    if values.len() < d + 1 {
        return Err(Error::Precondition(format!(
            "need {} Ehrhart values, got {}",
            d + 1,
            values.len()
        )));
    }
    let n = d as i64 + 1;
    Ok((0..=d)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    sign * binomial(n, j as i64) * &values[k - j]
                })
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[i64]) -> HStarVector {
        HStarVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(HStarVector::new(vec![1]).is_err());
        assert!(HStarVector::new(vec![2, 1]).is_err());
        assert!(HStarVector::new(vec![1, -1, 2]).is_err());
        assert!("1,2,x".parse::<HStarVector>().is_err());
        assert_eq!("1, 2,3".parse::<HStarVector>().unwrap(), h(&[1, 2, 3]));
    }

    #[test]
    fn degree_and_codegree() {
        assert_eq!(degree_codegree(&h(&[1, 2, 3, 2, 2, 2])), (5, 1));
        assert_eq!(degree_codegree(&h(&[1, 2, 2, 1, 2, 2, 1, 0])), (6, 2));
        assert_eq!(degree_codegree(&h(&[1, 0, 0])), (0, 3));
        assert!(h(&[1, 2, 3, 2, 2, 2]).has_interior_point());
        assert!(!h(&[1, 0, 0]).has_interior_point());
    }

    #[test]
    fn decompositions_from_examples() {
        let ab = decompose(&h(&[1, 2, 3, 2, 2, 2]));
        assert_eq!(ab.a, vec![1, 1, 2, 2, 1, 1]);
        assert_eq!(ab.b, vec![1, 1, 0, 1, 1]);

        let ab = decompose(&h(&[1, 2, 2, 1, 2, 2, 1, 0]));
        assert_eq!(ab.a, vec![1, 3, 4, 3, 3, 4, 3, 1]);
        assert_eq!(ab.b, vec![0; 6]);

        let ab = decompose(&h(&[1; 7]));
        assert_eq!(ab.a, vec![1; 7]);
        assert!(ab.b.iter().all(|&x| x == 0));

        let ab = decompose(&h(&[1, 1, 2, 1, 1, 2, 1]));
        assert_eq!(ab.a, vec![1; 7]);
        assert_eq!(ab.b, vec![0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn recompose_examples() {
        let ab = AbDecomposition {
            d: 5,
            s: 5,
            a: vec![1, 1, 2, 2, 1, 1],
            b: vec![1, 1, 0, 1, 1],
        };
        assert_eq!(recompose(&ab).unwrap(), h(&[1, 2, 3, 2, 2, 2]));

        let ab = AbDecomposition {
            d: 1,
            s: 0,
            a: vec![1, 1],
            b: vec![],
        };
        assert_eq!(recompose(&ab).unwrap(), h(&[1, 0]));

        let ab = AbDecomposition {
            d: 7,
            s: 6,
            a: vec![1, 3, 4, 3, 3, 4, 3, 1],
            b: vec![0; 6],
        };
        assert_eq!(recompose(&ab).unwrap(), h(&[1, 2, 2, 1, 2, 2, 1, 0]));
    }

    #[test]
    fn recompose_rejects_inconsistent_input() {
        // not divisible by 1 + t
        let ab = AbDecomposition {
            d: 2,
            s: 1,
            a: vec![1, 1, 1],
            b: vec![0],
        };
        assert!(matches!(recompose(&ab), Err(Error::InconsistentDecomposition(_))));
        // a not palindromic
        let ab = AbDecomposition {
            d: 2,
            s: 2,
            a: vec![1, 2, 3],
            b: vec![0, 0],
        };
        assert!(recompose(&ab).is_err());
        // wrong b length
        let ab = AbDecomposition {
            d: 2,
            s: 2,
            a: vec![1, 1, 1],
            b: vec![0],
        };
        assert!(recompose(&ab).is_err());
    }

    #[test]
    fn ehrhart_values_examples() {
        let v = ehrhart_values(&h(&[1, 2]), 3);
        assert_eq!(v, [1, 4, 7, 10].map(BigInt::from).to_vec());
        let v = ehrhart_values(&h(&[1, 0, 0, 0]), 2);
        assert_eq!(v, [1, 4, 10].map(BigInt::from).to_vec());
        // reflexive triangle conv(e1, e2, -e1-e2): 2P has 10 lattice points
        let v = ehrhart_values(&h(&[1, 1, 1]), 2);
        assert_eq!(v, [1, 4, 10].map(BigInt::from).to_vec());
    }

    #[test]
    fn json_form() {
        let v = h(&[1, 2, 3, 2, 2, 2]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"d":5,"coeffs":[1,2,3,2,2,2]}"#);
        assert_eq!(serde_json::from_str::<HStarVector>(&s).unwrap(), v);
        assert!(serde_json::from_str::<HStarVector>(r#"{"d":4,"coeffs":[1,2]}"#).is_err());
    }
}
