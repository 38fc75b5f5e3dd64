//! Simplices `P(alpha_0, ..., alpha_d)`: the convex hull of the images of the
//! standard basis in `Z^(d+1) / (sum alpha_i e_i = 0)`. The origin is always
//! an interior lattice point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::box_group::BoxGroup;
use super::snf::IntMatrix;
use crate::error::{Error, Result};
use crate::polynomials::{hstar_from_values, parse_int_list, HStarVector};

/// Default cap on `sum(alpha)` for the dilation-count oracle.
pub const DEFAULT_DILATION_BUDGET: u64 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PayneSimplex {
    alpha: Vec<u64>,
}

impl PayneSimplex {
    /// Sorts the weights into non-increasing order; rejects zeros, fewer than
    /// two weights, and a common factor.
    pub fn new(mut alpha: Vec<u64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::InvalidAlpha(format!(
                "need at least 2 weights, got {}",
                alpha.len()
            )));
        }
        if alpha.contains(&0) {
            return Err(Error::InvalidAlpha("weights must be positive".into()));
        }
        let g = alpha.iter().fold(0u64, |acc, &a| acc.gcd(&a));
        if g != 1 {
            return Err(Error::InvalidAlpha(format!("weights share the factor {g}")));
        }
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        self.alpha.len() - 1
    }

    /// Normalized volume.
    pub fn weight_sum(&self) -> u64 {
        self.alpha.iter().sum()
    }

    /// Rows `(e_i, 1)` for every vertex followed by the lattice relation
    /// `(alpha, 0)`, as a square matrix of size `d + 2`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.alpha.len();
        let mut rows: IntMatrix = (0..n)
            .map(|i| (0..=n).map(|j| BigInt::from((j == i || j == n) as u8)).collect())
            .collect();
        rows.push(
            self.alpha
                .iter()
                .map(|&a| BigInt::from(a))
                .chain([BigInt::from(0)])
                .collect(),
        );
        rows
    }
}

impl TryFrom<Vec<u64>> for PayneSimplex {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PayneSimplex> for Vec<u64> {
    fn from(p: PayneSimplex) -> Self {
        p.alpha
    }
}

impl fmt::Display for PayneSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(|a| a.to_string()).collect();
        write!(f, "P({})", parts.join(","))
    }
}

impl FromStr for PayneSimplex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s)?;
        if v.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidAlpha("weights must be positive".into()));
        }
        Self::new(v.into_iter().map(|x| x as u64).collect())
    }
}

/// Closed formula: each vertex `i` and each `0 <= j < alpha_i` contributes
/// `t^e` with `e = ceil(sum_{k != i} {j alpha_k / alpha_i}) + #{k > i : alpha_i | j alpha_k}`.
pub fn payne_hstar(p: &PayneSimplex) -> HStarVector {
    let a = p.alpha();
    let d = p.dim();
    let mut coeffs = vec![0i64; d + 1];
    for (i, &ai) in a.iter().enumerate() {
        for j in 0..ai {
            let frac_sum: u64 = a
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &ak)| (j * ak) % ai)
                .sum();
            let integral = a[i + 1..].iter().filter(|&&ak| (j * ak) % ai == 0).count();
            let e = frac_sum.div_ceil(ai) as usize + integral;
            coeffs[e] += 1;
        }
    }
    HStarVector::new(coeffs).expect("the j = 0 term of the first vertex gives h*_0 = 1")
}

pub fn box_group(p: &PayneSimplex) -> BoxGroup {
    BoxGroup::from_relations(&p.relation_matrix(), p.alpha.len())
        .expect("relation matrix of a valid weight vector is non-singular")
}

/// Counts lattice points of `mP` for `m = 0..=d` and inverts the Ehrhart
/// series. A point of `mP` lifts uniquely to `z + (k/S) alpha` with `z`
/// integral, `0 <= k < S = sum(alpha)`, `sum z = m - k` and
/// `z_i >= -floor(k alpha_i / S)`.
pub fn dilation_count_hstar(p: &PayneSimplex, budget: u64) -> Result<HStarVector> {
    let s = p.weight_sum();
    if s > budget {
        return Err(Error::BudgetExceeded(format!(
            "sum(alpha) = {s} exceeds budget {budget}"
        )));
    }
    let d = p.dim();
    let parts = d + 1;

    // shifts[k] = -sum_i lb_i = sum_i floor(k alpha_i / S)
    let shifts: Vec<i64> = (0..s)
        .map(|k| p.alpha().iter().map(|&ai| ((k * ai) / s) as i64).sum())
        .collect();
    let max_target = d as i64 + shifts.iter().copied().max().unwrap_or(0);

    // compositions[t] = number of non-negative integer vectors of length
    // `parts` summing to t, by the usual one-part-at-a-time recurrence
    let mut comps = vec![BigInt::from(0); max_target.max(0) as usize + 1];
    comps[0] = BigInt::from(1);
    for _ in 0..parts {
        for t in 1..comps.len() {
            let prev = comps[t - 1].clone();
            comps[t] += prev;
        }
    }

    let values: Vec<BigInt> = (0..=d as i64)
        .map(|m| {
            (0..s as i64)
                .map(|k| m - k + shifts[k as usize])
                .filter(|&t| t >= 0)
                .map(|t| comps[t as usize].clone())
                .sum()
        })
        .collect();
    let h = hstar_from_values(d, &values)?;
    let coeffs = h
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::Unsupported("coefficient overflow".into())))
        .collect::<Result<Vec<_>>>()?;
    HStarVector::new(coeffs)
}

/// All valid weight vectors with `d + 1` entries and `sum <= max_sum`, in
/// lexicographic order of the non-increasing tuples.
pub fn enumerate_alphas(d: usize, max_sum: u64) -> Vec<PayneSimplex> {
    fn rec(len: usize, cap: u64, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = (len - cur.len() - 1) as u64;
        let hi = cap.min(budget.saturating_sub(remaining));
        for a in 1..=hi {
            cur.push(a);
            rec(len, a, budget - a, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(d + 1, max_sum, max_sum, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.into_iter().filter_map(|a| PayneSimplex::new(a).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::box_group::parallelepiped_hstar;

    fn p(a: &[u64]) -> PayneSimplex {
        PayneSimplex::new(a.to_vec()).unwrap()
    }

    #[test]
    fn closed_formula_examples() {
        assert_eq!(payne_hstar(&p(&[2, 1])).coeffs(), &[1, 2]);
        assert_eq!(payne_hstar(&p(&[1, 1, 1, 1, 1])).coeffs(), &[1, 1, 1, 1, 1]);
        assert_eq!(payne_hstar(&p(&[8, 2, 2, 2, 2, 2, 1])).coeffs(), &[1, 2, 4, 3, 3, 4, 2]);
        assert_eq!(payne_hstar(&p(&[3, 1, 1, 1, 1, 1])).coeffs(), &[1, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn normalization_and_validation() {
        assert_eq!(p(&[1, 2, 2]).alpha(), &[2, 2, 1]);
        assert!(PayneSimplex::new(vec![2, 4]).is_err());
        assert!(PayneSimplex::new(vec![3]).is_err());
        assert!(PayneSimplex::new(vec![1, 0]).is_err());
        assert!("2,-1".parse::<PayneSimplex>().is_err());
        assert_eq!(p(&[2, 2, 1]).to_string(), "P(2,2,1)");
    }

    #[test]
    fn box_group_orders() {
        assert_eq!(box_group(&p(&[2, 1])).order(), 3);
        assert_eq!(box_group(&p(&[2, 2, 1])).order(), 5);
        assert_eq!(parallelepiped_hstar(&box_group(&p(&[2, 1]))).coeffs(), &[1, 2]);
        assert_eq!(parallelepiped_hstar(&box_group(&p(&[2, 2, 1]))).coeffs(), &[1, 2, 2]);
        let g = box_group(&p(&[2, 1]));
        let ages: Vec<u64> = g.elements().iter().map(|e| e.age).collect();
        assert_eq!(ages.iter().filter(|&&a| a == 1).count(), 2);
    }

    #[test]
    fn dilation_oracle() {
        assert_eq!(dilation_count_hstar(&p(&[2, 1]), 200).unwrap().coeffs(), &[1, 2]);
        assert_eq!(dilation_count_hstar(&p(&[1, 1, 1]), 200).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(
            dilation_count_hstar(&p(&[2, 2, 2, 1]), 200).unwrap().coeffs(),
            &[1, 2, 2, 2]
        );
        assert!(matches!(
            dilation_count_hstar(&p(&[150, 100, 1]), 200),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn alpha_enumeration() {
        let all = enumerate_alphas(1, 4);
        let v: Vec<Vec<u64>> = all.iter().map(|a| a.alpha().to_vec()).collect();
        assert_eq!(v, vec![vec![1, 1], vec![2, 1], vec![3, 1]]);
    }
}
