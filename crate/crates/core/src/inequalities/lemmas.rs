//! The two combinatorial lemmas behind the superA argument: a criterion for
//! weighted sums over symmetric unimodal sequences, and the interval-sum
//! bounds satisfied by every point of `Q(r, r')`.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{qi, Q};

use super::qpoly::q_polyhedron;

/// `mu_i + ... + mu_{r-i} >= beta (r - 2i + 1)` for `0 <= i <= r/2`,
/// where `r + 1 = mu.len()`. Equivalent to `sum mu_i h_i >= beta sum h_i`
/// for every symmetric unimodal non-negative integer sequence `h`.
pub fn coke_condition(mu: &[Q], beta: &Q) -> Result<bool> {
    if mu.iter().any(Signed::is_negative) || beta.is_negative() {
        return Err(Error::Precondition("coke_condition needs non-negative inputs".into()));
    }
    if mu.is_empty() {
        return Ok(true);
    }
    let r = mu.len() - 1;
    Ok((0..=r / 2).all(|i| {
        let s: Q = mu[i..=r - i].iter().sum();
        s >= beta * qi((r - 2 * i + 1) as i64)
    }))
}

/// One violated bound `lambda_{p+i} + ... + lambda_{q-i} >= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalFailure {
    pub p: i64,
    pub q: i64,
    pub i: i64,
    #[serde(with = "crate::rational::serde_q")]
    pub bound: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaydenReport {
    /// Numbers (0 for non-negativity, then 1 to 4) of the hypotheses that fail.
    pub failed_hypotheses: Vec<u8>,
    pub failed_conclusions: Vec<IntervalFailure>,
}

impl HaydenReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.failed_hypotheses.is_empty()
    }

    pub fn conclusions_hold(&self) -> bool {
        self.failed_conclusions.is_empty()
    }
}

/// Evaluates hypotheses and both conclusion families independently.
pub fn hayden_report(lambda: &[Q], r: i64, r_prime: i64) -> Result<HaydenReport> {
    if !(0 <= r && r <= r_prime) {
        return Err(Error::Precondition(format!("need 0 <= r <= r', got ({r},{r_prime})")));
    }
    let poly = q_polyhedron(r, r_prime)?;
    if lambda.len() != poly.n {
        return Err(Error::Precondition(format!(
            "lambda has length {}, expected {}",
            lambda.len(),
            poly.n
        )));
    }
    let mut failed_hypotheses: Vec<u8> = poly
        .constraints
        .iter()
        .filter(|c| !c.satisfied_by(lambda))
        .map(|c| c.condition)
        .collect();
    failed_hypotheses.dedup();

    let interval = |lo: i64, hi: i64| -> Q {
        if lo > hi {
            qi(0)
        } else {
            lambda[lo as usize..=hi as usize].iter().sum()
        }
    };
    let mut failed_conclusions = Vec::new();
    for p in 0..=r {
        for q in p..=r + r_prime - p {
            for i in 0..=(q - p) / 2 {
                let bound = if q <= 2 * r - p {
                    qi(q - p - 2 * i + 1)
                } else {
                    let w = r - p + 1;
                    qi(w) - Q::new((2 * i * w).into(), (q - p + 1).into())
                };
                if interval(p + i, q - i) < bound {
                    failed_conclusions.push(IntervalFailure { p, q, i, bound });
                }
            }
        }
    }
    Ok(HaydenReport {
        failed_hypotheses,
        failed_conclusions,
    })
}

/// True when both conclusion families hold; a hypothesis failure is an
/// error rather than a `false`.
pub fn hayden_check(lambda: &[Q], r: i64, r_prime: i64) -> Result<bool> {
    let rep = hayden_report(lambda, r, r_prime)?;
    if !rep.hypotheses_hold() {
        return Err(Error::Precondition(format!(
            "hypotheses {:?} fail",
            rep.failed_hypotheses
        )));
    }
    Ok(rep.conclusions_hold())
}
