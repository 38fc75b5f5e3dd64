//! Exact Farkas implication between homogeneous linear inequalities in
//! h*-coordinates: `T >= 0` follows from `G_1 >= 0, ..., G_k >= 0` on all of
//! space iff `T = sum y_k G_k` with `y >= 0`. The certificate is found by a
//! phase-one simplex over the rationals with Bland's rule.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{qi, Q};

use super::forms::LinearFormH;

/// Multipliers `y` with `target = sum y_k given_k`, or `None` when no
/// nonnegative combination exists.
pub fn implied_by(target: &LinearFormH, given: &[LinearFormH]) -> Result<Option<Vec<Q>>> {
    let m = target.coeffs.len();
    if let Some(g) = given.iter().find(|g| g.coeffs.len() != m) {
        return Err(Error::Precondition(format!(
            "forms live in different dimensions ({} vs {})",
            g.coeffs.len(),
            m
        )));
    }
    let cols: Vec<&[Q]> = given.iter().map(|g| g.coeffs.as_slice()).collect();
    let y = match nonnegative_solution(&cols, &target.coeffs) {
        Some(y) => y,
        None => return Ok(None),
    };
    let mut check = vec![qi(0); m];
    for (yk, g) in y.iter().zip(given) {
        for (c, gi) in check.iter_mut().zip(&g.coeffs) {
            *c += yk * gi;
        }
    }
    if check != target.coeffs || y.iter().any(Signed::is_negative) {
        return Err(Error::Unsupported("simplex returned an invalid certificate".into()));
    }
    Ok(Some(y))
}

pub fn is_implied(target: &LinearFormH, given: &[LinearFormH]) -> Result<bool> {
    Ok(implied_by(target, given)?.is_some())
}

/// Every form of `a` follows from `b` and vice versa.
pub fn equivalent(a: &[LinearFormH], b: &[LinearFormH]) -> Result<bool> {
    for t in a {
        if !is_implied(t, b)? {
            return Ok(false);
        }
    }
    for t in b {
        if !is_implied(t, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves `sum_k y_k cols[k] = rhs`, `y >= 0`.
fn nonnegative_solution(cols: &[&[Q]], rhs: &[Q]) -> Option<Vec<Q>> {
    let m = rhs.len();
    let n = cols.len();
    // Tableau rows: n structural columns, m artificials, then the rhs.
    let width = n + m + 1;
    let mut rows: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row = vec![qi(0); width];
            for (k, c) in cols.iter().enumerate() {
                row[k] = c[i].clone();
            }
            row[n + i] = qi(1);
            row[width - 1] = rhs[i].clone();
            if rhs[i].is_negative() {
                for x in row.iter_mut().take(n) {
                    *x = -x.clone();
                }
                row[width - 1] = -row[width - 1].clone();
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![qi(0); width];
    for row in &rows {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (p, _) = leave?;
        pivot(&mut rows, &mut cost, p, enter);
        basis[p] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut y = vec![qi(0); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            y[b] = rows[i][width - 1].clone();
        }
    }
    Some(y)
}

fn pivot(rows: &mut [Vec<Q>], cost: &mut [Q], p: usize, col: usize) {
    let piv = rows[p][col].clone();
    for x in rows[p].iter_mut() {
        *x /= &piv;
    }
    let prow = rows[p].clone();
    let eliminate = |row: &mut Vec<Q>| {
        let f = row[col].clone();
        if f.is_zero() {
            return;
        }
        for (x, px) in row.iter_mut().zip(&prow) {
            if !px.is_zero() {
                *x -= &f * px;
            }
        }
    };
    for (i, row) in rows.iter_mut().enumerate() {
        if i != p {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}
