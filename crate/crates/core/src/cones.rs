//! Cones of h*-vectors in x-coordinates `x_i = h*_i - 1`: the cone `C'(d)`
//! cut out by the refinement inequalities, the dimension-6 cone `C''(6)`,
//! the reflexive section, and realization of rays by simplices `P(alpha)`.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{payne_hstar, PayneSimplex};
use crate::polynomials::HStarVector;
use crate::rational::{qi, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayCone {
    pub d: usize,
    pub rays: Vec<Vec<i64>>,
}

/// `(h*_1 - 1, ..., h*_d - 1)`; needs `h*_d > 0`.
pub fn x_vector(h: &HStarVector) -> Result<Vec<i64>> {
    let c = h.coeffs();
    if c.len() < 2 || c[c.len() - 1] == 0 {
        return Err(Error::Precondition("x-coordinates need h*_d > 0".into()));
    }
    Ok(c[1..].iter().map(|x| x - 1).collect())
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

/// Rays of `C'(d)`: `e_{i+1} + e_{d-i-1}` for `1 <= i <= d/2 - 1`,
/// `e_{i+1} + e_{d-i}` for `1 <= i <= (d-1)/2`, `e_1 + ... + e_{d-1}` and
/// `e_1 + ... + e_d`, each made primitive.
pub fn cprime_rays(d: usize) -> Result<RayCone> {
    if d < 1 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    // 1-based basis vectors
    let e = |i: usize| -> Vec<i64> { (1..=d).map(|j| (j == i) as i64).collect() };
    let add = |a: Vec<i64>, b: Vec<i64>| -> Vec<i64> { a.iter().zip(&b).map(|(x, y)| x + y).collect() };
    let mut rays = Vec::new();
    for i in 1..=(d / 2).saturating_sub(1) {
        rays.push(add(e(i + 1), e(d - i - 1)));
    }
    for i in 1..=(d - 1) / 2 {
        rays.push(add(e(i + 1), e(d - i)));
    }
    rays.push((1..=d).map(|j| (j < d) as i64).collect());
    rays.push(vec![1; d]);
    let mut out: Vec<Vec<i64>> = Vec::new();
    for r in rays.into_iter().filter(|r| r.iter().any(|&x| x != 0)).map(primitive) {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort();
    Ok(RayCone { d, rays: out })
}

/// The facets of `C'(d)` as integer rows `f` with `f . x >= 0`:
/// `0 <= x_d <= x_1` and
/// `x_1 + ... + x_i <= x_{d-1} + ... + x_{d-i} <= x_2 + ... + x_{i+1}`.
pub fn cprime_facets(d: usize) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    let mut row = |plus: &[usize], minus: &[usize]| {
        let mut f = vec![0i64; d];
        for &i in plus {
            f[i - 1] += 1;
        }
        for &i in minus {
            f[i - 1] -= 1;
        }
        rows.push(f);
    };
    row(&[d], &[]);
    row(&[1], &[d]);
    for i in 1..=(d - 1) / 2 {
        let low: Vec<usize> = (1..=i).collect();
        let mid: Vec<usize> = (d - i..=d - 1).collect();
        let high: Vec<usize> = (2..=i + 1).collect();
        row(&mid, &low);
        row(&high, &mid);
    }
    rows
}

pub fn cdoubleprime6_rays() -> RayCone {
    let rays = [
        [0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 1, 1, 0, 1, 0],
        [1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 2, 1, 1, 2, 0],
    ];
    RayCone {
        d: 6,
        rays: rays.iter().map(|r| r.to_vec()).collect(),
    }
}

/// The inequalities of the dimension-6 theorem as rows `f . x >= 0`. They
/// are strictly balanced, so they read the same in h*- and x-coordinates.
pub fn six_inequalities() -> Vec<Vec<i64>> {
    let row = |plus: &[usize], minus: &[usize]| {
        let mut f = vec![0i64; 6];
        plus.iter().for_each(|&i| f[i - 1] += 1);
        minus.iter().for_each(|&i| f[i - 1] -= 1);
        f
    };
    vec![
        row(&[1], &[6]),
        row(&[5], &[1]),
        row(&[2], &[5]),
        row(&[4, 5], &[1, 2]),
        row(&[2, 3], &[4, 5]),
        row(&[3, 4], &[1, 2]),
    ]
}

pub fn satisfies(rows: &[Vec<i64>], x: &[i64]) -> bool {
    rows.iter()
        .all(|f| f.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() >= 0)
}

/// `x_d = 0` and `x_i = x_{d-i}`: the hyperplanes cutting out the
/// reflexive section `S(d)`.
pub fn in_reflexive_section(x: &[i64]) -> bool {
    let d = x.len();
    d > 0 && x[d - 1] == 0 && (1..d).all(|i| x[i - 1] == x[d - i - 1])
}

/// x-vector of the simplex `P(alpha)`.
pub fn realized_x(alpha: &[u64]) -> Result<Vec<i64>> {
    x_vector(&payne_hstar(&PayneSimplex::new(alpha.to_vec())?))
}

pub fn realize(alpha: &[u64], expected_x: &[i64]) -> Result<bool> {
    Ok(realized_x(alpha)? == expected_x)
}

/// Canonical representative modulo the all-ones vector and positive
/// scaling: subtract the minimum entry, then divide by the gcd.
pub fn projective_normal(x: &[i64]) -> Vec<i64> {
    let m = x.iter().copied().min().unwrap_or(0);
    primitive(x.iter().map(|v| v - m).collect())
}

pub fn realize_projective(alpha: &[u64], expected_x: &[i64]) -> Result<bool> {
    Ok(projective_normal(&realized_x(alpha)?) == projective_normal(expected_x))
}

/// Coefficients `c >= 0` with `x = sum c_k ray_k` for a simplicial cone.
pub fn cone_membership(x: &[i64], cone: &RayCone) -> Result<Option<Vec<Q>>> {
    let d = cone.d;
    if x.len() != d {
        return Err(Error::Precondition(format!(
            "vector has {} entries, cone lives in {d}",
            x.len()
        )));
    }
    if cone.rays.len() != d {
        return Err(Error::Unsupported(format!(
            "cone with {} rays in dimension {d} is not simplicial",
            cone.rays.len()
        )));
    }
    // Solve R^T c = x by Gauss-Jordan elimination over Q.
    let mut m: Vec<Vec<Q>> = (0..d)
        .map(|i| {
            let mut row: Vec<Q> = cone.rays.iter().map(|r| qi(r[i])).collect();
            row.push(qi(x[i]));
            row
        })
        .collect();
    for col in 0..d {
        let p = (col..d)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Unsupported("cone rays are linearly dependent".into()))?;
        m.swap(col, p);
        let piv = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &piv;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
    }
    let c: Vec<Q> = m.into_iter().map(|row| row[d].clone()).collect();
    Ok(if c.iter().any(Signed::is_negative) {
        None
    } else {
        Some(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(c: &[i64]) -> HStarVector {
        HStarVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn x_coordinates() {
        assert_eq!(x_vector(&hv(&[1, 2, 2])).unwrap(), vec![1, 1]);
        assert_eq!(x_vector(&hv(&[1, 1, 1, 1])).unwrap(), vec![0, 0, 0]);
        assert_eq!(x_vector(&hv(&[1, 2, 4, 3, 3, 4, 2])).unwrap(), vec![1, 3, 2, 2, 3, 1]);
        assert!(x_vector(&hv(&[1, 2, 0])).is_err());
    }

    #[test]
    fn cprime_small() {
        assert_eq!(cprime_rays(1).unwrap().rays, vec![vec![1]]);
        assert_eq!(cprime_rays(2).unwrap().rays, vec![vec![1, 0], vec![1, 1]]);
        let c5 = cprime_rays(5).unwrap();
        assert_eq!(c5.rays.len(), 5);
        for r in [
            [0, 0, 1, 0, 0],
            [0, 1, 1, 0, 0],
            [0, 1, 0, 1, 0],
            [1, 1, 1, 1, 0],
            [1, 1, 1, 1, 1],
        ] {
            assert!(c5.rays.contains(&r.to_vec()));
        }
    }

    fn rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let prow = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                let f = &row[c] / &prow[c];
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Each listed ray lies on the cone and the facets tight at it have
    /// rank `d - 1`, so it is an extreme ray; together they span.
    #[test]
    fn cprime_rays_are_extreme() {
        for d in 1..=12 {
            let cone = cprime_rays(d).unwrap();
            let facets = cprime_facets(d);
            assert_eq!(cone.rays.len(), d, "d = {d}");
            assert_eq!(rank(&cone.rays), d);
            for r in &cone.rays {
                assert!(satisfies(&facets, r));
                let tight: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| f.iter().zip(r).map(|(a, b)| a * b).sum::<i64>() == 0)
                    .cloned()
                    .collect();
                assert_eq!(rank(&tight), d - 1, "d = {d}, ray {r:?}");
            }
        }
    }

    #[test]
    fn cdoubleprime_rays_satisfy_six() {
        let c = cdoubleprime6_rays();
        assert!(c.rays.contains(&vec![0, 2, 1, 1, 2, 0]));
        assert!(c.rays.contains(&vec![1, 1, 1, 1, 1, 1]));
        let six = six_inequalities();
        assert!(c.rays.iter().all(|r| satisfies(&six, r)));
    }

    #[test]
    fn membership() {
        let c2 = cprime_rays(2).unwrap();
        assert_eq!(cone_membership(&[1, 1], &c2).unwrap(), Some(vec![qi(0), qi(1)]));
        assert_eq!(cone_membership(&[2, 1], &c2).unwrap(), Some(vec![qi(1), qi(1)]));
        assert_eq!(cone_membership(&[-1, 0], &c2).unwrap(), None);
        assert!(cone_membership(&[0; 6], &cdoubleprime6_rays()).is_err());
    }

    #[test]
    fn projective_comparison() {
        assert_eq!(projective_normal(&[2, 4, 3, 3, 4, 2, 1]), vec![1, 3, 2, 2, 3, 1, 0]);
        assert_eq!(projective_normal(&[0, 0, 2, 2, 0, 0, 0]), vec![0, 0, 1, 1, 0, 0, 0]);
        assert!(realize(&[2, 1, 1, 1, 1], &[0, 1, 0, 0]).unwrap());
    }

    #[test]
    fn reflexive_section() {
        assert!(in_reflexive_section(&[1, 1, 1, 1, 0]));
        assert!(!in_reflexive_section(&[1, 1, 1, 1, 1]));
        assert!(in_reflexive_section(&[0, 1, 0, 0]));
        assert!(!in_reflexive_section(&[1, 0, 0, 0]));
    }
}
