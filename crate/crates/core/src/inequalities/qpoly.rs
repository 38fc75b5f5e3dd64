//! The polyhedra `Q(r, r')` whose vertices index the inequality families, with
//! exact vertex enumeration and the closed-form vertex sets for `r = r'` and
//! `r = 0`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qi, serde_q, serde_q_vec, Q};

/// `row . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    #[serde(with = "serde_q_vec")]
    pub row: Vec<Q>,
    #[serde(with = "serde_q")]
    pub rhs: Q,
    /// Which defining condition produced the row: 0 for non-negativity,
    /// 1..=4 for the numbered conditions, 5 for the origin convention.
    pub condition: u8,
}

impl Constraint {
    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        dot(&self.row, x) >= self.rhs
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPolyhedron {
    pub r: i64,
    pub r_prime: i64,
    /// Number of variables `r + r' + 1`.
    pub n: usize,
    pub constraints: Vec<Constraint>,
    /// `r < 0`: the polyhedron is the origin by convention.
    pub origin: bool,
}

fn interval_sum(n: usize, lo: i64, hi: i64) -> Vec<Q> {
    (0..n as i64)
        .map(|j| if lo <= j && j <= hi { qi(1) } else { qi(0) })
        .collect()
}

pub fn q_polyhedron(r: i64, r_prime: i64) -> Result<QPolyhedron> {
    if r > r_prime {
        return Err(Error::Precondition(format!("need r <= r', got ({r},{r_prime})")));
    }
    if r + r_prime + 1 < 0 {
        return Err(Error::Precondition(format!("r + r' + 1 = {} < 0", r + r_prime + 1)));
    }
    let n = (r + r_prime + 1) as usize;
    let mut constraints: Vec<Constraint> = (0..n as i64)
        .map(|i| Constraint {
            row: interval_sum(n, i, i),
            rhs: qi(0),
            condition: 0,
        })
        .collect();
    if r < 0 {
        constraints.extend((0..n as i64).map(|i| Constraint {
            row: interval_sum(n, i, i).into_iter().map(|x| -x).collect(),
            rhs: qi(0),
            condition: 5,
        }));
        return Ok(QPolyhedron {
            r,
            r_prime,
            n,
            constraints,
            origin: true,
        });
    }
    let mut push = |lo: i64, hi: i64, rhs: Q, condition: u8| {
        constraints.push(Constraint {
            row: interval_sum(n, lo, hi),
            rhs,
            condition,
        });
    };
    for i in 0..=r {
        push(i, i, qi(1), 1);
    }
    for i in r + 1..=(r + r_prime).div_euclid(2) {
        push(i, i, q(r + 1, 2 * i + 1), 2);
    }
    for i in 0..r {
        push(i, 2 * r - i, qi(2 * r - 2 * i + 1), 3);
    }
    // r + 1 <= i < (r + r') / 2
    let mut i = r + 1;
    while 2 * i < r + r_prime {
        push(i, r + r_prime - i, qi(r + 1) - q(2 * i * (r + 1), r + r_prime + 1), 4);
        i += 1;
    }
    Ok(QPolyhedron {
        r,
        r_prime,
        n,
        constraints,
        origin: false,
    })
}

impl QPolyhedron {
    pub fn contains(&self, x: &[Q]) -> bool {
        x.len() == self.n && self.constraints.iter().all(|c| c.satisfied_by(x))
    }
}

/// Solves the square system `rows x = rhs`; `None` if singular.
fn solve(rows: &[&Constraint]) -> Option<Vec<Q>> {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|c| c.row.iter().cloned().chain([c.rhs.clone()]).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let t = &f * &m[col][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Reduces `row` against an echelon basis of `(pivot, normalized row)`;
/// returns the new basis entry or `None` if `row` is dependent.
fn reduce(basis: &[(usize, Vec<Q>)], row: &[Q]) -> Option<(usize, Vec<Q>)> {
    let mut v = row.to_vec();
    for (p, b) in basis {
        if !v[*p].is_zero() {
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
    }
    let p = v.iter().position(|x| !x.is_zero())?;
    let inv = v[p].recip();
    for x in v.iter_mut() {
        *x *= &inv;
    }
    Some((p, v))
}

/// All vertices, by exhaustive enumeration of linearly independent active
/// sets. Sorted lexicographically and deduplicated.
pub fn vertices(q: &QPolyhedron) -> Vec<Vec<Q>> {
    if q.origin {
        return vec![vec![qi(0); q.n]];
    }
    let mut found = BTreeSet::new();
    let mut basis = Vec::new();
    let mut chosen = Vec::new();
    dfs(q, 0, &mut basis, &mut chosen, &mut found);
    found.into_iter().collect()
}

fn dfs(
    q: &QPolyhedron,
    start: usize,
    basis: &mut Vec<(usize, Vec<Q>)>,
    chosen: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<Q>>,
) {
    if chosen.len() == q.n {
        let rows: Vec<&Constraint> = chosen.iter().map(|&i| &q.constraints[i]).collect();
        if let Some(x) = solve(&rows) {
            if q.contains(&x) {
                found.insert(x);
            }
        }
        return;
    }
    let need = q.n - chosen.len();
    for i in start..q.constraints.len() {
        if q.constraints.len() - i < need {
            break;
        }
        if let Some(entry) = reduce(basis, &q.constraints[i].row) {
            basis.push(entry);
            chosen.push(i);
            dfs(q, i + 1, basis, chosen, found);
            chosen.pop();
            basis.pop();
        }
    }
}

type VertexCache = Mutex<HashMap<(i64, i64), Arc<Vec<Vec<Q>>>>>;

/// Memoized `vertices(q_polyhedron(r, r'))`.
pub fn q_vertices(r: i64, r_prime: i64) -> Result<Arc<Vec<Vec<Q>>>> {
    static CACHE: OnceLock<VertexCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("vertex cache poisoned").get(&(r, r_prime)) {
        return Ok(v.clone());
    }
    let v = Arc::new(vertices(&q_polyhedron(r, r_prime)?));
    cache
        .lock()
        .expect("vertex cache poisoned")
        .insert((r, r_prime), v.clone());
    Ok(v)
}

/// The closed-form set `e_0 + ... + e_r + sum_{i<r} e_{k_i}` with
/// `i <= k_i <= 2r - i`, taken literally. Every point lies in `Q(r, r)` and
/// every vertex is among them, but for `r >= 2` some points are not
/// vertices: `(1,2,2,0,0)` is the midpoint of `(1,1,3,0,0)` and
/// `(1,3,1,0,0)`. [`swim_vertices_exact`] gives the vertex set.
pub fn swim_vertices(r: i64) -> Result<Vec<Vec<Q>>> {
    if r < 0 {
        return Err(Error::Precondition(format!("r = {r} < 0")));
    }
    let n = (2 * r + 1) as usize;
    let mut base = vec![0i64; n];
    for x in base.iter_mut().take(r as usize + 1) {
        *x += 1;
    }
    let choices: Vec<(Q, Vec<usize>)> = (0..r)
        .map(|i| (qi(1), (i as usize..=(2 * r - i) as usize).collect()))
        .collect();
    Ok(expand(base.into_iter().map(qi).collect(), &choices))
}

/// The vertices of `Q(r, r)`: same shape as [`swim_vertices`] but with the
/// choices nested, `k_i in {i, 2r - i, k_{i+1}}` where `k_r = r`. This
/// gives `3^r` distinct vertices.
pub fn swim_vertices_exact(r: i64) -> Result<Vec<Vec<Q>>> {
    if r < 0 {
        return Err(Error::Precondition(format!("r = {r} < 0")));
    }
    let n = (2 * r + 1) as usize;
    // partial assignments (k_i, ..., k_{r-1}) stored as (vector, k_i)
    let mut states: Vec<(Vec<i64>, i64)> = vec![((0..n as i64).map(|j| (j <= r) as i64).collect(), r)];
    for i in (0..r).rev() {
        states = states
            .into_iter()
            .flat_map(|(v, next)| {
                [i, 2 * r - i, next].into_iter().map(move |k| {
                    let mut v = v.clone();
                    v[k as usize] += 1;
                    (v, k)
                })
            })
            .collect();
    }
    let out: BTreeSet<Vec<Q>> = states
        .into_iter()
        .map(|(v, _)| v.into_iter().map(qi).collect())
        .collect();
    Ok(out.into_iter().collect())
}

/// Closed form for `Q(0, r')`: `sum_{i <= r'/2} e_i / (2i+1)` plus
/// `(2/(r'+1) - 1/(2i+1)) e_{k_i}` for `ceil(r'/4) <= i <= floor((r'-1)/2)`,
/// `i <= k_i <= r' - i`.
pub fn swum_vertices(r_prime: i64) -> Result<Vec<Vec<Q>>> {
    if r_prime < 0 {
        return Err(Error::Precondition(format!("r' = {r_prime} < 0")));
    }
    let n = (r_prime + 1) as usize;
    let mut base = vec![qi(0); n];
    for i in 0..=r_prime / 2 {
        base[i as usize] = q(1, 2 * i + 1);
    }
    let lo = (r_prime + 3) / 4;
    let hi = (r_prime - 1).div_euclid(2);
    let choices: Vec<(Q, Vec<usize>)> = (lo..=hi)
        .map(|i| {
            (
                q(2, r_prime + 1) - q(1, 2 * i + 1),
                (i as usize..=(r_prime - i) as usize).collect(),
            )
        })
        .collect();
    Ok(expand(base, &choices))
}

/// Every way of adding `weight` at one of the listed positions, per choice.
fn expand(base: Vec<Q>, choices: &[(Q, Vec<usize>)]) -> Vec<Vec<Q>> {
    let mut out = BTreeSet::from([base]);
    for (w, positions) in choices {
        out = out
            .iter()
            .flat_map(|v| {
                positions.iter().map(move |&k| {
                    let mut v = v.clone();
                    v[k] += w;
                    v
                })
            })
            .collect();
    }
    out.into_iter().collect()
}

/// The 0/1 point `lambda_i = 1` for `i <= m = max(2r, floor((r + r')/2))`.
pub fn plan_vector(r: i64, r_prime: i64) -> Result<Vec<Q>> {
    if !(0 <= r && r <= r_prime) {
        return Err(Error::Precondition(format!("need 0 <= r <= r', got ({r},{r_prime})")));
    }
    let m = plan_m(r, r_prime);
    Ok((0..=r + r_prime).map(|i| if i <= m { qi(1) } else { qi(0) }).collect())
}

pub fn plan_m(r: i64, r_prime: i64) -> i64 {
    (2 * r).max((r + r_prime).div_euclid(2))
}

pub fn fmt_vertex(v: &[Q]) -> String {
    format!("({})", v.iter().map(fmt_q).collect::<Vec<_>>().join(","))
}

pub fn vertex_sum(v: &[Q]) -> Q {
    v.iter().sum()
}
