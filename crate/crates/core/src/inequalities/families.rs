//! Generators for every inequality family. Each `*_form` builds one
//! inequality from explicit points of `Q(r, r')`; the `*_inequalities`
//! functions run over all vertices and check the dimension bound.

use crate::error::{Error, Result};
use crate::rational::{q, qi, Q};

use super::forms::{Family, LinearFormAB, LinearFormH, Params, Sym, Terms};
use super::qpoly::{plan_m, plan_vector, q_vertices, vertex_sum};

fn check_rr(r: i64, r_prime: i64) -> Result<()> {
    if !(0 <= r && r <= r_prime) {
        return Err(Error::Precondition(format!("need 0 <= r <= r', got ({r},{r_prime})")));
    }
    Ok(())
}

fn check_dim(d: i64, d_min: i64, what: &str) -> Result<()> {
    if d < d_min {
        return Err(Error::Precondition(format!("{what} needs d >= {d_min}, got d = {d}")));
    }
    Ok(())
}

fn check_len(v: &[Q], n: i64, name: &str) -> Result<()> {
    if v.len() as i64 != n.max(0) {
        return Err(Error::Precondition(format!(
            "{name} has length {}, expected {}",
            v.len(),
            n.max(0)
        )));
    }
    Ok(())
}

/// Adds `sum_j v_j sym(offset + j)`.
fn add_weighted(t: &mut Terms, sym: fn(i64) -> Sym, offset: i64, v: &[Q]) {
    for (j, c) in v.iter().enumerate() {
        t.add(sym(offset + j as i64), c.clone());
    }
}

pub fn super_a_bound(r: i64, r_prime: i64) -> i64 {
    2 * r_prime + r + 7
}

/// `lambda a_1 + sum_{j<=r} a_{j+2} <= a_{r'+3} + sum_j lambda_j a_{r'+4+j}`
/// with `lambda = sum(lambda_j) - r`.
pub fn super_a_form(r: i64, r_prime: i64, lambda: &[Q]) -> Result<LinearFormAB> {
    check_rr(r, r_prime)?;
    check_len(lambda, r + r_prime + 1, "lambda")?;
    let mut lhs = Terms::default();
    lhs.add(Sym::A(1), vertex_sum(lambda) - qi(r));
    lhs.add_range(Sym::A, 2, r + 2);
    let mut rhs = Terms::default();
    rhs.add(Sym::A(r_prime + 3), qi(1));
    add_weighted(&mut rhs, Sym::A, r_prime + 4, lambda);
    Ok(LinearFormAB::new(
        Family::SuperA,
        Params::rr(r, r_prime),
        vec![lambda.to_vec()],
        super_a_bound(r, r_prime),
        lhs,
        rhs,
    ))
}

pub fn super_a_inequalities(r: i64, r_prime: i64, d: i64) -> Result<Vec<LinearFormAB>> {
    check_rr(r, r_prime)?;
    check_dim(d, super_a_bound(r, r_prime), "superA")?;
    q_vertices(r, r_prime)?
        .iter()
        .map(|v| super_a_form(r, r_prime, v))
        .collect()
}

/// The corollary's a-form together with its h*-form, the latter built
/// directly from the displayed formula.
pub fn cor_a_inequality(r: i64, r_prime: i64, d: i64) -> Result<(LinearFormAB, LinearFormH)> {
    check_rr(r, r_prime)?;
    let m = plan_m(r, r_prime);
    let d_min = 2 * r_prime + m + 7;
    check_dim(d, d_min, "corA")?;
    let mut lhs = Terms::default();
    lhs.add(Sym::A(1), qi(m - r + 1));
    lhs.add_range(Sym::A, 2, r + 2);
    let mut rhs = Terms::default();
    rhs.add_range(Sym::A, r_prime + 3, r_prime + 4 + m);
    let form = LinearFormAB::new(
        Family::CorA,
        Params::rr(r, r_prime),
        vec![plan_vector(r, r_prime)?],
        d_min,
        lhs,
        rhs,
    );
    Ok((form, cor_a_h_display(r, r_prime, d)))
}

/// The "equivalently" display of the corollary, evaluated at `d`.
pub fn cor_a_h_display(r: i64, r_prime: i64, d: i64) -> LinearFormH {
    let m = plan_m(r, r_prime);
    let du = d as usize;
    let mut f = LinearFormH::zero(du, du);
    let mut put = |i: i64, c: i64| f.coeffs[i as usize] += qi(c);
    for j in 0..=r {
        put(d - 1 - j, -(m - r + 1 + j));
        put(j + 2, m - r + 1 + j);
    }
    for j in 0..=r_prime - r {
        put(d - r - 2 - j, -(m + 2));
        put(r + 3 + j, m + 2);
    }
    for j in 0..=m {
        put(d - r_prime - 3 - j, -(m + 1 - j));
        put(r_prime + 4 + j, m + 1 - j);
    }
    f
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum VariantType {
    One = 1,
    Two = 2,
    Three = 3,
}

impl VariantType {
    pub fn from_int(t: i64) -> Result<Self> {
        match t {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::Precondition(format!("unknown type {t}"))),
        }
    }

    fn family(self) -> Family {
        match self {
            Self::One => Family::Variant1,
            Self::Two => Family::Variant2,
            Self::Three => Family::Variant3,
        }
    }
}

/// Dimension bound and parameter check for each type.
pub fn variant_bound(t: VariantType, alpha: i64, r: i64, r_prime: i64) -> Result<i64> {
    check_rr(r, r_prime)?;
    match t {
        VariantType::One if (0..=r).contains(&alpha) => Ok(2 * r_prime + r + 7),
        VariantType::Two if r > 0 && alpha == 0 => Ok(2 * r_prime + r + 6),
        VariantType::Three if (0..=r + 1).contains(&alpha) => Ok(2 * r_prime + r + alpha + 6),
        VariantType::Two if r == 0 => Err(Error::Precondition("type 2 needs r > 0".into())),
        VariantType::Two => Err(Error::Precondition("type 2 takes no alpha".into())),
        _ => Err(Error::Precondition(format!(
            "alpha = {alpha} out of range for type {}",
            t as i64
        ))),
    }
}

/// Vertices of `Q(r - alpha, r' - alpha)`; when `r + r' - 2 alpha + 1 < 0`
/// the vertex is the empty vector, so the `lambda'` terms vanish.
fn lambda_prime_vertices(alpha: i64, r: i64, r_prime: i64) -> Result<Vec<Vec<Q>>> {
    if r + r_prime - 2 * alpha + 1 < 0 {
        return Ok(vec![Vec::new()]);
    }
    Ok(q_vertices(r - alpha, r_prime - alpha)?.to_vec())
}

/// One variant inequality from explicit points. `lambda` is ignored for
/// type 3 and `lambda_prime` for types 1 and 2.
pub fn variant_form(
    t: VariantType,
    alpha: i64,
    r: i64,
    r_prime: i64,
    lambda: &[Q],
    mu: &[Q],
    lambda_prime: &[Q],
) -> Result<LinearFormAB> {
    let d_min = variant_bound(t, alpha, r, r_prime)?;
    let n = r + r_prime + 1;
    check_len(mu, n, "mu")?;
    let mut lhs = Terms::default();
    let mut rhs = Terms::default();
    let vertices;
    match t {
        VariantType::One => {
            check_len(lambda, n, "lambda")?;
            lhs.add(Sym::A(1), vertex_sum(lambda) - qi(r));
            lhs.add(Sym::B(0), vertex_sum(mu) - qi(r) + qi(alpha));
            lhs.add_range(Sym::A, 2, r + 2);
            lhs.add_range(Sym::B, 1, r - alpha + 1);
            rhs.add(Sym::A(r_prime + 3), qi(1));
            add_weighted(&mut rhs, Sym::A, r_prime + 4, lambda);
            rhs.add(Sym::B(r_prime + 2 - alpha), qi(1));
            add_weighted(&mut rhs, Sym::B, r_prime + 3 - alpha, mu);
            vertices = vec![lambda.to_vec(), mu.to_vec()];
        }
        VariantType::Two => {
            check_len(lambda, n, "lambda")?;
            lhs.add(Sym::A(1), vertex_sum(lambda) - qi(r));
            lhs.add(Sym::B(0), vertex_sum(mu) - qi(r));
            lhs.add_range(Sym::A, 1, r + 1);
            lhs.add_range(Sym::B, 1, r + 1);
            rhs.add(Sym::A(r_prime + 2), qi(1));
            rhs.add(Sym::B(r_prime + 2), qi(1));
            add_weighted(&mut rhs, Sym::A, r_prime + 3, lambda);
            add_weighted(&mut rhs, Sym::B, r_prime + 3, mu);
            vertices = vec![lambda.to_vec(), mu.to_vec()];
        }
        VariantType::Three => {
            check_len(lambda_prime, r + r_prime - 2 * alpha + 1, "lambda'")?;
            lhs.add(Sym::A(1), vertex_sum(lambda_prime));
            lhs.add(Sym::B(0), vertex_sum(mu) - qi(r) + qi(alpha));
            lhs.add_range(Sym::B, 1, r + 1);
            rhs.add_range(Sym::B, r_prime + 2, r_prime + 2 + alpha);
            add_weighted(&mut rhs, Sym::A, r_prime + alpha + 3, lambda_prime);
            add_weighted(&mut rhs, Sym::B, r_prime + alpha + 3, mu);
            vertices = vec![mu.to_vec(), lambda_prime.to_vec()];
        }
    }
    let params = if t == VariantType::Two {
        Params::rr(r, r_prime)
    } else {
        Params::arr(alpha, r, r_prime)
    };
    Ok(LinearFormAB::new(t.family(), params, vertices, d_min, lhs, rhs))
}

/// All vertex combinations for one parameter choice, canonically ordered.
pub fn variant_inequalities(t: VariantType, alpha: i64, r: i64, r_prime: i64, d: i64) -> Result<Vec<LinearFormAB>> {
    let d_min = variant_bound(t, alpha, r, r_prime)?;
    check_dim(d, d_min, "variant")?;
    let q = q_vertices(r, r_prime)?;
    let mut out = Vec::new();
    match t {
        VariantType::One | VariantType::Two => {
            for lambda in q.iter() {
                for mu in q.iter() {
                    out.push(variant_form(t, alpha, r, r_prime, lambda, mu, &[])?);
                }
            }
        }
        VariantType::Three => {
            for lp in lambda_prime_vertices(alpha, r, r_prime)? {
                for mu in q.iter() {
                    out.push(variant_form(t, alpha, r, r_prime, &[], mu, &lp)?);
                }
            }
        }
    }
    Ok(out)
}

/// Corollary form of each variant type at the 0/1 plan points.
pub fn dos_inequality(part: VariantType, alpha: i64, r: i64, r_prime: i64, d: i64) -> Result<LinearFormAB> {
    variant_bound(part, alpha, r, r_prime)?;
    let m = plan_m(r, r_prime);
    let mut lhs = Terms::default();
    let mut rhs = Terms::default();
    let (d_min, family) = match part {
        VariantType::One => {
            lhs.add(Sym::A(1), qi(m - r + 1));
            lhs.add(Sym::B(0), qi(m - r + alpha + 1));
            lhs.add_range(Sym::A, 2, r + 2);
            lhs.add_range(Sym::B, 1, r - alpha + 1);
            rhs.add_range(Sym::A, r_prime + 3, r_prime + 4 + m);
            rhs.add_range(Sym::B, r_prime + 2 - alpha, r_prime + 3 - alpha + m);
            (2 * r_prime + m + 7, Family::Dos1)
        }
        VariantType::Two => {
            lhs.add(Sym::A(1), qi(m - r + 1));
            lhs.add(Sym::B(0), qi(m - r + 1));
            lhs.add_range(Sym::A, 1, r + 1);
            lhs.add_range(Sym::B, 1, r + 1);
            rhs.add_range(Sym::A, r_prime + 2, r_prime + 3 + m);
            rhs.add_range(Sym::B, r_prime + 2, r_prime + 3 + m);
            (2 * r_prime + m + 6, Family::Dos2)
        }
        VariantType::Three => {
            let m_prime = if alpha == r + 1 {
                -1
            } else {
                plan_m(r - alpha, r_prime - alpha)
            };
            lhs.add(Sym::A(1), qi(m_prime + 1));
            lhs.add(Sym::B(0), qi(m + alpha - r + 1));
            lhs.add_range(Sym::B, 1, r + 1);
            rhs.add_range(Sym::A, r_prime + alpha + 3, r_prime + alpha + 3 + m_prime);
            rhs.add_range(Sym::B, r_prime + 2, r_prime + 3 + m + alpha);
            (2 * r_prime + m + alpha + 6, Family::Dos3)
        }
    };
    check_dim(d, d_min, "dos")?;
    let params = if part == VariantType::Two {
        Params::rr(r, r_prime)
    } else {
        Params::arr(alpha, r, r_prime)
    };
    Ok(LinearFormAB::new(family, params, vec![], d_min, lhs, rhs))
}

/// `1 = a_0 <= a_1 <= a_i` (`2 <= i <= d-1`), `0 <= b_0 <= b_i`
/// (`1 <= i <= d-2`), for polytopes with an interior lattice point.
pub fn refinement_inequalities(d: i64) -> Result<Vec<LinearFormAB>> {
    if d < 1 {
        return Err(Error::Precondition(format!("d = {d} < 1")));
    }
    let one = |s: Sym| {
        let mut t = Terms::default();
        t.add(s, qi(1));
        t
    };
    let mk = |lhs: Terms, rhs: Terms, d_min: i64| {
        LinearFormAB::new(Family::Refinement, Params::default(), vec![], d_min, lhs, rhs)
    };
    let mut out = vec![mk(one(Sym::A(0)), one(Sym::A(1)), 1)];
    out.extend((2..d).map(|i| mk(one(Sym::A(1)), one(Sym::A(i)), i + 1)));
    out.push(mk(Terms::default(), one(Sym::B(0)), 1));
    out.extend((1..d - 1).map(|i| mk(one(Sym::B(0)), one(Sym::B(i)), i + 2)));
    Ok(out)
}

/// The theorem's h*-form: `1 = h*_0 <= h*_d <= h*_1` and
/// `h*_1 + ... + h*_i <= h*_{d-1} + ... + h*_{d-i} <= h*_2 + ... + h*_{i+1}`.
pub fn refinement_h_display(d: usize) -> Vec<LinearFormH> {
    let mut out = vec![
        LinearFormH::from_sides(d, d, &[(0, 1)], &[(d, 1)]),
        LinearFormH::from_sides(d, d, &[(d, 1)], &[(1, 1)]),
    ];
    for i in 1..=(d - 1) / 2 {
        let low: Vec<(usize, i64)> = (1..=i).map(|k| (k, 1)).collect();
        let mid: Vec<(usize, i64)> = (d - i..=d - 1).map(|k| (k, 1)).collect();
        let high: Vec<(usize, i64)> = (2..=i + 1).map(|k| (k, 1)).collect();
        out.push(LinearFormH::from_sides(d, d, &low, &mid));
        out.push(LinearFormH::from_sides(d, d, &mid, &high));
    }
    out
}

/// The general inequalities `1 = a_0 <= a_1 <= a_i` and `b_i >= 0`
/// (`b` indices up to `d - 1`; callers drop those beyond `s - 1`), plus
/// Hibi's `1 <= h*_1 <= h*_i` when there is an interior point.
pub fn baseline_inequalities(d: i64, interior: bool) -> Vec<LinearFormAB> {
    let mk = |fam: Family, lhs: Option<Sym>, rhs: Sym| {
        let mut l = Terms::default();
        if let Some(s) = lhs {
            l.add(s, qi(1));
        }
        let mut r = Terms::default();
        r.add(rhs, qi(1));
        LinearFormAB::new(fam, Params::default(), vec![], 1, l, r)
    };
    let mut out = vec![mk(Family::Baseline, Some(Sym::A(0)), Sym::A(1))];
    out.extend((2..d).map(|i| mk(Family::Baseline, Some(Sym::A(1)), Sym::A(i))));
    out.extend((0..d).map(|i| mk(Family::Baseline, None, Sym::B(i))));
    if interior {
        out.push(mk(Family::Hibi, Some(Sym::H(0)), Sym::H(1)));
        out.extend((2..d).map(|i| mk(Family::Hibi, Some(Sym::H(1)), Sym::H(i))));
    }
    out
}

/// The two conjectural dimension-7 inequalities. They are data, not
/// theorems, and only enter a check when explicitly requested.
pub fn dimension_seven_conjectures() -> Vec<LinearFormAB> {
    let side = |xs: &[(Sym, Q)]| {
        let mut t = Terms::default();
        for (s, c) in xs {
            t.add(*s, c.clone());
        }
        t
    };
    let one = qi(1);
    let rows = [
        (
            side(&[(Sym::A(1), q(1, 2)), (Sym::B(0), one.clone()), (Sym::B(1), one.clone())]),
            side(&[(Sym::A(2), q(1, 2)), (Sym::B(2), one.clone()), (Sym::B(3), one.clone())]),
        ),
        (
            side(&[
                (Sym::A(1), q(1, 4)),
                (Sym::A(2), q(1, 4)),
                (Sym::B(0), one.clone()),
                (Sym::B(1), one.clone()),
            ]),
            side(&[(Sym::A(3), q(1, 2)), (Sym::B(2), one.clone()), (Sym::B(3), one)]),
        ),
    ];
    rows.into_iter()
        .map(|(l, r)| {
            let mut f = LinearFormAB::new(Family::Conjecture, Params::default(), vec![], 7, l, r);
            f.d_max = Some(7);
            f
        })
        .collect()
}

/// All `(r, r')` with `0 <= r <= r'` and `bound(r, r') <= d`.
fn rr_pairs(d: i64, bound: impl Fn(i64, i64) -> i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for r_prime in 0.. {
        if bound(0, r_prime) > d {
            break;
        }
        for r in 0..=r_prime {
            if bound(r, r_prime) <= d {
                out.push((r, r_prime));
            }
        }
    }
    out
}

/// Every superA form valid at `d`.
pub fn all_super_a(d: i64) -> Result<Vec<LinearFormAB>> {
    let mut out = Vec::new();
    for (r, rp) in rr_pairs(d, super_a_bound) {
        out.extend(super_a_inequalities(r, rp, d)?);
    }
    Ok(out)
}

/// Every variant form (all types, all `alpha`) valid at `d`.
pub fn all_variants(d: i64) -> Result<Vec<LinearFormAB>> {
    let mut out = Vec::new();
    for (r, rp) in rr_pairs(d, |r, rp| 2 * rp + r + 6) {
        for t in [VariantType::One, VariantType::Two, VariantType::Three] {
            let alphas: Vec<i64> = match t {
                VariantType::One => (0..=r).collect(),
                VariantType::Two => vec![0],
                VariantType::Three => (0..=r + 1).collect(),
            };
            for alpha in alphas {
                match variant_bound(t, alpha, r, rp) {
                    Ok(b) if b <= d => out.extend(variant_inequalities(t, alpha, r, rp, d)?),
                    _ => {}
                }
            }
        }
    }
    Ok(out)
}

/// Every corA and dos form valid at `d`.
pub fn all_corollaries(d: i64, interior: bool) -> Result<Vec<LinearFormAB>> {
    let mut out = Vec::new();
    for (r, rp) in rr_pairs(d, |r, rp| 2 * rp + plan_m(r, rp) + 6) {
        if let Ok((f, _)) = cor_a_inequality(r, rp, d) {
            out.push(f);
        }
        if !interior {
            continue;
        }
        for part in [VariantType::One, VariantType::Two, VariantType::Three] {
            for alpha in 0..=r + 1 {
                if let Ok(f) = dos_inequality(part, alpha, r, rp, d) {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}
