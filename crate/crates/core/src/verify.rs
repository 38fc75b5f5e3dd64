//! Verification sweeps: independent oracles compared against each other and
//! lemma statements checked exhaustively on small instances. Each sweep
//! yields records that serialize to one JSON object per line.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::inequalities::lemmas::{coke_condition, hayden_report};
use crate::inequalities::qpoly::{
    fmt_vertex, plan_vector, q_polyhedron, swim_vertices, swim_vertices_exact, swum_vertices, vertices,
};
use crate::lattice::{
    box_group, dilation_count_hstar, enumerate_alphas, parallelepiped_hstar, payne_hstar, terminal_cyclic_samples,
    BoxGroup, Convention, PayneSimplex,
};
use crate::rational::{q, qi, Q};
use crate::sumsets::{exhaustive_kemperman_scherk, KeyD4Variant, LemmaContext, KEY_D_OFFSET};

pub const SUITES: [&str; 4] = ["oracles", "sumsets", "lemmas", "vertices"];

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRecord {
    pub suite: &'static str,
    pub check: String,
    pub passed: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub alpha_sum_max: u64,
    pub oracle_d_max: usize,
    pub dilation_budget: u64,
    pub ks_n_max: u64,
    pub sample_n_max: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            alpha_sum_max: 40,
            oracle_d_max: 6,
            dilation_budget: 200,
            ks_n_max: 8,
            sample_n_max: 20,
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Vec<VerifyRecord>> {
    match name {
        "oracles" => oracles(cfg),
        "sumsets" => sumsets(cfg),
        "lemmas" => lemmas(),
        "vertices" => vertex_suite(),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, cfg)?);
            }
            Ok(out)
        }
        _ => Err(Error::Parse(format!("unknown suite {name:?}"))),
    }
}

/// Closed formula, box enumeration and dilation counting agree.
pub fn oracle_triangle(p: &PayneSimplex, budget: u64) -> Result<bool> {
    let closed = payne_hstar(p);
    let boxed = parallelepiped_hstar(&box_group(p));
    let counted = dilation_count_hstar(p, budget)?;
    Ok(closed == boxed && boxed == counted)
}

fn oracles(cfg: &VerifyConfig) -> Result<Vec<VerifyRecord>> {
    let mut out = Vec::new();
    for d in 1..=cfg.oracle_d_max {
        let alphas = enumerate_alphas(d, cfg.alpha_sum_max);
        let results: Vec<(Vec<u64>, Result<bool>)> = alphas
            .par_iter()
            .map(|p| (p.alpha().to_vec(), oracle_triangle(p, cfg.dilation_budget)))
            .collect();
        let mut mismatches = Vec::new();
        for (a, r) in results {
            if !r? {
                mismatches.push(a);
            }
        }
        out.push(VerifyRecord {
            suite: "oracles",
            check: format!("triangle d={d}"),
            passed: mismatches.is_empty(),
            detail: json!({ "simplices": alphas.len(), "alpha_sum_max": cfg.alpha_sum_max, "mismatches": mismatches }),
        });
    }
    Ok(out)
}

/// Every keyD instance for `(r, r')` on a plain-convention context.
pub fn key_d_all(ctx: &LemmaContext, r: i64, rp: i64) -> Result<bool> {
    for i in 0..=r {
        for j in 0..=r + rp - i {
            if !ctx.key_d(r, rp, i, j, KEY_D_OFFSET)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every keyD4 instance whose dimension bound holds on a split context.
/// Returns `(instances checked, failures)`.
pub fn key_d4_all(ctx: &LemmaContext) -> Result<(usize, usize)> {
    let d = ctx.d();
    let (mut checked, mut failed) = (0, 0);
    for rp in 0..=d {
        for r in 0..=rp {
            for variant in [KeyD4Variant::A, KeyD4Variant::B, KeyD4Variant::C] {
                let (bound, alphas): (i64, Vec<i64>) = match variant {
                    KeyD4Variant::A => (2 * rp + r + 7, (0..=r).collect()),
                    KeyD4Variant::B => (2 * rp + r + 6, vec![0]),
                    KeyD4Variant::C => (2 * rp + r + 6, (0..=r + 1).collect()),
                };
                for alpha in alphas {
                    let need = if variant == KeyD4Variant::C {
                        bound + alpha
                    } else {
                        bound
                    };
                    if d < need {
                        continue;
                    }
                    for i in 0..=r {
                        for j in 0..=r + rp - i {
                            checked += 1;
                            if !ctx.key_d4(variant, r, rp, alpha, i, j)? {
                                failed += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((checked, failed))
}

fn sample_record(
    check: String,
    groups: &[BoxGroup],
    f: impl Fn(&BoxGroup) -> Result<bool> + Sync,
) -> Result<VerifyRecord> {
    let results: Vec<Result<bool>> = groups.par_iter().map(&f).collect();
    let mut failures = 0;
    for r in results {
        if !r? {
            failures += 1;
        }
    }
    Ok(VerifyRecord {
        suite: "sumsets",
        check,
        passed: failures == 0,
        detail: json!({ "groups": groups.len(), "failures": failures }),
    })
}

fn sumsets(cfg: &VerifyConfig) -> Result<Vec<VerifyRecord>> {
    let mut out = Vec::new();
    let sweep = exhaustive_kemperman_scherk(cfg.ks_n_max);
    out.push(VerifyRecord {
        suite: "sumsets",
        check: format!("kemperman-scherk n<={}", cfg.ks_n_max),
        passed: sweep.violations == 0,
        detail: serde_json::to_value(sweep).map_err(|e| Error::Unsupported(e.to_string()))?,
    });

    let nine = terminal_cyclic_samples(9, cfg.sample_n_max);
    out.push(sample_record("flight d=9".into(), &nine, |g| {
        LemmaContext::new(g.clone(), Convention::Plain, true)?.flight_all()
    })?);
    out.push(sample_record("keyD (0,1) d=9".into(), &nine, |g| {
        key_d_all(&LemmaContext::new(g.clone(), Convention::Plain, true)?, 0, 1)
    })?);
    out.push(sample_record("flight2 d=8 all apexes".into(), &nine, |g| {
        for apex in 0..g.coord_count() {
            if !LemmaContext::new(g.clone(), Convention::Split { apex }, true)?.flight2_all()? {
                return Ok(false);
            }
        }
        Ok(true)
    })?);
    out.push(sample_record("keyD4 a/b/c d=8 all apexes".into(), &nine, |g| {
        for apex in 0..g.coord_count() {
            let (_, failed) = key_d4_all(&LemmaContext::new(g.clone(), Convention::Split { apex }, true)?)?;
            if failed > 0 {
                return Ok(false);
            }
        }
        Ok(true)
    })?);
    Ok(out)
}

/// Symmetric unimodal sequences of length `len` with entries in `0..=max`.
pub fn symmetric_unimodal(len: usize, max: i64) -> Vec<Vec<i64>> {
    let half = len.div_ceil(2);
    let mut out = Vec::new();
    fn rec(half: usize, lo: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == half {
            out.push(cur.clone());
            return;
        }
        for x in lo..=max {
            cur.push(x);
            rec(half, x, max, cur, out);
            cur.pop();
        }
    }
    let mut halves = Vec::new();
    rec(half, 0, max, &mut Vec::new(), &mut halves);
    for h in halves {
        let mut full = h.clone();
        full.extend(h.iter().rev().skip(len % 2));
        out.push(full);
    }
    out
}

/// Compares the coke criterion with the weighted-sum bound over every
/// symmetric unimodal `h` (entries at most 3), for all `mu` drawn from
/// `{0, 1/3, 1/2, 1, 2}` and `beta` in `{1, 1/2, 1/3, 2/3}`. Arithmetic
/// is scaled by 6 so the oracle side stays in integers.
/// Returns `(cases, disagreements)`.
pub fn coke_sweep(max_len: usize) -> Result<(usize, usize)> {
    let mu_vals: [(i64, Q); 5] = [(0, qi(0)), (2, q(1, 3)), (3, q(1, 2)), (6, qi(1)), (12, qi(2))];
    let betas: [(i64, Q); 4] = [(6, qi(1)), (3, q(1, 2)), (2, q(1, 3)), (4, q(2, 3))];
    let mut cases = 0;
    let mut bad = 0;
    for len in 1..=max_len {
        let hs = symmetric_unimodal(len, 3);
        let total = 5usize.pow(len as u32);
        let results: Vec<Result<(usize, usize)>> = (0..total)
            .into_par_iter()
            .map(|code| {
                let mut c = code;
                let idx: Vec<usize> = (0..len)
                    .map(|_| {
                        let k = c % 5;
                        c /= 5;
                        k
                    })
                    .collect();
                let mu6: Vec<i64> = idx.iter().map(|&k| mu_vals[k].0).collect();
                let mu: Vec<Q> = idx.iter().map(|&k| mu_vals[k].1.clone()).collect();
                let (mut n, mut b) = (0, 0);
                for (beta6, beta) in &betas {
                    let oracle = hs.iter().all(|h| {
                        let lhs: i64 = mu6.iter().zip(h).map(|(m, x)| m * x).sum();
                        lhs >= beta6 * h.iter().sum::<i64>()
                    });
                    n += 1;
                    if coke_condition(&mu, beta)? != oracle {
                        b += 1;
                    }
                }
                Ok((n, b))
            })
            .collect();
        for r in results {
            let (n, b) = r?;
            cases += n;
            bad += b;
        }
    }
    Ok((cases, bad))
}

fn lemmas() -> Result<Vec<VerifyRecord>> {
    let mut out = Vec::new();
    let (cases, bad) = coke_sweep(7)?;
    out.push(VerifyRecord {
        suite: "lemmas",
        check: "coke equivalence len<=7".into(),
        passed: bad == 0,
        detail: json!({ "cases": cases, "disagreements": bad }),
    });

    let mut checked = 0;
    let mut failures = Vec::new();
    for rp in 0..=4 {
        for r in 0..=rp.min(2) {
            for v in vertices(&q_polyhedron(r, rp)?) {
                checked += 1;
                let rep = hayden_report(&v, r, rp)?;
                if !rep.hypotheses_hold() || !rep.conclusions_hold() {
                    failures.push(format!("({r},{rp}) {}", fmt_vertex(&v)));
                }
            }
        }
    }
    out.push(VerifyRecord {
        suite: "lemmas",
        check: "hayden on vertices r<=2 r'<=4".into(),
        passed: failures.is_empty(),
        detail: json!({ "vertices": checked, "failures": failures }),
    });

    let mut outside = Vec::new();
    for rp in 0..=5 {
        for r in 0..=rp.min(3) {
            if !q_polyhedron(r, rp)?.contains(&plan_vector(r, rp)?) {
                outside.push(format!("({r},{rp})"));
            }
        }
    }
    out.push(VerifyRecord {
        suite: "lemmas",
        check: "plan vector in Q r<=3 r'<=5".into(),
        passed: outside.is_empty(),
        detail: json!({ "outside": outside }),
    });
    Ok(out)
}

fn vertex_suite() -> Result<Vec<VerifyRecord>> {
    let mut out = Vec::new();
    for r in 0..=3 {
        let enumerated = vertices(&q_polyhedron(r, r)?);
        let literal = swim_vertices(r)?;
        let exact = swim_vertices_exact(r)?;
        let poly = q_polyhedron(r, r)?;
        let spurious: Vec<String> = literal
            .iter()
            .filter(|v| !enumerated.contains(v))
            .map(|v| fmt_vertex(v))
            .collect();
        out.push(VerifyRecord {
            suite: "vertices",
            check: format!("swim r={r}"),
            // the nested rule must match exactly; the literal formula must
            // cover every vertex and stay inside Q
            passed: exact == enumerated
                && enumerated.iter().all(|v| literal.contains(v))
                && literal.iter().all(|v| poly.contains(v)),
            detail: json!({
                "vertices": enumerated.len(),
                "literal_points": literal.len(),
                "literal_equals_vertices": literal == enumerated,
                "non_vertex_points": spurious,
            }),
        });
    }
    for rp in 0..=6 {
        let enumerated = vertices(&q_polyhedron(0, rp)?);
        let closed = swum_vertices(rp)?;
        out.push(VerifyRecord {
            suite: "vertices",
            check: format!("swum r'={rp}"),
            passed: closed == enumerated,
            detail: json!({ "vertices": enumerated.iter().map(|v| fmt_vertex(v)).collect::<Vec<_>>() }),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodal_sequences() {
        assert_eq!(symmetric_unimodal(1, 1), vec![vec![0], vec![1]]);
        assert_eq!(
            symmetric_unimodal(3, 1),
            vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]
        );
        assert_eq!(symmetric_unimodal(4, 3).len(), 10);
    }

    #[test]
    fn small_coke_sweep() {
        let (cases, bad) = coke_sweep(3).unwrap();
        assert_eq!(cases, 4 * (5 + 25 + 125));
        assert_eq!(bad, 0);
    }

    #[test]
    fn vertex_and_lemma_suites_pass() {
        for rec in vertex_suite().unwrap().into_iter().chain(lemmas().unwrap()) {
            assert!(rec.passed, "{}: {}", rec.check, rec.detail);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }
}
