//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! binary exits non-zero when a criterion fails for any reason other than
//! the documented one (the literal closed form for the vertices of Q(r,r)
//! lists non-vertices once r >= 2).

use std::process::ExitCode;
use std::time::Instant;

use hstar::inequalities::families::{cor_a_inequality, refinement_h_display, refinement_inequalities};
use hstar::inequalities::farkas::equivalent;
use hstar::inequalities::lemmas::hayden_check;
use hstar::inequalities::qpoly::{
    fmt_vertex, plan_vector, q_polyhedron, swim_vertices, swim_vertices_exact, swum_vertices, vertices,
};
use hstar::inequalities::{ab_to_h_form, check_vector, CheckOptions, Family, LinearFormH};
use hstar::polynomials::{decompose, recompose, HStarVector};
use hstar::rational::qi;
use hstar::tables::{int_rows, noint_rows, realization_table, realized_vectors, seven_rows};
use hstar::verify::{coke_sweep, run_suite, VerifyConfig};
use hstar::Result;

struct Outcome {
    pass: bool,
    detail: String,
    /// Failure explained in the decisions ledger; does not fail the run.
    known: bool,
}

fn ok(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
        known: false,
    })
}

fn realization() -> Result<Outcome> {
    let mut rows = 0;
    let mut bad = Vec::new();
    for name in ["hoot", "hoot2", "cmon"] {
        for r in realization_table(name)? {
            rows += 1;
            if !r.matches {
                bad.push(format!("{name} {}: got {:?}", r.polytope, r.x));
            }
        }
    }
    ok(
        rows == 31 && bad.is_empty(),
        format!("{rows} rows (15 + 9 + 7), mismatches {bad:?}"),
    )
}

fn oracles() -> Result<Outcome> {
    let cfg = VerifyConfig {
        alpha_sum_max: 40,
        oracle_d_max: 6,
        ..Default::default()
    };
    let recs = run_suite("oracles", &cfg)?;
    let total: u64 = recs.iter().map(|r| r.detail["simplices"].as_u64().unwrap_or(0)).sum();
    ok(
        recs.len() == 6 && recs.iter().all(|r| r.passed),
        format!("{total} simplices with d <= 6, sum <= 40"),
    )
}

fn decompositions() -> Result<Outcome> {
    let cases: [(&[i64], &[i64], &[i64]); 4] = [
        (&[1, 2, 3, 2, 2, 2], &[1, 1, 2, 2, 1, 1], &[1, 1, 0, 1, 1]),
        (
            &[1, 2, 2, 1, 2, 2, 1, 0],
            &[1, 3, 4, 3, 3, 4, 3, 1],
            &[0, 0, 0, 0, 0, 0],
        ),
        (&[1, 1, 2, 1, 1, 2, 1], &[1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 1, 0]),
        (
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0],
        ),
    ];
    let mut examples = true;
    for (h, a, b) in cases {
        let ab = decompose(&HStarVector::new(h.to_vec())?);
        examples &= ab.a == a && ab.b == b;
    }

    let mut checked = 0usize;
    let mut failed = 0usize;
    for d in 1..=8u32 {
        for code in 0..4usize.pow(d) {
            let mut h = vec![1i64];
            let mut c = code;
            for _ in 0..d {
                h.push((c % 4) as i64);
                c /= 4;
            }
            let Ok(v) = HStarVector::new(h) else { continue };
            checked += 1;
            if recompose(&decompose(&v)).ok().as_ref() != Some(&v) {
                failed += 1;
            }
        }
    }
    ok(
        examples && failed == 0,
        format!(
            "4 examples {}, roundtrip on {checked} vectors, {failed} failures",
            if examples { "match" } else { "DIFFER" }
        ),
    )
}

fn vertex_sets() -> Result<Outcome> {
    let mut nested = true;
    let mut literal_diffs = Vec::new();
    for r in 0..=3 {
        let v = vertices(&q_polyhedron(r, r)?);
        nested &= swim_vertices_exact(r)? == v;
        let literal = swim_vertices(r)?;
        if literal != v {
            literal_diffs.push(format!("r={r}: {} points vs {} vertices", literal.len(), v.len()));
        }
    }
    let mut swum = true;
    for rp in 0..=6 {
        swum &= swum_vertices(rp)? == vertices(&q_polyhedron(0, rp)?);
    }
    let v11: Vec<String> = vertices(&q_polyhedron(1, 1)?).iter().map(|v| fmt_vertex(v)).collect();
    let v02: Vec<String> = vertices(&q_polyhedron(0, 2)?).iter().map(|v| fmt_vertex(v)).collect();
    let spot = v11 == ["(1,1,1)", "(1,2,0)", "(2,1,0)"] && v02 == ["(1,1/3,0)"];

    let documented = literal_diffs == ["r=2: 12 points vs 9 vertices", "r=3: 55 points vs 27 vertices"];
    let detail = format!(
        "literal swim closed form differs: {literal_diffs:?}; nested rule matches r<=3: {nested}; swum r'<=6: {swum}; Q(1,1), Q(0,2): {spot}"
    );
    let pass = nested && swum && spot && literal_diffs.is_empty();
    Ok(Outcome {
        pass,
        detail,
        known: !pass && nested && swum && spot && documented,
    })
}

fn generation() -> Result<Outcome> {
    let noint: [(&str, i64, i64); 8] = [
        ("a_1 + a_2 <= a_3 + a_4", 0, 0),
        ("a_1 + a_2 <= a_4 + a_5", 0, 1),
        ("2a_1 + a_2 + a_3 <= a_4 + a_5 + 2a_6", 1, 1),
        ("2a_1 + a_2 + a_3 <= a_4 + 2a_5 + a_6", 1, 1),
        ("2a_1 + a_2 + a_3 <= a_4 + a_5 + a_6 + a_7", 1, 1),
        ("(4/3)a_1 + a_2 <= a_5 + a_6 + (1/3)a_7", 0, 2),
        ("2a_1 + a_2 + a_3 <= a_5 + a_6 + 2a_7", 1, 2),
        ("2a_1 + a_2 + a_3 <= a_5 + 2a_6 + a_7", 1, 2),
    ];
    let int: [(&str, (i64, i64, i64), u8, i64); 4] = [
        ("a_1 + b_0 + b_1 <= a_3 + b_2 + b_3", (0, 0, 0), 3, 6),
        ("a_1 + a_2 + b_0 + b_1 <= a_3 + a_4 + b_2 + b_3", (0, 0, 0), 1, 7),
        ("2b_0 + b_1 <= b_2 + b_3 + b_4", (1, 0, 0), 3, 7),
        ("a_1 + b_0 + b_1 <= a_4 + b_3 + b_4", (0, 0, 1), 3, 8),
    ];
    let got_noint: Vec<(String, i64, i64)> = noint_rows(12)?
        .into_iter()
        .map(|r| (r.inequality, r.r, r.r_prime))
        .collect();
    let want_noint: Vec<(String, i64, i64)> = noint.iter().map(|&(s, r, rp)| (s.to_string(), r, rp)).collect();
    let got_int: Vec<(String, (i64, i64, i64), u8, i64)> = int_rows(8)?
        .into_iter()
        .map(|r| (r.inequality, (r.alpha, r.r, r.r_prime), r.variant_type, r.d_min))
        .collect();
    let want_int: Vec<(String, (i64, i64, i64), u8, i64)> =
        int.iter().map(|&(s, p, t, d)| (s.to_string(), p, t, d)).collect();
    ok(
        got_noint == want_noint && got_int == want_int,
        format!(
            "superA rows {}/8, variant rows {}/4",
            agree(&got_noint, &want_noint),
            agree(&got_int, &want_int)
        ),
    )
}

fn agree<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x == y).count()
}

fn novelty() -> Result<Outcome> {
    let want = [7, 9, 10, 10, 11, 11, 12, 12];
    let got: Vec<i64> = noint_rows(12)?.iter().map(|r| r.d_novel).collect();
    let flagged: Vec<usize> = (0..8)
        .filter(|&i| got.get(i) != Some(&want[i]))
        .map(|i| i + 1)
        .collect();
    ok(
        flagged.is_empty() && got.len() == 8,
        format!("dimension column {got:?}, discrepant rows {flagged:?}"),
    )
}

fn counterexamples() -> Result<Outcome> {
    let opts = CheckOptions::default();
    let check = |h: &[i64]| check_vector(&HStarVector::new(h.to_vec())?, &opts);

    let rep = check(&[1, 2, 2, 1, 2, 2, 1, 0])?;
    let a = &rep.decomposition.a;
    let super_a = rep
        .violations()
        .any(|e| e.family == Family::SuperA && e.label.starts_with("superA(0,0)") && e.slack == qi(-1))
        && a[1] + a[2] == 7
        && a[3] + a[4] == 6;

    let rep = check(&[1, 2, 3, 2, 2, 2])?;
    let b = &rep.decomposition.b;
    let refinement = rep
        .violations()
        .any(|e| e.family == Family::Refinement && e.form == "b_0 <= b_2")
        && b[0] == 1
        && b[2] == 0;

    let h = [1, 1, 2, 1, 1, 2, 1];
    let rep = check(&h)?;
    let variant = rep.violations().any(|e| e.family == Family::Variant3) && h[1] + h[2] == 3 && h[3] + h[4] == 2;

    let mut rejected = Vec::new();
    let realized = realized_vectors()?;
    for v in &realized {
        if !check_vector(v, &opts)?.all_hold() {
            rejected.push(v.to_string());
        }
    }
    ok(
        super_a && refinement && variant && rejected.is_empty(),
        format!(
            "superA(0,0) 7 > 6: {super_a}; b_0 <= b_2 1 > 0: {refinement}; variant type 3 3 > 2: {variant}; {} realized vectors accepted, rejected {rejected:?}",
            realized.len() - rejected.len()
        ),
    )
}

fn coke() -> Result<Outcome> {
    let (cases, bad) = coke_sweep(7)?;
    ok(
        bad == 0,
        format!("{cases} (mu, beta) cases over symmetric unimodal h, {bad} disagreements"),
    )
}

fn sumsets() -> Result<Outcome> {
    let recs = run_suite("sumsets", &VerifyConfig::default())?;
    let failed: Vec<&str> = recs.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect();
    let names: Vec<&str> = recs.iter().map(|r| r.check.as_str()).collect();
    ok(
        failed.is_empty(),
        format!("{} checks ({}), failed {failed:?}", recs.len(), names.join("; ")),
    )
}

fn symbolic() -> Result<Outcome> {
    let mut cor = true;
    for (r, rp) in [(0, 0), (0, 1), (1, 1)] {
        let d_min = cor_a_inequality(r, rp, 30)?.0.d_min;
        for d in d_min..=d_min + 6 {
            let (form, display) = cor_a_inequality(r, rp, d)?;
            let du = d as usize;
            cor &= ab_to_h_form(&form, du, du)? == display;
        }
    }

    let mut refinement = true;
    for d in 2..=12usize {
        let generated: Vec<LinearFormH> = refinement_inequalities(d as i64)?
            .iter()
            .map(|f| ab_to_h_form(f, d, d))
            .collect::<Result<_>>()?;
        refinement &= equivalent(&generated, &refinement_h_display(d))?;
    }

    let rows = seven_rows()?;
    let theorem_rows: Vec<_> = rows.iter().filter(|r| !r.conjecture).collect();
    let seven = theorem_rows.len() == 7 && theorem_rows.iter().all(|r| r.equivalent);
    ok(
        cor && refinement && seven,
        format!("corA displays: {cor}; refinement h*-form d<=12: {refinement}; dimension-7 rows 1-7: {seven}"),
    )
}

fn hayden_plan() -> Result<Outcome> {
    let mut count = 0;
    let mut bad = Vec::new();
    for rp in 0..=4 {
        for r in 0..=rp.min(2) {
            for v in vertices(&q_polyhedron(r, rp)?) {
                count += 1;
                if !hayden_check(&v, r, rp).unwrap_or(false) {
                    bad.push(format!("({r},{rp}) {}", fmt_vertex(&v)));
                }
            }
        }
    }
    let mut outside = Vec::new();
    let mut plans = 0;
    for rp in 0..=5 {
        for r in 0..=rp.min(3) {
            plans += 1;
            let v = plan_vector(r, rp)?;
            let zero_one = v.iter().all(|x| *x == qi(0) || *x == qi(1));
            if !zero_one || !q_polyhedron(r, rp)?.contains(&v) {
                outside.push(format!("({r},{rp})"));
            }
        }
    }
    ok(
        bad.is_empty() && outside.is_empty(),
        format!(
            "{count} vertices pass hayden (failures {bad:?}); plan vector in Q for {}/{plans} pairs",
            plans - outside.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("realization tables", realization),
        ("oracle triangle", oracles),
        ("decomposition", decompositions),
        ("vertex enumeration", vertex_sets),
        ("inequality generation", generation),
        ("novel-dimension annotation", novelty),
        ("counterexample detection", counterexamples),
        ("coke equivalence", coke),
        ("sumset theorems", sumsets),
        ("symbolic equivalences", symbolic),
        ("hayden/plan", hayden_plan),
    ];
    let mut passed = 0;
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome {
            pass: false,
            detail: format!("error: {e}"),
            known: false,
        });
        let secs = start.elapsed().as_secs_f64();
        let tag = match (outcome.pass, outcome.known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "criterion {:>2} {tag:<12} {name} [{secs:.1}s]: {}",
            i + 1,
            outcome.detail
        );
        if outcome.pass {
            passed += 1;
        } else if !outcome.known {
            unexpected += 1;
        }
    }
    println!(
        "acceptance: {passed}/{} criteria pass, {unexpected} unexpected failures",
        criteria.len()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
