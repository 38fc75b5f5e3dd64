//! The published tables: realization data for the cones (static input,
//! recomputed on demand), and the inequality tables, which are regenerated
//! from the family generators. Only the conjectural dimension-7 rows are
//! static text.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cones::{in_reflexive_section, projective_normal, realized_x};
use crate::error::{Error, Result};
use crate::inequalities::check::applicable_forms;
use crate::inequalities::families::{all_super_a, all_variants};
use crate::inequalities::farkas::equivalent;
use crate::inequalities::forms::{ab_to_h_form, terms_to_h, Family, LinearFormAB, LinearFormH, Sym, Terms};
use crate::inequalities::novelty::minimal_novel_dimension;
use crate::polynomials::{join, HStarVector};
use crate::rational::qi;

pub const TABLE_NAMES: [&str; 7] = ["noint", "int", "seven", "reflexive", "hoot", "cmon", "hoot2"];

/// A simplex `P(alpha)` and the x-vector it is listed with.
pub type RealizationData = (&'static [u64], &'static [i64]);

pub const HOOT: [RealizationData; 15] = [
    (&[2, 1], &[1]),
    (&[2, 1, 1], &[1, 0]),
    (&[2, 2, 1], &[1, 1]),
    (&[2, 1, 1, 1], &[0, 1, 0]),
    (&[2, 2, 1, 1], &[1, 1, 0]),
    (&[2, 2, 2, 1], &[1, 1, 1]),
    (&[2, 1, 1, 1, 1], &[0, 1, 0, 0]),
    (&[2, 2, 1, 1, 1], &[0, 1, 1, 0]),
    (&[2, 2, 2, 1, 1], &[1, 1, 1, 0]),
    (&[2, 2, 2, 2, 1], &[1, 1, 1, 1]),
    (&[2, 1, 1, 1, 1, 1], &[0, 0, 1, 0, 0]),
    (&[2, 2, 1, 1, 1, 1], &[0, 1, 1, 0, 0]),
    (&[3, 1, 1, 1, 1, 1], &[0, 1, 0, 1, 0]),
    (&[2, 2, 2, 2, 1, 1], &[1, 1, 1, 1, 0]),
    (&[2, 2, 2, 2, 2, 1], &[1, 1, 1, 1, 1]),
];

pub const CMON: [RealizationData; 7] = [
    (&[2, 1, 1, 1, 1, 1, 1], &[0, 0, 1, 0, 0, 0]),
    (&[2, 2, 1, 1, 1, 1, 1], &[0, 0, 1, 1, 0, 0]),
    (&[3, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 1, 0, 0]),
    (&[4, 1, 1, 1, 1, 1, 1], &[0, 1, 1, 0, 1, 0]),
    (&[2, 2, 2, 2, 2, 1, 1], &[1, 1, 1, 1, 1, 0]),
    (&[2, 2, 2, 2, 2, 2, 1], &[1, 1, 1, 1, 1, 1]),
    (&[8, 2, 2, 2, 2, 2, 1], &[1, 3, 2, 2, 3, 1]),
];

pub const HOOT2: [RealizationData; 9] = [
    (&[2, 1, 1], &[1, 0]),
    (&[2, 2, 1, 1], &[1, 1, 0]),
    (&[2, 1, 1, 1, 1], &[0, 1, 0, 0]),
    (&[2, 2, 2, 1, 1], &[1, 1, 1, 0]),
    (&[2, 2, 1, 1, 1, 1], &[0, 1, 1, 0, 0]),
    (&[2, 2, 2, 2, 1, 1], &[1, 1, 1, 1, 0]),
    (&[2, 1, 1, 1, 1, 1, 1], &[0, 0, 1, 0, 0, 0]),
    (&[3, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 1, 0, 0]),
    (&[2, 2, 2, 2, 2, 1, 1], &[1, 1, 1, 1, 1, 0]),
];

/// The two rays spanning the projected reflexive cone in dimension 7, with
/// the simplices realizing them up to the all-ones direction.
pub const SEVEN_REFLEXIVE: [RealizationData; 2] = [
    (&[2, 2, 1, 1, 1, 1, 1, 1], &[0, 0, 1, 1, 0, 0, 0]),
    (&[10, 4, 1, 1, 1, 1, 1, 1], &[1, 3, 2, 2, 3, 1, 0]),
];

pub fn realization_data(name: &str) -> Option<&'static [RealizationData]> {
    match name {
        "hoot" => Some(&HOOT),
        "cmon" => Some(&CMON),
        "hoot2" => Some(&HOOT2),
        _ => None,
    }
}

fn polytope_name(alpha: &[u64]) -> String {
    format!("P({})", join(alpha))
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationRow {
    pub polytope: String,
    pub alpha: Vec<u64>,
    pub d: usize,
    pub expected_x: Vec<i64>,
    pub h_star: Vec<i64>,
    pub x: Vec<i64>,
    pub matches: bool,
}

pub fn realization_row(alpha: &[u64], expected: &[i64]) -> Result<RealizationRow> {
    let x = realized_x(alpha)?;
    Ok(RealizationRow {
        polytope: polytope_name(alpha),
        alpha: alpha.to_vec(),
        d: alpha.len() - 1,
        expected_x: expected.to_vec(),
        h_star: std::iter::once(1).chain(x.iter().map(|v| v + 1)).collect(),
        matches: x == expected,
        x,
    })
}

pub fn realization_table(name: &str) -> Result<Vec<RealizationRow>> {
    let data = realization_data(name).ok_or_else(|| Error::Parse(format!("unknown realization table {name:?}")))?;
    data.iter().map(|(a, x)| realization_row(a, x)).collect()
}

/// The dimension-7 reflexive rays, compared modulo the all-ones vector.
pub fn seven_reflexive_rows() -> Result<Vec<RealizationRow>> {
    SEVEN_REFLEXIVE
        .iter()
        .map(|(a, x)| {
            let mut row = realization_row(a, x)?;
            row.matches = projective_normal(&row.x) == projective_normal(x) && in_reflexive_section(&row.x);
            Ok(row)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NointRow {
    pub inequality: String,
    pub r: i64,
    pub r_prime: i64,
    pub vertex: String,
    /// Theorem bound `2r' + r + 7`.
    pub d_min: i64,
    /// Smallest dimension in which the inequality is new.
    pub d_novel: i64,
}

/// Every superA inequality that is new in some dimension up to `d_max`.
pub fn noint_rows(d_max: i64) -> Result<Vec<NointRow>> {
    let mut rows = Vec::new();
    for f in all_super_a(d_max)? {
        if let Some(d_novel) = minimal_novel_dimension(&f, d_max)? {
            rows.push((f, d_novel));
        }
    }
    rows.sort_by(|(f, n), (g, m)| {
        (f.d_min, f.params.r, f.params.r_prime, n, &f.vertices).cmp(&(
            g.d_min,
            g.params.r,
            g.params.r_prime,
            m,
            &g.vertices,
        ))
    });
    Ok(rows
        .into_iter()
        .map(|(f, d_novel)| NointRow {
            inequality: f.to_string(),
            r: f.params.r.unwrap_or(0),
            r_prime: f.params.r_prime.unwrap_or(0),
            vertex: crate::inequalities::qpoly::fmt_vertex(&f.vertices[0]),
            d_min: f.d_min,
            d_novel,
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct IntRow {
    pub inequality: String,
    pub alpha: i64,
    pub r: i64,
    pub r_prime: i64,
    pub variant_type: u8,
    pub d_min: i64,
}

fn variant_type(f: &LinearFormAB) -> u8 {
    match f.family {
        Family::Variant1 => 1,
        Family::Variant2 => 2,
        _ => 3,
    }
}

/// Every variant inequality valid in some dimension up to `d_max`.
pub fn int_rows(d_max: i64) -> Result<Vec<IntRow>> {
    let mut rows: Vec<IntRow> = all_variants(d_max)?
        .iter()
        .map(|f| IntRow {
            inequality: f.to_string(),
            alpha: f.params.alpha.unwrap_or(0),
            r: f.params.r.unwrap_or(0),
            r_prime: f.params.r_prime.unwrap_or(0),
            variant_type: variant_type(f),
            d_min: f.d_min,
        })
        .collect();
    rows.sort_by_key(|r| (r.d_min, r.alpha, r.r, r.r_prime, r.variant_type, r.inequality.clone()));
    rows.dedup_by(|a, b| a.inequality == b.inequality && a.d_min == b.d_min);
    Ok(rows)
}

/// Static description of one row of the dimension-7 table.
pub struct SevenSpec {
    pub h_display: &'static str,
    pub ab_display: &'static str,
    pub source: Family,
    /// The component inequalities in generator notation.
    pub ab_parts: &'static [&'static str],
}

pub const SEVEN: [SevenSpec; 7] = [
    SevenSpec {
        h_display: "1 = h*_0 <= h*_7 <= h*_1 <= h*_6 <= h*_2",
        ab_display: "1 = a_0 <= a_1 <= a_2, 0 <= b_0 <= b_1",
        source: Family::Refinement,
        ab_parts: &["a_0 <= a_1", "a_1 <= a_2", "0 <= b_0", "b_0 <= b_1"],
    },
    SevenSpec {
        h_display: "h*_1 + h*_2 <= h*_5 + h*_6",
        ab_display: "b_0 <= b_2",
        source: Family::Refinement,
        ab_parts: &["b_0 <= b_2"],
    },
    SevenSpec {
        h_display: "h*_1 + h*_2 + h*_3 <= h*_4 + h*_5 + h*_6",
        ab_display: "b_0 <= b_3",
        source: Family::Refinement,
        ab_parts: &["b_0 <= b_3"],
    },
    SevenSpec {
        h_display: "h*_1 + h*_2 <= h*_4 + h*_5",
        ab_display: "a_1 + b_0 + b_1 <= a_3 + b_2 + b_3",
        source: Family::Variant3,
        ab_parts: &["a_1 + b_0 + b_1 <= a_3 + b_2 + b_3"],
    },
    SevenSpec {
        h_display: "h*_1 + h*_2 <= h*_3 + h*_4",
        ab_display: "a_1 + a_2 + b_0 + b_1 <= a_3 + a_4 + b_2 + b_3",
        source: Family::Variant1,
        ab_parts: &["a_1 + a_2 + b_0 + b_1 <= a_3 + a_4 + b_2 + b_3"],
    },
    SevenSpec {
        h_display: "2h*_5 + h*_6 <= h*_2 + 2h*_3",
        ab_display: "a_1 + a_2 <= a_3 + a_4",
        source: Family::SuperA,
        ab_parts: &["a_1 + a_2 <= a_3 + a_4"],
    },
    SevenSpec {
        h_display: "2h*_1 + 3h*_2 + h*_3 <= h*_4 + 3h*_5 + 2h*_6",
        ab_display: "2b_0 + b_1 <= b_2 + b_3 + b_4",
        source: Family::Variant3,
        ab_parts: &["2b_0 + b_1 <= b_2 + b_3 + b_4"],
    },
];

/// Conjectural rows, kept verbatim and never generated.
pub const SEVEN_CONJECTURES: [(&str, &str); 2] = [
    (
        "2h*_1 + 3h*_2 + 2h*_3 <= 2h*_4 + 4h*_5 + h*_6",
        "(1/2)a_1 + b_0 + b_1 <= (1/2)a_2 + b_2 + b_3",
    ),
    (
        "4h*_1 + 7h*_2 + 2h*_3 <= 4h*_4 + 6h*_5 + 3h*_6",
        "(1/4)a_1 + (1/4)a_2 + b_0 + b_1 <= (1/2)a_3 + b_2 + b_3",
    ),
];

/// Parses a chain `x_0 <= x_1 <= ...` of h*-expressions of the form
/// `c h*_i + ...` (a bare `1` stands for `h*_0`) into consecutive forms.
pub fn parse_h_chain(s: &str, d: usize) -> Result<Vec<LinearFormH>> {
    let s = s.trim_start_matches("1 = ");
    let sides: Vec<Terms> = s.split("<=").map(|p| parse_h_side(p.trim())).collect::<Result<_>>()?;
    sides
        .windows(2)
        .map(|w| {
            let mut net = w[1].clone();
            for (sym, c) in w[0].iter() {
                net.add(*sym, -c.clone());
            }
            terms_to_h(&net, d, d)
        })
        .collect()
}

fn parse_h_side(s: &str) -> Result<Terms> {
    let mut t = Terms::default();
    for term in s.split('+').map(str::trim) {
        if term == "1" {
            t.add(Sym::H(0), qi(1));
            continue;
        }
        let (coeff, idx) = term
            .split_once("h*_")
            .ok_or_else(|| Error::Parse(format!("bad h*-term {term:?}")))?;
        let c = if coeff.is_empty() {
            1
        } else {
            coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {coeff:?}")))?
        };
        let i = idx.parse().map_err(|_| Error::Parse(format!("bad index {idx:?}")))?;
        t.add(Sym::H(i), qi(c));
    }
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct SevenRow {
    pub h_form: String,
    pub ab_form: String,
    pub source: String,
    /// The generated forms behind the row, converted to h*-coordinates.
    pub generated_h: Vec<String>,
    /// The generated forms and the displayed h*-form define the same cone.
    pub equivalent: bool,
    pub conjecture: bool,
}

/// Rows 1 to 7 are matched against the generators at `d = s = 7` and their
/// two columns checked for equivalence; conjectures are appended verbatim.
pub fn seven_rows() -> Result<Vec<SevenRow>> {
    let forms = applicable_forms(7, 7, false)?;
    let mut out = Vec::new();
    for row in &SEVEN {
        let mut hs = Vec::new();
        for part in row.ab_parts {
            let f = forms
                .iter()
                .find(|f| f.family == row.source && f.to_string() == *part)
                .ok_or_else(|| Error::Unsupported(format!("no {} form {part:?} at d = 7", row.source)))?;
            hs.push(ab_to_h_form(f, 7, 7)?);
        }
        let shown = parse_h_chain(row.h_display, 7)?;
        out.push(SevenRow {
            h_form: row.h_display.into(),
            ab_form: row.ab_display.into(),
            source: row.source.name().into(),
            generated_h: hs.iter().map(|h| h.to_string()).collect(),
            equivalent: equivalent(&hs, &shown)?,
            conjecture: false,
        });
    }
    for (h, ab) in SEVEN_CONJECTURES {
        out.push(SevenRow {
            h_form: h.into(),
            ab_form: ab.into(),
            source: "CONJECTURE".into(),
            generated_h: vec![],
            equivalent: false,
            conjecture: true,
        });
    }
    Ok(out)
}

/// Static rows of the reflexive table: dimension, h*-pattern, inequalities.
pub const REFLEXIVE: [(usize, &str, &str); 5] = [
    (2, "(1,h*_1,1)", "1 <= h*_1"),
    (3, "(1,h*_1,h*_1,1)", "1 <= h*_1"),
    (4, "(1,h*_1,h*_2,h*_1,1)", "1 <= h*_1 <= h*_2"),
    (5, "(1,h*_1,h*_2,h*_2,h*_1,1)", "1 <= h*_1 <= h*_2"),
    (6, "(1,h*_1,h*_2,h*_3,h*_2,h*_1,1)", "1 <= h*_1 <= h*_2, h*_3"),
];

#[derive(Clone, Debug, Serialize)]
pub struct ReflexiveRow {
    pub d: usize,
    pub pattern: String,
    pub inequalities: String,
    /// On symmetric vectors, the listed inequalities and every generated
    /// inequality at `d` define the same cone.
    pub equivalent: bool,
}

/// Restricts a form to symmetric vectors `h*_i = h*_{d-i}`, returning
/// coefficients on `h*_0, ..., h*_{d/2}`.
fn fold_symmetric(f: &LinearFormH) -> LinearFormH {
    let d = f.d;
    let mut out = LinearFormH {
        d: d / 2,
        s: d / 2,
        coeffs: vec![qi(0); d / 2 + 1],
    };
    for (i, c) in f.coeffs.iter().enumerate() {
        out.coeffs[i.min(d - i)] += c;
    }
    out
}

fn parse_reflexive(s: &str, d: usize) -> Result<Vec<LinearFormH>> {
    // "1 <= h*_1 <= h*_2, h*_3": the comma lists further upper bounds for
    // the term before the last `<=`.
    let (chain, extra) = match s.split_once(", ") {
        Some((c, e)) => (c, Some(e)),
        None => (s, None),
    };
    let mut forms = parse_h_chain(chain, d)?;
    if let Some(e) = extra {
        let parts: Vec<&str> = chain.split("<=").map(str::trim).collect();
        let lower = parts[parts.len() - 2];
        forms.extend(parse_h_chain(&format!("{lower} <= {e}"), d)?);
    }
    Ok(forms)
}

pub fn reflexive_rows() -> Result<Vec<ReflexiveRow>> {
    REFLEXIVE
        .iter()
        .map(|&(d, pattern, ineq)| {
            let listed: Vec<LinearFormH> = parse_reflexive(ineq, d)?.iter().map(fold_symmetric).collect();
            let generated: Vec<LinearFormH> = applicable_forms(d as i64, d as i64, false)?
                .iter()
                .map(|f| ab_to_h_form(f, d, d).map(|h| fold_symmetric(&h)))
                .collect::<Result<_>>()?;
            let generated: Vec<LinearFormH> = generated.into_iter().filter(|h| !h.is_zero()).collect();
            Ok(ReflexiveRow {
                d,
                pattern: pattern.into(),
                inequalities: ineq.into(),
                equivalent: equivalent(&listed, &generated)?,
            })
        })
        .collect()
}

/// Plain-text rendering of a table, with one row per line and columns
/// separated by ` | `.
pub fn render_table(name: &str) -> Result<String> {
    let mut out = String::new();
    match name {
        "noint" => {
            writeln!(out, "Inequality | (r,r') | Dimension").ok();
            for r in noint_rows(12)? {
                writeln!(out, "{} | ({},{}) | d >= {}", r.inequality, r.r, r.r_prime, r.d_novel).ok();
            }
        }
        "int" => {
            writeln!(out, "Inequality | (alpha,r,r') | type | Dimension").ok();
            for r in int_rows(8)? {
                writeln!(
                    out,
                    "{} | ({},{},{}) | {} | d >= {}",
                    r.inequality, r.alpha, r.r, r.r_prime, r.variant_type, r.d_min
                )
                .ok();
            }
        }
        "seven" => {
            writeln!(out, "h*-form | a/b-form | source").ok();
            for r in seven_rows()? {
                writeln!(out, "{} | {} | {}", r.h_form, r.ab_form, r.source).ok();
            }
        }
        "reflexive" => {
            writeln!(out, "h*-polynomial | Inequalities | d").ok();
            for r in reflexive_rows()? {
                writeln!(out, "{} | {} | {}", r.pattern, r.inequalities, r.d).ok();
            }
        }
        "hoot" | "cmon" | "hoot2" => {
            writeln!(out, "Polytope | Vector | Dimension").ok();
            for r in realization_table(name)? {
                writeln!(out, "{} | ({}) | d = {}", r.polytope, join(&r.x), r.d).ok();
            }
        }
        _ => {
            return Err(Error::Parse(format!(
                "unknown table {name:?}; expected one of {}",
                TABLE_NAMES.join(", ")
            )))
        }
    }
    Ok(out)
}

/// JSON rendering of a table.
pub fn table_json(name: &str) -> Result<serde_json::Value> {
    let v = match name {
        "noint" => serde_json::to_value(noint_rows(12)?),
        "int" => serde_json::to_value(int_rows(8)?),
        "seven" => serde_json::to_value(seven_rows()?),
        "reflexive" => serde_json::to_value(reflexive_rows()?),
        "hoot" | "cmon" | "hoot2" => serde_json::to_value(realization_table(name)?),
        _ => return Err(Error::Parse(format!("unknown table {name:?}"))),
    };
    v.map_err(|e| Error::Unsupported(e.to_string()))
}

/// h*-vectors of every realization row, for feeding into the checks.
pub fn realized_vectors() -> Result<Vec<HStarVector>> {
    let mut out = Vec::new();
    for data in [&HOOT[..], &HOOT2[..], &CMON[..]] {
        for (a, x) in data {
            let row = realization_row(a, x)?;
            out.push(HStarVector::new(row.h_star)?);
        }
    }
    Ok(out)
}
