//! Evaluating every applicable inequality on a given h*-vector.

use serde::Serialize;

use crate::error::Result;
use crate::polynomials::{decompose, AbDecomposition, HStarVector};
use crate::rational::{fmt_q, Q};

use super::families::{
    all_corollaries, all_super_a, all_variants, baseline_inequalities, dimension_seven_conjectures,
    refinement_inequalities,
};
use super::forms::{Family, LinearFormAB, Sym};

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    /// Also evaluate the conjectural dimension-7 inequalities.
    pub include_conjectures: bool,
    /// Restrict to these families (all when empty).
    pub families: Vec<Family>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub family: Family,
    pub label: String,
    pub form: String,
    /// `rhs - lhs` on the vector.
    #[serde(with = "crate::rational::serde_q")]
    pub slack: Q,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub h_star: Vec<i64>,
    pub d: usize,
    pub s: usize,
    pub interior: bool,
    pub decomposition: AbDecomposition,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn violations(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// The forms that apply to an h*-vector of dimension `d` and degree `s`.
pub fn applicable_forms(d: i64, s: i64, include_conjectures: bool) -> Result<Vec<LinearFormAB>> {
    let interior = s == d;
    let in_b_range = |f: &LinearFormAB| {
        f.lhs.iter().chain(f.rhs.iter()).all(|(sym, _)| match sym {
            Sym::B(i) => *i < s,
            _ => true,
        })
    };
    let mut forms: Vec<LinearFormAB> = baseline_inequalities(d, interior)
        .into_iter()
        .filter(in_b_range)
        .collect();
    forms.extend(all_super_a(d)?);
    forms.extend(all_corollaries(d, interior)?);
    if interior {
        forms.extend(refinement_inequalities(d)?);
        forms.extend(all_variants(d)?);
        if include_conjectures {
            forms.extend(dimension_seven_conjectures().into_iter().filter(|f| f.applies_at(d)));
        }
    }
    Ok(forms)
}

pub fn check_vector(h: &HStarVector, opts: &CheckOptions) -> Result<CheckReport> {
    let d = h.dim();
    let s = h.degree();
    let ab = decompose(h);
    let mut entries = Vec::new();
    for f in applicable_forms(d as i64, s as i64, opts.include_conjectures)? {
        if !opts.families.is_empty() && !opts.families.contains(&f.family) {
            continue;
        }
        let slack = f.evaluate(h, &ab)?;
        entries.push(CheckEntry {
            family: f.family,
            label: f.label(),
            form: f.to_string(),
            holds: slack >= Q::from_integer(0.into()),
            slack,
        });
    }
    log::debug!("checked {} forms on {:?}", entries.len(), h.coeffs());
    Ok(CheckReport {
        h_star: h.coeffs().to_vec(),
        d,
        s,
        interior: h.has_interior_point(),
        decomposition: ab,
        entries,
    })
}

impl CheckEntry {
    pub fn slack_string(&self) -> String {
        fmt_q(&self.slack)
    }
}
