//! The smallest dimension at which a superA inequality says something the
//! general inequalities and the other superA inequalities do not.

use crate::error::Result;
use crate::rational::qi;

use super::families::{all_super_a, baseline_inequalities};
use super::farkas::is_implied;
use super::forms::{ab_to_h_form, Family, LinearFormAB, LinearFormH, Sym};

fn same_item(a: &LinearFormAB, b: &LinearFormAB) -> bool {
    a.family == b.family && a.params == b.params && a.vertices == b.vertices
}

/// The forms an item is compared against at dimension `d`: `h*_0 >= 0`,
/// the a-part of the general inequalities, and every other superA form.
pub fn comparison_set(item: &LinearFormAB, d: i64) -> Result<Vec<LinearFormH>> {
    let du = d as usize;
    let a_only = |f: &LinearFormAB| f.lhs.iter().chain(f.rhs.iter()).all(|(s, _)| matches!(s, Sym::A(_)));
    let mut nonneg = LinearFormH::zero(du, du);
    nonneg.coeffs[0] = qi(1);
    let mut out = vec![nonneg];
    for f in baseline_inequalities(d, false)
        .iter()
        .filter(|f| f.family == Family::Baseline && a_only(f))
    {
        out.push(ab_to_h_form(f, du, du)?);
    }
    for f in all_super_a(d)?.iter().filter(|f| !same_item(f, item)) {
        out.push(ab_to_h_form(f, du, du)?);
    }
    Ok(out)
}

/// Whether the item is implied at `d` by [`comparison_set`].
pub fn is_redundant_at(item: &LinearFormAB, d: i64) -> Result<bool> {
    let du = d as usize;
    let target = ab_to_h_form(item, du, du)?;
    is_implied(&target, &comparison_set(item, d)?)
}

/// Smallest `d` in `[item.d_min, cap]` at which the item is not implied,
/// or `None` when it is implied throughout.
pub fn minimal_novel_dimension(item: &LinearFormAB, cap: i64) -> Result<Option<i64>> {
    for d in item.d_min..=cap {
        if !is_redundant_at(item, d)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
