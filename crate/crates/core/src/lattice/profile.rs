//! Age profiles: how the non-zero elements of a box group distribute over the
//! classes `N(G,k,l)` (boundary-simplex convention) or `N(G,k,l)^a`,
//! `N(G,k,l)^b` (maximal-simplex convention with a distinguished apex).

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::box_group::{BoxElement, BoxGroup};
use crate::error::{Error, Result};

/// Which indexing the profile uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Convention {
    /// `G` is a `(d-1)`-simplex with `d` vertices; `d` is the coordinate
    /// count. `N(G,k,l)`: age `k + 2`, coage `d - 2 - l`, `0 <= k <= l <= d - 4`.
    Plain,
    /// `G` is a `d`-simplex with `d + 1` vertices, one of which (`apex`) is
    /// the interior point of the ambient polytope. An element lies on the
    /// boundary cone iff its apex coordinate vanishes. `N^a`: boundary, age
    /// `k + 2`, coage `d - 2 - l`; `N^b`: not boundary, age `k + 2`, coage
    /// `d - 1 - l`; both with `0 <= k <= l <= d - 3`.
    Split { apex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementClass {
    Plain(i64, i64),
    A(i64, i64),
    B(i64, i64),
}

impl Convention {
    /// Profile dimension `d` for a group with `coords` coordinates.
    pub fn dim(&self, coords: usize) -> i64 {
        match self {
            Convention::Plain => coords as i64,
            Convention::Split { .. } => coords as i64 - 1,
        }
    }

    /// Class of a non-identity element, or `None` if it falls outside the
    /// defined index range.
    pub fn classify(&self, e: &BoxElement) -> Option<ElementClass> {
        if e.is_identity() {
            return None;
        }
        let d = self.dim(e.numerators.len());
        let k = e.age as i64 - 2;
        match *self {
            Convention::Plain => {
                let l = d - 2 - e.coage as i64;
                (0 <= k && k <= l && l <= d - 4).then_some(ElementClass::Plain(k, l))
            }
            Convention::Split { apex } => {
                let on_boundary = e.numerators[apex] == 0;
                let l = if on_boundary { d - 2 } else { d - 1 } - e.coage as i64;
                if !(0 <= k && k <= l && l <= d - 3) {
                    return None;
                }
                Some(if on_boundary {
                    ElementClass::A(k, l)
                } else {
                    ElementClass::B(k, l)
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgeProfile {
    pub d: i64,
    pub convention: Convention,
    pub counts_plain: BTreeMap<(i64, i64), usize>,
    pub counts_a: BTreeMap<(i64, i64), usize>,
    pub counts_b: BTreeMap<(i64, i64), usize>,
    /// Non-identity elements outside every class (only possible in
    /// non-strict mode, for non-terminal input).
    pub unclassified: usize,
}

fn lookup(m: &BTreeMap<(i64, i64), usize>, k: i64, l: i64) -> usize {
    m.get(&(k, l)).copied().unwrap_or(0)
}

impl AgeProfile {
    /// `|N(G,k,l)|`; zero for indices outside the defined range, including
    /// negative ones.
    pub fn plain(&self, k: i64, l: i64) -> usize {
        lookup(&self.counts_plain, k, l)
    }

    pub fn a(&self, k: i64, l: i64) -> usize {
        lookup(&self.counts_a, k, l)
    }

    pub fn b(&self, k: i64, l: i64) -> usize {
        lookup(&self.counts_b, k, l)
    }

    pub fn total(&self) -> usize {
        self.counts_plain.values().sum::<usize>()
            + self.counts_a.values().sum::<usize>()
            + self.counts_b.values().sum::<usize>()
    }

    /// The negation symmetries `-N(k,l) = N(d-4-l, d-4-k)`,
    /// `-N^a(k,l) = N^a(d-4-l, d-4-k)` and `-N^b(k,l) = N^b(d-3-l, d-3-k)`
    /// at the level of counts.
    pub fn negation_symmetric(&self) -> bool {
        let d = self.d;
        let sym = |m: &BTreeMap<(i64, i64), usize>, off: i64| {
            m.iter().all(|(&(k, l), &c)| lookup(m, d - off - l, d - off - k) == c)
        };
        sym(&self.counts_plain, 4) && sym(&self.counts_a, 4) && sym(&self.counts_b, 3)
    }
}

/// Builds the profile. In strict mode a non-identity element of age below 2
/// (the group does not come from a lattice-free simplex) is an error;
/// otherwise it is logged and counted as unclassified.
pub fn age_profile(g: &BoxGroup, convention: Convention, strict: bool) -> Result<AgeProfile> {
    if let Convention::Split { apex } = convention {
        if apex >= g.coord_count() {
            return Err(Error::IndexOutOfRange(format!(
                "apex {apex} but only {} coordinates",
                g.coord_count()
            )));
        }
    }
    let mut p = AgeProfile {
        d: convention.dim(g.coord_count()),
        convention,
        counts_plain: BTreeMap::new(),
        counts_a: BTreeMap::new(),
        counts_b: BTreeMap::new(),
        unclassified: 0,
    };
    for (idx, e) in g.elements().iter().enumerate() {
        if e.is_identity() {
            continue;
        }
        if e.age < 2 {
            if strict {
                return Err(Error::NonTerminal { index: idx, age: e.age });
            }
            log::warn!("element {idx} has age {} < 2; input is not terminal", e.age);
        }
        match convention.classify(e) {
            Some(ElementClass::Plain(k, l)) => *p.counts_plain.entry((k, l)).or_default() += 1,
            Some(ElementClass::A(k, l)) => *p.counts_a.entry((k, l)).or_default() += 1,
            Some(ElementClass::B(k, l)) => *p.counts_b.entry((k, l)).or_default() += 1,
            None => p.unclassified += 1,
        }
    }
    Ok(p)
}

impl Serialize for AgeProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Count {
            k: i64,
            l: i64,
            count: usize,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            d: i64,
            convention: &'a Convention,
            counts_plain: Vec<Count>,
            counts_a: Vec<Count>,
            counts_b: Vec<Count>,
            unclassified: usize,
        }
        let list = |m: &BTreeMap<(i64, i64), usize>| m.iter().map(|(&(k, l), &count)| Count { k, l, count }).collect();
        Repr {
            d: self.d,
            convention: &self.convention,
            counts_plain: list(&self.counts_plain),
            counts_a: list(&self.counts_a),
            counts_b: list(&self.counts_b),
            unclassified: self.unclassified,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seven() -> BoxGroup {
        BoxGroup::from_cyclic(7, &[4, 4, 2, 1, 1, 1, 1]).unwrap()
    }

    #[test]
    fn trivial_group_has_empty_profile() {
        let g = BoxGroup::from_vertices(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let p = age_profile(&g, Convention::Plain, true).unwrap();
        assert_eq!(p.total(), 0);
    }

    #[test]
    fn order_seven_plain_profile() {
        let g = seven();
        let p = age_profile(&g, Convention::Plain, true).unwrap();
        // all coordinates are non-zero for j != 0, so coage = 7 - age
        // ages 2,2,4,3,5,5 -> (k,l) = (0,0),(0,0),(2,2),(1,1),(3,3),(3,3)
        assert_eq!(p.d, 7);
        assert_eq!(p.plain(0, 0), 2);
        assert_eq!(p.plain(1, 1), 1);
        assert_eq!(p.plain(2, 2), 1);
        assert_eq!(p.plain(3, 3), 2);
        assert_eq!(p.total() + p.unclassified, g.order() - 1);
        assert_eq!(p.unclassified, 0);
        assert!(p.negation_symmetric());
        assert_eq!(p.plain(-1, 0), 0);
    }

    #[test]
    fn order_seven_split_profiles() {
        let g = seven();
        for apex in 0..7 {
            let p = age_profile(&g, Convention::Split { apex }, true).unwrap();
            assert_eq!(p.d, 6);
            assert_eq!(p.total(), 6);
            assert!(p.negation_symmetric());
            // no coordinate ever vanishes, so everything lands in N^b
            assert!(p.counts_a.is_empty());
        }
    }

    #[test]
    fn strict_mode_rejects_age_one() {
        let g = BoxGroup::from_cyclic(3, &[1, 2]).unwrap();
        assert!(matches!(
            age_profile(&g, Convention::Plain, true),
            Err(Error::NonTerminal { age: 1, .. })
        ));
        let p = age_profile(&g, Convention::Plain, false).unwrap();
        assert_eq!(p.unclassified, 2);
    }
}
