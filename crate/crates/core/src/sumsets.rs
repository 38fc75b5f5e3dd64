//! Sumsets in finite abelian groups, the Kemperman–Scherk bound, and checks of
//! the containment and counting lemmas for the age classes of a box group.
//!
//! The lemma checks are theorems about lattice-free simplices; a `false`
//! result on a terminal group means the age or class bookkeeping is wrong.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{age_profile, AbelianGroup, AgeProfile, BoxGroup, Convention, ElementClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSubset {
    pub ambient: AbelianGroup,
    pub members: BTreeSet<usize>,
}

impl GroupSubset {
    pub fn new(ambient: AbelianGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&m) = members.iter().next_back() {
            if m >= ambient.order() {
                return Err(Error::IndexOutOfRange(format!(
                    "element {m} in a group of order {}",
                    ambient.order()
                )));
            }
        }
        Ok(Self { ambient, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn negated(&self) -> GroupSubset {
        GroupSubset {
            ambient: self.ambient.clone(),
            members: self.members.iter().map(|&x| self.ambient.neg(x)).collect(),
        }
    }
}

pub fn sumset(a: &GroupSubset, b: &GroupSubset) -> Result<GroupSubset> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch);
    }
    let g = &a.ambient;
    let members = a
        .members
        .iter()
        .flat_map(|&x| b.members.iter().map(move |&y| g.add(x, y)))
        .collect();
    Ok(GroupSubset {
        ambient: g.clone(),
        members,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KsVerdict {
    /// `A ∩ (-B) = {0}`.
    pub hypothesis_holds: bool,
    /// `|A + B| >= |A| + |B| - 1`.
    pub bound_holds: bool,
    pub size_a: usize,
    pub size_b: usize,
    pub size_sum: usize,
}

impl KsVerdict {
    /// The theorem: hypothesis implies bound.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.bound_holds
    }
}

pub fn kemperman_scherk_check(a: &GroupSubset, b: &GroupSubset) -> Result<KsVerdict> {
    let zero = a.ambient.zero();
    if !a.contains(zero) || !b.contains(zero) {
        return Err(Error::Precondition("both sets must contain 0".into()));
    }
    let sum = sumset(a, b)?;
    let neg_b = b.negated();
    let hypothesis_holds = a.members.intersection(&neg_b.members).eq([zero].iter());
    Ok(KsVerdict {
        hypothesis_holds,
        bound_holds: sum.len() + 1 >= a.len() + b.len(),
        size_a: a.len(),
        size_b: b.len(),
        size_sum: sum.len(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KsSweep {
    pub pairs: usize,
    pub hypothesis_pairs: usize,
    pub violations: usize,
}

/// Every pair of subsets of `Z/n` containing 0, for `1 <= n <= n_max`.
pub fn exhaustive_kemperman_scherk(n_max: u64) -> KsSweep {
    let mut out = KsSweep::default();
    for n in 1..=n_max {
        let g = AbelianGroup::cyclic(n).expect("positive order");
        let ord = g.order();
        // subsets containing 0 <-> bitmasks over the other ord - 1 elements
        let subsets: Vec<GroupSubset> = (0u64..1 << (ord - 1))
            .map(|mask| {
                let members = std::iter::once(0).chain((1..ord).filter(|&x| mask >> (x - 1) & 1 == 1));
                GroupSubset::new(g.clone(), members).expect("in range")
            })
            .collect();
        for a in &subsets {
            for b in &subsets {
                let v = kemperman_scherk_check(a, b).expect("0 in both");
                out.pairs += 1;
                out.hypothesis_pairs += v.hypothesis_holds as usize;
                out.violations += (!v.consistent()) as usize;
            }
        }
    }
    out
}

/// Dimension bound used by the keyD check: `d >= 2r' + r + offset`. The
/// lemma is stated with offset 7; its proof only needs 5.
pub const KEY_D_OFFSET: i64 = 7;
pub const KEY_D_MIN_OFFSET: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KeyD4Variant {
    A,
    B,
    C,
}

impl std::str::FromStr for KeyD4Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            _ => Err(Error::Parse(format!("unknown keyD4 variant {s:?}"))),
        }
    }
}

/// A box group together with the class of every element under one
/// convention, so many lemma instances can be checked cheaply.
#[derive(Clone, Debug)]
pub struct LemmaContext {
    group: BoxGroup,
    classes: Vec<Option<ElementClass>>,
    profile: AgeProfile,
}

fn flight_bound(k: i64, l: i64, m: i64, n: i64) -> (i64, i64) {
    (k + m + 2, (l + m).min(k + n) + 2)
}

impl LemmaContext {
    pub fn new(group: BoxGroup, convention: Convention, strict: bool) -> Result<Self> {
        let profile = age_profile(&group, convention, strict)?;
        let classes = group.elements().iter().map(|e| convention.classify(e)).collect();
        Ok(Self {
            group,
            classes,
            profile,
        })
    }

    pub fn profile(&self) -> &AgeProfile {
        &self.profile
    }

    pub fn group(&self) -> &BoxGroup {
        &self.group
    }

    pub fn d(&self) -> i64 {
        self.profile.d
    }

    fn members(&self, class: ElementClass) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i] == Some(class))
            .collect()
    }

    fn require(&self, plain: bool) -> Result<()> {
        match (plain, self.profile.convention) {
            (true, Convention::Plain) | (false, Convention::Split { .. }) => Ok(()),
            _ => Err(Error::Precondition(format!(
                "lemma needs the {} convention",
                if plain { "plain" } else { "split" }
            ))),
        }
    }

    /// `(N(k,l) + N(m,n)) \ {0}` lies in the classes `N(p,q)` with
    /// `p <= k+m+2` and `q <= min(l+m, k+n)+2`.
    pub fn flight(&self, k: i64, l: i64, m: i64, n: i64) -> Result<bool> {
        self.require(true)?;
        let (pmax, qmax) = flight_bound(k, l, m, n);
        let g = self.group.group();
        let left = self.members(ElementClass::Plain(k, l));
        let right = self.members(ElementClass::Plain(m, n));
        Ok(left.iter().all(|&v| {
            right.iter().all(|&w| {
                let s = g.add(v, w);
                s == 0 || matches!(self.classes[s], Some(ElementClass::Plain(p, q)) if p <= pmax && q <= qmax)
            })
        }))
    }

    /// All instances of the plain flight lemma at once.
    pub fn flight_all(&self) -> Result<bool> {
        self.require(true)?;
        let g = self.group.group();
        for v in 0..self.classes.len() {
            let Some(ElementClass::Plain(k, l)) = self.classes[v] else {
                continue;
            };
            for w in 0..self.classes.len() {
                let Some(ElementClass::Plain(m, n)) = self.classes[w] else {
                    continue;
                };
                let s = g.add(v, w);
                let (pmax, qmax) = flight_bound(k, l, m, n);
                let ok = s == 0 || matches!(self.classes[s], Some(ElementClass::Plain(p, q)) if p <= pmax && q <= qmax);
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The three containments for boundary (`a`) and interior (`b`) classes:
    /// `a + a` lands in `a`, `a + b` in `b`, and `b + b` in `a` shifted by one
    /// or in `b`, all within the flight bounds.
    pub fn flight2_all(&self) -> Result<bool> {
        self.require(false)?;
        let g = self.group.group();
        for v in 0..self.classes.len() {
            let Some(cv) = self.classes[v] else { continue };
            for w in 0..self.classes.len() {
                let Some(cw) = self.classes[w] else { continue };
                let s = g.add(v, w);
                if s == 0 {
                    continue;
                }
                let ((kv, lv, av), (kw, lw, aw)) = (split_parts(cv), split_parts(cw));
                let (pmax, qmax) = flight_bound(kv, lv, kw, lw);
                let ok = match (av, aw, self.classes[s]) {
                    (true, true, Some(ElementClass::A(p, q))) => p <= pmax && q <= qmax,
                    (true, false, Some(ElementClass::B(p, q))) | (false, true, Some(ElementClass::B(p, q))) => {
                        p <= pmax && q <= qmax
                    }
                    (false, false, Some(ElementClass::A(p, q))) => p < pmax && q < qmax,
                    (false, false, Some(ElementClass::B(p, q))) => p <= pmax && q <= qmax,
                    _ => false,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_key_ranges(r: i64, rp: i64, i: i64, j: i64) -> Result<()> {
        if !(0 <= r && r <= rp) {
            return Err(Error::Precondition(format!("need 0 <= r <= r', got ({r},{rp})")));
        }
        if !(0 <= i && i <= r && 0 <= j && j <= r + rp - i) {
            return Err(Error::Precondition(format!("(i,j) = ({i},{j}) out of range")));
        }
        Ok(())
    }

    /// Returns `(lhs, rhs)` of the keyD counting inequality.
    pub fn key_d_sides(&self, r: i64, rp: i64, i: i64, j: i64, offset: i64) -> Result<(usize, usize)> {
        self.require(true)?;
        Self::check_key_ranges(r, rp, i, j)?;
        if offset < KEY_D_MIN_OFFSET {
            return Err(Error::Precondition(format!("offset {offset} below {KEY_D_MIN_OFFSET}")));
        }
        let d = self.d();
        if d < 2 * rp + r + offset {
            return Err(Error::Precondition(format!("d = {d} < 2r' + r + {offset}")));
        }
        let n = |k, l| self.profile.plain(k, l);
        let lhs: usize = (0..=i).map(|k| (0..=i + j - k).map(|l| n(k, l)).sum::<usize>()).sum();
        let rhs: usize = (0..=i + j + 1).map(|q| n(rp + 1, rp + 1 + q)).sum::<usize>()
            + (0..=i)
                .map(|p| (0..=i + j - p).map(|q| n(rp + 2 + p, rp + 2 + q)).sum::<usize>())
                .sum::<usize>();
        Ok((lhs, rhs))
    }

    pub fn key_d(&self, r: i64, rp: i64, i: i64, j: i64, offset: i64) -> Result<bool> {
        self.key_d_sides(r, rp, i, j, offset).map(|(l, r)| l <= r)
    }

    /// Returns `(lhs, rhs)` of the keyD4 counting inequality of the given variant.
    pub fn key_d4_sides(
        &self,
        variant: KeyD4Variant,
        r: i64,
        rp: i64,
        alpha: i64,
        i: i64,
        j: i64,
    ) -> Result<(usize, usize)> {
        self.require(false)?;
        Self::check_key_ranges(r, rp, i, j)?;
        let d = self.d();
        let need = match variant {
            KeyD4Variant::A => 2 * rp + r + 7,
            KeyD4Variant::B => 2 * rp + r + 6,
            KeyD4Variant::C => 2 * rp + r + alpha + 6,
        };
        if d < need {
            return Err(Error::Precondition(format!("d = {d} below the bound {need}")));
        }
        if variant != KeyD4Variant::B && !(0 <= alpha && alpha <= r + 1) {
            return Err(Error::Precondition(format!("alpha = {alpha} outside [0, r+1]")));
        }
        let a = |k, l| self.profile.a(k, l);
        let b = |k, l| self.profile.b(k, l);
        let tri = |f: &dyn Fn(i64, i64) -> usize| -> usize {
            (0..=i).map(|k| (0..=i + j - k).map(|l| f(k, l)).sum::<usize>()).sum()
        };
        Ok(match variant {
            KeyD4Variant::A => {
                let lhs = tri(&|k, l| a(k, l) + b(k - alpha, l - alpha));
                let rhs = (0..=i + j + 1)
                    .map(|q| a(rp + 1, rp + 1 + q) + b(rp + 1 - alpha, rp + 1 + q - alpha))
                    .sum::<usize>()
                    + tri(&|p, q| a(rp + 2 + p, rp + 2 + q) + b(rp + 2 - alpha + p, rp + 2 - alpha + q));
                (lhs, rhs)
            }
            KeyD4Variant::B => {
                let lhs = tri(&|k, l| a(k - 1, l - 1) + b(k, l));
                let rhs = (0..=i + j + 1).map(|q| b(rp + 1, rp + 1 + q)).sum::<usize>()
                    + tri(&|p, q| a(rp + 1 + p, rp + 1 + q) + b(rp + 2 + p, rp + 2 + q));
                (lhs, rhs)
            }
            KeyD4Variant::C => {
                let lhs = tri(&|k, l| b(k, l));
                let first: usize = (alpha..=i)
                    .map(|p| (0..=i + j - p).map(|q| a(rp + 1 + p, rp + 1 + q)).sum::<usize>())
                    .sum();
                let second: usize = (0..=alpha)
                    .map(|p| {
                        (0..=alpha + i + j + 1)
                            .map(|q| b(rp + 1 + p, rp + 1 + q))
                            .sum::<usize>()
                    })
                    .sum();
                let third = tri(&|p, q| b(rp + alpha + 2 + p, rp + alpha + 2 + q));
                (lhs, first + second + third)
            }
        })
    }

    pub fn key_d4(&self, variant: KeyD4Variant, r: i64, rp: i64, alpha: i64, i: i64, j: i64) -> Result<bool> {
        self.key_d4_sides(variant, r, rp, alpha, i, j).map(|(l, r)| l <= r)
    }
}

fn split_parts(c: ElementClass) -> (i64, i64, bool) {
    match c {
        ElementClass::A(k, l) => (k, l, true),
        ElementClass::B(k, l) => (k, l, false),
        ElementClass::Plain(k, l) => (k, l, true),
    }
}

/// Plain-convention flight check on a single group.
pub fn verify_flight(g: &BoxGroup, k: i64, l: i64, m: i64, n: i64) -> Result<bool> {
    LemmaContext::new(g.clone(), Convention::Plain, true)?.flight(k, l, m, n)
}

/// Plain-convention keyD check with the lemma's bound `d >= 2r' + r + 7`.
pub fn verify_key_d(g: &BoxGroup, r: i64, rp: i64, i: i64, j: i64) -> Result<bool> {
    LemmaContext::new(g.clone(), Convention::Plain, true)?.key_d(r, rp, i, j, KEY_D_OFFSET)
}

pub fn verify_key_d4(
    g: &BoxGroup,
    apex: usize,
    variant: KeyD4Variant,
    r: i64,
    rp: i64,
    alpha: i64,
    i: i64,
    j: i64,
) -> Result<bool> {
    LemmaContext::new(g.clone(), Convention::Split { apex }, true)?.key_d4(variant, r, rp, alpha, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64, xs: &[usize]) -> GroupSubset {
        GroupSubset::new(AbelianGroup::cyclic(n).unwrap(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn sumset_examples() {
        let b = zn(5, &[0, 2, 3]);
        assert_eq!(sumset(&zn(5, &[0]), &b).unwrap(), b);
        assert_eq!(sumset(&zn(5, &[0, 1]), &zn(5, &[0, 1])).unwrap(), zn(5, &[0, 1, 2]));
        assert_eq!(
            sumset(&zn(6, &[0, 2, 4]), &zn(6, &[0, 3])).unwrap(),
            zn(6, &[0, 1, 2, 3, 4, 5])
        );
        assert!(matches!(
            sumset(&zn(5, &[0]), &zn(6, &[0])),
            Err(Error::AmbientMismatch)
        ));
    }

    #[test]
    fn ks_examples() {
        let v = kemperman_scherk_check(&zn(3, &[0]), &zn(3, &[0])).unwrap();
        assert!(v.hypothesis_holds && v.bound_holds);
        let v = kemperman_scherk_check(&zn(8, &[0, 2]), &zn(8, &[0, 3])).unwrap();
        assert!(v.hypothesis_holds);
        assert_eq!(v.size_sum, 4);
        assert!(v.bound_holds);
        let v = kemperman_scherk_check(&zn(4, &[0, 1]), &zn(4, &[0, 3])).unwrap();
        assert!(!v.hypothesis_holds);
        assert!(kemperman_scherk_check(&zn(4, &[1]), &zn(4, &[0])).is_err());
    }

    #[test]
    fn ks_exhaustive_small() {
        let s = exhaustive_kemperman_scherk(6);
        assert_eq!(s.violations, 0);
        assert!(s.hypothesis_pairs > 0);
    }

    #[test]
    fn flight_on_order_seven() {
        let g = BoxGroup::from_cyclic(7, &[4, 4, 2, 1, 1, 1, 1]).unwrap();
        let ctx = LemmaContext::new(g.clone(), Convention::Plain, true).unwrap();
        assert!(ctx.flight_all().unwrap());
        for k in 0..4 {
            for l in k..4 {
                for m in 0..4 {
                    for n in m..4 {
                        assert!(verify_flight(&g, k, l, m, n).unwrap());
                    }
                }
            }
        }
        // empty classes are vacuous
        assert!(ctx.flight(0, 3, 0, 3).unwrap());
    }

    #[test]
    fn key_d_preconditions() {
        let g = BoxGroup::from_cyclic(7, &[4, 4, 2, 1, 1, 1, 1]).unwrap();
        // d = 7 is enough for (0,0)
        assert!(verify_key_d(&g, 0, 0, 0, 0).unwrap());
        assert!(verify_key_d(&g, 0, 1, 0, 0).is_err());
        let non_terminal = BoxGroup::from_cyclic(3, &[1, 2, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(matches!(
            verify_key_d(&non_terminal, 0, 1, 0, 0),
            Err(Error::NonTerminal { .. })
        ));
        let trivial = BoxGroup::from_cyclic(1, &[0; 9]).unwrap();
        let ctx = LemmaContext::new(trivial, Convention::Plain, true).unwrap();
        assert_eq!(ctx.key_d_sides(0, 1, 0, 1, KEY_D_OFFSET).unwrap(), (0, 0));
    }

    #[test]
    fn key_d4_trivial_and_bounds() {
        let trivial = BoxGroup::from_cyclic(1, &[0; 9]).unwrap();
        let ctx = LemmaContext::new(trivial, Convention::Split { apex: 0 }, true).unwrap();
        assert_eq!(ctx.key_d4_sides(KeyD4Variant::B, 0, 1, 0, 0, 1).unwrap(), (0, 0));
        assert!(ctx.key_d4(KeyD4Variant::A, 0, 1, 0, 0, 0).is_err());
        assert!(ctx.key_d4(KeyD4Variant::C, 0, 0, 2, 0, 0).is_err());
        assert!(ctx.key_d4(KeyD4Variant::C, 0, 0, 1, 0, 0).unwrap());
    }
}
