use num_bigint::BigInt;
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use hstar::inequalities::check::applicable_forms;
use hstar::inequalities::{ab_to_h_form, check_vector, CheckOptions, Sym};
use hstar::lattice::{box_group, parallelepiped_hstar, payne_hstar, AbelianGroup, PayneSimplex};
use hstar::polynomials::{binomial, ehrhart_values, hstar_from_values};
use hstar::sumsets::{sumset, GroupSubset};
use hstar::{decompose, recompose, HStarVector};

fn hstar_vector() -> impl Strategy<Value = HStarVector> {
    vec(0i64..20, 1..12).prop_filter_map("not an h*-vector", |tail| {
        let mut h = vec![1];
        h.extend(tail);
        HStarVector::new(h).ok()
    })
}

fn palindromic() -> impl Strategy<Value = HStarVector> {
    (vec(0i64..9, 0..6), any::<bool>()).prop_filter_map("not an h*-vector", |(mid, odd)| {
        let mut half = vec![1];
        half.extend(mid);
        let mut h = half.clone();
        h.extend(half.iter().rev().skip(usize::from(odd)));
        HStarVector::new(h).ok()
    })
}

fn alpha() -> impl Strategy<Value = PayneSimplex> {
    vec(1u64..7, 2..6).prop_filter_map("weights share a factor", |a| PayneSimplex::new(a).ok())
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    btree_set(0..n, 0..=n).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn decompose_roundtrips_with_palindromic_parts(h in hstar_vector()) {
        let ab = decompose(&h);
        prop_assert_eq!(ab.a.len(), h.dim() + 1);
        prop_assert_eq!(ab.b.len(), h.degree());
        prop_assert!(ab.a.iter().eq(ab.a.iter().rev()));
        prop_assert!(ab.b.iter().eq(ab.b.iter().rev()));
        prop_assert_eq!(recompose(&ab).unwrap(), h);
    }

    #[test]
    fn palindromic_vectors_have_no_b_part(h in palindromic()) {
        let ab = decompose(&h);
        prop_assert!(ab.b.iter().all(|&x| x == 0));
        prop_assert_eq!(&ab.a[..], h.coeffs());
        // with b = 0 only the a-part of each inequality matters
        let rep = check_vector(&h, &CheckOptions::default()).unwrap();
        let forms = applicable_forms(h.dim() as i64, h.degree() as i64, false).unwrap();
        prop_assert_eq!(rep.entries.len(), forms.len());
        for (e, f) in rep.entries.iter().zip(&forms) {
            let mut a_only = f.clone();
            a_only.lhs.0.retain(|s, _| !matches!(s, Sym::B(_)));
            a_only.rhs.0.retain(|s, _| !matches!(s, Sym::B(_)));
            prop_assert_eq!(&e.slack, &a_only.evaluate(&h, &ab).unwrap());
        }
    }

    #[test]
    fn ehrhart_series_recovers_hstar(h in hstar_vector(), extra in 0usize..6) {
        let d = h.dim();
        let m_max = d + extra;
        let f = ehrhart_values(&h, m_max);
        // coefficients of sum f(m) t^m * (1 - t)^(d+1) up to t^m_max
        for k in 0..=m_max {
            let c: BigInt = (0..=k.min(d + 1))
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign) * binomial(d as i64 + 1, j as i64) * &f[k - j]
                })
                .sum();
            prop_assert_eq!(c, BigInt::from(h.get(k)));
        }
        let back = hstar_from_values(d, &f).unwrap();
        prop_assert!(back.iter().zip(h.coeffs()).all(|(x, &y)| *x == BigInt::from(y)));
    }

    #[test]
    fn payne_hstar_has_volume_sum_and_matches_box(p in alpha()) {
        let h = payne_hstar(&p);
        prop_assert_eq!(h.total() as u64, p.weight_sum());
        let g = box_group(&p);
        prop_assert_eq!(g.order() as u64, p.weight_sum());
        prop_assert_eq!(parallelepiped_hstar(&g), h);
        for e in g.elements() {
            prop_assert_eq!(e.age + e.coage, e.nonzero_coords() as u64);
        }
    }

    #[test]
    fn sumset_laws(n in 1usize..13, a in subset(12), b in subset(12), c in subset(12)) {
        let g = AbelianGroup::cyclic(n as u64).unwrap();
        let mk = |s: &[usize]| GroupSubset::new(g.clone(), s.iter().map(|x| x % n)).unwrap();
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        let ab = sumset(&a, &b).unwrap();
        prop_assert_eq!(&ab, &sumset(&b, &a).unwrap());
        prop_assert!(ab.len() <= a.len() * b.len());
        let left = sumset(&ab, &c).unwrap();
        let right = sumset(&a, &sumset(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn generated_forms_are_balanced() {
    for d in 1..=14i64 {
        for s in 1..=d {
            for f in applicable_forms(d, s, true).unwrap() {
                let h = ab_to_h_form(&f, d as usize, s as usize).unwrap();
                assert!(h.is_balanced(), "{} at d = {d}, s = {s}", f.label());
            }
        }
    }
}
