//! Terminal cyclic quotient groups used as test material for the sumset
//! lemmas: `Z/n` acting with weights `(w_1, ..., w_k)`, `sum w = 0 mod n`,
//! `gcd(n, w) = 1`, and every non-zero element of age at least 2.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::box_group::BoxGroup;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclicSample {
    pub n: u64,
    pub weights: Vec<u64>,
}

impl CyclicSample {
    pub fn box_group(&self) -> BoxGroup {
        BoxGroup::from_cyclic(self.n, &self.weights).expect("samples satisfy the cyclic preconditions")
    }
}

fn is_terminal(n: u64, w: &[u64]) -> bool {
    (1..n).all(|j| w.iter().map(|&x| (j * x) % n).sum::<u64>() >= 2 * n)
}

/// The weight multiset is the lexicographically smallest among its images
/// under the units of `Z/n` (each group is listed once up to the choice of
/// generator).
fn is_canonical(n: u64, w: &[u64]) -> bool {
    let mut img = vec![0u64; w.len()];
    for u in 2..n {
        if u.gcd(&n) != 1 {
            continue;
        }
        for (slot, &x) in img.iter_mut().zip(w) {
            *slot = (u * x) % n;
        }
        img.sort_unstable();
        if img.as_slice() < w {
            return false;
        }
    }
    true
}

fn weights_for(n: u64, count: usize) -> Vec<Vec<u64>> {
    fn rec(n: u64, count: usize, lo: u64, sum: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() + 1 == count {
            // the last weight is forced by the sum condition
            let last = (n - sum % n) % n;
            if last >= lo {
                cur.push(last);
                let g = cur.iter().fold(n, |acc, &x| acc.gcd(&x));
                if g == 1 && is_terminal(n, cur) && is_canonical(n, cur) {
                    out.push(cur.clone());
                }
                cur.pop();
            }
            return;
        }
        for w in lo..n {
            cur.push(w);
            rec(n, count, w, sum + w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if count > 0 {
        rec(n, count, 0, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// All terminal cyclic samples with `weight_count` weights and `2 <= n <= n_max`,
/// ordered by `(n, weights)`.
pub fn terminal_cyclic_weights(weight_count: usize, n_max: u64) -> Vec<CyclicSample> {
    let mut out: Vec<CyclicSample> = (2..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            weights_for(n, weight_count)
                .into_iter()
                .map(move |weights| CyclicSample { n, weights })
        })
        .collect();
    out.sort();
    out
}

pub fn terminal_cyclic_samples(weight_count: usize, n_max: u64) -> Vec<BoxGroup> {
    terminal_cyclic_weights(weight_count, n_max)
        .iter()
        .map(CyclicSample::box_group)
        .collect()
}
