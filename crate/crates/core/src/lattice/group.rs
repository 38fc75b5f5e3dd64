//! Finite abelian groups `Z/n_1 x ... x Z/n_k` with elements addressed by a
//! mixed-radix index (last factor varies fastest, so index order is the
//! lexicographic order of coordinate tuples).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    /// Factors equal to 1 are dropped; the empty list is the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::Precondition("infinite cyclic factor".into()));
        }
        Ok(Self {
            factors: factors.into_iter().filter(|&n| n > 1).collect(),
        })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn coords(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        out
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + (c % n) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0usize;
        let mut scale = 1usize;
        for &n in self.factors.iter().rev() {
            let n = n as usize;
            let digit = (a % n + b % n) % n;
            out += digit * scale;
            scale *= n;
            a /= n;
            b /= n;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| (n - x) % n)
            .collect();
        self.index(&c)
    }

    pub fn zero(&self) -> usize {
        0
    }
}
