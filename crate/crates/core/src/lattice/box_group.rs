//! The group `N(G)` of a lattice simplex: the ambient lattice modulo the
//! sublattice spanned by the cone generators `(v_i, 1)`. Every element is
//! stored with its fractional coordinates in the generators, its age and its
//! coage.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::group::AbelianGroup;
use super::snf::{determinant, smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::polynomials::HStarVector;
use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxElement {
    /// Numerators of the fractional coordinates over the group's common
    /// denominator; every entry lies in `[0, denominator)`.
    pub numerators: Vec<u64>,
    pub age: u64,
    pub coage: u64,
    /// Some coordinate vanishes and the element is not the identity.
    pub boundary: bool,
}

impl BoxElement {
    pub fn nonzero_coords(&self) -> usize {
        self.numerators.iter().filter(|&&x| x != 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.numerators.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxGroup {
    group: AbelianGroup,
    denominator: u64,
    elements: Vec<BoxElement>,
}

impl BoxGroup {
    /// `relations` is square and non-singular. Its first `cone_rows` rows are
    /// the cone generators (last entry 1); any remaining rows are extra
    /// relations of the ambient lattice (last entry 0), e.g. `(alpha, 0)` for
    /// the lattice `Z^(d+1) / (alpha)`.
    pub fn from_relations(relations: &IntMatrix, cone_rows: usize) -> Result<Self> {
        let n = relations.len();
        if n == 0 || relations.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition(
                "relation matrix must be square and non-empty".into(),
            ));
        }
        if cone_rows == 0 || cone_rows > n {
            return Err(Error::Precondition(format!("cone_rows = {cone_rows} out of range")));
        }
        for (i, row) in relations.iter().enumerate() {
            let want = if i < cone_rows { 1 } else { 0 };
            if row[n - 1] != BigInt::from(want) {
                return Err(Error::Precondition(format!("row {i} must have last coordinate {want}")));
            }
        }
        if determinant(relations).is_zero() {
            return Err(Error::Singular);
        }
        let snf = smith_normal_form(relations);
        let diag: Vec<u64> = (0..n)
            .map(|i| {
                snf.d[i][i]
                    .to_u64()
                    .ok_or_else(|| Error::Unsupported("group too large".into()))
            })
            .collect::<Result<_>>()?;
        let group = AbelianGroup::new(diag.clone())?;
        let denominator = *diag.last().unwrap_or(&1);

        // beta = y D^{-1} U restricted to the cone columns, over `denominator`.
        // Only rows of U with a non-trivial factor matter.
        let active: Vec<usize> = (0..n).filter(|&i| diag[i] > 1).collect();
        let scaled: Vec<Vec<u128>> = active
            .iter()
            .map(|&i| {
                let di = BigInt::from(diag[i]);
                let step = (denominator / diag[i]) as u128;
                (0..cone_rows)
                    .map(|j| snf.u[i][j].mod_floor(&di).to_u128().unwrap() * step)
                    .collect()
            })
            .collect();

        let den = denominator as u128;
        let elements = (0..group.order())
            .map(|idx| {
                let y = group.coords(idx);
                let numerators: Vec<u64> = (0..cone_rows)
                    .map(|j| {
                        let s: u128 = y.iter().zip(&scaled).map(|(&yi, row)| yi as u128 * row[j]).sum();
                        (s % den) as u64
                    })
                    .collect();
                make_element(numerators, denominator)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            group,
            denominator,
            elements,
        })
    }

    /// Square generator matrix with rows `(v_i, 1)`.
    pub fn from_generators(generators: &[Vec<i64>]) -> Result<Self> {
        let m: IntMatrix = generators
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_relations(&m, generators.len())
    }

    /// Full-dimensional simplex from its `n + 1` vertices in `Z^n`.
    pub fn from_vertices(vertices: &[Vec<i64>]) -> Result<Self> {
        let dim = vertices.first().map_or(0, |v| v.len());
        if vertices.len() != dim + 1 || vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::Precondition(format!(
                "need {} vertices of length {dim}, got {}",
                dim + 1,
                vertices.len()
            )));
        }
        let gens: Vec<Vec<i64>> = vertices
            .iter()
            .map(|v| v.iter().copied().chain([1]).collect())
            .collect();
        Self::from_generators(&gens)
    }

    /// The cyclic group generated by `(1/n)(w_1, ..., w_k)`; needs
    /// `gcd(n, w) = 1` and `n | sum(w)` so that ages are integers.
    pub fn from_cyclic(n: u64, weights: &[u64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let g = weights.iter().fold(n, |acc, &w| acc.gcd(&(w % n)));
        if g != 1 {
            return Err(Error::Precondition(format!("gcd(n, weights) = {g}, expected 1")));
        }
        if weights.iter().sum::<u64>() % n != 0 {
            return Err(Error::Precondition("sum of weights must be divisible by n".into()));
        }
        let group = AbelianGroup::cyclic(n)?;
        let elements = (0..n)
            .map(|j| make_element(weights.iter().map(|&w| (j * w) % n).collect(), n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            group,
            denominator: n,
            elements,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Non-trivial invariant factors.
    pub fn diagonal(&self) -> &[u64] {
        self.group.factors()
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn coord_count(&self) -> usize {
        self.elements[0].numerators.len()
    }

    pub fn elements(&self) -> &[BoxElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &BoxElement {
        &self.elements[idx]
    }

    pub fn coords(&self, idx: usize) -> Vec<Q> {
        let den = BigInt::from(self.denominator);
        self.elements[idx]
            .numerators
            .iter()
            .map(|&x| Q::new(BigInt::from(x), den.clone()))
            .collect()
    }
}

fn make_element(numerators: Vec<u64>, den: u64) -> Result<BoxElement> {
    let total: u64 = numerators.iter().sum();
    if !total.is_multiple_of(den) {
        return Err(Error::Precondition(
            "fractional age: generators are not at height 1".into(),
        ));
    }
    let age = total / den;
    let nonzero = numerators.iter().filter(|&&x| x != 0).count() as u64;
    let identity = nonzero == 0;
    let boundary = !identity && (nonzero as usize) < numerators.len();
    Ok(BoxElement {
        numerators,
        age,
        coage: nonzero - age,
        boundary,
    })
}

impl Serialize for BoxGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct El {
            coords: Vec<String>,
            age: u64,
            coage: u64,
            boundary: bool,
        }
        let elements: Vec<El> = (0..self.order())
            .map(|i| El {
                coords: self.coords(i).iter().map(fmt_q).collect(),
                age: self.elements[i].age,
                coage: self.elements[i].coage,
                boundary: self.elements[i].boundary,
            })
            .collect();
        let mut st = s.serialize_struct("BoxGroup", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("diagonal", self.diagonal())?;
        st.serialize_field("elements", &elements)?;
        st.end()
    }
}

/// `h*(t) = sum over the half-open parallelepiped of t^age`. The result has
/// one coefficient per cone generator.
pub fn parallelepiped_hstar(g: &BoxGroup) -> HStarVector {
    let mut coeffs = vec![0i64; g.coord_count()];
    for e in g.elements() {
        coeffs[e.age as usize] += 1;
    }
    HStarVector::new(coeffs).expect("identity contributes h*_0 = 1")
}
