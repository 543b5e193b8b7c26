//! Sparse rank-3 tensors of structure constants.
//!
//! A `Tensor3` with dims `(d1, d2, d3)` stores a map `(i, j, k) -> Scalar`
//! with all stored entries nonzero; absent entries are zero. The index
//! roles are fixed by each consumer, e.g. a multiplication tensor stores
//! `e_i e_j = Σ_k t[(i,j,k)] e_k` and a comultiplication tensor stores
//! `Δ(e_i) = Σ_{j,k} t[(i,j,k)] e_j ⊗ e_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use crate::scalar::Scalar;

static ZERO: LazyLock<Scalar> = LazyLock::new(Scalar::zero);

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Tensor3 {
    pub fn new(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            dims: (d1, d2, d3),
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn check_index(&self, i: usize, j: usize, k: usize) {
        assert!(
            i < self.dims.0 && j < self.dims.1 && k < self.dims.2,
            "tensor index ({i}, {j}, {k}) out of range for {:?}",
            self.dims
        );
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.check_index(i, j, k);
        self.entries.get(&(i, j, k)).unwrap_or(&ZERO)
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        self.check_index(i, j, k);
        if value.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let cur = self.get(i, j, k).clone();
        self.set(i, j, k, cur + value);
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.entries.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    /// Nonzero entries with the first index fixed, as `(j, k, value)`.
    pub fn fix1(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.entries
            .range((i, 0, 0)..=(i, usize::MAX, usize::MAX))
            .map(|(&(_, j, k), v)| (j, k, v))
    }

    /// Nonzero entries with the first two indices fixed, as `(k, value)`.
    pub fn fix12(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), v)| (k, v))
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3 {:?} {{", self.dims)?;
        for (i, j, k, v) in self.iter() {
            write!(f, " ({i},{j},{k})={v}")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_pruned() {
        let mut t = Tensor3::new(2, 2, 2);
        t.set(0, 1, 1, Scalar::from_int(3));
        t.set(0, 1, 1, Scalar::zero());
        assert_eq!(t.nnz(), 0);
        assert!(t.get(0, 1, 1).is_zero());
    }

    #[test]
    fn slicing_by_leading_indices() {
        let mut t = Tensor3::new(2, 2, 3);
        t.set(1, 0, 2, Scalar::from_int(5));
        t.set(1, 1, 0, Scalar::from_int(7));
        t.set(0, 1, 1, Scalar::from_int(9));
        let slice: Vec<_> = t.fix1(1).map(|(j, k, v)| (j, k, v.clone())).collect();
        assert_eq!(slice.len(), 2);
        let row: Vec<_> = t.fix12(1, 1).map(|(k, v)| (k, v.clone())).collect();
        assert_eq!(row, vec![(0, Scalar::from_int(7))]);
    }
}
