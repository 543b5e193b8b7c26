//! Dense/sparse rational matrices.
//!
//! Storage starts sparse and is promoted to dense once more than a
//! quarter of the entries are nonzero; the two representations agree
//! entrywise and compare equal. All index errors panic (out-of-range
//! indices are rejected, not wrapped).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use crate::scalar::Scalar;

static ZERO: LazyLock<Scalar> = LazyLock::new(Scalar::zero);

const DENSE_FILL_THRESHOLD_NUM: usize = 1;
const DENSE_FILL_THRESHOLD_DEN: usize = 4;

#[derive(Clone)]
enum Storage {
    Sparse(BTreeMap<(usize, usize), Scalar>),
    Dense(Vec<Scalar>),
}

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            storage: Storage::Sparse(BTreeMap::new()),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows in matrix literal");
        }
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn check_index(&self, r: usize, c: usize) {
        assert!(
            r < self.rows && c < self.cols,
            "matrix index ({r}, {c}) out of range for {}x{}",
            self.rows,
            self.cols
        );
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        self.check_index(r, c);
        match &self.storage {
            Storage::Sparse(map) => map.get(&(r, c)).unwrap_or(&ZERO),
            Storage::Dense(v) => &v[r * self.cols + c],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.check_index(r, c);
        match &mut self.storage {
            Storage::Sparse(map) => {
                if value.is_zero() {
                    map.remove(&(r, c));
                } else {
                    map.insert((r, c), value);
                }
                self.maybe_promote();
            }
            Storage::Dense(v) => {
                v[r * self.cols + c] = value;
            }
        }
    }

    fn maybe_promote(&mut self) {
        if let Storage::Sparse(map) = &self.storage {
            let total = self.rows * self.cols;
            if total > 0 && map.len() * DENSE_FILL_THRESHOLD_DEN > total * DENSE_FILL_THRESHOLD_NUM
            {
                let mut dense = vec![Scalar::zero(); total];
                for (&(r, c), v) in map {
                    dense[r * self.cols + c] = v.clone();
                }
                self.storage = Storage::Dense(dense);
            }
        }
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Sparse(map) => map.len(),
            Storage::Dense(v) => v.iter().filter(|x| !x.is_zero()).count(),
        }
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    /// Iterates over the nonzero entries as `(row, col, value)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let sparse: Box<dyn Iterator<Item = (usize, usize, &Scalar)>> = match &self.storage {
            Storage::Sparse(map) => Box::new(map.iter().map(|(&(r, c), v)| (r, c, v))),
            Storage::Dense(v) => Box::new(
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(idx, x)| (idx / self.cols, idx % self.cols, x)),
            ),
        };
        sparse
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.set(c, r, v.clone());
        }
        m
    }

    /// Matrix-vector product `A·x`.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols, "vector length mismatch in apply");
        let mut out = vec![Scalar::zero(); self.rows];
        for (r, c, v) in self.iter() {
            if !x[c].is_zero() {
                out[r] += &(v * &x[c]);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut m = Matrix::zeros(self.rows, other.cols);
        for (i, k, a) in self.iter() {
            for c in 0..other.cols {
                let b = other.get(k, c);
                if !b.is_zero() {
                    let cur = m.get(i, c).clone();
                    m.set(i, c, cur + a * b);
                }
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (r, c, v) in other.iter() {
            let cur = m.get(r, c).clone();
            m.set(r, c, cur + v);
        }
        m
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v * k);
        }
        m
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v.clone());
        }
        for (r, c, v) in other.iter() {
            m.set(self.rows + r, c, v.clone());
        }
        m
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn sparse_and_dense_agree_entrywise() {
        let mut sparse = Matrix::zeros(3, 3);
        sparse.set(0, 0, s(1));
        sparse.set(2, 1, Scalar::ratio(1, 2));
        assert!(!sparse.is_dense());

        let dense = Matrix::from_fn(3, 3, |r, c| {
            if (r, c) == (0, 0) {
                s(1)
            } else if (r, c) == (2, 1) {
                Scalar::ratio(1, 2)
            } else {
                s(0)
            }
        });
        assert_eq!(sparse, dense);
    }

    #[test]
    fn promotion_happens_above_quarter_fill() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 0, s(1));
        assert!(!m.is_dense());
        m.set(0, 1, s(2));
        assert!(m.is_dense());
        assert_eq!(*m.get(0, 1), s(2));
        assert_eq!(*m.get(1, 1), s(0));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn out_of_range_rejected() {
        let m = Matrix::zeros(2, 2);
        let _ = m.get(2, 0);
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(0), s(1)]]);
        let b = Matrix::from_rows(vec![vec![s(3)], vec![s(4)]]);
        let ab = a.mul(&b);
        assert_eq!(ab.column(0), vec![s(11), s(4)]);
        assert_eq!(a.transpose().get(0, 1), &s(0));
        assert_eq!(a.transpose().get(1, 0), &s(2));
    }
}
