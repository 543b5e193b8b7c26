//! Exact linear solving over the rationals.
//!
//! Gauss–Jordan elimination with deterministic pivoting: the pivot for
//! each step is the first column holding a nonzero entry, in the row
//! with the smallest index. This makes kernels, solutions and span
//! certificates reproducible byte-for-byte for identical inputs.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Reduced row-echelon form together with the pivot columns.
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivot_cols: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

fn rref_in_place(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows.len() {
            break;
        }
        // Smallest row index with a nonzero entry in this column.
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(r) = found else { continue };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[pivot_row].iter_mut() {
                *v *= &inv;
            }
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && !rows[r2][col].is_zero() {
                let factor = rows[r2][col].clone();
                let pivot = rows[pivot_row].clone();
                for (v, p) in rows[r2].iter_mut().zip(pivot.iter()) {
                    *v -= &(&factor * p);
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    pivot_cols
}

pub fn rref(a: &Matrix) -> Echelon {
    let mut rows = a.to_dense_rows();
    let pivot_cols = rref_in_place(&mut rows, a.cols());
    Echelon { rows, pivot_cols }
}

/// Exact rank over the rationals.
pub fn rank(a: &Matrix) -> usize {
    rref(a).rank()
}

/// Solves `A·x = b` exactly. Returns `Ok(None)` when the system is
/// inconsistent and `Err` on a dimension mismatch. Free variables are
/// set to zero, so the solution is deterministic.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "solve_linear: matrix has {} rows but rhs has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let cols = a.cols();
    let mut rows: Vec<Vec<Scalar>> = a
        .to_dense_rows()
        .into_iter()
        .zip(b.iter())
        .map(|(mut row, rhs)| {
            row.push(rhs.clone());
            row
        })
        .collect();
    let pivot_cols = rref_in_place(&mut rows, cols + 1);
    if pivot_cols.contains(&cols) {
        return Ok(None); // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Scalar::zero(); cols];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = rows[i][cols].clone();
    }
    Ok(Some(x))
}

/// A basis of the null space in echelon-normalized form: one vector per
/// free column, with a 1 in that free column, ordered by column index.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let ech = rref(a);
    let cols = a.cols();
    let mut is_pivot = vec![false; cols];
    for &c in &ech.pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (i, &pc) in ech.pivot_cols.iter().enumerate() {
            v[pc] = -ech.rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Tests whether `target` lies in the span of `vectors`. On success
/// returns the coefficients expressing it, verified by substitution.
pub fn span_contains(
    vectors: &[Vec<Scalar>],
    target: &[Scalar],
) -> Result<Option<Vec<Scalar>>, Error> {
    for v in vectors {
        if v.len() != target.len() {
            return Err(Error::Dimension(format!(
                "span_contains: vector length {} does not match target length {}",
                v.len(),
                target.len()
            )));
        }
    }
    let m = Matrix::from_columns(vectors, target.len());
    let Some(coeffs) = solve_linear(&m, target)? else {
        return Ok(None);
    };
    debug_assert_eq!(m.apply(&coeffs), target);
    Ok(Some(coeffs))
}

/// Factored solver for repeated right-hand sides against one matrix.
///
/// Keeps the row-reduction transform `E` with `E·A = R` (R in reduced
/// echelon form), so each solve is a product plus consistency check.
pub struct LinearSolver {
    transform: Vec<Vec<Scalar>>,
    pivot_cols: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl LinearSolver {
    pub fn new(a: &Matrix) -> Self {
        let rows = a.rows();
        let cols = a.cols();
        // Augment with the identity to record the row operations.
        let mut work: Vec<Vec<Scalar>> = a
            .to_dense_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                for j in 0..rows {
                    row.push(if i == j { Scalar::one() } else { Scalar::zero() });
                }
                row
            })
            .collect();
        // Restricting pivoting to the first `cols` columns reduces A while
        // carrying the transform alongside.
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            let found = (pivot_row..rows).find(|&r| !work[r][col].is_zero());
            let Some(r) = found else { continue };
            work.swap(pivot_row, r);
            let inv = work[pivot_row][col].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for v in work[pivot_row].iter_mut() {
                    *v *= &inv;
                }
            }
            for r2 in 0..rows {
                if r2 != pivot_row && !work[r2][col].is_zero() {
                    let factor = work[r2][col].clone();
                    let pivot = work[pivot_row].clone();
                    for (v, p) in work[r2].iter_mut().zip(pivot.iter()) {
                        *v -= &(&factor * p);
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let mut transform = Vec::with_capacity(rows);
        for row in work {
            transform.push(row[cols..].to_vec());
        }
        LinearSolver {
            transform,
            pivot_cols,
            rows,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch in LinearSolver");
        let rank = self.rank();
        let mut c = vec![Scalar::zero(); self.rows];
        for (i, row) in self.transform.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (e, bv) in row.iter().zip(b.iter()) {
                if !e.is_zero() && !bv.is_zero() {
                    acc += &(e * bv);
                }
            }
            c[i] = acc;
        }
        // Zero rows of R must have zero transformed rhs.
        if c[rank..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &pc) in self.pivot_cols.iter().enumerate() {
            x[pc] = c[i].clone();
        }
        Some(x)
    }
}

/// Inverse of a square matrix, if it exists.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    if a.rows() != a.cols() {
        return None;
    }
    let n = a.rows();
    let solver = LinearSolver::new(a);
    if solver.rank() < n {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        let col = solver.solve(&e)?;
        for (i, v) in col.into_iter().enumerate() {
            inv.set(i, j, v);
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn identity_system_returns_rhs() {
        let a = Matrix::identity(2);
        let x = solve_linear(&a, &[s(3), s(5)]).unwrap().unwrap();
        assert_eq!(x, vec![s(3), s(5)]);
    }

    #[test]
    fn inconsistent_rank_one_system_has_no_solution() {
        let a = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        assert_eq!(solve_linear(&a, &[s(1), s(0)]).unwrap(), None);
    }

    #[test]
    fn exact_rational_division() {
        let a = Matrix::from_rows(vec![vec![s(2)]]);
        let x = solve_linear(&a, &[s(1)]).unwrap().unwrap();
        assert_eq!(x, vec![Scalar::ratio(1, 2)]);
    }

    #[test]
    fn kernel_of_full_rank_matrix_is_empty() {
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_rank_one_in_dim_two() {
        let a = Matrix::from_rows(vec![vec![s(1), s(1)]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        // echelon-normalized: free coordinate is 1
        assert_eq!(k[0], vec![s(-1), s(1)]);
    }

    #[test]
    fn kernel_of_zero_map() {
        let a = Matrix::zeros(2, 3);
        assert_eq!(kernel_basis(&a).len(), 3);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(4)), 4);
        let prop = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(rank(&prop), 1);
        assert_eq!(rank(&Matrix::zeros(3, 2)), 0);
    }

    #[test]
    fn span_certificates() {
        let c = span_contains(&[vec![s(1), s(0)]], &[s(2), s(0)]).unwrap();
        assert_eq!(c, Some(vec![s(2)]));
        let none = span_contains(&[vec![s(1), s(0)]], &[s(0), s(1)]).unwrap();
        assert_eq!(none, None);
        let c2 = span_contains(&[vec![s(1), s(1)], vec![s(1), s(-1)]], &[s(0), s(1)]).unwrap();
        assert_eq!(c2, Some(vec![Scalar::ratio(1, 2), Scalar::ratio(-1, 2)]));
    }

    #[test]
    fn factored_solver_matches_direct_solve() {
        let a = Matrix::from_rows(vec![
            vec![s(1), s(2), s(0)],
            vec![s(0), s(1), s(1)],
            vec![s(1), s(3), s(1)],
        ]);
        let solver = LinearSolver::new(&a);
        for b in [[s(1), s(0), s(1)], [s(0), s(0), s(0)], [s(2), s(1), s(3)]] {
            assert_eq!(solver.solve(&b), solve_linear(&a, &b).unwrap());
        }
    }

    #[test]
    fn invert_round_trip() {
        let a = Matrix::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(1)]]);
        let inv = invert(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let singular = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert!(invert(&singular).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c).prop_map(move |vals| {
                Matrix::from_fn(r, c, |i, j| Scalar::from_int(vals[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(a in arb_matrix()) {
            prop_assert_eq!(rank(&a) + kernel_basis(&a).len(), a.cols());
        }

        #[test]
        fn kernel_vectors_are_annihilated(a in arb_matrix()) {
            for v in kernel_basis(&a) {
                let image = a.apply(&v);
                prop_assert!(image.iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn solutions_substitute_back_exactly(a in arb_matrix(), seed in proptest::collection::vec(-3i64..=3, 1..5)) {
            // Build a consistent rhs from a random preimage.
            let x: Vec<Scalar> = (0..a.cols()).map(|i| Scalar::from_int(*seed.get(i).unwrap_or(&0))).collect();
            let b = a.apply(&x);
            let sol = solve_linear(&a, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.apply(&sol), b);
        }
    }
}
