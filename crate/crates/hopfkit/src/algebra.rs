//! Unital associative algebras by structure constants, tensor products,
//! and subalgebras carved out of an ambient algebra.

use crate::error::Error;
use crate::hopf::FiniteHopfAlgebra;
use crate::linsolve::{self, LinearSolver};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

#[derive(Clone, Debug)]
pub struct UnitalAlgebra {
    pub basis: Vec<String>,
    /// `e_i e_j = Σ_k mult[(i,j,k)] e_k`
    pub mult: Tensor3,
    pub unit: Vec<Scalar>,
}

impl UnitalAlgebra {
    pub fn new(basis: Vec<String>, mult: Tensor3, unit: Vec<Scalar>) -> Result<Self, Error> {
        let n = basis.len();
        if mult.dims() != (n, n, n) || unit.len() != n {
            return Err(Error::Dimension("algebra structure dims mismatch".into()));
        }
        Ok(UnitalAlgebra { basis, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, v) in self.mult.fix12(i, j) {
            out[k] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let coef = ai * bj;
                for (k, v) in self.mult.fix12(i, j) {
                    out[k] += &(&coef * v);
                }
            }
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }
}

/// The base field as a one-dimensional algebra.
pub fn base_field() -> UnitalAlgebra {
    let mut mult = Tensor3::new(1, 1, 1);
    mult.set(0, 0, 0, Scalar::one());
    UnitalAlgebra::new(vec!["1".into()], mult, vec![Scalar::one()]).expect("base field")
}

/// Dual numbers: basis `{1, t}` with `t² = 0`. The standard graded
/// two-dimensional coefficient algebra, with `t` in odd degree.
pub fn dual_numbers() -> UnitalAlgebra {
    let mut mult = Tensor3::new(2, 2, 2);
    mult.set(0, 0, 0, Scalar::one());
    mult.set(0, 1, 1, Scalar::one());
    mult.set(1, 0, 1, Scalar::one());
    UnitalAlgebra::new(
        vec!["1".into(), "t".into()],
        mult,
        vec![Scalar::one(), Scalar::zero()],
    )
    .expect("dual numbers")
}

/// Forgets the coalgebra structure of a Hopf algebra.
pub fn algebra_part(h: &FiniteHopfAlgebra) -> UnitalAlgebra {
    UnitalAlgebra {
        basis: h.bialgebra.basis.clone(),
        mult: h.bialgebra.mult.clone(),
        unit: h.bialgebra.unit.clone(),
    }
}

/// The tensor-product algebra `A⊗B` on basis `a⊗b`, flat index
/// `pair(a, b, dim B)`.
pub fn tensor_product(a: &UnitalAlgebra, b: &UnitalAlgebra) -> UnitalAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut basis = Vec::with_capacity(n);
    for la in &a.basis {
        for lb in &b.basis {
            basis.push(format!("{la}⊗{lb}"));
        }
    }
    let mut mult = Tensor3::new(n, n, n);
    for (i1, j1, k1, v1) in a.mult.iter() {
        for (i2, j2, k2, v2) in b.mult.iter() {
            mult.set(
                pair(i1, i2, nb),
                pair(j1, j2, nb),
                pair(k1, k2, nb),
                v1 * v2,
            );
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    for (i, ua) in a.unit.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (j, ub) in b.unit.iter().enumerate() {
            let v = ua * ub;
            if !v.is_zero() {
                unit[pair(i, j, nb)] = v;
            }
        }
    }
    UnitalAlgebra { basis, mult, unit }
}

/// Associativity, unitality and non-degeneracy of the product. The
/// latter is joint injectivity of `a ↦ (L_a, R_a)`, the finite-
/// dimensional criterion.
pub fn verify_unital_algebra(a: &UnitalAlgebra) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new("unital-algebra");
    report.dim("dim", n);

    // sparse product rows, so the triple sweep stays cheap at dim ~40
    let rows: Vec<Vec<Vec<(usize, Scalar)>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.mult.fix12(i, j).map(|(k, v)| (k, v.clone())).collect())
                .collect()
        })
        .collect();
    let mut assoc_witness = None;
    let mut left = vec![Scalar::zero(); n];
    let mut right = vec![Scalar::zero(); n];
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for v in left.iter_mut() {
                    *v = Scalar::zero();
                }
                for v in right.iter_mut() {
                    *v = Scalar::zero();
                }
                for (p, c) in &rows[i][j] {
                    for (l, v) in &rows[*p][k] {
                        left[*l] += &(c * v);
                    }
                }
                for (q, c) in &rows[j][k] {
                    for (l, v) in &rows[i][*q] {
                        right[*l] += &(c * v);
                    }
                }
                if left != right {
                    assoc_witness =
                        Some(format!("({}, {}, {})", a.label(i), a.label(j), a.label(k)));
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", "mult-assoc", assoc_witness.is_none(), || {
        assoc_witness.clone().unwrap()
    });

    let mut unit_witness = None;
    for j in 0..n {
        let e = a.basis_vec(j);
        if a.mul_vec(&a.unit, &e) != e || a.mul_vec(&e, &a.unit) != e {
            unit_witness = Some(a.label(j).to_string());
            break;
        }
    }
    report.record("unitality", "mult-unital", unit_witness.is_none(), || {
        unit_witness.clone().unwrap()
    });

    // rows indexed by (side, j, l): coefficient of e_l in e_i e_j resp. e_j e_i
    let mut nondeg = Matrix::zeros(2 * n * n, n);
    for (i, j, k, v) in a.mult.iter() {
        let cur = nondeg.get(pair(j, k, n), i).clone();
        nondeg.set(pair(j, k, n), i, cur + v);
        let cur = nondeg.get(n * n + pair(i, k, n), j).clone();
        nondeg.set(n * n + pair(i, k, n), j, cur + v);
    }
    report.record(
        "non-degenerate product",
        "product-nondegenerate",
        linsolve::rank(&nondeg) == n,
        || "left and right multiplications have a joint kernel".into(),
    );

    report
}

/// A subalgebra presented by an embedding matrix into an ambient
/// algebra; columns of `embedding` are the coordinates of the
/// subalgebra basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: UnitalAlgebra,
    pub embedding: Matrix,
}

impl Subalgebra {
    /// Ambient coordinates of a subalgebra element.
    pub fn embed(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.embedding.apply(v)
    }
}

/// Closes a spanning set into a subalgebra of `ambient`: verifies the
/// span contains the unit and is closed under multiplication, and
/// computes structure constants in the given basis. Errors carry the
/// offending product as a witness.
pub fn subalgebra_from_span(
    ambient: &UnitalAlgebra,
    span: &[Vec<Scalar>],
    label_prefix: &str,
) -> Result<Subalgebra, Error> {
    let dim_sub = span.len();
    let embedding = Matrix::from_columns(span, ambient.dim());
    let solver = LinearSolver::new(&embedding);
    if solver.rank() != dim_sub {
        return Err(Error::Verification(
            "subalgebra spanning set is linearly dependent".into(),
        ));
    }
    let unit_coords = solver.solve(&ambient.unit).ok_or_else(|| {
        Error::Verification("ambient unit does not lie in the subalgebra span".into())
    })?;
    let mut mult = Tensor3::new(dim_sub, dim_sub, dim_sub);
    for (i, vi) in span.iter().enumerate() {
        for (j, vj) in span.iter().enumerate() {
            let prod = ambient.mul_vec(vi, vj);
            let coords = solver.solve(&prod).ok_or_else(|| {
                Error::Verification(format!(
                    "subalgebra is not closed under multiplication at basis pair ({i}, {j})"
                ))
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    mult.set(i, j, k, c);
                }
            }
        }
    }
    let basis = (0..dim_sub)
        .map(|i| format!("{label_prefix}{i}"))
        .collect();
    Ok(Subalgebra {
        algebra: UnitalAlgebra {
            basis,
            mult,
            unit: unit_coords,
        },
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_verify() {
        let a = dual_numbers();
        assert!(verify_unital_algebra(&a).all_passed());
    }

    #[test]
    fn tensor_square_of_dual_numbers() {
        let a = dual_numbers();
        let t = tensor_product(&a, &a);
        assert_eq!(t.dim(), 4);
        assert!(verify_unital_algebra(&t).all_passed());
        // (t⊗1)(t⊗1) = 0
        let tt = t.mul_basis(2, 2);
        assert!(tt.iter().all(Scalar::is_zero));
    }

    #[test]
    fn span_closure_recovers_even_part() {
        let a = tensor_product(&dual_numbers(), &dual_numbers());
        // span{1⊗1, t⊗t} is closed
        let mut v1 = vec![Scalar::zero(); 4];
        v1[0] = Scalar::one();
        let mut v2 = vec![Scalar::zero(); 4];
        v2[3] = Scalar::one();
        let sub = subalgebra_from_span(&a, &[v1, v2], "m").unwrap();
        assert_eq!(sub.algebra.dim(), 2);
        assert!(verify_unital_algebra(&sub.algebra).all_passed());
        // span{t⊗1} misses the unit
        let mut w = vec![Scalar::zero(); 4];
        w[2] = Scalar::one();
        assert!(subalgebra_from_span(&a, &[w], "m").is_err());
    }
}
