//! Finite-dimensional bialgebras and Hopf algebras as structure constants.
//!
//! Conventions, used everywhere downstream:
//!
//! - multiplication tensor: `e_i e_j = Σ_k mult[(i,j,k)] e_k`;
//! - comultiplication tensor: `Δ(e_i) = Σ_{j,k} comult[(i,j,k)] e_j ⊗ e_k`;
//! - elements of a tensor square are coordinate vectors of length `n²`
//!   indexed by `pair(i, j, n) = i·n + j`;
//! - the antipode is a matrix acting on coordinate columns, so column `j`
//!   holds the coordinates of `S(e_j)`;
//! - linear functionals are coordinate vectors of values on the basis.
//!
//! Nothing here is assumed: associativity, coassociativity, the counit
//! and antipode equations, and bijectivity of the antipode are all
//! certified from the structure constants at construction time.

mod axioms;
mod dual;
mod invariants;
mod morphism;

pub use axioms::{galois_maps, solve_antipode, solve_counit, verify_bialgebra, verify_hopf};
pub use dual::{double_dual_iso, dual, dual_via_pairing_agrees};
pub use invariants::{
    is_unimodular, left_integrals, left_invariant_functionals, normalized_left_integral,
    normalized_left_invariant, right_integrals, right_invariant_functionals,
};
pub use morphism::{is_compact_quantum_subgroup, is_surjective, verify_morphism, HopfMorphism};

use crate::error::Error;
use crate::linsolve;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

/// An algebra-and-coalgebra structure on a finite basis, prior to any
/// counit/antipode derivation.
#[derive(Clone, Debug)]
pub struct FiniteDimBialgebra {
    pub basis: Vec<String>,
    pub mult: Tensor3,
    pub unit: Vec<Scalar>,
    pub comult: Tensor3,
    pub counit: Option<Vec<Scalar>>,
}

impl FiniteDimBialgebra {
    pub fn new(
        basis: Vec<String>,
        mult: Tensor3,
        unit: Vec<Scalar>,
        comult: Tensor3,
        counit: Option<Vec<Scalar>>,
    ) -> Result<Self, Error> {
        let n = basis.len();
        if mult.dims() != (n, n, n) {
            return Err(Error::Dimension(format!(
                "mult tensor dims {:?} do not match basis size {n}",
                mult.dims()
            )));
        }
        if comult.dims() != (n, n, n) {
            return Err(Error::Dimension(format!(
                "comult tensor dims {:?} do not match basis size {n}",
                comult.dims()
            )));
        }
        if unit.len() != n {
            return Err(Error::Dimension("unit vector length mismatch".into()));
        }
        if let Some(c) = &counit {
            if c.len() != n {
                return Err(Error::Dimension("counit vector length mismatch".into()));
            }
        }
        Ok(FiniteDimBialgebra {
            basis,
            mult,
            unit,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    /// Product of two coordinate vectors.
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

    /// Product of two basis elements as a coordinate vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, v) in self.mult.fix12(i, j) {
            out[k] = v.clone();
        }
        out
    }

    /// Δ of a coordinate vector, as a vector of length `n²` indexed by
    /// `pair(j, k, n)`.
    pub fn comult_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, v) in self.comult.fix1(i) {
                out[pair(j, k, n)] += &(xi * v);
            }
        }
        out
    }
}

/// A verified finite-dimensional Hopf algebra.
///
/// Construction derives the counit and antipode from the structure
/// constants when they are not supplied, reconciles them against
/// supplied values when they are, and fails with a structured error if
/// any axiom breaks.
#[derive(Clone, Debug)]
pub struct FiniteHopfAlgebra {
    pub bialgebra: FiniteDimBialgebra,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

impl FiniteHopfAlgebra {
    pub fn new(bialgebra: FiniteDimBialgebra, antipode: Option<Matrix>) -> Result<Self, Error> {
        let bia_report = verify_bialgebra(&bialgebra);
        if !bia_report.all_passed() {
            let c = bia_report.first_failure().expect("failure present");
            return Err(Error::Verification(format!(
                "bialgebra check {} [{}] failed at {}",
                c.name,
                c.formula,
                c.witness.clone().unwrap_or_default()
            )));
        }
        let counit = solve_counit(&bialgebra)?;
        if let Some(supplied) = &bialgebra.counit {
            if *supplied != counit {
                return Err(Error::Inconsistent(
                    "supplied counit contradicts the solved counit".into(),
                ));
            }
        }
        let solved = solve_antipode(&bialgebra, &counit)?;
        if let Some(supplied) = antipode {
            if supplied != solved {
                return Err(Error::Inconsistent(
                    "supplied antipode contradicts the solved antipode".into(),
                ));
            }
        }
        let antipode_inv = linsolve::invert(&solved).ok_or_else(|| {
            Error::Verification("antipode is not bijective (not a regular structure)".into())
        })?;
        let hopf = FiniteHopfAlgebra {
            bialgebra,
            counit,
            antipode: solved,
            antipode_inv,
        };
        let report = verify_hopf(&hopf);
        if !report.all_passed() {
            let c = report.first_failure().expect("failure present");
            return Err(Error::Verification(format!(
                "hopf check {} [{}] failed at {}",
                c.name,
                c.formula,
                c.witness.clone().unwrap_or_default()
            )));
        }
        Ok(hopf)
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.bialgebra.basis
    }

    pub fn label(&self, i: usize) -> &str {
        self.bialgebra.label(i)
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.bialgebra.mul_vec(a, b)
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (c, x) in self.counit.iter().zip(v) {
            acc += &(c * x);
        }
        acc
    }

    /// Coordinates of `S(e_j)`.
    pub fn antipode_basis(&self, j: usize) -> Vec<Scalar> {
        self.antipode.column(j)
    }
}
