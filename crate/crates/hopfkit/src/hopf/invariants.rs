//! Integrals, invariant functionals and unimodularity.

use super::FiniteHopfAlgebra;
use crate::error::Error;
use crate::linsolve::kernel_basis;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::util::{normalize_first_one, pair};

/// Basis of the space of left integrals: `{t : x·t = ε(x)t ∀x}`.
/// One-dimensional for every finite-dimensional Hopf algebra.
pub fn left_integrals(h: &FiniteHopfAlgebra) -> Vec<Vec<Scalar>> {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (l, v) in b.mult.fix12(i, j) {
                let row = pair(i, l, n);
                let cur = system.get(row, j).clone();
                system.set(row, j, cur + v);
            }
        }
        for l in 0..n {
            let row = pair(i, l, n);
            let cur = system.get(row, l).clone();
            system.set(row, l, cur - &h.counit[i]);
        }
    }
    kernel_basis(&system)
}

/// Basis of `{k : k·x = ε(x)k ∀x}`.
pub fn right_integrals(h: &FiniteHopfAlgebra) -> Vec<Vec<Scalar>> {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (l, v) in b.mult.fix12(j, i) {
                let row = pair(i, l, n);
                let cur = system.get(row, j).clone();
                system.set(row, j, cur + v);
            }
        }
        for l in 0..n {
            let row = pair(i, l, n);
            let cur = system.get(row, l).clone();
            system.set(row, l, cur - &h.counit[i]);
        }
    }
    kernel_basis(&system)
}

/// Basis of `{φ : (ι⊗φ)Δ(x) = φ(x)·1 ∀x}`, as value vectors on the basis.
pub fn left_invariant_functionals(h: &FiniteHopfAlgebra) -> Vec<Vec<Scalar>> {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for (l, k, v) in b.comult.fix1(i) {
            let row = pair(i, l, n);
            let cur = system.get(row, k).clone();
            system.set(row, k, cur + v);
        }
        for l in 0..n {
            let row = pair(i, l, n);
            let cur = system.get(row, i).clone();
            system.set(row, i, cur - &b.unit[l]);
        }
    }
    kernel_basis(&system)
}

/// Basis of `{ψ : (ψ⊗ι)Δ(x) = ψ(x)·1 ∀x}`.
pub fn right_invariant_functionals(h: &FiniteHopfAlgebra) -> Vec<Vec<Scalar>> {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for (j, l, v) in b.comult.fix1(i) {
            let row = pair(i, l, n);
            let cur = system.get(row, j).clone();
            system.set(row, j, cur + v);
        }
        for l in 0..n {
            let row = pair(i, l, n);
            let cur = system.get(row, i).clone();
            system.set(row, i, cur - &b.unit[l]);
        }
    }
    kernel_basis(&system)
}

/// The left integral scaled so its first nonzero coordinate is 1.
/// Errors if the integral space is not one-dimensional.
pub fn normalized_left_integral(h: &FiniteHopfAlgebra) -> Result<Vec<Scalar>, Error> {
    let basis = left_integrals(h);
    if basis.len() != 1 {
        return Err(Error::Verification(format!(
            "left integral space has dimension {}, expected 1",
            basis.len()
        )));
    }
    normalize_first_one(&basis[0])
        .ok_or_else(|| Error::Verification("left integral is the zero vector".into()))
}

/// The left invariant functional normalized by `φ(t) = 1` on the
/// normalized left integral `t`.
pub fn normalized_left_invariant(h: &FiniteHopfAlgebra) -> Result<Vec<Scalar>, Error> {
    let t = normalized_left_integral(h)?;
    let basis = left_invariant_functionals(h);
    if basis.len() != 1 {
        return Err(Error::Verification(format!(
            "left invariant functional space has dimension {}, expected 1",
            basis.len()
        )));
    }
    let phi = &basis[0];
    let mut value = Scalar::zero();
    for (p, tv) in phi.iter().zip(&t) {
        value += &(p * tv);
    }
    let inv = value.inv().ok_or_else(|| {
        Error::Verification("φ(t) = 0: cannot normalize the invariant functional".into())
    })?;
    Ok(phi.iter().map(|x| x * &inv).collect())
}

fn spans_agree(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    use crate::linsolve::span_contains;
    a.iter().all(|v| matches!(span_contains(b, v), Ok(Some(_))))
        && b.iter().all(|v| matches!(span_contains(a, v), Ok(Some(_))))
}

/// Unimodularity: `φ∘S = φ` for the normalized left invariant
/// functional. The integral-space characterization (left integral space
/// equals right integral space) is computed alongside; a disagreement
/// between the two is an inconsistency error, never silently resolved.
pub fn is_unimodular(h: &FiniteHopfAlgebra) -> Result<bool, Error> {
    let phi = normalized_left_invariant(h)?;
    let n = h.dim();
    let mut phi_s = vec![Scalar::zero(); n];
    for (j, out) in phi_s.iter_mut().enumerate() {
        for (p, pv) in phi.iter().enumerate() {
            let s = h.antipode.get(p, j);
            if !s.is_zero() {
                *out += &(pv * s);
            }
        }
    }
    let functional_verdict = phi_s == phi;
    let integral_verdict = spans_agree(&left_integrals(h), &right_integrals(h));
    if functional_verdict != integral_verdict {
        return Err(Error::Inconsistent(format!(
            "unimodularity checks disagree: φ∘S = φ is {functional_verdict} but \
             integral-space equality is {integral_verdict}"
        )));
    }
    Ok(functional_verdict)
}
