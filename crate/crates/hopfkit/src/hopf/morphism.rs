//! Morphisms of Hopf algebras and the compact-quantum-subgroup test.

use super::{is_unimodular, FiniteHopfAlgebra};
use crate::linsolve;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::util::pair;

/// A linear map between Hopf algebras, as a `dim(target) × dim(source)`
/// matrix on coordinate columns.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub source: FiniteHopfAlgebra,
    pub target: FiniteHopfAlgebra,
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn new(source: FiniteHopfAlgebra, target: FiniteHopfAlgebra, matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), target.dim(), "morphism matrix row mismatch");
        assert_eq!(matrix.cols(), source.dim(), "morphism matrix column mismatch");
        HopfMorphism {
            source,
            target,
            matrix,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// Image of a source basis element.
    pub fn image_basis(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }
}

/// Checks that the map is a unital algebra homomorphism intertwining
/// comultiplications (and, consequently, counits and antipodes — both
/// are checked explicitly), plus a rank-based surjectivity verdict.
pub fn verify_morphism(pi: &HopfMorphism) -> CheckReport {
    let src = &pi.source.bialgebra;
    let tgt = &pi.target.bialgebra;
    let ns = src.dim();
    let nt = tgt.dim();
    let mut report = CheckReport::new("morphism");
    report.dim("dim source", ns);
    report.dim("dim target", nt);

    let mut alg_witness = None;
    'alg: for i in 0..ns {
        for j in 0..ns {
            let lhs = pi.apply(&src.mul_basis(i, j));
            let rhs = tgt.mul_vec(&pi.image_basis(i), &pi.image_basis(j));
            if lhs != rhs {
                alg_witness = Some(format!("({}, {})", src.label(i), src.label(j)));
                break 'alg;
            }
        }
    }
    report.record("algebra homomorphism", "morphism-algebra-hom", alg_witness.is_none(), || {
        alg_witness.clone().unwrap()
    });

    report.record(
        "unit preserved",
        "morphism-unital",
        pi.apply(&src.unit) == tgt.unit,
        || "π(1) ≠ 1".into(),
    );

    // Δ_target ∘ π = (π⊗π) ∘ Δ_source
    let mut comult_witness = None;
    for i in 0..ns {
        let mut lhs = vec![Scalar::zero(); nt * nt];
        for (p, c) in pi.image_basis(i).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, v) in tgt.comult.fix1(p) {
                lhs[pair(j, k, nt)] += &(c * v);
            }
        }
        let mut rhs = vec![Scalar::zero(); nt * nt];
        for (a, b, v) in src.comult.fix1(i) {
            let pa = pi.image_basis(a);
            let pb = pi.image_basis(b);
            for (j, x) in pa.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, y) in pb.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    rhs[pair(j, k, nt)] += &(&(v * x) * y);
                }
            }
        }
        if lhs != rhs {
            comult_witness = Some(src.label(i).to_string());
            break;
        }
    }
    report.record(
        "comultiplication intertwined",
        "morphism-comult-intertwine",
        comult_witness.is_none(),
        || comult_witness.clone().unwrap(),
    );

    // ε_target ∘ π = ε_source
    let mut counit_ok = true;
    for j in 0..ns {
        if pi.target.counit_of(&pi.image_basis(j)) != pi.source.counit[j] {
            counit_ok = false;
            break;
        }
    }
    report.record("counit intertwined", "morphism-counit-intertwine", counit_ok, || {
        "ε∘π ≠ ε".into()
    });

    // S_target ∘ π = π ∘ S_source
    let lhs = pi.target.antipode.mul(&pi.matrix);
    let rhs = pi.matrix.mul(&pi.source.antipode);
    report.record(
        "antipode intertwined",
        "morphism-antipode-intertwine",
        lhs == rhs,
        || "S∘π ≠ π∘S".into(),
    );

    report
}

pub fn is_surjective(pi: &HopfMorphism) -> bool {
    linsolve::rank(&pi.matrix) == pi.target.dim()
}

/// The compact-quantum-subgroup predicate for a candidate surjection
/// `π: H → U`: U unital (automatic here, recorded), U unimodular, π a
/// morphism, π surjective.
pub fn is_compact_quantum_subgroup(pi: &HopfMorphism) -> CheckReport {
    let mut report = CheckReport::new("compact-quantum-subgroup");
    report.record("target unital", "target-compact", true, String::new);
    report.note("finite-dimensional Hopf algebras are unital, so the target is compact");

    let unimodular = is_unimodular(&pi.target);
    match unimodular {
        Ok(flag) => report.record("target unimodular", "target-unimodular", flag, || {
            "left invariant functional is not antipode-invariant".into()
        }),
        Err(e) => report.record("target unimodular", "target-unimodular", false, || {
            format!("unimodularity check inconsistent: {e}")
        }),
    }

    report.absorb(verify_morphism(pi));
    report.record("surjective", "morphism-surjective", is_surjective(pi), || {
        format!(
            "rank {} < target dimension {}",
            linsolve::rank(&pi.matrix),
            pi.target.dim()
        )
    });
    report
}
