//! Ready-made coefficient module algebras for the verification suites.
//!
//! Each constructor builds its action against the dual of the actual
//! subgroup target of the supplied surjection, so the result plugs
//! directly into the smash/Morita pipeline.

use crate::actions::{ModuleAlgebra, Side};
use crate::algebra::{base_field, dual_numbers, UnitalAlgebra};
use crate::catalog::FiniteGroup;
use crate::error::Error;
use crate::hopf::{dual, FiniteHopfAlgebra, HopfMorphism};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// The base field with the trivial action of the dual of the subgroup.
pub fn trivial_coefficients(pi: &HopfMorphism) -> Result<ModuleAlgebra, Error> {
    let u_hat = dual(&pi.target)?;
    Ok(ModuleAlgebra::trivial(base_field(), u_hat, Side::Left))
}

/// Any unital algebra with the trivial action of the dual of the subgroup.
pub fn trivial_coefficients_on(
    algebra: UnitalAlgebra,
    pi: &HopfMorphism,
) -> Result<ModuleAlgebra, Error> {
    let u_hat = dual(&pi.target)?;
    Ok(ModuleAlgebra::trivial(algebra, u_hat, Side::Left))
}

/// Dual numbers `k[t]/(t²)` graded by the dual of a group algebra of
/// order 2: the two dual-basis idempotents project onto the even part
/// `{1}` and the odd part `{t}`.
pub fn graded_dual_numbers(pi: &HopfMorphism) -> Result<ModuleAlgebra, Error> {
    let u_hat = dual(&pi.target)?;
    if u_hat.dim() != 2 {
        return Err(Error::Inconsistent(
            "graded dual-numbers fixture needs an order-2 subgroup".into(),
        ));
    }
    // identify which dual-basis element is the counit-like idempotent:
    // ε̂(δ^u) = unit coordinate of U at u
    let even = pi
        .target
        .bialgebra
        .unit
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Inconsistent("subgroup target has zero unit".into()))?;
    let odd = 1 - even;
    let algebra = dual_numbers();
    let mut action = Tensor3::new(2, 2, 2);
    action.set(even, 0, 0, Scalar::one()); // δ^e ⇀ 1 = 1
    action.set(odd, 1, 1, Scalar::one()); // δ^g ⇀ t = t
    let out = ModuleAlgebra::new(algebra, u_hat, Side::Left, action)?;
    ensure_module_algebra(out)
}

/// The function algebra C(G) with the left translation action of the
/// dual of C(G)-restricted-to-G (the group-algebra side):
/// `δ^{χ_h} ⇀ χ_x = χ_{hx}`. For |G| = 2 this is the coordinate swap.
pub fn translation_coefficients(
    pi: &HopfMorphism,
    group: &FiniteGroup,
) -> Result<ModuleAlgebra, Error> {
    let u_hat = dual(&pi.target)?;
    let n = group.order();
    if u_hat.dim() != n {
        return Err(Error::Inconsistent(
            "translation fixture: subgroup order does not match the group".into(),
        ));
    }
    let algebra = crate::algebra::algebra_part(&crate::catalog::function_algebra(group)?);
    let mut action = Tensor3::new(n, n, n);
    for h in 0..n {
        for x in 0..n {
            action.set(h, x, group.mul(h, x), Scalar::one());
        }
    }
    let out = ModuleAlgebra::new(algebra, u_hat, Side::Left, action)?;
    ensure_module_algebra(out)
}

/// Dual numbers with the sign action of a group algebra of order 2:
/// the generator fixes 1 and negates t. A left ℂH-module algebra for
/// the function-algebra contexts.
pub fn sign_dual_numbers(ch: &FiniteHopfAlgebra) -> Result<ModuleAlgebra, Error> {
    if ch.dim() != 2 {
        return Err(Error::Inconsistent(
            "sign fixture needs a group algebra of order 2".into(),
        ));
    }
    let identity = ch
        .bialgebra
        .unit
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Inconsistent("group algebra has zero unit".into()))?;
    let flip = 1 - identity;
    let algebra = dual_numbers();
    let mut action = Tensor3::new(2, 2, 2);
    action.set(identity, 0, 0, Scalar::one());
    action.set(identity, 1, 1, Scalar::one());
    action.set(flip, 0, 0, Scalar::one());
    action.set(flip, 1, 1, -Scalar::one());
    let out = ModuleAlgebra::new(algebra, ch.clone(), Side::Left, action)?;
    ensure_module_algebra(out)
}

fn ensure_module_algebra(m: ModuleAlgebra) -> Result<ModuleAlgebra, Error> {
    let report = crate::actions::verify_module_algebra(&m);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "fixture fails module-algebra axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, function_algebra, group_algebra, restriction_morphism,
        SubgroupEmbedding};
    use crate::hopf::HopfMorphism;
    use crate::matrix::Matrix;

    fn identity_subgroup_c2() -> HopfMorphism {
        let c2 = cyclic(2);
        let emb = SubgroupEmbedding::cyclic_subgroup(&c2, 1).unwrap();
        restriction_morphism(&emb).unwrap()
    }

    #[test]
    fn fixtures_verify() {
        let pi = identity_subgroup_c2();
        assert!(trivial_coefficients(&pi).is_ok());
        assert!(translation_coefficients(&pi, &cyclic(2)).is_ok());
        let ch = group_algebra(&cyclic(2)).unwrap();
        assert!(sign_dual_numbers(&ch).is_ok());
    }

    #[test]
    fn graded_fixture_over_sweedler_projection() {
        let pi = crate::catalog::sweedler_projection().unwrap();
        let m = graded_dual_numbers(&pi).unwrap();
        assert_eq!(m.algebra.dim(), 2);
    }

    #[test]
    fn sign_fixture_negates_t() {
        let ch = group_algebra(&cyclic(2)).unwrap();
        let m = sign_dual_numbers(&ch).unwrap();
        let op = m.operator(1);
        let expected = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), -Scalar::one()],
        ]);
        assert_eq!(op, expected);
        let _ = function_algebra(&cyclic(2)).unwrap();
    }
}
