//! Worked examples for the finitely-supported-function layer.

use hopfkit::actions::{ModuleAlgebra, Side};
use hopfkit::algebra::{algebra_part, base_field};
use hopfkit::catalog::{cyclic, function_algebra, group_algebra, symmetric};
use hopfkit::fixtures::sign_dual_numbers;
use hopfkit::localunits::{
    cc_left_action, cc_right_action, is_equivariant, oracle_by_name, prop32_compatibility,
    prop32_witnesses, symmetrize, FinSuppFunc, InductionContext, SampleCfg, SubgroupTokens,
};
use hopfkit::scalar::Scalar;
use hopfkit::tensor::Tensor3;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn identity_indicator_moves_to_the_inverse_point() {
    // (χ_e·1_A) ↼ h = χ_{h⁻¹}·1_A: the unit of A is fixed by the action
    let oracle = oracle_by_name("infinite-dihedral").unwrap();
    let sub = SubgroupTokens::new(oracle.as_ref(), &["e".into(), "s".into()]).unwrap();
    let ch = group_algebra(&sub.group).unwrap();
    let a_mod = sign_dual_numbers(&ch).unwrap();
    let f = FinSuppFunc::single(2, "e".into(), a_mod.algebra.unit.clone());
    let s_idx = sub.index_of(&"s".to_string()).unwrap();
    let moved = cc_right_action(oracle.as_ref(), &sub, &a_mod, &f, s_idx);
    let expected = FinSuppFunc::single(2, "s".into(), a_mod.algebra.unit.clone());
    // s⁻¹ = s in the dihedral group, so the support lands on s itself
    assert_eq!(moved, expected);
}

#[test]
fn left_translation_of_scalar_functions() {
    // t ⇀ Σ λ_g χ_g = Σ λ_g χ_{g t⁻¹} over the base field
    let oracle = oracle_by_name("infinite-dihedral").unwrap();
    let mut f = FinSuppFunc::zero(1);
    f.set("e".into(), vec![s(2)]);
    f.set("r".into(), vec![s(-3)]);
    let moved = cc_left_action(oracle.as_ref(), &f, &"r".to_string());
    let mut expected = FinSuppFunc::zero(1);
    expected.set("r^-1".into(), vec![s(2)]);
    expected.set("e".into(), vec![s(-3)]);
    assert_eq!(moved, expected);
    let _ = base_field();
}

#[test]
fn equivariant_functions_over_a_finite_group_are_the_symmetrized_span() {
    // for finite G every equivariant function is finitely supported, so
    // the equivariant subspace is spanned by symmetrized indicators and
    // has dimension dimA·|G|/|H|
    let s3 = symmetric(3);
    let oracle = oracle_by_name("symmetric:3").unwrap();
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let tokens = vec!["e".to_string(), s3.labels[t].clone()];
    let sub = SubgroupTokens::new(oracle.as_ref(), &tokens).unwrap();
    let ch = group_algebra(&sub.group).unwrap();
    let a_mod = sign_dual_numbers(&ch).unwrap();

    let mut sym_images: Vec<FinSuppFunc> = Vec::new();
    for g in &s3.labels {
        for a_idx in 0..2 {
            let mut coords = vec![Scalar::zero(); 2];
            coords[a_idx] = Scalar::one();
            let f = FinSuppFunc::single(2, g.clone(), coords);
            let sym = symmetrize(oracle.as_ref(), &sub, &a_mod, &f);
            if !sym.is_zero() {
                assert!(is_equivariant(oracle.as_ref(), &sub, &a_mod, &sym));
                if !sym_images.contains(&sym) {
                    sym_images.push(sym);
                }
            }
        }
    }
    // coordinates over (element, A-basis): rank of the symmetrized span
    let vectors: Vec<Vec<Scalar>> = sym_images
        .iter()
        .map(|f| {
            let mut v = vec![Scalar::zero(); 12];
            for (g, coords) in &f.values {
                let gi = s3.labels.iter().position(|l| l == g).unwrap();
                for (a, c) in coords.iter().enumerate() {
                    v[gi * 2 + a] = c.clone();
                }
            }
            v
        })
        .collect();
    let m = hopfkit::matrix::Matrix::from_columns(&vectors, 12);
    assert_eq!(hopfkit::linsolve::rank(&m), 2 * 6 / 2);
}

#[test]
fn finite_s3_context_passes_with_translation_coefficients() {
    // the oracle path over a finite group, with A = C(Z2) carrying the
    // translation ℂH-action
    let oracle = oracle_by_name("symmetric:3").unwrap();
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let tokens = vec!["e".to_string(), s3.labels[t].clone()];

    let z2 = cyclic(2);
    let algebra = algebra_part(&function_algebra(&z2).unwrap());
    let sub = SubgroupTokens::new(oracle.as_ref(), &tokens).unwrap();
    let hopf = group_algebra(&sub.group).unwrap();
    let mut action = Tensor3::new(2, 2, 2);
    for h in 0..2 {
        for x in 0..2 {
            action.set(h, x, z2.mul(h, x), Scalar::one());
        }
    }
    let a_mod = ModuleAlgebra::new(algebra, hopf, Side::Left, action).unwrap();

    let ctx = InductionContext::new(oracle, &tokens, a_mod).unwrap();
    let cfg = SampleCfg {
        seed: 5,
        samples: 120,
        word_len: 4,
    };
    let compat = prop32_compatibility(&ctx, &cfg);
    assert!(compat.overall, "{}", compat.to_text());
    let witnesses = prop32_witnesses(&ctx, &cfg, 30);
    assert!(witnesses.overall, "{}", witnesses.to_text());
}

#[test]
fn free_group_context_passes_sampled_checks() {
    let oracle = oracle_by_name("free:2").unwrap();
    let tokens = vec!["e".to_string()];
    let ch = group_algebra(&hopfkit::catalog::trivial_group()).unwrap();
    let a_mod = ModuleAlgebra::trivial(
        hopfkit::algebra::dual_numbers(),
        ch,
        Side::Left,
    );
    let ctx = InductionContext::new(oracle, &tokens, a_mod).unwrap();
    let cfg = SampleCfg {
        seed: 3,
        samples: 40,
        word_len: 5,
    };
    let report = prop32_compatibility(&ctx, &cfg);
    assert!(report.overall, "{}", report.to_text());
}

#[test]
fn subgroup_tokens_reject_non_closed_sets() {
    let oracle = oracle_by_name("infinite-dihedral").unwrap();
    let bad = SubgroupTokens::new(oracle.as_ref(), &["e".into(), "r".into()]);
    assert!(bad.is_err());
    let no_identity = SubgroupTokens::new(oracle.as_ref(), &["s".into()]);
    assert!(no_identity.is_err());
}

#[test]
fn local_unit_rings_satisfy_the_builder_invariant() {
    use hopfkit::localunits::{CcFunctionRing, CcSmashRing, IndElement, LocalUnitRing, SmashCc};
    let oracle = oracle_by_name("infinite-dihedral").unwrap();
    let sub = SubgroupTokens::new(oracle.as_ref(), &["e".into(), "s".into()]).unwrap();
    let ch = group_algebra(&sub.group).unwrap();
    let a_mod = sign_dual_numbers(&ch).unwrap();

    let mut f = FinSuppFunc::zero(2);
    f.set("r^3".into(), vec![s(1), s(-2)]);
    f.set("r^-1*s".into(), vec![Scalar::ratio(1, 2), s(0)]);
    let plain = CcFunctionRing {
        oracle: oracle.as_ref(),
        coefficients: &a_mod.algebra,
    };
    assert!(plain.local_unit_is_exact(&[&f]));
    assert!(plain.local_unit_is_exact(&[]));

    let ind = IndElement::project(oracle.as_ref(), &sub, &a_mod, &f);
    assert!(IndElement::certify(oracle.as_ref(), &sub, &a_mod, ind.func().clone()).is_ok());
    assert!(IndElement::certify(oracle.as_ref(), &sub, &a_mod, f.clone()).is_err());

    let smash = CcSmashRing {
        oracle: oracle.as_ref(),
        sub: &sub,
        a_mod: &a_mod,
    };
    let x = SmashCc::single("r^2".into(), ind.into_inner());
    assert!(smash.local_unit_is_exact(&[&x]));
}
