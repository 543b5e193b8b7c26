//! Small end-to-end exercises of the identification pipeline, kept
//! separate from the acceptance suite.

use hopfkit::actions::{regular_actions, verify_module_algebra};
use hopfkit::catalog::{
    cyclic, function_algebra, group_algebra, restriction_morphism, symmetric, sweedler_projection,
    SubgroupEmbedding,
};
use hopfkit::fixtures::trivial_coefficients;
use hopfkit::hopf::{dual, is_compact_quantum_subgroup};
use hopfkit::morita::{smash_to_end, verify_morita_equivalence, SurjectivityStrategy};

#[test]
fn identity_subgroup_of_c2_identifies_smash_with_commutant() {
    // U = H = C(Z2), π = id: the smash (invariants)#Ĥ must match the
    // commutant of the regular module, both of dimension 2.
    let c2 = cyclic(2);
    let emb = SubgroupEmbedding::cyclic_subgroup(&c2, 1).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    assert!(is_compact_quantum_subgroup(&pi).all_passed());
    let a = trivial_coefficients(&pi).unwrap();
    let pipeline = smash_to_end(&a, &pi).unwrap();
    assert_eq!(pipeline.inv.algebra.dim(), 1);
    assert_eq!(pipeline.smash_s.algebra.dim(), 2);
    assert_eq!(pipeline.end.algebra.dim(), 2);
}

#[test]
fn sweedler_subgroup_pipeline_is_morita_equivalence() {
    let pi = sweedler_projection().unwrap();
    let a = trivial_coefficients(&pi).unwrap();
    let report = verify_morita_equivalence(&a, &pi, 42, SurjectivityStrategy::Direct).unwrap();
    assert!(report.overall, "{}", report.to_text());
}

#[test]
fn s3_subgroup_trivial_coefficients_pipeline() {
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = trivial_coefficients(&pi).unwrap();
    let report = verify_morita_equivalence(&a, &pi, 42, SurjectivityStrategy::Direct).unwrap();
    assert!(report.overall, "{}", report.to_text());
}

#[test]
fn regular_actions_are_module_algebras() {
    for h in [
        group_algebra(&cyclic(3)).unwrap(),
        function_algebra(&cyclic(3)).unwrap(),
        hopfkit::catalog::sweedler4(),
    ] {
        let (left, right) = regular_actions(&h).unwrap();
        assert!(verify_module_algebra(&left).all_passed());
        assert!(verify_module_algebra(&right).all_passed());
        let _ = dual(&h).unwrap();
    }
}

#[test]
fn sweedler_graded_coefficients_pipeline() {
    let pi = sweedler_projection().unwrap();
    let a = hopfkit::fixtures::graded_dual_numbers(&pi).unwrap();
    let report = verify_morita_equivalence(&a, &pi, 42, SurjectivityStrategy::Direct).unwrap();
    assert!(report.overall, "{}", report.to_text());
}

#[test]
fn s3_translation_coefficients_pipeline() {
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = hopfkit::fixtures::translation_coefficients(&pi, &cyclic(2)).unwrap();
    let report = verify_morita_equivalence(&a, &pi, 42, SurjectivityStrategy::ReduceToInvariants).unwrap();
    assert!(report.overall, "{}", report.to_text());
}

#[test]
fn cross_check_s3_against_finite_pipeline() {
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let ch = group_algebra(&emb.subgroup).unwrap();
    let a = hopfkit::fixtures::sign_dual_numbers(&ch).unwrap();
    let report = hopfkit::localunits::cross_check_finite(&s3, t, &a, 42, 24).unwrap();
    assert!(report.overall, "{}", report.to_text());
}
