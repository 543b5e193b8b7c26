//! Worked examples for the action layer: module-algebra verdicts,
//! regular dual actions, restriction and twisted tensor actions,
//! invariants, smash products, and the commutant computations.

use hopfkit::actions::{
    endomorphism_algebra, hom_module, invariants, regular_action_via_functional, regular_actions,
    smash_module, smash_product, subgroup_coaction, subgroup_restriction_action, tensor_action,
    verify_module_algebra, coaction_to_action, FiniteModule, ModuleAlgebra, Side,
};
use hopfkit::algebra::{algebra_part, base_field, dual_numbers, tensor_product};
use hopfkit::catalog::{
    cyclic, function_algebra, group_algebra, restriction_morphism, sweedler_projection, symmetric,
    SubgroupEmbedding,
};
use hopfkit::fixtures::{graded_dual_numbers, translation_coefficients, trivial_coefficients};
use hopfkit::hopf::dual;
use hopfkit::matrix::Matrix;
use hopfkit::scalar::Scalar;
use hopfkit::tensor::Tensor3;
use hopfkit::util::pair;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// ℂZ2 swapping the two coordinates of C(Z2): the translation action.
fn swap_action() -> ModuleAlgebra {
    let g = cyclic(2);
    let algebra = algebra_part(&function_algebra(&g).unwrap());
    let hopf = group_algebra(&g).unwrap();
    let mut action = Tensor3::new(2, 2, 2);
    for h in 0..2 {
        for x in 0..2 {
            action.set(h, x, g.mul(h, x), Scalar::one());
        }
    }
    ModuleAlgebra::new(algebra, hopf, Side::Left, action).unwrap()
}

#[test]
fn trivial_and_swap_actions_are_module_algebras() {
    let h = group_algebra(&symmetric(3)).unwrap();
    let trivial = ModuleAlgebra::trivial(dual_numbers(), h, Side::Left);
    assert!(verify_module_algebra(&trivial).all_passed());
    assert!(verify_module_algebra(&swap_action()).all_passed());
}

#[test]
fn broken_swap_action_fails_with_witness() {
    let mut m = swap_action();
    // force g⇀χ_e = χ_e (instead of χ_g): breaks the product rule
    m.action.set(1, 0, 1, Scalar::zero());
    m.action.set(1, 0, 0, Scalar::one());
    let report = verify_module_algebra(&m);
    assert!(!report.all_passed());
    assert!(report.first_failure().unwrap().witness.is_some());
}

#[test]
fn regular_dual_action_on_group_algebra() {
    // ℂ(Z/2) with dual basis δᵉ, δᵍ: δᵍ⇀g = g and δᵍ⇀e = 0
    let h = group_algebra(&cyclic(2)).unwrap();
    let (left, right) = regular_actions(&h).unwrap();
    assert!(verify_module_algebra(&left).all_passed());
    assert!(verify_module_algebra(&right).all_passed());
    assert_eq!(*left.action.get(1, 1, 1), s(1));
    assert!(left.action.get(1, 0, 0).is_zero());
    // ε (unit of the dual) acts as the identity
    let eps = left.hopf.bialgebra.unit.clone();
    for i in 0..2 {
        let mut e = vec![Scalar::zero(); 2];
        e[i] = Scalar::one();
        assert_eq!(left.act(&eps, &e), e);
    }
    // left and right regular actions commute
    for x in 0..2 {
        for y in 0..2 {
            let lx = left.operator(x);
            let ry = right.operator(y);
            assert_eq!(lx.mul(&ry), ry.mul(&lx));
        }
    }
}

#[test]
fn regular_action_matches_the_invariant_functional_formula() {
    for h in [
        function_algebra(&cyclic(2)).unwrap(),
        group_algebra(&cyclic(3)).unwrap(),
        hopfkit::catalog::sweedler4(),
    ] {
        let (left, _) = regular_actions(&h).unwrap();
        for x in 0..h.dim() {
            let mut alpha = vec![Scalar::zero(); h.dim()];
            alpha[x] = Scalar::one();
            let via_functional = regular_action_via_functional(&h, &alpha).unwrap();
            assert_eq!(via_functional, left.operator(x), "basis functional {x}");
        }
    }
}

#[test]
fn restriction_action_translates_indicators() {
    // χ_g ↼ h = χ_{h⁻¹g} on C(S3), for h in the order-2 subgroup
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let m = subgroup_restriction_action(&pi).unwrap();
    assert!(verify_module_algebra(&m).all_passed());
    // Û = dual C(H) has basis δ^{χ_e}, δ^{χ_h}; index 1 acts by g ↦ h⁻¹g
    for g in 0..6 {
        let expected = s3.mul(s3.inv(t), g);
        assert_eq!(*m.action.get(1, g, expected), s(1));
    }
    // the unit of Û acts as the identity
    let eps = m.hopf.bialgebra.unit.clone();
    for g in 0..6 {
        let mut e = vec![Scalar::zero(); 6];
        e[g] = Scalar::one();
        assert_eq!(m.act(&eps, &e), e);
    }
    // the coaction route gives the same structure
    let coact = subgroup_coaction(&pi).unwrap();
    let via = coaction_to_action(&coact).unwrap();
    assert_eq!(via.action, m.action);
}

#[test]
fn tensor_action_collapses_for_trivial_coefficients() {
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = trivial_coefficients(&pi).unwrap();
    let t_act = tensor_action(&a, &pi).unwrap();
    let restr = subgroup_restriction_action(&pi).unwrap();
    // with dim A = 1, the twisted action is exactly the restriction action
    assert_eq!(t_act.action, restr.action);
    // the counit-like basis element of Û acts as the identity
    let eps = t_act.hopf.bialgebra.unit.clone();
    for v in 0..t_act.algebra.dim() {
        let mut e = vec![Scalar::zero(); t_act.algebra.dim()];
        e[v] = Scalar::one();
        assert_eq!(t_act.act(&eps, &e), e);
    }
}

#[test]
fn invariants_of_the_trivial_action_are_everything() {
    let h = dual(&group_algebra(&cyclic(2)).unwrap()).unwrap();
    let m = ModuleAlgebra::trivial(dual_numbers(), h, Side::Right);
    let (sub, report) = invariants(&m).unwrap();
    assert!(report.all_passed());
    assert_eq!(sub.algebra.dim(), 2);
}

#[test]
fn invariants_dimension_scales_with_the_coset_count() {
    // dim C(G)^{ℂH} = |G|/|H| for the tested pairs
    for (g, gen_label) in [(symmetric(3), "(12)"), (cyclic(4), "1"), (cyclic(4), "2")] {
        let gen = g.labels.iter().position(|l| l == gen_label).unwrap();
        let emb = SubgroupEmbedding::cyclic_subgroup(&g, gen).unwrap();
        let order_h = emb.subgroup.order();
        let pi = restriction_morphism(&emb).unwrap();
        let m = subgroup_restriction_action(&pi).unwrap();
        let (sub, _) = invariants(&m).unwrap();
        assert_eq!(sub.algebra.dim(), g.order() / order_h);
    }
}

#[test]
fn induced_action_matches_left_translation_on_functions() {
    // on invariants of C(S3)⊗C(Z2)-type fixtures the induced Ĥ-action
    // is the restriction of δ^{χ_t} ⇀ χ_g = χ_{g t⁻¹}
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = trivial_coefficients(&pi).unwrap();
    let t_act = tensor_action(&a, &pi).unwrap();
    let (inv, _) = invariants(&t_act).unwrap();
    let induced = hopfkit::actions::induced_hat_action(&inv, 1, &pi.source).unwrap();
    for tok in 0..6 {
        for m_idx in 0..inv.algebra.dim() {
            let ambient = inv.embedding.column(m_idx);
            // expected: move each basis coordinate g to g·t⁻¹
            let mut expected = vec![Scalar::zero(); 6];
            for (g, c) in ambient.iter().enumerate() {
                if !c.is_zero() {
                    expected[s3.mul(g, s3.inv(tok))] += c;
                }
            }
            let mut coords = vec![Scalar::zero(); inv.algebra.dim()];
            for (out, c) in induced.action.fix12(tok, m_idx) {
                coords[out] = c.clone();
            }
            assert_eq!(inv.embed(&coords), expected);
        }
    }
}

#[test]
fn smash_of_swap_action_multiplies_by_moving_coefficients() {
    let m = swap_action();
    let smash = smash_product(&m).unwrap();
    assert_eq!(smash.algebra.dim(), 4);
    // (1#g)(a#e) = (g⇀a)#g on basis coefficients a = χ_e, χ_g
    let nk = 2;
    let one_g = {
        let mut v = vec![Scalar::zero(); 4];
        // 1_A = χ_e + χ_g
        v[pair(0, 1, nk)] = s(1);
        v[pair(1, 1, nk)] = s(1);
        v
    };
    for a in 0..2 {
        let mut a_e = vec![Scalar::zero(); 4];
        a_e[pair(a, 0, nk)] = s(1);
        let product = smash.algebra.mul_vec(&one_g, &a_e);
        let mut expected = vec![Scalar::zero(); 4];
        let moved = m.operator(1).apply(&{
            let mut e = vec![Scalar::zero(); 2];
            e[a] = Scalar::one();
            e
        });
        for (b, c) in moved.iter().enumerate() {
            if !c.is_zero() {
                expected[pair(b, 1, nk)] = c.clone();
            }
        }
        assert_eq!(product, expected);
    }
}

#[test]
fn smash_over_the_base_field_hopf_is_the_algebra_itself() {
    let h = group_algebra(&hopfkit::catalog::trivial_group()).unwrap();
    let m = ModuleAlgebra::trivial(dual_numbers(), h, Side::Left);
    let smash = smash_product(&m).unwrap();
    assert_eq!(smash.algebra.dim(), 2);
    assert_eq!(smash.algebra.mult, dual_numbers().mult);
}

#[test]
fn smash_module_unit_sector_acts_by_right_multiplication() {
    // b#ε acts on the A-leg as right multiplication by b
    let pi = sweedler_projection().unwrap();
    let a = graded_dual_numbers(&pi).unwrap();
    let smash = smash_product(&a).unwrap();
    let module = smash_module(&a, &pi, &smash).unwrap();
    let nh = 4;
    let nu = 2;
    let eps_u = a.hopf.bialgebra.unit.clone(); // unit of Û
    for b in 0..2 {
        // ring element b#ε
        let mut r = vec![Scalar::zero(); smash.algebra.dim()];
        for (u, c) in eps_u.iter().enumerate() {
            if !c.is_zero() {
                r[pair(b, u, nu)] = c.clone();
            }
        }
        for av in 0..2 {
            for h in 0..nh {
                let mut v = vec![Scalar::zero(); module.dim];
                v[pair(av, h, nh)] = s(1);
                let moved = module.act(&v, &r);
                // expected: (a·b) ⊗ h
                let ab = a.algebra.mul_basis(av, b);
                let mut expected = vec![Scalar::zero(); module.dim];
                for (c, cv) in ab.iter().enumerate() {
                    if !cv.is_zero() {
                        expected[pair(c, h, nh)] = cv.clone();
                    }
                }
                assert_eq!(moved, expected);
            }
        }
    }
    // 1#β recovers the twisted tensor action
    let t_act = tensor_action(&a, &pi).unwrap();
    for u in 0..nu {
        let mut r = vec![Scalar::zero(); smash.algebra.dim()];
        // 1_A#δ^u with 1_A = basis element 0 of the dual numbers
        r[pair(0, u, nu)] = s(1);
        let mut beta = vec![Scalar::zero(); nu];
        beta[u] = Scalar::one();
        for v_idx in 0..module.dim {
            let mut v = vec![Scalar::zero(); module.dim];
            v[v_idx] = s(1);
            assert_eq!(module.act(&v, &r), t_act.act(&beta, &v));
        }
    }
}

#[test]
fn endomorphisms_of_the_ring_over_itself() {
    let ring = dual_numbers();
    let mut action = Tensor3::new(2, 2, 2);
    for (i, j, k, v) in ring.mult.iter() {
        // right multiplication: m ↼ r = m·r
        action.set(j, i, k, v.clone());
    }
    let module = FiniteModule {
        ring: ring.clone(),
        dim: 2,
        side: Side::Right,
        action,
    };
    let end = endomorphism_algebra(&module).unwrap();
    // commutant of right multiplications = left multiplications ≅ ring
    assert_eq!(end.algebra.dim(), 2);
    let hom = hom_module(&module, &end).unwrap();
    assert_eq!(hom.basis.len(), 2);
}

#[test]
fn endomorphisms_of_a_free_rank_two_module() {
    let ring = dual_numbers();
    let dim = 4; // ring ⊕ ring
    let mut action = Tensor3::new(2, dim, dim);
    for (i, j, k, v) in ring.mult.iter() {
        for slot in 0..2 {
            action.set(j, slot * 2 + i, slot * 2 + k, v.clone());
        }
    }
    let module = FiniteModule {
        ring,
        dim,
        side: Side::Right,
        action,
    };
    let end = endomorphism_algebra(&module).unwrap();
    // 2×2 matrices over the 2-dimensional ring
    assert_eq!(end.algebra.dim(), 8);
}

#[test]
fn commutant_of_the_trivial_subgroup_is_a_full_matrix_algebra() {
    // U = base field: End_A(A⊗H) has dimension dimA·dimH²
    let trivial = hopfkit::catalog::trivial_group();
    let h = function_algebra(&cyclic(2)).unwrap();
    let emb = SubgroupEmbedding::new(trivial.clone(), cyclic(2), vec![0]).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = hopfkit::fixtures::trivial_coefficients_on(dual_numbers(), &pi).unwrap();
    let smash = smash_product(&a).unwrap();
    let module = smash_module(&a, &pi, &smash).unwrap();
    let end = endomorphism_algebra(&module).unwrap();
    assert_eq!(end.algebra.dim(), 2 * 2 * 2); // dimA · dimH²
    let _ = h;
}

#[test]
fn translation_fixture_tensor_action_verifies_over_s3() {
    let s3 = symmetric(3);
    let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
    let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
    let pi = restriction_morphism(&emb).unwrap();
    let a = translation_coefficients(&pi, &cyclic(2)).unwrap();
    let t_act = tensor_action(&a, &pi).unwrap();
    assert_eq!(t_act.algebra.dim(), 12);
    // (a⊗h)↼ε = a⊗h and iterated actions compose through the dual product
    let nu = 2;
    let eps = t_act.hopf.bialgebra.unit.clone();
    for v in 0..12 {
        let mut e = vec![Scalar::zero(); 12];
        e[v] = Scalar::one();
        assert_eq!(t_act.act(&eps, &e), e);
    }
    for b1 in 0..nu {
        for b2 in 0..nu {
            let op1 = t_act.operator(b1);
            let op2 = t_act.operator(b2);
            let mut composite = Matrix::zeros(12, 12);
            for (z, c) in t_act.hopf.bialgebra.mult.fix12(b1, b2) {
                composite = composite.add(&t_act.operator(z).scale(c));
            }
            assert_eq!(op2.mul(&op1), composite);
        }
    }
    let _ = tensor_product(&base_field(), &base_field());
}
