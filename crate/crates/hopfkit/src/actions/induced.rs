//! Actions induced from a quantum subgroup: the regular dual actions,
//! the restriction action, the twisted action on a tensor product, the
//! invariant subalgebra, and the induced action on invariants.

use super::{Coaction, ModuleAlgebra, Side};
use crate::algebra::{algebra_part, subalgebra_from_span, tensor_product, Subalgebra};
use crate::error::Error;
use crate::hopf::{dual, FiniteHopfAlgebra, HopfMorphism};
use crate::linsolve::{kernel_basis, span_contains, LinearSolver};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

/// The regular bimodule-algebra structure of the dual on a Hopf algebra:
/// left action `α ⇀ h = Σ h₁ α(h₂)` and right action `h ↼ μ = Σ μ(h₁) h₂`.
pub fn regular_actions(h: &FiniteHopfAlgebra) -> Result<(ModuleAlgebra, ModuleAlgebra), Error> {
    let n = h.dim();
    let hat = dual(h)?;
    let mut left = Tensor3::new(n, n, n);
    let mut right = Tensor3::new(n, n, n);
    for (i, j, k, v) in h.bialgebra.comult.iter() {
        // Δ(e_i) = Σ e_j ⊗ e_k: δ^x ⇀ e_i = Σ c_i^{jx} e_j
        left.set(k, i, j, v.clone());
        // e_i ↼ δ^x = Σ c_i^{xk} e_k
        right.set(j, i, k, v.clone());
    }
    let left_mod = ModuleAlgebra::new(algebra_part(h), hat.clone(), Side::Left, left)?;
    let right_mod = ModuleAlgebra::new(algebra_part(h), hat, Side::Right, right)?;
    Ok((left_mod, right_mod))
}

/// The left-regular dual action written through the invariant
/// functional: for `α = φ^y` (`φ^y(z) = φ(yz)`), the operator
/// `x ↦ (ι⊗φ)((1⊗y)Δ(x))`. Used as an independent route for checking
/// [`regular_actions`], which is built from the comultiplication tensor.
pub fn regular_action_via_functional(
    h: &FiniteHopfAlgebra,
    alpha: &[Scalar],
) -> Result<Matrix, Error> {
    let b = &h.bialgebra;
    let n = b.dim();
    let phi = crate::hopf::normalized_left_invariant(h)?;
    // solve α = φ^y: α(e_k) = Σ_l y_l φ(e_l e_k)
    let mut pairing = Matrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            let mut acc = Scalar::zero();
            for (p, v) in b.mult.fix12(l, k) {
                acc += &(&phi[p] * v);
            }
            pairing.set(k, l, acc);
        }
    }
    let y = crate::linsolve::solve_linear(&pairing, alpha)?
        .ok_or_else(|| Error::NoSolution("functional is not of the form φ^y".into()))?;
    let mut op = Matrix::zeros(n, n);
    for i in 0..n {
        // (ι⊗φ)((1⊗y)Δ(e_i)) = Σ e_j φ(y e_k)
        for (j, k, v) in b.comult.fix1(i) {
            let mut phi_yk = Scalar::zero();
            for (l, yl) in y.iter().enumerate() {
                if yl.is_zero() {
                    continue;
                }
                for (p, w) in b.mult.fix12(l, k) {
                    phi_yk += &(&(yl * w) * &phi[p]);
                }
            }
            let cur = op.get(j, i).clone();
            op.set(j, i, cur + &(v * &phi_yk));
        }
    }
    Ok(op)
}

/// The left coaction `λ = (π⊗ι)Δ : H → U⊗H` of a quantum subgroup.
pub fn subgroup_coaction(pi: &HopfMorphism) -> Result<Coaction, Error> {
    let nh = pi.source.dim();
    let nu = pi.target.dim();
    let mut delta = Matrix::zeros(nu * nh, nh);
    for i in 0..nh {
        for (j, k, v) in pi.source.bialgebra.comult.fix1(i) {
            for (u, w) in pi.image_basis(j).iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let row = pair(u, k, nh);
                let cur = delta.get(row, i).clone();
                delta.set(row, i, cur + &(v * w));
            }
        }
    }
    Coaction::new(
        algebra_part(&pi.source),
        pi.target.clone(),
        Side::Left,
        delta,
    )
}

/// The right Û-module-algebra structure on H induced by a quantum
/// subgroup: `x ↼ β = Σ β(π(x₁)) x₂`. Coincides with the dual action of
/// the coaction `λ = (π⊗ι)Δ`.
pub fn subgroup_restriction_action(pi: &HopfMorphism) -> Result<ModuleAlgebra, Error> {
    let coact = subgroup_coaction(pi)?;
    let via_coaction = super::coaction_to_action(&coact)?;
    // direct construction from the displayed formula, as a cross-check
    let nh = pi.source.dim();
    let nu = pi.target.dim();
    let mut action = Tensor3::new(nu, nh, nh);
    for i in 0..nh {
        for (j, k, v) in pi.source.bialgebra.comult.fix1(i) {
            for (u, w) in pi.image_basis(j).iter().enumerate() {
                if !w.is_zero() {
                    action.add_to(u, i, k, &(v * w));
                }
            }
        }
    }
    if action != via_coaction.action {
        return Err(Error::Inconsistent(
            "restriction action differs from the dual of the subgroup coaction".into(),
        ));
    }
    Ok(via_coaction)
}

/// The right Û-action on A⊗H twisting the A-leg through the inverse
/// antipode: `(a⊗h) ↼ β = Σ S̄(β₁)⇀a ⊗ h↼β₂`, for A a left Û-module
/// algebra. The output is verified as a right module algebra.
pub fn tensor_action(
    a_mod: &ModuleAlgebra,
    pi: &HopfMorphism,
) -> Result<ModuleAlgebra, Error> {
    if a_mod.side != Side::Left {
        return Err(Error::Inconsistent("coefficient algebra must carry a left action".into()));
    }
    let u_hat = &a_mod.hopf;
    // the coefficient action must be an action of the dual of the subgroup
    let expected = dual(&pi.target)?;
    if u_hat.bialgebra.mult != expected.bialgebra.mult
        || u_hat.bialgebra.comult != expected.bialgebra.comult
        || u_hat.bialgebra.unit != expected.bialgebra.unit
    {
        return Err(Error::Inconsistent(
            "coefficient algebra is not a module over the dual of the subgroup".into(),
        ));
    }
    let restr = subgroup_restriction_action(pi)?;
    let na = a_mod.algebra.dim();
    let nh = pi.source.dim();
    let nu = u_hat.dim();
    let tensor_alg = tensor_product(&a_mod.algebra, &algebra_part(&pi.source));

    // operators S̄(δ^i) ⇀ · on A
    let a_ops: Vec<Matrix> = (0..nu).map(|p| a_mod.operator(p)).collect();
    let twisted: Vec<Matrix> = (0..nu)
        .map(|i| {
            let mut op = Matrix::zeros(na, na);
            for (p, a_op) in a_ops.iter().enumerate() {
                let coef = u_hat.antipode_inv.get(p, i);
                if !coef.is_zero() {
                    op = op.add(&a_op.scale(coef));
                }
            }
            op
        })
        .collect();
    let h_ops: Vec<Matrix> = (0..nu).map(|j| restr.operator(j)).collect();

    let mut action = Tensor3::new(nu, na * nh, na * nh);
    // Δ̂(δ^u) = Σ_{i,j} m_U[(i,j,u)] δ^i ⊗ δ^j
    for (i, j, u, v) in pi.target.bialgebra.mult.iter() {
        for (b, a, va) in twisted[i].iter() {
            for (k, h, vh) in h_ops[j].iter() {
                action.add_to(
                    u,
                    pair(a, h, nh),
                    pair(b, k, nh),
                    &(&(v * va) * vh),
                );
            }
        }
    }
    let out = ModuleAlgebra::new(tensor_alg, u_hat.clone(), Side::Right, action)?;
    let report = super::verify_module_algebra(&out);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "twisted tensor action fails module-algebra axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(out)
}

/// The invariant subalgebra `{m : m↼β = ε(β)m for all β}` of a right
/// module algebra, computed as a kernel and certified closed under
/// multiplication. The bimodule-style characterization
/// `(my)↼β = m(y↼β)` and `(ym)↼β = (y↼β)m` (for all y) is computed as a
/// second kernel and the two subspaces are required to coincide.
pub fn invariants(m: &ModuleAlgebra) -> Result<(Subalgebra, CheckReport), Error> {
    if m.side != Side::Right {
        return Err(Error::Inconsistent("invariants expect a right action".into()));
    }
    let mut report = CheckReport::new("invariants");
    let nk = m.hopf.dim();
    let na = m.algebra.dim();

    let mut system = Matrix::zeros(nk * na, na);
    for (x, a_in, a_out, v) in m.action.iter() {
        let row = pair(x, a_out, na);
        let cur = system.get(row, a_in).clone();
        system.set(row, a_in, cur + v);
    }
    for x in 0..nk {
        let eps = m.hopf.counit[x].clone();
        if eps.is_zero() {
            continue;
        }
        for a in 0..na {
            let row = pair(x, a, na);
            let cur = system.get(row, a).clone();
            system.set(row, a, cur - &eps);
        }
    }
    let span = kernel_basis(&system);
    report.dim("dim invariants", span.len());

    // bimodule-style system: (my)↼β = m(y↼β) and (ym)↼β = (y↼β)m
    let mut bimodule = Matrix::zeros(2 * nk * na * na, na);
    for x in 0..nk {
        for y in 0..na {
            for out in 0..na {
                let row1 = pair(x, pair(y, out, na), na * na);
                let row2 = nk * na * na + row1;
                for m_in in 0..na {
                    let mut c1 = Scalar::zero();
                    let mut c2 = Scalar::zero();
                    for (c, v) in m.algebra.mult.fix12(m_in, y) {
                        c1 += &(v * m.action.get(x, c, out));
                    }
                    for (c, v) in m.action.fix12(x, y) {
                        c1 -= &(v * m.algebra.mult.get(m_in, c, out));
                        c2 -= &(v * m.algebra.mult.get(c, m_in, out));
                    }
                    for (c, v) in m.algebra.mult.fix12(y, m_in) {
                        c2 += &(v * m.action.get(x, c, out));
                    }
                    if !c1.is_zero() {
                        let cur = bimodule.get(row1, m_in).clone();
                        bimodule.set(row1, m_in, cur + c1);
                    }
                    if !c2.is_zero() {
                        let cur = bimodule.get(row2, m_in).clone();
                        bimodule.set(row2, m_in, cur + c2);
                    }
                }
            }
        }
    }
    let bimodule_span = kernel_basis(&bimodule);
    let agree = span.len() == bimodule_span.len()
        && span
            .iter()
            .all(|v| matches!(span_contains(&bimodule_span, v), Ok(Some(_))))
        && bimodule_span
            .iter()
            .all(|v| matches!(span_contains(&span, v), Ok(Some(_))));
    report.record(
        "counit condition matches bimodule condition",
        "invariants-two-characterizations",
        agree,
        || {
            format!(
                "counit-condition dim {} vs bimodule-condition dim {}",
                span.len(),
                bimodule_span.len()
            )
        },
    );
    if !agree {
        return Err(Error::Inconsistent(
            "invariant subspace characterizations disagree".into(),
        ));
    }

    let sub = subalgebra_from_span(&m.algebra, &span, "inv")?;
    report.record("closed under multiplication", "invariants-subalgebra", true, String::new);
    Ok((sub, report))
}

/// Restricts the H-leg regular action `α ⇀ (a⊗h) = a ⊗ (α⇀h)` to the
/// invariant subalgebra, verifying the subspace is preserved. `dim_a`
/// and `hopf_h` describe the ambient tensor factors.
pub fn induced_hat_action(
    inv: &Subalgebra,
    dim_a: usize,
    hopf_h: &FiniteHopfAlgebra,
) -> Result<ModuleAlgebra, Error> {
    let hat = dual(hopf_h)?;
    let nh = hopf_h.dim();
    let n_inv = inv.algebra.dim();
    let solver = LinearSolver::new(&inv.embedding);
    let mut action = Tensor3::new(hat.dim(), n_inv, n_inv);
    for x in 0..hat.dim() {
        for m_idx in 0..n_inv {
            let ambient = inv.embedding.column(m_idx);
            let mut moved = vec![Scalar::zero(); dim_a * nh];
            for (flat, v) in ambient.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let (a, h) = (flat / nh, flat % nh);
                // δ^x ⇀ e_h = Σ_j c_h^{jx} e_j
                for (j, k, w) in hopf_h.bialgebra.comult.fix1(h) {
                    if k == x {
                        moved[pair(a, j, nh)] += &(v * w);
                    }
                }
            }
            let coords = solver.solve(&moved).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "induced action does not preserve the invariant subspace at (δ^{}, inv{})",
                    hopf_h.label(x),
                    m_idx
                ))
            })?;
            for (out, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    action.set(x, m_idx, out, c);
                }
            }
        }
    }
    let out = ModuleAlgebra::new(inv.algebra.clone(), hat, Side::Left, action)?;
    let report = super::verify_module_algebra(&out);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "induced action fails module-algebra axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(out)
}

/// Evaluates the multiplier-style formulas for the induced action,
///   `(α⇀m)·x = Σ α₁⇀(m·(S(α₂)⇀x))` and
///   `x·(α⇀m) = Σ α₂⇀((S⁻¹(α₁)⇀x)·m)`,
/// on every basis triple and compares them with the plain restricted
/// action. Any counterexample is reported verbatim.
pub fn check_induced_action_displays(
    inv: &Subalgebra,
    induced: &ModuleAlgebra,
    ambient_alg: &crate::algebra::UnitalAlgebra,
    hopf_h: &FiniteHopfAlgebra,
) -> CheckReport {
    let mut report = CheckReport::new("induced-action-displays");
    let nh = hopf_h.dim();
    let n_amb = ambient_alg.dim();
    let dim_a = n_amb / nh;
    let hat = &induced.hopf;
    let n_hat = hat.dim();

    // ambient operators of δ^x on A⊗H (regular action on the H leg)
    let ops: Vec<Matrix> = (0..n_hat)
        .map(|x| {
            let mut op = Matrix::zeros(n_amb, n_amb);
            for h in 0..nh {
                for (j, k, w) in hopf_h.bialgebra.comult.fix1(h) {
                    if k == x {
                        for a in 0..dim_a {
                            let cur = op.get(pair(a, j, nh), pair(a, h, nh)).clone();
                            op.set(pair(a, j, nh), pair(a, h, nh), cur + w);
                        }
                    }
                }
            }
            op
        })
        .collect();
    let s_hat = hat.antipode.clone();
    let s_hat_inv = hat.antipode_inv.clone();

    // Δ̂(δ^t) = Σ_{i,j} m_H[(i,j,t)] δ^i⊗δ^j: bucket the multiplication
    // tensor by its output index.
    let mut hat_comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n_hat];
    for (i, j, t, v) in hopf_h.bialgebra.mult.iter() {
        hat_comult[t].push((i, j, v.clone()));
    }

    let mut left_witness = None;
    let mut right_witness = None;
    for alpha in 0..n_hat {
        for m_idx in 0..inv.algebra.dim() {
            let alpha_m = {
                let mut e = vec![Scalar::zero(); inv.algebra.dim()];
                for (out, c) in induced.action.fix12(alpha, m_idx) {
                    e[out] = c.clone();
                }
                inv.embed(&e)
            };
            let m_amb = inv.embedding.column(m_idx);
            for x in 0..n_amb {
                let ex = {
                    let mut e = vec![Scalar::zero(); n_amb];
                    e[x] = Scalar::one();
                    e
                };
                let lhs1 = ambient_alg.mul_vec(&alpha_m, &ex);
                let lhs2 = ambient_alg.mul_vec(&ex, &alpha_m);
                let mut rhs1 = vec![Scalar::zero(); n_amb];
                let mut rhs2 = vec![Scalar::zero(); n_amb];
                for &(i, j, ref v) in &hat_comult[alpha] {
                    // S(α₂) ⇀ x, then m·(...), then α₁ ⇀ (...)
                    let mut s_j_x = vec![Scalar::zero(); n_amb];
                    for (p, c) in s_hat.column(j).iter().enumerate() {
                        if !c.is_zero() {
                            let moved = ops[p].apply(&ex);
                            for (t, mv) in moved.into_iter().enumerate() {
                                s_j_x[t] += &(c * &mv);
                            }
                        }
                    }
                    let m_times = ambient_alg.mul_vec(&m_amb, &s_j_x);
                    let moved = ops[i].apply(&m_times);
                    for (t, mv) in moved.into_iter().enumerate() {
                        rhs1[t] += &(v * &mv);
                    }

                    // S⁻¹(α₁) ⇀ x, then (...)·m, then α₂ ⇀ (...)
                    let mut sbar_i_x = vec![Scalar::zero(); n_amb];
                    for (p, c) in s_hat_inv.column(i).iter().enumerate() {
                        if !c.is_zero() {
                            let moved = ops[p].apply(&ex);
                            for (t, mv) in moved.into_iter().enumerate() {
                                sbar_i_x[t] += &(c * &mv);
                            }
                        }
                    }
                    let times_m = ambient_alg.mul_vec(&sbar_i_x, &m_amb);
                    let moved = ops[j].apply(&times_m);
                    for (t, mv) in moved.into_iter().enumerate() {
                        rhs2[t] += &(v * &mv);
                    }
                }
                if left_witness.is_none() && lhs1 != rhs1 {
                    left_witness = Some(format!("(α={}, m=inv{}, x={})", hat.label(alpha), m_idx, x));
                }
                if right_witness.is_none() && lhs2 != rhs2 {
                    right_witness = Some(format!("(α={}, m=inv{}, x={})", hat.label(alpha), m_idx, x));
                }
            }
        }
    }
    report.record(
        "left multiplier formula",
        "induced-action-left-display",
        left_witness.is_none(),
        || left_witness.clone().unwrap(),
    );
    report.record(
        "right multiplier formula",
        "induced-action-right-display",
        right_witness.is_none(),
        || right_witness.clone().unwrap(),
    );
    report
}
