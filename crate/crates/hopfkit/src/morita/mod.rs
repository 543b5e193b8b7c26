//! Morita contexts as first-class verifiable objects.
//!
//! A context holds two rings R, S, an (R,S)-bimodule P, an (S,R)-
//! bimodule Q, and pairings `Γ: P⊗Q → R`, `Λ: Q⊗P → S`. Verification
//! checks the bimodule laws, balancedness and equivariance of both
//! pairings, and the two compatibility identities
//! `Γ(p⊗q)⇀p' = p↼Λ(q⊗p')` and `Λ(q⊗p)⇀q' = q↼Γ(p⊗q')` on all basis
//! triples. Surjectivity of both pairings is certified by explicit
//! preimage combinations; together the certificates witness a Morita
//! equivalence.

mod pipeline;

pub use pipeline::{
    decompose_endomorphism, hom_context, random_equivariant, smash_context, smash_to_end,
    trivial_action_generator, verify_morita_equivalence, SurjectivityStrategy, MoritaPipeline,
};

use serde::{Deserialize, Serialize};

use crate::algebra::UnitalAlgebra;
use crate::linsolve::LinearSolver;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

/// A Morita context on finite-dimensional data. Action tensors are
/// indexed `(ring basis, module in, module out)`; pairing tensors are
/// indexed `(first module, second module, target ring basis)`.
#[derive(Clone, Debug)]
pub struct MoritaContext {
    pub ring_r: UnitalAlgebra,
    pub ring_s: UnitalAlgebra,
    pub dim_p: usize,
    pub dim_q: usize,
    pub p_left_r: Tensor3,
    pub p_right_s: Tensor3,
    pub q_left_s: Tensor3,
    pub q_right_r: Tensor3,
    /// `Γ: P⊗Q → R`
    pub gamma: Tensor3,
    /// `Λ: Q⊗P → S`
    pub lambda: Tensor3,
}

impl MoritaContext {
    pub fn gamma_of(&self, p: usize, q: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ring_r.dim()];
        for (r, v) in self.gamma.fix12(p, q) {
            out[r] = v.clone();
        }
        out
    }

    pub fn lambda_of(&self, q: usize, p: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ring_s.dim()];
        for (s, v) in self.lambda.fix12(q, p) {
            out[s] = v.clone();
        }
        out
    }

    /// Applies a ring element (by coordinates) through an action tensor.
    pub fn act(action: &Tensor3, ring_elt: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let (_, _, dim_out) = action.dims();
        let mut out = vec![Scalar::zero(); dim_out];
        for (r, c) in ring_elt.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m_in, m_out, w) in action.fix1(r) {
                if !v[m_in].is_zero() {
                    out[m_out] += &(&(c * w) * &v[m_in]);
                }
            }
        }
        out
    }

    fn basis_vec(dim: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        v
    }
}

fn module_laws(
    report: &mut CheckReport,
    label: &str,
    ring: &UnitalAlgebra,
    dim: usize,
    action: &Tensor3,
    right_handed: bool,
) {
    let ops: Vec<Matrix> = (0..ring.dim())
        .map(|r| {
            let mut m = Matrix::zeros(dim, dim);
            for (i, o, v) in action.fix1(r) {
                m.set(o, i, v.clone());
            }
            m
        })
        .collect();
    let unit_op = ring
        .unit
        .iter()
        .enumerate()
        .fold(Matrix::zeros(dim, dim), |acc, (r, u)| {
            if u.is_zero() {
                acc
            } else {
                acc.add(&ops[r].scale(u))
            }
        });
    report.record(
        &format!("{label} unital"),
        "bimodule-unital",
        unit_op == Matrix::identity(dim),
        || format!("unit of the ring does not act as identity on {label}"),
    );
    let mut witness = None;
    'outer: for r in 0..ring.dim() {
        for s in 0..ring.dim() {
            let mut lhs = Matrix::zeros(dim, dim);
            for (t, v) in ring.mult.fix12(r, s) {
                lhs = lhs.add(&ops[t].scale(v));
            }
            let rhs = if right_handed {
                ops[s].mul(&ops[r])
            } else {
                ops[r].mul(&ops[s])
            };
            if lhs != rhs {
                witness = Some(format!("({}, {})", ring.label(r), ring.label(s)));
                break 'outer;
            }
        }
    }
    report.record(
        &format!("{label} associative"),
        "bimodule-assoc",
        witness.is_none(),
        || witness.clone().unwrap(),
    );
}

/// Verifies all structural identities of the context on all basis
/// triples: bimodule laws for P and Q, commuting outer actions,
/// balancedness and equivariance of Γ and Λ, and the two compatibility
/// identities.
pub fn verify_compatibility(ctx: &MoritaContext) -> CheckReport {
    let mut report = CheckReport::new("morita-context");
    let (nr, ns) = (ctx.ring_r.dim(), ctx.ring_s.dim());
    let (np, nq) = (ctx.dim_p, ctx.dim_q);
    report.dim("dim R", nr);
    report.dim("dim S", ns);
    report.dim("dim P", np);
    report.dim("dim Q", nq);

    module_laws(&mut report, "P left R-module", &ctx.ring_r, np, &ctx.p_left_r, false);
    module_laws(&mut report, "P right S-module", &ctx.ring_s, np, &ctx.p_right_s, true);
    module_laws(&mut report, "Q left S-module", &ctx.ring_s, nq, &ctx.q_left_s, false);
    module_laws(&mut report, "Q right R-module", &ctx.ring_r, nq, &ctx.q_right_r, true);

    // outer actions commute: (r⇀p)↼s = r⇀(p↼s)
    let mut commute_witness = None;
    'pc: for r in 0..nr {
        for s in 0..ns {
            for p in 0..np {
                let er = MoritaContext::basis_vec(nr, r);
                let es = MoritaContext::basis_vec(ns, s);
                let ep = MoritaContext::basis_vec(np, p);
                let lhs = MoritaContext::act(
                    &ctx.p_right_s,
                    &es,
                    &MoritaContext::act(&ctx.p_left_r, &er, &ep),
                );
                let rhs = MoritaContext::act(
                    &ctx.p_left_r,
                    &er,
                    &MoritaContext::act(&ctx.p_right_s, &es, &ep),
                );
                if lhs != rhs {
                    commute_witness = Some(format!("P at (r{r}, s{s}, p{p})"));
                    break 'pc;
                }
            }
        }
    }
    if commute_witness.is_none() {
        'qc: for s in 0..ns {
            for r in 0..nr {
                for q in 0..nq {
                    let er = MoritaContext::basis_vec(nr, r);
                    let es = MoritaContext::basis_vec(ns, s);
                    let eq = MoritaContext::basis_vec(nq, q);
                    let lhs = MoritaContext::act(
                        &ctx.q_right_r,
                        &er,
                        &MoritaContext::act(&ctx.q_left_s, &es, &eq),
                    );
                    let rhs = MoritaContext::act(
                        &ctx.q_left_s,
                        &es,
                        &MoritaContext::act(&ctx.q_right_r, &er, &eq),
                    );
                    if lhs != rhs {
                        commute_witness = Some(format!("Q at (s{s}, r{r}, q{q})"));
                        break 'qc;
                    }
                }
            }
        }
    }
    report.record(
        "outer actions commute",
        "bimodule-commuting-actions",
        commute_witness.is_none(),
        || commute_witness.clone().unwrap(),
    );

    // Γ balanced over S and R-equivariant on both sides
    let mut witness = None;
    'gb: for p in 0..np {
        for s in 0..ns {
            for q in 0..nq {
                let es = MoritaContext::basis_vec(ns, s);
                let p_s = MoritaContext::act(&ctx.p_right_s, &es, &MoritaContext::basis_vec(np, p));
                let mut lhs = vec![Scalar::zero(); nr];
                for (pi, c) in p_s.iter().enumerate() {
                    if !c.is_zero() {
                        for (r, v) in ctx.gamma.fix12(pi, q) {
                            lhs[r] += &(c * v);
                        }
                    }
                }
                let s_q = MoritaContext::act(&ctx.q_left_s, &es, &MoritaContext::basis_vec(nq, q));
                let mut rhs = vec![Scalar::zero(); nr];
                for (qi, c) in s_q.iter().enumerate() {
                    if !c.is_zero() {
                        for (r, v) in ctx.gamma.fix12(p, qi) {
                            rhs[r] += &(c * v);
                        }
                    }
                }
                if lhs != rhs {
                    witness = Some(format!("(p{p}, s{s}, q{q})"));
                    break 'gb;
                }
            }
        }
    }
    report.record("Γ balanced over S", "gamma-balanced", witness.is_none(), || {
        witness.clone().unwrap()
    });

    let mut witness = None;
    'ge: for r in 0..nr {
        for p in 0..np {
            for q in 0..nq {
                let er = MoritaContext::basis_vec(nr, r);
                let r_p = MoritaContext::act(&ctx.p_left_r, &er, &MoritaContext::basis_vec(np, p));
                let mut lhs = vec![Scalar::zero(); nr];
                for (pi, c) in r_p.iter().enumerate() {
                    if !c.is_zero() {
                        for (t, v) in ctx.gamma.fix12(pi, q) {
                            lhs[t] += &(c * v);
                        }
                    }
                }
                let left = ctx.ring_r.mul_vec(&er, &ctx.gamma_of(p, q));
                if lhs != left {
                    witness = Some(format!("left at (r{r}, p{p}, q{q})"));
                    break 'ge;
                }
                let q_r = MoritaContext::act(&ctx.q_right_r, &er, &MoritaContext::basis_vec(nq, q));
                let mut rhs = vec![Scalar::zero(); nr];
                for (qi, c) in q_r.iter().enumerate() {
                    if !c.is_zero() {
                        for (t, v) in ctx.gamma.fix12(p, qi) {
                            rhs[t] += &(c * v);
                        }
                    }
                }
                let right = ctx.ring_r.mul_vec(&ctx.gamma_of(p, q), &er);
                if rhs != right {
                    witness = Some(format!("right at (r{r}, p{p}, q{q})"));
                    break 'ge;
                }
            }
        }
    }
    report.record("Γ is an R-bimodule map", "gamma-equivariant", witness.is_none(), || {
        witness.clone().unwrap()
    });

    // Λ balanced over R and S-equivariant on both sides
    let mut witness = None;
    'lb: for q in 0..nq {
        for r in 0..nr {
            for p in 0..np {
                let er = MoritaContext::basis_vec(nr, r);
                let q_r = MoritaContext::act(&ctx.q_right_r, &er, &MoritaContext::basis_vec(nq, q));
                let mut lhs = vec![Scalar::zero(); ns];
                for (qi, c) in q_r.iter().enumerate() {
                    if !c.is_zero() {
                        for (s, v) in ctx.lambda.fix12(qi, p) {
                            lhs[s] += &(c * v);
                        }
                    }
                }
                let r_p = MoritaContext::act(&ctx.p_left_r, &er, &MoritaContext::basis_vec(np, p));
                let mut rhs = vec![Scalar::zero(); ns];
                for (pi, c) in r_p.iter().enumerate() {
                    if !c.is_zero() {
                        for (s, v) in ctx.lambda.fix12(q, pi) {
                            rhs[s] += &(c * v);
                        }
                    }
                }
                if lhs != rhs {
                    witness = Some(format!("(q{q}, r{r}, p{p})"));
                    break 'lb;
                }
            }
        }
    }
    report.record("Λ balanced over R", "lambda-balanced", witness.is_none(), || {
        witness.clone().unwrap()
    });

    let mut witness = None;
    'le: for s in 0..ns {
        for q in 0..nq {
            for p in 0..np {
                let es = MoritaContext::basis_vec(ns, s);
                let s_q = MoritaContext::act(&ctx.q_left_s, &es, &MoritaContext::basis_vec(nq, q));
                let mut lhs = vec![Scalar::zero(); ns];
                for (qi, c) in s_q.iter().enumerate() {
                    if !c.is_zero() {
                        for (t, v) in ctx.lambda.fix12(qi, p) {
                            lhs[t] += &(c * v);
                        }
                    }
                }
                let left = ctx.ring_s.mul_vec(&es, &ctx.lambda_of(q, p));
                if lhs != left {
                    witness = Some(format!("left at (s{s}, q{q}, p{p})"));
                    break 'le;
                }
                let p_s = MoritaContext::act(&ctx.p_right_s, &es, &MoritaContext::basis_vec(np, p));
                let mut rhs = vec![Scalar::zero(); ns];
                for (pi, c) in p_s.iter().enumerate() {
                    if !c.is_zero() {
                        for (t, v) in ctx.lambda.fix12(q, pi) {
                            rhs[t] += &(c * v);
                        }
                    }
                }
                let right = ctx.ring_s.mul_vec(&ctx.lambda_of(q, p), &es);
                if rhs != right {
                    witness = Some(format!("right at (s{s}, q{q}, p{p})"));
                    break 'le;
                }
            }
        }
    }
    report.record("Λ is an S-bimodule map", "lambda-equivariant", witness.is_none(), || {
        witness.clone().unwrap()
    });

    // compatibility identities
    let mut witness = None;
    'c1: for p in 0..np {
        for q in 0..nq {
            let g = ctx.gamma_of(p, q);
            for p2 in 0..np {
                let lhs =
                    MoritaContext::act(&ctx.p_left_r, &g, &MoritaContext::basis_vec(np, p2));
                let l = ctx.lambda_of(q, p2);
                let rhs =
                    MoritaContext::act(&ctx.p_right_s, &l, &MoritaContext::basis_vec(np, p));
                if lhs != rhs {
                    witness = Some(format!("(p{p}, q{q}, p{p2})"));
                    break 'c1;
                }
            }
        }
    }
    report.record(
        "Γ(p⊗q)⇀p' = p↼Λ(q⊗p')",
        "morita-compat-left",
        witness.is_none(),
        || witness.clone().unwrap(),
    );

    let mut witness = None;
    'c2: for q in 0..nq {
        for p in 0..np {
            let l = ctx.lambda_of(q, p);
            for q2 in 0..nq {
                let lhs =
                    MoritaContext::act(&ctx.q_left_s, &l, &MoritaContext::basis_vec(nq, q2));
                let g = ctx.gamma_of(p, q2);
                let rhs =
                    MoritaContext::act(&ctx.q_right_r, &g, &MoritaContext::basis_vec(nq, q));
                if lhs != rhs {
                    witness = Some(format!("(q{q}, p{p}, q{q2})"));
                    break 'c2;
                }
            }
        }
    }
    report.record(
        "Λ(q⊗p)⇀q' = q↼Γ(p⊗q')",
        "morita-compat-right",
        witness.is_none(),
        || witness.clone().unwrap(),
    );

    report
}

/// One certified preimage: the target ring basis index together with
/// the explicit combination of `(p, q, coefficient)` simple tensors
/// whose pairing image equals that basis element exactly.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TargetHit {
    pub target: usize,
    pub combination: Vec<(usize, usize, Scalar)>,
}

/// A constructive surjectivity certificate for one pairing.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SurjectivityCertificate {
    pub pairing: String,
    pub hits: Vec<TargetHit>,
}

fn pairing_image_matrix(pairing: &Tensor3, dim_a: usize, dim_b: usize, dim_ring: usize) -> Matrix {
    let mut m = Matrix::zeros(dim_ring, dim_a * dim_b);
    for (a, b, r, v) in pairing.iter() {
        m.set(r, pair(a, b, dim_b), v.clone());
    }
    m
}

/// Verifies a certificate by exact re-evaluation against the pairing.
pub fn certificate_is_exact(
    pairing: &Tensor3,
    dim_ring: usize,
    cert: &SurjectivityCertificate,
) -> bool {
    cert.hits.iter().all(|hit| {
        let mut image = vec![Scalar::zero(); dim_ring];
        for (a, b, c) in &hit.combination {
            for (r, v) in pairing.fix12(*a, *b) {
                image[r] += &(c * v);
            }
        }
        let mut expected = vec![Scalar::zero(); dim_ring];
        expected[hit.target] = Scalar::one();
        image == expected
    })
}

/// Direct surjectivity: solves for a preimage of every ring basis
/// element in the span of all simple-tensor pairing values. Returns the
/// verified certificate, or `None` for that side when the pairing is
/// not surjective.
pub fn verify_surjectivity(
    ctx: &MoritaContext,
) -> (Option<SurjectivityCertificate>, Option<SurjectivityCertificate>) {
    let gamma_cert = surjectivity_of(
        &ctx.gamma,
        ctx.dim_p,
        ctx.dim_q,
        ctx.ring_r.dim(),
        "gamma",
    );
    let lambda_cert = surjectivity_of(
        &ctx.lambda,
        ctx.dim_q,
        ctx.dim_p,
        ctx.ring_s.dim(),
        "lambda",
    );
    (gamma_cert, lambda_cert)
}

fn surjectivity_of(
    pairing: &Tensor3,
    dim_a: usize,
    dim_b: usize,
    dim_ring: usize,
    name: &str,
) -> Option<SurjectivityCertificate> {
    let images = pairing_image_matrix(pairing, dim_a, dim_b, dim_ring);
    let solver = LinearSolver::new(&images);
    let mut hits = Vec::new();
    for target in 0..dim_ring {
        let mut e = vec![Scalar::zero(); dim_ring];
        e[target] = Scalar::one();
        let coeffs = solver.solve(&e)?;
        let combination: Vec<(usize, usize, Scalar)> = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| (flat / dim_b, flat % dim_b, c))
            .collect();
        hits.push(TargetHit {
            target,
            combination,
        });
    }
    let cert = SurjectivityCertificate {
        pairing: name.into(),
        hits,
    };
    debug_assert!(certificate_is_exact(pairing, dim_ring, &cert));
    Some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::base_field;

    /// R = S = P = Q = base field, both pairings multiplication.
    fn trivial_context() -> MoritaContext {
        let mut one = Tensor3::new(1, 1, 1);
        one.set(0, 0, 0, Scalar::one());
        MoritaContext {
            ring_r: base_field(),
            ring_s: base_field(),
            dim_p: 1,
            dim_q: 1,
            p_left_r: one.clone(),
            p_right_s: one.clone(),
            q_left_s: one.clone(),
            q_right_r: one.clone(),
            gamma: one.clone(),
            lambda: one,
        }
    }

    #[test]
    fn trivial_context_passes_and_is_surjective() {
        let ctx = trivial_context();
        assert!(verify_compatibility(&ctx).all_passed());
        let (g, l) = verify_surjectivity(&ctx);
        assert!(g.is_some() && l.is_some());
    }

    #[test]
    fn corrupted_lambda_fails_with_witness() {
        let mut ctx = trivial_context();
        ctx.lambda.set(0, 0, 0, Scalar::from_int(2));
        let report = verify_compatibility(&ctx);
        assert!(!report.all_passed());
        let first = report.first_failure().unwrap();
        assert!(first.witness.is_some());
    }
}
