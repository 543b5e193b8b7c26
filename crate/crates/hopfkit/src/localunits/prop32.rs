//! The induced Morita context between `C_c(G,A)^{ℂH}#ℂG` and `A#ℂH`
//! for a group G (possibly infinite), a finite subgroup H, and a unital
//! left ℂH-module algebra A: the six displayed bimodule actions, the
//! two pairings, sampled verification of every structural identity, and
//! the constructive surjectivity witnesses.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::funcs::{
    cc_left_action, cc_right_action, is_equivariant, local_unit_for_smash, symmetrize,
    FinSuppFunc, SmashCc, SubgroupTokens,
};
use super::oracles::{random_element, spot_check_oracle, GroupOracle};
use super::GroupElem;
use crate::actions::{smash_product, ModuleAlgebra, SmashProduct};
use crate::error::Error;
use crate::report::{CheckReport, Report};
use crate::scalar::Scalar;
use crate::util::{pair, vec_is_zero};

/// Sampling plan for identity checks over infinite groups; the seed,
/// word-length bound and sample count go into every report.
#[derive(Clone, Copy, Debug)]
pub struct SampleCfg {
    pub seed: u64,
    pub samples: usize,
    pub word_len: usize,
}

impl Default for SampleCfg {
    fn default() -> Self {
        SampleCfg {
            seed: 42,
            samples: 200,
            word_len: 6,
        }
    }
}

/// Everything needed to evaluate the context: the group oracle, the
/// finite subgroup, the coefficient module algebra A over ℂH, and the
/// finite-dimensional smash product `A#ℂH`.
pub struct InductionContext {
    pub oracle: Box<dyn GroupOracle>,
    pub sub: SubgroupTokens,
    pub a_mod: ModuleAlgebra,
    pub smash_s: SmashProduct,
}

impl InductionContext {
    pub fn new(
        oracle: Box<dyn GroupOracle>,
        sub_tokens: &[String],
        a_mod: ModuleAlgebra,
    ) -> Result<Self, Error> {
        let sub = SubgroupTokens::new(oracle.as_ref(), sub_tokens)?;
        // the coefficient action must be an action of ℂH for this subgroup
        let ch = crate::catalog::group_algebra(&sub.group)?;
        if a_mod.hopf.bialgebra.mult != ch.bialgebra.mult
            || a_mod.hopf.bialgebra.comult != ch.bialgebra.comult
            || a_mod.hopf.bialgebra.unit != ch.bialgebra.unit
        {
            return Err(Error::Inconsistent(
                "coefficient algebra is not a module over the subgroup's group algebra".into(),
            ));
        }
        let smash_s = smash_product(&a_mod)?;
        Ok(InductionContext {
            oracle,
            sub,
            a_mod,
            smash_s,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.a_mod.algebra.dim()
    }

    fn oracle(&self) -> &dyn GroupOracle {
        self.oracle.as_ref()
    }

    /// `(F#t ⇀ f)(g) = F(g) f(gt)` — the left action of the big smash
    /// on `P = C_c(G,A)`.
    pub fn p_left_r(&self, r: &SmashCc, f: &FinSuppFunc) -> FinSuppFunc {
        let a = &self.a_mod.algebra;
        let mut out = FinSuppFunc::zero(self.dim_a());
        for (t, big_f) in &r.terms {
            for (g, fg) in &big_f.values {
                let ft = f.value(&self.oracle().multiply(g, t));
                if vec_is_zero(&ft) {
                    continue;
                }
                out.add_at(g, &a.mul_vec(fg, &ft));
            }
        }
        out
    }

    /// `(f ↼ a#h)(g) = h⁻¹ ⇀ (f(hg)·a)` — the right action of `A#ℂH`
    /// on P, extended linearly over the smash coordinates.
    pub fn p_right_s(&self, f: &FinSuppFunc, s: &[Scalar]) -> FinSuppFunc {
        let nh = self.sub.order();
        let a = &self.a_mod.algebra;
        let mut out = FinSuppFunc::zero(self.dim_a());
        for (flat, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a_idx, h_idx) = (flat / nh, flat % nh);
            let h_inv_idx = self.sub.group.inv(h_idx);
            let op = self.a_mod.operator(h_inv_idx);
            for (g0, v) in &f.values {
                // contributes at g = h⁻¹g0
                let g = self
                    .oracle()
                    .multiply(&self.sub.tokens[h_inv_idx], g0);
                let va = a.mul_vec(v, &a.basis_vec(a_idx));
                let moved = op.apply(&va);
                out.add_at(&g, &crate::util::vec_scale(&moved, c));
            }
        }
        out
    }

    /// `b#h ⇀ (a⊗g) = b(h⇀a) ⊗ hg` — the left action of `A#ℂH` on
    /// `Q = A⊗ℂG`.
    pub fn q_left_s(&self, s: &[Scalar], q: &FinSuppFunc) -> FinSuppFunc {
        let nh = self.sub.order();
        let a = &self.a_mod.algebra;
        let mut out = FinSuppFunc::zero(self.dim_a());
        for (flat, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (b_idx, h_idx) = (flat / nh, flat % nh);
            let op = self.a_mod.operator(h_idx);
            for (g, v) in &q.values {
                let moved = a.mul_vec(&a.basis_vec(b_idx), &op.apply(v));
                let hg = self.oracle().multiply(&self.sub.tokens[h_idx], g);
                out.add_at(&hg, &crate::util::vec_scale(&moved, c));
            }
        }
        out
    }

    /// `(a⊗g) ↼ F#t = a·F(g) ⊗ gt` — the right action of the big smash
    /// on Q.
    pub fn q_right_r(&self, q: &FinSuppFunc, r: &SmashCc) -> FinSuppFunc {
        let a = &self.a_mod.algebra;
        let mut out = FinSuppFunc::zero(self.dim_a());
        for (t, big_f) in &r.terms {
            for (g, v) in &q.values {
                let fg = big_f.value(g);
                if vec_is_zero(&fg) {
                    continue;
                }
                out.add_at(
                    &self.oracle().multiply(g, t),
                    &a.mul_vec(v, &fg),
                );
            }
        }
        out
    }

    /// `Γ(f ⊗ (a⊗t)) = Σ_{s∈supp(f)} F_{s,a} # s⁻¹t` with
    /// `F_{s,a}(hs) = h ⇀ (f(s)·a)`; extended linearly over Q.
    pub fn gamma(&self, f: &FinSuppFunc, q: &FinSuppFunc) -> SmashCc {
        let a = &self.a_mod.algebra;
        let mut out = SmashCc::zero(self.dim_a());
        for (t, a_coords) in &q.values {
            for (s, fs) in &f.values {
                let fsa = a.mul_vec(fs, a_coords);
                let mut big_f = FinSuppFunc::zero(self.dim_a());
                for (h_idx, h) in self.sub.tokens.iter().enumerate() {
                    let hs = self.oracle().multiply(h, s);
                    let moved = self.a_mod.operator(h_idx).apply(&fsa);
                    big_f.add_at(&hs, &moved);
                }
                let group_part = self
                    .oracle()
                    .multiply(&self.oracle().invert(s), t);
                out.add_term(&group_part, &big_f);
            }
        }
        out
    }

    /// `Λ((a⊗t) ⊗ f) = Σ_{h∈H} a·(h⇀f(h⁻¹t)) # h`, landing in `A#ℂH`.
    pub fn lambda(&self, q: &FinSuppFunc, f: &FinSuppFunc) -> Vec<Scalar> {
        let nh = self.sub.order();
        let a = &self.a_mod.algebra;
        let mut out = vec![Scalar::zero(); self.smash_s.algebra.dim()];
        for (t, a_coords) in &q.values {
            for h_idx in 0..nh {
                let h_inv = &self.sub.tokens[self.sub.group.inv(h_idx)];
                let fv = f.value(&self.oracle().multiply(h_inv, t));
                if vec_is_zero(&fv) {
                    continue;
                }
                let moved = self.a_mod.operator(h_idx).apply(&fv);
                let prod = a.mul_vec(a_coords, &moved);
                for (a_idx, c) in prod.into_iter().enumerate() {
                    if !c.is_zero() {
                        out[pair(a_idx, h_idx, nh)] += &c;
                    }
                }
            }
        }
        out
    }

    /// A#ℂH multiplication on coordinate vectors.
    pub fn s_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.smash_s.algebra.mul_vec(x, y)
    }

    /// Big-smash multiplication.
    pub fn r_mul(&self, x: &SmashCc, y: &SmashCc) -> SmashCc {
        x.mul(y, self.oracle(), &self.a_mod.algebra)
    }
}

// ---------------------------------------------------------------------
// Seeded random elements
// ---------------------------------------------------------------------

fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::ratio(rng.random_range(-6..=6), rng.random_range(1..=3))
}

fn random_coords(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..dim).map(|_| small_rational(rng)).collect()
}

pub(crate) fn random_fin_supp(
    ctx: &InductionContext,
    rng: &mut ChaCha8Rng,
    cfg: &SampleCfg,
) -> FinSuppFunc {
    let mut f = FinSuppFunc::zero(ctx.dim_a());
    let points = rng.random_range(1..=3);
    for _ in 0..points {
        let g = random_element(ctx.oracle(), rng, cfg.word_len);
        f.add_at(&g, &random_coords(ctx.dim_a(), rng));
    }
    f
}

fn random_invariant(
    ctx: &InductionContext,
    rng: &mut ChaCha8Rng,
    cfg: &SampleCfg,
) -> FinSuppFunc {
    for _ in 0..8 {
        let f = symmetrize(
            ctx.oracle(),
            &ctx.sub,
            &ctx.a_mod,
            &random_fin_supp(ctx, rng, cfg),
        );
        if !f.is_zero() {
            return f;
        }
    }
    // all-zero draws are astronomically unlikely; fall back to a unit
    let mut coords = vec![Scalar::zero(); ctx.dim_a()];
    coords[0] = Scalar::one();
    symmetrize(
        ctx.oracle(),
        &ctx.sub,
        &ctx.a_mod,
        &FinSuppFunc::single(ctx.dim_a(), ctx.oracle().identity(), coords),
    )
}

pub(crate) fn random_smash_r(
    ctx: &InductionContext,
    rng: &mut ChaCha8Rng,
    cfg: &SampleCfg,
) -> SmashCc {
    let mut out = SmashCc::zero(ctx.dim_a());
    let terms = rng.random_range(1..=2);
    for _ in 0..terms {
        let t = random_element(ctx.oracle(), rng, cfg.word_len);
        out.add_term(&t, &random_invariant(ctx, rng, cfg));
    }
    out
}

fn random_s_elem(ctx: &InductionContext, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    random_coords(ctx.smash_s.algebra.dim(), rng)
}

// ---------------------------------------------------------------------
// Sampled verification
// ---------------------------------------------------------------------

/// Checks every structural identity of the induced context on seeded
/// samples: module laws for both bimodules, commuting outer actions,
/// balancedness and equivariance of the pairings, both compatibility
/// identities, local-unit behavior, and the equivariance projector.
pub fn prop32_compatibility(ctx: &InductionContext, cfg: &SampleCfg) -> Report {
    let mut report = Report::new("prop32");
    report.seed = Some(cfg.seed);
    report.samples = Some(cfg.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    report.push_stage(spot_check_oracle(ctx.oracle(), &mut rng, 64));

    let mut stage = CheckReport::new("sample-plan");
    stage.note(format!(
        "seed {}, samples {}, word-length bound {}",
        cfg.seed, cfg.samples, cfg.word_len
    ));
    stage.dim("dim A", ctx.dim_a());
    stage.dim("order H", ctx.sub.order());
    report.push_stage(stage);

    let nh = ctx.sub.order();
    let oracle = ctx.oracle();


    let mut stage = CheckReport::new("translation-actions");
    let mut right_comp = None;
    let mut right_unit = None;
    let mut left_comp = None;
    let mut commute = None;
    for i in 0..cfg.samples {
        let f = random_fin_supp(ctx, &mut rng, cfg);
        let h1 = rng.random_range(0..nh);
        let h2 = rng.random_range(0..nh);
        let lhs = cc_right_action(
            oracle,
            &ctx.sub,
            &ctx.a_mod,
            &cc_right_action(oracle, &ctx.sub, &ctx.a_mod, &f, h1),
            h2,
        );
        let rhs = cc_right_action(oracle, &ctx.sub, &ctx.a_mod, &f, ctx.sub.group.mul(h1, h2));
        if right_comp.is_none() && lhs != rhs {
            right_comp = Some(format!("sample {i}"));
        }
        let e_idx = ctx.sub.index_of(&oracle.identity()).expect("identity in subgroup");
        if right_unit.is_none()
            && cc_right_action(oracle, &ctx.sub, &ctx.a_mod, &f, e_idx) != f
        {
            right_unit = Some(format!("sample {i}"));
        }
        let t1 = random_element(oracle, &mut rng, cfg.word_len);
        let t2 = random_element(oracle, &mut rng, cfg.word_len);
        let lhs = cc_left_action(oracle, &cc_left_action(oracle, &f, &t2), &t1);
        let rhs = cc_left_action(oracle, &f, &oracle.multiply(&t1, &t2));
        if left_comp.is_none() && lhs != rhs {
            left_comp = Some(format!("sample {i}: t⇀(t'⇀f) ≠ (tt')⇀f"));
        }
        let h = rng.random_range(0..nh);
        let lhs = cc_left_action(
            oracle,
            &cc_right_action(oracle, &ctx.sub, &ctx.a_mod, &f, h),
            &t1,
        );
        let rhs = cc_right_action(
            oracle,
            &ctx.sub,
            &ctx.a_mod,
            &cc_left_action(oracle, &f, &t1),
            h,
        );
        if commute.is_none() && lhs != rhs {
            commute = Some(format!("sample {i}"));
        }
    }
    stage.record("right H-action composes", "cc-right-action-module", right_comp.is_none(), || {
        right_comp.clone().unwrap()
    });
    stage.record("identity acts trivially", "cc-right-action-unital", right_unit.is_none(), || {
        right_unit.clone().unwrap()
    });
    stage.record("left G-action composes", "cc-left-action-module", left_comp.is_none(), || {
        left_comp.clone().unwrap()
    });
    stage.record("left and right actions commute", "cc-actions-commute", commute.is_none(), || {
        commute.clone().unwrap()
    });
    report.push_stage(stage);

    let mut stage = CheckReport::new("projector-and-local-units");
    let mut sym_ok = None;
    let mut lu_ok = None;
    for i in 0..cfg.samples.min(64) {
        let f = random_fin_supp(ctx, &mut rng, cfg);
        let sym = symmetrize(oracle, &ctx.sub, &ctx.a_mod, &f);
        if sym_ok.is_none()
            && (!is_equivariant(oracle, &ctx.sub, &ctx.a_mod, &sym)
                || symmetrize(oracle, &ctx.sub, &ctx.a_mod, &sym) != sym)
        {
            sym_ok = Some(format!("sample {i}"));
        }
        let x = random_smash_r(ctx, &mut rng, cfg);
        let u = local_unit_for_smash(oracle, &ctx.sub, &ctx.a_mod, &[&x]);
        if lu_ok.is_none()
            && (ctx.r_mul(&u, &x) != x
                || ctx.r_mul(&x, &u) != x
                || ctx.r_mul(&u, &u) != u)
        {
            lu_ok = Some(format!("sample {i}"));
        }
    }
    stage.record("symmetrize projects onto equivariants", "symmetrize-projector", sym_ok.is_none(), || {
        sym_ok.clone().unwrap()
    });
    stage.record("smash local units are two-sided identities", "local-unit-identity", lu_ok.is_none(), || {
        lu_ok.clone().unwrap()
    });
    report.push_stage(stage);

    let mut stage = CheckReport::new("bimodule-laws");
    let mut p_left = None;
    let mut p_right = None;
    let mut p_commute = None;
    let mut p_unital = None;
    let mut q_left = None;
    let mut q_right = None;
    let mut q_commute = None;
    let mut q_unital = None;
    for i in 0..cfg.samples {
        let p = random_fin_supp(ctx, &mut rng, cfg);
        let q = random_fin_supp(ctx, &mut rng, cfg);
        let r1 = random_smash_r(ctx, &mut rng, cfg);
        let r2 = random_smash_r(ctx, &mut rng, cfg);
        let s1 = random_s_elem(ctx, &mut rng);
        let s2 = random_s_elem(ctx, &mut rng);

        if p_left.is_none()
            && ctx.p_left_r(&ctx.r_mul(&r1, &r2), &p) != ctx.p_left_r(&r1, &ctx.p_left_r(&r2, &p))
        {
            p_left = Some(format!("sample {i}"));
        }
        if p_right.is_none()
            && ctx.p_right_s(&p, &ctx.s_mul(&s1, &s2))
                != ctx.p_right_s(&ctx.p_right_s(&p, &s1), &s2)
        {
            p_right = Some(format!("sample {i}"));
        }
        if p_commute.is_none()
            && ctx.p_right_s(&ctx.p_left_r(&r1, &p), &s1)
                != ctx.p_left_r(&r1, &ctx.p_right_s(&p, &s1))
        {
            p_commute = Some(format!("sample {i}"));
        }
        // request the unit through an element whose support matches supp(p)
        let u = local_unit_for_smash(oracle, &ctx.sub, &ctx.a_mod, &[&SmashCc::single(
            oracle.identity(),
            p.clone(),
        )]);
        if p_unital.is_none()
            && (ctx.p_left_r(&u, &p) != p
                || ctx.p_right_s(&p, &ctx.smash_s.algebra.unit) != p)
        {
            p_unital = Some(format!("sample {i}"));
        }

        if q_left.is_none()
            && ctx.q_left_s(&ctx.s_mul(&s1, &s2), &q) != ctx.q_left_s(&s1, &ctx.q_left_s(&s2, &q))
        {
            q_left = Some(format!("sample {i}"));
        }
        if q_right.is_none()
            && ctx.q_right_r(&q, &ctx.r_mul(&r1, &r2))
                != ctx.q_right_r(&ctx.q_right_r(&q, &r1), &r2)
        {
            q_right = Some(format!("sample {i}"));
        }
        if q_commute.is_none()
            && ctx.q_right_r(&ctx.q_left_s(&s1, &q), &r1)
                != ctx.q_left_s(&s1, &ctx.q_right_r(&q, &r1))
        {
            q_commute = Some(format!("sample {i}"));
        }
        // right local unit on Q: indicator covering supp(q), invariant
        let uq = local_unit_for_smash(oracle, &ctx.sub, &ctx.a_mod, &[&SmashCc::single(
            oracle.identity(),
            q.clone(),
        )]);
        if q_unital.is_none()
            && (ctx.q_right_r(&q, &uq) != q
                || ctx.q_left_s(&ctx.smash_s.algebra.unit, &q) != q)
        {
            q_unital = Some(format!("sample {i}"));
        }
    }
    stage.record("P left module law", "p-left-module", p_left.is_none(), || p_left.clone().unwrap());
    stage.record("P right module law", "p-right-module", p_right.is_none(), || p_right.clone().unwrap());
    stage.record("P outer actions commute", "p-actions-commute", p_commute.is_none(), || {
        p_commute.clone().unwrap()
    });
    stage.record("P unital (local units / unit)", "p-unital", p_unital.is_none(), || {
        p_unital.clone().unwrap()
    });
    stage.record("Q left module law", "q-left-module", q_left.is_none(), || q_left.clone().unwrap());
    stage.record("Q right module law", "q-right-module", q_right.is_none(), || q_right.clone().unwrap());
    stage.record("Q outer actions commute", "q-actions-commute", q_commute.is_none(), || {
        q_commute.clone().unwrap()
    });
    stage.record("Q unital (local units / unit)", "q-unital", q_unital.is_none(), || {
        q_unital.clone().unwrap()
    });
    report.push_stage(stage);

    let mut stage = CheckReport::new("pairings");
    let mut g_balanced = None;
    let mut g_equivariant = None;
    let mut l_balanced = None;
    let mut l_equivariant = None;
    let mut compat_left = None;
    let mut compat_right = None;
    for i in 0..cfg.samples {
        let p = random_fin_supp(ctx, &mut rng, cfg);
        let p2 = random_fin_supp(ctx, &mut rng, cfg);
        let q = random_fin_supp(ctx, &mut rng, cfg);
        let q2 = random_fin_supp(ctx, &mut rng, cfg);
        let r = random_smash_r(ctx, &mut rng, cfg);
        let s = random_s_elem(ctx, &mut rng);

        if g_balanced.is_none()
            && ctx.gamma(&ctx.p_right_s(&p, &s), &q) != ctx.gamma(&p, &ctx.q_left_s(&s, &q))
        {
            g_balanced = Some(format!("sample {i}"));
        }
        if g_equivariant.is_none()
            && (ctx.gamma(&ctx.p_left_r(&r, &p), &q) != ctx.r_mul(&r, &ctx.gamma(&p, &q))
                || ctx.gamma(&p, &ctx.q_right_r(&q, &r)) != ctx.r_mul(&ctx.gamma(&p, &q), &r))
        {
            g_equivariant = Some(format!("sample {i}"));
        }
        if l_balanced.is_none()
            && ctx.lambda(&ctx.q_right_r(&q, &r), &p) != ctx.lambda(&q, &ctx.p_left_r(&r, &p))
        {
            l_balanced = Some(format!("sample {i}"));
        }
        if l_equivariant.is_none()
            && (ctx.lambda(&ctx.q_left_s(&s, &q), &p) != ctx.s_mul(&s, &ctx.lambda(&q, &p))
                || ctx.lambda(&q, &ctx.p_right_s(&p, &s)) != ctx.s_mul(&ctx.lambda(&q, &p), &s))
        {
            l_equivariant = Some(format!("sample {i}"));
        }
        // Γ(p⊗q)⇀p' = p↼Λ(q⊗p')
        if compat_left.is_none()
            && ctx.p_left_r(&ctx.gamma(&p, &q), &p2) != ctx.p_right_s(&p, &ctx.lambda(&q, &p2))
        {
            compat_left = Some(format!("sample {i}"));
        }
        // Λ(q⊗p)⇀q' = q↼Γ(p⊗q')
        if compat_right.is_none()
            && ctx.q_left_s(&ctx.lambda(&q, &p), &q2) != ctx.q_right_r(&q, &ctx.gamma(&p, &q2))
        {
            compat_right = Some(format!("sample {i}"));
        }
    }
    stage.record("Γ balanced over S", "gamma-balanced", g_balanced.is_none(), || {
        g_balanced.clone().unwrap()
    });
    stage.record("Γ is an R-bimodule map", "gamma-equivariant", g_equivariant.is_none(), || {
        g_equivariant.clone().unwrap()
    });
    stage.record("Λ balanced over R", "lambda-balanced", l_balanced.is_none(), || {
        l_balanced.clone().unwrap()
    });
    stage.record("Λ is an S-bimodule map", "lambda-equivariant", l_equivariant.is_none(), || {
        l_equivariant.clone().unwrap()
    });
    stage.record("Γ(p⊗q)⇀p' = p↼Λ(q⊗p')", "morita-compat-left", compat_left.is_none(), || {
        compat_left.clone().unwrap()
    });
    stage.record("Λ(q⊗p)⇀q' = q↼Γ(p⊗q')", "morita-compat-right", compat_right.is_none(), || {
        compat_right.clone().unwrap()
    });
    report.push_stage(stage);

    report
}

// ---------------------------------------------------------------------
// Surjectivity witnesses
// ---------------------------------------------------------------------

/// Builds and verifies the proof's explicit preimages for seeded target
/// elements of both rings:
/// `a#h = Λ((a⊗h) ⊗ (1_A·χ_e))`, and per H-orbit of the support,
/// `F#k = Γ(Σ_s F·χ_s ⊗ (1_A⊗sk))` over one representative s of each
/// orbit. Every witness must evaluate exactly to its target.
pub fn prop32_witnesses(ctx: &InductionContext, cfg: &SampleCfg, targets: usize) -> Report {
    let mut report = Report::new("prop32-witnesses");
    report.seed = Some(cfg.seed);
    report.samples = Some(targets);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let oracle = ctx.oracle();
    let nh = ctx.sub.order();

    let chi_e = {
        let mut f = FinSuppFunc::zero(ctx.dim_a());
        f.set(oracle.identity(), ctx.a_mod.algebra.unit.clone());
        f
    };

    let mut stage = CheckReport::new("lambda-witnesses");
    let mut witness = None;
    for i in 0..targets {
        let target = random_coords(ctx.smash_s.algebra.dim(), &mut rng);
        // preimage Σ_{(a,h)} c_{(a,h)} (e_a⊗h) ⊗ χ_e·1_A
        let mut q = FinSuppFunc::zero(ctx.dim_a());
        for (flat, c) in target.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a_idx, h_idx) = (flat / nh, flat % nh);
            let mut coords = vec![Scalar::zero(); ctx.dim_a()];
            coords[a_idx] = c.clone();
            q.add_at(&ctx.sub.tokens[h_idx], &coords);
        }
        let image = ctx.lambda(&q, &chi_e);
        if witness.is_none() && image != target {
            witness = Some(format!("target {i}"));
        }
    }
    // the zero target has the empty witness
    let zero_img = ctx.lambda(&FinSuppFunc::zero(ctx.dim_a()), &chi_e);
    if witness.is_none() && !vec_is_zero(&zero_img) {
        witness = Some("zero target".into());
    }
    stage.record(
        "a#h = Λ((a⊗h)⊗(1·χ_e)) for seeded targets",
        "lambda-witness",
        witness.is_none(),
        || witness.clone().unwrap(),
    );
    report.push_stage(stage);

    let mut stage = CheckReport::new("gamma-witnesses");
    let mut witness = None;
    for i in 0..targets {
        let target = random_smash_r(ctx, &mut rng, cfg);
        let mut image = SmashCc::zero(ctx.dim_a());
        for (k, big_f) in &target.terms {
            // orbit representatives of supp(F) under left H-translation
            let mut seen: BTreeSet<GroupElem> = BTreeSet::new();
            for s in big_f.support() {
                let orbit: BTreeSet<GroupElem> = ctx
                    .sub
                    .tokens
                    .iter()
                    .map(|h| oracle.multiply(h, s))
                    .collect();
                let representative = orbit.iter().next().expect("orbit nonempty").clone();
                if !seen.insert(representative.clone()) {
                    continue;
                }
                let restricted = big_f.restrict_to(&representative);
                let mut q = FinSuppFunc::zero(ctx.dim_a());
                q.set(
                    oracle.multiply(&representative, k),
                    ctx.a_mod.algebra.unit.clone(),
                );
                image = image.add(&ctx.gamma(&restricted, &q));
            }
        }
        if witness.is_none() && image != target {
            witness = Some(format!("target {i}"));
        }
    }
    stage.record(
        "F#k = Γ(Σ_s Fχ_s ⊗ (1⊗sk)) over orbit representatives",
        "gamma-witness",
        witness.is_none(),
        || witness.clone().unwrap(),
    );
    report.push_stage(stage);

    report
}

// ---------------------------------------------------------------------
// Cross-module consistency against the finite-dimensional pipeline
// ---------------------------------------------------------------------

/// For a finite ambient group, evaluates the induced context through
/// the function-algebra pipeline and requires element-by-element
/// agreement on seeded samples: the invariant subspaces coincide, the
/// ring identifications are algebra maps, and all four bimodule actions
/// and both pairings agree under the identifications. Zero tolerance.
pub fn cross_check_finite(
    group: &crate::catalog::FiniteGroup,
    subgroup_generator: usize,
    a_lu: &ModuleAlgebra,
    seed: u64,
    checks: usize,
) -> Result<Report, Error> {
    use crate::actions::{FiniteModule, HomModule};
    use crate::linsolve::LinearSolver;
    use crate::matrix::Matrix;
    use crate::morita::{smash_context, MoritaPipeline};

    let mut report = Report::new("cross-check");
    report.seed = Some(seed);
    report.samples = Some(checks);

    let emb = crate::catalog::SubgroupEmbedding::cyclic_subgroup(group, subgroup_generator)?;
    let pi = crate::catalog::restriction_morphism(&emb)?;
    let u_hat = crate::hopf::dual(&pi.target)?;

    // the ℂH-module algebra must transport verbatim to a Û-module algebra
    if a_lu.hopf.bialgebra.mult != u_hat.bialgebra.mult
        || a_lu.hopf.bialgebra.comult != u_hat.bialgebra.comult
    {
        return Err(Error::Inconsistent(
            "group-algebra and dual-function-algebra structures disagree".into(),
        ));
    }
    let a_morita = ModuleAlgebra::new(
        a_lu.algebra.clone(),
        u_hat,
        crate::actions::Side::Left,
        a_lu.action.clone(),
    )?;
    let pipeline = MoritaPipeline::build(&a_morita, &pi)?;
    let ctx44 = smash_context(&pipeline)?;

    let sub_tokens: Vec<String> = emb
        .element_map
        .iter()
        .map(|&i| group.labels[i].clone())
        .collect();
    let oracle: Box<dyn GroupOracle> = Box::new(super::oracles::FiniteOracle::new(group.clone()));
    let ctx32 = InductionContext::new(oracle, &sub_tokens, a_lu.clone())?;

    let nh = group.order();
    let na = ctx32.dim_a();
    let n = na * nh;
    let n_hat = pipeline.smash_s.dim_hopf();
    let token_index = |t: &GroupElem| -> Result<usize, Error> {
        group
            .labels
            .iter()
            .position(|l| l == t)
            .ok_or_else(|| Error::Parse(format!("token {t} not in the finite group")))
    };

    // structural identification of the small rings
    let mut stage = CheckReport::new("identifications");
    stage.record(
        "A#ℂH equals A#Û entrywise",
        "cross-small-smash",
        ctx32.smash_s.algebra.mult == pipeline.smash_r.algebra.mult
            && ctx32.smash_s.algebra.unit == pipeline.smash_r.algebra.unit,
        || "structure constants differ".into(),
    );
    report.push_stage(stage);

    let inv_solver = LinearSolver::new(&pipeline.inv.embedding);
    let to_ambient = |f: &FinSuppFunc| -> Result<Vec<Scalar>, Error> {
        let mut v = vec![Scalar::zero(); n];
        for (g, coords) in &f.values {
            let gi = token_index(g)?;
            for (a_idx, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    v[pair(a_idx, gi, nh)] = c.clone();
                }
            }
        }
        Ok(v)
    };
    let to_smash_s = |r: &SmashCc| -> Result<Option<Vec<Scalar>>, Error> {
        let mut out = vec![Scalar::zero(); pipeline.smash_s.algebra.dim()];
        for (t, f) in &r.terms {
            let ti = token_index(t)?;
            let Some(coords) = inv_solver.solve(&to_ambient(f)?) else {
                return Ok(None);
            };
            for (m_idx, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    out[pair(m_idx, ti, n_hat)] += &c;
                }
            }
        }
        Ok(Some(out))
    };
    let module: &FiniteModule = &pipeline.module;
    let hom: &HomModule = &pipeline.hom;
    let hom_vec = |f: &Matrix| {
        let nr = pipeline.smash_r.algebra.dim();
        let mut v = vec![Scalar::zero(); nr * n];
        for (r, c, x) in f.iter() {
            v[pair(r, c, n)] = x.clone();
        }
        v
    };
    let hom_solver = {
        let cols: Vec<Vec<Scalar>> = hom.basis.iter().map(&hom_vec).collect();
        LinearSolver::new(&Matrix::from_columns(
            &cols,
            pipeline.smash_r.algebra.dim() * n,
        ))
    };
    // ι_Q: a Q-element of the induced context becomes the module map
    // m ↦ Λ(q ⊗ m), an element of Hom(A⊗H, A#Û).
    let to_hom = |q: &FinSuppFunc| -> Result<Option<Vec<Scalar>>, Error> {
        let nr = pipeline.smash_r.algebra.dim();
        let mut f_mat = Matrix::zeros(nr, n);
        for m_flat in 0..n {
            let (a_idx, g_idx) = (m_flat / nh, m_flat % nh);
            let mut coords = vec![Scalar::zero(); na];
            coords[a_idx] = Scalar::one();
            let p_elem = FinSuppFunc::single(na, group.labels[g_idx].clone(), coords);
            let s_coords = ctx32.lambda(q, &p_elem);
            for (r, c) in s_coords.into_iter().enumerate() {
                if !c.is_zero() {
                    f_mat.set(r, m_flat, c);
                }
            }
        }
        Ok(hom_solver.solve(&hom_vec(&f_mat)))
    };

    let cfg = SampleCfg {
        seed,
        samples: checks,
        word_len: 4,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stage = CheckReport::new("element-by-element");
    let mut performed = 0usize;
    let mut invariant_w = None;
    let mut ring_w = None;
    let mut pairing_w = None;
    let mut act_p_left_w = None;
    let mut act_p_right_w = None;
    let mut act_q_left_w = None;
    let mut act_q_right_w = None;
    let mut lambda_w = None;

    while performed < checks {
        let round = performed / 8;
        // 1. invariant functions land in the invariant subspace
        let inv_f = random_invariant(&ctx32, &mut rng, &cfg);
        if invariant_w.is_none() && inv_solver.solve(&to_ambient(&inv_f)?).is_none() {
            invariant_w = Some(format!("round {round}: invariant function outside subspace"));
        }
        performed += 1;

        // 2. ring identification is multiplicative
        let r1 = random_smash_r(&ctx32, &mut rng, &cfg);
        let r2 = random_smash_r(&ctx32, &mut rng, &cfg);
        let prod = ctx32.r_mul(&r1, &r2);
        let (i1, i2, ip) = (to_smash_s(&r1)?, to_smash_s(&r2)?, to_smash_s(&prod)?);
        match (i1, i2, ip) {
            (Some(i1), Some(i2), Some(ip)) => {
                if ring_w.is_none() && pipeline.smash_s.algebra.mul_vec(&i1, &i2) != ip {
                    ring_w = Some(format!("round {round}: products disagree"));
                }
            }
            _ => {
                if ring_w.is_none() {
                    ring_w = Some(format!("round {round}: element outside invariant span"));
                }
            }
        }
        performed += 1;

        // 3. Γ agreement: ι_R(Γ32(p⊗q)) = Λ44(ι_P(p) ⊗ ι_Q(q))
        let p = random_fin_supp(&ctx32, &mut rng, &cfg);
        let q = random_fin_supp(&ctx32, &mut rng, &cfg);
        let g32 = to_smash_s(&ctx32.gamma(&p, &q))?;
        let p44 = to_ambient(&p)?;
        let q44 = to_hom(&q)?;
        match (g32, q44.clone()) {
            (Some(g32), Some(q44v)) => {
                let mut g44 = vec![Scalar::zero(); pipeline.smash_s.algebra.dim()];
                for (qi, qc) in p44.iter().enumerate() {
                    if qc.is_zero() {
                        continue;
                    }
                    for (fi, fc) in q44v.iter().enumerate() {
                        if fc.is_zero() {
                            continue;
                        }
                        for (s, v) in ctx44.lambda.fix12(qi, fi) {
                            g44[s] += &(&(qc * fc) * v);
                        }
                    }
                }
                if pairing_w.is_none() && g44 != g32 {
                    pairing_w = Some(format!("round {round}: Γ images disagree"));
                }
            }
            _ => {
                if pairing_w.is_none() {
                    pairing_w = Some(format!("round {round}: Γ image outside spans"));
                }
            }
        }
        performed += 1;

        // 4. Λ agreement: Λ32(q⊗p) = Γ44(ι_Q(q) ⊗ ι_P(p)) = ι_Q(q)(ι_P(p))
        let l32 = ctx32.lambda(&q, &p);
        if let Some(q44v) = &q44 {
            let mut l44 = vec![Scalar::zero(); pipeline.smash_r.algebra.dim()];
            for (fi, fc) in q44v.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                for (qi, qc) in p44.iter().enumerate() {
                    if qc.is_zero() {
                        continue;
                    }
                    for (r, v) in ctx44.gamma.fix12(fi, qi) {
                        l44[r] += &(&(fc * qc) * v);
                    }
                }
            }
            if lambda_w.is_none() && l44 != l32 {
                lambda_w = Some(format!("round {round}: Λ images disagree"));
            }
        }
        performed += 1;

        // 5. left big-smash action on P matches Φ through End
        let r = random_smash_r(&ctx32, &mut rng, &cfg);
        if let Some(ri) = to_smash_s(&r)? {
            let moved32 = to_ambient(&ctx32.p_left_r(&r, &p))?;
            let moved44 = pipeline.phi(&ri).apply(&p44);
            if act_p_left_w.is_none() && moved32 != moved44 {
                act_p_left_w = Some(format!("round {round}"));
            }
        }
        performed += 1;

        // 6. right small-smash action on P matches the twisted module action
        let s = random_coords(pipeline.smash_r.algebra.dim(), &mut rng);
        let moved32 = to_ambient(&ctx32.p_right_s(&p, &s))?;
        let moved44 = module.act(&p44, &s);
        if act_p_right_w.is_none() && moved32 != moved44 {
            act_p_right_w = Some(format!("round {round}"));
        }
        performed += 1;

        // 7. left small-smash action on Q matches the Hom left action
        if let Some(q44v) = &q44 {
            let moved32 = to_hom(&ctx32.q_left_s(&s, &q))?;
            let mut moved44 = vec![Scalar::zero(); hom.basis.len()];
            for (ri, rc) in s.iter().enumerate() {
                if rc.is_zero() {
                    continue;
                }
                for (fi, fc) in q44v.iter().enumerate() {
                    if fc.is_zero() {
                        continue;
                    }
                    for (fo, v) in ctx44.p_left_r.fix12(ri, fi) {
                        moved44[fo] += &(&(rc * fc) * v);
                    }
                }
            }
            if act_q_left_w.is_none() && moved32 != Some(moved44) {
                act_q_left_w = Some(format!("round {round}"));
            }
        }
        performed += 1;

        // 8. right big-smash action on Q matches the Hom right action along Φ
        if let (Some(q44v), Some(ri)) = (&q44, to_smash_s(&r)?) {
            let moved32 = to_hom(&ctx32.q_right_r(&q, &r))?;
            let mut moved44 = vec![Scalar::zero(); hom.basis.len()];
            for (si, sc) in ri.iter().enumerate() {
                if sc.is_zero() {
                    continue;
                }
                for (fi, fc) in q44v.iter().enumerate() {
                    if fc.is_zero() {
                        continue;
                    }
                    for (fo, v) in ctx44.p_right_s.fix12(si, fi) {
                        moved44[fo] += &(&(sc * fc) * v);
                    }
                }
            }
            if act_q_right_w.is_none() && moved32 != Some(moved44) {
                act_q_right_w = Some(format!("round {round}"));
            }
        }
        performed += 1;
    }
    stage.dim("element checks", performed);
    stage.record("invariants coincide", "cross-invariants", invariant_w.is_none(), || {
        invariant_w.clone().unwrap()
    });
    stage.record("big smash maps onto inv#Ĥ multiplicatively", "cross-ring", ring_w.is_none(), || {
        ring_w.clone().unwrap()
    });
    stage.record("Γ pairings agree", "cross-gamma", pairing_w.is_none(), || {
        pairing_w.clone().unwrap()
    });
    stage.record("Λ pairings agree", "cross-lambda", lambda_w.is_none(), || {
        lambda_w.clone().unwrap()
    });
    stage.record("left R-action on P agrees", "cross-p-left", act_p_left_w.is_none(), || {
        act_p_left_w.clone().unwrap()
    });
    stage.record("right S-action on P agrees", "cross-p-right", act_p_right_w.is_none(), || {
        act_p_right_w.clone().unwrap()
    });
    stage.record("left S-action on Q agrees", "cross-q-left", act_q_left_w.is_none(), || {
        act_q_left_w.clone().unwrap()
    });
    stage.record("right R-action on Q agrees", "cross-q-right", act_q_right_w.is_none(), || {
        act_q_right_w.clone().unwrap()
    });
    report.push_stage(stage);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::group_algebra;
    use crate::fixtures::sign_dual_numbers;
    use crate::localunits::oracles::oracle_by_name;

    fn dihedral_ctx() -> InductionContext {
        let oracle = oracle_by_name("infinite-dihedral").unwrap();
        let sub = SubgroupTokens::new(oracle.as_ref(), &["e".into(), "s".into()]).unwrap();
        let ch = group_algebra(&sub.group).unwrap();
        let a_mod = sign_dual_numbers(&ch).unwrap();
        InductionContext::new(oracle, &["e".into(), "s".into()], a_mod).unwrap()
    }

    #[test]
    fn lambda_on_identity_support_picks_single_term() {
        // Λ((a⊗e)⊗(χ_e·1)) = a#e: only h = e contributes
        let ctx = dihedral_ctx();
        let mut chi_e = FinSuppFunc::zero(2);
        chi_e.set("e".into(), ctx.a_mod.algebra.unit.clone());
        let mut q = FinSuppFunc::zero(2);
        q.set("e".into(), vec![Scalar::from_int(3), Scalar::from_int(5)]);
        let out = ctx.lambda(&q, &chi_e);
        let nh = ctx.sub.order();
        let e_idx = ctx.sub.index_of(&"e".to_string()).unwrap();
        let mut expected = vec![Scalar::zero(); ctx.smash_s.algebra.dim()];
        expected[pair(0, e_idx, nh)] = Scalar::from_int(3);
        expected[pair(1, e_idx, nh)] = Scalar::from_int(5);
        assert_eq!(out, expected);
    }

    #[test]
    fn dihedral_context_passes_sampled_compatibility_quickly() {
        let ctx = dihedral_ctx();
        let cfg = SampleCfg {
            seed: 7,
            samples: 25,
            word_len: 5,
        };
        let report = prop32_compatibility(&ctx, &cfg);
        assert!(report.overall, "{}", report.to_text());
    }

    #[test]
    fn dihedral_witnesses_hit_targets() {
        let ctx = dihedral_ctx();
        let cfg = SampleCfg {
            seed: 11,
            samples: 10,
            word_len: 5,
        };
        let report = prop32_witnesses(&ctx, &cfg, 10);
        assert!(report.overall, "{}", report.to_text());
    }
}
