//! Module algebras, comodule algebras and the action/coaction dictionary.
//!
//! Conventions:
//!
//! - an action tensor is indexed `(hopf basis, algebra in, algebra out)`;
//!   for `side = Left` entry `(x, a, b)` is the coefficient of `e_b` in
//!   `e_x ⇀ e_a`, for `side = Right` it is the coefficient in `e_a ↼ e_x`.
//!   Right actions are stored with their flag and are never silently
//!   converted through the antipode;
//! - a right coaction `δ: A → A⊗H` is a `(dimA·dimH) × dimA` matrix with
//!   rows indexed `pair(a, h, dimH)`; a left coaction `δ: A → H⊗A` has
//!   rows `pair(h, a, dimA)`.

mod induced;
mod smash;

pub use induced::{
    check_induced_action_displays, induced_hat_action, invariants, regular_action_via_functional,
    regular_actions, subgroup_coaction, subgroup_restriction_action, tensor_action,
};
pub use smash::{
    endomorphism_algebra, hom_module, smash_module, smash_product, verify_finite_module,
    EndAlgebra, FiniteModule, HomModule, SmashProduct,
};

use crate::algebra::UnitalAlgebra;
use crate::error::Error;
use crate::hopf::{dual, FiniteHopfAlgebra};
use crate::linsolve;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An algebra carrying a Hopf-algebra action.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    pub algebra: UnitalAlgebra,
    pub hopf: FiniteHopfAlgebra,
    pub side: Side,
    pub action: Tensor3,
}

impl ModuleAlgebra {
    pub fn new(
        algebra: UnitalAlgebra,
        hopf: FiniteHopfAlgebra,
        side: Side,
        action: Tensor3,
    ) -> Result<Self, Error> {
        if action.dims() != (hopf.dim(), algebra.dim(), algebra.dim()) {
            return Err(Error::Dimension("action tensor dims mismatch".into()));
        }
        Ok(ModuleAlgebra {
            algebra,
            hopf,
            side,
            action,
        })
    }

    /// The operator of one Hopf basis element on A (columns = images).
    pub fn operator(&self, x: usize) -> Matrix {
        let n = self.algebra.dim();
        let mut m = Matrix::zeros(n, n);
        for (a, b, v) in self.action.fix1(x) {
            m.set(b, a, v.clone());
        }
        m
    }

    /// Applies a Hopf element (given by coordinates) to an algebra element.
    pub fn act(&self, hopf_coords: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let n = self.algebra.dim();
        let mut out = vec![Scalar::zero(); n];
        for (x, hx) in hopf_coords.iter().enumerate() {
            if hx.is_zero() {
                continue;
            }
            for (ai, b, v) in self.action.fix1(x) {
                if !a[ai].is_zero() {
                    out[b] += &(&(hx * v) * &a[ai]);
                }
            }
        }
        out
    }

    /// The trivial action `x ⇀ a = ε(x)a` of any Hopf algebra.
    pub fn trivial(algebra: UnitalAlgebra, hopf: FiniteHopfAlgebra, side: Side) -> Self {
        let mut action = Tensor3::new(hopf.dim(), algebra.dim(), algebra.dim());
        for x in 0..hopf.dim() {
            let eps = hopf.counit[x].clone();
            if eps.is_zero() {
                continue;
            }
            for a in 0..algebra.dim() {
                action.set(x, a, a, eps.clone());
            }
        }
        ModuleAlgebra {
            algebra,
            hopf,
            side,
            action,
        }
    }

    pub fn is_trivial(&self) -> bool {
        let mut expected = Tensor3::new(self.hopf.dim(), self.algebra.dim(), self.algebra.dim());
        for x in 0..self.hopf.dim() {
            let eps = self.hopf.counit[x].clone();
            if eps.is_zero() {
                continue;
            }
            for a in 0..self.algebra.dim() {
                expected.set(x, a, a, eps.clone());
            }
        }
        self.action == expected
    }
}

/// Module and module-algebra axioms, with witnesses. Checks, side-aware:
/// the unit of the Hopf algebra acts as identity, the action respects
/// products of Hopf elements, the measuring axiom
/// `x ⇀ ab = Σ (x₁⇀a)(x₂⇀b)` (mirrored on the right), and
/// `x ⇀ 1 = ε(x)1`.
pub fn verify_module_algebra(m: &ModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("module-algebra");
    let nk = m.hopf.dim();
    let na = m.algebra.dim();
    report.dim("dim hopf", nk);
    report.dim("dim algebra", na);

    let ops: Vec<Matrix> = (0..nk).map(|x| m.operator(x)).collect();

    // 1_K acts as identity
    let unit_op = m
        .hopf
        .bialgebra
        .unit
        .iter()
        .enumerate()
        .fold(Matrix::zeros(na, na), |acc, (x, u)| {
            if u.is_zero() {
                acc
            } else {
                acc.add(&ops[x].scale(u))
            }
        });
    report.record("hopf unit acts as identity", "module-unital", unit_op == Matrix::identity(na), || {
        "1 ⇀ a ≠ a".into()
    });

    // associativity of the action
    let mut assoc_witness = None;
    'assoc: for x in 0..nk {
        for y in 0..nk {
            let mut lhs = Matrix::zeros(na, na);
            for (z, v) in m.hopf.bialgebra.mult.fix12(x, y) {
                lhs = lhs.add(&ops[z].scale(v));
            }
            let rhs = match m.side {
                Side::Left => ops[x].mul(&ops[y]),  // (xy)⇀a = x⇀(y⇀a)
                Side::Right => ops[y].mul(&ops[x]), // a↼(xy) = (a↼x)↼y
            };
            if lhs != rhs {
                assoc_witness = Some(format!(
                    "({}, {})",
                    m.hopf.label(x),
                    m.hopf.label(y)
                ));
                break 'assoc;
            }
        }
    }
    report.record("action respects products", "module-assoc", assoc_witness.is_none(), || {
        assoc_witness.clone().unwrap()
    });

    // measuring axiom
    let mut measuring_witness = None;
    'measuring: for x in 0..nk {
        for a in 0..na {
            for b in 0..na {
                let mut lhs = vec![Scalar::zero(); na];
                for (c, v) in m.algebra.mult.fix12(a, b) {
                    for (d, w) in m.action.fix12(x, c) {
                        lhs[d] += &(v * w);
                    }
                }
                let mut rhs = vec![Scalar::zero(); na];
                for (p, q, v) in m.hopf.bialgebra.comult.fix1(x) {
                    // Left: (x₁⇀a)(x₂⇀b); Right: (a↼x₁)(b↼x₂)
                    for (a2, va) in m.action.fix12(p, a) {
                        for (b2, vb) in m.action.fix12(q, b) {
                            let coef = &(v * va) * vb;
                            for (d, w) in m.algebra.mult.fix12(a2, b2) {
                                rhs[d] += &(&coef * w);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    measuring_witness = Some(format!(
                        "({}, {}, {})",
                        m.hopf.label(x),
                        m.algebra.label(a),
                        m.algebra.label(b)
                    ));
                    break 'measuring;
                }
            }
        }
    }
    report.record(
        "action measures products",
        "module-algebra-measuring",
        measuring_witness.is_none(),
        || measuring_witness.clone().unwrap(),
    );

    // x ⇀ 1 = ε(x)1
    let mut unit_pres = None;
    for x in 0..nk {
        let lhs = m.act(&{
            let mut e = vec![Scalar::zero(); nk];
            e[x] = Scalar::one();
            e
        }, &m.algebra.unit);
        let rhs: Vec<Scalar> = m
            .algebra
            .unit
            .iter()
            .map(|u| &m.hopf.counit[x] * u)
            .collect();
        if lhs != rhs {
            unit_pres = Some(m.hopf.label(x).to_string());
            break;
        }
    }
    report.record(
        "algebra unit scaled by counit",
        "module-algebra-unit",
        unit_pres.is_none(),
        || unit_pres.clone().unwrap(),
    );

    report
}

/// An algebra carrying a Hopf-algebra coaction.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub algebra: UnitalAlgebra,
    pub hopf: FiniteHopfAlgebra,
    pub side: Side,
    pub delta: Matrix,
}

impl Coaction {
    pub fn new(
        algebra: UnitalAlgebra,
        hopf: FiniteHopfAlgebra,
        side: Side,
        delta: Matrix,
    ) -> Result<Self, Error> {
        if delta.rows() != algebra.dim() * hopf.dim() || delta.cols() != algebra.dim() {
            return Err(Error::Dimension("coaction matrix dims mismatch".into()));
        }
        Ok(Coaction {
            algebra,
            hopf,
            side,
            delta,
        })
    }

    /// The regular coaction of a Hopf algebra on itself: `δ = Δ`, as a
    /// right coaction.
    pub fn regular(h: &FiniteHopfAlgebra) -> Self {
        let n = h.dim();
        let mut delta = Matrix::zeros(n * n, n);
        for i in 0..n {
            for (j, k, v) in h.bialgebra.comult.fix1(i) {
                delta.set(pair(j, k, n), i, v.clone());
            }
        }
        Coaction {
            algebra: crate::algebra::algebra_part(h),
            hopf: h.clone(),
            side: Side::Right,
            delta,
        }
    }
}

/// Injectivity, multiplicativity, unitality, the coassociativity square
/// and the counit law of a coaction.
pub fn verify_coaction(c: &Coaction) -> CheckReport {
    let mut report = CheckReport::new("coaction");
    let na = c.algebra.dim();
    let nh = c.hopf.dim();
    report.dim("dim algebra", na);
    report.dim("dim hopf", nh);

    report.record(
        "injective",
        "coaction-injective",
        linsolve::rank(&c.delta) == na,
        || "δ has a kernel".into(),
    );

    // index helpers for the two sides
    let a_of = |row: usize| match c.side {
        Side::Right => row / nh,
        Side::Left => row % na,
    };
    let h_of = |row: usize| match c.side {
        Side::Right => row % nh,
        Side::Left => row / na,
    };
    let row_of = |a: usize, h: usize| match c.side {
        Side::Right => pair(a, h, nh),
        Side::Left => pair(h, a, na),
    };

    // δ(ab) = δ(a)δ(b) in the tensor-product algebra
    let mut mult_witness = None;
    'mult: for a in 0..na {
        for b in 0..na {
            let mut lhs = vec![Scalar::zero(); na * nh];
            for (k, v) in c.algebra.mult.fix12(a, b) {
                for (row, col, w) in c.delta.iter() {
                    if col == k {
                        lhs[row] += &(v * w);
                    }
                }
            }
            let da = c.delta.column(a);
            let db = c.delta.column(b);
            let mut rhs = vec![Scalar::zero(); na * nh];
            for (r1, v1) in da.iter().enumerate() {
                if v1.is_zero() {
                    continue;
                }
                for (r2, v2) in db.iter().enumerate() {
                    if v2.is_zero() {
                        continue;
                    }
                    let coef = v1 * v2;
                    for (a3, va) in c.algebra.mult.fix12(a_of(r1), a_of(r2)) {
                        for (h3, vh) in c.hopf.bialgebra.mult.fix12(h_of(r1), h_of(r2)) {
                            rhs[row_of(a3, h3)] += &(&(&coef * va) * vh);
                        }
                    }
                }
            }
            if lhs != rhs {
                mult_witness = Some(format!("({}, {})", c.algebra.label(a), c.algebra.label(b)));
                break 'mult;
            }
        }
    }
    report.record("multiplicative", "coaction-algebra-hom", mult_witness.is_none(), || {
        mult_witness.clone().unwrap()
    });

    // δ(1) = 1⊗1
    let d_unit = c.delta.apply(&c.algebra.unit);
    let mut expected = vec![Scalar::zero(); na * nh];
    for (a, ua) in c.algebra.unit.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (h, uh) in c.hopf.bialgebra.unit.iter().enumerate() {
            let v = ua * uh;
            if !v.is_zero() {
                expected[row_of(a, h)] = v;
            }
        }
    }
    report.record("unital", "coaction-unital", d_unit == expected, || {
        "δ(1) ≠ 1⊗1".into()
    });

    // coassociativity square: (δ⊗ι)δ = (ι⊗Δ)δ (right), mirrored on the left
    let mut coassoc_witness = None;
    for a in 0..na {
        // both sides live in A⊗H⊗H (right) resp. H⊗H⊗A (left);
        // represent by maps (a', h1, h2) -> Scalar
        let mut lhs: std::collections::BTreeMap<(usize, usize, usize), Scalar> = Default::default();
        let mut rhs: std::collections::BTreeMap<(usize, usize, usize), Scalar> = Default::default();
        for (row, v) in c.delta.column(a).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (a1, h1) = (a_of(row), h_of(row));
            match c.side {
                Side::Right => {
                    // (δ⊗ι): δ(a1) ⊗ h1
                    for (row2, w) in c.delta.column(a1).iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let key = (a_of(row2), h_of(row2), h1);
                        let e = lhs.entry(key).or_insert_with(Scalar::zero);
                        *e += &(v * w);
                        if e.is_zero() {
                            lhs.remove(&key);
                        }
                    }
                    // (ι⊗Δ): a1 ⊗ Δ(h1)
                    for (p, q, w) in c.hopf.bialgebra.comult.fix1(h1) {
                        let key = (a1, p, q);
                        let e = rhs.entry(key).or_insert_with(Scalar::zero);
                        *e += &(v * w);
                        if e.is_zero() {
                            rhs.remove(&key);
                        }
                    }
                }
                Side::Left => {
                    // (ι⊗δ): h1 ⊗ δ(a1)   — keys (a2, h1, h2)
                    for (row2, w) in c.delta.column(a1).iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let key = (a_of(row2), h1, h_of(row2));
                        let e = lhs.entry(key).or_insert_with(Scalar::zero);
                        *e += &(v * w);
                        if e.is_zero() {
                            lhs.remove(&key);
                        }
                    }
                    // (Δ⊗ι): Δ(h1) ⊗ a1
                    for (p, q, w) in c.hopf.bialgebra.comult.fix1(h1) {
                        let key = (a1, p, q);
                        let e = rhs.entry(key).or_insert_with(Scalar::zero);
                        *e += &(v * w);
                        if e.is_zero() {
                            rhs.remove(&key);
                        }
                    }
                }
            }
        }
        if lhs != rhs {
            coassoc_witness = Some(c.algebra.label(a).to_string());
            break;
        }
    }
    report.record(
        "coassociativity square",
        "coaction-coassoc",
        coassoc_witness.is_none(),
        || coassoc_witness.clone().unwrap(),
    );

    // (ι⊗ε)δ = ι
    let mut counit_witness = None;
    for a in 0..na {
        let mut out = vec![Scalar::zero(); na];
        for (row, v) in c.delta.column(a).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            out[a_of(row)] += &(v * &c.hopf.counit[h_of(row)]);
        }
        let mut e = vec![Scalar::zero(); na];
        e[a] = Scalar::one();
        if out != e {
            counit_witness = Some(c.algebra.label(a).to_string());
            break;
        }
    }
    report.record("counit law", "coaction-counit", counit_witness.is_none(), || {
        counit_witness.clone().unwrap()
    });

    report
}

/// The dual action of a coaction: a right H-coaction gives a left
/// Ĥ-module algebra by `α ⇀ a = Σ α(a₁)a₀`, a left H-coaction gives a
/// right Ĥ-module algebra by `a ↼ α = Σ α(a₋₁)a₀`. The output is
/// verified; failure signals an invalid input coaction.
pub fn coaction_to_action(c: &Coaction) -> Result<ModuleAlgebra, Error> {
    let na = c.algebra.dim();
    let nh = c.hopf.dim();
    let hat = dual(&c.hopf)?;
    let mut action = Tensor3::new(nh, na, na);
    for (row, a, v) in c.delta.iter() {
        match c.side {
            Side::Right => {
                let (b, x) = (row / nh, row % nh);
                action.set(x, a, b, v.clone());
            }
            Side::Left => {
                let (x, b) = (row / na, row % na);
                action.set(x, a, b, v.clone());
            }
        }
    }
    let out = ModuleAlgebra::new(
        c.algebra.clone(),
        hat,
        match c.side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        },
        action,
    )?;
    let report = verify_module_algebra(&out);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "dual action fails module-algebra axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(out)
}

/// Inverse dictionary: a left K-module algebra gives a right
/// K̂-comodule algebra (and mirrored). Mutually inverse with
/// [`coaction_to_action`] on the action/coaction tensors.
pub fn action_to_coaction(m: &ModuleAlgebra) -> Result<Coaction, Error> {
    let na = m.algebra.dim();
    let nk = m.hopf.dim();
    let hat = dual(&m.hopf)?;
    let mut delta = Matrix::zeros(na * nk, na);
    for (x, a, b, v) in m.action.iter() {
        match m.side {
            Side::Left => delta.set(pair(b, x, nk), a, v.clone()),
            Side::Right => delta.set(pair(x, b, na), a, v.clone()),
        }
    }
    let out = Coaction::new(
        m.algebra.clone(),
        hat,
        match m.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        },
        delta,
    )?;
    let report = verify_coaction(&out);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "dual coaction fails comodule-algebra axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(out)
}
