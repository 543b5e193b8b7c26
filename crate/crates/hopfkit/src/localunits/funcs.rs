//! Finitely supported A-valued functions on a group, the two
//! translation actions, the equivariance projector, local units, and
//! the smash product `C_c(G,A)^{ℂH}#ℂG`.

use std::collections::{BTreeMap, BTreeSet};

use super::oracles::GroupOracle;
use super::GroupElem;
use crate::actions::ModuleAlgebra;
use crate::algebra::UnitalAlgebra;
use crate::catalog::FiniteGroup;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::util::{vec_add_assign, vec_is_zero, vec_scale};

/// A finite subgroup listed by canonical tokens, with its abstract
/// multiplication table (labels = the tokens, identity first not
/// required but the identity must be present).
#[derive(Clone)]
pub struct SubgroupTokens {
    pub tokens: Vec<GroupElem>,
    pub group: FiniteGroup,
}

impl SubgroupTokens {
    pub fn new(oracle: &dyn GroupOracle, raw: &[String]) -> Result<Self, Error> {
        let mut tokens = Vec::with_capacity(raw.len());
        for t in raw {
            tokens.push(oracle.canon(t)?);
        }
        let identity = oracle.identity();
        if !tokens.contains(&identity) {
            return Err(Error::Verification("subgroup does not contain the identity".into()));
        }
        let pos = |t: &GroupElem| tokens.iter().position(|x| x == t);
        let n = tokens.len();
        let mut table = vec![vec![0usize; n]; n];
        for (i, a) in tokens.iter().enumerate() {
            for (j, b) in tokens.iter().enumerate() {
                let prod = oracle.multiply(a, b);
                table[i][j] = pos(&prod).ok_or_else(|| {
                    Error::Verification(format!(
                        "subgroup not closed: {a}·{b} = {prod} is missing"
                    ))
                })?;
            }
        }
        let group = FiniteGroup::new(tokens.clone(), table)?;
        Ok(SubgroupTokens { tokens, group })
    }

    pub fn order(&self) -> usize {
        self.tokens.len()
    }

    pub fn index_of(&self, token: &GroupElem) -> Option<usize> {
        self.tokens.iter().position(|t| t == token)
    }
}

/// A finitely supported function `G → A`, stored as canonical token →
/// nonzero coordinate vector. Also used for elements of `A⊗ℂG`
/// (finitely many `a⊗g` terms keyed by `g`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSuppFunc {
    pub dim_a: usize,
    pub values: BTreeMap<GroupElem, Vec<Scalar>>,
}

impl FinSuppFunc {
    pub fn zero(dim_a: usize) -> Self {
        FinSuppFunc {
            dim_a,
            values: BTreeMap::new(),
        }
    }

    pub fn single(dim_a: usize, g: GroupElem, coords: Vec<Scalar>) -> Self {
        let mut f = FinSuppFunc::zero(dim_a);
        f.set(g, coords);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElem> + '_ {
        self.values.keys()
    }

    pub fn value(&self, g: &GroupElem) -> Vec<Scalar> {
        self.values
            .get(g)
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); self.dim_a])
    }

    pub fn set(&mut self, g: GroupElem, coords: Vec<Scalar>) {
        assert_eq!(coords.len(), self.dim_a, "coefficient dimension mismatch");
        if vec_is_zero(&coords) {
            self.values.remove(&g);
        } else {
            self.values.insert(g, coords);
        }
    }

    pub fn add_at(&mut self, g: &GroupElem, coords: &[Scalar]) {
        let mut cur = self.value(g);
        vec_add_assign(&mut cur, coords);
        self.set(g.clone(), cur);
    }

    pub fn add(&self, other: &FinSuppFunc) -> FinSuppFunc {
        let mut out = self.clone();
        for (g, v) in &other.values {
            out.add_at(g, v);
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> FinSuppFunc {
        let mut out = FinSuppFunc::zero(self.dim_a);
        for (g, v) in &self.values {
            out.set(g.clone(), vec_scale(v, k));
        }
        out
    }

    /// Pointwise product with A-multiplication.
    pub fn mul(&self, other: &FinSuppFunc, a: &UnitalAlgebra) -> FinSuppFunc {
        let mut out = FinSuppFunc::zero(self.dim_a);
        for (g, v) in &self.values {
            if let Some(w) = other.values.get(g) {
                out.set(g.clone(), a.mul_vec(v, w));
            }
        }
        out
    }

    /// Restriction `f·χ_s` to a single point.
    pub fn restrict_to(&self, g: &GroupElem) -> FinSuppFunc {
        match self.values.get(g) {
            Some(v) => FinSuppFunc::single(self.dim_a, g.clone(), v.clone()),
            None => FinSuppFunc::zero(self.dim_a),
        }
    }
}

/// The right translation-and-twist action `(f↼h)(g) = h⁻¹ ⇀ f(hg)`;
/// the support moves by `g ↦ h⁻¹g`.
pub fn cc_right_action(
    oracle: &dyn GroupOracle,
    sub: &SubgroupTokens,
    a_mod: &ModuleAlgebra,
    f: &FinSuppFunc,
    h_idx: usize,
) -> FinSuppFunc {
    let h_inv_idx = sub.group.inv(h_idx);
    let h_inv = &sub.tokens[h_inv_idx];
    let op = a_mod.operator(h_inv_idx);
    let mut out = FinSuppFunc::zero(f.dim_a);
    for (s, v) in &f.values {
        // contributes at g = h⁻¹s the value h⁻¹⇀f(s)
        let g = oracle.multiply(h_inv, s);
        out.add_at(&g, &op.apply(v));
    }
    out
}

/// The left translation action `(t⇀f)(g) = f(gt)`; the support moves by
/// `s ↦ s·t⁻¹`.
pub fn cc_left_action(
    oracle: &dyn GroupOracle,
    f: &FinSuppFunc,
    t: &GroupElem,
) -> FinSuppFunc {
    let t_inv = oracle.invert(t);
    let mut out = FinSuppFunc::zero(f.dim_a);
    for (s, v) in &f.values {
        out.add_at(&oracle.multiply(s, &t_inv), v);
    }
    out
}

/// Whether `f(hg) = h⇀f(g)` holds on every support point and every
/// subgroup element.
pub fn is_equivariant(
    oracle: &dyn GroupOracle,
    sub: &SubgroupTokens,
    a_mod: &ModuleAlgebra,
    f: &FinSuppFunc,
) -> bool {
    let mut points: BTreeSet<GroupElem> = BTreeSet::new();
    for g in f.support() {
        for h in &sub.tokens {
            points.insert(oracle.multiply(h, g));
        }
        points.insert(g.clone());
    }
    for g in &points {
        for (h_idx, h) in sub.tokens.iter().enumerate() {
            let lhs = f.value(&oracle.multiply(h, g));
            let rhs = a_mod.operator(h_idx).apply(&f.value(g));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The averaging projector `(1/|H|) Σ_h f↼h` onto the equivariant
/// functions. Idempotent, and the identity on already-equivariant f.
/// Requires |H| invertible, which always holds over the rationals.
pub fn symmetrize(
    oracle: &dyn GroupOracle,
    sub: &SubgroupTokens,
    a_mod: &ModuleAlgebra,
    f: &FinSuppFunc,
) -> FinSuppFunc {
    let order = Scalar::from_int(sub.order() as i64);
    let inv = order.inv().expect("subgroup order is nonzero");
    let mut acc = FinSuppFunc::zero(f.dim_a);
    for h_idx in 0..sub.order() {
        acc = acc.add(&cc_right_action(oracle, sub, a_mod, f, h_idx));
    }
    acc.scale(&inv)
}

/// A certified H-equivariant finitely supported function: an element of
/// the induced subalgebra. Construction verifies `f(hg) = h⇀f(g)` on
/// every support point and every subgroup element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndElement(FinSuppFunc);

impl IndElement {
    pub fn certify(
        oracle: &dyn GroupOracle,
        sub: &SubgroupTokens,
        a_mod: &ModuleAlgebra,
        f: FinSuppFunc,
    ) -> Result<Self, Error> {
        if !is_equivariant(oracle, sub, a_mod, &f) {
            return Err(Error::Verification(
                "function is not H-equivariant on its support".into(),
            ));
        }
        Ok(IndElement(f))
    }

    /// Projects an arbitrary function and certifies the result.
    pub fn project(
        oracle: &dyn GroupOracle,
        sub: &SubgroupTokens,
        a_mod: &ModuleAlgebra,
        f: &FinSuppFunc,
    ) -> Self {
        IndElement(symmetrize(oracle, sub, a_mod, f))
    }

    pub fn func(&self) -> &FinSuppFunc {
        &self.0
    }

    pub fn into_inner(self) -> FinSuppFunc {
        self.0
    }
}

/// A ring with local units over finitely-supported carriers: a
/// multiplication together with a builder mapping any finite subset to
/// an idempotent acting as a two-sided identity on it.
pub trait LocalUnitRing {
    type Elem;
    fn mul_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn local_unit(&self, request: &[&Self::Elem]) -> Self::Elem;

    /// The builder invariant: the unit is idempotent and fixes every
    /// requested element on both sides.
    fn local_unit_is_exact(&self, request: &[&Self::Elem]) -> bool
    where
        Self::Elem: PartialEq,
    {
        let e = self.local_unit(request);
        if self.mul_elems(&e, &e) != e {
            return false;
        }
        request
            .iter()
            .all(|t| self.mul_elems(&e, t) == **t && self.mul_elems(t, &e) == **t)
    }
}

/// `C_c(G,A)` as a ring with local units.
pub struct CcFunctionRing<'a> {
    pub oracle: &'a dyn GroupOracle,
    pub coefficients: &'a UnitalAlgebra,
}

impl LocalUnitRing for CcFunctionRing<'_> {
    type Elem = FinSuppFunc;

    fn mul_elems(&self, a: &FinSuppFunc, b: &FinSuppFunc) -> FinSuppFunc {
        a.mul(b, self.coefficients)
    }

    fn local_unit(&self, request: &[&FinSuppFunc]) -> FinSuppFunc {
        local_unit_for(self.oracle, self.coefficients, request)
    }
}

/// `C_c(G,A)^{ℂH}#ℂG` as a ring with local units.
pub struct CcSmashRing<'a> {
    pub oracle: &'a dyn GroupOracle,
    pub sub: &'a SubgroupTokens,
    pub a_mod: &'a ModuleAlgebra,
}

impl LocalUnitRing for CcSmashRing<'_> {
    type Elem = SmashCc;

    fn mul_elems(&self, a: &SmashCc, b: &SmashCc) -> SmashCc {
        a.mul(b, self.oracle, &self.a_mod.algebra)
    }

    fn local_unit(&self, request: &[&SmashCc]) -> SmashCc {
        local_unit_for_smash(self.oracle, self.sub, self.a_mod, request)
    }
}

/// A local unit for finitely supported functions: the indicator of the
/// union of supports with value `1_A`. The empty request set returns
/// the indicator of the identity by convention.
pub fn local_unit_for(
    oracle: &dyn GroupOracle,
    a: &UnitalAlgebra,
    funcs: &[&FinSuppFunc],
) -> FinSuppFunc {
    let mut points: BTreeSet<GroupElem> = BTreeSet::new();
    for f in funcs {
        points.extend(f.support().cloned());
    }
    if points.is_empty() {
        points.insert(oracle.identity());
    }
    let mut out = FinSuppFunc::zero(a.dim());
    for g in points {
        out.set(g, a.unit.clone());
    }
    out
}

/// An element of the smash product `C_c(G,A)^{ℂH}#ℂG`: a finite sum
/// `Σ F_t # t` keyed by the group token. Every stored `F_t` is expected
/// to be H-equivariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashCc {
    pub dim_a: usize,
    pub terms: BTreeMap<GroupElem, FinSuppFunc>,
}

impl SmashCc {
    pub fn zero(dim_a: usize) -> Self {
        SmashCc {
            dim_a,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(t: GroupElem, f: FinSuppFunc) -> Self {
        let mut out = SmashCc::zero(f.dim_a);
        out.add_term(&t, &f);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: &GroupElem, f: &FinSuppFunc) {
        if f.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(t.clone())
            .or_insert_with(|| FinSuppFunc::zero(self.dim_a));
        *entry = entry.add(f);
        if entry.is_zero() {
            self.terms.remove(t);
        }
    }

    pub fn add(&self, other: &SmashCc) -> SmashCc {
        let mut out = self.clone();
        for (t, f) in &other.terms {
            out.add_term(t, f);
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> SmashCc {
        let mut out = SmashCc::zero(self.dim_a);
        for (t, f) in &self.terms {
            out.add_term(t, &f.scale(k));
        }
        out
    }

    /// `(F#t)(F'#t') = F·(t⇀F') # tt'` (grouplike comultiplication on
    /// the ℂG leg collapses the coproduct sum).
    pub fn mul(&self, other: &SmashCc, oracle: &dyn GroupOracle, a: &UnitalAlgebra) -> SmashCc {
        let mut out = SmashCc::zero(self.dim_a);
        for (t, f) in &self.terms {
            for (t2, f2) in &other.terms {
                let shifted = cc_left_action(oracle, f2, t);
                let prod = f.mul(&shifted, a);
                out.add_term(&oracle.multiply(t, t2), &prod);
            }
        }
        out
    }
}

/// A local unit `u#e` in the smash product: `u` is the H-saturated
/// indicator of every support appearing in the request set together
/// with its group-leg translates, symmetrized so that `u` is itself
/// equivariant.
pub fn local_unit_for_smash(
    oracle: &dyn GroupOracle,
    sub: &SubgroupTokens,
    a_mod: &ModuleAlgebra,
    elems: &[&SmashCc],
) -> SmashCc {
    let mut points: BTreeSet<GroupElem> = BTreeSet::new();
    for e in elems {
        for (t, f) in &e.terms {
            for g in f.support() {
                points.insert(g.clone());
                points.insert(oracle.multiply(g, t));
            }
        }
    }
    if points.is_empty() {
        points.insert(oracle.identity());
    }
    // H-saturation keeps the indicator equivariant
    let saturated: BTreeSet<GroupElem> = points
        .iter()
        .flat_map(|g| sub.tokens.iter().map(move |h| oracle.multiply(h, g)))
        .chain(points.iter().cloned())
        .collect();
    let mut u = FinSuppFunc::zero(a_mod.algebra.dim());
    for g in saturated {
        u.set(g, a_mod.algebra.unit.clone());
    }
    let sym = symmetrize(oracle, sub, a_mod, &u);
    debug_assert_eq!(sym, u, "saturated unit indicator is already equivariant");
    SmashCc::single(oracle.identity(), sym)
}
