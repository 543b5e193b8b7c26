//! Smash products, modules over them, and brute-force commutant
//! computations of endomorphism and homomorphism spaces.

use super::{ModuleAlgebra, Side};
use crate::algebra::{verify_unital_algebra, UnitalAlgebra};
use crate::error::Error;
use crate::hopf::HopfMorphism;
use crate::linsolve::{kernel_basis, LinearSolver};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::util::pair;

/// The smash product `A#K` of a left K-module algebra: underlying space
/// `A⊗K` on basis `a#x` (flat index `pair(a, x, dim K)`), product
/// `(a#x)(b#y) = Σ a(x₁⇀b) # x₂y`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub base: ModuleAlgebra,
    pub algebra: UnitalAlgebra,
}

impl SmashProduct {
    pub fn dim_a(&self) -> usize {
        self.base.algebra.dim()
    }

    pub fn dim_hopf(&self) -> usize {
        self.base.hopf.dim()
    }
}

/// Builds and verifies the smash product of a verified left module
/// algebra. With a trivial action the result has the structure
/// constants of the tensor-product algebra.
pub fn smash_product(m: &ModuleAlgebra) -> Result<SmashProduct, Error> {
    if m.side != Side::Left {
        return Err(Error::Inconsistent("smash product needs a left action".into()));
    }
    let axioms = super::verify_module_algebra(m);
    if !axioms.all_passed() {
        return Err(Error::Verification(format!(
            "smash base fails module-algebra axioms ({})",
            axioms.first_failure().unwrap().name
        )));
    }
    let na = m.algebra.dim();
    let nk = m.hopf.dim();
    let n = na * nk;
    let mut basis = Vec::with_capacity(n);
    for a in &m.algebra.basis {
        for k in &m.hopf.bialgebra.basis {
            basis.push(format!("{a}#{k}"));
        }
    }
    let mut mult = Tensor3::new(n, n, n);
    for x in 0..nk {
        for (p, q, v) in m.hopf.bialgebra.comult.fix1(x) {
            for b in 0..na {
                for (c, w) in m.action.fix12(p, b) {
                    // a·(x₁⇀b) over all a, then # x₂y over all y
                    for a in 0..na {
                        for (d, u) in m.algebra.mult.fix12(a, c) {
                            let coef = &(v * w) * u;
                            for y in 0..nk {
                                for (f, z) in m.hopf.bialgebra.mult.fix12(q, y) {
                                    mult.add_to(
                                        pair(a, x, nk),
                                        pair(b, y, nk),
                                        pair(d, f, nk),
                                        &(&coef * z),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    for (a, ua) in m.algebra.unit.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (k, uk) in m.hopf.bialgebra.unit.iter().enumerate() {
            let v = ua * uk;
            if !v.is_zero() {
                unit[pair(a, k, nk)] = v;
            }
        }
    }
    let algebra = UnitalAlgebra { basis, mult, unit };
    let check = verify_unital_algebra(&algebra);
    if !check.all_passed() {
        return Err(Error::Verification(format!(
            "smash product fails algebra axioms ({})",
            check.first_failure().unwrap().name
        )));
    }
    Ok(SmashProduct {
        base: m.clone(),
        algebra,
    })
}

/// A finite-dimensional module over a unital algebra, as an action
/// tensor `(ring basis, in, out)`.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    pub ring: UnitalAlgebra,
    pub dim: usize,
    pub side: Side,
    pub action: Tensor3,
}

impl FiniteModule {
    /// Matrix of one ring basis element acting on the module.
    pub fn operator(&self, r: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (v_in, v_out, c) in self.action.fix1(r) {
            m.set(v_out, v_in, c.clone());
        }
        m
    }

    pub fn act(&self, v: &[Scalar], ring_elt: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (r, c) in ring_elt.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (v_in, v_out, w) in self.action.fix1(r) {
                if !v[v_in].is_zero() {
                    out[v_out] += &(&(c * w) * &v[v_in]);
                }
            }
        }
        out
    }
}

/// Unitality and associativity of a module action on all basis pairs.
pub fn verify_finite_module(m: &FiniteModule) -> crate::report::CheckReport {
    let mut report = crate::report::CheckReport::new("module");
    report.dim("dim ring", m.ring.dim());
    report.dim("dim module", m.dim);
    let ops: Vec<Matrix> = (0..m.ring.dim()).map(|r| m.operator(r)).collect();

    let unit_op = m
        .ring
        .unit
        .iter()
        .enumerate()
        .fold(Matrix::zeros(m.dim, m.dim), |acc, (r, u)| {
            if u.is_zero() {
                acc
            } else {
                acc.add(&ops[r].scale(u))
            }
        });
    report.record("ring unit acts as identity", "module-unital", unit_op == Matrix::identity(m.dim), || {
        "m·1 ≠ m".into()
    });

    let mut witness = None;
    'outer: for r in 0..m.ring.dim() {
        for s in 0..m.ring.dim() {
            let mut lhs = Matrix::zeros(m.dim, m.dim);
            for (t, v) in m.ring.mult.fix12(r, s) {
                lhs = lhs.add(&ops[t].scale(v));
            }
            let rhs = match m.side {
                Side::Right => ops[s].mul(&ops[r]), // m↼(rs) = (m↼r)↼s
                Side::Left => ops[r].mul(&ops[s]),
            };
            if lhs != rhs {
                witness = Some(format!("({}, {})", m.ring.label(r), m.ring.label(s)));
                break 'outer;
            }
        }
    }
    report.record("action respects ring products", "module-assoc", witness.is_none(), || {
        witness.clone().unwrap()
    });
    report
}

/// `A⊗H` as a right module over the smash product `A#Û`:
/// `(a⊗h) ↼ (b#β) = Σ S̄(β₁)⇀(ab) ⊗ h↼β₂`. The right-module axioms are
/// verified on all basis triples.
pub fn smash_module(
    a_mod: &ModuleAlgebra,
    pi: &HopfMorphism,
    smash: &SmashProduct,
) -> Result<FiniteModule, Error> {
    let u_hat = &a_mod.hopf;
    let restr = super::subgroup_restriction_action(pi)?;
    let na = a_mod.algebra.dim();
    let nh = pi.source.dim();
    let nu = u_hat.dim();
    let dim = na * nh;

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

    let mut action = Tensor3::new(smash.algebra.dim(), dim, dim);
    for b in 0..na {
        for (i, j, u, v) in pi.target.bialgebra.mult.iter() {
            // Δ̂(δ^u) = Σ δ^i⊗δ^j; twist ab through S̄(δ^i), move h by δ^j
            for a in 0..na {
                // S̄(δ^i) ⇀ (a·b)
                let ab = a_mod.algebra.mul_basis(a, b);
                let mut twisted_ab = vec![Scalar::zero(); na];
                for (c, cv) in ab.iter().enumerate() {
                    if cv.is_zero() {
                        continue;
                    }
                    for (out, row, w) in twisted[i].iter() {
                        if row == c {
                            twisted_ab[out] += &(cv * w);
                        }
                    }
                }
                for (k, h, vh) in h_ops[j].iter() {
                    for (aa, av) in twisted_ab.iter().enumerate() {
                        if av.is_zero() {
                            continue;
                        }
                        action.add_to(
                            pair(b, u, nu),
                            pair(a, h, nh),
                            pair(aa, k, nh),
                            &(&(v * av) * vh),
                        );
                    }
                }
            }
        }
    }
    let module = FiniteModule {
        ring: smash.algebra.clone(),
        dim,
        side: Side::Right,
        action,
    };
    let report = verify_finite_module(&module);
    if !report.all_passed() {
        return Err(Error::Verification(format!(
            "smash module fails axioms ({})",
            report.first_failure().unwrap().name
        )));
    }
    Ok(module)
}

/// The endomorphism algebra of a module, computed as the commutant
/// `{T : T(m·r) = T(m)·r}` by a kernel computation, together with its
/// generators as matrices. The identity endomorphism is the unit.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: UnitalAlgebra,
    pub generators: Vec<Matrix>,
    /// Vectorized generators (columns of the coordinate solve).
    pub vectorized: Vec<Vec<Scalar>>,
    pub module_dim: usize,
}

impl EndAlgebra {
    pub fn vectorize(t: &Matrix) -> Vec<Scalar> {
        let n = t.rows();
        let mut v = vec![Scalar::zero(); n * n];
        for (r, c, x) in t.iter() {
            v[pair(r, c, n)] = x.clone();
        }
        v
    }

    pub fn solver(&self) -> LinearSolver {
        LinearSolver::new(&Matrix::from_columns(
            &self.vectorized,
            self.module_dim * self.module_dim,
        ))
    }

    /// Coordinates of an endomorphism in the commutant basis.
    pub fn coords_of(&self, t: &Matrix, solver: &LinearSolver) -> Option<Vec<Scalar>> {
        solver.solve(&Self::vectorize(t))
    }

    /// The matrix of an element given by coordinates.
    pub fn matrix_of(&self, coords: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.generators[k].scale(c));
            }
        }
        out
    }
}

/// Computes `End(M)` over the module's ring: solves the commutant
/// system, forms the composition algebra on the kernel basis, and
/// verifies associativity, unitality and that every generator commutes
/// with every ring action operator exactly.
pub fn endomorphism_algebra(m: &FiniteModule) -> Result<EndAlgebra, Error> {
    let n = m.dim;
    let nr = m.ring.dim();
    let ops: Vec<Matrix> = (0..nr).map(|r| m.operator(r)).collect();

    // unknowns T_{o,i} flat pair(o, i, n); equations T·A_r = A_r·T
    let mut system = Matrix::zeros(nr * n * n, n * n);
    for (r, a_r) in ops.iter().enumerate() {
        for (p, i, v) in a_r.iter() {
            for o in 0..n {
                // + (A_r)_{p,i} T_{o,p} at row (r,o,i)
                let row = r * n * n + pair(o, i, n);
                let col = pair(o, p, n);
                let cur = system.get(row, col).clone();
                system.set(row, col, cur + v);
                // - (A_r)_{o,p} T_{p,i}: reuse the same iteration with renamed
                // indices: entry (o', p') = (p, i) contributes to row (r, p, ?)
            }
        }
        for (o, p, v) in a_r.iter() {
            for i in 0..n {
                let row = r * n * n + pair(o, i, n);
                let col = pair(p, i, n);
                let cur = system.get(row, col).clone();
                system.set(row, col, cur - v);
            }
        }
    }
    let vectorized = kernel_basis(&system);
    let generators: Vec<Matrix> = vectorized
        .iter()
        .map(|v| {
            let mut t = Matrix::zeros(n, n);
            for (flat, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    t.set(flat / n, flat % n, x.clone());
                }
            }
            t
        })
        .collect();
    let k = generators.len();

    // exact commutation re-check on every generator and ring operator
    for (gi, t) in generators.iter().enumerate() {
        for (r, a_r) in ops.iter().enumerate() {
            if t.mul(a_r) != a_r.mul(t) {
                return Err(Error::Verification(format!(
                    "commutant solve produced a non-commuting generator (T{gi}, ring {})",
                    m.ring.label(r)
                )));
            }
        }
    }

    let basis_matrix = Matrix::from_columns(&vectorized, n * n);
    let solver = LinearSolver::new(&basis_matrix);
    let unit_coords = solver
        .solve(&EndAlgebra::vectorize(&Matrix::identity(n)))
        .ok_or_else(|| {
            Error::Verification("identity endomorphism missing from the commutant".into())
        })?;
    let mut mult = Tensor3::new(k, k, k);
    for (i, ti) in generators.iter().enumerate() {
        for (j, tj) in generators.iter().enumerate() {
            // composition: (T_i ⋆ T_j)(v) = T_i(T_j(v))
            let comp = ti.mul(tj);
            let coords = solver.solve(&EndAlgebra::vectorize(&comp)).ok_or_else(|| {
                Error::Verification("commutant is not closed under composition".into())
            })?;
            for (t, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    mult.set(i, j, t, c);
                }
            }
        }
    }
    let algebra = UnitalAlgebra {
        basis: (0..k).map(|i| format!("T{i}")).collect(),
        mult,
        unit: unit_coords,
    };
    let check = verify_unital_algebra(&algebra);
    if !check.all_passed() {
        return Err(Error::Verification(format!(
            "endomorphism algebra fails axioms ({})",
            check.first_failure().unwrap().name
        )));
    }
    Ok(EndAlgebra {
        algebra,
        generators,
        vectorized,
        module_dim: n,
    })
}

/// The space `Hom_ring(M, ring)` of right-module maps into the ring,
/// with the left ring action `(r⇀f)(m) = r·f(m)` and the right End
/// action `(f↼T)(m) = f(T(m))`, both expressed in the computed basis.
#[derive(Clone, Debug)]
pub struct HomModule {
    /// Each basis element as a `dim(ring) × dim(module)` matrix.
    pub basis: Vec<Matrix>,
    /// `(ring index, hom in, hom out)`
    pub left_action: Tensor3,
    /// `(end index, hom in, hom out)`
    pub right_action: Tensor3,
}

pub fn hom_module(m: &FiniteModule, end: &EndAlgebra) -> Result<HomModule, Error> {
    if m.side != Side::Right {
        return Err(Error::Inconsistent("hom_module expects a right module".into()));
    }
    let n = m.dim;
    let nr = m.ring.dim();
    let ops: Vec<Matrix> = (0..nr).map(|r| m.operator(r)).collect();
    // right multiplication operators on the ring
    let right_mul: Vec<Matrix> = (0..nr)
        .map(|r| {
            let mut op = Matrix::zeros(nr, nr);
            for s in 0..nr {
                for (t, v) in m.ring.mult.fix12(s, r) {
                    let cur = op.get(t, s).clone();
                    op.set(t, s, cur + v);
                }
            }
            op
        })
        .collect();

    // unknowns f_{s,m} flat pair(s, m, n); equations f(m↼r) = f(m)·r
    let mut system = Matrix::zeros(nr * n * nr, nr * n);
    for r in 0..nr {
        for mm in 0..n {
            for s_out in 0..nr {
                let row = (r * n + mm) * nr + s_out;
                for (p, v) in ops[r]
                    .column(mm)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                {
                    let col = pair(s_out, p, n);
                    let cur = system.get(row, col).clone();
                    system.set(row, col, cur + v);
                }
                for (s, v) in right_mul[r]
                    .row(s_out)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                {
                    let col = pair(s, mm, n);
                    let cur = system.get(row, col).clone();
                    system.set(row, col, cur - v);
                }
            }
        }
    }
    let kernel = kernel_basis(&system);
    let basis: Vec<Matrix> = kernel
        .iter()
        .map(|v| {
            let mut f = Matrix::zeros(nr, n);
            for (flat, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    f.set(flat / n, flat % n, x.clone());
                }
            }
            f
        })
        .collect();
    let nf = basis.len();
    let solver = LinearSolver::new(&Matrix::from_columns(&kernel, nr * n));
    let vec_of = |f: &Matrix| {
        let mut v = vec![Scalar::zero(); nr * n];
        for (r, c, x) in f.iter() {
            v[pair(r, c, n)] = x.clone();
        }
        v
    };

    // left multiplication operators on the ring
    let left_mul: Vec<Matrix> = (0..nr)
        .map(|r| {
            let mut op = Matrix::zeros(nr, nr);
            for s in 0..nr {
                for (t, v) in m.ring.mult.fix12(r, s) {
                    let cur = op.get(t, s).clone();
                    op.set(t, s, cur + v);
                }
            }
            op
        })
        .collect();

    let mut left_action = Tensor3::new(nr, nf, nf);
    for r in 0..nr {
        for (fi, f) in basis.iter().enumerate() {
            let moved = left_mul[r].mul(f);
            let coords = solver.solve(&vec_of(&moved)).ok_or_else(|| {
                Error::Verification("hom space is not closed under the left ring action".into())
            })?;
            for (fo, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    left_action.set(r, fi, fo, c);
                }
            }
        }
    }
    let mut right_action = Tensor3::new(end.generators.len(), nf, nf);
    for (t, tm) in end.generators.iter().enumerate() {
        for (fi, f) in basis.iter().enumerate() {
            let moved = f.mul(tm);
            let coords = solver.solve(&vec_of(&moved)).ok_or_else(|| {
                Error::Verification("hom space is not closed under the right End action".into())
            })?;
            for (fo, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    right_action.set(t, fi, fo, c);
                }
            }
        }
    }
    Ok(HomModule {
        basis,
        left_action,
        right_action,
    })
}
