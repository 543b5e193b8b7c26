//! Axiom verification and counit/antipode derivation.

use std::collections::BTreeMap;

use super::{FiniteDimBialgebra, FiniteHopfAlgebra};
use crate::error::Error;
use crate::linsolve::{self, solve_linear};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::util::pair;

type PairMap = BTreeMap<(usize, usize), Scalar>;

fn add_pair(map: &mut PairMap, key: (usize, usize), v: Scalar) {
    if v.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Scalar::zero);
    *entry += &v;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// Checks associativity, unitality, coassociativity and that Δ is a
/// unital algebra homomorphism. Failures carry the basis witnesses.
pub fn verify_bialgebra(b: &FiniteDimBialgebra) -> CheckReport {
    let n = b.dim();
    let mut report = CheckReport::new("bialgebra");
    report.dim("dim", n);

    // (e_i e_j) e_k = e_i (e_j e_k)
    let mut assoc_witness = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = b.mul_basis(i, j);
            for k in 0..n {
                let jk = b.mul_basis(j, k);
                let mut left = vec![Scalar::zero(); n];
                for (p, c) in ij.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (l, v) in b.mult.fix12(p, k) {
                        left[l] += &(c * v);
                    }
                }
                let mut right = vec![Scalar::zero(); n];
                for (q, c) in jk.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (l, v) in b.mult.fix12(i, q) {
                        right[l] += &(c * v);
                    }
                }
                if left != right {
                    assoc_witness = Some(format!(
                        "({}, {}, {})",
                        b.label(i),
                        b.label(j),
                        b.label(k)
                    ));
                    break 'assoc;
                }
            }
        }
    }
    report.record("associativity", "mult-assoc", assoc_witness.is_none(), || {
        assoc_witness.clone().unwrap()
    });

    // 1·e_j = e_j = e_j·1
    let mut unit_witness = None;
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        if b.mul_vec(&b.unit, &e) != e {
            unit_witness = Some(format!("left unit at {}", b.label(j)));
            break;
        }
        if b.mul_vec(&e, &b.unit) != e {
            unit_witness = Some(format!("right unit at {}", b.label(j)));
            break;
        }
    }
    report.record("unitality", "mult-unital", unit_witness.is_none(), || {
        unit_witness.clone().unwrap()
    });

    // (Δ⊗ι)Δ = (ι⊗Δ)Δ on every basis element
    let mut coassoc_witness = None;
    for i in 0..n {
        let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (p, k, v) in b.comult.fix1(i) {
            for (l, m, w) in b.comult.fix1(p) {
                let entry = lhs.entry((l, m, k)).or_insert_with(Scalar::zero);
                *entry += &(v * w);
                if entry.is_zero() {
                    lhs.remove(&(l, m, k));
                }
            }
        }
        for (l, p, v) in b.comult.fix1(i) {
            for (m, k, w) in b.comult.fix1(p) {
                let entry = rhs.entry((l, m, k)).or_insert_with(Scalar::zero);
                *entry += &(v * w);
                if entry.is_zero() {
                    rhs.remove(&(l, m, k));
                }
            }
        }
        if lhs != rhs {
            coassoc_witness = Some(b.label(i).to_string());
            break;
        }
    }
    report.record("coassociativity", "comult-coassoc", coassoc_witness.is_none(), || {
        coassoc_witness.clone().unwrap()
    });

    // Δ(e_i e_j) = Δ(e_i)Δ(e_j)
    let mut mult_witness = None;
    'multiplicative: for i in 0..n {
        for j in 0..n {
            let mut lhs = PairMap::new();
            for (k, c) in b.mul_basis(i, j).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, m, v) in b.comult.fix1(k) {
                    add_pair(&mut lhs, (l, m), c * v);
                }
            }
            let mut rhs = PairMap::new();
            for (p, q, v) in b.comult.fix1(i) {
                for (r, s, w) in b.comult.fix1(j) {
                    let coef = v * w;
                    for (l, a) in b.mult.fix12(p, r) {
                        for (m, c) in b.mult.fix12(q, s) {
                            add_pair(&mut rhs, (l, m), &(&coef * a) * c);
                        }
                    }
                }
            }
            if lhs != rhs {
                mult_witness = Some(format!("({}, {})", b.label(i), b.label(j)));
                break 'multiplicative;
            }
        }
    }
    report.record(
        "comult multiplicative",
        "comult-algebra-hom",
        mult_witness.is_none(),
        || mult_witness.clone().unwrap(),
    );

    // Δ(1) = 1⊗1
    let mut delta_unit = PairMap::new();
    for (i, u) in b.unit.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, k, v) in b.comult.fix1(i) {
            add_pair(&mut delta_unit, (j, k), u * v);
        }
    }
    let mut expected = PairMap::new();
    for (j, uj) in b.unit.iter().enumerate() {
        for (k, uk) in b.unit.iter().enumerate() {
            add_pair(&mut expected, (j, k), uj * uk);
        }
    }
    report.record(
        "comult unital",
        "comult-preserves-unit",
        delta_unit == expected,
        || "Δ(1) differs from 1⊗1".into(),
    );

    if let Some(counit) = &b.counit {
        let (ok, witness) = counit_laws_hold(b, counit);
        report.record("supplied counit laws", "counit-laws", ok, || witness.unwrap());
    }
    report
}

fn counit_laws_hold(b: &FiniteDimBialgebra, counit: &[Scalar]) -> (bool, Option<String>) {
    let n = b.dim();
    for i in 0..n {
        let mut left = vec![Scalar::zero(); n];
        let mut right = vec![Scalar::zero(); n];
        for (j, k, v) in b.comult.fix1(i) {
            left[k] += &(&counit[j] * v);
            right[j] += &(&counit[k] * v);
        }
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        if left != e {
            return (false, Some(format!("(ε⊗ι)Δ at {}", b.label(i))));
        }
        if right != e {
            return (false, Some(format!("(ι⊗ε)Δ at {}", b.label(i))));
        }
    }
    (true, None)
}

/// Solves for the unique counit with `(ε⊗ι)Δ = ι = (ι⊗ε)Δ`.
pub fn solve_counit(b: &FiniteDimBialgebra) -> Result<Vec<Scalar>, Error> {
    let n = b.dim();
    let mut system = Matrix::zeros(2 * n * n, n);
    let mut rhs = vec![Scalar::zero(); 2 * n * n];
    for i in 0..n {
        for (j, k, v) in b.comult.fix1(i) {
            // row block 1, rows (i,k): Σ_j c_i^{jk} ε_j = δ_{ik}
            let row = pair(i, k, n);
            let cur = system.get(row, j).clone();
            system.set(row, j, cur + v);
            // row block 2, rows (i,j): Σ_k c_i^{jk} ε_k = δ_{ij}
            let row2 = n * n + pair(i, j, n);
            let cur2 = system.get(row2, k).clone();
            system.set(row2, k, cur2 + v);
        }
        rhs[pair(i, i, n)] = Scalar::one();
        rhs[n * n + pair(i, i, n)] = Scalar::one();
    }
    solve_linear(&system, &rhs)?
        .ok_or_else(|| Error::NoSolution("no counit exists for this comultiplication".into()))
}

/// Solves the two-sided convolution-inverse system for the antipode:
/// `Σ S(x₁)x₂ = ε(x)1` and `Σ x₁S(x₂) = ε(x)1` jointly, so a one-sided
/// inverse is reported as a failure rather than silently accepted.
pub fn solve_antipode(b: &FiniteDimBialgebra, counit: &[Scalar]) -> Result<Matrix, Error> {
    let n = b.dim();
    // unknowns: S[p][j] = coefficient of e_p in S(e_j), flattened p*n + j
    let mut system = Matrix::zeros(2 * n * n, n * n);
    let mut rhs = vec![Scalar::zero(); 2 * n * n];
    for i in 0..n {
        for (j, k, v) in b.comult.fix1(i) {
            for p in 0..n {
                // left: Σ_{j,k,p} c_i^{jk} S_{pj} m_{pk}^l = ε_i u_l
                for (l, m) in b.mult.fix12(p, k) {
                    let row = pair(i, l, n);
                    let col = pair(p, j, n);
                    let cur = system.get(row, col).clone();
                    system.set(row, col, cur + &(v * m));
                }
                // right: Σ_{j,k,p} c_i^{jk} S_{pk} m_{jp}^l = ε_i u_l
                for (l, m) in b.mult.fix12(j, p) {
                    let row = n * n + pair(i, l, n);
                    let col = pair(p, k, n);
                    let cur = system.get(row, col).clone();
                    system.set(row, col, cur + &(v * m));
                }
            }
        }
        for l in 0..n {
            let target = &counit[i] * &b.unit[l];
            rhs[pair(i, l, n)] = target.clone();
            rhs[n * n + pair(i, l, n)] = target;
        }
    }
    let sol = solve_linear(&system, &rhs)?.ok_or_else(|| {
        Error::NoSolution("identity has no two-sided convolution inverse (not Hopf)".into())
    })?;
    let mut s = Matrix::zeros(n, n);
    for p in 0..n {
        for j in 0..n {
            s.set(p, j, sol[pair(p, j, n)].clone());
        }
    }
    if linsolve::rank(&s) < n {
        return Err(Error::Verification(
            "antipode solved but not invertible (not regular)".into(),
        ));
    }
    Ok(s)
}

/// Full Hopf verification: the four counit/antipode equations on every
/// basis pair, the one-sided convolution identities, antihomomorphism
/// property, bijectivity, and the standard compatibilities `ε∘S = ε`
/// and `Δ∘S = (S⊗S)∘Δ^op`.
pub fn verify_hopf(h: &FiniteHopfAlgebra) -> CheckReport {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut report = CheckReport::new("hopf");
    report.dim("dim", n);

    let (counit_ok, counit_witness) = counit_laws_hold(b, &h.counit);
    report.record("counit laws", "counit-laws", counit_ok, || {
        counit_witness.unwrap()
    });

    // ε is a unital algebra map
    let mut eps_alg = None;
    for i in 0..n {
        for j in 0..n {
            let lhs = h.counit_of(&b.mul_basis(i, j));
            let rhs = &h.counit[i] * &h.counit[j];
            if lhs != rhs {
                eps_alg = Some(format!("({}, {})", b.label(i), b.label(j)));
                break;
            }
        }
    }
    if eps_alg.is_none() && !h.counit_of(&b.unit).is_one() {
        eps_alg = Some("ε(1) ≠ 1".into());
    }
    report.record("counit multiplicative", "counit-algebra-hom", eps_alg.is_none(), || {
        eps_alg.clone().unwrap()
    });

    // Σ S(x₁)x₂ = ε(x)1 and Σ x₁S(x₂) = ε(x)1
    let mut conv_witness = None;
    for i in 0..n {
        let mut left = vec![Scalar::zero(); n];
        let mut right = vec![Scalar::zero(); n];
        for (j, k, v) in b.comult.fix1(i) {
            let sx1 = h.antipode_basis(j);
            let mut ek = vec![Scalar::zero(); n];
            ek[k] = Scalar::one();
            let mut term = b.mul_vec(&sx1, &ek);
            for t in term.iter_mut() {
                *t *= v;
            }
            for (l, t) in term.into_iter().enumerate() {
                left[l] += &t;
            }
            let sx2 = h.antipode_basis(k);
            let mut ej = vec![Scalar::zero(); n];
            ej[j] = Scalar::one();
            let mut term = b.mul_vec(&ej, &sx2);
            for t in term.iter_mut() {
                *t *= v;
            }
            for (l, t) in term.into_iter().enumerate() {
                right[l] += &t;
            }
        }
        let expected: Vec<Scalar> = b.unit.iter().map(|u| &h.counit[i] * u).collect();
        if left != expected || right != expected {
            conv_witness = Some(b.label(i).to_string());
            break;
        }
    }
    report.record(
        "antipode convolution inverse",
        "antipode-convolution",
        conv_witness.is_none(),
        || conv_witness.clone().unwrap(),
    );

    // The four characterizing equations, on every basis pair (x, y):
    //   (ε⊗ι)(Δ(x)(1⊗y)) = xy          counit-cancel-left
    //   (ι⊗ε)((x⊗1)Δ(y)) = xy          counit-cancel-right
    //   m(S⊗ι)(Δ(x)(1⊗y)) = ε(x)y      antipode-cancel-left
    //   m(ι⊗S)((x⊗1)Δ(y)) = ε(y)x      antipode-cancel-right
    let mut eq_witness: [Option<String>; 4] = [None, None, None, None];
    for i in 0..n {
        for j in 0..n {
            let xy = b.mul_basis(i, j);
            let mut ej = vec![Scalar::zero(); n];
            ej[j] = Scalar::one();
            let mut ei = vec![Scalar::zero(); n];
            ei[i] = Scalar::one();

            let mut eq1 = vec![Scalar::zero(); n];
            let mut eq3 = vec![Scalar::zero(); n];
            for (a, c, v) in b.comult.fix1(i) {
                // Δ(x)(1⊗y) = Σ x₁ ⊗ x₂y
                let x2y = b.mul_basis(c, j);
                for (l, t) in x2y.iter().enumerate() {
                    eq1[l] += &(&(&h.counit[a] * v) * t);
                }
                let sa = h.antipode_basis(a);
                let term = b.mul_vec(&sa, &x2y);
                for (l, t) in term.iter().enumerate() {
                    eq3[l] += &(v * t);
                }
            }
            if eq_witness[0].is_none() && eq1 != xy {
                eq_witness[0] = Some(format!("({}, {})", b.label(i), b.label(j)));
            }
            let expected3: Vec<Scalar> = ej.iter().map(|e| &h.counit[i] * e).collect();
            if eq_witness[2].is_none() && eq3 != expected3 {
                eq_witness[2] = Some(format!("({}, {})", b.label(i), b.label(j)));
            }

            let mut eq2 = vec![Scalar::zero(); n];
            let mut eq4 = vec![Scalar::zero(); n];
            for (a, c, v) in b.comult.fix1(j) {
                // (x⊗1)Δ(y) = Σ xy₁ ⊗ y₂
                let xy1 = b.mul_basis(i, a);
                for (l, t) in xy1.iter().enumerate() {
                    eq2[l] += &(&(&h.counit[c] * v) * t);
                }
                let sc = h.antipode_basis(c);
                let term = b.mul_vec(&xy1, &sc);
                for (l, t) in term.iter().enumerate() {
                    eq4[l] += &(v * t);
                }
            }
            if eq_witness[1].is_none() && eq2 != xy {
                eq_witness[1] = Some(format!("({}, {})", b.label(i), b.label(j)));
            }
            let expected4: Vec<Scalar> = ei.iter().map(|e| &h.counit[j] * e).collect();
            if eq_witness[3].is_none() && eq4 != expected4 {
                eq_witness[3] = Some(format!("({}, {})", b.label(i), b.label(j)));
            }
        }
    }
    let names = [
        ("counit cancel left", "counit-cancel-left"),
        ("counit cancel right", "counit-cancel-right"),
        ("antipode cancel left", "antipode-cancel-left"),
        ("antipode cancel right", "antipode-cancel-right"),
    ];
    for (w, (name, formula)) in eq_witness.iter().zip(names) {
        report.record(name, formula, w.is_none(), || w.clone().unwrap());
    }

    // S(xy) = S(y)S(x)
    let mut antihom = None;
    'antihom: for i in 0..n {
        for j in 0..n {
            let sxy = h.antipode.apply(&b.mul_basis(i, j));
            let sy_sx = b.mul_vec(&h.antipode_basis(j), &h.antipode_basis(i));
            if sxy != sy_sx {
                antihom = Some(format!("({}, {})", b.label(i), b.label(j)));
                break 'antihom;
            }
        }
    }
    report.record("antipode antihomomorphism", "antipode-antihom", antihom.is_none(), || {
        antihom.clone().unwrap()
    });

    let bijective = h.antipode.mul(&h.antipode_inv) == Matrix::identity(n)
        && h.antipode_inv.mul(&h.antipode) == Matrix::identity(n);
    report.record("antipode bijective", "antipode-bijective", bijective, || {
        "S·S⁻¹ ≠ id".into()
    });

    // ε∘S = ε
    let mut eps_s = true;
    for j in 0..n {
        if h.counit_of(&h.antipode_basis(j)) != h.counit[j] {
            eps_s = false;
            break;
        }
    }
    report.record("counit of antipode", "counit-after-antipode", eps_s, || {
        "ε∘S ≠ ε".into()
    });

    // Δ∘S = (S⊗S)∘Δ^op
    let mut ds_witness = None;
    for j in 0..n {
        let lhs = b.comult_vec(&h.antipode_basis(j));
        let mut rhs = vec![Scalar::zero(); n * n];
        for (a, c, v) in b.comult.fix1(j) {
            // flip then S⊗S: contributes S(e_c) ⊗ S(e_a)
            let sc = h.antipode_basis(c);
            let sa = h.antipode_basis(a);
            for (l, x) in sc.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (m, y) in sa.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    rhs[pair(l, m, n)] += &(&(v * x) * y);
                }
            }
        }
        if lhs != rhs {
            ds_witness = Some(b.label(j).to_string());
            break;
        }
    }
    report.record(
        "comult of antipode",
        "comult-after-antipode",
        ds_witness.is_none(),
        || ds_witness.clone().unwrap(),
    );

    report
}

/// The maps `T₁(x⊗y) = Δ(x)(1⊗y)` and `T₂(x⊗y) = (x⊗1)Δ(y)` as
/// `n²×n²` matrices, with full-rank verdicts. Defined at the bialgebra
/// level: bijectivity of both is exactly the Hopf property.
pub fn galois_maps(b: &FiniteDimBialgebra) -> (Matrix, bool, Matrix, bool) {
    let n = b.dim();
    let mut t1 = Matrix::zeros(n * n, n * n);
    let mut t2 = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let col = pair(i, j, n);
            for (p, q, v) in b.comult.fix1(i) {
                for (r, m) in b.mult.fix12(q, j) {
                    let row = pair(p, r, n);
                    let cur = t1.get(row, col).clone();
                    t1.set(row, col, cur + &(v * m));
                }
            }
            for (q, r, v) in b.comult.fix1(j) {
                for (p, m) in b.mult.fix12(i, q) {
                    let row = pair(p, r, n);
                    let cur = t2.get(row, col).clone();
                    t2.set(row, col, cur + &(v * m));
                }
            }
        }
    }
    let b1 = linsolve::rank(&t1) == n * n;
    let b2 = linsolve::rank(&t2) == n * n;
    (t1, b1, t2, b2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Tensor3;

    fn one() -> Scalar {
        Scalar::one()
    }

    /// A unit adjoined to an idempotent grouplike v: coassociative and
    /// Δ-multiplicative, but not Hopf (v has no convolution inverse).
    fn unit_plus_idempotent_grouplike() -> FiniteDimBialgebra {
        let mut mult = Tensor3::new(2, 2, 2);
        mult.set(0, 0, 0, one()); // 1·1 = 1
        mult.set(0, 1, 1, one());
        mult.set(1, 0, 1, one());
        mult.set(1, 1, 1, one()); // v² = v
        let mut comult = Tensor3::new(2, 2, 2);
        comult.set(0, 0, 0, one());
        comult.set(1, 1, 1, one());
        FiniteDimBialgebra::new(
            vec!["1".into(), "v".into()],
            mult,
            vec![one(), Scalar::zero()],
            comult,
            None,
        )
        .unwrap()
    }

    #[test]
    fn grouplike_idempotent_is_a_bialgebra_but_not_hopf() {
        let b = unit_plus_idempotent_grouplike();
        let report = verify_bialgebra(&b);
        assert!(report.all_passed(), "{report:?}");
        // The solved counit sends v to 1; imposing ε(v) = 0 contradicts it.
        let counit = solve_counit(&b).unwrap();
        assert_eq!(counit, vec![one(), one()]);
        let mut with_bad_counit = b.clone();
        with_bad_counit.counit = Some(vec![one(), Scalar::zero()]);
        assert!(!verify_bialgebra(&with_bad_counit).all_passed());
        // No antipode, and the canonical maps are not bijective.
        assert!(solve_antipode(&b, &counit).is_err());
        let (_, t1_bij, _, t2_bij) = galois_maps(&b);
        assert!(!t1_bij);
        assert!(!t2_bij);
    }
}
