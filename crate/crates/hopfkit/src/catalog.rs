//! Constructors for the concrete quantum groups used as fixtures:
//! group algebras ℂG, function algebras C(G), the 4-dimensional
//! Sweedler algebra, and their canonical surjections.

use crate::error::Error;
use crate::hopf::{FiniteDimBialgebra, FiniteHopfAlgebra, HopfMorphism};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// A finite group by explicit multiplication table. Associativity and
/// the identity/inverse laws are checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    /// `table[i][j]` = index of `g_i g_j`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension("group table is not square".into()));
        }
        if table
            .iter()
            .any(|row| row.iter().any(|&x| x >= n))
        {
            return Err(Error::Parse("group table entry out of range".into()));
        }
        // identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::Verification("group table has no identity".into()))?;
        // inverses
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| {
                    Error::Verification(format!("element {} has no inverse", labels[i]))
                })?;
            inverse[i] = inv;
        }
        // associativity on all triples
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::Verification(format!(
                            "group table not associative at ({}, {}, {})",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }
}

pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::new(vec!["e".into()], vec![vec![0]]).expect("trivial group")
}

/// ℤ/n with elements labeled `0..n-1`, identity first.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group order must be positive");
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteGroup::new(labels, table).expect("cyclic group")
}

/// Direct product with labels `(a,b)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let ng = g.order();
    let nh = h.order();
    let mut labels = Vec::with_capacity(ng * nh);
    for a in 0..ng {
        for b in 0..nh {
            labels.push(format!("({},{})", g.labels[a], h.labels[b]));
        }
    }
    let idx = |a: usize, b: usize| a * nh + b;
    let mut table = vec![vec![0; ng * nh]; ng * nh];
    for a1 in 0..ng {
        for b1 in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2));
                }
            }
        }
    }
    FiniteGroup::new(labels, table).expect("product group")
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

fn permutation_label(perm: &[usize]) -> String {
    // cycle notation on 1-based points; identity is "e"
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut p = start;
        loop {
            seen[p] = true;
            out.push_str(&(p + 1).to_string());
            p = perm[p];
            if p == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    // lexicographic successor
    loop {
        let mut p = out.last().unwrap().clone();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p);
    }
    out
}

/// The symmetric group on `n` points (n ≤ 4 at desk scale), identity
/// first, remaining permutations in lexicographic one-line order.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!((1..=4).contains(&n), "symmetric group supported for n ≤ 4");
    let perms = permutations(n);
    let labels: Vec<String> = perms.iter().map(|p| permutation_label(p)).collect();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let order = perms.len();
    let mut table = vec![vec![0; order]; order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p·q)(x) = p(q(x))
            let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            table[i][j] = index_of(&composed);
        }
    }
    FiniteGroup::new(labels, table).expect("symmetric group")
}

/// The dihedral group of order 2n: rotations `r^i`, reflections `r^i s`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1, "dihedral parameter must be positive");
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        labels.push(match i {
            0 => "e".into(),
            1 => "r".into(),
            _ => format!("r{i}"),
        });
    }
    for i in 0..n {
        labels.push(match i {
            0 => "s".into(),
            1 => "rs".into(),
            _ => format!("r{i}s"),
        });
    }
    let idx = |rot: usize, flip: bool| if flip { n + rot } else { rot };
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for a in 0..n {
        for fa in [false, true] {
            for b in 0..n {
                for fb in [false, true] {
                    // (r^a s^fa)(r^b s^fb) = r^(a ± b) s^(fa xor fb)
                    let rot = if fa { (a + n - b % n) % n } else { (a + b) % n };
                    table[idx(a, fa)][idx(b, fb)] = idx(rot, fa != fb);
                }
            }
        }
    }
    FiniteGroup::new(labels, table).expect("dihedral group")
}

/// Looks up a named group: `trivial`, `cyclic:n`, `klein4`,
/// `symmetric:n`, `dihedral:n`.
pub fn group_by_name(name: &str) -> Result<FiniteGroup, Error> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["trivial"] => Ok(trivial_group()),
        ["klein4"] => Ok(klein_four()),
        ["cyclic", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownName(name.into()))?;
            if n == 0 || n > 64 {
                return Err(Error::UnknownName(format!("{name}: order out of range")));
            }
            Ok(cyclic(n))
        }
        ["symmetric", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownName(name.into()))?;
            if !(1..=4).contains(&n) {
                return Err(Error::UnknownName(format!("{name}: only n ≤ 4")));
            }
            Ok(symmetric(n))
        }
        ["dihedral", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownName(name.into()))?;
            if n == 0 || n > 32 {
                return Err(Error::UnknownName(format!("{name}: order out of range")));
            }
            Ok(dihedral(n))
        }
        _ => Err(Error::UnknownName(name.into())),
    }
}

/// An injective homomorphism of a subgroup into an ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    pub subgroup: FiniteGroup,
    pub ambient: FiniteGroup,
    /// `element_map[i]` = ambient index of subgroup element `i`.
    pub element_map: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(
        subgroup: FiniteGroup,
        ambient: FiniteGroup,
        element_map: Vec<usize>,
    ) -> Result<Self, Error> {
        if element_map.len() != subgroup.order() {
            return Err(Error::Dimension("embedding map length mismatch".into()));
        }
        let mut seen = vec![false; ambient.order()];
        for &x in &element_map {
            if x >= ambient.order() {
                return Err(Error::Parse("embedding image out of range".into()));
            }
            if seen[x] {
                return Err(Error::Verification("embedding is not injective".into()));
            }
            seen[x] = true;
        }
        if element_map[subgroup.identity] != ambient.identity {
            return Err(Error::Verification("embedding does not preserve identity".into()));
        }
        for i in 0..subgroup.order() {
            for j in 0..subgroup.order() {
                if ambient.mul(element_map[i], element_map[j]) != element_map[subgroup.mul(i, j)] {
                    return Err(Error::Verification(format!(
                        "embedding does not respect multiplication at ({}, {})",
                        subgroup.labels[i], subgroup.labels[j]
                    )));
                }
            }
        }
        Ok(SubgroupEmbedding {
            subgroup,
            ambient,
            element_map,
        })
    }

    /// The cyclic subgroup generated by one ambient element, labeled by
    /// the ambient labels.
    pub fn cyclic_subgroup(ambient: &FiniteGroup, generator: usize) -> Result<Self, Error> {
        let mut elements = vec![ambient.identity];
        let mut current = generator;
        while current != ambient.identity {
            elements.push(current);
            current = ambient.mul(current, generator);
        }
        let labels: Vec<String> = elements.iter().map(|&i| ambient.labels[i].clone()).collect();
        let pos = |x: usize| elements.iter().position(|&y| y == x).unwrap();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos(ambient.mul(a, b))).collect())
            .collect();
        let sub = FiniteGroup::new(labels, table)?;
        SubgroupEmbedding::new(sub, ambient.clone(), elements)
    }
}

/// The group algebra ℂG: basis = group elements, grouplike
/// comultiplication `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> Result<FiniteHopfAlgebra, Error> {
    let n = g.order();
    let mut mult = Tensor3::new(n, n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, g.mul(i, j), Scalar::one());
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[g.identity] = Scalar::one();
    let mut comult = Tensor3::new(n, n, n);
    for i in 0..n {
        comult.set(i, i, i, Scalar::one());
    }
    let counit = vec![Scalar::one(); n];
    let mut antipode = Matrix::zeros(n, n);
    for j in 0..n {
        antipode.set(g.inv(j), j, Scalar::one());
    }
    let b = FiniteDimBialgebra::new(g.labels.clone(), mult, unit, comult, Some(counit))?;
    FiniteHopfAlgebra::new(b, Some(antipode))
}

/// The function algebra C(G): basis `chi:g` of indicator functions,
/// pointwise product, `Δ(χ_g) = Σ_l χ_l ⊗ χ_{l⁻¹g}`, `ε(χ_g) = δ_{g,e}`,
/// `S(χ_g) = χ_{g⁻¹}`.
pub fn function_algebra(g: &FiniteGroup) -> Result<FiniteHopfAlgebra, Error> {
    let n = g.order();
    let labels: Vec<String> = g.labels.iter().map(|l| format!("chi:{l}")).collect();
    let mut mult = Tensor3::new(n, n, n);
    for i in 0..n {
        mult.set(i, i, i, Scalar::one());
    }
    let unit = vec![Scalar::one(); n];
    let mut comult = Tensor3::new(n, n, n);
    for gidx in 0..n {
        for l in 0..n {
            comult.set(gidx, l, g.mul(g.inv(l), gidx), Scalar::one());
        }
    }
    let mut counit = vec![Scalar::zero(); n];
    counit[g.identity] = Scalar::one();
    let mut antipode = Matrix::zeros(n, n);
    for j in 0..n {
        antipode.set(g.inv(j), j, Scalar::one());
    }
    let b = FiniteDimBialgebra::new(labels, mult, unit, comult, Some(counit))?;
    FiniteHopfAlgebra::new(b, Some(antipode))
}

/// The Sweedler algebra: basis `{1, g, x, gx}` with `g² = 1`, `x² = 0`,
/// `xg = -gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`. The standard
/// non-unimodular, non-group fixture.
pub fn sweedler4() -> FiniteHopfAlgebra {
    let labels = vec!["1".to_string(), "g".into(), "x".into(), "gx".into()];
    let one = Scalar::one;
    let (u, g, x, gx) = (0usize, 1usize, 2usize, 3usize);
    let mut mult = Tensor3::new(4, 4, 4);
    for i in 0..4 {
        mult.set(u, i, i, one());
        if i != u {
            mult.set(i, u, i, one());
        }
    }
    mult.set(g, g, u, one());
    mult.set(g, x, gx, one());
    mult.set(g, gx, x, one());
    mult.set(x, g, gx, -one());
    // x·x = 0, x·gx = 0, gx·x = 0, gx·gx = 0
    mult.set(gx, g, x, -one());
    let unit = vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    let mut comult = Tensor3::new(4, 4, 4);
    comult.set(u, u, u, one());
    comult.set(g, g, g, one());
    comult.set(x, x, u, one());
    comult.set(x, g, x, one());
    // Δ(gx) = Δ(g)Δ(x) = gx⊗g + 1⊗gx
    comult.set(gx, gx, g, one());
    comult.set(gx, u, gx, one());
    let counit = vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let b = FiniteDimBialgebra::new(labels, mult, unit, comult, Some(counit))
        .expect("sweedler structure");
    FiniteHopfAlgebra::new(b, None).expect("sweedler is Hopf")
}

/// The restriction `π: C(G) → C(H)`, `χ_g ↦ χ_g` for `g ∈ H` and 0
/// otherwise; a surjective Hopf morphism exhibiting C(H) as a compact
/// quantum subgroup.
pub fn restriction_morphism(emb: &SubgroupEmbedding) -> Result<HopfMorphism, Error> {
    let source = function_algebra(&emb.ambient)?;
    let target = function_algebra(&emb.subgroup)?;
    let mut matrix = Matrix::zeros(target.dim(), source.dim());
    for (h_idx, &g_idx) in emb.element_map.iter().enumerate() {
        matrix.set(h_idx, g_idx, Scalar::one());
    }
    Ok(HopfMorphism::new(source, target, matrix))
}

/// The quotient `π: H₄ → ℂ(ℤ/2)` with `1↦e, g↦g, x↦0, gx↦0`.
pub fn sweedler_projection() -> Result<HopfMorphism, Error> {
    let source = sweedler4();
    let target = group_algebra(&cyclic(2))?;
    let mut matrix = Matrix::zeros(2, 4);
    matrix.set(0, 0, Scalar::one()); // 1 ↦ e
    matrix.set(1, 1, Scalar::one()); // g ↦ g
    Ok(HopfMorphism::new(source, target, matrix))
}

/// An explicit self-duality of the Sweedler algebra: the map into the
/// dual sending g to the sign character and x to δ^x − δ^{gx}. Whether
/// it certifies as a bijective morphism is reported by the caller;
/// construction alone makes no claim.
pub fn sweedler_self_duality_witness() -> Result<HopfMorphism, Error> {
    let source = sweedler4();
    let target = crate::hopf::dual(&source)?;
    let one = Scalar::one;
    let matrix = Matrix::from_rows(vec![
        // columns: images of 1, g, x, gx on the dual basis δ¹,δᵍ,δˣ,δᵍˣ
        vec![one(), one(), Scalar::zero(), Scalar::zero()],
        vec![one(), -one(), Scalar::zero(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::zero(), one(), -one()],
        vec![Scalar::zero(), Scalar::zero(), -one(), -one()],
    ]);
    Ok(HopfMorphism::new(source, target, matrix))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_symmetric_tables_are_groups() {
        assert_eq!(cyclic(4).order(), 4);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(klein_four().order(), 4);
    }

    #[test]
    fn symmetric_three_labels_have_identity_first() {
        let s3 = symmetric(3);
        assert_eq!(s3.labels[0], "e");
        assert!(s3.labels.contains(&"(12)".to_string()));
        assert!(s3.labels.contains(&"(123)".to_string()));
    }

    #[test]
    fn transposition_generates_order_two_subgroup() {
        let s3 = symmetric(3);
        let t = s3.labels.iter().position(|l| l == "(12)").unwrap();
        let emb = SubgroupEmbedding::cyclic_subgroup(&s3, t).unwrap();
        assert_eq!(emb.subgroup.order(), 2);
    }

    #[test]
    fn bad_table_is_rejected() {
        // 2-element table with no identity row
        let r = FiniteGroup::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![1, 1]],
        );
        assert!(r.is_err());
    }

    #[test]
    fn group_algebra_of_trivial_group_is_base_field() {
        let h = group_algebra(&trivial_group()).unwrap();
        assert_eq!(h.dim(), 1);
        let f = function_algebra(&trivial_group()).unwrap();
        assert_eq!(f.dim(), 1);
    }

    #[test]
    fn sweedler_constructs_and_is_hopf() {
        let h = sweedler4();
        assert_eq!(h.dim(), 4);
    }
}
