//! File formats: structure-constant files for Hopf algebras and plain
//! algebras, group tables, morphisms, and actions. All rationals are
//! bit-exact strings `"p/q"` (or `"p"`), sparse tensor entries are
//! `[i, j, k, "p/q"]` rows, matrices are row-major.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::actions::{ModuleAlgebra, Side};
use crate::algebra::{base_field, dual_numbers, UnitalAlgebra};
use crate::catalog::{self, FiniteGroup};
use crate::error::Error;
use crate::hopf::{dual, FiniteDimBialgebra, FiniteHopfAlgebra, HopfMorphism};
use crate::matrix::Matrix;
use crate::report::InputDigest;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

pub type SparseEntry = (usize, usize, usize, Scalar);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfFile {
    pub basis: Vec<String>,
    pub mult: Vec<SparseEntry>,
    pub comult: Vec<SparseEntry>,
    pub unit: Vec<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counit: Option<Vec<Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub antipode: Option<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    pub mult: Vec<SparseEntry>,
    pub unit: Vec<Scalar>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Either a catalog name or an inline object.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Name(String),
    Inline(HopfFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub source: HopfRef,
    pub target: HopfRef,
    /// Row-major, `dim(target) × dim(source)`.
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub algebra: AlgebraRef,
    pub hopf: HopfRef,
    /// `"left"` or `"right"`.
    pub side: String,
    /// Entries `[hopf index, algebra in, algebra out, "p/q"]`.
    pub action: Vec<SparseEntry>,
}

fn tensor_from_entries(entries: &[SparseEntry], dims: (usize, usize, usize)) -> Result<Tensor3, Error> {
    let mut t = Tensor3::new(dims.0, dims.1, dims.2);
    for (i, j, k, v) in entries {
        if *i >= dims.0 || *j >= dims.1 || *k >= dims.2 {
            return Err(Error::Parse(format!(
                "tensor entry ({i}, {j}, {k}) out of range for dims {dims:?}"
            )));
        }
        t.add_to(*i, *j, *k, v);
    }
    Ok(t)
}

fn tensor_to_entries(t: &Tensor3) -> Vec<SparseEntry> {
    t.iter().map(|(i, j, k, v)| (i, j, k, v.clone())).collect()
}

fn matrix_from_rows(rows: &[Vec<Scalar>]) -> Result<Matrix, Error> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::Parse("ragged matrix rows".into()));
    }
    let mut m = Matrix::zeros(r, c);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    Ok(m)
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.to_dense_rows()
}

impl HopfFile {
    pub fn from_hopf(h: &FiniteHopfAlgebra) -> Self {
        HopfFile {
            basis: h.bialgebra.basis.clone(),
            mult: tensor_to_entries(&h.bialgebra.mult),
            comult: tensor_to_entries(&h.bialgebra.comult),
            unit: h.bialgebra.unit.clone(),
            counit: Some(h.counit.clone()),
            antipode: Some(matrix_to_rows(&h.antipode)),
        }
    }

    /// Structural decoding only: no axioms are checked here, so invalid
    /// inputs can still be loaded and then reported by the verifiers.
    pub fn to_bialgebra(&self) -> Result<(FiniteDimBialgebra, Option<Matrix>), Error> {
        let n = self.basis.len();
        let mult = tensor_from_entries(&self.mult, (n, n, n))?;
        let comult = tensor_from_entries(&self.comult, (n, n, n))?;
        let b = FiniteDimBialgebra::new(
            self.basis.clone(),
            mult,
            self.unit.clone(),
            comult,
            self.counit.clone(),
        )?;
        let antipode = match &self.antipode {
            Some(rows) => {
                let m = matrix_from_rows(rows)?;
                if m.rows() != n || m.cols() != n {
                    return Err(Error::Dimension("antipode matrix shape mismatch".into()));
                }
                Some(m)
            }
            None => None,
        };
        Ok((b, antipode))
    }

    /// Full decoding through the verifying constructor.
    pub fn to_hopf(&self) -> Result<FiniteHopfAlgebra, Error> {
        let (b, antipode) = self.to_bialgebra()?;
        FiniteHopfAlgebra::new(b, antipode)
    }
}

impl AlgebraFile {
    pub fn from_algebra(a: &UnitalAlgebra) -> Self {
        AlgebraFile {
            basis: a.basis.clone(),
            mult: tensor_to_entries(&a.mult),
            unit: a.unit.clone(),
        }
    }

    pub fn to_algebra(&self) -> Result<UnitalAlgebra, Error> {
        let n = self.basis.len();
        UnitalAlgebra::new(
            self.basis.clone(),
            tensor_from_entries(&self.mult, (n, n, n))?,
            self.unit.clone(),
        )
    }
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile {
            elements: g.labels.clone(),
            table: g.table.clone(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, Error> {
        FiniteGroup::new(self.elements.clone(), self.table.clone())
    }
}

/// Resolves catalog hopf names: `sweedler4`, `group:<group>`,
/// `functions:<group>`, `dual:<name>`.
pub fn hopf_by_name(name: &str) -> Result<FiniteHopfAlgebra, Error> {
    if name == "sweedler4" {
        return Ok(catalog::sweedler4());
    }
    if let Some(g) = name.strip_prefix("group:") {
        return catalog::group_algebra(&catalog::group_by_name(g)?);
    }
    if let Some(g) = name.strip_prefix("functions:") {
        return catalog::function_algebra(&catalog::group_by_name(g)?);
    }
    if let Some(inner) = name.strip_prefix("dual:") {
        return dual(&hopf_by_name(inner)?);
    }
    Err(Error::UnknownName(name.into()))
}

pub fn algebra_by_name(name: &str) -> Result<UnitalAlgebra, Error> {
    match name {
        "base-field" => Ok(base_field()),
        "dual-numbers" => Ok(dual_numbers()),
        _ => Err(Error::UnknownName(name.into())),
    }
}

/// Resolves catalog morphism names:
/// `restriction:<group>:<element label>` (restriction of C(G) to the
/// cyclic subgroup generated by the element) and `sweedler-projection`.
pub fn morphism_by_name(name: &str) -> Result<HopfMorphism, Error> {
    if name == "sweedler-projection" {
        return catalog::sweedler_projection();
    }
    if let Some(rest) = name.strip_prefix("restriction:") {
        let (group_name, label) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::UnknownName(name.into()))?;
        let g = catalog::group_by_name(group_name)?;
        let idx = g
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownName(format!("{name}: no element {label}")))?;
        let emb = catalog::SubgroupEmbedding::cyclic_subgroup(&g, idx)?;
        return catalog::restriction_morphism(&emb);
    }
    Err(Error::UnknownName(name.into()))
}

/// Resolves catalog action names:
/// `action:trivial:<hopf name>` (trivial action of the dual on the base
/// field), `action:graded-dual-numbers:<hopf name>` (order-2 grading),
/// `action:translation:<group name>` (C(G) with its left translation),
/// `action:sign-dual-numbers:<group name>` (order-2 sign involution of
/// the group algebra itself, for the induced-context coefficients).
pub fn action_by_name(name: &str) -> Result<ModuleAlgebra, Error> {
    if let Some(u) = name.strip_prefix("action:trivial:") {
        let target = hopf_by_name(u)?;
        return Ok(ModuleAlgebra::trivial(base_field(), dual(&target)?, Side::Left));
    }
    if let Some(u) = name.strip_prefix("action:graded-dual-numbers:") {
        let target = hopf_by_name(u)?;
        let u_hat = dual(&target)?;
        if u_hat.dim() != 2 {
            return Err(Error::UnknownName(format!("{name}: needs an order-2 target")));
        }
        let even = target
            .bialgebra
            .unit
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Inconsistent("zero unit".into()))?;
        let mut action = Tensor3::new(2, 2, 2);
        action.set(even, 0, 0, Scalar::one());
        action.set(1 - even, 1, 1, Scalar::one());
        return ModuleAlgebra::new(dual_numbers(), u_hat, Side::Left, action);
    }
    if let Some(g) = name.strip_prefix("action:translation:") {
        let group = catalog::group_by_name(g)?;
        let target = catalog::function_algebra(&group)?;
        let u_hat = dual(&target)?;
        let n = group.order();
        let algebra = crate::algebra::algebra_part(&target);
        let mut action = Tensor3::new(n, n, n);
        for h in 0..n {
            for x in 0..n {
                action.set(h, x, group.mul(h, x), Scalar::one());
            }
        }
        return ModuleAlgebra::new(algebra, u_hat, Side::Left, action);
    }
    if let Some(g) = name.strip_prefix("action:sign-dual-numbers:") {
        let group = catalog::group_by_name(g)?;
        let ch = catalog::group_algebra(&group)?;
        return crate::fixtures::sign_dual_numbers(&ch);
    }
    Err(Error::UnknownName(name.into()))
}

pub fn resolve_hopf_ref(r: &HopfRef) -> Result<(FiniteDimBialgebra, Option<Matrix>), Error> {
    match r {
        HopfRef::Name(name) => {
            let h = hopf_by_name(name)?;
            Ok((h.bialgebra.clone(), Some(h.antipode.clone())))
        }
        HopfRef::Inline(file) => file.to_bialgebra(),
    }
}

pub fn resolve_hopf_ref_verified(r: &HopfRef) -> Result<FiniteHopfAlgebra, Error> {
    match r {
        HopfRef::Name(name) => hopf_by_name(name),
        HopfRef::Inline(file) => file.to_hopf(),
    }
}

pub fn resolve_algebra_ref(r: &AlgebraRef) -> Result<UnitalAlgebra, Error> {
    match r {
        AlgebraRef::Name(name) => algebra_by_name(name),
        AlgebraRef::Inline(file) => file.to_algebra(),
    }
}

impl MorphismFile {
    pub fn from_morphism(m: &HopfMorphism) -> Self {
        MorphismFile {
            source: HopfRef::Inline(HopfFile::from_hopf(&m.source)),
            target: HopfRef::Inline(HopfFile::from_hopf(&m.target)),
            matrix: matrix_to_rows(&m.matrix),
        }
    }

    pub fn to_morphism(&self) -> Result<HopfMorphism, Error> {
        let source = resolve_hopf_ref_verified(&self.source)?;
        let target = resolve_hopf_ref_verified(&self.target)?;
        let matrix = matrix_from_rows(&self.matrix)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension(format!(
                "morphism matrix is {}×{} but target/source dims are {}/{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HopfMorphism::new(source, target, matrix))
    }
}

impl ActionFile {
    pub fn from_module_algebra(m: &ModuleAlgebra) -> Self {
        ActionFile {
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(&m.algebra)),
            hopf: HopfRef::Inline(HopfFile::from_hopf(&m.hopf)),
            side: match m.side {
                Side::Left => "left".into(),
                Side::Right => "right".into(),
            },
            action: tensor_to_entries(&m.action),
        }
    }

    pub fn to_module_algebra(&self) -> Result<ModuleAlgebra, Error> {
        let algebra = resolve_algebra_ref(&self.algebra)?;
        let hopf = resolve_hopf_ref_verified(&self.hopf)?;
        let side = match self.side.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            other => return Err(Error::Parse(format!("side must be left or right, got {other:?}"))),
        };
        let action = tensor_from_entries(&self.action, (hopf.dim(), algebra.dim(), algebra.dim()))?;
        ModuleAlgebra::new(algebra, hopf, side, action)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// SHA-256 digest of a file, for the report input list.
pub fn digest_file(path: &std::path::Path) -> Result<InputDigest, Error> {
    let bytes = std::fs::read(path)?;
    let digest = Sha256::digest(&bytes);
    Ok(InputDigest {
        name: path.display().to_string(),
        sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
    })
}

/// Digest of a catalog name used in place of a file.
pub fn digest_name(name: &str) -> InputDigest {
    let digest = Sha256::digest(name.as_bytes());
    InputDigest {
        name: name.into(),
        sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_file_round_trips_sweedler() {
        let h = catalog::sweedler4();
        let file = HopfFile::from_hopf(&h);
        let json = serde_json::to_string(&file).unwrap();
        let back: HopfFile = serde_json::from_str(&json).unwrap();
        let h2 = back.to_hopf().unwrap();
        assert_eq!(h2.bialgebra.mult, h.bialgebra.mult);
        assert_eq!(h2.antipode, h.antipode);
        assert!(json.contains("\"gx\""));
        assert!(json.contains("-1")); // xg = -gx entry is bit-exact
    }

    #[test]
    fn catalog_names_resolve() {
        assert!(hopf_by_name("group:symmetric:3").is_ok());
        assert!(hopf_by_name("functions:klein4").is_ok());
        assert!(hopf_by_name("dual:functions:cyclic:3").is_ok());
        assert!(hopf_by_name("nonsense").is_err());
        assert!(morphism_by_name("restriction:symmetric:3:(12)").is_ok());
        assert!(morphism_by_name("sweedler-projection").is_ok());
        assert!(action_by_name("action:translation:cyclic:2").is_ok());
        assert!(action_by_name("action:graded-dual-numbers:group:cyclic:2").is_ok());
    }

    #[test]
    fn invalid_structure_loads_but_fails_verification() {
        // corrupt the comultiplication of C(Z2): Δ(χ_g) = χ_g⊗χ_e
        let h = catalog::function_algebra(&catalog::cyclic(2)).unwrap();
        let mut file = HopfFile::from_hopf(&h);
        file.comult.retain(|(i, _, _, _)| *i != 1);
        file.comult.push((1, 1, 0, Scalar::one()));
        let (b, _) = file.to_bialgebra().unwrap();
        let report = crate::hopf::verify_bialgebra(&b);
        assert!(!report.all_passed());
        assert!(file.to_hopf().is_err());
    }
}
