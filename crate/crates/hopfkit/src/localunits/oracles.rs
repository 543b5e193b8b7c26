//! Group oracles: groups given by identity/multiply/invert on opaque
//! canonical tokens.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::GroupElem;
use crate::catalog::{group_by_name, FiniteGroup};
use crate::error::Error;
use crate::report::CheckReport;

/// A group presented operationally. Implementations must be pure:
/// element in, element out, no hidden state. All returned tokens are in
/// canonical form, and `canon` is idempotent.
pub trait GroupOracle {
    fn name(&self) -> String;
    fn identity(&self) -> GroupElem;
    fn multiply(&self, a: &GroupElem, b: &GroupElem) -> GroupElem;
    fn invert(&self, a: &GroupElem) -> GroupElem;
    /// Parses and canonicalizes a raw token.
    fn canon(&self, raw: &str) -> Result<GroupElem, Error>;
    /// A finite generating set used for sampling.
    fn generators(&self) -> Vec<GroupElem>;
}

/// Wraps an explicit finite group; tokens are the element labels.
pub struct FiniteOracle {
    pub group: FiniteGroup,
}

impl FiniteOracle {
    pub fn new(group: FiniteGroup) -> Self {
        FiniteOracle { group }
    }

    fn index(&self, token: &str) -> Result<usize, Error> {
        self.group
            .labels
            .iter()
            .position(|l| l == token)
            .ok_or_else(|| Error::Parse(format!("unknown group element {token:?}")))
    }
}

impl GroupOracle for FiniteOracle {
    fn name(&self) -> String {
        format!("finite:{}", self.group.order())
    }

    fn identity(&self) -> GroupElem {
        self.group.labels[self.group.identity].clone()
    }

    fn multiply(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let (i, j) = (self.index(a).expect("canonical token"), self.index(b).expect("canonical token"));
        self.group.labels[self.group.mul(i, j)].clone()
    }

    fn invert(&self, a: &GroupElem) -> GroupElem {
        let i = self.index(a).expect("canonical token");
        self.group.labels[self.group.inv(i)].clone()
    }

    fn canon(&self, raw: &str) -> Result<GroupElem, Error> {
        self.index(raw.trim()).map(|i| self.group.labels[i].clone())
    }

    fn generators(&self) -> Vec<GroupElem> {
        // every element generates; fine at finite scale
        self.group.labels.clone()
    }
}

/// The infinite dihedral group `⟨r, s | s² = e, s r s = r⁻¹⟩`:
/// canonical forms `e`, `r^k`, `s`, `r^k*s`.
pub struct InfiniteDihedralOracle;

impl InfiniteDihedralOracle {
    fn parse(token: &str) -> Result<(i64, bool), Error> {
        let token = token.trim();
        if token == "e" {
            return Ok((0, false));
        }
        let (rot_part, flip) = match token.strip_suffix("*s") {
            Some(r) => (r, true),
            None if token == "s" => ("", true),
            None => (token, false),
        };
        let rot = if rot_part.is_empty() {
            0
        } else if rot_part == "r" {
            1
        } else if let Some(exp) = rot_part.strip_prefix("r^") {
            exp.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad rotation exponent in {token:?}")))?
        } else {
            return Err(Error::Parse(format!("unrecognized dihedral token {token:?}")));
        };
        Ok((rot, flip))
    }

    fn token(rot: i64, flip: bool) -> GroupElem {
        match (rot, flip) {
            (0, false) => "e".into(),
            (0, true) => "s".into(),
            (1, false) => "r".into(),
            (1, true) => "r*s".into(),
            (k, false) => format!("r^{k}"),
            (k, true) => format!("r^{k}*s"),
        }
    }
}

impl GroupOracle for InfiniteDihedralOracle {
    fn name(&self) -> String {
        "infinite-dihedral".into()
    }

    fn identity(&self) -> GroupElem {
        "e".into()
    }

    fn multiply(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let (x, p) = Self::parse(a).expect("canonical token");
        let (y, q) = Self::parse(b).expect("canonical token");
        // (r^x s^p)(r^y s^q) = r^(x + (-1)^p y) s^(p xor q)
        let rot = if p { x - y } else { x + y };
        Self::token(rot, p != q)
    }

    fn invert(&self, a: &GroupElem) -> GroupElem {
        let (x, p) = Self::parse(a).expect("canonical token");
        if p {
            Self::token(x, true) // reflections are involutions
        } else {
            Self::token(-x, false)
        }
    }

    fn canon(&self, raw: &str) -> Result<GroupElem, Error> {
        let (rot, flip) = Self::parse(raw)?;
        Ok(Self::token(rot, flip))
    }

    fn generators(&self) -> Vec<GroupElem> {
        vec!["r".into(), "s".into()]
    }
}

/// The free group on `k ≤ 8` generators `a..h`, elements as reduced
/// words `a^2*b^-1`.
pub struct FreeGroupOracle {
    pub rank: usize,
}

const FREE_GENS: [char; 8] = ['a', 'b', 'c', 'd', 'f', 'g', 'h', 'k'];

impl FreeGroupOracle {
    pub fn new(rank: usize) -> Result<Self, Error> {
        if rank == 0 || rank > FREE_GENS.len() {
            return Err(Error::Parse(format!(
                "free group rank must be between 1 and {}",
                FREE_GENS.len()
            )));
        }
        Ok(FreeGroupOracle { rank })
    }

    fn parse(&self, token: &str) -> Result<Vec<(usize, i64)>, Error> {
        let token = token.trim();
        if token == "e" {
            return Ok(Vec::new());
        }
        let mut word = Vec::new();
        for part in token.split('*') {
            let (gen, exp) = match part.split_once('^') {
                Some((g, e)) => (
                    g,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?,
                ),
                None => (part, 1),
            };
            let gen = gen.trim();
            if gen.len() != 1 {
                return Err(Error::Parse(format!("bad generator {gen:?}")));
            }
            let idx = FREE_GENS[..self.rank]
                .iter()
                .position(|&c| c.to_string() == gen)
                .ok_or_else(|| Error::Parse(format!("unknown generator {gen:?}")))?;
            if exp != 0 {
                word.push((idx, exp));
            }
        }
        Ok(Self::reduce(word))
    }

    fn reduce(word: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(word.len());
        for (g, e) in word {
            if e == 0 {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.0 == g {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push((g, e));
        }
        out
    }

    fn token(word: &[(usize, i64)]) -> GroupElem {
        if word.is_empty() {
            return "e".into();
        }
        word.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    FREE_GENS[g].to_string()
                } else {
                    format!("{}^{}", FREE_GENS[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl GroupOracle for FreeGroupOracle {
    fn name(&self) -> String {
        format!("free:{}", self.rank)
    }

    fn identity(&self) -> GroupElem {
        "e".into()
    }

    fn multiply(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let mut word = self.parse(a).expect("canonical token");
        word.extend(self.parse(b).expect("canonical token"));
        Self::token(&Self::reduce(word))
    }

    fn invert(&self, a: &GroupElem) -> GroupElem {
        let word = self.parse(a).expect("canonical token");
        let inv: Vec<(usize, i64)> = word.into_iter().rev().map(|(g, e)| (g, -e)).collect();
        Self::token(&inv)
    }

    fn canon(&self, raw: &str) -> Result<GroupElem, Error> {
        Ok(Self::token(&self.parse(raw)?))
    }

    fn generators(&self) -> Vec<GroupElem> {
        FREE_GENS[..self.rank].iter().map(|c| c.to_string()).collect()
    }
}

/// Registry of named oracles: any finite catalog group name,
/// `infinite-dihedral`, or `free:k`.
pub fn oracle_by_name(name: &str) -> Result<Box<dyn GroupOracle>, Error> {
    if name == "infinite-dihedral" {
        return Ok(Box::new(InfiniteDihedralOracle));
    }
    if let Some(rank) = name.strip_prefix("free:") {
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::UnknownName(name.into()))?;
        return Ok(Box::new(FreeGroupOracle::new(rank)?));
    }
    Ok(Box::new(FiniteOracle::new(group_by_name(name)?)))
}

/// A seeded random element: a product of at most `max_len` uniformly
/// chosen generators and inverse generators.
pub fn random_element(
    oracle: &dyn GroupOracle,
    rng: &mut ChaCha8Rng,
    max_len: usize,
) -> GroupElem {
    let gens = oracle.generators();
    let mut letters: Vec<GroupElem> = gens.clone();
    for g in &gens {
        letters.push(oracle.invert(g));
    }
    let len = rng.random_range(0..=max_len);
    let mut out = oracle.identity();
    for _ in 0..len {
        let pick = rng.random_range(0..letters.len());
        out = oracle.multiply(&out, &letters[pick]);
    }
    out
}

/// Spot-checks the group axioms on a seeded sample of elements, and
/// idempotence of the canonical form.
pub fn spot_check_oracle(oracle: &dyn GroupOracle, rng: &mut ChaCha8Rng, samples: usize) -> CheckReport {
    let mut report = CheckReport::new("group-oracle");
    report.note(format!("oracle {}", oracle.name()));
    let e = oracle.identity();
    let mut assoc_witness = None;
    let mut identity_witness = None;
    let mut inverse_witness = None;
    let mut canon_witness = None;
    for _ in 0..samples {
        let a = random_element(oracle, rng, 6);
        let b = random_element(oracle, rng, 6);
        let c = random_element(oracle, rng, 6);
        if assoc_witness.is_none()
            && oracle.multiply(&oracle.multiply(&a, &b), &c)
                != oracle.multiply(&a, &oracle.multiply(&b, &c))
        {
            assoc_witness = Some(format!("({a}, {b}, {c})"));
        }
        if identity_witness.is_none()
            && (oracle.multiply(&a, &e) != a || oracle.multiply(&e, &a) != a)
        {
            identity_witness = Some(a.clone());
        }
        let ai = oracle.invert(&a);
        if inverse_witness.is_none()
            && (oracle.multiply(&a, &ai) != e || oracle.multiply(&ai, &a) != e)
        {
            inverse_witness = Some(a.clone());
        }
        if canon_witness.is_none() && oracle.canon(&a).ok() != Some(a.clone()) {
            canon_witness = Some(a.clone());
        }
    }
    report.record("associativity on samples", "group-assoc", assoc_witness.is_none(), || {
        assoc_witness.clone().unwrap()
    });
    report.record("identity laws", "group-identity", identity_witness.is_none(), || {
        identity_witness.clone().unwrap()
    });
    report.record("inverse laws", "group-inverse", inverse_witness.is_none(), || {
        inverse_witness.clone().unwrap()
    });
    report.record("canonical form idempotent", "group-canon-idempotent", canon_witness.is_none(), || {
        canon_witness.clone().unwrap()
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn infinite_dihedral_relations() {
        let d = InfiniteDihedralOracle;
        let r = d.canon("r").unwrap();
        let s = d.canon("s").unwrap();
        assert_eq!(d.multiply(&s, &s), "e");
        let srs = d.multiply(&d.multiply(&s, &r), &s);
        assert_eq!(srs, d.invert(&r));
        assert_eq!(d.multiply(&r, &r), "r^2");
        assert_eq!(d.canon("r^-1").unwrap(), "r^-1");
    }

    #[test]
    fn free_group_reduces_words() {
        let f = FreeGroupOracle::new(2).unwrap();
        let w = f.multiply(&"a".into(), &"a^-1".into());
        assert_eq!(w, "e");
        let w2 = f.multiply(&"a^2*b".into(), &"b^-1*a".into());
        assert_eq!(w2, "a^3");
        assert_eq!(f.invert(&"a*b^2".into()), "b^-2*a^-1");
    }

    #[test]
    fn oracles_pass_spot_checks() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for name in ["cyclic:4", "symmetric:3", "infinite-dihedral", "free:2"] {
            let oracle = oracle_by_name(name).unwrap();
            let report = spot_check_oracle(oracle.as_ref(), &mut rng, 50);
            assert!(report.all_passed(), "{name}: {report:?}");
        }
    }
}
