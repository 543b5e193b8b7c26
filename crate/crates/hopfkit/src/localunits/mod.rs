//! Possibly infinite groups presented operationally, finitely supported
//! function algebras over them, rings with local units, and the induced
//! Morita context between `C_c(G,A)^{ℂH}#ℂG` and `A#ℂH`.
//!
//! Infinite groups are never enumerated: every computation touches only
//! finite supports, and the H-saturation of a support stays finite
//! because the subgroup H is finite. Identity checks over infinite
//! groups are sampled with a seeded word generator; every report
//! records the seed, the word-length bound and the sample count.

mod funcs;
mod oracles;
mod prop32;

pub use funcs::{
    cc_left_action, cc_right_action, is_equivariant, local_unit_for, local_unit_for_smash,
    symmetrize, CcFunctionRing, CcSmashRing, FinSuppFunc, IndElement, LocalUnitRing, SmashCc,
    SubgroupTokens,
};
pub use oracles::{oracle_by_name, spot_check_oracle, FiniteOracle, FreeGroupOracle,
    GroupOracle, InfiniteDihedralOracle, random_element};
pub use prop32::{
    cross_check_finite, prop32_compatibility, prop32_witnesses, InductionContext, SampleCfg,
};

/// Canonical-token representation of a group element. Equality of
/// elements is string equality of canonical forms.
pub type GroupElem = String;
