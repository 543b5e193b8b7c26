//! Exact computer algebra for finite-dimensional Hopf algebras.
//!
//! Everything is represented by structure constants over arbitrary-
//! precision rationals, so every axiom, identity and certificate in the
//! crate is a zero-tolerance check. The main layers:
//!
//! - [`scalar`], [`matrix`], [`tensor`], [`linsolve`]: exact rational
//!   linear algebra with deterministic elimination;
//! - [`hopf`]: bialgebra/Hopf verification, counit and antipode
//!   derivation, integrals, invariant functionals, duality;
//! - [`catalog`]: group algebras, function algebras, the Sweedler
//!   algebra, and their canonical surjections;
//! - [`algebra`], [`actions`]: module algebras, coactions, smash
//!   products, invariant subalgebras, endomorphism rings;
//! - [`morita`]: Morita contexts with compatibility and surjectivity
//!   certificates, and the smash-product/endomorphism identification
//!   pipeline;
//! - [`localunits`]: finitely supported function algebras over possibly
//!   infinite groups, rings with local units, and the sampled
//!   certification of the induced Morita context;
//! - [`io`], [`report`]: file formats and deterministic certificate
//!   reports.

pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod io;
pub mod linsolve;
pub mod localunits;
pub mod matrix;
pub mod morita;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod tensor;
pub mod util;

pub use error::Error;
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use tensor::Tensor3;
