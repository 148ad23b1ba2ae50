//! Exact computer algebra for finite-dimensional Hopf superalgebras.
//!
//! The kernel stores algebras as structure constants over an exact field,
//! verifies the super Hopf axioms by exhaustive contraction, and implements
//! bosonization, coinvariants, duals, pairings and the classification
//! pipeline for the small pointed Hopf superalgebras.

pub mod analysis;
pub mod bosonize;
pub mod catalog;
pub mod classify;
pub mod duality;
pub mod field;
pub mod hopfcore;
pub mod json;
pub mod linalg;
pub mod scalars;

pub use field::{Field, RootField};
pub use scalars::{CycRational, ScalarError};

/// The default exact scalar field ℚ(ζ_N).
pub type Scalar = CycRational;
/// Hopf superalgebras over [`Scalar`].
pub type Hopf = hopfcore::HopfSuperAlgebra<CycRational>;
