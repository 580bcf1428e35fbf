//! `equigram` decides, exactly and symbolically, which phonological mappings are
//! equiprobable or uniformly ordered under MaxEnt and stochastic Harmonic
//! Grammar, and cross-validates every verdict numerically.
//!
//! The decision procedures reduce to membership questions about finitely
//! generated convex cones and hulls over the integer difference vectors of a
//! tableau. All symbolic verdicts are computed in exact rational arithmetic
//! and come with machine-checkable certificates; floating point appears only
//! in the numeric verifier.
//!
//! Module map:
//! - [`tableau`]: constraint sets, tableaux, mappings, difference vectors,
//!   the tableau file format and the tab-separated import.
//! - [`geometry`]: exact rational feasibility (phase-1 simplex with Bland's
//!   rule), cone/hull-plus-orthant membership with certificates, extreme
//!   generators, nonredundant losers, ray canonicalization.
//! - [`grammar`]: categorical HG, MaxEnt, and sampled stochastic HG evaluation.
//! - [`typology`]: uniform probability inequalities, equiprobability verdicts,
//!   and T-order graphs.
//! - [`verifier`]: numeric cross-validation (weight sweeps, Monte Carlo
//!   comparison, counterexample search).
//! - [`phonology`]: prosodic parsing and the bundled Finnish stress and vowel
//!   harmony constraint evaluators that derive the fixture tableaux.

pub mod error;
pub mod geometry;
pub mod grammar;
pub mod phonology;
pub mod report;
pub mod tableau;
pub mod typology;
pub mod verifier;

pub use error::Error;
pub use tableau::{CandidateEntry, ConstraintSet, DifferenceVector, InputEntry, MappingId, Tableau};

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
