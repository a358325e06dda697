//! Matroids and oriented matroids as conditional-independence structures.
//!
//! The crate works with CI-statements `(ij|K)` over a ground set
//! `[n] = {1, .., n}` and the structures they form. It provides
//!
//! * axiom checkers with replayable witnesses: semigraphoid (SG), the
//!   matroid rule (MCI) and the gaussoid rules ([`axioms`]);
//! * loopless matroids as rank functions and the translations between
//!   matroids and CI-structures satisfying (SG) and (MCI) ([`matroid`]);
//! * oriented matroids given by signed circuits or chirotopes, and their
//!   sign-valued CI-structures with the (OCI1)–(OCI5) axioms ([`oriented`]);
//! * exact rational models: vector configurations and Gaussian covariance
//!   matrices ([`models`]);
//! * exhaustive censuses used as oracles ([`census`]) and a plain-text file
//!   format for every object ([`format`]).
//!
//! Elements are 0-based in the API and 1-based in every printed form.

pub mod axioms;
pub mod census;
pub mod error;
pub mod format;
pub mod matroid;
pub mod models;
pub mod oriented;
pub mod par;
pub mod set;
pub mod statement;
pub mod structure;

pub use axioms::{
    check_gaussoid, check_mci, check_semigraphoid, is_gaussoid, is_matroid_ci, Axiom,
    ViolationWitness,
};
pub use error::{Error, Result};
pub use matroid::{Matroid, RankFunction, SetFamily, SetFunction};
pub use oriented::{Chirotope, OrientedCIStructure, Sign, SignedCircuitSet, SignedSet};
pub use par::Execution;
pub use set::{ElementSet, GroundSet};
pub use statement::{statement_count, CIStatement, StatementIndex};
pub use structure::CIStructure;
