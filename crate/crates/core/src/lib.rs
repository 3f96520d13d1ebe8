//! Exact computations with finite-dimensional left Leibniz algebras over ℚ,
//! ℚ(i) and GF(p): structure constants, series, ideals, Fitting
//! decompositions, the minimal nonnilpotent families and a structure
//! verifier, plus an exhaustive oracle over prime fields.

pub mod classify;
pub mod error;
pub mod exactmath;
pub mod format;
pub mod leibcore;
pub mod oracle;
pub mod structure;

pub use error::{Error, LeibnizWitness, Result};
