use thiserror::Error;

use crate::exactmath::FieldDescriptor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A basis triple `(i, j, k)` on which `e_i(e_j e_k) = (e_i e_j)e_k + e_j(e_i e_k)` fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeibnizWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("mixed fields: expected {expected}, found {found}")]
    MixedFields {
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("Krylov seed vector is zero")]
    ZeroSeed,
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("operation requires a prime field, got {0}")]
    InfiniteField(FieldDescriptor),
    #[error("enumeration would visit {count} subspaces, budget is {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("subspace has codimension {0}, expected 1")]
    CodimensionNotOne(usize),
    #[error("Leibniz identity fails on basis triple ({}, {}, {})", .0.i, .0.j, .0.k)]
    NotLeibniz(LeibnizWitness),
    #[error("constant term c0 must be nonzero")]
    ZeroConstantTerm,
    #[error("characteristic {characteristic} too small for chain length {k}")]
    CharacteristicTooSmall { characteristic: u64, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("algebra dimension must be positive")]
    ZeroDimension,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot transplant: {0}")]
    Transplant(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
