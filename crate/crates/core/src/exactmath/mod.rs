//! Exact arithmetic over ℚ, ℚ(i) and GF(p), linear algebra and polynomials.

pub mod enumerate;
pub mod field;
pub mod irreducible;
pub mod matrix;
pub mod operator;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use enumerate::{gaussian_binomial, subspace_count, SubspaceEnumerator};
pub use field::{FieldDescriptor, FieldKind, Prime};
pub use irreducible::{poly_irreducible, Irreducibility};
pub use matrix::{Matrix, Vector};
pub use operator::{char_poly, companion_basis, fitting_split, is_nilpotent_operator, KrylovBasis};
pub use poly::{recurrence_polynomial, Polynomial};
pub use scalar::{GaussianRational, Scalar};
pub use subspace::{membership, span_rref, subspace_combine, CombineMode, Subspace};
