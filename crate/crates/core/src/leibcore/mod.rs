//! Leibniz algebras as structure-constant tables.

mod algebra;
mod analysis;

pub use algebra::{default_labels, Element, LeibnizAlgebra, Quotient};
pub use analysis::{NilpotencyMethod, SeriesKind, SeriesReport};
