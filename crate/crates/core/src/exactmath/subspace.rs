use std::fmt;

use super::field::FieldDescriptor;
use super::matrix::{axpy, check_rows, is_zero_vector, Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `field^ambient_dim`, stored as its reduced row-echelon basis
/// with zero rows removed. Two subspaces are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: ", self.dim(), self.ambient_dim)?;
        for r in 0..self.dim() {
            let row: Vec<String> = self.basis.row(r).iter().map(|s| s.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersection,
}

impl Subspace {
    /// Canonical span of `rows`.
    pub fn span(field: FieldDescriptor, ambient_dim: usize, rows: &[Vector]) -> Result<Subspace> {
        let m = Matrix::from_rows(field, ambient_dim, rows)?;
        Ok(Subspace::from_matrix(m))
    }

    pub(crate) fn from_matrix(mut m: Matrix) -> Subspace {
        let ambient_dim = m.cols();
        let pivots = m.rref_in_place();
        let rows: Vec<Vector> = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        let basis = Matrix::from_rows(m.field(), ambient_dim, &rows).expect("rows of an existing matrix");
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    /// Trusts that `rows` is already reduced row-echelon with the given pivots.
    pub(crate) fn from_rref_rows(field: FieldDescriptor, ambient_dim: usize, rows: Vec<Vector>, pivots: Vec<usize>) -> Subspace {
        let basis = Matrix::from_rows(field, ambient_dim, &rows).expect("well-formed rows");
        debug_assert_eq!(Subspace::from_matrix(basis.clone()).basis, basis);
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldDescriptor, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zero(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldDescriptor, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the unit vectors on these columns span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        check_rows(self.field(), self.ambient_dim, std::slice::from_ref(&v.to_vec()))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.field() != other.field() {
            return Err(Error::MixedFields {
                expected: self.field(),
                found: other.field(),
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis; zero on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let neg = -&out[p];
            axpy(&mut out, &neg, self.basis.row(r));
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim);
        is_zero_vector(&self.reduce(v))
    }

    /// Checked membership.
    pub fn membership(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(self.field()); self.ambient_dim];
        for (r, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(r));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if other.is_subspace_of(self) {
            return Ok(self.clone());
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient_dim, &rows)
    }

    /// Adds the given vectors to the span.
    pub fn extend(&self, vectors: &[Vector]) -> Result<Subspace> {
        check_rows(self.field(), self.ambient_dim, vectors)?;
        if vectors.iter().all(|v| self.contains(v)) {
            return Ok(self.clone());
        }
        let mut rows = self.basis_vectors();
        rows.extend(vectors.iter().cloned());
        Subspace::span(self.field(), self.ambient_dim, &rows)
    }

    /// Exact intersection via the left kernel of the stacked bases.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient_dim));
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = Matrix::from_rows(self.field(), self.ambient_dim, &rows)?;
        // (α, β) with α·U + β·V = 0 gives α·U in the intersection.
        let relations = stacked.transpose().kernel();
        let common: Vec<Vector> = relations.iter().map(|rel| self.combine(&rel[..self.dim()])).collect();
        Subspace::span(self.field(), self.ambient_dim, &common)
    }

    pub fn combine_with(&self, other: &Subspace, mode: CombineMode) -> Result<Subspace> {
        match mode {
            CombineMode::Sum => self.sum(other),
            CombineMode::Intersection => self.intersection(other),
        }
    }

    /// Image under `m` (which must have `ambient_dim` columns).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let rows: Vec<Vector> = (0..self.dim()).map(|r| m.apply(self.basis.row(r))).collect();
        Subspace::span(self.field(), m.rows(), &rows)
    }

    /// Whether `m·W ⊆ W`.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        (0..self.dim()).all(|r| self.contains(&m.apply(self.basis.row(r))))
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in RREF-basis coordinates.
    pub fn restrict_operator(&self, m: &Matrix) -> Result<Matrix> {
        let mut columns = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let image = m.apply(self.basis.row(r));
            columns.push(self.coordinates(&image).ok_or(Error::NotInvariant)?);
        }
        Matrix::from_columns(self.field(), self.dim(), &columns)
    }
}

/// Canonical span of a list of rows.
pub fn span_rref(field: FieldDescriptor, ambient_dim: usize, rows: &[Vector]) -> Result<Subspace> {
    Subspace::span(field, ambient_dim, rows)
}

pub fn subspace_combine(u: &Subspace, v: &Subspace, mode: CombineMode) -> Result<Subspace> {
    u.combine_with(v, mode)
}

pub fn membership(u: &Subspace, v: &[Scalar]) -> Result<bool> {
    u.membership(v)
}
