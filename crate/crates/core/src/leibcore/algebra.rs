use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, LeibnizWitness, Result};
use crate::exactmath::matrix::{add_vectors, axpy, check_rows, is_zero_vector, unit_vector, zero_vector};
use crate::exactmath::{FieldDescriptor, Matrix, Scalar, Subspace, Vector};

/// Coordinates of an element in the algebra's basis.
pub type Element = Vector;

/// A finite-dimensional left Leibniz algebra given by structure constants:
/// `[e_i, e_j] = Σ_k table(i,j)_k e_k`, absent entries meaning zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    field: FieldDescriptor,
    dim: usize,
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), Vector>,
    /// `left[i]` is the matrix of `v ↦ [e_i, v]`.
    left: Vec<Matrix>,
}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeibnizAlgebra({} dim {}", self.field, self.dim)?;
        for ((i, j), row) in &self.table {
            let row: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            write!(f, "; [{},{}]=({})", self.labels[*i], self.labels[*j], row.join(","))?;
        }
        write!(f, ")")
    }
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

impl LeibnizAlgebra {
    /// Builds the table without checking the Leibniz identity.
    pub fn new(
        field: FieldDescriptor,
        dim: usize,
        labels: Option<Vec<String>>,
        products: impl IntoIterator<Item = ((usize, usize), Vector)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        let mut table = BTreeMap::new();
        for ((i, j), row) in products {
            for index in [i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            check_rows(field, dim, std::slice::from_ref(&row))?;
            if table.contains_key(&(i, j)) {
                return Err(Error::InvalidParameter(format!("product ({i},{j}) given twice")));
            }
            if !is_zero_vector(&row) {
                table.insert((i, j), row);
            }
        }
        let mut left = vec![Matrix::zero(field, dim, dim); dim];
        for ((i, j), row) in &table {
            for (k, c) in row.iter().enumerate() {
                left[*i].set(k, *j, c.clone());
            }
        }
        Ok(LeibnizAlgebra {
            field,
            dim,
            labels,
            table,
            left,
        })
    }

    /// Like [`LeibnizAlgebra::new`], but rejects tables violating the identity.
    pub fn validated(
        field: FieldDescriptor,
        dim: usize,
        labels: Option<Vec<String>>,
        products: impl IntoIterator<Item = ((usize, usize), Vector)>,
    ) -> Result<Self> {
        let a = Self::new(field, dim, labels, products)?;
        a.validate_leibniz().map_err(Error::NotLeibniz)?;
        Ok(a)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero structure constants, ordered by `(i, j)`.
    pub fn products(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.table.iter()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.table.get(&(i, j)).cloned().unwrap_or_else(|| zero_vector(self.field, self.dim))
    }

    pub fn basis_vector(&self, i: usize) -> Element {
        unit_vector(self.field, self.dim, i)
    }

    pub fn zero_element(&self) -> Element {
        zero_vector(self.field, self.dim)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub(crate) fn check_element(&self, u: &[Scalar]) -> Result<()> {
        check_rows(self.field, self.dim, &[u.to_vec()])
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        if s.field() != self.field {
            return Err(Error::MixedFields {
                expected: self.field,
                found: s.field(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Element> {
        self.check_element(u)?;
        self.check_element(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Element {
        let mut out = self.zero_element();
        for ((i, j), row) in &self.table {
            if u[*i].is_zero() || v[*j].is_zero() {
                continue;
            }
            axpy(&mut out, &(&u[*i] * &v[*j]), row);
        }
        out
    }

    /// Matrix of `v ↦ [u, v]`.
    pub fn left_mult_matrix(&self, u: &[Scalar]) -> Result<Matrix> {
        self.check_element(u)?;
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for (i, c) in u.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.left[i].scale(c));
            }
        }
        Ok(m)
    }

    /// Matrix of `v ↦ [v, u]`.
    pub fn right_mult_matrix(&self, u: &[Scalar]) -> Result<Matrix> {
        self.check_element(u)?;
        let columns: Vec<Vector> = (0..self.dim).map(|k| self.mul(&self.basis_vector(k), u)).collect();
        Matrix::from_columns(self.field, self.dim, &columns)
    }

    /// Checks `a(bc) = (ab)c + b(ac)` on all basis triples, i.e.
    /// `ℓ_{[e_i,e_j]} = ℓ_i ℓ_j − ℓ_j ℓ_i` column by column.
    pub fn validate_leibniz(&self) -> std::result::Result<(), LeibnizWitness> {
        let zero_left: Vec<bool> = self.left.iter().map(Matrix::is_zero).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if (zero_left[i] || zero_left[j]) && !self.table.contains_key(&(i, j)) {
                    continue;
                }
                let ij = self.basis_product(i, j);
                let lhs = self.left_mult_matrix(&ij).expect("row of the right shape");
                let li_lj = self.left[i].mul(&self.left[j]).expect("square");
                let lj_li = self.left[j].mul(&self.left[i]).expect("square");
                for k in 0..self.dim {
                    for r in 0..self.dim {
                        if lhs.get(r, k) != &(li_lj.get(r, k) - lj_li.get(r, k)) {
                            return Err(LeibnizWitness { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Antisymmetry on the basis: `[e_i,e_i] = 0` and `[e_i,e_j] = −[e_j,e_i]`.
    pub fn is_lie(&self) -> bool {
        (0..self.dim).all(|i| {
            is_zero_vector(&self.basis_product(i, i))
                && (i + 1..self.dim).all(|j| is_zero_vector(&add_vectors(&self.basis_product(i, j), &self.basis_product(j, i))))
        })
    }

    /// The subalgebra `s` as an algebra in the coordinates of its RREF basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LeibnizAlgebra> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        let mut products = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let w = self.mul(u, v);
                let coords = s.coordinates(&w).ok_or(Error::NotSubalgebra)?;
                products.push(((i, j), coords));
            }
        }
        LeibnizAlgebra::new(self.field, s.dim(), None, products)
    }

    /// Reinterprets the structure constants in `target`, which must be a prime
    /// field in which every denominator is invertible.
    pub fn transplant(&self, target: FieldDescriptor) -> Result<LeibnizAlgebra> {
        if !target.is_finite() {
            return Err(Error::Transplant(format!("target {target} is not a prime field")));
        }
        let mut products = Vec::new();
        for (&(i, j), row) in &self.table {
            let mut out = Vec::with_capacity(self.dim);
            for c in row {
                let value = match c {
                    Scalar::Residue { value, modulus } => {
                        if u64::from(modulus.get()) != target.characteristic() {
                            return Err(Error::Transplant(format!("cannot move GF({}) constants to {target}", modulus.get())));
                        }
                        Scalar::from_int(target, i64::from(*value))
                    }
                    _ => {
                        let (re, im) = c.rational_parts().expect("characteristic zero");
                        if !num_traits::Zero::is_zero(&im) {
                            return Err(Error::Transplant(format!("constant {c} is not rational")));
                        }
                        Scalar::from_rational(target, &re)
                            .ok_or_else(|| Error::Transplant(format!("denominator of {c} vanishes in {target}")))?
                    }
                };
                out.push(value);
            }
            products.push(((i, j), out));
        }
        LeibnizAlgebra::new(target, self.dim, Some(self.labels.clone()), products)
    }
}

/// `L/I` on the complement coordinates of `I`'s RREF basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// `dim(L/I) × dim L`.
    pub projection: Matrix,
    /// `dim L × dim(L/I)`, picking coset representatives.
    pub section: Matrix,
}

impl LeibnizAlgebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let complement = ideal.complement_columns();
        if complement.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let m = complement.len();
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.reduce(v);
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let projection_cols: Vec<Vector> = (0..self.dim).map(|k| project(&self.basis_vector(k))).collect();
        let projection = Matrix::from_columns(self.field, m, &projection_cols)?;
        let section_cols: Vec<Vector> = complement.iter().map(|&c| self.basis_vector(c)).collect();
        let section = Matrix::from_columns(self.field, self.dim, &section_cols)?;
        let mut products = Vec::new();
        for (s, &cs) in complement.iter().enumerate() {
            for (t, &ct) in complement.iter().enumerate() {
                products.push(((s, t), project(&self.basis_product(cs, ct))));
            }
        }
        let labels = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let algebra = LeibnizAlgebra::new(self.field, m, Some(labels), products)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub const Q: FieldDescriptor = FieldDescriptor::Rationals;

    pub fn v(field: FieldDescriptor, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(field, x)).collect()
    }

    /// z·z = z², z·z² = z² on the basis (z, z²).
    pub fn example1(field: FieldDescriptor) -> LeibnizAlgebra {
        LeibnizAlgebra::validated(
            field,
            2,
            Some(vec!["z".into(), "z^2".into()]),
            [((0, 0), v(field, &[0, 1])), ((0, 1), v(field, &[0, 1]))],
        )
        .unwrap()
    }

    #[test]
    fn bracket_examples() {
        let a = example1(Q);
        let z = v(Q, &[1, 0]);
        let z2 = v(Q, &[0, 1]);
        assert_eq!(a.bracket(&z, &z2).unwrap(), z2);
        assert_eq!(a.bracket(&z2, &z2).unwrap(), v(Q, &[0, 0]));
        let x = v(Q, &[1, -1]);
        assert_eq!(a.bracket(&x, &x).unwrap(), v(Q, &[0, 0]));
        assert!(a.bracket(&v(Q, &[1]), &z).is_err());
    }

    #[test]
    fn validation_examples() {
        assert!(example1(Q).validate_leibniz().is_ok());
        // [z, z²] = z instead.
        let bad = LeibnizAlgebra::new(Q, 2, None, [((0, 0), v(Q, &[0, 1])), ((0, 1), v(Q, &[1, 0]))]).unwrap();
        let w = bad.validate_leibniz().unwrap_err();
        // Independently: evaluate both sides on the witness triple.
        let (ei, ej, ek) = (bad.basis_vector(w.i), bad.basis_vector(w.j), bad.basis_vector(w.k));
        let lhs = bad.mul(&ei, &bad.mul(&ej, &ek));
        let rhs = add_vectors(&bad.mul(&bad.mul(&ei, &ej), &ek), &bad.mul(&ej, &bad.mul(&ei, &ek)));
        assert_ne!(lhs, rhs);
        let zero = LeibnizAlgebra::new(Q, 3, None, []).unwrap();
        assert!(zero.validate_leibniz().is_ok());
        assert!(matches!(LeibnizAlgebra::new(Q, 0, None, []), Err(Error::ZeroDimension)));
        assert!(matches!(
            LeibnizAlgebra::new(Q, 3, None, [((0, 5), v(Q, &[0, 0, 0]))]),
            Err(Error::IndexOutOfRange { index: 5, dim: 3 })
        ));
    }

    #[test]
    fn lie_examples() {
        assert!(!example1(Q).is_lie());
        assert!(LeibnizAlgebra::new(Q, 2, None, []).unwrap().is_lie());
        let lie = LeibnizAlgebra::validated(Q, 2, None, [((0, 1), v(Q, &[0, 1])), ((1, 0), v(Q, &[0, -1]))]).unwrap();
        assert!(lie.is_lie());
    }

    #[test]
    fn left_mult_examples() {
        let a = example1(Q);
        assert!(a.left_mult_matrix(&v(Q, &[0, 1])).unwrap().is_zero());
        assert_eq!(a.left_mult_matrix(&v(Q, &[1, 0])).unwrap(), Matrix::from_i64(Q, &[&[0, 0], &[1, 1]]));
        assert!(a.left_mult_matrix(&v(Q, &[0, 0])).unwrap().is_zero());
        assert_eq!(a.right_mult_matrix(&v(Q, &[0, 1])).unwrap(), Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn quotient_examples() {
        let a = example1(Q);
        let ideal = Subspace::span(Q, 2, &[v(Q, &[0, 1])]).unwrap();
        let q = a.quotient(&ideal).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.algebra.products().count(), 0);
        let same = a.quotient(&a.zero_subspace()).unwrap();
        assert_eq!(same.algebra, a);
        assert!(matches!(a.quotient(&Subspace::span(Q, 2, &[v(Q, &[1, 0])]).unwrap()), Err(Error::NotIdeal)));
    }

    #[test]
    fn transplant_reduces_constants() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        let t = example1(Q).transplant(gf5).unwrap();
        assert_eq!(t, example1(gf5));
        let half = LeibnizAlgebra::new(Q, 1, None, [((0, 0), vec![Scalar::parse(Q, "1/2").unwrap()])]).unwrap();
        assert!(half.transplant(FieldDescriptor::prime_field(2).unwrap()).is_err());
        assert!(half.transplant(FieldDescriptor::prime_field(3).unwrap()).is_ok());
    }
}
