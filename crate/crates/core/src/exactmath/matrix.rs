use std::fmt;

use super::field::FieldDescriptor;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A coefficient row of the ambient space.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldDescriptor, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

pub fn unit_vector(field: FieldDescriptor, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `dst += a·src`.
pub fn axpy(dst: &mut [Scalar], a: &Scalar, src: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = &*d + &(a * s);
        }
    }
}

pub fn scale(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| a * x).collect()
}

pub fn add_vectors(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub_vectors(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

/// Checks that every row has `len` entries over `field`.
pub fn check_rows(field: FieldDescriptor, len: usize, rows: &[Vector]) -> Result<()> {
    for row in rows {
        if row.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: row.len(),
            });
        }
        if let Some(bad) = row.iter().find(|s| s.field() != field) {
            return Err(Error::MixedFields {
                expected: field,
                found: bad.field(),
            });
        }
    }
    Ok(())
}

/// Dense matrix over one exact field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}](", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, ")")
    }
}

impl Matrix {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, cols: usize, rows: &[Vector]) -> Result<Matrix> {
        check_rows(field, cols, rows)?;
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldDescriptor, rows: usize, columns: &[Vector]) -> Result<Matrix> {
        Ok(Matrix::from_rows(field, rows, columns)?.transpose())
    }

    /// Parses small integer literals; test helper.
    pub fn from_i64(field: FieldDescriptor, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(field, x)).collect())
            .collect();
        Matrix::from_rows(field, cols, &data).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
            for k in 0..self.cols {
                axpy(dst, self.get(r, k), rhs.row(k));
            }
        }
        Ok(out)
    }

    /// `M·v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(self.field);
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| a * x).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.field, n);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = self.get(lead, c).inv().expect("pivot is nonzero");
            for k in c..self.cols {
                let v = self.get(lead, k) * &inv;
                self.set(lead, k, v);
            }
            let pivot_row = self.row(lead)[c..].to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                let neg = -&factor;
                let start = r * self.cols + c;
                axpy(&mut self.data[start..start + self.cols - c], &neg, &pivot_row);
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M·v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vector(self.field, self.cols);
                v[f] = Scalar::one(self.field);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut det = Scalar::one(self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(Scalar::zero(self.field));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in c + 1..n {
                let factor = m.get(r, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                let pivot_row = m.row(c).to_vec();
                let neg = -factor;
                let start = r * n;
                axpy(&mut m.data[start..start + n], &neg, &pivot_row);
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    #[test]
    fn rref_and_kernel() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&m.apply(&k[0])));
    }

    #[test]
    fn determinant_and_power() {
        let m = Matrix::from_i64(Q, &[&[0, 2], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(Q, -2));
        assert_eq!(m.pow(2).unwrap(), Matrix::from_i64(Q, &[&[2, 0], &[0, 2]]));
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::zero(Q, 2, 3).determinant().is_err());
    }

    #[test]
    fn row_checks() {
        let gf = FieldDescriptor::prime_field(3).unwrap();
        let bad = vec![vec![Scalar::one(Q), Scalar::one(gf)]];
        assert!(matches!(Matrix::from_rows(Q, 2, &bad), Err(Error::MixedFields { .. })));
        let short = vec![vec![Scalar::one(Q)]];
        assert!(matches!(Matrix::from_rows(Q, 2, &short), Err(Error::DimensionMismatch { .. })));
    }
}
