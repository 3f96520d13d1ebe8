//! Linear operators on the coefficient space: characteristic polynomials,
//! nilpotency, Fitting decompositions and Krylov (companion) bases.

use super::matrix::{is_zero_vector, Matrix, Vector};
use super::poly::{recurrence_polynomial, Polynomial};
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Monic characteristic polynomial `det(λI − T)`, via the division-free
/// Samuelson–Berkowitz recurrence.
pub fn char_poly(t: &Matrix) -> Result<Polynomial> {
    let n = t.require_square()?;
    let field = t.field();
    // Coefficients highest degree first for the leading r×r block.
    let mut current = vec![Scalar::one(field)];
    for r in 0..n {
        // Block [[M, c], [row, a]] with M the leading r×r submatrix.
        let a = t.get(r, r).clone();
        let row: Vector = (0..r).map(|j| t.get(r, j).clone()).collect();
        let mut col: Vector = (0..r).map(|i| t.get(i, r).clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(Scalar::one(field));
        toeplitz.push(-&a);
        for _ in 0..r {
            let dot = row
                .iter()
                .zip(&col)
                .fold(Scalar::zero(field), |acc, (x, y)| &acc + &(x * y));
            toeplitz.push(-dot);
            col = (0..r)
                .map(|i| {
                    (0..r).fold(Scalar::zero(field), |acc, j| &acc + &(t.get(i, j) * &col[j]))
                })
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = Scalar::zero(field);
            for (j, c) in current.iter().enumerate() {
                if j <= i {
                    acc = &acc + &(&toeplitz[i - j] * c);
                }
            }
            next.push(acc);
        }
        current = next;
    }
    current.reverse();
    Polynomial::new(field, current)
}

/// Whether `Tⁿ = 0` for an n×n matrix.
pub fn is_nilpotent_operator(t: &Matrix) -> Result<bool> {
    let n = t.require_square()?;
    Ok(t.pow(n as u32)?.is_zero())
}

/// `(ker Tⁿ, im Tⁿ)`: the Fitting null and one components.
pub fn fitting_split(t: &Matrix) -> Result<(Subspace, Subspace)> {
    let n = t.require_square()?;
    let p = t.pow(n as u32)?;
    let null = Subspace::span(t.field(), n, &p.kernel())?;
    let one = Subspace::span(t.field(), n, &p.column_vectors())?;
    Ok((null, one))
}

/// Krylov basis `v, Tv, …, T^k v` of a seed, with `T^{k+1} v = Σ c_i T^i v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrylovBasis {
    pub vectors: Vec<Vector>,
    pub coefficients: Vec<Scalar>,
}

impl KrylovBasis {
    /// Index of the last basis vector.
    pub fn k(&self) -> usize {
        self.vectors.len() - 1
    }

    pub fn span(&self) -> Subspace {
        let field = self.coefficients[0].field();
        Subspace::span(field, self.vectors[0].len(), &self.vectors).expect("vectors share a field")
    }

    /// The minimal polynomial of the seed, `λ^{k+1} − c_k λ^k − ⋯ − c_0`.
    pub fn recurrence_polynomial(&self) -> Polynomial {
        let field = self.coefficients[0].field();
        recurrence_polynomial(field, &self.coefficients)
    }

    /// Whether the Krylov space is all of `w`.
    pub fn is_cyclic_for(&self, w: &Subspace) -> bool {
        self.span() == *w
    }
}

/// Solves `Σ x_i·vectors[i] = target` for linearly independent `vectors`.
pub fn solve_in_span(vectors: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let field = target.first()?.field();
    let n = target.len();
    let k = vectors.len();
    let mut columns: Vec<Vector> = vectors.to_vec();
    columns.push(target.to_vec());
    let aug = Matrix::from_columns(field, n, &columns).ok()?;
    let (r, pivots) = aug.rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Scalar::zero(field); k];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, k).clone();
    }
    Some(x)
}

/// Grows the Krylov sequence of `seed` under `t` until it becomes dependent.
pub fn companion_basis(t: &Matrix, seed: &[Scalar]) -> Result<KrylovBasis> {
    let n = t.require_square()?;
    if seed.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: seed.len(),
        });
    }
    if is_zero_vector(seed) {
        return Err(Error::ZeroSeed);
    }
    let mut vectors = vec![seed.to_vec()];
    loop {
        let next = t.apply(vectors.last().unwrap());
        if let Some(coefficients) = solve_in_span(&vectors, &next) {
            return Ok(KrylovBasis { vectors, coefficients });
        }
        vectors.push(next);
    }
}
