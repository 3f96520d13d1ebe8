//! Constructors for the standard, chain and cyclic families.

use crate::error::{Error, Result};
use crate::exactmath::matrix::zero_vector;
use crate::exactmath::{recurrence_polynomial, FieldDescriptor, Polynomial, Scalar, Vector};
use crate::leibcore::LeibnizAlgebra;

/// An algebra of the standard family together with its `p(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardAlgebra {
    pub algebra: LeibnizAlgebra,
    pub coefficients: Vec<Scalar>,
    pub p: Polynomial,
}

/// Basis `x, a₀, …, a_k` with `x·a_i = a_{i+1}` and `x·a_k = Σ c_i a_i`.
pub fn construct_standard(field: FieldDescriptor, coeffs: &[Scalar]) -> Result<StandardAlgebra> {
    let Some(c0) = coeffs.first() else {
        return Err(Error::InvalidParameter("at least one coefficient is required".into()));
    };
    if coeffs.iter().any(|c| c.field() != field) {
        return Err(Error::MixedFields {
            expected: field,
            found: coeffs.iter().find(|c| c.field() != field).unwrap().field(),
        });
    }
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let k = coeffs.len() - 1;
    let dim = k + 2;
    let mut labels = vec!["x".to_string()];
    labels.extend((0..=k).map(|i| format!("a{i}")));
    let mut products = Vec::new();
    for i in 0..k {
        let mut row = zero_vector(field, dim);
        row[i + 2] = Scalar::one(field);
        products.push(((0, i + 1), row));
    }
    let mut last = zero_vector(field, dim);
    for (i, c) in coeffs.iter().enumerate() {
        last[i + 1] = c.clone();
    }
    products.push(((0, k + 1), last));
    let algebra = LeibnizAlgebra::validated(field, dim, Some(labels), products)?;
    Ok(StandardAlgebra {
        algebra,
        coefficients: coeffs.to_vec(),
        p: recurrence_polynomial(field, coeffs),
    })
}

/// Basis `x, …, x^j, a, …, a^k` with left-normed powers, `x·a = a = −a·x`
/// and `x·a^i = i·a^i`.
pub fn construct_chain(field: FieldDescriptor, j: usize, k: usize) -> Result<LeibnizAlgebra> {
    if j == 0 || k == 0 {
        return Err(Error::InvalidParameter("chain lengths must be at least 1".into()));
    }
    let char_p = field.characteristic();
    if char_p != 0 && char_p <= k as u64 {
        return Err(Error::CharacteristicTooSmall {
            characteristic: char_p,
            k,
        });
    }
    let dim = j + k;
    let xi = |i: usize| i - 1;
    let ai = |i: usize| j + i - 1;
    let unit = |index: usize, c: i64| -> Vector {
        let mut row = zero_vector(field, dim);
        row[index] = Scalar::from_int(field, c);
        row
    };
    let power = |base: &str, i: usize| if i == 1 { base.to_string() } else { format!("{base}^{i}") };
    let mut labels: Vec<String> = (1..=j).map(|i| power("x", i)).collect();
    labels.extend((1..=k).map(|i| power("a", i)));
    let mut products = Vec::new();
    for i in 1..j {
        products.push(((xi(1), xi(i)), unit(xi(i + 1), 1)));
    }
    for i in 1..k {
        products.push(((ai(1), ai(i)), unit(ai(i + 1), 1)));
    }
    products.push(((ai(1), xi(1)), unit(ai(1), -1)));
    for i in 1..=k {
        products.push(((xi(1), ai(i)), unit(ai(i), i as i64)));
    }
    LeibnizAlgebra::validated(field, dim, Some(labels), products)
}

/// Basis `z, z², …, z^d` with `z·z^i = z^{i+1}` and `z·z^d = Σ top_i z^i`.
pub fn construct_cyclic(field: FieldDescriptor, d: usize, top: &[Scalar]) -> Result<LeibnizAlgebra> {
    if d == 0 {
        return Err(Error::InvalidParameter("cyclic dimension must be at least 1".into()));
    }
    if top.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: top.len(),
        });
    }
    let labels = (1..=d).map(|i| if i == 1 { "z".to_string() } else { format!("z^{i}") }).collect();
    let mut products = Vec::new();
    for i in 0..d - 1 {
        let mut row = zero_vector(field, d);
        row[i + 1] = Scalar::one(field);
        products.push(((0, i), row));
    }
    products.push(((0, d - 1), top.to_vec()));
    LeibnizAlgebra::validated(field, d, Some(labels), products)
}
