use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::field::FieldDescriptor;
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense univariate polynomial, constant term first. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.field, self.pretty("λ"))
    }
}

/// Comma-separated coefficient list, constant term first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

impl Polynomial {
    pub fn new(field: FieldDescriptor, coeffs: Vec<Scalar>) -> Result<Polynomial> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::MixedFields {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Polynomial::trimmed(field, coeffs))
    }

    pub(crate) fn trimmed(field: FieldDescriptor, mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: FieldDescriptor, coeffs: &[i64]) -> Polynomial {
        Polynomial::trimmed(field, coeffs.iter().map(|&c| Scalar::from_int(field, c)).collect())
    }

    pub fn zero(field: FieldDescriptor) -> Polynomial {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldDescriptor) -> Polynomial {
        Polynomial::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> Polynomial {
        let field = c.field();
        Polynomial::trimmed(field, vec![c])
    }

    /// `c·λ^degree`.
    pub fn monomial(c: Scalar, degree: usize) -> Polynomial {
        let field = c.field();
        let mut coeffs = vec![Scalar::zero(field); degree];
        coeffs.push(c);
        Polynomial::trimmed(field, coeffs)
    }

    /// The variable λ.
    pub fn lambda(field: FieldDescriptor) -> Polynomial {
        Polynomial::monomial(Scalar::one(field), 1)
    }

    /// Parses `c0,c1,...` in the given field.
    pub fn parse(field: FieldDescriptor, text: &str) -> Result<Polynomial> {
        let coeffs = text
            .split(',')
            .map(|part| Scalar::parse(field, part))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::trimmed(field, coeffs))
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, a: &Scalar) -> Polynomial {
        Polynomial::trimmed(self.field, self.coeffs.iter().map(|c| a * c).collect())
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::trimmed(self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::trimmed(self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![Scalar::zero(self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Polynomial::trimmed(self.field, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Polynomial::zero(self.field), Polynomial::zero(self.field));
        };
        if sd < dd {
            return (Polynomial::zero(self.field), self.clone());
        }
        let mut quot = vec![Scalar::zero(self.field); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + j] = &rem[shift + j] - &(&q * d);
                }
            }
            quot[shift] = q;
        }
        rem.truncate(dd);
        (Polynomial::trimmed(self.field, quot), Polynomial::trimmed(self.field, rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.div_rem(divisor).1
    }

    /// Exact quotient if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, rhs: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::trimmed(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| &Scalar::from_int(self.field, i as i64) * c)
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Matrix substitution `p(T)`.
    pub fn eval_matrix(&self, t: &Matrix) -> Result<Matrix> {
        let n = t.require_square()?;
        let mut acc = Matrix::zero(self.field, n, n);
        let id = Matrix::identity(self.field, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t)?.add(&id.scale(c));
        }
        Ok(acc)
    }

    /// `self^exp mod modulus` with an arbitrary-size exponent.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::one(self.field).rem(modulus);
        let base = self.rem(modulus);
        for bit in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(bit) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Human-readable form in the given variable, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = c.to_string();
            let term = if i == 0 {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if cs.contains(['+']) || cs[1..].contains('-') {
                format!("({cs}){mono}")
            } else {
                format!("{cs}{mono}")
            };
            terms.push(term);
        }
        let mut out = String::new();
        for (k, t) in terms.iter().enumerate() {
            if k == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

/// `λ^{k+1} − c_k λ^k − ⋯ − c_1 λ − c_0` for coefficients `c_0..c_k`.
pub fn recurrence_polynomial(field: FieldDescriptor, coeffs: &[Scalar]) -> Polynomial {
    let mut out: Vec<Scalar> = coeffs.iter().map(|c| -c).collect();
    out.push(Scalar::one(field));
    Polynomial::trimmed(field, out)
}

/// Exponent helper for Frobenius powers.
pub(crate) fn big_pow(base: u64, exp: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= base;
    }
    if acc.is_zero() {
        BigUint::one()
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    #[test]
    fn division_and_gcd() {
        let f = Polynomial::from_i64(Q, &[-1, 0, 1]); // λ²−1
        let g = Polynomial::from_i64(Q, &[-1, 1]); // λ−1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, Polynomial::from_i64(Q, &[1, 1]));
        assert!(r.is_zero());
        let h = Polynomial::from_i64(Q, &[1, 2, 1]); // (λ+1)²
        assert_eq!(f.gcd(&h), Polynomial::from_i64(Q, &[1, 1]));
        assert_eq!(f.gcd(&Polynomial::zero(Q)), f);
    }

    #[test]
    fn recurrence_sign_convention() {
        let c = [Scalar::from_int(Q, 2), Scalar::from_int(Q, 0)];
        assert_eq!(recurrence_polynomial(Q, &c), Polynomial::from_i64(Q, &[-2, 0, 1]));
        assert_eq!(recurrence_polynomial(Q, &c).pretty("λ"), "λ^2 - 2");
    }

    #[test]
    fn parse_and_display_round_trip() {
        let qi = FieldDescriptor::GaussianRationals;
        let p = Polynomial::parse(qi, "-1,-2i,1").unwrap();
        assert_eq!(p.to_string(), "-1,-2i,1");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Polynomial::parse(Q, "1,0,0").unwrap().degree(), Some(0));
        assert!(Polynomial::parse(Q, "1,,2").is_err());
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let gf = FieldDescriptor::prime_field(3).unwrap();
        let m = Polynomial::from_i64(gf, &[1, 0, 1]);
        let x = Polynomial::lambda(gf);
        let slow = x.pow(9).rem(&m);
        assert_eq!(x.pow_mod(&BigUint::from(9u32), &m), slow);
    }
}
