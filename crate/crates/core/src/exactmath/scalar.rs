use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldDescriptor, Prime};
use crate::error::{Error, Result};

/// `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

/// An exact field element. The variant determines the field; residues also
/// carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(GaussianRational),
    Residue { value: u32, modulus: Prime },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn zero(field: FieldDescriptor) -> Scalar {
        Scalar::from_int(field, 0)
    }

    pub fn one(field: FieldDescriptor) -> Scalar {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: FieldDescriptor, n: i64) -> Scalar {
        Scalar::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: FieldDescriptor, n: &BigInt) -> Scalar {
        match field {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldDescriptor::GaussianRationals => Scalar::Gaussian(GaussianRational {
                re: BigRational::from_integer(n.clone()),
                im: BigRational::zero(),
            }),
            FieldDescriptor::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let r = ((n % &m) + &m) % &m;
                Scalar::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// Embeds a rational number; fails in GF(p) when the denominator is divisible by p.
    pub fn from_rational(field: FieldDescriptor, q: &BigRational) -> Option<Scalar> {
        match field {
            FieldDescriptor::Rationals => Some(Scalar::Rational(q.clone())),
            FieldDescriptor::GaussianRationals => Some(Scalar::Gaussian(GaussianRational {
                re: q.clone(),
                im: BigRational::zero(),
            })),
            FieldDescriptor::PrimeField(_) => {
                let num = Scalar::from_bigint(field, q.numer());
                let den = Scalar::from_bigint(field, q.denom());
                den.inv().map(|d| &num * &d)
            }
        }
    }

    /// The imaginary unit of ℚ(i).
    pub fn imaginary_unit() -> Scalar {
        Scalar::Gaussian(GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        })
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
        Scalar::Gaussian(GaussianRational { re, im })
    }

    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rationals,
            Scalar::Gaussian(_) => FieldDescriptor::GaussianRationals,
            Scalar::Residue { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian(g) => g.re.is_zero() && g.im.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Gaussian(g) => g.re.is_one() && g.im.is_zero(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Gaussian(g) => {
                let norm = &g.re * &g.re + &g.im * &g.im;
                Scalar::gaussian(&g.re / &norm, -(&g.im / &norm))
            }
            Scalar::Residue { value, modulus } => {
                let p = modulus.get() as u64;
                Scalar::Residue {
                    value: mod_pow(*value as u64, p - 2, p) as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Real and imaginary rational parts; `None` for residues.
    pub fn rational_parts(&self) -> Option<(BigRational, BigRational)> {
        match self {
            Scalar::Rational(q) => Some((q.clone(), BigRational::zero())),
            Scalar::Gaussian(g) => Some((g.re.clone(), g.im.clone())),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Complex conjugate in ℚ(i); identity elsewhere.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Gaussian(g) => Scalar::gaussian(g.re.clone(), -g.im.clone()),
            other => other.clone(),
        }
    }

    /// Parses the text syntax of the given field.
    ///
    /// ℚ accepts `n` and `p/q`. ℚ(i) accepts `a/b+c/di`, `a/b-c/di`, `c/di`
    /// and `a/b`, with `i` and `-i` standing for unit coefficients. GF(p)
    /// accepts a decimal integer, reduced modulo p.
    pub fn parse(field: FieldDescriptor, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::Parse(format!("`{t}` is not a valid scalar in {field}"));
        match field {
            FieldDescriptor::Rationals => parse_rational(t).map(Scalar::Rational).ok_or_else(bad),
            FieldDescriptor::GaussianRationals => {
                parse_gaussian(t).map(|(re, im)| Scalar::gaussian(re, im)).ok_or_else(bad)
            }
            FieldDescriptor::PrimeField(_) => {
                let n = parse_integer(t).ok_or_else(bad)?;
                Ok(Scalar::from_bigint(field, &n))
            }
        }
    }
}

fn parse_integer(t: &str) -> Option<BigInt> {
    let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse::<BigInt>().ok()
}

fn parse_rational(t: &str) -> Option<BigRational> {
    match t.split_once('/') {
        None => parse_integer(t).map(BigRational::from_integer),
        Some((n, d)) => {
            let n = parse_integer(n)?;
            if d.starts_with(['+', '-']) {
                return None;
            }
            let d = parse_integer(d)?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

fn parse_imaginary_coefficient(t: &str) -> Option<BigRational> {
    match t {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(t),
    }
}

fn parse_gaussian(t: &str) -> Option<(BigRational, BigRational)> {
    let Some(body) = t.strip_suffix('i') else {
        return parse_rational(t).map(|re| (re, BigRational::zero()));
    };
    // Split at the last sign that is not leading.
    let split = body
        .char_indices()
        .rev()
        .find(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
        .map(|(idx, _)| idx);
    match split {
        Some(idx) => {
            let re = parse_rational(&body[..idx])?;
            let im = parse_imaginary_coefficient(&body[idx..])?;
            Some((re, im))
        }
        None => Some((BigRational::zero(), parse_imaginary_coefficient(body)?)),
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_imaginary(im: &BigRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", fmt_rational(im))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&fmt_rational(q)),
            Scalar::Gaussian(g) => {
                if g.im.is_zero() {
                    f.write_str(&fmt_rational(&g.re))
                } else if g.re.is_zero() {
                    f.write_str(&fmt_imaginary(&g.im))
                } else {
                    let sign = if g.im.is_positive() { "+" } else { "" };
                    write!(f, "{}{}{}", fmt_rational(&g.re), sign, fmt_imaginary(&g.im))
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::gaussian(&a.re + &b.re, &a.im + &b.im),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m })
                if modulus == m =>
            {
                let p = modulus.get() as u64;
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % p) as u32,
                    modulus: *modulus,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::gaussian(&a.re - &b.re, &a.im - &b.im),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m })
                if modulus == m =>
            {
                let p = modulus.get() as u64;
                Scalar::Residue {
                    value: ((*a as u64 + p - *b as u64) % p) as u32,
                    modulus: *modulus,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::gaussian(
                &a.re * &b.re - &a.im * &b.im,
                &a.re * &b.im + &a.im * &b.re,
            ),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m })
                if modulus == m =>
            {
                let p = modulus.get() as u64;
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % p) as u32,
                    modulus: *modulus,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gaussian(a) => Scalar::gaussian(-&a.re, -&a.im),
            Scalar::Residue { value, modulus } => {
                let p = modulus.get();
                Scalar::Residue {
                    value: (p - value) % p,
                    modulus: *modulus,
                }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
