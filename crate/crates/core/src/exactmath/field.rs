use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field; products of two residues fit in a `u64`.
pub const MAX_PRIME: u32 = 1 << 31;

/// A prime modulus, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= MAX_PRIME as u64 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    GaussianRationals,
    PrimeField,
}

/// The exact base field of an algebra: ℚ, ℚ(i) or GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    GaussianRationals,
    PrimeField(Prime),
}

impl FieldDescriptor {
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(FieldDescriptor::PrimeField(Prime::new(p)?))
    }

    pub fn kind(self) -> FieldKind {
        match self {
            FieldDescriptor::Rationals => FieldKind::Rationals,
            FieldDescriptor::GaussianRationals => FieldKind::GaussianRationals,
            FieldDescriptor::PrimeField(_) => FieldKind::PrimeField,
        }
    }

    /// 0 for the characteristic-zero fields.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldDescriptor::PrimeField(p) => p.get() as u64,
            _ => 0,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldDescriptor::PrimeField(_))
    }

    /// Parses the short names used on the command line and in files:
    /// `Q`, `Q(i)`, `GF(p)` or `GF:p`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        match t {
            "Q" => return Ok(FieldDescriptor::Rationals),
            "Q(i)" | "Qi" => return Ok(FieldDescriptor::GaussianRationals),
            _ => {}
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF:"))
            .or_else(|| t.strip_prefix("GF"));
        match inner.map(|s| s.trim().parse::<u64>()) {
            Some(Ok(p)) => FieldDescriptor::prime_field(p),
            _ => Err(Error::Parse(format!("unknown field `{t}`"))),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::GaussianRationals => write!(f, "Q(i)"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({})", p.get()),
        }
    }
}
