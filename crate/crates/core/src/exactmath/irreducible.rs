//! Irreducibility of univariate polynomials.
//!
//! Over GF(p) the answer is always exact (Rabin's test, with a distinct-degree
//! / equal-degree split to produce a witness factor). Over ℚ and ℚ(i) the
//! polynomial is scaled to a primitive integral one and then
//!
//! 1. degree ≤ 3 is decided by a root search over the divisors of the end
//!    coefficients (Gaussian divisors for ℚ(i));
//! 2. any degree may be certified irreducible by an irreducible reduction
//!    modulo one of the first 25 admissible primes;
//! 3. degree ≤ 8 falls back to Kronecker's interpolation search over the
//!    divisors of `f(t)`, pruned by the Mignotte coefficient bound.
//!
//! Whatever is not settled by these steps is reported as inconclusive.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{is_prime, FieldDescriptor};
use super::poly::{big_pow, Polynomial};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// How many primes are tried for a modular irreducibility certificate.
pub const CERTIFICATE_PRIMES: usize = 25;
/// Highest degree handled by the interpolation factor search.
pub const MAX_SEARCH_DEGREE: usize = 8;
/// Cap on the number of interpolation candidates per factor degree.
const MAX_CANDIDATES: u128 = 2_000_000;
/// Integers (or norms) above this are not factored by trial division.
const MAX_TRIAL_DIVISION: u128 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Carries a monic proper factor that divides the input exactly.
    Reducible { factor: Polynomial },
    Inconclusive { reason: String },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, Irreducibility::Reducible { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible { .. } => "reducible",
            Irreducibility::Inconclusive { .. } => "inconclusive",
        }
    }
}

pub fn poly_irreducible(p: &Polynomial) -> Result<Irreducibility> {
    match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(1) => return Ok(Irreducibility::Irreducible),
        Some(_) => {}
    }
    let outcome = match p.field() {
        FieldDescriptor::PrimeField(_) => {
            let f = p.monic();
            if gf_is_irreducible(&f) {
                Irreducibility::Irreducible
            } else {
                let factor = gf_find_factor(&f)
                    .ok_or_else(|| Error::Consistency("Rabin test and factor search disagree".into()))?;
                Irreducibility::Reducible { factor }
            }
        }
        FieldDescriptor::Rationals => characteristic_zero(p, Lattice::Integers),
        FieldDescriptor::GaussianRationals => characteristic_zero(p, Lattice::GaussianIntegers),
    };
    if let Irreducibility::Reducible { factor } = &outcome {
        let d = factor.degree().unwrap_or(0);
        if d == 0 || Some(d) >= p.degree() || p.exact_div(factor).is_none() {
            return Err(Error::Consistency(format!("invalid factor witness {factor:?} for {p:?}")));
        }
    }
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// Prime fields

fn modulus_of(f: &Polynomial) -> u64 {
    f.field().characteristic()
}

/// `x^{q^i} mod f` for `i = 0..=count`.
fn frobenius_powers(f: &Polynomial, count: usize) -> Vec<Polynomial> {
    let q = BigUint::from(modulus_of(f));
    let mut out = vec![Polynomial::lambda(f.field()).rem(f)];
    for i in 0..count {
        let next = out[i].pow_mod(&q, f);
        out.push(next);
    }
    out
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial over GF(q).
pub(crate) fn gf_is_irreducible(f: &Polynomial) -> bool {
    let n = f.degree().expect("nonzero polynomial");
    if n <= 1 {
        return n == 1;
    }
    let x = Polynomial::lambda(f.field()).rem(f);
    let hs = frobenius_powers(f, n);
    if hs[n] != x {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let g = hs[n / r].sub(&x).gcd(f);
        g.degree() == Some(0)
    })
}

/// A proper monic factor of a reducible monic polynomial over GF(q).
fn gf_find_factor(f: &Polynomial) -> Option<Polynomial> {
    let n = f.degree()?;
    let field = f.field();
    let q = modulus_of(f) as usize;
    let df = f.derivative();
    if df.is_zero() {
        // f(λ) = g(λ^q) = g(λ)^q over the prime field.
        let coeffs: Vec<Scalar> = f.coefficients().iter().step_by(q).cloned().collect();
        return Some(Polynomial::new(field, coeffs).ok()?.monic());
    }
    let g = f.gcd(&df);
    if (1..n).contains(&g.degree()?) {
        return Some(g);
    }
    let x = Polynomial::lambda(field).rem(f);
    let hs = frobenius_powers(f, n / 2);
    for (i, h) in hs.iter().enumerate().skip(1) {
        let g = h.sub(&x).gcd(f);
        match g.degree() {
            Some(0) | None => continue,
            Some(d) if d < n => return Some(g),
            Some(_) => return equal_degree_split(f, i),
        }
    }
    None
}

/// Cantor–Zassenhaus split of a squarefree product of degree-`i` irreducibles.
fn equal_degree_split(f: &Polynomial, i: usize) -> Option<Polynomial> {
    let n = f.degree()?;
    let field = f.field();
    let q = modulus_of(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (n as u64) ^ (q << 8));
    for _ in 0..10_000 {
        let coeffs: Vec<Scalar> = (0..n)
            .map(|_| Scalar::from_int(field, rng.gen_range(0..q) as i64))
            .collect();
        let a = Polynomial::trimmed(field, coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        if (1..n).contains(&g.degree().unwrap_or(0)) {
            return Some(g);
        }
        let b = if q == 2 {
            // Trace map GF(2^i) → GF(2).
            let mut acc = a.rem(f);
            let mut power = acc.clone();
            for _ in 1..i {
                power = power.mul(&power).rem(f);
                acc = acc.add(&power);
            }
            acc
        } else {
            let e = (big_pow(q, i) - BigUint::one()) / BigUint::from(2u32);
            a.pow_mod(&e, f).sub(&Polynomial::one(field))
        };
        let g = b.gcd(f);
        if (1..n).contains(&g.degree().unwrap_or(0)) {
            return Some(g);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Characteristic zero

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Lattice {
    Integers,
    GaussianIntegers,
}

impl Lattice {
    fn field(self) -> FieldDescriptor {
        match self {
            Lattice::Integers => FieldDescriptor::Rationals,
            Lattice::GaussianIntegers => FieldDescriptor::GaussianRationals,
        }
    }
}

/// Gaussian integer with small components.
type GaussInt = (i128, i128);

fn g_mul(a: GaussInt, b: GaussInt) -> GaussInt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn g_norm(a: GaussInt) -> i128 {
    a.0 * a.0 + a.1 * a.1
}

fn g_div_exact(a: GaussInt, b: GaussInt) -> Option<GaussInt> {
    let n = g_norm(b);
    let num = g_mul(a, (b.0, -b.1));
    (num.0 % n == 0 && num.1 % n == 0).then(|| (num.0 / n, num.1 / n))
}

/// Components above this are refused so that products of two norms fit in `i128`.
const GAUSS_LIMIT: i128 = 1 << 40;

/// Integral components of an element of ℤ or ℤ[i], if small enough.
fn to_gauss(s: &Scalar) -> Option<GaussInt> {
    let (re, im) = s.rational_parts()?;
    if !re.is_integer() || !im.is_integer() {
        return None;
    }
    let g = (re.to_integer().to_i128()?, im.to_integer().to_i128()?);
    (g.0.abs() <= GAUSS_LIMIT && g.1.abs() <= GAUSS_LIMIT).then_some(g)
}

fn from_gauss(field: FieldDescriptor, g: GaussInt) -> Scalar {
    match field {
        FieldDescriptor::GaussianRationals => Scalar::gaussian(
            BigRational::from_integer(BigInt::from(g.0)),
            BigRational::from_integer(BigInt::from(g.1)),
        ),
        _ => Scalar::from_bigint(field, &BigInt::from(g.0)),
    }
}

fn factor_integer(n: u128) -> Option<Vec<(u128, u32)>> {
    if n > MAX_TRIAL_DIVISION {
        return None;
    }
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Some(out)
}

fn isqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Gaussian primes dividing `z`, with multiplicity.
fn gaussian_prime_factors(z: GaussInt) -> Option<Vec<(GaussInt, u32)>> {
    let norm = u128::try_from(g_norm(z)).ok()?;
    let mut rest = z;
    let mut out = Vec::new();
    for (p, _) in factor_integer(norm)? {
        let candidates: Vec<GaussInt> = if p == 2 {
            vec![(1, 1)]
        } else if p % 4 == 3 {
            vec![(p as i128, 0)]
        } else {
            let u = (1..=isqrt(p)).find(|&u| {
                let r = p - u * u;
                isqrt(r) * isqrt(r) == r
            })?;
            let v = isqrt(p - u * u);
            vec![(u as i128, v as i128), (u as i128, -(v as i128))]
        };
        for pi in candidates {
            let mut e = 0;
            while let Some(next) = g_div_exact(rest, pi) {
                rest = next;
                e += 1;
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    Some(out)
}

/// Divisors of a nonzero element of ℤ or ℤ[i]; one associate each unless `all_units`.
fn divisors(lattice: Lattice, z: GaussInt, all_units: bool) -> Option<Vec<GaussInt>> {
    let (primes, units): (Vec<(GaussInt, u32)>, Vec<GaussInt>) = match lattice {
        Lattice::Integers => {
            let f = factor_integer(z.0.unsigned_abs())?;
            let primes = f.into_iter().map(|(p, e)| ((p as i128, 0), e)).collect();
            let units = if all_units { vec![(1, 0), (-1, 0)] } else { vec![(1, 0)] };
            (primes, units)
        }
        Lattice::GaussianIntegers => {
            let units = if all_units {
                vec![(1, 0), (0, 1), (-1, 0), (0, -1)]
            } else {
                vec![(1, 0)]
            };
            (gaussian_prime_factors(z)?, units)
        }
    };
    let mut out = vec![(1i128, 0i128)];
    for (pi, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut acc = *d;
            next.push(acc);
            for _ in 0..e {
                acc = g_mul(acc, pi);
                next.push(acc);
            }
        }
        out = next;
    }
    Some(out.into_iter().flat_map(|d| units.iter().map(move |&u| g_mul(d, u))).collect())
}

/// Scales to integral coefficients and removes the rational-integer content.
fn primitive_integral(p: &Polynomial) -> Polynomial {
    let mut lcm = BigInt::one();
    for c in p.coefficients() {
        let (re, im) = c.rational_parts().expect("characteristic zero");
        lcm = lcm.lcm(re.denom()).lcm(im.denom());
    }
    let field = p.field();
    let scaled = p.scale(&Scalar::from_bigint(field, &lcm));
    let mut content = BigInt::zero();
    for c in scaled.coefficients() {
        let (re, im) = c.rational_parts().unwrap();
        content = content.gcd(&re.to_integer()).gcd(&im.to_integer());
    }
    if content.is_zero() {
        return scaled;
    }
    let inv = BigRational::new(BigInt::one(), content);
    scaled.scale(&Scalar::from_rational(field, &inv).unwrap())
}

fn is_integral(s: &Scalar) -> bool {
    s.rational_parts().is_some_and(|(re, im)| re.is_integer() && im.is_integer())
}

fn abs_sq(s: &Scalar) -> BigRational {
    let (re, im) = s.rational_parts().unwrap();
    &re * &re + &im * &im
}

fn linear_factor(field: FieldDescriptor, root: &Scalar) -> Polynomial {
    Polynomial::trimmed(field, vec![-root, Scalar::one(field)])
}

enum RootSearch {
    Root(Scalar),
    NoRoot,
    TooLarge,
}

fn root_search(f: &Polynomial, lattice: Lattice) -> RootSearch {
    let field = f.field();
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return RootSearch::Root(Scalar::zero(field));
    }
    let (Some(a0), Some(an)) = (to_gauss(&a0), f.leading().and_then(to_gauss)) else {
        return RootSearch::TooLarge;
    };
    let (Some(numers), Some(denoms)) = (divisors(lattice, a0, true), divisors(lattice, an, false)) else {
        return RootSearch::TooLarge;
    };
    for s in &denoms {
        let s = from_gauss(field, *s);
        let s_inv = s.inv().expect("divisor of a nonzero value");
        for r in &numers {
            let candidate = &from_gauss(field, *r) * &s_inv;
            if f.eval(&candidate).is_zero() {
                return RootSearch::Root(candidate);
            }
        }
    }
    RootSearch::NoRoot
}

/// First admissible primes with the reduction map sending `a + bi` to `a + b·s`.
fn certificate_primes(lattice: Lattice, lc: GaussInt) -> Vec<(u64, i128)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while out.len() < CERTIFICATE_PRIMES {
        q += 1;
        if !is_prime(q) {
            continue;
        }
        let qi = q as i128;
        match lattice {
            Lattice::Integers => {
                if lc.0 % qi != 0 {
                    out.push((q, 0));
                }
            }
            Lattice::GaussianIntegers => {
                if q % 4 != 1 || g_norm(lc) % qi == 0 {
                    continue;
                }
                let s = (2..qi).find(|s| (s * s + 1) % qi == 0).expect("q ≡ 1 mod 4");
                out.push((q, s));
            }
        }
    }
    out
}

fn reduce_mod(f: &Polynomial, q: u64, s: i128) -> Option<Polynomial> {
    let field = FieldDescriptor::prime_field(q).ok()?;
    let qi = q as i128;
    let mut coeffs = Vec::new();
    for c in f.coefficients() {
        let (re, im) = c.rational_parts()?;
        let re = (re.to_integer() % BigInt::from(qi)).to_i128()?;
        let im = (im.to_integer() % BigInt::from(qi)).to_i128()?;
        coeffs.push(Scalar::from_int(field, ((re + im * s) % qi) as i64));
    }
    Some(Polynomial::trimmed(field, coeffs))
}

enum Search {
    Factor(Polynomial),
    NoFactor,
    GaveUp(String),
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Newton interpolation through `(xs[j], ys[j])`.
fn interpolate(field: FieldDescriptor, xs: &[Scalar], ys: &[Scalar]) -> Polynomial {
    let n = xs.len();
    let mut dd: Vec<Scalar> = ys.to_vec();
    for level in 1..n {
        for j in (level..n).rev() {
            let num = &dd[j] - &dd[j - 1];
            let den = &xs[j] - &xs[j - level];
            dd[j] = num.checked_div(&den).expect("distinct nodes");
        }
    }
    let mut poly = Polynomial::constant(dd[n - 1].clone());
    for j in (0..n - 1).rev() {
        let shift = Polynomial::trimmed(field, vec![-&xs[j], Scalar::one(field)]);
        poly = poly.mul(&shift).add(&Polynomial::constant(dd[j].clone()));
    }
    poly
}

/// Kronecker's method: every factor `g` of degree `d` satisfies `g(t) | f(t)`.
fn interpolation_search(f: &Polynomial, lattice: Lattice) -> Search {
    let field = f.field();
    let n = f.degree().unwrap();
    let norm_sq: BigRational = f.coefficients().iter().map(abs_sq).fold(BigRational::zero(), |a, b| a + b);
    let mut nodes: Vec<(Scalar, GaussInt)> = Vec::new();
    let mut t = 0i64;
    while nodes.len() < n / 2 + 1 {
        let x = Scalar::from_int(field, t);
        let y = f.eval(&x);
        if y.is_zero() {
            return Search::Factor(linear_factor(field, &x));
        }
        match to_gauss(&y) {
            Some(g) => nodes.push((x, g)),
            None => return Search::GaveUp("value too large for divisor enumeration".into()),
        }
        t = if t > 0 { -t } else { -t + 1 };
    }
    let mut gave_up = None;
    for d in 1..=n / 2 {
        let pts = &nodes[..=d];
        let mut lists = Vec::with_capacity(d + 1);
        for (j, (_, y)) in pts.iter().enumerate() {
            match divisors(lattice, *y, j > 0) {
                Some(ds) => lists.push(ds),
                None => return Search::GaveUp("value too large to factor".into()),
            }
        }
        let total: u128 = lists.iter().map(|l| l.len() as u128).product();
        if total > MAX_CANDIDATES {
            gave_up = Some(format!("{total} interpolation candidates for degree {d}"));
            continue;
        }
        let xs: Vec<Scalar> = pts.iter().map(|(x, _)| x.clone()).collect();
        let mut idx = vec![0usize; d + 1];
        'combos: loop {
            let ys: Vec<Scalar> = idx.iter().zip(&lists).map(|(&i, l)| from_gauss(field, l[i])).collect();
            let g = interpolate(field, &xs, &ys);
            if g.degree() == Some(d)
                && g.coefficients().iter().all(is_integral)
                && g.coefficients().iter().enumerate().all(|(j, c)| {
                    let b = BigRational::from_integer(binomial(d, j));
                    abs_sq(c) <= &b * &b * &norm_sq
                })
                && f.exact_div(&g).is_some()
            {
                return Search::Factor(g.monic());
            }
            for pos in 0..=d {
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    continue 'combos;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    match gave_up {
        Some(reason) => Search::GaveUp(reason),
        None => Search::NoFactor,
    }
}

fn characteristic_zero(p: &Polynomial, lattice: Lattice) -> Irreducibility {
    debug_assert_eq!(p.field(), lattice.field());
    let f = primitive_integral(p);
    let n = f.degree().unwrap();
    if n <= 3 {
        return match root_search(&f, lattice) {
            RootSearch::Root(r) => Irreducibility::Reducible {
                factor: linear_factor(f.field(), &r),
            },
            RootSearch::NoRoot => Irreducibility::Irreducible,
            RootSearch::TooLarge => Irreducibility::Inconclusive {
                reason: "end coefficients too large for the root search".into(),
            },
        };
    }
    if f.coeff(0).is_zero() {
        return Irreducibility::Reducible {
            factor: Polynomial::lambda(f.field()),
        };
    }
    if let Some(lc) = f.leading().and_then(to_gauss) {
        for (q, s) in certificate_primes(lattice, lc) {
            if let Some(fq) = reduce_mod(&f, q, s) {
                if fq.degree() == Some(n) && gf_is_irreducible(&fq.monic()) {
                    return Irreducibility::Irreducible;
                }
            }
        }
    }
    if n > MAX_SEARCH_DEGREE {
        return Irreducibility::Inconclusive {
            reason: format!("degree {n} exceeds the factor-search limit {MAX_SEARCH_DEGREE}"),
        };
    }
    match interpolation_search(&f, lattice) {
        Search::Factor(g) => Irreducibility::Reducible { factor: g },
        Search::NoFactor => Irreducibility::Irreducible,
        Search::GaveUp(reason) => Irreducibility::Inconclusive { reason },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;
    const QI: FieldDescriptor = FieldDescriptor::GaussianRationals;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime_field(p).unwrap()
    }

    #[test]
    fn linear_is_irreducible() {
        let p = Polynomial::from_i64(Q, &[-1, 1]);
        assert_eq!(poly_irreducible(&p).unwrap(), Irreducibility::Irreducible);
    }

    #[test]
    fn lambda_squared_minus_two_mod_three() {
        // No square equals 2 mod 3.
        assert!((0..3).all(|x| (x * x) % 3 != 2));
        let p = Polynomial::from_i64(gf(3), &[-2, 0, 1]);
        assert!(poly_irreducible(&p).unwrap().is_irreducible());
    }

    #[test]
    fn lambda_squared_minus_one_over_q() {
        let p = Polynomial::from_i64(Q, &[-1, 0, 1]);
        match poly_irreducible(&p).unwrap() {
            Irreducibility::Reducible { factor } => {
                assert_eq!(factor.degree(), Some(1));
                assert!(p.exact_div(&factor).is_some());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lambda_squared_minus_two_mod_seven_splits() {
        let p = Polynomial::from_i64(gf(7), &[-2, 0, 1]);
        let out = poly_irreducible(&p).unwrap();
        assert!(out.is_reducible());
    }

    #[test]
    fn constants_are_rejected() {
        assert!(poly_irreducible(&Polynomial::from_i64(Q, &[3])).is_err());
        assert!(poly_irreducible(&Polynomial::zero(Q)).is_err());
    }

    #[test]
    fn gf_witness_for_frobenius_pth_power() {
        // λ³ + 1 = (λ + 1)³ over GF(3): derivative vanishes.
        let p = Polynomial::from_i64(gf(3), &[1, 0, 0, 1]);
        let Irreducibility::Reducible { factor } = poly_irreducible(&p).unwrap() else {
            panic!()
        };
        assert_eq!(factor, Polynomial::from_i64(gf(3), &[1, 1]));
    }

    #[test]
    fn gf_equal_degree_products() {
        // (λ²+1)(λ²+λ+2) over GF(3): both irreducible quadratics.
        for field in [gf(3), gf(2)] {
            let a = if field == gf(3) {
                Polynomial::from_i64(field, &[1, 0, 1])
            } else {
                Polynomial::from_i64(field, &[1, 1, 1])
            };
            let b = if field == gf(3) {
                Polynomial::from_i64(field, &[2, 1, 1])
            } else {
                Polynomial::from_i64(field, &[1, 1, 0, 1]).mul(&Polynomial::from_i64(field, &[1, 0, 1, 1]))
            };
            let p = a.mul(&b);
            let out = poly_irreducible(&p).unwrap();
            assert!(out.is_reducible(), "{field}: {out:?}");
        }
    }

    #[test]
    fn rational_quartics() {
        // λ⁴ + 1 is reducible modulo every prime but irreducible over ℚ.
        let x4 = Polynomial::from_i64(Q, &[1, 0, 0, 0, 1]);
        assert!(poly_irreducible(&x4).unwrap().is_irreducible());
        // (λ² − 2)(λ² − 3) has no rational root.
        let p = Polynomial::from_i64(Q, &[-2, 0, 1]).mul(&Polynomial::from_i64(Q, &[-3, 0, 1]));
        assert!(poly_irreducible(&p).unwrap().is_reducible());
        // Rational coefficients are scaled first.
        let half = Polynomial::parse(Q, "1/2,0,0,0,1/2").unwrap();
        assert!(poly_irreducible(&half).unwrap().is_irreducible());
    }

    #[test]
    fn gaussian_roots() {
        // λ² − 2iλ − 1 = (λ − i)²
        let p = Polynomial::parse(QI, "-1,-2i,1").unwrap();
        let Irreducibility::Reducible { factor } = poly_irreducible(&p).unwrap() else {
            panic!()
        };
        assert_eq!(factor, Polynomial::parse(QI, "-i,1").unwrap());
        // λ² + 1 splits over ℚ(i) but not over ℚ.
        assert!(poly_irreducible(&Polynomial::parse(QI, "1,0,1").unwrap()).unwrap().is_reducible());
        assert!(poly_irreducible(&Polynomial::parse(Q, "1,0,1").unwrap()).unwrap().is_irreducible());
        // λ² − i has no root in ℚ(i).
        assert!(poly_irreducible(&Polynomial::parse(QI, "-i,0,1").unwrap()).unwrap().is_irreducible());
    }

    #[test]
    fn gaussian_quartics() {
        // λ⁴ + 1 = (λ² − i)(λ² + i) over ℚ(i).
        let p = Polynomial::parse(QI, "1,0,0,0,1").unwrap();
        assert!(poly_irreducible(&p).unwrap().is_reducible());
        // λ⁴ − 2 stays irreducible over ℚ(i).
        let p = Polynomial::parse(QI, "-2,0,0,0,1").unwrap();
        assert!(poly_irreducible(&p).unwrap().is_irreducible());
    }

    #[test]
    fn gaussian_factorisation_of_small_values() {
        let ds = divisors(Lattice::GaussianIntegers, (5, 0), false).unwrap();
        // 5 = (2+i)(2−i): 1, 2+i, 2−i, 5 up to units.
        assert_eq!(ds.len(), 4);
        let all = divisors(Lattice::GaussianIntegers, (2, 0), true).unwrap();
        assert_eq!(all.len(), 12);
        assert_eq!(divisors(Lattice::Integers, (-12, 0), true).unwrap().len(), 12);
    }

    #[test]
    fn huge_coefficients_do_not_overflow() {
        for field in [Q, QI] {
            let p = Polynomial::parse(field, "3,0,88888888888888888888888").unwrap();
            let out = poly_irreducible(&p).unwrap();
            assert!(!out.is_reducible(), "{out:?}");
            let p = Polynomial::parse(field, "-99999999999999999999999999,0,0,1").unwrap();
            if let Irreducibility::Reducible { factor } = poly_irreducible(&p).unwrap() {
                assert!(p.rem(&factor).is_zero());
            }
        }
    }
}
