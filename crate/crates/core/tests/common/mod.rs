#![allow(dead_code)]

use std::path::PathBuf;

use leibniz_core::classify::{construct_chain, construct_cyclic, construct_standard};
use leibniz_core::exactmath::{
    poly_irreducible, recurrence_polynomial, subspace_count, FieldDescriptor, Matrix, Scalar, Subspace, Vector,
};
use leibniz_core::format::load_algebra;
use leibniz_core::leibcore::{LeibnizAlgebra, NilpotencyMethod};
use leibniz_core::oracle::{bruteforce_largest_ideal, ideals, subalgebras, EnumerationBudget};
use leibniz_core::structure::core_of;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Q: FieldDescriptor = FieldDescriptor::Rationals;
pub const QI: FieldDescriptor = FieldDescriptor::GaussianRationals;

pub fn gf(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime_field(p).unwrap()
}

pub fn s(field: FieldDescriptor, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(field, x)).collect()
}

pub fn span(field: FieldDescriptor, n: usize, rows: &[&[i64]]) -> Subspace {
    let rows: Vec<Vector> = rows.iter().map(|r| s(field, r)).collect();
    Subspace::span(field, n, &rows).unwrap()
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras").join(name)
}

pub fn load(name: &str) -> LeibnizAlgebra {
    load_algebra(&data(name)).unwrap()
}

pub fn budget() -> EnumerationBudget {
    EnumerationBudget::new(1_000_000)
}

/// Every coefficient vector of length `len` over GF(q), in base-q order.
fn all_vectors(field: FieldDescriptor, len: usize) -> Vec<Vec<Scalar>> {
    let q = field.characteristic();
    (0..q.pow(len as u32))
        .map(|mut code| {
            (0..len)
                .map(|_| {
                    let c = Scalar::from_int(field, (code % q) as i64);
                    code /= q;
                    c
                })
                .collect()
        })
        .collect()
}

pub const MAX_DIM: usize = 5;

/// GF(5)^5 has 42176 subspaces, so only a few members per family get that size.
const GF5_DIM5_PER_FAMILY: usize = 3;

fn capped(q: u64, dim: usize, taken: &mut usize) -> bool {
    if q == 5 && dim == 5 {
        *taken += 1;
        *taken > GF5_DIM5_PER_FAMILY
    } else {
        false
    }
}

/// Constructed finite-field algebras: standard algebras with irreducible `p`,
/// every admissible chain, and cyclic algebras (all top rows when there are
/// at most 27, otherwise a seeded sample of 12), all of dimension at most 5.
pub fn finite_corpus() -> Vec<(String, LeibnizAlgebra)> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for q in [2u64, 3, 5] {
        let field = gf(q);
        let top_dim = MAX_DIM;
        let mut taken = 0;
        for k in 0..=top_dim - 2 {
            for c in all_vectors(field, k + 1) {
                if c[0].is_zero() || !poly_irreducible(&recurrence_polynomial(field, &c)).unwrap().is_irreducible() {
                    continue;
                }
                if capped(q, k + 2, &mut taken) {
                    continue;
                }
                let name = format!("standard GF({q}) {:?}", c.iter().map(Scalar::to_string).collect::<Vec<_>>());
                out.push((name, construct_standard(field, &c).unwrap().algebra));
            }
        }
        let mut taken = 0;
        for j in 1..top_dim {
            for k in 1..=top_dim - j {
                if capped(q, j + k, &mut taken) {
                    continue;
                }
                if let Ok(a) = construct_chain(field, j, k) {
                    out.push((format!("chain GF({q}) j={j} k={k}"), a));
                }
            }
        }
        let mut taken = 0;
        for d in 1..=top_dim {
            let tops = all_vectors(field, d);
            let chosen: Vec<Vec<Scalar>> = if tops.len() <= 27 {
                tops
            } else {
                (0..12).map(|_| tops[rng.gen_range(0..tops.len())].clone()).collect()
            };
            for top in chosen {
                if capped(q, d, &mut taken) {
                    continue;
                }
                if let Ok(a) = construct_cyclic(field, d, &top) {
                    let name = format!("cyclic GF({q}) d={d} {:?}", top.iter().map(Scalar::to_string).collect::<Vec<_>>());
                    out.push((name, a));
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out
}

pub fn enumeration_size(a: &LeibnizAlgebra) -> u128 {
    subspace_count(a.dim(), a.field().characteristic())
}

#[derive(Debug, Default)]
pub struct CrossReport {
    pub algebras: usize,
    pub checks: usize,
    pub disagreements: Vec<String>,
}

impl CrossReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.disagreements.push(what());
        }
    }
}

/// The five agreement checks on one algebra.
pub fn cross_check(name: &str, a: &LeibnizAlgebra, report: &mut CrossReport) {
    report.algebras += 1;
    let b = budget();
    let series = a.is_nilpotent(None, NilpotencyMethod::Series).unwrap();
    let normalizer = a
        .is_nilpotent(None, NilpotencyMethod::Normalizer { budget: b.max_subspaces })
        .unwrap();
    report.check(series == normalizer, || format!("{name}: series says {series}, normalizer says {normalizer}"));

    for m in subalgebras(a, b).unwrap() {
        let fixed = core_of(a, &m).unwrap();
        let brute = bruteforce_largest_ideal(a, &m, b).unwrap();
        report.check(fixed == brute, || format!("{name}: core of {:?} differs", m.basis_vectors()));
    }

    let leib = a.leibniz_kernel();
    for v in leib.basis_vectors() {
        report.check(a.left_mult_matrix(&v).unwrap().is_zero(), || format!("{name}: ℓ_v ≠ 0 for v in Leib"));
    }
    if !leib.is_full() {
        let q = a.quotient(&leib).unwrap();
        report.check(q.algebra.is_lie(), || format!("{name}: L/Leib is not Lie"));
    }

    for i in ideals(a, b).unwrap() {
        if i.is_full() {
            continue;
        }
        let q = a.quotient(&i).unwrap();
        let mut hom = true;
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let lhs = q.projection.apply(&a.basis_product(x, y));
                let px = q.projection.apply(&a.basis_vector(x));
                let py = q.projection.apply(&a.basis_vector(y));
                hom &= lhs == q.algebra.bracket(&px, &py).unwrap();
            }
        }
        report.check(hom, || format!("{name}: projection mod {:?} is not a homomorphism", i.basis_vectors()));
    }
}

/// The corpus closed under one step of taking subalgebras and quotients by ideals.
pub fn expanded_corpus() -> Vec<(String, LeibnizAlgebra)> {
    let b = budget();
    let mut out = Vec::new();
    for (name, a) in finite_corpus() {
        for (n, m) in subalgebras(&a, b).unwrap().into_iter().enumerate() {
            if !m.is_zero() && !m.is_full() {
                out.push((format!("{name} / subalgebra {n}"), a.restrict(&m).unwrap()));
            }
        }
        for (n, i) in ideals(&a, b).unwrap().into_iter().enumerate() {
            if !i.is_zero() && !i.is_full() {
                out.push((format!("{name} / quotient {n}"), a.quotient(&i).unwrap().algebra));
            }
        }
        out.push((name, a));
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Scalar>], field: FieldDescriptor) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one(field);
    }
    let mut total = Scalar::zero(field);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * &laplace_det(&minor, field);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// `det(t·I − T)` by cofactor expansion.
pub fn char_value(t: &Matrix, at: &Scalar) -> Scalar {
    let n = t.rows();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let d = if r == c { at.clone() } else { Scalar::zero(t.field()) };
                    &d - t.get(r, c)
                })
                .collect()
        })
        .collect();
    laplace_det(&rows, t.field())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, field: FieldDescriptor, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data: Vec<Vector> = (0..rows)
        .map(|_| (0..cols).map(|_| Scalar::from_int(field, rng.gen_range(-bound..=bound))).collect())
        .collect();
    Matrix::from_rows(field, cols, &data).unwrap()
}
