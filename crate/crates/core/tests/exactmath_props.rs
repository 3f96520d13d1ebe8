mod common;

use common::{gf, laplace_det, Q};
use leibniz_core::exactmath::{
    char_poly, companion_basis, fitting_split, gaussian_binomial, is_nilpotent_operator, poly_irreducible, FieldDescriptor,
    Irreducibility, Matrix, Polynomial, Scalar, Subspace, SubspaceEnumerator, Vector,
};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![Just(Q), Just(gf(2)), Just(gf(3)), Just(gf(5)), Just(gf(7))]
}

fn rows_strategy(max_rows: usize, n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_rows)
}

fn to_rows(field: FieldDescriptor, rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter().map(|r| common::s(field, r)).collect()
}

fn square(field: FieldDescriptor, rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_rows(field, rows.len(), &to_rows(field, rows)).unwrap()
}

fn square_strategy() -> impl Strategy<Value = (FieldDescriptor, Vec<Vec<i64>>)> {
    (field_strategy(), 1usize..=5).prop_flat_map(|(f, n)| (Just(f), prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_ignores_row_order_and_duplicates(field in field_strategy(), rows in rows_strategy(5, 4)) {
        let rows = to_rows(field, &rows);
        let a = Subspace::span(field, 4, &rows).unwrap();
        let mut shuffled = rows.clone();
        shuffled.reverse();
        shuffled.extend(rows.iter().cloned());
        prop_assert_eq!(&a, &Subspace::span(field, 4, &shuffled).unwrap());
        for r in &rows {
            prop_assert!(a.contains(r));
        }
    }

    #[test]
    fn dimension_formula(field in field_strategy(), u in rows_strategy(4, 4), v in rows_strategy(4, 4)) {
        let u = Subspace::span(field, 4, &to_rows(field, &u)).unwrap();
        let v = Subspace::span(field, 4, &to_rows(field, &v)).unwrap();
        let sum = u.sum(&v).unwrap();
        let meet = u.intersection(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
    }

    #[test]
    fn coordinates_round_trip(field in field_strategy(), rows in rows_strategy(4, 4), coords in prop::collection::vec(-3i64..=3, 4)) {
        let s = Subspace::span(field, 4, &to_rows(field, &rows)).unwrap();
        let c = common::s(field, &coords[..s.dim()]);
        let v = s.combine(&c);
        prop_assert_eq!(s.coordinates(&v), Some(c));
    }

    #[test]
    fn cayley_hamilton_and_laplace((field, rows) in square_strategy()) {
        let t = square(field, &rows);
        let p = char_poly(&t).unwrap();
        prop_assert_eq!(p.degree(), Some(t.rows()));
        prop_assert!(p.eval_matrix(&t).unwrap().is_zero());
        for at in -2i64..=2 {
            let x = Scalar::from_int(field, at);
            prop_assert_eq!(p.eval(&x), common::char_value(&t, &x));
        }
        let det = laplace_det(&t.row_vectors(), field);
        prop_assert_eq!(t.determinant().unwrap(), det);
    }

    #[test]
    fn fitting_invariants((field, rows) in square_strategy()) {
        let t = square(field, &rows);
        let (null, one) = fitting_split(&t).unwrap();
        prop_assert_eq!(null.dim() + one.dim(), t.rows());
        prop_assert!(null.sum(&one).unwrap().is_full());
        prop_assert!(null.is_invariant(&t) && one.is_invariant(&t));
        prop_assert!(is_nilpotent_operator(&null.restrict_operator(&t).unwrap()).unwrap());
        if !one.is_zero() {
            prop_assert!(!one.restrict_operator(&t).unwrap().determinant().unwrap().is_zero());
        }
    }

    #[test]
    fn krylov_recurrence_annihilates_seed((field, rows) in square_strategy(), seed in prop::collection::vec(-2i64..=2, 5)) {
        let t = square(field, &rows);
        let seed = common::s(field, &seed[..t.rows()]);
        prop_assume!(seed.iter().any(|c| !c.is_zero()));
        let k = companion_basis(&t, &seed).unwrap();
        let q = k.recurrence_polynomial();
        let image = q.eval_matrix(&t).unwrap().apply(&seed);
        prop_assert!(image.iter().all(Scalar::is_zero));
        prop_assert!(char_poly(&t).unwrap().rem(&q).is_zero());
    }

    #[test]
    fn irreducibility_is_deterministic_and_witnessed(field in prop_oneof![Just(Q), Just(gf(2)), Just(gf(3)), Just(gf(5))],
                                                    coeffs in prop::collection::vec(-4i64..=4, 2..=6)) {
        let p = Polynomial::from_i64(field, &coeffs);
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let first = poly_irreducible(&p).unwrap();
        prop_assert_eq!(&first, &poly_irreducible(&p).unwrap());
        match first {
            Irreducibility::Reducible { factor } => {
                let d = factor.degree().unwrap();
                prop_assert!(d >= 1 && d < p.degree().unwrap());
                prop_assert!(p.rem(&factor).is_zero());
            }
            Irreducibility::Irreducible if field.is_finite() => {
                // No factor of degree ≤ deg/2 among all monic polynomials.
                let q = field.characteristic();
                let n = p.degree().unwrap();
                for d in 1..=n / 2 {
                    for code in 0..q.pow(d as u32) {
                        let mut c: Vec<i64> = (0..d).map(|i| ((code / q.pow(i as u32)) % q) as i64).collect();
                        c.push(1);
                        prop_assert!(!p.rem(&Polynomial::from_i64(field, &c)).is_zero());
                    }
                }
            }
            _ => {}
        }
    }
}

#[test]
fn enumeration_matches_gaussian_binomials_over_gf2() {
    for n in 0..=4 {
        let subspaces: Vec<Subspace> = SubspaceEnumerator::new(gf(2), n).unwrap().collect();
        let expected: u128 = (0..=n).map(|d| gaussian_binomial(n, d, 2)).sum();
        assert_eq!(subspaces.len() as u128, expected);
        let mut sorted = subspaces.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), subspaces.len());
        for d in 0..=n {
            let count = subspaces.iter().filter(|s| s.dim() == d).count() as u128;
            assert_eq!(count, gaussian_binomial(n, d, 2));
        }
    }
}

#[test]
fn enumeration_counts_are_exhaustive_for_small_spaces() {
    // Brute force: distinct spans of every list of n vectors over GF(q).
    for (q, n) in [(2u64, 3usize), (3, 2), (5, 2)] {
        let field = gf(q);
        let all: Vec<Vector> = (0..q.pow(n as u32))
            .map(|code| (0..n).map(|i| Scalar::from_int(field, ((code / q.pow(i as u32)) % q) as i64)).collect())
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        for a in &all {
            for b in &all {
                for c in &all {
                    let s = Subspace::span(field, n, &[a.clone(), b.clone(), c.clone()]).unwrap();
                    seen.insert(format!("{:?}", s.basis_vectors()));
                }
            }
        }
        let enumerated = SubspaceEnumerator::new(field, n).unwrap().count();
        assert_eq!(enumerated, seen.len(), "q={q} n={n}");
    }
}
