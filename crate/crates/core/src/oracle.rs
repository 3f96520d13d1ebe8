//! Exhaustive ground truth over prime fields: every subspace is enumerated
//! and tested directly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{subspace_count, Subspace, SubspaceEnumerator, Vector};
use crate::leibcore::{LeibnizAlgebra, NilpotencyMethod};

pub const DEFAULT_BUDGET: u128 = 10_000_000;
pub const BUDGET_ENV: &str = "LEIBNIZ_LAB_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_subspaces: u128,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_subspaces: DEFAULT_BUDGET,
        }
    }
}

impl EnumerationBudget {
    pub fn new(max_subspaces: u128) -> Self {
        EnumerationBudget { max_subspaces }
    }

    /// The default, overridden by `LEIBNIZ_LAB_BUDGET` when it parses.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(text) => text
                .trim()
                .parse()
                .map(Self::new)
                .map_err(|_| Error::InvalidParameter(format!("{BUDGET_ENV}={text:?} is not a count"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Every subspace of the algebra's coefficient space, in canonical order.
pub fn enumerate_subspaces(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<SubspaceEnumerator> {
    SubspaceEnumerator::with_budget(a.field(), a.dim(), budget.max_subspaces)
}

/// Subspaces of `within`, expressed in the algebra's coordinates.
fn subspaces_of(a: &LeibnizAlgebra, within: &Subspace, budget: EnumerationBudget) -> Result<impl Iterator<Item = Subspace>> {
    let field = a.field();
    let n = a.dim();
    let inner = SubspaceEnumerator::with_budget(field, within.dim(), budget.max_subspaces)?;
    let within = within.clone();
    Ok(inner.map(move |k| {
        let rows: Vec<Vector> = k.basis_vectors().iter().map(|c| within.combine(c)).collect();
        Subspace::span(field, n, &rows).expect("rows of the right shape")
    }))
}

pub fn subalgebras(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in enumerate_subspaces(a, budget)? {
        if a.is_subalgebra(&s)? {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn ideals(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in enumerate_subspaces(a, budget)? {
        if a.is_ideal(&s)? {
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub subspaces: u128,
    pub subalgebras: usize,
    pub proper_subalgebras: usize,
    pub nilpotent_proper_subalgebras: usize,
    /// Proper subalgebra counts by dimension.
    pub by_dimension: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityOutcome {
    Pass { census: Census },
    /// First nonnilpotent proper subalgebra in enumeration order.
    Fail { witness: Subspace, census: Census },
    HypothesisFail { reason: String },
}

/// Decides whether every proper subalgebra is nilpotent.
pub fn minimality_check(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<MinimalityOutcome> {
    if !a.field().is_finite() {
        return Err(Error::InfiniteField(a.field()));
    }
    if let Err(w) = a.validate_leibniz() {
        return Ok(MinimalityOutcome::HypothesisFail {
            reason: format!("Leibniz identity fails on basis triple ({}, {}, {})", w.i, w.j, w.k),
        });
    }
    if a.is_nilpotent(None, NilpotencyMethod::Series)? {
        return Ok(MinimalityOutcome::HypothesisFail {
            reason: "algebra is nilpotent".into(),
        });
    }
    if !a.is_solvable(None)? {
        return Ok(MinimalityOutcome::HypothesisFail {
            reason: "algebra is not solvable".into(),
        });
    }
    let mut census = Census {
        subspaces: subspace_count(a.dim(), a.field().characteristic()),
        by_dimension: vec![0; a.dim()],
        ..Census::default()
    };
    let mut witness = None;
    for s in enumerate_subspaces(a, budget)? {
        if !a.is_subalgebra(&s)? {
            continue;
        }
        census.subalgebras += 1;
        if s.is_full() {
            continue;
        }
        census.proper_subalgebras += 1;
        census.by_dimension[s.dim()] += 1;
        if a.is_nilpotent(Some(&s), NilpotencyMethod::Series)? {
            census.nilpotent_proper_subalgebras += 1;
        } else if witness.is_none() {
            witness = Some(s);
        }
    }
    Ok(match witness {
        None => MinimalityOutcome::Pass { census },
        Some(witness) => MinimalityOutcome::Fail { witness, census },
    })
}

/// Largest ideal inside the subalgebra `m`, by enumerating subspaces of `m`.
pub fn bruteforce_largest_ideal(a: &LeibnizAlgebra, m: &Subspace, budget: EnumerationBudget) -> Result<Subspace> {
    if !a.field().is_finite() {
        return Err(Error::InfiniteField(a.field()));
    }
    if !a.is_subalgebra(m)? {
        return Err(Error::NotSubalgebra);
    }
    let mut found: Vec<Subspace> = Vec::new();
    for s in subspaces_of(a, m, budget)? {
        if a.is_ideal(&s)? {
            found.push(s);
        }
    }
    let best = found.iter().max_by_key(|s| s.dim()).cloned().expect("the zero ideal");
    if let Some(stray) = found.iter().find(|s| !s.is_subspace_of(&best)) {
        return Err(Error::Consistency(format!("ideal {stray:?} is not inside the largest ideal {best:?}")));
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrattiniReport {
    pub maximal_subalgebras: Vec<Subspace>,
    /// Intersection of all maximal subalgebras.
    pub frattini_subalgebra: Subspace,
    /// Largest ideal inside the Frattini subalgebra.
    pub frattini_ideal: Subspace,
}

pub fn frattini(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<FrattiniReport> {
    let proper: Vec<Subspace> = subalgebras(a, budget)?.into_iter().filter(|s| !s.is_full()).collect();
    let maximal: Vec<Subspace> = proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && s.is_subspace_of(t)))
        .cloned()
        .collect();
    let mut phi = a.whole();
    for m in &maximal {
        phi = phi.intersection(m)?;
    }
    let frattini_ideal = bruteforce_largest_ideal(a, &phi, budget)?;
    Ok(FrattiniReport {
        maximal_subalgebras: maximal,
        frattini_subalgebra: phi,
        frattini_ideal,
    })
}

pub fn frattini_ideal(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<Subspace> {
    Ok(frattini(a, budget)?.frattini_ideal)
}

/// Nonzero ideals containing no smaller nonzero ideal.
pub fn minimal_ideals(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<Vec<Subspace>> {
    let nonzero: Vec<Subspace> = ideals(a, budget)?.into_iter().filter(|s| !s.is_zero()).collect();
    Ok(nonzero
        .iter()
        .filter(|s| !nonzero.iter().any(|t| t.dim() < s.dim() && t.is_subspace_of(s)))
        .cloned()
        .collect())
}

/// Sum of all nilpotent ideals, checked to be nilpotent itself.
pub fn bruteforce_nilradical(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<Subspace> {
    let mut sum = a.zero_subspace();
    for i in ideals(a, budget)? {
        if a.is_nilpotent(Some(&i), NilpotencyMethod::Series)? {
            sum = sum.sum(&i)?;
        }
    }
    if !a.is_nilpotent(Some(&sum), NilpotencyMethod::Series)? {
        return Err(Error::Consistency(format!("sum of nilpotent ideals {sum:?} is not nilpotent")));
    }
    Ok(sum)
}

/// `L/N` is the semidirect sum of the ideal `part1` and the subalgebra `part2`
/// (both in quotient coordinates).
pub fn semidirect_check(a: &LeibnizAlgebra, n: &Subspace, part1: &Subspace, part2: &Subspace) -> Result<bool> {
    let q = a.quotient(n)?.algebra;
    for part in [part1, part2] {
        if part.ambient_dim() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: q.dim(),
                found: part.ambient_dim(),
            });
        }
    }
    Ok(q.is_ideal(part1)?
        && q.is_subalgebra(part2)?
        && part1.intersection(part2)?.is_zero()
        && part1.sum(part2)?.is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{FieldDescriptor, Scalar};

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime_field(p).unwrap()
    }

    fn v(field: FieldDescriptor, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(field, x)).collect()
    }

    fn span(field: FieldDescriptor, n: usize, rows: &[&[i64]]) -> Subspace {
        let rows: Vec<Vector> = rows.iter().map(|r| v(field, r)).collect();
        Subspace::span(field, n, &rows).unwrap()
    }

    fn example1(field: FieldDescriptor) -> LeibnizAlgebra {
        LeibnizAlgebra::validated(field, 2, None, [((0, 0), v(field, &[0, 1])), ((0, 1), v(field, &[0, 1]))]).unwrap()
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn enumeration_counts() {
        let zero2 = LeibnizAlgebra::new(gf(2), 2, None, []).unwrap();
        assert_eq!(enumerate_subspaces(&zero2, budget()).unwrap().count(), 5);
        let zero10 = LeibnizAlgebra::new(gf(5), 10, None, []).unwrap();
        assert!(matches!(enumerate_subspaces(&zero10, budget()), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn example1_minimality() {
        let a = example1(gf(5));
        let MinimalityOutcome::Pass { census } = minimality_check(&a, budget()).unwrap() else {
            panic!()
        };
        assert_eq!(census.subspaces, 8);
        assert_eq!(census.proper_subalgebras, census.nilpotent_proper_subalgebras);
        assert!(matches!(
            minimality_check(&example1(FieldDescriptor::Rationals), budget()),
            Err(Error::InfiniteField(_))
        ));
    }

    #[test]
    fn example1_ideals() {
        let a = example1(gf(5));
        assert!(bruteforce_largest_ideal(&a, &span(gf(5), 2, &[&[1, -1]]), budget()).unwrap().is_zero());
        assert!(bruteforce_largest_ideal(&a, &a.whole(), budget()).unwrap().is_full());
        assert_eq!(bruteforce_nilradical(&a, budget()).unwrap(), span(gf(5), 2, &[&[0, 1]]));
        assert!(frattini_ideal(&a, budget()).unwrap().is_zero());
        let zero1 = LeibnizAlgebra::new(gf(3), 1, None, []).unwrap();
        assert!(frattini_ideal(&zero1, budget()).unwrap().is_zero());
        assert_eq!(minimal_ideals(&zero1, budget()).unwrap(), vec![zero1.whole()]);
    }

    #[test]
    fn minimal_ideals_of_abelian_plane() {
        let a = LeibnizAlgebra::new(gf(2), 2, None, []).unwrap();
        assert_eq!(minimal_ideals(&a, budget()).unwrap().len(), 3);
        assert!(bruteforce_nilradical(&a, budget()).unwrap().is_full());
    }

    #[test]
    fn semidirect_examples() {
        let a = example1(gf(5));
        let n = a.zero_subspace();
        let ideal = span(gf(5), 2, &[&[0, 1]]);
        let sub = span(gf(5), 2, &[&[1, -1]]);
        assert!(semidirect_check(&a, &n, &ideal, &sub).unwrap());
        assert!(!semidirect_check(&a, &n, &sub, &ideal).unwrap());
        let abelian = LeibnizAlgebra::new(gf(3), 2, None, []).unwrap();
        assert!(semidirect_check(&abelian, &abelian.zero_subspace(), &span(gf(3), 2, &[&[1, 0]]), &span(gf(3), 2, &[&[0, 1]])).unwrap());
    }
}
