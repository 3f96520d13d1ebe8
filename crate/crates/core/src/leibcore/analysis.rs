use serde::{Deserialize, Serialize};

use super::algebra::{Element, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::matrix::add_vectors;
use crate::exactmath::{Matrix, Subspace, SubspaceEnumerator, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Strictly decreasing terms, ending at the first repeat or at zero.
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
    pub terminates_at_zero: bool,
}

impl SeriesReport {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has a first term")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotencyMethod {
    Series,
    /// Every proper subalgebra is properly contained in its normalizer.
    /// Enumerates subspaces, so finite fields only.
    Normalizer { budget: u128 },
}

impl LeibnizAlgebra {
    /// Span of `[u, v]` over basis vectors `u` of `a`, `v` of `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let bv = b.basis_vectors();
        let products: Vec<Vector> = a
            .basis_vectors()
            .iter()
            .flat_map(|u| bv.iter().map(move |v| (u, v)))
            .map(|(u, v)| self.mul(u, v))
            .collect();
        Subspace::span(self.field(), self.dim(), &products)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(self.product_space(s, s)?.is_subspace_of(s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let whole = self.whole();
        Ok(self.product_space(&whole, s)?.is_subspace_of(s) && self.product_space(s, &whole)?.is_subspace_of(s))
    }

    /// Smallest subalgebra containing `elements`.
    pub fn subalgebra_closure(&self, elements: &[Element]) -> Result<Subspace> {
        let mut c = Subspace::span(self.field(), self.dim(), elements)?;
        loop {
            let next = c.sum(&self.product_space(&c, &c)?)?;
            if next == c {
                return Ok(c);
            }
            c = next;
        }
    }

    /// Smallest two-sided ideal containing `elements`.
    pub fn ideal_closure(&self, elements: &[Element]) -> Result<Subspace> {
        let whole = self.whole();
        let mut c = Subspace::span(self.field(), self.dim(), elements)?;
        loop {
            let next = c
                .sum(&self.product_space(&whole, &c)?)?
                .sum(&self.product_space(&c, &whole)?)?;
            if next == c {
                return Ok(c);
            }
            c = next;
        }
    }

    fn require_subalgebra(&self, within: Option<&Subspace>) -> Result<Subspace> {
        match within {
            None => Ok(self.whole()),
            Some(s) => {
                if !self.is_subalgebra(s)? {
                    return Err(Error::NotSubalgebra);
                }
                Ok(s.clone())
            }
        }
    }

    /// Lower central (`S^{k+1} = [S, S^k]`) or derived series of `within` (default L).
    pub fn series(&self, kind: SeriesKind, within: Option<&Subspace>) -> Result<SeriesReport> {
        let s = self.require_subalgebra(within)?;
        let mut terms = vec![s.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::LowerCentral => self.product_space(&s, last)?,
                SeriesKind::Derived => self.product_space(last, last)?,
            };
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let terminates_at_zero = terms.last().unwrap().is_zero();
        Ok(SeriesReport {
            kind,
            stabilized_at: terms.len() - 1,
            terms,
            terminates_at_zero,
        })
    }

    pub fn is_nilpotent(&self, within: Option<&Subspace>, method: NilpotencyMethod) -> Result<bool> {
        match method {
            NilpotencyMethod::Series => Ok(self.series(SeriesKind::LowerCentral, within)?.terminates_at_zero),
            NilpotencyMethod::Normalizer { budget } => {
                let s = self.require_subalgebra(within)?;
                if !self.field().is_finite() {
                    return Err(Error::InfiniteField(self.field()));
                }
                if s.is_zero() {
                    return Ok(true);
                }
                let sub = if s.is_full() { self.clone() } else { self.restrict(&s)? };
                for k in SubspaceEnumerator::with_budget(sub.field(), sub.dim(), budget)? {
                    if k.is_full() || !sub.is_subalgebra(&k)? {
                        continue;
                    }
                    if sub.normalizer(&k)? == k {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn is_solvable(&self, within: Option<&Subspace>) -> Result<bool> {
        Ok(self.series(SeriesKind::Derived, within)?.terminates_at_zero)
    }

    /// `Leib(L)`: span of `[e_i,e_i]` and `[e_i,e_j] + [e_j,e_i]`.
    pub fn leibniz_kernel(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            rows.push(self.basis_product(i, i));
            for j in i + 1..self.dim() {
                rows.push(add_vectors(&self.basis_product(i, j), &self.basis_product(j, i)));
            }
        }
        Subspace::span(self.field(), self.dim(), &rows).expect("rows of the right shape")
    }

    /// `{v : [v,S] ⊆ S and [S,v] ⊆ S}` for a subalgebra `S`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        let n = self.dim();
        let field = self.field();
        // reduce(·) modulo S is linear; its matrix has columns reduce(e_k).
        let reduce_cols: Vec<Vector> = (0..n).map(|k| s.reduce(&self.basis_vector(k))).collect();
        let reduce = Matrix::from_columns(field, n, &reduce_cols)?;
        let mut rows: Vec<Vector> = Vec::new();
        for b in s.basis_vectors() {
            for m in [self.right_mult_matrix(&b)?, self.left_mult_matrix(&b)?] {
                rows.extend(reduce.mul(&m)?.row_vectors());
            }
        }
        if rows.is_empty() {
            return Ok(self.whole());
        }
        let stacked = Matrix::from_rows(field, n, &rows)?;
        Subspace::span(field, n, &stacked.kernel())
    }
}
