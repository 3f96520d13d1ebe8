//! Enumeration of all subspaces of GF(q)^n through their RREF normal forms.
//!
//! Order: dimension ascending, then pivot pattern in lexicographic order, then
//! the free entries read as base-q digits (first free entry most significant).

use super::field::FieldDescriptor;
use super::matrix::Vector;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Gaussian binomial `[n choose d]_q`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, d: usize, q: u64) -> u128 {
    if d > n {
        return 0;
    }
    // Pascal rule: [n,d] = [n-1,d-1] + q^d [n-1,d].
    let mut row = vec![1u128; 1];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for k in 1..m {
            let qk = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
            next[k] = row[k - 1].saturating_add(qk.saturating_mul(row[k]));
        }
        row = next;
    }
    row[d]
}

/// Number of subspaces of GF(q)^n, saturating.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, d| acc.saturating_add(gaussian_binomial(n, d, q)))
}

/// Streams every subspace of `field^n` exactly once.
pub struct SubspaceEnumerator {
    field: FieldDescriptor,
    n: usize,
    q: u32,
    dim: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl SubspaceEnumerator {
    pub fn new(field: FieldDescriptor, n: usize) -> Result<Self> {
        if !field.is_finite() {
            return Err(Error::InfiniteField(field));
        }
        let q = field.characteristic() as u32;
        let mut e = SubspaceEnumerator {
            field,
            n,
            q,
            dim: 0,
            pivots: Vec::new(),
            free: Vec::new(),
            digits: Vec::new(),
            done: false,
        };
        e.reset_free();
        Ok(e)
    }

    /// Budget-gated constructor: refuses when the total count exceeds `budget`.
    pub fn with_budget(field: FieldDescriptor, n: usize, budget: u128) -> Result<Self> {
        let e = Self::new(field, n)?;
        let count = subspace_count(n, field.characteristic());
        if count > budget {
            return Err(Error::BudgetExceeded { count, budget });
        }
        Ok(e)
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let mut rows: Vec<Vector> = self
            .pivots
            .iter()
            .map(|&p| {
                let mut row = vec![Scalar::zero(self.field); self.n];
                row[p] = Scalar::one(self.field);
                row
            })
            .collect();
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            rows[r][c] = Scalar::from_int(self.field, d as i64);
        }
        Subspace::from_rref_rows(self.field, self.n, rows, self.pivots.clone())
    }

    fn advance_digits(&mut self) -> bool {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.q {
                return true;
            }
            *d = 0;
        }
        false
    }

    fn advance_pivots(&mut self) -> bool {
        let d = self.dim;
        let n = self.n;
        let Some(i) = (0..d).rev().find(|&i| self.pivots[i] < n - d + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..d {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }
}

impl Iterator for SubspaceEnumerator {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        if !self.advance_digits() {
            if !self.advance_pivots() {
                self.dim += 1;
                if self.dim > self.n {
                    self.done = true;
                    return Some(out);
                }
                self.pivots = (0..self.dim).collect();
            }
            self.reset_free();
        }
        Some(out)
    }
}
