use alloc::vec::Vec;

use num_traits::Zero;

use super::{PolyError, Polynomial, Rational};
use crate::linalg;

/// Linear pullback `x = M·u`: row `i` expresses the old variable `x_i` in
/// the new variables, so column `j` is the image of `u_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubstitution {
    rows: Vec<Vec<Rational>>,
    num_source: usize,
}

impl LinearSubstitution {
    /// Panics unless every row has `num_source` entries.
    pub fn new(rows: Vec<Vec<Rational>>, num_source: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == num_source),
            "ragged substitution matrix"
        );
        LinearSubstitution { rows, num_source }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            super::rat(1)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        LinearSubstitution {
            rows,
            num_source: n,
        }
    }

    pub fn num_target_vars(&self) -> usize {
        self.rows.len()
    }

    pub fn num_source_vars(&self) -> usize {
        self.num_source
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    /// Matrix product `self · rhs`, so that pulling back by the product
    /// equals pulling back by `self` and then by `rhs`.
    pub fn compose(&self, rhs: &LinearSubstitution) -> Result<LinearSubstitution, PolyError> {
        if self.num_source != rhs.num_target_vars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.num_source,
                found: rhs.num_target_vars(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..rhs.num_source)
                    .map(|j| {
                        row.iter()
                            .zip(&rhs.rows)
                            .fold(Rational::zero(), |acc, (a, r)| acc + a * &r[j])
                    })
                    .collect()
            })
            .collect();
        Ok(LinearSubstitution {
            rows,
            num_source: rhs.num_source,
        })
    }

    /// Images of the old variables as linear forms in the new ones.
    pub fn images(&self) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                let mut p = Polynomial::zero(self.num_source);
                for (j, c) in row.iter().enumerate() {
                    p.add_term(super::Monomial::variable(self.num_source, j), c.clone());
                }
                p
            })
            .collect()
    }
}

impl Polynomial {
    /// Returns `f(M·u)` as a polynomial in the source variables `u`.
    pub fn substitute_linear(&self, sub: &LinearSubstitution) -> Result<Polynomial, PolyError> {
        if sub.num_target_vars() != self.num_vars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.num_vars(),
                found: sub.num_target_vars(),
            });
        }
        self.compose(&sub.images())
    }
}
