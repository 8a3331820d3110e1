//! Weighted-homogeneous germs and the closed form `μ = Π (1/w_i - 1)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MilnorError;
use crate::linalg::solve_affine;
use crate::polynomial::{Polynomial, Rational};

/// Rational weights `0 < w_i <= 1/2` making every term of weighted degree 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub weights: Vec<Rational>,
}

fn admissible(w: &[Rational]) -> bool {
    let half = Rational::new(1.into(), 2.into());
    w.iter().all(|x| x.is_positive() && *x <= half)
}

/// Solves `Σ a_i w_i = 1` over the exponent vectors `a` of `f`.
///
/// When the weights are not determined by the terms, the candidates are the
/// vertices of `{A·w = 1, 0 <= w <= 1/2}` obtained by pinning free weights
/// to a bound; among those with all weights positive the smallest `Σ w_i`
/// wins, ties going to the first in enumeration order.
pub fn detect_quasihomogeneous(f: &Polynomial) -> Option<WeightVector> {
    if f.is_zero() {
        return None;
    }
    let n = f.num_vars();
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .map(|(m, _)| {
            m.exponents()
                .iter()
                .map(|&e| Rational::from_integer(e.into()))
                .collect()
        })
        .collect();
    let ones = vec![Rational::one(); rows.len()];
    let sol = solve_affine(&rows, &ones)?;
    if sol.directions.is_empty() {
        return admissible(&sol.particular).then_some(WeightVector {
            weights: sol.particular,
        });
    }
    vertex_minimum(&rows, n)
}

/// Enumerates basic solutions with `k` weights pinned to 0 or 1/2, for
/// every `k` up to `n`.
fn vertex_minimum(rows: &[Vec<Rational>], n: usize) -> Option<WeightVector> {
    let half = Rational::new(1.into(), 2.into());
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for mask in 0u32..(1 << n) {
        let pinned: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        for bounds in 0u32..(1 << pinned.len()) {
            let mut a: Vec<Vec<Rational>> = rows.to_vec();
            let mut b = vec![Rational::one(); rows.len()];
            for (k, &i) in pinned.iter().enumerate() {
                let value = if bounds & (1 << k) != 0 {
                    half.clone()
                } else {
                    Rational::zero()
                };
                let mut row = vec![Rational::zero(); n];
                row[i] = Rational::one();
                a.push(row);
                b.push(value);
            }
            let Some(sol) = solve_affine(&a, &b) else {
                continue;
            };
            if !sol.directions.is_empty() || !admissible(&sol.particular) {
                continue;
            }
            let sum: Rational = sol.particular.iter().cloned().sum();
            if best.as_ref().is_none_or(|(s, _)| sum < *s) {
                best = Some((sum, sol.particular));
            }
        }
    }
    best.map(|(_, weights)| WeightVector { weights })
}

/// `Π (1/w_i - 1)`; an error unless the product is a nonnegative integer.
pub fn quasihomogeneous_milnor(w: &WeightVector) -> Result<u64, MilnorError> {
    let product = w.weights.iter().fold(Rational::one(), |acc, x| {
        acc * (x.recip() - Rational::one())
    });
    if !product.is_integer() || product.is_negative() {
        return Err(MilnorError::NonIntegerResult);
    }
    product
        .to_integer()
        .to_u64()
        .ok_or(MilnorError::NonIntegerResult)
}
