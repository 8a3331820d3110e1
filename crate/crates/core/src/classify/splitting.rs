//! Jet-level splitting lemma: split off the nondegenerate quadratic part of
//! a germ and return the residual germ in the corank variables.

use alloc::vec::Vec;

use num_traits::Zero;

use super::ClassifyError;
use crate::linalg;
use crate::polynomial::{Monomial, Polynomial, Rational};

/// Symmetric matrix of the quadratic part: `q = Σ_ij Q_ij x_i x_j`.
pub(crate) fn quadratic_form(f: &Polynomial) -> Vec<Vec<Rational>> {
    let n = f.num_vars();
    let two = Rational::from_integer(2.into());
    let mut q = alloc::vec![alloc::vec![Rational::zero(); n]; n];
    for (m, c) in f.homogeneous_part(2).terms() {
        let support: Vec<usize> = (0..n).filter(|&i| m.exponents()[i] > 0).collect();
        match support.as_slice() {
            [i] => q[*i][*i] = c.clone(),
            [i, j] => {
                q[*i][*j] = c / &two;
                q[*j][*i] = c / &two;
            }
            _ => unreachable!("degree-two monomial"),
        }
    }
    q
}

pub(crate) fn quadratic_rank(f: &Polynomial) -> usize {
    linalg::rank(&quadratic_form(f))
}

/// Residual of the splitting lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResidual {
    /// Rank of the quadratic part that was split off.
    pub quadratic_rank: usize,
    /// Indices of the coordinates (after the diagonalizing change) that carry
    /// the residual; variables of `f` that never entered the quadratic part
    /// keep their index.
    pub kernel: Vec<usize>,
    /// Residual germ in `kernel.len()` variables, or `None` at corank zero.
    pub residual: Option<Polynomial>,
}

fn substitute_truncated(g: &Polynomial, images: &[Polynomial], jet: u32) -> Polynomial {
    g.compose(images)
        .expect("one image per variable")
        .truncate_jet(jet)
}

/// Completes squares coordinate by coordinate. Returns the transformed germ,
/// the pivot coordinates with their diagonal coefficients, and the kernel.
fn diagonalize(f: &Polynomial, jet: u32) -> (Polynomial, Vec<(usize, Rational)>, Vec<usize>) {
    let n = f.num_vars();
    let mut g = f.truncate_jet(jet);
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::new();
    loop {
        let q = quadratic_form(&g);
        if let Some(pos) = remaining.iter().position(|&i| !q[i][i].is_zero()) {
            let p = remaining.remove(pos);
            // x_p = y_p - Σ_j (Q_pj / Q_pp) y_j
            let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(n, i)).collect();
            for &j in &remaining {
                if !q[p][j].is_zero() {
                    let c = -(&q[p][j] / &q[p][p]);
                    images[p] = &images[p] + &Polynomial::term(Monomial::variable(n, j), c);
                }
            }
            g = substitute_truncated(&g, &images, jet);
            pivots.push((p, q[p][p].clone()));
            continue;
        }
        let off = remaining
            .iter()
            .flat_map(|&i| remaining.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && !q[i][j].is_zero());
        match off {
            Some((i, j)) => {
                // x_j = y_j + y_i turns 2Q_ij x_i x_j into a nonzero y_i^2 term
                let mut images: Vec<Polynomial> =
                    (0..n).map(|k| Polynomial::variable(n, k)).collect();
                images[j] = &images[j] + &Polynomial::variable(n, i);
                g = substitute_truncated(&g, &images, jet);
            }
            None => return (g, pivots, remaining),
        }
    }
}

/// Splits `f` as (nondegenerate quadratic form) ⊕ (residual), working with
/// jets of degree `jet_degree`. The residual is `g(φ(z), z)` where `φ`
/// solves `∂g/∂y = 0` for the split coordinates `y`.
pub fn splitting_reduce(f: &Polynomial, jet_degree: u32) -> Result<SplitResidual, ClassifyError> {
    if jet_degree < 3 {
        return Err(ClassifyError::JetDegreeTooSmall(jet_degree));
    }
    match f.order_of_vanishing() {
        Some(0) => {
            return Err(ClassifyError::Milnor(
                crate::milnor::MilnorError::ConstantTermPresent,
            ))
        }
        Some(1) => return Err(ClassifyError::OrderOne),
        _ => {}
    }
    let n = f.num_vars();
    let (g, pivots, kernel) = diagonalize(f, jet_degree);
    if kernel.is_empty() {
        return Ok(SplitResidual {
            quadratic_rank: n,
            kernel,
            residual: None,
        });
    }

    let grads: Vec<(usize, Rational, Polynomial)> = pivots
        .iter()
        .map(|(p, c)| (*p, c + c, g.partial_derivative(*p).expect("index in range")))
        .collect();
    let mut images: Vec<Polynomial> = (0..n)
        .map(|i| {
            if pivots.iter().any(|(p, _)| *p == i) {
                Polynomial::zero(n)
            } else {
                Polynomial::variable(n, i)
            }
        })
        .collect();
    let mut converged = false;
    for _ in 0..=jet_degree {
        let mut next = images.clone();
        for (p, two_c, grad) in &grads {
            let value = substitute_truncated(grad, &images, jet_degree);
            next[*p] = (&images[*p] - &value.scale(&two_c.recip())).truncate_jet(jet_degree);
        }
        if next == images {
            converged = true;
            break;
        }
        images = next;
    }
    if !converged {
        return Err(ClassifyError::SplitFailure);
    }
    let full = substitute_truncated(&g, &images, jet_degree);

    // Re-index onto the kernel coordinates.
    let k = kernel.len();
    let mut residual = Polynomial::zero(k);
    for (m, c) in full.terms() {
        if pivots.iter().any(|(p, _)| m.exponents()[*p] > 0) {
            return Err(ClassifyError::SplitFailure);
        }
        let e: Vec<u32> = kernel.iter().map(|&i| m.exponents()[i]).collect();
        residual.add_term(Monomial::new(e), c.clone());
    }
    if !residual.homogeneous_part(2).is_zero() {
        return Err(ClassifyError::SplitFailure);
    }
    Ok(SplitResidual {
        quadratic_rank: pivots.len(),
        kernel,
        residual: Some(residual),
    })
}
