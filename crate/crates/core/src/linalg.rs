//! Small dense exact linear algebra over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::polynomial::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Pivots are chosen as the first nonzero entry in the lowest-index row, so
/// the result is deterministic.
pub(crate) fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &factor * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Solution set of `A·w = b` as a particular solution plus the list of free
/// columns; `None` if inconsistent. The particular solution sets every free
/// variable to zero.
pub(crate) struct AffineSolution {
    pub particular: Vec<Rational>,
    /// For each free column `f`, the direction vector obtained by setting
    /// `w_f = 1` and the other free variables to zero in the homogeneous system.
    pub directions: Vec<(usize, Vec<Rational>)>,
}

pub(crate) fn solve_affine(a: &[Vec<Rational>], b: &[Rational]) -> Option<AffineSolution> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = alloc::vec![Rational::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = aug[row][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut d = alloc::vec![Rational::zero(); n];
            d[f] = Rational::one();
            for (row, &c) in pivots.iter().enumerate() {
                d[c] = -aug[row][f].clone();
            }
            (f, d)
        })
        .collect();
    Some(AffineSolution {
        particular,
        directions,
    })
}
