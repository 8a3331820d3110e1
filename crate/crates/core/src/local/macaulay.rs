//! Independent colength oracle by linear algebra on truncated Macaulay
//! matrices.
//!
//! `dim Q[x]/(I + m^d)` is the number of monomials of degree `< d` minus
//! the rank of the matrix whose rows are the products `m·g` truncated below
//! degree `d`. When `dim(d) = dim(d+1)` we have `m^d ⊆ I + m^(d+1)`, hence
//! `m^d ⊆ I` locally by Nakayama, and the value is the colength.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Colength, LocalError};
use crate::polynomial::{Monomial, Polynomial, Rational};

/// All exponent vectors in `n` variables of total degree `<= max_degree`.
pub(crate) fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::new(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, max_degree, &mut out);
    out
}

type SparseRow = Vec<(usize, Rational)>;

/// Row echelon form kept as monic pivot rows keyed by their first column.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    fn insert(&mut self, mut row: SparseRow) {
        while let Some((lead, coef)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = coef.recip();
                for (_, c) in row.iter_mut() {
                    *c *= &inv;
                }
                self.pivots.insert(lead, row);
                return;
            };
            row = subtract_scaled(&row, &coef, pivot);
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn subtract_scaled(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `dim Q[x]/(I + m^d)`.
pub(crate) fn truncated_quotient_dim(generators: &[Polynomial], num_vars: usize, d: u32) -> u64 {
    if d == 0 {
        return 0;
    }
    let columns: BTreeMap<Monomial, usize> = monomials_up_to(num_vars, d - 1)
        .into_iter()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();
    let mut echelon = Echelon::default();
    for g in generators {
        let Some(ord) = g.order_of_vanishing() else {
            continue;
        };
        if ord >= d {
            continue;
        }
        for shift in monomials_up_to(num_vars, d - 1 - ord) {
            let mut row: SparseRow = g
                .terms()
                .map(|(m, c)| (shift.mul(m), c))
                .filter(|(m, _)| m.degree() < d)
                .map(|(m, c)| (columns[&m], c.clone()))
                .collect();
            row.sort_by_key(|(k, _)| *k);
            echelon.insert(row);
        }
    }
    (columns.len() - echelon.rank()) as u64
}

/// Colength by stabilization of truncated quotient dimensions. Never
/// certifies `NonIsolated`: if no `d < degree_cap` stabilizes, the result is
/// `Inconclusive`.
pub fn macaulay_colength_oracle(
    generators: &[Polynomial],
    degree_cap: u32,
) -> Result<Colength, LocalError> {
    let gens: Vec<Polynomial> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let Some(first) = gens.first() else {
        return Err(LocalError::EmptyGenerators);
    };
    let n = first.num_vars();
    if let Some(bad) = gens.iter().find(|g| g.num_vars() != n) {
        return Err(LocalError::DimensionMismatch {
            expected: n,
            found: bad.num_vars(),
        });
    }
    let mut prev = truncated_quotient_dim(&gens, n, 1);
    for d in 1..degree_cap {
        let next = truncated_quotient_dim(&gens, n, d + 1);
        if next == prev {
            return Ok(Colength::Finite(prev));
        }
        prev = next;
    }
    Ok(Colength::Inconclusive { degree_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    fn gens(list: &[&str], vars: &[&str]) -> Vec<Polynomial> {
        list.iter()
            .map(|s| parse_polynomial(s, vars).unwrap())
            .collect()
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(4, 9).len(), 715);
    }

    #[test]
    fn morse_jacobian() {
        let g = gens(&["2*x", "2*y"], &["x", "y"]);
        assert_eq!(
            macaulay_colength_oracle(&g, 10).unwrap(),
            Colength::Finite(1)
        );
    }

    #[test]
    fn monomial_ideal() {
        let g = gens(&["x^2", "y^3"], &["x", "y"]);
        assert_eq!(
            macaulay_colength_oracle(&g, 10).unwrap(),
            Colength::Finite(6)
        );
    }

    #[test]
    fn prop_fiber_at_origin() {
        let v = ["t", "x", "y", "z"];
        let f = parse_polynomial("t^2+x^2+y^6+z^6", &v).unwrap();
        assert_eq!(
            macaulay_colength_oracle(&f.gradient(), 30).unwrap(),
            Colength::Finite(25)
        );
    }

    #[test]
    fn never_certifies_non_isolated() {
        let g = gens(&["x"], &["x", "y"]);
        assert_eq!(
            macaulay_colength_oracle(&g, 8).unwrap(),
            Colength::Inconclusive { degree_cap: 8 }
        );
        assert_eq!(
            macaulay_colength_oracle(&[], 8),
            Err(LocalError::EmptyGenerators)
        );
    }

    #[test]
    fn unit_multiple_membership() {
        // x + x^2 lies in (x + x^3) locally: adding it does not change the
        // truncated quotients
        let v = ["x"];
        let base = gens(&["x + x^3"], &v);
        let with = gens(&["x + x^3", "x + x^2"], &v);
        for d in 1..12 {
            assert_eq!(
                truncated_quotient_dim(&base, 1, d),
                truncated_quotient_dim(&with, 1, d)
            );
        }
    }
}
