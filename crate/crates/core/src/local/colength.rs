use alloc::collections::BTreeSet;
use alloc::vec;

use super::mora::truncated_standard_basis;
use super::{standard_basis, LocalError, LocalOrder, StandardBasisResult};
use crate::polynomial::{Monomial, Polynomial};

/// Dimension of a local quotient ring as a rational vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colength {
    Finite(u64),
    /// The standard basis is complete but some variable has no pure power
    /// among the leading monomials: the quotient is infinite-dimensional.
    NonIsolated,
    /// The degree cap was reached before the answer was certified.
    Inconclusive {
        degree_cap: u32,
    },
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// The finite set of standard monomials of a zero-dimensional leading ideal.
pub(crate) struct Staircase {
    pub count: u64,
    /// Largest degree of a standard monomial, `None` if there are none.
    pub max_degree: Option<u32>,
}

impl Staircase {
    /// Every monomial of this degree lies in the leading ideal.
    pub fn corner_degree(&self) -> u32 {
        self.max_degree.map_or(0, |d| d + 1)
    }
}

/// Enumerates the monomials outside the ideal generated by `lms`, or
/// returns `None` if some variable has no pure power there (infinitely many
/// standard monomials).
pub(crate) fn staircase(lms: &[Monomial], num_vars: usize) -> Option<Staircase> {
    let has_pure_power = |i: usize| {
        lms.iter().any(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(j, &e)| j == i || e == 0)
        })
    };
    if !(0..num_vars).all(has_pure_power) {
        return None;
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let one = Monomial::one(num_vars);
    if !standard(&one) {
        return Some(Staircase {
            count: 0,
            max_degree: None,
        });
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![one.clone()];
    seen.insert(one);
    let mut max_degree = 0;
    while let Some(m) = stack.pop() {
        max_degree = max_degree.max(m.degree());
        for i in 0..num_vars {
            let mut e = m.exponents().to_vec();
            e[i] += 1;
            let next = Monomial::new(e);
            if standard(&next) && !seen.contains(&next) {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    Some(Staircase {
        count: seen.len() as u64,
        max_degree: Some(max_degree),
    })
}

/// Reads the colength off a standard basis computed with `degree_cap`.
pub fn colength_of_basis(sb: &StandardBasisResult, num_vars: usize, degree_cap: u32) -> Colength {
    match staircase(&sb.leading_monomials, num_vars) {
        // A discarded remainder has order above the cap; if every monomial of
        // that order is already a leading monomial, nothing was lost.
        Some(st) if !sb.degree_cap_hit || st.corner_degree() <= degree_cap + 1 => {
            Colength::Finite(st.count)
        }
        Some(_) => Colength::Inconclusive { degree_cap },
        None if sb.degree_cap_hit => Colength::Inconclusive { degree_cap },
        None => Colength::NonIsolated,
    }
}

/// Colength of the ideal in the local ring at the origin, via a standard
/// basis.
///
/// Standard bases of `I + m^(T+1)` are computed for `T = 8, 16, …` up to
/// `degree_cap + 1`. They give the leading monomials of `I` up to degree
/// `T`, which settle the colength as soon as every standard monomial has
/// degree below `T`. If some variable still has no pure power among the
/// leading monomials at `T = degree_cap + 1`, the untruncated basis is
/// computed, which can certify a non-isolated singularity.
pub fn colength(
    generators: &[Polynomial],
    order: &LocalOrder,
    degree_cap: u32,
) -> Result<Colength, LocalError> {
    let limit = degree_cap.saturating_add(1);
    let mut t = limit.min(8);
    loop {
        let sb = truncated_standard_basis(generators, order, t)?;
        match staircase(&sb.leading_monomials, order.num_vars) {
            Some(st) if st.corner_degree() <= t => return Ok(Colength::Finite(st.count)),
            Some(_) if t >= limit => return Ok(Colength::Inconclusive { degree_cap }),
            None if t >= limit => break,
            _ => t = t.saturating_mul(2).min(limit),
        }
    }
    let sb = standard_basis(generators, order, degree_cap)?;
    Ok(colength_of_basis(&sb, order.num_vars, degree_cap))
}

/// Twice the sum of the generator degrees, plus four.
pub fn default_degree_cap(generators: &[Polynomial]) -> u32 {
    2 * generators
        .iter()
        .filter_map(Polynomial::total_degree)
        .sum::<u32>()
        + 4
}
