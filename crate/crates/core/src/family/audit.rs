//! Upper semicontinuity of the total Milnor number over the samples.

use alloc::vec::Vec;

use super::FiberOutcome;
use crate::polynomial::Rational;

/// The sum of Milnor numbers over the singular points of a fiber can only
/// jump up at special parameters. Every sampled fiber with a finite sum is
/// compared against the smallest sum seen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicontinuityAudit {
    /// Smallest finite `milnor_sum` over the samples.
    pub minimum: Option<u64>,
    /// Parameters whose sum exceeds the minimum, with that sum.
    pub special: Vec<(Rational, u64)>,
    /// Parameters whose sum is below the minimum; always empty unless the
    /// invariants were computed incorrectly.
    pub violations: Vec<Rational>,
    pub passed: bool,
}

pub fn semicontinuity_audit(fibers: &[FiberOutcome]) -> SemicontinuityAudit {
    let sums: Vec<(&Rational, u64)> = fibers
        .iter()
        .filter_map(|f| match f {
            FiberOutcome::Report(r) => r.milnor_sum.map(|s| (&r.parameter, s)),
            FiberOutcome::Failed { .. } => None,
        })
        .collect();
    let minimum = sums.iter().map(|(_, s)| *s).min();
    let mut special = Vec::new();
    let mut violations = Vec::new();
    if let Some(min) = minimum {
        for (p, s) in &sums {
            if *s > min {
                special.push(((*p).clone(), *s));
            } else if *s < min {
                violations.push((*p).clone());
            }
        }
    }
    special.sort();
    violations.sort();
    let passed = violations.is_empty();
    SemicontinuityAudit {
        minimum,
        special,
        violations,
        passed,
    }
}
