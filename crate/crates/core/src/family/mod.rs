//! One-parameter families with declared singular sections: per-fiber Milnor
//! sequences, Whitney-equisingularity verdicts and stratification of the
//! sampled parameters.
//!
//! A family is equisingular along its sections exactly when every nonzero
//! Milnor sequence occurs the same number of times on every fiber. Only
//! finitely many parameters are sampled, so agreement is evidence, while a
//! disagreement or a non-isolated fiber is conclusive.

mod audit;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::milnor::{milnor_sequence, MilnorError, MilnorSequence, SectionSamplingConfig};
use crate::polynomial::{Polynomial, Rational};

pub use audit::{semicontinuity_audit, SemicontinuityAudit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("a family needs at least one space variable and the parameter")]
    TooFewVariables,
    #[error("no singular sections declared")]
    NoSections,
    #[error("section {section} has {found} coordinates, expected {expected}")]
    SectionDimension {
        section: usize,
        expected: usize,
        found: usize,
    },
    #[error(
        "section {section}: coordinate {coordinate} must be a polynomial in the parameter only"
    )]
    SectionNotUnivariate { section: usize, coordinate: usize },
    #[error("section index {0} is out of range")]
    SectionIndex(usize),
    #[error("parameter {0} is excluded")]
    ExcludedParameter(Rational),
    #[error("no parameter samples remain after exclusions")]
    NoSamples,
    #[error("section {section} does not lie on the family identically in the parameter")]
    SectionNotOnFamily { section: usize },
    #[error("section {section} does not lie on the fiber at parameter {parameter}")]
    SectionNotOnFiber { section: usize, parameter: Rational },
    #[error("section {section} is a smooth point of the fiber at parameter {parameter}")]
    SectionNotSingular { section: usize, parameter: Rational },
    #[error("section {section} at parameter {parameter}: {source}")]
    Fiber {
        section: usize,
        parameter: Rational,
        source: MilnorError,
    },
}

/// A polynomial in space variables followed by one parameter (the last
/// variable), with singular sections given as univariate polynomials in
/// the parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    polynomial: Polynomial,
    sections: Vec<Vec<Polynomial>>,
    samples: Vec<Rational>,
    excluded: Vec<Rational>,
}

/// Parameters tried when a family declares no samples.
pub fn default_samples() -> Vec<Rational> {
    [-3, -1, 0, 1, 3]
        .iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect()
}

impl FamilySpec {
    /// Checks shapes only; [`FamilySpec::validate_sections`] checks that
    /// the sections are singular points of the fibers. An empty sample list
    /// selects [`default_samples`] minus the exclusions.
    pub fn new(
        polynomial: Polynomial,
        sections: Vec<Vec<Polynomial>>,
        samples: Vec<Rational>,
        excluded: Vec<Rational>,
    ) -> Result<Self, FamilyError> {
        let space = polynomial
            .num_vars()
            .checked_sub(1)
            .filter(|&s| s > 0)
            .ok_or(FamilyError::TooFewVariables)?;
        if sections.is_empty() {
            return Err(FamilyError::NoSections);
        }
        for (i, s) in sections.iter().enumerate() {
            if s.len() != space {
                return Err(FamilyError::SectionDimension {
                    section: i,
                    expected: space,
                    found: s.len(),
                });
            }
            if let Some(j) = s.iter().position(|c| c.num_vars() != 1) {
                return Err(FamilyError::SectionNotUnivariate {
                    section: i,
                    coordinate: j,
                });
            }
        }
        if let Some(bad) = samples.iter().find(|a| excluded.contains(a)) {
            return Err(FamilyError::ExcludedParameter(bad.clone()));
        }
        let samples = if samples.is_empty() {
            default_samples()
                .into_iter()
                .filter(|a| !excluded.contains(a))
                .collect()
        } else {
            samples
        };
        if samples.is_empty() {
            return Err(FamilyError::NoSamples);
        }
        Ok(FamilySpec {
            polynomial,
            sections,
            samples,
            excluded,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }

    pub fn sections(&self) -> &[Vec<Polynomial>] {
        &self.sections
    }

    pub fn samples(&self) -> &[Rational] {
        &self.samples
    }

    pub fn excluded(&self) -> &[Rational] {
        &self.excluded
    }

    /// Number of space variables.
    pub fn space_dim(&self) -> usize {
        self.polynomial.num_vars() - 1
    }

    /// Same family with another list of samples.
    pub fn with_samples(&self, samples: Vec<Rational>) -> Result<Self, FamilyError> {
        FamilySpec::new(
            self.polynomial.clone(),
            self.sections.clone(),
            samples,
            self.excluded.clone(),
        )
    }

    pub fn section_point(
        &self,
        section: usize,
        alpha: &Rational,
    ) -> Result<Vec<Rational>, FamilyError> {
        let coords = self
            .sections
            .get(section)
            .ok_or(FamilyError::SectionIndex(section))?;
        Ok(coords
            .iter()
            .map(|c| {
                c.evaluate(core::slice::from_ref(alpha))
                    .expect("univariate")
            })
            .collect())
    }

    /// Checks `f(σ(α), α) = 0` as a polynomial identity in `α`, and that
    /// the gradient of the fiber vanishes at `σ(α)` for every sample.
    pub fn validate_sections(&self) -> Result<(), FamilyError> {
        let space = self.space_dim();
        for (i, coords) in self.sections.iter().enumerate() {
            let mut images = coords.clone();
            images.push(Polynomial::variable(1, 0));
            let along = self
                .polynomial
                .compose(&images)
                .expect("one image per variable");
            if !along.is_zero() {
                return Err(FamilyError::SectionNotOnFamily { section: i });
            }
            for alpha in &self.samples {
                let mut point = self.section_point(i, alpha)?;
                point.push(alpha.clone());
                for v in 0..space {
                    let d = self
                        .polynomial
                        .partial_derivative(v)
                        .expect("index in range");
                    if !d.evaluate(&point).expect("point matches").is_zero() {
                        return Err(FamilyError::SectionNotSingular {
                            section: i,
                            parameter: alpha.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// The germ `g(u) = f(σ(α) + u, α)` of the fiber at a section point.
pub fn specialize(
    family: &FamilySpec,
    alpha: &Rational,
    section: usize,
) -> Result<Polynomial, FamilyError> {
    if family.excluded.contains(alpha) {
        return Err(FamilyError::ExcludedParameter(alpha.clone()));
    }
    let point = family.section_point(section, alpha)?;
    let n = family.space_dim();
    let mut images: Vec<Polynomial> = point
        .into_iter()
        .enumerate()
        .map(|(i, c)| &Polynomial::variable(n, i) + &Polynomial::constant(n, c))
        .collect();
    images.push(Polynomial::constant(n, alpha.clone()));
    let g = family
        .polynomial
        .compose(&images)
        .expect("one image per variable");
    if !g.constant_term().is_zero() {
        return Err(FamilyError::SectionNotOnFiber {
            section,
            parameter: alpha.clone(),
        });
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionInvariant {
    Sequence(MilnorSequence),
    NonIsolated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionReport {
    pub section: usize,
    pub point: Vec<Rational>,
    pub invariant: SectionInvariant,
}

/// Milnor sequences at the distinct section points of one fiber. Sections
/// passing through the same point are reported once, under the lowest
/// index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub parameter: Rational,
    pub per_section: Vec<SectionReport>,
    /// Sum of the Milnor numbers, when every point is isolated.
    pub milnor_sum: Option<u64>,
}

impl FiberReport {
    pub fn is_degenerate(&self) -> bool {
        self.milnor_sum.is_none()
    }

    /// Sorted nonzero Milnor sequences, `None` for a degenerate fiber.
    pub fn multiset(&self) -> Option<Vec<MilnorSequence>> {
        let mut out = Vec::new();
        for s in &self.per_section {
            match &s.invariant {
                SectionInvariant::Sequence(seq) if !seq.is_zero_sequence() => out.push(seq.clone()),
                SectionInvariant::Sequence(_) => {}
                SectionInvariant::NonIsolated => return None,
            }
        }
        out.sort();
        Some(out)
    }
}

pub fn fiber_report(
    family: &FamilySpec,
    alpha: &Rational,
    cfg: &SectionSamplingConfig,
) -> Result<FiberReport, FamilyError> {
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut per_section = Vec::new();
    let mut sum = Some(0u64);
    for section in 0..family.sections.len() {
        let point = family.section_point(section, alpha)?;
        if !seen.insert(point.clone()) {
            continue;
        }
        let g = specialize(family, alpha, section)?;
        let invariant = match milnor_sequence(&g, cfg) {
            Ok(seq) => {
                sum = sum.map(|s| s + seq.milnor_number());
                SectionInvariant::Sequence(seq)
            }
            Err(MilnorError::NonIsolatedInput) => {
                sum = None;
                SectionInvariant::NonIsolated
            }
            Err(source) => {
                return Err(FamilyError::Fiber {
                    section,
                    parameter: alpha.clone(),
                    source,
                })
            }
        };
        per_section.push(SectionReport {
            section,
            point,
            invariant,
        });
    }
    Ok(FiberReport {
        parameter: alpha.clone(),
        per_section,
        milnor_sum: sum,
    })
}

/// A sampled fiber: its report, or the error that stopped it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberOutcome {
    Report(FiberReport),
    Failed {
        parameter: Rational,
        error: FamilyError,
    },
}

impl FiberOutcome {
    pub fn parameter(&self) -> &Rational {
        match self {
            FiberOutcome::Report(r) => &r.parameter,
            FiberOutcome::Failed { parameter, .. } => parameter,
        }
    }

    fn multiset(&self) -> Option<Vec<MilnorSequence>> {
        match self {
            FiberOutcome::Report(r) => r.multiset(),
            FiberOutcome::Failed { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum StratumKey {
    Multiset(Vec<MilnorSequence>),
    /// Non-isolated fibers and fibers whose computation failed.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub key: StratumKey,
    /// Sorted ascending.
    pub parameters: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    EquisingularEvidence,
    NotEquisingular,
    Degenerate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::EquisingularEvidence => "EquisingularEvidence",
            Verdict::NotEquisingular => "NotEquisingular",
            Verdict::Degenerate => "Degenerate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictNote {
    /// Agreement was observed on this many sampled parameters only.
    SampledCertificate { samples: usize },
    /// Singular points off the declared sections are not searched for.
    DeclaredSectionsOnly,
}

impl fmt::Display for VerdictNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictNote::SampledCertificate { samples } => write!(
                f,
                "sampled certificate: sequences agree on {} parameter values, not proven for all",
                samples
            ),
            VerdictNote::DeclaredSectionsOnly => {
                f.write_str("only the declared sections are checked; other singular points are not searched for")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub verdict: Verdict,
    pub common_multiset: Option<Vec<MilnorSequence>>,
    /// One degenerate fiber, or two fibers with different multisets.
    pub witnesses: Vec<FiberOutcome>,
    pub strata: Vec<Stratum>,
    /// Every sampled fiber in sample order.
    pub fibers: Vec<FiberOutcome>,
    pub audit: SemicontinuityAudit,
    pub notes: Vec<VerdictNote>,
}

fn compute_fibers(family: &FamilySpec, cfg: &SectionSamplingConfig) -> Vec<FiberOutcome> {
    family
        .samples
        .iter()
        .map(|alpha| match fiber_report(family, alpha, cfg) {
            Ok(r) => FiberOutcome::Report(r),
            Err(error) => FiberOutcome::Failed {
                parameter: alpha.clone(),
                error,
            },
        })
        .collect()
}

fn strata_of(fibers: &[FiberOutcome]) -> Vec<Stratum> {
    let mut strata: Vec<Stratum> = Vec::new();
    for fiber in fibers {
        let key = fiber
            .multiset()
            .map_or(StratumKey::Degenerate, StratumKey::Multiset);
        match strata.iter_mut().find(|s| s.key == key) {
            Some(s) => s.parameters.push(fiber.parameter().clone()),
            None => strata.push(Stratum {
                key,
                parameters: alloc::vec![fiber.parameter().clone()],
            }),
        }
    }
    for s in &mut strata {
        s.parameters.sort();
    }
    strata
}

/// Partition of the samples by the multiset of nonzero Milnor sequences,
/// blocks in order of first occurrence.
pub fn stratify(
    family: &FamilySpec,
    cfg: &SectionSamplingConfig,
) -> Result<Vec<Stratum>, FamilyError> {
    family.validate_sections()?;
    Ok(strata_of(&compute_fibers(family, cfg)))
}

fn smallest<'a>(fibers: impl Iterator<Item = &'a FiberOutcome>) -> Option<&'a FiberOutcome> {
    fibers.min_by(|a, b| a.parameter().cmp(b.parameter()))
}

/// Equisingularity verdict over the sampled parameters. Witnesses are
/// chosen by smallest parameter, so the verdict does not depend on the
/// order of the samples.
pub fn whitney_check(
    family: &FamilySpec,
    cfg: &SectionSamplingConfig,
) -> Result<FamilyVerdict, FamilyError> {
    family.validate_sections()?;
    let fibers = compute_fibers(family, cfg);
    let strata = strata_of(&fibers);
    let audit = semicontinuity_audit(&fibers);
    let mut notes = alloc::vec![VerdictNote::DeclaredSectionsOnly];

    let degenerate = smallest(fibers.iter().filter(|f| f.multiset().is_none()));
    let (verdict, common_multiset, witnesses) = if let Some(w) = degenerate {
        (Verdict::Degenerate, None, alloc::vec![w.clone()])
    } else {
        let first = smallest(fibers.iter()).expect("samples are nonempty");
        let reference = first.multiset();
        match smallest(fibers.iter().filter(|f| f.multiset() != reference)) {
            None => {
                notes.insert(
                    0,
                    VerdictNote::SampledCertificate {
                        samples: fibers.len(),
                    },
                );
                (Verdict::EquisingularEvidence, reference, Vec::new())
            }
            Some(other) => (
                Verdict::NotEquisingular,
                None,
                alloc::vec![first.clone(), other.clone()],
            ),
        }
    };
    Ok(FamilyVerdict {
        verdict,
        common_multiset,
        witnesses,
        strata,
        fibers,
        audit,
        notes,
    })
}

#[cfg(test)]
mod tests;
