//! Du Val (ADE) surface germs and compound Du Val threefold germs.
//!
//! Surface germs are recognized from the corank of the Hessian, the Milnor
//! number and, at corank two, the factor structure of the cubic part of the
//! residual germ. The Milnor sequence must match the table row of the type:
//! `A_k ↔ (k,1,1,1)`, `D_k` and `E_k ↔ (k,2,1,1)`. Threefold germs are
//! classified by the type of a general hyperplane slice.

mod cubic;
mod splitting;

use alloc::vec::Vec;
use core::fmt;

use crate::milnor::{
    milnor_sequence, multiplicity, random_plane, task_rng, MilnorError, MilnorSequence,
    SectionSamplingConfig, STREAM_SLICE,
};
use crate::polynomial::Polynomial;

pub use cubic::{binary_cubic_shape, BinaryCubicShape};
pub use splitting::{splitting_reduce, SplitResidual};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("expected a germ in {expected} variables, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("the singularity is not isolated")]
    NonIsolatedInput,
    #[error("the germ is smooth (order one)")]
    OrderOne,
    #[error("jet degree {0} is below 3")]
    JetDegreeTooSmall(u32),
    #[error("splitting did not converge within the jet bound")]
    SplitFailure,
    #[error("general hyperplane slices have different types")]
    SliceDisagreement,
    #[error(transparent)]
    Milnor(MilnorError),
}

impl From<MilnorError> for ClassifyError {
    fn from(e: MilnorError) -> Self {
        match e {
            MilnorError::NonIsolatedInput => ClassifyError::NonIsolatedInput,
            other => ClassifyError::Milnor(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityKind {
    Smooth,
    A(u64),
    D(u64),
    E(u64),
    CA(u64),
    CD(u64),
    CE(u64),
    NotDuVal,
    NotCdv,
}

impl SingularityKind {
    /// The compound type whose general hyperplane slice has this type.
    fn compound(self) -> SingularityKind {
        match self {
            SingularityKind::A(k) => SingularityKind::CA(k),
            SingularityKind::D(k) => SingularityKind::CD(k),
            SingularityKind::E(k) => SingularityKind::CE(k),
            _ => SingularityKind::NotCdv,
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::Smooth => f.write_str("Smooth"),
            SingularityKind::A(k) => write!(f, "A_{}", k),
            SingularityKind::D(k) => write!(f, "D_{}", k),
            SingularityKind::E(k) => write!(f, "E_{}", k),
            SingularityKind::CA(k) => write!(f, "cA_{}", k),
            SingularityKind::CD(k) => write!(f, "cD_{}", k),
            SingularityKind::CE(k) => write!(f, "cE_{}", k),
            SingularityKind::NotDuVal => f.write_str("NotDuVal"),
            SingularityKind::NotCdv => f.write_str("NotCDV"),
        }
    }
}

/// Classification verdict with the invariants it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub milnor: u64,
    pub sequence: MilnorSequence,
    pub corank: usize,
}

/// `num_vars - rank` of the Hessian of the quadratic part at the origin.
pub fn hessian_corank(f: &Polynomial) -> Result<usize, ClassifyError> {
    match multiplicity(f)? {
        1 => Err(ClassifyError::OrderOne),
        _ => Ok(f.num_vars() - splitting::quadratic_rank(f)),
    }
}

fn check_dimension(f: &Polynomial, expected: usize) -> Result<(), ClassifyError> {
    if f.num_vars() != expected {
        return Err(ClassifyError::WrongDimension {
            expected,
            found: f.num_vars(),
        });
    }
    Ok(())
}

fn smooth_class(n: usize) -> SingularityClass {
    let mut values = alloc::vec![0; n];
    values.push(1);
    SingularityClass {
        kind: SingularityKind::Smooth,
        milnor: 0,
        sequence: MilnorSequence::new(values),
        corank: 0,
    }
}

/// Du Val type of a surface germ in three variables.
pub fn classify_du_val(
    f: &Polynomial,
    cfg: &SectionSamplingConfig,
) -> Result<SingularityClass, ClassifyError> {
    check_dimension(f, 3)?;
    if multiplicity(f)? == 1 {
        return Ok(smooth_class(3));
    }
    let sequence = milnor_sequence(f, cfg)?;
    let mu = sequence.milnor_number();
    let corank = hessian_corank(f)?;
    let kind = match corank {
        0 if mu == 1 => SingularityKind::A(1),
        1 if sequence.values() == [mu, 1, 1, 1] => SingularityKind::A(mu),
        2 if sequence.values() == [mu, 2, 1, 1] => {
            let jet = u32::try_from(mu + 2).unwrap_or(u32::MAX);
            let split = splitting_reduce(f, jet)?;
            let residual = split.residual.ok_or(ClassifyError::SplitFailure)?;
            match binary_cubic_shape(&residual) {
                BinaryCubicShape::ThreeDistinctFactors if mu == 4 => SingularityKind::D(4),
                BinaryCubicShape::DoubleFactor if mu >= 5 => SingularityKind::D(mu),
                BinaryCubicShape::TripleFactor if (6..=8).contains(&mu) => SingularityKind::E(mu),
                _ => SingularityKind::NotDuVal,
            }
        }
        _ => SingularityKind::NotDuVal,
    };
    Ok(SingularityClass {
        kind,
        milnor: mu,
        sequence,
        corank,
    })
}

/// Compound Du Val type of a threefold germ in four variables, read from
/// the Du Val type of random hyperplane slices.
///
/// The first `num_samples` slices must agree. Otherwise sampling continues
/// up to `escalation_samples` and the type of the slices with the smallest
/// Milnor number is taken; if those disagree the germ is reported as
/// [`ClassifyError::SliceDisagreement`].
pub fn classify_cdv(
    f: &Polynomial,
    cfg: &SectionSamplingConfig,
) -> Result<SingularityClass, ClassifyError> {
    check_dimension(f, 4)?;
    if multiplicity(f)? == 1 {
        return Ok(smooth_class(4));
    }
    let mu = crate::milnor::finite_milnor(f, cfg.degree_cap)?;
    let corank = hessian_corank(f)?;
    let cfg = cfg.normalized();
    let slice = |k: usize| -> Result<SingularityClass, ClassifyError> {
        let mut rng = task_rng(cfg.seed, STREAM_SLICE | k as u64);
        let plane = random_plane(&mut rng, 4, 3, cfg.coefficient_height);
        let g = f
            .substitute_linear(&plane)
            .expect("plane matches ambient dimension");
        classify_du_val(&g, &cfg)
    };

    let mut slices: Vec<Result<SingularityClass, ClassifyError>> =
        (0..cfg.num_samples).map(slice).collect();
    let agreed = match &slices[0] {
        Ok(first) => slices
            .iter()
            .all(|s| matches!(s, Ok(c) if c.kind == first.kind && c.sequence == first.sequence))
            .then(|| first.clone()),
        Err(_) => None,
    };
    let chosen = match agreed {
        Some(c) => c,
        None => {
            slices.extend((cfg.num_samples..cfg.escalation_samples).map(slice));
            let ok: Vec<&SingularityClass> =
                slices.iter().filter_map(|s| s.as_ref().ok()).collect();
            let Some(min_mu) = ok.iter().map(|c| c.milnor).min() else {
                return Err(slices.swap_remove(0).unwrap_err());
            };
            let minimal: Vec<&&SingularityClass> =
                ok.iter().filter(|c| c.milnor == min_mu).collect();
            if minimal
                .iter()
                .any(|c| c.kind != minimal[0].kind || c.sequence != minimal[0].sequence)
            {
                return Err(ClassifyError::SliceDisagreement);
            }
            (*minimal[0]).clone()
        }
    };

    let mut values = Vec::with_capacity(5);
    values.push(mu);
    values.extend_from_slice(chosen.sequence.values());
    Ok(SingularityClass {
        kind: chosen.kind.compound(),
        milnor: mu,
        sequence: MilnorSequence::new(values),
        corank,
    })
}

/// Dispatches on the number of variables: three for surfaces, four for
/// threefolds.
pub fn classify(
    f: &Polynomial,
    cfg: &SectionSamplingConfig,
) -> Result<SingularityClass, ClassifyError> {
    match f.num_vars() {
        3 => classify_du_val(f, cfg),
        4 => classify_cdv(f, cfg),
        n => Err(ClassifyError::WrongDimension {
            expected: if n < 3 { 3 } else { 4 },
            found: n,
        }),
    }
}
