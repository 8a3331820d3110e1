//! Milnor numbers, multiplicities and Milnor sequences of hypersurface
//! germs at the origin.
//!
//! The Milnor sequence of a germ in `n+1` variables is
//! `(μ^(n+1), μ^(n), …, μ^(1), μ^(0))`, where `μ^(i)` is the Milnor number
//! of the restriction to a general `i`-plane through the origin,
//! `μ^(1) = multiplicity - 1` and `μ^(0) = 1`.

mod quasihomogeneous;
mod sampling;

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::local::{colength, default_degree_cap, Colength, LocalOrder};
use crate::polynomial::Polynomial;

pub use quasihomogeneous::{detect_quasihomogeneous, quasihomogeneous_milnor, WeightVector};
pub(crate) use sampling::{random_plane, task_rng, STREAM_SECTION, STREAM_SLICE};
pub use sampling::{DegreeCap, SectionSamplingConfig};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MilnorError {
    #[error("the germ has a nonzero constant term and does not pass through the origin")]
    ConstantTermPresent,
    #[error("the zero polynomial has no multiplicity")]
    ZeroPolynomial,
    #[error("the singularity is not isolated")]
    NonIsolatedInput,
    #[error("standard basis reached degree cap {degree_cap} before the colength was certified")]
    Inconclusive { degree_cap: u32 },
    #[error("weight product is not an integer")]
    NonIntegerResult,
    #[error("plane dimension {plane_dim} is not in 1..={num_vars}")]
    InvalidPlaneDimension { plane_dim: usize, num_vars: usize },
    #[error("no sampled {plane_dim}-plane section had a certified finite Milnor number")]
    AllSamplesInconclusive { plane_dim: usize },
}

/// Milnor sequence, top entry first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MilnorSequence {
    values: Vec<u64>,
}

impl MilnorSequence {
    pub fn new(values: Vec<u64>) -> Self {
        MilnorSequence { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The ordinary Milnor number `μ^(n+1)`.
    pub fn milnor_number(&self) -> u64 {
        self.values[0]
    }

    /// `μ^(i)`.
    pub fn get(&self, i: usize) -> Option<u64> {
        let len = self.values.len();
        (i < len).then(|| self.values[len - 1 - i])
    }

    pub fn is_zero_sequence(&self) -> bool {
        self.values[0] == 0
    }

    /// The tail `(μ^(k), …, μ^(0))`.
    pub fn tail_from(&self, k: usize) -> MilnorSequence {
        let len = self.values.len();
        MilnorSequence::new(self.values[len - 1 - k..].to_vec())
    }
}

impl fmt::Display for MilnorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        f.write_str(")")
    }
}

pub(crate) fn resolve_cap(cap: DegreeCap, generators: &[Polynomial]) -> u32 {
    match cap {
        DegreeCap::Auto => default_degree_cap(generators),
        DegreeCap::Fixed(c) => c,
    }
}

/// Milnor number as the colength of the Jacobian ideal. Smooth germs
/// (order one) give `0` without a standard basis; the zero germ is
/// reported non-isolated.
pub fn milnor_number(f: &Polynomial, degree_cap: DegreeCap) -> Result<Colength, MilnorError> {
    let Some(order) = f.order_of_vanishing() else {
        return Ok(Colength::NonIsolated);
    };
    if order == 0 {
        return Err(MilnorError::ConstantTermPresent);
    }
    if order == 1 {
        return Ok(Colength::Finite(0));
    }
    let jac: Vec<Polynomial> = f.gradient().into_iter().filter(|g| !g.is_zero()).collect();
    let cap = resolve_cap(degree_cap, &jac);
    let lo = LocalOrder::anti_graded_revlex(f.num_vars());
    Ok(colength(&jac, &lo, cap).expect("jacobian of a nonconstant germ is nonzero"))
}

/// Finite Milnor number or the matching error.
pub(crate) fn finite_milnor(f: &Polynomial, cap: DegreeCap) -> Result<u64, MilnorError> {
    match milnor_number(f, cap)? {
        Colength::Finite(v) => Ok(v),
        Colength::NonIsolated => Err(MilnorError::NonIsolatedInput),
        Colength::Inconclusive { degree_cap } => Err(MilnorError::Inconclusive { degree_cap }),
    }
}

pub fn multiplicity(f: &Polynomial) -> Result<u32, MilnorError> {
    match f.order_of_vanishing() {
        None => Err(MilnorError::ZeroPolynomial),
        Some(0) => Err(MilnorError::ConstantTermPresent),
        Some(m) => Ok(m),
    }
}

/// Every sampled value together with the generic value chosen from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSampling {
    pub samples: Vec<Colength>,
    pub generic: u64,
    pub escalated: bool,
}

/// Samples random `plane_dim`-planes and returns the Milnor numbers of the
/// restrictions. If the first `num_samples` values agree they are the
/// answer; otherwise sampling continues up to `escalation_samples` and the
/// minimum finite value wins (the generic value is the smallest one).
pub fn sample_sections(
    f: &Polynomial,
    plane_dim: usize,
    cfg: &SectionSamplingConfig,
) -> Result<SectionSampling, MilnorError> {
    let n = f.num_vars();
    if plane_dim == 0 || plane_dim > n {
        return Err(MilnorError::InvalidPlaneDimension {
            plane_dim,
            num_vars: n,
        });
    }
    if !f.constant_term().is_zero() {
        return Err(MilnorError::ConstantTermPresent);
    }
    let cfg = cfg.normalized();
    let draw = |k: usize| -> Colength {
        let stream = STREAM_SECTION | ((plane_dim as u64) << 32) | k as u64;
        let mut rng = task_rng(cfg.seed, stream);
        let plane = random_plane(&mut rng, n, plane_dim, cfg.coefficient_height);
        let g = f
            .substitute_linear(&plane)
            .expect("plane matches ambient dimension");
        milnor_number(&g, cfg.degree_cap).expect("restriction keeps the origin")
    };
    let mut samples: Vec<Colength> = (0..cfg.num_samples).map(draw).collect();
    let first = samples[0];
    if first.finite().is_some() && samples.iter().all(|s| *s == first) {
        return Ok(SectionSampling {
            generic: first.finite().unwrap(),
            samples,
            escalated: false,
        });
    }
    samples.extend((cfg.num_samples..cfg.escalation_samples).map(draw));
    let generic = samples
        .iter()
        .filter_map(|s| s.finite())
        .min()
        .ok_or(MilnorError::AllSamplesInconclusive { plane_dim })?;
    Ok(SectionSampling {
        samples,
        generic,
        escalated: true,
    })
}

/// Milnor number of the restriction to a general `plane_dim`-plane.
pub fn generic_section_milnor(
    f: &Polynomial,
    plane_dim: usize,
    cfg: &SectionSamplingConfig,
) -> Result<u64, MilnorError> {
    Ok(sample_sections(f, plane_dim, cfg)?.generic)
}

/// Full Milnor sequence. Smooth germs get `(0, …, 0, 1)`.
pub fn milnor_sequence(
    f: &Polynomial,
    cfg: &SectionSamplingConfig,
) -> Result<MilnorSequence, MilnorError> {
    let n = f.num_vars();
    let m = multiplicity(f)?;
    let top = finite_milnor(f, cfg.degree_cap)?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(top);
    if m == 1 {
        values.resize(n, 0);
        values.push(1);
        return Ok(MilnorSequence::new(values));
    }
    for dim in (2..n).rev() {
        values.push(generic_section_milnor(f, dim, cfg)?);
    }
    if n >= 2 {
        values.push(u64::from(m - 1));
    }
    values.push(1);
    Ok(MilnorSequence::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;
    use alloc::vec;

    fn p(s: &str) -> Polynomial {
        let vars = crate::polynomial::infer_variables(s);
        parse_polynomial(s, &vars).unwrap()
    }

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, &["x", "y", "z"]).unwrap()
    }

    fn mu(f: &Polynomial) -> Colength {
        milnor_number(f, DegreeCap::Auto).unwrap()
    }

    #[test]
    fn milnor_number_examples() {
        assert_eq!(mu(&p3("x^2+y^2+z^2")), Colength::Finite(1));
        assert_eq!(mu(&p("x + y^9")), Colength::Finite(0));
        assert_eq!(mu(&p("t^2+x^2+y^6+3*y^3*z^3+z^6")), Colength::Finite(25));
        assert_eq!(mu(&p("t^2+x^2+(y^3+z^3)^2")), Colength::NonIsolated);
        assert_eq!(
            milnor_number(&p("x^2 + 1"), DegreeCap::Auto),
            Err(MilnorError::ConstantTermPresent)
        );
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&p3("x^4+y^2+z^2")), Ok(2));
        assert_eq!(multiplicity(&p3("x^3+y^3+z^3")), Ok(3));
        assert_eq!(multiplicity(&p("x^5")), Ok(5));
        assert_eq!(
            multiplicity(&Polynomial::zero(2)),
            Err(MilnorError::ZeroPolynomial)
        );
        assert_eq!(
            multiplicity(&p("1 + x")),
            Err(MilnorError::ConstantTermPresent)
        );
    }

    #[test]
    fn section_examples() {
        let cfg = SectionSamplingConfig::default();
        assert_eq!(generic_section_milnor(&p3("x^4+y^2+z^2"), 2, &cfg), Ok(1));
        assert_eq!(generic_section_milnor(&p3("x^3+x*y^2+z^2"), 2, &cfg), Ok(2));
        let f = p3("x^3+x*y^2+z^2");
        assert_eq!(generic_section_milnor(&f, 3, &cfg), Ok(4));
        assert_eq!(
            generic_section_milnor(&f, 4, &cfg),
            Err(MilnorError::InvalidPlaneDimension {
                plane_dim: 4,
                num_vars: 3
            })
        );
    }

    #[test]
    fn sequence_examples() {
        let cfg = SectionSamplingConfig::default();
        let seq = |s: &str| milnor_sequence(&p3(s), &cfg).unwrap().values().to_vec();
        assert_eq!(seq("x^4+y^2+z^2"), vec![3, 1, 1, 1]);
        assert_eq!(seq("x^5+x*y^2+z^2"), vec![6, 2, 1, 1]);
        assert_eq!(seq("x^4+y^3+z^2"), vec![6, 2, 1, 1]);
        assert_eq!(seq("x + y^2"), vec![0, 0, 0, 1]);
        let two = milnor_sequence(&p("x^2+y^2"), &cfg).unwrap();
        assert_eq!(two.values(), &[1, 1, 1]);
        let one = milnor_sequence(&p("x^4"), &cfg).unwrap();
        assert_eq!(one.values(), &[3, 1]);
        assert_eq!(
            milnor_sequence(&p("t^2+x^2+(y^3+z^3)^2"), &cfg),
            Err(MilnorError::NonIsolatedInput)
        );
    }

    #[test]
    fn sequence_accessors() {
        let s = MilnorSequence::new(vec![25, 5, 1, 1, 1]);
        assert_eq!(s.get(4), Some(25));
        assert_eq!(s.get(3), Some(5));
        assert_eq!(s.get(0), Some(1));
        assert_eq!(s.tail_from(3).values(), &[5, 1, 1, 1]);
        assert_eq!(alloc::format!("{}", s), "(25,5,1,1,1)");
    }
}
