//! Seeded random planes through the origin.
//!
//! Every task (a plane dimension and a sample index, or a hyperplane slice)
//! draws from its own ChaCha stream derived from `(seed, task)`, so results
//! do not depend on the order in which tasks are evaluated.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polynomial::{LinearSubstitution, Rational};

/// Stream families; the low 48 bits carry the task coordinates.
pub(crate) const STREAM_SECTION: u64 = 1 << 48;
pub(crate) const STREAM_SLICE: u64 = 2 << 48;

/// Degree cap policy for colength computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeCap {
    /// Twice the sum of the generator degrees, plus four.
    #[default]
    Auto,
    Fixed(u32),
}

/// How "general" planes are realized: random rational matrices, checked for
/// agreement and escalated on disagreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionSamplingConfig {
    pub seed: u64,
    pub num_samples: usize,
    /// Total number of samples once the first `num_samples` disagree.
    pub escalation_samples: usize,
    pub coefficient_height: u32,
    pub degree_cap: DegreeCap,
}

impl Default for SectionSamplingConfig {
    fn default() -> Self {
        SectionSamplingConfig {
            seed: 0,
            num_samples: 3,
            escalation_samples: 7,
            coefficient_height: 100,
            degree_cap: DegreeCap::Auto,
        }
    }
}

impl SectionSamplingConfig {
    pub fn with_seed(seed: u64) -> Self {
        SectionSamplingConfig {
            seed,
            ..Self::default()
        }
    }

    /// Enforces `1 <= num_samples <= escalation_samples` and a positive height.
    pub(crate) fn normalized(&self) -> Self {
        let num_samples = self.num_samples.max(1);
        SectionSamplingConfig {
            num_samples,
            escalation_samples: self.escalation_samples.max(num_samples),
            coefficient_height: self.coefficient_height.max(1),
            ..*self
        }
    }
}

pub(crate) fn task_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws a full-rank `rows × cols` matrix with entries `p/q`,
/// `p ∈ {-H..H}`, `q ∈ {1..H}`.
pub(crate) fn random_plane(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    height: u32,
) -> LinearSubstitution {
    let h = height as i64;
    loop {
        let m: Vec<Vec<Rational>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        let p: i64 = rng.gen_range(-h..=h);
                        let q: i64 = rng.gen_range(1..=h);
                        Rational::new(BigInt::from(p), BigInt::from(q))
                    })
                    .collect()
            })
            .collect();
        let sub = LinearSubstitution::new(m, cols);
        if sub.rank() == cols {
            return primitive_columns(&sub);
        }
    }
}

/// Rescales every column to a primitive integer vector. The column span,
/// and so the plane, is unchanged; integer entries keep the substituted
/// polynomials smaller.
pub(crate) fn primitive_columns(sub: &LinearSubstitution) -> LinearSubstitution {
    let rows = sub.rows();
    let cols = sub.num_source_vars();
    let mut out: Vec<Vec<Rational>> = rows.to_vec();
    for j in 0..cols {
        let den = rows
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r[j].denom()));
        let ints: Vec<BigInt> = rows
            .iter()
            .map(|r| (&r[j] * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for (row, v) in out.iter_mut().zip(&ints) {
            row[j] = Rational::from_integer(if g.is_zero() { v.clone() } else { v / &g });
        }
        // keep the sign of the first nonzero entry positive for readability
        if let Some(first) = out.iter().map(|r| r[j].clone()).find(|v| !v.is_zero()) {
            if first.is_negative() {
                for row in out.iter_mut() {
                    row[j] = -row[j].clone();
                }
            }
        }
    }
    LinearSubstitution::new(out, cols)
}
