//! Command-line front end for `equising-core`: the family file format, JSON
//! and text reports, and the embedded regression corpus.

pub mod commands;
pub mod corpus;
pub mod family_file;
pub mod report;

use equising_core::milnor::{DegreeCap, SectionSamplingConfig};

/// Options shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub degree_cap: Option<u32>,
    pub json: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 3,
            degree_cap: None,
            json: false,
        }
    }
}

impl RunConfig {
    pub fn sampling(&self) -> SectionSamplingConfig {
        let base = SectionSamplingConfig::with_seed(self.seed);
        SectionSamplingConfig {
            num_samples: self.samples,
            escalation_samples: base.escalation_samples.max(self.samples),
            degree_cap: self.degree_cap.map_or(DegreeCap::Auto, DegreeCap::Fixed),
            ..base
        }
    }

    pub fn degree_cap(&self) -> DegreeCap {
        self.degree_cap.map_or(DegreeCap::Auto, DegreeCap::Fixed)
    }
}
