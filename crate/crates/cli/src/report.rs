//! Report structures shared by the JSON and text outputs. Every number is
//! an integer or a rational written as `"p/q"`.

use std::fmt::Write as _;

use equising_core::family::{FamilyVerdict, FiberOutcome, SectionInvariant, StratumKey};
use equising_core::milnor::MilnorSequence;
use equising_core::polynomial::Rational;
use serde::Serialize;

pub fn rational_text(r: &Rational) -> String {
    r.to_string()
}

fn values(s: &MilnorSequence) -> Vec<u64> {
    s.values().to_vec()
}

fn sequence_text(s: &[u64]) -> String {
    let inner: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

fn multiset_text(m: &[Vec<u64>]) -> String {
    let inner: Vec<String> = m.iter().map(|s| sequence_text(s)).collect();
    format!("{{{}}}", inner.join(", "))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WeightsReport {
    pub weights: Vec<String>,
    /// `Π (1/w_i - 1)`, for isolated germs.
    pub mu: Option<u64>,
}

/// Output of `milnor`, `sequence` and `classify`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GermReport {
    pub polynomial: String,
    pub variables: Vec<String>,
    /// `finite`, `non_isolated` or `inconclusive`.
    pub status: &'static str,
    pub mu: Option<u64>,
    pub multiplicity: Option<u32>,
    pub smooth: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasihomogeneous: Option<WeightsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GermReport {
    pub fn new(polynomial: String, variables: Vec<String>) -> Self {
        GermReport {
            polynomial,
            variables,
            status: "finite",
            mu: None,
            multiplicity: None,
            smooth: false,
            degree_cap: None,
            quasihomogeneous: None,
            sequence: None,
            class: None,
            corank: None,
            error: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "polynomial: {}", self.polynomial);
        let _ = writeln!(out, "variables: {}", self.variables.join(", "));
        match self.status {
            "non_isolated" => out.push_str("mu: infinite (non-isolated singularity)\n"),
            "inconclusive" => {
                let _ = writeln!(
                    out,
                    "mu: inconclusive (degree cap {})",
                    self.degree_cap.unwrap_or(0)
                );
            }
            _ => {}
        }
        if let Some(mu) = self.mu {
            let _ = writeln!(
                out,
                "mu: {}{}",
                mu,
                if self.smooth { " (smooth)" } else { "" }
            );
        }
        if let Some(m) = self.multiplicity {
            let _ = writeln!(out, "multiplicity: {}", m);
        }
        if let Some(q) = &self.quasihomogeneous {
            let _ = write!(out, "quasihomogeneous: weights ({})", q.weights.join(", "));
            let _ = match q.mu {
                Some(m) => writeln!(out, ", product formula {}", m),
                None => writeln!(out),
            };
        }
        if let Some(s) = &self.sequence {
            let _ = writeln!(out, "sequence: {}", sequence_text(s));
        }
        if let Some(c) = &self.class {
            let _ = writeln!(out, "class: {}", c);
        }
        if let Some(c) = self.corank {
            let _ = writeln!(out, "corank: {}", c);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {}", e);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SectionJson {
    pub section: usize,
    pub point: Vec<String>,
    pub sequence: Option<Vec<u64>>,
    pub non_isolated: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FiberJson {
    pub parameter: String,
    pub milnor_sum: Option<u64>,
    pub sections: Vec<SectionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl From<&FiberOutcome> for FiberJson {
    fn from(f: &FiberOutcome) -> Self {
        match f {
            FiberOutcome::Report(r) => FiberJson {
                parameter: rational_text(&r.parameter),
                milnor_sum: r.milnor_sum,
                sections: r
                    .per_section
                    .iter()
                    .map(|s| SectionJson {
                        section: s.section,
                        point: s.point.iter().map(rational_text).collect(),
                        sequence: match &s.invariant {
                            SectionInvariant::Sequence(q) => Some(values(q)),
                            SectionInvariant::NonIsolated => None,
                        },
                        non_isolated: s.invariant == SectionInvariant::NonIsolated,
                    })
                    .collect(),
                error: None,
            },
            FiberOutcome::Failed { parameter, error } => FiberJson {
                parameter: rational_text(parameter),
                milnor_sum: None,
                sections: Vec::new(),
                error: Some(error.to_string()),
            },
        }
    }
}

impl FiberJson {
    fn text(&self) -> String {
        if let Some(e) = &self.error {
            return format!("a = {}: failed ({})", self.parameter, e);
        }
        let parts: Vec<String> = self
            .sections
            .iter()
            .map(|s| {
                let inv = s
                    .sequence
                    .as_deref()
                    .map_or_else(|| "non-isolated".to_string(), sequence_text);
                format!("({}) {}", s.point.join(", "), inv)
            })
            .collect();
        let sum = self
            .milnor_sum
            .map_or_else(|| "-".to_string(), |s| s.to_string());
        format!(
            "a = {}: {} [milnor sum {}]",
            self.parameter,
            parts.join("; "),
            sum
        )
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StratumJson {
    pub multiset: Option<Vec<Vec<u64>>>,
    pub degenerate: bool,
    pub parameters: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpecialJson {
    pub parameter: String,
    pub milnor_sum: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditJson {
    pub passed: bool,
    pub minimum: Option<u64>,
    pub special: Vec<SpecialJson>,
    pub violations: Vec<String>,
}

/// Output of `family`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FamilyReport {
    pub verdict: String,
    pub common_multiset: Option<Vec<Vec<u64>>>,
    pub witnesses: Vec<FiberJson>,
    pub strata: Vec<StratumJson>,
    pub fibers: Vec<FiberJson>,
    pub audit: AuditJson,
    pub notes: Vec<String>,
}

impl From<&FamilyVerdict> for FamilyReport {
    fn from(v: &FamilyVerdict) -> Self {
        let multiset = |m: &[MilnorSequence]| m.iter().map(values).collect::<Vec<_>>();
        FamilyReport {
            verdict: v.verdict.to_string(),
            common_multiset: v.common_multiset.as_deref().map(multiset),
            witnesses: v.witnesses.iter().map(FiberJson::from).collect(),
            strata: v
                .strata
                .iter()
                .map(|s| StratumJson {
                    multiset: match &s.key {
                        StratumKey::Multiset(m) => Some(multiset(m)),
                        StratumKey::Degenerate => None,
                    },
                    degenerate: s.key == StratumKey::Degenerate,
                    parameters: s.parameters.iter().map(rational_text).collect(),
                })
                .collect(),
            fibers: v.fibers.iter().map(FiberJson::from).collect(),
            audit: AuditJson {
                passed: v.audit.passed,
                minimum: v.audit.minimum,
                special: v
                    .audit
                    .special
                    .iter()
                    .map(|(p, s)| SpecialJson {
                        parameter: rational_text(p),
                        milnor_sum: *s,
                    })
                    .collect(),
                violations: v.audit.violations.iter().map(rational_text).collect(),
            },
            notes: v.notes.iter().map(|n| n.to_string()).collect(),
        }
    }
}

impl FamilyReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Some(m) = &self.common_multiset {
            let _ = writeln!(out, "common multiset: {}", multiset_text(m));
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness: {}", w.text());
        }
        out.push_str("strata:\n");
        for s in &self.strata {
            let key = s
                .multiset
                .as_deref()
                .map_or_else(|| "degenerate".to_string(), multiset_text);
            let _ = writeln!(out, "  {} <- a in {{{}}}", key, s.parameters.join(", "));
        }
        out.push_str("fibers:\n");
        for f in &self.fibers {
            let _ = writeln!(out, "  {}", f.text());
        }
        let _ = writeln!(
            out,
            "semicontinuity audit: {}{}",
            if self.audit.passed {
                "passed"
            } else {
                "FAILED"
            },
            self.audit
                .minimum
                .map_or_else(String::new, |m| format!(" (minimum milnor sum {})", m))
        );
        for n in &self.notes {
            let _ = writeln!(out, "note: {}", n);
        }
        out
    }
}
