//! The embedded regression corpus: germs with their expected invariants and
//! family files with their expected verdicts.
//!
//! Every germ with finite μ is also checked against the Macaulay oracle, the
//! weighted-homogeneous product formula when it applies, and the splitting
//! lemma (the residual has the same Milnor number).

use std::fmt::Write as _;

use equising_core::classify::{classify, splitting_reduce};
use equising_core::local::{default_degree_cap, macaulay_colength_oracle, Colength};
use equising_core::milnor::{
    detect_quasihomogeneous, milnor_number, milnor_sequence, quasihomogeneous_milnor,
};
use equising_core::polynomial::Polynomial;
use serde::{Deserialize, Serialize};

use crate::commands::{exit, family_output, parse_input, CliError};
use crate::RunConfig;

pub const GERMS: &str = include_str!("../corpus/germs.toml");
pub const FAMILY_INDEX: &str = include_str!("../corpus/families.toml");

/// Family files by name, as listed in `families.toml`.
pub const FAMILY_FILES: &[(&str, &str)] = &[
    (
        "cross_term.toml",
        include_str!("../corpus/families/cross_term.toml"),
    ),
    (
        "cross_term_with_degenerations.toml",
        include_str!("../corpus/families/cross_term_with_degenerations.toml"),
    ),
    (
        "cross_term_affine_chart.toml",
        include_str!("../corpus/families/cross_term_affine_chart.toml"),
    ),
    (
        "cusp_to_node.toml",
        include_str!("../corpus/families/cusp_to_node.toml"),
    ),
    (
        "moving_cusp.toml",
        include_str!("../corpus/families/moving_cusp.toml"),
    ),
    (
        "two_nodes.toml",
        include_str!("../corpus/families/two_nodes.toml"),
    ),
];

pub fn family_file(name: &str) -> Option<&'static str> {
    FAMILY_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ExpectedMu {
    Finite(u64),
    /// Only `"non_isolated"` is accepted.
    Tag(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermEntry {
    pub name: String,
    pub polynomial: String,
    pub variables: Option<Vec<String>>,
    pub mu: ExpectedMu,
    pub sequence: Option<Vec<u64>>,
    pub class: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub file: String,
    pub verdict: String,
    pub strata: usize,
}

#[derive(Deserialize)]
struct GermTable {
    germ: Vec<GermEntry>,
}

#[derive(Deserialize)]
struct FamilyTable {
    family: Vec<FamilyEntry>,
}

pub fn germs() -> Vec<GermEntry> {
    toml::from_str::<GermTable>(GERMS)
        .expect("embedded germ corpus parses")
        .germ
}

pub fn families() -> Vec<FamilyEntry> {
    toml::from_str::<FamilyTable>(FAMILY_INDEX)
        .expect("embedded family index parses")
        .family
}

/// What was computed for one germ. `mismatches` is empty when every check
/// agreed with the expectation.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GermOutcome {
    pub name: String,
    pub polynomial: String,
    pub mu: Option<u64>,
    pub non_isolated: bool,
    pub oracle: Option<u64>,
    pub quasihomogeneous_mu: Option<u64>,
    pub residual_mu: Option<u64>,
    pub sequence: Option<Vec<u64>>,
    pub class: Option<String>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FamilyOutcome {
    pub file: String,
    pub verdict: Option<String>,
    pub strata: Option<usize>,
    pub audit_passed: Option<bool>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CorpusReport {
    pub germs: Vec<GermOutcome>,
    pub families: Vec<FamilyOutcome>,
    pub passed: bool,
}

fn colength_text(c: &Colength) -> String {
    match c {
        Colength::Finite(v) => v.to_string(),
        Colength::NonIsolated => "non-isolated".into(),
        Colength::Inconclusive { degree_cap } => {
            format!("inconclusive at degree cap {}", degree_cap)
        }
    }
}

fn finite_checks(f: &Polynomial, mu: u64, out: &mut GermOutcome) {
    let jac: Vec<Polynomial> = f.gradient().into_iter().filter(|g| !g.is_zero()).collect();
    if !jac.is_empty() {
        match macaulay_colength_oracle(&jac, default_degree_cap(&jac)) {
            Ok(Colength::Finite(v)) => {
                out.oracle = Some(v);
                if v != mu {
                    out.mismatches.push(format!(
                        "oracle colength {} but standard basis gives {}",
                        v, mu
                    ));
                }
            }
            Ok(other) => out
                .mismatches
                .push(format!("oracle colength {}", colength_text(&other))),
            Err(e) => out.mismatches.push(format!("oracle failed: {}", e)),
        }
    }
    if !jac.is_empty() && f.order_of_vanishing().unwrap_or(0) >= 2 {
        match splitting_reduce(f, mu as u32 + 2) {
            Ok(split) => {
                let residual = match &split.residual {
                    None => Ok(Colength::Finite(if split.quadratic_rank > 0 {
                        1
                    } else {
                        0
                    })),
                    Some(r) => milnor_number(r, Default::default()).map_err(|e| e.to_string()),
                };
                match residual {
                    Ok(Colength::Finite(v)) => {
                        out.residual_mu = Some(v);
                        if v != mu {
                            out.mismatches
                                .push(format!("splitting residual has mu {} instead of {}", v, mu));
                        }
                    }
                    Ok(other) => out
                        .mismatches
                        .push(format!("splitting residual mu {}", colength_text(&other))),
                    Err(e) => out.mismatches.push(format!("splitting residual: {}", e)),
                }
            }
            Err(e) => out.mismatches.push(format!("splitting failed: {}", e)),
        }
    }
    if let Some(w) = detect_quasihomogeneous(f) {
        match quasihomogeneous_milnor(&w) {
            Ok(v) => {
                out.quasihomogeneous_mu = Some(v);
                if v != mu {
                    out.mismatches.push(format!(
                        "weight formula gives {} but standard basis gives {}",
                        v, mu
                    ));
                }
            }
            Err(e) => out.mismatches.push(format!("weight formula failed: {}", e)),
        }
    }
}

pub fn run_germ(entry: &GermEntry, cfg: &RunConfig) -> Result<GermOutcome, CliError> {
    let (f, names) = parse_input(&entry.polynomial, entry.variables.as_deref())?;
    let mut out = GermOutcome {
        name: entry.name.clone(),
        polynomial: f.display(&names).to_string(),
        mu: None,
        non_isolated: false,
        oracle: None,
        quasihomogeneous_mu: None,
        residual_mu: None,
        sequence: None,
        class: None,
        mismatches: Vec::new(),
    };
    let computed = milnor_number(&f, cfg.degree_cap()).expect("constant term checked");
    match (&entry.mu, &computed) {
        (ExpectedMu::Finite(e), Colength::Finite(v)) if e == v => {}
        (ExpectedMu::Tag(t), Colength::NonIsolated) if t == "non_isolated" => {}
        (expected, got) => {
            let want = match expected {
                ExpectedMu::Finite(v) => v.to_string(),
                ExpectedMu::Tag(t) => t.clone(),
            };
            out.mismatches
                .push(format!("expected mu {}, got {}", want, colength_text(got)));
        }
    }
    match computed {
        Colength::Finite(mu) => {
            out.mu = Some(mu);
            finite_checks(&f, mu, &mut out);
        }
        Colength::NonIsolated => out.non_isolated = true,
        Colength::Inconclusive { .. } => {}
    }
    if let Some(expected) = &entry.sequence {
        match milnor_sequence(&f, &cfg.sampling()) {
            Ok(s) => {
                if s.values() != expected.as_slice() {
                    out.mismatches.push(format!(
                        "expected sequence {:?}, got {:?}",
                        expected,
                        s.values()
                    ));
                }
                out.sequence = Some(s.values().to_vec());
            }
            Err(e) => out.mismatches.push(format!("sequence failed: {}", e)),
        }
    }
    if let Some(expected) = &entry.class {
        match classify(&f, &cfg.sampling()) {
            Ok(c) => {
                let got = c.kind.to_string();
                if &got != expected {
                    out.mismatches
                        .push(format!("expected class {}, got {}", expected, got));
                }
                if out.sequence.is_none() {
                    out.sequence = Some(c.sequence.values().to_vec());
                }
                out.class = Some(got);
            }
            Err(e) => out.mismatches.push(format!("classify failed: {}", e)),
        }
    }
    Ok(out)
}

pub fn run_family(entry: &FamilyEntry, cfg: &RunConfig) -> FamilyOutcome {
    let mut out = FamilyOutcome {
        file: entry.file.clone(),
        verdict: None,
        strata: None,
        audit_passed: None,
        mismatches: Vec::new(),
    };
    let Some(text) = family_file(&entry.file) else {
        out.mismatches.push("family file is not embedded".into());
        return out;
    };
    match family_output(text, &entry.file, cfg) {
        Ok(o) => {
            let verdict = o.json["verdict"].as_str().unwrap_or_default().to_string();
            let strata = o.json["strata"].as_array().map_or(0, Vec::len);
            let audit = o.json["audit"]["passed"].as_bool().unwrap_or(false);
            if verdict != entry.verdict {
                out.mismatches.push(format!(
                    "expected verdict {}, got {}",
                    entry.verdict, verdict
                ));
            }
            if strata != entry.strata {
                out.mismatches
                    .push(format!("expected {} strata, got {}", entry.strata, strata));
            }
            if !audit {
                out.mismatches.push("semicontinuity audit failed".into());
            }
            out.verdict = Some(verdict);
            out.strata = Some(strata);
            out.audit_passed = Some(audit);
        }
        Err(e) => out.mismatches.push(e.to_string()),
    }
    out
}

pub fn run_corpus(cfg: &RunConfig) -> Result<CorpusReport, CliError> {
    let germs = germs()
        .iter()
        .map(|g| run_germ(g, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let families: Vec<FamilyOutcome> = families().iter().map(|f| run_family(f, cfg)).collect();
    let passed = germs.iter().all(|g| g.mismatches.is_empty())
        && families.iter().all(|f| f.mismatches.is_empty());
    Ok(CorpusReport {
        germs,
        families,
        passed,
    })
}

impl CorpusReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for g in &self.germs {
            let mu = match (g.mu, g.non_isolated) {
                (Some(m), _) => m.to_string(),
                (None, true) => "non-isolated".into(),
                _ => "-".into(),
            };
            let mut extra = String::new();
            if let Some(s) = &g.sequence {
                let inner: Vec<String> = s.iter().map(u64::to_string).collect();
                let _ = write!(extra, " sequence ({})", inner.join(","));
            }
            if let Some(c) = &g.class {
                let _ = write!(extra, " class {}", c);
            }
            let status = if g.mismatches.is_empty() {
                "ok"
            } else {
                "MISMATCH"
            };
            let _ = writeln!(out, "{:8} {}: mu {}{}", status, g.name, mu, extra);
            for m in &g.mismatches {
                let _ = writeln!(out, "           {}", m);
            }
        }
        for f in &self.families {
            let status = if f.mismatches.is_empty() {
                "ok"
            } else {
                "MISMATCH"
            };
            let verdict = f.verdict.as_deref().unwrap_or("-");
            let strata = f.strata.map_or_else(|| "-".to_string(), |s| s.to_string());
            let _ = writeln!(
                out,
                "{:8} family {}: {} with {} strata",
                status, f.file, verdict, strata
            );
            for m in &f.mismatches {
                let _ = writeln!(out, "           {}", m);
            }
        }
        let failed = self
            .germs
            .iter()
            .filter(|g| !g.mismatches.is_empty())
            .count()
            + self
                .families
                .iter()
                .filter(|f| !f.mismatches.is_empty())
                .count();
        let _ = writeln!(
            out,
            "{} germs, {} families, {} mismatches",
            self.germs.len(),
            self.families.len(),
            failed
        );
        out
    }

    pub fn code(&self) -> i32 {
        if self.passed {
            exit::OK
        } else {
            exit::CORPUS_MISMATCH
        }
    }
}
