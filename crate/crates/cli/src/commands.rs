//! The subcommands as functions from input text to a rendered report and
//! an exit code.

use std::path::Path;

use equising_core::classify::{classify, ClassifyError};
use equising_core::family::{whitney_check, FamilyError, Verdict};
use equising_core::local::Colength;
use equising_core::milnor::{
    detect_quasihomogeneous, milnor_number, milnor_sequence, multiplicity, quasihomogeneous_milnor,
    MilnorError,
};
use equising_core::polynomial::{infer_variables, parse_polynomial, ParseError, Polynomial};

use crate::family_file::{parse_family, FamilyFileError};
use crate::report::{rational_text, FamilyReport, GermReport, WeightsReport};
use crate::RunConfig;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const NON_ISOLATED: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
    pub const NOT_EQUISINGULAR: i32 = 4;
    pub const DEGENERATE: i32 = 5;
    pub const CORPUS_MISMATCH: i32 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{error}")]
    Parse { text: String, error: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {error}")]
    FamilyFile {
        path: String,
        error: Box<FamilyFileError>,
    },
    #[error("{path}: {error}")]
    Io { path: String, error: std::io::Error },
}

impl CliError {
    /// Message for stderr; parse errors point at the offending position.
    pub fn diagnostic(&self) -> String {
        match self {
            CliError::Parse { text, error } => {
                let position = match error {
                    ParseError::Syntax { position, .. }
                    | ParseError::UnknownVariable { position, .. } => *position,
                };
                let column = text[..position.min(text.len())].chars().count();
                format!("error: {}\n  {}\n  {}^", error, text, " ".repeat(column))
            }
            other => format!("error: {}", other),
        }
    }
}

/// A rendered command result.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    pub code: i32,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn germ_output(report: GermReport, code: i32) -> Output {
    Output {
        json: serde_json::to_value(&report).expect("reports serialize"),
        text: report.text(),
        code,
    }
}

/// Parses `text` with the given variable names, or with the identifiers of
/// `text` in order of first appearance.
pub fn parse_input(
    text: &str,
    vars: Option<&[String]>,
) -> Result<(Polynomial, Vec<String>), CliError> {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => infer_variables(text),
    };
    if names.is_empty() {
        return Err(CliError::Usage("the polynomial has no variables".into()));
    }
    let f = parse_polynomial(text, &names).map_err(|error| CliError::Parse {
        text: text.to_string(),
        error,
    })?;
    if multiplicity(&f) == Err(MilnorError::ConstantTermPresent) {
        return Err(CliError::Usage(
            "the germ must vanish at the origin (nonzero constant term)".into(),
        ));
    }
    Ok((f, names))
}

fn base_report(f: &Polynomial, names: &[String]) -> GermReport {
    let mut r = GermReport::new(f.display(names).to_string(), names.to_vec());
    r.multiplicity = multiplicity(f).ok();
    r.smooth = r.multiplicity == Some(1);
    r
}

fn milnor_report(f: &Polynomial, names: &[String], cfg: &RunConfig) -> (GermReport, i32) {
    let mut r = base_report(f, names);
    let code = match milnor_number(f, cfg.degree_cap()).expect("constant term checked") {
        Colength::Finite(mu) => {
            r.mu = Some(mu);
            exit::OK
        }
        Colength::NonIsolated => {
            r.status = "non_isolated";
            exit::NON_ISOLATED
        }
        Colength::Inconclusive { degree_cap } => {
            r.status = "inconclusive";
            r.degree_cap = Some(degree_cap);
            exit::INCONCLUSIVE
        }
    };
    r.quasihomogeneous = detect_quasihomogeneous(f).map(|w| WeightsReport {
        weights: w.weights.iter().map(rational_text).collect(),
        // the product formula only holds for isolated singularities
        mu: if code == exit::OK {
            quasihomogeneous_milnor(&w).ok()
        } else {
            None
        },
    });
    (r, code)
}

/// Records a Milnor-number failure on the report and returns its exit code.
fn milnor_failure(r: &mut GermReport, e: &MilnorError) -> i32 {
    match e {
        MilnorError::NonIsolatedInput | MilnorError::ZeroPolynomial => {
            r.status = "non_isolated";
            r.mu = None;
            exit::NON_ISOLATED
        }
        MilnorError::Inconclusive { degree_cap } => {
            r.status = "inconclusive";
            r.mu = None;
            r.degree_cap = Some(*degree_cap);
            exit::INCONCLUSIVE
        }
        other => {
            r.status = "inconclusive";
            r.error = Some(other.to_string());
            exit::INCONCLUSIVE
        }
    }
}

pub fn cmd_milnor(
    text: &str,
    vars: Option<&[String]>,
    cfg: &RunConfig,
) -> Result<Output, CliError> {
    let (f, names) = parse_input(text, vars)?;
    let (r, code) = milnor_report(&f, &names, cfg);
    Ok(germ_output(r, code))
}

pub fn cmd_sequence(
    text: &str,
    vars: Option<&[String]>,
    cfg: &RunConfig,
) -> Result<Output, CliError> {
    let (f, names) = parse_input(text, vars)?;
    let (mut r, code) = milnor_report(&f, &names, cfg);
    if code != exit::OK {
        return Ok(germ_output(r, code));
    }
    let code = match milnor_sequence(&f, &cfg.sampling()) {
        Ok(s) => {
            r.sequence = Some(s.values().to_vec());
            exit::OK
        }
        Err(e) => milnor_failure(&mut r, &e),
    };
    Ok(germ_output(r, code))
}

pub fn cmd_classify(
    text: &str,
    vars: Option<&[String]>,
    cfg: &RunConfig,
) -> Result<Output, CliError> {
    let (f, names) = parse_input(text, vars)?;
    if !(3..=4).contains(&names.len()) {
        return Err(CliError::Usage(format!(
            "classify needs a surface germ in 3 variables or a threefold germ in 4, got {}",
            names.len()
        )));
    }
    let mut r = base_report(&f, &names);
    let code = match classify(&f, &cfg.sampling()) {
        Ok(c) => {
            r.mu = Some(c.milnor);
            r.sequence = Some(c.sequence.values().to_vec());
            r.class = Some(c.kind.to_string());
            r.corank = Some(c.corank);
            exit::OK
        }
        Err(ClassifyError::NonIsolatedInput) => {
            r.status = "non_isolated";
            exit::NON_ISOLATED
        }
        Err(ClassifyError::Milnor(e)) => milnor_failure(&mut r, &e),
        Err(e) => {
            r.status = "inconclusive";
            r.error = Some(e.to_string());
            exit::INCONCLUSIVE
        }
    };
    Ok(germ_output(r, code))
}

pub fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::EquisingularEvidence => exit::OK,
        Verdict::NotEquisingular => exit::NOT_EQUISINGULAR,
        Verdict::Degenerate => exit::DEGENERATE,
    }
}

/// `family` on the text of a family file; `origin` names it in errors.
pub fn family_output(text: &str, origin: &str, cfg: &RunConfig) -> Result<Output, CliError> {
    let file_error = |error: FamilyFileError| CliError::FamilyFile {
        path: origin.to_string(),
        error: Box::new(error),
    };
    let family = parse_family(text).map_err(file_error)?;
    let verdict = whitney_check(&family.spec, &cfg.sampling())
        .map_err(|e: FamilyError| file_error(e.into()))?;
    let report = FamilyReport::from(&verdict);
    Ok(Output {
        json: serde_json::to_value(&report).expect("reports serialize"),
        text: report.text(),
        code: verdict_code(verdict.verdict),
    })
}

pub fn cmd_family(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|error| CliError::Io {
        path: origin.clone(),
        error,
    })?;
    family_output(&text, &origin, cfg)
}
