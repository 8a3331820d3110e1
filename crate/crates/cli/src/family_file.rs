//! TOML family files.
//!
//! ```toml
//! variables  = ["t", "x", "y", "z"]
//! parameter  = "a"
//! polynomial = "t^2 + x^2 + y^6 + a*y^3*z^3 + z^6"
//! sections   = [["0", "0", "0", "0"]]   # coordinates are polynomials in the parameter
//! samples    = [-1, 0, 1, 3]            # integers or "p/q" strings; optional
//! excluded   = [-2, 2]                  # optional
//! ```

use equising_core::family::{FamilyError, FamilySpec};
use equising_core::polynomial::{
    parse_polynomial, parse_rational, ParseError, Polynomial, Rational,
};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum FamilyFileError {
    #[error("invalid family file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("field `{field}`: {source}")]
    Field { field: String, source: ParseError },
    #[error("variable names must be distinct and must not include the parameter `{0}`")]
    Variables(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn text(&self) -> String {
        match self {
            Number::Int(v) => v.to_string(),
            Number::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    variables: Vec<String>,
    parameter: String,
    polynomial: String,
    sections: Vec<Vec<Number>>,
    #[serde(default)]
    samples: Vec<Number>,
    #[serde(default)]
    excluded: Vec<Number>,
}

/// A parsed family with the names it was written in.
#[derive(Debug, Clone)]
pub struct FamilyFile {
    pub variables: Vec<String>,
    pub parameter: String,
    pub spec: FamilySpec,
}

fn field<T>(name: impl Into<String>, r: Result<T, ParseError>) -> Result<T, FamilyFileError> {
    r.map_err(|source| FamilyFileError::Field {
        field: name.into(),
        source,
    })
}

fn rationals(name: &str, list: &[Number]) -> Result<Vec<Rational>, FamilyFileError> {
    list.iter()
        .enumerate()
        .map(|(i, v)| field(format!("{}[{}]", name, i), parse_rational(&v.text())))
        .collect()
}

pub fn parse_family(text: &str) -> Result<FamilyFile, FamilyFileError> {
    let raw: RawFamily = toml::from_str(text)?;
    let mut all = raw.variables.clone();
    all.push(raw.parameter.clone());
    let mut sorted = all.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != all.len() {
        return Err(FamilyFileError::Variables(raw.parameter));
    }
    let polynomial = field("polynomial", parse_polynomial(&raw.polynomial, &all))?;
    let param = [raw.parameter.as_str()];
    let sections = raw
        .sections
        .iter()
        .enumerate()
        .map(|(i, coords)| {
            coords
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    field(
                        format!("sections[{}][{}]", i, j),
                        parse_polynomial(&c.text(), &param),
                    )
                })
                .collect::<Result<Vec<Polynomial>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let samples = rationals("samples", &raw.samples)?;
    let excluded = rationals("excluded", &raw.excluded)?;
    let spec = FamilySpec::new(polynomial, sections, samples, excluded)?;
    Ok(FamilyFile {
        variables: raw.variables,
        parameter: raw.parameter,
        spec,
    })
}
