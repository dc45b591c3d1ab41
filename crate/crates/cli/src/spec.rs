//! Algebra spec and generator-set files.
//!
//! An algebra is either a builtin descriptor (`{"kind": "Dn", "alphas":
//! ["1","0"]}` and friends) or a raw structure-constant table. All rationals
//! in files are strings `"p"` or `"p/q"` — never floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

use tracepoly_core::algebra::{AlgebraError, TraceAlgebra};
use tracepoly_core::rat::{parse_rat, Rat};

#[derive(Debug)]
pub enum SpecError {
    Json(serde_json::Error),
    Rational(String),
    Algebra(AlgebraError),
    Shape(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Json(e) => write!(f, "malformed JSON: {e}"),
            SpecError::Rational(e) => write!(f, "{e}"),
            SpecError::Algebra(e) => write!(f, "invalid algebra: {e}"),
            SpecError::Shape(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpecError {}

impl From<AlgebraError> for SpecError {
    fn from(e: AlgebraError) -> Self {
        SpecError::Algebra(e)
    }
}

/// A builtin descriptor or a raw structure-constant table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Builtin(BuiltinSpec),
    Raw(RawSpec),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BuiltinSpec {
    /// Full matrix algebra with trace `alpha · (usual trace)`.
    Mn { n: usize, alpha: String },
    /// Diagonal matrices with per-entry trace weights.
    Dn { alphas: Vec<String> },
    /// Unit plus square-zero element, `tr(1) = alpha`, `tr(u) = beta`.
    C2 { alpha: String, beta: String },
    /// Upper-triangular 2×2 matrices with the zero trace.
    UT2 {},
    /// Block-diagonal sum of two specs.
    #[serde(rename = "direct_sum")]
    DirectSum { summands: Vec<AlgebraSpec> },
}

/// Raw structure constants: `mult[i][j][k]` is the coefficient of `b_k` in
/// `b_i · b_j`. Invariants are validated on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawSpec {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<String>,
    pub trace: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

pub fn parse_algebra_spec(text: &str) -> Result<AlgebraSpec, SpecError> {
    serde_json::from_str(text).map_err(SpecError::Json)
}

fn rats(strings: &[String]) -> Result<Vec<Rat>, SpecError> {
    strings
        .iter()
        .map(|s| parse_rat(s).map_err(SpecError::Rational))
        .collect()
}

/// Builds the algebra an [`AlgebraSpec`] describes, validating the
/// structure-constant invariants.
pub fn build_algebra(spec: &AlgebraSpec) -> Result<TraceAlgebra, SpecError> {
    match spec {
        AlgebraSpec::Builtin(BuiltinSpec::Mn { n, alpha }) => {
            let alpha = parse_rat(alpha).map_err(SpecError::Rational)?;
            Ok(TraceAlgebra::full_matrix(*n, &alpha)?)
        }
        AlgebraSpec::Builtin(BuiltinSpec::Dn { alphas }) => {
            Ok(TraceAlgebra::diagonal(&rats(alphas)?)?)
        }
        AlgebraSpec::Builtin(BuiltinSpec::C2 { alpha, beta }) => {
            let alpha = parse_rat(alpha).map_err(SpecError::Rational)?;
            let beta = parse_rat(beta).map_err(SpecError::Rational)?;
            Ok(TraceAlgebra::c2(&alpha, &beta))
        }
        AlgebraSpec::Builtin(BuiltinSpec::UT2 {}) => Ok(TraceAlgebra::ut2()),
        AlgebraSpec::Builtin(BuiltinSpec::DirectSum { summands }) => {
            let mut acc = TraceAlgebra::trivial();
            for s in summands {
                acc = TraceAlgebra::direct_sum(&acc, &build_algebra(s)?);
            }
            Ok(acc)
        }
        AlgebraSpec::Raw(raw) => {
            let labels = match &raw.labels {
                Some(l) => {
                    if l.len() != raw.dim {
                        return Err(SpecError::Shape(format!(
                            "{} labels for dimension {}",
                            l.len(),
                            raw.dim
                        )));
                    }
                    l.clone()
                }
                None => (0..raw.dim).map(|i| format!("b{i}")).collect(),
            };
            if raw.mult.len() != raw.dim {
                return Err(SpecError::Shape(format!(
                    "mult has {} rows for dimension {}",
                    raw.mult.len(),
                    raw.dim
                )));
            }
            let mut mult = Vec::with_capacity(raw.dim * raw.dim * raw.dim);
            for row in &raw.mult {
                if row.len() != raw.dim {
                    return Err(SpecError::Shape(String::from("ragged mult table")));
                }
                for cell in row {
                    if cell.len() != raw.dim {
                        return Err(SpecError::Shape(String::from("ragged mult table")));
                    }
                    mult.extend(rats(cell)?);
                }
            }
            Ok(TraceAlgebra::new(
                labels,
                mult,
                rats(&raw.unit)?,
                rats(&raw.trace)?,
            )?)
        }
    }
}

/// One named generator in a generator-set file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub polynomial: String,
}

pub fn parse_generator_file(text: &str) -> Result<Vec<GeneratorEntry>, SpecError> {
    serde_json::from_str(text).map_err(SpecError::Json)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tracepoly_core::rat::rat_int;

    #[test]
    fn builtin_specs_build() {
        let d2: AlgebraSpec =
            serde_json::from_str(r#"{"kind":"Dn","alphas":["1","0"]}"#).unwrap();
        let a = build_algebra(&d2).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.trace_of(&a.basis_element(0)), rat_int(1));

        let m2: AlgebraSpec =
            serde_json::from_str(r#"{"kind":"Mn","n":2,"alpha":"2/3"}"#).unwrap();
        assert_eq!(build_algebra(&m2).unwrap().dim(), 4);

        let ut2: AlgebraSpec = serde_json::from_str(r#"{"kind":"UT2"}"#).unwrap();
        assert_eq!(build_algebra(&ut2).unwrap().dim(), 3);

        let sum: AlgebraSpec = serde_json::from_str(
            r#"{"kind":"direct_sum","summands":[
                {"kind":"Dn","alphas":["1"]},
                {"kind":"Dn","alphas":["2"]}]}"#,
        )
        .unwrap();
        let s = build_algebra(&sum).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.trace_of(s.unit()), rat_int(3));
    }

    #[test]
    fn raw_spec_builds_and_validates() {
        // C2 with trace (1, 1) as a raw table
        let text = r#"{
            "dim": 2,
            "labels": ["1", "u"],
            "unit": ["1", "0"],
            "trace": ["1", "1"],
            "mult": [
                [["1","0"], ["0","1"]],
                [["0","1"], ["0","0"]]
            ]
        }"#;
        let spec = parse_algebra_spec(text).unwrap();
        let a = build_algebra(&spec).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.trace_of(&a.basis_element(1)), rat_int(1));
    }

    #[test]
    fn raw_spec_rejects_bad_structure() {
        // non-associative: u·u = u with 1 as unit is fine, break the unit row
        let text = r#"{
            "dim": 2,
            "unit": ["1", "0"],
            "trace": ["0", "0"],
            "mult": [
                [["1","0"], ["0","0"]],
                [["0","1"], ["0","0"]]
            ]
        }"#;
        let spec = parse_algebra_spec(text).unwrap();
        assert!(matches!(
            build_algebra(&spec),
            Err(SpecError::Algebra(_))
        ));
    }

    #[test]
    fn bad_rationals_are_rejected() {
        let spec: AlgebraSpec =
            serde_json::from_str(r#"{"kind":"Dn","alphas":["1.5"]}"#).unwrap();
        assert!(matches!(build_algebra(&spec), Err(SpecError::Rational(_))));
    }
}
