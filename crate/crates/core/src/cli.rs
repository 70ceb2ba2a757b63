//! Command implementations behind the `sp4` binary, plus the matrix file
//! format.
//!
//! Matrix files are UTF-8 JSON objects `{"rows": [[..4..], ..4..]}` whose
//! entries are rational literals encoded as strings (`"p/q"` or `"n"`).
//! Outputs always encode rationals as canonical strings as well.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::arith::rational::{format_rational, parse_rational, serde_str, RationalParseError};
use crate::arith::{Matrix4, Rational};
use crate::family::{dyadic_samples, family_report, FamilyError, FamilyReport};
use crate::symplectic::{classify_spectrum, is_symplectic, satisfies_cond1, satisfies_cond2, SpectralClass};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    MalformedJson { line: usize, column: usize, message: String },
    #[error("expected an object with \"rows\" holding 4 rows of 4 entries: {0}")]
    Shape(String),
    #[error("row {row}, column {col}: {message}")]
    BadEntry { row: usize, col: usize, message: String },
    #[error("row {row}, column {col}: zero denominator in {literal:?}")]
    ZeroDenominator { row: usize, col: usize, literal: String },
}

impl MatrixParseError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            MatrixParseError::MalformedJson { .. } => "malformed_json",
            MatrixParseError::Shape(_) => "bad_shape",
            MatrixParseError::BadEntry { .. } => "bad_entry",
            MatrixParseError::ZeroDenominator { .. } => "zero_denominator",
        }
    }
}

/// Parses a matrix file. Row and column numbers in diagnostics are 1-based.
pub fn parse_matrix(text: &[u8]) -> Result<Matrix4, MatrixParseError> {
    let value: Value = serde_json::from_slice(text).map_err(|e| MatrixParseError::MalformedJson {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let rows = value
        .as_object()
        .ok_or_else(|| MatrixParseError::Shape("top level is not an object".into()))?
        .get("rows")
        .ok_or_else(|| MatrixParseError::Shape("missing \"rows\"".into()))?
        .as_array()
        .ok_or_else(|| MatrixParseError::Shape("\"rows\" is not an array".into()))?;
    if rows.len() != 4 {
        return Err(MatrixParseError::Shape(format!("found {} rows", rows.len())));
    }
    let mut out: [[Rational; 4]; 4] = Default::default();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| MatrixParseError::Shape(format!("row {} is not an array", i + 1)))?;
        if row.len() != 4 {
            return Err(MatrixParseError::Shape(format!("row {} has {} entries", i + 1, row.len())));
        }
        for (k, entry) in row.iter().enumerate() {
            let (r, c) = (i + 1, k + 1);
            let literal = entry.as_str().ok_or_else(|| MatrixParseError::BadEntry {
                row: r,
                col: c,
                message: format!("expected a string literal, found {entry}"),
            })?;
            out[i][k] = parse_rational(literal).map_err(|e| match e {
                RationalParseError::ZeroDenominator(l) => MatrixParseError::ZeroDenominator { row: r, col: c, literal: l },
                other => MatrixParseError::BadEntry { row: r, col: c, message: other.to_string() },
            })?;
        }
    }
    Ok(Matrix4::from_rows(out))
}

#[derive(Serialize)]
struct MatrixFile {
    rows: Vec<Vec<String>>,
}

/// Canonical compact encoding, the inverse of [`parse_matrix`].
pub fn serialize_matrix(m: &Matrix4) -> String {
    let file = MatrixFile { rows: m.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect() };
    serde_json::to_string(&file).expect("string matrix always serializes")
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{code}: {0}", code = .0.code())]
    Matrix(#[from] MatrixParseError),
    #[error("invalid eps: {0}")]
    Eps(#[from] RationalParseError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), exit_code: EXIT_OK }
    }

    fn input_error(e: CliError) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {e}\n"), exit_code: EXIT_INPUT }
    }
}

fn run(f: impl FnOnce() -> Result<CommandOutput, CliError>) -> CommandOutput {
    f().unwrap_or_else(CommandOutput::input_error)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub symplectic: bool,
    #[serde(with = "serde_str")]
    pub trace: Rational,
    #[serde(rename = "det_minus_I", with = "serde_str")]
    pub det_minus_identity: Rational,
    pub cond1: bool,
    pub cond2: bool,
    /// Absent for non-symplectic input.
    pub spectral_class: Option<SpectralClass>,
}

pub fn classify_report(m: &Matrix4) -> ClassifyReport {
    let symplectic = is_symplectic(m);
    ClassifyReport {
        symplectic,
        trace: m.trace(),
        det_minus_identity: (m - &Matrix4::identity()).det(),
        cond1: satisfies_cond1(m),
        cond2: satisfies_cond2(m),
        spectral_class: if symplectic { classify_spectrum(m).ok() } else { None },
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report serializes");
    s.push('\n');
    s
}

/// `classify --matrix <path>`
pub fn cmd_classify(path: &Path) -> CommandOutput {
    run(|| {
        let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let m = parse_matrix(&bytes)?;
        Ok(CommandOutput::ok(json_line(&classify_report(&m))))
    })
}

/// `family --eps <p/q>`
pub fn cmd_family(eps: &str) -> CommandOutput {
    run(|| {
        let eps = parse_rational(eps)?;
        Ok(CommandOutput::ok(json_line(&family_report(&eps)?)))
    })
}

#[derive(Serialize)]
struct SweepRow {
    eps: String,
    trace: String,
    #[serde(rename = "det_minus_I")]
    det_minus_identity: String,
    cond2: bool,
    class: &'static str,
    #[serde(rename = "dist_to_P0")]
    dist_to_p0: String,
}

impl From<&FamilyReport> for SweepRow {
    fn from(r: &FamilyReport) -> Self {
        Self {
            eps: format_rational(&r.eps),
            trace: format_rational(&r.trace),
            det_minus_identity: format_rational(&r.det_minus_identity),
            cond2: r.cond2,
            class: r.spectral_class.tag.as_str(),
            dist_to_p0: format_rational(&r.distance_to_p0),
        }
    }
}

/// `sweep --eps <comma-list>`: one CSV row per value, in the order given.
pub fn cmd_sweep(list: &str) -> CommandOutput {
    run(|| {
        let reports = list
            .split(',')
            .map(|s| Ok(family_report(&parse_rational(s.trim())?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &reports {
            w.serialize(SweepRow::from(r)).expect("in-memory csv write");
        }
        let bytes = w.into_inner().expect("in-memory csv flush");
        Ok(CommandOutput::ok(String::from_utf8(bytes).expect("csv of ascii fields")))
    })
}

/// Checks the family at `ε = 0` and `ε = 1/2^k` for `k = 1..=depth`.
pub fn verify_counterexample(depth: u32) -> (bool, Vec<String>) {
    let mut lines = Vec::new();
    let mut all_ok = true;
    for eps in std::iter::once(Rational::default()).chain(dyadic_samples(depth)) {
        let report = family_report(&eps).expect("sample eps are nonnegative");
        let violations = report.violations();
        let verdict = if violations.is_empty() { "ok" } else { "FAILED" };
        lines.push(format!(
            "{verdict} eps={} trace={} det_minus_I={} cond1={} cond2={} class={} dist_to_P0={}",
            format_rational(&eps),
            format_rational(&report.trace),
            format_rational(&report.det_minus_identity),
            report.cond1,
            report.cond2,
            report.spectral_class.tag.as_str(),
            format_rational(&report.distance_to_p0),
        ));
        for v in &violations {
            lines.push(format!("  {v}"));
        }
        all_ok &= violations.is_empty();
    }
    (all_ok, lines)
}

/// `verify-counterexample --depth <k>`
pub fn cmd_verify_counterexample(depth: u32) -> CommandOutput {
    let (ok, mut lines) = verify_counterexample(depth);
    lines.push(if ok { "PASS".into() } else { "FAIL".into() });
    let mut stdout = lines.join("\n");
    stdout.push('\n');
    CommandOutput { stdout, stderr: String::new(), exit_code: if ok { EXIT_OK } else { EXIT_FAIL } }
}
