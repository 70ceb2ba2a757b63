//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Three operations are exposed, each taking and returning JSON text with
//! rationals encoded as strings:
//!
//! * [`explore_family`]: the verification report of `P_ε` plus its matrix and
//!   spectrum, for plotting eigenvalues against the unit circle.
//! * [`classify_matrix`]: classification of a user-entered 4×4 matrix.
//! * [`probe_obstruction`]: the value `uᵀ J P_ε u` for a user-chosen `u`.
//!
//! The plain `*_json` functions carry the logic so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sp4::arith::{parse_rational, GaussianRational, Rational, Vector4};
use sp4::cli::{classify_report, parse_matrix, serialize_matrix, ClassifyReport};
use sp4::family::{family_p, family_report, family_spectrum, FamilyReport};
use sp4::lagrangian::omega_obstruction;

fn canonical(r: &Rational) -> String {
    r.to_string()
}

#[derive(Serialize)]
struct FamilyView {
    report: FamilyReport,
    matrix: serde_json::Value,
    char_poly: String,
    spectrum: Vec<GaussianRational>,
    /// `|λ|²` for each eigenvalue, exact.
    modulus_sq: Vec<String>,
}

pub fn family_json(eps: &str) -> Result<String, String> {
    let eps = parse_rational(eps.trim()).map_err(|e| e.to_string())?;
    let report = family_report(&eps).map_err(|e| e.to_string())?;
    let p = family_p(&eps).map_err(|e| e.to_string())?;
    let spectrum = family_spectrum(&eps).map_err(|e| e.to_string())?.to_vec();
    let view = FamilyView {
        matrix: serde_json::from_str(&serialize_matrix(&p)).expect("matrix json"),
        char_poly: p.char_poly().to_string(),
        modulus_sq: spectrum.iter().map(|z| canonical(&z.norm_sqr())).collect(),
        spectrum,
        report,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ClassifyView {
    #[serde(flatten)]
    report: ClassifyReport,
    char_poly: String,
}

pub fn classify_json(matrix: &str) -> Result<String, String> {
    let m = parse_matrix(matrix.as_bytes()).map_err(|e| format!("{}: {e}", e.code()))?;
    let view = ClassifyView { report: classify_report(&m), char_poly: m.char_poly().to_string() };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ObstructionView {
    value: String,
    /// `−t²` for the third coordinate `t`; equal to `value` when `ε = 0`.
    minus_t_squared: String,
    /// A nonzero value rules out any Lagrangian plane containing both `u` and `P_ε u`.
    obstructs: bool,
}

/// `u` is a comma-separated list of four rational literals.
pub fn obstruction_json(eps: &str, u: &str) -> Result<String, String> {
    let eps = parse_rational(eps.trim()).map_err(|e| e.to_string())?;
    let p = family_p(&eps).map_err(|e| e.to_string())?;
    let coords = u
        .split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let u: Vector4 = coords.try_into().map_err(|v: Vec<_>| format!("expected 4 coordinates, got {}", v.len()))?;
    let value = omega_obstruction(&p, &u);
    let view = ObstructionView {
        obstructs: value != Rational::default(),
        minus_t_squared: canonical(&-(&u[2] * &u[2])),
        value: canonical(&value),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn explore_family(eps: &str) -> Result<String, JsError> {
    family_json(eps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn classify_matrix(matrix: &str) -> Result<String, JsError> {
    classify_json(matrix).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn probe_obstruction(eps: &str, u: &str) -> Result<String, JsError> {
    obstruction_json(eps, u).map_err(|e| JsError::new(&e))
}
