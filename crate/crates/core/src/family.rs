//! The family `P_ε = [[A_ε, B_ε], [0, C_ε]]`, `ε ≥ 0`, and exact checks of
//! every property claimed for it.
//!
//! For `ε > 0` each `P_ε` is symplectic with `det(P_ε − I) > 0` and
//! `tr P_ε < 4`, yet its spectrum `{1 ± iε, (1 ± iε)⁻¹}` is off the unit circle,
//! and `P_ε` keeps an invariant Lagrangian splitting. As `ε → 0` the family
//! converges to the unipotent `P_0`, which satisfies neither condition two
//! nor admits any invariant Lagrangian splitting.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::rational::{int, serde_str};
use crate::arith::{GaussianRational, Matrix2, Matrix4, Polynomial, Rational, Vector4};
use crate::lagrangian::{
    is_invariant, is_lagrangian, is_splitting, omega_obstruction, realified_eigenplane, unit, Plane,
};
use crate::symplectic::{classify_spectrum, is_symplectic, satisfies_cond1, satisfies_cond2, SpectralClass, SpectralTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family parameter must be nonnegative, got {0}")]
    NegativeEps(Rational),
    #[error("at eps = 0 the planes collapse (v1 = e1, v2 = e2) and no splitting exists")]
    SplittingDegenerate,
}

fn check_eps(eps: &Rational) -> Result<(), FamilyError> {
    if eps.is_negative() {
        return Err(FamilyError::NegativeEps(eps.clone()));
    }
    Ok(())
}

fn one_plus_sq(eps: &Rational) -> Rational {
    Rational::one() + eps * eps
}

pub fn a_block(eps: &Rational) -> Matrix2 {
    Matrix2::from_rows([[int(1), -eps], [eps.clone(), int(1)]])
}

pub fn b_block(eps: &Rational) -> Matrix2 {
    Matrix2::from_rows([[int(1), -eps], [int(0), int(0)]])
}

pub fn c_block(eps: &Rational) -> Matrix2 {
    a_block(eps).scale(&(Rational::one() / one_plus_sq(eps)))
}

pub fn family_p(eps: &Rational) -> Result<Matrix4, FamilyError> {
    check_eps(eps)?;
    Ok(Matrix4::from_blocks(&a_block(eps), &b_block(eps), &Matrix2::zero(), &c_block(eps)))
}

/// The limit `P_0`.
pub fn p0() -> Matrix4 {
    family_p(&Rational::zero()).expect("eps = 0 is admissible")
}

/// Closed-form characteristic polynomial
/// `((1 − λ)² + ε²)((1/(1+ε²) − λ)² + ε²/(1+ε²)²)`, expanded.
pub fn family_char_poly(eps: &Rational) -> Result<Polynomial, FamilyError> {
    check_eps(eps)?;
    let s = one_plus_sq(eps);
    let e2 = eps * eps;
    let first = &Polynomial::linear_root(int(1)).pow(2) + &Polynomial::constant(e2.clone());
    let second = &Polynomial::linear_root(Rational::one() / &s).pow(2) + &Polynomial::constant(&e2 / (&s * &s));
    Ok(&first * &second)
}

/// `[1 + iε, 1 − iε, (1 − iε)/(1+ε²), (1 + iε)/(1+ε²)]`; the last two are the
/// exact inverses of the first two.
pub fn family_spectrum(eps: &Rational) -> Result<[GaussianRational; 4], FamilyError> {
    check_eps(eps)?;
    let plus = GaussianRational::new(int(1), eps.clone());
    let minus = plus.conj();
    let inv_plus = plus.inv().expect("1 + iε is nonzero");
    let inv_minus = minus.inv().expect("1 − iε is nonzero");
    Ok([plus, minus, inv_plus, inv_minus])
}

/// `v₁^ε = (1+ε², −ε(1+ε²), −2ε², ε³)` and `v₂^ε = (0, 1+ε², −ε³, −2ε²)`.
pub fn splitting_vectors(eps: &Rational) -> [Vector4; 2] {
    let s = one_plus_sq(eps);
    let e2 = eps * eps;
    let e3 = &e2 * eps;
    let two_e2 = int(2) * &e2;
    [
        [s.clone(), -(eps * &s), -two_e2.clone(), e3.clone()],
        [int(0), s, -e3, -two_e2],
    ]
}

/// The invariant Lagrangian splitting `(U, V_ε)` with `U = span{e₁, e₂}`.
pub fn family_splitting(eps: &Rational) -> Result<(Plane, Plane), FamilyError> {
    check_eps(eps)?;
    if eps.is_zero() {
        return Err(FamilyError::SplittingDegenerate);
    }
    let [v1, v2] = splitting_vectors(eps);
    let u = Plane::span(unit(0), unit(1)).expect("e1, e2 independent");
    let v = Plane::span(v1, v2).expect("v1, v2 independent for eps > 0");
    Ok((u, v))
}

/// Max-entry distance `max |S_ij − T_ij|`.
pub fn max_norm_dist(s: &Matrix4, t: &Matrix4) -> Rational {
    (s - t).max_abs()
}

/// `1/2, 1/4, …, 1/2^depth`.
pub fn dyadic_samples(depth: u32) -> Vec<Rational> {
    (1..=depth).map(|k| Rational::new(1.into(), num_bigint::BigInt::from(2).pow(k))).collect()
}

/// Witness `u = e₃` of the obstruction at `ε = 0`; any `(a, b, 1, c)` gives −1.
pub fn obstruction_witness() -> Vector4 {
    unit(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    #[serde(with = "serde_str")]
    pub eps: Rational,
    pub symplectic: bool,
    #[serde(with = "serde_str")]
    pub trace: Rational,
    #[serde(rename = "det_minus_I", with = "serde_str")]
    pub det_minus_identity: Rational,
    pub cond1: bool,
    pub cond2: bool,
    pub spectral_class: SpectralClass,
    pub char_poly_matches_closed_form: bool,
    /// Closed-form characteristic polynomial at the four closed-form eigenvalues.
    pub eigenvalue_residuals: Vec<GaussianRational>,
    /// `ε > 0` only.
    pub splitting_verified: Option<bool>,
    /// `ε = 0` only.
    #[serde(with = "serde_str::option")]
    pub obstruction_value: Option<Rational>,
    #[serde(rename = "distance_to_P0", with = "serde_str")]
    pub distance_to_p0: Rational,
}

fn verify_splitting(p: &Matrix4, eps: &Rational) -> bool {
    let Ok((u, v)) = family_splitting(eps) else { return false };
    let [plus, _, inv_plus, _] = family_spectrum(eps).expect("eps checked");
    let eigen_match = matches!(
        (realified_eigenplane(p, &plus), realified_eigenplane(p, &inv_plus)),
        (Ok(eu), Ok(ev)) if eu == u && ev == v
    );
    is_lagrangian(&u)
        && is_lagrangian(&v)
        && is_splitting(&u, &v)
        && is_invariant(p, &u)
        && is_invariant(p, &v)
        && eigen_match
}

pub fn family_report(eps: &Rational) -> Result<FamilyReport, FamilyError> {
    let p = family_p(eps)?;
    let chi = family_char_poly(eps)?;
    let spectrum = family_spectrum(eps)?;
    let spectral_class = classify_spectrum(&p).expect("P_eps is symplectic, so its characteristic polynomial is reciprocal");
    let positive = eps.is_positive();
    Ok(FamilyReport {
        eps: eps.clone(),
        symplectic: is_symplectic(&p),
        trace: p.trace(),
        det_minus_identity: (&p - &Matrix4::identity()).det(),
        cond1: satisfies_cond1(&p),
        cond2: satisfies_cond2(&p),
        spectral_class,
        char_poly_matches_closed_form: p.char_poly() == chi,
        eigenvalue_residuals: spectrum.iter().map(|z| chi.eval_gaussian(z)).collect(),
        splitting_verified: positive.then(|| verify_splitting(&p, eps)),
        obstruction_value: (!positive).then(|| omega_obstruction(&p, &obstruction_witness())),
        distance_to_p0: max_norm_dist(&p, &p0()),
    })
}

impl FamilyReport {
    /// Invariants the report must satisfy; returns a description of each one
    /// that fails.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                out.push(format!("eps={}: {what}", self.eps));
            }
        };
        check(self.symplectic, "not symplectic");
        check(self.char_poly_matches_closed_form, "characteristic polynomial differs from closed form");
        check(self.eigenvalue_residuals.iter().all(Zero::is_zero), "nonzero eigenvalue residual");
        let s = one_plus_sq(&self.eps);
        check(self.trace == int(2) + int(2) / &s, "trace differs from 2 + 2/(1+eps^2)");
        let e2 = &self.eps * &self.eps;
        check(self.det_minus_identity == &e2 * &e2 / &s, "det(P - I) differs from eps^4/(1+eps^2)");
        if self.eps.is_positive() {
            check(self.cond2, "condition two fails");
            check(self.spectral_class.tag == SpectralTag::ComplexQuadruple, "spectrum is not a complex quadruple");
            check(self.splitting_verified == Some(true), "invariant Lagrangian splitting not verified");
            check(self.obstruction_value.is_none(), "obstruction value present for eps > 0");
            if self.eps <= int(1) {
                check(self.distance_to_p0 == self.eps, "distance to P0 differs from eps");
            }
        } else {
            check(self.cond1, "condition one fails at eps = 0");
            check(!self.cond2, "condition two holds at eps = 0");
            check(self.obstruction_value == Some(int(-1)), "obstruction value is not -1");
            check(self.splitting_verified.is_none(), "splitting flag present at eps = 0");
        }
        out
    }
}
