//! Exact analysis of 4×4 real symplectic matrices.
//!
//! Everything is computed over the rationals (and the Gaussian rationals for
//! eigenvalues): group membership, spectral classification through the
//! reciprocal characteristic polynomial, Lagrangian planes and splittings, and
//! a one-parameter family `P_ε` of symplectic matrices which satisfies
//! `det(S − I) > 0` and `tr S < 4` for every `ε > 0` without being elliptic,
//! while converging to a unipotent limit `P_0` that admits no invariant
//! Lagrangian splitting.

pub mod arith;
pub mod cli;
pub mod family;
pub mod lagrangian;
pub mod symplectic;

pub use arith::{char_poly, kernel_dim, poly_eval, rank, GaussianRational, Matrix2, Matrix4, Polynomial, Rational};
