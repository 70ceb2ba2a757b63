//! Exact scalar, polynomial and matrix arithmetic. No floating point.

pub mod elim;
pub mod gaussian;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use gaussian::GaussianRational;
pub use matrix::{Matrix, Matrix2, Matrix4, Vector4};
pub use poly::Polynomial;
pub use rational::{int, parse_rational, rat, Rational};

/// `det(λI₄ − m)`, monic of degree four.
pub fn char_poly(m: &Matrix4) -> Polynomial {
    m.char_poly()
}

/// Exact Horner evaluation of `p` at a Gaussian rational.
pub fn poly_eval(p: &Polynomial, z: &GaussianRational) -> GaussianRational {
    p.eval_gaussian(z)
}

pub fn rank(m: &Matrix4) -> usize {
    m.rank()
}

/// `dim ker(m) = 4 − rank(m)`.
pub fn kernel_dim(m: &Matrix4) -> usize {
    4 - m.rank()
}
