//! Planes in ℝ⁴, Lagrangian splittings and invariance under a linear map.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::elim::{kernel, rref};
use crate::arith::{GaussianRational, Matrix, Matrix4, Rational, Vector4};
use crate::symplectic::j;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LagrangianError {
    #[error("basis vectors do not span a plane")]
    RankDeficient,
    #[error("eigenvalue {0} is real; a realified eigenplane needs a non-real eigenvalue")]
    RealEigenvalue(Box<GaussianRational>),
    #[error("{0} is not an eigenvalue of the matrix")]
    NotAnEigenvalue(Box<GaussianRational>),
    #[error("eigenspace of {eigenvalue} has dimension {dim} over Q(i), expected 1")]
    NotApplicable { eigenvalue: Box<GaussianRational>, dim: usize },
}

/// Standard basis vector `e_{k+1}` (zero-based `k`).
pub fn unit(k: usize) -> Vector4 {
    std::array::from_fn(|i| if i == k { Rational::one() } else { Rational::zero() })
}

/// `ω(u, v) = uᵀ J v`.
pub fn omega(u: &Vector4, v: &Vector4) -> Rational {
    u.iter().zip(j().mul_vec(v)).map(|(a, b)| a * b).sum()
}

/// `uᵀ J (S u)`. A nonzero value for `u` in an `S`-invariant plane shows the
/// plane cannot be Lagrangian, since it contains both `u` and `S u`.
pub fn omega_obstruction(s: &Matrix4, u: &Vector4) -> Rational {
    omega(u, &s.mul_vec(u))
}

/// Two-dimensional subspace of ℝ⁴, stored as a 4×2 basis.
///
/// Equality compares subspaces, not bases.
#[derive(Debug, Clone, Eq)]
pub struct Plane {
    basis: Matrix<4, 2>,
}

impl Plane {
    pub fn new(basis: Matrix<4, 2>) -> Result<Self, LagrangianError> {
        if basis.rank() != 2 {
            return Err(LagrangianError::RankDeficient);
        }
        Ok(Self { basis })
    }

    pub fn span(u: Vector4, v: Vector4) -> Result<Self, LagrangianError> {
        Self::new(Matrix::from_columns([u, v]))
    }

    pub fn basis(&self) -> &Matrix<4, 2> {
        &self.basis
    }

    /// Column-reduced echelon form of the basis, returned as the two rows of
    /// the reduced transpose. Identical for every basis of the same plane.
    pub fn canonical(&self) -> [Vector4; 2] {
        let mut rows = self.basis.transpose().to_vecs();
        rref(&mut rows);
        let mut it = rows.into_iter().map(|r| <Vector4>::try_from(r).expect("four coordinates"));
        [it.next().unwrap(), it.next().unwrap()]
    }

    /// Same plane, basis multiplied on the right by `t`.
    pub fn rebased(&self, t: &Matrix<2, 2>) -> Result<Self, LagrangianError> {
        Self::new(&self.basis * t)
    }

    pub fn contains(&self, v: &Vector4) -> bool {
        let [a, b] = [self.basis.column(0), self.basis.column(1)];
        Matrix::<4, 3>::from_columns([a, b, v.clone()]).rank() == 2
    }
}

impl PartialEq for Plane {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// `ω` vanishes on the plane, i.e. `Bᵀ J B = 0` for its basis `B`.
pub fn is_lagrangian(u: &Plane) -> bool {
    (&(&u.basis.transpose() * &j()) * &u.basis).is_zero()
}

/// `ℝ⁴ = U ⊕ V`.
pub fn is_splitting(u: &Plane, v: &Plane) -> bool {
    Matrix4::hstack(&u.basis, &v.basis).rank() == 4
}

/// `S U ⊆ U`.
pub fn is_invariant(s: &Matrix4, u: &Plane) -> bool {
    Matrix4::hstack(&u.basis, &(s * &u.basis)).rank() == 2
}

/// Real invariant plane `span{Re w, Im w}` of an eigenvector `w` for the
/// non-real eigenvalue `lambda`, found by exact elimination over Q(i).
pub fn realified_eigenplane(s: &Matrix4, lambda: &GaussianRational) -> Result<Plane, LagrangianError> {
    if lambda.is_real() {
        return Err(LagrangianError::RealEigenvalue(Box::new(lambda.clone())));
    }
    if !s.char_poly().eval_gaussian(lambda).is_zero() {
        return Err(LagrangianError::NotAnEigenvalue(Box::new(lambda.clone())));
    }
    let shifted: Vec<Vec<GaussianRational>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|k| {
                    let entry = GaussianRational::real(s[(i, k)].clone());
                    if i == k {
                        entry - lambda.clone()
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    let ker = kernel(&shifted);
    if ker.len() != 1 {
        return Err(LagrangianError::NotApplicable { eigenvalue: Box::new(lambda.clone()), dim: ker.len() });
    }
    let w = &ker[0];
    let re: Vector4 = std::array::from_fn(|i| w[i].re.clone());
    let im: Vector4 = std::array::from_fn(|i| w[i].im.clone());
    let plane = Plane::span(re, im)?;
    debug_assert!(is_invariant(s, &plane));
    Ok(plane)
}
