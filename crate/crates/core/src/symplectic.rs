//! Symplectic group predicates and spectral classification in dimension four.
//!
//! Coordinates are ordered `(q₁, q₂, p₁, p₂)` and the symplectic form is
//! `ω(u, v) = uᵀ J v` with `J = [[0, I₂], [−I₂, 0]]`.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::arith::rational::{int, rat, rational_sqrt, serde_str, sign};
use crate::arith::{kernel_dim, Matrix2, Matrix4, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("characteristic polynomial {0} is not reciprocal")]
    NotReciprocal(Polynomial),
}

/// The standard symplectic matrix.
pub fn j() -> Matrix4 {
    Matrix4::from_ints([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

/// `Sᵀ J S = J`, checked entry by entry.
pub fn is_symplectic(s: &Matrix4) -> bool {
    &(&s.transpose() * &j()) * s == j()
}

/// `S⁻¹ = −J Sᵀ J` for symplectic `S`.
pub fn symplectic_inverse(s: &Matrix4) -> Result<Matrix4, SymplecticError> {
    if !is_symplectic(s) {
        return Err(SymplecticError::NotSymplectic);
    }
    Ok(-&(&(&j() * &s.transpose()) * &j()))
}

/// Symplectic map acting by `first` on the `(q₁, p₁)` plane and by `second`
/// on `(q₂, p₂)`. Symplectic iff both blocks have determinant one.
pub fn direct_sum(first: &Matrix2, second: &Matrix2) -> Matrix4 {
    const PAIRS: [[usize; 2]; 2] = [[0, 2], [1, 3]];
    let mut out = [[0usize; 4]; 4].map(|r| r.map(|_| Rational::zero()));
    for (blk, pair) in [first, second].into_iter().zip(PAIRS) {
        for a in 0..2 {
            for b in 0..2 {
                out[pair[a]][pair[b]] = blk[(a, b)].clone();
            }
        }
    }
    Matrix4::from_rows(out)
}

/// `det(S − I₄) > 0` and `tr S < 4`.
pub fn satisfies_cond2(s: &Matrix4) -> bool {
    (s - &Matrix4::identity()).det().is_positive() && s.trace() < int(4)
}

/// Symplectic, not the identity, `dim ker(P − I₄) ≠ 2`, and spectrum `{1}`.
///
/// The spectral clause is decided by the polynomial identity
/// `det(λI − P) = (λ − 1)⁴`.
pub fn satisfies_cond1(p: &Matrix4) -> bool {
    let id = Matrix4::identity();
    is_symplectic(p)
        && *p != id
        && kernel_dim(&(p - &id)) != 2
        && p.char_poly() == Polynomial::linear_root(Rational::one()).pow(4)
}

/// Generators of Sp(ℝ⁴) used to build random symplectic matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `[[I, B], [0, I]]` with `B` symmetric.
    Shear(Matrix2),
    /// `[[A, 0], [0, A⁻ᵀ]]` with `A` invertible.
    Dilation(Matrix2),
    J,
}

impl Generator {
    pub fn matrix(&self) -> Matrix4 {
        let i2 = Matrix2::identity();
        let z = Matrix2::zero();
        match self {
            Generator::Shear(b) => {
                debug_assert_eq!(*b, b.transpose());
                Matrix4::from_blocks(&i2, b, &z, &i2)
            }
            Generator::Dilation(a) => {
                let inv_t = a.inverse().expect("dilation block must be invertible").transpose();
                Matrix4::from_blocks(a, &z, &z, &inv_t)
            }
            Generator::J => j(),
        }
    }
}

/// Product of the generators' matrices, left to right.
pub fn compose(gens: &[Generator]) -> Matrix4 {
    gens.iter().fold(Matrix4::identity(), |acc, g| &acc * &g.matrix())
}

/// Rational with numerator in `[-5, 5]` and denominator in `[1, 5]`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=5))
}

fn random_generator(rng: &mut ChaCha8Rng) -> Generator {
    match rng.gen_range(0..3) {
        0 => {
            let (x, y, z) = (small_rational(rng), small_rational(rng), small_rational(rng));
            Generator::Shear(Matrix2::from_rows([[x, y.clone()], [y, z]]))
        }
        1 => loop {
            let a = Matrix2::from_fn(|_, _| small_rational(rng));
            if !a.det().is_zero() {
                break Generator::Dilation(a);
            }
        },
        _ => Generator::J,
    }
}

/// Deterministic generator sequence for `seed`.
pub fn random_generators(seed: u64, n_factors: usize) -> Vec<Generator> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_factors).map(|_| random_generator(&mut rng)).collect()
}

/// Deterministic pseudo-random symplectic matrix: the product of `n_factors`
/// generators drawn from a ChaCha stream seeded with `seed`.
///
/// Panics if `n_factors == 0`.
pub fn random_symplectic(seed: u64, n_factors: usize) -> Matrix4 {
    assert!(n_factors >= 1, "n_factors must be at least 1");
    compose(&random_generators(seed, n_factors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SpectralTag {
    /// Spectrum on the unit circle, avoiding ±1.
    Elliptic,
    /// 1 or −1 is an eigenvalue.
    UnitRoot,
    /// Two real reciprocal pairs off the circle.
    RealHyperbolic,
    /// A quadruple `{λ, λ̄, 1/λ, 1/λ̄}` off the circle and the real axis.
    ComplexQuadruple,
    /// One pair on the circle and one real pair off it.
    Mixed,
}

impl SpectralTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectralTag::Elliptic => "Elliptic",
            SpectralTag::UnitRoot => "UnitRoot",
            SpectralTag::RealHyperbolic => "RealHyperbolic",
            SpectralTag::ComplexQuadruple => "ComplexQuadruple",
            SpectralTag::Mixed => "Mixed",
        }
    }
}

/// Classification verdict together with the reduced quadratic it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralClass {
    pub tag: SpectralTag,
    /// `q(μ) = μ² + aμ + (b − 2)`, coefficients constant term first.
    pub reduced: Polynomial,
    #[serde(with = "serde_str")]
    pub discriminant: Rational,
    pub discriminant_sign: i8,
    /// Both μ-roots, ascending, when they are rational.
    #[serde(serialize_with = "serialize_roots")]
    pub rational_roots: Option<[Rational; 2]>,
}

fn serialize_roots<S: serde::Serializer>(r: &Option<[Rational; 2]>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(rs) => serde_str::seq::serialize(rs, s),
        None => s.serialize_none(),
    }
}

/// Classifies the spectrum of a symplectic matrix exactly.
///
/// The characteristic polynomial `λ⁴ + aλ³ + bλ² + aλ + 1` is reduced through
/// `μ = λ + 1/λ` to `q(μ) = μ² + aμ + (b − 2)`. An eigenvalue lies on the unit
/// circle away from ±1 iff its `μ` is real and in `(−2, 2)`; `μ = ±2` iff
/// `λ = ±1`. Root location is decided from the signs of `q(±2)`, the vertex
/// `−a/2` and the discriminant, so no irrational number is ever formed.
pub fn classify_spectrum(s: &Matrix4) -> Result<SpectralClass, SymplecticError> {
    let chi = s.char_poly();
    if !(chi.is_monic() && chi.degree() == Some(4) && chi.coeff(0).is_one() && chi.coeff(1) == chi.coeff(3)) {
        return Err(SymplecticError::NotReciprocal(chi));
    }
    let a = chi.coeff(3);
    let b = chi.coeff(2);
    let two = int(2);
    let reduced = Polynomial::new(vec![&b - &two, a.clone(), Rational::one()]);
    let discriminant = &a * &a - int(4) * (&b - &two);
    let discriminant_sign = sign(&discriminant);
    let rational_roots = rational_sqrt(&discriminant).map(|r| [(-&a - &r) / &two, (-&a + &r) / &two]);

    let at_plus = reduced.eval(&two);
    let at_minus = reduced.eval(&-&two);
    let vertex = -&a / &two;

    let tag = if discriminant_sign < 0 {
        SpectralTag::ComplexQuadruple
    } else if at_plus.is_zero() || at_minus.is_zero() {
        SpectralTag::UnitRoot
    } else if at_plus.is_positive() && at_minus.is_positive() {
        if vertex.abs() < two {
            SpectralTag::Elliptic
        } else {
            SpectralTag::RealHyperbolic
        }
    } else if at_plus.is_negative() && at_minus.is_negative() {
        // one root below −2, the other above 2
        SpectralTag::RealHyperbolic
    } else {
        SpectralTag::Mixed
    };

    Ok(SpectralClass { tag, reduced, discriminant, discriminant_sign, rational_roots })
}
