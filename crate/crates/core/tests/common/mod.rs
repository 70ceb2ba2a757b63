//! Independent reference computations, deliberately naive and sharing no code
//! path with the library's elimination or cofactor routines.

#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use sp4::arith::{rat, GaussianRational, Matrix, Matrix4, Polynomial, Rational};
use sp4::symplectic::SpectralTag;

/// Leibniz formula: sum over all permutations.
pub fn leibniz_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = Rational::one();
        for (i, &c) in p.iter().enumerate() {
            term *= &m[i][c];
        }
        if inversions % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Rank as the size of the largest nonvanishing minor.
pub fn minor_rank(m: &[Vec<Rational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .rev()
        .find(|&k| {
            subsets(rows, k).iter().any(|rs| {
                subsets(cols, k).iter().any(|cs| {
                    let sub: Vec<Vec<Rational>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                    !leibniz_det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

/// `det(λI − M)` recovered by Lagrange interpolation through λ = 0..=4, each
/// value computed with the Leibniz formula.
pub fn interpolated_char_poly(m: &Matrix4) -> Polynomial {
    let xs: Vec<Rational> = (0..5).map(|k| rat(k, 1)).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let shifted: Vec<Vec<Rational>> =
                (0..4).map(|i| (0..4).map(|j| if i == j { x - &m[(i, j)] } else { -&m[(i, j)] }).collect()).collect();
            leibniz_det(&shifted)
        })
        .collect();
    let mut acc = Polynomial::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = Polynomial::constant(ys[i].clone());
        for (k, xk) in xs.iter().enumerate() {
            if k != i {
                basis = &basis * &Polynomial::linear_root(xk.clone()).scale(&(Rational::one() / (xi - xk)));
            }
        }
        acc = &acc + &basis;
    }
    acc
}

pub fn to_vecs<const R: usize, const C: usize>(m: &Matrix<R, C>) -> Vec<Vec<Rational>> {
    m.rows().iter().map(|r| r.to_vec()).collect()
}

/// Tag read off directly from a known list of eigenvalues.
pub fn tag_from_eigenvalues(eigs: &[GaussianRational]) -> SpectralTag {
    let one = Rational::one();
    if eigs.iter().any(|z| z.is_real() && (z.re == one || z.re == -one.clone())) {
        return SpectralTag::UnitRoot;
    }
    let on_circle = eigs.iter().filter(|z| z.norm_sqr() == one).count();
    let real_off = eigs.iter().filter(|z| z.is_real() && z.norm_sqr() != one).count();
    match (on_circle, real_off) {
        (4, _) => SpectralTag::Elliptic,
        (0, 4) => SpectralTag::RealHyperbolic,
        (0, 0) => SpectralTag::ComplexQuadruple,
        _ => SpectralTag::Mixed,
    }
}

pub fn small_rational() -> impl Strategy<Value = Rational> + Clone {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// Sparse small entries so low-rank matrices turn up often.
pub fn sparse_rational() -> impl Strategy<Value = Rational> + Clone {
    prop_oneof![3 => Just(Rational::zero()), 2 => (-3i64..=3, 1i64..=3).prop_map(|(n, d)| rat(n, d))]
}

pub fn matrix4(entry: impl Strategy<Value = Rational> + Clone) -> impl Strategy<Value = Matrix4> {
    proptest::collection::vec(entry, 16).prop_map(|v| Matrix4::from_fn(|i, j| v[4 * i + j].clone()))
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rational(), small_rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

pub fn positive_eps() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}
