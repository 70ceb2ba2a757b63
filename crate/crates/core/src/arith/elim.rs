//! Exact elimination routines.
//!
//! Rank and determinant go through fraction-free (Bareiss) elimination on an
//! integer image of the matrix. Reduced row echelon form, used for kernels and
//! canonical subspace bases, runs over any exact field.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::rational::Rational;

/// Exact field scalar usable by [`rref`].
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for Rational {}
impl Field for GaussianRational {}

/// Result of fraction-free elimination of a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bareiss {
    pub rank: usize,
    /// Determinant, present only for square input.
    pub det: Option<Rational>,
}

/// Bareiss elimination with full pivoting.
///
/// Every row is first scaled by the lcm of its denominators so the working
/// matrix is integral; each elimination step then divides exactly by the
/// previous pivot. The pivot is the first nonzero entry of the trailing
/// submatrix in row-major order.
pub fn bareiss(rows: &[Vec<Rational>]) -> Bareiss {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            debug_assert_eq!(row.len(), m);
            let l = row.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
            scale *= &l;
            row.iter().map(|r| r.numer() * (&l / r.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..n.min(m) {
        let pivot = (k..n).flat_map(|i| (k..m).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        if pi != k {
            a.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..m {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
        rank += 1;
    }

    let det = (n == m).then(|| {
        if n == 0 {
            Rational::one()
        } else if rank < n {
            Rational::zero()
        } else {
            let d = Rational::new(a[n - 1][n - 1].clone(), scale);
            if negate {
                -d
            } else {
                d
            }
        }
    });
    Bareiss { rank, det }
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row.
pub fn rref<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(p, r);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..m {
                    let v = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel `{x : A x = 0}`.
pub fn kernel<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let m = rows.first().map_or(0, Vec::len);
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![F::zero(); m];
            x[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -work[r][free].clone();
            }
            x
        })
        .collect()
}
