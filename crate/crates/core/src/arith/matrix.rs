use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::elim::bareiss;
use super::poly::Polynomial;
use super::rational::{format_rational, int, Rational};

/// Dense exact `R × C` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<const R: usize, const C: usize> {
    rows: [[Rational; C]; R],
}

pub type Matrix4 = Matrix<4, 4>;
pub type Matrix2 = Matrix<2, 2>;
pub type Vector4 = [Rational; 4];

impl<const R: usize, const C: usize> Matrix<R, C> {
    pub fn from_rows(rows: [[Rational; C]; R]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self { rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn from_ints(rows: [[i64; C]; R]) -> Self {
        Self::from_fn(|i, j| int(rows[i][j]))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Rational::zero())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: [[Rational; R]; C]) -> Self {
        Self::from_fn(|i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> &[[Rational; C]; R] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> [Rational; R] {
        std::array::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn transpose(&self) -> Matrix<C, R> {
        Matrix::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(|i, j| &self.rows[i][j] * c)
    }

    pub fn mul_vec(&self, v: &[Rational; C]) -> [Rational; R] {
        std::array::from_fn(|i| self.rows[i].iter().zip(v).map(|(a, b)| a * b).sum())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> Rational {
        self.rows.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn to_vecs(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.to_vec()).collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss(&self.to_vecs()).rank
    }
}

impl<const N: usize> Matrix<N, N> {
    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diag(d: [Rational; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { Rational::zero() })
    }

    pub fn trace(&self) -> Rational {
        (0..N).map(|i| self.rows[i][i].clone()).sum()
    }

    pub fn det(&self) -> Rational {
        bareiss(&self.to_vecs()).det.expect("square matrix")
    }

    /// Monic characteristic polynomial `det(λI − M)`, expanded by cofactors
    /// over the polynomial ring.
    pub fn char_poly(&self) -> Polynomial {
        let entries: Vec<Vec<Polynomial>> = (0..N)
            .map(|i| {
                (0..N)
                    .map(|j| {
                        let c = Polynomial::constant(-&self.rows[i][j]);
                        if i == j {
                            &c + &Polynomial::x()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let cols: Vec<usize> = (0..N).collect();
        cofactor_det(&entries, 0, &cols)
    }
}

/// Laplace expansion along row `row` restricted to the given columns.
fn cofactor_det(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::constant(Rational::one());
    }
    let mut acc = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor_det(m, row + 1, &rest);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl Matrix2 {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let [[a, b], [c, e]] = &self.rows;
        Some(Self::from_rows([[e / &d, -b / &d], [-c / &d, a / &d]]))
    }
}

impl Matrix4 {
    /// Assembles `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: &Matrix2, b: &Matrix2, c: &Matrix2, d: &Matrix2) -> Self {
        Self::from_fn(|i, j| {
            let blk = match (i < 2, j < 2) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.rows[i % 2][j % 2].clone()
        })
    }

    /// Matrix with the columns of `left` followed by those of `right`.
    pub fn hstack(left: &Matrix<4, 2>, right: &Matrix<4, 2>) -> Self {
        Self::from_fn(|i, j| if j < 2 { left.rows[i][j].clone() } else { right.rows[i][j - 2].clone() })
    }
}

impl<const R: usize, const C: usize> Index<(usize, usize)> for Matrix<R, C> {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.rows[i][j]
    }
}

impl<const R: usize, const K: usize, const C: usize> Mul<&Matrix<K, C>> for &Matrix<R, K> {
    type Output = Matrix<R, C>;
    fn mul(self, rhs: &Matrix<K, C>) -> Matrix<R, C> {
        Matrix::from_fn(|i, j| (0..K).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum())
    }
}

impl<const R: usize, const K: usize, const C: usize> Mul<Matrix<K, C>> for Matrix<R, K> {
    type Output = Matrix<R, C>;
    fn mul(self, rhs: Matrix<K, C>) -> Matrix<R, C> {
        &self * &rhs
    }
}

impl<const R: usize, const C: usize> Add for &Matrix<R, C> {
    type Output = Matrix<R, C>;
    fn add(self, rhs: Self) -> Matrix<R, C> {
        Matrix::from_fn(|i, j| &self.rows[i][j] + &rhs.rows[i][j])
    }
}

impl<const R: usize, const C: usize> Sub for &Matrix<R, C> {
    type Output = Matrix<R, C>;
    fn sub(self, rhs: Self) -> Matrix<R, C> {
        Matrix::from_fn(|i, j| &self.rows[i][j] - &rhs.rows[i][j])
    }
}

impl<const R: usize, const C: usize> Neg for &Matrix<R, C> {
    type Output = Matrix<R, C>;
    fn neg(self) -> Matrix<R, C> {
        Matrix::from_fn(|i, j| -&self.rows[i][j])
    }
}

impl<const R: usize, const C: usize> fmt::Display for Matrix<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
