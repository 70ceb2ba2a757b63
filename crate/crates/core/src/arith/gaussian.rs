use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rational::{format_rational, Rational};

/// Element of the field Q(i): `re + im·i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GaussianRational {
    #[serde(with = "super::rational::serde_str")]
    pub re: Rational,
    #[serde(with = "super::rational::serde_str")]
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`, always rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self { re: &self.re / &n, im: -&self.im / &n })
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero, like the underlying rationals.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Q(i)")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = format_rational(&self.re);
        if self.im.is_zero() {
            return f.write_str(&re);
        }
        let mag = self.im.abs();
        let coeff = if mag.is_one() { String::new() } else { format_rational(&mag) };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}i")
        } else {
            write!(f, "{re}{sign}{coeff}i")
        }
    }
}
