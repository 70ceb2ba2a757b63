use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision exact fraction.
///
/// Values are always stored normalized: the denominator is positive, shares no
/// factor with the numerator, and zero is `0/1`.
pub type Rational = BigRational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses an exact literal of the form `n`, `-n`, `p/q` or `-p/q`.
///
/// Decimal points, exponents, whitespace and signed denominators are rejected;
/// nothing is ever routed through floating point.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let unsigned = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match unsigned.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (unsigned, None),
    };
    if !is_digits(num) || !den.is_none_or(is_digits) {
        return Err(RationalParseError::Invalid(s.to_string()));
    }
    let mut numer: BigInt = num.parse().map_err(|_| RationalParseError::Invalid(s.to_string()))?;
    if unsigned.len() != s.len() {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(|_| RationalParseError::Invalid(s.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p/q` in lowest terms with `q > 1`, or a bare integer.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Newtype that serializes a rational as its canonical string.
pub(crate) mod serde_str {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&format_rational(r))
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.collect_str(&format_rational(r)),
                None => s.serialize_none(),
            }
        }
    }

    pub mod seq {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(rs.len()))?;
            for r in rs {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }
    }
}
