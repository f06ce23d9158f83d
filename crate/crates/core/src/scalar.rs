//! Scalar types the polynomial machinery is generic over.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// Arbitrary-precision rational, the coefficient field used for every exact
/// computation in this crate.
pub type Rational = BigRational;

/// A field of polynomial coefficients.
///
/// Implemented for [`Rational`] (exact) and for `f64`/`f32` (fast evaluation).
/// Verification routines that rely on exact zero tests are only meaningful
/// when [`Scalar::EXACT`] is true.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + PartialEq + fmt::Debug + Send + Sync + 'static
{
    /// Whether arithmetic in this field is exact.
    const EXACT: bool;

    fn from_int(value: i64) -> Self;

    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    fn from_rational(value: &Rational) -> Self {
        Self::from_big_ratio(value.numer(), value.denom())
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }

    fn ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(value: i64) -> Self {
        value as f64
    }

    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        numer.to_f64().unwrap_or(f64::NAN) / denom.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_int(value: i64) -> Self {
        value as f32
    }

    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        (numer.to_f64().unwrap_or(f64::NAN) / denom.to_f64().unwrap_or(f64::NAN)) as f32
    }
}

/// Shorthand for the exact rational `numer/denom`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::ratio(numer, denom)
}

/// Canonical text form of a rational: `"p"` or `"p/q"` with `q > 0`.
pub fn rational_to_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p"` or `"p/q"`; the denominator must be positive.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| format!("invalid integer `{numer}` in rational `{text}`"))?;
    let denom: BigInt = match denom {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(format!("denominator must be a positive integer in `{text}`"));
            }
            d.parse()
                .map_err(|_| format!("invalid denominator `{d}` in rational `{text}`"))?
        }
        None => BigInt::from(1),
    };
    if denom == BigInt::from(0) {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rational::new(numer, denom))
}
