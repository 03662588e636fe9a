//! Exact rational scalars.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    int(1)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    if let Some((_, den)) = trimmed.split_once('/') {
        if BigInt::from_str(den.trim()).map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::ParseScalar(text.to_string()));
        }
    }
    BigRational::from_str(trimmed).map_err(|_| Error::ParseScalar(text.to_string()))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(value: &Scalar) -> String {
    value.to_string()
}

pub fn to_f64(value: &Scalar) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
