//! Exact rational scalars used throughout the crate.
//!
//! Every coefficient, matrix entry and sample coordinate on the symbolic
//! path is a `BigRational`; floating point only ever appears inside the
//! numerical oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (`BigRational` normalizes on construction).
pub type Q = BigRational;

/// Shorthand for small rational constants.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integer constants.
pub fn qi(num: i64) -> Q {
    Q::from(BigInt::from(num))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Lossy conversion for the numerical oracles. Values whose magnitude
/// overflows f64 saturate to +/-infinity, which the oracles treat as
/// an ordinary huge value after normalization.
pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact conversion from a finite float (floats are dyadic rationals).
pub fn from_f64(x: f64) -> Q {
    Q::from_float(x).expect("finite float")
}

/// Canonical `a/b` rendering with the denominator omitted when 1.
pub fn fmt_q(x: &Q) -> String {
    if x.denom() == &BigInt::from(1) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_normalize() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(fmt_q(&q(-1, 2)), "-1/2");
        assert_eq!(fmt_q(&qi(7)), "7");
    }

    #[test]
    fn sign_and_float_roundtrip() {
        assert_eq!(sign(&q(0, 5)), 0);
        assert_eq!(sign(&q(-3, 7)), -1);
        assert_eq!(from_f64(0.25), q(1, 4));
        assert_eq!(to_f64(&q(1, 8)), 0.125);
    }
}
