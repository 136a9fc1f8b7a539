//! Exact rational scalars.
//!
//! Every scalar is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; arithmetic never rounds. The wire form is `"p/q"`,
//! with `/q` omitted when the denominator is `1` and the sign carried by the
//! numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` already maintains the invariants we
/// need: reduced form and a strictly positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ScalarParseError {
    #[error("empty scalar string")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("too many `/` in `{0}`")]
    TooManySlashes(String),
}

/// Scalar from an integer.
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Scalar p/q. Panics on q = 0; intended for literals in code and tests.
pub fn ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`. Rejects zero denominators instead of panicking,
/// so malformed input files surface as parse errors.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let mut parts = s.split('/');
    let num_str = parts.next().unwrap();
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(num_str.to_string()))?;
    let den: BigInt = match parts.next() {
        None => BigInt::one(),
        Some(d) => d
            .parse()
            .map_err(|_| ScalarParseError::BadInteger(d.to_string()))?,
    };
    if parts.next().is_some() {
        return Err(ScalarParseError::TooManySlashes(s.to_string()));
    }
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical wire form: `"p"` or `"p/q"`, sign on the numerator.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Formats a coordinate vector as `[a, b, c]`.
pub fn format_vec(v: &[Scalar]) -> String {
    let items: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", items.join(", "))
}

/// True when every entry is zero.
pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-5/7", "10/4"] {
            let v = parse_scalar(s).unwrap();
            let back = parse_scalar(&format_scalar(&v)).unwrap();
            assert_eq!(v, back);
        }
        // 10/4 reduces on parse
        assert_eq!(format_scalar(&parse_scalar("10/4").unwrap()), "5/2");
        // sign moves to the numerator
        assert_eq!(format_scalar(&BigRational::new(BigInt::from(1), BigInt::from(-2))), "-1/2");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(parse_scalar("1/0"), Err(ScalarParseError::ZeroDenominator("1/0".into())));
        assert_eq!(parse_scalar(""), Err(ScalarParseError::Empty));
        assert!(matches!(parse_scalar("a/2"), Err(ScalarParseError::BadInteger(_))));
        assert!(matches!(parse_scalar("1/2/3"), Err(ScalarParseError::TooManySlashes(_))));
    }

    #[test]
    fn invariants_hold_through_arithmetic() {
        let a = ratio(3, 6);
        let b = ratio(-2, 4);
        let c = &a + &b;
        assert!(c.is_zero());
        let d = &a * &b;
        assert!(d.denom() > &BigInt::zero());
        assert_eq!(d, ratio(-1, 4));
    }
}
