//! Exact rational scalars.
//!
//! Every coordinate, coefficient and count in this crate is an arbitrary
//! precision fraction kept in lowest terms with a positive denominator;
//! there is no floating point anywhere. The scalar itself is
//! [`num_rational::BigRational`], re-exported as [`Rational`], plus the
//! text conventions used by the polytope file format and all renderers:
//! `p/q` with no whitespace, integers without the `/1`.

use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;

/// The scalar used everywhere: an exact, arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num/den` as a [`Rational`].
///
/// Panics if `den == 0`; intended for literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat() requires a nonzero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer. No whitespace, exactly one optional `/`.
///
/// Returns a message (without line context) on failure; callers that read
/// files attach the line number.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let (num_str, den_str) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num = BigInt::from_str(num_str)
        .map_err(|_| format!("malformed rational `{token}`"))?;
    let den = match den_str {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("malformed rational `{token}`"))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{token}`"));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-0").unwrap(), rat_int(0));
        assert_eq!(parse_rational("0/5").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1//2", "/2", "1/", "1/0", "a", "1.5", "1 /2"] {
            assert!(parse_rational(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let r = Rational::new(BigInt::from(-4), BigInt::from(-6));
        assert_eq!((r.numer().to_string(), r.denom().to_string()), ("2".into(), "3".into()));
        let r = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!((r.numer().to_string(), r.denom().to_string()), ("-2".into(), "3".into()));
    }
}
