//! Exact integer and rational types plus their canonical text form.
//!
//! Rationals are always held in lowest terms with a positive denominator,
//! so equality of two values is structural equality of their parts. The
//! text form is `p/q`, or plain `p` when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational in canonical reduced form.
pub type ExactRat = BigRational;

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(num: i64, den: i64) -> ExactRat {
    ExactRat::new(ExactInt::from(num), ExactInt::from(den))
}

pub fn rat_from_int(v: ExactInt) -> ExactRat {
    ExactRat::from_integer(v)
}

/// `1 / 2^e` as an exact rational.
pub fn inv_pow2(e: usize) -> ExactRat {
    ExactRat::new(ExactInt::one(), ExactInt::one() << e)
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign_pow(e: i64) -> ExactInt {
    if e.rem_euclid(2) == 0 {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}

/// Returns the integer value of `r` if its denominator is one.
pub fn to_integer(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Canonical text form: `p/q` with the sign on the numerator, or `p`.
pub fn format_rat(r: &ExactRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p` (decimal, optional sign on either part) and reduces.
pub fn parse_rat(s: &str) -> Result<ExactRat, Error> {
    let bad = |reason: &str| Error::ParseRational {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = parse_int_text(num).ok_or_else(|| bad("numerator is not an integer"))?;
    let den = parse_int_text(den).ok_or_else(|| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(ExactRat::new(num, den))
}

/// Parses a plain decimal integer.
pub fn parse_int(s: &str) -> Result<ExactInt, Error> {
    parse_int_text(s.trim()).ok_or_else(|| Error::ParseRational {
        input: s.to_string(),
        reason: "not an integer".to_string(),
    })
}

fn parse_int_text(s: &str) -> Option<ExactInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    ExactInt::from_str(s).ok()
}

/// Non-negative integer power of a rational.
pub fn rat_pow(x: &ExactRat, e: usize) -> ExactRat {
    let mut acc = ExactRat::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rat(&rat(6, 3)), "2");
        assert_eq!(format_rat(&rat(-691, 2730)), "-691/2730");
        assert_eq!(format_rat(&rat(1, -2)), "-1/2");
        assert_eq!(format_rat(&rat(0, 5)), "0");
    }

    #[test]
    fn parse_accepts_and_reduces() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("6/-8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat(" 5 ").unwrap(), rat(5, 1));
        assert_eq!(parse_rat("+2").unwrap(), rat(2, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a/2", "1/", "/3", "1.5", "1/2/3", "--1", "0x10"] {
            assert!(parse_rat(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn pow_and_helpers() {
        assert_eq!(rat_pow(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(rat_pow(&rat(7, 5), 0), rat(1, 1));
        assert_eq!(inv_pow2(5), rat(1, 32));
        assert_eq!(sign_pow(-1), int(-1));
        assert_eq!(sign_pow(4), int(1));
        assert_eq!(to_integer(&rat(10, 5)), Some(int(2)));
        assert_eq!(to_integer(&rat(1, 5)), None);
    }

    proptest! {
        #[test]
        fn text_form_round_trips(n in any::<i128>(), d in 1i128..i128::MAX, big in 0u32..200) {
            let num = ExactInt::from(n) * (ExactInt::from(3u8).pow(big));
            let r = ExactRat::new(num, ExactInt::from(d));
            let s = format_rat(&r);
            prop_assert_eq!(parse_rat(&s).unwrap(), r.clone());
            if !r.is_integer() {
                prop_assert!(!s.starts_with('+'));
                prop_assert!(!s.contains("/-"));
            }
        }
    }
}
