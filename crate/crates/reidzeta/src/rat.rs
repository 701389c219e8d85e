//! Exact rational scalars and their `"p/q"` string form.
//!
//! `Rat` is [`num_rational::BigRational`]: always reduced, denominator
//! positive, zero stored as `0/1`. All JSON surfaces carry rationals as
//! strings like `"3"` or `"-1/2"`; the parser here is strict and never
//! panics on malformed input.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics if `den == 0`; use for literals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Formats as `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Strict parse of `"p"` or `"p/q"` with optional leading `-` on p.
///
/// Rejects empty parts, whitespace, and zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || {
        Error::invalid(format!(
            "malformed rational {s:?}, expected \"p\" or \"p/q\""
        ))
    };
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = parse_bigint(num_str).ok_or_else(bad)?;
    let den: BigInt = match den_str {
        Some(d) => parse_bigint(d).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::invalid(format!(
            "zero denominator in rational {s:?}"
        )));
    }
    Ok(Rat::new(num, den))
}

fn parse_bigint(s: &str) -> Option<BigInt> {
    if s.is_empty() {
        return None;
    }
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Sign as -1, 0 or 1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
