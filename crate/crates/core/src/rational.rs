//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator. This module adds the textual forms used by
//! the CLI and the report files.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Always `num/den`, even for integers. Used in machine-readable output.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` or an integer literal, with an optional leading sign on `a`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_signed(num, 0)?;
    let denom = match den {
        Some(d) => {
            let off = num.len() + 1;
            if d.starts_with(['+', '-']) {
                return Err(Error::Parse { pos: off, msg: "denominator must be unsigned".into() });
            }
            let d = parse_digits(d, off)?;
            if d.is_zero() {
                return Err(Error::Parse { pos: off, msg: "zero denominator".into() });
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

fn parse_signed(s: &str, off: usize) -> Result<BigInt> {
    let (neg, digits, shift) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..], 1),
        Some(b'+') => (false, &s[1..], 1),
        _ => (false, s, 0),
    };
    let v = parse_digits(digits, off + shift)?;
    Ok(if neg { -v } else { v })
}

fn parse_digits(s: &str, off: usize) -> Result<BigInt> {
    if s.is_empty() {
        return Err(Error::Parse { pos: off, msg: "expected digits".into() });
    }
    if let Some(i) = s.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(Error::Parse { pos: off + i, msg: "unexpected character in number".into() });
    }
    Ok(s.parse::<BigInt>().expect("ascii digits"))
}

pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
pub(crate) fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
