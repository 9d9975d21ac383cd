//! Parsing and printing of exact rationals in the `p/q` wire format.
//!
//! The denominator part is optional: `"5"` parses as `5/1`. No whitespace
//! is allowed inside a value; surrounding whitespace is the caller's
//! problem. Printing always emits the reduced form, omitting `/1`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rational};

/// Parses `p` or `p/q`. Offsets in errors are relative to `s`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (value, rest) = parse_rational_prefix(s, 0)?;
    if !rest.is_empty() {
        return Err(Error::parse(
            s,
            s.len() - rest.len(),
            "trailing characters after rational",
        ));
    }
    Ok(value)
}

/// Parses a rational at the start of `s`, returning the remainder.
/// `base` is added to error positions so callers scanning a larger string
/// report offsets into the original input.
pub(crate) fn parse_rational_prefix(s: &str, base: usize) -> Result<(Rational, &str)> {
    let (numer, rest) = parse_int_prefix(s, base)?;
    if let Some(stripped) = rest.strip_prefix('/') {
        let denom_pos = base + (s.len() - stripped.len());
        let (denom, rest2) = parse_int_prefix(stripped, denom_pos)?;
        if denom.is_zero() {
            return Err(Error::parse(s, denom_pos, "denominator must be nonzero"));
        }
        Ok((Rational::new(numer, denom), rest2))
    } else {
        Ok((Rational::from_integer(numer), rest))
    }
}

/// Parses a (possibly negative) decimal integer at the start of `s`.
pub(crate) fn parse_int_prefix(s: &str, base: usize) -> Result<(Int, &str)> {
    let bytes = s.as_bytes();
    let mut i = 0;
    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
        i += 1;
    }
    let digits_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits_start {
        return Err(Error::parse(s, base + i, "expected a digit"));
    }
    let value: Int = s[..i]
        .parse()
        .map_err(|_| Error::parse(s, base, "invalid integer"))?;
    Ok((value, &s[i..]))
}

/// Prints a rational as `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if `r >= 0`.
pub fn is_nonnegative(r: &Rational) -> bool {
    !r.numer().is_negative()
}

/// True if `r >= 1`.
pub fn is_at_least_one(r: &Rational) -> bool {
    *r >= Rational::one()
}

pub fn rational_from_u64(numer: u64, denom: u64) -> Rational {
    Rational::new(Int::from(numer), Int::from(denom))
}
