//! Generic continued-fraction expansion kernel.
//!
//! Works for any `num_integer::Integer` so the numerator scans can run on
//! `u64` while the public API uses `BigInt`. Inputs need not be reduced;
//! the division loop cancels the gcd on its own.

use num_integer::Integer;

/// Canonical quotient sequence of `numer / denom` with `numer >= 0`,
/// `denom >= 1`. The last quotient is automatically `>= 2` whenever the
/// sequence has length `> 1`, because remainders strictly decrease to the
/// gcd.
pub fn quotients<T: Integer + Clone>(numer: T, denom: T) -> Vec<T> {
    let mut out = Vec::new();
    let mut num = numer;
    let mut den = denom;
    while !den.is_zero() {
        let (q, r) = num.div_rem(&den);
        out.push(q);
        num = den;
        den = r;
    }
    out
}

/// Sum of the canonical quotients of `numer / denom`.
pub fn weight<T: Integer + Clone>(numer: T, denom: T) -> T {
    let mut total = T::zero();
    let mut num = numer;
    let mut den = denom;
    while !den.is_zero() {
        let (q, r) = num.div_rem(&den);
        total = total + q;
        num = den;
        den = r;
    }
    total
}
