//! Exact arithmetic for continued fractions and the posets they generate.
//!
//! The library has four layers:
//!
//! * [`confrac`] — simple, generalized (GCF) and rational generalized (RGCF)
//!   continued fractions with exact evaluation, convergent tables, weights,
//!   and bounded weight-minimization searches.
//! * [`poset`] — a finite poset kernel: construction primitives, exact
//!   linear-extension counting via the lattice of order ideals, width by
//!   minimum chain cover, and the relative count `rho(P, x) = e(P)/e(P-x)`.
//! * [`constructions`] — hybrid sums, flip-flops and the synthesis routines
//!   that turn a continued fraction into a poset whose extension counts
//!   realize it, together with self-verifying reports.
//! * [`search`] — desk-scale experiments: numerator scans, weight
//!   histograms, poset enumeration up to isomorphism, and the derived
//!   `T(k)` / `mu(n)` tables.
//!
//! All arithmetic is exact. The concrete scalar types used throughout are
//! the aliases below; the low-level continued-fraction kernel in
//! [`confrac::kernel`] is generic over `num_integer::Integer` so the same
//! code runs on `u64` in scan hot paths and on `BigInt` everywhere else.

// Index loops mirror the (row, column) structure of the closure matrices.
#![allow(clippy::needless_range_loop)]

pub mod confrac;
pub mod constructions;
pub mod error;
pub mod poset;
pub mod rational;
pub mod search;

/// Signed arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Nonnegative arbitrary-precision integer, used for extension counts
/// (`e(P)` can reach `n!`).
pub type Count = num_bigint::BigUint;
/// Exact rational number, always stored reduced with positive denominator.
pub type Rational = num_rational::Ratio<Int>;

pub use error::{Error, Result};
