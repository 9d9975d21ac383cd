//! Desk-scale experiments: numerator scans, weight histograms, the poset
//! catalog up to isomorphism and the tables `T(k)` and `mu(n)` derived
//! from it, plus the combined s/g/r evidence scan.
//!
//! The asymptotic statements these scans relate to are checked only
//! against explicit numeric thresholds with generous slack; every such
//! comparison is labeled empirical and proves nothing.

pub mod canonical;
pub mod catalog;

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::confrac::minimize::{minimize_g, minimize_r, SearchBounds};
use crate::confrac::kernel;
use crate::error::{Error, Result};
use crate::rational::rational_from_u64;
use crate::Int;

pub use canonical::canonical_covers;
pub use catalog::{enumerate_posets, DensityReport, MuTable, PosetCatalog, MAX_CATALOG_N};

/// Euler's totient by trial division.
pub fn euler_phi(d: u64) -> u64 {
    let mut result = d;
    let mut rest = d;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            result -= result / p;
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

const TWELVE_OVER_PI_SQ: f64 = 12.0 / (std::f64::consts::PI * std::f64::consts::PI);
const SIX_OVER_PI_SQ: f64 = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);

/// Empirical threshold used by the numerator scan:
/// `2 * (12/pi^2) * ln d * ln ln d` (factor-2 slack over the typical
/// weight scale). Meaningless for very small `d` where `ln ln d <= 0`.
pub fn weight_threshold(d: u64) -> f64 {
    let ln_d = (d as f64).ln();
    2.0 * TWELVE_OVER_PI_SQ * ln_d * ln_d.ln()
}

/// Expected mean weight scale `(6/pi^2) (ln d)^2`.
pub fn mean_weight_scale(d: u64) -> f64 {
    let ln_d = (d as f64).ln();
    SIX_OVER_PI_SQ * ln_d * ln_d
}

/// Concentration center `(12/pi^2) ln d ln ln d` and window
/// `(ln d)(ln ln d)^{2/3}`.
pub fn concentration_center(d: u64) -> f64 {
    let ln_d = (d as f64).ln();
    TWELVE_OVER_PI_SQ * ln_d * ln_d.ln()
}

pub fn concentration_window(d: u64) -> f64 {
    let ln_d = (d as f64).ln();
    ln_d * ln_d.ln().max(0.0).powf(2.0 / 3.0)
}

/// One row of the numerator scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub d: u64,
    /// Smallest coprime numerator attaining the minimum weight.
    pub best_c: u64,
    pub min_weight: u64,
    pub phi: u64,
    /// [`weight_threshold`] for this `d`.
    pub bound_value: f64,
    pub within_bound: bool,
}

/// Exact minimum of `s(c/d)` over coprime `1 <= c < d`.
pub fn best_numerator(d: u64) -> Result<ScanRecord> {
    if d < 2 {
        return Err(Error::domain("best_numerator needs d >= 2"));
    }
    let mut best_c = 1;
    let mut min_weight = u64::MAX;
    for c in 1..d {
        if c.gcd(&d) == 1 {
            let w = kernel::weight(c, d);
            if w < min_weight {
                min_weight = w;
                best_c = c;
            }
        }
    }
    let bound_value = weight_threshold(d);
    Ok(ScanRecord {
        d,
        best_c,
        min_weight,
        phi: euler_phi(d),
        bound_value,
        within_bound: (min_weight as f64) <= bound_value,
    })
}

/// Numerator scan over an inclusive range of denominators, in parallel
/// with a deterministic (ascending `d`) result order.
pub fn zaremba_scan(d_lo: u64, d_hi: u64) -> Result<Vec<ScanRecord>> {
    if d_lo < 2 || d_hi < d_lo {
        return Err(Error::domain("need 2 <= d_lo <= d_hi"));
    }
    (d_lo..=d_hi)
        .into_par_iter()
        .map(best_numerator)
        .collect()
}

/// Distribution of `s(c/d)` over coprime `c`, with empirical comparisons
/// against the displayed mean and concentration quantities.
#[derive(Debug, Clone)]
pub struct WeightHistogram {
    pub d: u64,
    /// weight -> number of coprime numerators attaining it
    pub counts: BTreeMap<u64, u64>,
    pub phi: u64,
    pub mean: f64,
    /// `(6/pi^2)(ln d)^2`
    pub expected_mean: f64,
    pub mean_ratio: f64,
    /// `(12/pi^2) ln d ln ln d`
    pub concentration_center: f64,
    /// `(ln d)(ln ln d)^{2/3}`
    pub concentration_window: f64,
    /// Fraction of all `c` in `1..=d` (not only coprime) whose reduced
    /// weight falls outside the window around the center.
    pub outside_window_fraction: f64,
}

pub fn weight_histogram(d: u64) -> Result<WeightHistogram> {
    if d < 2 {
        return Err(Error::domain("weight_histogram needs d >= 2"));
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut total: u64 = 0;
    let mut phi: u64 = 0;
    let center = concentration_center(d);
    let window = concentration_window(d);
    let mut outside: u64 = 0;
    for c in 1..=d {
        let w = kernel::weight(c, d);
        if ((w as f64) - center).abs() > window {
            outside += 1;
        }
        if c.gcd(&d) == 1 {
            *counts.entry(w).or_insert(0) += 1;
            total += w;
            phi += 1;
        }
    }
    let mean = total as f64 / phi as f64;
    let expected_mean = mean_weight_scale(d);
    Ok(WeightHistogram {
        d,
        counts,
        phi,
        mean,
        expected_mean,
        mean_ratio: mean / expected_mean,
        concentration_center: center,
        concentration_window: window,
        outside_window_fraction: outside as f64 / d as f64,
    })
}

/// Which numerators the s/g/r scan should try for each denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumeratorPolicy {
    /// Only the numerators attaining the minimum simple weight.
    BestS,
    /// Every coprime numerator (slow; small `d` only).
    All,
}

/// One row of the s/g/r evidence table: the simple-weight minimum over
/// coprime `c`, and the bounded-search g and r minima of `d/c` over the
/// candidate numerators.
#[derive(Debug, Clone)]
pub struct GrRecord {
    pub d: u64,
    pub best_c: u64,
    pub s_min: u64,
    pub g_min: Int,
    pub r_min: Int,
    pub g_witness: String,
    pub r_witness: String,
}

pub fn gr_record(d: u64, policy: NumeratorPolicy, bounds: &SearchBounds) -> Result<GrRecord> {
    if d < 2 {
        return Err(Error::domain("gr scan needs d >= 2"));
    }
    let weights: Vec<(u64, u64)> = (1..d)
        .filter(|c| c.gcd(&d) == 1)
        .map(|c| (c, kernel::weight(c, d)))
        .collect();
    let s_min = weights.iter().map(|&(_, w)| w).min().expect("d >= 2 has c = 1");
    let best_c = weights
        .iter()
        .find(|&&(_, w)| w == s_min)
        .expect("minimum is attained")
        .0;
    let candidates: Vec<u64> = match policy {
        NumeratorPolicy::BestS => weights
            .iter()
            .filter(|&&(_, w)| w == s_min)
            .map(|&(c, _)| c)
            .collect(),
        NumeratorPolicy::All => weights.iter().map(|&(c, _)| c).collect(),
    };

    let mut g_min: Option<(Int, String)> = None;
    let mut r_min: Option<(Int, String)> = None;
    for &c in &candidates {
        let value = rational_from_u64(d, c);
        let g = minimize_g(&value, bounds)?;
        if g_min.as_ref().is_none_or(|(w, _)| g.weight < *w) {
            g_min = Some((g.weight, g.witness.to_string()));
        }
        let r = minimize_r(&value, bounds)?;
        if r_min.as_ref().is_none_or(|(w, _)| r.weight < *w) {
            r_min = Some((r.weight, r.witness.to_string()));
        }
    }
    let (g_min, g_witness) = g_min.expect("at least one candidate");
    let (r_min, r_witness) = r_min.expect("at least one candidate");
    Ok(GrRecord {
        d,
        best_c,
        s_min,
        g_min,
        r_min,
        g_witness,
        r_witness,
    })
}

pub fn gr_scan(
    d_lo: u64,
    d_hi: u64,
    policy: NumeratorPolicy,
    bounds: &SearchBounds,
) -> Result<Vec<GrRecord>> {
    if d_lo < 2 || d_hi < d_lo {
        return Err(Error::domain("need 2 <= d_lo <= d_hi"));
    }
    (d_lo..=d_hi)
        .into_par_iter()
        .map(|d| gr_record(d, policy, bounds))
        .collect()
}
