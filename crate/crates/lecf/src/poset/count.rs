//! Exact linear-extension counting.
//!
//! `e(P)` equals the number of maximal chains from the empty set to the
//! full ground set in the lattice of order ideals. The DP walks that
//! lattice layer by layer, representing each ideal by its frontier along a
//! minimum chain cover: an ideal meets every chain in a prefix, so a
//! width-`w` profile of prefix lengths identifies it. For the width-2 and
//! width-3 posets the constructions produce this is polynomial in `n`; a
//! cap on the number of ideals turns runaway inputs into a clean resource
//! error instead of an OOM.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Poset, BRUTE_FORCE_MAX};
use crate::error::{Error, Result};
use crate::Count;

pub fn count_le_capped(p: &Poset, ideal_cap: u64) -> Result<Count> {
    count_le_with_ideals(p, ideal_cap).map(|(count, _)| count)
}

/// Returns `(e(P), number of order ideals)`.
pub fn count_le_with_ideals(p: &Poset, ideal_cap: u64) -> Result<(Count, u64)> {
    let n = p.n();
    if n == 0 {
        return Ok((Count::one(), 1));
    }
    let chains = p.chain_cover();
    let w = chains.len();
    let lens: Vec<u16> = chains.iter().map(|c| c.len() as u16).collect();

    let mut chain_of = vec![0usize; n];
    let mut pos_of = vec![0u16; n];
    for (j, chain) in chains.iter().enumerate() {
        for (k, &v) in chain.iter().enumerate() {
            chain_of[v] = j;
            pos_of[v] = k as u16;
        }
    }

    // req[v][j]: how far chain j must have advanced before v can enter.
    let mut req = vec![vec![0u16; w]; n];
    for v in 0..n {
        for u in 0..n {
            if p.closure().get(u, v) {
                let j = chain_of[u];
                req[v][j] = req[v][j].max(pos_of[u] + 1);
            }
        }
    }

    let mut layer: HashMap<Vec<u16>, Count> = HashMap::new();
    layer.insert(vec![0u16; w], Count::one());
    let mut ideals: u64 = 1;

    for _ in 0..n {
        let mut next: HashMap<Vec<u16>, Count> = HashMap::with_capacity(layer.len() + w);
        for (profile, cnt) in &layer {
            for j in 0..w {
                if profile[j] >= lens[j] {
                    continue;
                }
                let v = chains[j][profile[j] as usize];
                if (0..w).all(|i| profile[i] >= req[v][i]) {
                    let mut np = profile.clone();
                    np[j] += 1;
                    match next.get_mut(&np) {
                        Some(acc) => *acc += cnt,
                        None => {
                            next.insert(np, cnt.clone());
                        }
                    }
                }
            }
        }
        ideals += next.len() as u64;
        if ideals > ideal_cap {
            return Err(Error::resource(
                ideal_cap,
                format!("order-ideal lattice of a {n}-element poset"),
            ));
        }
        layer = next;
    }

    debug_assert_eq!(layer.len(), 1);
    let count = layer.into_values().next().unwrap_or_else(Count::zero);
    Ok((count, ideals))
}

/// Counts extensions by enumerating every topological order. Independent
/// of the ideal DP; guarded to `n <= 9`.
pub fn count_le_bruteforce(p: &Poset) -> Result<Count> {
    let n = p.n();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::domain(format!(
            "brute-force counting refuses posets with more than {BRUTE_FORCE_MAX} elements (got {n})"
        )));
    }
    let mut preds = vec![0u16; n];
    for v in 0..n {
        for u in 0..n {
            if p.closure().get(u, v) {
                preds[v] |= 1 << u;
            }
        }
    }
    let full = if n == 0 { 0 } else { (1u16 << n) - 1 };

    fn rec(used: u16, full: u16, preds: &[u16]) -> u64 {
        if used == full {
            return 1;
        }
        let mut total = 0;
        for (v, &pv) in preds.iter().enumerate() {
            if used & (1 << v) == 0 && pv & !used == 0 {
                total += rec(used | (1 << v), full, preds);
            }
        }
        total
    }

    Ok(Count::from(rec(0, full, &preds)))
}
