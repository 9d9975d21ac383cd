//! Canonical labeling for small posets.
//!
//! Iterative partition refinement on structural signatures (height, depth,
//! down-set and up-set sizes, cover degrees), then an exhaustive scan of
//! the labelings consistent with the refined cells, keeping the
//! lexicographically smallest cover list. Exponential in the largest cell,
//! which is fine for the catalog sizes (n <= 8); a guard rejects anything
//! past 11 elements.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Hard guard: beyond this the within-cell scan is hopeless anyway.
pub const MAX_CANONICAL_N: usize = 11;

/// Cover list of the canonically labeled poset; equal across isomorphic
/// posets, distinct otherwise.
pub fn canonical_covers(p: &Poset) -> Result<Vec<(u16, u16)>> {
    let n = p.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::domain(format!(
            "canonical labeling is limited to {MAX_CANONICAL_N} elements (got {n})"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let covers = p.covers();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in covers {
        succs[u].push(v);
        preds[v].push(u);
    }

    // Height/depth along the closure, set sizes, cover degrees.
    let mut order: Vec<usize> = (0..n).collect();
    let down_size =
        |v: usize| -> usize { (0..n).filter(|&u| p.lt(u, v)).count() };
    let up_size = |v: usize| -> usize { (0..n).filter(|&u| p.lt(v, u)).count() };
    order.sort_by_key(|&v| down_size(v));
    let mut height = vec![0usize; n];
    for &v in &order {
        for &u in &preds[v] {
            height[v] = height[v].max(height[u] + 1);
        }
    }
    let mut depth = vec![0usize; n];
    for &v in order.iter().rev() {
        for &w in &succs[v] {
            depth[v] = depth[v].max(depth[w] + 1);
        }
    }

    let mut colors: Vec<u32> = {
        let sigs: Vec<(usize, usize, usize, usize, usize, usize)> = (0..n)
            .map(|v| {
                (
                    height[v],
                    depth[v],
                    down_size(v),
                    up_size(v),
                    preds[v].len(),
                    succs[v].len(),
                )
            })
            .collect();
        assign_colors(&sigs)
    };

    // Refine by neighbor color multisets until the partition stabilizes.
    let mut class_count = colors.iter().max().map(|&c| c as usize + 1).unwrap_or(0);
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut pc: Vec<u32> = preds[v].iter().map(|&u| colors[u]).collect();
                let mut sc: Vec<u32> = succs[v].iter().map(|&w| colors[w]).collect();
                pc.sort_unstable();
                sc.sort_unstable();
                (colors[v], pc, sc)
            })
            .collect();
        let new_colors = assign_colors(&sigs);
        let new_count = new_colors.iter().max().map(|&c| c as usize + 1).unwrap_or(0);
        colors = new_colors;
        if new_count == class_count {
            break;
        }
        class_count = new_count;
    }

    // Cells in color order; canonical labels are assigned blockwise.
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for v in 0..n {
        cells[colors[v] as usize].push(v);
    }
    let mut base = vec![0usize; class_count];
    let mut acc = 0;
    for (i, cell) in cells.iter().enumerate() {
        base[i] = acc;
        acc += cell.len();
    }

    let mut perm = vec![0usize; n];
    let mut best: Option<Vec<(u16, u16)>> = None;
    assign_cell(0, &cells, &base, covers, &mut perm, &mut best);
    Ok(best.expect("at least one labeling exists"))
}

fn assign_colors<S: Ord + Clone>(sigs: &[S]) -> Vec<u32> {
    let mut ids: BTreeMap<S, u32> = BTreeMap::new();
    for sig in sigs {
        let next = ids.len() as u32;
        ids.entry(sig.clone()).or_insert(next);
    }
    // Renumber in sorted signature order so the ids are invariant.
    let mut sorted: Vec<&S> = ids.keys().collect();
    sorted.sort();
    let rank: BTreeMap<&S, u32> = sorted
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    sigs.iter().map(|s| rank[s]).collect()
}

fn assign_cell(
    cell_idx: usize,
    cells: &[Vec<usize>],
    base: &[usize],
    covers: &[(usize, usize)],
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<(u16, u16)>>,
) {
    if cell_idx == cells.len() {
        let mut mapped: Vec<(u16, u16)> = covers
            .iter()
            .map(|&(u, v)| (perm[u] as u16, perm[v] as u16))
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            *best = Some(mapped);
        }
        return;
    }
    let cell = &cells[cell_idx];
    let offset = base[cell_idx];
    let mut used = vec![false; cell.len()];
    permute_cell(cell, offset, &mut used, 0, cells, base, covers, perm, best, cell_idx);
}

#[allow(clippy::too_many_arguments)]
fn permute_cell(
    cell: &[usize],
    offset: usize,
    used: &mut Vec<bool>,
    slot: usize,
    cells: &[Vec<usize>],
    base: &[usize],
    covers: &[(usize, usize)],
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<(u16, u16)>>,
    cell_idx: usize,
) {
    if slot == cell.len() {
        assign_cell(cell_idx + 1, cells, base, covers, perm, best);
        return;
    }
    for i in 0..cell.len() {
        if !used[i] {
            used[i] = true;
            perm[cell[i]] = offset + slot;
            permute_cell(cell, offset, used, slot + 1, cells, base, covers, perm, best, cell_idx);
            used[i] = false;
        }
    }
}
