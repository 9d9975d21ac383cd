//! Poset catalog up to isomorphism, and the `T(k)` / `mu(n)` tables.
//!
//! Level `n` is generated from level `n-1` by attaching a fresh maximal
//! element above every order ideal of every class; removing a maximal
//! element from any `n`-element poset lands back on a level-`(n-1)` class,
//! so the extension step is complete. Duplicates are removed by canonical
//! form. The catalog persists as line-delimited JSON of canonical cover
//! lists so an expensive enumeration is resumable.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical::canonical_covers;
use crate::error::{Error, Result};
use crate::poset::{Poset, DEFAULT_IDEAL_CAP};

/// Default hard limit on the catalog level.
pub const MAX_CATALOG_N: usize = 8;

/// One isomorphism class: canonical cover list plus its extension count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub covers: Vec<(u16, u16)>,
    pub e: u64,
}

impl CatalogEntry {
    pub fn to_poset(&self, n: usize) -> Poset {
        Poset::new(n, self.covers.iter().map(|&(u, v)| (u as usize, v as usize)))
            .expect("catalog entries are valid posets")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogLine {
    n: usize,
    covers: Vec<(u16, u16)>,
}

/// All poset isomorphism classes with at most `max_n()` elements,
/// organized by element count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetCatalog {
    levels: Vec<Vec<CatalogEntry>>,
}

impl PosetCatalog {
    /// Just the empty poset.
    pub fn empty() -> Self {
        PosetCatalog {
            levels: vec![vec![CatalogEntry { covers: Vec::new(), e: 1 }]],
        }
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[CatalogEntry] {
        &self.levels[n]
    }

    pub fn class_count(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    /// Extends the catalog level by level up to `target_n`.
    pub fn extend_to(&mut self, target_n: usize, hard_limit: usize) -> Result<()> {
        if target_n > hard_limit {
            return Err(Error::domain(format!(
                "catalog level {target_n} exceeds the hard limit {hard_limit}"
            )));
        }
        while self.max_n() < target_n {
            let parent_n = self.max_n();
            let child_n = parent_n + 1;

            let candidate_lists: Vec<Vec<Vec<(u16, u16)>>> = self.levels[parent_n]
                .par_iter()
                .map(|entry| extend_entry(entry, parent_n))
                .collect::<Result<_>>()?;

            let mut seen: HashSet<Vec<(u16, u16)>> = HashSet::new();
            let mut classes: Vec<Vec<(u16, u16)>> = Vec::new();
            for list in candidate_lists {
                for covers in list {
                    if seen.insert(covers.clone()) {
                        classes.push(covers);
                    }
                }
            }
            classes.sort_unstable();

            let entries: Vec<CatalogEntry> = classes
                .into_par_iter()
                .map(|covers| {
                    let poset = Poset::new(
                        child_n,
                        covers.iter().map(|&(u, v)| (u as usize, v as usize)),
                    )?;
                    let e = poset
                        .count_le_capped(DEFAULT_IDEAL_CAP)?
                        .to_u64()
                        .expect("e(P) <= 8! fits in u64");
                    Ok(CatalogEntry { covers, e })
                })
                .collect::<Result<_>>()?;
            self.levels.push(entries);
        }
        Ok(())
    }

    /// `T(k)`: the set of extension counts achievable with at most `k`
    /// elements.
    pub fn t_set(&self, k: usize) -> Result<BTreeSet<u64>> {
        if k > self.max_n() {
            return Err(Error::domain(format!(
                "catalog only reaches {} elements, asked for {k}",
                self.max_n()
            )));
        }
        let mut out = BTreeSet::new();
        for n in 0..=k {
            for entry in &self.levels[n] {
                out.insert(entry.e);
            }
        }
        Ok(out)
    }

    /// `mu(n) = min { k : n in T(k) }` for every `n <= n_max` realizable
    /// within the catalog; unrealized entries map to `None` ("> max_n").
    pub fn mu_table(&self, n_max: u64) -> MuTable {
        let mut entries: BTreeMap<u64, Option<usize>> = BTreeMap::new();
        for k in 0..=self.max_n() {
            for entry in &self.levels[k] {
                if entry.e <= n_max {
                    entries.entry(entry.e).or_insert(Some(k));
                }
            }
        }
        for n in 1..=n_max {
            entries.entry(n).or_insert(None);
        }
        MuTable {
            k_max: self.max_n(),
            entries,
        }
    }

    /// `|T(k)|` and the density of `T(k)` in `{1..limit}`.
    pub fn density(&self, k: usize, limit: u64) -> Result<DensityReport> {
        let t = self.t_set(k)?;
        let in_range = t.iter().filter(|&&v| v >= 1 && v <= limit).count();
        Ok(DensityReport {
            k,
            limit,
            t_size: t.len(),
            in_range,
            density: in_range as f64 / limit as f64,
        })
    }

    /// Writes one JSON line per class, levels ascending. The file is only
    /// written after every level in it is complete, so a reload can trust
    /// whatever levels it finds.
    pub fn save_jsonl(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let write = || -> std::io::Result<()> {
            let mut file = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
            for (n, level) in self.levels.iter().enumerate() {
                for entry in level {
                    let line = CatalogLine {
                        n,
                        covers: entry.covers.clone(),
                    };
                    serde_json::to_writer(&mut file, &line)?;
                    file.write_all(b"\n")?;
                }
            }
            file.flush()?;
            std::fs::rename(&tmp, path)?;
            Ok(())
        };
        write().map_err(|e| Error::Io(format!("writing catalog {}: {e}", path.display())))
    }

    /// Loads a catalog written by [`PosetCatalog::save_jsonl`], recomputing
    /// extension counts.
    pub fn load_jsonl(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)
            .map_err(|e| Error::Io(format!("opening catalog {}: {e}", path.display())))?;
        let mut by_level: BTreeMap<usize, Vec<Vec<(u16, u16)>>> = BTreeMap::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::Io(format!("reading catalog: {e}")))?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: CatalogLine = serde_json::from_str(&line)
                .map_err(|e| Error::domain(format!("bad catalog line: {e}")))?;
            by_level.entry(parsed.n).or_default().push(parsed.covers);
        }
        let max_n = by_level.keys().max().copied().unwrap_or(0);
        for n in 0..=max_n {
            if n > 0 && !by_level.contains_key(&n) {
                return Err(Error::domain(format!("catalog file is missing level {n}")));
            }
        }
        let mut levels = Vec::with_capacity(max_n + 1);
        levels.push(vec![CatalogEntry { covers: Vec::new(), e: 1 }]);
        for n in 1..=max_n {
            let mut classes = by_level.remove(&n).unwrap_or_default();
            classes.sort_unstable();
            classes.dedup();
            let entries: Vec<CatalogEntry> = classes
                .into_par_iter()
                .map(|covers| {
                    let poset = Poset::new(
                        n,
                        covers.iter().map(|&(u, v)| (u as usize, v as usize)),
                    )?;
                    let e = poset
                        .count_le_capped(DEFAULT_IDEAL_CAP)?
                        .to_u64()
                        .expect("catalog counts fit in u64");
                    Ok(CatalogEntry { covers, e })
                })
                .collect::<Result<_>>()?;
            levels.push(entries);
        }
        Ok(PosetCatalog { levels })
    }
}

/// All extensions of one class by a new maximal element, canonicalized.
fn extend_entry(entry: &CatalogEntry, parent_n: usize) -> Result<Vec<Vec<(u16, u16)>>> {
    let parent = entry.to_poset(parent_n);
    let child_n = parent_n + 1;
    let new_elem = parent_n as u16;

    // Down-set masks from the closure.
    let mut down = vec![0u32; parent_n];
    for v in 0..parent_n {
        for u in 0..parent_n {
            if parent.lt(u, v) {
                down[v] |= 1 << u;
            }
        }
    }

    let mut out = Vec::new();
    for mask in 0..(1u32 << parent_n) {
        // mask must be an order ideal
        let mut closed = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if down[v] & !mask != 0 {
                closed = false;
                break;
            }
        }
        if !closed {
            continue;
        }
        // covers from the maximal elements of the ideal to the new element
        let mut covers = entry.covers.clone();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let v_up_in_mask = (0..parent_n).any(|w| mask >> w & 1 == 1 && parent.lt(v, w));
            if !v_up_in_mask {
                covers.push((v as u16, new_elem));
            }
        }
        let poset = Poset::new(
            child_n,
            covers.iter().map(|&(u, v)| (u as usize, v as usize)),
        )?;
        out.push(canonical_covers(&poset)?);
    }
    Ok(out)
}

/// Builds the catalog up to `max_n` (default hard limit
/// [`MAX_CATALOG_N`]).
pub fn enumerate_posets(max_n: usize) -> Result<PosetCatalog> {
    enumerate_posets_with_limit(max_n, MAX_CATALOG_N)
}

pub fn enumerate_posets_with_limit(max_n: usize, hard_limit: usize) -> Result<PosetCatalog> {
    let mut catalog = PosetCatalog::empty();
    catalog.extend_to(max_n, hard_limit)?;
    Ok(catalog)
}

/// `mu(n)` for all realized `n`, with `None` marking "> k_max".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTable {
    pub k_max: usize,
    pub entries: BTreeMap<u64, Option<usize>>,
}

impl MuTable {
    pub fn get(&self, n: u64) -> Option<usize> {
        self.entries.get(&n).copied().flatten()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub k: usize,
    pub limit: u64,
    pub t_size: usize,
    pub in_range: usize,
    pub density: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let catalog = enumerate_posets(4).unwrap();
        assert_eq!(catalog.class_count(0), 1);
        assert_eq!(catalog.class_count(1), 1);
        assert_eq!(catalog.class_count(2), 2);
        assert_eq!(catalog.class_count(3), 5); // hand enumeration
        assert_eq!(catalog.class_count(4), 16);
    }

    #[test]
    fn t_set_basics() {
        let catalog = enumerate_posets(4).unwrap();
        let t1 = catalog.t_set(1).unwrap();
        assert_eq!(t1, BTreeSet::from([1]));
        let t4 = catalog.t_set(4).unwrap();
        assert!(t4.contains(&24)); // A_4
        assert!((1..=4).all(|n| t4.contains(&n)));
        assert_eq!(*t4.iter().max().unwrap(), 24);
        assert!(catalog.t_set(5).is_err());
    }

    #[test]
    fn mu_small_values() {
        let catalog = enumerate_posets(4).unwrap();
        let mu = catalog.mu_table(24);
        assert_eq!(mu.get(1), Some(0)); // the empty poset
        assert_eq!(mu.get(2), Some(2));
        assert_eq!(mu.get(5), Some(4)); // e(Z_4) = 5
        assert_eq!(mu.entries[&23], None); // not realizable with <= 4 elements
    }

    #[test]
    fn density_report() {
        let catalog = enumerate_posets(4).unwrap();
        let report = catalog.density(1, 10).unwrap();
        assert_eq!(report.t_size, 1);
        assert_eq!(report.in_range, 1);
        assert!((report.density - 0.1).abs() < 1e-12);
    }

    #[test]
    fn jsonl_roundtrip() {
        let catalog = enumerate_posets(4).unwrap();
        let dir = std::env::temp_dir().join(format!("lecf-catalog-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("catalog.jsonl");
        catalog.save_jsonl(&path).unwrap();
        let back = PosetCatalog::load_jsonl(&path).unwrap();
        assert_eq!(catalog, back);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
