//! Finite poset kernel.
//!
//! A [`Poset`] stores its cover relations (the Hasse diagram) plus the
//! transitive closure as a bit matrix, computed once at construction. The
//! constructor accepts any acyclic relation set and normalizes it: the
//! stored covers are always the transitive reduction. Posets are immutable
//! afterwards, so sharing them across threads is safe; the minimum chain
//! cover backing both [`Poset::width`] and the counting DP is computed
//! lazily exactly once.
//!
//! Element ids are `0..n-1` and stable under every operation except
//! [`Poset::remove`], which compacts ids and reports the mapping.

pub mod count;
pub mod io;

use std::sync::OnceLock;

use num_traits::One;

use crate::error::{Error, Result};
use crate::{Count, Rational};

/// Cap on stored ideals in the counting DP unless the caller overrides it.
pub const DEFAULT_IDEAL_CAP: u64 = 10_000_000;

/// Largest poset [`count::count_le_bruteforce`] accepts.
pub const BRUTE_FORCE_MAX: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            rows: vec![vec![0u64; words]; n],
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.rows[i][j / 64] |= 1 << (j % 64);
    }

    fn or_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let (lo, hi) = self.rows.split_at_mut(dst.max(src));
        let (d, s) = if dst < src {
            (&mut lo[dst], &hi[0])
        } else {
            (&mut hi[0], &lo[src])
        };
        for (dw, sw) in d.iter_mut().zip(s.iter()) {
            *dw |= *sw;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    /// Indices of set bits in row `i`, ascending.
    pub(crate) fn row_bits(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.rows[i]
            .iter()
            .enumerate()
            .flat_map(move |(w, &word)| {
                let mut word = word;
                std::iter::from_fn(move || {
                    if word == 0 {
                        None
                    } else {
                        let b = word.trailing_zeros() as usize;
                        word &= word - 1;
                        Some(w * 64 + b)
                    }
                })
            })
            .filter(move |&j| j < n)
    }
}

/// Finite strict partial order on elements `0..n-1`.
#[derive(Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    closure: BitMatrix,
    chains: OnceLock<Vec<Vec<usize>>>,
}

impl Clone for Poset {
    fn clone(&self) -> Self {
        Poset {
            n: self.n,
            covers: self.covers.clone(),
            labels: self.labels.clone(),
            closure: self.closure.clone(),
            chains: self.chains.clone(),
        }
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers && self.labels == other.labels
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from any acyclic set of strict relations. Transitively
    /// implied pairs are dropped, so `covers()` is the Hasse diagram no
    /// matter what was passed in.
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in relations {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "relation ({u}, {v}) out of range for {n} elements"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("reflexive relation ({u}, {u})")));
            }
            adj[u].push(v);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }

        // Kahn's algorithm: topological order and cycle detection.
        let mut indeg = vec![0usize; n];
        for row in &adj {
            for &v in row {
                indeg[v] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = queue.pop() {
            topo.push(u);
            for &v in &adj[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push(v);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::domain("relations contain a cycle"));
        }

        // Closure by bit rows in reverse topological order.
        let mut closure = BitMatrix::new(n);
        for &u in topo.iter().rev() {
            for &v in &adj[u] {
                closure.set(u, v);
                closure.or_rows(u, v);
            }
        }

        // Transitive reduction: v covers u iff v is reachable from u but
        // not reachable from any direct successor of u.
        let words = n.div_ceil(64);
        let mut covers = Vec::new();
        let mut two_step = vec![0u64; words];
        for u in 0..n {
            two_step.fill(0);
            for &w in &adj[u] {
                for (dst, src) in two_step.iter_mut().zip(closure.row(w)) {
                    *dst |= *src;
                }
            }
            for (k, (&c, &t)) in closure.row(u).iter().zip(two_step.iter()).enumerate() {
                let mut word = c & !t;
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    covers.push((u, k * 64 + b));
                }
            }
        }
        covers.sort_unstable();

        Ok(Poset {
            n,
            covers,
            labels: None,
            closure,
            chains: OnceLock::new(),
        })
    }

    /// Chain `C_n`: `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::new(n, (1..n).map(|v| (v - 1, v))).expect("chain relations are acyclic")
    }

    /// Antichain `A_n`: no relations.
    pub fn antichain(n: usize) -> Self {
        Poset::new(n, std::iter::empty()).expect("empty relations are acyclic")
    }

    /// The four-element zigzag `Z_4` (N-shaped comparability graph):
    /// covers `0 < 1`, `2 < 1`, `2 < 3`. It has exactly 5 linear extensions.
    pub fn zigzag4() -> Self {
        Poset::new(4, [(0, 1), (2, 1), (2, 3)]).expect("zigzag relations are acyclic")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::domain(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cover pairs `(u, v)` with `u` covered by `v`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Strict comparability `u < v` in the transitive closure.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.closure.get(u, v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.closure.get(u, v) || self.closure.get(v, u)
    }

    pub(crate) fn closure(&self) -> &BitMatrix {
        &self.closure
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_pred = vec![false; self.n];
        for &(_, v) in &self.covers {
            has_pred[v] = true;
        }
        (0..self.n).filter(|&v| !has_pred[v]).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut has_succ = vec![false; self.n];
        for &(u, _) in &self.covers {
            has_succ[u] = true;
        }
        (0..self.n).filter(|&v| !has_succ[v]).collect()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        (0..self.n).all(|u| !self.closure.get(u, v))
    }

    /// Dual poset: all covers reversed.
    pub fn dual(&self) -> Poset {
        let reversed: Vec<_> = self.covers.iter().map(|&(u, v)| (v, u)).collect();
        let dual = Poset::new(self.n, reversed).expect("reversed covers stay acyclic");
        match &self.labels {
            Some(l) => dual.with_labels(l.clone()).expect("label count unchanged"),
            None => dual,
        }
    }

    /// Linear sum `self < other`: everything in `self` below everything in
    /// `other`. The other poset's ids are shifted by `self.n()`.
    pub fn linear_sum(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut rels: Vec<(usize, usize)> = self.covers.clone();
        rels.extend(other.covers.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        for u in self.maximal_elements() {
            for v in other.minimal_elements() {
                rels.push((u, v + self.n));
            }
        }
        let sum = Poset::new(n, rels).expect("sum of acyclic orders is acyclic");
        self.sum_labels(other, sum)
    }

    /// Parallel (disjoint) sum: no relations between the parts.
    pub fn parallel_sum(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut rels: Vec<(usize, usize)> = self.covers.clone();
        rels.extend(other.covers.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        let sum = Poset::new(n, rels).expect("sum of acyclic orders is acyclic");
        self.sum_labels(other, sum)
    }

    fn sum_labels(&self, other: &Poset, sum: Poset) -> Poset {
        if self.labels.is_none() && other.labels.is_none() {
            return sum;
        }
        let mut labels = Vec::with_capacity(sum.n);
        for i in 0..self.n {
            labels.push(self.labels.as_ref().map_or_else(|| i.to_string(), |l| l[i].clone()));
        }
        for i in 0..other.n {
            labels.push(other.labels.as_ref().map_or_else(|| i.to_string(), |l| l[i].clone()));
        }
        sum.with_labels(labels).expect("label count matches")
    }

    /// Induced subposet on `X - v`. Ids above `v` shift down by one; the
    /// returned table maps old ids to new ones (`None` for `v`).
    pub fn remove(&self, v: usize) -> Result<(Poset, Vec<Option<usize>>)> {
        if v >= self.n {
            return Err(Error::domain(format!(
                "element {v} out of range for {} elements",
                self.n
            )));
        }
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();

        // Surviving covers plus bridges across the removed element keep the
        // restricted order intact; normalization re-reduces.
        let mut rels = Vec::new();
        let mut below = Vec::new();
        let mut above = Vec::new();
        for &(a, b) in &self.covers {
            match (map[a], map[b]) {
                (Some(a2), Some(b2)) => rels.push((a2, b2)),
                (Some(a2), None) => below.push(a2),
                (None, Some(b2)) => above.push(b2),
                (None, None) => unreachable!(),
            }
        }
        for &a in &below {
            for &b in &above {
                rels.push((a, b));
            }
        }
        let mut sub = Poset::new(self.n - 1, rels)?;
        if let Some(labels) = &self.labels {
            let kept: Vec<String> = (0..self.n)
                .filter(|&u| u != v)
                .map(|u| labels[u].clone())
                .collect();
            sub = sub.with_labels(kept)?;
        }
        Ok((sub, map))
    }

    /// Minimum chain cover via Kuhn's matching on the closure; its size is
    /// the width by Dilworth's theorem.
    pub(crate) fn chain_cover(&self) -> &[Vec<usize>] {
        self.chains.get_or_init(|| {
            let n = self.n;
            let mut match_right: Vec<Option<usize>> = vec![None; n];
            let mut match_left: Vec<Option<usize>> = vec![None; n];
            let mut visited = vec![usize::MAX; n];
            for u in 0..n {
                self.augment(u, u, &mut match_right, &mut match_left, &mut visited);
            }
            let mut chains = Vec::new();
            for head in 0..n {
                if match_right[head].is_none() {
                    let mut chain = vec![head];
                    let mut cur = head;
                    while let Some(next) = match_left[cur] {
                        chain.push(next);
                        cur = next;
                    }
                    chains.push(chain);
                }
            }
            chains
        })
    }

    fn augment(
        &self,
        u: usize,
        stamp: usize,
        match_right: &mut Vec<Option<usize>>,
        match_left: &mut Vec<Option<usize>>,
        visited: &mut Vec<usize>,
    ) -> bool {
        for v in self.closure.row_bits(u) {
            if visited[v] == stamp {
                continue;
            }
            visited[v] = stamp;
            let freed = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, stamp, match_right, match_left, visited),
            };
            if freed {
                match_right[v] = Some(u);
                match_left[u] = Some(v);
                return true;
            }
        }
        false
    }

    /// Exact width: the size of a maximum antichain.
    pub fn width(&self) -> usize {
        self.chain_cover().len()
    }

    /// Exact `e(P)` by the order-ideal DP with the default ideal cap.
    pub fn count_le(&self) -> Result<Count> {
        count::count_le_capped(self, DEFAULT_IDEAL_CAP)
    }

    /// Exact `e(P)` with an explicit cap on stored ideals.
    pub fn count_le_capped(&self, ideal_cap: u64) -> Result<Count> {
        count::count_le_capped(self, ideal_cap)
    }

    /// Independent oracle: enumerates every topological order. Refuses
    /// posets with more than [`BRUTE_FORCE_MAX`] elements.
    pub fn count_le_bruteforce(&self) -> Result<Count> {
        count::count_le_bruteforce(self)
    }

    /// Number of order ideals, subject to the same cap as the DP.
    pub fn ideal_count(&self, ideal_cap: u64) -> Result<u64> {
        count::count_le_with_ideals(self, ideal_cap).map(|(_, ideals)| ideals)
    }

    /// Relative number of linear extensions `rho(P, x) = e(P) / e(P - x)`.
    pub fn rho(&self, x: usize) -> Result<Rational> {
        self.rho_capped(x, DEFAULT_IDEAL_CAP)
    }

    pub fn rho_capped(&self, x: usize, ideal_cap: u64) -> Result<Rational> {
        let e = self.count_le_capped(ideal_cap)?;
        let (minus, _) = self.remove(x)?;
        let e_minus = minus.count_le_capped(ideal_cap)?;
        Ok(Rational::new(
            crate::Int::from(e),
            crate::Int::from(e_minus),
        ))
    }
}

/// A poset with a distinguished minimal element, the unit every
/// construction consumes and produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedPoset {
    poset: Poset,
    x: usize,
}

impl PointedPoset {
    pub fn new(poset: Poset, x: usize) -> Result<Self> {
        if x >= poset.n() {
            return Err(Error::domain(format!(
                "distinguished element {x} out of range for {} elements",
                poset.n()
            )));
        }
        if !poset.is_minimal(x) {
            return Err(Error::domain(format!("element {x} is not minimal")));
        }
        Ok(PointedPoset { poset, x })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    /// `(e(P), e(P - x))` under the given ideal cap.
    pub fn count_pair(&self, ideal_cap: u64) -> Result<(Count, Count)> {
        let e = self.poset.count_le_capped(ideal_cap)?;
        let (minus, _) = self.poset.remove(self.x)?;
        let e_minus = minus.count_le_capped(ideal_cap)?;
        Ok((e, e_minus))
    }

    pub fn rho(&self) -> Result<Rational> {
        self.poset.rho(self.x)
    }
}

/// `binomial(n, k)` as an exact count, used by the parallel-sum identity
/// `e(P + Q) = C(n + n', n) e(P) e(Q)`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::from(0u32);
    }
    let k = k.min(n - k);
    let mut num = Count::one();
    let mut den = Count::one();
    for i in 0..k {
        num *= Count::from(n - i);
        den *= Count::from(i + 1);
    }
    num / den
}
