//! Bounded exhaustive searches for the minimum-weight balanced GCF and the
//! minimum-weight RGCF representing a given rational.
//!
//! True minimization is unbounded, so both searches run over an explicit,
//! caller-visible box: depth `m`, partial numerators (or alpha
//! denominators), and quotients. Results are minima *within those bounds*,
//! seeded by the simple continued fraction of the input so the reported
//! weight never exceeds `s(input)`.
//!
//! The reduced-partial-fraction condition is enforced for indices
//! `1 <= i <= m`. Each result also records the best candidate under the
//! stricter convention that includes `i = 0`, since the definitions leave
//! that index ambiguous.
//!
//! Determinism: ties are broken by the lexicographically smallest
//! parameter tuple `(m, quotients, partial numerators)` (alphas as reduced
//! `(numerator, denominator)` pairs for the RGCF search), regardless of
//! exploration order.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{kernel, Gcf, Rgcf, SimpleCf};
use crate::error::{Error, Result};
use crate::rational::rational_from_u64;
use crate::{Int, Rational};

/// Search box for [`minimize_g`] and [`minimize_r`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Maximum number of levels `m`.
    pub max_depth: usize,
    /// Maximum partial numerator `a_i` (GCF search only).
    pub max_partial_numerator: u64,
    /// Maximum quotient `b_i`; `None` uses `weight_s(input)`.
    pub max_quotient: Option<u64>,
    /// Maximum denominator of the `alpha_i` (RGCF search only).
    pub max_alpha_denominator: u64,
    /// Hard cap on visited search nodes; when hit, the search returns the
    /// best candidate found so far with `complete = false`.
    pub node_cap: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_depth: 3,
            max_partial_numerator: 6,
            max_quotient: None,
            max_alpha_denominator: 12,
            node_cap: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate {
    weight: i128,
    // (m, quotients, front parameters) is the tie-break tuple
    quotients: Vec<u64>,
    front: Vec<(u64, u64)>, // GCF: (a_i, 1); RGCF: reduced (c_i, d_i)
}

impl Candidate {
    fn key(&self) -> (i128, usize, &[u64], &[(u64, u64)]) {
        (self.weight, self.front.len(), &self.quotients, &self.front)
    }

    fn improves(&self, best: &Candidate) -> bool {
        self.key() < best.key()
    }
}

/// Result of [`minimize_g`].
#[derive(Debug, Clone)]
pub struct GcfMinimization {
    /// Minimum-weight witness with reduced tails (`1 <= i <= m`).
    pub witness: Gcf,
    pub weight: Int,
    /// Best candidate that is also reduced at `i = 0`.
    pub strict_witness: Gcf,
    pub strict_weight: Int,
    /// Weight of the simple continued fraction of the input (the seed).
    pub simple_weight: Int,
    /// Quotient cap actually used (after resolving the default).
    pub max_quotient_used: u64,
    /// False when the node cap stopped the search early.
    pub complete: bool,
    pub nodes_visited: u64,
}

/// Result of [`minimize_r`].
#[derive(Debug, Clone)]
pub struct RgcfMinimization {
    pub witness: Rgcf,
    pub weight: Int,
    pub strict_witness: Rgcf,
    pub strict_weight: Int,
    pub simple_weight: Int,
    pub max_quotient_used: u64,
    pub complete: bool,
    pub nodes_visited: u64,
}

fn quotients_u64(cf: &SimpleCf) -> Option<Vec<u64>> {
    cf.quotients().iter().map(|q| q.to_u64()).collect()
}

/// Largest integer strictly below `t`.
fn strict_floor(t: &Rational) -> Int {
    if t.is_integer() {
        t.to_integer() - Int::one()
    } else {
        t.floor().to_integer()
    }
}

fn ceil_int(t: &Rational) -> Int {
    t.ceil().to_integer()
}

fn int_to_u64_clamped(v: &Int) -> u64 {
    if v.is_negative() {
        0
    } else {
        v.to_u64().unwrap_or(u64::MAX)
    }
}

struct GcfSearch {
    max_depth: usize,
    max_a: u64,
    max_b: u64,
    node_cap: u64,
    nodes: u64,
    complete: bool,
    best: Candidate,
    best_strict: Candidate,
}

impl GcfSearch {
    fn allowance(&self) -> i128 {
        self.best_strict.weight
    }

    fn offer(&mut self, a: &[u64], b: &[u64], weight: i128) {
        let front: Vec<(u64, u64)> = a.iter().map(|&x| (x, 1)).collect();
        let cand = Candidate {
            weight,
            quotients: b.to_vec(),
            front,
        };
        if !cand.improves(&self.best) && !cand.improves(&self.best_strict) {
            return;
        }
        let gcf = Gcf::new(
            a.iter().map(|&x| Int::from(x)).collect(),
            b.iter().map(|&x| Int::from(x)).collect(),
        )
        .expect("search candidates are well-formed");
        let table = gcf.convergents();
        if table.tail_reduced() {
            if cand.improves(&self.best) {
                self.best = cand.clone();
            }
            if table.fully_reduced() && cand.improves(&self.best_strict) {
                self.best_strict = cand;
            }
        }
    }

    fn dfs(
        &mut self,
        t: &Rational,
        level: usize,
        prev_a: u64,
        partial: i128,
        a_stack: &mut Vec<u64>,
        b_stack: &mut Vec<u64>,
    ) {
        if !self.complete {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.complete = false;
            return;
        }
        if partial + 1 > self.allowance() {
            return;
        }

        // Terminate here: b_m = t, requiring balance b_m >= a_m.
        if t.is_integer() {
            let bt = t.to_integer();
            let bt_u = int_to_u64_clamped(&bt);
            if bt >= Int::from(prev_a) && bt_u >= 1 && bt_u <= self.max_b && bt == Int::from(bt_u)
            {
                let weight = partial + bt_u as i128;
                if weight <= self.allowance() {
                    b_stack.push(bt_u);
                    let (a_now, b_now) = (a_stack.clone(), b_stack.clone());
                    self.offer(&a_now, &b_now, weight);
                    b_stack.pop();
                }
            }
        }

        if level >= self.max_depth {
            return;
        }

        for a_next in 1..=self.max_a {
            // b must leave a residue in (0, a_next] and satisfy the balance
            // bound b >= prev_a + a_next - 1.
            let balance_lo = prev_a + a_next - 1;
            let residue_lo = int_to_u64_clamped(&ceil_int(&(t - rational_from_u64(a_next, 1))));
            let lo = balance_lo.max(residue_lo).max(1);
            let hi = int_to_u64_clamped(&strict_floor(t)).min(self.max_b);
            for b in lo..=hi {
                let new_partial = partial + b as i128 - a_next as i128 + 1;
                if new_partial + 1 > self.allowance() {
                    break; // partial grows with b
                }
                let res = t - rational_from_u64(b, 1);
                debug_assert!(res.is_positive());
                let next = rational_from_u64(a_next, 1) / &res;
                a_stack.push(a_next);
                b_stack.push(b);
                self.dfs(&next, level + 1, a_next, new_partial, a_stack, b_stack);
                a_stack.pop();
                b_stack.pop();
            }
        }
    }
}

/// Minimum weight `G` over balanced, reduced GCFs equal to `alpha >= 1`
/// inside `bounds`, seeded by the simple continued fraction.
pub fn minimize_g(alpha: &Rational, bounds: &SearchBounds) -> Result<GcfMinimization> {
    if *alpha < Rational::one() {
        return Err(Error::domain(format!(
            "minimize_g needs alpha >= 1, got {}",
            crate::rational::format_rational(alpha)
        )));
    }
    let simple = SimpleCf::expand(alpha)?;
    let simple_weight = simple.weight();
    let seed_gcf = Gcf::from_simple(&simple)?;

    let seed_quotients = quotients_u64(&simple);
    let seed_weight_i128 = simple_weight.to_i128();
    let (seed, max_b) = match (seed_quotients, seed_weight_i128) {
        (Some(q), Some(w)) => {
            let max_b = bounds
                .max_quotient
                .unwrap_or_else(|| simple_weight.to_u64().unwrap_or(u64::MAX));
            (
                Candidate {
                    weight: w,
                    front: vec![(1, 1); q.len() - 1],
                    quotients: q,
                },
                max_b,
            )
        }
        _ => {
            // Input too large for a desk-scale search: report the seed.
            return Ok(GcfMinimization {
                witness: seed_gcf.clone(),
                weight: simple_weight.clone(),
                strict_witness: seed_gcf,
                strict_weight: simple_weight.clone(),
                simple_weight,
                max_quotient_used: bounds.max_quotient.unwrap_or(u64::MAX),
                complete: false,
                nodes_visited: 0,
            });
        }
    };

    let mut search = GcfSearch {
        max_depth: bounds.max_depth,
        max_a: bounds.max_partial_numerator,
        max_b,
        node_cap: bounds.node_cap,
        nodes: 0,
        complete: true,
        best: seed.clone(),
        best_strict: seed,
    };
    search.dfs(alpha, 0, 1, 0, &mut Vec::new(), &mut Vec::new());

    let to_gcf = |cand: &Candidate| {
        Gcf::new(
            cand.front.iter().map(|&(a, _)| Int::from(a)).collect(),
            cand.quotients.iter().map(|&b| Int::from(b)).collect(),
        )
        .expect("candidates are well-formed")
    };
    Ok(GcfMinimization {
        witness: to_gcf(&search.best),
        weight: Int::from(search.best.weight),
        strict_witness: to_gcf(&search.best_strict),
        strict_weight: Int::from(search.best_strict.weight),
        simple_weight,
        max_quotient_used: max_b,
        complete: search.complete,
        nodes_visited: search.nodes,
    })
}

struct RgcfSearch {
    max_depth: usize,
    max_denom: u64,
    max_b: u64,
    node_cap: u64,
    nodes: u64,
    complete: bool,
    best: Candidate,
    best_strict: Candidate,
}

impl RgcfSearch {
    fn allowance(&self) -> i128 {
        self.best_strict.weight
    }

    fn offer(&mut self, alphas: &[(u64, u64)], b: &[u64], weight: i128) {
        let cand = Candidate {
            weight,
            quotients: b.to_vec(),
            front: alphas.to_vec(),
        };
        if !cand.improves(&self.best) && !cand.improves(&self.best_strict) {
            return;
        }
        let rgcf = Rgcf::new(
            alphas.iter().map(|&(c, d)| rational_from_u64(c, d)).collect(),
            b.iter().map(|&x| Int::from(x)).collect(),
        )
        .expect("search candidates are well-formed");
        let table = rgcf.convergents();
        if table.tail_reduced() {
            if cand.improves(&self.best) {
                self.best = cand.clone();
            }
            if table.fully_reduced() && cand.improves(&self.best_strict) {
                self.best_strict = cand;
            }
        }
    }

    fn dfs(
        &mut self,
        t: &Rational,
        level: usize,
        partial: i128,
        alpha_stack: &mut Vec<(u64, u64)>,
        b_stack: &mut Vec<u64>,
    ) {
        if !self.complete {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.complete = false;
            return;
        }
        if partial + 1 > self.allowance() {
            return;
        }

        // Terminate here with b_m = t >= 1.
        if t.is_integer() {
            let bt = t.to_integer();
            let bt_u = int_to_u64_clamped(&bt);
            if bt_u >= 1 && bt_u <= self.max_b && bt == Int::from(bt_u) {
                let weight = partial + bt_u as i128;
                if weight <= self.allowance() {
                    b_stack.push(bt_u);
                    let (alphas, b_now) = (alpha_stack.clone(), b_stack.clone());
                    self.offer(&alphas, &b_now, weight);
                    b_stack.pop();
                }
            }
        }

        if level >= self.max_depth {
            return;
        }

        // Recurse: t = b + alpha + alpha / (s(alpha) - 1 + t'), t' >= 1.
        let b_hi = int_to_u64_clamped(&strict_floor(&(t - Rational::one()))).min(self.max_b);
        for b in 0..=b_hi {
            if partial + b as i128 + 2 > self.allowance() {
                break; // each level adds s(alpha) >= 1 and the tail adds >= 1
            }
            let window = t - rational_from_u64(b, 1); // alpha < window
            for d in 1..=self.max_denom {
                // s(c/d) >= floor(c/d), so the weight budget bounds c.
                let s_budget = self.allowance() - partial - b as i128 - 1;
                let c_hi_budget = (s_budget + 1).saturating_mul(d as i128);
                let c_hi_window = int_to_u64_clamped(&strict_floor(
                    &(&window * rational_from_u64(d, 1)),
                )) as i128;
                let c_hi = c_hi_budget.min(c_hi_window);
                let mut c = d as i128;
                while c <= c_hi {
                    let cu = c as u64;
                    if cu.gcd(&d) == 1 {
                        let s = kernel::weight(cu, d) as i128;
                        if partial + b as i128 + s < self.allowance() {
                            let alpha = rational_from_u64(cu, d);
                            let res = &window - &alpha;
                            debug_assert!(res.is_positive());
                            let t_next =
                                alpha.clone() / res - rational_from_u64((s - 1) as u64, 1);
                            if t_next >= Rational::one() {
                                alpha_stack.push((cu, d));
                                b_stack.push(b);
                                self.dfs(
                                    &t_next,
                                    level + 1,
                                    partial + b as i128 + s,
                                    alpha_stack,
                                    b_stack,
                                );
                                alpha_stack.pop();
                                b_stack.pop();
                            }
                        }
                    }
                    c += 1;
                }
            }
        }
    }
}

/// Minimum weight `R` over RGCFs with reduced tails equal to `beta >= 1`
/// inside `bounds`, seeded by the all-ones RGCF of the simple expansion.
pub fn minimize_r(beta: &Rational, bounds: &SearchBounds) -> Result<RgcfMinimization> {
    if *beta < Rational::one() {
        return Err(Error::domain(format!(
            "minimize_r needs beta >= 1, got {}",
            crate::rational::format_rational(beta)
        )));
    }
    let simple = SimpleCf::expand(beta)?;
    let simple_weight = simple.weight();

    // Seed: [1,...,1; b_0 - 1, ..., b_{m-1} - 1, b_m] evaluates to beta and
    // has weight exactly s(beta).
    let seed_candidate = quotients_u64(&simple).zip(simple_weight.to_i128()).map(
        |(q, w)| {
            let m = q.len() - 1;
            let quotients: Vec<u64> = q
                .iter()
                .enumerate()
                .map(|(i, &b)| if i < m { b - 1 } else { b })
                .collect();
            Candidate {
                weight: w,
                quotients,
                front: vec![(1, 1); m],
            }
        },
    );

    let seed_rgcf = |cand: &Candidate| {
        Rgcf::new(
            cand.front.iter().map(|&(c, d)| rational_from_u64(c, d)).collect(),
            cand.quotients.iter().map(|&b| Int::from(b)).collect(),
        )
        .expect("seed is well-formed")
    };

    let seed = match seed_candidate {
        Some(seed) => seed,
        None => {
            let fallback = Rgcf::new(vec![], vec![beta.to_integer()]);
            // A non-integer beta this large cannot even be seeded; report
            // the degenerate outcome explicitly.
            let witness = fallback.map_err(|_| {
                Error::domain("input too large for the bounded RGCF search")
            })?;
            return Ok(RgcfMinimization {
                witness: witness.clone(),
                weight: simple_weight.clone(),
                strict_witness: witness,
                strict_weight: simple_weight.clone(),
                simple_weight,
                max_quotient_used: bounds.max_quotient.unwrap_or(u64::MAX),
                complete: false,
                nodes_visited: 0,
            });
        }
    };

    let max_b = bounds
        .max_quotient
        .unwrap_or_else(|| simple_weight.to_u64().unwrap_or(u64::MAX));
    let mut search = RgcfSearch {
        max_depth: bounds.max_depth,
        max_denom: bounds.max_alpha_denominator,
        max_b,
        node_cap: bounds.node_cap,
        nodes: 0,
        complete: true,
        best: seed.clone(),
        best_strict: seed,
    };
    search.dfs(beta, 0, 0, &mut Vec::new(), &mut Vec::new());

    Ok(RgcfMinimization {
        witness: seed_rgcf(&search.best),
        weight: Int::from(search.best.weight),
        strict_witness: seed_rgcf(&search.best_strict),
        strict_weight: Int::from(search.best_strict.weight),
        simple_weight,
        max_quotient_used: max_b,
        complete: search.complete,
        nodes_visited: search.nodes,
    })
}
