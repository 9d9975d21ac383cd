//! Poset synthesis from continued fractions.
//!
//! The primitive is the hybrid sum `Q <_x P`: `Q` is placed below
//! `P - x` while the distinguished minimal element `x` stays incomparable
//! to `Q`. Its counting identities
//!
//! ```text
//! e(Q <_x P)       = e(Q) e(P) + n' e(Q) e(P - x)
//! e((Q <_x P) - x) = e(Q) e(P - x)
//! ```
//!
//! drive recurrences that mirror continued-fraction tails, so iterating a
//! single step per quotient produces a poset whose pair
//! `(e(P), e(P - x))` equals the unreduced convergent head `(C_0, D_0)`.
//! The flip-flop joins two pointed posets through two fresh elements with
//! one side order-reversed, making the relative counts add.
//!
//! Every synthesis returns a [`ConstructionReport`] whose claims are
//! re-counted by the poset DP (and optionally the brute-force oracle)
//! according to the [`BuildConfig`], never trusted from the recurrences.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::confrac::{Gcf, Rgcf, SimpleCf};
use crate::error::{Error, Result};
use crate::poset::io::PosetJson;
use crate::poset::{PointedPoset, Poset, BRUTE_FORCE_MAX, DEFAULT_IDEAL_CAP};
use crate::rational::{format_rational, rational_from_u64};
use crate::{Count, Int, Rational};

/// How much of a report to re-check after construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Trust the recurrences; only the size claim (which is free) is set.
    None,
    /// Re-count with the order-ideal DP when the poset is small enough.
    Dp,
    /// DP plus the brute-force topological-order counter (`n <= 9`).
    BruteForce,
}

#[derive(Debug, Clone)]
pub struct BuildConfig {
    pub verify: VerifyLevel,
    /// DP re-counts run only for posets up to this many elements.
    pub verify_size_cap: usize,
    pub ideal_cap: u64,
    /// Hard bound on constructed poset sizes.
    pub max_elements: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            verify: VerifyLevel::Dp,
            verify_size_cap: 60,
            ideal_cap: DEFAULT_IDEAL_CAP,
            max_elements: 20_000,
        }
    }
}

/// Outcome of each re-check; `None` means the check did not run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimChecks {
    pub method: VerifyLevel,
    pub size: Option<bool>,
    pub e: Option<bool>,
    pub e_minus: Option<bool>,
    pub width: Option<bool>,
    pub rho: Option<bool>,
}

impl ClaimChecks {
    pub fn all_passed(&self) -> bool {
        [self.size, self.e, self.e_minus, self.width, self.rho]
            .iter()
            .flatten()
            .all(|&ok| ok)
    }
}

/// The continued fraction (or pair) a construction realizes.
#[derive(Debug, Clone)]
pub enum Witness {
    SimpleCf { c: u64, d: u64, cf: SimpleCf },
    Gcf(Gcf),
    Rgcf(Rgcf),
    Relative {
        c: u64,
        d: u64,
        a: u64,
        b: u64,
        /// `None` for the `c = 1` chain fallback.
        ell: Option<u64>,
        alpha: Rational,
        beta: Rational,
        s_ell: u64,
        s_rest: u64,
    },
    Factorization { d: u64, factors: Vec<(u64, u32)> },
}

/// A constructed poset together with the counts the theory claims for it
/// and the results of re-checking those claims.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub poset: Poset,
    /// Distinguished element, when the construction has one.
    pub x: Option<usize>,
    /// Whether `x` is actually minimal (the flip-flop's pivot need not be).
    pub x_minimal: bool,
    pub claimed_e: Count,
    pub claimed_e_minus: Option<Count>,
    /// `claimed_e / claimed_e_minus`, reduced.
    pub rho: Option<Rational>,
    /// `gcd(claimed_e, claimed_e_minus)`: the counts realize `rho` as a
    /// `k`-fold multiple of its reduced numerator and denominator.
    pub multiplier: Option<Count>,
    pub claimed_size: usize,
    pub claimed_width_bound: usize,
    pub witness: Witness,
    pub checks: ClaimChecks,
}

impl ConstructionReport {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = match &self.witness {
            Witness::SimpleCf { c, d, cf } => serde_json::json!({
                "kind": "cf", "c": c, "d": d, "cf": cf.to_string(),
            }),
            Witness::Gcf(g) => serde_json::json!({"kind": "gcf", "gcf": g.to_string()}),
            Witness::Rgcf(r) => serde_json::json!({"kind": "rgcf", "rgcf": r.to_string()}),
            Witness::Relative {
                c,
                d,
                a,
                b,
                ell,
                alpha,
                beta,
                s_ell,
                s_rest,
            } => serde_json::json!({
                "kind": "relative", "c": c, "d": d, "a": a, "b": b, "ell": ell,
                "alpha": format_rational(alpha), "beta": format_rational(beta),
                "s_ell": s_ell, "s_rest": s_rest,
            }),
            Witness::Factorization { d, factors } => serde_json::json!({
                "kind": "factorization", "d": d, "factors": factors,
            }),
        };
        let checks = serde_json::json!({
            "method": match self.checks.method {
                VerifyLevel::None => "none",
                VerifyLevel::Dp => "dp",
                VerifyLevel::BruteForce => "bruteforce",
            },
            "size": self.checks.size,
            "e": self.checks.e,
            "e_minus": self.checks.e_minus,
            "width": self.checks.width,
            "rho": self.checks.rho,
        });
        serde_json::json!({
            "witness": witness,
            "poset": PosetJson::from_poset(&self.poset, self.x),
            "x": self.x,
            "x_minimal": self.x_minimal,
            "claimed_e": self.claimed_e.to_string(),
            "claimed_e_minus": self.claimed_e_minus.as_ref().map(|v| v.to_string()),
            "rho": self.rho.as_ref().map(format_rational),
            "multiplier": self.multiplier.as_ref().map(|v| v.to_string()),
            "claimed_size": self.claimed_size,
            "claimed_width_bound": self.claimed_width_bound,
            "checks": checks,
        })
    }
}

/// Hybrid sum `Q <_x P`: keeps both orders, puts every element of `Q`
/// below every element of `P - x`, and leaves `x` incomparable to `Q`.
/// Ids of `P` are preserved; ids of `Q` are shifted by `P`'s size. The
/// result stays pointed at `x`.
pub fn hybrid_sum(q: &Poset, p: &PointedPoset) -> PointedPoset {
    let n = p.poset().n();
    let np = q.n();
    let x = p.x();
    let mut rels: Vec<(usize, usize)> = p.poset().covers().to_vec();
    rels.extend(q.covers().iter().map(|&(u, v)| (u + n, v + n)));
    if np > 0 {
        let q_max = q.maximal_elements();
        for u in min_without(p.poset(), x) {
            for &w in &q_max {
                rels.push((w + n, u));
            }
        }
    }
    let poset = Poset::new(n + np, rels).expect("hybrid sum of acyclic orders is acyclic");
    PointedPoset::new(poset, x).expect("x stays minimal in a hybrid sum")
}

/// Minimal elements of the subposet on `X - x`.
fn min_without(p: &Poset, x: usize) -> Vec<usize> {
    (0..p.n())
        .filter(|&u| u != x && (0..p.n()).all(|w| w == x || !p.lt(w, u)))
        .collect()
}

/// `C_b <_x P` with the same pivot: adds `b` to `rho(P, x)`.
pub fn attach_chain(p: &PointedPoset, b: usize) -> PointedPoset {
    hybrid_sum(&Poset::chain(b), p)
}

/// One continued-fraction step
/// `R = C_{b-a} <_y ((y + C_{a-1}) <_x P)` pointed at the fresh `y`:
/// `rho(R, y) = b + a / (a - 1 + rho(P, x))`. Needs `1 <= a <= b`; the
/// degenerate `a = 0` would ask for a poset with no elements and one
/// extension pivot, which is ill-formed.
pub fn rec_cf_step(p: &PointedPoset, a: usize, b: usize) -> Result<PointedPoset> {
    if a < 1 {
        return Err(Error::domain("rec_cf_step needs a >= 1"));
    }
    if b < a {
        return Err(Error::domain(format!("rec_cf_step needs b >= a, got a={a}, b={b}")));
    }
    let n = p.poset().n();
    let q = Poset::antichain(1).parallel_sum(&Poset::chain(a - 1));
    let inner = hybrid_sum(&q, p).into_poset();
    let y = n; // the antichain point of q, shifted
    let pivot = PointedPoset::new(inner, y)?;
    Ok(attach_chain(&pivot, b - a))
}

/// Flip-flop of two pointed posets: fresh elements `z` and `v` join
/// `X - x` (order reversed) below `Y - y`, with `z` attached to the strict
/// up-sets of `x` and `y` and `v` sandwiched between the two sides.
/// `rho(R, z) = rho(P, x) + rho(Q, y)`, but `z` need not be minimal, so
/// the result is a plain poset plus the id of `z`.
pub fn flip_flop(p: &PointedPoset, q: &PointedPoset) -> (Poset, usize) {
    let (pp, x) = (p.poset(), p.x());
    let (qp, y) = (q.poset(), q.x());
    let np = pp.n() - 1;
    let nq = qp.n() - 1;
    let z = np + nq;
    let v = z + 1;

    let map_p = |u: usize| if u < x { u } else { u - 1 };
    let map_q = |u: usize| np + if u < y { u } else { u - 1 };

    let mut rels = Vec::new();
    for a in 0..pp.n() {
        for b in 0..pp.n() {
            if a != x && b != x && pp.lt(a, b) {
                rels.push((map_p(b), map_p(a))); // reversed
            }
        }
    }
    for a in 0..qp.n() {
        for b in 0..qp.n() {
            if a != y && b != y && qp.lt(a, b) {
                rels.push((map_q(a), map_q(b)));
            }
        }
    }
    for u in 0..pp.n() {
        if u != x && pp.lt(x, u) {
            rels.push((map_p(u), z));
        }
    }
    for u in 0..qp.n() {
        if u != y && qp.lt(y, u) {
            rels.push((z, map_q(u)));
        }
    }
    for a in 0..pp.n() {
        if a != x {
            rels.push((map_p(a), v));
        }
    }
    for b in 0..qp.n() {
        if b != y {
            rels.push((v, map_q(b)));
        }
    }

    let poset = Poset::new(np + nq + 2, rels).expect("flip-flop relations are acyclic");
    (poset, z)
}

/// `{x} + C_{q-1}`, the base poset with `e = q`, `e(P - x) = 1`; `x` is
/// element 0.
fn point_plus_chain(q: usize) -> PointedPoset {
    let poset = Poset::antichain(1).parallel_sum(&Poset::chain(q - 1));
    PointedPoset::new(poset, 0).expect("the isolated point is minimal")
}

fn to_usize_checked(v: &Int, what: &str, cap: usize) -> Result<usize> {
    match v.to_usize() {
        Some(u) if u <= cap => Ok(u),
        _ => Err(Error::resource(
            cap as u64,
            format!("{what} = {v} exceeds the element cap"),
        )),
    }
}

/// Iterated realization of a balanced GCF. Returns the pointed poset and
/// the tracked width bound (2 when every partial numerator is 1).
fn build_gcf_poset(a: &[usize], b: &[usize]) -> Result<(PointedPoset, usize)> {
    let m = a.len();
    let base_q = if m == 0 { b[0] } else { b[m] - a[m - 1] + 1 };
    assert!(base_q >= 1, "balance guarantees a positive base quotient");
    let mut poset = point_plus_chain(base_q);
    let mut width_bound = 2;
    for k in (0..m).rev() {
        let a_step = a[k];
        let b_step = if k == 0 { b[0] } else { b[k] - a[k - 1] + 1 };
        assert!(b_step >= a_step, "balance guarantees the shifted quotient");
        poset = rec_cf_step(&poset, a_step, b_step)?;
        if a_step >= 2 {
            width_bound = 3;
        }
    }
    Ok((poset, width_bound))
}

/// Width-at-most-three poset realizing a balanced GCF: `e(P) = C_0`,
/// `e(P - x) = D_0` (the unreduced convergent head), `|X|` equal to the
/// weight `G`.
pub fn poset_from_gcf(g: &Gcf, cfg: &BuildConfig) -> Result<ConstructionReport> {
    if !g.is_balanced() {
        return Err(Error::domain(format!(
            "GCF {g} is not balanced (b_i >= a_i + a_{{i+1}} - 1 fails)"
        )));
    }
    let size = to_usize_checked(&g.weight(), "GCF weight", cfg.max_elements)?;
    let a: Vec<usize> = g
        .partial_numerators()
        .iter()
        .map(|v| to_usize_checked(v, "partial numerator", cfg.max_elements))
        .collect::<Result<_>>()?;
    let b: Vec<usize> = g
        .quotients()
        .iter()
        .map(|v| to_usize_checked(v, "quotient", cfg.max_elements))
        .collect::<Result<_>>()?;

    let (pointed, width_bound) = build_gcf_poset(&a, &b)?;
    let table = g.convergents();
    let (c0, d0) = table.head();
    let claimed_e = c0.to_biguint().expect("convergents are positive");
    let claimed_e_minus = d0.to_biguint().expect("convergents are positive");
    let x = pointed.x();
    finalize(
        pointed.into_poset(),
        Some(x),
        claimed_e,
        Some(claimed_e_minus),
        size,
        width_bound,
        Witness::Gcf(g.clone()),
        cfg,
    )
}

#[allow(clippy::too_many_arguments)]
fn finalize(
    poset: Poset,
    x: Option<usize>,
    claimed_e: Count,
    claimed_e_minus: Option<Count>,
    claimed_size: usize,
    claimed_width_bound: usize,
    witness: Witness,
    cfg: &BuildConfig,
) -> Result<ConstructionReport> {
    let n = poset.n();
    if cfg.verify == VerifyLevel::BruteForce && n > BRUTE_FORCE_MAX {
        return Err(Error::domain(format!(
            "brute-force verification refuses posets with more than {BRUTE_FORCE_MAX} elements (got {n})"
        )));
    }
    let rho = claimed_e_minus.as_ref().map(|em| {
        Rational::new(
            Int::from(claimed_e.clone()),
            Int::from(em.clone()),
        )
    });
    let multiplier = claimed_e_minus.as_ref().map(|em| claimed_e.gcd(em));
    let x_minimal = x.map(|x| poset.is_minimal(x)).unwrap_or(false);

    let mut checks = ClaimChecks {
        method: cfg.verify,
        size: Some(n == claimed_size),
        e: None,
        e_minus: None,
        width: None,
        rho: None,
    };

    if cfg.verify != VerifyLevel::None && n <= cfg.verify_size_cap {
        let e = poset.count_le_capped(cfg.ideal_cap)?;
        let mut e_ok = e == claimed_e;
        let mut e_minus_ok = None;
        let mut rho_ok = None;
        if let (Some(x), Some(claim)) = (x, claimed_e_minus.as_ref()) {
            let (minus, _) = poset.remove(x)?;
            let em = minus.count_le_capped(cfg.ideal_cap)?;
            let mut ok = em == *claim;
            if cfg.verify == VerifyLevel::BruteForce {
                ok = ok && minus.count_le_bruteforce()? == *claim;
            }
            e_minus_ok = Some(ok);
            rho_ok = rho.as_ref().map(|r| {
                *r == Rational::new(Int::from(e.clone()), Int::from(em.clone()))
            });
        }
        if cfg.verify == VerifyLevel::BruteForce {
            e_ok = e_ok && poset.count_le_bruteforce()? == claimed_e;
        }
        checks.e = Some(e_ok);
        checks.e_minus = e_minus_ok;
        checks.rho = rho_ok;
        checks.width = Some(poset.width() <= claimed_width_bound);
    }

    Ok(ConstructionReport {
        poset,
        x,
        x_minimal,
        claimed_e,
        claimed_e_minus,
        rho,
        multiplier,
        claimed_size,
        claimed_width_bound,
        witness,
        checks,
    })
}

/// Width-two realization of a reduced fraction `c/d` with `1 <= c < d`:
/// the simple continued fraction of `d/c` run through the GCF machinery
/// with unit partial numerators. `e(P) = d`, `e(P - x) = c`,
/// `|X| = s(c/d)`.
pub fn poset_from_simple_cf(c: u64, d: u64, cfg: &BuildConfig) -> Result<ConstructionReport> {
    if c < 1 || c >= d {
        return Err(Error::domain(format!("need 1 <= c < d, got c={c}, d={d}")));
    }
    if c.gcd(&d) != 1 {
        return Err(Error::domain(format!("need gcd(c, d) = 1, got c={c}, d={d}")));
    }
    let cf = SimpleCf::expand(&rational_from_u64(d, c))?;
    let g = Gcf::from_simple(&cf)?;
    let mut report = poset_from_gcf(&g, cfg)?;
    report.witness = Witness::SimpleCf { c, d, cf };
    debug_assert_eq!(report.claimed_e, Count::from(d));
    debug_assert_eq!(report.claimed_e_minus, Some(Count::from(c)));
    Ok(report)
}

/// Pointed realization of any rational `alpha = p/q >= 1`: the `{x} + C`
/// base when `alpha` is an integer, the simple-CF construction otherwise.
/// Returns the poset together with its claimed `(e, e - x)` pair
/// `(p, q)`; the size is `s(alpha)` and the width is at most 2.
fn realize_alpha(alpha: &Rational, cfg: &BuildConfig) -> Result<(PointedPoset, u64, u64, usize)> {
    let p = alpha
        .numer()
        .to_u64()
        .ok_or_else(|| Error::resource(cfg.max_elements as u64, "alpha numerator too large"))?;
    let q = alpha
        .denom()
        .to_u64()
        .ok_or_else(|| Error::resource(cfg.max_elements as u64, "alpha denominator too large"))?;
    if q == 1 {
        let size = to_usize_checked(&Int::from(p), "integer alpha", cfg.max_elements)?;
        Ok((point_plus_chain(size), p, 1, size))
    } else {
        let cf = SimpleCf::expand(alpha)?;
        let size = to_usize_checked(&cf.weight(), "s(alpha)", cfg.max_elements)?;
        let quotients = cf.quotients_usize()?;
        let ones = vec![1usize; quotients.len() - 1];
        let (pointed, _) = build_gcf_poset(&ones, &quotients)?;
        Ok((pointed, p, q, size))
    }
}

/// Width-at-most-three realization of an RGCF with all `b_i >= 1`:
/// each `alpha_i` block is realized by the simple-CF construction and
/// folded in with a hybrid sum and a chain. `e(P) = C_0`,
/// `e(P - x) = D_0`, `|X|` equal to the weight `R`.
pub fn poset_from_rgcf(r: &Rgcf, cfg: &BuildConfig) -> Result<ConstructionReport> {
    if let Some(b) = r.quotients().iter().find(|b| !b.is_positive()) {
        return Err(Error::domain(format!(
            "the RGCF construction needs every b_i >= 1, got {b}"
        )));
    }
    let size = to_usize_checked(&r.weight(), "RGCF weight", cfg.max_elements)?;
    let b: Vec<usize> = r
        .quotients()
        .iter()
        .map(|v| to_usize_checked(v, "quotient", cfg.max_elements))
        .collect::<Result<_>>()?;
    let m = r.order();

    let mut pointed = point_plus_chain(b[m]);
    let mut width_bound = 2;
    for k in (0..m).rev() {
        let alpha = &r.alphas()[k];
        let (block, _, _, _) = realize_alpha(alpha, cfg)?;
        let n_cur = pointed.poset().n();
        let y = n_cur + block.x();
        let inner = hybrid_sum(block.poset(), &pointed).into_poset();
        let repointed = PointedPoset::new(inner, y)?;
        pointed = attach_chain(&repointed, b[k]);
        let block_width = if block.poset().n() == 1 { 1 } else { 2 };
        width_bound = width_bound.max(block_width + 1).max(2);
    }

    let table = r.convergents();
    let (c0, d0) = table.head();
    let claimed_e = c0.to_biguint().expect("convergents are positive");
    let claimed_e_minus = d0.to_biguint().expect("convergents are positive");
    let x = pointed.x();
    finalize(
        pointed.into_poset(),
        Some(x),
        claimed_e,
        Some(claimed_e_minus),
        size,
        width_bound,
        Witness::Rgcf(r.clone()),
        cfg,
    )
}

/// Poset with a distinguished element `z` such that
/// `rho(R, z) = d/c` exactly, for coprime `d >= 3c`. Splits `d/c` as
/// `alpha + beta` with `alpha = 1 + l/b`, `beta = floor(d/c) - 2 +
/// (a - l)/b` where `a = c + d - floor(d/c) c`, `b = c`, realizes both by
/// width-two posets and joins them with a flip-flop. The split parameter
/// `l` is chosen deterministically to minimize
/// `max(s(l/b), s((a - l)/b))`, ties to the smallest `l`. For `c = 1` no
/// `l` exists and the `{x} + C_{d-1}` fallback already meets the bound.
pub fn relative_poset(c: u64, d: u64, cfg: &BuildConfig) -> Result<ConstructionReport> {
    if c < 1 {
        return Err(Error::domain("need c >= 1"));
    }
    if c.gcd(&d) != 1 {
        return Err(Error::domain(format!("need gcd(c, d) = 1, got c={c}, d={d}")));
    }
    if d < 3 * c {
        return Err(Error::domain(format!(
            "the relative construction requires d >= 3c, got c={c}, d={d}"
        )));
    }
    let q_floor = d / c;

    if c == 1 {
        let size = to_usize_checked(&Int::from(d), "d", cfg.max_elements)?;
        let pointed = point_plus_chain(size);
        let x = pointed.x();
        return finalize(
            pointed.into_poset(),
            Some(x),
            Count::from(d),
            Some(Count::from(1u32)),
            size,
            2,
            Witness::Relative {
                c,
                d,
                a: d % c + c,
                b: c,
                ell: None,
                alpha: rational_from_u64(d, 1),
                beta: rational_from_u64(0, 1),
                s_ell: 0,
                s_rest: 0,
            },
            cfg,
        );
    }

    let a = c + d - q_floor * c; // b <= a <= 2b, gcd(a, b) = 1
    let b = c;
    let mut best: Option<(u64, u64, u64)> = None;
    for ell in 1..b {
        let s1 = crate::confrac::kernel::weight(ell, b);
        let s2 = crate::confrac::kernel::weight(a - ell, b);
        if best.is_none() || s1.max(s2) < best.unwrap().1.max(best.unwrap().2) {
            best = Some((ell, s1, s2));
        }
    }
    let (ell, s_ell, s_rest) = best.expect("b >= 2 leaves at least one split");

    let alpha = rational_from_u64(b + ell, b);
    let beta = rational_from_u64((q_floor - 2) * b + (a - ell), b);
    debug_assert_eq!(&alpha + &beta, rational_from_u64(d, c));

    let (p_real, pe, pem, p_size) = realize_alpha(&alpha, cfg)?;
    let (q_real, qe, qem, q_size) = realize_alpha(&beta, cfg)?;
    let (poset, z) = flip_flop(&p_real, &q_real);

    let claimed_e = Count::from(pe) * Count::from(qem) + Count::from(pem) * Count::from(qe);
    let claimed_e_minus = Count::from(pem) * Count::from(qem);
    let size = p_size + q_size;
    debug_assert_eq!(size, (q_floor - 1 + s_ell + s_rest) as usize);

    finalize(
        poset,
        Some(z),
        claimed_e,
        Some(claimed_e_minus),
        size,
        4,
        Witness::Relative {
            c,
            d,
            a,
            b,
            ell: Some(ell),
            alpha,
            beta,
            s_ell,
            s_rest,
        },
        cfg,
    )
}

/// Prime factorization of `d >= 1` by trial division.
pub fn factorize(d: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut rest = d;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut mult = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                mult += 1;
            }
            factors.push((p, mult));
        }
        p += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors
}

/// Linear sum of per-prime blocks: with `e(P_i) = p_i` for each prime
/// power `p_i^{m_i}` dividing `d`, the sum of `m_i` copies of each block
/// has `e(P) = d`.
pub fn poset_from_factorization(
    d: u64,
    prime_realizer: &BTreeMap<u64, PointedPoset>,
) -> Result<Poset> {
    if d == 0 {
        return Err(Error::domain("need d >= 1"));
    }
    let mut result = Poset::antichain(0);
    for (p, mult) in factorize(d) {
        let block = prime_realizer
            .get(&p)
            .ok_or_else(|| Error::domain(format!("no realizer supplied for prime {p}")))?;
        for _ in 0..mult {
            result = result.linear_sum(block.poset());
        }
    }
    Ok(result)
}

/// Factorization report for the CLI: claims `e(P) = d`.
pub fn factorization_report(
    d: u64,
    prime_realizer: &BTreeMap<u64, PointedPoset>,
    cfg: &BuildConfig,
) -> Result<ConstructionReport> {
    let poset = poset_from_factorization(d, prime_realizer)?;
    let factors = factorize(d);
    let size = poset.n();
    let width_bound = factorize(d)
        .iter()
        .map(|(p, _)| prime_realizer[p].poset().width())
        .max()
        .unwrap_or(1)
        .max(1);
    finalize(
        poset,
        None,
        Count::from(d),
        None,
        size,
        width_bound,
        Witness::Factorization { d, factors },
        cfg,
    )
}
