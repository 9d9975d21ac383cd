//! Shared test oracles, all independent of the implementation paths they
//! check: the subtraction-algorithm weight counter, a subset-scan width,
//! direct right-to-left tail evaluation for GCFs and RGCFs, and seeded
//! random poset generators.

#![allow(dead_code)]

use lecf::poset::{PointedPoset, Poset};
use lecf::rational::rational_from_u64;
use lecf::{Count, Int, Rational};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of steps of the subtraction form of the Euclidean algorithm on
/// `(a, b)`: subtract the smaller from the larger until one side is zero.
/// This equals the weight `s(a/b)` of the canonical continued fraction.
pub fn subtraction_steps(mut a: u64, mut b: u64) -> u64 {
    let mut steps = 0;
    while a != 0 && b != 0 {
        if a >= b {
            a -= b;
        } else {
            b -= a;
        }
        steps += 1;
    }
    steps
}

/// Maximum antichain size by scanning every subset. Usable to ~20 elements.
pub fn brute_width(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let antichain = members
            .iter()
            .all(|&u| members.iter().all(|&v| u == v || !p.comparable(u, v)));
        if antichain {
            best = best.max(members.len());
        }
    }
    best
}

pub fn brute_count(p: &Poset) -> Count {
    p.count_le_bruteforce().expect("test posets stay within the brute-force guard")
}

pub fn brute_count_u64(p: &Poset) -> u64 {
    brute_count(p).to_u64().expect("small counts")
}

/// Random poset on `n` elements: each pair gets a relation with
/// probability `edge_prob` under a random relabeling.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(edge_prob) {
                rels.push((perm[i], perm[j]));
            }
        }
    }
    Poset::new(n, rels).expect("ascending relations are acyclic")
}

/// Random poset plus a uniformly chosen minimal element.
pub fn random_pointed(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> PointedPoset {
    assert!(n >= 1);
    let poset = random_poset(rng, n, edge_prob);
    let minimals = poset.minimal_elements();
    let x = minimals[rng.gen_range(0..minimals.len())];
    PointedPoset::new(poset, x).expect("chosen element is minimal")
}

/// Right-to-left evaluation of the GCF tail `[a_{i+1}..a_m ; b_i..b_m]`
/// with plain rational arithmetic; independent of the convergent
/// recurrence.
pub fn gcf_tail_direct(a: &[u64], b: &[u64], i: usize) -> Rational {
    let m = a.len();
    let mut v = rational_from_u64(b[m], 1);
    for k in (i..m).rev() {
        v = rational_from_u64(b[k], 1) + rational_from_u64(a[k], 1) / v;
    }
    v
}

/// Right-to-left evaluation of the RGCF tail
/// `[alpha_{i+1}..alpha_m ; b_i..b_m]`: each level contributes
/// `b_k + alpha + alpha / (s(alpha) - 1 + <deeper>)`.
pub fn rgcf_tail_direct(alphas: &[Rational], b: &[u64], i: usize) -> Rational {
    let m = alphas.len();
    let mut v = rational_from_u64(b[m], 1);
    for k in (i..m).rev() {
        let alpha = &alphas[k];
        let s = lecf::confrac::weight_s(alpha).unwrap();
        let denom = Rational::from_integer(s - Int::from(1)) + &v;
        v = rational_from_u64(b[k], 1) + alpha + alpha / denom;
    }
    v
}
