//! Acceptance suite. Each test prints one `criterion N: PASS/FAIL` line
//! (visible with `cargo test --test acceptance -- --nocapture`) and fails
//! loudly when any sub-check breaks. All comparisons are exact except the
//! explicitly empirical envelopes of criteria 5 and 9.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{brute_count, random_pointed, random_poset, rng};
use lecf::confrac::{self, Gcf, Rgcf};
use lecf::constructions::{
    self, attach_chain, flip_flop, hybrid_sum, rec_cf_step, relative_poset, BuildConfig,
    VerifyLevel, Witness,
};
use lecf::rational::rational_from_u64 as rat;
use lecf::search;
use lecf::{Count, Int, Rational};
use num_integer::Integer;
use rand::Rng;

fn report(criterion: usize, label: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("criterion {criterion}: PASS — {label}"),
        Err(msg) => {
            println!("criterion {criterion}: FAIL — {label}: {msg}");
            panic!("criterion {criterion} failed: {msg}");
        }
    }
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

#[test]
fn criterion_1_worked_examples() {
    let run = || -> Result<(), String> {
        let start = Instant::now();

        check(confrac::weight_s(&rat(20, 7)).unwrap() == Int::from(9), "s(20/7) != 9")?;
        let g = Gcf::new(
            vec![Int::from(2), Int::from(1)],
            vec![Int::from(2), Int::from(2), Int::from(3)],
        )
        .unwrap();
        check(g.weight() == Int::from(6), "G(2,1;2,2,3) != 6")?;
        check(g.eval() == rat(20, 7), "[2,1;2,2,3] != 20/7")?;
        check(confrac::weight_s(&rat(3, 2)).unwrap() == Int::from(3), "s(3/2) != 3")?;

        let r = Rgcf::new(vec![rat(3, 2)], vec![Int::from(1), Int::from(3)]).unwrap();
        check(r.eval() == rat(14, 5), "[3/2;1,3] != 14/5")?;
        check(r.weight() == Int::from(7), "R(3/2;1,3) != 7")?;

        check(confrac::weight_s(&rat(13, 7)).unwrap() == Int::from(8), "s(13/7) != 8")?;
        let r = Rgcf::new(vec![rat(13, 7)], vec![Int::from(1), Int::from(1)]).unwrap();
        check(r.eval() == rat(173, 56), "[13/7;1,1] != 173/56")?;
        check(r.weight() == Int::from(10), "R(13/7;1,1) != 10")?;
        check(
            confrac::weight_s(&rat(173, 56)).unwrap() == Int::from(19),
            "s(173/56) != 19",
        )?;

        let elapsed = start.elapsed();
        check(
            elapsed.as_secs_f64() < 1.0,
            format!("took {elapsed:?}, limit 1 s"),
        )
    };
    report(1, "worked examples of the weight and value identities", run());
}

#[test]
fn criterion_2_simple_cf_sweep() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let cfg = BuildConfig {
            verify: VerifyLevel::None,
            ..BuildConfig::default()
        };
        let mut pairs = 0u64;
        for d in 2..=200u64 {
            for c in 1..d {
                if c.gcd(&d) != 1 {
                    continue;
                }
                pairs += 1;
                let report = constructions::poset_from_simple_cf(c, d, &cfg)
                    .map_err(|e| format!("({c},{d}): {e}"))?;
                let s = confrac::weight_s(&rat(c, d)).unwrap();
                check(
                    Int::from(report.poset.n()) == s,
                    format!("({c},{d}): |X| != s(c/d)"),
                )?;
                check(report.poset.width() <= 2, format!("({c},{d}): width > 2"))?;
                let e = report.poset.count_le().unwrap();
                check(e == Count::from(d), format!("({c},{d}): e(P) != d"))?;
                let x = report.x.unwrap();
                let (minus, _) = report.poset.remove(x).unwrap();
                let em = minus.count_le().unwrap();
                check(em == Count::from(c), format!("({c},{d}): e(P-x) != c"))?;
            }
        }
        let elapsed = start.elapsed();
        println!("  criterion 2: {pairs} pairs in {elapsed:?}");
        check(
            elapsed.as_secs_f64() < 60.0,
            format!("took {elapsed:?}, target 60 s"),
        )
    };
    report(2, "width-2 realization for all coprime c < d <= 200", run());
}

#[test]
fn criterion_3_gcf_sweep() {
    let run = || -> Result<(), String> {
        let cfg = BuildConfig {
            verify: VerifyLevel::None,
            ..BuildConfig::default()
        };
        let mut checked = 0u64;
        for m in 0..=3usize {
            let mut a = vec![1u64; m];
            loop {
                let mut b = vec![1u64; m + 1];
                loop {
                    let gcf = Gcf::new(
                        a.iter().map(|&x| Int::from(x)).collect(),
                        b.iter().map(|&x| Int::from(x)).collect(),
                    )
                    .unwrap();
                    if gcf.is_balanced() {
                        checked += 1;
                        let report = constructions::poset_from_gcf(&gcf, &cfg)
                            .map_err(|e| format!("{gcf}: {e}"))?;
                        let table = gcf.convergents();
                        let (c0, d0) = table.head();
                        check(
                            Int::from(report.poset.n()) == gcf.weight(),
                            format!("{gcf}: |X| != G"),
                        )?;
                        check(report.poset.width() <= 3, format!("{gcf}: width > 3"))?;
                        let e = report.poset.count_le().unwrap();
                        check(
                            Int::from(e.clone()) == *c0,
                            format!("{gcf}: e(P) != C_0"),
                        )?;
                        let x = report.x.unwrap();
                        let (minus, _) = report.poset.remove(x).unwrap();
                        let em = minus.count_le().unwrap();
                        check(
                            Int::from(em.clone()) == *d0,
                            format!("{gcf}: e(P-x) != D_0"),
                        )?;
                        let rho = Rational::new(Int::from(e), Int::from(em));
                        check(rho == gcf.eval(), format!("{gcf}: rho != value"))?;
                    }
                    if !bump(&mut b, 6) {
                        break;
                    }
                }
                if m == 0 || !bump(&mut a, 4) {
                    break;
                }
            }
        }
        println!("  criterion 3: {checked} balanced GCFs checked");
        check(checked > 0, "no balanced GCFs enumerated")
    };
    report(3, "width-3 realization for all balanced GCFs in the box", run());
}

/// Odometer over `{1..=max}^len`; false when it wraps around.
fn bump(digits: &mut [u64], max: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d <= max {
            return true;
        }
        *d = 1;
    }
    false
}

#[test]
fn criterion_4_rgcf_spot_checks() {
    let run = || -> Result<(), String> {
        let cfg = BuildConfig {
            verify: VerifyLevel::None,
            ..BuildConfig::default()
        };

        let r = Rgcf::new(vec![rat(3, 2)], vec![Int::from(1), Int::from(3)]).unwrap();
        let report = constructions::poset_from_rgcf(&r, &cfg).unwrap();
        check(report.poset.n() == 7, "[3/2;1,3]: |X| != 7")?;
        check(
            report.poset.rho(report.x.unwrap()).unwrap() == rat(14, 5),
            "[3/2;1,3]: rho != 14/5",
        )?;

        let r = Rgcf::new(vec![rat(13, 7)], vec![Int::from(1), Int::from(1)]).unwrap();
        let report = constructions::poset_from_rgcf(&r, &cfg).unwrap();
        check(report.poset.n() == 10, "[13/7;1,1]: |X| != 10")?;
        check(
            report.poset.rho(report.x.unwrap()).unwrap() == rat(173, 56),
            "[13/7;1,1]: rho != 173/56",
        )?;

        // 100 random RGCFs with m <= 2 and small parameters
        let mut rng = rng(404);
        for trial in 0..100 {
            let m = rng.gen_range(0..=2);
            let alphas: Vec<Rational> = (0..m)
                .map(|_| {
                    let den = rng.gen_range(1u64..=3);
                    let num = rng.gen_range(den..=den + 5);
                    let g = num.gcd(&den);
                    rat(num / g, den / g)
                })
                .collect();
            let quotients: Vec<Int> =
                (0..=m).map(|_| Int::from(rng.gen_range(1u64..=3))).collect();
            let r = Rgcf::new(alphas, quotients).unwrap();
            let report = constructions::poset_from_rgcf(&r, &cfg)
                .map_err(|e| format!("trial {trial} {r}: {e}"))?;
            let table = r.convergents();
            let (c0, d0) = table.head();
            check(
                Int::from(report.poset.n()) == r.weight(),
                format!("{r}: |X| != R"),
            )?;
            check(report.poset.width() <= 3, format!("{r}: width > 3"))?;
            let e = report.poset.count_le().unwrap();
            check(Int::from(e.clone()) == *c0, format!("{r}: e(P) != C_0"))?;
            let x = report.x.unwrap();
            let (minus, _) = report.poset.remove(x).unwrap();
            let em = minus.count_le().unwrap();
            check(Int::from(em.clone()) == *d0, format!("{r}: e(P-x) != D_0"))?;
            check(
                Rational::new(Int::from(e), Int::from(em)) == r.eval(),
                format!("{r}: rho != value"),
            )?;
        }
        Ok(())
    };
    report(4, "RGCF realizations: worked examples plus 100 random", run());
}

#[test]
fn criterion_5_relative_sweep() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let cfg = BuildConfig {
            verify: VerifyLevel::None,
            ..BuildConfig::default()
        };
        let mut pairs = 0u64;
        for c in 1..=100u64 {
            for d in (3 * c)..=300 {
                if c.gcd(&d) != 1 {
                    continue;
                }
                pairs += 1;
                let report =
                    relative_poset(c, d, &cfg).map_err(|e| format!("({c},{d}): {e}"))?;
                let z = report.x.unwrap();
                let e = report.poset.count_le().unwrap();
                let (minus, _) = report.poset.remove(z).unwrap();
                let em = minus.count_le().unwrap();
                let rho = Rational::new(Int::from(e), Int::from(em));
                check(rho == rat(d, c), format!("({c},{d}): rho != d/c"))?;

                // size formula and empirical envelope
                let size = report.poset.n() as u64;
                match report.witness {
                    Witness::Relative { ell: Some(_), s_ell, s_rest, .. } => {
                        check(
                            size == d / c - 1 + s_ell + s_rest,
                            format!("({c},{d}): size formula"),
                        )?;
                    }
                    Witness::Relative { ell: None, .. } => {
                        check(size == d, format!("({c},{d}): fallback size"))?;
                    }
                    _ => return Err(format!("({c},{d}): wrong witness kind")),
                }
                let ln_d = (d as f64).ln();
                let envelope = d as f64 / c as f64 + 4.0 * ln_d * ln_d.ln() + 8.0;
                check(
                    size as f64 <= envelope,
                    format!("({c},{d}): |Z| = {size} above envelope {envelope:.2}"),
                )?;
                check(
                    size >= d / c,
                    format!("({c},{d}): |Z| below the trivial lower bound"),
                )?;
            }
        }
        let elapsed = start.elapsed();
        println!("  criterion 5: {pairs} pairs in {elapsed:?}");
        Ok(())
    };
    report(5, "relative realization rho = d/c for 3c <= d <= 300", run());
}

#[test]
fn criterion_6_lemma_suite() {
    let run = || -> Result<(), String> {
        let trials = 200;

        // hybrid-sum count identities and the width bound
        let mut r = rng(601);
        for t in 0..trials {
            let n = r.gen_range(1..=6);
            let nq = r.gen_range(1..=(9 - n).min(6));
            let p = random_pointed(&mut r, n, 0.4);
            let q = random_poset(&mut r, nq, 0.4);
            let rr = hybrid_sum(&q, &p);
            let ep = brute_count(p.poset());
            let (pm, _) = p.poset().remove(p.x()).unwrap();
            let epm = brute_count(&pm);
            let eq = brute_count(&q);
            let er = brute_count(rr.poset());
            let expected = &eq * &ep + Count::from(nq) * &eq * &epm;
            check(er == expected, format!("hybrid product rule failed at trial {t}"))?;

            let (rm, _) = rr.poset().remove(rr.x()).unwrap();
            check(
                brute_count(&rm) == &eq * &epm,
                format!("hybrid pivot-removal rule failed at trial {t}"),
            )?;

            let y = *q
                .minimal_elements()
                .first()
                .expect("q is nonempty");
            let (ry, _) = rr.poset().remove(n + y).unwrap();
            let (qy, _) = q.remove(y).unwrap();
            let eqy = brute_count(&qy);
            let expected2 = &eqy * &ep + Count::from(nq - 1) * &eqy * &epm;
            check(brute_count(&ry) == expected2, format!("hybrid base-removal rule failed at trial {t}"))?;

            let bound = (p.poset().width() - 1).max(q.width()) + 1;
            check(
                rr.poset().width() <= bound,
                format!("width bound failed at trial {t}"),
            )?;

            // repointed hybrid sum: rho(R, y) = rho(Q, y) (1 + 1/(n' - 1 + rho(P, x)))
            let rho_p = Rational::new(Int::from(ep.clone()), Int::from(epm.clone()));
            let rho_q = Rational::new(Int::from(eq.clone()), Int::from(eqy.clone()));
            let one = Rational::from_integer(Int::from(1));
            let expected_rho = &rho_q
                * (&one + one.clone() / (Rational::from_integer(Int::from(nq as i64 - 1)) + &rho_p));
            let got_rho = Rational::new(Int::from(er.clone()), Int::from(brute_count(&ry)));
            check(got_rho == expected_rho, format!("repointed-hybrid rho failed at trial {t}"))?;
        }

        // chain attachment
        let mut r = rng(602);
        for t in 0..trials {
            let n = r.gen_range(1..=5);
            let b = r.gen_range(0..=(9 - n).min(4));
            let p = random_pointed(&mut r, n, 0.4);
            let rr = attach_chain(&p, b);
            let ep = brute_count(p.poset());
            let (pm, _) = p.poset().remove(p.x()).unwrap();
            let epm = brute_count(&pm);
            check(
                brute_count(rr.poset()) == &ep + Count::from(b) * &epm,
                format!("attach_chain e failed at trial {t}"),
            )?;
            let (rm, _) = rr.poset().remove(rr.x()).unwrap();
            check(brute_count(&rm) == epm, format!("attach_chain e_minus failed at trial {t}"))?;
            check(rr.poset().n() == n + b, format!("attach_chain size failed at trial {t}"))?;
            check(
                rr.poset().width() <= p.poset().width().max(2),
                format!("attach_chain width failed at trial {t}"),
            )?;
            // rho(R, z) = b + rho(P, x)
            let rho_p = Rational::new(Int::from(ep.clone()), Int::from(epm.clone()));
            let got = Rational::new(
                Int::from(brute_count(rr.poset())),
                Int::from(brute_count(&rm)),
            );
            check(
                got == Rational::from_integer(Int::from(b)) + &rho_p,
                format!("attach_chain rho failed at trial {t}"),
            )?;
        }

        // chain over repointed hybrid: C_b <_y (Q <_x P)
        let mut r = rng(603);
        for t in 0..trials {
            let n = r.gen_range(1..=5);
            let nq = r.gen_range(1..=(8 - n).min(4));
            let b = r.gen_range(0..=(9 - n - nq).min(4));
            let p = random_pointed(&mut r, n, 0.4);
            let q = random_pointed(&mut r, nq, 0.4);
            let inner = hybrid_sum(q.poset(), &p).into_poset();
            let y = n + q.x();
            let pivot = lecf::poset::PointedPoset::new(inner, y).unwrap();
            let rr = attach_chain(&pivot, b);

            let ep = brute_count(p.poset());
            let (pm, _) = p.poset().remove(p.x()).unwrap();
            let epm = brute_count(&pm);
            let eq = brute_count(q.poset());
            let (qm, _) = q.poset().remove(q.x()).unwrap();
            let eqm = brute_count(&qm);

            let (rm, _) = rr.poset().remove(rr.x()).unwrap();
            let erm = brute_count(&rm);
            let expected_minus =
                &eqm * (&ep + Count::from(nq - 1) * &epm);
            check(erm == expected_minus, format!("chain-over-hybrid e_minus failed at trial {t}"))?;
            let expected_e =
                Count::from(b) * &erm + &eq * (&ep + Count::from(nq) * &epm);
            check(
                brute_count(rr.poset()) == expected_e,
                format!("chain-over-hybrid e failed at trial {t}"),
            )?;
            check(rr.poset().n() == n + nq + b, format!("chain-over-hybrid size failed at trial {t}"))?;
            let bound = p.poset().width().max(q.poset().width() + 1).max(2);
            check(rr.poset().width() <= bound, format!("chain-over-hybrid width failed at trial {t}"))?;
            // rho(R, z) = b + rho(Q, y) (1 + 1/(n' - 1 + rho(P, x)))
            let rho_p = Rational::new(Int::from(ep.clone()), Int::from(epm.clone()));
            let rho_q = Rational::new(Int::from(eq.clone()), Int::from(eqm.clone()));
            let one = Rational::from_integer(Int::from(1));
            let expected = Rational::from_integer(Int::from(b))
                + &rho_q
                    * (&one
                        + one.clone()
                            / (Rational::from_integer(Int::from(nq as i64 - 1)) + &rho_p));
            let got = Rational::new(Int::from(brute_count(rr.poset())), Int::from(erm.clone()));
            check(got == expected, format!("chain-over-hybrid rho failed at trial {t}"))?;
        }

        // the per-quotient step
        let mut r = rng(604);
        for t in 0..trials {
            let n = r.gen_range(1..=5);
            let b_max = (9 - n).clamp(1, 4);
            let b = r.gen_range(1..=b_max);
            let a = r.gen_range(1..=b);
            let p = random_pointed(&mut r, n, 0.4);
            let rr = rec_cf_step(&p, a, b).unwrap();
            let ep = brute_count(p.poset());
            let (pm, _) = p.poset().remove(p.x()).unwrap();
            let epm = brute_count(&pm);

            let (rm, _) = rr.poset().remove(rr.x()).unwrap();
            let erm = brute_count(&rm);
            check(
                erm == &ep + Count::from(a - 1) * &epm,
                format!("rec_cf_step e_minus failed at trial {t}"),
            )?;
            check(
                brute_count(rr.poset()) == Count::from(b) * &erm + Count::from(a) * &epm,
                format!("rec_cf_step e failed at trial {t}"),
            )?;
            check(rr.poset().n() == n + b, format!("rec_cf_step size failed at trial {t}"))?;
            check(
                rr.poset().width() <= p.poset().width().max(3),
                format!("rec_cf_step width failed at trial {t}"),
            )?;
            // rho(R, z) = b + a / (a - 1 + rho(P, x))
            let rho_p = Rational::new(Int::from(ep.clone()), Int::from(epm.clone()));
            let expected = Rational::from_integer(Int::from(b))
                + Rational::from_integer(Int::from(a))
                    / (Rational::from_integer(Int::from(a as i64 - 1)) + &rho_p);
            let got = Rational::new(Int::from(brute_count(rr.poset())), Int::from(erm.clone()));
            check(got == expected, format!("rec_cf_step rho failed at trial {t}"))?;
        }

        // flip-flop
        let mut r = rng(605);
        for t in 0..trials {
            let n = r.gen_range(1..=5);
            let nq = r.gen_range(1..=(9 - n).min(5));
            let p = random_pointed(&mut r, n, 0.4);
            let q = random_pointed(&mut r, nq, 0.4);
            let (rr, z) = flip_flop(&p, &q);
            let ep = brute_count(p.poset());
            let (pm, _) = p.poset().remove(p.x()).unwrap();
            let epm = brute_count(&pm);
            let eq = brute_count(q.poset());
            let (qm, _) = q.poset().remove(q.x()).unwrap();
            let eqm = brute_count(&qm);

            check(
                brute_count(&rr) == &ep * &eqm + &epm * &eq,
                format!("flip-flop e failed at trial {t}"),
            )?;
            let (rm, _) = rr.remove(z).unwrap();
            check(
                brute_count(&rm) == &epm * &eqm,
                format!("flip-flop e_minus failed at trial {t}"),
            )?;
            check(rr.n() == n + nq, format!("flip-flop size failed at trial {t}"))?;
            check(
                rr.width() <= p.poset().width() + q.poset().width(),
                format!("flip-flop width failed at trial {t}"),
            )?;
            // rho(R, z) = rho(P, x) + rho(Q, y)
            let rho_p = Rational::new(Int::from(ep.clone()), Int::from(epm.clone()));
            let rho_q = Rational::new(Int::from(eq.clone()), Int::from(eqm.clone()));
            let got = Rational::new(Int::from(brute_count(&rr)), Int::from(brute_count(&rm)));
            check(got == rho_p + rho_q, format!("flip-flop rho failed at trial {t}"))?;
        }
        Ok(())
    };
    report(6, "hybrid/chain/flip-flop identities on 200 random instances each", run());
}

#[test]
fn criterion_7_counting_kernel_equivalence() {
    let run = || -> Result<(), String> {
        // exhaustive over all isomorphism classes with n <= 6
        let catalog = search::enumerate_posets(6).map_err(|e| e.to_string())?;
        for n in 0..=6 {
            for entry in catalog.level(n) {
                let p = entry.to_poset(n);
                check(
                    p.count_le().unwrap() == brute_count(&p),
                    format!("DP != brute force on {:?}", entry.covers),
                )?;
            }
        }
        // 500 random posets with n in {7, 8}
        let mut r = rng(700);
        for t in 0..500 {
            let n = if t % 2 == 0 { 7 } else { 8 };
            let prob = r.gen_range(0.15..0.7);
            let p = random_poset(&mut r, n, prob);
            check(
                p.count_le().unwrap() == brute_count(&p),
                format!("DP != brute force at trial {t} on {:?}", p.covers()),
            )?;
        }
        Ok(())
    };
    report(7, "ideal-lattice DP equals brute force (n <= 6 exhaustive, 500 random 7-8)", run());
}

#[test]
fn criterion_8_mu_and_t_tables() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let catalog = search::enumerate_posets(7).map_err(|e| e.to_string())?;
        let build_time = start.elapsed();
        println!("  criterion 8: catalog to n = 7 in {build_time:?}");
        check(
            build_time.as_secs_f64() < 300.0,
            format!("catalog build took {build_time:?}, limit 5 min"),
        )?;

        let mu = catalog.mu_table(5040);
        check(mu.get(5) == Some(4), "mu(5) != 4")?;
        for (&n, &k) in &mu.entries {
            if let Some(k) = k {
                check(k as u64 <= n, format!("mu({n}) = {k} > n"))?;
            }
        }

        let mut factorial = 1u64;
        let mut previous: Option<BTreeSet<u64>> = None;
        for k in 1..=7usize {
            factorial *= k as u64;
            let t = catalog.t_set(k).map_err(|e| e.to_string())?;
            for v in 1..=k as u64 {
                check(t.contains(&v), format!("{v} missing from T({k})"))?;
            }
            check(
                *t.iter().max().unwrap() == factorial,
                format!("max T({k}) != {k}!"),
            )?;
            if let Some(prev) = previous {
                check(
                    prev.len() < t.len(),
                    format!("|T({k})| not strictly larger than |T({})|", k - 1),
                )?;
            }
            previous = Some(t);
        }
        Ok(())
    };
    report(8, "mu(5) = 4, mu(n) <= n, T(k) extremes and growth for k <= 7", run());
}

#[test]
fn criterion_9_empirical_asymptotics() {
    let run = || -> Result<(), String> {
        let records = search::zaremba_scan(100, 10_000).map_err(|e| e.to_string())?;
        for rec in &records {
            check(
                rec.within_bound,
                format!(
                    "d = {}: min weight {} above threshold {:.2}",
                    rec.d, rec.min_weight, rec.bound_value
                ),
            )?;
        }
        for d in [1_000u64, 10_000] {
            let h = search::weight_histogram(d).map_err(|e| e.to_string())?;
            check(
                h.mean_ratio >= 0.5 && h.mean_ratio <= 2.0,
                format!(
                    "d = {d}: mean {:.2} not within factor 2 of {:.2}",
                    h.mean, h.expected_mean
                ),
            )?;
        }
        Ok(())
    };
    report(9, "numerator-scan and histogram means inside the labeled empirical envelopes", run());
}
