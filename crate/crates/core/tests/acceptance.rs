//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Tolerances: every comparison is an exact rational comparison, with no
//! floating-point slack. The only approximated constant is `e`, which enters
//! the certifier through the default enclosure `[2.7182818284, 2.7182818285]`.
//!
//! Criteria listed in `KNOWN_FAILING` are printed as FAIL and documented in the
//! decisions ledger. The test asserts that the failing set is exactly that
//! list, so a new failure or an unexpected fix both surface.

use std::time::Instant;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crossint::certify::{self, ClaimId, ParamPoint};
use crossint::family::frankl_family;
use crossint::measure::{count_walks_avoiding_line, mu_class_prob, mu_frankl_closed, mu_hit_prob, mu_weight, optimal_r};
use crossint::rat::{pow, rat};
use crossint::search::{
    interior_probabilities, is_isomorphic_to_frankl, kneser_link_connected, max_product, uniqueness_witness_check,
    verify_monotone_n,
};
use crossint::shift::{is_cross_t_intersecting, is_shifted, maximal_partner, shift_pair_to_fixpoint};
use crossint::walk::classify_walk;
use crossint::{Family, Rat, SubsetMask, WalkClass};

const KNOWN_FAILING: &[&str] = &["7/UV-ODD", "7/MONO-DIAG"];

struct Outcome {
    id: String,
    title: String,
    pass: bool,
    detail: String,
}

fn outcome(id: impl Into<String>, title: impl Into<String>, failures: &[String], detail: String) -> Outcome {
    let pass = failures.is_empty();
    let detail = if pass {
        detail
    } else {
        let shown: Vec<&str> = failures.iter().take(6).map(String::as_str).collect();
        format!("{detail}; {} failing: {}{}", failures.len(), shown.join(" | "), if failures.len() > 6 { " | ..." } else { "" })
    };
    Outcome { id: id.into(), title: title.into(), pass, detail }
}

fn alpha(p: &Rat) -> Rat {
    p / (Rat::from_integer(1.into()) - p)
}

fn layer_weight(counts: &[u64], p: &Rat) -> Rat {
    let n = counts.len() as i64 - 1;
    let q = rat(1, 1) - p;
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| Rat::from_integer(c.into()) * pow(p, k as i64) * pow(&q, n - k as i64))
        .sum()
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for t in 1..=5u32 {
        for i in 0..=3u32 {
            let ps = [rat(1, i64::from(t) + 1), rat(2, i64::from(t) + 3), rat(1, 7)];
            for n in t + 2 * i..=14 {
                let fam = frankl_family(n, t, i).unwrap();
                for p in &ps {
                    cases += 1;
                    if mu_weight(&fam, p).unwrap() != mu_frankl_closed(t, i, p).unwrap() {
                        failures.push(format!("t={t} i={i} n={n} p={p}"));
                    }
                }
            }
        }
    }
    outcome("1", "closed-form Frankl weight equals enumeration", &failures, format!("{cases} exact comparisons"))
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for t in 1..=100u32 {
        let ti = i64::from(t);
        let p0 = rat(1, ti + 1);
        if mu_frankl_closed(t, 0, &p0).unwrap() != mu_frankl_closed(t, 1, &p0).unwrap() {
            failures.push(format!("F0=F1 at t={t}"));
        }
        let p1 = rat(2, ti + 3);
        if mu_frankl_closed(t, 1, &p1).unwrap() != mu_frankl_closed(t, 2, &p1).unwrap() {
            failures.push(format!("F1=F2 at t={t}"));
        }
    }
    outcome("2", "equality at the window endpoints", &failures, "t = 1..100".into())
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    let start = Instant::now();
    let mut n5 = 0u128;
    for t in 1..=2u32 {
        for n in t..=5u32 {
            let interior = interior_probabilities(n, t);
            let mut ps = interior.clone();
            for p in [rat(1, 7), rat(1, 3), rat(1, 2)] {
                if !ps.contains(&p) {
                    ps.push(p);
                }
            }
            for p in &ps {
                let s = Instant::now();
                let res = max_product(n, t, p).unwrap();
                if n == 5 {
                    n5 += s.elapsed().as_millis();
                }
                runs += 1;
                let predicted = (0..)
                    .take_while(|r| t + 2 * r <= n)
                    .map(|r| pow(&mu_frankl_closed(t, r, p).unwrap(), 2))
                    .max()
                    .unwrap();
                if res.best_value != predicted {
                    failures.push(format!("n={n} t={t} p={p}: {} vs {predicted}", res.best_value));
                }
                if !is_cross_t_intersecting(&res.witness_a, &res.witness_b, t).unwrap()
                    || mu_weight(&res.witness_a, p).unwrap() * mu_weight(&res.witness_b, p).unwrap() != res.best_value
                {
                    failures.push(format!("n={n} t={t} p={p}: invalid witness"));
                }
                if interior.contains(p) {
                    let rs = optimal_r(t, p).unwrap();
                    let r = rs[0];
                    let iso = rs.len() == 1
                        && res.witness_isomorphic_to == Some(r)
                        && is_isomorphic_to_frankl(&res.witness_a, t, r).unwrap()
                        && is_isomorphic_to_frankl(&res.witness_b, t, r).unwrap();
                    if !iso {
                        failures.push(format!("n={n} t={t} p={p}: witness not F_{r}"));
                    }
                }
            }
        }
    }
    outcome(
        "3",
        "exhaustive search matches max_r mu(F_r)^2",
        &failures,
        format!("{runs} searches, {} ms total, {n5} ms at n=5", start.elapsed().as_millis()),
    )
}

/// Random nonempty family whose members have at least `min_len` elements.
fn random_family(rng: &mut StdRng, n: u32, min_len: u32, density: f64) -> Family {
    loop {
        let fam = Family::from_predicate(n, |m| m.len() >= min_len && rng.gen_bool(density)).unwrap();
        if !fam.is_empty() {
            return fam;
        }
    }
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let ps = [rat(1, 5), rat(1, 3), rat(2, 5)];
    let mut failures = Vec::new();
    let pairs = 1000;
    let mut nonempty_b = 0;
    for k in 0..pairs {
        let n = rng.gen_range(2..=10u32);
        let t = rng.gen_range(1..=3u32.min(n));
        let density = rng.gen_range(0.05..0.8);
        let min_len = rng.gen_range(t..=(n + t).div_ceil(2));
        let a = random_family(&mut rng, n, min_len, density);
        let partner = maximal_partner(&a, t).unwrap();
        let b = partner.filter(|_| rng.gen_bool(0.7));
        if !b.is_empty() {
            nonempty_b += 1;
        }
        let p = &ps[k % 3];
        let (sa, sb) = shift_pair_to_fixpoint(&a, &b).unwrap();
        if mu_weight(&sa, p).unwrap() != mu_weight(&a, p).unwrap() || mu_weight(&sb, p).unwrap() != mu_weight(&b, p).unwrap() {
            failures.push(format!("pair {k}: weight changed"));
        }
        if !is_cross_t_intersecting(&sa, &sb, t).unwrap() {
            failures.push(format!("pair {k}: cross {t}-intersection lost"));
        }
        if !is_shifted(&sa) || !is_shifted(&sb) {
            failures.push(format!("pair {k}: fixpoint not shifted"));
        }
    }
    let mut mono = 0;
    for n in 2..=4u32 {
        for t in 1..=2u32.min(n) {
            for p in [rat(1, 5), rat(1, 3), rat(1, 2)] {
                mono += 1;
                if !verify_monotone_n(n, t, &p).unwrap() {
                    failures.push(format!("f({n}) > f({}) at t={t} p={p}", n + 1));
                }
            }
        }
    }
    outcome(
        "4",
        "shifting preserves weight and cross-intersection; f(n) <= f(n+1)",
        &failures,
        format!("{pairs} random pairs ({nonempty_b} with nonempty B), {mono} monotonicity checks"),
    )
}

fn criterion_5() -> Outcome {
    // tally[x0][y0][h] = walks to (x0, y0) whose maximum height y - x is h.
    let m_max = 14usize;
    let mut tally = vec![vec![vec![0u64; m_max + 1]; m_max + 1]; m_max + 1];
    for m in 0..=m_max {
        for bits in 0u32..(1 << m) {
            let (mut h, mut top) = (0i64, 0i64);
            for e in 0..m {
                h += if bits >> e & 1 == 1 { 1 } else { -1 };
                top = top.max(h);
            }
            let y0 = bits.count_ones() as usize;
            tally[m - y0][y0][top as usize] += 1;
        }
    }
    let mut failures = Vec::new();
    let mut cases = 0;
    for x0 in 0..=m_max {
        for y0 in 0..=m_max - x0 {
            for c in 1..y0 {
                if y0 >= x0 + c {
                    continue;
                }
                cases += 1;
                let brute: u64 = tally[x0][y0][..c].iter().sum();
                let got = count_walks_avoiding_line(x0 as u64, y0 as u64, c as u64).unwrap();
                if got != BigUint::from(brute) {
                    failures.push(format!("({x0},{y0},{c}): {got} vs {brute}"));
                }
            }
        }
    }
    outcome("5", "reflection count matches walk enumeration", &failures, format!("{cases} triples, x0+y0 <= 14"))
}

fn criterion_6() -> Outcome {
    let small = [rat(1, 7), rat(1, 5), rat(2, 13), rat(1, 3), rat(2, 5), rat(1, 2)];
    let large = [rat(1, 7), rat(1, 5), rat(2, 13)];
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=14u32 {
        for ell in 1..=n.min(6) {
            let mut counts = [vec![0u64; n as usize + 1], vec![0u64; n as usize + 1], vec![0u64; n as usize + 1], vec![0u64; n as usize + 1]];
            for bits in 0u64..(1 << n) {
                let m = SubsetMask::from_bits(n, bits).unwrap();
                let cls = classify_walk(&m, ell).unwrap();
                let slot = WalkClass::ALL.iter().position(|c| *c == cls).unwrap();
                counts[slot][m.len() as usize] += 1;
            }
            let hit: Vec<u64> = (0..=n as usize).map(|k| counts[0][k] + counts[1][k] + counts[2][k]).collect();
            for p in &small {
                cases += 1;
                let a = alpha(p);
                let tag = format!("n={n} l={ell} p={p}");
                let h = layer_weight(&hit, p);
                let tilde = layer_weight(&counts[0], p);
                let dhat = layer_weight(&counts[2], p);
                if h != mu_hit_prob(n, ell, p).unwrap()
                    || tilde != mu_class_prob(n, ell, WalkClass::Tilde, p).unwrap()
                    || dhat != mu_class_prob(n, ell, WalkClass::DoubleHat, p).unwrap()
                    || layer_weight(&counts[1], p) != mu_class_prob(n, ell, WalkClass::Hat, p).unwrap()
                {
                    failures.push(format!("{tag}: DP disagrees with enumeration"));
                }
                if h > pow(&a, i64::from(ell)) || tilde > pow(&a, i64::from(ell) + 1) || dhat > pow(&a, i64::from(ell) + 1) {
                    failures.push(format!("{tag}: bound violated"));
                }
            }
        }
    }
    for n in 15..=40u32 {
        for ell in 1..=6u32 {
            for p in &large {
                cases += 1;
                let a = alpha(p);
                let ok = mu_hit_prob(n, ell, p).unwrap() <= pow(&a, i64::from(ell))
                    && mu_class_prob(n, ell, WalkClass::Tilde, p).unwrap() <= pow(&a, i64::from(ell) + 1)
                    && mu_class_prob(n, ell, WalkClass::DoubleHat, p).unwrap() <= pow(&a, i64::from(ell) + 1);
                if !ok {
                    failures.push(format!("n={n} l={ell} p={p}: bound violated"));
                }
            }
        }
    }
    outcome("6", "finite-n hitting and class weights under alpha powers", &failures, format!("{cases} (n, l, p) cases"))
}

fn criterion_7_points(id: ClaimId) -> Vec<ParamPoint> {
    match id {
        ClaimId::QtSandwich | ClaimId::A3Mono => certify::default_points(id),
        ClaimId::MonoDiag => certify::points_at(id, 10),
        ClaimId::ExtCmp => [(0, 17), (1, 12), (2, 22)].iter().map(|&(s, t)| ParamPoint::at_t(t).with_s(s)).collect(),
        _ => certify::points_at(id, id.threshold()),
    }
}

fn criterion_7() -> Vec<Outcome> {
    ClaimId::ALL
        .iter()
        .map(|&id| {
            let points = criterion_7_points(id);
            let mut failures = Vec::new();
            for pt in &points {
                let r = certify::check_claim(id, pt).unwrap();
                if !r.passed() {
                    failures.push(format!("{pt}: {}", r.note));
                }
            }
            let ts: Vec<String> = {
                let mut v: Vec<u32> = points.iter().map(|p| p.t).collect();
                v.dedup();
                v.iter().map(u32::to_string).collect()
            };
            outcome(
                format!("7/{id}"),
                format!("certifier at t = {}", ts.join(",")),
                &failures,
                format!("{} points", points.len()),
            )
        })
        .collect()
}

fn swap_elements(fam: &Family, i: u32, j: u32) -> Family {
    let n = fam.n();
    let swap = |e: u32| if e == i { j } else if e == j { i } else { e };
    Family::from_members(n, fam.iter().map(|m| SubsetMask::new(n, m.elements().into_iter().map(swap)).unwrap())).unwrap()
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut links = 0;
    for t in 2..=6u32 {
        for r in 0..=3u32 {
            links += 1;
            if !kneser_link_connected(t, r).unwrap() {
                failures.push(format!("link ({t},{r}) disconnected"));
            }
        }
    }
    let mut witnesses = 0;
    for (t, r) in [(2u32, 0u32), (2, 1)] {
        for n in t + 2 * r..=5 {
            let f = frankl_family(n, t, r).unwrap();
            let k = t + 2 * r;
            for i in 1..=k {
                for j in k + 1..=n {
                    witnesses += 1;
                    let a = swap_elements(&f, i, j);
                    match uniqueness_witness_check(&a, &a, t, r, i, j) {
                        Ok(true) => {}
                        other => failures.push(format!("(t,r)=({t},{r}) n={n} swap {i}<->{j}: {other:?}")),
                    }
                }
            }
        }
    }
    outcome(
        "8",
        "link connectivity and shifting-uniqueness witnesses",
        &failures,
        format!("{links} links, {witnesses} relabeled witnesses"),
    )
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let mut outcomes = vec![criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6()];
    outcomes.extend(criterion_7());
    outcomes.push(criterion_8());
    for o in &outcomes {
        println!("{} {} {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.title, o.detail);
    }
    println!("acceptance finished in {} ms", start.elapsed().as_millis());
    let failing: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id.as_str()).collect();
    assert_eq!(failing, KNOWN_FAILING, "failing criteria differ from the documented set");
}
