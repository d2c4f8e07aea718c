//! Check lists for each registered claim.

use num_traits::{One, Signed};

use super::bounds::{
    check_p_window, coeffs_10_at, coeffs_21_at, f_at, h_at, p_high, p_low, z_of, EEnclosure,
};
use super::{Check, CheckKind, ClaimId, PPolicy, ParamPoint, Relation};
use crate::error::{Error, Result};
use crate::rat::{binom_rat, factorial, fraction_string, from_biguint, int, interior_points, pow, rat, Rat};

/// Interior points used for discrete monotonicity checks, at least.
const MONO_INTERIOR: u32 = 8;

/// How a claim treats a caller-supplied `p`.
enum PMode {
    /// Checked at every `p` of the policy set, or only at the given one.
    Each,
    /// Stated at `p = 2/(t+3)`; a given `p` must equal it.
    Pinned,
    /// Evaluated at points fixed by the claim; a given `p` is rejected.
    Free,
}

fn p_mode(id: ClaimId) -> PMode {
    use ClaimId::*;
    match id {
        QtSandwich | HatEmpty | MonoS1 | MonoS0 | G33 | G32 | G31 | G20 | ExtCmp | A3Mono => PMode::Each,
        LsHu | LsHv | L21C1 | L21C2 | L21C3 | ExtCaseII => PMode::Pinned,
        UvOdd | MonoDiag | L10C1 | L10C2 | L10C3 => PMode::Free,
    }
}

fn min_t(id: ClaimId) -> u32 {
    use ClaimId::*;
    match id {
        G32 | MonoS1 => 2,
        G31 | G20 | MonoS0 => 3,
        _ => 1,
    }
}

/// `2 ≤ s' ≤ s ≤ 9`, `(s,s') ≠ (2,2)`.
pub(super) fn mono_diag_pairs() -> Vec<(u32, u32)> {
    (2..=9u32)
        .flat_map(|s| (2..=s).map(move |sp| (s, sp)))
        .filter(|&pair| pair != (2, 2))
        .collect()
}

pub(super) fn check_domain(id: ClaimId, pt: &ParamPoint) -> Result<()> {
    let t = pt.t;
    if t < min_t(id) {
        return Err(Error::Domain(format!("{id} needs t >= {}, got {t}", min_t(id))));
    }
    match id {
        ClaimId::MonoDiag => {
            let (s, sp) = pt
                .s
                .zip(pt.s_prime)
                .ok_or_else(|| Error::Domain(format!("{id} needs both s and s_prime")))?;
            if !mono_diag_pairs().contains(&(s, sp)) {
                return Err(Error::Domain(format!("{id} needs 2 <= s' <= s <= 9, (s,s') != (2,2); got ({s},{sp})")));
            }
            if t + sp <= s {
                return Err(Error::Domain(format!("u = t - s + s' must be positive for {id}")));
            }
        }
        ClaimId::ExtCmp => {
            let s = pt.s.ok_or_else(|| Error::Domain(format!("{id} needs s")))?;
            if s > 2 {
                return Err(Error::Domain(format!("{id} needs s in {{0, 1, 2}}, got {s}")));
            }
            if pt.s_prime.is_some() {
                return Err(Error::Domain(format!("{id} takes no s_prime")));
            }
        }
        _ => {
            if pt.s.is_some() || pt.s_prime.is_some() {
                return Err(Error::Domain(format!("{id} takes no s or s_prime")));
            }
        }
    }
    if let Some(p) = &pt.p {
        check_p_window(t, p)?;
        match p_mode(id) {
            PMode::Each => {}
            PMode::Pinned if *p == p_high(t) => {}
            PMode::Pinned => {
                return Err(Error::Domain(format!("{id} is stated at p = 2/{} only", t + 3)));
            }
            PMode::Free => return Err(Error::Domain(format!("{id} does not take p"))),
        }
    }
    Ok(())
}

fn dedup_sorted(mut v: Vec<Rat>) -> Vec<Rat> {
    v.sort();
    v.dedup();
    v
}

fn policy_set(t: u32, policy: &PPolicy) -> Vec<Rat> {
    let (lo, hi) = (p_low(t), p_high(t));
    let mut v = match policy {
        PPolicy::Endpoints => Vec::new(),
        PPolicy::Grid(k) => interior_points(&lo, &hi, *k),
    };
    v.push(lo);
    v.push(hi);
    dedup_sorted(v)
}

fn mono_grid(t: u32, policy: &PPolicy) -> Vec<Rat> {
    let k = match policy {
        PPolicy::Endpoints => MONO_INTERIOR,
        PPolicy::Grid(k) => (*k).max(MONO_INTERIOR),
    };
    policy_set(t, &PPolicy::Grid(k))
}

struct Env<'a> {
    t: u32,
    ps: Vec<Rat>,
    grid: Vec<Rat>,
    e: &'a EEnclosure,
    s: u32,
    sp: u32,
}

impl Env<'_> {
    fn ti(&self) -> i64 {
        i64::from(self.t)
    }

    fn tr(&self) -> Rat {
        int(self.ti())
    }

    /// `t + k` as a rational.
    fn tp(&self, k: i64) -> Rat {
        int(self.ti() + k)
    }

    fn lo(&self) -> Rat {
        p_low(self.t)
    }

    fn hi(&self) -> Rat {
        p_high(self.t)
    }
}

#[derive(Default)]
struct Sheet {
    checks: Vec<Check>,
}

impl Sheet {
    fn push(&mut self, kind: CheckKind, label: impl Into<String>, lhs: Rat, relation: Relation, rhs: Rat) {
        let holds = relation.holds(&lhs, &rhs);
        self.checks.push(Check { label: label.into(), lhs, rhs, relation, holds, kind });
    }

    fn head(&mut self, label: impl Into<String>, lhs: Rat, relation: Relation, rhs: Rat) {
        self.push(CheckKind::Headline, label, lhs, relation, rhs);
    }

    fn gate(&mut self, label: impl Into<String>, lhs: Rat, relation: Relation, rhs: Rat) {
        self.push(CheckKind::Gating, label, lhs, relation, rhs);
    }

    fn info(&mut self, label: impl Into<String>, lhs: Rat, relation: Relation, rhs: Rat) {
        self.push(CheckKind::Info, label, lhs, relation, rhs);
    }

    /// Largest backward step of `values` (over an increasing p-grid) is at most 0.
    fn nondecreasing(&mut self, kind: CheckKind, label: impl Into<String>, values: &[Rat]) {
        let worst = values.windows(2).map(|w| &w[0] - &w[1]).max().unwrap_or_else(Rat::default);
        self.push(kind, format!("{} nondecreasing in p", label.into()), worst, Relation::Le, Rat::default());
    }

    fn nonincreasing(&mut self, kind: CheckKind, label: impl Into<String>, values: &[Rat]) {
        let worst = values.windows(2).map(|w| &w[1] - &w[0]).max().unwrap_or_else(Rat::default);
        self.push(kind, format!("{} nonincreasing in p", label.into()), worst, Relation::Le, Rat::default());
    }
}

fn at(p: &Rat) -> String {
    format!(" at p={}", fraction_string(p))
}

fn max_of(it: impl IntoIterator<Item = Rat>) -> Rat {
    it.into_iter().max().expect("nonempty range")
}

fn min_of(it: impl IntoIterator<Item = Rat>) -> Rat {
    it.into_iter().min().expect("nonempty range")
}

fn q_of(p: &Rat) -> Rat {
    Rat::one() - p
}

fn alpha_of(p: &Rat) -> Rat {
    p / q_of(p)
}

/// `μ_p(F_1^t) = z·p^{t+1}`.
fn mu1(t: u32, p: &Rat) -> Rat {
    z_of(t, p) * pow(p, i64::from(t) + 1)
}

fn dec(n: i64, places: u32) -> Rat {
    rat(n, 10i64.pow(places))
}

pub(super) fn evaluate(id: ClaimId, pt: &ParamPoint, policy: &PPolicy, e: &EEnclosure) -> Vec<Check> {
    let t = pt.t;
    let ps = match &pt.p {
        Some(p) => vec![p.clone()],
        None => policy_set(t, policy),
    };
    let env = Env { t, ps, grid: mono_grid(t, policy), e, s: pt.s.unwrap_or(0), sp: pt.s_prime.unwrap_or(0) };
    let mut sh = Sheet::default();
    match id {
        ClaimId::QtSandwich => qt_sandwich(&env, &mut sh),
        ClaimId::UvOdd => uv_odd(&env, &mut sh),
        ClaimId::HatEmpty => hat_empty(&env, &mut sh),
        ClaimId::LsHu => ls_hu(&env, &mut sh),
        ClaimId::LsHv => ls_hv(&env, &mut sh),
        ClaimId::MonoDiag => mono_diag(&env, &mut sh),
        ClaimId::MonoS1 => mono_s1(&env, &mut sh),
        ClaimId::MonoS0 => mono_s0(&env, &mut sh),
        ClaimId::G33 | ClaimId::G32 | ClaimId::G31 | ClaimId::G20 => g_case(id, &env, &mut sh),
        ClaimId::L21C1 => l21_c1(&env, &mut sh),
        ClaimId::L21C2 => l21_c2(&env, &mut sh),
        ClaimId::L21C3 => l21_c3(&env, &mut sh),
        ClaimId::L10C1 => l10_c1(&env, &mut sh),
        ClaimId::L10C2 => l10_c2(&env, &mut sh),
        ClaimId::L10C3 => l10_c3(&env, &mut sh),
        ClaimId::ExtCmp => ext_cmp(&env, &mut sh),
        ClaimId::ExtCaseII => ext_case_ii(&env, &mut sh),
        ClaimId::A3Mono => a3_mono(&env, &mut sh),
    }
    sh.checks
}

fn qt_sandwich(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let inv_e2 = env.e.lower_pow(2).recip();
    let lower = pow(&rat(ti + 1, ti + 3), ti);
    let upper = pow(&rat(ti, ti + 1), ti);
    sh.head("1/e^2 < ((t+1)/(t+3))^t", inv_e2.clone(), Relation::Lt, lower.clone());
    for p in &env.ps {
        let qt = pow(&q_of(p), ti);
        sh.gate(format!("((t+1)/(t+3))^t <= q^t{}", at(p)), lower.clone(), Relation::Le, qt.clone());
        sh.gate(format!("q^t <= (t/(t+1))^t{}", at(p)), qt, Relation::Le, upper.clone());
    }
    sh.gate("(t/(t+1))^t <= 1/2", upper, Relation::Le, rat(1, 2));
    sh.info("1/e^2 < ((t+1)/(t+3))^(t+3)", inv_e2, Relation::Lt, pow(&rat(ti + 1, ti + 3), ti + 3));
}

fn uv_odd(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let majorant =
        int((ti + 2) * (ti + 2)) * pow(&env.tr(), 3) / (env.e.upper_pow(4) * pow(&env.tp(1), 4));
    sh.head("(t+2)^2 t^3/(e^4 (t+1)^4) > 1.02", majorant, Relation::Gt, rat(102, 100));
    let pq3: Vec<Rat> = env.grid.iter().map(|p| p * pow(&q_of(p), 3)).collect();
    sh.nondecreasing(CheckKind::Gating, "pq^3", &pq3);
    for p in &env.ps {
        let q = q_of(p);
        let exact = pow(&mu1(env.t, p), 2) / pow(&alpha_of(p), 2 * ti + 1);
        let chain = int((ti + 2) * (ti + 2)) * p * pow(&q, 3) * pow(&q, 2 * ti);
        sh.gate(format!("(t+2)^2 p q^3 q^(2t) <= mu(F_1)^2/alpha^(2t+1){}", at(p)), chain, Relation::Le, exact.clone());
        sh.gate(format!("q^t > 1/e^2{}", at(p)), pow(&q, ti), Relation::Gt, env.e.lower_pow(2).recip());
        sh.info(format!("mu(F_1)^2/alpha^(2t+1) > 1.02{}", at(p)), exact, Relation::Gt, rat(102, 100));
    }
}

fn hat_empty(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    for p in &env.ps {
        let lhs = int(2) * pow(&alpha_of(p), 2 * ti + 1);
        let rhs = rat(99, 100) * pow(&mu1(env.t, p), 2);
        sh.head(format!("2 alpha^(2t+1) < 0.99 mu(F_1)^2{}", at(p)), lhs, Relation::Lt, rhs);
    }
}

/// Checks that `p`, `1/q`, `pq` and `pq(1-α)` increase over the grid.
fn h_monotone_inputs(env: &Env, sh: &mut Sheet) {
    let g = &env.grid;
    sh.nondecreasing(CheckKind::Gating, "p", g);
    sh.nondecreasing(CheckKind::Gating, "1/q", &g.iter().map(|p| q_of(p).recip()).collect::<Vec<_>>());
    sh.nondecreasing(CheckKind::Gating, "pq", &g.iter().map(|p| p * q_of(p)).collect::<Vec<_>>());
    let v: Vec<Rat> = g.iter().map(|p| p * q_of(p) * (Rat::one() - alpha_of(p))).collect();
    sh.nondecreasing(CheckKind::Gating, "pq(1-alpha)", &v);
}

fn ls_hu(env: &Env, sh: &mut Sheet) {
    let (t, ti) = (env.t, env.ti());
    let p0 = env.hi();
    let q0 = q_of(&p0);
    let bound = dec(8, 2);
    let h10 = h_at(t, 10, &p0);
    sh.head("h(t,10,2/(t+3)) < 0.08", h10.clone(), Relation::Lt, bound.clone());
    sh.gate("max_{10<=s<=30} h(t,s,2/(t+3)) < 0.08", max_of((10..=30).map(|s| h_at(t, s, &p0))), Relation::Lt, bound.clone());
    let phi = |s: i64| int(2) * env.e.hi() * env.tp(2 * s) / (int(s) * env.tp(3));
    let majorant = dec(73, 3) + pow(&phi(10), 10);
    sh.gate("h(t,10,2/(t+3)) <= 0.073 + (2e(t+20)/(10(t+3)))^10", h10, Relation::Le, majorant.clone());
    sh.gate("0.073 + (2e(t+20)/(10(t+3)))^10 < 0.08", majorant, Relation::Lt, bound);
    sh.gate("p/q^(t+1) <= 0.073 at p=2/(t+3)", &p0 / pow(&q0, ti + 1), Relation::Le, dec(73, 3));
    sh.gate("phi(10) < 1", phi(10), Relation::Lt, Rat::one());
    sh.gate("max_{10<=s<30} phi(s+1)/phi(s) < 1", max_of((10..30).map(|s| phi(s + 1) / phi(s))), Relation::Lt, Rat::one());
    let binom_ratio = max_of((10..=30i64).map(|s| {
        binom_rat((ti + 2 * s) as u64, s as u64) / pow(&(env.e.hi() * env.tp(2 * s) / int(s)), s)
    }));
    sh.gate("C(t+2s,s) <= (e(t+2s)/s)^s for 10<=s<=30", binom_ratio, Relation::Le, Rat::one());
    h_monotone_inputs(env, sh);
    let h_grid = max_of(env.grid.iter().map(|p| h_at(t, 10, p)));
    sh.gate("h(t,10,p) <= h(t,10,2/(t+3)) on the p-grid", h_grid, Relation::Le, h_at(t, 10, &p0));
}

/// `ψ_a(s')ψ_b(s') = C(2t+2s',s')(2/(t+3))^{s'}` and `ψ_b` alone.
fn psi(t: i64, sp: i64) -> (Rat, Rat) {
    let psi_a = pow(&int(4), sp) / from_biguint(factorial(sp as u64));
    let psi_b = (0..sp).fold(Rat::one(), |acc, k| acc * rat(2 * (t + sp) - k, 2 * (t + 3)));
    (psi_a, psi_b)
}

fn ls_hv(env: &Env, sh: &mut Sheet) {
    let (t, ti) = (env.t, env.ti());
    let p0 = env.hi();
    let q0 = q_of(&p0);
    let hv: Vec<Rat> = (0..=40).map(|sp| h_at(2 * t, sp, &p0)).collect();
    sh.head("max_{0<=s'<=40} h(2t,s',2/(t+3)) < 11.3", max_of(hv.iter().cloned()), Relation::Lt, dec(113, 1));
    sh.gate("p/q^(2t+1) <= 0.53 at p=2/(t+3)", &p0 / pow(&q0, 2 * ti + 1), Relation::Le, dec(53, 2));
    let small: Vec<(Rat, Rat)> = (0..=3).map(|sp| psi(ti, sp)).collect();
    sh.gate("max_{s'<=3} psi_a psi_b < 10.7", max_of(small.iter().map(|(a, b)| a * b)), Relation::Lt, dec(107, 1));
    sh.gate("max_{s'<=3} psi_b <= 1", max_of(small.iter().map(|(_, b)| b.clone())), Relation::Le, Rat::one());
    let at100 = max_of((4..=25).map(|sp| {
        let (a, b) = psi(100, sp);
        a * b
    }));
    sh.gate("max_{4<=s'<=25} psi_a psi_b(t=100) < 10.77", at100, Relation::Lt, dec(1077, 2));
    let drift = max_of((4..=25).map(|sp| psi(ti, sp).1 - psi(100, sp).1));
    sh.gate("psi_b(t) <= psi_b(100) for 4<=s'<=25", drift, Relation::Le, Rat::default());
    let fact25 = from_biguint(factorial(25));
    sh.gate("(4e)^25/25! < 6", pow(&(int(4) * env.e.hi()), 25) / &fact25, Relation::Lt, int(6));
    sh.info("4e^25/25! < 6", int(4) * env.e.upper_pow(25) / &fact25, Relation::Lt, int(6));
    let tail_b = max_of((26..=40).map(|sp| psi(ti, sp).1 / env.e.lower_pow(sp as u32)));
    sh.gate("psi_b < e^s' for 26<=s'<=40", tail_b, Relation::Lt, Rat::one());
    let tail = max_of((26..=40i64).map(|sp| {
        pow(&(int(4) * env.e.hi()), sp) / from_biguint(factorial(sp as u64))
    }));
    sh.gate("(4e)^s'/s'! < 6 for 26<=s'<=40", tail, Relation::Lt, int(6));
    let slack = max_of((0..=40i64).map(|sp| {
        let (a, b) = psi(ti, sp);
        &hv[sp as usize] - dec(53, 2) - a * b
    }));
    sh.gate("h(2t,s',2/(t+3)) <= 0.53 + psi_a psi_b for s'<=40", slack, Relation::Le, Rat::default());
    sh.gate("0.08 * 11.3 < 0.99", dec(8, 2) * dec(113, 1), Relation::Lt, dec(99, 2));
    h_monotone_inputs(env, sh);
    let h_grid = max_of((0..=10).map(|sp| {
        max_of(env.grid.iter().map(|p| h_at(2 * t, sp, p))) - h_at(2 * t, sp, &p0)
    }));
    sh.gate("h(2t,s',p) <= h(2t,s',2/(t+3)) on the p-grid for s'<=10", h_grid, Relation::Le, Rat::default());
}

/// `[C(m+2k,k)pq/(m+k+1)] / [C(m+2k-2,k-1)/(m+k)]`.
fn diag_kernel(m: i64, k: i64, p: &Rat) -> Rat {
    let up = binom_rat((m + 2 * k) as u64, k as u64) * p * q_of(p) / int(m + k + 1);
    let down = binom_rat((m + 2 * k - 2) as u64, (k - 1) as u64) / int(m + k);
    up / down
}

fn mono_diag_ratios(t: i64, s: i64, sp: i64) -> (Rat, Rat) {
    let n = 2 * (t + s + sp) * (t + s + sp - 1);
    (rat(n, s * (t + sp + 1) * (t + 3)), rat(n, sp * (t + s + 1) * (t + 3)))
}

fn mono_diag(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let (s, sp) = (i64::from(env.s), i64::from(env.sp));
    let (u, v) = (ti - s + sp, ti + s - sp);
    let (r1, r2) = mono_diag_ratios(ti, s, sp);
    let bound = dec(88, 2);
    sh.head("2(t+s+s')(t+s+s'-1)/(s(t+s'+1)(t+3)) < 0.88", r1, Relation::Lt, bound.clone());
    sh.head("2(t+s+s')(t+s+s'-1)/(s'(t+s+1)(t+3)) < 0.88", r2, Relation::Lt, bound);
    let steps = |pick: fn((Rat, Rat)) -> Rat| {
        max_of((ti..ti + 50).map(|x| pick(mono_diag_ratios(x + 1, s, sp)) - pick(mono_diag_ratios(x, s, sp))))
    };
    sh.gate("first ratio nonincreasing in t over [t, t+50]", steps(|r| r.0), Relation::Le, Rat::default());
    sh.gate("second ratio nonincreasing in t over [t, t+50]", steps(|r| r.1), Relation::Le, Rat::default());
    let scale = rat(2 * (ti + 1), (ti + 3) * (ti + 3));
    let d1 = rat((u + 2 * s) * (u + 2 * s - 1), s * (u + s + 1)) * &scale;
    let d2 = rat((v + 2 * sp) * (v + 2 * sp - 1), sp * (v + sp + 1)) * &scale;
    for p in &env.ps {
        sh.gate(format!("f_u kernel ratio <= 2(u+2s)(u+2s-1)(t+1)/(s(u+s+1)(t+3)^2){}", at(p)), diag_kernel(u, s, p), Relation::Le, d1.clone());
        sh.gate(format!("f_v kernel ratio <= 2(v+2s')(v+2s'-1)(t+1)/(s'(v+s'+1)(t+3)^2){}", at(p)), diag_kernel(v, sp, p), Relation::Le, d2.clone());
        let (su, ssp) = (env.s, env.sp);
        sh.info(format!("f(u,s) < f(u,s-1){}", at(p)), f_at(u as u32, su, p), Relation::Lt, f_at(u as u32, su - 1, p));
        sh.info(format!("f(v,s') < f(v,s'-1){}", at(p)), f_at(v as u32, ssp, p), Relation::Lt, f_at(v as u32, ssp - 1, p));
        let g = f_at(u as u32, su, p) * f_at(v as u32, ssp, p);
        let g_prev = f_at(u as u32, su - 1, p) * f_at(v as u32, ssp - 1, p);
        sh.info(format!("g(s,s') < g(s-1,s'-1){}", at(p)), g, Relation::Lt, g_prev);
    }
}

/// Shared body of the `s' = 1` and `s' = 0` chains; `c` is 1 or 0.
fn mono_s(env: &Env, sh: &mut Sheet, c: i64) {
    let (t, ti) = (env.t, env.ti());
    let top = 12i64.min(ti - 1 - (1 - c));
    let h = |s: i64, p: &Rat| binom_rat((ti + s + c) as u64, s as u64) * int(ti - s + 1 + c) * pow(p, s);
    let chain = |s: i64| rat(2 * (ti + s + 1 + c) * (ti - s + c), (s + 1) * (ti - s + 1 + c) * (ti + 3));
    let weak = |s: i64| rat(2 * (ti + s + 1 + c), (s + 1) * (ti + 3));
    for p in &env.ps {
        let q = q_of(p);
        let ratios: Vec<Rat> = (1..=top).map(|s| h(s + 1, p) / h(s, p)).collect();
        sh.head(format!("max_s h(s+1)/h(s) < 1{}", at(p)), max_of(ratios.iter().cloned()), Relation::Lt, Rat::one());
        let gap = max_of((1..=top).map(|s| &ratios[(s - 1) as usize] - chain(s)));
        sh.gate(format!("h(s+1)/h(s) <= 2(t+s+1+c)(t-s+c)/((s+1)(t-s+1+c)(t+3)){}", at(p)), gap, Relation::Le, Rat::default());
        if c == 1 {
            let qs = max_of((1..=top).map(|s| &q * int(ti + s + 1) / int(ti + s)));
            sh.gate(format!("max_s q(t+s+1)/(t+s) < 1{}", at(p)), qs, Relation::Lt, Rat::one());
        }
        for s in 2..=top as u32 {
            // g(s+1,c) vs g(s,c) with u = t - s + c, v = t + s - c.
            let g = |s: u32| f_at(t + c as u32 - s, s, p) * f_at(t + s - c as u32, c as u32, p);
            sh.info(format!("g({},{c}) < g({s},{c}){}", s + 1, at(p)), g(s + 1), Relation::Lt, g(s));
        }
    }
    sh.gate("max_s 2(t+s+1+c)(t-s+c)/((s+1)(t-s+1+c)(t+3)) < 1", max_of((1..=top).map(chain)), Relation::Lt, Rat::one());
    sh.gate("max_s 2(t+s+1+c)/((s+1)(t+3)) <= 1", max_of((1..=top).map(weak)), Relation::Le, Rat::one());
}

fn mono_s1(env: &Env, sh: &mut Sheet) {
    mono_s(env, sh, 1)
}

fn mono_s0(env: &Env, sh: &mut Sheet) {
    mono_s(env, sh, 0)
}

/// First displayed bound of each `g(s,s')/μ²` chain, evaluated with `e = hi`.
fn g_first_line(id: ClaimId, t: i64, p: &Rat, e: &EEnclosure) -> Rat {
    let q = q_of(p);
    let (e2, e4) = (e.upper_pow(2), e.upper_pow(4));
    let ti = |k: i64| int(t + k);
    let sq = |r: Rat| &r * &r;
    match id {
        ClaimId::G33 => sq(&e2 / (sq(q.clone()) * ti(2))
            + sq(p.clone()) * sq(q.clone()) * ti(6) * ti(5) * ti(1) / (int(6) * ti(2))),
        ClaimId::G32 => {
            &e4 / (pow(&q, 4) * sq(ti(2)))
                + &e2 * p * ti(5) / (int(2) * ti(2))
                + &e2 * sq(p.clone()) * ti(5) * ti(4) * ti(0) / (int(6) * &q * sq(ti(2)))
                + pow(p, 3) * pow(&q, 3) * sq(ti(5)) * ti(4) * ti(0) / (int(12) * ti(2))
        }
        ClaimId::G31 => {
            &e4 / (pow(&q, 6) * sq(ti(2)))
                + &e2 * ti(3) / (sq(ti(2)) * sq(q.clone()))
                + &e2 * sq(p.clone()) * ti(4) * ti(3) * ti(-1) / (int(6) * sq(q.clone()) * sq(ti(2)))
                + sq(p.clone()) * sq(q.clone()) * ti(4) * sq(ti(3)) * ti(-1) / (int(6) * sq(ti(2)))
        }
        ClaimId::G20 => {
            &e4 / (pow(&q, 6) * sq(ti(2)))
                + &e2 / (sq(ti(2)) * p * sq(q.clone()))
                + &e2 * p * ti(-1) / (int(2) * pow(&q, 3) * ti(2))
                + ti(-1) * &q / (int(2) * ti(2))
        }
        _ => unreachable!("not a g case"),
    }
}

/// Final `p`-free bound, corrected where the displayed one does not follow
/// from the first line.
fn g_final(id: ClaimId, t: i64, e: &EEnclosure) -> Rat {
    let (e2, e4) = (e.upper_pow(2), e.upper_pow(4));
    let ti = |k: i64| int(t + k);
    let sq = |r: Rat| &r * &r;
    match id {
        ClaimId::G33 => sq(int(2) * &e2 / ti(2) + int(4) * ti(6) * ti(5) * ti(1) / (int(6) * ti(2) * sq(ti(3)))),
        ClaimId::G32 => {
            int(2) * &e4 / sq(ti(2))
                + &e2 * ti(5) / (ti(2) * ti(3))
                + int(4) * &e2 * ti(5) * ti(4) * ti(0) / (int(6) * sq(ti(2)) * ti(3) * ti(1))
                + int(2) * sq(ti(5)) * ti(4) * ti(0) / (int(3) * ti(2) * pow(&ti(3), 3))
        }
        ClaimId::G31 => {
            int(2) * &e4 / sq(ti(2))
                + int(2) * &e2 * ti(3) / sq(ti(2))
                + int(8) * &e2 * ti(4) * ti(3) * ti(-1) / (int(6) * sq(ti(2)) * sq(ti(3)))
                + int(4) * ti(4) * ti(-1) / (int(6) * sq(ti(2)))
        }
        ClaimId::G20 => {
            int(2) * &e4 / sq(ti(2))
                + &e2 * pow(&ti(1), 3) / (sq(ti(2)) * sq(ti(0)))
                + int(2) * &e2 * ti(-1) / (ti(3) * ti(2))
                + ti(-1) * ti(0) / (int(2) * ti(2) * ti(1))
        }
        _ => unreachable!("not a g case"),
    }
}

/// The displayed final bound where it differs from [`g_final`].
fn g_displayed_final(id: ClaimId, t: i64, e: &EEnclosure) -> Option<Rat> {
    let (e2, e4) = (e.upper_pow(2), e.upper_pow(4));
    let ti = |k: i64| int(t + k);
    let sq = |r: Rat| &r * &r;
    match id {
        ClaimId::G31 => Some(
            int(2) * &e4 / sq(ti(2))
                + int(2) * &e2 * ti(3) / sq(ti(2))
                + int(8) * &e2 * ti(4) * ti(3) * ti(-1) / (int(6) * sq(ti(2)) * sq(ti(3)))
                + int(4) * ti(4) * sq(ti(3)) / (int(6) * sq(ti(2)) * sq(ti(3))),
        ),
        ClaimId::G20 => Some(
            int(2) * &e4 / sq(ti(2))
                + &e2 * pow(&ti(1), 3) / (sq(ti(2)) * sq(ti(0)))
                + int(2) * &e2 * ti(-1) / (ti(3) * ti(2))
                + ti(-1) * ti(1) / (int(2) * ti(2) * ti(3)),
        ),
        _ => None,
    }
}

fn g_case(id: ClaimId, env: &Env, sh: &mut Sheet) {
    let (s, sp) = match id {
        ClaimId::G33 => (3, 3),
        ClaimId::G32 => (3, 2),
        ClaimId::G31 => (3, 1),
        _ => (2, 0),
    };
    let (t, ti) = (env.t, env.ti());
    let (u, v) = (t + sp - s, t + s - sp);
    let bound = dec(99, 2);
    let fin = g_final(id, ti, env.e);
    for p in &env.ps {
        let q = q_of(p);
        let g = f_at(u, s, p) * f_at(v, sp, p);
        let ratio = &g / (int((ti + 2) * (ti + 2)) * pow(p, 2 * ti + 2) * &q * &q);
        let first = g_first_line(id, ti, p, env.e);
        sh.head(format!("g({s},{sp})/((t+2)^2 p^(2t+2) q^2) < 0.99{}", at(p)), ratio.clone(), Relation::Lt, bound.clone());
        sh.gate(format!("ratio <= first displayed bound{}", at(p)), ratio, Relation::Le, first.clone());
        sh.gate(format!("first displayed bound <= final bound{}", at(p)), first, Relation::Le, fin.clone());
        sh.gate(format!("q^(-t) < e^2{}", at(p)), pow(&q, -ti), Relation::Lt, env.e.lower_pow(2));
        sh.gate(format!("q^(-6) < 2{}", at(p)), pow(&q, -6), Relation::Lt, int(2));
        sh.info(format!("g({s},{sp})/mu(F_1)^2 < 0.99{}", at(p)), g / pow(&mu1(t, p), 2), Relation::Lt, bound.clone());
    }
    sh.info("final bound < 0.99", fin, Relation::Lt, bound.clone());
    if let Some(d) = g_displayed_final(id, ti, env.e) {
        sh.info("displayed final bound < 0.99", d, Relation::Lt, bound);
    }
}

fn l21_c1(env: &Env, sh: &mut Sheet) {
    let t = env.t;
    let xyz = |p: &Rat| {
        let c = coeffs_21_at(t, p);
        let a2 = alpha_of(p) * alpha_of(p);
        (&c.a1 + int(5) * &a2, &c.b1 + rat(9, 2) * &a2, c.z)
    };
    let p0 = env.hi();
    let (x, y, z) = xyz(&p0);
    sh.head("xy - z^2 < 0 at p=2/(t+3)", &x * &y - &z * &z, Relation::Lt, Rat::default());
    let vals: Vec<(Rat, Rat, Rat)> = env.grid.iter().map(xyz).collect();
    sh.nondecreasing(CheckKind::Gating, "x = a1 + 5 alpha^2", &vals.iter().map(|v| v.0.clone()).collect::<Vec<_>>());
    sh.nonincreasing(CheckKind::Gating, "z", &vals.iter().map(|v| v.2.clone()).collect::<Vec<_>>());
    sh.nondecreasing(CheckKind::Gating, "y/z", &vals.iter().map(|v| &v.1 / &v.2).collect::<Vec<_>>());
    let cs: Vec<_> = env.grid.iter().map(|p| coeffs_21_at(t, p)).collect();
    sh.gate("max a2 < 5 on the p-grid", max_of(cs.iter().map(|c| c.a2.clone())), Relation::Lt, int(5));
    sh.gate("max b2 < 4.5 on the p-grid", max_of(cs.iter().map(|c| c.b2.clone())), Relation::Lt, rat(9, 2));
    let worst = max_of(vals.iter().map(|(x, y, z)| x * y - z * z));
    sh.info("max xy - z^2 < 0 on the p-grid", worst, Relation::Lt, Rat::default());
}

/// Checks `pq` and `pq^2` increase over the grid.
fn pq_monotone(env: &Env, sh: &mut Sheet) {
    let g = &env.grid;
    sh.nondecreasing(CheckKind::Gating, "pq", &g.iter().map(|p| p * q_of(p)).collect::<Vec<_>>());
    sh.nondecreasing(CheckKind::Gating, "pq^2", &g.iter().map(|p| p * q_of(p) * q_of(p)).collect::<Vec<_>>());
}

fn l21_c2(env: &Env, sh: &mut Sheet) {
    let (t, tr) = (env.t, env.tr());
    let (p0, pl) = (env.hi(), env.lo());
    let z0 = z_of(t, &p0);
    sh.head("18(z+5) < z^2 at p=2/(t+3)", int(18) * (&z0 + int(5)), Relation::Lt, &z0 * &z0);
    let zl = z_of(t, &pl);
    sh.gate("18(z+5) < z^2 at p=1/(t+1)", int(18) * (&zl + int(5)), Relation::Lt, &zl * &zl);
    let q0 = q_of(&p0);
    let lead = Rat::one() + &tr * &p0 * &q0 + int(5) * &tr * &p0 * &q0 * &q0 + int(5);
    sh.gate("1 + tpq + 5tpq^2 + 5 < 18 at p=2/(t+3)", lead, Relation::Lt, int(18));
    pq_monotone(env, sh);
    let ti = env.ti();
    let a3 = min_of(env.grid.iter().map(|p| {
        let q = q_of(p);
        coeffs_21_at(t, p).a3 - p * &q * &q * int(ti * ti - 7 * ti) / int(2)
    }));
    sh.gate("min a3 - pq^2(t^2-7t)/2 > 0 on the p-grid", a3, Relation::Gt, Rat::default());
    // b1 = z + q, so b1 + 4.5 < z + 5.5 (and not z + 5, since q > 1/2).
    let gap = max_of(env.grid.iter().map(|p| (coeffs_21_at(t, p).b1 - z_of(t, p) - q_of(p)).abs()));
    sh.gate("b1 = z + q on the p-grid", gap, Relation::Eq, Rat::default());
    sh.gate("18(z+5.5) < z^2 at p=2/(t+3)", int(18) * (&z0 + rat(11, 2)), Relation::Lt, &z0 * &z0);
    let b = max_of(env.grid.iter().map(|p| coeffs_21_at(t, p).b1 + rat(9, 2) - z_of(t, p) - int(5)));
    sh.info("max b1 + 4.5 - (z + 5) < 0 on the p-grid", b, Relation::Lt, Rat::default());
    sh.nonincreasing(CheckKind::Gating, "z", &env.grid.iter().map(|p| z_of(t, p)).collect::<Vec<_>>());
}

fn l21_c3(env: &Env, sh: &mut Sheet) {
    let (t, tr, ti) = (env.t, env.tr(), env.ti());
    let p0 = env.hi();
    let q0 = q_of(&p0);
    let z0 = z_of(t, &p0);
    sh.head("14.5(t+8) < z^2 at p=2/(t+3)", rat(29, 2) * env.tp(8), Relation::Lt, &z0 * &z0);
    let lead = Rat::one() + &tr * &p0 * &q0 + int(ti * (ti + 3)) * &p0 * &q0 * &q0 / int(2) + int(5);
    sh.gate("1 + tpq + t(t+3)pq^2/2 + 5 < t+8 at p=2/(t+3)", lead, Relation::Lt, env.tp(8));
    pq_monotone(env, sh);
    let cs: Vec<_> = env.grid.iter().map(|p| coeffs_21_at(t, p)).collect();
    sh.gate("max a2 < 5 on the p-grid", max_of(cs.iter().map(|c| c.a2.clone())), Relation::Lt, int(5));
    let b = max_of(cs.iter().map(|c| &c.b1 + rat(9, 2) - &c.b3));
    sh.gate("max b1 + 4.5 - b3 < 14.5 on the p-grid", b, Relation::Lt, rat(29, 2));
    let b3 = min_of(cs.iter().zip(&env.grid).map(|(c, p)| &c.b3 - env.tp(-7) * q_of(p)));
    sh.gate("min b3 - (t-7)q > 0 on the p-grid", b3, Relation::Gt, Rat::default());
    sh.nonincreasing(CheckKind::Gating, "z", &env.grid.iter().map(|p| z_of(t, p)).collect::<Vec<_>>());
}

/// Coefficient bounds shared by the `(1,0)` cases.
fn l10_coeff_checks(env: &Env, sh: &mut Sheet, kind: CheckKind, with_b3: bool) {
    let t = env.t;
    let cs: Vec<_> = env.grid.iter().map(|p| coeffs_10_at(t, p)).collect();
    let cap = dec(74, 1);
    sh.push(kind, "max a2 = q^(-t) < 7.4 on the p-grid", max_of(cs.iter().map(|c| c.a2.clone())), Relation::Lt, cap.clone());
    sh.push(kind, "max b2 = q^(-(t+2)) < 7.4 on the p-grid", max_of(cs.iter().map(|c| c.b2.clone())), Relation::Lt, cap);
    let a3 = min_of(cs.iter().zip(&env.grid).map(|(c, p)| &c.a3 - env.tp(-7) * q_of(p)));
    sh.push(kind, "min a3 - (t-7)q > 0 on the p-grid", a3, Relation::Gt, Rat::default());
    if with_b3 {
        let b3 = min_of(cs.iter().zip(&env.grid).map(|(c, p)| &c.b3 - rat(3, 4) / p));
        sh.push(kind, "min b3 - 0.75/p > 0 on the p-grid", b3, Relation::Gt, Rat::default());
    }
}

fn l10_c1(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let c74 = dec(74, 1);
    let (p0, pl) = (env.hi(), env.lo());
    sh.head("1 + 7.4 alpha < 1.665 q at p=2/(t+3)", Rat::one() + &c74 * alpha_of(&p0), Relation::Lt, dec(1665, 3) * q_of(&p0));
    sh.nondecreasing(CheckKind::Gating, "alpha", &env.grid.iter().map(alpha_of).collect::<Vec<_>>());
    sh.nonincreasing(CheckKind::Gating, "q", &env.grid.iter().map(q_of).collect::<Vec<_>>());
    let bq = |p: &Rat| (p.recip() + &c74 * alpha_of(p)) / q_of(p);
    sh.gate("(1/p + 7.4 alpha)/q < t + 2.335 at p=1/(t+1)", bq(&pl), Relation::Lt, env.tr() + dec(2335, 3));
    sh.nonincreasing(CheckKind::Gating, "(1/p + 7.4 alpha)/q", &env.grid.iter().map(bq).collect::<Vec<_>>());
    let prod = max_of(env.grid.iter().map(|p| {
        let q = q_of(p);
        let a = Rat::one() + int(ti) * &q + &c74 * alpha_of(p);
        let b = p.recip() + &c74 * alpha_of(p);
        a * b - pow(&(int(ti + 2) * &q), 2)
    }));
    sh.gate("max ab - ((t+2)q)^2 < 0 on the p-grid", prod, Relation::Lt, Rat::default());
    l10_coeff_checks(env, sh, CheckKind::Gating, true);
}

fn l10_c2(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let display = rat(7 * (ti + 1) * (5 * ti + 42) * (11 * ti + 6), 25 * ti * ti * (ti + 2) * (ti + 2));
    sh.head("7(t+1)(5t+42)(11t+6)/(25t^2(t+2)^2) < 1", display.clone(), Relation::Lt, Rat::one());
    let c74 = dec(74, 1);
    let c = |p: &Rat| {
        let q = q_of(p);
        let a = Rat::one() + int(7) * &q + &c74;
        let b = p.recip() + &c74;
        a * b / pow(&(int(ti + 2) * &q), 2)
    };
    sh.gate("ab/((t+2)q)^2 at p=1/(t+1) equals the display", c(&env.lo()), Relation::Eq, display);
    sh.nonincreasing(CheckKind::Gating, "ab/((t+2)q)^2", &env.grid.iter().map(c).collect::<Vec<_>>());
    l10_coeff_checks(env, sh, CheckKind::Gating, false);
}

fn l10_c3(env: &Env, sh: &mut Sheet) {
    let ti = env.ti();
    let c74 = dec(74, 1);
    let a_cap = dec(84, 1) * rat(ti + 3, ti + 1) + env.tr();
    let b_cap = rat((ti + 1) * (5 * ti + 153), 20 * ti);
    sh.head("(8.4(t+3)/(t+1) + t)(t+1)(5t+153)/(20t) < (t+2)^2", &a_cap * &b_cap, Relation::Lt, int((ti + 2) * (ti + 2)));
    let aq = max_of(env.grid.iter().map(|p| {
        let q = q_of(p);
        (Rat::one() + int(ti) * &q + &c74) / q
    }));
    sh.gate("max a/q <= 8.4(t+3)/(t+1) + t on the p-grid", aq, Relation::Le, a_cap);
    let bq = |p: &Rat| (rat(1, 4) / p + &c74) / q_of(p);
    sh.nonincreasing(CheckKind::Gating, "b/q", &env.grid.iter().map(bq).collect::<Vec<_>>());
    sh.gate("b/q at p=1/(t+1) equals (t+1)(5t+153)/(20t)", bq(&env.lo()), Relation::Eq, b_cap);
    l10_coeff_checks(env, sh, CheckKind::Info, true);
}

fn ext_cmp(env: &Env, sh: &mut Sheet) {
    let (ti, s) = (env.ti(), i64::from(env.s));
    for p in &env.ps {
        let q = q_of(p);
        let val = binom_rat((ti + s - 1) as u64, s as u64) * pow(p, s - 1) * pow(&q, ti + s + 2) * (&q - p);
        sh.head(format!("C(t+s-1,s) p^(s-1) q^(t+s+2)(q-p) > 1.02{}", at(p)), val, Relation::Gt, rat(102, 100));
        sh.gate(format!("q^2/p > 1{}", at(p)), &q * &q / p, Relation::Gt, Rat::one());
    }
}

fn ext_case_ii(env: &Env, sh: &mut Sheet) {
    let (tr, ti) = (env.tr(), env.ti());
    let e2 = env.e.upper_pow(2);
    let display = |p: &Rat, tail: &Rat| {
        let q = q_of(p);
        let left = &tr * p * pow(&q, 3) + int(2) * tail;
        let right = Rat::one()
            + env.tp(1) * p * &q
            + env.tp(1) * env.tp(4) * p * &q * &q / int(2)
            + tail;
        left * right / (int((ti + 2) * (ti + 2)) * &q * &q)
    };
    let first = |p: &Rat| display(p, &pow(&q_of(p), -(ti + 1)));
    let second = |p: &Rat| display(p, &(&e2 / q_of(p)));
    let p0 = env.hi();
    sh.head("second display <= 0.99 at p=2/(t+3)", second(&p0), Relation::Le, dec(99, 2));
    sh.gate("first display <= second display at p=2/(t+3)", first(&p0), Relation::Le, second(&p0));
    let g = &env.grid;
    for (label, k) in [("pq", 1), ("pq^2", 2), ("pq^3", 3)] {
        sh.nondecreasing(CheckKind::Gating, label, &g.iter().map(|p| p * pow(&q_of(p), k)).collect::<Vec<_>>());
    }
    sh.nondecreasing(CheckKind::Gating, "1/q", &g.iter().map(|p| q_of(p).recip()).collect::<Vec<_>>());
    sh.info("max first display <= 0.99 on the p-grid", max_of(g.iter().map(first)), Relation::Le, dec(99, 2));
}

fn a3_mono(env: &Env, sh: &mut Sheet) {
    let (t, ti) = (env.t, env.ti());
    let floor = rat(9 * (ti + 2) * (ti + 1), ti * ti) - Rat::one();
    sh.head("9(t+2)(t+1)/t^2 - 1 > 8", floor.clone(), Relation::Gt, int(8));
    let nine_half = rat(9, 2);
    for p in &env.ps {
        let q = q_of(p);
        let a = alpha_of(p);
        let z = z_of(t, p);
        let r = &nine_half * &a * &a + &q;
        let r_prime = int(9) * &a / (&q * &q) - Rat::one();
        let z_prime = -env.tp(1);
        let lhs = &z * &r_prime - &r * &z_prime;
        let expanded = &nine_half * env.tp(1) * &a * &a + int(9) * env.tp(2) * p / (&q * &q)
            + int(9) * p * p / pow(&q, 3)
            - Rat::one();
        sh.gate(format!("zr' - rz' expansion{}", at(p)), lhs, Relation::Eq, expanded.clone());
        let lead = int(9) * env.tp(2) * p / (&q * &q) - Rat::one();
        sh.gate(format!("zr' - rz' > 9(t+2)p/q^2 - 1{}", at(p)), expanded, Relation::Gt, lead.clone());
        sh.gate(format!("9(t+2)p/q^2 - 1 >= 9(t+2)(t+1)/t^2 - 1{}", at(p)), lead, Relation::Ge, floor.clone());
    }
    sh.nondecreasing(CheckKind::Gating, "p/q^2", &env.grid.iter().map(|p| p / (q_of(p) * q_of(p))).collect::<Vec<_>>());
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: ClaimId, pt: ParamPoint) -> Vec<Check> {
        check_domain(id, &pt).unwrap();
        evaluate(id, &pt, &PPolicy::Endpoints, &EEnclosure::default())
    }

    fn all_gating_hold(checks: &[Check]) -> bool {
        checks.iter().filter(|c| c.gating()).all(|c| c.holds)
    }

    fn failing(checks: &[Check]) -> Vec<String> {
        checks.iter().filter(|c| c.gating() && !c.holds).map(|c| c.label.clone()).collect()
    }

    #[test]
    fn pair_count() {
        assert_eq!(mono_diag_pairs().len(), 35);
    }

    #[test]
    fn literal_qt_link_fails_for_every_t() {
        // (1 - 2/m)^m < e^-2 for every m > 2, so the direct link is never
        // available; the check is kept informational.
        let e = EEnclosure::default();
        for t in [1i64, 10, 200, 5000] {
            let lhs = pow(&rat(t + 1, t + 3), t + 3);
            assert!(lhs < e.upper_pow(2).recip());
        }
    }

    #[test]
    fn thresholds_pass() {
        use ClaimId::*;
        for (id, t) in [
            (QtSandwich, 1),
            (HatEmpty, 110),
            (LsHu, 500),
            (LsHv, 200),
            (MonoS1, 10),
            (MonoS0, 10),
            (G33, 52),
            (G32, 51),
            (G31, 28),
            (G20, 42),
            (L21C1, 42),
            (L21C2, 23),
            (L21C3, 23),
            (L10C1, 26),
            (L10C2, 20),
            (L10C3, 16),
            (ExtCaseII, 180),
            (A3Mono, 42),
        ] {
            let c = run(id, ParamPoint::at_t(t));
            assert!(all_gating_hold(&c), "{id} t={t}: {:?}", failing(&c));
        }
        for (s, t) in [(0, 17), (1, 12), (2, 22)] {
            assert!(all_gating_hold(&run(ExtCmp, ParamPoint::at_t(t).with_s(s))));
        }
    }

    #[test]
    fn thresholds_are_sharp_where_expected() {
        use ClaimId::*;
        for (id, t) in [(L10C1, 25), (L10C3, 15)] {
            assert!(!all_gating_hold(&run(id, ParamPoint::at_t(t))), "{id} t={t}");
        }
        assert!(!all_gating_hold(&run(ExtCmp, ParamPoint::at_t(16).with_s(0))));
    }

    #[test]
    fn uv_odd_majorant_is_short_of_its_constant() {
        let c = run(ClaimId::UvOdd, ParamPoint::at_t(26));
        let head = c.iter().find(|c| c.kind == CheckKind::Headline).unwrap();
        assert!(!head.holds);
        assert!(head.lhs > rat(47, 100) && head.lhs < rat(48, 100));
        // The quantity it bounds clears 1.02 comfortably.
        assert!(c.iter().filter(|c| c.kind == CheckKind::Info).all(|c| c.holds));
    }

    #[test]
    fn mono_diag_second_ratio_examples() {
        let (r1, r2) = mono_diag_ratios(10, 3, 3);
        assert_eq!(r1, rat(480, 546));
        assert_eq!(r1, r2);
        let (_, r2) = mono_diag_ratios(10, 3, 2);
        assert_eq!(r2, rat(420, 364));
    }

    #[test]
    fn g31_displayed_first_line_variant_is_not_an_upper_bound() {
        // With q^4 and without (t-1) in the last term the first line falls
        // below the exact ratio.
        let (t, p) = (28i64, p_high(28));
        let q = q_of(&p);
        let e = EEnclosure::default();
        let ti = |k: i64| int(t + k);
        let literal = e.upper_pow(4) / (pow(&q, 6) * ti(2) * ti(2))
            + e.upper_pow(2) * ti(3) / (ti(2) * ti(2) * &q * &q)
            + e.upper_pow(2) * &p * &p * ti(4) * ti(3) * ti(-1) / (int(6) * &q * &q * ti(2) * ti(2))
            + &p * &p * pow(&q, 4) * ti(4) * ti(3) * ti(3) / (int(6) * ti(2) * ti(2));
        let g = f_at(26, 3, &p) * f_at(30, 1, &p);
        let ratio = g / (ti(2) * ti(2) * pow(&p, 2 * t + 2) * &q * &q);
        assert!(ratio > literal);
        assert!(ratio <= g_first_line(ClaimId::G31, t, &p, &e));
    }
}
