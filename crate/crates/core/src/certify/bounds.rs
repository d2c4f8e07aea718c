//! Scalar bound functions over an admissible `(t, p, s, s')` point.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{binom_rat, factorial, from_biguint, int, pow, rat, Rat};

/// Series terms used to validate an enclosure of `e`.
const SERIES_TERMS: u64 = 24;

/// Rational bracket `lo < e < hi` with width at most `10^-10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EEnclosure {
    lo: Rat,
    hi: Rat,
}

impl Default for EEnclosure {
    fn default() -> Self {
        EEnclosure {
            lo: Rat::new(27_182_818_284u64.into(), 10_000_000_000u64.into()),
            hi: Rat::new(27_182_818_285u64.into(), 10_000_000_000u64.into()),
        }
    }
}

impl EEnclosure {
    /// Accepts the bracket only if it provably contains `e`: the partial sum
    /// `S_N` of `Σ 1/k!` and the tail bound `S_N + 1/(N!·N)` must lie inside it.
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Domain("enclosure bounds out of order".into()));
        }
        if &hi - &lo > rat(1, 10_000_000_000) {
            return Err(Error::Domain("enclosure wider than 1e-10".into()));
        }
        let (below, above) = e_series_bracket(SERIES_TERMS);
        if lo >= below || hi <= above {
            return Err(Error::Domain("enclosure does not provably contain e".into()));
        }
        Ok(EEnclosure { lo, hi })
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// `hi^k`, an upper bound for `e^k`.
    pub fn upper_pow(&self, k: u32) -> Rat {
        pow(&self.hi, i64::from(k))
    }

    /// `lo^k`, a lower bound for `e^k`.
    pub fn lower_pow(&self, k: u32) -> Rat {
        pow(&self.lo, i64::from(k))
    }
}

/// `(S_N, S_N + 1/(N!·N))` with `S_N = Σ_{k≤N} 1/k!`; brackets `e` for `N ≥ 1`.
pub fn e_series_bracket(terms: u64) -> (Rat, Rat) {
    let mut sum = Rat::zero();
    for k in 0..=terms {
        sum += from_biguint(factorial(k)).recip();
    }
    let tail = (from_biguint(factorial(terms)) * int(terms as i64)).recip();
    let upper = &sum + tail;
    (sum, upper)
}

/// An admissible point: `t ≥ 1`, `1/(t+1) ≤ p ≤ 2/(t+3)`, and offsets with
/// `u = t - s + s' ≥ 1`, `v = t + s - s' ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundContext {
    t: u32,
    s: u32,
    s_prime: u32,
    p: Rat,
    q: Rat,
    alpha: Rat,
}

impl BoundContext {
    pub fn new(t: u32, s: u32, s_prime: u32, p: Rat) -> Result<Self> {
        if t == 0 {
            return Err(Error::Domain("t must be at least 1".into()));
        }
        check_p_window(t, &p)?;
        let u = i64::from(t) - i64::from(s) + i64::from(s_prime);
        let v = i64::from(t) + i64::from(s) - i64::from(s_prime);
        if u < 1 || v < 1 {
            return Err(Error::Domain(format!("u = {u}, v = {v} must both be at least 1")));
        }
        let q = Rat::one() - &p;
        let alpha = &p / &q;
        Ok(BoundContext { t, s, s_prime, p, q, alpha })
    }

    /// Point with `s = s' = 0`.
    pub fn at(t: u32, p: Rat) -> Result<Self> {
        BoundContext::new(t, 0, 0, p)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn s_prime(&self) -> u32 {
        self.s_prime
    }

    pub fn u(&self) -> u32 {
        self.t + self.s_prime - self.s
    }

    pub fn v(&self) -> u32 {
        self.t + self.s - self.s_prime
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    /// `z = t + 2 - (t+1)p`, so that `μ_p(F_1^t) = z·p^{t+1}`.
    pub fn z(&self) -> Rat {
        z_of(self.t, &self.p)
    }
}

pub(crate) fn z_of(t: u32, p: &Rat) -> Rat {
    int(i64::from(t) + 2) - int(i64::from(t) + 1) * p
}

/// Lower end `1/(t+1)` of the admissible window.
pub fn p_low(t: u32) -> Rat {
    rat(1, i64::from(t) + 1)
}

/// Upper end `2/(t+3)` of the admissible window.
pub fn p_high(t: u32) -> Rat {
    rat(2, i64::from(t) + 3)
}

pub fn check_p_window(t: u32, p: &Rat) -> Result<()> {
    if p < &p_low(t) || p > &p_high(t) {
        return Err(Error::Probability(format!(
            "{p} outside [1/{}, 2/{}]",
            t + 1,
            t + 3
        )));
    }
    Ok(())
}

pub(crate) fn f_at(ell: u32, i: u32, p: &Rat) -> Rat {
    let q = Rat::one() - p;
    let alpha = p / &q;
    let (l, i) = (i64::from(ell), i64::from(i));
    let coef = binom_rat((l + 2 * i) as u64, i as u64) * rat(l + 1, l + i + 1);
    pow(&alpha, l + 1) + coef * pow(p, l + i) * pow(&q, i) * (Rat::one() - &alpha)
}

/// Expanded form `p/q^{ℓ+1} + C(ℓ+2i,i)(ℓ+1)/(ℓ+i+1)·(pq)^i(1-α)`.
pub(crate) fn h_at(ell: u32, i: u32, p: &Rat) -> Rat {
    let q = Rat::one() - p;
    let alpha = p / &q;
    let (l, i) = (i64::from(ell), i64::from(i));
    let coef = binom_rat((l + 2 * i) as u64, i as u64) * rat(l + 1, l + i + 1);
    p / pow(&q, l + 1) + coef * pow(&(p * &q), i) * (Rat::one() - &alpha)
}

/// `f(ℓ,i,p) = α^{ℓ+1} + C(ℓ+2i,i)(ℓ+1)/(ℓ+i+1)·p^{ℓ+i}q^i(1-α)`.
pub fn f_bound(ell: u32, i: u32, ctx: &BoundContext) -> Rat {
    f_at(ell, i, ctx.p())
}

/// `h(ℓ,i,p) = p^{-ℓ}f(ℓ,i,p)`.
pub fn h_bound(ell: u32, i: u32, ctx: &BoundContext) -> Rat {
    h_at(ell, i, ctx.p())
}

/// `g(s,s') = f(u,s,p)·f(v,s',p)`.
pub fn g_bound(ctx: &BoundContext) -> Rat {
    f_bound(ctx.u(), ctx.s(), ctx) * f_bound(ctx.v(), ctx.s_prime(), ctx)
}

/// Coefficients of the `(s,s') = (2,1)` case analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeffs21 {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
    pub z: Rat,
}

/// Coefficients of the `(s,s') = (1,0)` case analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeffs10 {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
}

pub fn coeffs_21(ctx: &BoundContext) -> Result<Coeffs21> {
    if ctx.t() < 18 {
        return Err(Error::Domain(format!("coefficients need t >= 18, got {}", ctx.t())));
    }
    Ok(coeffs_21_at(ctx.t(), ctx.p()))
}

pub fn coeffs_10(ctx: &BoundContext) -> Result<Coeffs10> {
    if ctx.t() < 20 {
        return Err(Error::Domain(format!("coefficients need t >= 20, got {}", ctx.t())));
    }
    Ok(coeffs_10_at(ctx.t(), ctx.p()))
}

pub(crate) fn coeffs_21_at(t: u32, p: &Rat) -> Coeffs21 {
    let one = Rat::one();
    let q = &one - p;
    let alpha = p / &q;
    let ti = int(i64::from(t));
    let pq = p * &q;
    let tt3 = int(i64::from(t) * (i64::from(t) + 3));
    let half = rat(1, 2);
    let a1 = &one + &ti * &pq + &tt3 * &pq * &q * &half;
    let a2 = pow(&q, -i64::from(t)) - &one - &ti * &pq - &tt3 * p * p * &q * &half;
    let a3 = int((i64::from(t) + 2) * (i64::from(t) - 1)) * p * pow(&q, 5) * (&one - &alpha) * &half;
    let t2 = int(i64::from(t) + 2);
    let b1 = &one + &t2 * &q;
    let b2 = pow(&q, -(i64::from(t) + 2)) - &one - &t2 * p;
    let b3 = int(i64::from(t) + 1) * pow(&q, 4) * (&one - &alpha);
    Coeffs21 { a1, a2, a3, b1, b2, b3, z: z_of(t, p) }
}

pub(crate) fn coeffs_10_at(t: u32, p: &Rat) -> Coeffs10 {
    let one = Rat::one();
    let q = &one - p;
    let alpha = p / &q;
    let ti = int(i64::from(t));
    Coeffs10 {
        a1: &one + &ti * &q,
        a2: pow(&q, -i64::from(t)),
        a3: int(i64::from(t) - 1) * pow(&q, 3) * (&one - &alpha),
        b1: p.recip(),
        b2: pow(&q, -(i64::from(t) + 2)),
        b3: &q * &q / p * (&one - &alpha),
    }
}
