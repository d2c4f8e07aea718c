//! Exact p-biased weights and the walk probabilities built on them.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::mask::check_ground;
use crate::rat::{binom, binom_rat, check_open_unit, from_biguint, int, pow, Rat};
use crate::walk::WalkClass;

/// A ground size together with a probability `0 < p < 1`, with the layer
/// weights `p^k q^(n-k)` precomputed.
#[derive(Clone, Debug)]
pub struct WeightQuery {
    n: u32,
    p: Rat,
    layers: Vec<Rat>,
}

impl WeightQuery {
    pub fn new(n: u32, p: &Rat) -> Result<Self> {
        check_ground(n)?;
        check_open_unit(p)?;
        let q = Rat::one() - p;
        let layers = (0..=i64::from(n)).map(|k| pow(p, k) * pow(&q, i64::from(n) - k)).collect();
        Ok(WeightQuery { n, p: p.clone(), layers })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    /// Weight of a single `k`-subset.
    pub fn layer(&self, k: u32) -> &Rat {
        &self.layers[k as usize]
    }

    pub fn weigh(&self, a: &Family) -> Result<Rat> {
        if a.n() != self.n {
            return Err(Error::GroundMismatch { left: self.n, right: a.n() });
        }
        let mut counts = vec![0u64; self.n as usize + 1];
        for m in a.iter() {
            counts[m.len() as usize] += 1;
        }
        Ok(counts
            .iter()
            .zip(&self.layers)
            .filter(|(c, _)| **c > 0)
            .map(|(c, w)| w * int(*c as i64))
            .sum())
    }
}

/// `μ_p(A) = Σ_{F ∈ A} p^|F| q^(n-|F|)`.
pub fn mu_weight(a: &Family, p: &Rat) -> Result<Rat> {
    WeightQuery::new(a.n(), p)?.weigh(a)
}

/// `μ_p(F_i^t) = Σ_{k ≥ t+i} C(t+2i, k) p^k q^(t+2i-k)`, independent of `n ≥ t+2i`.
pub fn mu_frankl_closed(t: u32, i: u32, p: &Rat) -> Result<Rat> {
    check_open_unit(p)?;
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    let q = Rat::one() - p;
    let m = u64::from(t + 2 * i);
    Ok((u64::from(t + i)..=m)
        .map(|k| binom_rat(m, k) * pow(p, k as i64) * pow(&q, (m - k) as i64))
        .sum())
}

/// Monotone lattice walks from `(0,0)` to `(x0,y0)` that never touch
/// `y = x + c`, by reflection: `C(x0+y0, x0) - C(x0+y0, y0-c)`.
///
/// Requires `0 < c < y0 < x0 + c` so both endpoints lie strictly below the line
/// and the reflected count is meaningful.
pub fn count_walks_avoiding_line(x0: u64, y0: u64, c: u64) -> Result<BigUint> {
    if !(0 < c && c < y0 && y0 < x0 + c) {
        return Err(Error::Domain(format!("need 0 < c < y0 < x0 + c, got x0={x0}, y0={y0}, c={c}")));
    }
    Ok(binom(x0 + y0, x0) - binom(x0 + y0, y0 - c))
}

/// Probability that an `n`-step walk reaches `y = x + ℓ`.
pub fn mu_hit_prob(n: u32, ell: u32, p: &Rat) -> Result<Rat> {
    check_open_unit(p)?;
    if ell == 0 {
        return Err(Error::Domain("line offset must be at least 1".into()));
    }
    let q = Rat::one() - p;
    let n = n as usize;
    let ell = ell as i64;
    // Heights of walks that have not hit yet lie in [-n, ell - 1].
    let off = n as i64;
    let width = (off + ell) as usize;
    let mut cur = vec![Rat::zero(); width];
    cur[off as usize] = Rat::one();
    let mut hit = Rat::zero();
    for _ in 0..n {
        let mut next = vec![Rat::zero(); width];
        for (idx, mass) in cur.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            let h = idx as i64 - off;
            if h + 1 == ell {
                hit += mass * p;
            } else {
                next[idx + 1] += mass * p;
            }
            next[idx - 1] += mass * &q;
        }
        cur = next;
    }
    Ok(hit)
}

/// Probability that an `n`-step walk is of class `class` relative to `y = x + ℓ`.
pub fn mu_class_prob(n: u32, ell: u32, class: WalkClass, p: &Rat) -> Result<Rat> {
    check_open_unit(p)?;
    if ell == 0 || ell > n {
        return Err(Error::Domain(format!("line offset {ell} outside [1, {n}]")));
    }
    let q = Rat::one() - p;
    let steps = n as usize;
    let off = n as i64;
    let ell = ell as i64;
    let width = (off + ell + 1) as usize;
    // touches capped at 2; walks above the line are absorbed into `tilde`.
    let mut cur = vec![[Rat::zero(), Rat::zero(), Rat::zero()]; width];
    cur[off as usize][0] = Rat::one();
    let mut tilde = Rat::zero();
    for _ in 0..steps {
        let mut next = vec![[Rat::zero(), Rat::zero(), Rat::zero()]; width];
        for (idx, row) in cur.iter().enumerate() {
            let h = idx as i64 - off;
            for (touch, mass) in row.iter().enumerate() {
                if mass.is_zero() {
                    continue;
                }
                let up = mass * p;
                if h + 1 > ell {
                    tilde += up;
                } else if h + 1 == ell {
                    next[idx + 1][(touch + 1).min(2)] += up;
                } else {
                    next[idx + 1][touch] += up;
                }
                next[idx - 1][touch] += mass * &q;
            }
        }
        cur = next;
    }
    let sum_touch = |k: usize| -> Rat { cur.iter().map(|row| row[k].clone()).sum() };
    Ok(match class {
        WalkClass::Tilde => tilde,
        WalkClass::Miss => sum_touch(0),
        WalkClass::Hat => sum_touch(1),
        WalkClass::DoubleHat => sum_touch(2),
    })
}

/// `μ_p` of the walks in `[n]` that either reach `y = x + ℓ + 1`, or stay at
/// or below `y = x + ℓ` and sit on it after `ℓ + 2i` steps.
pub fn mu_tilde_or_frankl(n: u32, ell: u32, i: u32, p: &Rat) -> Result<Rat> {
    check_open_unit(p)?;
    if ell == 0 || ell + 2 * i > n {
        return Err(Error::Domain(format!("need 1 ≤ ℓ and ℓ + 2i ≤ n, got n={n}, ℓ={ell}, i={i}")));
    }
    let q = Rat::one() - p;
    let off = n as i64;
    let ell_h = ell as i64;
    let check = (ell + 2 * i) as usize;
    let width = (off + ell_h + 1) as usize;
    // state: 0 = below ℓ so far, 1 = touched ℓ, 2 = on ℓ at the checkpoint
    let mut cur = vec![[Rat::zero(), Rat::zero(), Rat::zero()]; width];
    cur[off as usize][0] = Rat::one();
    let mut tilde = Rat::zero();
    for step in 1..=n as usize {
        let mut next = vec![[Rat::zero(), Rat::zero(), Rat::zero()]; width];
        for (idx, row) in cur.iter().enumerate() {
            let h = idx as i64 - off;
            for (st, mass) in row.iter().enumerate() {
                if mass.is_zero() {
                    continue;
                }
                for (dh, w) in [(1i64, mass * p), (-1i64, mass * &q)] {
                    let nh = h + dh;
                    if nh > ell_h {
                        tilde += w;
                        continue;
                    }
                    let mut ns = if nh == ell_h { st.max(1) } else { st };
                    if step == check && nh == ell_h {
                        ns = 2;
                    }
                    next[(nh + off) as usize][ns] += w;
                }
            }
        }
        cur = next;
    }
    let flagged: Rat = cur.iter().map(|row| row[2].clone()).sum();
    Ok(tilde + flagged)
}

/// All `r ≥ 0` with `r/(t+2r-1) ≤ p ≤ (r+1)/(t+2r+1)`, the optimality window
/// of `F_r^t`; for `r = 0` the lower end is `0`.
pub fn optimal_r(t: u32, p: &Rat) -> Result<Vec<u32>> {
    check_open_unit(p)?;
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    let half = Rat::new(1.into(), 2.into());
    if p >= &half {
        return Err(Error::Probability(p.to_string()));
    }
    let one = Rat::one();
    // r/(t+2r-1) ≤ p  ⟺  r ≤ p(t-1)/(1-2p)
    let r_hi = p * int(i64::from(t) - 1) / (&one - p * int(2));
    let r_max = r_hi.floor().to_integer();
    let r_max: u32 = u32::try_from(r_max).unwrap_or(u32::MAX - 2);
    let mut out = Vec::new();
    for r in 0..=r_max + 1 {
        let (ri, ti) = (i64::from(r), i64::from(t));
        let lo_ok = r == 0 || Rat::new(ri.into(), (ti + 2 * ri - 1).into()) <= *p;
        let hi_ok = *p <= Rat::new((ri + 1).into(), (ti + 2 * ri + 1).into());
        if lo_ok && hi_ok {
            out.push(r);
        }
    }
    Ok(out)
}

/// `Σ_{k ≥ from} C(m, k) p^k q^(m-k)`.
pub fn binomial_tail(m: u64, from: u64, p: &Rat) -> Rat {
    let q = Rat::one() - p;
    (from..=m)
        .map(|k| from_biguint(binom(m, k)) * pow(p, k as i64) * pow(&q, (m - k) as i64))
        .sum()
}
