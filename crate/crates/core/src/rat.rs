//! Exact rationals and integer helpers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn from_biguint(v: BigUint) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `r^e` for any integer exponent; `r` must be nonzero when `e < 0`.
pub fn pow(r: &Rat, e: i64) -> Rat {
    let k = e.unsigned_abs();
    let mut acc = Rat::one();
    let mut base = r.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Binomial coefficient by the multiplicative recurrence `C(n, i+1) = C(n, i)(n-i)/(i+1)`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

pub fn binom_rat(n: u64, k: u64) -> Rat {
    from_biguint(binom(n, k))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Parses `"num/den"` or `"int"`; zero denominators are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::ParseRat(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Always `num/den`, even for integers.
pub fn fraction_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering truncated toward zero after `digits` places.
pub fn decimal_string(r: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r.abs() * Rat::from_integer(scale.clone())).to_integer();
    let (whole, frac) = (&scaled / &scale, &scaled % &scale);
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits as usize)
}

/// Checks `0 < p < 1`.
pub fn check_open_unit(p: &Rat) -> Result<()> {
    if p.is_positive() && p < &Rat::one() {
        Ok(())
    } else {
        Err(Error::Probability(p.to_string()))
    }
}

/// `n` equally spaced interior points of `(lo, hi)`.
pub fn interior_points(lo: &Rat, hi: &Rat, n: u32) -> Vec<Rat> {
    let step = (hi - lo) / int(i64::from(n) + 1);
    (1..=i64::from(n)).map(|k| lo + &step * int(k)).collect()
}
