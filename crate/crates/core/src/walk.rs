//! Subsets read as lattice walks and the special walks used by the
//! structure arguments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// How a walk meets the line `y = x + ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkClass {
    /// Reaches `y = x + ℓ + 1`.
    Tilde,
    /// Touches the line exactly once and never goes above it.
    Hat,
    /// Touches the line at least twice and never goes above it.
    DoubleHat,
    /// Never reaches the line.
    Miss,
}

impl WalkClass {
    pub const ALL: [WalkClass; 4] = [WalkClass::Tilde, WalkClass::Hat, WalkClass::DoubleHat, WalkClass::Miss];

    pub fn tag(&self) -> &'static str {
        match self {
            WalkClass::Tilde => "TILDE",
            WalkClass::Hat => "HAT",
            WalkClass::DoubleHat => "DOUBLEHAT",
            WalkClass::Miss => "NONE",
        }
    }
}

impl fmt::Display for WalkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WalkClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WalkClass::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown walk class `{s}`")))
    }
}

/// Whether the walk of `f` reaches `y = x + ℓ` at some step `j ≥ 1`.
pub fn hits_line(f: &SubsetMask, ell: i64) -> bool {
    f.heights()[1..].iter().any(|&h| h >= ell)
}

/// Class of `f` relative to the line `y = x + ℓ`, for `1 ≤ ℓ ≤ n`.
pub fn classify_walk(f: &SubsetMask, ell: u32) -> Result<WalkClass> {
    if ell == 0 || ell > f.n() {
        return Err(Error::Domain(format!("line offset {ell} outside [1, {}]", f.n())));
    }
    let ell = i64::from(ell);
    let hs = f.heights();
    let mut touches = 0u32;
    for &h in &hs[1..] {
        if h > ell {
            return Ok(WalkClass::Tilde);
        }
        if h == ell {
            touches += 1;
        }
    }
    Ok(match touches {
        0 => WalkClass::Miss,
        1 => WalkClass::Hat,
        _ => WalkClass::DoubleHat,
    })
}

/// Largest `i` for which `D_{ℓ,s}(i)` is defined in `[n]`, or `None` if there is none.
pub fn d_walk_max_index(n: u32, ell: u32, s: u32) -> Option<u32> {
    let used = ell + 2 * s + 1;
    (n > used).then(|| n - used)
}

/// `D_{ℓ,s}(i) = [ℓ-1] ∪ {ℓ-1+2k : 1 ≤ k ≤ s} ∪ {ℓ+2s} ∪ {ℓ+2s+i+2k ≤ n : k ≥ 1}`.
///
/// The walk climbs to `ℓ-1`, zigzags just under the line for `s` rounds,
/// touches it at step `ℓ+2s`, moves right `i+1` times and then never goes
/// above `y = x + ℓ - i`. Larger indices all give the same set, so only
/// `1 ≤ i ≤ n-ℓ-2s-1` is accepted.
pub fn d_walk(n: u32, ell: u32, s: u32, i: u32) -> Result<SubsetMask> {
    if ell == 0 {
        return Err(Error::Domain("line offset must be at least 1".into()));
    }
    let max = d_walk_max_index(n, ell, s)
        .ok_or_else(|| Error::Domain(format!("no valid index for n={n}, ℓ={ell}, s={s}")))?;
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, n: max });
    }
    let mut el: Vec<u32> = (1..ell).collect();
    el.extend((1..=s).map(|k| ell - 1 + 2 * k));
    el.push(ell + 2 * s);
    el.extend((1..).map(|k| ell + 2 * s + i + 2 * k).take_while(|&x| x <= n));
    SubsetMask::new(n, el)
}

pub fn e_walk_max_index(n: u32, t: u32) -> Option<u32> {
    (n > t + 5).then(|| n - t - 5)
}

/// `E(i) = [t-1] ∪ {t+1, t+3, t+4} ∪ {t+4+i+2j ≤ n : j ≥ 1}`.
pub fn e_walk(n: u32, t: u32, i: u32) -> Result<SubsetMask> {
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    let max = e_walk_max_index(n, t).ok_or_else(|| Error::Domain(format!("no valid index for n={n}, t={t}")))?;
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, n: max });
    }
    let mut el: Vec<u32> = (1..t).collect();
    el.extend([t + 1, t + 3, t + 4]);
    el.extend((1..).map(|j| t + 4 + i + 2 * j).take_while(|&x| x <= n));
    SubsetMask::new(n, el)
}

/// `[(F)_t - 1] ∪ ([n] \ F)`: reflect the walk across `y = x + t - 1`.
/// Meets `F` in exactly `t - 1` points.
pub fn dual_t(f: &SubsetMask, t: u32) -> Result<SubsetMask> {
    let ft = f
        .kth_smallest(t)
        .ok_or_else(|| Error::Domain(format!("|F| = {} < t = {t}", f.len())))?;
    Ok(SubsetMask::prefix(f.n(), ft - 1)?.union(&f.complement()))
}

/// `A → B`: `|A| ≤ |B|` and the `k`-th element of `A` is at least the `k`-th of `B`.
pub fn shifts_to(a: &SubsetMask, b: &SubsetMask) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::GroundMismatch { left: a.n(), right: b.n() });
    }
    if a.len() > b.len() {
        return Ok(false);
    }
    Ok(a.elements().iter().zip(b.elements()).all(|(x, y)| *x >= y))
}
