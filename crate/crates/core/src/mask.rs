//! Subsets of `[n]` packed into a `u64`; element `e` lives in bit `e - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GROUND: u32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: u32,
    bits: u64,
}

fn ground_bits(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_ground(n: u32) -> Result<()> {
    if (1..=MAX_GROUND).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSize(n))
    }
}

impl SubsetMask {
    pub fn new<I: IntoIterator<Item = u32>>(n: u32, elements: I) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(SubsetMask { n, bits })
    }

    pub fn from_bits(n: u32, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if bits & !ground_bits(n) != 0 {
            let element = 64 - bits.leading_zeros();
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(SubsetMask { n, bits })
    }

    pub(crate) fn from_bits_unchecked(n: u32, bits: u64) -> Self {
        debug_assert!(bits & !ground_bits(n) == 0);
        SubsetMask { n, bits }
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// `[k]` inside `[n]`.
    pub fn prefix(n: u32, k: u32) -> Result<Self> {
        check_ground(n)?;
        if k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let bits = if k == 0 { 0 } else { ground_bits(k) };
        Ok(SubsetMask { n, bits })
    }

    pub fn full(n: u32) -> Result<Self> {
        Self::prefix(n, n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: u32) -> bool {
        e >= 1 && e <= self.n && self.bits >> (e - 1) & 1 == 1
    }

    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() + 1);
            b &= b - 1;
        }
        out
    }

    /// `(F)_k`, the `k`-th smallest element (1-based `k`).
    pub fn kth_smallest(&self, k: u32) -> Option<u32> {
        if k == 0 || k > self.len() {
            return None;
        }
        let mut b = self.bits;
        for _ in 1..k {
            b &= b - 1;
        }
        Some(b.trailing_zeros() + 1)
    }

    pub fn complement(&self) -> Self {
        SubsetMask { n: self.n, bits: !self.bits & ground_bits(self.n) }
    }

    pub fn union(&self, other: &Self) -> Self {
        SubsetMask { n: self.n, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SubsetMask { n: self.n, bits: self.bits & other.bits }
    }

    pub fn intersection_size(&self, other: &Self) -> u32 {
        (self.bits & other.bits).count_ones()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn with(&self, e: u32) -> Self {
        SubsetMask { n: self.n, bits: self.bits | 1u64 << (e - 1) }
    }

    pub fn without(&self, e: u32) -> Self {
        SubsetMask { n: self.n, bits: self.bits & !(1u64 << (e - 1)) }
    }

    /// `|F ∩ [j]|`, with `j` clamped to `n`.
    pub fn prefix_count(&self, j: u32) -> u32 {
        let j = j.min(self.n);
        if j == 0 {
            0
        } else {
            (self.bits & ground_bits(j)).count_ones()
        }
    }

    /// Height of the walk after `j` steps: `2|F ∩ [j]| - j`.
    pub fn prefix_height(&self, j: u32) -> Result<i64> {
        if j > self.n {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        Ok(2 * i64::from(self.prefix_count(j)) - i64::from(j))
    }

    /// Heights after `0, 1, ..., n` steps.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0i64;
        let mut out = Vec::with_capacity(self.n as usize + 1);
        out.push(0);
        for e in 1..=self.n {
            h += if self.contains(e) { 1 } else { -1 };
            out.push(h);
        }
        out
    }

    /// Largest height over `j = 1..=n`.
    pub fn max_height(&self) -> i64 {
        self.heights()[1..].iter().copied().max().unwrap_or(0)
    }
}

impl Ord for SubsetMask {
    /// Lexicographic on the increasing element sequences; a proper prefix
    /// sorts first, so `∅` is smallest.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.n.cmp(&other.n) {
            Ordering::Equal => {}
            o => return o,
        }
        let d = self.bits ^ other.bits;
        if d == 0 {
            return Ordering::Equal;
        }
        let low = d.trailing_zeros();
        let above = if low == 63 { 0 } else { u64::MAX << (low + 1) };
        if self.bits >> low & 1 == 1 {
            if other.bits & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.bits & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.elements().iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}⊆[{}]", self, self.n)
    }
}
