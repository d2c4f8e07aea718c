//! Families of subsets of a common ground set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mask::{check_ground, SubsetMask};
use crate::walk::{classify_walk, hits_line, WalkClass};

/// Largest ground size for which whole power sets are materialised.
pub const MAX_MATERIALISED_GROUND: u32 = 22;

/// A set of subsets of `[n]`, iterated in canonical (lexicographic) order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    n: u32,
    members: BTreeSet<SubsetMask>,
}

impl Family {
    pub fn empty(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(Family { n, members: BTreeSet::new() })
    }

    pub fn from_members<I: IntoIterator<Item = SubsetMask>>(n: u32, members: I) -> Result<Self> {
        let mut fam = Family::empty(n)?;
        for m in members {
            fam.insert(m)?;
        }
        Ok(fam)
    }

    /// Builds from element lists; convenient in tests and examples.
    pub fn from_lists(n: u32, lists: &[&[u32]]) -> Result<Self> {
        let masks = lists
            .iter()
            .map(|l| SubsetMask::new(n, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Family::from_members(n, masks)
    }

    /// All subsets of `[n]` satisfying `pred`.
    pub fn from_predicate(n: u32, mut pred: impl FnMut(&SubsetMask) -> bool) -> Result<Self> {
        check_ground(n)?;
        if n > MAX_MATERIALISED_GROUND {
            return Err(Error::Cap(format!("power set of [{n}] exceeds 2^{MAX_MATERIALISED_GROUND}")));
        }
        let members = (0..1u64 << n)
            .map(|b| SubsetMask::from_bits_unchecked(n, b))
            .filter(|m| pred(m))
            .collect();
        Ok(Family { n, members })
    }

    pub fn power_set(n: u32) -> Result<Self> {
        Family::from_predicate(n, |_| true)
    }

    /// Up-set generated by a single set.
    pub fn supersets_of(base: &SubsetMask) -> Result<Self> {
        Family::from_predicate(base.n(), |m| base.is_subset_of(m))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &SubsetMask) -> bool {
        self.members.contains(m)
    }

    pub fn insert(&mut self, m: SubsetMask) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::GroundMismatch { left: self.n, right: m.n() });
        }
        Ok(self.members.insert(m))
    }

    pub fn iter(&self) -> impl Iterator<Item = &SubsetMask> + '_ {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<SubsetMask> {
        &self.members
    }

    pub fn same_ground(&self, other: &Family) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroundMismatch { left: self.n, right: other.n })
        }
    }

    pub fn difference(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        Ok(Family { n: self.n, members: self.members.difference(&other.members).copied().collect() })
    }

    pub fn intersection(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        Ok(Family { n: self.n, members: self.members.intersection(&other.members).copied().collect() })
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        Ok(Family { n: self.n, members: self.members.union(&other.members).copied().collect() })
    }

    pub fn filter(&self, mut pred: impl FnMut(&SubsetMask) -> bool) -> Family {
        Family { n: self.n, members: self.members.iter().copied().filter(|m| pred(m)).collect() }
    }

    /// Members whose walk falls in `class` relative to `y = x + ℓ`.
    pub fn class_part(&self, ell: u32, class: WalkClass) -> Result<Family> {
        let mut out = Family::empty(self.n)?;
        for m in &self.members {
            if classify_walk(m, ell)? == class {
                out.members.insert(*m);
            }
        }
        Ok(out)
    }

    /// Closed under taking supersets.
    pub fn is_upset(&self) -> bool {
        self.members.iter().all(|m| {
            (1..=self.n).filter(|&e| !m.contains(e)).all(|e| self.members.contains(&m.with(e)))
        })
    }

    /// Inclusion-minimal members.
    pub fn minimal_members(&self) -> Vec<SubsetMask> {
        let mut by_size: Vec<SubsetMask> = self.members.iter().copied().collect();
        by_size.sort_by_key(|m| m.len());
        let mut out: Vec<SubsetMask> = Vec::new();
        for m in by_size {
            if !out.iter().any(|x| x.is_subset_of(&m)) {
                out.push(m);
            }
        }
        out
    }
}

/// `F_i^t(n) = { F ⊆ [n] : |F ∩ [t+2i]| ≥ t+i }`.
pub fn frankl_family(n: u32, t: u32, i: u32) -> Result<Family> {
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    if t + 2 * i > n {
        return Err(Error::Domain(format!("t + 2i = {} exceeds n = {n}", t + 2 * i)));
    }
    Family::from_predicate(n, |m| m.prefix_count(t + 2 * i) >= t + i)
}

/// All walks in `[n]` that reach `y = x + ℓ`.
pub fn hit_family(n: u32, ell: i64) -> Result<Family> {
    Family::from_predicate(n, |m| hits_line(m, ell))
}

/// Smallest up-set containing `a`.
pub fn upset_closure(a: &Family) -> Result<Family> {
    let mins = a.minimal_members();
    Family::from_predicate(a.n(), |m| mins.iter().any(|x| x.is_subset_of(m)))
}

/// `λ(A) = min over members of max(0, highest point of the walk)`.
pub fn lambda_family(a: &Family) -> Result<u32> {
    a.iter()
        .map(|m| m.max_height().max(0) as u32)
        .min()
        .ok_or(Error::EmptyFamily)
}
