//! Shifting, cross-intersection, partner families and the parameters read off
//! shifted extremal pairs.

use crate::error::{Error, Result};
use crate::family::{lambda_family, Family};
use crate::mask::SubsetMask;
use crate::walk::{classify_walk, d_walk, d_walk_max_index, e_walk, e_walk_max_index, WalkClass};

fn check_pair(n: u32, i: u32, j: u32) -> Result<()> {
    if i == 0 || i >= j || j > n {
        return Err(Error::Domain(format!("need 1 ≤ i < j ≤ {n}, got ({i}, {j})")));
    }
    Ok(())
}

/// `s_ij`: replace `j` by `i` in each member that has `j` but not `i`, unless the
/// replacement is already in `A`.
pub fn shift_ij(a: &Family, i: u32, j: u32) -> Result<Family> {
    check_pair(a.n(), i, j)?;
    let mut out = Family::empty(a.n())?;
    for f in a.iter() {
        let image = if f.contains(j) && !f.contains(i) {
            let g = f.without(j).with(i);
            if a.contains(&g) {
                *f
            } else {
                g
            }
        } else {
            *f
        };
        out.insert(image)?;
    }
    Ok(out)
}

pub fn is_shifted(a: &Family) -> bool {
    let n = a.n();
    (1..n).all(|i| (i + 1..=n).all(|j| shift_ij(a, i, j).map(|s| &s == a).unwrap_or(false)))
}

/// Applies `s_ij` to both families, sweeping `(i, j)` lexicographically until a
/// full pass changes neither.
pub fn shift_pair_to_fixpoint(a: &Family, b: &Family) -> Result<(Family, Family)> {
    a.same_ground(b)?;
    let n = a.n();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let na = shift_ij(&a, i, j)?;
                let nb = shift_ij(&b, i, j)?;
                if na != a || nb != b {
                    changed = true;
                    a = na;
                    b = nb;
                }
            }
        }
        if !changed {
            return Ok((a, b));
        }
    }
}

pub fn shift_to_fixpoint(a: &Family) -> Result<Family> {
    Ok(shift_pair_to_fixpoint(a, a)?.0)
}

/// Every member of `A` meets every member of `B` in at least `t` points.
///
/// Only inclusion-minimal members need checking.
pub fn is_cross_t_intersecting(a: &Family, b: &Family, t: u32) -> Result<bool> {
    a.same_ground(b)?;
    let mb = b.minimal_members();
    Ok(a.minimal_members().iter().all(|x| mb.iter().all(|y| x.intersection_size(y) >= t)))
}

/// The largest `B` cross `t`-intersecting with `A`.
pub fn maximal_partner(a: &Family, t: u32) -> Result<Family> {
    if a.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mins = a.minimal_members();
    Family::from_predicate(a.n(), |x| mins.iter().all(|m| m.intersection_size(x) >= t))
}

/// A shifted, inclusion-maximal cross `t`-intersecting pair with its line
/// parameters `u = λ(A)` and `v = λ(B)`.
#[derive(Clone, Debug)]
pub struct ShiftedPair {
    a: Family,
    b: Family,
    t: u32,
    u: u32,
    v: u32,
}

impl ShiftedPair {
    pub fn new(a: Family, b: Family, t: u32) -> Result<Self> {
        a.same_ground(&b)?;
        if t == 0 {
            return Err(Error::Domain("t must be at least 1".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if !is_cross_t_intersecting(&a, &b, t)? {
            return Err(Error::Structure("pair is not cross t-intersecting".into()));
        }
        if !a.is_upset() || !b.is_upset() {
            return Err(Error::Structure("families must be inclusion-maximal".into()));
        }
        if !is_shifted(&a) || !is_shifted(&b) {
            return Err(Error::Structure("families must be shifted".into()));
        }
        let u = lambda_family(&a)?;
        let v = lambda_family(&b)?;
        if u + v < 2 * t {
            return Err(Error::Structure(format!("λ(A) + λ(B) = {} < 2t = {}", u + v, 2 * t)));
        }
        Ok(ShiftedPair { a, b, t, u, v })
    }

    pub fn a(&self) -> &Family {
        &self.a
    }

    pub fn b(&self) -> &Family {
        &self.b
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn v(&self) -> u32 {
        self.v
    }
}

/// The `s` with every touching member of `fam` (HAT or DOUBLEHAT w.r.t.
/// `ell`) lying in `F_s^ell`, i.e. on the line after `ell + 2s` steps.
fn touching_index(fam: &Family, ell: u32) -> Result<u32> {
    let n = fam.n();
    let mut candidates: Option<Vec<u32>> = None;
    let mut saw_hat = false;
    for m in fam.iter() {
        let class = classify_walk(m, ell)?;
        if class == WalkClass::Hat {
            saw_hat = true;
        }
        if class != WalkClass::Hat && class != WalkClass::DoubleHat {
            continue;
        }
        let hs = m.heights();
        let here: Vec<u32> = (0..=(n - ell) / 2)
            .filter(|s| hs[(ell + 2 * s) as usize] == i64::from(ell))
            .collect();
        candidates = Some(match candidates {
            None => here,
            Some(prev) => prev.into_iter().filter(|s| here.contains(s)).collect(),
        });
    }
    if !saw_hat {
        return Err(Error::Domain(format!("HAT part relative to line {ell} is empty")));
    }
    match candidates.as_deref() {
        Some([s]) => Ok(*s),
        _ => Err(Error::Structure(format!("no unique column for touching walks of line {ell}"))),
    }
}

/// `(s, s')` with the touching parts of `A` and `B` inside `F_s^u` and `F_{s'}^v`.
pub fn extract_ss(pair: &ShiftedPair) -> Result<(u32, u32)> {
    if pair.u + pair.v != 2 * pair.t {
        return Err(Error::Domain(format!("u + v = {} differs from 2t = {}", pair.u + pair.v, 2 * pair.t)));
    }
    if pair.u == 0 || pair.v == 0 {
        return Err(Error::Domain("line parameters must be positive".into()));
    }
    let s = touching_index(&pair.a, pair.u)?;
    let s_prime = touching_index(&pair.b, pair.v)?;
    if 2 * i64::from(s) - 2 * i64::from(s_prime) != i64::from(pair.v) - i64::from(pair.u) {
        return Err(Error::Structure(format!(
            "s - s' = {} but (v - u)/2 = {}",
            i64::from(s) - i64::from(s_prime),
            (i64::from(pair.v) - i64::from(pair.u)) / 2
        )));
    }
    Ok((s, s_prime))
}

/// Generator of an indexed family of special walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkGen {
    /// `D_{ℓ,s}(i)`.
    D { ell: u32, s: u32 },
    /// `E(i)` for threshold `t`.
    E { t: u32 },
}

impl WalkGen {
    pub fn max_valid_index(&self, n: u32) -> Option<u32> {
        match *self {
            WalkGen::D { ell, s } => d_walk_max_index(n, ell, s),
            WalkGen::E { t } => e_walk_max_index(n, t),
        }
    }

    pub fn walk(&self, n: u32, i: u32) -> Result<SubsetMask> {
        match *self {
            WalkGen::D { ell, s } => d_walk(n, ell, s, i),
            WalkGen::E { t } => e_walk(n, t, i),
        }
    }
}

/// `{ i : gen(i) ∈ A }` over the valid index range.
pub fn index_set(a: &Family, gen: WalkGen) -> Result<Vec<u32>> {
    let max = gen
        .max_valid_index(a.n())
        .ok_or_else(|| Error::Domain(format!("{gen:?} has no valid index in [{}]", a.n())))?;
    let mut out = Vec::new();
    for i in 1..=max {
        if a.contains(&gen.walk(a.n(), i)?) {
            out.push(i);
        }
    }
    Ok(out)
}

/// `max { i : gen(i) ∈ A }`; requires `gen(1) ∈ A`.
pub fn max_index(a: &Family, gen: WalkGen) -> Result<u32> {
    let set = index_set(a, gen)?;
    if set.first() != Some(&1) {
        return Err(Error::Domain(format!("{gen:?}(1) is not a member")));
    }
    Ok(*set.last().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::frankl_family;

    fn fam(n: u32, lists: &[&[u32]]) -> Family {
        Family::from_lists(n, lists).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_ij(&fam(2, &[&[2]]), 1, 2).unwrap(), fam(2, &[&[1]]));
        assert_eq!(shift_ij(&fam(2, &[&[1], &[2]]), 1, 2).unwrap(), fam(2, &[&[1], &[2]]));
        assert_eq!(shift_ij(&fam(3, &[&[2, 3]]), 1, 3).unwrap(), fam(3, &[&[1, 2]]));
        assert!(shift_ij(&fam(3, &[&[2, 3]]), 2, 2).is_err());
        assert!(shift_ij(&fam(3, &[&[2, 3]]), 3, 1).is_err());
    }

    #[test]
    fn fixpoint_examples() {
        let f = frankl_family(5, 2, 0).unwrap();
        assert_eq!(shift_pair_to_fixpoint(&f, &f).unwrap(), (f.clone(), f));
        let a = fam(2, &[&[2]]);
        assert_eq!(shift_pair_to_fixpoint(&a, &a).unwrap(), (fam(2, &[&[1]]), fam(2, &[&[1]])));
    }

    #[test]
    fn cross_examples() {
        let f0 = frankl_family(5, 2, 0).unwrap();
        assert!(is_cross_t_intersecting(&f0, &f0, 2).unwrap());
        assert!(!is_cross_t_intersecting(&fam(3, &[&[1, 2]]), &fam(3, &[&[2, 3]]), 2).unwrap());
        let f1 = frankl_family(6, 2, 1).unwrap();
        assert!(is_cross_t_intersecting(&f1, &f1, 2).unwrap());
        assert!(!is_cross_t_intersecting(&f1, &f1, 3).unwrap());
    }

    #[test]
    fn partner_examples() {
        let f0 = frankl_family(3, 2, 0).unwrap();
        assert_eq!(maximal_partner(&f0, 2).unwrap(), f0);
        let full = fam(3, &[&[1, 2, 3]]);
        let p = maximal_partner(&full, 2).unwrap();
        assert_eq!(p, Family::from_predicate(3, |m| m.len() >= 2).unwrap());
        assert!(maximal_partner(&Family::power_set(4).unwrap(), 1).unwrap().is_empty());
        assert_eq!(maximal_partner(&Family::empty(3).unwrap(), 1), Err(Error::EmptyFamily));
    }

    #[test]
    fn extract_on_frankl_pairs() {
        for i in 0..=2 {
            let f = frankl_family(8, 2, i).unwrap();
            let pair = ShiftedPair::new(f.clone(), f, 2).unwrap();
            assert_eq!((pair.u(), pair.v()), (2, 2));
            assert_eq!(extract_ss(&pair).unwrap(), (i, i));
        }
    }

    #[test]
    fn extract_on_asymmetric_pair() {
        // u = t-1, v = t+1 with s = s' + 1
        let (n, t) = (9, 3);
        let a = Family::from_predicate(n, |m| {
            m.max_height() >= 3 || (m.max_height() == 2 && m.prefix_height(4).unwrap() == 2)
        })
        .unwrap();
        let b = maximal_partner(&a, t).unwrap();
        let pair = ShiftedPair::new(a, b, t).unwrap();
        assert_eq!((pair.u(), pair.v()), (2, 4));
        let (s, sp) = extract_ss(&pair).unwrap();
        assert_eq!(s, sp + 1);
    }

    #[test]
    fn pair_validation() {
        let f = frankl_family(5, 2, 0).unwrap();
        let g = fam(5, &[&[2, 3, 4]]);
        assert!(ShiftedPair::new(f.clone(), g, 2).is_err());
        assert!(ShiftedPair::new(f.clone(), f, 3).is_err());
    }

    #[test]
    fn max_index_examples() {
        let (n, t, s) = (12, 2, 1);
        let a = frankl_family(n, t, s).unwrap();
        let gen = WalkGen::D { ell: t, s };
        assert_eq!(max_index(&a, gen).unwrap(), n - t - 2 * s - 1);
        let two = Family::from_members(n, [gen.walk(n, 1).unwrap(), gen.walk(n, 2).unwrap()]).unwrap();
        assert_eq!(max_index(&two, gen).unwrap(), 2);
        let only_two = Family::from_members(n, [gen.walk(n, 2).unwrap()]).unwrap();
        assert!(max_index(&only_two, gen).is_err());
        let e = WalkGen::E { t: 2 };
        let ea = Family::from_members(n, [e.walk(n, 1).unwrap()]).unwrap();
        assert_eq!(max_index(&ea, e).unwrap(), 1);
    }
}
