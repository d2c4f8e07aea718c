//! Exhaustive search over up-sets of tiny ground sets.
//!
//! A family over `[n]` with `n ≤ 6` is packed into a `u64` whose bit `x` stands
//! for the subset with element bits `x`.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, WitnessPrecondition, Result};
use crate::family::{frankl_family, Family};
use crate::mask::SubsetMask;
use crate::rat::{binom, check_open_unit, Rat};
use crate::shift::{is_cross_t_intersecting, shift_ij};

/// Largest ground size the search handles.
pub const MAX_SEARCH_N: u32 = 6;
/// Largest ground size for permutation-based isomorphism tests.
pub const MAX_ISO_N: u32 = 6;
/// Largest side of the bipartite link graph.
pub const MAX_LINK_SIDE: u64 = 10_000;

fn check_search_n(n: u32) -> Result<()> {
    if n == 0 || n > MAX_SEARCH_N {
        return Err(Error::Cap(format!("search needs 1 ≤ n ≤ {MAX_SEARCH_N}, got {n}")));
    }
    Ok(())
}

/// All up-sets over `[n]` as bitsets, built from pairs `U0 ⊆ U1` over `[n-1]`.
fn upset_list(n: u32) -> Vec<u64> {
    if n == 0 {
        return vec![0, 1];
    }
    let prev = upset_list(n - 1);
    let shift = 1u32 << (n - 1);
    let mut out = Vec::new();
    for &u1 in &prev {
        for &u0 in &prev {
            if u0 & !u1 == 0 {
                out.push(u0 | u1 << shift);
            }
        }
    }
    out
}

/// Streams every up-set over `[n]` as a bitset, each exactly once.
pub struct UpsetBits {
    prev: Vec<u64>,
    shift: u32,
    i1: usize,
    i0: usize,
}

impl Iterator for UpsetBits {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.i1 < self.prev.len() {
            let u1 = self.prev[self.i1];
            while self.i0 < self.prev.len() {
                let u0 = self.prev[self.i0];
                self.i0 += 1;
                if u0 & !u1 == 0 {
                    return Some(u0 | u1 << self.shift);
                }
            }
            self.i0 = 0;
            self.i1 += 1;
        }
        None
    }
}

pub fn upset_bits(n: u32) -> Result<UpsetBits> {
    check_search_n(n)?;
    Ok(UpsetBits { prev: upset_list(n - 1), shift: 1 << (n - 1), i1: 0, i0: 0 })
}

/// Every up-set over `[n]`, `n ≤ 6`.
pub fn enumerate_upsets(n: u32) -> Result<impl Iterator<Item = Family>> {
    Ok(upset_bits(n)?.map(move |b| bits_to_family(n, b)))
}

pub fn bits_to_family(n: u32, bits: u64) -> Family {
    let members = (0..1u64 << n)
        .filter(|x| bits >> x & 1 == 1)
        .map(|x| SubsetMask::from_bits(n, x).expect("subset fits the ground set"));
    Family::from_members(n, members).expect("members share the ground set")
}

pub fn family_to_bits(a: &Family) -> Result<u64> {
    check_search_n(a.n())?;
    Ok(a.iter().fold(0u64, |acc, m| acc | 1u64 << m.bits()))
}

/// Bitset of the subsets meeting `x` in at least `t` points, for every `x`.
fn threshold_masks(n: u32, t: u32) -> Vec<u64> {
    let size = 1u64 << n;
    (0..size)
        .map(|x| (0..size).filter(|y| (x & y).count_ones() >= t).fold(0u64, |acc, y| acc | 1 << y))
        .collect()
}

/// Bitset of the largest family cross `t`-intersecting with `a`.
fn partner_bits(a: u64, gx: &[u64]) -> u64 {
    gx.iter().enumerate().filter(|(_, g)| a & !**g == 0).fold(0u64, |acc, (x, _)| acc | 1 << x)
}

fn layer_masks(n: u32) -> Vec<u64> {
    let mut out = vec![0u64; n as usize + 1];
    for x in 0..1u64 << n {
        out[x.count_ones() as usize] |= 1 << x;
    }
    out
}

/// Integer weight numerators; `μ_p(A) = N(A) / b^n` for `p = a/b`.
trait Numerator: Clone {
    type Product: Ord + Clone;
    fn from_layers(layers: &[u64], counts: &[Self], fam: u64) -> Self;
    fn is_zero(&self) -> bool;
    fn product(&self, other: &Self) -> Self::Product;
}

impl Numerator for u128 {
    type Product = (u128, u128);
    fn from_layers(layers: &[u64], w: &[u128], fam: u64) -> u128 {
        layers.iter().zip(w).map(|(l, w)| u128::from((fam & l).count_ones()) * w).sum()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn product(&self, o: &u128) -> (u128, u128) {
        mul_wide(*self, *o)
    }
}

impl Numerator for BigUint {
    type Product = BigUint;
    fn from_layers(layers: &[u64], w: &[BigUint], fam: u64) -> BigUint {
        layers.iter().zip(w).map(|(l, w)| w * BigUint::from((fam & l).count_ones())).sum()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn product(&self, o: &BigUint) -> BigUint {
        self * o
    }
}

/// Full 256-bit product as `(high, low)`.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const M: u128 = u64::MAX as u128;
    let (a1, a0) = (a >> 64, a & M);
    let (b1, b0) = (b >> 64, b & M);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & M) + (p10 & M);
    let lo = (p00 & M) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Outcome of an exhaustive search.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: u32,
    pub t: u32,
    pub p: Rat,
    pub best_value: Rat,
    pub witness_a: Family,
    pub witness_b: Family,
    /// `r` with both witnesses isomorphic to `F_r^t(n)`, if any.
    pub witness_isomorphic_to: Option<u32>,
    pub upsets_examined: u64,
}

fn canonical_cmp(a: u64, b: u64, n: u32) -> Ordering {
    let fa = bits_to_family(n, a);
    let fb = bits_to_family(n, b);
    fa.iter().cmp(fb.iter())
}

fn best_pair<W: Numerator>(n: u32, t: u32, weights: &[W]) -> Result<(Option<(u64, u64)>, u64)> {
    let gx = threshold_masks(n, t);
    let layers = layer_masks(n);
    let mut best: Option<(W::Product, u64, u64)> = None;
    let mut examined = 0u64;
    for a in upset_bits(n)? {
        examined += 1;
        let na = W::from_layers(&layers, weights, a);
        if na.is_zero() {
            continue;
        }
        let b = partner_bits(a, &gx);
        let nb = W::from_layers(&layers, weights, b);
        if nb.is_zero() {
            continue;
        }
        let value = na.product(&nb);
        let better = match &best {
            None => true,
            Some((bv, ba, _)) => match value.cmp(bv) {
                Ordering::Greater => true,
                Ordering::Equal => canonical_cmp(a, *ba, n) == Ordering::Less,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((value, a, b));
        }
    }
    Ok((best.map(|(_, a, b)| (a, b)), examined))
}

/// Exact maximum of `μ_p(A) μ_p(B)` over cross `t`-intersecting pairs in `2^[n]`.
///
/// Only up-sets `A` are enumerated, each paired with its maximal partner.
/// `p = 1/2` is accepted alongside `0 < p < 1/2`.
pub fn max_product(n: u32, t: u32, p: &Rat) -> Result<SearchResult> {
    check_search_n(n)?;
    if t == 0 || t > n {
        return Err(Error::Domain(format!("need 1 ≤ t ≤ n, got t={t}, n={n}")));
    }
    check_open_unit(p)?;
    if p > &Rat::new(1.into(), 2.into()) {
        return Err(Error::Probability(p.to_string()));
    }
    let a = p.numer().to_biguint().expect("p is positive");
    let b = p.denom().to_biguint().expect("denominator is positive");
    let c = &b - &a;
    let big: Vec<BigUint> = (0..=n).map(|k| a.pow(k) * c.pow(n - k)).collect();
    // Each numerator is at most 64 * b^n; the fast path needs that below 2^127.
    let fits = (b.pow(n) << 6u32).bits() <= 127;
    let (pair, examined) = if fits {
        let small: Vec<u128> = big.iter().map(|w| w.to_u128().expect("checked above")).collect();
        best_pair(n, t, &small)?
    } else {
        best_pair(n, t, &big)?
    };
    let (abits, bbits) = pair.ok_or_else(|| Error::Domain("no nonempty cross-intersecting pair".into()))?;
    let num = |fam: u64| -> BigUint { BigUint::from_layers(&layer_masks(n), &big, fam) };
    let den = b.pow(2 * n);
    let value = Rat::new((num(abits) * num(bbits)).into(), den.into());
    let witness_a = bits_to_family(n, abits);
    let witness_b = bits_to_family(n, bbits);
    let mut iso = None;
    for r in 0..=(n - t) / 2 {
        if is_isomorphic_to_frankl(&witness_a, t, r)? && is_isomorphic_to_frankl(&witness_b, t, r)? {
            iso = Some(r);
            break;
        }
    }
    Ok(SearchResult {
        n,
        t,
        p: p.clone(),
        best_value: value,
        witness_a,
        witness_b,
        witness_isomorphic_to: iso,
        upsets_examined: examined,
    })
}

/// The optimum does not decrease from `[n]` to `[n+1]`.
pub fn verify_monotone_n(n: u32, t: u32, p: &Rat) -> Result<bool> {
    check_search_n(n + 1)?;
    Ok(max_product(n, t, p)?.best_value <= max_product(n + 1, t, p)?.best_value)
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permute_family(bits: u64, n: u32, perm: &[u32]) -> u64 {
    let mut out = 0u64;
    for x in 0..1u64 << n {
        if bits >> x & 1 == 1 {
            let y = (0..n).filter(|e| x >> e & 1 == 1).fold(0u64, |acc, e| acc | 1 << perm[e as usize]);
            out |= 1 << y;
        }
    }
    out
}

/// Some relabeling of `[n]` carries `A` onto `F_r^t(n)`.
pub fn is_isomorphic_to_frankl(a: &Family, t: u32, r: u32) -> Result<bool> {
    let n = a.n();
    if n > MAX_ISO_N {
        return Err(Error::Cap(format!("isomorphism search needs n ≤ {MAX_ISO_N}, got {n}")));
    }
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    if t + 2 * r > n {
        return Ok(false);
    }
    let target = family_to_bits(&frankl_family(n, t, r)?)?;
    let src = family_to_bits(a)?;
    if src.count_ones() != target.count_ones() {
        return Ok(false);
    }
    let mut perm: Vec<u32> = (0..n).collect();
    loop {
        if permute_family(src, n, &perm) == target {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn k_subsets(m: u32, k: u32) -> Vec<u64> {
    (0..1u64 << m).filter(|x| x.count_ones() == k).collect()
}

/// Connectivity of the bipartite graph on two copies of `C([t+2r-1], t+r-1)`,
/// with `X ~ Y` when `|X ∩ Y| = t - 1`.
pub fn kneser_link_connected(t: u32, r: u32) -> Result<bool> {
    if t < 2 {
        return Err(Error::Domain(format!("need t ≥ 2, got {t}")));
    }
    let m = t + 2 * r - 1;
    let k = t + r - 1;
    if m > 30 || binom(u64::from(m), u64::from(k)) > BigUint::from(MAX_LINK_SIDE) {
        return Err(Error::Cap(format!("C({m}, {k}) exceeds {MAX_LINK_SIDE}")));
    }
    let side = k_subsets(m, k);
    let c = side.len();
    // vertices 0..c on the left, c..2c on the right
    let mut seen = vec![false; 2 * c];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        let (x, other) = if v < c { (side[v], c) } else { (side[v - c], 0) };
        for (idx, y) in side.iter().enumerate() {
            let w = other + idx;
            if !seen[w] && (x & y).count_ones() == t - 1 {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(seen.iter().all(|s| *s))
}

/// If one shift carries both `A` and `B` onto `F_r^t(n)`, then `A = B ≅ F_r^t`.
pub fn uniqueness_witness_check(a: &Family, b: &Family, t: u32, r: u32, i: u32, j: u32) -> Result<bool> {
    a.same_ground(b)?;
    check_search_n(a.n())?;
    if t < 2 {
        return Err(Error::Witness(WitnessPrecondition::ThresholdBelowTwo));
    }
    let target = frankl_family(a.n(), t, r)?;
    if shift_ij(a, i, j)? != target {
        return Err(Error::Witness(WitnessPrecondition::ShiftImageA));
    }
    if shift_ij(b, i, j)? != target {
        return Err(Error::Witness(WitnessPrecondition::ShiftImageB));
    }
    if !is_cross_t_intersecting(a, b, t)? {
        return Err(Error::Witness(WitnessPrecondition::NotCrossIntersecting));
    }
    Ok(a == b && is_isomorphic_to_frankl(a, t, r)?)
}

/// Interior rational of each `F_r^t` optimality window with `t + 2r ≤ n`
/// and `p < 1/2`: the window midpoint.
pub fn interior_probabilities(n: u32, t: u32) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut r = 0u32;
    while t + 2 * r <= n {
        let (ri, ti) = (i64::from(r), i64::from(t));
        let lo = if r == 0 { Rat::zero() } else { Rat::new(ri.into(), (ti + 2 * ri - 1).into()) };
        let hi = Rat::new((ri + 1).into(), (ti + 2 * ri + 1).into());
        let mid = (lo + hi) / Rat::from_integer(2.into());
        if mid < Rat::new(1.into(), 2.into()) {
            out.push(mid);
        }
        r += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::shift::maximal_partner;

    fn brute_upset_count(n: u32) -> usize {
        let size = 1u32 << n;
        (0..1u64 << size)
            .filter(|&fam| {
                (0..size).all(|x| {
                    fam >> x & 1 == 0 || (0..n).all(|e| fam >> (x | 1 << e) & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn upset_counts() {
        let expected = [3usize, 6, 20, 168, 7581];
        for (n, want) in (1..=5).zip(expected) {
            assert_eq!(upset_bits(n).unwrap().count(), want);
        }
        for n in 1..=4 {
            assert_eq!(brute_upset_count(n), expected[n as usize - 1]);
        }
        assert!(upset_bits(7).is_err());
    }

    #[test]
    fn enumerated_families_are_distinct_upsets() {
        let all: Vec<Family> = enumerate_upsets(3).unwrap().collect();
        assert!(all.iter().all(Family::is_upset));
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 20);
    }

    #[test]
    fn partner_bits_match_family_partner() {
        let gx = threshold_masks(4, 2);
        for a in upset_bits(4).unwrap().filter(|a| *a != 0) {
            let fam = bits_to_family(4, a);
            let want = family_to_bits(&maximal_partner(&fam, 2).unwrap()).unwrap();
            assert_eq!(partner_bits(a, &gx), want);
        }
    }

    #[test]
    fn wide_multiplication() {
        let a = u128::MAX;
        let (hi, lo) = mul_wide(a, a);
        let big = BigUint::from(a) * BigUint::from(a);
        assert_eq!((BigUint::from(hi) << 128u32) + BigUint::from(lo), big);
        assert_eq!(mul_wide(3, 5), (0, 15));
    }

    #[test]
    fn search_examples() {
        let r = max_product(2, 1, &rat(1, 2)).unwrap();
        assert_eq!(r.best_value, rat(1, 4));
        assert_eq!(r.witness_a, Family::from_lists(2, &[&[1], &[1, 2]]).unwrap());
        assert_eq!(r.witness_a, r.witness_b);
        let r = max_product(3, 2, &rat(1, 3)).unwrap();
        assert_eq!(r.best_value, rat(1, 81));
        assert_eq!(r.witness_a, frankl_family(3, 2, 0).unwrap());
        assert_eq!(r.witness_isomorphic_to, Some(0));
        assert_eq!(max_product(4, 1, &rat(1, 2)).unwrap().best_value, rat(1, 4));
        assert!(max_product(7, 1, &rat(1, 2)).is_err());
        assert!(max_product(3, 4, &rat(1, 3)).is_err());
        assert!(max_product(3, 1, &rat(2, 3)).is_err());
    }

    #[test]
    fn monotone_examples() {
        assert!(verify_monotone_n(2, 1, &rat(1, 2)).unwrap());
        assert!(verify_monotone_n(3, 2, &rat(1, 3)).unwrap());
        assert!(verify_monotone_n(4, 1, &rat(2, 5)).unwrap());
        assert!(verify_monotone_n(6, 1, &rat(2, 5)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let a = Family::from_predicate(4, |m| m.intersection_size(&SubsetMask::new(4, [2, 3, 4]).unwrap()) >= 2).unwrap();
        assert!(is_isomorphic_to_frankl(&a, 1, 1).unwrap());
        let f = frankl_family(3, 2, 0).unwrap();
        assert!(is_isomorphic_to_frankl(&f, 2, 0).unwrap());
        assert!(!is_isomorphic_to_frankl(&f, 2, 1).unwrap());
        assert!(is_isomorphic_to_frankl(&Family::power_set(7).unwrap(), 1, 0).is_err());
    }

    #[test]
    fn link_graph_examples() {
        assert!(kneser_link_connected(2, 1).unwrap());
        assert!(kneser_link_connected(2, 0).unwrap());
        assert!(kneser_link_connected(3, 1).unwrap());
        assert!(kneser_link_connected(1, 1).is_err());
        assert!(kneser_link_connected(2, 9).is_err());
    }

    #[test]
    fn witness_check_examples() {
        let f = frankl_family(5, 2, 1).unwrap();
        assert!(uniqueness_witness_check(&f, &f, 2, 1, 1, 2).unwrap());
        let ground = SubsetMask::new(5, [1, 2, 3, 5]).unwrap();
        let g = Family::from_predicate(5, |m| m.intersection_size(&ground) >= 3).unwrap();
        assert!(uniqueness_witness_check(&g, &g, 2, 1, 4, 5).unwrap());
        assert_eq!(shift_ij(&g, 4, 5).unwrap(), f);
        assert_eq!(
            uniqueness_witness_check(&g, &g, 2, 1, 1, 2),
            Err(Error::Witness(WitnessPrecondition::ShiftImageA))
        );
        assert_eq!(
            uniqueness_witness_check(&f, &f, 1, 1, 1, 2),
            Err(Error::Witness(WitnessPrecondition::ThresholdBelowTwo))
        );
    }

    #[test]
    fn interior_points_lie_in_windows() {
        for t in 1..=3 {
            for p in interior_probabilities(5, t) {
                assert!(!crate::measure::optimal_r(t, &p).unwrap().is_empty());
            }
        }
        assert_eq!(interior_probabilities(5, 1), vec![rat(1, 4)]);
        assert_eq!(interior_probabilities(5, 2), vec![rat(1, 6), rat(11, 30)]);
    }
}
