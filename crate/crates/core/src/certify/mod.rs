//! Exact re-certification of the scalar inequalities behind the structure
//! proof, organised as a registry of named claims.
//!
//! Every claim is a list of [`Check`]s. Gating checks decide the verdict;
//! informational ones record related comparisons (for instance a literal
//! reading of a displayed constant) without affecting it.

mod bounds;
mod claims;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

pub use bounds::{
    check_p_window, coeffs_10, coeffs_21, e_series_bracket, f_bound, g_bound, h_bound, p_high, p_low, BoundContext,
    Coeffs10, Coeffs21, EEnclosure,
};

use crate::error::{Error, Result};
use crate::rat::{decimal_string, fraction_string, Rat};

macro_rules! claim_ids {
    ($($variant:ident => $name:literal, $threshold:literal;)*) => {
        /// Registered claim identifiers.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }

            /// Smallest `t` from which the claim is asserted.
            pub fn threshold(&self) -> u32 {
                match self {
                    $(ClaimId::$variant => $threshold,)*
                }
            }
        }
    };
}

claim_ids! {
    QtSandwich => "QT-SANDWICH", 1;
    UvOdd => "UV-ODD", 26;
    HatEmpty => "HAT-EMPTY", 110;
    LsHu => "LS-HU", 200;
    LsHv => "LS-HV", 200;
    MonoDiag => "MONO-DIAG", 10;
    MonoS1 => "MONO-S1", 10;
    MonoS0 => "MONO-S0", 10;
    G33 => "G33", 52;
    G32 => "G32", 51;
    G31 => "G31", 28;
    G20 => "G20", 42;
    L21C1 => "L21-C1", 42;
    L21C2 => "L21-C2", 23;
    L21C3 => "L21-C3", 23;
    L10C1 => "L10-C1", 26;
    L10C2 => "L10-C2", 20;
    L10C3 => "L10-C3", 16;
    ExtCmp => "EXT-CMP", 12;
    ExtCaseII => "EXT-CASEII", 180;
    A3Mono => "A3-MONO", 42;
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl ClaimId {
    /// Per-`s` thresholds for EXT-CMP.
    pub fn ext_cmp_threshold(s: u32) -> Option<u32> {
        match s {
            0 => Some(17),
            1 => Some(12),
            2 => Some(22),
            _ => None,
        }
    }

    /// `t` values checked when no grid is supplied.
    pub fn default_ts(&self, s: Option<u32>) -> Vec<u32> {
        let base = match (self, s) {
            (ClaimId::ExtCmp, Some(s)) => ClaimId::ext_cmp_threshold(s).unwrap_or(self.threshold()),
            _ => self.threshold(),
        };
        let mut ts = vec![base, base + 1, base + 10, base + 100];
        if base <= 200 {
            ts.push(200);
        }
        match self {
            ClaimId::LsHu => ts.push(500),
            ClaimId::MonoS1 | ClaimId::MonoS0 => ts.push(50),
            _ => {}
        }
        ts.sort_unstable();
        ts.dedup();
        ts
    }
}

/// Parameters of one claim evaluation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoint {
    pub t: u32,
    pub s: Option<u32>,
    pub s_prime: Option<u32>,
    pub p: Option<Rat>,
}

impl ParamPoint {
    pub fn at_t(t: u32) -> Self {
        ParamPoint { t, s: None, s_prime: None, p: None }
    }

    pub fn with_s(mut self, s: u32) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_s_prime(mut self, s_prime: u32) -> Self {
        self.s_prime = Some(s_prime);
        self
    }

    pub fn with_p(mut self, p: Rat) -> Self {
        self.p = Some(p);
        self
    }

    /// Name/value pairs in a fixed order, values as strings.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("t", self.t.to_string())];
        if let Some(s) = self.s {
            out.push(("s", s.to_string()));
        }
        if let Some(s) = self.s_prime {
            out.push(("s_prime", s.to_string()));
        }
        if let Some(p) = &self.p {
            out.push(("p", fraction_string(p)));
        }
        out
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Which values of `p` a claim is evaluated at when none is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PPolicy {
    /// `1/(t+1)` and `2/(t+3)`.
    Endpoints,
    /// Endpoints plus `k` equally spaced interior points.
    Grid(u32),
}

impl FromStr for PPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("endpoints") {
            return Ok(PPolicy::Endpoints);
        }
        s.strip_prefix("grid:")
            .and_then(|k| k.parse().ok())
            .map(PPolicy::Grid)
            .ok_or_else(|| Error::Domain(format!("unknown p policy `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(&self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    /// Signed slack; negative exactly when a strict or non-strict order fails.
    fn margin(&self, lhs: &Rat, rhs: &Rat) -> Rat {
        match self {
            Relation::Lt | Relation::Le => rhs - lhs,
            Relation::Gt | Relation::Ge => lhs - rhs,
            Relation::Eq => -(lhs - rhs).abs(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Role of a check in the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// The claim's stated comparison; reported as the record's lhs/rhs.
    Headline,
    /// A link of the supporting chain; must hold for a pass.
    Gating,
    /// Recorded only.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub lhs: Rat,
    pub rhs: Rat,
    pub relation: Relation,
    pub holds: bool,
    pub kind: CheckKind,
}

impl Check {
    pub fn gating(&self) -> bool {
        self.kind != CheckKind::Info
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub params: ParamPoint,
    pub lhs: Rat,
    pub rhs: Rat,
    pub relation: Relation,
    pub verdict: Verdict,
    pub note: String,
    pub checks: Vec<Check>,
}

impl ClaimReport {
    fn from_checks(claim_id: ClaimId, params: ParamPoint, checks: Vec<Check>) -> Self {
        let verdict = if checks.iter().filter(|c| c.gating()).all(|c| c.holds) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let headline = checks
            .iter()
            .find(|c| c.kind == CheckKind::Headline && !c.holds)
            .or_else(|| checks.iter().find(|c| c.gating() && !c.holds))
            .or_else(|| {
                checks
                    .iter()
                    .filter(|c| c.kind == CheckKind::Headline)
                    .min_by(|a, b| a.relation.margin(&a.lhs, &a.rhs).cmp(&b.relation.margin(&b.lhs, &b.rhs)))
            })
            .expect("every claim has a headline check");
        let gating = checks.iter().filter(|c| c.gating()).count();
        let failed: Vec<&str> = checks.iter().filter(|c| c.gating() && !c.holds).map(|c| c.label.as_str()).collect();
        let info_failed: Vec<&str> =
            checks.iter().filter(|c| !c.gating() && !c.holds).map(|c| c.label.as_str()).collect();
        let mut note = format!(
            "{}: {} {} {}",
            headline.label,
            decimal_string(&headline.lhs, 6),
            headline.relation,
            decimal_string(&headline.rhs, 6)
        );
        if failed.is_empty() {
            note.push_str(&format!("; {gating}/{gating} verdict checks hold"));
        } else {
            note.push_str(&format!("; {}/{gating} verdict checks fail: {}", failed.len(), failed.join(", ")));
        }
        if !info_failed.is_empty() {
            note.push_str(&format!("; informational, not holding: {}", info_failed.join(", ")));
        }
        ClaimReport {
            claim_id,
            params,
            lhs: headline.lhs.clone(),
            rhs: headline.rhs.clone(),
            relation: headline.relation,
            verdict,
            note,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// `t` values for [`certify_all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TGrid {
    /// Each claim at its own thresholds.
    Defaults,
    Explicit(Vec<u32>),
}

/// Evaluates one claim with the endpoint policy.
pub fn check_claim(id: ClaimId, point: &ParamPoint) -> Result<ClaimReport> {
    check_claim_with(id, point, &PPolicy::Endpoints)
}

pub fn check_claim_with(id: ClaimId, point: &ParamPoint, policy: &PPolicy) -> Result<ClaimReport> {
    check_claim_using(id, point, policy, &EEnclosure::default())
}

pub fn check_claim_using(id: ClaimId, point: &ParamPoint, policy: &PPolicy, e: &EEnclosure) -> Result<ClaimReport> {
    claims::check_domain(id, point)?;
    let checks = claims::evaluate(id, point, policy, e);
    Ok(ClaimReport::from_checks(id, point.clone(), checks))
}

/// Points of `id` at a given `t`, expanded over the claim's `s`/`s'` range
/// and restricted to its domain.
pub fn points_at(id: ClaimId, t: u32) -> Vec<ParamPoint> {
    let base = ParamPoint::at_t(t);
    let points: Vec<ParamPoint> = match id {
        ClaimId::MonoDiag => claims::mono_diag_pairs()
            .into_iter()
            .map(|(s, sp)| base.clone().with_s(s).with_s_prime(sp))
            .collect(),
        ClaimId::ExtCmp => (0..=2).map(|s| base.clone().with_s(s)).collect(),
        _ => vec![base],
    };
    points.into_iter().filter(|pt| claims::check_domain(id, pt).is_ok()).collect()
}

/// Points of `id` on its default grid.
pub fn default_points(id: ClaimId) -> Vec<ParamPoint> {
    match id {
        ClaimId::ExtCmp => (0..=2)
            .flat_map(|s| id.default_ts(Some(s)).into_iter().map(move |t| ParamPoint::at_t(t).with_s(s)))
            .collect(),
        _ => id.default_ts(None).into_iter().flat_map(|t| points_at(id, t)).collect(),
    }
}

/// Every registered claim over the grid. Points outside a claim's domain are
/// skipped; failing verdicts are recorded, never raised.
pub fn certify_all(grid: &TGrid, policy: &PPolicy) -> Vec<ClaimReport> {
    certify_claims(ClaimId::ALL, grid, policy)
}

pub fn certify_claims(ids: &[ClaimId], grid: &TGrid, policy: &PPolicy) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for &id in ids {
        let points = match grid {
            TGrid::Defaults => default_points(id),
            TGrid::Explicit(ts) => ts.iter().flat_map(|&t| points_at(id, t)).collect(),
        };
        for pt in points {
            if let Ok(r) = check_claim_with(id, &pt, policy) {
                out.push(r);
            }
        }
    }
    sort_reports(&mut out);
    out
}

/// Orders by claim id string, then parameters.
pub fn sort_reports(reports: &mut [ClaimReport]) {
    reports.sort_by(|a, b| (a.claim_id.as_str(), &a.params).cmp(&(b.claim_id.as_str(), &b.params)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn ids_round_trip() {
        assert_eq!(ClaimId::ALL.len(), 21);
        for id in ClaimId::ALL {
            assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), *id);
        }
        assert_eq!("ls-hu".parse::<ClaimId>().unwrap(), ClaimId::LsHu);
        assert!(matches!("NOPE".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn policies_parse() {
        assert_eq!("endpoints".parse::<PPolicy>().unwrap(), PPolicy::Endpoints);
        assert_eq!("grid:3".parse::<PPolicy>().unwrap(), PPolicy::Grid(3));
        assert!("grid:x".parse::<PPolicy>().is_err());
    }

    #[test]
    fn default_grids() {
        assert_eq!(ClaimId::G31.default_ts(None), vec![28, 29, 38, 128, 200]);
        assert_eq!(ClaimId::LsHu.default_ts(None), vec![200, 201, 210, 300, 500]);
        assert_eq!(ClaimId::ExtCmp.default_ts(Some(0)), vec![17, 18, 27, 117, 200]);
        assert_eq!(default_points(ClaimId::MonoDiag).len(), 35 * 5);
    }

    #[test]
    fn spec_examples() {
        let r = check_claim(ClaimId::LsHu, &ParamPoint::at_t(200)).unwrap();
        assert!(r.passed(), "{}", r.note);
        assert!(r.lhs < rat(2, 25));
        let r = check_claim(ClaimId::MonoDiag, &ParamPoint::at_t(10).with_s(3).with_s_prime(3)).unwrap();
        assert!(r.passed(), "{}", r.note);
        assert!(r.lhs < rat(22, 25));
        let r = check_claim(ClaimId::QtSandwich, &ParamPoint::at_t(200).with_p(rat(2, 203))).unwrap();
        assert!(r.passed(), "{}", r.note);
    }

    #[test]
    fn below_threshold_fails_without_error() {
        let r = check_claim(ClaimId::G31, &ParamPoint::at_t(10)).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let all = certify_claims(&[ClaimId::G31], &TGrid::Explicit(vec![2, 10]), &PPolicy::Endpoints);
        assert_eq!(all.len(), 1);
        assert!(certify_claims(&[ClaimId::G31], &TGrid::Explicit(vec![1, 2]), &PPolicy::Endpoints).is_empty());
    }

    #[test]
    fn domain_errors() {
        assert!(check_claim(ClaimId::LsHu, &ParamPoint::at_t(200).with_p(rat(1, 201))).is_err());
        assert!(check_claim(ClaimId::HatEmpty, &ParamPoint::at_t(110).with_p(rat(1, 2))).is_err());
        assert!(check_claim(ClaimId::MonoDiag, &ParamPoint::at_t(10)).is_err());
        assert!(check_claim(ClaimId::MonoDiag, &ParamPoint::at_t(10).with_s(2).with_s_prime(2)).is_err());
        assert!(check_claim(ClaimId::ExtCmp, &ParamPoint::at_t(20).with_s(3)).is_err());
        assert!(check_claim(ClaimId::G20, &ParamPoint::at_t(42).with_s(1)).is_err());
        assert!(check_claim(ClaimId::UvOdd, &ParamPoint::at_t(26).with_p(rat(1, 27))).is_err());
        assert!(check_claim(ClaimId::QtSandwich, &ParamPoint::at_t(0)).is_err());
    }

    #[test]
    fn reports_sorted() {
        let all = certify_claims(
            &[ClaimId::G20, ClaimId::A3Mono, ClaimId::ExtCmp],
            &TGrid::Explicit(vec![50, 45]),
            &PPolicy::Endpoints,
        );
        let keys: Vec<(String, u32)> = all.iter().map(|r| (r.claim_id.to_string(), r.params.t)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(all.len(), 2 + 2 + 6);
    }
}
