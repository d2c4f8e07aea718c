//! File formats, report records and command bodies behind the `crossint` binary.
//!
//! Commands return their standard output together with an exit code so they
//! can be exercised without spawning a process.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crossint::certify::{self, ClaimId, ClaimReport, PPolicy, ParamPoint};
use crossint::family::lambda_family;
use crossint::measure::{count_walks_avoiding_line, mu_weight};
use crossint::rat::{check_open_unit, fraction_string, parse_rat};
use crossint::search::{max_product, MAX_SEARCH_N};
use crossint::shift::{maximal_partner, shift_ij, shift_to_fixpoint};
use crossint::walk::classify_walk;
use crossint::{Error, Family, Rat, SubsetMask};
use serde::Serialize;

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BAD_P: i32 = 3;
    pub const CAP: i32 = 4;
    pub const UNKNOWN_CLAIM: i32 = 5;
    pub const DOMAIN: i32 = 6;
}

/// Largest ground size accepted by family-file commands without `--unsafe-n`.
pub const SAFE_FAMILY_N: u32 = 16;
/// Largest up-set search ground size without `--unsafe-n`.
pub const SAFE_SEARCH_N: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn parse(line: usize, message: impl std::fmt::Display) -> Self {
        CliError::new(exit::PARSE, format!("line {line}: {message}"))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Probability(_) => exit::BAD_P,
            Error::Cap(_) => exit::CAP,
            Error::UnknownClaim(_) => exit::UNKNOWN_CLAIM,
            Error::ParseRat(_) => exit::PARSE,
            _ => exit::DOMAIN,
        };
        CliError::new(code, e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Standard output and exit status of a finished command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: exit::OK }
    }
}

/// Parses the family text format: a header `n <int>`, then one member per
/// line as strictly increasing comma-separated elements, `-` for the empty
/// set. Lines starting with `#` and blank lines are skipped.
pub fn parse_family(text: &str) -> CliResult<Family> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| CliError::new(exit::PARSE, "missing `n <int>` header"))?;
    let n: u32 = header
        .strip_prefix("n ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| CliError::parse(hline, format!("expected `n <int>`, found `{header}`")))?;
    let mut fam = Family::empty(n).map_err(|e| CliError::parse(hline, e))?;
    for (no, line) in lines {
        let elems: Vec<u32> = if line == "-" {
            Vec::new()
        } else {
            line.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| CliError::parse(no, format!("bad element `{x}`"))))
                .collect::<CliResult<_>>()?
        };
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::parse(no, "elements must be strictly increasing"));
        }
        let m = SubsetMask::new(n, elems).map_err(|e| CliError::parse(no, e))?;
        if !fam.insert(m).map_err(|e| CliError::parse(no, e))? {
            return Err(CliError::parse(no, "duplicate member"));
        }
    }
    Ok(fam)
}

/// Canonical text: header, then members in lexicographic order.
pub fn serialize_family(fam: &Family) -> String {
    let mut out = format!("n {}\n", fam.n());
    for m in fam.iter() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

pub fn read_family(path: &Path, unsafe_n: bool) -> CliResult<Family> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    let fam = parse_family(&text)?;
    if fam.n() > SAFE_FAMILY_N && !unsafe_n {
        return Err(CliError::new(
            exit::CAP,
            format!("n = {} exceeds {SAFE_FAMILY_N}; pass --unsafe-n to proceed", fam.n()),
        ));
    }
    Ok(fam)
}

/// Parses a probability; both syntax and range failures map to exit code 3.
pub fn parse_probability(s: &str) -> CliResult<Rat> {
    let p = parse_rat(s).map_err(|_| CliError::new(exit::BAD_P, format!("bad probability `{s}`")))?;
    check_open_unit(&p).map_err(|_| CliError::new(exit::BAD_P, format!("probability `{s}` not in (0,1)")))?;
    Ok(p)
}

pub fn cmd_weight(file: &Path, p: &str, unsafe_n: bool) -> CliResult<Output> {
    let fam = read_family(file, unsafe_n)?;
    let p = parse_probability(p)?;
    Ok(Output::ok(format!("{}\n", mu_weight(&fam, &p)?)))
}

pub fn cmd_lambda(file: &Path, unsafe_n: bool) -> CliResult<Output> {
    let fam = read_family(file, unsafe_n)?;
    Ok(Output::ok(format!("{}\n", lambda_family(&fam)?)))
}

/// One line `<member>\t<CLASS>` per member.
pub fn cmd_classify(file: &Path, ell: u32, unsafe_n: bool) -> CliResult<Output> {
    let fam = read_family(file, unsafe_n)?;
    let mut out = String::new();
    for m in fam.iter() {
        out.push_str(&format!("{m}\t{}\n", classify_walk(m, ell)?));
    }
    Ok(Output::ok(out))
}

/// A single `s_ij` when both indices are given, otherwise shifting to a fixpoint.
pub fn cmd_shift(file: &Path, ij: Option<(u32, u32)>, unsafe_n: bool) -> CliResult<Output> {
    let fam = read_family(file, unsafe_n)?;
    let shifted = match ij {
        Some((i, j)) => shift_ij(&fam, i, j)?,
        None => shift_to_fixpoint(&fam)?,
    };
    Ok(Output::ok(serialize_family(&shifted)))
}

pub fn cmd_partner(file: &Path, t: u32, unsafe_n: bool) -> CliResult<Output> {
    let fam = read_family(file, unsafe_n)?;
    Ok(Output::ok(serialize_family(&maximal_partner(&fam, t)?)))
}

pub fn cmd_walkcount(x0: u64, y0: u64, c: u64) -> CliResult<Output> {
    Ok(Output::ok(format!("{}\n", count_walks_avoiding_line(x0, y0, c)?)))
}

/// Prints the optimum (in lowest terms, integers bare) on the first line, then the search statistics. With a
/// witness directory, writes `A.fam` and `B.fam` there; otherwise appends both
/// families to the output after `# A` and `# B` markers.
pub fn cmd_search(n: u32, t: u32, p: &str, witness_dir: Option<&Path>, unsafe_n: bool) -> CliResult<Output> {
    if n > MAX_SEARCH_N {
        return Err(CliError::new(exit::CAP, format!("n = {n} exceeds the search limit {MAX_SEARCH_N}")));
    }
    if n > SAFE_SEARCH_N && !unsafe_n {
        return Err(CliError::new(exit::CAP, format!("n = {n} exceeds {SAFE_SEARCH_N}; pass --unsafe-n to proceed")));
    }
    let p = parse_probability(p)?;
    let res = max_product(n, t, &p)?;
    let mut out = format!("{}\n", res.best_value);
    out.push_str(&format!("upsets_examined {}\n", res.upsets_examined));
    match res.witness_isomorphic_to {
        Some(r) => out.push_str(&format!("witness_isomorphic_to F_{r}\n")),
        None => out.push_str("witness_isomorphic_to none\n"),
    }
    match witness_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| CliError::new(exit::DOMAIN, format!("{}: {e}", dir.display())))?;
            for (name, fam) in [("A.fam", &res.witness_a), ("B.fam", &res.witness_b)] {
                let path: PathBuf = dir.join(name);
                fs::write(&path, serialize_family(fam))
                    .map_err(|e| CliError::new(exit::DOMAIN, format!("{}: {e}", path.display())))?;
            }
        }
        None => {
            out.push_str("# A\n");
            out.push_str(&serialize_family(&res.witness_a));
            out.push_str("# B\n");
            out.push_str(&serialize_family(&res.witness_b));
        }
    }
    Ok(Output::ok(out))
}

pub const REPORT_SCHEMA: &str = "crossint.report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportHeader {
    pub schema: &'static str,
    pub version: u32,
}

/// One certified claim at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub verdict: String,
    pub elapsed_ms: u64,
    pub note: String,
}

impl ReportRecord {
    pub fn from_report(r: &ClaimReport, elapsed_ms: u64) -> Self {
        ReportRecord {
            claim_id: r.claim_id.to_string(),
            params: r.params.entries().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            lhs: fraction_string(&r.lhs),
            relation: r.relation.to_string(),
            rhs: fraction_string(&r.rhs),
            verdict: r.verdict.to_string(),
            elapsed_ms,
            note: r.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a ReportSummary,
}

/// Which claims `certify` runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimSelection {
    All,
    One(String),
}

/// Newline-delimited JSON: a header record, one record per report, and a
/// closing summary. `elapsed_ms` is 0 unless `timing` is set, which keeps
/// repeated runs byte-identical.
pub fn cmd_certify(selection: &ClaimSelection, ts: Option<&[u32]>, policy: &str, timing: bool) -> CliResult<Output> {
    let ids: Vec<ClaimId> = match selection {
        ClaimSelection::All => ClaimId::ALL.to_vec(),
        ClaimSelection::One(s) => vec![s.parse::<ClaimId>()?],
    };
    let policy: PPolicy = policy.parse().map_err(|e: Error| CliError::new(exit::PARSE, e.to_string()))?;
    if let Some(ts) = ts {
        if ts.is_empty() {
            return Err(CliError::new(exit::PARSE, "empty --t list"));
        }
    }
    let mut timed: Vec<(ClaimReport, u64)> = Vec::new();
    for id in ids {
        let points: Vec<ParamPoint> = match ts {
            None => certify::default_points(id),
            Some(ts) => ts.iter().flat_map(|&t| certify::points_at(id, t)).collect(),
        };
        for pt in points {
            let start = Instant::now();
            let report = certify::check_claim_with(id, &pt, &policy)?;
            let ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
            timed.push((report, ms));
        }
    }
    timed.sort_by(|(a, _), (b, _)| (a.claim_id.as_str(), &a.params).cmp(&(b.claim_id.as_str(), &b.params)));
    let header = ReportHeader { schema: REPORT_SCHEMA, version: REPORT_VERSION };
    let mut out = json_line(&header);
    for (r, ms) in &timed {
        out.push_str(&json_line(&ReportRecord::from_report(r, *ms)));
    }
    let pass = timed.iter().filter(|(r, _)| r.passed()).count();
    let summary = ReportSummary { total: timed.len(), pass, fail: timed.len() - pass };
    out.push_str(&json_line(&SummaryLine { summary: &summary }));
    let code = if summary.fail == 0 { exit::OK } else { exit::FAIL };
    Ok(Output { stdout: out, code })
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

/// Comma-separated `t` list, e.g. `28,29,200`.
pub fn parse_t_list(s: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| CliError::new(exit::PARSE, format!("bad t value `{x}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_round_trip() {
        let text = "n 4\n-\n1,2\n1,3,4\n2\n";
        let fam = parse_family(text).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(serialize_family(&fam), text);
    }

    #[test]
    fn family_comments_and_order() {
        let fam = parse_family("# header comment\nn 3\n2,3\n\n# member\n1\n").unwrap();
        assert_eq!(serialize_family(&fam), "n 3\n1\n2,3\n");
    }

    #[test]
    fn family_errors() {
        for bad in ["", "m 3\n1", "n 3\n1,1", "n 3\n2,1", "n 3\n1\n1", "n 3\n4", "n 3\nx", "n 0\n", "n 3\n1,,2"] {
            let err = parse_family(bad).unwrap_err();
            assert_eq!(err.code, exit::PARSE, "{bad:?}");
        }
    }

    #[test]
    fn probabilities() {
        assert!(parse_probability("1/3").is_ok());
        for bad in ["0", "1", "3/2", "x", "1/0", "-1/3"] {
            assert_eq!(parse_probability(bad).unwrap_err().code, exit::BAD_P, "{bad}");
        }
    }

    #[test]
    fn t_lists() {
        assert_eq!(parse_t_list("28, 29,200").unwrap(), vec![28, 29, 200]);
        assert!(parse_t_list("1,a").is_err());
    }

    proptest::proptest! {
        #[test]
        fn canonical_text_round_trips(n in 1u32..=8, picks in proptest::collection::vec(proptest::prelude::any::<bool>(), 256)) {
            let fam = Family::from_predicate(n, |m| picks[m.bits() as usize]).unwrap();
            let text = serialize_family(&fam);
            let back = parse_family(&text).unwrap();
            proptest::prop_assert_eq!(&back, &fam);
            proptest::prop_assert_eq!(serialize_family(&back), text);
        }
    }

    #[test]
    fn walkcount_example() {
        assert_eq!(cmd_walkcount(2, 4, 3).unwrap().stdout, "9\n");
        assert_eq!(cmd_walkcount(2, 1, 3).unwrap_err().code, exit::DOMAIN);
    }
}
