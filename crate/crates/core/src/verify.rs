//! The verification suite behind `planar-count verify`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::cohomology::{base_n1, base_n2};
use crate::exact_arith::BigCount;
use crate::fixtures::{DEGREE_ONE, DEGREE_TWO, NODAL, PLANAR};
use crate::oracle::{cross_check, OracleError};
use crate::recursion::{n_planar, CountKey, MemoTable, RecursionError, MAX_POINTS, MAX_THETA};

pub const DEFAULT_MAX_D: u32 = 6;
/// Highest degree the plane-curve comparison runs to.
pub const ORACLE_MAX_D: u32 = 8;
/// Highest degree of the vanishing sweep.
pub const SWEEP_MAX_D: u32 = 5;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("max-d must be at least 2, got {0}")]
    RangeTooSmall(u32),
    #[error(transparent)]
    Recursion(#[from] RecursionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub summary: String,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        Self { name, summary, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_d: u32,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let tag = if check.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}: {}", check.name, check.summary)?;
            for failure in &check.failures {
                writeln!(f, "    {failure}")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            writeln!(f, "all {} checks passed (max-d {})", self.checks.len(), self.max_d)
        } else {
            writeln!(f, "{failed} of {} checks failed (max-d {})", self.checks.len(), self.max_d)
        }
    }
}

fn mismatch(label: impl fmt::Display, got: &BigCount, want: impl fmt::Display) -> String {
    format!("{label}: computed {got}, expected {want}")
}

fn base_tables() -> CheckOutcome {
    let mut failures = Vec::new();
    for &(r, s, t, want) in &DEGREE_ONE {
        let got = base_n1(r, s, t);
        if got != BigCount::from(want) {
            failures.push(mismatch(format_args!("N_1({r},{s},{t})"), &got, want));
        }
    }
    for &(r, s, t, want) in &DEGREE_TWO {
        let got = base_n2(r, s, t);
        if got != BigCount::from(want) {
            failures.push(mismatch(format_args!("N_2({r},{s},{t})"), &got, want));
        }
    }
    let listed = |table: &[(u32, u32, u32, u64)], r, s, t| {
        table.iter().any(|&(a, b, c, _)| (a, b, c) == (r, s, t))
    };
    let mut swept = 0;
    for r in 0..=10 {
        for s in 0..=10 {
            for t in 0..=10 {
                swept += 1;
                if !listed(&DEGREE_ONE, r, s, t) && !base_n1(r, s, t).is_zero() {
                    failures.push(format!("N_1({r},{s},{t}) should vanish"));
                }
                if !listed(&DEGREE_TWO, r, s, t) && !base_n2(r, s, t).is_zero() {
                    failures.push(format!("N_2({r},{s},{t}) should vanish"));
                }
            }
        }
    }
    let summary = format!(
        "{} listed base values, {swept} tuples per ring zero elsewhere",
        DEGREE_ONE.len() + DEGREE_TWO.len()
    );
    CheckOutcome::new("base-tables", summary, failures)
}

fn planar_table(max_d: u32, memo: &MemoTable) -> Result<CheckOutcome, VerifyError> {
    let mut failures = Vec::new();
    let mut checked = Vec::new();
    for &(d, r, s, want) in PLANAR.iter().filter(|row| row.0 <= max_d) {
        let key = CountKey::new(d, r, s, 0);
        let got = n_planar(key, memo)?;
        if got != BigCount::from(want) {
            failures.push(mismatch(key, &got, want));
        }
        checked.push(format!("N_{d}={got}"));
    }
    let summary = if checked.is_empty() {
        "no tabulated degree within range".to_string()
    } else {
        checked.join(", ")
    };
    Ok(CheckOutcome::new("planar-counts", summary, failures))
}

fn oracle(max_d: u32, memo: &MemoTable) -> Result<CheckOutcome, VerifyError> {
    let top = max_d.min(ORACLE_MAX_D);
    let report = cross_check(top, memo)?;
    let failures = report
        .rows
        .iter()
        .filter(|row| !row.matches())
        .map(|row| format!("d={}: planar {} vs plane count {}", row.d, row.planar, row.oracle))
        .collect();
    let summary = format!("N_d(3d-4,3,0) equals the plane-curve count for 2 <= d <= {top}");
    Ok(CheckOutcome::new("plane-oracle", summary, failures))
}

fn nodal_identity(max_d: u32, memo: &MemoTable) -> Result<CheckOutcome, VerifyError> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for fx in NODAL.iter().filter(|fx| fx.d <= max_d) {
        let key = CountKey::new(fx.d, fx.r, fx.s, 0);
        let got = n_planar(key, memo)?;
        let want = BigCount::from(fx.nodal) - BigCount::from(fx.reducible);
        if got != want {
            failures.push(mismatch(
                format_args!("{key} (delta {})", fx.delta),
                &got,
                format_args!("{} - {} = {want}", fx.nodal, fx.reducible),
            ));
        }
        checked += 1;
    }
    let summary = format!("planar = nodal - reducible on {checked} tabulated degrees");
    Ok(CheckOutcome::new("nodal-identity", summary, failures))
}

fn vanishing(max_d: u32, memo: &MemoTable) -> Result<CheckOutcome, VerifyError> {
    let top = max_d.min(SWEEP_MAX_D);
    let mut failures = Vec::new();
    let mut swept = 0;
    for d in 1..=top {
        for r in 0..=20 {
            for s in 0..=MAX_POINTS + 2 {
                for t in 0..=MAX_THETA + 2 {
                    let key = CountKey::new(d, r, s, t);
                    if key.is_admissible() {
                        continue;
                    }
                    swept += 1;
                    let got = n_planar(key, memo)?;
                    if !got.is_zero() {
                        failures.push(format!("{key}: computed {got}, expected 0"));
                    }
                }
            }
        }
    }
    let summary = format!("{swept} inadmissible keys with d <= {top} all vanish");
    Ok(CheckOutcome::new("vanishing", summary, failures))
}

/// Runs every check in order against `memo`.
pub fn run(max_d: u32, memo: &MemoTable) -> Result<VerifyReport, VerifyError> {
    if max_d < 2 {
        return Err(VerifyError::RangeTooSmall(max_d));
    }
    let checks = vec![
        base_tables(),
        planar_table(max_d, memo)?,
        oracle(max_d, memo)?,
        nodal_identity(max_d, memo)?,
        vanishing(max_d, memo)?,
    ];
    Ok(VerifyReport { max_d, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let memo = MemoTable::new();
        let report = run(DEFAULT_MAX_D, &memo).unwrap();
        assert_eq!(report.checks.len(), 5);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn short_range_rejected() {
        assert!(matches!(run(1, &MemoTable::new()), Err(VerifyError::RangeTooSmall(1))));
    }

    #[test]
    fn corrupted_memo_is_reported() {
        let memo = MemoTable::new();
        memo.insert(CountKey::new(4, 14, 0, 0), BigCount::from(1)).unwrap();
        let report = run(4, &memo).unwrap();
        assert!(!report.passed());
        let text = report.to_string();
        assert!(text.contains("[FAIL] planar-counts"));
        assert!(text.contains("4,14,0,0"));
    }

    #[test]
    fn deterministic() {
        let a = run(4, &MemoTable::new()).unwrap().to_string();
        let b = run(4, &MemoTable::new()).unwrap().to_string();
        assert_eq!(a, b);
    }
}
