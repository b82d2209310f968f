//! Kontsevich's recursion for rational plane curves through `3d - 1` points.
//!
//! Three generic points in 3-space span a unique plane, so the planar count
//! `N_d(3d-4, 3, 0)` must agree with the plane count. This module shares no
//! code with the planar recursion apart from `binomial`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_arith::{binomial, BigCount};
use crate::recursion::{n_planar, CountKey, MemoTable, RecursionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree must be at least 1, got {0}")]
    ZeroDegree(u32),
    #[error("cross-check needs d_max >= 2, got {0}")]
    RangeTooSmall(u32),
    #[error(transparent)]
    Recursion(#[from] RecursionError),
}

/// Memoized plane-curve counts, independent of the planar memo.
#[derive(Debug, Default)]
pub struct KontsevichOracle {
    known: HashMap<u32, BigCount>,
}

impl KontsevichOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of rational degree-`d` plane curves through `3d - 1` generic points.
    pub fn count(&mut self, d: u32) -> Result<BigCount, OracleError> {
        if d == 0 {
            return Err(OracleError::ZeroDegree(d));
        }
        for e in 1..=d {
            if !self.known.contains_key(&e) {
                let v = self.step(e);
                self.known.insert(e, v);
            }
        }
        Ok(self.known[&d].clone())
    }

    // Needs every lower degree already present.
    fn step(&self, d: u32) -> BigCount {
        if d == 1 {
            return BigCount::one();
        }
        let n = u64::from(3 * d - 4);
        let mut total = BigCount::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            let (a, b) = (u64::from(d1), u64::from(d2));
            let choose = BigCount::from(b) * binomial(n, i64::from(3 * d1) - 2)
                - BigCount::from(a) * binomial(n, i64::from(3 * d1) - 1);
            total += &self.known[&d1] * &self.known[&d2] * BigCount::from(a * a * b) * choose;
        }
        total
    }
}

/// Convenience wrapper over a throwaway oracle.
pub fn kontsevich_p2(d: u32) -> Result<BigCount, OracleError> {
    KontsevichOracle::new().count(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckRow {
    pub d: u32,
    pub planar: BigCount,
    pub oracle: BigCount,
}

impl CrossCheckRow {
    pub fn matches(&self) -> bool {
        self.planar == self.oracle
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub rows: Vec<CrossCheckRow>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CrossCheckRow::matches)
    }
}

/// Compares `N_d(3d-4, 3, 0)` with the plane count for `2 ≤ d ≤ d_max`.
/// Mismatches are recorded in the report, not raised.
pub fn cross_check(d_max: u32, memo: &MemoTable) -> Result<CrossCheckReport, OracleError> {
    if d_max < 2 {
        return Err(OracleError::RangeTooSmall(d_max));
    }
    let mut oracle = KontsevichOracle::new();
    let mut rows = Vec::new();
    for d in 2..=d_max {
        let planar = n_planar(CountKey::new(d, 3 * d - 4, 3, 0), memo)?;
        let oracle = oracle.count(d)?;
        rows.push(CrossCheckRow { d, planar, oracle });
    }
    Ok(CrossCheckReport { rows })
}
