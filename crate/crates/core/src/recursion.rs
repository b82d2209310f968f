//! The degree recursion for planar counts, with its memo table.
//!
//! For `d ≥ 3` and an on-shell key,
//!
//! ```text
//! N_d(r,s,θ) = 2d N_d(r-2, s+1, θ)
//!   + Σ_{r1=0}^{r-3} Σ_{s1=0}^{s} Σ_{d1=1}^{d-1} C(r-3,r1) C(s,s1) d1² d2
//!       ( d2 B(d1,r1+1,s1; d2,r2-2,s2; θ) - d1 B(d1,r1,s1; d2,r2-1,s2; θ) )
//! ```
//!
//! with `d2 = d-d1`, `r2 = r-r1`, `s2 = s-s1`, and the two-component term
//! `B(d1,r1,s1; d2,r2,s2; θ) = Σ_{i=0}^{3} N_{d1}(r1,s1,i) N_{d2}(r2,s2,θ+3-i)`
//! coming from the diagonal class of the dual 3-space.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use num_traits::Zero;
use thiserror::Error;

use crate::cohomology::{base_n1, base_n2};
use crate::exact_arith::{binomial, BigCount};

/// Largest number of point conditions (four generic points span 3-space).
pub const MAX_POINTS: u32 = 3;
/// Largest surviving power of the dual hyperplane class.
pub const MAX_THETA: u32 = 3;

/// Index `(d, r, s, θ)` of one count.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CountKey {
    pub d: u32,
    pub r: u32,
    pub s: u32,
    pub theta: u32,
}

impl CountKey {
    pub fn new(d: u32, r: u32, s: u32, theta: u32) -> Self {
        Self { d, r, s, theta }
    }

    /// `r + 2s + θ = 3d + 2`.
    pub fn is_on_shell(&self) -> bool {
        u64::from(self.r) + 2 * u64::from(self.s) + u64::from(self.theta)
            == 3 * u64::from(self.d) + 2
    }

    /// Keys that can carry a nonzero count.
    pub fn is_admissible(&self) -> bool {
        self.d >= 1 && self.s <= MAX_POINTS && self.theta <= MAX_THETA && self.is_on_shell()
    }

    /// All admissible keys of degree `d`, sorted.
    pub fn on_shell(d: u32) -> Vec<CountKey> {
        let mut keys = Vec::new();
        for s in 0..=MAX_POINTS {
            for theta in 0..=MAX_THETA {
                let used = 2 * s + theta;
                if let Some(r) = (3 * d + 2).checked_sub(used) {
                    keys.push(CountKey::new(d, r, s, theta));
                }
            }
        }
        keys.sort();
        keys
    }
}

impl fmt::Display for CountKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.d, self.r, self.s, self.theta)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecursionError {
    #[error("memo integrity violation at {key}: stored {stored}, computed {computed}")]
    MemoConflict {
        key: CountKey,
        stored: BigCount,
        computed: BigCount,
    },
    #[error("degree must be at least 1 (key {0})")]
    ZeroDegree(CountKey),
}

/// Idempotent cache of computed counts.
///
/// Shared by reference; concurrent evaluators may race on the same key and
/// both insert, which is accepted as long as the values agree.
#[derive(Debug, Default)]
pub struct MemoTable {
    entries: RwLock<BTreeMap<CountKey, BigCount>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CountKey) -> Option<BigCount> {
        let found = self.entries.read().unwrap().get(key).cloned();
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Inserts `value`; re-inserting the same value is a no-op, a different
    /// value is an integrity error and leaves the table unchanged.
    pub fn insert(&self, key: CountKey, value: BigCount) -> Result<(), RecursionError> {
        let mut entries = self.entries.write().unwrap();
        match entries.get(&key) {
            Some(stored) if *stored != value => Err(RecursionError::MemoConflict {
                key,
                stored: stored.clone(),
                computed: value,
            }),
            Some(_) => Ok(()),
            None => {
                entries.insert(key, value);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    /// Sorted copy of every entry.
    pub fn snapshot(&self) -> Vec<(CountKey, BigCount)> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (*k, v.clone()))
            .collect()
    }
}

/// `N_d(r, s, θ)` for a key with `d ≥ 1`; off-shell keys give zero.
pub fn n_planar(key: CountKey, memo: &MemoTable) -> Result<BigCount, RecursionError> {
    if key.d == 0 {
        return Err(RecursionError::ZeroDegree(key));
    }
    eval(
        key.d,
        i64::from(key.r),
        i64::from(key.s),
        i64::from(key.theta),
        memo,
    )
}

/// Two-component term `B(d1,r1,s1; d2,r2,s2; θ)`.
pub fn b_term(
    (d1, r1, s1): (u32, u32, u32),
    (d2, r2, s2): (u32, u32, u32),
    theta: u32,
    memo: &MemoTable,
) -> Result<BigCount, RecursionError> {
    if d1 == 0 || d2 == 0 {
        let d = if d1 == 0 { (d1, r1, s1) } else { (d2, r2, s2) };
        return Err(RecursionError::ZeroDegree(CountKey::new(d.0, d.1, d.2, theta)));
    }
    b_eval(
        (d1, i64::from(r1), i64::from(s1)),
        (d2, i64::from(r2), i64::from(s2)),
        i64::from(theta),
        memo,
    )
}

// Signed indices: the recursion steps to r-2, r2-2 and r2-1, and any negative
// coordinate is an empty condition set.
fn eval(d: u32, r: i64, s: i64, theta: i64, memo: &MemoTable) -> Result<BigCount, RecursionError> {
    if r < 0 || s < 0 || theta < 0 {
        return Ok(BigCount::zero());
    }
    if r > i64::from(u32::MAX) {
        return Ok(BigCount::zero());
    }
    let key = CountKey::new(d, r as u32, s as u32, theta as u32);
    if !key.is_admissible() {
        return Ok(BigCount::zero());
    }
    if let Some(v) = memo.get(&key) {
        return Ok(v);
    }
    let value = match d {
        1 => base_n1(key.r, key.s, key.theta),
        2 => base_n2(key.r, key.s, key.theta),
        _ => recurse(d, r, s, theta, memo)?,
    };
    memo.insert(key, value.clone())?;
    Ok(value)
}

fn recurse(d: u32, r: i64, s: i64, theta: i64, memo: &MemoTable) -> Result<BigCount, RecursionError> {
    let mut total = BigCount::from(2 * d) * eval(d, r - 2, s + 1, theta, memo)?;
    if r < 3 {
        return Ok(total);
    }
    let rest = (r - 3) as u64;
    for r1 in 0..=r - 3 {
        let c_r = binomial(rest, r1);
        for s1 in 0..=s {
            let weight = &c_r * binomial(s as u64, s1);
            let (r2, s2) = (r - r1, s - s1);
            for d1 in 1..d {
                let d2 = d - d1;
                let split = b_eval((d1, r1 + 1, s1), (d2, r2 - 2, s2), theta, memo)?;
                let joined = b_eval((d1, r1, s1), (d2, r2 - 1, s2), theta, memo)?;
                let inner = BigCount::from(d2) * split - BigCount::from(d1) * joined;
                if inner.is_zero() {
                    continue;
                }
                let degree_weight = BigCount::from(u64::from(d1) * u64::from(d1) * u64::from(d2));
                total += &weight * degree_weight * inner;
            }
        }
    }
    Ok(total)
}

fn b_eval(
    (d1, r1, s1): (u32, i64, i64),
    (d2, r2, s2): (u32, i64, i64),
    theta: i64,
    memo: &MemoTable,
) -> Result<BigCount, RecursionError> {
    let mut sum = BigCount::zero();
    for i in 0..=i64::from(MAX_THETA) {
        let left = eval(d1, r1, s1, i, memo)?;
        if left.is_zero() {
            continue;
        }
        sum += left * eval(d2, r2, s2, theta + 3 - i, memo)?;
    }
    Ok(sum)
}
