//! Exact integer arithmetic shared by every counting routine.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An exact, arbitrary-precision signed count.
///
/// `Display` gives plain decimal with an optional leading `-` and
/// `str::parse` reads the same format back.
pub type BigCount = BigInt;

/// Exact binomial coefficient `C(n, k)`.
///
/// Total on `k`: anything outside `0..=n` is zero. Evaluated multiplicatively
/// so every intermediate value is itself a binomial coefficient.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    for i in 0..k {
        // acc == C(n, i) here, so the division is exact
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Parses a decimal count: digits with an optional leading `-`, nothing else.
pub fn parse_count(text: &str) -> Option<BigCount> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}
