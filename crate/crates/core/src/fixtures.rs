//! Published reference values, kept verbatim. Nothing here is computed.

/// Degree 1 values `(r, s, θ, count)`; every other tuple is zero.
pub const DEGREE_ONE: [(u32, u32, u32, u64); 10] = [
    (1, 2, 0, 0),
    (3, 1, 0, 0),
    (5, 0, 0, 0),
    (0, 2, 1, 1),
    (2, 1, 1, 1),
    (4, 0, 1, 2),
    (1, 1, 2, 1),
    (3, 0, 2, 2),
    (0, 1, 3, 0),
    (2, 0, 3, 1),
];

/// Degree 2 values `(r, s, θ, count)`; every other tuple is zero.
pub const DEGREE_TWO: [(u32, u32, u32, u64); 15] = [
    (8, 0, 0, 92),
    (6, 1, 0, 18),
    (4, 2, 0, 4),
    (2, 3, 0, 1),
    (7, 0, 1, 34),
    (5, 1, 1, 6),
    (3, 2, 1, 1),
    (1, 3, 1, 0),
    (6, 0, 2, 8),
    (4, 1, 2, 1),
    (2, 2, 2, 0),
    (0, 3, 2, 0),
    (5, 0, 3, 1),
    (3, 1, 3, 0),
    (1, 2, 3, 0),
];

/// Planar counts through lines only, `(d, r, s, count)` with `θ = 0`.
pub const PLANAR: [(u32, u32, u32, u64); 4] = [
    (3, 11, 0, 12960),
    (4, 14, 0, 3727920),
    (5, 17, 0, 1979329280),
    (6, 20, 0, 1763519463360),
];

/// One row of the nodal comparison: planar curves with `δ = (d-1)(d-2)/2`
/// nodes, and the reducible ones among them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodalFixture {
    pub d: u32,
    pub r: u32,
    pub s: u32,
    pub delta: u32,
    pub nodal: u64,
    pub reducible: u64,
}

pub const NODAL: [NodalFixture; 4] = [
    NodalFixture { d: 3, r: 11, s: 0, delta: 1, nodal: 12960, reducible: 0 },
    NodalFixture { d: 4, r: 14, s: 0, delta: 3, nodal: 4057340, reducible: 329420 },
    NodalFixture { d: 5, r: 17, s: 0, delta: 6, nodal: 2487128120, reducible: 507798840 },
    NodalFixture { d: 6, r: 20, s: 0, delta: 10, nodal: 2681467886460, reducible: 917948423100 },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_on_shell() {
        assert!(DEGREE_ONE.iter().all(|&(r, s, t, _)| r + 2 * s + t == 5));
        assert!(DEGREE_TWO.iter().all(|&(r, s, t, _)| r + 2 * s + t == 8));
        assert!(PLANAR.iter().all(|&(d, r, s, _)| r + 2 * s == 3 * d + 2));
        assert!(NODAL.iter().all(|f| 2 * f.delta == (f.d - 1) * (f.d - 2)));
    }
}
