//! Exact counts of rational planar curves in projective 3-space.
//!
//! `N_d(r, s, θ)` is the number of rational degree-`d` curves lying in some
//! plane, meeting `r` generic lines and `s` generic points, paired with the
//! `θ`-th power of the hyperplane class on the dual 3-space. Degrees 1 and 2
//! come from cohomology rings of projective bundles ([`cohomology`]); higher
//! degrees from a WDVV-type recursion ([`recursion`]), cross-checked against
//! the plane-curve counts of [`oracle`].

pub mod cache;
pub mod cohomology;
pub mod exact_arith;
pub mod fixtures;
pub mod oracle;
pub mod output;
pub mod recursion;
pub mod verify;

pub use cohomology::{base_n1, base_n2, RingElement, RingSpec};
pub use exact_arith::{binomial, BigCount};
pub use oracle::{cross_check, kontsevich_p2, KontsevichOracle};
pub use recursion::{b_term, n_planar, CountKey, MemoTable, RecursionError};
