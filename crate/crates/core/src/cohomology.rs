//! Truncated bivariate quotient rings `Z[λ, a] / (fiber relation, a⁴)` and the
//! degree 1 and degree 2 counts read off from them.
//!
//! Both rings are projective bundles over the dual projective 3-space. The
//! base contributes `a` with `a⁴ = 0`; the fiber contributes `λ` subject to a
//! monic relation of degree `m` in `λ`. A class is stored reduced, as an
//! `m × 4` grid of coefficients of `λ^i a^j`, and intersection numbers are the
//! coefficient of the top monomial `λ^(m-1) a³`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::exact_arith::BigCount;

/// Highest surviving power of `a`.
pub const BASE_TOP: usize = 3;

type Row = [BigCount; BASE_TOP + 1];

fn zero_row() -> Row {
    std::array::from_fn(|_| BigCount::zero())
}

/// A reduced class: `coeffs[i][j]` is the coefficient of `λ^i a^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    coeffs: Vec<Row>,
}

impl RingElement {
    pub fn zero(fiber_degree: usize) -> Self {
        Self {
            coeffs: (0..fiber_degree).map(|_| zero_row()).collect(),
        }
    }

    pub fn one(fiber_degree: usize) -> Self {
        let mut e = Self::zero(fiber_degree);
        e.coeffs[0][0] = BigCount::one();
        e
    }

    pub fn fiber_degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `λ^i a^j`; zero outside the stored grid.
    pub fn coeff(&self, i: usize, j: usize) -> BigCount {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigCount::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Nonzero terms as `(i, j, coefficient)`, in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigCount)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }
}

impl std::ops::Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        assert_eq!(self.fiber_degree(), rhs.fiber_degree(), "elements of different rings");
        let mut out = self.clone();
        for (row, other) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            for (c, o) in row.iter_mut().zip(other) {
                *c += o;
            }
        }
        out
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let bare = i == 0 && j == 0;
            if !mag.is_one() || bare {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("a")?,
                _ => write!(f, "a^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One of the two fixed projective-bundle cohomology rings.
#[derive(Clone, Debug)]
pub struct RingSpec {
    name: &'static str,
    fiber_degree: usize,
    /// `relation[t - 1]` is `c_t` in `λ^m = -(c_1 λ^(m-1) a + c_2 λ^(m-2) a² + ...)`.
    relation: Vec<BigCount>,
    line_cycle: RingElement,
    point_cycle: RingElement,
}

impl RingSpec {
    fn new(name: &'static str, fiber_degree: usize, leading: &[i64], line_a_coeff: i64) -> Self {
        // Slots past a³ multiply into a⁴ = 0 and are kept only for shape.
        let relation = (0..fiber_degree)
            .map(|t| BigCount::from(leading.get(t).copied().unwrap_or(0)))
            .collect();
        let mut spec = Self {
            name,
            fiber_degree,
            relation,
            line_cycle: RingElement::zero(fiber_degree),
            point_cycle: RingElement::zero(fiber_degree),
        };
        spec.line_cycle = spec.element(&[(1, 0, 1), (0, 1, line_a_coeff)]);
        spec.point_cycle = spec.element(&[(1, 1, 1)]);
        spec
    }

    /// `H*(P(γ*))` for the tautological rank-3 bundle: lines in a plane.
    /// Relation `λ³ + λ²a + λa² + a³`, line condition `λ + a`, point condition `λa`.
    pub fn lines() -> &'static RingSpec {
        static RING: OnceLock<RingSpec> = OnceLock::new();
        RING.get_or_init(|| Self::new("lines", 3, &[1, 1, 1], 1))
    }

    /// `H*(P(Sym² γ*))`: conics in a plane.
    /// Relation `λ⁶ + 4λ⁵a + 10λ⁴a² + 20λ³a³`, line condition `λ + 2a`,
    /// point condition `λa`.
    pub fn conics() -> &'static RingSpec {
        static RING: OnceLock<RingSpec> = OnceLock::new();
        RING.get_or_init(|| Self::new("conics", 6, &[4, 10, 20], 2))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn fiber_degree(&self) -> usize {
        self.fiber_degree
    }

    pub fn relation(&self) -> &[BigCount] {
        &self.relation
    }

    /// The top monomial `(λ-degree, a-degree)`.
    pub fn top_monomial(&self) -> (usize, usize) {
        (self.fiber_degree - 1, BASE_TOP)
    }

    /// Class of "meets a generic line".
    pub fn line_cycle(&self) -> &RingElement {
        &self.line_cycle
    }

    /// Class of "passes through a generic point".
    pub fn point_cycle(&self) -> &RingElement {
        &self.point_cycle
    }

    /// The hyperplane class `a` of the base.
    pub fn hyperplane(&self) -> RingElement {
        self.element(&[(0, 1, 1)])
    }

    pub fn lambda(&self) -> RingElement {
        self.element(&[(1, 0, 1)])
    }

    /// Builds the reduced class of `Σ c λ^i a^j` from arbitrary (possibly
    /// unreduced) terms. Repeated `(i, j)` pairs accumulate.
    pub fn element(&self, terms: &[(usize, usize, i64)]) -> RingElement {
        let rows = terms
            .iter()
            .map(|&(i, _, _)| i + 1)
            .max()
            .unwrap_or(0)
            .max(self.fiber_degree);
        let mut free: Vec<Row> = (0..rows).map(|_| zero_row()).collect();
        for &(i, j, c) in terms {
            if j <= BASE_TOP {
                free[i][j] += c;
            }
        }
        self.reduce(free)
    }

    /// Eliminates `λ`-powers `≥ m` from the highest down, truncating at `a⁴`.
    fn reduce(&self, mut free: Vec<Row>) -> RingElement {
        let m = self.fiber_degree;
        for i in (m..free.len()).rev() {
            for j in 0..=BASE_TOP {
                let c = std::mem::take(&mut free[i][j]);
                if c.is_zero() {
                    continue;
                }
                // λ^i a^j = λ^(i-m) a^j · λ^m
                for (t, rel) in (1..=BASE_TOP - j).zip(&self.relation) {
                    if !rel.is_zero() {
                        free[i - t][j + t] -= &c * rel;
                    }
                }
            }
        }
        free.truncate(m);
        free.resize_with(m, zero_row);
        RingElement { coeffs: free }
    }

    fn check(&self, x: &RingElement) {
        assert_eq!(
            x.fiber_degree(),
            self.fiber_degree,
            "element does not belong to the {} ring",
            self.name
        );
    }

    /// Reduced product.
    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.check(x);
        self.check(y);
        let m = self.fiber_degree;
        let mut free: Vec<Row> = (0..2 * m - 1).map(|_| zero_row()).collect();
        for (i1, j1, c1) in x.terms() {
            for (i2, j2, c2) in y.terms() {
                if j1 + j2 <= BASE_TOP {
                    free[i1 + i2][j1 + j2] += c1 * c2;
                }
            }
        }
        self.reduce(free)
    }

    /// Reduced `n`-th power; `x⁰ = 1`.
    pub fn pow(&self, x: &RingElement, mut n: u32) -> RingElement {
        self.check(x);
        let mut acc = RingElement::one(self.fiber_degree);
        let mut base = x.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Coefficient of the top monomial `λ^(m-1) a³`.
    pub fn top_coefficient(&self, x: &RingElement) -> BigCount {
        self.check(x);
        let (i, j) = self.top_monomial();
        x.coeff(i, j)
    }

    /// `⟨(line)^r (point)^s a^θ⟩`, zero unless `r + 2s + θ` is the ring's dimension.
    pub fn intersection(&self, r: u32, s: u32, theta: u32) -> BigCount {
        let lines = self.pow(&self.line_cycle, r);
        let points = self.pow(&self.point_cycle, s);
        let hyper = self.pow(&self.hyperplane(), theta);
        let prod = self.mul(&self.mul(&lines, &points), &hyper);
        self.top_coefficient(&prod)
    }
}

pub fn ring_mul(x: &RingElement, y: &RingElement, spec: &RingSpec) -> RingElement {
    spec.mul(x, y)
}

pub fn ring_pow(x: &RingElement, n: u32, spec: &RingSpec) -> RingElement {
    spec.pow(x, n)
}

pub fn top_coefficient(x: &RingElement, spec: &RingSpec) -> BigCount {
    spec.top_coefficient(x)
}

/// Degree 1 planar count: lines meeting `r` lines and `s` points, weighted by `a^θ`.
pub fn base_n1(r: u32, s: u32, theta: u32) -> BigCount {
    RingSpec::lines().intersection(r, s, theta)
}

/// Degree 2 planar count: conics meeting `r` lines and `s` points, weighted by `a^θ`.
pub fn base_n2(r: u32, s: u32, theta: u32) -> BigCount {
    RingSpec::conics().intersection(r, s, theta)
}
