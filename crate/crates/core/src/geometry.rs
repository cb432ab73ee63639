//! The real surface `c(n) = (a^n + b^n)^(1/n)`, the triangle with sides
//! `(a, b, c(n))`, and integer points on the arc `a < c < a * 2^(1/n)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{int_nth_root, pow_big, Natural};

/// Tolerance on `n` for calling a triangle right-angled.
pub const RIGHT_EXPONENT_TOLERANCE: f64 = 1e-12;
/// Slack, in degrees, when cross-checking a shape against its largest angle.
pub const ANGLE_TOLERANCE_DEG: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleShape {
    Acute,
    Right,
    Obtuse,
    Degenerate,
}

impl TriangleShape {
    pub fn as_str(&self) -> &'static str {
        match self {
            TriangleShape::Acute => "acute",
            TriangleShape::Right => "right",
            TriangleShape::Obtuse => "obtuse",
            TriangleShape::Degenerate => "degenerate",
        }
    }
}

/// A point of the space S: `b <= a < c`, `n > 2`, `c = c(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SPoint {
    a: f64,
    b: f64,
    n: f64,
    c: f64,
}

impl SPoint {
    pub fn new(a: f64, b: f64, n: f64) -> Result<Self> {
        if !(n > 2.0) {
            return Err(Error::Domain("points of S need n > 2"));
        }
        if b > a {
            return Err(Error::Domain("points of S need b <= a"));
        }
        let c = c_of_n(a, b, n)?;
        if !(a < c) {
            return Err(Error::Domain("points of S need a < c"));
        }
        Ok(SPoint { a, b, n, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

fn check_sides(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("sides must be positive and finite"));
    }
    Ok(())
}

/// `(a^n + b^n)^(1/n)` evaluated as `big * (1 + (small/big)^n)^(1/n)`.
pub fn c_of_n(a: f64, b: f64, n: f64) -> Result<f64> {
    check_sides(a, b)?;
    if !(n >= 1.0) || !n.is_finite() {
        return Err(Error::Domain("exponent must be at least 1"));
    }
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    let ratio = libm::pow(small / big, n);
    Ok(big * libm::pow(1.0 + ratio, 1.0 / n))
}

/// `a + 1 <= c` and `c^2 < 2 a^2`, decided in integers.
pub fn c_bounds_hold(a: u64, c: u64) -> bool {
    let (a, c) = (u128::from(a), u128::from(c));
    a + 1 <= c && c * c < 2 * a * a
}

/// Interior angle opposite side `c(n)`, in degrees.
pub fn theta_angle(a: f64, b: f64, n: f64) -> Result<f64> {
    check_sides(a, b)?;
    if !(n > 1.0) {
        return Err(Error::Degenerate);
    }
    let c = c_of_n(a, b, n)?;
    if !(c < a + b && a < b + c && b < a + c) {
        return Err(Error::Degenerate);
    }
    let cos = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
    Ok(libm::acos(cos).to_degrees())
}

/// Shape from the exponent, confirmed against the angle opposite `c`.
pub fn classify_triangle(a: f64, b: f64, n: f64) -> Result<TriangleShape> {
    let theta = theta_angle(a, b, n)?;
    let shape = if libm::fabs(n - 2.0) <= RIGHT_EXPONENT_TOLERANCE {
        TriangleShape::Right
    } else if n < 2.0 {
        TriangleShape::Obtuse
    } else {
        TriangleShape::Acute
    };
    let agrees = match shape {
        TriangleShape::Right => libm::fabs(theta - 90.0) <= ANGLE_TOLERANCE_DEG,
        TriangleShape::Obtuse => theta > 90.0 - ANGLE_TOLERANCE_DEG,
        TriangleShape::Acute => theta < 90.0 + ANGLE_TOLERANCE_DEG,
        TriangleShape::Degenerate => false,
    };
    if !agrees {
        return Err(Error::Inconsistent("triangle shape disagrees with its largest angle"));
    }
    Ok(shape)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCount {
    /// Integers `c` with `a < c < a * 2^(1/n_min)`.
    pub count: u64,
    /// `floor(a * (2^(1/3) - 1))`.
    pub bound: u64,
    /// Integers `c` with `a < c < a * sqrt(2)`.
    pub sqrt2_count: u64,
}

/// Counts candidate integer hypotenuses on the arc above `a`.
///
/// Integral `n_min` is decided exactly (`c^n < 2 a^n`); otherwise the
/// endpoint `a * 2^(1/n_min)` is evaluated in floating point.
pub fn lattice_count_on_arc(a: u64, n_min: f64) -> Result<LatticeCount> {
    if a == 0 {
        return Err(Error::Domain("a must be positive"));
    }
    if !(n_min > 2.0) || !n_min.is_finite() {
        return Err(Error::Domain("n_min must exceed 2"));
    }
    let count = if libm::trunc(n_min) == n_min && n_min <= f64::from(u32::MAX) {
        below_root_of_two(a, n_min as u32)
    } else {
        let top = a as f64 * libm::exp2(1.0 / n_min);
        let mut hi = libm::floor(top) as u64;
        if hi as f64 == top {
            hi -= 1;
        }
        hi.saturating_sub(a)
    };
    Ok(LatticeCount {
        count,
        bound: below_root_of_two(a, 3),
        sqrt2_count: below_root_of_two(a, 2),
    })
}

/// `#{c : a < c, c^n < 2 a^n}`, exactly.
fn below_root_of_two(a: u64, n: u32) -> u64 {
    let limit = pow_big(&Natural::from(a), n) * 2u32 - 1u32;
    let root = int_nth_root(&limit, n).expect("limit is positive").root;
    let root: u64 = root.try_into().expect("root is below 2a");
    root - a
}

/// Inclusive arithmetic progression `start, start + step, ..., <= end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl Axis {
    pub fn new(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !start.is_finite() || !end.is_finite() || end < start {
            return Err(Error::Domain("axis needs start <= end and step > 0"));
        }
        Ok(Axis { start, end, step })
    }

    pub fn single(value: f64) -> Self {
        Axis {
            start: value,
            end: value,
            step: 1.0,
        }
    }

    pub fn len(&self) -> usize {
        // Small slack so that decimal steps like 0.1 reach the endpoint.
        libm::floor((self.end - self.start) / self.step + 1e-9) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.start + i as f64 * self.step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGrid {
    pub a: Axis,
    pub b: Axis,
    pub n: Axis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub b: f64,
    pub n: f64,
    pub c: f64,
    /// `None` when the triangle is degenerate.
    pub theta_deg: Option<f64>,
    pub shape: TriangleShape,
    pub in_s: bool,
}

/// One grid point; rows are independent so callers may evaluate them in any order.
pub fn sweep_point(a: f64, b: f64, n: f64) -> Result<SweepRow> {
    let c = c_of_n(a, b, n)?;
    let (theta_deg, shape) = match classify_triangle(a, b, n) {
        Ok(shape) => (Some(theta_angle(a, b, n)?), shape),
        Err(Error::Degenerate) => (None, TriangleShape::Degenerate),
        Err(e) => return Err(e),
    };
    Ok(SweepRow {
        a,
        b,
        n,
        c,
        theta_deg,
        shape,
        in_s: n > 2.0 && b <= a && a < c,
    })
}

/// Grid points in `a`, then `b`, then `n` order.
pub fn sweep_points(grid: &SweepGrid) -> Vec<(f64, f64, f64)> {
    let mut out = Vec::with_capacity(grid.a.len() * grid.b.len() * grid.n.len());
    for a in grid.a.values() {
        for b in grid.b.values() {
            for n in grid.n.values() {
                out.push((a, b, n));
            }
        }
    }
    out
}

pub fn sweep_emit(grid: &SweepGrid) -> Result<Vec<SweepRow>> {
    sweep_points(grid)
        .into_iter()
        .map(|(a, b, n)| sweep_point(a, b, n))
        .collect()
}
