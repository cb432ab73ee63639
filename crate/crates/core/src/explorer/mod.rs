//! Exponent solving and exhaustive searches around `a^n + b^n = c^n`.
//!
//! The searches are split into per-`a` rows ([`flt_row`], [`near_miss_row`],
//! [`conjecture1_row`]) so callers can partition the work; the whole-range
//! functions simply concatenate the rows in order.

mod bisect;

pub use bisect::{Bisector, Bracket};

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{gcd3_u64, int_nth_root, pow_big, Natural};
use crate::triples::FermatTriple;

/// Final bracket width for [`solve_exponent`].
pub const EXPONENT_BRACKET_WIDTH: f64 = 1e-13;
/// Bound on `|a^n + b^n - c^n| / c^n` at the reported exponent.
pub const RELATIVE_RESIDUAL_BOUND: f64 = 1e-12;

const MAX_BISECTION_STEPS: u32 = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentSolution {
    pub n: f64,
    /// `a^n + b^n - c^n` at `n`, in floating point.
    pub residual: f64,
    /// `residual / c^n`.
    pub relative_residual: f64,
    pub iterations: u32,
    pub bracket: (f64, f64),
}

/// `g(n) = (a/c)^n + (b/c)^n - 1`, strictly decreasing from `g(0) = 1` towards `-1`.
pub fn exponent_gap(t: &FermatTriple, n: f64) -> f64 {
    let c = t.c() as f64;
    libm::pow(t.a() as f64 / c, n) + libm::pow(t.b() as f64 / c, n) - 1.0
}

/// The unique real `n > 0` with `a^n + b^n = c^n`.
pub fn solve_exponent(t: &FermatTriple) -> ExponentSolution {
    let g = |n: f64| exponent_gap(t, n);
    let mut hi = 1.0;
    while g(hi) > 0.0 {
        hi *= 2.0;
    }
    let mut solver = Bisector::new(g, 0.0, hi).expect("g(0) = 1 and g(hi) <= 0");
    let n = solver.run(EXPONENT_BRACKET_WIDTH, MAX_BISECTION_STEPS);
    let relative_residual = g(n);
    let residual = relative_residual * libm::pow(t.c() as f64, n);
    let bracket = solver.bracket();
    ExponentSolution {
        n,
        residual,
        relative_residual,
        iterations: solver.iterations(),
        bracket: (bracket.lo, bracket.hi),
    }
}

/// Exact powers `a^n, b^n, c^n`, advanced one exponent at a time.
struct PowerWalk {
    a: Natural,
    b: Natural,
    c: Natural,
    pa: Natural,
    pb: Natural,
    pc: Natural,
    n: u32,
}

impl PowerWalk {
    fn new(t: &FermatTriple) -> Self {
        let (a, b, c) = (Natural::from(t.a()), Natural::from(t.b()), Natural::from(t.c()));
        PowerWalk {
            pa: a.clone(),
            pb: b.clone(),
            pc: c.clone(),
            a,
            b,
            c,
            n: 1,
        }
    }

    fn advance(&mut self) {
        self.pa *= &self.a;
        self.pb *= &self.b;
        self.pc *= &self.c;
        self.n += 1;
    }

    /// Sign of `c^n - a^n - b^n`.
    fn sign(&self) -> Ordering {
        self.pc.cmp(&(&self.pa + &self.pb))
    }

    /// `c^n - a^n - b^n`, valid when [`PowerWalk::sign`] is not `Less`.
    fn excess(&self) -> Natural {
        &self.pc - (&self.pa + &self.pb)
    }
}

/// The exponent `n` in `[n_min, n_max]` with `a^n + b^n = c^n`, if any.
///
/// Stops early once `c^n - a^n - b^n` is positive and the next difference is
/// larger still: from there `c^m > a^m + b^m` for every `m > n`.
pub fn integer_exponent_in(t: &FermatTriple, n_min: u32, n_max: u32) -> Option<u32> {
    let mut walk = PowerWalk::new(t);
    while walk.n <= n_max {
        match walk.sign() {
            Ordering::Equal if walk.n >= n_min => return Some(walk.n),
            Ordering::Greater => {
                let here = walk.excess();
                walk.advance();
                if walk.sign() == Ordering::Greater && walk.excess() > here {
                    return None;
                }
                continue;
            }
            _ => {}
        }
        walk.advance();
    }
    None
}

/// True iff no integer `n` in `[1, n_max]` solves the equation for `t`.
pub fn integer_exponent_exclusion(t: &FermatTriple, n_max: u32) -> bool {
    integer_exponent_in(t, 1, n_max).is_none()
}

/// An exact solution found by a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub triple: FermatTriple,
    pub n: u32,
}

/// Integer `c` with `a + 1 <= c` and `c^2 < 2 a^2`.
pub fn hypotenuse_window(a: u64) -> impl Iterator<Item = u64> {
    let a2 = 2 * u128::from(a) * u128::from(a);
    (a + 1..).take_while(move |&c| u128::from(c) * u128::from(c) < a2)
}

fn check_exponents(n_min: u32, n_max: u32) -> Result<()> {
    if n_min < 2 {
        return Err(Error::Domain("searches need n >= 2"));
    }
    if n_max < n_min {
        return Err(Error::Domain("empty exponent range"));
    }
    Ok(())
}

/// All exact solutions with larger addend `a`, `n_min <= n <= n_max`.
pub fn flt_row(a: u64, n_min: u32, n_max: u32) -> Result<Vec<Solution>> {
    check_exponents(n_min, n_max)?;
    let mut out = Vec::new();
    for b in 1..=a {
        for c in hypotenuse_window(a) {
            if gcd3_u64(a, b, c) != 1 {
                continue;
            }
            let t = FermatTriple::new(a, b, c)?;
            if let Some(n) = integer_exponent_in(&t, n_min, n_max) {
                out.push(Solution { triple: t, n });
            }
        }
    }
    Ok(out)
}

/// Exact solutions over `b <= a <= a_max`, `n_min <= n <= n_max`.
///
/// With `n_min = 2` this is the validation mode: it must recover the
/// primitive Pythagorean triples.
pub fn flt_search(a_max: u64, n_min: u32, n_max: u32) -> Result<Vec<Solution>> {
    check_exponents(n_min, n_max)?;
    let mut out = Vec::new();
    for a in 1..=a_max {
        out.extend(flt_row(a, n_min, n_max)?);
    }
    Ok(out)
}

/// Exact solutions with `3 <= n <= n_max`; expected empty.
pub fn flt_brute_force(a_max: u64, n_max: u32) -> Result<Vec<Solution>> {
    if a_max < 2 || n_max < 3 {
        return Err(Error::Domain("need a_max >= 2 and n_max >= 3"));
    }
    flt_search(a_max, 3, n_max)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearMiss {
    pub triple: FermatTriple,
    pub n: u32,
    /// `|c^n - a^n - b^n|`, never zero.
    pub defect: Natural,
    /// Whether `c^n` overshoots `a^n + b^n`.
    pub over: bool,
}

impl NearMiss {
    /// Recomputes the defect from scratch.
    pub fn verify(&self) -> bool {
        let t = &self.triple;
        let s = pow_big(&Natural::from(t.a()), self.n) + pow_big(&Natural::from(t.b()), self.n);
        let cn = pow_big(&Natural::from(t.c()), self.n);
        let (defect, over) = if cn >= s { (cn - s, true) } else { (s - cn, false) };
        !defect.is_zero() && defect == self.defect && over == self.over
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NearMissScan {
    pub misses: Vec<NearMiss>,
    /// Zero-defect hits, kept apart from the near misses.
    pub solutions: Vec<Solution>,
}

impl NearMissScan {
    pub fn extend(&mut self, other: NearMissScan) {
        self.misses.extend(other.misses);
        self.solutions.extend(other.solutions);
    }

    /// Near misses by defect, then `a`, `b`, `c`, `n`; solutions ascending.
    pub fn sort(&mut self) {
        self.misses.sort_by(|x, y| {
            x.defect
                .cmp(&y.defect)
                .then_with(|| x.triple.cmp(&y.triple))
                .then_with(|| x.n.cmp(&y.n))
        });
        self.solutions.sort();
    }
}

/// Primitive triples with larger addend `a` and `|c^n - a^n - b^n| <= cap`.
pub fn near_miss_row(a: u64, exponents: &[u32], cap: &Natural) -> Result<NearMissScan> {
    if exponents.iter().any(|&n| n < 3) {
        return Err(Error::Domain("near-miss exponents must be at least 3"));
    }
    let mut scan = NearMissScan::default();
    let big_a = Natural::from(a);
    for b in 1..=a {
        let big_b = Natural::from(b);
        for &n in exponents {
            let s = pow_big(&big_a, n) + pow_big(&big_b, n);
            // Smallest candidate: c^n >= s - cap.
            let start = if s > *cap {
                let r = int_nth_root(&(&s - cap), n)?;
                let r: u64 = r.root.try_into().map_err(|_| Error::Overflow("root"))?;
                r.max(a + 1)
            } else {
                a + 1
            };
            let upper = &s + cap;
            let mut c = start;
            loop {
                let cn = pow_big(&Natural::from(c), n);
                if cn > upper {
                    break;
                }
                let below = cn < s && &s - &cn > *cap;
                if !below && gcd3_u64(a, b, c) == 1 {
                    let triple = FermatTriple::new(a, b, c)?;
                    if cn == s {
                        scan.solutions.push(Solution { triple, n });
                    } else {
                        let (defect, over) = if cn > s { (cn - &s, true) } else { (&s - cn, false) };
                        scan.misses.push(NearMiss { triple, n, defect, over });
                    }
                }
                c += 1;
            }
        }
    }
    Ok(scan)
}

pub fn near_miss_search(a_max: u64, exponents: &[u32], cap: &Natural) -> Result<NearMissScan> {
    if a_max < 2 {
        return Err(Error::Domain("need a_max >= 2"));
    }
    let mut scan = NearMissScan::default();
    for a in 1..=a_max {
        scan.extend(near_miss_row(a, exponents, cap)?);
    }
    scan.sort();
    Ok(scan)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conjecture1Row {
    pub triple: FermatTriple,
    pub solution: ExponentSolution,
    pub nearest_integer: u64,
    pub distance_to_integer: f64,
    /// Exact integer exponent in `[1, n_max]`, if one exists.
    pub integer_exponent: Option<u32>,
    /// No exact solution for integer `3 <= n <= n_max`.
    pub excluded: bool,
}

/// Rows for every primitive triple with larger addend `a` in the `c` window.
pub fn conjecture1_row(a: u64, n_max: u32) -> Vec<Conjecture1Row> {
    let mut out = Vec::new();
    for b in 1..=a {
        for c in hypotenuse_window(a) {
            let Ok(triple) = FermatTriple::new(a, b, c) else { continue };
            let solution = solve_exponent(&triple);
            let nearest = libm::round(solution.n);
            let integer_exponent = integer_exponent_in(&triple, 1, n_max);
            out.push(Conjecture1Row {
                triple,
                solution,
                nearest_integer: nearest as u64,
                distance_to_integer: libm::fabs(solution.n - nearest),
                integer_exponent,
                excluded: !matches!(integer_exponent, Some(n) if n >= 3),
            });
        }
    }
    out
}

pub fn conjecture1_experiment(a_max: u64, n_max: u32) -> Vec<Conjecture1Row> {
    (1..=a_max).flat_map(|a| conjecture1_row(a, n_max)).collect()
}
