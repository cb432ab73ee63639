use crate::error::{Error, Result};

/// A bracket `[lo, hi]` with `f(lo) > 0 > f(hi)` or `f(lo) < 0 < f(hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Endpoint values have opposite signs, or one of them is an exact zero.
    pub fn straddles(&self) -> bool {
        self.f_lo == 0.0 || self.f_hi == 0.0 || (self.f_lo > 0.0) != (self.f_hi > 0.0)
    }
}

/// Step-by-step bisection. Each call to [`Bisector::step`] halves the bracket
/// and keeps the sign change inside it.
pub struct Bisector<F> {
    f: F,
    bracket: Bracket,
    iterations: u32,
}

impl<F: Fn(f64) -> f64> Bisector<F> {
    pub fn new(f: F, lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::Domain("bisection needs lo < hi"));
        }
        let bracket = Bracket {
            lo,
            hi,
            f_lo: f(lo),
            f_hi: f(hi),
        };
        if !bracket.straddles() {
            return Err(Error::Domain("bisection bracket has no sign change"));
        }
        Ok(Bisector {
            f,
            bracket,
            iterations: 0,
        })
    }

    pub fn bracket(&self) -> Bracket {
        self.bracket
    }

    pub fn iterations(&self) -> u32 {
        self.iterations
    }

    /// Returns `false` once the bracket cannot shrink further.
    pub fn step(&mut self) -> bool {
        let b = self.bracket;
        if b.f_lo == 0.0 || b.f_hi == 0.0 {
            return false;
        }
        let mid = b.lo + 0.5 * (b.hi - b.lo);
        if mid <= b.lo || mid >= b.hi {
            return false;
        }
        let f_mid = (self.f)(mid);
        self.iterations += 1;
        if f_mid == 0.0 {
            self.bracket = Bracket {
                lo: mid,
                hi: mid,
                f_lo: 0.0,
                f_hi: 0.0,
            };
        } else if (f_mid > 0.0) == (b.f_lo > 0.0) {
            self.bracket.lo = mid;
            self.bracket.f_lo = f_mid;
        } else {
            self.bracket.hi = mid;
            self.bracket.f_hi = f_mid;
        }
        true
    }

    /// Bisects until the bracket is no wider than `tol` and returns its midpoint.
    pub fn run(&mut self, tol: f64, max_iter: u32) -> f64 {
        while self.bracket.width() > tol && self.iterations < max_iter && self.step() {}
        let b = self.bracket;
        if b.f_lo == 0.0 {
            b.lo
        } else if b.f_hi == 0.0 {
            b.hi
        } else {
            b.lo + 0.5 * (b.hi - b.lo)
        }
    }
}
