//! Exact integer primitives.
//!
//! All arithmetic that feeds a verdict goes through [`Natural`]; floating point
//! never decides anything in this module.

mod ratio;

pub use ratio::Ratio;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer.
pub type Natural = BigUint;

/// `m = 2^k * d` with `d` odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoAdicForm {
    pub k: u64,
    pub d: Natural,
}

impl TwoAdicForm {
    pub fn recompose(&self) -> Natural {
        &self.d << self.k
    }
}

/// Integer `n`-th root with an exactness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NthRoot {
    /// `floor(s^(1/n))`.
    pub root: Natural,
    /// `root^n == s`.
    pub exact: bool,
}

pub fn gcd3(a: &Natural, b: &Natural, c: &Natural) -> Result<Natural> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::Domain("gcd3 requires positive inputs"));
    }
    Ok(a.gcd(b).gcd(c))
}

pub fn gcd3_u64(a: u64, b: u64, c: u64) -> u64 {
    a.gcd(&b).gcd(&c)
}

pub fn two_adic_split(m: &Natural) -> Result<TwoAdicForm> {
    let k = m
        .trailing_zeros()
        .ok_or(Error::Domain("two-adic split of zero"))?;
    Ok(TwoAdicForm { k, d: m >> k })
}

/// Exact `base^exp`; `0^0` is taken as 1.
pub fn pow_big(base: &Natural, exp: u32) -> Natural {
    Pow::pow(base, exp)
}

/// `floor(s^(1/n))` by binary search over exact powers.
pub fn int_nth_root(s: &Natural, n: u32) -> Result<NthRoot> {
    if n == 0 {
        return Err(Error::Domain("zeroth root"));
    }
    if s.is_zero() {
        return Err(Error::Domain("root of zero"));
    }
    if n == 1 {
        return Ok(NthRoot {
            root: s.clone(),
            exact: true,
        });
    }

    // 2^(bits-1) <= s < 2^bits, so the root lies in [2^((bits-1)/n), 2^ceil(bits/n)].
    let bits = s.bits();
    let n64 = u64::from(n);
    let mut lo = Natural::one() << ((bits - 1) / n64);
    let mut hi = Natural::one() << bits.div_ceil(n64);

    // Invariant: lo^n <= s < hi^n.
    let one = Natural::one();
    while &hi - &lo > one {
        let mid: Natural = (&lo + &hi) >> 1u32;
        if pow_big(&mid, n) <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exact = pow_big(&lo, n) == *s;
    Ok(NthRoot { root: lo, exact })
}

/// True iff `m` is the square of an integer.
pub fn is_perfect_square(m: &Natural) -> bool {
    if m.is_zero() {
        return true;
    }
    int_nth_root(m, 2).map(|r| r.exact).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(&nat(4), &nat(6), &nat(8)).unwrap(), nat(2));
        assert_eq!(gcd3(&nat(3), &nat(4), &nat(5)).unwrap(), nat(1));
        assert_eq!(gcd3(&nat(15), &nat(25), &nat(35)).unwrap(), nat(5));
        assert!(gcd3(&nat(0), &nat(4), &nat(5)).is_err());
    }

    #[test]
    fn gcd3_matches_divisor_scan() {
        for (a, b, c) in [(15u64, 25, 35), (12, 18, 30), (7, 14, 21), (9, 10, 11)] {
            let scan = (1..=a.min(b).min(c))
                .rev()
                .find(|d| a % d == 0 && b % d == 0 && c % d == 0)
                .unwrap();
            assert_eq!(gcd3(&nat(a), &nat(b), &nat(c)).unwrap(), nat(scan));
            assert_eq!(gcd3_u64(a, b, c), scan);
        }
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic_split(&nat(40)).unwrap(), TwoAdicForm { k: 3, d: nat(5) });
        assert_eq!(two_adic_split(&nat(7)).unwrap(), TwoAdicForm { k: 0, d: nat(7) });
        assert_eq!(two_adic_split(&nat(1024)).unwrap(), TwoAdicForm { k: 10, d: nat(1) });
        assert_eq!(two_adic_split(&nat(0)), Err(Error::Domain("two-adic split of zero")));
    }

    #[test]
    fn two_adic_recomposes_exhaustively() {
        for m in 1..=100_000u64 {
            let f = two_adic_split(&nat(m)).unwrap();
            assert!(f.d.is_odd());
            assert_eq!(f.recompose(), nat(m));
        }
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(int_nth_root(&nat(27), 3).unwrap(), NthRoot { root: nat(3), exact: true });
        assert_eq!(int_nth_root(&nat(91), 3).unwrap(), NthRoot { root: nat(4), exact: false });
        assert_eq!(int_nth_root(&nat(728), 3).unwrap(), NthRoot { root: nat(8), exact: false });
        assert!(int_nth_root(&nat(5), 0).is_err());
        assert!(int_nth_root(&nat(0), 2).is_err());
        assert_eq!(int_nth_root(&nat(1), 7).unwrap(), NthRoot { root: nat(1), exact: true });
    }

    #[test]
    fn nth_root_brackets_exhaustively() {
        for s in 1..=10_000u64 {
            for n in 1..=6u32 {
                let r = int_nth_root(&nat(s), n).unwrap();
                let lo = pow_big(&r.root, n);
                let hi = pow_big(&(&r.root + 1u32), n);
                assert!(lo <= nat(s) && nat(s) < hi, "s={s} n={n}");
                assert_eq!(r.exact, lo == nat(s));
            }
        }
    }

    #[test]
    fn nth_root_huge() {
        let s = pow_big(&nat(10), 400) + 1u32;
        let r = int_nth_root(&s, 20).unwrap();
        assert_eq!(r.root, pow_big(&nat(10), 20));
        assert!(!r.exact);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow_big(&nat(2), 10), nat(1024));
        assert_eq!(pow_big(&nat(9), 3), nat(729));
        assert_eq!(pow_big(&nat(10), 20).to_string(), "100000000000000000000");
        assert_eq!(pow_big(&nat(0), 0), nat(1));
        assert_eq!(pow_big(&nat(10), 20).to_string().len(), 21);
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&nat(49)));
        assert!(!is_perfect_square(&nat(50)));
        assert!(is_perfect_square(&nat(9801)));
        assert_eq!(nat(99) * nat(99), nat(9801));
    }
}
