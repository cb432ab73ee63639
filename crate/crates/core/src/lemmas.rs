//! Executable forms of the parity, trichotomy and Pythagorean-reduction
//! arguments: each function either decides a predicate exactly or evaluates an
//! identity in exact rational arithmetic.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_nth_root, pow_big, Natural, Ratio};
use crate::triples::{FermatTriple, PythParam};

/// Relative tolerance for the reporting-only floating quantities here.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityProfile {
    OneEven,
    AllOdd,
    TwoEven,
    AllEven,
}

impl ParityProfile {
    /// Raw inputs are accepted so that `AllEven` is reachable.
    pub fn of(a: u64, b: u64, c: u64) -> Self {
        match [a, b, c].iter().filter(|v| *v % 2 == 0).count() {
            0 => ParityProfile::AllOdd,
            1 => ParityProfile::OneEven,
            2 => ParityProfile::TwoEven,
            _ => ParityProfile::AllEven,
        }
    }
}

pub fn parity_profile(t: &FermatTriple) -> ParityProfile {
    ParityProfile::of(t.a(), t.b(), t.c())
}

/// `a^n + b^n ≡ c^n (mod 2)`, with each power reduced exactly.
pub fn parity_consistent(t: &FermatTriple, n: u32) -> Result<bool> {
    parity_consistent_raw(t.a(), t.b(), t.c(), n)
}

pub fn parity_consistent_raw(a: u64, b: u64, c: u64, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("exponent must be positive"));
    }
    let two = Natural::from(2u8);
    let exp = Natural::from(n);
    let residue = |v: u64| Natural::from(v).modpow(&exp, &two);
    Ok((residue(a) + residue(b)) % &two == residue(c))
}

/// Outcome of solving `c^n = a^n + b^n` for `c` given integers `a`, `b`, `n`.
///
/// There is deliberately no fractional variant: a rational root of a monic
/// integer polynomial is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealnessVerdict {
    IntegerValue(Natural),
    Irrational,
}

pub fn root_verdict(a: u64, b: u64, n: u32) -> Result<RealnessVerdict> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("bases must be positive"));
    }
    if n < 2 {
        return Err(Error::Domain("root verdict needs n >= 2"));
    }
    let s = pow_big(&Natural::from(a), n) + pow_big(&Natural::from(b), n);
    verdict_of(&s, n)
}

/// Verdict for the real `n`-th root of an arbitrary positive integer.
pub fn verdict_of(s: &Natural, n: u32) -> Result<RealnessVerdict> {
    let root = int_nth_root(s, n)?;
    Ok(if root.exact {
        RealnessVerdict::IntegerValue(root.root)
    } else {
        RealnessVerdict::Irrational
    })
}

/// Searches for a rational `p/q` with `q <= max_denom` and `(p/q)^n = s`.
///
/// Numerators are located from a floating estimate and confirmed by exact
/// powering, so this does not share a code path with [`int_nth_root`].
pub fn rational_root_search(s: &Natural, n: u32, max_denom: u64) -> Option<Ratio> {
    if n == 0 || s.is_zero() {
        return None;
    }
    let s_f = s.to_f64()?;
    let estimate = libm::pow(s_f, 1.0 / f64::from(n));
    for q in 1..=max_denom {
        let qn = pow_big(&Natural::from(q), n);
        let target = s * &qn;
        let centre = libm::floor(estimate * q as f64) as i64;
        for p in (centre - 2).max(1)..=centre + 2 {
            let p = Natural::from(p as u64);
            if pow_big(&p, n) == target {
                return Ratio::new(p, Natural::from(q)).ok();
            }
        }
    }
    None
}

/// `2^(kn-2) / q^2 + q^2` as an exact rational.
pub fn eq12_evaluate(k_times_n: u32, q: u64) -> Result<Ratio> {
    if k_times_n < 2 {
        return Err(Error::Domain("need kn >= 2"));
    }
    if q == 0 {
        return Err(Error::Domain("q must be positive"));
    }
    let q2 = Natural::from(q) * Natural::from(q);
    let power = Natural::one() << (k_times_n - 2);
    let frac = Ratio::new(power, q2.clone())?;
    Ok(frac.add(&Ratio::from_integer(q2)))
}

/// `2^(kn-2) > q^2` for a pair whose even leg `2pq` equals `2^(kn/2)`.
pub fn pq_dominance(pp: PythParam, k_times_n: u32) -> Result<bool> {
    if k_times_n % 2 != 0 || k_times_n < 2 {
        return Err(Error::Domain("kn must be even and at least 2"));
    }
    let even_leg = Natural::from(pp.p()) * Natural::from(pp.q()) * 2u32;
    if even_leg != Natural::one() << (k_times_n / 2) {
        return Err(Error::Domain("2pq must equal 2^(kn/2)"));
    }
    let lhs = Natural::one() << (k_times_n - 2);
    let q2 = Natural::from(pp.q()) * Natural::from(pp.q());
    Ok(lhs > q2)
}

/// `c^m - a^m > 2` for odd `a < c`.
pub fn min_gap_holds(a: u64, c: u64, m: u32) -> Result<bool> {
    if a % 2 == 0 || c % 2 == 0 {
        return Err(Error::Parity("a and c must be odd"));
    }
    if a >= c {
        return Err(Error::Domain("need a < c"));
    }
    if m < 2 {
        return Err(Error::Domain("need m >= 2"));
    }
    let diff = pow_big(&Natural::from(c), m) - pow_big(&Natural::from(a), m);
    Ok(diff > Natural::from(2u8))
}

/// `b^2 / a` in lowest terms.
pub fn b_squared_over_a(a: u64, b: u64) -> Result<Ratio> {
    Ratio::new(Natural::from(b) * Natural::from(b), Natural::from(a))
}

/// Checks the odd-exponent reduction identities exactly:
///
/// * `(a^(2n) + b^(2n)) / a^n = a^n + (b^2/a)^n`
/// * `(a^(2n) + b^(2n)) / a^n - (b^2/a)^n + b^n = a^n + b^n`
///
/// Both are algebraic identities, so `false` means an arithmetic bug.
pub fn frac_reduction_check(a: u64, b: u64, n: u32) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("bases must be positive"));
    }
    if a % 2 == 0 || b % 2 == 0 {
        return Err(Error::Parity("a and b must be odd"));
    }
    if n < 3 || n % 2 == 0 {
        return Err(Error::Parity("n must be odd and at least 3"));
    }
    let an = Ratio::from_integer(pow_big(&Natural::from(a), n));
    let bn = Ratio::from_integer(pow_big(&Natural::from(b), n));
    let a2n = pow_big(&Natural::from(a), 2 * n);
    let b2n = pow_big(&Natural::from(b), 2 * n);

    let lhs = Ratio::from_integer(a2n + b2n).checked_div(&an)?;
    let ratio_term = b_squared_over_a(a, b)?.pow(n);
    let first = lhs == an.add(&ratio_term);

    let rearranged = lhs.checked_sub(&ratio_term)?.add(&bn);
    let second = rearranged == an.add(&bn);
    Ok(first && second)
}

/// `2^k * d` rewritten as `2^h` with real `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPowerForm {
    /// Floating value of `2^k * d`, for reporting.
    pub value: f64,
    /// `k + log2(d)`, for reporting.
    pub h: f64,
    pub exact_source: Option<Ratio>,
    /// Decided from `d == 1`, never from `h`.
    pub h_is_integer: bool,
}

impl RealPowerForm {
    /// Whether `2^h` reproduces `value` within [`FLOAT_TOLERANCE`].
    pub fn is_consistent(&self) -> bool {
        if !self.value.is_finite() {
            return true;
        }
        let back = libm::exp2(self.h);
        libm::fabs(back - self.value) <= FLOAT_TOLERANCE * self.value
    }
}

pub fn two_adic_as_power_of_two(k: u64, d: &Natural) -> Result<RealPowerForm> {
    if d.is_zero() {
        return Err(Error::Domain("d must be positive"));
    }
    if d.is_even() {
        return Err(Error::Parity("d must be odd"));
    }
    let exact = d << k;
    let value = exact.to_f64().unwrap_or(f64::INFINITY);
    let h = k as f64 + log2_natural(d);
    Ok(RealPowerForm {
        value,
        h,
        exact_source: Some(Ratio::from_integer(exact)),
        h_is_integer: d.is_one(),
    })
}

fn log2_natural(v: &Natural) -> f64 {
    // Shift large values into f64 range and add the shift back.
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v >> shift).to_f64().unwrap_or(f64::MAX);
    libm::log2(top) + shift as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: u64, b: u64, c: u64) -> FermatTriple {
        FermatTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn parity_profiles() {
        assert_eq!(parity_profile(&triple(4, 3, 5)), ParityProfile::OneEven);
        assert_eq!(parity_profile(&triple(7, 5, 9)), ParityProfile::AllOdd);
        assert_eq!(parity_profile(&triple(8, 6, 11)), ParityProfile::TwoEven);
        assert_eq!(ParityProfile::of(2, 4, 6), ParityProfile::AllEven);
    }

    #[test]
    fn parity_consistency_examples() {
        assert!(parity_consistent(&triple(4, 3, 5), 3).unwrap());
        assert!(!parity_consistent(&triple(7, 5, 9), 3).unwrap());
        assert!(parity_consistent(&triple(4, 3, 5), 0).is_err());
    }

    #[test]
    fn parity_consistency_exhaustive_small() {
        // Oracle: parity of x^n is the parity of x for n >= 1.
        for c in 2..=50u64 {
            for a in 1..c {
                for b in 1..=a {
                    let Ok(t) = FermatTriple::new(a, b, c) else { continue };
                    for n in 3..=6 {
                        let oracle = (a % 2 + b % 2) % 2 == c % 2;
                        let got = parity_consistent(&t, n).unwrap();
                        assert_eq!(got, oracle);
                        assert_eq!(got, parity_profile(&t) == ParityProfile::OneEven);
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(root_verdict(3, 4, 2).unwrap(), RealnessVerdict::IntegerValue(Natural::from(5u8)));
        assert_eq!(root_verdict(1, 1, 3).unwrap(), RealnessVerdict::Irrational);
        assert_eq!(root_verdict(6, 8, 3).unwrap(), RealnessVerdict::Irrational);
        assert!(root_verdict(3, 4, 1).is_err());
    }

    #[test]
    fn rational_search_finds_exact_roots() {
        let s = Natural::from(125u8);
        assert_eq!(rational_root_search(&s, 3, 10), Some(Ratio::from(5)));
        assert_eq!(rational_root_search(&Natural::from(728u32), 3, 50), None);
    }

    #[test]
    fn eq12_examples() {
        assert_eq!(eq12_evaluate(4, 1).unwrap(), Ratio::from(5));
        assert_eq!(eq12_evaluate(4, 2).unwrap(), Ratio::from(5));
        let v = eq12_evaluate(3, 3).unwrap();
        assert_eq!(v, Ratio::new(Natural::from(83u8), Natural::from(9u8)).unwrap());
        assert!(!v.is_integer());
        assert!(eq12_evaluate(1, 1).is_err());
        assert!(eq12_evaluate(4, 0).is_err());
    }

    #[test]
    fn eq12_matches_hypotenuse() {
        use crate::triples::pyth_from_param;
        for e in 2..=20u32 {
            let half = 1u64 << (e - 1);
            for q in (0..e).map(|i| 1u64 << i) {
                let p = half / q;
                let Ok(pp) = PythParam::new(p, q) else { continue };
                let t = pyth_from_param(pp).unwrap();
                assert_eq!(t.leg2, 1u64 << e);
                assert_eq!(eq12_evaluate(2 * e, q).unwrap(), Ratio::from(t.hyp));
                assert!(pq_dominance(pp, 2 * e).unwrap());
            }
        }
    }

    #[test]
    fn pq_dominance_examples() {
        assert!(pq_dominance(PythParam::new(2, 1).unwrap(), 4).unwrap());
        assert!(pq_dominance(PythParam::new(4, 2).unwrap(), 8).unwrap());
        assert!(pq_dominance(PythParam::new(8, 4).unwrap(), 12).unwrap());
        assert!(pq_dominance(PythParam::new(3, 2).unwrap(), 4).is_err());
        assert!(pq_dominance(PythParam::new(2, 1).unwrap(), 5).is_err());
    }

    #[test]
    fn min_gap_examples() {
        assert!(min_gap_holds(3, 5, 2).unwrap());
        assert!(min_gap_holds(1, 3, 2).unwrap());
        assert!(min_gap_holds(2, 5, 2).is_err());
        assert!(min_gap_holds(5, 3, 2).is_err());
        assert!(min_gap_holds(3, 5, 1).is_err());
    }

    #[test]
    fn frac_reduction_examples() {
        assert!(frac_reduction_check(3, 5, 3).unwrap());
        assert!(frac_reduction_check(3, 3, 3).unwrap());
        assert_eq!(b_squared_over_a(3, 3).unwrap(), Ratio::from(3));
        assert!(frac_reduction_check(9, 3, 5).unwrap());
        assert_eq!(b_squared_over_a(9, 3).unwrap(), Ratio::from(1));
        assert!(frac_reduction_check(4, 3, 3).is_err());
        assert!(frac_reduction_check(3, 5, 4).is_err());
        assert!(frac_reduction_check(3, 5, 1).is_err());
    }

    #[test]
    fn frac_reduction_first_identity_by_hand() {
        // (3^6 + 5^6)/3^3 = 16354/27 and 3^3 + (25/3)^3 = (729 + 15625)/27.
        let lhs = Ratio::new(Natural::from(729u32 + 15625), Natural::from(27u32)).unwrap();
        let rhs = Ratio::from(27).add(&Ratio::new(Natural::from(15625u32), Natural::from(27u32)).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_of_two_form() {
        let f = two_adic_as_power_of_two(3, &Natural::from(1u8)).unwrap();
        assert_eq!(f.h, 3.0);
        assert!(f.h_is_integer);
        assert!(f.is_consistent());

        let f = two_adic_as_power_of_two(2, &Natural::from(3u8)).unwrap();
        assert!((f.h - 3.584962500721156).abs() < 1e-12);
        assert!(!f.h_is_integer);
        assert!(f.is_consistent());
        assert_eq!(f.exact_source, Some(Ratio::from(12)));

        let f = two_adic_as_power_of_two(0, &Natural::from(5u8)).unwrap();
        assert!((f.h - 2.321928094887362).abs() < 1e-12);

        assert!(two_adic_as_power_of_two(1, &Natural::from(4u8)).is_err());
    }
}
