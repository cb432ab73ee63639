use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{pow_big, Natural};
use crate::error::{Error, Result};

/// Nonnegative rational in lowest terms.
///
/// Construction always normalizes, so structural equality is numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    numer: Natural,
    denom: Natural,
}

impl Ratio {
    pub fn new(numer: Natural, denom: Natural) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = numer.gcd(&denom);
        if g.is_one() || numer.is_zero() {
            let denom = if numer.is_zero() { Natural::one() } else { denom };
            return Ok(Ratio { numer, denom });
        }
        Ok(Ratio {
            numer: numer / &g,
            denom: denom / g,
        })
    }

    pub fn from_integer(v: Natural) -> Self {
        Ratio {
            numer: v,
            denom: Natural::one(),
        }
    }

    pub fn numer(&self) -> &Natural {
        &self.numer
    }

    pub fn denom(&self) -> &Natural {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn to_integer(&self) -> Option<&Natural> {
        self.is_integer().then_some(&self.numer)
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn add(&self, rhs: &Ratio) -> Ratio {
        let numer = &self.numer * &rhs.denom + &rhs.numer * &self.denom;
        let denom = &self.denom * &rhs.denom;
        Ratio::new(numer, denom).expect("product of nonzero denominators")
    }

    /// `self - rhs`, failing when the result would be negative.
    pub fn checked_sub(&self, rhs: &Ratio) -> Result<Ratio> {
        let left = &self.numer * &rhs.denom;
        let right = &rhs.numer * &self.denom;
        if left < right {
            return Err(Error::Negative);
        }
        Ratio::new(left - right, &self.denom * &rhs.denom)
    }

    pub fn mul(&self, rhs: &Ratio) -> Ratio {
        Ratio::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
            .expect("product of nonzero denominators")
    }

    pub fn checked_div(&self, rhs: &Ratio) -> Result<Ratio> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ratio::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }

    pub fn pow(&self, exp: u32) -> Ratio {
        // Powers of coprime values stay coprime.
        Ratio {
            numer: pow_big(&self.numer, exp),
            denom: pow_big(&self.denom, exp),
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let n = self.numer.to_f64().unwrap_or(f64::INFINITY);
        let d = self.denom.to_f64().unwrap_or(f64::INFINITY);
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
        // Scale both down to a representable range.
        let shift = self.numer.bits().max(self.denom.bits()).saturating_sub(1000);
        let n = (&self.numer >> shift).to_f64().unwrap_or(f64::INFINITY);
        let d = (&self.denom >> shift).to_f64().unwrap_or(f64::INFINITY);
        n / d
    }
}

impl From<u64> for Ratio {
    fn from(v: u64) -> Self {
        Ratio::from_integer(Natural::from(v))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: u64, d: u64) -> Ratio {
        Ratio::new(Natural::from(n), Natural::from(d)).unwrap()
    }

    fn lowest(x: &Ratio) -> bool {
        x.numer().gcd(x.denom()).is_one() || x.numer().is_zero() && x.denom().is_one()
    }

    // Cross-multiplication oracle: a/b == c/d iff a*d == c*b.
    fn same_value(x: &Ratio, n: u128, d: u128) -> bool {
        let lhs = x.numer() * Natural::from(d);
        let rhs = Natural::from(n) * x.denom();
        lhs == rhs
    }

    #[test]
    fn normalizes() {
        assert_eq!(r(6, 8), r(3, 4));
        assert_eq!(r(0, 7), r(0, 1));
        assert!(r(8, 4).is_integer());
        assert!(!r(3, 4).is_integer());
        assert_eq!(Ratio::new(Natural::from(1u8), Natural::zero()), Err(Error::DivisionByZero));
        assert_eq!(r(83, 9).to_string(), "83/9");
    }

    #[test]
    fn sub_and_div_errors() {
        assert_eq!(r(1, 3).checked_sub(&r(1, 2)), Err(Error::Negative));
        assert_eq!(r(1, 3).checked_div(&r(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(r(1, 2).checked_sub(&r(1, 2)).unwrap(), r(0, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn arithmetic_matches_cross_multiplication(
            a in 0u64..5000, b in 1u64..5000, c in 0u64..5000, d in 1u64..5000, e in 0u32..5
        ) {
            let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
            let x = r(a as u64, b as u64);
            let y = r(c as u64, d as u64);

            let sum = x.add(&y);
            prop_assert!(same_value(&sum, a * d + c * b, b * d));
            prop_assert!(lowest(&sum));

            let prod = x.mul(&y);
            prop_assert!(same_value(&prod, a * c, b * d));
            prop_assert!(lowest(&prod));

            if a * d >= c * b {
                let diff = x.checked_sub(&y).unwrap();
                prop_assert!(same_value(&diff, a * d - c * b, b * d));
                prop_assert!(lowest(&diff));
            } else {
                prop_assert!(x.checked_sub(&y).is_err());
            }

            if c > 0 {
                let q = x.checked_div(&y).unwrap();
                prop_assert!(same_value(&q, a * d, b * c));
                prop_assert!(lowest(&q));
            }

            let p = x.pow(e);
            let pn = Natural::from(a).pow(e);
            let pd = Natural::from(b).pow(e);
            prop_assert_eq!(p.numer() * &pd, pn * p.denom());
            prop_assert!(lowest(&p));

            prop_assert_eq!(x.is_integer(), a % b == 0);
        }
    }
}
