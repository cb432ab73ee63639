//! Fermat candidate triples and the primitive Pythagorean parametrization.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{gcd3_u64, two_adic_split, Natural, TwoAdicForm};

/// A primitive candidate `(a, b, c)` for `a^n + b^n = c^n` with `b <= a < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FermatTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl FermatTriple {
    /// Validates and normalizes. The two addends are swapped if needed so that
    /// the stored pair has `b <= a`.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Domain("triple elements must be positive"));
        }
        let (a, b) = if b > a { (b, a) } else { (a, b) };
        if c <= a {
            return Err(Error::Ordering { a, b, c });
        }
        let gcd = gcd3_u64(a, b, c);
        if gcd != 1 {
            return Err(Error::NonPrimitive { gcd });
        }
        Ok(FermatTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn as_tuple(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }
}

impl fmt::Display for FermatTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Which element of the triple carries the factor of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormVariant {
    /// `(2^k d)^n = a^n + b^n`
    CEven,
    /// `c^n = a^n + (2^k d)^n`, the smaller addend is even.
    BEven,
    /// `c^n = (2^k d)^n + b^n`, the larger addend is even.
    AEven,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormTag {
    pub variant: FormVariant,
    pub two_adic: TwoAdicForm,
}

pub fn classify_form(t: &FermatTriple) -> Result<FormTag> {
    let evens = [t.a, t.b, t.c].iter().filter(|v| *v % 2 == 0).count() as u8;
    if evens != 1 {
        return Err(Error::Classification { evens });
    }
    let (variant, even) = if t.c % 2 == 0 {
        (FormVariant::CEven, t.c)
    } else if t.b % 2 == 0 {
        (FormVariant::BEven, t.b)
    } else {
        (FormVariant::AEven, t.a)
    };
    let two_adic = two_adic_split(&Natural::from(even))?;
    Ok(FormTag { variant, two_adic })
}

/// Generator pair `(p, q)` with `p > q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythParam {
    p: u64,
    q: u64,
}

impl PythParam {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 || p <= q {
            return Err(Error::Domain("pythagorean parameters need p > q >= 1"));
        }
        Ok(PythParam { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Coprime and of opposite parity: the pair then yields a primitive triple.
    pub fn is_primitive(&self) -> bool {
        self.p.gcd(&self.q) == 1 && (self.p + self.q) % 2 == 1
    }
}

/// `(leg1, leg2, hyp)` with `leg1 = p^2 - q^2`, `leg2 = 2pq`, `hyp = p^2 + q^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple {
    pub leg1: u64,
    pub leg2: u64,
    pub hyp: u64,
}

impl PythTriple {
    /// Legs in ascending order, for comparisons up to leg order.
    pub fn sorted(&self) -> (u64, u64, u64) {
        (self.leg1.min(self.leg2), self.leg1.max(self.leg2), self.hyp)
    }
}

pub fn pyth_from_param(pp: PythParam) -> Result<PythTriple> {
    let overflow = Error::Overflow("pythagorean parameters too large");
    let p2 = pp.p.checked_mul(pp.p).ok_or(overflow.clone())?;
    let q2 = pp.q * pp.q;
    let two_pq = pp
        .p
        .checked_mul(pp.q)
        .and_then(|v| v.checked_mul(2))
        .ok_or(overflow.clone())?;
    let hyp = p2.checked_add(q2).ok_or(overflow)?;
    Ok(PythTriple {
        leg1: p2 - q2,
        leg2: two_pq,
        hyp,
    })
}

/// Every primitive Pythagorean triple with `hyp <= hyp_limit`, once each,
/// ordered by hypotenuse then `leg1`.
pub fn enum_primitive_pythagorean(hyp_limit: u64) -> Vec<PythTriple> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_add(1) <= hyp_limit {
        // Opposite parity: q starts at 1 when p is even, at 2 when p is odd.
        let mut q = if p % 2 == 0 { 1 } else { 2 };
        while q < p {
            if p * p + q * q > hyp_limit {
                break;
            }
            if p.gcd(&q) == 1 {
                let pp = PythParam { p, q };
                out.push(pyth_from_param(pp).expect("bounded by hyp_limit"));
            }
            q += 2;
        }
        p += 1;
    }
    out.sort_unstable_by_key(|t| (t.hyp, t.leg1));
    out
}

pub fn is_pythagorean(x: u64, y: u64, z: u64) -> bool {
    let (x, y, z) = (Natural::from(x), Natural::from(y), Natural::from(z));
    &x * &x + &y * &y == &z * &z
}
