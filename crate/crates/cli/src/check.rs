//! Single-triple probe: every applicable predicate for one `(a, b, c, n)`.

use std::fmt::Write as _;

use fermatlab_core::exact::pow_big;
use fermatlab_core::explorer::{integer_exponent_in, solve_exponent};
use fermatlab_core::geometry::c_bounds_hold;
use fermatlab_core::lemmas::{self, RealnessVerdict};
use fermatlab_core::triples::{classify_form, is_pythagorean, FormVariant};
use fermatlab_core::{FermatTriple, Natural, Result};
use serde::Serialize;

use crate::format::{round_sig, sig};

/// Exponents searched for an exact solution.
pub const INTEGER_EXPONENT_MAX: u32 = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FormReport {
    pub variant: &'static str,
    pub k: u64,
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckBundle {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub n: u32,
    pub parity: &'static str,
    pub parity_consistent: bool,
    pub form: Option<FormReport>,
    pub is_pythagorean: bool,
    /// `c^n - a^n - b^n`, exact and signed.
    pub defect: String,
    pub is_solution: bool,
    /// Realness of `(a^n + b^n)^(1/n)`.
    pub root_verdict: String,
    pub solved_n: f64,
    pub relative_residual: f64,
    pub c_bounds: bool,
    /// Smallest integer exponent in `1..=64` solving the triple exactly.
    pub integer_exponent: Option<u32>,
}

pub fn check_triple(a: u64, b: u64, c: u64, n: u32) -> Result<CheckBundle> {
    if n == 0 {
        return Err(fermatlab_core::Error::Domain("exponent must be positive"));
    }
    let t = FermatTriple::new(a, b, c)?;
    let (a, b, c) = t.as_tuple();
    let s = pow_big(&Natural::from(a), n) + pow_big(&Natural::from(b), n);
    let cn = pow_big(&Natural::from(c), n);
    let defect = if cn >= s {
        (&cn - &s).to_string()
    } else {
        format!("-{}", &s - &cn)
    };
    let root_verdict = match lemmas::verdict_of(&s, n)? {
        RealnessVerdict::IntegerValue(r) => format!("integer {r}"),
        RealnessVerdict::Irrational => "irrational".to_string(),
    };
    let form = classify_form(&t).ok().map(|tag| FormReport {
        variant: match tag.variant {
            FormVariant::CEven => "CEven",
            FormVariant::BEven => "BEven",
            FormVariant::AEven => "AEven",
        },
        k: tag.two_adic.k,
        d: tag.two_adic.d.to_string(),
    });
    let solution = solve_exponent(&t);
    Ok(CheckBundle {
        a,
        b,
        c,
        n,
        parity: match lemmas::parity_profile(&t) {
            lemmas::ParityProfile::OneEven => "OneEven",
            lemmas::ParityProfile::AllOdd => "AllOdd",
            lemmas::ParityProfile::TwoEven => "TwoEven",
            lemmas::ParityProfile::AllEven => "AllEven",
        },
        parity_consistent: lemmas::parity_consistent(&t, n)?,
        form,
        is_pythagorean: is_pythagorean(b, a, c),
        is_solution: cn == s,
        defect,
        root_verdict,
        solved_n: round_sig(solution.n),
        relative_residual: round_sig(solution.relative_residual),
        c_bounds: c_bounds_hold(a, c),
        integer_exponent: integer_exponent_in(&t, 1, INTEGER_EXPONENT_MAX),
    })
}

impl CheckBundle {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bundle serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<18} {v}");
        };
        line("triple", format!("({}, {}, {})", self.a, self.b, self.c));
        line("n", self.n.to_string());
        line("parity", self.parity.to_string());
        line("parity consistent", self.parity_consistent.to_string());
        line(
            "form",
            match &self.form {
                Some(f) => format!("{} (2^{} * {})", f.variant, f.k, f.d),
                None => "none".to_string(),
            },
        );
        line("pythagorean", self.is_pythagorean.to_string());
        line("defect", self.defect.clone());
        line("solution", self.is_solution.to_string());
        line("root verdict", self.root_verdict.clone());
        line("solved n", sig(self.solved_n));
        line("relative residual", sig(self.relative_residual));
        line("c bounds", self.c_bounds.to_string());
        line(
            "integer exponent",
            self.integer_exponent
                .map_or_else(|| format!("none in 1..={INTEGER_EXPONENT_MAX}"), |n| n.to_string()),
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fermatlab_core::Error;

    #[test]
    fn pythagorean_triple() {
        let r = check_triple(3, 4, 5, 2).unwrap();
        assert_eq!((r.a, r.b, r.c), (4, 3, 5));
        assert_eq!(r.parity, "OneEven");
        assert!(r.is_pythagorean && r.is_solution);
        assert_eq!(r.defect, "0");
        assert_eq!(r.root_verdict, "integer 5");
        assert!((r.solved_n - 2.0).abs() < 1e-12);
        assert_eq!(r.integer_exponent, Some(2));
    }

    #[test]
    fn cubic_near_miss() {
        let r = check_triple(6, 8, 9, 3).unwrap();
        assert_eq!(r.defect, "1");
        assert_eq!(r.root_verdict, "irrational");
        assert!(r.solved_n > 2.99 && r.solved_n < 3.0);
        assert!(r.c_bounds);
        assert_eq!(r.integer_exponent, None);
        let under = check_triple(6, 8, 9, 2).unwrap();
        assert_eq!(under.defect, "-19");
    }

    #[test]
    fn rejections_name_the_assumption() {
        assert_eq!(check_triple(6, 8, 10, 2), Err(Error::NonPrimitive { gcd: 2 }));
        assert!(matches!(check_triple(5, 4, 3, 2), Err(Error::Ordering { .. })));
        assert!(matches!(check_triple(0, 4, 5, 2), Err(Error::Domain(_))));
        assert!(matches!(check_triple(3, 4, 5, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn text_and_json_render() {
        let r = check_triple(6, 8, 9, 3).unwrap();
        assert!(r.to_text().contains("defect             1"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["parity"], "TwoEven");
        assert!(v["form"].is_null());
        let v: serde_json::Value =
            serde_json::from_str(&check_triple(3, 4, 5, 2).unwrap().to_json()).unwrap();
        assert_eq!(v["form"]["variant"], "AEven");
        assert_eq!(v["form"]["k"], 2);
        assert_eq!(v["form"]["d"], "1");
    }
}
