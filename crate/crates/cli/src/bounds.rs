//! Sweep bounds for the audit, with presets and desk-scale limits.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Small,
    Default,
    Large,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Preset::Small),
            "default" => Ok(Preset::Default),
            "large" => Ok(Preset::Large),
            other => Err(format!("unknown bounds preset `{other}` (small|default|large)")),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Small => "small",
            Preset::Default => "default",
            Preset::Large => "large",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Bounds {
    pub seed: u64,
    /// Hypotenuse limit for the parametrization and parity checks.
    pub pyth_hyp_limit: u64,
    /// Largest `c` in the exhaustive parity check.
    pub parity_c_max: u64,
    pub parity_n_min: u32,
    pub parity_n_max: u32,
    /// Random `(a, b, n)` draws for the root trichotomy.
    pub trichotomy_samples: u32,
    pub trichotomy_base_max: u64,
    pub rational_denominator_max: u64,
    /// Even legs `2pq = 2^e` for `e` up to this value.
    pub eq12_exponent_max: u32,
    /// Largest `q` in the `2^(kn-2)/q^2 + q^2` case analysis.
    pub eq12_q_max: u64,
    pub min_gap_c_max: u64,
    pub min_gap_m_max: u32,
    pub frac_samples: u32,
    pub frac_base_max: u64,
    pub frac_exponents: Vec<u32>,
    pub lattice_a_max: u64,
    /// Points on the geometry grid (split evenly over `(a, b)` pairs and `n`).
    pub geometry_points: u32,
    pub c_bounds_a_max: u64,
    pub a_eq_b_max: u64,
    pub a_eq_b_n_max: u32,
    pub two_adic_k_max: u64,
    pub two_adic_d_max: u64,
    /// Square roots up to this value for the perfect-square filter.
    pub square_root_max: u64,
    pub flt_a_max: u64,
    pub flt_n_max: u32,
    pub conj1_a_max: u64,
    pub conj1_n_max: u32,
}

impl Bounds {
    pub fn preset(p: Preset) -> Self {
        let default = Bounds {
            seed: 0x5eed_f3a7,
            pyth_hyp_limit: 1000,
            parity_c_max: 100,
            parity_n_min: 3,
            parity_n_max: 6,
            trichotomy_samples: 1000,
            trichotomy_base_max: 100,
            rational_denominator_max: 50,
            eq12_exponent_max: 20,
            eq12_q_max: 64,
            min_gap_c_max: 99,
            min_gap_m_max: 6,
            frac_samples: 1000,
            frac_base_max: 99,
            frac_exponents: vec![3, 5, 7],
            lattice_a_max: 10_000,
            geometry_points: 1000,
            c_bounds_a_max: 60,
            a_eq_b_max: 100,
            a_eq_b_n_max: 12,
            two_adic_k_max: 20,
            two_adic_d_max: 999,
            square_root_max: 30,
            flt_a_max: 200,
            flt_n_max: 20,
            conj1_a_max: 40,
            conj1_n_max: 20,
        };
        match p {
            Preset::Default => default,
            Preset::Small => Bounds {
                pyth_hyp_limit: 200,
                parity_c_max: 40,
                trichotomy_samples: 200,
                eq12_exponent_max: 12,
                eq12_q_max: 16,
                min_gap_c_max: 49,
                frac_samples: 200,
                lattice_a_max: 1000,
                geometry_points: 200,
                c_bounds_a_max: 30,
                a_eq_b_max: 30,
                square_root_max: 12,
                flt_a_max: 50,
                flt_n_max: 10,
                conj1_a_max: 15,
                ..default
            },
            Preset::Large => Bounds {
                pyth_hyp_limit: 5000,
                parity_c_max: 160,
                trichotomy_samples: 10_000,
                eq12_exponent_max: 40,
                eq12_q_max: 256,
                min_gap_c_max: 301,
                frac_samples: 10_000,
                lattice_a_max: 100_000,
                geometry_points: 10_000,
                c_bounds_a_max: 150,
                a_eq_b_max: 300,
                square_root_max: 60,
                flt_a_max: 400,
                flt_n_max: 30,
                conj1_a_max: 100,
                ..default
            },
        }
    }

    /// Rejects bounds that make a check meaningless.
    pub fn validate(&self) -> Result<(), String> {
        let mut problems = Vec::new();
        let mut need = |ok: bool, msg: &str| {
            if !ok {
                problems.push(msg.to_string());
            }
        };
        need(self.flt_a_max >= 2, "flt a-max must be at least 2");
        need(self.flt_n_max >= 2, "flt n-max must be at least 2");
        need(self.pyth_hyp_limit >= 5, "pythagorean hypotenuse limit must be at least 5");
        need(self.parity_c_max >= 3, "parity c-max must be at least 3");
        need(
            self.parity_n_min >= 1 && self.parity_n_min <= self.parity_n_max,
            "parity exponent range is empty",
        );
        need(self.trichotomy_base_max >= 1, "trichotomy base max must be positive");
        need(self.rational_denominator_max >= 1, "denominator bound must be positive");
        need(self.eq12_exponent_max >= 2, "eq12 exponent max must be at least 2");
        need(self.eq12_q_max >= 1, "eq12 q max must be positive");
        need(self.min_gap_c_max >= 3, "min-gap c max must be at least 3");
        need(self.min_gap_m_max >= 2, "min-gap exponent max must be at least 2");
        need(self.frac_base_max >= 1, "frac base max must be positive");
        need(
            !self.frac_exponents.is_empty()
                && self.frac_exponents.iter().all(|&n| n >= 3 && n % 2 == 1),
            "frac exponents must be odd and at least 3",
        );
        need(self.lattice_a_max >= 100, "lattice a max must be at least 100");
        need(self.geometry_points >= 1, "geometry grid must be nonempty");
        need(self.c_bounds_a_max >= 1, "c-bounds a max must be positive");
        need(self.a_eq_b_max >= 1 && self.a_eq_b_n_max >= 2, "a=b ranges are empty");
        need(self.two_adic_d_max >= 1, "two-adic d max must be positive");
        need(self.square_root_max >= 2, "square root max must be at least 2");
        need(self.conj1_a_max >= 1 && self.conj1_n_max >= 3, "conjecture ranges too small");
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems.join("; "))
        }
    }

    /// Fields above the desk-scale limits; claims that use them are left unchecked.
    pub fn exceeded(&self) -> Vec<&'static str> {
        let checks: [(&'static str, bool); 16] = [
            ("pythHypLimit", self.pyth_hyp_limit > 100_000),
            ("parityCMax", self.parity_c_max > 400),
            ("parityNMax", self.parity_n_max > 64),
            ("trichotomySamples", self.trichotomy_samples > 1_000_000),
            ("rationalDenominatorMax", self.rational_denominator_max > 10_000),
            ("eq12ExponentMax", self.eq12_exponent_max > 60),
            ("eq12QMax", self.eq12_q_max > 1 << 20),
            ("minGapCMax", self.min_gap_c_max > 2001),
            ("fracSamples", self.frac_samples > 1_000_000),
            ("latticeAMax", self.lattice_a_max > 10_000_000),
            ("geometryPoints", self.geometry_points > 10_000_000),
            ("cBoundsAMax", self.c_bounds_a_max > 1000),
            ("squareRootMax", self.square_root_max > 1000),
            ("fltAMax", self.flt_a_max > 2000),
            ("fltNMax", self.flt_n_max > 64),
            ("conj1AMax", self.conj1_a_max > 1000 || self.conj1_n_max > 64),
        ];
        checks
            .into_iter()
            .filter_map(|(name, over)| over.then_some(name))
            .collect()
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::preset(Preset::Default)
    }
}
