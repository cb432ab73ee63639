//! The claim registry: every checkable statement, its citation, and the
//! function that gathers evidence for it.

use std::collections::BTreeSet;

use fermatlab_core::exact::{int_nth_root, is_perfect_square, pow_big};
use fermatlab_core::explorer::solve_exponent;
use fermatlab_core::geometry::{self, TriangleShape};
use fermatlab_core::lemmas::{self, ParityProfile, RealnessVerdict};
use fermatlab_core::triples::{
    classify_form, enum_primitive_pythagorean, pyth_from_param, FormVariant,
};
use fermatlab_core::{FermatTriple, Natural, PythParam, Ratio};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::Bounds;
use crate::format::sig;
use crate::parallel;
use crate::report::{ClaimKind, Evidence, Verdict};

/// Counterexamples kept in a record; the total is still counted.
const MAX_LISTED: usize = 20;

pub struct Outcome {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl Outcome {
    /// Verified when no counterexample was recorded, otherwise falsified.
    fn decided(evidence: Evidence) -> Self {
        let verdict = if evidence.counterexamples.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Falsified
        };
        Outcome { verdict, evidence }
    }

    fn unchecked(evidence: Evidence) -> Self {
        Outcome {
            verdict: Verdict::Unchecked,
            evidence,
        }
    }
}

pub struct ClaimSpec {
    pub id: &'static str,
    /// Location plus a verbatim quote fragment.
    pub paper_ref: &'static str,
    pub kind: ClaimKind,
    /// Bound fields (camelCase, as in the report) this claim's evidence depends on.
    pub uses: &'static [&'static str],
    pub gather: fn(&Bounds) -> Outcome,
}

/// Accumulates a case count and a capped list of counterexamples.
#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    listed: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.listed.len() < MAX_LISTED {
                self.listed.push(describe());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        for cx in other.listed {
            if self.listed.len() < MAX_LISTED {
                self.listed.push(cx);
            }
        }
        self
    }

    fn into_evidence(self, scope: impl Into<String>) -> Evidence {
        let mut e = Evidence::new(scope);
        e.cases_checked = self.cases;
        if self.failures > self.listed.len() as u64 {
            e.notes.push(format!("{} counterexamples in total", self.failures));
        }
        e.counterexamples = self.listed;
        e
    }
}

/// Primitive triples `b <= a < c <= c_max`, in `(c, a, b)` order.
fn primitive_triples_up_to(c: u64) -> impl Iterator<Item = FermatTriple> {
    (1..c).flat_map(move |a| (1..=a).filter_map(move |b| FermatTriple::new(a, b, c).ok()))
}

fn narrative(scope: &str, note: &str) -> Outcome {
    Outcome::unchecked(Evidence::new(scope).note(note))
}

// ---------------------------------------------------------------------------
// Parity and forms

fn lemma1(b: &Bounds) -> Outcome {
    let (n_min, n_max) = (b.parity_n_min, b.parity_n_max);
    let tally = (3..=b.parity_c_max)
        .into_par_iter()
        .map(|c| {
            let mut t = Tally::default();
            for tr in primitive_triples_up_to(c) {
                let one_even = lemmas::parity_profile(&tr) == ParityProfile::OneEven;
                for n in n_min..=n_max {
                    let consistent = lemmas::parity_consistent(&tr, n).unwrap_or(!one_even);
                    t.check(consistent == one_even, || format!("{tr} n={n}"));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Outcome::decided(tally.into_evidence(format!(
        "gcd-1 triples b <= a < c <= {}, n in {n_min}..={n_max}: parity consistent iff exactly one even",
        b.parity_c_max
    )))
}

fn corollary2(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    let mut by_form = [0u64; 3];
    for c in 3..=b.parity_c_max {
        for tr in primitive_triples_up_to(c) {
            let one_even = lemmas::parity_profile(&tr) == ParityProfile::OneEven;
            match classify_form(&tr) {
                Ok(tag) => {
                    let (idx, even) = match tag.variant {
                        FormVariant::CEven => (0, tr.c()),
                        FormVariant::BEven => (1, tr.b()),
                        FormVariant::AEven => (2, tr.a()),
                    };
                    by_form[idx] += 1;
                    let ok = one_even
                        && even % 2 == 0
                        && tag.two_adic.k >= 1
                        && tag.two_adic.d.bit(0)
                        && tag.two_adic.recompose() == Natural::from(even);
                    t.check(ok, || format!("{tr} -> {:?} {:?}", tag.variant, tag.two_adic));
                }
                Err(_) => t.check(!one_even, || format!("{tr} not classified")),
            }
        }
    }
    let mut e = t.into_evidence(format!(
        "every gcd-1 triple with c <= {}: single even element splits as 2^k d, k >= 1, d odd",
        b.parity_c_max
    ));
    e.notes.push(format!(
        "forms: c even {}, b even {}, a even {}",
        by_form[0], by_form[1], by_form[2]
    ));
    Outcome::decided(e)
}

// ---------------------------------------------------------------------------
// Root trichotomy

fn lemma3(b: &Bounds) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let mut t = Tally::default();
    let mut integers = 0u64;
    for _ in 0..b.trichotomy_samples {
        let x = rng.gen_range(1..=b.trichotomy_base_max);
        let y = rng.gen_range(1..=b.trichotomy_base_max);
        let n = rng.gen_range(b.parity_n_min.max(2)..=b.parity_n_max.max(2));
        let s = pow_big(&Natural::from(x), n) + pow_big(&Natural::from(y), n);
        match lemmas::root_verdict(x, y, n) {
            Ok(RealnessVerdict::IntegerValue(c)) => {
                integers += 1;
                t.check(pow_big(&c, n) == s, || format!("({x}, {y}, n={n}) bad integer root {c}"));
            }
            Ok(RealnessVerdict::Irrational) => {
                let found = lemmas::rational_root_search(&s, n, b.rational_denominator_max);
                t.check(found.is_none(), || {
                    format!("({x}, {y}, n={n}) has rational root {}", found.unwrap())
                });
            }
            Err(e) => t.check(false, || format!("({x}, {y}, n={n}) error {e}")),
        }
    }
    let mut e = t.into_evidence(format!(
        "{} seeded draws a, b <= {}, n in {}..={}: inexact root has no rational p/q with q <= {}",
        b.trichotomy_samples,
        b.trichotomy_base_max,
        b.parity_n_min,
        b.parity_n_max,
        b.rational_denominator_max
    ));
    e.notes.push(format!("{integers} draws had an integer root"));
    Outcome::decided(e)
}

fn corollary4(b: &Bounds) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed.wrapping_add(1));
    let mut t = Tally::default();
    for _ in 0..b.trichotomy_samples {
        let a = rng.gen_range(1..=b.trichotomy_base_max);
        let c = a + rng.gen_range(1..=b.trichotomy_base_max);
        let n = rng.gen_range(b.parity_n_min.max(2)..=b.parity_n_max.max(2));
        let s = pow_big(&Natural::from(c), n) - pow_big(&Natural::from(a), n);
        match lemmas::verdict_of(&s, n) {
            Ok(RealnessVerdict::IntegerValue(root)) => {
                t.check(pow_big(&root, n) == s, || format!("c={c}, a={a}, n={n}"))
            }
            Ok(RealnessVerdict::Irrational) => {
                let found = lemmas::rational_root_search(&s, n, b.rational_denominator_max);
                t.check(found.is_none(), || format!("c={c}, a={a}, n={n}: b rational"))
            }
            Err(e) => t.check(false, || format!("c={c}, a={a}, n={n}: {e}")),
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "{} seeded draws of integer (a, c), n in {}..={}: b = (c^n - a^n)^(1/n) is integer or has no rational form with denominator <= {}",
        b.trichotomy_samples, b.parity_n_min, b.parity_n_max, b.rational_denominator_max
    )))
}

fn a_equals_b(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for a in 1..=b.a_eq_b_max {
        for n in 2..=b.a_eq_b_n_max {
            let verdict = lemmas::root_verdict(a, a, n);
            t.check(verdict == Ok(RealnessVerdict::Irrational), || {
                format!("a=b={a}, n={n}: {verdict:?}")
            });
            let c = geometry::c_of_n(a as f64, a as f64, f64::from(n)).unwrap_or(f64::NAN);
            let expected = a as f64 * 2f64.powf(1.0 / f64::from(n));
            t.check((c - expected).abs() <= lemmas::FLOAT_TOLERANCE * expected, || {
                format!("a=b={a}, n={n}: c={c} vs a*2^(1/n)={expected}")
            });
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "a = b <= {}, n in 2..={}: c = a 2^(1/n) is irrational and matches c(n)",
        b.a_eq_b_max, b.a_eq_b_n_max
    )))
}

// ---------------------------------------------------------------------------
// Geometry

fn c_bounds(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for a in 1..=b.c_bounds_a_max {
        for bb in 1..=a {
            let sum = u128::from(a * a + bb * bb);
            // c^2 < a^2 + b^2 is exactly "the real exponent solving the triple exceeds 2".
            for c in (a + 1..).take_while(|&c| u128::from(c * c) < sum) {
                t.check(geometry::c_bounds_hold(a, c), || format!("a={a}, b={bb}, c={c}"));
                if let Ok(tr) = FermatTriple::new(a, bb, c) {
                    let n = solve_exponent(&tr).n;
                    t.check(n > 2.0, || format!("{tr}: solved n = {n}"));
                }
            }
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "integer b <= a <= {}, c > a with real exponent > 2: a + 1 <= c and c^2 < 2a^2",
        b.c_bounds_a_max
    )))
}

fn triangle_remark(_: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for a in 1..=10u32 {
        for bb in 1..=a {
            let (a, bb) = (f64::from(a), f64::from(bb));
            for (n, want) in [
                (1.5, TriangleShape::Obtuse),
                (2.0, TriangleShape::Right),
                (3.0, TriangleShape::Acute),
            ] {
                let got = geometry::classify_triangle(a, bb, n);
                t.check(got == Ok(want), || format!("({a}, {bb}, n={n}): {got:?}"));
            }
            for i in 1..=50 {
                let n = 1.0 + f64::from(i) * 0.1;
                let Ok(shape) = geometry::classify_triangle(a, bb, n) else {
                    t.check(false, || format!("({a}, {bb}, n={n}) unclassified"));
                    continue;
                };
                let c = geometry::c_of_n(a, bb, n).unwrap_or(f64::NAN);
                let sign = a * a + bb * bb - c * c;
                let ok = match shape {
                    TriangleShape::Acute => sign > 0.0,
                    TriangleShape::Obtuse => sign < 0.0,
                    TriangleShape::Right => sign.abs() <= 1e-9 * c * c,
                    TriangleShape::Degenerate => false,
                };
                t.check(ok, || format!("({a}, {bb}, n={n}): {shape:?} but a^2+b^2-c^2 = {sign}"));
            }
        }
    }
    Outcome::decided(t.into_evidence(
        "b <= a <= 10: shape at n = 1.5, 2, 3 and sign of a^2 + b^2 - c^2 on n in (1, 6]",
    ))
}

/// `(a, b)` pairs and `n > 2` values covering `points` grid points.
fn geometry_grid(points: u32) -> Vec<(f64, f64, f64)> {
    let pairs: Vec<(f64, f64)> = (1..=10u32)
        .flat_map(|a| (1..=a).map(move |b| (f64::from(a), f64::from(b))))
        .collect();
    let per_pair = (points as usize).div_ceil(pairs.len());
    let mut out = Vec::with_capacity(points as usize);
    'outer: for &(a, b) in &pairs {
        for i in 1..=per_pair {
            if out.len() == points as usize {
                break 'outer;
            }
            out.push((a, b, 2.0 + 10.0 * i as f64 / per_pair as f64));
        }
    }
    out
}

fn theta_bound(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    let grid = geometry_grid(b.geometry_points);
    let mut prev: Option<(f64, f64, f64)> = None;
    for &(a, bb, n) in &grid {
        let c = geometry::c_of_n(a, bb, n).unwrap_or(f64::NAN);
        t.check(a < c && c < a * std::f64::consts::SQRT_2, || {
            format!("({a}, {bb}, n={n}): c={c}")
        });
        let theta = geometry::theta_angle(a, bb, n).unwrap_or(f64::NAN);
        t.check(60.0 < theta && theta < 90.0, || format!("({a}, {bb}, n={n}): theta={theta}"));
        if let Some((pa, pb, pc)) = prev {
            if pa == a && pb == bb {
                t.check(c < pc, || format!("({a}, {bb}): c not decreasing at n={n}"));
            }
        }
        prev = Some((a, bb, c));
    }
    Outcome::decided(t.into_evidence(format!(
        "{} grid points, b <= a <= 10, n in (2, 12]: a < c < a sqrt2, 60 < theta < 90, c decreasing in n",
        grid.len()
    )))
}

fn note_dagger(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    let hundred = geometry::lattice_count_on_arc(100, 3.0);
    t.check(
        matches!(hundred, Ok(l) if l.count == 25 && l.bound == 25),
        || format!("a=100: {hundred:?}"),
    );
    for a in 1..=3 {
        let l = geometry::lattice_count_on_arc(a, 3.0);
        t.check(matches!(l, Ok(l) if l.count == 0), || format!("a={a}: {l:?}"));
    }
    let sweep = (1..=b.lattice_a_max)
        .into_par_iter()
        .map(|a| {
            let mut t = Tally::default();
            let l = geometry::lattice_count_on_arc(a, 3.0);
            t.check(matches!(l, Ok(l) if l.count <= l.bound), || format!("a={a}: {l:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);
    let t = t.merge(sweep);
    let mut e = t.into_evidence(format!(
        "count of integers in (a, a 2^(1/3)) <= floor(a(2^(1/3) - 1)) for a <= {}; (25, 25) at a = 100; none for a in 1..=3",
        b.lattice_a_max
    ));
    if let Ok(l) = hundred {
        e.notes.push(format!(
            "at a = 100 the sqrt(2) window (a, a sqrt2) holds {} integers",
            l.sqrt2_count
        ));
    }
    Outcome::decided(e)
}

// ---------------------------------------------------------------------------
// Pythagorean machinery

fn brute_force_pythagorean(limit: u64) -> BTreeSet<(u64, u64, u64)> {
    (1..=limit)
        .into_par_iter()
        .flat_map_iter(|z| {
            (1..z).filter_map(move |y| {
                let x2 = z * z - y * y;
                let x = int_nth_root(&Natural::from(x2), 2).ok()?;
                let x: u64 = x.exact.then(|| x.root.try_into().ok()).flatten()?;
                (x <= y && fermatlab_core::exact::gcd3_u64(x, y, z) == 1).then_some((x, y, z))
            })
        })
        .collect()
}

fn pyth_param(b: &Bounds) -> Outcome {
    let got: Vec<_> = enum_primitive_pythagorean(b.pyth_hyp_limit)
        .iter()
        .map(|t| t.sorted())
        .collect();
    let got_set: BTreeSet<_> = got.iter().copied().collect();
    let expected = brute_force_pythagorean(b.pyth_hyp_limit);
    let mut t = Tally::default();
    t.check(got.len() == got_set.len(), || "duplicate triple in enumeration".to_string());
    for missing in expected.difference(&got_set) {
        t.check(false, || format!("missing {missing:?}"));
    }
    for extra in got_set.difference(&expected) {
        t.check(false, || format!("spurious {extra:?}"));
    }
    t.cases = expected.len() as u64;
    Outcome::decided(t.into_evidence(format!(
        "(p^2 - q^2, 2pq, p^2 + q^2), p > q coprime of opposite parity, equals brute force for hyp <= {}",
        b.pyth_hyp_limit
    )))
}

fn hyp_odd(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for p in enum_primitive_pythagorean(b.pyth_hyp_limit) {
        let evens = (p.leg1 % 2 == 0) as u8 + (p.leg2 % 2 == 0) as u8;
        t.check(p.hyp % 2 == 1 && evens == 1, || format!("{:?}", p.sorted()));
    }
    Outcome::decided(t.into_evidence(format!(
        "primitive Pythagorean triples with hyp <= {}: hypotenuse odd, exactly one even leg",
        b.pyth_hyp_limit
    )))
}

/// Every `(p, q)` with `p > q` and `2pq = 2^e`, `2 <= e <= e_max`.
fn power_of_two_params(e_max: u32) -> Vec<(u32, PythParam)> {
    let mut out = Vec::new();
    for e in 2..=e_max {
        let pq = 1u64 << (e - 1);
        for i in 0..e {
            let q = 1u64 << i;
            if let Ok(pp) = PythParam::new(pq / q, q) {
                out.push((e, pp));
            }
        }
    }
    out
}

fn eq12(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    let mut primitive = 0;
    for (e, pp) in power_of_two_params(b.eq12_exponent_max) {
        primitive += pp.is_primitive() as u32;
        let hyp = pyth_from_param(pp).map(|tr| tr.hyp);
        let value = lemmas::eq12_evaluate(2 * e, pp.q());
        t.check(
            matches!((&hyp, &value), (Ok(h), Ok(v)) if *v == Ratio::from(*h)),
            || format!("p={}, q={}, kn={}: {value:?} vs {hyp:?}", pp.p(), pp.q(), 2 * e),
        );
    }
    let mut e = t.into_evidence(format!(
        "all p > q with 2pq = 2^e, e <= {}: 2^(kn-2)/q^2 + q^2 = p^2 + q^2 with kn = 2e",
        b.eq12_exponent_max
    ));
    e.notes.push(format!("{primitive} of these parameter pairs are primitive"));
    Outcome::decided(e)
}

fn pq_dom(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for (e, pp) in power_of_two_params(b.eq12_exponent_max) {
        let r = lemmas::pq_dominance(pp, 2 * e);
        t.check(r == Ok(true), || format!("p={}, q={}, kn={}: {r:?}", pp.p(), pp.q(), 2 * e));
    }
    Outcome::decided(t.into_evidence(format!(
        "all p > q with 2pq = 2^e, e <= {}: 2^(kn-2) > q^2",
        b.eq12_exponent_max
    )))
}

fn q_even_equal(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for (e, pp) in power_of_two_params(b.eq12_exponent_max) {
        let power = Natural::from(1u8) << (2 * e - 2);
        let q2 = Natural::from(pp.q()) * Natural::from(pp.q());
        t.check(power != q2, || format!("p={}, q={}: q^2 = 2^(kn-2)", pp.p(), pp.q()));
    }
    Outcome::decided(t.into_evidence(format!(
        "no p > q with 2pq = 2^e, e <= {}, has q^2 = 2^(kn-2)",
        b.eq12_exponent_max
    )))
}

/// Even `kn` values used in the q-case analysis.
fn kn_values(b: &Bounds) -> impl Iterator<Item = u32> {
    (2..=b.eq12_exponent_max).map(|e| 2 * e)
}

fn q_even_divides(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for kn in kn_values(b) {
        let power = Natural::from(1u8) << (kn - 2);
        for q in (2..=b.eq12_q_max).step_by(2) {
            let q2 = Natural::from(q) * Natural::from(q);
            if &power % &q2 != Natural::from(0u8) || power == q2 {
                continue;
            }
            let v = lemmas::eq12_evaluate(kn, q);
            t.check(
                matches!(&v, Ok(v) if v.to_integer().is_some_and(|i| !i.bit(0))),
                || format!("kn={kn}, q={q}: {v:?}"),
            );
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "even q <= {} with q^2 | 2^(kn-2) != q^2, even kn <= {}: 2^(kn-2)/q^2 + q^2 is an even integer",
        b.eq12_q_max,
        2 * b.eq12_exponent_max
    )))
}

fn q_even_not_dividing(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for kn in kn_values(b) {
        let power = Natural::from(1u8) << (kn - 2);
        for q in (2..=b.eq12_q_max).step_by(2) {
            let q2 = Natural::from(q) * Natural::from(q);
            if &power % &q2 == Natural::from(0u8) {
                continue;
            }
            let v = lemmas::eq12_evaluate(kn, q);
            t.check(matches!(&v, Ok(v) if !v.is_integer()), || format!("kn={kn}, q={q}: {v:?}"));
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "even q <= {} with q^2 not dividing 2^(kn-2), even kn <= {}: value is not an integer",
        b.eq12_q_max,
        2 * b.eq12_exponent_max
    )))
}

fn q_odd_one(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    // With q = 1 the parametrization forces hyp - leg1 = 2.
    for p in (2..=b.eq12_q_max.max(2)).step_by(2) {
        let tr = PythParam::new(p, 1).and_then(pyth_from_param);
        t.check(matches!(tr, Ok(tr) if tr.hyp - tr.leg1 == 2), || format!("p={p}: {tr:?}"));
    }
    let gap = min_gap_tally(b);
    Outcome::decided(t.merge(gap).into_evidence(format!(
        "q = 1 gives hyp - leg1 = 2 for even p <= {}; c^m - a^m > 2 for odd a < c <= {}, m in 2..={}",
        b.eq12_q_max.max(2),
        b.min_gap_c_max,
        b.min_gap_m_max
    )))
}

fn q_odd_greater(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for kn in kn_values(b) {
        for q in (3..=b.eq12_q_max).step_by(2) {
            let v = lemmas::eq12_evaluate(kn, q);
            t.check(matches!(&v, Ok(v) if !v.is_integer()), || format!("kn={kn}, q={q}: {v:?}"));
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "odd 3 <= q <= {}, even kn <= {}: 2^(kn-2)/q^2 + q^2 is not an integer",
        b.eq12_q_max,
        2 * b.eq12_exponent_max
    )))
}

fn min_gap_tally(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for c in (3..=b.min_gap_c_max).step_by(2) {
        for a in (1..c).step_by(2) {
            for m in 2..=b.min_gap_m_max {
                let r = lemmas::min_gap_holds(a, c, m);
                t.check(r == Ok(true), || format!("a={a}, c={c}, m={m}: {r:?}"));
            }
        }
    }
    t
}

fn min_gap(b: &Bounds) -> Outcome {
    Outcome::decided(min_gap_tally(b).into_evidence(format!(
        "odd a < c <= {}, m in 2..={}: c^m - a^m > 2",
        b.min_gap_c_max, b.min_gap_m_max
    )))
}

fn two_adic_h(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    for k in 0..=b.two_adic_k_max {
        for d in (1..=b.two_adic_d_max).step_by(2) {
            let f = lemmas::two_adic_as_power_of_two(k, &Natural::from(d));
            t.check(
                matches!(&f, Ok(f) if f.h_is_integer == (d == 1) && f.is_consistent()
                    && f.exact_source == Some(Ratio::from_integer(Natural::from(d) << k))),
                || format!("k={k}, d={d}: {f:?}"),
            );
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "k <= {}, odd d <= {}: 2^k d = 2^h with h integral iff d = 1; 2^h reproduces the value",
        b.two_adic_k_max, b.two_adic_d_max
    )))
}

fn perfect_squares(b: &Bounds) -> Outcome {
    let mut t = Tally::default();
    let n_max = b.flt_n_max.max(3);
    for x in 1..=b.square_root_max {
        for y in 1..=x {
            let (a, bb) = (x * x, y * y);
            if fermatlab_core::exact::gcd3_u64(a, bb, 1) != 1 {
                continue;
            }
            for n in (3..=n_max).step_by(2) {
                let v = lemmas::root_verdict(a, bb, n);
                t.check(v == Ok(RealnessVerdict::Irrational), || {
                    let square = match &v {
                        Ok(RealnessVerdict::IntegerValue(c)) => is_perfect_square(c),
                        _ => false,
                    };
                    format!("a={a}, b={bb}, n={n}: {v:?} (c square: {square})")
                });
            }
        }
    }
    Outcome::decided(t.into_evidence(format!(
        "perfect squares a = x^2, b = y^2 with y <= x <= {}, odd n in 3..={}: c = (a^n + b^n)^(1/n) is irrational",
        b.square_root_max, n_max
    )))
}

fn frac_identity(b: &Bounds) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed.wrapping_add(2));
    let mut t = Tally::default();
    let odd = |rng: &mut ChaCha8Rng| 2 * rng.gen_range(0..b.frac_base_max.div_ceil(2)) + 1;
    let mut divisible = 0u64;
    let mut fixed = vec![(3, 3, 3), (9, 3, 5), (3, 5, 3)];
    for _ in 0..b.frac_samples {
        let a = odd(&mut rng);
        let bb = odd(&mut rng);
        let n = b.frac_exponents[rng.gen_range(0..b.frac_exponents.len())];
        fixed.push((a, bb, n));
    }
    for (a, bb, n) in fixed {
        if lemmas::b_squared_over_a(a, bb).is_ok_and(|r| r.is_integer()) {
            divisible += 1;
        }
        let r = lemmas::frac_reduction_check(a, bb, n);
        t.check(r == Ok(true), || format!("a={a}, b={bb}, n={n}: {r:?}"));
    }
    let mut e = t.into_evidence(format!(
        "{} seeded odd (a, b) <= {} with n in {:?}, plus a = b and a | b^2 cases: both rearrangements hold exactly",
        b.frac_samples, b.frac_base_max, b.frac_exponents
    ));
    e.notes.push(format!("{divisible} cases had integer b^2/a"));
    Outcome::decided(e)
}

// ---------------------------------------------------------------------------
// Searches

fn flt_sweep(b: &Bounds) -> Outcome {
    if b.flt_n_max >= 3 {
        let found = parallel::flt_brute_force(b.flt_a_max, b.flt_n_max);
        let mut e = Evidence::new(format!(
            "primitive b <= a <= {}, a + 1 <= c, c^2 < 2a^2, n in 3..={}: exact solutions",
            b.flt_a_max, b.flt_n_max
        ));
        e.cases_checked = window_triples(b.flt_a_max);
        match found {
            Ok(sols) => {
                e.counterexamples = sols
                    .iter()
                    .map(|s| format!("{} n={}", s.triple, s.n))
                    .collect()
            }
            Err(err) => e.counterexamples.push(format!("search failed: {err}")),
        }
        return Outcome::decided(e);
    }

    // Validation mode: n = 2 must recover the primitive Pythagorean triples.
    let mut e = Evidence::new(format!(
        "validation mode: primitive b <= a <= {}, n = 2; hits must equal the primitive Pythagorean triples with larger leg <= {}",
        b.flt_a_max, b.flt_a_max
    ));
    e.cases_checked = window_triples(b.flt_a_max);
    let hits = match parallel::flt_search(b.flt_a_max, 2, 2) {
        Ok(h) => h,
        Err(err) => {
            e.counterexamples.push(format!("search failed: {err}"));
            return Outcome::decided(e);
        }
    };
    let found: BTreeSet<_> = hits.iter().map(|s| (s.triple.b(), s.triple.a(), s.triple.c())).collect();
    let hyp_limit = (b.flt_a_max as f64 * std::f64::consts::SQRT_2).ceil() as u64;
    let expected: BTreeSet<_> = enum_primitive_pythagorean(hyp_limit)
        .iter()
        .map(|p| p.sorted())
        .filter(|&(_, big, _)| big <= b.flt_a_max)
        .collect();
    e.expected_findings = found.iter().map(|(x, y, z)| format!("({y}, {x}, {z}) n=2")).collect();
    for m in expected.difference(&found) {
        e.counterexamples.push(format!("missed {m:?}"));
    }
    for m in found.difference(&expected) {
        e.counterexamples.push(format!("unexpected {m:?}"));
    }
    Outcome::decided(e)
}

/// Number of primitive triples scanned by the sweep window.
fn window_triples(a_max: u64) -> u64 {
    (1..=a_max)
        .into_par_iter()
        .map(|a| {
            (1..=a)
                .map(|b| {
                    fermatlab_core::explorer::hypotenuse_window(a)
                        .filter(|&c| fermatlab_core::exact::gcd3_u64(a, b, c) == 1)
                        .count() as u64
                })
                .sum::<u64>()
        })
        .sum()
}

fn conjecture1(b: &Bounds) -> Outcome {
    let rows = parallel::conjecture1_experiment(b.conj1_a_max, b.conj1_n_max);
    let mut t = Tally::default();
    let mut low_integer = 0u64;
    let mut closest: Option<(f64, FermatTriple, f64)> = None;
    for r in &rows {
        t.check(r.excluded, || format!("{} n={:?}", r.triple, r.integer_exponent));
        if r.integer_exponent.is_some() {
            low_integer += 1;
        } else if closest.is_none_or(|(d, _, _)| r.distance_to_integer < d) {
            closest = Some((r.distance_to_integer, r.triple, r.solution.n));
        }
    }
    let mut e = t.into_evidence(format!(
        "primitive b <= a <= {}, a + 1 <= c, c^2 < 2a^2: no integer exponent in 3..={} (exact); real exponent by bisection",
        b.conj1_a_max, b.conj1_n_max
    ));
    e.notes.push(format!("{low_integer} rows solve exactly at n = 1 or n = 2"));
    if let Some((d, tr, n)) = closest {
        e.notes.push(format!(
            "closest non-integer exponent: {tr} n = {} (distance {})",
            sig(n),
            sig(d)
        ));
    }
    e.notes
        .push("irrationality of the real exponent is not decided; only integrality is excluded".into());
    Outcome::decided(e)
}

// ---------------------------------------------------------------------------
// Narrative steps

fn lemma5_narrative(_: &Bounds) -> Outcome {
    narrative(
        "Pythagorean-triple necessity applied to the exponent n/2",
        "for odd n the halves a^(n/2), c^(n/2) are not integers and the Pythagorean-triple notion is undefined; the arithmetic sub-cases are checked separately",
    )
}

fn lemma6_narrative(_: &Bounds) -> Outcome {
    narrative(
        "rewriting 2^k d as 2^h with real h and reusing the d = 1 argument",
        "only the integrality of h (L6.h) is computable",
    )
}

fn lemma7_narrative(_: &Bounds) -> Outcome {
    narrative(
        "perfect-square triples reduced to the earlier lemmas",
        "the filtered search (L7.squares) is evidence only",
    )
}

fn lemma8_narrative(_: &Bounds) -> Outcome {
    narrative(
        "replacing the left-hand side of the rearranged identity by (2^k d)^n",
        "the identities themselves are FRAC_ID; the substitution is an inference",
    )
}

fn table1_narrative(_: &Bounds) -> Outcome {
    narrative(
        "structural comparison of the two equations, row F",
        "no computation evaluates a structural comparison",
    )
}

pub static CLAIMS: &[ClaimSpec] = &[
    ClaimSpec {
        id: "L1",
        paper_ref: "Lemma 1: \"Then a single element of the triple $(a,b,c)$ is even\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["parityCMax", "parityNMax"],
        gather: lemma1,
    },
    ClaimSpec {
        id: "C2",
        paper_ref: "Corollary 2, Eqs. (1)-(3): \"implies this equation has one of the following three forms\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["parityCMax"],
        gather: corollary2,
    },
    ClaimSpec {
        id: "L3",
        paper_ref: "Lemma 3: \"Then $c$ is not a fractional number\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["trichotomySamples", "rationalDenominatorMax", "parityNMax"],
        gather: lemma3,
    },
    ClaimSpec {
        id: "C4",
        paper_ref: "Corollary 4: \"the third element is not a fractional number\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["trichotomySamples", "rationalDenominatorMax", "parityNMax"],
        gather: corollary4,
    },
    ClaimSpec {
        id: "A_EQ_B",
        paper_ref: "Section 2.1: \"gives $c=a\\sqrt[n]{2}$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &[],
        gather: a_equals_b,
    },
    ClaimSpec {
        id: "C_BOUNDS",
        paper_ref: "Section 2.1: \"then for all $n>2$ we have $(a+1) \\leq c<a\\sqrt{2}$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["cBoundsAMax"],
        gather: c_bounds,
    },
    ClaimSpec {
        id: "TRIANGLE_REMARK",
        paper_ref: "Section 2.1, Remark: \"If $1<n<2$, then $\\Delta ABC$ is obtuse; and for $n>2 $ the $\\Delta ABC$ is acute. At $n=2$,  $\\Delta ABC$ is a right triangle\"",
        kind: ClaimKind::EmpiricalSweep,
        uses: &[],
        gather: triangle_remark,
    },
    ClaimSpec {
        id: "THETA_BOUND",
        paper_ref: "Section 2.1: \"$60$\\textdegree $<\\theta <90$\\textdegree\"",
        kind: ClaimKind::EmpiricalSweep,
        uses: &["geometryPoints"],
        gather: theta_bound,
    },
    ClaimSpec {
        id: "NOTE_DAGGER",
        paper_ref: "Note [†]: \"$h\\leq \\lfloor a(\\sqrt[3]{2}-1)\\rfloor \\lessapprox \\lfloor 0$.$2599\\ a\\rfloor$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["latticeAMax"],
        gather: note_dagger,
    },
    ClaimSpec {
        id: "PYTH_PARAM",
        paper_ref: "Section 3.1, Eqs. (9)-(11): \"The equation for primitive Pythagorean triples\\cite{TP} was ancestrally proved\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["pythHypLimit"],
        gather: pyth_param,
    },
    ClaimSpec {
        id: "HYP_ODD",
        paper_ref: "Lemma 5, Case 1: \"requires that the hypotenuse $2^{kn/2}$ is odd\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["pythHypLimit"],
        gather: hyp_odd,
    },
    ClaimSpec {
        id: "EQ12",
        paper_ref: "Eq. (12): \"\\frac{2^{kn-2}}{q^2}+q^2\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax"],
        gather: eq12,
    },
    ClaimSpec {
        id: "PQ_DOM",
        paper_ref: "Lemma 5, Case 2, q even, item 1: \"Squaring both sides of \\mbox{Equation (\\ref{2pq})} results that $2^{kn-2}>q^2$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax"],
        gather: pq_dom,
    },
    ClaimSpec {
        id: "L5.case2.qeven1",
        paper_ref: "Lemma 5, Case 2, q even, item 1: \"Squaring both sides of \\mbox{Equation (\\ref{2pq})} results that $2^{kn-2}>q^2$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax"],
        gather: q_even_equal,
    },
    ClaimSpec {
        id: "L5.case2.qeven2",
        paper_ref: "Lemma 5, Case 2, q even, item 2: \"Assume $q$ is even such that $q^2\\mid 2^{kn-2}$ and $2^{kn-2}\\neq q^{2}$. Then  $c^{n/2}$ is even\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax", "eq12QMax"],
        gather: q_even_divides,
    },
    ClaimSpec {
        id: "L5.case2.qeven3",
        paper_ref: "Lemma 5, Case 2, q even, item 3: \"If $q$ is even such that $q^2\\nmid 2^{kn-2}$ then $c^{n/2}\\in\\mathbb{Q}\\setminus \\mathbb{Z}$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax", "eq12QMax"],
        gather: q_even_not_dividing,
    },
    ClaimSpec {
        id: "L5.case2.qodd1",
        paper_ref: "Lemma 5, Case 2, q odd, item 1: \"rewriting gives $c^{n/2}-a^{n/2}=2$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12QMax", "minGapCMax"],
        gather: q_odd_one,
    },
    ClaimSpec {
        id: "L5.case2.qodd2",
        paper_ref: "Lemma 5, Case 2, q odd, item 2: \"Assume $q$ is odd greater than $1$. Then $c^{n/2}\\in\\mathbb{Q}\\setminus \\mathbb{Z}$ since $q^2 \\nmid 2^{kn-2}$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["eq12ExponentMax", "eq12QMax"],
        gather: q_odd_greater,
    },
    ClaimSpec {
        id: "MIN_GAP",
        paper_ref: "Lemma 5, Case 2, q odd, item 1: \"when raising $a$ and $c$ to an integer power greater than $1$, then the difference is greater than $2$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["minGapCMax"],
        gather: min_gap,
    },
    ClaimSpec {
        id: "L5",
        paper_ref: "Lemma 5, Case 2, Remark: \"It is evident that a \\textit{necessary condition} for Equation (\\ref{b=2k}) is that\"",
        kind: ClaimKind::NarrativeUnchecked,
        uses: &[],
        gather: lemma5_narrative,
    },
    ClaimSpec {
        id: "L6.h",
        paper_ref: "Lemma 6, Case 1: \"Then $2^{k}d=2^{h}$\"",
        kind: ClaimKind::ExactTheorem,
        uses: &[],
        gather: two_adic_h,
    },
    ClaimSpec {
        id: "L6",
        paper_ref: "Lemma 6, Case 1: \"Notice that $2^{k}d$ can be expressed as $2^{h}$, with $h\\in\\mathbb{R}$\"",
        kind: ClaimKind::NarrativeUnchecked,
        uses: &[],
        gather: lemma6_narrative,
    },
    ClaimSpec {
        id: "L7.squares",
        paper_ref: "Lemma 7: \"Suppose  $(a,b,c)$ is a triple with three perfect square numbers\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["squareRootMax", "fltNMax"],
        gather: perfect_squares,
    },
    ClaimSpec {
        id: "L7",
        paper_ref: "Lemma 7, Case 1: \"This case is proved following a similar reasoning\"",
        kind: ClaimKind::NarrativeUnchecked,
        uses: &[],
        gather: lemma7_narrative,
    },
    ClaimSpec {
        id: "FRAC_ID",
        paper_ref: "Eq. (13) and the rearranged form: \"(2^{h}d)^n=a^{n}+\\left[\\frac{b^2}{a}\\right]^n\", \"adding $b^n$ to both sides\"",
        kind: ClaimKind::ExactTheorem,
        uses: &["fracSamples"],
        gather: frac_identity,
    },
    ClaimSpec {
        id: "TABLE1",
        paper_ref: "Table 1: \"The valid structure for Equation\"",
        kind: ClaimKind::NarrativeUnchecked,
        uses: &[],
        gather: table1_narrative,
    },
    ClaimSpec {
        id: "L8",
        paper_ref: "Lemma 8, Case 1, item 3: \"we are allowed to replace the rascal\"",
        kind: ClaimKind::NarrativeUnchecked,
        uses: &[],
        gather: lemma8_narrative,
    },
    ClaimSpec {
        id: "FLT_SWEEP",
        paper_ref: "Theorem 9: \"there are no positive integers \\mbox{$a,b,c$}, that satisfy the equation $a^n+b^n=c^n$\"",
        kind: ClaimKind::EmpiricalSweep,
        uses: &["fltAMax", "fltNMax"],
        gather: flt_sweep,
    },
    ClaimSpec {
        id: "CONJ1",
        paper_ref: "Conjecture 1: \"Suppose $a,b,c$ are positive integers that satisfy equation $a^n+b^n=c^n$. Then, $n$ is irrational\"",
        kind: ClaimKind::EmpiricalSweep,
        uses: &["conj1AMax"],
        gather: conjecture1,
    },
];

/// Citation edges `(cited, citing)`; the chain follows "Applying Lemma ..." links.
pub static EDGES: &[(&str, &str)] = &[
    ("L1", "C2"),
    ("L3", "C4"),
    ("L1", "L5"),
    ("C2", "L5"),
    ("L3", "L5"),
    ("C4", "L5"),
    ("HYP_ODD", "L5"),
    ("PYTH_PARAM", "EQ12"),
    ("EQ12", "L5.case2.qeven1"),
    ("EQ12", "L5.case2.qeven2"),
    ("EQ12", "L5.case2.qeven3"),
    ("EQ12", "L5.case2.qodd1"),
    ("EQ12", "L5.case2.qodd2"),
    ("PQ_DOM", "L5.case2.qeven1"),
    ("MIN_GAP", "L5.case2.qodd1"),
    ("L5.case2.qeven1", "L5"),
    ("L5.case2.qeven2", "L5"),
    ("L5.case2.qeven3", "L5"),
    ("L5.case2.qodd1", "L5"),
    ("L5.case2.qodd2", "L5"),
    ("L5", "L6"),
    ("L6.h", "L6"),
    ("L1", "L7"),
    ("L5", "L7"),
    ("L6", "L7"),
    ("L7.squares", "L7"),
    ("L7", "FRAC_ID"),
    ("L7", "L8"),
    ("FRAC_ID", "L8"),
    ("TABLE1", "L8"),
    ("C4", "L8"),
    ("L6", "L8"),
    ("C_BOUNDS", "NOTE_DAGGER"),
    ("C_BOUNDS", "FLT_SWEEP"),
    ("L5", "FLT_SWEEP"),
    ("L8", "FLT_SWEEP"),
    ("FLT_SWEEP", "CONJ1"),
];
