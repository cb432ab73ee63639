use fermatlab_core::exact::{int_nth_root, pow_big, two_adic_split};
use fermatlab_core::explorer::{self, exponent_gap, solve_exponent, RELATIVE_RESIDUAL_BOUND};
use fermatlab_core::geometry::{self, TriangleShape};
use fermatlab_core::lemmas::{self, RealnessVerdict};
use fermatlab_core::{FermatTriple, Natural};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn nth_root_brackets(s in 1u64..u64::MAX, n in 1u32..10) {
        let r = int_nth_root(&Natural::from(s), n).unwrap();
        let s = Natural::from(s);
        prop_assert!(pow_big(&r.root, n) <= s);
        prop_assert!(pow_big(&(&r.root + 1u32), n) > s);
        prop_assert_eq!(r.exact, pow_big(&r.root, n) == s);
    }

    #[test]
    fn verdict_agrees_with_rational_search(a in 1u64..200, b in 1u64..200, n in 2u32..7) {
        let s = pow_big(&Natural::from(a), n) + pow_big(&Natural::from(b), n);
        let rational = lemmas::rational_root_search(&s, n, 30);
        match lemmas::root_verdict(a, b, n).unwrap() {
            RealnessVerdict::IntegerValue(c) => {
                let r = rational.expect("an integer root is rational");
                prop_assert!(r.is_integer());
                prop_assert_eq!(r.numer(), &c);
            }
            RealnessVerdict::Irrational => prop_assert!(rational.is_none()),
        }
    }

    #[test]
    fn two_adic_recomposes(m in 1u64..u64::MAX) {
        let f = two_adic_split(&Natural::from(m)).unwrap();
        prop_assert!(f.d.bit(0));
        prop_assert_eq!(f.recompose(), Natural::from(m));
    }

    #[test]
    // Beyond these ranges (b/a)^n drops below f64 resolution and c rounds to a.
    fn c_decreases_in_n(a in 1u32..1000, frac in 0.25f64..=1.0, n in 2.01f64..12.0) {
        let b = (f64::from(a) * frac).ceil();
        let a = f64::from(a);
        let c1 = geometry::c_of_n(a, b, n).unwrap();
        let c2 = geometry::c_of_n(a, b, n + 0.5).unwrap();
        prop_assert!(c2 < c1);
        prop_assert!(a < c1 && c1 < a * 2f64.sqrt());
        let theta = geometry::theta_angle(a, b, n).unwrap();
        prop_assert!(theta > 60.0 && theta < 90.0);
        prop_assert_eq!(geometry::classify_triangle(a, b, n).unwrap(), TriangleShape::Acute);
    }

    #[test]
    fn gap_is_decreasing_and_solver_accurate(a in 2u64..500, b in 1u64..500, dc in 1u64..200) {
        let (a, b) = (a.max(b), a.min(b));
        let Ok(t) = FermatTriple::new(a, b, a + dc) else { return Ok(()) };
        let mut prev = exponent_gap(&t, 0.0);
        for i in 1..40 {
            let g = exponent_gap(&t, f64::from(i) * 0.25);
            prop_assert!(g < prev);
            prev = g;
        }
        let s = solve_exponent(&t);
        prop_assert!(s.relative_residual.abs() <= RELATIVE_RESIDUAL_BOUND);
        prop_assert!(s.bracket.0 <= s.n && s.n <= s.bracket.1);
    }
}

#[test]
fn no_solutions_at_desk_scale() {
    assert!(explorer::flt_brute_force(200, 20).unwrap().is_empty());
}

#[test]
fn conjecture_rows_match_exact_checks() {
    for row in explorer::conjecture1_experiment(25, 12) {
        let (a, b, c) = row.triple.as_tuple();
        for n in 1..=12 {
            let s = pow_big(&Natural::from(a), n) + pow_big(&Natural::from(b), n);
            let solved = s == pow_big(&Natural::from(c), n);
            assert_eq!(solved, row.integer_exponent == Some(n), "{} n={n}", row.triple);
        }
    }
}

#[test]
fn lattice_boundary_is_exact() {
    for a in 1..=3000u64 {
        let l = geometry::lattice_count_on_arc(a, 3.0).unwrap();
        let top = Natural::from(a + l.count);
        let next = Natural::from(a + l.count + 1);
        let two_a3 = pow_big(&Natural::from(a), 3) * 2u32;
        assert!(pow_big(&top, 3) < two_a3 || l.count == 0);
        assert!(pow_big(&next, 3) >= two_a3);
    }
}
