use freecurve::bounds::{e6_bound, eorb_a, langer_a_bound, picard_bracket, sern_lower_bound};
use freecurve::scalar::int;
use freecurve::Rational;
use num_traits::Signed;
use proptest::prelude::*;

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn langer_floor_and_formula(k in 1i64..12, n in 6i64..60) {
        let r = langer_a_bound(k, n).unwrap();
        prop_assert_eq!(r.floor.clone(), r.value.floor().to_integer());
        let lhs = int(12 * (k * k * k + 4 * k * k + 4 * k + 1));
        let a = int((k + 2) * (5 * k + 4)) / lhs;
        let b = int(k + 2) / int(2 * (k * k + 3 * k + 1));
        prop_assert_eq!(r.value, a * int(n * n) - b * int(n));
    }

    #[test]
    fn e6_floor(d in 6i64..200) {
        let r = e6_bound(d).unwrap();
        prop_assert_eq!(r.value.clone() * int(167), int(20 * d * d - 24 * d));
        prop_assert_eq!(r.floor.clone(), r.value.floor().to_integer());
    }

    #[test]
    fn picard_bracket_is_ordered(h in 2i64..40, s in 0i64..5000) {
        let n = 2 * h;
        let upper = 3 * h * (h - 1) + 2;
        let sigma = s % upper;
        let b = picard_bracket(sigma, n).unwrap();
        prop_assert!(b.lower <= b.upper);
        prop_assert_eq!(b.upper, upper);
        prop_assert_eq!(b.maximizing, sigma == upper - 1);
        prop_assert!(picard_bracket(sigma, n + 1).is_err());
        prop_assert!(picard_bracket(upper + s, n).is_err());
    }

    #[test]
    fn orbifold_window(k in 1i64..20, t in 0i64..=100) {
        let lo = frac(k, 2 * k + 2);
        let hi = frac(k + 2, 2 * k + 2);
        let alpha = &lo + (&hi - &lo) * frac(t, 100);
        let e = eorb_a(k, &alpha).unwrap();
        prop_assert!(!e.is_negative());
        prop_assert!(e <= frac(1, k + 1));
        prop_assert!(eorb_a(k, &(&hi + frac(1, 1000))).is_err());
    }

    #[test]
    fn arnold_bound_is_least_integer(num in 51i64..400, n in 3i64..40) {
        let alpha = frac(num, 100);
        let r = sern_lower_bound(&alpha, n).unwrap();
        let v = &alpha * int(n) - int(2);
        prop_assert!(int(r) >= v);
        prop_assert!(int(r - 1) < v);
    }
}

#[test]
fn floors_are_attained() {
    assert_eq!(langer_a_bound(2, 12).unwrap().attained_by.as_deref(), Some("D_even(6)"));
    assert_eq!(langer_a_bound(3, 16).unwrap().attained_by.as_deref(), Some("D_even(8)"));
    assert!(sern_lower_bound(&frac(1, 2), 10).is_err());
    assert!(e6_bound(5).is_err());
}
