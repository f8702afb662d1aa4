mod common;

use common::{form, line};
use freecurve::bounds::sern_lower_bound;
use freecurve::report::analyze_poly;
use freecurve::scalar::int;
use freecurve::singular::AdeType;
use freecurve::syzygy::{ar_dimension, is_reduced, tau_max, Verdict};
use freecurve::HomPoly;
use proptest::prelude::*;

#[test]
fn tau_max_strictly_decreasing() {
    for n in 1..=20u32 {
        for r in 1..n {
            assert!(tau_max(n, r) < tau_max(n, r - 1), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn tau_max_closed_forms() {
    // r < n/2, then r >= n/2 with the binomial correction C(2r - n + 2, 2).
    assert_eq!(tau_max(6, 2), 5 * 3 + 4);
    assert_eq!(tau_max(7, 3), 6 * 3 + 9);
    assert_eq!(tau_max(6, 4), 5 + 16 - 6);
}

/// Reduced products of lines and conics, which carry plenty of singular points.
fn arrangement() -> impl Strategy<Value = HomPoly> {
    let piece = prop_oneof![line(1), form(1, 2)];
    proptest::collection::vec(piece, 2..=4)
        .prop_map(|v| HomPoly::product(&v))
        .prop_filter("degree 3 to 6, reduced", |f| (3..=6).contains(&f.degree()) && is_reduced(f).unwrap_or(false))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn freeness_invariants(f in arrangement()) {
        let (report, census) = analyze_poly(&f).unwrap();
        let n = report.n;
        prop_assert!(report.tau <= tau_max(n, report.mdr));
        prop_assert_eq!(report.tau_max, tau_max(n, report.mdr));
        prop_assert!(ar_dimension(&f, report.mdr).unwrap().dim >= 1);
        if report.mdr > 0 {
            prop_assert_eq!(ar_dimension(&f, report.mdr - 1).unwrap().dim, 0);
        }
        if report.has(Verdict::Free) {
            let (a, b) = report.exponents.unwrap();
            prop_assert_eq!(a + b, n - 1);
            prop_assert_eq!(a, report.mdr);
        }
        if census.complete {
            prop_assert_eq!(census.sigma, report.tau);
            let alpha = census.alpha.clone();
            if let Some(alpha) = alpha {
                prop_assert!(report.mdr as i64 >= sern_lower_bound(&alpha, n as i64).unwrap());
                if report.has(Verdict::MaximizingEven) {
                    let m = (n / 2) as i64;
                    prop_assert!(alpha <= int(m + 1) / int(2 * m));
                }
            }
            let only_nodes_cusps = census.points.iter().all(|p| matches!(p.ade_type, AdeType::A(1) | AdeType::A(2)));
            if only_nodes_cusps {
                prop_assert!(!report.has(Verdict::MaximizingEven) && !report.has(Verdict::MaximizingOdd));
            }
        }
    }
}
