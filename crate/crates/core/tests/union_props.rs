mod common;

use common::{form, line};
use freecurve::catalog::get_family;
use freecurve::syzygy::total_tjurina;
use freecurve::union::{check_union_theorem, intersection_profile, observed_union_types, predict_union_singularity, BaseState};
use freecurve::{Error, HomPoly};
use proptest::prelude::*;

const BASES: [&str; 9] =
    ["tri_conical", "T6", "steiner_quartic", "quintic_H1", "quintic_H3", "quintic_H4", "triangle_medians", "nodal_cubic", "fermat_cubic"];

fn base() -> impl Strategy<Value = HomPoly> {
    proptest::sample::select(BASES.to_vec()).prop_map(|n| get_family(n, None).unwrap().poly)
}

fn added() -> impl Strategy<Value = HomPoly> {
    prop_oneof![line(1), form(1, 2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn profile_obeys_bezout_and_predictions(f1 in base(), f2 in added()) {
        let profile = match intersection_profile(&f1, &f2) {
            Ok(p) => p,
            Err(Error::UnsupportedComponent(_) | Error::SharedComponent | Error::NonReduced) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e} for {} and {}", f1.to_literal(), f2.to_literal()))),
        };
        let total: u32 = profile.iter().map(|r| r.i_mult * r.count as u32).sum();
        prop_assert_eq!(total, f1.degree() * f2.degree());
        if profile.iter().any(|r| r.delta_tau.is_none()) {
            return Ok(());
        }
        let observed = observed_union_types(&f1, &f2, &profile).unwrap();
        let predicted: Vec<_> = profile.iter().map(|r| r.predicted).collect();
        prop_assert_eq!(observed, predicted);
        let jump: u32 = profile.iter().map(|r| r.delta_tau.unwrap() * r.count as u32).sum();
        prop_assert_eq!(total_tjurina(&f1.mul(&f2)).unwrap(), total_tjurina(&f1).unwrap() + jump);
        if f1.degree() >= 4 || (f1.degree() == 3 && f2.degree() == 1) {
            if let Ok(v) = check_union_theorem(&f1, &f2, false) {
                if v.maximizing {
                    prop_assert_eq!(v.lhs, v.rhs);
                }
            }
        }
    }

    #[test]
    fn prediction_table(k in 0u32..8, i in 1u32..12) {
        let smooth = predict_union_singularity(&BaseState::SmoothPoint { k }, i);
        if i == k + 1 {
            let (t, dt, _) = smooth.unwrap();
            prop_assert_eq!(t.to_string(), format!("A{}", 2 * k + 1));
            prop_assert_eq!(dt, k + i);
        } else {
            prop_assert!(smooth.is_err());
        }
    }
}

#[test]
fn conics_without_rational_points() {
    let f1 = get_family("tri_conical", None).unwrap().poly;
    for conic in ["x^2+y^2+z^2", "x^2+3*x*y-2*x*z+y^2-2*y*z-2*z^2"] {
        let f2 = freecurve::parse_poly(conic, 1).unwrap();
        let profile = intersection_profile(&f1, &f2).unwrap();
        assert_eq!(profile.iter().map(|r| r.i_mult * r.count as u32).sum::<u32>(), 12, "{conic}");
    }
}
