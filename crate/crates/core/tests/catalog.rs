mod common;

use common::point;
use freecurve::catalog::{
    check_spec, family_names, get_family, tangent_line, CUSP_TANGENTS, MIDPOINT_CONIC, QUINTICS, QUINTIC_LINES, STEINER, STEINER_BITANGENT,
};
use freecurve::repro::invariant_failures;
use freecurve::singular::AdeType;
use freecurve::union::{intersection_profile, BaseState};
use freecurve::{parse_poly, Error, HomPoly, QuadElem};

fn p(s: &str, d: i64) -> HomPoly {
    parse_poly(s, d).unwrap()
}

/// Equality up to a nonzero scalar.
fn proportional(a: &HomPoly, b: &HomPoly) -> bool {
    a.monic() == b.monic()
}

/// Points `(1 : -w : 0)` for the three cube roots `w` of unity, over `Q(sqrt -3)`.
fn flexes_on_z0() -> Vec<[QuadElem; 3]> {
    let half = QuadElem::from_rational(freecurve::rational(1, 2).unwrap(), -3);
    let omega = &(&QuadElem::from_int(-1, -3) + &QuadElem::sqrt_d(-3)) * &half;
    let omega2 = &omega * &omega;
    [QuadElem::one(-3), omega, omega2].into_iter().map(|w| [QuadElem::one(-3), -w, QuadElem::zero(-3)]).collect()
}

fn tangents_product(cubic: &HomPoly) -> HomPoly {
    let ts: Vec<HomPoly> = flexes_on_z0().iter().map(|q| tangent_line(cubic, q).unwrap()).collect();
    HomPoly::product(&ts)
}

#[test]
fn inflection_tangents_on_the_line_at_infinity() {
    let fermat = p("x^3+y^3+z^3", -3);
    assert!(proportional(&tangents_product(&fermat), &p("x^3+y^3", -3)));
    let nodal = p("x*y*z+x^3+y^3", -3);
    assert!(proportional(&tangents_product(&nodal), &p("27*x^3+27*y^3+27*x*y*z-z^3", -3)));
    for (name, cubic) in [("fermat_sextic", fermat), ("nodal_sextic", nodal)] {
        let sextic = get_family(name, None).unwrap().poly.with_field(-3).unwrap();
        assert!(proportional(&cubic.mul(&tangents_product(&cubic)), &sextic), "{name}");
    }
    for t in 2..=4 {
        let cubic = get_family("cubic_t", Some(t)).unwrap().poly.with_field(-3).unwrap();
        let sextic = get_family("cubic_t_sextic", Some(t)).unwrap().poly.with_field(-3).unwrap();
        assert!(proportional(&cubic.mul(&tangents_product(&cubic)), &sextic), "t = {t}");
    }
}

#[test]
fn steiner_cuspidal_tangents_and_bitangent() {
    let f = p(STEINER, 1);
    for t in CUSP_TANGENTS {
        let line = p(t, 1);
        assert!(line.eval(&point(2, 2, 1, 1)).is_zero(), "{t} misses the concurrency point");
        let prof = intersection_profile(&f, &line).unwrap();
        assert!(prof.iter().any(|r| r.base_state == BaseState::A2CuspidalTangent && r.i_mult == 3), "{t}");
    }
    let prof = intersection_profile(&f, &p(STEINER_BITANGENT, 1)).unwrap();
    assert!(prof.iter().all(|r| r.base_state == BaseState::SmoothPoint { k: 1 } && r.i_mult == 2));
    assert_eq!(prof.iter().map(|r| r.count).sum::<usize>(), 2);
}

#[test]
fn midpoint_conic_touches_the_sides_at_midpoints() {
    let conic = p(MIDPOINT_CONIC, 1);
    for (side, mid) in [("z", point(1, 1, 0, 1)), ("x", point(0, 1, 1, 1)), ("y", point(1, 0, 1, 1))] {
        assert!(proportional(&tangent_line(&conic, &mid).unwrap(), &p(side, 1)), "{side}");
    }
}

#[test]
fn quintic_lines() {
    for (name, base, line) in QUINTIC_LINES {
        let q = p(QUINTICS[base], 1);
        let l = p(line, 1);
        if name.ends_with("tangent") {
            assert!(proportional(&tangent_line(&q, &point(1, 1, 1, 1)).unwrap(), &l), "{name}");
        } else {
            assert!(l.eval(&point(0, 1, 0, 1)).is_zero(), "{name}");
            assert_eq!(tangent_line(&q, &point(0, 1, 0, 1)), Err(Error::Verification("point is singular".into())));
        }
        let sextic = get_family(name, None).unwrap().poly;
        assert_eq!(sextic, q.mul(&l));
    }
}

#[test]
fn d_even_splits_into_four_curves_for_even_m() {
    for k in 1..=3 {
        let parts: Vec<HomPoly> =
            ["x^K+y^K+z^K", "-x^K+y^K+z^K", "x^K-y^K+z^K", "x^K+y^K-z^K"].iter().map(|s| p(&s.replace('K', &k.to_string()), 1)).collect();
        let d = get_family("D_even", Some(2 * k)).unwrap().poly;
        assert!(proportional(&HomPoly::product(&parts), &d), "m = {}", 2 * k);
    }
}

#[test]
fn nodal_sextic_has_a_node_at_the_origin() {
    let spec = get_family("nodal_sextic", None).unwrap();
    let (report, census, bad) = check_spec(&spec).unwrap();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(report.tau, 19);
    let at = freecurve::singular::local::classify_ade(&spec.poly, &point(0, 0, 1, 1)).unwrap();
    assert_eq!(at.ade_type, AdeType::A(1));
    assert_eq!(census.count_of(AdeType::A(1)), 4);
}

#[test]
fn every_family_matches_its_record() {
    for (name, min_m, _) in family_names() {
        let ms: Vec<Option<i64>> = match min_m {
            Some(lo) => (lo..=lo + 1).map(Some).collect(),
            None => vec![None],
        };
        for m in ms {
            let spec = get_family(name, m).unwrap();
            assert!(freecurve::syzygy::is_reduced(&spec.poly).unwrap(), "{name} {m:?}");
            let (report, census, mut bad) = check_spec(&spec).unwrap();
            if spec.poly.degree() >= 3 && census.num_points() > 0 {
                bad.extend(invariant_failures(&report, &census));
            }
            assert!(bad.is_empty(), "{name} {m:?}: {bad:?}");
        }
    }
}

#[test]
fn unknown_names_and_ranges() {
    assert_eq!(get_family("nope", None), Err(Error::UnknownFamily("nope".into())));
    assert!(matches!(get_family("C_even", Some(1)), Err(Error::ParamOutOfRange { .. })));
    assert!(matches!(get_family("C_even", None), Err(Error::ParamOutOfRange { .. })));
    assert!(matches!(get_family("T6", Some(3)), Err(Error::ParamOutOfRange { .. })));
}
