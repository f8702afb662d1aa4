mod common;

use common::{homogenize, jet_milnor, normal_forms, point};
use freecurve::hompoly::BiPoly;
use freecurve::singular::local::{classify_ade, local_milnor};
use freecurve::singular::AdeType;
use freecurve::QuadElem;
use proptest::prelude::*;

/// Truncation order for the oracle: `m^mu` lies in the Jacobian ideal, so any order above `mu` works.
fn jet(mu: u32) -> u32 {
    mu + 2
}

#[test]
fn milnor_matches_jet_oracle_on_normal_forms() {
    for (label, g) in normal_forms(10) {
        let ty: AdeType = label.parse().unwrap();
        let mu = ty.index().unwrap();
        assert_eq!(jet_milnor(&g, jet(mu)), mu as usize, "oracle on {label}");
        assert_eq!(local_milnor(&g).unwrap(), mu, "resultant method on {label}");
    }
}

#[test]
fn classification_round_trips_the_table() {
    for (label, g) in normal_forms(10) {
        let f = homogenize(&g);
        let p = classify_ade(&f, &point(0, 0, 1, 1)).unwrap();
        assert_eq!(p.ade_type.to_string(), label);
        assert_eq!(Some(p.multiplicity), p.ade_type.multiplicity());
    }
}

fn normal_form() -> impl Strategy<Value = (String, BiPoly)> {
    proptest::sample::select(normal_forms(10))
}

fn invertible() -> impl Strategy<Value = [[i64; 2]; 2]> {
    proptest::array::uniform2(proptest::array::uniform2(-3i64..=3)).prop_filter("invertible", |m| m[0][0] * m[1][1] != m[0][1] * m[1][0])
}

/// Terms of degree at least `lo`, which do not change a `(lo - 1)`-determined germ.
fn tail(lo: u32) -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..=3, 0u32..=3, -3i64..=3), 0..4).prop_map(move |t| {
        let mut acc = BiPoly::zero(1);
        for (a, b, c) in t {
            let extra = lo.saturating_sub(a + b);
            acc = acc.add(&BiPoly::from_int_terms(1, &[((a + extra, b), c)]));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn type_survives_coordinate_changes(((label, g), t) in normal_form().prop_flat_map(|(l, g)| {
        let mu = l.parse::<AdeType>().unwrap().index().unwrap();
        (Just((l, g)), tail(mu + 2))
    }), m in invertible()) {
        let ty: AdeType = label.parse().unwrap();
        let m = m.map(|r| r.map(|c| QuadElem::from_int(c, 1)));
        let h = g.add(&t).linear_substitute(m);
        let mu = local_milnor(&h).unwrap();
        prop_assert_eq!(mu as usize, jet_milnor(&h, jet(ty.index().unwrap())));
        prop_assert_eq!(mu, ty.index().unwrap());
        let p = classify_ade(&homogenize(&h), &point(0, 0, 1, 1)).unwrap();
        prop_assert_eq!(p.ade_type, ty);
    }
}
