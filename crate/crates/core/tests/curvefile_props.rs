mod common;

use common::form;
use freecurve::catalog::{family_names, get_family, Expected};
use freecurve::curvefile::{parse_curve_file, print_curve_file, CurveFile};
use freecurve::singular::AdeType;
use freecurve::syzygy::Verdict;
use freecurve::Error;
use proptest::prelude::*;

fn expected() -> impl Strategy<Value = Option<Expected>> {
    let verdicts = proptest::sample::subsequence(
        vec![Verdict::Free, Verdict::NearlyFree, Verdict::MaximizingEven, Verdict::MaximizingOdd, Verdict::CaseBEquality],
        0..=3,
    );
    let census = proptest::collection::btree_map(
        prop_oneof![(1u32..12).prop_map(AdeType::A), (4u32..12).prop_map(AdeType::D), (6u32..=8).prop_map(AdeType::E)],
        1usize..5,
        0..4,
    );
    proptest::option::of((
        proptest::option::of(0u32..100),
        proptest::option::of(0u32..10),
        proptest::option::of((0u32..10, 0u32..10)),
        proptest::option::of(verdicts),
        proptest::option::of(census),
    ))
    .prop_map(|o| o.map(|(tau, mdr, exponents, verdicts, census)| Expected { tau, mdr, exponents, verdicts, census }))
}

fn curve_file() -> impl Strategy<Value = CurveFile> {
    (prop_oneof![Just(1i64), Just(2), Just(-2), Just(-3), Just(5)], 1u32..=6)
        .prop_flat_map(|(d, n)| (Just(d), form(d, n), expected()))
        .prop_filter("nonzero", |(_, f, _)| !f.is_zero())
        .prop_map(|(field_tag, poly, expected)| CurveFile { field_tag, poly, expected })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn print_parse_round_trip(f in curve_file()) {
        let text = print_curve_file(&f);
        let g = parse_curve_file(&text).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(print_curve_file(&g), text);
    }
}

#[test]
fn catalog_curves_round_trip() {
    for (name, m, _) in family_names() {
        let spec = get_family(name, m).unwrap();
        let f = CurveFile::from(&spec);
        assert_eq!(parse_curve_file(&print_curve_file(&f)).unwrap(), f, "{name}");
    }
}

#[test]
fn malformed_files() {
    for bad in ["", "field Q", "field Q(sqrt x)\nx", "field Q\nx^2+y", "field Q\nx*y*z\nexpected\ntau x", "field Q\nx\nexpected\nfoo 1"] {
        assert!(parse_curve_file(bad).is_err(), "{bad:?}");
    }
    assert_eq!(parse_curve_file("field Q\nx^2+y"), Err(Error::NonHomogeneous(2, 1)));
}
