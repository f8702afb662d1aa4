mod common;

use common::{any_form, form};
use freecurve::factor::factor_binary_form;
use freecurve::hompoly::BiPoly;
use freecurve::resultant::resultant;
use freecurve::syzygy::is_reduced;
use freecurve::{parse_poly, HomPoly, QuadElem};
use proptest::prelude::*;

fn binary_form() -> impl Strategy<Value = HomPoly> {
    (prop_oneof![Just(1i64), Just(-3)], 1u32..=6)
        .prop_flat_map(|(d, n)| {
            proptest::collection::vec(-4i64..=4, n as usize + 1).prop_map(move |cs| {
                let terms: Vec<([u32; 3], i64)> = cs.iter().enumerate().map(|(i, c)| ([i as u32, n - i as u32, 0], *c)).collect();
                HomPoly::from_int_terms(d, &terms)
            })
        })
        .prop_filter("nonzero", |b| !b.is_zero())
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(((0u32..=3, 0u32..=3), -4i64..=4), 1..6).prop_map(|t| {
        let mut acc = BiPoly::zero(1);
        for (e, c) in t {
            acc = acc.add(&BiPoly::from_int_terms(1, &[(e, c)]));
        }
        acc
    })
}

/// Degree of a bivariate polynomial in `var`.
fn deg_in(p: &BiPoly, var: usize) -> u32 {
    p.degree_in(var)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_identity(f in any_form()) {
        let (fx, fy, fz) = f.partials();
        let d = f.field_tag();
        let lhs = HomPoly::var(0, d).mul(&fx).add(&HomPoly::var(1, d).mul(&fy)).add(&HomPoly::var(2, d).mul(&fz));
        let rhs = f.scale(&QuadElem::from_int(f.degree() as i64, d));
        prop_assert_eq!(lhs.terms(), rhs.terms());
    }

    #[test]
    fn literal_round_trip(f in any_form()) {
        prop_assume!(!f.is_zero());
        let g = parse_poly(&f.to_literal(), f.field_tag()).unwrap();
        prop_assert_eq!(g, f);
    }

    #[test]
    fn resultant_symmetry_and_scaling(g in bipoly(), h in bipoly(), c in -5i64..=5) {
        prop_assume!(c != 0 && deg_in(&g, 0) > 0 && deg_in(&h, 0) > 0);
        let (m, n) = (deg_in(&g, 0), deg_in(&h, 0));
        let gh = resultant(&g, &h, 0);
        let hg = resultant(&h, &g, 0);
        let sign = QuadElem::from_int(if m * n % 2 == 0 { 1 } else { -1 }, 1);
        prop_assert_eq!(gh.scale(&sign), hg);
        let cg = g.mul(&BiPoly::from_int_terms(1, &[((0, 0), c)]));
        prop_assert_eq!(resultant(&cg, &h, 0), gh.scale(&QuadElem::from_int(c, 1).pow(n)));
    }

    #[test]
    fn binary_factorization_reconstructs(b in binary_form()) {
        let f = factor_binary_form(&b).unwrap();
        prop_assert_eq!(f.product(), b);
        for (g, _) in &f.factors {
            prop_assert!(g.degree() == 1 || g.degree() == 2);
        }
    }

    #[test]
    fn squares_are_not_reduced(f in (prop_oneof![Just(1i64), Just(2), Just(-2), Just(-3)], 1u32..=3).prop_flat_map(|(d, n)| form(d, n)), g in form(1, 1)) {
        prop_assume!(f.degree() >= 1 && !f.is_zero() && !g.is_zero());
        let g = g.with_field(f.field_tag()).unwrap();
        prop_assert_eq!(is_reduced(&f.mul(&g).mul(&g)).unwrap(), false);
    }
}

#[test]
fn displayed_examples() {
    let c = parse_poly("x^2+y^2-z^2", 1).unwrap();
    assert_eq!((c.degree(), c.num_terms()), (2, 3));
    assert!(is_reduced(&c).unwrap());
    let steiner = parse_poly(freecurve::catalog::STEINER, 1).unwrap();
    assert!(steiner.euler_identity_holds());
    assert_eq!(parse_poly("x^2+y", 1), Err(freecurve::Error::NonHomogeneous(2, 1)));
}
