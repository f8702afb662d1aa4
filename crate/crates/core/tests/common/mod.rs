//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use freecurve::hompoly::{monomials, BiPoly};
use freecurve::scalar::int;
use freecurve::{HomPoly, QuadElem, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// Small rational with nonzero denominator.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn quad(d: i64) -> impl Strategy<Value = QuadElem> {
    (small_rational(), small_rational()).prop_map(move |(a, b)| QuadElem::new(a, if d == 1 { Rational::zero() } else { b }, d))
}

/// Dense random form of the given degree with small integer coefficients, some of them zero.
pub fn form(d: i64, degree: u32) -> impl Strategy<Value = HomPoly> {
    let mons = monomials(degree);
    proptest::collection::vec((-3i64..=3, -2i64..=2), mons.len()).prop_map(move |cs| {
        let terms = mons.iter().zip(cs).map(|(e, (a, b))| (*e, QuadElem::new(int(a), int(if d == 1 { 0 } else { b }), d)));
        HomPoly::from_terms(d, terms).expect("homogeneous by construction")
    })
}

/// Nonzero linear form with small integer coefficients.
/// A form of degree 1 to 8 over one of the test fields.
pub fn any_form() -> impl Strategy<Value = HomPoly> {
    (prop_oneof![Just(1i64), Just(2), Just(-2), Just(-3)], 1u32..=8).prop_flat_map(|(d, n)| form(d, n))
}

pub fn line(d: i64) -> impl Strategy<Value = HomPoly> {
    (-3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
        .prop_map(move |(a, b, c)| HomPoly::from_int_terms(d, &[([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)]))
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Q[u,v] / (g_u, g_v, m^n)`; equals the Milnor number at the origin once `m^n` lies in the Jacobian ideal.
pub fn jet_milnor(g: &BiPoly, n: u32) -> usize {
    let mons: Vec<(u32, u32)> = (0..n).flat_map(|t| (0..=t).map(move |a| (a, t - a))).collect();
    let index = |a: u32, b: u32| mons.iter().position(|&m| m == (a, b));
    let mut rows = Vec::new();
    for part in [g.partial(0), g.partial(1)] {
        for &(a, b) in &mons {
            let mut row = vec![Rational::zero(); mons.len()];
            for (&(i, j), c) in part.terms() {
                assert!(c.is_rational(), "oracle works over Q");
                if let Some(k) = index(i + a, j + b) {
                    row[k] += c.a();
                }
            }
            rows.push(row);
        }
    }
    mons.len() - rank(rows)
}

/// Normal forms `(label, g)` of the simple singularities up to index `max`.
pub fn normal_forms(max: u32) -> Vec<(String, BiPoly)> {
    let mut v = Vec::new();
    for k in 1..=max {
        v.push((format!("A{k}"), BiPoly::from_int_terms(1, &[((2, 0), 1), ((0, k + 1), 1)])));
    }
    for k in 4..=max {
        v.push((format!("D{k}"), BiPoly::from_int_terms(1, &[((2, 1), 1), ((0, k - 1), 1)])));
    }
    v.push(("E6".into(), BiPoly::from_int_terms(1, &[((3, 0), 1), ((0, 4), 1)])));
    v.push(("E7".into(), BiPoly::from_int_terms(1, &[((3, 0), 1), ((1, 3), 1)])));
    v.push(("E8".into(), BiPoly::from_int_terms(1, &[((3, 0), 1), ((0, 5), 1)])));
    v
}

/// Homogenizes `g(x, y)` with `z` to its total degree.
pub fn homogenize(g: &BiPoly) -> HomPoly {
    let n = g.total_degree();
    HomPoly::from_terms(g.field_tag(), g.terms().iter().map(|(&(a, b), c)| ([a, b, n - a - b], c.clone()))).expect("homogeneous")
}

pub fn point(x: i64, y: i64, z: i64, d: i64) -> [QuadElem; 3] {
    [QuadElem::from_int(x, d), QuadElem::from_int(y, d), QuadElem::from_int(z, d)]
}
