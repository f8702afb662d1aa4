//! Factorization over `Q` and `Q(sqrt d)`, and the binary-form splitter built on it.

pub mod zassenhaus;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gcd::gcd_k;
use crate::hompoly::HomPoly;
use crate::scalar::{QuadElem, Rational, RATIONAL_FIELD};
use crate::unipoly::KPoly;
use zassenhaus::{factor_squarefree, IPoly};

/// Yun's square-free decomposition: monic `(part, multiplicity)` with pairwise coprime parts.
pub fn squarefree_decomposition(f: &KPoly) -> Vec<(KPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() <= 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = gcd_k(&f, &df);
    let mut b = f.exact_div(&a0).unwrap();
    let mut c = df.exact_div(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.deg() > 0 {
        let a = gcd_k(&b, &d);
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = c.sub(&b.derivative());
        if a.deg() > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn to_integral(f: &KPoly) -> IPoly {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = l.lcm(c.a().denom());
    }
    f.coeffs().iter().map(|c| (c.a() * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn from_integral(p: &IPoly, d: i64) -> KPoly {
    KPoly::new(p.iter().map(|c| QuadElem::from_bigint(c.clone(), d)).collect(), QuadElem::zero(d)).monic()
}

/// Monic irreducible factors over `Q` of a square-free rational polynomial.
fn factor_sqfree_q(f: &KPoly, d: i64) -> Vec<KPoly> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    factor_squarefree(&to_integral(f)).iter().map(|g| from_integral(g, d)).collect()
}

/// Monic irreducible factors over `Q(sqrt d)` of a square-free polynomial (norm method).
fn factor_sqfree_k(f: &KPoly) -> Vec<KPoly> {
    let d = f.field_tag();
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let s = QuadElem::sqrt_d(d);
    for c in [0i64, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7] {
        let shift = s.scale(&Rational::from_integer(BigInt::from(c)));
        let fc = f.taylor_shift(&(-&shift));
        let norm = fc.mul(&fc.conj());
        debug_assert!(norm.is_rational());
        if gcd_k(&norm, &norm.derivative()).deg() > 0 {
            continue;
        }
        let mut out = Vec::new();
        for ni in factor_sqfree_q(&norm, d) {
            let g = gcd_k(&fc, &ni);
            if g.deg() > 0 {
                out.push(g.taylor_shift(&shift).monic());
            }
        }
        return out;
    }
    unreachable!("a square-free norm exists for some small shift")
}

/// Irreducible factorization of a nonzero polynomial over its coefficient field:
/// monic factors with multiplicities, sorted by degree then coefficients.
pub fn factor_k(f: &KPoly) -> Vec<(KPoly, u32)> {
    let d = f.field_tag();
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        let facs = if d == RATIONAL_FIELD { factor_sqfree_q(&part, d) } else { factor_sqfree_k(&part) };
        out.extend(facs.into_iter().map(|g| (g, mult)));
    }
    sort_factors(&mut out);
    out
}

/// Irreducible factors of a square-free polynomial.
pub fn irreducible_factors(f: &KPoly) -> Vec<KPoly> {
    if f.field_tag() == RATIONAL_FIELD {
        let mut v = factor_sqfree_q(f, RATIONAL_FIELD);
        v.sort_by_key(|g| (g.deg(), g.render("t")));
        v
    } else {
        let mut v = factor_sqfree_k(f);
        v.sort_by_key(|g| (g.deg(), g.render("t")));
        v
    }
}

fn sort_factors(v: &mut [(KPoly, u32)]) {
    v.sort_by_key(|(g, m)| (g.deg(), g.render("t"), *m));
}

/// Output of [`factor_binary_form`]: `b = scalar * prod(f^m) * residual`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryFactorization {
    pub scalar: QuadElem,
    /// Irreducible factors of degree 1 or 2 with multiplicities.
    pub factors: Vec<(HomPoly, u32)>,
    /// Product of the irreducible factors of degree at least 3 (with multiplicity); `1` if none.
    pub residual: HomPoly,
}

impl BinaryFactorization {
    pub fn product(&self) -> HomPoly {
        let mut acc = self.residual.scale(&self.scalar);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    /// Degree of the square-free part, counting the residual's distinct factors.
    pub fn distinct_degree(&self, residual_distinct: u32) -> u32 {
        self.factors.iter().map(|(f, _)| f.degree()).sum::<u32>() + residual_distinct
    }
}

fn homogenize_in_xy(p: &KPoly, deg: u32) -> HomPoly {
    let d = p.field_tag();
    HomPoly::from_terms(d, p.coeffs().iter().enumerate().map(|(i, c)| ([i as u32, deg - i as u32, 0], c.clone()))).expect("homogeneous")
}

/// Splits a binary form in `x, y` into irreducible factors of degree 1 and 2 over
/// its field, collecting everything of higher degree into a residual.
pub fn factor_binary_form(b: &HomPoly) -> Result<BinaryFactorization> {
    if b.is_zero() {
        return Err(Error::InvalidArgument("zero binary form".into()));
    }
    if b.terms().keys().any(|e| e[2] != 0) {
        return Err(Error::InvalidArgument("binary form must not involve z".into()));
    }
    let d = b.field_tag();
    let n = b.degree();
    // b(x, 1)
    let mut coeffs = vec![QuadElem::zero(d); n as usize + 1];
    for (e, c) in b.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let p = KPoly::new(coeffs, QuadElem::zero(d));
    let y_mult = n - p.deg() as u32;
    let scalar = p.lc();
    let mut factors = Vec::new();
    let mut residual = HomPoly::constant(QuadElem::one(d));
    for (g, m) in factor_k(&p) {
        let deg = g.deg() as u32;
        let h = homogenize_in_xy(&g, deg);
        if deg <= 2 {
            factors.push((h, m));
        } else {
            residual = residual.mul(&h.pow(m));
        }
    }
    if y_mult > 0 {
        factors.push((HomPoly::var(1, d), y_mult));
    }
    Ok(BinaryFactorization { scalar, factors, residual })
}

/// Number of distinct irreducible factors of the residual of a factorization.
pub fn residual_distinct_degree(r: &HomPoly) -> u32 {
    if r.degree() == 0 {
        return 0;
    }
    let f = factor_binary_form(r).expect("nonzero");
    f.factors.iter().map(|(g, _)| g.degree()).sum::<u32>()
        + factor_k(&dehomogenize_x(r)).iter().filter(|(g, _)| g.deg() > 2).map(|(g, _)| g.deg() as u32).sum::<u32>()
}

fn dehomogenize_x(b: &HomPoly) -> KPoly {
    let d = b.field_tag();
    let mut coeffs = vec![QuadElem::zero(d); b.degree() as usize + 1];
    for (e, c) in b.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    KPoly::new(coeffs, QuadElem::zero(d))
}

/// Content-free helper used by callers that need integer coefficients.
pub fn is_integral(f: &KPoly) -> bool {
    f.coeffs().iter().all(|c| c.a().is_integer() && c.b().is_integer() && !c.a().denom().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn d4_cone_over_q() {
        let b = parse_poly("x*y^2+x^3", 1).unwrap();
        let f = factor_binary_form(&b).unwrap();
        assert_eq!(f.product(), b);
        let got: Vec<(String, u32)> = f.factors.iter().map(|(g, m)| (g.to_literal(), *m)).collect();
        assert_eq!(got, vec![("x".to_string(), 1), ("x^2 + y^2".to_string(), 1)]);
        assert_eq!(f.residual.degree(), 0);
    }

    #[test]
    fn repeated_and_axis_factors() {
        let b = parse_poly("x^2*y", 1).unwrap();
        let f = factor_binary_form(&b).unwrap();
        let got: Vec<(String, u32)> = f.factors.iter().map(|(g, m)| (g.to_literal(), *m)).collect();
        assert_eq!(got, vec![("x".to_string(), 2), ("y".to_string(), 1)]);
    }

    #[test]
    fn irreducible_cubic_is_residual() {
        let b = parse_poly("x^3+2*y^3", 1).unwrap();
        let f = factor_binary_form(&b).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.residual, b);
    }

    #[test]
    fn splits_over_quadratic_field() {
        // x^2 + 2 y^2 = (x + s y)(x - s y) over Q(sqrt -2)
        let b = parse_poly("x^2+2*y^2", -2).unwrap();
        let f = factor_binary_form(&b).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
        assert_eq!(f.product(), b);
    }

    #[test]
    fn trager_on_cyclotomic() {
        // t^4 + 1 over Q(sqrt 2) = (t^2 + s t + 1)(t^2 - s t + 1)
        let f = KPoly::from_ints(&[1, 0, 0, 0, 1], 2);
        let facs = factor_k(&f);
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|(g, _)| g.deg() == 2));
    }
}
