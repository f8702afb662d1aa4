//! Resultants of bivariate polynomials by evaluation, interpolation and CRT.
//!
//! The number of primes comes from a rigorous coefficient bound, so the result
//! is exact: with `nu(a + b sqrt d) = |a| + |b| ceil(sqrt |d|)`, which is
//! submultiplicative on `Z[sqrt d]`, every coefficient of the Sylvester
//! determinant has both components bounded by the product over rows of the
//! row sums of `nu`-norms.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::hompoly::BiPoly;
use crate::linalg::det_mod;
use crate::modp::{self, addmod, crt_step, invmod, mulmod, quad_mod, submod, symmetric, ModPrime, PrimeStream};
use crate::scalar::{QuadElem, Rational, RATIONAL_FIELD};
use crate::unipoly::KPoly;

/// Coefficients of a polynomial in the eliminated variable, each a polynomial
/// in the remaining one, scaled to have integral components.
struct Integral {
    rows: Vec<KPoly>,
    scale: BigInt,
}

fn integral(p: &BiPoly, var: usize) -> Integral {
    let rows = p.as_univariate(var);
    let mut l = BigInt::one();
    for r in &rows {
        for c in r.coeffs() {
            l = l.lcm(&c.denom_lcm());
        }
    }
    let s = QuadElem::from_bigint(l.clone(), p.field_tag());
    Integral { rows: rows.iter().map(|r| r.scale(&s)).collect(), scale: l }
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

fn nu(c: &QuadElem, root: &BigInt) -> BigInt {
    c.a().numer().abs() + c.b().numer().abs() * root
}

fn row_norm(rows: &[KPoly], root: &BigInt) -> BigInt {
    rows.iter().flat_map(|r| r.coeffs().iter()).map(|c| nu(c, root)).sum()
}

/// Product of `count` row sums raised appropriately; the Hadamard-type bound.
fn coefficient_bound(g: &Integral, h: &Integral, d: i64) -> BigInt {
    let root = BigInt::from(ceil_sqrt(d.unsigned_abs()));
    let m = g.rows.len() - 1;
    let n = h.rows.len() - 1;
    num_traits::pow(row_norm(&g.rows, &root), n) * num_traits::pow(row_norm(&h.rows, &root), m)
}

/// Primes whose product exceeds `2 * bound`, avoiding the listed denominators.
pub(crate) fn primes_for_bound(d: i64, bound: &BigInt) -> Vec<ModPrime> {
    let target = bound * 2u32 + 1u32;
    let mut prod = BigInt::one();
    let mut out = Vec::new();
    for mp in PrimeStream::new(d) {
        if prod > target {
            break;
        }
        prod *= mp.p;
        out.push(mp);
    }
    out
}

fn reduce_rows(rows: &[KPoly], p: u64, s: u64) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.coeffs().iter().map(|c| quad_mod(c, p, s).expect("integral")).collect()).collect()
}

/// Resultant modulo `p` as a coefficient vector of length `deg_bound + 1`.
fn resultant_mod(g: &[Vec<u64>], h: &[Vec<u64>], deg_bound: usize, p: u64) -> Vec<u64> {
    let m = g.len() - 1;
    let n = h.len() - 1;
    let size = m + n;
    let values: Vec<u64> = (0..=deg_bound as u64)
        .map(|x| {
            let gv: Vec<u64> = g.iter().map(|c| modp::fp::eval(c, x, p)).collect();
            let hv: Vec<u64> = h.iter().map(|c| modp::fp::eval(c, x, p)).collect();
            let mut mat = vec![vec![0u64; size]; size];
            for i in 0..n {
                for (j, &c) in gv.iter().rev().enumerate() {
                    mat[i][i + j] = c;
                }
            }
            for i in 0..m {
                for (j, &c) in hv.iter().rev().enumerate() {
                    mat[n + i][i + j] = c;
                }
            }
            det_mod(&mut mat, p)
        })
        .collect();
    interpolate_consecutive(&values, p)
}

/// Interpolates values at `0, 1, ..., k` (Newton form), returning monomial coefficients.
pub(crate) fn interpolate_consecutive(values: &[u64], p: u64) -> Vec<u64> {
    let k = values.len();
    let mut c = values.to_vec();
    for j in 1..k {
        for i in (j..k).rev() {
            let num = submod(c[i], c[i - 1], p);
            let den = invmod(j as u64, p).unwrap();
            c[i] = mulmod(num, den, p);
        }
    }
    let mut poly = vec![0u64; k];
    for i in (0..k).rev() {
        // poly = poly * (t - i) + c[i]
        let mut next = vec![0u64; k];
        for (e, &a) in poly.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if e + 1 < k {
                next[e + 1] = addmod(next[e + 1], a, p);
            }
            next[e] = submod(next[e], mulmod(a, i as u64 % p, p), p);
        }
        next[0] = addmod(next[0], c[i], p);
        poly = next;
    }
    poly
}

/// Combines the images under `sqrt d -> s` and `sqrt d -> -s` into the
/// residues of the rational and irrational components.
pub(crate) fn split_components(plus: &[u64], minus: &[u64], mp: ModPrime) -> (Vec<u64>, Vec<u64>) {
    let p = mp.p;
    let inv2 = invmod(2, p).unwrap();
    let inv2s = invmod(mulmod(2, mp.s, p), p).unwrap();
    let a = plus.iter().zip(minus).map(|(&x, &y)| mulmod(addmod(x, y, p), inv2, p)).collect();
    let b = plus.iter().zip(minus).map(|(&x, &y)| mulmod(submod(x, y, p), inv2s, p)).collect();
    (a, b)
}

/// CRT reconstruction of integer vectors from per-prime residues.
pub(crate) fn crt_vectors(primes: &[ModPrime], residues: &[Vec<u64>]) -> Vec<BigInt> {
    let len = residues.first().map_or(0, |r| r.len());
    let mut acc = vec![BigInt::zero(); len];
    let mut m = BigInt::one();
    for (mp, r) in primes.iter().zip(residues) {
        for (slot, &x) in acc.iter_mut().zip(r) {
            *slot = crt_step(slot, &m, x, mp.p);
        }
        m *= mp.p;
    }
    acc.iter().map(|a| symmetric(a, &m)).collect()
}

/// `Res_var(g, h)` as a polynomial in the other variable.
///
/// The Sylvester matrix uses the degrees of `g` and `h` in `var`; the sign
/// convention is `Res(h, g) = (-1)^(deg g deg h) Res(g, h)`.
pub fn resultant(g: &BiPoly, h: &BiPoly, var: usize) -> KPoly {
    let d = if g.field_tag() != RATIONAL_FIELD { g.field_tag() } else { h.field_tag() };
    let zero = QuadElem::zero(d);
    if g.is_zero() || h.is_zero() {
        return KPoly::zero(&zero);
    }
    let gi = integral(g, var);
    let hi = integral(h, var);
    let m = gi.rows.len() - 1;
    let n = hi.rows.len() - 1;
    let dg = g.degree_in(1 - var) as usize;
    let dh = h.degree_in(1 - var) as usize;
    let deg_bound = n * dg + m * dh;
    let bound = coefficient_bound(&gi, &hi, d);
    let primes = primes_for_bound(d, &bound);
    let per_prime: Vec<(Vec<u64>, Vec<u64>)> = primes
        .par_iter()
        .map(|&mp| {
            let run = |s: u64| {
                let gr = reduce_rows(&gi.rows, mp.p, s);
                let hr = reduce_rows(&hi.rows, mp.p, s);
                resultant_mod(&gr, &hr, deg_bound, mp.p)
            };
            if d == RATIONAL_FIELD {
                (run(0), vec![0; deg_bound + 1])
            } else {
                let plus = run(mp.s);
                let minus = run(mp.p - mp.s);
                split_components(&plus, &minus, mp)
            }
        })
        .collect();
    let (ra, rb): (Vec<_>, Vec<_>) = per_prime.into_iter().unzip();
    let a = crt_vectors(&primes, &ra);
    let b = crt_vectors(&primes, &rb);
    let denom = num_traits::pow(gi.scale, n) * num_traits::pow(hi.scale, m);
    let coeffs =
        a.into_iter().zip(b).map(|(x, y)| QuadElem::new(Rational::new(x, denom.clone()), Rational::new(y, denom.clone()), d)).collect();
    KPoly::new(coeffs, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det;

    fn bi(t: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_int_terms(1, t)
    }

    #[test]
    fn cusp_model() {
        // Res_u(2u, -3v^2) = -3v^2
        let r = resultant(&bi(&[((1, 0), 2)]), &bi(&[((0, 2), -3)]), 0);
        assert_eq!(r, KPoly::from_ints(&[0, 0, -3], 1));
        assert_eq!(r.order_at_zero(), Some(2));
    }

    #[test]
    fn two_lines() {
        // Res_x(x - y, x + y) = 2y
        let r = resultant(&bi(&[((1, 0), 1), ((0, 1), -1)]), &bi(&[((1, 0), 1), ((0, 1), 1)]), 0);
        assert_eq!(r, KPoly::from_ints(&[0, 2], 1));
    }

    #[test]
    fn specialization_matches_exact_sylvester() {
        let g = bi(&[((3, 0), 1), ((1, 1), -2), ((0, 2), 5), ((0, 0), 7)]);
        let h = bi(&[((2, 0), 3), ((1, 2), 1), ((0, 1), -4)]);
        let r = resultant(&g, &h, 0);
        for v in -3..=3i64 {
            let vq = QuadElem::from_int(v, 1);
            let gu: Vec<QuadElem> = g.as_univariate(0).iter().map(|c| c.eval(&vq)).collect();
            let hu: Vec<QuadElem> = h.as_univariate(0).iter().map(|c| c.eval(&vq)).collect();
            let (m, n) = (gu.len() - 1, hu.len() - 1);
            let mut mat = vec![vec![QuadElem::zero(1); m + n]; m + n];
            for i in 0..n {
                for (j, c) in gu.iter().rev().enumerate() {
                    mat[i][i + j] = c.clone();
                }
            }
            for i in 0..m {
                for (j, c) in hu.iter().rev().enumerate() {
                    mat[n + i][i + j] = c.clone();
                }
            }
            assert_eq!(r.eval(&vq), det(mat, &QuadElem::one(1)));
        }
    }

    #[test]
    fn quadratic_field_components() {
        let d = -2;
        let s = QuadElem::sqrt_d(d);
        let g = BiPoly::from_terms(d, [((1, 0), QuadElem::one(d)), ((0, 1), s.clone())]);
        let h = BiPoly::from_terms(d, [((1, 0), QuadElem::one(d)), ((0, 0), QuadElem::from_int(3, d))]);
        // Res_u(u + s v, u + 3) = 3 - s v  (det [[1, s v], [1, 3]])
        let r = resultant(&g, &h, 0);
        assert_eq!(r.coeff(0), QuadElem::from_int(3, d));
        assert_eq!(r.coeff(1), -&s);
    }
}
