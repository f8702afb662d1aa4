//! Common roots of polynomials over `L = K[t]/(q)`, found modulo primes and
//! certified exactly.
//!
//! Modulo a prime `P` with `q mod P` square-free, `L` maps onto the ring
//! `F_P[t]/(q mod P)`, where Euclid runs without coefficient growth. The degree
//! of a gcd modulo `P` bounds the true degree from above, so a trivial modular
//! gcd is a proof, and a candidate root lifted by CRT is proved by checking
//! that `(y - y0)^k` divides the inputs exactly.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::ext::{ExtElem, ExtField};
use crate::field::Field;
use crate::modp::{crt_step, fp, invmod, quad_mod, rat_recon, ModPrime, PrimeStream};
use crate::resultant::split_components;
use crate::scalar::{QuadElem, RATIONAL_FIELD};
use crate::unipoly::{KPoly, UniPoly};

const MAX_PRIMES: usize = 400;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum CommonRoot {
    /// The three polynomials have no common root.
    None,
    /// `gcd(a, b) = (y - y0)^k` and `c(y0) = 0`.
    Single { y0: ExtElem, k: usize },
    /// More than one common root of `a, b` over this value of `t`.
    Ambiguous,
}

/// `F_P[t]/(q)` with `q` monic and square-free.
struct Ring<'a> {
    q: &'a [u64],
    p: u64,
}

type RElem = Vec<u64>;
type RPoly = Vec<RElem>;

impl Ring<'_> {
    fn mul(&self, a: &[u64], b: &[u64]) -> RElem {
        fp::rem(&fp::mul(a, b, self.p), self.q, self.p)
    }

    fn inv(&self, a: &[u64]) -> Option<RElem> {
        if a.is_empty() {
            return None;
        }
        let (g, s, _) = fp::xgcd(a, self.q, self.p);
        (g.len() == 1).then(|| fp::rem(&s, self.q, self.p))
    }

    fn trim(&self, mut a: RPoly) -> RPoly {
        while a.last().is_some_and(|c| c.is_empty()) {
            a.pop();
        }
        a
    }

    fn rem(&self, a: &RPoly, b: &RPoly) -> Option<RPoly> {
        let inv = self.inv(b.last()?)?;
        let mut r = a.clone();
        let db = b.len() - 1;
        while r.len() > db {
            let top = r.len() - 1;
            let c = self.mul(&r[top], &inv);
            for (j, bc) in b.iter().enumerate() {
                let i = top - db + j;
                r[i] = fp::sub(&r[i], &self.mul(&c, bc), self.p);
            }
            r = self.trim(r);
        }
        Some(r)
    }

    fn monic(&self, a: &RPoly) -> Option<RPoly> {
        let inv = self.inv(a.last()?)?;
        Some(a.iter().map(|c| self.mul(c, &inv)).collect())
    }

    fn gcd(&self, a: &RPoly, b: &RPoly) -> Option<RPoly> {
        let (mut a, mut b) = (self.trim(a.clone()), self.trim(b.clone()));
        while !b.is_empty() {
            let r = self.rem(&a, &b)?;
            a = std::mem::replace(&mut b, r);
        }
        self.monic(&a)
    }

    /// `c` with `g = (y - c)^k`, where `g` is monic of degree `k >= 1`.
    fn pure_power_root(&self, g: &RPoly) -> Option<RElem> {
        let k = g.len() - 1;
        let kinv = invmod(k as u64 % self.p, self.p)?;
        let c = fp::scale(&g[k - 1], self.p - kinv, self.p);
        let mut acc: RPoly = vec![vec![1]];
        let lin: RPoly = vec![fp::scale(&c, self.p - 1, self.p), vec![1]];
        for _ in 0..k {
            let mut next = vec![Vec::new(); acc.len() + 1];
            for (i, x) in acc.iter().enumerate() {
                for (j, y) in lin.iter().enumerate() {
                    next[i + j] = fp::add(&next[i + j], &self.mul(x, y), self.p);
                }
            }
            acc = next;
        }
        (acc == *g).then_some(c)
    }
}

fn reduce_k(p: &KPoly, mp: ModPrime, s: u64) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = p.coeffs().iter().map(|c| quad_mod(c, mp.p, s)).collect();
    Some(fp::trim(v?))
}

fn reduce_poly(a: &UniPoly<ExtElem>, mp: ModPrime, s: u64) -> Option<RPoly> {
    a.coeffs().iter().map(|c| reduce_k(c.rep(), mp, s)).collect()
}

/// Degrees of `gcd(a, b)` and `gcd(a, b, c)` and the root of the former, modulo one prime.
fn image(q: &KPoly, polys: [&UniPoly<ExtElem>; 3], mp: ModPrime, s: u64) -> Option<(usize, usize, Option<RElem>)> {
    let qr = reduce_k(q, mp, s)?;
    if qr.len() != q.coeffs().len() || fp::gcd(&qr, &fp::derivative(&qr, mp.p), mp.p).len() != 1 {
        return None;
    }
    let ring = Ring { q: &qr, p: mp.p };
    let [a, b, c] = polys.map(|x| reduce_poly(x, mp, s));
    let (a, b, c) = (a?, b?, c?);
    if a.len() != polys[0].coeffs().len() || b.len() != polys[1].coeffs().len() {
        return None;
    }
    let g12 = ring.gcd(&a, &b)?;
    let k12 = g12.len() - 1;
    let g = ring.gcd(&g12, &c)?;
    let k = g.len() - 1;
    let root = if k12 >= 1 { ring.pure_power_root(&g12) } else { None };
    Some((k12, k, root))
}

/// Certified common root of `a, b, c` (`a` with constant leading coefficient).
pub(crate) fn common_root(l: &Arc<ExtField>, a: &UniPoly<ExtElem>, b: &UniPoly<ExtElem>, c: &UniPoly<ExtElem>) -> CommonRoot {
    let q = l.modulus();
    let d = l.base_tag();
    let n = l.degree();
    let mut best: Option<(usize, usize)> = None;
    let mut acc_a: Vec<BigInt> = vec![BigInt::from(0); n];
    let mut acc_b: Vec<BigInt> = vec![BigInt::from(0); n];
    let mut modulus = BigInt::one();
    let mut last: Option<ExtElem> = None;
    let mut impure = 0;
    for mp in PrimeStream::new(d).take(MAX_PRIMES) {
        let one = |s| image(q, [a, b, c], mp, s);
        let Some((k12, k, root)) = one(mp.s) else { continue };
        if k == 0 {
            return CommonRoot::None;
        }
        let Some(root) = root else {
            impure += 1;
            if impure >= 3 {
                return CommonRoot::Ambiguous;
            }
            continue;
        };
        let (ra, rb) = if d == RATIONAL_FIELD {
            (root.clone(), vec![0; root.len()])
        } else {
            let Some((k12b, kb, Some(other))) = one(mp.p - mp.s) else { continue };
            if (k12b, kb) != (k12, k) {
                continue;
            }
            let pad = |mut v: Vec<u64>| {
                v.resize(n, 0);
                v
            };
            split_components(&pad(root), &pad(other), mp)
        };
        match best {
            Some(bk) if (k12, k) > bk => continue,
            Some(bk) if bk == (k12, k) => {}
            _ => {
                best = Some((k12, k));
                acc_a.iter_mut().chain(acc_b.iter_mut()).for_each(|x| *x = BigInt::from(0));
                modulus = BigInt::one();
                last = None;
            }
        }
        for (i, slot) in acc_a.iter_mut().enumerate() {
            *slot = crt_step(slot, &modulus, ra.get(i).copied().unwrap_or(0), mp.p);
        }
        for (i, slot) in acc_b.iter_mut().enumerate() {
            *slot = crt_step(slot, &modulus, rb.get(i).copied().unwrap_or(0), mp.p);
        }
        modulus *= mp.p;
        let recon: Option<Vec<QuadElem>> =
            acc_a.iter().zip(&acc_b).map(|(x, y)| Some(QuadElem::new(rat_recon(x, &modulus)?, rat_recon(y, &modulus)?, d))).collect();
        let Some(coeffs) = recon else { continue };
        let y0 = l.element(&KPoly::new(coeffs, QuadElem::zero(d)));
        if last.as_ref() == Some(&y0) && verify(a, b, c, &y0, k12) {
            return CommonRoot::Single { y0, k: k12 };
        }
        last = Some(y0);
    }
    CommonRoot::Ambiguous
}

fn vanishes_to_order(p: &UniPoly<ExtElem>, y0: &ExtElem, k: usize) -> bool {
    let shifted = p.taylor_shift(y0);
    (0..k).all(|i| shifted.coeff(i).is_zero())
}

fn verify(a: &UniPoly<ExtElem>, b: &UniPoly<ExtElem>, c: &UniPoly<ExtElem>, y0: &ExtElem, k: usize) -> bool {
    c.eval(y0).is_zero() && vanishes_to_order(a, y0, k) && vanishes_to_order(b, y0, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn over(l: &Arc<ExtField>, polys: &[KPoly]) -> UniPoly<ExtElem> {
        UniPoly::new(polys.iter().map(|p| l.element(p)).collect(), l.zero())
    }

    #[test]
    fn root_in_quadratic_extension() {
        // t^2 = 2; a = (y - t)^2 (y + 1), b = (y - t)^2 (y - 3), c = (y - t)
        let l = ExtField::new(&KPoly::from_ints(&[-2, 0, 1], 1));
        let k = |v: &[i64]| KPoly::from_ints(v, 1);
        let lin = over(&l, &[k(&[0, -1]), k(&[1])]);
        let sq = lin.mul(&lin);
        let a = sq.mul(&over(&l, &[k(&[1]), k(&[1])]));
        let b = sq.mul(&over(&l, &[k(&[-3]), k(&[1])]));
        match common_root(&l, &a, &b, &lin) {
            CommonRoot::Single { y0, k } => {
                assert_eq!(y0, l.generator());
                assert_eq!(k, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let far = over(&l, &[k(&[5]), k(&[1])]);
        assert_eq!(common_root(&l, &a, &b, &far), CommonRoot::None);
    }
}
