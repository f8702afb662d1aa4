//! Modular gcd of univariate polynomials over `Q(sqrt d)`.
//!
//! Monic gcds modulo several primes are combined by CRT and rational
//! reconstruction; a candidate is accepted only after exact trial division of
//! both inputs, which certifies it.

use num_bigint::BigInt;
use num_traits::One;

use crate::modp::{crt_step, fp, quad_mod, rat_recon, ModPrime, PrimeStream};
use crate::resultant::split_components;
use crate::scalar::{QuadElem, RATIONAL_FIELD};
use crate::unipoly::KPoly;

fn reduce(p: &KPoly, mp: ModPrime, s: u64) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = p.coeffs().iter().map(|c| quad_mod(c, mp.p, s)).collect();
    let v = v?;
    // Reject primes that drop the degree.
    (v.last().copied().unwrap_or(1) != 0).then_some(v)
}

fn image(p: &KPoly, q: &KPoly, mp: ModPrime, d: i64) -> Option<(Vec<u64>, Vec<u64>)> {
    let one = |s: u64| -> Option<Vec<u64>> {
        let a = reduce(p, mp, s)?;
        let b = reduce(q, mp, s)?;
        Some(fp::gcd(&a, &b, mp.p))
    };
    if d == RATIONAL_FIELD {
        let g = one(0)?;
        let z = vec![0; g.len()];
        Some((g, z))
    } else {
        let plus = one(mp.s)?;
        let minus = one(mp.p - mp.s)?;
        if plus.len() != minus.len() {
            return None;
        }
        Some(split_components(&plus, &minus, mp))
    }
}

/// Monic gcd over the field of the inputs.
pub fn gcd_k(a: &KPoly, b: &KPoly) -> KPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.deg() == 0 || b.deg() == 0 {
        return KPoly::constant(QuadElem::one(a.field_tag()));
    }
    if a.deg().min(b.deg()) <= 2 {
        return a.gcd(b);
    }
    let d = if a.field_tag() != RATIONAL_FIELD { a.field_tag() } else { b.field_tag() };
    let zero = QuadElem::zero(d);
    let mut best_deg = usize::MAX;
    let mut ra: Vec<BigInt> = Vec::new();
    let mut rb: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<KPoly> = None;
    for mp in PrimeStream::new(d) {
        let Some((ga, gb)) = image(a, b, mp, d) else { continue };
        let deg = ga.len() - 1;
        if deg == 0 {
            return KPoly::constant(QuadElem::one(d));
        }
        if deg > best_deg {
            continue;
        }
        if deg < best_deg {
            best_deg = deg;
            ra = vec![BigInt::from(0); deg + 1];
            rb = vec![BigInt::from(0); deg + 1];
            modulus = BigInt::one();
            last = None;
        }
        for (slot, &x) in ra.iter_mut().zip(&ga) {
            *slot = crt_step(slot, &modulus, x, mp.p);
        }
        for (slot, &x) in rb.iter_mut().zip(&gb) {
            *slot = crt_step(slot, &modulus, x, mp.p);
        }
        modulus *= mp.p;
        let recon: Option<Vec<QuadElem>> =
            ra.iter().zip(&rb).map(|(x, y)| Some(QuadElem::new(rat_recon(x, &modulus)?, rat_recon(y, &modulus)?, d))).collect();
        let Some(coeffs) = recon else { continue };
        let cand = KPoly::new(coeffs, zero.clone());
        if last.as_ref() == Some(&cand) && a.exact_div(&cand).is_some() && b.exact_div(&cand).is_some() {
            return cand;
        }
        last = Some(cand);
    }
    unreachable!("prime supply exhausted")
}

/// Square-free part, monic.
pub fn radical(a: &KPoly) -> KPoly {
    let g = gcd_k(a, &a.derivative());
    a.exact_div(&g).expect("gcd divides").monic()
}
