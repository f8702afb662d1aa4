//! Word-size prime field arithmetic, reduction of exact scalars, CRT and
//! rational reconstruction. Everything computed here is either certified later
//! by exact arithmetic or only ever used as an upper or lower bound.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{QuadElem, Rational, RATIONAL_FIELD};

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| powmod(a, p - 2, p))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let (mut dd, mut s) = (n - 1, 0);
    while dd % 2 == 0 {
        dd /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, dd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Square root modulo an odd prime (Tonelli-Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

/// A prime together with a square root of the field tag modulo it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPrime {
    pub p: u64,
    /// `sqrt(d) mod p`; 0 for the rational field.
    pub s: u64,
}

/// Deterministic sequence of primes below `2^31` in which `d` is a nonzero square.
pub struct PrimeStream {
    next: u64,
    d: i64,
}

impl PrimeStream {
    pub fn new(d: i64) -> Self {
        PrimeStream { next: (1u64 << 31) - 1, d }
    }

    /// Starts below `start` (for independent prime choices).
    pub fn starting_at(d: i64, start: u64) -> Self {
        PrimeStream { next: start, d }
    }
}

impl Iterator for PrimeStream {
    type Item = ModPrime;
    fn next(&mut self) -> Option<ModPrime> {
        while self.next > 3 {
            let p = self.next;
            self.next -= 1;
            if !is_prime(p) {
                continue;
            }
            if self.d == RATIONAL_FIELD {
                return Some(ModPrime { p, s: 0 });
            }
            let dm = self.d.rem_euclid(p as i64) as u64;
            if dm == 0 {
                continue;
            }
            if let Some(s) = sqrt_mod(dm, p) {
                return Some(ModPrime { p, s });
            }
        }
        None
    }
}

pub fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

pub fn rat_mod(r: &Rational, p: u64) -> Option<u64> {
    let den = bigint_mod(r.denom(), p);
    let inv = invmod(den, p)?;
    Some(mulmod(bigint_mod(r.numer(), p), inv, p))
}

/// Image of `a + b sqrt d` under `sqrt d -> s` modulo `p`.
pub fn quad_mod(q: &QuadElem, p: u64, s: u64) -> Option<u64> {
    let a = rat_mod(q.a(), p)?;
    if q.b().is_zero() {
        return Some(a);
    }
    let b = rat_mod(q.b(), p)?;
    Some(addmod(a, mulmod(b, s, p), p))
}

/// Given `x = r mod m` and `x = a mod p`, returns the residue modulo `m p` in `[0, m p)`.
pub fn crt_step(r: &BigInt, m: &BigInt, a: u64, p: u64) -> BigInt {
    let rm = bigint_mod(r, p);
    let mm = bigint_mod(m, p);
    let k = mulmod(submod(a, rm, p), invmod(mm, p).expect("coprime moduli"), p);
    r + m * BigInt::from(k)
}

/// Symmetric representative in `(-m/2, m/2]`.
pub fn symmetric(r: &BigInt, m: &BigInt) -> BigInt {
    let r = r.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Rational `n/d` with `|n|, d <= sqrt(m/2)` congruent to `a` modulo `m`.
pub fn rat_recon(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let a = a.mod_floor(m);
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Bit length of a nonnegative bound.
pub fn bits(n: &BigInt) -> u64 {
    n.bits()
}

pub fn biguint_of(n: &BigInt) -> BigUint {
    match n.sign() {
        Sign::Minus => panic!("negative"),
        _ => n.magnitude().clone(),
    }
}

/// Dense polynomials over `F_p`, coefficient vectors from the constant term up.
pub mod fp {
    use super::*;

    pub type FpPoly = Vec<u64>;

    pub fn trim(mut a: FpPoly) -> FpPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &[u64]) -> i64 {
        a.len() as i64 - 1
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| addmod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p)).collect())
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| submod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p)).collect())
    }

    pub fn scale(a: &[u64], c: u64, p: u64) -> FpPoly {
        trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        let pp = p as u128;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let o = &mut out[i + j];
                *o += x as u128 * y as u128;
                if *o >= pp * pp * 4 {
                    *o %= pp;
                }
            }
        }
        trim(out.into_iter().map(|v| (v % pp) as u64).collect())
    }

    pub fn monic(a: &[u64], p: u64) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => scale(a, invmod(l, p).expect("nonzero"), p),
        }
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let inv = invmod(*b.last().unwrap(), p).unwrap();
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = mulmod(r[i + db], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                r[i + j] = submod(r[i + j], mulmod(c, bc, p), p);
            }
            q[i] = c;
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        div_rem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    /// Extended gcd: `(g, s, t)` with `s a + t b = g` monic.
    pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = invmod(*r0.last().expect("not both zero"), p).unwrap();
        (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
    }

    pub fn derivative(a: &[u64], p: u64) -> FpPoly {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| addmod(mulmod(acc, x, p), c, p))
    }

    /// `base^e mod m`, exponent given as big unsigned integer.
    pub fn powmod_big(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
        let mut acc: FpPoly = vec![1];
        let b = rem(base, m, p);
        for i in (0..e.bits()).rev() {
            acc = rem(&mul(&acc, &acc, p), m, p);
            if e.bit(i) {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
        }
        rem(&acc, m, p)
    }

    pub fn powmod(base: &[u64], e: u64, m: &[u64], p: u64) -> FpPoly {
        powmod_big(base, &BigUint::from(e), m, p)
    }
}
