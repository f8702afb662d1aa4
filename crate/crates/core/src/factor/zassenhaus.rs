//! Factorization of square-free integer polynomials: Cantor-Zassenhaus modulo a
//! small prime, quadratic Hensel lifting along a factor tree, and exhaustive
//! recombination of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::modp::{bigint_mod, fp, is_prime};

pub type IPoly = Vec<BigInt>;

pub fn itrim(mut a: IPoly) -> IPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn content(a: &IPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &IPoly) -> IPoly {
    let c = content(a);
    if c.is_zero() {
        return a.clone();
    }
    let c = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &c).collect()
}

pub fn imul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    itrim(out)
}

/// Exact quotient over the integers, `None` if `b` does not divide `a`.
pub fn idiv_exact(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= db {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            r[i + j] -= &c * bc;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| itrim(q))
}

fn reduce_m(a: &IPoly, m: &BigInt) -> IPoly {
    itrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn sym_m(a: &IPoly, m: &BigInt) -> IPoly {
    let half = m / 2u32;
    itrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mul_m(a: &IPoly, b: &IPoly, m: &BigInt) -> IPoly {
    reduce_m(&imul(a, b), m)
}

fn add_m(a: &IPoly, b: &IPoly, m: &BigInt) -> IPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce_m(&(0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect(), m)
}

fn sub_m(a: &IPoly, b: &IPoly, m: &BigInt) -> IPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce_m(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect(), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_m(a: &IPoly, b: &IPoly, m: &BigInt) -> (IPoly, IPoly) {
    let db = b.len() - 1;
    let mut r = reduce_m(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * bc).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(db);
    (itrim(q), itrim(r))
}

fn to_fp(a: &IPoly, p: u64) -> Vec<u64> {
    fp::trim(a.iter().map(|c| bigint_mod(c, p)).collect())
}

fn from_fp(a: &[u64]) -> IPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Distinct-degree then equal-degree factorization of a monic square-free polynomial mod `p`.
pub fn factor_mod_p(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut i = 1usize;
    while fp::deg(&f) >= 2 * i as i64 {
        h = fp::powmod(&h, p, &f, p);
        let g = fp::gcd(&fp::sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            equal_degree(&g, i, p, rng, &mut out);
            f = fp::div_rem(&f, &g, p).0;
            h = fp::rem(&h, &f, p);
        }
        i += 1;
    }
    if f.len() > 1 {
        out.push(fp::monic(&f, p));
    }
    out.sort();
    out
}

fn equal_degree(g: &[u64], i: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    let n = g.len() - 1;
    if n == i {
        out.push(g.to_vec());
        return;
    }
    let e: BigUint = (BigUint::from(p).pow(i as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = fp::trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp::sub(&fp::powmod_big(&a, &e, g, p), &[1], p);
        let d = fp::gcd(&b, g, p);
        if d.len() > 1 && d.len() < g.len() {
            let rest = fp::div_rem(g, &d, p).0;
            equal_degree(&d, i, p, rng, out);
            equal_degree(&fp::monic(&rest, p), i, p, rng, out);
            return;
        }
    }
}

/// One quadratic Hensel step: from `f = g h` and `s g + t h = 1` modulo `m`
/// to the same relations modulo `m^2`. `f`, `g`, `h` monic.
fn hensel_step(f: &IPoly, g: &IPoly, h: &IPoly, s: &IPoly, t: &IPoly, m: &BigInt) -> (IPoly, IPoly, IPoly, IPoly) {
    let m2 = m * m;
    let e = sub_m(f, &mul_m(g, h, &m2), &m2);
    let (q, r) = divrem_monic_m(&mul_m(s, &e, &m2), h, &m2);
    let g2 = add_m(&add_m(g, &mul_m(t, &e, &m2), &m2), &mul_m(&q, g, &m2), &m2);
    let h2 = add_m(h, &r, &m2);
    let b = sub_m(&add_m(&mul_m(s, &g2, &m2), &mul_m(t, &h2, &m2), &m2), &vec![BigInt::one()], &m2);
    let (c, dd) = divrem_monic_m(&mul_m(s, &b, &m2), &h2, &m2);
    let s2 = sub_m(s, &dd, &m2);
    let t2 = sub_m(&sub_m(t, &mul_m(t, &b, &m2), &m2), &mul_m(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts a factorization of the monic polynomial `f` mod `p` to mod `p^(2^k)` for
/// the smallest `k` with `p^(2^k) >= target`. Returns the lifted monic factors and modulus.
fn lift_tree(f: &IPoly, factors: &[Vec<u64>], p: u64, target: &BigInt) -> (Vec<IPoly>, BigInt) {
    let mut modulus = BigInt::from(p);
    let mut steps = 0;
    while &modulus < target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = lift_rec(f, factors, p, steps);
    (lifted, modulus)
}

fn lift_rec(f: &IPoly, factors: &[Vec<u64>], p: u64, steps: usize) -> Vec<IPoly> {
    if factors.len() == 1 {
        let mut m = BigInt::from(p);
        for _ in 0..steps {
            m = &m * &m;
        }
        return vec![reduce_m(f, &m)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, g| fp::mul(&acc, g, p));
    let g0 = prod(&factors[..mid]);
    let h0 = prod(&factors[mid..]);
    let (_, s0, t0) = fp::xgcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(&h0), from_fp(&s0), from_fp(&t0));
    let mut m = BigInt::from(p);
    for _ in 0..steps {
        let fm = reduce_m(f, &(&m * &m));
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = lift_rec(&g, &factors[..mid], p, steps);
    out.extend(lift_rec(&h, &factors[mid..], p, steps));
    out
}

fn l2_norm_ceil(f: &IPoly) -> BigInt {
    let sq: BigInt = f.iter().map(|c| c * c).sum();
    sq.sqrt() + 1u32
}

fn choose_prime(f: &IPoly, rng: &mut ChaCha8Rng) -> (u64, Vec<Vec<u64>>) {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    let mut p = 32_749u64;
    while tried < 6 {
        p += 2;
        if !is_prime(p) || bigint_mod(lc, p) == 0 {
            continue;
        }
        let fp_ = to_fp(f, p);
        let d = fp::derivative(&fp_, p);
        if fp::gcd(&fp_, &d, p).len() != 1 {
            continue;
        }
        tried += 1;
        let facs = factor_mod_p(&fp::monic(&fp_, p), p, rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        if best.as_ref().unwrap().1.len() <= 1 {
            break;
        }
    }
    best.expect("a good prime exists")
}

/// Irreducible factors over the integers of a square-free primitive polynomial
/// of positive degree with positive leading coefficient.
pub fn factor_squarefree(f: &IPoly) -> Vec<IPoly> {
    let f = primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let rest = primitive(&f[1..].to_vec());
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let (p, modfacs) = choose_prime(&f, &mut rng);
    if modfacs.len() <= 1 {
        return vec![f];
    }
    let lc = f.last().unwrap().clone();
    let bound = BigInt::from(2u32) * lc.abs() * (BigInt::one() << n) * l2_norm_ceil(&f) + 1u32;
    let mut modulus = BigInt::from(p);
    while modulus < bound {
        modulus = &modulus * &modulus;
    }
    let lc_inv_m = mod_inverse(&lc, &modulus);
    let fmonic = reduce_m(&f.iter().map(|c| c * &lc_inv_m).collect(), &modulus);
    let (mut lifted, m) = lift_tree(&fmonic, &modfacs, p, &bound);
    debug_assert_eq!(m, modulus);
    recombine(f, &mut lifted, &m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

fn recombine(mut f: IPoly, lifted: &mut Vec<IPoly>, m: &BigInt) -> Vec<IPoly> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        for subset in Combinations::new(lifted.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc.clone()];
            for &i in &subset {
                g = mul_m(&g, &lifted[i], m);
            }
            let g = primitive(&sym_m(&g, m));
            let (g0, f0) = (&g[0], &f[0]);
            if !g0.is_zero() && !(f0 * &lc).is_multiple_of(g0) {
                continue;
            }
            if let Some(q) = idiv_exact(&f, &g) {
                out.push(g);
                f = q;
                let keep: Vec<IPoly> = lifted.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, x)| x.clone()).collect();
                *lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.len() > 1 {
        out.push(primitive(&f));
    }
    out
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), first: true }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
        None
    }
}

/// Small helper for tests and callers holding `i64` data.
pub fn ipoly(c: &[i64]) -> IPoly {
    itrim(c.iter().map(|&x| BigInt::from(x)).collect())
}

pub fn to_i64s(a: &IPoly) -> Option<Vec<i64>> {
    a.iter().map(|c| c.to_i64()).collect()
}
