//! Dense univariate polynomials over any [`Field`].

use crate::field::Field;
use crate::scalar::QuadElem;

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    /// Coefficients from the constant term up; never has trailing zeros.
    coeffs: Vec<F>,
    zero: F,
}

pub type KPoly = UniPoly<QuadElem>;

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>, zero: F) -> Self {
        let zero = zero.zero_like();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, zero }
    }

    pub fn zero(zero: &F) -> Self {
        UniPoly { coeffs: Vec::new(), zero: zero.zero_like() }
    }

    pub fn constant(c: F) -> Self {
        let z = c.zero_like();
        UniPoly::new(vec![c], z)
    }

    /// The monomial `x`.
    pub fn x(zero: &F) -> Self {
        UniPoly::new(vec![zero.zero_like(), zero.one_like()], zero.clone())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn zero_elem(&self) -> &F {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect();
        UniPoly::new(v, self.zero.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect();
        UniPoly::new(v, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.zero.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(&self.zero);
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        UniPoly::new(v, self.zero.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.zero.clone())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.zero.clone(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly::new(v, self.zero.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::constant(self.zero.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division; `None` when the divisor is zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let inv = d.lc().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((UniPoly::zero(&self.zero), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] = r[i + j].sub(&c.mul(dc));
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Some((UniPoly::new(q, self.zero.clone()), UniPoly::new(r, self.zero.clone())))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).expect("division by zero polynomial").1
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let v = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&c.int_like(i as i64))).collect();
        UniPoly::new(v, self.zero.clone())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = UniPoly::zero(&self.zero);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// `self(x + a)`.
    pub fn taylor_shift(&self, a: &F) -> Self {
        self.compose(&UniPoly::new(vec![a.clone(), a.one_like()], self.zero.clone()))
    }

    /// Order of vanishing at `x = 0`; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicity of the factor `q` in `self` (self nonzero, q non-constant).
    pub fn valuation(&self, q: &Self) -> usize {
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.exact_div(q) {
            cur = next;
            k += 1;
        }
        k
    }

    /// Square-free part `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn map<G: Field>(&self, zero: &G, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), zero.clone())
    }
}

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g` monic.
pub fn xgcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> (UniPoly<F>, UniPoly<F>, UniPoly<F>) {
    let z = a.zero_elem().clone();
    let one = UniPoly::constant(z.one_like());
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), UniPoly::zero(&z));
    let (mut t0, mut t1) = (UniPoly::zero(&z), one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = r0.lc().inv().expect("nonzero");
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

impl KPoly {
    pub fn from_ints(c: &[i64], d: i64) -> Self {
        UniPoly::new(c.iter().map(|&n| QuadElem::from_int(n, d)).collect(), QuadElem::zero(d))
    }

    pub fn field_tag(&self) -> i64 {
        self.zero_elem().d()
    }

    /// Galois conjugate `sqrt d -> -sqrt d` applied to every coefficient.
    pub fn conj(&self) -> Self {
        self.map(self.zero_elem(), |c| c.conj())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_rational())
    }

    /// Human-readable rendering in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            crate::hompoly::push_term(&mut out, c, &mono);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let d = 1;
        let a = KPoly::from_ints(&[-1, 0, 1], d); // x^2 - 1
        let b = KPoly::from_ints(&[1, 1], d); // x + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, KPoly::from_ints(&[-1, 1], d));
        let c = KPoly::from_ints(&[1, 2, 1], d);
        assert_eq!(a.gcd(&c), b);
        let (g, s, t) = xgcd(&a, &c);
        assert_eq!(s.mul(&a).add(&t.mul(&c)), g);
    }

    #[test]
    fn valuation_and_squarefree() {
        let x1 = KPoly::from_ints(&[-1, 1], 1);
        let p = x1.pow(3).mul(&KPoly::from_ints(&[2, 1], 1));
        assert_eq!(p.valuation(&x1), 3);
        assert_eq!(p.squarefree_part(), x1.mul(&KPoly::from_ints(&[2, 1], 1)));
    }
}
