//! Homogeneous polynomials in `x, y, z`, their affine charts, and linear changes
//! of coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::{QuadElem, RATIONAL_FIELD};
use crate::unipoly::KPoly;

pub type Exp3 = [u32; 3];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    d: i64,
    degree: u32,
    terms: BTreeMap<Exp3, QuadElem>,
}

fn binom_table(n: usize) -> Vec<Vec<i64>> {
    let mut t = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = 1;
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
    }
    t
}

impl HomPoly {
    pub fn zero(d: i64, degree: u32) -> Self {
        HomPoly { d, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(c: QuadElem, e: Exp3) -> Self {
        let d = c.d();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        HomPoly { d, degree: e.iter().sum(), terms }
    }

    pub fn var(i: usize, d: i64) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        HomPoly::monomial(QuadElem::one(d), e)
    }

    pub fn constant(c: QuadElem) -> Self {
        HomPoly::monomial(c, [0, 0, 0])
    }

    /// Builds a polynomial from terms, rejecting mixed degrees.
    pub fn from_terms(d: i64, terms: impl IntoIterator<Item = (Exp3, QuadElem)>) -> Result<Self> {
        let mut map: BTreeMap<Exp3, QuadElem> = BTreeMap::new();
        for (e, c) in terms {
            let c = c.with_field(d).map_err(Error::from)?;
            let slot = map.entry(e).or_insert_with(|| QuadElem::zero(d));
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degs = map.keys().map(|e| e.iter().sum::<u32>());
        let degree = degs.next().unwrap_or(0);
        let (lo, hi) = map.keys().map(|e| e.iter().sum::<u32>()).fold((degree, degree), |(lo, hi), g| (lo.min(g), hi.max(g)));
        if lo != hi {
            return Err(Error::NonHomogeneous(hi, lo));
        }
        Ok(HomPoly { d, degree, terms: map })
    }

    pub fn from_int_terms(d: i64, terms: &[(Exp3, i64)]) -> Self {
        HomPoly::from_terms(d, terms.iter().map(|&(e, c)| (e, QuadElem::from_int(c, d)))).expect("homogeneous literal")
    }

    pub fn field_tag(&self) -> i64 {
        self.d
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exp3, QuadElem> {
        &self.terms
    }

    pub fn coeff(&self, e: &Exp3) -> QuadElem {
        self.terms.get(e).cloned().unwrap_or_else(|| QuadElem::zero(self.d))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn joint_tag(&self, o: &Self) -> i64 {
        if self.d == o.d {
            self.d
        } else if self.d == RATIONAL_FIELD {
            o.d
        } else {
            self.d
        }
    }

    /// Re-tags into `Q(sqrt d)`; fails if coefficients live in a different quadratic field.
    pub fn with_field(&self, d: i64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((*e, c.with_field(d)?)))
            .collect::<std::result::Result<BTreeMap<_, _>, crate::error::ScalarError>>()?;
        Ok(HomPoly { d, degree: self.degree, terms })
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        let d = self.joint_tag(o);
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let slot = terms.entry(*e).or_insert_with(|| QuadElem::zero(d));
            *slot = &*slot + c;
        }
        terms.retain(|_, c| !c.is_zero());
        HomPoly { d, degree: self.degree, terms }
    }

    pub fn neg(&self) -> Self {
        HomPoly { d: self.d, degree: self.degree, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        if c.is_zero() {
            return HomPoly::zero(self.d, self.degree);
        }
        let d = if c.is_rational() { self.d } else { c.d() };
        HomPoly { d, degree: self.degree, terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.joint_tag(o);
        let mut terms: BTreeMap<Exp3, QuadElem> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                let prod = c1 * c2;
                let slot = terms.entry(e).or_insert_with(|| QuadElem::zero(d));
                *slot = &*slot + &prod;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomPoly { d, degree: self.degree + o.degree, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = HomPoly::constant(QuadElem::one(self.d));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn product(factors: &[HomPoly]) -> Self {
        let d = factors.iter().map(|f| f.d).find(|&d| d != RATIONAL_FIELD).unwrap_or(RATIONAL_FIELD);
        factors.iter().fold(HomPoly::constant(QuadElem::one(d)), |acc, f| acc.mul(f))
    }

    /// Partial derivative in variable `i` (0 = x, 1 = y, 2 = z).
    pub fn partial(&self, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            terms.insert(f, c * &QuadElem::from_int(e[i] as i64, self.d));
        }
        HomPoly { d: self.d, degree: self.degree.saturating_sub(1), terms }
    }

    /// `(f_x, f_y, f_z)`.
    pub fn partials(&self) -> (HomPoly, HomPoly, HomPoly) {
        (self.partial(0), self.partial(1), self.partial(2))
    }

    /// Value at a point whose coordinates lie in any field containing the coefficients.
    pub fn eval<F: Field>(&self, p: &[F; 3]) -> F {
        let n = self.degree as usize;
        let pw: Vec<Vec<F>> = p
            .iter()
            .map(|v| {
                let mut row = vec![v.one_like()];
                for k in 1..=n {
                    row.push(row[k - 1].mul(v));
                }
                row
            })
            .collect();
        let mut acc = p[0].zero_like();
        for (e, c) in &self.terms {
            let m = pw[0][e[0] as usize].mul(&pw[1][e[1] as usize]).mul(&pw[2][e[2] as usize]);
            acc = acc.add(&m.mul(&p[0].embed(c)));
        }
        acc
    }

    /// `f o M`, i.e. the polynomial `v -> f(M v)`.
    pub fn apply_change(&self, m: &LinearChange) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear(m))
    }

    fn substitute_linear(&self, m: &LinearChange) -> Self {
        let d = self.d_with(m);
        let n = self.degree;
        let forms: Vec<HomPoly> = (0..3)
            .map(|i| {
                HomPoly::from_terms(
                    d,
                    (0..3).map(|j| {
                        let mut e = [0; 3];
                        e[j] = 1;
                        (e, m.entry(i, j).clone())
                    }),
                )
                .expect("linear form")
            })
            .map(|f| if f.is_zero() { HomPoly::zero(d, 1) } else { f })
            .collect();
        let powers: Vec<Vec<HomPoly>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![HomPoly::constant(QuadElem::one(d))];
                for k in 1..=n as usize {
                    v.push(v[k - 1].mul(l));
                }
                v
            })
            .collect();
        let mut acc = HomPoly::zero(d, n);
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]).scale(c);
            if !t.is_zero() {
                acc = acc.add(&t);
            }
        }
        acc.degree = n;
        acc
    }

    fn d_with(&self, m: &LinearChange) -> i64 {
        if self.d != RATIONAL_FIELD {
            return self.d;
        }
        m.entries().iter().flatten().map(|c| c.d()).find(|&d| d != RATIONAL_FIELD).unwrap_or(self.d)
    }

    /// Restriction to the chart `z = 1`.
    pub fn dehomogenize(&self) -> BiPoly {
        BiPoly::from_terms(self.d, self.terms.iter().map(|(e, c)| ((e[0], e[1]), c.clone())))
    }

    /// Checks `x f_x + y f_y + z f_z = n f`.
    pub fn euler_identity_holds(&self) -> bool {
        let (fx, fy, fz) = self.partials();
        let lhs = HomPoly::var(0, self.d).mul(&fx).add(&HomPoly::var(1, self.d).mul(&fy)).add(&HomPoly::var(2, self.d).mul(&fz));
        let rhs = self.scale(&QuadElem::from_int(self.degree as i64, self.d));
        lhs.sub(&rhs).is_zero()
    }

    /// Scales so that the leading term (graded-lex) has coefficient 1.
    pub fn monic(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Multiplies by the least common denominator so that all coefficients have integral parts.
    pub fn clear_denominators(&self) -> Self {
        let mut l = num_bigint::BigInt::from(1);
        for c in self.terms.values() {
            l = num_integer::Integer::lcm(&l, &c.denom_lcm());
        }
        self.scale(&QuadElem::from_bigint(l, self.d))
    }

    /// Canonical text with `s` for `sqrt d`, terms in graded-lex order.
    pub fn to_literal(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            push_term(&mut out, c, &monomial_string(e));
        }
        out
    }
}

pub(crate) fn monomial_string(e: &Exp3) -> String {
    let mut parts = Vec::new();
    for (v, &k) in ["x", "y", "z"].iter().zip(e.iter()) {
        match k {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

/// Appends `c * mono` to a running sum with canonical sign handling.
pub(crate) fn push_term(out: &mut String, c: &QuadElem, mono: &str) {
    let negative = if c.is_rational() { c.a().is_negative() } else { c.a().is_negative() || (c.a().is_zero() && c.b().is_negative()) };
    let abs = if negative { -c } else { c.clone() };
    let mut body = abs.to_literal();
    if !abs.is_rational() && !abs.a().is_zero() {
        body = format!("({body})");
    }
    let term = if mono.is_empty() {
        body
    } else if abs.is_one() {
        mono.to_string()
    } else {
        format!("{body}*{mono}")
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(&term);
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Binomial coefficient `C(n, k)` as `usize`.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All exponent triples of total degree `n` in graded-lex descending order.
pub fn monomials(n: u32) -> Vec<Exp3> {
    let mut v = Vec::with_capacity(binom(n as usize + 2, 2));
    for i in (0..=n).rev() {
        for j in (0..=n - i).rev() {
            v.push([i, j, n - i - j]);
        }
    }
    v
}

/// An invertible `3 x 3` matrix acting on coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    m: [[QuadElem; 3]; 3],
}

impl LinearChange {
    pub fn new(m: [[QuadElem; 3]; 3]) -> Result<Self> {
        let lc = LinearChange { m };
        if lc.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(lc)
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<Self> {
        LinearChange::new(m.map(|row| row.map(|c| QuadElem::from_int(c, RATIONAL_FIELD))))
    }

    pub fn identity() -> Self {
        LinearChange::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadElem {
        &self.m[i][j]
    }

    pub fn entries(&self) -> &[[QuadElem; 3]; 3] {
        &self.m
    }

    pub fn det(&self) -> QuadElem {
        let m = &self.m;
        let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
        let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
        let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
        &(&t1 - &t2) + &t3
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out: [[QuadElem; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = QuadElem::zero(RATIONAL_FIELD);
                for k in 0..3 {
                    acc = &acc + &(&self.m[i][k] * &o.m[k][j]);
                }
                *slot = acc;
            }
        }
        LinearChange { m: out }
    }

    /// `M v` for a point with coordinates in any field containing the entries.
    pub fn apply<F: Field>(&self, v: &[F; 3]) -> [F; 3] {
        std::array::from_fn(|i| (0..3).fold(v[0].zero_like(), |acc, j| acc.add(&v[j].mul(&v[0].embed(&self.m[i][j])))))
    }

    pub fn inverse(&self) -> Self {
        let m = &self.m;
        let det = self.det().inv().expect("invertible");
        let cof = |a: usize, b: usize, c: usize, d: usize| &(&m[a][b] * &m[c][d]) - &(&m[a][d] * &m[c][b]);
        let adj = [
            [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
            [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
            [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
        ];
        LinearChange { m: adj.map(|row| row.map(|c| &c * &det)) }
    }
}

impl Default for QuadElem {
    fn default() -> Self {
        QuadElem::zero(RATIONAL_FIELD)
    }
}

/// Sparse polynomial in two variables `(u, v)`; used for affine charts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    d: i64,
    terms: BTreeMap<(u32, u32), QuadElem>,
}

impl BiPoly {
    pub fn zero(d: i64) -> Self {
        BiPoly { d, terms: BTreeMap::new() }
    }

    pub fn from_terms(d: i64, terms: impl IntoIterator<Item = ((u32, u32), QuadElem)>) -> Self {
        let mut map: BTreeMap<(u32, u32), QuadElem> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert_with(|| QuadElem::zero(d));
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        BiPoly { d, terms: map }
    }

    pub fn from_int_terms(d: i64, t: &[((u32, u32), i64)]) -> Self {
        BiPoly::from_terms(d, t.iter().map(|&(e, c)| (e, QuadElem::from_int(c, d))))
    }

    pub fn field_tag(&self) -> i64 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), QuadElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    /// Degree in variable `var` (0 = u, 1 = v).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|&(a, b)| if var == 0 { a } else { b }).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        BiPoly::from_terms(self.d, self.terms.clone().into_iter().chain(o.terms.clone()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        BiPoly::from_terms(self.d, self.terms.clone().into_iter().chain(o.terms.iter().map(|(e, c)| (*e, -c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Vec::new();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                out.push(((a + a2, b + b2), c * c2));
            }
        }
        BiPoly::from_terms(self.d, out)
    }

    pub fn partial(&self, var: usize) -> Self {
        BiPoly::from_terms(
            self.d,
            self.terms.iter().filter_map(|(&(a, b), c)| {
                let k = if var == 0 { a } else { b };
                (k > 0).then(|| {
                    let e = if var == 0 { (a - 1, b) } else { (a, b - 1) };
                    (e, c * &QuadElem::from_int(k as i64, self.d))
                })
            }),
        )
    }

    pub fn eval<F: Field>(&self, u: &F, v: &F) -> F {
        let du = self.degree_in(0) as usize;
        let dv = self.degree_in(1) as usize;
        let mut pu = vec![u.one_like()];
        for k in 1..=du {
            pu.push(pu[k - 1].mul(u));
        }
        let mut pv = vec![v.one_like()];
        for k in 1..=dv {
            pv.push(pv[k - 1].mul(v));
        }
        self.terms.iter().fold(u.zero_like(), |acc, (&(a, b), c)| acc.add(&pu[a as usize].mul(&pv[b as usize]).mul(&u.embed(c))))
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).min()
    }

    /// Homogeneous part of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> BiPoly {
        BiPoly { d: self.d, terms: self.terms.iter().filter(|(&(a, b), _)| a + b == k).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Terms of total degree at most `k`.
    pub fn jet(&self, k: u32) -> BiPoly {
        BiPoly { d: self.d, terms: self.terms.iter().filter(|(&(a, b), _)| a + b <= k).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// `p(u + a, v + b)`.
    pub fn translate(&self, a: &QuadElem, b: &QuadElem) -> BiPoly {
        let n = self.total_degree() as usize;
        let bt = binom_table(n);
        let pow = |x: &QuadElem| {
            let mut v = vec![QuadElem::one(x.d())];
            for k in 1..=n {
                v.push(&v[k - 1] * x);
            }
            v
        };
        let (pa, pb) = (pow(a), pow(b));
        let mut out = Vec::new();
        for (&(i, j), c) in &self.terms {
            for s in 0..=i as usize {
                let ca = c * &(&QuadElem::from_int(bt[i as usize][s], self.d) * &pa[i as usize - s]);
                if ca.is_zero() {
                    continue;
                }
                for t in 0..=j as usize {
                    let cb = &QuadElem::from_int(bt[j as usize][t], self.d) * &pb[j as usize - t];
                    out.push(((s as u32, t as u32), &ca * &cb));
                }
            }
        }
        BiPoly::from_terms(pick_tag(self.d, a, b), out)
    }

    /// Linear substitution `(u, v) -> (a u + b v, c u + e v)`.
    pub fn linear_substitute(&self, m: [[QuadElem; 2]; 2]) -> BiPoly {
        let tag = pick_tag(pick_tag(self.d, &m[0][0], &m[0][1]), &m[1][0], &m[1][1]);
        let lu = BiPoly::from_terms(tag, [((1, 0), m[0][0].clone()), ((0, 1), m[0][1].clone())]);
        let lv = BiPoly::from_terms(tag, [((1, 0), m[1][0].clone()), ((0, 1), m[1][1].clone())]);
        let n = self.total_degree() as usize;
        let powers = |l: &BiPoly| {
            let mut v = vec![BiPoly::from_terms(tag, [((0, 0), QuadElem::one(tag))])];
            for k in 1..=n {
                v.push(v[k - 1].mul(l));
            }
            v
        };
        let (pu, pv) = (powers(&lu), powers(&lv));
        let mut out = BiPoly::zero(tag);
        for (&(i, j), c) in &self.terms {
            let t = pu[i as usize].mul(&pv[j as usize]);
            out = out.add(&BiPoly::from_terms(tag, t.terms.iter().map(|(e, x)| (*e, x * c))));
        }
        out
    }

    /// View as a polynomial in `var` with coefficients in `K[other]`, constant term first.
    pub fn as_univariate(&self, var: usize) -> Vec<KPoly> {
        let deg = self.degree_in(var) as usize;
        let other_deg = self.degree_in(1 - var) as usize;
        let mut rows = vec![vec![QuadElem::zero(self.d); other_deg + 1]; deg + 1];
        for (&(a, b), c) in &self.terms {
            let (k, o) = if var == 0 { (a, b) } else { (b, a) };
            rows[k as usize][o as usize] = c.clone();
        }
        rows.into_iter().map(|r| KPoly::new(r, QuadElem::zero(self.d))).collect()
    }

    pub fn from_univariate(var: usize, coeffs: &[KPoly], d: i64) -> BiPoly {
        let mut out = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (o, c) in p.coeffs().iter().enumerate() {
                let e = if var == 0 { (k as u32, o as u32) } else { (o as u32, k as u32) };
                out.push((e, c.clone()));
            }
        }
        BiPoly::from_terms(d, out)
    }
}

fn pick_tag(d: i64, a: &QuadElem, b: &QuadElem) -> i64 {
    [d, a.d(), b.d()]
        .into_iter()
        .zip([true, !a.is_rational(), !b.is_rational()])
        .filter(|(t, keep)| *keep && *t != RATIONAL_FIELD)
        .map(|(t, _)| t)
        .next()
        .unwrap_or(RATIONAL_FIELD)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partials_of_simple_forms() {
        let f = HomPoly::from_int_terms(1, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -1)]);
        let (fx, fy, fz) = f.partials();
        assert_eq!(fx, HomPoly::from_int_terms(1, &[([1, 0, 0], 2)]));
        assert_eq!(fy, HomPoly::from_int_terms(1, &[([0, 1, 0], 2)]));
        assert_eq!(fz, HomPoly::from_int_terms(1, &[([0, 0, 1], -2)]));
        assert!(f.euler_identity_holds());
        let xyz = HomPoly::from_int_terms(1, &[([1, 1, 1], 1)]);
        assert_eq!(xyz.partial(2), HomPoly::from_int_terms(1, &[([1, 1, 0], 1)]));
    }

    #[test]
    fn change_composition() {
        let f = HomPoly::from_int_terms(1, &[([3, 0, 0], 1), ([1, 1, 1], -2), ([0, 1, 2], 5)]);
        let m = LinearChange::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]).unwrap();
        let n = LinearChange::from_ints([[0, 1, 1], [1, 0, 2], [1, 1, 0]]).unwrap();
        let lhs = f.apply_change(&m).unwrap().apply_change(&n).unwrap();
        let rhs = f.apply_change(&m.mul(&n)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(f.apply_change(&LinearChange::identity()).unwrap(), f);
        let swap = LinearChange::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        let x2 = HomPoly::from_int_terms(1, &[([2, 0, 0], 1)]);
        assert_eq!(x2.apply_change(&swap).unwrap(), HomPoly::from_int_terms(1, &[([0, 2, 0], 1)]));
        assert_eq!(m.mul(&m.inverse()), LinearChange::identity());
    }

    #[test]
    fn singular_change_rejected() {
        assert_eq!(LinearChange::from_ints([[1, 1, 0], [1, 1, 0], [0, 0, 1]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn canonical_printing() {
        let f = HomPoly::from_int_terms(1, &[([0, 0, 2], -1), ([2, 0, 0], 1), ([0, 2, 0], 1)]);
        assert_eq!(f.to_literal(), "x^2 + y^2 - z^2");
    }

    #[test]
    fn bipoly_translate() {
        let p = BiPoly::from_int_terms(1, &[((2, 0), 1), ((0, 1), -1)]); // u^2 - v
        let t = p.translate(&QuadElem::from_int(1, 1), &QuadElem::from_int(1, 1));
        assert_eq!(t, BiPoly::from_int_terms(1, &[((2, 0), 1), ((1, 0), 2), ((0, 1), -1)]));
    }
}
