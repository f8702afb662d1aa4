//! Exact scalars: rationals and elements of a quadratic field `Q(sqrt d)`.
//!
//! A [`QuadElem`] carries the square-free tag `d` of its ambient field. The tag
//! `1` denotes `Q` itself; such elements always have a zero irrational part and
//! embed into every quadratic field.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ScalarError;

pub type Rational = BigRational;

/// Field tag of `Q`.
pub const RATIONAL_FIELD: i64 = 1;

/// Builds a normalized rational `num/den`.
pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Checks that `d` is a usable field tag: `1` for `Q`, otherwise square-free and not 0 or 1.
pub fn check_field_tag(d: i64) -> Result<i64, ScalarError> {
    if d == RATIONAL_FIELD {
        return Ok(d);
    }
    if d == 0 || !is_squarefree(d.unsigned_abs()) {
        return Err(ScalarError::BadFieldTag(d));
    }
    Ok(d)
}

/// `n` with every square factor removed, keeping the sign.
pub(crate) fn squarefree_part(n: i64) -> i64 {
    let sign = n.signum();
    let mut m = n.unsigned_abs();
    let mut out = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    sign * (out * m) as i64
}

pub(crate) fn is_squarefree(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Writes a nonzero rational as `r = s^2 * e` with `e` a square-free integer.
/// Returns `(s, e)`.
pub(crate) fn squarefree_decompose(r: &Rational) -> Option<(Rational, i64)> {
    if r.is_zero() {
        return None;
    }
    // r = n/m = n*m / m^2
    let prod = r.numer() * r.denom();
    let sign: i64 = if prod.is_negative() { -1 } else { 1 };
    let mut rest = prod.abs();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    // Inputs here are discriminants of small eliminant factors; trial division is enough.
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= num_traits::pow(p.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1u32;
    }
    core *= rest;
    let core = core.to_i64()? * sign;
    let s = BigRational::new(square, r.denom().clone());
    Some((s, core))
}

/// An element `a + b*sqrt(d)`.
#[derive(Clone, Debug)]
pub struct QuadElem {
    a: Rational,
    b: Rational,
    d: i64,
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadElem {}

impl Hash for QuadElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl QuadElem {
    pub fn new(a: Rational, b: Rational, d: i64) -> Self {
        if d == RATIONAL_FIELD {
            QuadElem { a: a + b, b: Rational::zero(), d }
        } else {
            QuadElem { a, b, d }
        }
    }

    pub fn from_rational(a: Rational, d: i64) -> Self {
        QuadElem { a, b: Rational::zero(), d }
    }

    pub fn from_int(n: i64, d: i64) -> Self {
        Self::from_rational(int(n), d)
    }

    pub fn from_bigint(n: BigInt, d: i64) -> Self {
        Self::from_rational(Rational::from_integer(n), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: i64) -> Self {
        QuadElem::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero(d: i64) -> Self {
        Self::from_int(0, d)
    }

    pub fn one(d: i64) -> Self {
        Self::from_int(1, d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Re-tags the element into the field `Q(sqrt d)`; only rational elements can move.
    pub fn with_field(&self, d: i64) -> Result<Self, ScalarError> {
        if self.d == d {
            return Ok(self.clone());
        }
        if !self.b.is_zero() {
            return Err(ScalarError::FieldMismatch(self.d, d));
        }
        Ok(QuadElem::from_rational(self.a.clone(), d))
    }

    pub fn conj(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// The field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.d)
    }

    fn joint_field(&self, other: &Self) -> Result<i64, ScalarError> {
        if self.d == other.d {
            Ok(self.d)
        } else if self.b.is_zero() && (self.d == RATIONAL_FIELD || other.d != RATIONAL_FIELD) {
            Ok(other.d)
        } else if other.b.is_zero() {
            Ok(self.d)
        } else if self.b.is_zero() {
            Ok(other.d)
        } else {
            Err(ScalarError::FieldMismatch(self.d, other.d))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.joint_field(other)?;
        Ok(QuadElem::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.joint_field(other)?;
        Ok(QuadElem::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.joint_field(other)?;
        if self.b.is_zero() && other.b.is_zero() {
            return Ok(QuadElem::from_rational(&self.a * &other.a, d));
        }
        let a = &self.a * &other.a + &self.b * &other.b * int(d);
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(QuadElem::new(a, b, d))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(QuadElem::from_rational(self.a.recip(), self.d));
        }
        let n = self.norm();
        Ok(QuadElem::new(&self.a / &n, -(&self.b / &n), self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadElem::new(&self.a * r, &self.b * r, self.d)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadElem::one(self.d);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    /// Literal syntax of curve files: `s` stands for `sqrt(d)`.
    pub fn to_literal(&self) -> String {
        self.render("s")
    }

    fn render(&self, root: &str) -> String {
        if self.b.is_zero() {
            return self.a.to_string();
        }
        let bpart = if self.b.is_one() {
            root.to_string()
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.b)
        };
        if self.a.is_zero() {
            bpart
        } else if bpart.starts_with('-') {
            format!("{}{}", self.a, bpart)
        } else {
            format!("{}+{}", self.a, bpart)
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("sqrt({})", self.d);
        f.write_str(&self.render(&root))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadElem> for &'a QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: &'a QuadElem) -> QuadElem {
                self.$checked(rhs).expect("quadratic field mismatch")
            }
        }
        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: QuadElem) -> QuadElem {
                (&self).$checked(&rhs).expect("quadratic field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -self.a, b: -self.b, d: self.d }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic in `Q(sqrt d)`.
pub fn quad_arith(x: &QuadElem, y: &QuadElem, op: ArithOp) -> Result<QuadElem, ScalarError> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

/// Formats a rational exactly, followed by a short decimal approximation for humans.
pub fn rational_with_decimal(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let approx = r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
    format!("{r} (~{approx:.5})")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadElem {
        QuadElem::new(int(a), int(b), d)
    }

    #[test]
    fn rational_normalizes() {
        assert_eq!(rational(2, 4).unwrap(), rational(1, 2).unwrap());
        let r = rational(-3, -6).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (BigInt::from(1), BigInt::from(2)));
        let z = rational(0, 7).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::from(0), BigInt::from(1)));
        assert_eq!(rational(1, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn defining_relations() {
        let s = QuadElem::sqrt_d(-2);
        assert_eq!(&s * &s, QuadElem::from_int(-2, -2));
        assert_eq!(q(1, 1, 2) * q(-1, 1, 2), QuadElem::one(2));
        let half = QuadElem::from_rational(rational(1, 2).unwrap(), 5);
        let third = QuadElem::from_rational(rational(1, 3).unwrap(), 5);
        assert_eq!(&half + &third, QuadElem::from_rational(rational(5, 6).unwrap(), 5));
    }

    #[test]
    fn mismatch_and_zero_division() {
        let a = QuadElem::sqrt_d(2);
        let b = QuadElem::sqrt_d(3);
        assert_eq!(quad_arith(&a, &b, ArithOp::Add), Err(ScalarError::FieldMismatch(2, 3)));
        assert_eq!(quad_arith(&a, &QuadElem::zero(2), ArithOp::Div), Err(ScalarError::DivisionByZero));
        // rationals embed into either field
        assert!(quad_arith(&a, &QuadElem::from_int(3, 1), ArithOp::Mul).is_ok());
    }

    #[test]
    fn field_tags() {
        assert!(check_field_tag(-2).is_ok());
        assert!(check_field_tag(1).is_ok());
        assert!(check_field_tag(8).is_err());
        assert!(check_field_tag(0).is_err());
    }

    #[test]
    fn squarefree_core() {
        let (s, e) = squarefree_decompose(&rational(-12, 1).unwrap()).unwrap();
        assert_eq!(e, -3);
        assert_eq!(s, int(2));
        let (s, e) = squarefree_decompose(&rational(1, 8).unwrap()).unwrap();
        // 1/8 = (1/4)^2 * 2
        assert_eq!((s, e), (rational(1, 4).unwrap(), 2));
    }

    #[test]
    fn literal_rendering() {
        assert_eq!(q(0, 2, -2).to_literal(), "2*s");
        assert_eq!(q(1, -1, 3).to_string(), "1-sqrt(3)");
        assert_eq!(q(-5, 0, 3).to_literal(), "-5");
    }
}
