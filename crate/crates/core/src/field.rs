//! Minimal field interface shared by base scalars and extension elements.

use std::fmt::Debug;

use crate::scalar::QuadElem;

/// Elements carry enough context (field tag, modulus) to build their own zero and one.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Image of a base scalar in the field of `self`.
    fn embed(&self, q: &QuadElem) -> Self;

    fn is_one(&self) -> bool {
        self.sub(&self.one_like()).is_zero()
    }

    fn int_like(&self, n: i64) -> Self {
        self.embed(&QuadElem::from_int(n, crate::scalar::RATIONAL_FIELD))
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.one_like();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
}

impl Field for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem::zero(self.d())
    }
    fn one_like(&self) -> Self {
        QuadElem::one(self.d())
    }
    fn is_zero(&self) -> bool {
        QuadElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        QuadElem::inv(self).ok()
    }
    fn embed(&self, q: &QuadElem) -> Self {
        if q.d() == self.d() || q.is_rational() {
            QuadElem::new(q.a().clone(), q.b().clone(), if q.is_rational() { self.d() } else { q.d() })
        } else {
            panic!("cannot embed Q(sqrt {}) into Q(sqrt {})", q.d(), self.d())
        }
    }
}
