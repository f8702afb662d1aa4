//! Simple algebraic extensions `L = K[t]/(q)` of the base field `K = Q(sqrt d)`.

use std::fmt;
use std::sync::Arc;

use crate::field::Field;
use crate::scalar::QuadElem;
use crate::unipoly::{xgcd, KPoly};

/// `K[t]/(q)` with `q` monic irreducible over `K`.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtField {
    modulus: KPoly,
}

impl Eq for KPoly {}

impl ExtField {
    pub fn new(q: &KPoly) -> Arc<Self> {
        assert!(q.deg() >= 1, "extension modulus must have positive degree");
        Arc::new(ExtField { modulus: q.monic() })
    }

    pub fn modulus(&self) -> &KPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg() as usize
    }

    pub fn base_tag(&self) -> i64 {
        self.modulus.field_tag()
    }

    pub fn element(self: &Arc<Self>, p: &KPoly) -> ExtElem {
        ExtElem { field: Arc::clone(self), rep: p.rem(&self.modulus) }
    }

    pub fn scalar(self: &Arc<Self>, c: &QuadElem) -> ExtElem {
        self.element(&KPoly::constant(c.clone()))
    }

    /// The class of `t`.
    pub fn generator(self: &Arc<Self>) -> ExtElem {
        self.element(&KPoly::x(&QuadElem::zero(self.base_tag())))
    }

    pub fn zero(self: &Arc<Self>) -> ExtElem {
        self.scalar(&QuadElem::zero(self.base_tag()))
    }

    pub fn one(self: &Arc<Self>) -> ExtElem {
        self.scalar(&QuadElem::one(self.base_tag()))
    }
}

#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Arc<ExtField>,
    rep: KPoly,
}

impl PartialEq for ExtElem {
    fn eq(&self, o: &Self) -> bool {
        self.rep == o.rep && (Arc::ptr_eq(&self.field, &o.field) || self.field == o.field)
    }
}

impl ExtElem {
    /// Canonical representative of degree below `deg q`.
    pub fn rep(&self) -> &KPoly {
        &self.rep
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// The element as a base scalar when it lies in `K`.
    pub fn as_base(&self) -> Option<QuadElem> {
        match self.rep.deg() {
            -1 => Some(QuadElem::zero(self.field.base_tag())),
            0 => Some(self.rep.coeff(0)),
            _ => None,
        }
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rep.render("t"))
    }
}

impl Field for ExtElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        ExtElem { field: Arc::clone(&self.field), rep: self.rep.add(&o.rep) }
    }
    fn sub(&self, o: &Self) -> Self {
        ExtElem { field: Arc::clone(&self.field), rep: self.rep.sub(&o.rep) }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.rep.is_zero() || o.rep.is_zero() {
            return self.zero_like();
        }
        let prod = self.rep.mul(&o.rep);
        let rep = if prod.deg() >= self.field.modulus.deg() { prod.rem(&self.field.modulus) } else { prod };
        ExtElem { field: Arc::clone(&self.field), rep }
    }
    fn neg(&self) -> Self {
        ExtElem { field: Arc::clone(&self.field), rep: self.rep.neg() }
    }
    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        if self.rep.deg() == 0 {
            let c = self.rep.coeff(0).inv().ok()?;
            return Some(self.field.scalar(&c));
        }
        let (g, s, _) = xgcd(&self.rep, &self.field.modulus);
        (g.deg() == 0).then(|| self.field.element(&s))
    }
    fn embed(&self, q: &QuadElem) -> Self {
        self.field.scalar(&q.with_field(self.field.base_tag()).unwrap_or_else(|_| q.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_roots_of_two() {
        let l = ExtField::new(&KPoly::from_ints(&[-2, 0, 0, 1], 1));
        let t = l.generator();
        assert_eq!(t.pow(3), l.scalar(&QuadElem::from_int(2, 1)));
        let u = t.add(&l.one());
        assert!(u.mul(&u.inv().unwrap()).is_one());
    }
}
