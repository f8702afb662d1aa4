//! Expression parser for curve equations.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
//! `factor := ('-'|'+') factor | atom ('^' int)?`, `atom := var | int ('/' int)? | 's' | '(' expr ')'`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hompoly::{Exp3, HomPoly};
use crate::scalar::{check_field_tag, QuadElem, Rational, RATIONAL_FIELD};

type Sparse = BTreeMap<Exp3, QuadElem>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    d: i64,
}

/// Parses a homogeneous polynomial over `Q(sqrt d)` (`d = 1` for `Q`).
pub fn parse_poly(text: &str, d: i64) -> Result<HomPoly> {
    check_field_tag(d)?;
    let mut p = Parser { src: text.as_bytes(), pos: 0, d };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    if e.is_empty() && text.trim().is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".into() });
    }
    HomPoly::from_terms(d, e)
}

fn add_into(a: &mut Sparse, b: Sparse, d: i64) {
    for (e, c) in b {
        let slot = a.entry(e).or_insert_with(|| QuadElem::zero(d));
        *slot = &*slot + &c;
    }
    a.retain(|_, c| !c.is_zero());
}

fn mul(a: &Sparse, b: &Sparse, d: i64) -> Sparse {
    let mut out = Sparse::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
            let slot = out.entry(e).or_insert_with(|| QuadElem::zero(d));
            *slot = &*slot + &(c1 * c2);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn constant(c: QuadElem) -> Sparse {
    let mut m = Sparse::new();
    if !c.is_zero() {
        m.insert([0, 0, 0], c);
    }
    m
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let mut t = self.term()?;
            if c == b'-' {
                t.values_mut().for_each(|v| *v = -v.clone());
            }
            add_into(&mut acc, t, self.d);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = mul(&acc, &f, self.d);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let mut f = self.factor()?;
                f.values_mut().for_each(|v| *v = -v.clone());
                return Ok(f);
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let k = self.integer()?;
            let k: u32 = k.try_into().map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
            let mut acc = constant(QuadElem::one(self.d));
            for _ in 0..k {
                acc = mul(&acc, &base, self.d);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Sparse> {
        let d = self.d;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let mut e = [0; 3];
                e[(c - b'x') as usize] = 1;
                let mut m = Sparse::new();
                m.insert(e, QuadElem::one(d));
                Ok(m)
            }
            Some(b's') => {
                if d == RATIONAL_FIELD {
                    return Err(self.err("`s` requires a quadratic field declaration"));
                }
                self.pos += 1;
                Ok(constant(QuadElem::sqrt_d(d)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
                    }
                }
                Ok(constant(QuadElem::from_rational(Rational::new(num, den), d)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_and_monomial() {
        let f = parse_poly("x^2+y^2-z^2", 1).unwrap();
        assert_eq!((f.degree(), f.num_terms()), (2, 3));
        let g = parse_poly("x*y*z", 1).unwrap();
        assert_eq!((g.degree(), g.num_terms()), (3, 1));
    }

    #[test]
    fn non_homogeneous_reports_degrees() {
        assert_eq!(parse_poly("x^2+y", 1), Err(Error::NonHomogeneous(2, 1)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_poly("x^2 + * y^2", 1) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("(x+y", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("s*x", 1), Err(Error::Syntax { .. })));
    }

    #[test]
    fn quadratic_literals_round_trip() {
        let f = parse_poly("2*x^2+y^2-2*z^2+s*y*z", -2).unwrap();
        let again = parse_poly(&f.to_literal(), -2).unwrap();
        assert_eq!(f, again);
        let g = parse_poly("-1/4*y^2*x^2 - z^2*(x^2+y^2-2*x*y) + x^2*y*z + y^2*x*z", 1).unwrap();
        assert_eq!(parse_poly(&g.to_literal(), 1).unwrap(), g);
        let h = parse_poly("(1+2*s)*x - (3-s)*y", 5).unwrap();
        assert_eq!(parse_poly(&h.to_literal(), 5).unwrap(), h);
    }
}
