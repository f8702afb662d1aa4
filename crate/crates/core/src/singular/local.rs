//! Local invariants at an explicitly given point.

use super::census::{PointLocation, SingularPoint};
use super::{generic_plane_changes, AdeType};
use crate::error::{Error, Result, ScalarError};
use crate::factor::factor_binary_form;
use crate::hompoly::{BiPoly, HomPoly, LinearChange};
use crate::resultant::resultant;
use crate::scalar::{QuadElem, RATIONAL_FIELD};
use crate::unipoly::KPoly;

pub type ProjPoint = [QuadElem; 3];

/// Scales so that the first nonzero coordinate is 1.
pub fn normalize_point(p: &ProjPoint) -> Result<ProjPoint> {
    let k = p.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::InvalidArgument("zero vector is not a point".into()))?;
    let inv = p[k].inv()?;
    Ok(std::array::from_fn(|i| &p[i] * &inv))
}

fn point_tag(f: &HomPoly, p: &ProjPoint) -> Result<i64> {
    let mut tag = f.field_tag();
    for c in p.iter().filter(|c| !c.is_rational()) {
        if tag == RATIONAL_FIELD {
            tag = c.d();
        } else if tag != c.d() {
            return Err(ScalarError::FieldMismatch(tag, c.d()).into());
        }
    }
    Ok(tag)
}

/// Affine equation `g(u, v) = f(u a + v b + p)` with `p` moved to the origin.
pub fn local_equation(f: &HomPoly, p: &ProjPoint) -> Result<BiPoly> {
    let tag = point_tag(f, p)?;
    let p = normalize_point(p)?;
    let k = p.iter().position(|c| !c.is_zero()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let m: [[QuadElem; 3]; 3] = std::array::from_fn(|r| {
        [
            QuadElem::from_int((r == others[0]) as i64, tag),
            QuadElem::from_int((r == others[1]) as i64, tag),
            p[r].with_field(tag).unwrap_or_else(|_| p[r].clone()),
        ]
    });
    let t = LinearChange::new(m)?;
    Ok(f.apply_change(&t)?.dehomogenize())
}

/// Order of vanishing of the curve at `p`; errors if `p` is off the curve or smooth.
pub fn multiplicity(f: &HomPoly, p: &ProjPoint) -> Result<u32> {
    let g = local_equation(f, p)?;
    local_multiplicity(&g)
}

fn local_multiplicity(g: &BiPoly) -> Result<u32> {
    match g.order() {
        None => Err(Error::NonIsolated),
        Some(0) => Err(Error::NotOnCurve),
        Some(1) => Err(Error::NotSingular),
        Some(m) => Ok(m),
    }
}

fn restrict_v0(p: &BiPoly) -> KPoly {
    let rows = p.as_univariate(0);
    let d = p.field_tag();
    KPoly::new(rows.iter().map(|r| r.coeff(0)).collect(), QuadElem::zero(d))
}

fn lc_in_u_is_constant(p: &BiPoly) -> bool {
    p.as_univariate(0).last().is_some_and(|c| c.deg() == 0)
}

/// Milnor number of an isolated singular point at the origin of `g`.
///
/// A germ with Milnor number `mu` is `(mu + 1)`-determined, so once a jet
/// of order `k` has `mu < k`, the germ has the same `mu`. Low jets keep the
/// resultants small.
pub fn local_milnor(g: &BiPoly) -> Result<u32> {
    let top = g.total_degree();
    let mut k = g.order().unwrap_or(0).max(2);
    while k < top {
        match milnor_by_resultant(&g.jet(k)) {
            Ok(mu) if mu < k => return Ok(mu),
            Ok(mu) => k = mu + 1,
            Err(Error::NonIsolated) => k += 1,
            Err(e) => return Err(e),
        }
    }
    milnor_by_resultant(g)
}

fn milnor_by_resultant(g: &BiPoly) -> Result<u32> {
    let d = g.field_tag();
    let mut agreed: Vec<u32> = Vec::new();
    for (attempt, a) in generic_plane_changes(0x6d69_6c6e).enumerate() {
        if attempt >= 12 {
            break;
        }
        let m = a.map(|row| row.map(|c| QuadElem::from_int(c, d)));
        // From the second attempt on, multiply by a unit: mu is unchanged, and
        // a factor shared by both partials away from the origin is broken up.
        let h = if attempt == 0 {
            g.linear_substitute(m)
        } else {
            let unit = BiPoly::from_int_terms(d, &[((0, 0), 1), ((1, 0), a[0][0]), ((0, 1), a[1][1])]);
            g.mul(&unit).linear_substitute(m)
        };
        let (hu, hv) = (h.partial(0), h.partial(1));
        if hu.is_zero() || hv.is_zero() || !lc_in_u_is_constant(&hu) || !lc_in_u_is_constant(&hv) {
            continue;
        }
        let common = restrict_v0(&hu).gcd(&restrict_v0(&hv));
        if common.is_zero() || common.coeffs().iter().rev().skip(1).any(|c| !c.is_zero()) {
            continue;
        }
        let r = resultant(&hu, &hv, 0);
        let Some(mu) = r.order_at_zero() else { continue };
        agreed.push(mu as u32);
        if agreed.len() >= 2 {
            let k = agreed.len();
            if agreed[k - 1] == agreed[k - 2] {
                return Ok(mu as u32);
            }
        }
    }
    Err(Error::NonIsolated)
}

/// Milnor number at an explicit singular point.
pub fn milnor(f: &HomPoly, p: &ProjPoint) -> Result<u32> {
    let g = local_equation(f, p)?;
    local_multiplicity(&g)?;
    local_milnor(&g)
}

/// ADE type from multiplicity, Milnor number and the tangent cone of a local equation.
pub fn classify_local(g: &BiPoly) -> Result<(u32, u32, AdeType)> {
    let mult = local_multiplicity(g)?;
    let mu = local_milnor(g)?;
    let ty = match mult {
        2 => AdeType::A(mu),
        3 => {
            let cone = g.homogeneous_part(3);
            let b = HomPoly::from_terms(cone.field_tag(), cone.terms().iter().map(|(&(i, j), c)| ([i, j, 0], c.clone())))?;
            let split = factor_binary_form(&b)?;
            let distinct: u32 =
                split.factors.iter().map(|(f, _)| f.degree()).sum::<u32>() + if split.residual.degree() > 0 { 3 } else { 0 };
            if distinct == 1 {
                if (6..=8).contains(&mu) {
                    AdeType::E(mu)
                } else {
                    AdeType::NotSimple
                }
            } else if mu >= 4 {
                AdeType::D(mu)
            } else {
                AdeType::NotSimple
            }
        }
        _ => AdeType::NotSimple,
    };
    Ok((mult, mu, ty))
}

/// Full local record at an explicit singular point.
pub fn classify_ade(f: &HomPoly, p: &ProjPoint) -> Result<SingularPoint> {
    let g = local_equation(f, p)?;
    let (mult, mu, ty) = classify_local(&g)?;
    Ok(SingularPoint::new(PointLocation::Explicit(normalize_point(p)?), 1, mult, mu, ty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        [QuadElem::from_int(a, 1), QuadElem::from_int(b, 1), QuadElem::from_int(c, 1)]
    }

    #[test]
    fn node_and_smooth_points() {
        let f = parse_poly("x*y*z", 1).unwrap();
        assert_eq!(multiplicity(&f, &pt(0, 0, 1)), Ok(2));
        assert_eq!(multiplicity(&f, &pt(1, 0, 0)), Ok(2));
        assert_eq!(multiplicity(&f, &pt(1, 1, 0)), Err(Error::NotSingular));
        assert_eq!(multiplicity(&f, &pt(1, 1, 1)), Err(Error::NotOnCurve));
    }

    #[test]
    fn cusp_milnor() {
        let f = parse_poly("z*y^2-x^3", 1).unwrap();
        assert_eq!(milnor(&f, &pt(0, 0, 1)), Ok(2));
        assert_eq!(classify_ade(&f, &pt(0, 0, 1)).unwrap().ade_type, AdeType::A(2));
    }

    #[test]
    fn four_lines_not_simple() {
        let f = parse_poly("x^4-y^4", 1).unwrap();
        assert_eq!(classify_ade(&f, &pt(0, 0, 1)).unwrap().ade_type, AdeType::NotSimple);
    }
}
