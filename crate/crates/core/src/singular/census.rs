//! Global census of singular points.
//!
//! After a generic coordinate change the affine partials `G_x, G_y, G_z` are
//! monic in `y` and no singular point lies on `z = 0`. The `x`-coordinates of
//! singular points are roots of `gcd(Res_y(G_x, G_y), Res_y(G_x, G_z))`. Each
//! irreducible factor `q` of that gcd is handled in `L = K[t]/(q)`, so a whole
//! Galois orbit of points is located and classified at once. The Milnor number
//! is the order of `q` in `Res_y(G_x, G_y)` once the point is known to be the
//! only common zero of `G_x, G_y` above its `x`-coordinate.

use std::sync::Arc;

use rayon::prelude::*;

use super::local::classify_local;
use super::local::ProjPoint;
use super::root::{common_root, CommonRoot};
use super::{arnold_c0, generic_changes, AdeType};
use crate::error::{Error, Result};
use crate::ext::{ExtElem, ExtField};
use crate::factor::{factor_k, irreducible_factors};
use crate::field::Field;
use crate::gcd::{gcd_k, radical};
use crate::hompoly::{BiPoly, HomPoly, LinearChange};
use crate::resultant::resultant;
use crate::scalar::{squarefree_decompose, QuadElem, Rational, RATIONAL_FIELD};
use crate::unipoly::{KPoly, UniPoly};

const CENSUS_SEED: u64 = 0x6365_6e73;
const MAX_ATTEMPTS: usize = 7;
/// Candidate changes rejected before any elimination do not count as attempts.
const MAX_CANDIDATES: usize = 200;

/// Where a singular point sits.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum PointLocation {
    /// Coordinates in the base field or, over `Q`, in a quadratic field.
    Explicit(ProjPoint),
    /// A Galois orbit of `size` conjugate points with coordinates in `K[t]/(q)`.
    Orbit { size: usize, modulus: String, coords: [String; 3] },
}

impl PointLocation {
    pub fn describe(&self) -> String {
        match self {
            PointLocation::Explicit(p) => format!("({} : {} : {})", p[0], p[1], p[2]),
            PointLocation::Orbit { modulus, coords, .. } => {
                format!("({} : {} : {}) over {modulus} = 0", coords[0], coords[1], coords[2])
            }
        }
    }
}

/// A singular point, or an orbit of `count` conjugate points sharing all invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularPoint {
    pub location: PointLocation,
    pub count: usize,
    pub multiplicity: u32,
    pub milnor: u32,
    /// Equal to the Milnor number for ADE points; unknown otherwise.
    pub tjurina_local: Option<u32>,
    pub ade_type: AdeType,
    pub arnold_c0: Option<Rational>,
}

impl SingularPoint {
    pub fn new(location: PointLocation, count: usize, multiplicity: u32, milnor: u32, ade_type: AdeType) -> Self {
        let simple = ade_type.is_simple();
        SingularPoint {
            location,
            count,
            multiplicity,
            milnor,
            tjurina_local: simple.then_some(milnor),
            arnold_c0: arnold_c0(ade_type).ok(),
            ade_type,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Census {
    pub points: Vec<SingularPoint>,
    /// Sum of the indices of the ADE points, with multiplicity.
    pub sigma: u32,
    pub tau_sum: u32,
    pub total_tjurina: u32,
    pub residual_tau: i64,
    /// Minimum Arnold exponent over classified points; `None` for a smooth curve.
    pub alpha: Option<Rational>,
    pub complete: bool,
}

impl Census {
    /// Number of points of each type, counting orbit members individually.
    pub fn type_counts(&self) -> std::collections::BTreeMap<AdeType, usize> {
        let mut m = std::collections::BTreeMap::new();
        for p in &self.points {
            *m.entry(p.ade_type).or_insert(0) += p.count;
        }
        m
    }

    pub fn count_of(&self, t: AdeType) -> usize {
        self.type_counts().get(&t).copied().unwrap_or(0)
    }

    pub fn num_points(&self) -> usize {
        self.points.iter().map(|p| p.count).sum()
    }

    pub fn has_not_simple(&self) -> bool {
        self.points.iter().any(|p| !p.ade_type.is_simple())
    }
}

/// One located orbit in original coordinates.
#[derive(Clone, Debug)]
pub(crate) struct OrbitRecord {
    pub(crate) field: Arc<ExtField>,
    pub(crate) coords: [ExtElem; 3],
    pub(crate) multiplicity: u32,
    pub(crate) milnor: u32,
    pub(crate) ade_type: AdeType,
}

impl OrbitRecord {
    fn size(&self) -> usize {
        self.field.degree()
    }

    fn signature(&self) -> (usize, u32, u32, AdeType) {
        (self.size(), self.multiplicity, self.milnor, self.ade_type)
    }
}

enum Attempt {
    Done(Vec<OrbitRecord>),
    /// Rejected before elimination.
    Rejected,
    Unlucky,
    Degenerate,
}

fn at_t(p: &KPoly, l: &Arc<ExtField>) -> ExtElem {
    l.element(p)
}

fn specialize_x(g: &BiPoly, l: &Arc<ExtField>) -> UniPoly<ExtElem> {
    let rows = g.as_univariate(1);
    UniPoly::new(rows.iter().map(|r| at_t(r, l)).collect(), l.zero())
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Taylor coefficients of total degree `k` of `g` at `(x0, y0)`, ordered by power of `x` descending.
fn taylor_part(g: &BiPoly, k: u32, x0: &ExtElem, y0: &ExtElem) -> Vec<ExtElem> {
    (0..=k)
        .rev()
        .map(|i| {
            let j = k - i;
            let mut d = g.clone();
            for _ in 0..i {
                d = d.partial(0);
            }
            for _ in 0..j {
                d = d.partial(1);
            }
            let c = d.eval(x0, y0);
            let w = x0.int_like(factorial(i) * factorial(j));
            c.div(&w).expect("nonzero factorial")
        })
        .collect()
}

fn is_cube(c: &[ExtElem]) -> bool {
    let (a, b, cc, d) = (&c[0], &c[1], &c[2], &c[3]);
    let three = a.int_like(3);
    let nine = a.int_like(9);
    b.mul(b).sub(&three.mul(a).mul(cc)).is_zero()
        && b.mul(cc).sub(&nine.mul(a).mul(d)).is_zero()
        && cc.mul(cc).sub(&three.mul(b).mul(d)).is_zero()
}

fn no_singular_point_at_infinity(g: &HomPoly) -> bool {
    let d = g.field_tag();
    let (gx, gy, gz) = g.partials();
    let line = |p: &HomPoly| {
        let n = p.degree();
        KPoly::new((0..=n).map(|i| p.coeff(&[i, n - i, 0])).collect(), QuadElem::zero(d))
    };
    let common = gcd_k(&gcd_k(&line(&gx), &line(&gy)), &line(&gz));
    if common.deg() > 0 {
        return false;
    }
    // (1:0:0) is the point missed by the chart y = 1.
    let n = g.degree().saturating_sub(1);
    [gx, gy, gz].iter().any(|p| !p.coeff(&[n, 0, 0]).is_zero())
}

fn normalized_coords(m: &LinearChange, local: [ExtElem; 3]) -> Option<[ExtElem; 3]> {
    let mut coords = m.apply(&local);
    let k = coords.iter().position(|c| !c.is_zero())?;
    let inv = coords[k].inv()?;
    for c in coords.iter_mut() {
        *c = c.mul(&inv);
    }
    Some(coords)
}

/// Several singular points above one rational `x0`: split the fiber exactly and
/// classify each point from its local equation.
fn classify_rational_fiber(q: &KPoly, g: &BiPoly, gx: &BiPoly, gy: &BiPoly, gz: &BiPoly, m: &LinearChange) -> Option<Vec<OrbitRecord>> {
    let x0 = -&q.monic().coeff(0);
    let fiber = |p: &BiPoly| {
        let rows = p.as_univariate(1);
        KPoly::new(rows.iter().map(|r| r.eval(&x0)).collect(), x0.zero_like())
    };
    let h = gcd_k(&gcd_k(&fiber(gx), &fiber(gy)), &fiber(gz));
    let l = ExtField::new(q);
    let mut out = Vec::new();
    for (lin, _) in factor_k(&h) {
        if lin.deg() != 1 {
            return None;
        }
        let y0 = -&lin.coeff(0);
        let (multiplicity, milnor, ade_type) = classify_local(&g.translate(&x0, &y0)).ok()?;
        let coords = normalized_coords(m, [l.scalar(&x0), l.scalar(&y0), l.one()])?;
        out.push(OrbitRecord { field: l.clone(), coords, multiplicity, milnor, ade_type });
    }
    Some(out)
}

fn classify_orbit(q: &KPoly, g: &BiPoly, gx: &BiPoly, gy: &BiPoly, gz: &BiPoly, r1: &KPoly, m: &LinearChange) -> Option<Vec<OrbitRecord>> {
    let l = ExtField::new(q);
    let (sx, sy, sz) = (specialize_x(gx, &l), specialize_x(gy, &l), specialize_x(gz, &l));
    let y0 = match common_root(&l, &sx, &sy, &sz) {
        // q divides both resultants for unrelated reasons.
        CommonRoot::None => return Some(Vec::new()),
        CommonRoot::Ambiguous if q.deg() == 1 => return classify_rational_fiber(q, g, gx, gy, gz, m),
        CommonRoot::Ambiguous => return None,
        CommonRoot::Single { y0, .. } => y0,
    };
    let x0 = l.generator();
    let milnor = r1.valuation(q) as u32;
    let n = g.total_degree();
    let mut mult = None;
    let mut cone = Vec::new();
    for k in 1..=n.max(1) {
        let part = taylor_part(g, k, &x0, &y0);
        if part.iter().any(|c| !c.is_zero()) {
            mult = Some(k);
            cone = part;
            break;
        }
    }
    let mult = mult?;
    if mult < 2 {
        return None;
    }
    let ade_type = match mult {
        2 => AdeType::A(milnor),
        3 if is_cube(&cone) => {
            if (6..=8).contains(&milnor) {
                AdeType::E(milnor)
            } else {
                AdeType::NotSimple
            }
        }
        3 => AdeType::D(milnor),
        _ => AdeType::NotSimple,
    };
    let coords = normalized_coords(m, [x0, y0, l.one()])?;
    Some(vec![OrbitRecord { field: l, coords, multiplicity: mult, milnor, ade_type }])
}

fn attempt(f: &HomPoly, m: &LinearChange) -> Result<Attempt> {
    let g = f.apply_change(m)?;
    let n = g.degree();
    let (px, py, pz) = g.partials();
    let top = [0, n - 1, 0];
    if [&px, &py, &pz].iter().any(|p| p.coeff(&top).is_zero()) || !no_singular_point_at_infinity(&g) {
        return Ok(Attempt::Rejected);
    }
    let (gx, gy, gz) = (px.dehomogenize(), py.dehomogenize(), pz.dehomogenize());
    let (r1, r2) = rayon::join(|| resultant(&gx, &gy, 1), || resultant(&gx, &gz, 1));
    if r1.is_zero() || r2.is_zero() {
        return Ok(Attempt::Degenerate);
    }
    let common = gcd_k(&r1, &r2);
    if common.deg() <= 0 {
        return Ok(Attempt::Done(Vec::new()));
    }
    let sigma = radical(&common);
    let qs = irreducible_factors(&sigma);
    let ga = g.dehomogenize();
    let found: Option<Vec<Vec<OrbitRecord>>> = qs.par_iter().map(|q| classify_orbit(q, &ga, &gx, &gy, &gz, &r1, m)).collect();
    match found {
        Some(v) => Ok(Attempt::Done(v.into_iter().flatten().collect())),
        None => Ok(Attempt::Unlucky),
    }
}

fn signatures(v: &[OrbitRecord]) -> Vec<(usize, u32, u32, AdeType)> {
    let mut s: Vec<_> = v.iter().map(OrbitRecord::signature).collect();
    s.sort();
    s
}

/// Locates and classifies every singular point, agreeing across two independent changes.
pub(crate) fn locate(f: &HomPoly) -> Result<Vec<OrbitRecord>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    if f.degree() <= 1 {
        return Ok(Vec::new());
    }
    if !crate::syzygy::is_reduced(f)? {
        return Err(Error::NonReduced);
    }
    let mut seen: Vec<Vec<OrbitRecord>> = Vec::new();
    let mut degenerate = 0;
    let mut attempts = 0;
    for m in generic_changes(CENSUS_SEED).take(MAX_CANDIDATES) {
        if attempts == MAX_ATTEMPTS {
            break;
        }
        let outcome = attempt(f, &m)?;
        if !matches!(outcome, Attempt::Rejected) {
            attempts += 1;
        }
        match outcome {
            Attempt::Done(v) => {
                let sig = signatures(&v);
                if seen.iter().any(|w| signatures(w) == sig) {
                    return Ok(v);
                }
                seen.push(v);
            }
            Attempt::Degenerate => degenerate += 1,
            Attempt::Unlucky | Attempt::Rejected => {}
        }
    }
    if degenerate >= 2 {
        Err(Error::NonReduced)
    } else {
        Err(Error::GenericityFailure(MAX_ATTEMPTS))
    }
}

fn ext_to_quad(e: &ExtElem, root: &QuadElem) -> QuadElem {
    e.rep().eval(root)
}

/// Concrete description of the points with coordinates `coords` in `K[t]/(q)`:
/// explicit points when they lie in `K` or, over `Q`, in a quadratic field.
pub(crate) fn locations(field: &Arc<ExtField>, coords: &[ExtElem; 3]) -> Vec<PointLocation> {
    let q = field.modulus();
    let lead = coords.iter().find(|c| !c.is_zero()).and_then(|c| c.inv()).expect("nonzero point");
    let coords: [ExtElem; 3] = std::array::from_fn(|i| coords[i].mul(&lead));
    let coords = &coords;
    if q.deg() == 1 {
        let p: ProjPoint = std::array::from_fn(|i| coords[i].as_base().expect("degree one"));
        return vec![PointLocation::Explicit(p)];
    }
    if q.deg() == 2 && q.field_tag() == RATIONAL_FIELD {
        // q = t^2 + b t + c with roots (-b +- s sqrt e) / 2.
        let b = q.coeff(1).a().clone();
        let c = q.coeff(0).a().clone();
        let disc = &b * &b - c * Rational::from_integer(4.into());
        if let Some((s, e)) = squarefree_decompose(&disc) {
            let half = Rational::new(1.into(), 2.into());
            return [1i64, -1]
                .iter()
                .map(|&sign| {
                    let root = QuadElem::new(-&b * &half, &s * &half * Rational::from_integer(sign.into()), e);
                    PointLocation::Explicit(std::array::from_fn(|i| ext_to_quad(&coords[i], &root)))
                })
                .collect();
        }
    }
    let text = std::array::from_fn(|i| coords[i].to_string());
    vec![PointLocation::Orbit { size: field.degree(), modulus: q.render("t"), coords: text }]
}

impl PointLocation {
    /// Number of points described.
    pub fn size(&self) -> usize {
        match self {
            PointLocation::Explicit(_) => 1,
            PointLocation::Orbit { size, .. } => *size,
        }
    }
}

fn to_points(rec: &OrbitRecord) -> Vec<SingularPoint> {
    locations(&rec.field, &rec.coords)
        .into_iter()
        .map(|loc| {
            let n = loc.size();
            SingularPoint::new(loc, n, rec.multiplicity, rec.milnor, rec.ade_type)
        })
        .collect()
}

fn sort_key(p: &SingularPoint) -> (u8, String) {
    match &p.location {
        PointLocation::Explicit(c) => (0, c.iter().map(|x| x.to_literal()).collect::<Vec<_>>().join(",")),
        PointLocation::Orbit { modulus, coords, .. } => (1, format!("{modulus};{}", coords.join(","))),
    }
}

/// All singular points, with explicit coordinates where they lie in `K` (or a
/// quadratic field when `K = Q`) and as conjugate orbits otherwise.
pub fn find_singular_points(f: &HomPoly) -> Result<Vec<SingularPoint>> {
    Ok(points_of(&locate(f)?))
}

fn points_of(records: &[OrbitRecord]) -> Vec<SingularPoint> {
    let mut pts: Vec<SingularPoint> = records.iter().flat_map(to_points).collect();
    pts.sort_by_key(sort_key);
    pts
}

/// Census with the global Tjurina number supplied by the caller.
pub fn census_with_tau(f: &HomPoly, total_tjurina: u32) -> Result<Census> {
    Ok(census_from(&locate(f)?, total_tjurina))
}

pub(crate) fn census_from(records: &[OrbitRecord], total_tjurina: u32) -> Census {
    let points = points_of(records);
    let sigma = points.iter().filter(|p| p.ade_type.is_simple()).map(|p| p.milnor * p.count as u32).sum();
    let tau_sum: u32 = points.iter().filter_map(|p| p.tjurina_local.map(|t| t * p.count as u32)).sum();
    let residual_tau = total_tjurina as i64 - tau_sum as i64;
    let alpha = points.iter().filter_map(|p| p.arnold_c0.clone()).min();
    let complete = residual_tau == 0 && points.iter().all(|p| p.ade_type.is_simple());
    Census { points, sigma, tau_sum, total_tjurina, residual_tau, alpha, complete }
}

/// Full census; the global Tjurina number is computed independently.
pub fn census(f: &HomPoly) -> Result<Census> {
    let tau = crate::syzygy::total_tjurina(f)?;
    census_with_tau(f, tau)
}
