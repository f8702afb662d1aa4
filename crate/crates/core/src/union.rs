//! Adding a smooth line or conic to a curve.
//!
//! The added component `C2` is parametrized by a binary form map, so
//! `f1 o phi` is a binary form whose irreducible factors are the orbits of
//! intersection points and whose multiplicities are the intersection numbers.
//! At each point the local state of `C1` together with the contact order
//! determines the singularity of `C1 u C2` and its Tjurina jump.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::{ExtElem, ExtField};
use crate::factor::factor_k;
use crate::field::Field;
use crate::gcd::radical;
use crate::hompoly::{BiPoly, HomPoly};
use crate::resultant::resultant;
use crate::scalar::{QuadElem, Rational, RATIONAL_FIELD};
use crate::singular::census::{census_from, locate, locations, OrbitRecord, PointLocation};
use crate::singular::AdeType;
use crate::syzygy::{mdr, total_tjurina};
use crate::unipoly::KPoly;

/// Local configuration of `C1` at an intersection point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum BaseState {
    /// Smooth point of `C1` where `C2` has contact of order `k + 1`.
    SmoothPoint { k: u32 },
    /// `A_k` point whose tangent cone does not contain the tangent of `C2`.
    ATransversal { k: u32 },
    /// Node with `C2` tangent to one branch, `i = k + 2`.
    A1BranchTangent { k: u32 },
    /// Cusp with `C2` tangent to the cuspidal tangent.
    A2CuspidalTangent,
    /// Anything else; the union is not simple there.
    Other { ade: AdeType, tangent_in_cone: Option<bool> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DTag {
    Transversal,
    NonTransversal,
    NotApplicable,
}

/// One intersection point of `C1` and `C2`, or an orbit of `count` conjugate points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContactRecord {
    #[serde(skip)]
    pub location: PointLocation,
    pub count: usize,
    pub i_mult: u32,
    pub base_state: BaseState,
    /// `NotSimple` when the base state is outside the simple cases.
    pub predicted: AdeType,
    pub delta_tau: Option<u32>,
    pub d_tag: DTag,
}

impl ContactRecord {
    /// Type with the transversality tag, e.g. `D6^n`.
    pub fn tagged_type(&self) -> String {
        match self.d_tag {
            DTag::Transversal => format!("{}^t", self.predicted),
            DTag::NonTransversal => format!("{}^n", self.predicted),
            DTag::NotApplicable => self.predicted.to_string(),
        }
    }
}

/// Singularity of `C1 u C2` at a point with base state `base` and contact `i`, with its Tjurina jump.
pub fn predict_union_singularity(base: &BaseState, i: u32) -> Result<(AdeType, u32, DTag)> {
    let bad = |what: &str| Err(Error::Verification(format!("{what} is inconsistent with contact order {i}")));
    match *base {
        BaseState::SmoothPoint { k } => {
            if i != k + 1 {
                return bad("smooth point");
            }
            Ok((AdeType::A(2 * k + 1), k + i, DTag::NotApplicable))
        }
        BaseState::ATransversal { k } => {
            if i != 2 {
                return bad("transversal A point");
            }
            Ok((AdeType::D(k + 3), 3, DTag::Transversal))
        }
        BaseState::A1BranchTangent { k } => {
            if k == 0 || i != k + 2 {
                return bad("branch tangency");
            }
            Ok((AdeType::D(2 * k + 4), 2 * k + 3, DTag::NonTransversal))
        }
        BaseState::A2CuspidalTangent => {
            if i != 3 {
                return bad("cuspidal tangency");
            }
            Ok((AdeType::E(7), 5, DTag::NotApplicable))
        }
        BaseState::Other { .. } => Err(Error::NonSimpleUnion),
    }
}

/// Parametrization `P^1 -> C2` by binary forms in `x, y`, and the tangent line of `C2` at a point.
struct Added {
    phi: [HomPoly; 3],
    equation: HomPoly,
}

impl Added {
    fn new(f2: &HomPoly) -> Result<Self> {
        match f2.degree() {
            1 => line_parametrization(f2),
            2 => conic_parametrization(f2),
            n => Err(Error::UnsupportedComponent(n)),
        }
    }

    fn tangent<F: Field>(&self, p: &[F; 3]) -> [F; 3] {
        let (a, b, c) = self.equation.partials();
        [a.eval(p), b.eval(p), c.eval(p)]
    }
}

fn cross<F: Field>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [a[1].mul(&b[2]).sub(&a[2].mul(&b[1])), a[2].mul(&b[0]).sub(&a[0].mul(&b[2])), a[0].mul(&b[1]).sub(&a[1].mul(&b[0]))]
}

fn unit(i: usize, d: i64) -> [QuadElem; 3] {
    std::array::from_fn(|j| QuadElem::from_int((i == j) as i64, d))
}

fn linear_form(d: i64, cx: &QuadElem, cy: &QuadElem) -> HomPoly {
    HomPoly::from_terms(d, [([1, 0, 0], cx.clone()), ([0, 1, 0], cy.clone())]).expect("linear form")
}

fn line_parametrization(f2: &HomPoly) -> Result<Added> {
    let d = f2.field_tag();
    let l: [QuadElem; 3] = std::array::from_fn(|i| f2.coeff(&unit_exp(i)));
    let pts: Vec<[QuadElem; 3]> = (0..3).map(|i| cross(&l, &unit(i, d))).filter(|p| p.iter().any(|c| !c.is_zero())).collect();
    let (a, b) = (0..pts.len())
        .flat_map(|i| (i + 1..pts.len()).map(move |j| (i, j)))
        .map(|(i, j)| (&pts[i], &pts[j]))
        .find(|(a, b)| cross(a, b).iter().any(|c| !c.is_zero()))
        .ok_or(Error::UnsupportedComponent(1))?;
    let phi = std::array::from_fn(|c| linear_form(d, &a[c], &b[c]));
    Ok(Added { phi, equation: f2.clone() })
}

fn unit_exp(i: usize) -> [u32; 3] {
    std::array::from_fn(|j| (i == j) as u32)
}

/// Symmetric matrix of a quadratic form.
fn gram(q: &HomPoly) -> [[QuadElem; 3]; 3] {
    let half = Rational::new(1.into(), 2.into());
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&e);
            if i == j {
                c
            } else {
                c.scale(&half)
            }
        })
    })
}

fn conic_parametrization(q: &HomPoly) -> Result<Added> {
    let d = q.field_tag();
    let a = gram(q);
    let det = crate::linalg::det(a.iter().map(|r| r.to_vec()).collect(), &QuadElem::one(d));
    if det.is_zero() {
        return Err(Error::UnsupportedComponent(2));
    }
    let p0 = conic_point(q).ok_or(Error::ProfileIncomplete)?;
    let k = p0.iter().position(|c| !c.is_zero()).unwrap();
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    // w(x, y) = x e_i + y e_j; phi(w) = Q(w) p0 - 2 B(p0, w) w.
    let one = QuadElem::one(d);
    let zero = QuadElem::zero(d);
    let w: [HomPoly; 3] = std::array::from_fn(|c| {
        let cx = if c == i { one.clone() } else { zero.clone() };
        let cy = if c == j { one.clone() } else { zero.clone() };
        linear_form(d, &cx, &cy)
    });
    let qw = compose_forms(q, &w);
    let ap0: Vec<QuadElem> = (0..3).map(|r| (0..3).fold(zero.clone(), |s, c| &s + &(&a[r][c] * &p0[c]))).collect();
    let bw = linear_form(d, &ap0[i], &ap0[j]);
    let two = QuadElem::from_int(2, d);
    let phi = std::array::from_fn(|c| qw.scale(&p0[c]).sub(&bw.mul(&w[c]).scale(&two)));
    Ok(Added { phi, equation: q.clone() })
}

/// A point of the conic over the base field: small integer points first, then
/// intersections with coordinate lines.
fn conic_point(q: &HomPoly) -> Option<[QuadElem; 3]> {
    let d = q.field_tag();
    for x in -3i64..=3 {
        for y in -3i64..=3 {
            for z in 0i64..=3 {
                let p = [QuadElem::from_int(x, d), QuadElem::from_int(y, d), QuadElem::from_int(z, d)];
                if p.iter().any(|c| !c.is_zero()) && q.eval(&p).is_zero() {
                    return Some(p);
                }
            }
        }
    }
    for k in 0..3 {
        let (i, j) = [(1, 2), (0, 2), (0, 1)][k];
        let zero = QuadElem::zero(d);
        let one = QuadElem::one(d);
        let w: [HomPoly; 3] = std::array::from_fn(|c| linear_form(d, if c == i { &one } else { &zero }, if c == j { &one } else { &zero }));
        let b = compose_forms(q, &w);
        if b.is_zero() {
            continue;
        }
        if let Some((s, t)) = binary_rational_root(&b) {
            let mut p = [zero.clone(), zero.clone(), zero];
            p[i] = s;
            p[j] = t;
            return Some(p);
        }
    }
    None
}

/// Square-free `e` such that the rational conic `q` has a point over `Q(sqrt e)`, read off a coordinate line.
fn conic_splitting_tag(q: &HomPoly) -> Option<i64> {
    let d = q.field_tag();
    let zero = QuadElem::zero(d);
    let one = QuadElem::one(d);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let w: [HomPoly; 3] = std::array::from_fn(|c| linear_form(d, if c == i { &one } else { &zero }, if c == j { &one } else { &zero }));
        let (p, ymult) = dehomogenize_binary(&compose_forms(q, &w));
        if ymult > 0 || p.deg() != 2 {
            continue;
        }
        let disc = &(&p.coeff(1) * &p.coeff(1)) - &(&QuadElem::from_int(4, d) * &(&p.coeff(2) * &p.coeff(0)));
        let r = disc.a() * disc.a().denom() * disc.a().denom();
        let e = i64::try_from(r.to_integer()).ok()?;
        if e != 0 {
            return Some(crate::scalar::squarefree_part(e));
        }
    }
    None
}

/// Both curves over one field, extended when a rational conic has no rational point.
fn over_common_field(f1: &HomPoly, f2: &HomPoly) -> Result<(HomPoly, HomPoly)> {
    let d = if f1.field_tag() == RATIONAL_FIELD { f2.field_tag() } else { f1.field_tag() };
    let (f1, f2) = (f1.with_field(d)?, f2.with_field(d)?);
    if f2.degree() == 2 && d == RATIONAL_FIELD && conic_point(&f2).is_none() {
        if let Some(e) = conic_splitting_tag(&f2).filter(|&e| e != RATIONAL_FIELD) {
            return Ok((f1.with_field(e)?, f2.with_field(e)?));
        }
    }
    Ok((f1, f2))
}

fn binary_rational_root(b: &HomPoly) -> Option<(QuadElem, QuadElem)> {
    let d = b.field_tag();
    let (p, ymult) = dehomogenize_binary(b);
    if ymult > 0 {
        return Some((QuadElem::one(d), QuadElem::zero(d)));
    }
    factor_k(&p).into_iter().find(|(g, _)| g.deg() == 1).map(|(g, _)| (-&g.coeff(0), QuadElem::one(d)))
}

/// `f(comps)` for a ternary form `f` and three forms in `x, y`.
pub fn compose_forms(f: &HomPoly, comps: &[HomPoly; 3]) -> HomPoly {
    let d = f.field_tag();
    let n = f.degree() as usize;
    let powers: Vec<Vec<HomPoly>> = comps
        .iter()
        .map(|c| {
            let mut v = vec![HomPoly::constant(QuadElem::one(d))];
            for k in 1..=n {
                v.push(v[k - 1].mul(c));
            }
            v
        })
        .collect();
    let deg = comps.iter().map(|c| c.degree()).max().unwrap_or(0) * n as u32;
    let mut out = HomPoly::zero(d, deg);
    for (e, c) in f.terms() {
        let t = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]);
        out = out.add(&t.scale(c));
    }
    out
}

/// `(b(x, 1), multiplicity of the root y = 0)`.
fn dehomogenize_binary(b: &HomPoly) -> (KPoly, u32) {
    let d = b.field_tag();
    let n = b.degree() as usize;
    let mut coeffs = vec![QuadElem::zero(d); n + 1];
    for (e, c) in b.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let p = KPoly::new(coeffs, QuadElem::zero(d));
    let ymult = n as u32 - p.deg() as u32;
    (p, ymult)
}

/// Orbit of intersection points over `L` with intersection multiplicity.
struct ContactOrbit {
    field: Arc<ExtField>,
    coords: [ExtElem; 3],
    i_mult: u32,
}

fn contact_orbits(added: &Added, f1: &HomPoly) -> Result<Vec<ContactOrbit>> {
    let b = compose_forms(f1, &added.phi);
    if b.is_zero() {
        return Err(Error::SharedComponent);
    }
    let (p, ymult) = dehomogenize_binary(&b);
    let mut out = Vec::new();
    let eval_at = |field: &Arc<ExtField>, s: ExtElem, t: ExtElem| -> [ExtElem; 3] {
        let pt = [s, t, field.zero()];
        std::array::from_fn(|c| added.phi[c].eval(&pt))
    };
    if ymult > 0 {
        let zero = QuadElem::zero(b.field_tag());
        let field = ExtField::new(&KPoly::x(&zero));
        let coords = eval_at(&field, field.one(), field.zero());
        out.push(ContactOrbit { field, coords, i_mult: ymult });
    }
    for (g, m) in factor_k(&p) {
        let field = ExtField::new(&g);
        let coords = eval_at(&field, field.generator(), field.one());
        out.push(ContactOrbit { field, coords, i_mult: m });
    }
    Ok(out)
}

fn normalized(p: &[ExtElem; 3]) -> (usize, [ExtElem; 3]) {
    let k = p.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let inv = p[k].inv().expect("nonzero");
    (k, std::array::from_fn(|i| p[i].mul(&inv)))
}

/// Square-free minimal polynomial data of `u = sum w_i p_i` over `K`.
fn orbit_signature(p: &[ExtElem; 3], weights: [i64; 3]) -> (usize, usize, KPoly) {
    let (k, p) = normalized(p);
    let field = p[0].field().clone();
    let u = (0..3).fold(field.zero(), |s, i| s.add(&p[i].int_like(weights[i]).mul(&p[i])));
    let q = field.modulus();
    let d = q.field_tag();
    // Res_t(q(t), X - u(t)) vanishes exactly at the conjugates of u.
    let g = BiPoly::from_terms(d, q.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())));
    let h = BiPoly::from_terms(
        d,
        std::iter::once(((0, 1), QuadElem::one(d))).chain(u.rep().coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), -c))),
    );
    let charpoly = resultant(&g, &h, 0);
    (k, field.degree(), radical(&charpoly).monic())
}

const WEIGHTS: [[i64; 3]; 2] = [[1, 7, 31], [3, -11, 5]];

fn find_record<'a>(records: &'a [OrbitRecord], p: &[ExtElem; 3]) -> Result<&'a OrbitRecord> {
    let sig: Vec<_> = WEIGHTS.iter().map(|w| orbit_signature(p, *w)).collect();
    let hits: Vec<&OrbitRecord> =
        records.iter().filter(|r| WEIGHTS.iter().zip(&sig).all(|(w, s)| orbit_signature(&r.coords, *w) == *s)).collect();
    match hits.as_slice() {
        [r] => Ok(r),
        _ => Err(Error::ProfileIncomplete),
    }
}

fn base_state_at(f1: &HomPoly, records: &[OrbitRecord], added: &Added, p: &[ExtElem; 3], i_mult: u32) -> Result<BaseState> {
    let (a, b, c) = f1.partials();
    let grad = [a.eval(p), b.eval(p), c.eval(p)];
    if grad.iter().any(|g| !g.is_zero()) {
        return Ok(BaseState::SmoothPoint { k: i_mult - 1 });
    }
    let rec = find_record(records, p)?;
    let ade = rec.ade_type;
    let in_cone = if rec.multiplicity == 2 { Some(tangent_in_cone(&[a, b, c], added, p)) } else { None };
    Ok(match (ade, in_cone) {
        (AdeType::A(k), Some(false)) => BaseState::ATransversal { k },
        (AdeType::A(1), Some(true)) => BaseState::A1BranchTangent { k: i_mult.saturating_sub(2) },
        (AdeType::A(2), Some(true)) => BaseState::A2CuspidalTangent,
        _ => BaseState::Other { ade, tangent_in_cone: in_cone },
    })
}

/// Whether the tangent line of `C2` at the double point `p` of `C1` lies in its tangent cone.
fn tangent_in_cone(grad: &[HomPoly; 3], added: &Added, p: &[ExtElem; 3]) -> bool {
    let field = p[0].field().clone();
    let ell = added.tangent(p);
    let w = (0..3)
        .map(|j| {
            let e: [ExtElem; 3] = std::array::from_fn(|i| if i == j { field.one() } else { field.zero() });
            cross(&ell, &e)
        })
        .find(|w| cross(w, p).iter().any(|c| !c.is_zero()))
        .expect("tangent line has a second point");
    // f1(p + s w) = s^2/2 w^T H(p) w + O(s^3).
    let mut acc = field.zero();
    for i in 0..3 {
        for j in 0..3 {
            let h = grad[i].partial(j).eval(p);
            acc = acc.add(&h.mul(&w[i]).mul(&w[j]));
        }
    }
    acc.is_zero()
}

fn records_from(f1: &HomPoly, f2: &HomPoly, records: &[OrbitRecord]) -> Result<Vec<ContactRecord>> {
    let added = Added::new(f2)?;
    let mut out = Vec::new();
    for orbit in contact_orbits(&added, f1)? {
        let base = base_state_at(f1, records, &added, &orbit.coords, orbit.i_mult)?;
        let (predicted, delta_tau, d_tag) = match predict_union_singularity(&base, orbit.i_mult) {
            Ok((t, dt, tag)) => (t, Some(dt), tag),
            Err(Error::NonSimpleUnion) => (AdeType::NotSimple, None, DTag::NotApplicable),
            Err(e) => return Err(e),
        };
        for location in locations(&orbit.field, &orbit.coords) {
            let count = location.size();
            out.push(ContactRecord { location, count, i_mult: orbit.i_mult, base_state: base, predicted, delta_tau, d_tag });
        }
    }
    let total: u32 = out.iter().map(|r| r.i_mult * r.count as u32).sum();
    if total != f1.degree() * f2.degree() {
        return Err(Error::Verification(format!("intersection numbers sum to {total}")));
    }
    Ok(out)
}

/// Intersection points of `C1` and `C2` with contact data and predicted union singularities.
pub fn intersection_profile(f1: &HomPoly, f2: &HomPoly) -> Result<Vec<ContactRecord>> {
    let (f1, f2) = &over_common_field(f1, f2)?;
    Added::new(f2)?;
    let records = locate_or_smooth(f1)?;
    records_from(f1, f2, &records)
}

fn locate_or_smooth(f1: &HomPoly) -> Result<Vec<OrbitRecord>> {
    if f1.degree() <= 1 {
        return Ok(Vec::new());
    }
    locate(f1)
}

/// Type of `C1 u C2` observed directly at each profile record, in profile order.
pub fn observed_union_types(f1: &HomPoly, f2: &HomPoly, profile: &[ContactRecord]) -> Result<Vec<AdeType>> {
    let (f1, f2) = &over_common_field(f1, f2)?;
    let added = Added::new(f2)?;
    let union = f1.mul(f2);
    let records = locate(&union)?;
    let mut out = Vec::new();
    for orbit in contact_orbits(&added, f1)? {
        let rec = find_record(&records, &orbit.coords)?;
        let n = locations(&orbit.field, &orbit.coords).len();
        out.extend(std::iter::repeat_n(rec.ade_type, n));
    }
    if out.len() != profile.len() {
        return Err(Error::Verification("profile and union census disagree".into()));
    }
    Ok(out)
}

/// Which addition statement applies, by parity of `deg C1` and degree of `C2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnionTheorem {
    EvenPlusLine,
    OddPlusLine,
    EvenPlusConic,
    OddPlusConic,
}

/// Maximal global Tjurina number of a degree `n` curve with ADE singularities.
pub fn maximizing_tau(n: u32) -> u32 {
    let m = n / 2;
    if n.is_multiple_of(2) {
        3 * m * m.saturating_sub(1) + 1
    } else {
        3 * m * m + 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UnionCounts {
    pub a1: usize,
    /// `N(A_{2j+1})` keyed by `j`.
    pub a_odd: BTreeMap<u32, usize>,
    /// `N(D_{2j+4}^n)` keyed by `j`.
    pub d_nontransversal: BTreeMap<u32, usize>,
    pub e7: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnionVerdict {
    pub theorem: UnionTheorem,
    pub n_new: u32,
    pub tau_c1: u32,
    pub delta: u32,
    pub lhs: u32,
    pub rhs: u32,
    pub counts: UnionCounts,
    pub maximizing: bool,
    pub equality: bool,
    pub tau_predicted: u32,
    pub tau_target: u32,
    /// Global Tjurina number of the union computed directly, when it was computed.
    pub tau_direct: Option<u32>,
    pub profile: Vec<ContactRecord>,
}

fn counts_of(profile: &[ContactRecord]) -> UnionCounts {
    let mut c = UnionCounts::default();
    for r in profile {
        match (r.predicted, r.d_tag) {
            (AdeType::A(1), _) => c.a1 += r.count,
            (AdeType::A(k), _) if k % 2 == 1 && k >= 5 => *c.a_odd.entry((k - 1) / 2).or_insert(0) += r.count,
            (AdeType::D(k), DTag::NonTransversal) if k >= 6 => *c.d_nontransversal.entry((k - 4) / 2).or_insert(0) += r.count,
            (AdeType::E(7), _) => c.e7 += r.count,
            _ => {}
        }
    }
    c
}

/// Checks the maximizing criterion for `C1 u C2`; `verify` forces a direct
/// computation of `tau(C1 u C2)` even when the union is not maximizing.
pub fn check_union_theorem(f1: &HomPoly, f2: &HomPoly, verify: bool) -> Result<UnionVerdict> {
    let n1 = f1.degree();
    let theorem = match (n1.is_multiple_of(2), f2.degree()) {
        (true, 1) => UnionTheorem::EvenPlusLine,
        (false, 1) => UnionTheorem::OddPlusLine,
        (true, 2) => UnionTheorem::EvenPlusConic,
        (false, 2) => UnionTheorem::OddPlusConic,
        (_, n) => return Err(Error::UnsupportedComponent(n)),
    };
    let (f1, f2) = &over_common_field(f1, f2)?;
    let min_degree = match theorem {
        UnionTheorem::OddPlusLine => 3,
        UnionTheorem::OddPlusConic => 5,
        _ => 4,
    };
    if n1 < min_degree {
        return Err(Error::InvalidArgument(format!("first curve must have degree at least {min_degree}")));
    }
    let records = locate(f1)?;
    let tau_c1 = total_tjurina(f1)?;
    let census = census_from(&records, tau_c1);
    if !census.complete {
        return Err(Error::Unconfirmed);
    }
    let profile = records_from(f1, f2, &records)?;
    if profile.iter().any(|r| r.delta_tau.is_none()) {
        return Err(Error::NonSimpleUnion);
    }
    let max1 = maximizing_tau(n1);
    let delta = max1.checked_sub(tau_c1).ok_or_else(|| Error::InvalidArgument(format!("tau(C1) = {tau_c1} exceeds {max1}")))?;
    let counts = counts_of(&profile);
    let lhs = 2 * delta + counts.a1 as u32;
    let offset = if theorem == UnionTheorem::OddPlusLine { 3 } else { 0 };
    let rhs = offset
        + counts.a_odd.iter().map(|(j, n)| (j - 1) * *n as u32).sum::<u32>()
        + counts.d_nontransversal.iter().map(|(j, n)| j * *n as u32).sum::<u32>()
        + counts.e7 as u32;
    let maximizing = lhs <= rhs;
    let equality = lhs == rhs;
    if maximizing && !equality {
        return Err(Error::Verification(format!("inequality is strict: {lhs} < {rhs}")));
    }
    let n_new = n1 + f2.degree();
    let tau_predicted = tau_c1 + profile.iter().map(|r| r.delta_tau.unwrap() * r.count as u32).sum::<u32>();
    let tau_target = maximizing_tau(n_new);
    if maximizing != (tau_predicted == tau_target) {
        return Err(Error::Verification(format!("predicted tau {tau_predicted} disagrees with the criterion")));
    }
    let tau_direct = if maximizing || verify { Some(total_tjurina(&f1.mul(f2))?) } else { None };
    if let Some(t) = tau_direct {
        if t != tau_predicted {
            return Err(Error::Verification(format!("tau of the union is {t}, predicted {tau_predicted}")));
        }
    }
    Ok(UnionVerdict {
        theorem,
        n_new,
        tau_c1,
        delta,
        lhs,
        rhs,
        counts,
        maximizing,
        equality,
        tau_predicted,
        tau_target,
        tau_direct,
        profile,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SecantCheck {
    pub count: usize,
    pub m: u32,
    pub holds: bool,
    /// When `count == m`: whether `mdr(C1 u L) = m - 1`.
    pub mdr_flag: Option<bool>,
}

/// Number of points of `C1 n L` for a maximizing curve of even degree `2m`, against the bound `m`.
pub fn secant_bound_check(f1: &HomPoly, line: &HomPoly) -> Result<SecantCheck> {
    let n1 = f1.degree();
    if line.degree() != 1 {
        return Err(Error::UnsupportedComponent(line.degree()));
    }
    if !n1.is_multiple_of(2) || n1 < 2 {
        return Err(Error::Unconfirmed);
    }
    let m = n1 / 2;
    let records = locate(f1)?;
    let tau = total_tjurina(f1)?;
    let census = census_from(&records, tau);
    if !census.complete || tau != maximizing_tau(n1) {
        return Err(Error::Unconfirmed);
    }
    let profile = records_from(f1, line, &records)?;
    if profile.iter().any(|r| r.delta_tau.is_none()) {
        return Err(Error::Unconfirmed);
    }
    let count: usize = profile.iter().map(|r| r.count).sum();
    let mdr_flag = if count == m as usize { Some(mdr(&f1.mul(line))? == m - 1) } else { None };
    Ok(SecantCheck { count, m, holds: count >= m as usize, mdr_flag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> HomPoly {
        parse_poly(s, 1).unwrap()
    }

    #[test]
    fn conic_and_line() {
        let prof = intersection_profile(&p("x^2+y^2-z^2"), &p("x")).unwrap();
        assert_eq!(prof.len(), 2);
        assert!(prof.iter().all(|r| r.predicted == AdeType::A(1) && r.i_mult == 1));
        let tangent = intersection_profile(&p("x^2+y^2-z^2"), &p("x-z")).unwrap();
        assert_eq!(tangent.len(), 1);
        assert_eq!((tangent[0].i_mult, tangent[0].predicted), (2, AdeType::A(3)));
    }

    #[test]
    fn conic_parametrization_lies_on_conic() {
        let q = p("x^2+y^2+z^2-2*x*y-2*y*z-2*z*x");
        let added = Added::new(&q).unwrap();
        assert!(compose_forms(&q, &added.phi).is_zero());
    }

    #[test]
    fn prediction_table() {
        assert_eq!(predict_union_singularity(&BaseState::SmoothPoint { k: 0 }, 1).unwrap(), (AdeType::A(1), 1, DTag::NotApplicable));
        assert_eq!(predict_union_singularity(&BaseState::ATransversal { k: 3 }, 2).unwrap(), (AdeType::D(6), 3, DTag::Transversal));
        assert_eq!(predict_union_singularity(&BaseState::A2CuspidalTangent, 3).unwrap(), (AdeType::E(7), 5, DTag::NotApplicable));
        assert_eq!(predict_union_singularity(&BaseState::A1BranchTangent { k: 1 }, 3).unwrap(), (AdeType::D(6), 5, DTag::NonTransversal));
    }

    #[test]
    fn shared_component() {
        assert_eq!(intersection_profile(&p("x*y*z"), &p("y")), Err(Error::SharedComponent));
    }
}
