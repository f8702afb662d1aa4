//! Named curves and families with their expected invariants.
//!
//! Auxiliary components of derived constructions (tangent lines, the midpoint
//! conic, the third cuspidal tangent) are stored as exact literals; the tests
//! re-derive them with [`tangent_line`] and recheck every expected record.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hompoly::HomPoly;
use crate::parse::parse_poly;
use crate::scalar::QuadElem;
use crate::singular::census::Census;
use crate::singular::AdeType;
use crate::syzygy::{FreenessReport, Verdict};

/// Invariants a catalog curve must reproduce; `None` fields are not asserted.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Expected {
    pub tau: Option<u32>,
    pub mdr: Option<u32>,
    pub exponents: Option<(u32, u32)>,
    /// Exact verdict set when present.
    pub verdicts: Option<Vec<Verdict>>,
    /// Multiset of singularity types.
    pub census: Option<BTreeMap<AdeType, usize>>,
}

impl Expected {
    /// Differences from a computed report and census, one line per mismatch.
    pub fn mismatches(&self, report: &FreenessReport, census: Option<&Census>) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(t) = self.tau {
            if t != report.tau {
                out.push(format!("tau {} != expected {t}", report.tau));
            }
        }
        if let Some(r) = self.mdr {
            if r != report.mdr {
                out.push(format!("mdr {} != expected {r}", report.mdr));
            }
        }
        if self.exponents.is_some() && self.exponents != report.exponents {
            out.push(format!("exponents {:?} != expected {:?}", report.exponents, self.exponents));
        }
        if let Some(v) = &self.verdicts {
            if *v != report.verdicts {
                out.push(format!("verdicts {:?} != expected {v:?}", report.verdicts));
            }
        }
        if let Some(want) = &self.census {
            match census {
                Some(c) if c.type_counts() == *want => {}
                Some(c) => out.push(format!("census {} != expected {}", render_census(&c.type_counts()), render_census(want))),
                None => out.push("census unavailable".into()),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub name: String,
    pub params: Option<i64>,
    pub field_tag: i64,
    pub poly: HomPoly,
    pub expected: Option<Expected>,
}

/// Parses `"2A1+A3+2A7"` into a multiset.
pub fn parse_census(s: &str) -> Result<BTreeMap<AdeType, usize>> {
    let mut m = BTreeMap::new();
    for part in s.split('+').map(str::trim).filter(|p| !p.is_empty()) {
        let split = part.find(|c: char| !c.is_ascii_digit()).unwrap_or(part.len());
        let count = if split == 0 { 1 } else { part[..split].parse().map_err(|_| Error::InvalidArgument(part.into()))? };
        let t: AdeType = part[split..].parse()?;
        *m.entry(t).or_insert(0) += count;
    }
    Ok(m)
}

pub fn render_census(m: &BTreeMap<AdeType, usize>) -> String {
    if m.is_empty() {
        return "smooth".into();
    }
    m.iter().map(|(t, n)| if *n == 1 { t.to_string() } else { format!("{n}{t}") }).collect::<Vec<_>>().join("+")
}

struct Family {
    name: &'static str,
    /// Smallest admissible parameter, for parametrized families.
    min_m: Option<i64>,
    about: &'static str,
}

const FAMILIES: &[Family] = &[
    Family { name: "tri_conical", min_m: None, about: "three conics with 2A1+A3+2A7" },
    Family { name: "C_prime", min_m: None, about: "tri-conical sextic plus y=0 and z=0" },
    Family { name: "C_double_prime", min_m: None, about: "tri-conical sextic plus a fourth conic over Q(sqrt -2)" },
    Family { name: "steiner_quartic", min_m: None, about: "tricuspidal quartic" },
    Family { name: "T6", min_m: None, about: "Steiner quartic plus two cuspidal tangents" },
    Family { name: "C7", min_m: None, about: "Steiner quartic plus all three cuspidal tangents" },
    Family { name: "T8", min_m: None, about: "C7 plus a bitangent" },
    Family { name: "C7_prime", min_m: None, about: "tri-conical sextic plus y=0" },
    Family { name: "C_even", min_m: Some(2), about: "xy[(x^m+y^m+z^m)^2-4(x^m y^m+y^m z^m+z^m x^m)], degree 2m+2" },
    Family { name: "D_even", min_m: Some(2), about: "(x^m+y^m+z^m)^2-4(x^m y^m+y^m z^m+z^m x^m), degree 2m" },
    Family { name: "C_odd", min_m: Some(2), about: "x[(x^m+y^m+z^m)^2-4(...)], degree 2m+1" },
    Family { name: "quintic_H1", min_m: None, about: "xz(y^3-xz^2)" },
    Family { name: "quintic_H2", min_m: None, about: "z(y^4-x^3z)" },
    Family { name: "quintic_H3", min_m: None, about: "yz(y^3-x^2z)" },
    Family { name: "quintic_H4", min_m: None, about: "xyz(y^2-xz)" },
    Family { name: "A5", min_m: None, about: "five lines xy(x-z)(y-z)(x-y)" },
    Family { name: "A7", min_m: None, about: "seven lines z(x^2-z^2)(y^2-z^2)(x^2-y^2)" },
    Family { name: "A9", min_m: None, about: "nine lines (x^3-z^3)(y^3-z^3)(x^3-y^3)" },
    Family { name: "fermat_cubic", min_m: None, about: "x^3+y^3+z^3" },
    Family { name: "nodal_cubic", min_m: None, about: "xyz+x^3+y^3" },
    Family { name: "cubic_t", min_m: Some(2), about: "x^3+y^3+z^3-3t xyz with t = m" },
    Family { name: "fermat_sextic", min_m: None, about: "Fermat cubic plus its inflection tangents on z=0" },
    Family { name: "fermat_septic", min_m: None, about: "Fermat sextic plus z=0" },
    Family { name: "nodal_sextic", min_m: None, about: "nodal cubic plus its inflection tangents on z=0" },
    Family { name: "nodal_septic", min_m: None, about: "nodal sextic plus z=0" },
    Family { name: "cubic_t_sextic", min_m: Some(2), about: "cubic_t plus its tangents on z=0; not maximizing" },
    Family { name: "triangle_medians", min_m: None, about: "triangle and its three medians" },
    Family { name: "medians_octic", min_m: None, about: "triangle_medians plus the conic tangent to the sides at the midpoints" },
    Family { name: "H2_tangent", min_m: None, about: "quintic H2 plus a simple tangent" },
    Family { name: "H3_tangent", min_m: None, about: "quintic H3 plus a simple tangent" },
    Family { name: "H4_tangent", min_m: None, about: "quintic H4 plus a simple tangent" },
    Family { name: "H1_node_line", min_m: None, about: "quintic H1 plus a line through (0:1:0)" },
    Family { name: "H4_node_line", min_m: None, about: "quintic H4 plus a line through (0:1:0)" },
];

/// Registered names with a one-line description and the parameter range.
pub fn family_names() -> Vec<(&'static str, Option<i64>, &'static str)> {
    FAMILIES.iter().map(|f| (f.name, f.min_m, f.about)).collect()
}

pub const TRI_CONICAL: &str = "(x^2+y^2-z^2)*(2*x^2+y^2+2*x*z)*(2*x^2+y^2-2*x*z)";
pub const FOURTH_CONIC: &str = "2*x^2+y^2-2*z^2+s*y*z";
pub const STEINER: &str = "-1/4*y^2*x^2-z^2*(x^2+y^2-2*x*y)+x^2*y*z+y^2*x*z";
/// Cuspidal tangents of the Steiner quartic; concurrent at (2:2:1).
pub const CUSP_TANGENTS: [&str; 3] = ["y-2*z", "x-2*z", "x-y"];
pub const STEINER_BITANGENT: &str = "x+y+2*z";
pub const MIDPOINT_CONIC: &str = "x^2+y^2+z^2-2*x*y-2*y*z-2*z*x";
pub const TRIANGLE_MEDIANS: &str = "x*y*z*(x-y)*(y-z)*(z-x)";
pub const QUINTICS: [&str; 4] = ["x*z*(y^3-x*z^2)", "z*(y^4-x^3*z)", "y*z*(y^3-x^2*z)", "x*y*z*(y^2-x*z)"];
/// Simple tangents for H2, H3, H4 and lines through (0:1:0) for H1, H4.
pub const QUINTIC_LINES: [(&str, usize, &str); 5] = [
    ("H2_tangent", 1, "-3*x+4*y-z"),
    ("H3_tangent", 2, "-2*x+3*y-z"),
    ("H4_tangent", 3, "-x+2*y-z"),
    ("H1_node_line", 0, "x+z"),
    ("H4_node_line", 3, "x-z"),
];

fn d_even(m: i64) -> String {
    format!("((x^{m}+y^{m}+z^{m})^2-4*(x^{m}*y^{m}+y^{m}*z^{m}+z^{m}*x^{m}))")
}

fn cubic_t(t: i64) -> String {
    format!("x^3+y^3+z^3-{}*x*y*z", 3 * t)
}

/// Product of the tangents to `cubic_t` at its three points on `z = 0`.
fn cubic_t_tangents(t: i64) -> String {
    format!("x^3+y^3+{}*z^3-{}*x*y*z", t * t * t, 3 * t)
}

const NODAL_CUBIC: &str = "x*y*z+x^3+y^3";
const NODAL_TANGENTS: &str = "27*x^3+27*y^3+27*x*y*z-z^3";

fn maximizing_even(n: u32) -> Expected {
    let m = n / 2;
    Expected {
        tau: Some(3 * m * (m - 1) + 1),
        mdr: Some(m - 1),
        exponents: Some((m - 1, m)),
        verdicts: Some(vec![Verdict::Free, Verdict::MaximizingEven]),
        census: None,
    }
}

fn maximizing_odd(n: u32) -> Expected {
    let m = n / 2;
    Expected {
        tau: Some(3 * m * m + 1),
        mdr: Some(m - 1),
        exponents: Some((m - 1, m + 1)),
        verdicts: Some(vec![Verdict::Free, Verdict::MaximizingOdd]),
        census: None,
    }
}

fn case_b(m: u32) -> Expected {
    Expected {
        tau: Some(3 * m * m),
        mdr: Some(m),
        exponents: Some((m, m)),
        verdicts: Some(vec![Verdict::Free, Verdict::CaseBEquality]),
        census: None,
    }
}

fn with_census(mut e: Expected, census: &str) -> Expected {
    e.census = Some(parse_census(census).expect("static census"));
    e
}

fn counts(parts: &[(AdeType, usize)]) -> BTreeMap<AdeType, usize> {
    let mut m = BTreeMap::new();
    for &(t, n) in parts {
        if n > 0 {
            *m.entry(t).or_insert(0) += n;
        }
    }
    m
}

/// Curve `name`, with parameter `m` for the parametrized families.
pub fn get_family(name: &str, m: Option<i64>) -> Result<CurveSpec> {
    let fam = FAMILIES.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFamily(name.into()))?;
    let m = match (fam.min_m, m) {
        (Some(lo), Some(m)) if m >= lo && m <= 40 => Some(m),
        (Some(_), Some(m)) => return Err(Error::ParamOutOfRange { name: name.into(), m }),
        (Some(lo), None) => return Err(Error::ParamOutOfRange { name: name.into(), m: lo - 1 }),
        (None, Some(m)) => return Err(Error::ParamOutOfRange { name: name.into(), m }),
        (None, None) => None,
    };
    let mu = m.unwrap_or(0) as u32;
    let mut d = 1;
    let (text, expected): (String, Option<Expected>) = match name {
        "tri_conical" => (TRI_CONICAL.into(), Some(with_census(maximizing_even(6), "2A1+A3+2A7"))),
        "C_prime" => (format!("y*z*{TRI_CONICAL}"), Some(with_census(maximizing_even(8), "2D10+D6+2D4+3A1"))),
        "C_double_prime" => {
            d = -2;
            (format!("{TRI_CONICAL}*({FOURTH_CONIC})"), Some(with_census(maximizing_even(8), "2D10+2D6+2A1+A3")))
        }
        "steiner_quartic" => (STEINER.into(), Some(Expected { census: Some(parse_census("3A2")?), ..Default::default() })),
        "T6" => (format!("({STEINER})*({})*({})", CUSP_TANGENTS[0], CUSP_TANGENTS[1]), Some(with_census(maximizing_even(6), "3A1+A2+2E7"))),
        "C7" => (
            format!("({STEINER})*({})*({})*({})", CUSP_TANGENTS[0], CUSP_TANGENTS[1], CUSP_TANGENTS[2]),
            Some(with_census(maximizing_odd(7), "3A1+D4+3E7")),
        ),
        "T8" => (
            format!("({STEINER})*({})*({})*({})*({STEINER_BITANGENT})", CUSP_TANGENTS[0], CUSP_TANGENTS[1], CUSP_TANGENTS[2]),
            Some(with_census(maximizing_even(8), "6A1+2A3+D4+3E7")),
        ),
        "C7_prime" => (format!("y*{TRI_CONICAL}"), Some(with_census(maximizing_odd(7), "2A1+D6+2D10"))),
        "C_even" => {
            let mut e = maximizing_even(2 * mu + 2);
            e.census = Some(counts(&[(AdeType::D(mu + 2), 2 * mu as usize), (AdeType::A(mu - 1), mu as usize), (AdeType::A(1), 1)]));
            (format!("x*y*{}", d_even(m.unwrap())), Some(e))
        }
        "D_even" => {
            let e = Expected {
                tau: Some(3 * mu * (mu - 1)),
                mdr: Some(mu),
                exponents: None,
                verdicts: Some(vec![Verdict::NearlyFree]),
                census: Some(counts(&[(AdeType::A(mu - 1), 3 * mu as usize)])),
            };
            (d_even(m.unwrap()), Some(e))
        }
        "C_odd" => {
            let mut e = case_b(mu);
            e.census = Some(counts(&[(AdeType::D(mu + 2), mu as usize), (AdeType::A(mu - 1), 2 * mu as usize)]));
            (format!("x*{}", d_even(m.unwrap())), Some(e))
        }
        "quintic_H1" | "quintic_H2" | "quintic_H3" | "quintic_H4" => {
            let i = name.as_bytes()[name.len() - 1] - b'1';
            let census = ["E7+A5+A1", "E6+A7", "D8+D5", "2D6+A1"][i as usize];
            (QUINTICS[i as usize].into(), Some(with_census(maximizing_odd(5), census)))
        }
        "A5" => ("x*y*(x-z)*(y-z)*(x-y)".into(), Some(with_census(case_b(2), "4A1+2D4"))),
        "A7" => ("z*(x^2-z^2)*(y^2-z^2)*(x^2-y^2)".into(), Some(with_census(case_b(3), "3A1+6D4"))),
        "A9" => ("(x^3-z^3)*(y^3-z^3)*(x^3-y^3)".into(), Some(with_census(case_b(4), "12D4"))),
        "fermat_cubic" => (cubic_t(0), Some(Expected { census: Some(BTreeMap::new()), ..Default::default() })),
        "nodal_cubic" => (NODAL_CUBIC.into(), Some(Expected { census: Some(parse_census("A1")?), ..Default::default() })),
        "cubic_t" => (cubic_t(m.unwrap()), Some(Expected { census: Some(BTreeMap::new()), ..Default::default() })),
        "fermat_sextic" => (format!("({})*({})", cubic_t(0), cubic_t_tangents(0)), Some(with_census(maximizing_even(6), "3A5+D4"))),
        "fermat_septic" => (format!("z*({})*({})", cubic_t(0), cubic_t_tangents(0)), Some(maximizing_odd(7))),
        "nodal_sextic" => (format!("({NODAL_CUBIC})*({NODAL_TANGENTS})"), Some(with_census(maximizing_even(6), "3A5+4A1"))),
        "nodal_septic" => (format!("z*({NODAL_CUBIC})*({NODAL_TANGENTS})"), Some(maximizing_odd(7))),
        "cubic_t_sextic" => {
            let t = m.unwrap();
            let e = Expected { tau: Some(18), census: Some(parse_census("3A5+3A1")?), ..Default::default() };
            (format!("({})*({})", cubic_t(t), cubic_t_tangents(t)), Some(e))
        }
        "triangle_medians" => (TRIANGLE_MEDIANS.into(), Some(with_census(maximizing_even(6), "3A1+4D4"))),
        "medians_octic" => (format!("{TRIANGLE_MEDIANS}*({MIDPOINT_CONIC})"), Some(with_census(maximizing_even(8), "3D6+4D4+3A1"))),
        _ => {
            let &(_, base, line) = QUINTIC_LINES.iter().find(|(n, _, _)| *n == name).expect("registered name");
            (format!("({})*({line})", QUINTICS[base]), Some(maximizing_even(6)))
        }
    };
    let poly = parse_poly(&text, d)?;
    Ok(CurveSpec { name: name.into(), params: m, field_tag: d, poly, expected })
}

/// Catalog entries whose auxiliary components were derived rather than printed.
pub fn derived_constructions() -> Vec<CurveSpec> {
    let mut names: Vec<(&str, Option<i64>)> =
        vec![("C7", None), ("T8", None), ("fermat_sextic", None), ("fermat_septic", None), ("nodal_sextic", None)];
    names.extend([("nodal_septic", None), ("cubic_t_sextic", Some(2)), ("medians_octic", None)]);
    names.extend(QUINTIC_LINES.iter().map(|(n, _, _)| (*n, None)));
    names.into_iter().map(|(n, m)| get_family(n, m).expect("registered")).collect()
}

/// A union `base u added` with its expected outcome.
#[derive(Clone, Debug)]
pub struct UnionSpec {
    pub name: String,
    pub base: CurveSpec,
    pub added: HomPoly,
    pub maximizing: bool,
    /// Tagged types along the added component, e.g. `D6^n`.
    pub profile: BTreeMap<String, usize>,
    pub delta: u32,
}

fn union_spec(name: &str, base: CurveSpec, added: &str, maximizing: bool, delta: u32, profile: &[(&str, usize)]) -> UnionSpec {
    let added = parse_poly(added, base.field_tag).expect("static line or conic");
    let profile = profile.iter().map(|(t, n)| (t.to_string(), *n)).collect();
    UnionSpec { name: name.into(), base, added, maximizing, profile, delta }
}

/// Unions with a line or conic, each with the profile along the added component.
pub fn union_examples() -> Vec<UnionSpec> {
    let g = |n: &str, m: Option<i64>| get_family(n, m).expect("registered");
    let mut v = vec![
        union_spec("T6+L", g("T6", None), CUSP_TANGENTS[2], true, 0, &[("A1", 1), ("D4^t", 1), ("E7", 1)]),
        union_spec("tri_conical+y", g("tri_conical", None), "y", true, 0, &[("D6^t", 1), ("D10^t", 2)]),
        union_spec("fermat_sextic+z", g("fermat_sextic", None), "z", true, 0, &[("D8^t", 3)]),
        union_spec("nodal_sextic+z", g("nodal_sextic", None), "z", true, 0, &[("D8^t", 3)]),
        union_spec("medians+conic", g("triangle_medians", None), MIDPOINT_CONIC, true, 0, &[("D6^n", 3), ("A1", 3)]),
        union_spec("C7+bitangent", g("C7", None), STEINER_BITANGENT, true, 0, &[("A1", 3), ("A3", 2)]),
        union_spec("tri_conical+C4", g("tri_conical", None).over_field(-2), FOURTH_CONIC, true, 0, &[("D10^t", 2), ("D6^n", 2), ("A1", 2)]),
        union_spec("C_even(3)+z", g("C_even", Some(3)), "z", false, 0, &[("A1", 2), ("D5^t", 3)]),
        union_spec("cubic_t_sextic(2)+z", g("cubic_t_sextic", Some(2)), "z", false, 1, &[("D8^t", 3)]),
    ];
    for m in 2..=5u32 {
        let tag = format!("D{}^t", m + 2);
        let prof = [("A1", 1), (tag.as_str(), m as usize)];
        v.push(union_spec(&format!("C_odd({m})+y"), g("C_odd", Some(m as i64)), "y", true, 1, &prof));
    }
    for (name, base, line) in QUINTIC_LINES {
        let prof: &[(&str, usize)] = if name.ends_with("tangent") { &[("A3", 1), ("A1", 3)] } else { &[("D4^t", 1), ("A1", 3)] };
        let base = get_family(&format!("quintic_H{}", base + 1), None).expect("registered");
        v.push(union_spec(name, base, line, true, 0, prof));
    }
    v
}

impl CurveSpec {
    /// The same curve regarded over `Q(sqrt d)`.
    pub fn over_field(mut self, d: i64) -> Self {
        self.poly = self.poly.with_field(d).expect("rational polynomial");
        self.field_tag = d;
        self
    }
}

/// Tangent line `f_x(p) x + f_y(p) y + f_z(p) z` at a smooth point `p`.
pub fn tangent_line(f: &HomPoly, p: &[QuadElem; 3]) -> Result<HomPoly> {
    if !f.eval(p).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let (a, b, c) = f.partials();
    let g = [a.eval(p), b.eval(p), c.eval(p)];
    if g.iter().all(QuadElem::is_zero) {
        return Err(Error::Verification("point is singular".into()));
    }
    let d = g.iter().map(QuadElem::d).find(|&d| d != 1).unwrap_or(f.field_tag());
    HomPoly::from_terms(d, (0..3).map(|i| (std::array::from_fn(|j| (i == j) as u32), g[i].clone())))
}

/// Full analysis of a catalog curve and the list of disagreements with its expected record.
pub fn check_spec(spec: &CurveSpec) -> Result<(FreenessReport, Census, Vec<String>)> {
    let census = crate::singular::census::census(&spec.poly)?;
    let ade = crate::syzygy::AdeConfirmed::from_census(&census);
    let report = crate::syzygy::classify_with_tau(&spec.poly, census.total_tjurina, ade)?;
    let bad = spec.expected.as_ref().map(|e| e.mismatches(&report, Some(&census))).unwrap_or_default();
    Ok((report, census, bad))
}

/// Union verdict for a catalog union and its disagreements with the expected outcome.
pub fn check_union(spec: &UnionSpec) -> Result<(crate::union::UnionVerdict, Vec<String>)> {
    let v = crate::union::check_union_theorem(&spec.base.poly, &spec.added, true)?;
    let mut bad = Vec::new();
    if v.maximizing != spec.maximizing {
        bad.push(format!("maximizing {} != expected {}", v.maximizing, spec.maximizing));
    }
    if v.delta != spec.delta {
        bad.push(format!("delta {} != expected {}", v.delta, spec.delta));
    }
    let mut prof = BTreeMap::new();
    for r in &v.profile {
        *prof.entry(r.tagged_type()).or_insert(0) += r.count;
    }
    if prof != spec.profile {
        bad.push(format!("profile {prof:?} != expected {:?}", spec.profile));
    }
    Ok((v, bad))
}
