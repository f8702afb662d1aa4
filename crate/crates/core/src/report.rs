//! Analysis and union reports.
//!
//! JSON output is deterministic: struct fields serialize in declaration
//! order, maps are ordered, integers are JSON numbers and every rational is a
//! string such as `"5/8"`. No floating-point value appears anywhere. Text
//! output appends decimal approximations for reading only.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::sern_lower_bound;
use crate::catalog::render_census;
use crate::curvefile::{field_name, CurveFile};
use crate::error::Result;
use crate::hompoly::HomPoly;
use crate::scalar::rational_with_decimal;
use crate::singular::census::{census, Census};
use crate::syzygy::{classify_with_tau, AdeConfirmed, FreenessReport, Verdict};
use crate::union::{check_union_theorem, UnionCounts, UnionTheorem, UnionVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointReport {
    pub location: String,
    pub count: usize,
    pub multiplicity: u32,
    pub milnor: u32,
    pub tjurina: Option<u32>,
    #[serde(rename = "type")]
    pub ade_type: String,
    pub arnold_c0: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    #[serde(rename = "type")]
    pub ade_type: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub summary: String,
    pub types: Vec<TypeCount>,
    pub points: Vec<PointReport>,
    pub sigma: u32,
    pub tau_sum: u32,
    pub residual_tau: i64,
    pub alpha: Option<String>,
    pub complete: bool,
}

impl From<&Census> for CensusReport {
    fn from(c: &Census) -> Self {
        let types = c.type_counts();
        CensusReport {
            summary: render_census(&types),
            types: types.iter().map(|(t, n)| TypeCount { ade_type: t.to_string(), count: *n }).collect(),
            points: c
                .points
                .iter()
                .map(|p| PointReport {
                    location: p.location.describe(),
                    count: p.count,
                    multiplicity: p.multiplicity,
                    milnor: p.milnor,
                    tjurina: p.tjurina_local,
                    ade_type: p.ade_type.to_string(),
                    arnold_c0: p.arnold_c0.as_ref().map(ToString::to_string),
                })
                .collect(),
            sigma: c.sigma,
            tau_sum: c.tau_sum,
            residual_tau: c.residual_tau,
            alpha: c.alpha.as_ref().map(ToString::to_string),
            complete: c.complete,
        }
    }
}

/// `mdr >= ceil(alpha * n - 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArnoldCheck {
    pub alpha: String,
    pub bound: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedCheck {
    pub matches: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub field: String,
    pub polynomial: String,
    pub degree: u32,
    pub mdr: u32,
    pub exponents: Option<(u32, u32)>,
    pub tau: u32,
    /// du Plessis-Wall bound at `r = mdr`.
    pub tau_max: u32,
    pub verdicts: Vec<String>,
    pub ade_confirmed: AdeConfirmed,
    pub census: CensusReport,
    pub arnold_bound: Option<ArnoldCheck>,
    pub expected: Option<ExpectedCheck>,
}

/// `Free(a,b)` for free curves, the bare name otherwise.
pub fn verdict_label(v: Verdict, exponents: Option<(u32, u32)>) -> String {
    match (v, exponents) {
        (Verdict::Free, Some((a, b))) => format!("Free({a},{b})"),
        _ => v.to_string(),
    }
}

fn build_analyze(
    field_tag: i64,
    poly: &HomPoly,
    report: &FreenessReport,
    census: &Census,
    expected: Option<ExpectedCheck>,
) -> AnalyzeReport {
    let arnold_bound = census.alpha.as_ref().and_then(|a| {
        let bound = sern_lower_bound(a, report.n as i64).ok()?;
        Some(ArnoldCheck { alpha: a.to_string(), bound, holds: report.mdr as i64 >= bound })
    });
    AnalyzeReport {
        field: field_name(field_tag),
        polynomial: poly.to_literal(),
        degree: report.n,
        mdr: report.mdr,
        exponents: report.exponents,
        tau: report.tau,
        tau_max: report.tau_max,
        verdicts: report.verdicts.iter().map(|v| verdict_label(*v, report.exponents)).collect(),
        ade_confirmed: report.ade_confirmed,
        census: census.into(),
        arnold_bound,
        expected,
    }
}

/// Full analysis of a curve file, checked against its expected block if any.
pub fn analyze(file: &CurveFile) -> Result<AnalyzeReport> {
    let (report, c) = analyze_poly(&file.poly)?;
    let expected = file.expected.as_ref().map(|e| {
        let mismatches = e.mismatches(&report, Some(&c));
        ExpectedCheck { matches: mismatches.is_empty(), mismatches }
    });
    Ok(build_analyze(file.field_tag, &file.poly, &report, &c, expected))
}

/// Freeness report and census of `f`, sharing one Tjurina computation.
pub fn analyze_poly(f: &HomPoly) -> Result<(FreenessReport, Census)> {
    let c = census(f)?;
    let report = classify_with_tau(f, c.total_tjurina, AdeConfirmed::from_census(&c))?;
    Ok((report, c))
}

/// Assembles a report from results computed elsewhere.
pub fn analyze_report(field_tag: i64, poly: &HomPoly, report: &FreenessReport, census: &Census) -> AnalyzeReport {
    build_analyze(field_tag, poly, report, census, None)
}

impl AnalyzeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field      {}", self.field);
        let _ = writeln!(s, "curve      {}", self.polynomial);
        let _ = writeln!(s, "degree     {}", self.degree);
        let _ = writeln!(s, "mdr        {}", self.mdr);
        if let Some((a, b)) = self.exponents {
            let _ = writeln!(s, "exponents  ({a}, {b})");
        }
        let _ = writeln!(s, "tau        {} (du Plessis-Wall bound {})", self.tau, self.tau_max);
        let v = if self.verdicts.is_empty() { "none".to_string() } else { self.verdicts.join(", ") };
        let _ = writeln!(s, "verdicts   {v}");
        let _ = writeln!(s, "ADE        {:?}", self.ade_confirmed);
        let c = &self.census;
        let _ = writeln!(s, "census     {} (sigma {}, residual {})", c.summary, c.sigma, c.residual_tau);
        for p in &c.points {
            let n = if p.count > 1 { format!("{} x ", p.count) } else { String::new() };
            let _ = writeln!(s, "  {n}{} mult {} mu {} at {}", p.ade_type, p.multiplicity, p.milnor, p.location);
        }
        if let Some(a) = &self.arnold_bound {
            let alpha: crate::Rational = a.alpha.parse().expect("rendered rational");
            let _ =
                writeln!(s, "alpha      {}; mdr >= {} {}", rational_with_decimal(&alpha), a.bound, if a.holds { "holds" } else { "FAILS" });
        }
        if let Some(e) = &self.expected {
            if e.matches {
                let _ = writeln!(s, "expected   match");
            } else {
                let _ = writeln!(s, "expected   MISMATCH: {}", e.mismatches.join("; "));
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub location: String,
    pub count: usize,
    pub i_mult: u32,
    pub base_state: crate::union::BaseState,
    pub predicted: String,
    pub delta_tau: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionReport {
    pub field: String,
    pub c1: String,
    pub c2: String,
    pub theorem: UnionTheorem,
    pub degree: u32,
    pub tau_c1: u32,
    pub delta: u32,
    pub lhs: u32,
    pub rhs: u32,
    pub counts: UnionCounts,
    pub maximizing: bool,
    pub equality: bool,
    pub tau_predicted: u32,
    pub tau_target: u32,
    pub tau_direct: Option<u32>,
    pub profile: Vec<ProfileRow>,
}

impl UnionReport {
    pub fn new(field_tag: i64, f1: &HomPoly, f2: &HomPoly, v: &UnionVerdict) -> Self {
        UnionReport {
            field: field_name(field_tag),
            c1: f1.to_literal(),
            c2: f2.to_literal(),
            theorem: v.theorem,
            degree: v.n_new,
            tau_c1: v.tau_c1,
            delta: v.delta,
            lhs: v.lhs,
            rhs: v.rhs,
            counts: v.counts.clone(),
            maximizing: v.maximizing,
            equality: v.equality,
            tau_predicted: v.tau_predicted,
            tau_target: v.tau_target,
            tau_direct: v.tau_direct,
            profile: v
                .profile
                .iter()
                .map(|r| ProfileRow {
                    location: r.location.describe(),
                    count: r.count,
                    i_mult: r.i_mult,
                    base_state: r.base_state,
                    predicted: r.tagged_type(),
                    delta_tau: r.delta_tau,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field      {}", self.field);
        let _ = writeln!(s, "C1         {}", self.c1);
        let _ = writeln!(s, "C2         {}", self.c2);
        let _ = writeln!(s, "case       {:?}, union of degree {}", self.theorem, self.degree);
        let _ = writeln!(s, "profile");
        let _ = writeln!(s, "  {:<6} {:<4} {:<8} {:<6} location", "count", "i", "type", "dtau");
        for r in &self.profile {
            let dt = r.delta_tau.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(s, "  {:<6} {:<4} {:<8} {:<6} {}", r.count, r.i_mult, r.predicted, dt, r.location);
        }
        let _ = writeln!(s, "tau(C1)    {} (defect {})", self.tau_c1, self.delta);
        let _ = writeln!(s, "criterion  {} <= {}: {}", self.lhs, self.rhs, self.maximizing);
        let _ = writeln!(s, "tau        predicted {}, maximizing value {}", self.tau_predicted, self.tau_target);
        if let Some(t) = self.tau_direct {
            let _ = writeln!(s, "tau direct {t}");
        }
        let _ = writeln!(s, "verdict    {}", if self.maximizing { "maximizing" } else { "not maximizing" });
        s
    }
}

/// Union verdict for two curves over a common field.
pub fn union_report(a: &CurveFile, b: &CurveFile, verify: bool) -> Result<UnionReport> {
    let d = if a.field_tag == crate::scalar::RATIONAL_FIELD { b.field_tag } else { a.field_tag };
    let f1 = a.poly.with_field(d)?;
    let f2 = b.poly.with_field(d)?;
    let v = check_union_theorem(&f1, &f2, verify)?;
    Ok(UnionReport::new(d, &f1, &f2, &v))
}
