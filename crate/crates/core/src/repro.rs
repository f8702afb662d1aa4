//! Reproduction manifest: every tabulated invariant, census, union verdict and
//! bound, with a pass/fail outcome per row.

use std::time::Instant;

use serde::Serialize;

use crate::bounds::{e6_bound, langer_a_bound, sern_lower_bound, BoundReport};
use crate::catalog::{check_spec, check_union, get_family, union_examples, CurveSpec, UnionSpec};
use crate::error::Result;
use crate::scalar::{int, Rational};
use crate::singular::census::{Census, PointLocation};
use crate::singular::AdeType;
use crate::syzygy::{FreenessReport, Verdict};
use crate::union::observed_union_types;

#[derive(Clone, Debug)]
pub enum Check {
    /// Expected record plus the catalog-wide invariants.
    Curve(CurveSpec),
    /// Union verdict, profile, Bezout and prediction against observation.
    Union(UnionSpec),
    /// Exact value of a bound, and optionally a catalog curve whose count attains its floor.
    Bound { report: fn() -> Result<BoundReport>, value: (i64, i64), attained: Option<(&'static str, i64, AdeType)> },
}

#[derive(Clone, Debug)]
pub struct Row {
    pub id: String,
    /// Acceptance criteria the row contributes to.
    pub criteria: Vec<u8>,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: String,
    pub criteria: Vec<u8>,
    pub pass: bool,
    pub summary: String,
    pub failures: Vec<String>,
}

fn curve_row(id: &str, name: &str, m: Option<i64>, criteria: &[u8]) -> Row {
    let spec = get_family(name, m).expect("registered family");
    Row { id: id.into(), criteria: criteria.to_vec(), check: Check::Curve(spec) }
}

/// All rows, in a fixed order.
pub fn manifest() -> Vec<Row> {
    let mut rows = vec![
        curve_row("tri_conical", "tri_conical", None, &[1, 2]),
        curve_row("C_prime", "C_prime", None, &[1, 2]),
        curve_row("C_double_prime", "C_double_prime", None, &[1, 2]),
        curve_row("T6", "T6", None, &[1, 2]),
        curve_row("T8", "T8", None, &[1, 2]),
    ];
    for (fam, lo, hi) in [("C_even", 2, 6), ("D_even", 2, 6), ("C_odd", 2, 6)] {
        rows.extend((lo..=hi).map(|m| curve_row(&format!("{fam}({m})"), fam, Some(m), &[1])));
    }
    for i in 1..=4 {
        let name = format!("quintic_H{i}");
        rows.push(curve_row(&name, &name, None, &[1]));
    }
    for name in ["A5", "A7", "A9"] {
        rows.push(curve_row(name, name, None, &[1]));
    }
    rows.push(curve_row("fermat_sextic", "fermat_sextic", None, &[2]));
    rows.push(curve_row("fermat_septic", "fermat_septic", None, &[3]));
    rows.push(curve_row("cubic_t_sextic(2)", "cubic_t_sextic", Some(2), &[3]));
    rows.extend(union_examples().into_iter().map(|u| Row { id: u.name.clone(), criteria: vec![3], check: Check::Union(u) }));
    rows.push(Row {
        id: "langer(2,12)".into(),
        criteria: vec![4],
        check: Check::Bound { report: || langer_a_bound(2, 12), value: (200, 11), attained: Some(("D_even", 6, AdeType::A(5))) },
    });
    rows.push(Row {
        id: "langer(3,16)".into(),
        criteria: vec![4],
        check: Check::Bound { report: || langer_a_bound(3, 16), value: (1400, 57), attained: Some(("D_even", 8, AdeType::A(7))) },
    });
    rows.push(Row {
        id: "e6(18)".into(),
        criteria: vec![4],
        check: Check::Bound { report: || e6_bound(18), value: (6048, 167), attained: None },
    });
    rows
}

/// Invariants every catalog curve must satisfy, independent of its expected record.
pub fn invariant_failures(report: &FreenessReport, census: &Census) -> Vec<String> {
    let mut bad = Vec::new();
    if report.tau > report.tau_max {
        bad.push(format!("tau {} exceeds the du Plessis-Wall bound {}", report.tau, report.tau_max));
    }
    if census.complete {
        if census.sigma != report.tau {
            bad.push(format!("sigma {} != tau {}", census.sigma, report.tau));
        }
        if let Some(a) = &census.alpha {
            match sern_lower_bound(a, report.n as i64) {
                Ok(b) if (report.mdr as i64) < b => bad.push(format!("mdr {} below the Arnold bound {b}", report.mdr)),
                Ok(_) => {}
                Err(e) => bad.push(format!("Arnold bound: {e}")),
            }
        }
    } else {
        bad.push("census incomplete".into());
    }
    bad
}

fn is_point(loc: &PointLocation, want: [i64; 3]) -> bool {
    let PointLocation::Explicit(p) = loc else { return false };
    let w = want.map(|c| crate::QuadElem::from_int(c, p[0].d()));
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        (&p[j] * &w[k] - &p[k] * &w[j]).is_zero()
    })
}

fn run_curve(id: &str, spec: &CurveSpec) -> Result<(String, Vec<String>)> {
    let (report, census, mut bad) = check_spec(spec)?;
    bad.extend(invariant_failures(&report, &census));
    let labels: Vec<String> = report.verdicts.iter().map(|v| crate::report::verdict_label(*v, report.exponents)).collect();
    match id {
        "tri_conical" => {
            for x in [1, -1] {
                if !census.points.iter().any(|p| p.ade_type == AdeType::A(7) && is_point(&p.location, [x, 0, 1])) {
                    bad.push(format!("no A7 point at ({x}:0:1)"));
                }
            }
        }
        "cubic_t_sextic(2)" if (report.has(Verdict::MaximizingEven) || report.tau == crate::union::maximizing_tau(6)) => {
            bad.push("negative control is maximizing".into());
        }
        _ => {}
    }
    if let Some(m) = id.strip_prefix("A").and_then(|s| s.parse::<u32>().ok()) {
        if report.mdr != m / 2 {
            bad.push(format!("r = {} but m = {}", report.mdr, m / 2));
        }
    }
    let summary = format!(
        "tau {} mdr {} [{}] census {}",
        report.tau,
        report.mdr,
        labels.join(", "),
        crate::catalog::render_census(&census.type_counts())
    );
    Ok((summary, bad))
}

fn run_union(spec: &UnionSpec) -> Result<(String, Vec<String>)> {
    let (v, mut bad) = check_union(spec)?;
    let n1 = spec.base.poly.degree() as usize;
    let n2 = spec.added.degree() as usize;
    let bezout: usize = v.profile.iter().map(|r| r.count * r.i_mult as usize).sum();
    if bezout != n1 * n2 {
        bad.push(format!("intersection multiplicities sum to {bezout}, not {}", n1 * n2));
    }
    let observed = observed_union_types(&spec.base.poly, &spec.added, &v.profile)?;
    let predicted: Vec<AdeType> = v.profile.iter().map(|r| r.predicted).collect();
    if observed != predicted {
        bad.push(format!("observed {observed:?} != predicted {predicted:?}"));
    }
    match v.tau_direct {
        Some(t) if t == v.tau_predicted => {}
        other => bad.push(format!("direct tau {other:?} != predicted {}", v.tau_predicted)),
    }
    let summary = format!(
        "{} {} <= {}: {} tau {}",
        if v.maximizing { "maximizing" } else { "not maximizing" },
        v.lhs,
        v.rhs,
        v.maximizing,
        v.tau_predicted
    );
    Ok((summary, bad))
}

fn run_bound(
    report: fn() -> Result<BoundReport>,
    value: (i64, i64),
    attained: Option<(&str, i64, AdeType)>,
) -> Result<(String, Vec<String>)> {
    let r = report()?;
    let mut bad = Vec::new();
    let want: Rational = int(value.0) / int(value.1);
    if r.value != want {
        bad.push(format!("value {} != {want}", r.value));
    }
    let mut summary = format!("{} floor {}", r.value, r.floor);
    if let Some((name, m, t)) = attained {
        let spec = get_family(name, Some(m))?;
        let census = crate::singular::census::census(&spec.poly)?;
        let n = census.count_of(t);
        if num_bigint::BigInt::from(n) != r.floor {
            bad.push(format!("{name}({m}) has {n} {t}, floor is {}", r.floor));
        }
        summary.push_str(&format!(", {name}({m}) has {n} {t}"));
    }
    Ok((summary, bad))
}

/// Runs one row; errors become failures.
pub fn run_row(row: &Row) -> Outcome {
    let res = match &row.check {
        Check::Curve(spec) => run_curve(&row.id, spec),
        Check::Union(spec) => run_union(spec),
        Check::Bound { report, value, attained } => run_bound(*report, *value, *attained),
    };
    let (summary, failures) = res.unwrap_or_else(|e| ("error".into(), vec![e.to_string()]));
    Outcome { id: row.id.clone(), criteria: row.criteria.clone(), pass: failures.is_empty(), summary, failures }
}

/// Rows whose id equals `only`, or all rows.
pub fn select(only: Option<&str>) -> Vec<Row> {
    manifest().into_iter().filter(|r| only.is_none_or(|o| r.id == o)).collect()
}

/// Runs rows in order; `on_done` sees each outcome with its wall time.
pub fn run_rows(rows: &[Row], mut on_done: impl FnMut(&Outcome, f64)) -> Vec<Outcome> {
    rows.iter()
        .map(|r| {
            let start = Instant::now();
            let o = run_row(r);
            on_done(&o, start.elapsed().as_secs_f64());
            o
        })
        .collect()
}
