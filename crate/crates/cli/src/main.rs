use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use freecurve::bounds::{e6_bound, langer_a_bound, picard_bracket, BoundReport};
use freecurve::catalog::{family_names, get_family, render_census};
use freecurve::curvefile::{field_name, parse_curve_file, print_curve_file, CurveFile};
use freecurve::report::{analyze, union_report, verdict_label};
use freecurve::repro::{run_rows, select};
use freecurve::scalar::rational_with_decimal;
use freecurve::syzygy::AdeConfirmed;
use freecurve::Error;
use serde_json::json;

/// Freeness invariants and maximizing-curve checks for plane curves.
#[derive(Parser)]
#[command(name = "freecurve", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute mdr, exponents, tau, the singularity census and all verdicts.
    Analyze { path: PathBuf },
    /// Check the union of a curve with a line or conic.
    Union {
        path1: PathBuf,
        path2: PathBuf,
        /// Also compute tau of the union directly when it is not maximizing.
        #[arg(long)]
        verify: bool,
    },
    /// Write a catalog curve as a curve file.
    Construct {
        name: String,
        #[arg(long)]
        m: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List catalog curves with their expected invariants.
    Catalog,
    /// Evaluate a closed-form bound.
    Bounds(BoundArgs),
    /// Re-run the reproduction manifest.
    Repro {
        /// Run only the row with this id.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BoundArgs {
    /// Number of A_{2k+1} points on a degree n curve.
    #[arg(long, num_args = 2, value_names = ["K", "N"])]
    langer: Option<Vec<i64>>,
    /// Number of E6 points on a degree d curve.
    #[arg(long, value_name = "D")]
    e6: Option<i64>,
    /// Picard number bracket of the double cover.
    #[arg(long, num_args = 2, value_names = ["SIGMA", "N"])]
    picard: Option<Vec<i64>>,
}

fn read_curve(path: &Path) -> anyhow::Result<CurveFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_curve_file(&text).with_context(|| format!("{}", path.display()))
}

fn print_bound(r: &BoundReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("serializable"));
        return;
    }
    let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    println!("{} ({}): {}, floor {}", r.formula_id, inputs.join(", "), rational_with_decimal(&r.value), r.floor);
    if let Some(c) = &r.attained_by {
        println!("attained by {c}");
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Analyze { path } => {
            let file = read_curve(&path)?;
            let r = analyze(&file)?;
            if json {
                println!("{}", r.to_json())
            } else {
                print!("{}", r.to_text())
            }
            if r.expected.as_ref().is_some_and(|e| !e.matches) {
                bail!("invariants disagree with the expected block");
            }
            if r.ade_confirmed == AdeConfirmed::Unconfirmed {
                return Ok(ExitCode::from(2));
            }
        }
        Cmd::Union { path1, path2, verify } => {
            let (a, b) = (read_curve(&path1)?, read_curve(&path2)?);
            let r = union_report(&a, &b, verify)?;
            if json {
                println!("{}", r.to_json())
            } else {
                print!("{}", r.to_text())
            }
        }
        Cmd::Construct { name, m, output } => {
            let spec = get_family(&name, m)?;
            let mut text = format!("# {}{}\n", spec.name, spec.params.map_or(String::new(), |m| format!(" m = {m}")));
            text.push_str(&print_curve_file(&CurveFile::from(&spec)));
            match &output {
                Some(p) => fs::write(p, &text).with_context(|| format!("cannot write {}", p.display()))?,
                None if !json => print!("{text}"),
                None => {}
            }
            if json {
                let v = json!({
                    "name": spec.name,
                    "m": spec.params,
                    "field": field_name(spec.field_tag),
                    "polynomial": spec.poly.to_literal(),
                    "degree": spec.poly.degree(),
                    "file": text,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            }
        }
        Cmd::Catalog => {
            let mut rows = Vec::new();
            for (name, min_m, about) in family_names() {
                let spec = get_family(name, min_m)?;
                let e = spec.expected.clone().unwrap_or_default();
                let verdicts: Option<Vec<String>> = e.verdicts.as_ref().map(|v| v.iter().map(|x| verdict_label(*x, e.exponents)).collect());
                rows.push(json!({
                    "name": name,
                    "min_m": min_m,
                    "about": about,
                    "field": field_name(spec.field_tag),
                    "degree": spec.poly.degree(),
                    "tau": e.tau,
                    "mdr": e.mdr,
                    "verdicts": verdicts,
                    "census": e.census.as_ref().map(render_census),
                }));
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                for r in &rows {
                    let m = r["min_m"].as_i64().map_or(String::new(), |m| format!(" (m >= {m}, shown at m = {m})"));
                    println!("{}{m}: {}", r["name"].as_str().unwrap_or(""), r["about"].as_str().unwrap_or(""));
                    let mut parts = vec![format!("degree {}", r["degree"])];
                    if let Some(t) = r["tau"].as_u64() {
                        parts.push(format!("tau {t}"));
                    }
                    if let Some(v) = r["verdicts"].as_array() {
                        let v: Vec<&str> = v.iter().filter_map(|x| x.as_str()).collect();
                        parts.push(format!("[{}]", v.join(", ")));
                    }
                    if let Some(c) = r["census"].as_str() {
                        parts.push(format!("census {c}"));
                    }
                    println!("    {}", parts.join(", "));
                }
            }
        }
        Cmd::Bounds(b) => {
            if let Some(v) = b.langer {
                print_bound(&langer_a_bound(v[0], v[1])?, json);
            } else if let Some(d) = b.e6 {
                print_bound(&e6_bound(d)?, json);
            } else if let Some(v) = b.picard {
                let p = picard_bracket(v[0], v[1])?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&p)?);
                } else {
                    println!("{} <= rho <= {}{}", p.lower, p.upper, if p.maximizing { " (maximizing)" } else { "" });
                }
            }
        }
        Cmd::Repro { only } => {
            let rows = select(only.as_deref());
            if rows.is_empty() {
                bail!("no manifest row with id `{}`", only.unwrap_or_default());
            }
            let outcomes = run_rows(&rows, |o, secs| {
                if !json {
                    let tag = if o.pass { "PASS" } else { "FAIL" };
                    println!("{tag} {:<22} {}  ({secs:.1} s)", o.id, o.summary);
                    for f in &o.failures {
                        println!("     {f}");
                    }
                }
            });
            let passed = outcomes.iter().filter(|o| o.pass).count();
            if json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            } else {
                println!("{passed}/{} rows pass", outcomes.len());
            }
            if passed != outcomes.len() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // Usage errors exit with 1; 2 is reserved for unconfirmed results.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if matches!(e.downcast_ref::<Error>(), Some(Error::Unconfirmed)) {
                eprintln!("unconfirmed: {e:#}");
                return ExitCode::from(2);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
