//! Curve files.
//!
//! ```text
//! # comment
//! field Q(sqrt -2)
//! (x^2 + y^2 - z^2) * (2*x^2 + y^2 + s*y*z - 2*z^2)
//! expected
//! tau 19
//! mdr 2
//! exponents 2 3
//! verdicts Free MaximizingEven
//! census 2A1+A3+2A7
//! ```
//!
//! The body may span several lines; `s` denotes `sqrt D`.

use std::collections::BTreeMap;

use crate::catalog::{parse_census, render_census, CurveSpec, Expected};
use crate::error::{Error, Result};
use crate::hompoly::HomPoly;
use crate::parse::parse_poly;
use crate::scalar::{check_field_tag, RATIONAL_FIELD};
use crate::syzygy::Verdict;

#[derive(Clone, Debug, PartialEq)]
pub struct CurveFile {
    pub field_tag: i64,
    pub poly: HomPoly,
    pub expected: Option<Expected>,
}

impl From<&CurveSpec> for CurveFile {
    fn from(s: &CurveSpec) -> Self {
        CurveFile { field_tag: s.field_tag, poly: s.poly.clone(), expected: s.expected.clone() }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos: line, msg: format!("line {line}: {}", msg.into()) }
}

pub fn field_name(d: i64) -> String {
    if d == RATIONAL_FIELD {
        "Q".into()
    } else {
        format!("Q(sqrt {d})")
    }
}

fn parse_header(line: &str, no: usize) -> Result<i64> {
    let rest = line.strip_prefix("field").ok_or_else(|| syntax(no, "expected `field Q` or `field Q(sqrt D)`"))?.trim();
    if rest == "Q" {
        return Ok(RATIONAL_FIELD);
    }
    let inner =
        rest.strip_prefix("Q(sqrt").and_then(|r| r.strip_suffix(')')).ok_or_else(|| syntax(no, format!("unsupported field `{rest}`")))?;
    let d: i64 = inner.trim().parse().map_err(|_| syntax(no, format!("bad field tag `{}`", inner.trim())))?;
    Ok(check_field_tag(d)?)
}

fn parse_verdict(s: &str) -> Option<Verdict> {
    Some(match s {
        "Free" => Verdict::Free,
        "NearlyFree" => Verdict::NearlyFree,
        "MaximizingEven" => Verdict::MaximizingEven,
        "MaximizingOdd" => Verdict::MaximizingOdd,
        "CaseB_Equality" => Verdict::CaseBEquality,
        _ => return None,
    })
}

fn parse_expected(lines: &[(usize, &str)]) -> Result<Expected> {
    let mut e = Expected::default();
    for &(no, line) in lines {
        let (key, val) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let val = val.trim();
        let num = |s: &str| s.parse::<u32>().map_err(|_| syntax(no, format!("bad integer `{s}`")));
        match key {
            "tau" => e.tau = Some(num(val)?),
            "mdr" => e.mdr = Some(num(val)?),
            "exponents" => {
                let v: Vec<&str> = val.split_whitespace().collect();
                if v.len() != 2 {
                    return Err(syntax(no, "exponents need two integers"));
                }
                e.exponents = Some((num(v[0])?, num(v[1])?));
            }
            "verdicts" => {
                let v: Option<Vec<Verdict>> = val.split_whitespace().map(parse_verdict).collect();
                let mut v = v.ok_or_else(|| syntax(no, format!("unknown verdict in `{val}`")))?;
                v.sort();
                e.verdicts = Some(v);
            }
            "census" => {
                e.census = Some(if val == "smooth" {
                    BTreeMap::new()
                } else {
                    parse_census(val).map_err(|_| syntax(no, format!("bad census `{val}`")))?
                })
            }
            _ => return Err(syntax(no, format!("unknown expected key `{key}`"))),
        }
    }
    Ok(e)
}

/// Parses a curve file.
pub fn parse_curve_file(text: &str) -> Result<CurveFile> {
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())).filter(|(_, l)| !l.is_empty()).collect();
    let (&(no, header), rest) = lines.split_first().ok_or_else(|| syntax(1, "empty file"))?;
    let d = parse_header(header, no)?;
    let split = rest.iter().position(|(_, l)| *l == "expected").unwrap_or(rest.len());
    let body: Vec<&str> = rest[..split].iter().map(|(_, l)| *l).collect();
    if body.is_empty() {
        return Err(syntax(no + 1, "missing polynomial"));
    }
    let poly = parse_poly(&body.join(" "), d).map_err(|e| match e {
        Error::Syntax { pos, msg } => syntax(rest[0].0, format!("{msg} (column {pos} of the body)")),
        other => other,
    })?;
    let expected = if split < rest.len() { Some(parse_expected(&rest[split + 1..])?) } else { None };
    Ok(CurveFile { field_tag: d, poly, expected })
}

/// Normalized text; `parse_curve_file(print_curve_file(f)) == f`.
pub fn print_curve_file(f: &CurveFile) -> String {
    let mut out = format!("field {}\n{}\n", field_name(f.field_tag), f.poly.to_literal());
    if let Some(e) = &f.expected {
        out.push_str("expected\n");
        if let Some(t) = e.tau {
            out.push_str(&format!("tau {t}\n"));
        }
        if let Some(r) = e.mdr {
            out.push_str(&format!("mdr {r}\n"));
        }
        if let Some((a, b)) = e.exponents {
            out.push_str(&format!("exponents {a} {b}\n"));
        }
        if let Some(v) = &e.verdicts {
            let v: Vec<String> = v.iter().map(Verdict::to_string).collect();
            out.push_str(format!("verdicts {}", v.join(" ")).trim_end());
            out.push('\n');
        }
        if let Some(c) = &e.census {
            out.push_str(&format!("census {}\n", render_census(c)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_forms() {
        assert_eq!(parse_curve_file("field Q\nx*y*z").unwrap().field_tag, 1);
        assert_eq!(parse_curve_file("field Q(sqrt -2)\nx^2+s*y*z").unwrap().field_tag, -2);
        assert!(matches!(parse_curve_file("field R\nx"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve_file("field Q(sqrt 4)\nx"), Err(Error::Scalar(_))));
    }

    #[test]
    fn round_trip() {
        let text = "# tri-conical\nfield Q\n(x^2+y^2-z^2)*\n (2*x^2+y^2+2*x*z)*(2*x^2+y^2-2*x*z)\nexpected\ntau 19\nexponents 2 3\nverdicts MaximizingEven Free\ncensus 2A1+A3+2A7\n";
        let f = parse_curve_file(text).unwrap();
        let printed = print_curve_file(&f);
        let g = parse_curve_file(&printed).unwrap();
        assert_eq!(f, g);
        assert_eq!(printed, print_curve_file(&g));
    }

    #[test]
    fn error_mentions_line() {
        let Err(Error::Syntax { msg, .. }) = parse_curve_file("field Q\n\nx*y+") else { panic!() };
        assert!(msg.contains("line 3"), "{msg}");
    }
}
