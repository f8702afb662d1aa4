use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freecurve")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn construct(name: &str, m: Option<&str>) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(format!("{name}{}.curve", m.unwrap_or("")));
    fs::create_dir_all(p.parent().unwrap()).unwrap();
    let mut args = vec!["construct", name, "-o", p.to_str().unwrap()];
    if let Some(m) = m {
        args.extend(["--m", m]);
    }
    let o = run(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

/// Reports carry exact values only: integers, or rationals as strings.
fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float {n}"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

fn json(o: &Output) -> Value {
    let v: Value = serde_json::from_str(&stdout(o)).expect("valid JSON");
    assert_no_floats(&v);
    v
}

#[test]
fn analyze_catalog_curve() {
    let p = construct("quintic_H3", None);
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("MaximizingOdd") && text.contains("D5+D8"), "{text}");

    let v = json(&run(&["--json", "analyze", p.to_str().unwrap()]));
    assert_eq!(v["tau"], 13);
    assert_eq!(v["verdicts"], serde_json::json!(["Free(1,3)", "MaximizingOdd"]));
    assert_eq!(v["expected"]["matches"], true);
}

#[test]
fn analyze_errors_exit_one() {
    let wrong = write("wrong.curve", "field Q\nx*y*z\nexpected\ntau 4\n");
    assert_eq!(code(&run(&["analyze", wrong.to_str().unwrap()])), 1);

    let bad = write("bad.curve", "field Q\n\nx*y+\n");
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let inhom = write("inhom.curve", "field Q\nx^2 + y\n");
    assert_eq!(code(&run(&["analyze", inhom.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["analyze", "/nonexistent/curve"])), 1);
}

#[test]
fn union_exit_codes() {
    let t6 = construct("T6", None);
    let cusp_line = write("cusp_line.curve", "field Q\nx - y\n");
    let o = run(&["--json", "union", t6.to_str().unwrap(), cusp_line.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["maximizing"], true);
    assert_eq!(v["tau_predicted"], 28);

    let cubic = write("cubic.curve", "field Q\nx^3 + y^3 + z^3\n");
    assert_eq!(code(&run(&["union", t6.to_str().unwrap(), cubic.to_str().unwrap()])), 1);

    // Four concurrent lines: an ordinary quadruple point is not simple.
    let quartic = write("quartic.curve", "field Q\nx^4 - y^4\n");
    let z = write("z.curve", "field Q\nz\n");
    assert_eq!(code(&run(&["union", quartic.to_str().unwrap(), z.to_str().unwrap()])), 2);
}

#[test]
fn construct_and_catalog() {
    let o = run(&["construct", "C_odd", "--m", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# C_odd m = 2\nfield Q\n"));
    assert_eq!(code(&run(&["construct", "no_such_curve"])), 1);
    assert_eq!(code(&run(&["construct", "C_odd", "--m", "1"])), 1);

    let v = json(&run(&["--json", "catalog"]));
    let names: Vec<&str> = v.as_array().unwrap().iter().filter_map(|r| r["name"].as_str()).collect();
    assert!(names.contains(&"tri_conical") && names.contains(&"D_even"));
    assert_eq!(code(&run(&["catalog"])), 0);
}

#[test]
fn bounds_exit_codes() {
    let o = run(&["bounds", "--langer", "2", "12"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("200/11"));
    let v = json(&run(&["--json", "bounds", "--e6", "18"]));
    assert_eq!(v["value"], "6048/167");
    assert_eq!(v["floor"], "36");
    assert_eq!(json(&run(&["--json", "bounds", "--picard", "19", "6"]))["maximizing"], true);
    assert_eq!(code(&run(&["bounds", "--picard", "3", "5"])), 1);
    assert_eq!(code(&run(&["bounds"])), 1);
}

#[test]
fn repro_single_row() {
    let o = run(&["repro", "--only", "tri_conical"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 1);
    assert!(text.contains("1/1 rows pass"));

    let v = json(&run(&["--json", "repro", "--only", "langer(2,12)"]));
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["pass"], true);
    assert_eq!(code(&run(&["repro", "--only", "no_such_row"])), 1);
}

#[test]
fn json_is_repeatable() {
    let p = construct("tri_conical", None);
    let a = stdout(&run(&["--json", "analyze", p.to_str().unwrap()]));
    let b = stdout(&run(&["--json", "analyze", p.to_str().unwrap()]));
    assert_eq!(a, b);
}
