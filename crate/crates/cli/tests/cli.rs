use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use shiftdim::catalog;
use shiftdim::json::{module_to_json, parse_module_str, parse_step, Module};
use shiftdim::{stable_rank_curve, Degree};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftdim")).current_dir(fixtures()).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn golden_staircase() {
    let v = json(&["shiftdim", "intervalmod.json", "--v", "4,4"]);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    let below = json(&["shiftdim", "intervalmod.json", "--v", "4,4", "--order", "below"]);
    assert_eq!(below["dimension"], 2);
}

#[test]
fn m2_curve() {
    let v = json(&["curve", "M2.json", "--v", "2,1"]);
    assert_eq!(v, serde_json::json!({"breakpoints": [0, 1, 2], "values": [2, 1, 0]}));
}

#[test]
fn quiver_beta0_and_oracle() {
    assert_eq!(json(&["beta0", "indecomposable_grid.json"])["beta0"], 5);
    let r = json(&["oracle", "indecomposable_grid.json", "--v", "2,1"]);
    assert_eq!(r["dimension"], 2);
}

#[test]
fn locus_of_the_quiver_pair() {
    let r = json(&["locus", "indecomposable_grid.json", "M2.json", "--v", "2,1", "--cap", "10"]);
    assert_eq!(r["locus"], serde_json::json!([[[3, 2], 2]]));
    assert_eq!(r["err"], 0.5);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["beta0", "no_such_file.json"]), Some(1));
    assert_eq!(code(&["shiftdim", "intervalmod.json", "--v", "4,x"]), Some(1));
    assert_eq!(code(&["shiftdim", "intervalmod.json", "--v", "4,-1"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["oracle", "intervalmod.json", "--v", "4,4", "--cap", "1"]), Some(2));
    assert_eq!(code(&["shiftdim", "ideal_3d.json", "--v", "1,1,1"]), Some(2));
    assert_eq!(code(&["shiftdim", "ideal_3d.json", "--v", "1,1,1", "--order", "subset"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn malformed_module_is_an_input_error() {
    let dir = std::env::temp_dir().join(format!("shiftdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"type":"interval","r":2,"generators":[[1,1]],"relations":[[0,0]]}"#).unwrap();
    assert_eq!(code(&["beta0", bad.to_str().unwrap()]), Some(1));
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(code(&["beta0", bad.to_str().unwrap()]), Some(1));
}

#[test]
fn emitted_json_round_trips() {
    let dir = std::env::temp_dir().join(format!("shiftdim-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("t.json");
    let printed = run(&["truncate", "M2.json", "--alpha", "3,3", "--out", out.to_str().unwrap()]);
    assert_eq!(printed.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let parsed = parse_module_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&module_to_json(&parsed)).unwrap(), text.trim_end());
    let expected = catalog::m2().truncate(&Degree::from_ints(&[3, 3]).unwrap()).unwrap();
    assert_eq!(parsed, Module::Interval(expected.clone()));

    let curve = json(&["curve", out.to_str().unwrap(), "--v", "1,1/2"]);
    let v = Degree::new(vec![1.into(), shiftdim::Rational::new(1, 2)]).unwrap();
    assert_eq!(parse_step(&curve).unwrap(), stable_rank_curve(&expected, &v).unwrap());
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["locus", "rectangle_1.json", "rectangle_2.json", "rectangle_3.json", "rectangle_4.json", "--v", "1,1"]);
    let b = run(&["locus", "rectangle_1.json", "rectangle_2.json", "rectangle_3.json", "rectangle_4.json", "--v", "1,1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_svg_formats() {
    let csv = run(&["--format", "csv", "curve", "M2.json", "--v", "2,1"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "tau,value\n0,2\n1,1\n2,0\n");
    let svg = run(&["--format", "svg", "curve", "M2.json", "--v", "2,1"]);
    let text = String::from_utf8(svg.stdout).unwrap();
    assert!(text.starts_with("<svg") && text.contains("polyline"));
}

#[test]
fn fixtures_match_the_catalog() {
    let load = |name: &str| parse_module_str(&std::fs::read_to_string(fixtures().join(name)).unwrap()).unwrap();
    assert_eq!(load("intervalmod.json"), Module::Interval(catalog::staircase_five()));
    assert_eq!(load("M2.json"), Module::Interval(catalog::m2()));
    assert_eq!(load("ideal_3d.json"), Module::Interval(catalog::ideal_3d()));
    assert_eq!(load("indecomposable_grid.json"), Module::Grid(catalog::indecomposable()));
    for (k, m) in catalog::rectangle_summands().into_iter().enumerate() {
        assert_eq!(load(&format!("rectangle_{}.json", k + 1)), Module::Interval(m));
    }
}

#[test]
fn contour_commands() {
    let r = json(&["contour", "contour_multivariate.json", "--x", "0,0", "--eps", "1.5"]);
    let y: Vec<f64> = r["value"].as_array().unwrap().iter().map(|c| c.as_f64().unwrap()).collect();
    assert!((y[0] - 2.25).abs() < 1e-6 && (y[1] - 2.25).abs() < 1e-6);
    assert_eq!(code(&["contour-check", "contour_distance.json", "--samples", "200"]), Some(0));
    let broken = run(&["contour-check", "contour_rectangle.json", "--samples", "200"]);
    let report: Value = serde_json::from_slice(&broken.stdout).unwrap();
    assert!(report["failures"].as_u64().unwrap() > 0);
}

#[test]
fn selftest_prints_one_line_per_check() {
    let out = run(&["selftest"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 20);
    assert!(lines.iter().all(|l| l.starts_with("pass") || l.starts_with("FAIL")));
    let failing: Vec<&&str> = lines.iter().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(out.status.code(), Some(if failing.is_empty() { 0 } else { 3 }));
}
