use std::path::PathBuf;
use std::process::Command;

use lamplight::cli::{run, Execution};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn lamplight(args: &[&str]) -> Execution {
    run(std::iter::once("lamplight").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = lamplight(&all);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

#[test]
fn solve_grid_lights_everything() {
    let (code, v) = json(&["solve", &data("grid3x3.graph")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["solvable"], true);
    let presses = v["witnesses"]["presses"].as_str().unwrap();
    assert_eq!(presses.len(), 9);
}

#[test]
fn solve_with_explicit_target() {
    let (code, v) = json(&["solve", &data("loops3.graph"), "--target", "101"]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"]["presses"], "101");
}

#[test]
fn unsolvable_target_exits_2() {
    let out = lamplight(&["solve", &data("dead1.graph"), "--target", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("unsolvable"));
}

#[test]
fn malformed_inputs_exit_1() {
    let out = lamplight(&["solve", &data("loops3.graph"), "--target", "10"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("expected 3"), "{}", out.stderr);

    let dir = std::env::temp_dir().join(format!("lamplight-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "n 2\ne 0 5\n").unwrap();
    let out = lamplight(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    let _ = std::fs::remove_dir_all(&dir);

    assert_eq!(lamplight(&["solve", &data("no-such-file.graph")]).code, 1);
}

#[test]
fn light_all_constructive_reports_stats() {
    let (code, v) = json(&["light-all", "--constructive", &data("k2.graph")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verification"], "OK");
    assert_eq!(v["result"]["direct"], 1);
    assert_eq!(v["witnesses"]["presses"], "01");

    let (code, v) = json(&["light-all", &data("single.graph")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["method"], "linear algebra");
    assert_eq!(v["witnesses"]["presses"], "1");
}

#[test]
fn light_all_names_the_violating_subset() {
    let out = lamplight(&["light-all", "--constructive", &data("missing_loop.graph")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("U = [1]"), "{}", out.stderr);
    let out = lamplight(&["light-all", "--constructive", &data("directed_cycle.graph")]);
    assert!(out.stderr.contains("U = [0, 1, 2]"), "{}", out.stderr);
}

#[test]
fn grid_verdicts() {
    let (code, v) = json(&["grid", "1", "1"]);
    assert_eq!((code, &v["result"]["controllable"], &v["result"]["parity"]), (0, &Value::Bool(true), &Value::from("odd")));
    let (code, v) = json(&["grid", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["tilings"], 7);
    assert_eq!(v["result"]["agree"], true);
    let (code, v) = json(&["grid", "5", "5"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["parity"], "even");
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(lamplight(&["grid", "0", "3"]).code, 1);
    assert_eq!(lamplight(&["grid", "13", "13", "--width-cap", "12"]).code, 1);
}

#[test]
fn equiv_examples() {
    let (_, v) = json(&["equiv", &data("loops3.graph")]);
    assert_eq!(v["result"]["k"], 3);
    assert_eq!(v["result"]["graph"], "n 3\nl 0\nl 1\nl 2\n");

    let (_, v) = json(&["equiv", &data("twins.graph")]);
    assert_eq!(v["result"]["k"], 2);
    assert_eq!(v["result"]["graph"], "n 2\nl 0\nl 1\ne 0 1\n");

    let (_, v) = json(&["equiv", &data("triangular.graph")]);
    assert_eq!(v["result"]["k"], 2);
    assert_eq!(v["result"]["graph"], "n 2\nl 0\nl 1\n");
}

#[test]
fn dark_order_examples() {
    let (code, v) = json(&["dark-order", &data("grid2x2.graph")]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"]["order"], "[0, 3, 1, 2]");

    let (code, v) = json(&["dark-order", &data("triangle_tails.graph")]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["answer"], "no dark-only ordering exists");

    let (code, v) = json(&["dark-order", &data("single.graph")]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"]["order"], "[0]");

    let partial = lamplight(&["dark-order", &data("loops3.graph"), "--presses", "100"]);
    assert_eq!(partial.code, 1);
    assert!(partial.stderr.contains("does not light every lamp"));
}

#[test]
fn mikado_command() {
    let (code, v) = json(&["mikado", "1"]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["presses"].as_u64(), v["result"]["lamps"].as_u64()), (Some(1), Some(5)));

    let dir = std::env::temp_dir().join(format!("lamplight-mikado-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("m4.pbm");
    let (code, v) = json(&["mikado", "4", "--render", out.to_str().unwrap(), "--mode", "lamps"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["lamps"], 5);
    let pbm = std::fs::read_to_string(&out).unwrap();
    assert!(pbm.starts_with("P1\n17 17\n"));
    let body: String = pbm.lines().skip(2).collect();
    assert_eq!(body.matches('1').count(), 5);
    let _ = std::fs::remove_dir_all(&dir);

    assert_eq!(lamplight(&["mikado", "0"]).code, 1);
    assert_eq!(lamplight(&["mikado", "3", "--mode", "dots"]).code, 1);
}

#[test]
fn matchings_max_lit_and_hypercube() {
    let (code, v) = json(&["matchings", &data("grid2x2.graph"), "--list"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 7);
    assert_eq!(v["witnesses"]["matchings"].as_str().unwrap().lines().count(), 7);
    let (code, v) = json(&["matchings", &data("k2.graph")]);
    assert_eq!((code, &v["result"]["count"]), (2, &Value::from(2)));

    let (_, v) = json(&["max-lit", &data("twins.graph")]);
    assert_eq!(v["result"]["k"], 2);

    let (code, v) = json(&["hypercube", "4"]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["lamps"].as_u64(), v["result"]["max_lit"].as_u64()), (Some(15), Some(8)));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["grid", "6", "7"],
        vec!["--json", "hypercube", "5"],
    ] {
        assert_eq!(lamplight(&args), lamplight(&args));
    }
    let g = data("grid3x3.graph");
    assert_eq!(lamplight(&["max-lit", &g]), lamplight(&["max-lit", &g]));
}

#[test]
fn text_report_layout() {
    let out = lamplight(&["grid", "2", "2"]);
    assert_eq!(
        out.stdout,
        "command: grid\ninputs:\n  m             2\n  n             2\nresult:\n  controllable  true\n  parity        odd\n  determinant   odd\n  tilings       7\n  agree         true\n"
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lamplight");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["grid", "2", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("controllable  true"));
    assert_eq!(status(&["grid", "5", "5"]).status.code(), Some(2));
    let bad = status(&["mikado", "0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
