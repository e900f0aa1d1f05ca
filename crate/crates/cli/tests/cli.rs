use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualgroth")).args(args).env("DUALGROTH_WORKERS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const WORKED_RPP: &str = r#"{"shape":"4,4,4,3,1/3,1","rows":[[2],[1,1,4],[1,3,3,4],[1,3,4],[2]]}"#;

#[test]
fn compute_examples() {
    let o = run(&["compute", "--shape", "2,1", "--m", "2", "--formula", "oracle"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x1^2 + x1*x2 + x2^2 + x1^2*x2 + x1*x2^2");
    let o = run(&["compute", "--shape", "2,1/2,1", "--m", "3", "--formula", "jt_e"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["compute", "--shape", "1,1", "--m", "2", "--formula", "jt_e", "--refined"]);
    assert_eq!(stdout(&o).trim(), "t1*x1 + t1*x2 + x1*x2");
}

#[test]
fn compute_json_parses_back() {
    let o = run(&["compute", "--shape", "2,1", "--m", "2", "--format", "json"]);
    let text = run(&["compute", "--shape", "2,1", "--m", "2"]);
    let from_json = dualgroth::MultiPoly::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(from_json, stdout(&text).trim().parse().unwrap());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "--shape", "2,3", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--shape", "2,1/1", "--m", "2", "--formula", "bialternant"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--shape", "2,1", "--m", "2", "--formula", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    let o = run(&["verify", "--max-size", "5", "--m", "1,2", "--formulas", "jt_e,oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: PASS"));
    let o = run(&["verify", "--max-size", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("shapes checked: 1"));
    let o = run(&["verify", "--formulas", "bialternant,oracle", "--straight-only", "--max-size", "6", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "--max-size", "4", "--m", "1,2", "--formulas", "jt_e,jt_h_dual,h_phi", "--format", "json"];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_dualgroth")).args(args).env("DUALGROTH_WORKERS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["pass"], true);
    assert!(report["skipped_inapplicable"].as_u64().unwrap() > 0);
}

#[test]
fn lattice_actions() {
    let o = run(&["lattice", "--shape", "2/0", "--m", "1", "--action", "lgv"]);
    assert_eq!(stdout(&o).trim(), "x1^2");
    let o = run(&["lattice", "--shape", "2,2/1", "--m", "2", "--action", "orbits"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("signed sum over paired systems: 0"));
    assert!(out.contains("result: PASS"));
    let good = run(&["lattice", "--shape", "2,2/1", "--m", "2", "--action", "good-sum"]);
    let oracle = run(&["compute", "--shape", "2,2/1", "--m", "2", "--refined"]);
    assert_eq!(stdout(&good), stdout(&oracle));
    let o = run(&["lattice", "--shape", "2,1", "--m", "2", "--action", "bijection"]);
    assert!(stdout(&o).contains("good systems: 5"));
}

#[test]
fn lattice_cap_refuses() {
    let o = run(&["lattice", "--shape", "3,3,3", "--m", "4", "--action", "lgv", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--cap"));
}

#[test]
fn worked_rpp_to_system_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let rpp_path = dir.path().join("rpp.json");
    let svg_path = dir.path().join("system.svg");
    fs::write(&rpp_path, WORKED_RPP).unwrap();
    let o = run(&[
        "lattice",
        "--shape",
        "4,4,4,3,1/3,1",
        "--m",
        "4",
        "--action",
        "bijection",
        "--from-rpp",
        rpp_path.to_str().unwrap(),
        "--render",
        svg_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let sys = dualgroth::lattice::PathSystem::from_json(stdout(&o).trim()).unwrap();
    assert!(sys.is_nonintersecting());
    assert_eq!(sys.weight(), "t2*t3^2*x1^3*x2^2*x3^2*x4^2".parse().unwrap());
    let svg = fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<g id=\"plane-").count(), 6);

    let inline = run(&[
        "lattice",
        "--shape",
        "4,4,4,3,1/3,1",
        "--m",
        "4",
        "--action",
        "bijection",
        "--from-rpp",
        WORKED_RPP,
        "--format",
        "json",
    ]);
    assert_eq!(inline.stdout, o.stdout);
}
