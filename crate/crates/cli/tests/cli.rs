use std::fs;
use std::process::{Command, Output};

use gegenbauer_core::verify::check_interlacing;
use gegenbauer_core::zeros::ZeroSet;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gegenbauer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "--n", "2", "--lambda", "1", "--x", "0.5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");

    let o = run(&["eval", "--n", "3", "--lambda", "1", "--x", "0.5", "--exact"]);
    assert_eq!(stdout(&o).trim(), "-1");

    let o = run(&["eval", "--n", "3", "--lambda=-3/4", "--x", "0.5", "--exact"]);
    assert_eq!(stdout(&o).trim(), "19/128");
}

#[test]
fn eval_warns_on_trivial_parameter() {
    let o = run(&["eval", "--n", "4", "--lambda", "0", "--x", "0.3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    assert!(String::from_utf8_lossy(&o.stderr).contains("trivial"));
}

#[test]
fn zeros_json_round_trips_into_checks() {
    let a = run(&["zeros", "--n", "5", "--lambda=-3/4", "--format", "json"]);
    let b = run(&["zeros", "--n", "6", "--lambda=-3/4", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    let za: ZeroSet = serde_json::from_slice(&a.stdout).unwrap();
    let zb: ZeroSet = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(za.zeros.len(), 5);
    assert!(za.zeros[0] > 1.0);
    assert!(check_interlacing(&za, &zb, true).unwrap().passed);
}

#[test]
fn zeros_of_cubic() {
    let o = run(&["zeros", "--n", "3", "--lambda=-0.75", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,zero"));
    assert_eq!(lines.next(), Some("1,1.09544511501033"));
}

#[test]
fn bounds_table() {
    let o = run(&["bounds", "--n", "3", "--lambda=-3/4", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("label,side,value,verdict,margin,note\n"));
    assert!(text.contains("thm21_upper,UPPER,1.15470053837925,PASS"));
    assert!(text.contains("thm22_lower,LOWER,1.08465228909328,PASS"));
    assert!(text.contains("thm33_upper,UPPER,1.11111111111111,PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "--n", "2", "--lambda", "abc", "--x", "0"]).status.code(), Some(2));
    assert_eq!(run(&["zeros", "--n", "2", "--lambda=-1.2"]).status.code(), Some(3));
    assert_eq!(run(&["zeros", "--n", "3", "--lambda=-2"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sweep_csv_is_deterministic_and_has_script() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    for (name, seq) in [("a.csv", false), ("b.csv", true)] {
        let mut args = vec!["sweep", "--steps", "60", "--format", "csv", "--output"];
        let p = path(name);
        args.push(&p);
        if seq {
            args.push("--sequential");
        }
        assert!(run(&args).status.success());
    }
    let a = fs::read(path("a.csv")).unwrap();
    let b = fs::read(path("b.csv")).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("lambda,x1_n8,x2_n8,x1_n9,x2_n9,one\n"));
    assert_eq!(text.lines().count(), 60);
    assert!(!text.contains('\r'));
    let script = fs::read_to_string(path("a.gp")).unwrap();
    assert!(script.contains("'a.csv' using 1:2"));
}

#[test]
fn verify_quick_passes() {
    let o = run(&["verify", "--quick", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).contains(",FAIL,"));
}

#[test]
fn verify_derivative_rows() {
    let o = run(&["verify", "--only", "derivative", "--n-max", "40", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 39);
    assert!(rows.iter().all(|r| r.contains(",PASS,")));
}

#[test]
fn verify_custom_grid() {
    let o = run(&["verify", "--only", "interlacing", "--lambda-grid", "-1.45:-0.55:10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.conf");
    fs::write(&cfg, "only = erratum\nn_max = 6\n").unwrap();
    let o = run(&["verify", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("erratum"));
}
