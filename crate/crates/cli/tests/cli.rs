//! Runs the built binary and checks output and exit codes.

use std::process::{Command, Output};

use hyperaccel::accelerator::{parse_series, stream_proportional};
use hyperaccel::catalog::find_entry;
use hyperaccel_cli::catalog_file::parse_catalog;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperaccel"));
    cmd.args(args).env_remove(hyperaccel_cli::MAX_TERMS_VAR);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_prints_pass_line() {
    let o = run(&["check", "--id", "RT1", "--digits", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS RT1"), "{out}");
    assert!(out.contains("lhs=2.267249205292772313242597822052694665355082810115"));
    assert!(out.contains("rhs=2.267249205292772313242597822052694665355082810115"));
}

#[test]
fn verify_symbolic_reports_zero_residual() {
    let o = run(&["verify-symbolic", "--family", "quarter"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "quarter: r = 1, residual = 0\n");
    let o = run(&["verify-symbolic", "--family", "four-27"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pole_tuple_exits_with_diagnostic() {
    let o = run(&["derive", "--family", "quarter", "--params", "1,1,1,1,1,-1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("pole"), "{}", stderr(&o));
    let o = run(&["derive", "--family", "quarter", "--params", "1,1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("takes 6 parameters"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check", "--id", "RT1", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "--family", "quarter", "--params", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["accelerate", "--family", "quarter", "--params", "1", "--r", "3"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--digits", "20"]).status.code(), Some(2));
    assert_eq!(run(&["check-all", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn derive_prints_recurrence() {
    let o = run(&["derive", "--family", "quarter", "--params", "1/3,1/3,1,1/3,1/3,2/3", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for prefix in ["r = 1", "p1 = [", "p2 = [", "cert = ", "rate = 1/4"] {
        assert!(out.lines().any(|l| l.starts_with(prefix)), "{prefix} missing in {out}");
    }
}

#[test]
fn accelerate_reproduces_catalog_series() {
    let args = ["accelerate", "--family", "quarter", "--params", "1/3,1/3,1,1/3,1/3,2/3", "--n", "1", "--chu"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let series = parse_series(out.lines().next().unwrap()).unwrap();
    let q1 = find_entry("Q1").unwrap().chu.unwrap();
    let a = series.terms(41).unwrap();
    let b = q1.terms(41).unwrap();
    assert!(stream_proportional(&a, &b, 40).is_some());
    assert!(out.lines().nth(1).unwrap().starts_with("scale = "));

    let o = run(&["--format", "tsv", "accelerate", "--family", "quarter", "--params", "1/3,1/3,1,1/3,1/3,2/3", "--terms", "3"]);
    assert_eq!(stdout(&o), "0\t17/10\n1\t43/440\n2\t19/1428\n");
}

#[test]
fn eval_series_text() {
    let o = run(&[
        "eval",
        "--series",
        "z=1/4 upper=[1/3,1,5/3] lower=[7/6,3/2,11/6] num=[2,3] den=[1]",
        "--digits",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("2.26724920529277231324 ± "), "{out}");
    assert!(out.trim_end().contains("e-2"));
    let o = run(&["eval", "--id", "Q-R1", "--digits", "20"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn term_cap_override() {
    let o = run_env(&["check", "--id", "RT1", "--digits", "50"], &[("HYPERACCEL_MAX_TERMS", "5")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL RT1"));
    let o = run_env(&["check", "--id", "RT1"], &[("HYPERACCEL_MAX_TERMS", "many")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rate_queries() {
    let rate = |args: &[&str]| stdout(&run(args)).trim().to_string();
    assert_eq!(rate(&["rate", "--family", "neg-quarter"]), "-1/4");
    assert_eq!(rate(&["rate", "--family", "four-27", "--params", "1/2,1/2,-1/2", "--n", "1"]), "4/27");
    assert_eq!(rate(&["rate", "--id", "PM1"]), "1/64");
    assert_eq!(rate(&["rate", "--series", "z=-1/27 upper=[1] lower=[2] num=[1] den=[1]"]), "-1/27");
}

#[test]
fn output_is_stable_and_tsv_has_columns() {
    let args = ["--format", "tsv", "check-all", "--digits", "30", "--jobs", "4"];
    let a = run(&args);
    let b = run(&["--format", "tsv", "check-all", "--digits", "30", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.lines().all(|l| l.split('\t').count() == 5 && l.split('\t').nth(1) == Some("PASS")));
    assert_eq!(out.lines().count(), 77);
}

#[test]
fn catalog_export_round_trips() {
    let path = std::env::temp_dir().join(format!("hyperaccel-catalog-{}.tsv", std::process::id()));
    let o = run(&["catalog", "export", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let entries = parse_catalog(&text).unwrap();
    assert_eq!(entries.len(), 105);
    let list = stdout(&run(&["catalog", "list"]));
    assert_eq!(list.lines().count(), 105);
    assert!(list.lines().next().unwrap().starts_with("RT1 "));
}
