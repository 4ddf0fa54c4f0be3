use std::process::{Command, Output};

use qsym_core::ring::LaurentPoly;

fn qsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn qi_all_routes() {
    let o = qsym(&["compute", "--family", "qI", "--lambda", "1", "--k", "1", "--m", "1", "--method", "all"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "2*x1 + 2*x1^-1 + 2*x2");
    let err = String::from_utf8(o.stderr).unwrap();
    for route in ["definition", "tableau", "pfaffian", "branch", "lgv"] {
        assert!(err.contains(&format!("{route}: ")), "{err}");
    }
}

#[test]
fn qi_not_contained_is_zero() {
    let o = qsym(&["compute", "--family", "qI", "--lambda", "2,1", "--mu", "3", "--k", "1", "--m", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn exit_codes() {
    let non_strict = qsym(&["compute", "--family", "qA", "--lambda", "2,2", "--k", "0", "--m", "2"]);
    assert_eq!(code(&non_strict), 3);
    let too_long = qsym(&["compute", "--family", "qI", "--lambda", "3,2,1", "--k", "1", "--m", "1"]);
    assert_eq!(code(&too_long), 3);
    let bad_part = qsym(&["compute", "--family", "qI", "--lambda", "2,x", "--k", "1", "--m", "1"]);
    assert_eq!(code(&bad_part), 2);
    let bad_flag = qsym(&["compute", "--family", "qZ", "--lambda", "1", "--k", "1", "--m", "1"]);
    assert_eq!(code(&bad_flag), 2);
    let wrong_spec = qsym(&["compute", "--family", "qC", "--lambda", "1", "--k", "1", "--m", "1"]);
    assert_eq!(code(&wrong_spec), 3);
}

#[test]
fn term_guard() {
    let o = Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(["compute", "--family", "qI", "--lambda", "3,1", "--k", "1", "--m", "1"])
        .env("QSYM_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn json_round_trip() {
    let args = ["compute", "--family", "qI", "--lambda", "3,1", "--mu", "1", "--k", "1", "--m", "1"];
    let text = qsym(&args);
    let mut json_args = args.to_vec();
    json_args.push("--json");
    let json = qsym(&json_args);
    assert_eq!(code(&json), 0);
    let parsed = LaurentPoly::from_json(stdout(&json).trim()).unwrap();
    assert_eq!(parsed.to_string(), stdout(&text).trim());
    assert_eq!(parsed.to_json(), stdout(&json).trim());
}

#[test]
fn series_examples() {
    let lines = |k: &str, m: &str, d: &str| {
        let o = qsym(&["series", "--k", k, "--m", m, "--degree", d]);
        assert_eq!(code(&o), 0);
        stdout(&o).lines().map(str::to_string).collect::<Vec<_>>()
    };
    assert_eq!(lines("1", "0", "1"), ["1", "2*x1 + 2*x1^-1"]);
    assert_eq!(lines("0", "0", "3"), ["1", "0", "0", "0"]);
    assert_eq!(lines("0", "1", "2"), ["1", "2*x1", "2*x1^2"]);
}

#[test]
fn schur_side_families() {
    let o = qsym(&["compute", "--family", "symp-schur", "--lambda", "1,1", "--k", "2", "--m", "0", "--method", "all"]);
    assert_eq!(code(&o), 0);
    let want = LaurentPoly::parse("x1*x2 + x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1 + 1", 2).unwrap();
    assert_eq!(stdout(&o).trim(), want.to_string());
    let o = qsym(&["compute", "--family", "schur", "--lambda", "2,1", "--k", "1", "--m", "1"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_suites() {
    let o = qsym(&["verify", "--suite", "qfun", "--max-weight", "5", "--max-vars", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS qfun/four-route-agreement"));
    let o = qsym(&["verify", "--suite", "lgv", "--max-weight", "4", "--max-vars", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = qsym(&["verify", "--suite", "all", "--max-weight", "0"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
