//! The command line, in process and as a binary.

use std::process::Command;

use ramlimit::cli::run;

fn job(name: &str) -> String {
    format!("{}/tests/jobs/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ramlimit"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn conic_limit_verifies() {
    let (code, out, _) = call(&["limit", &job("conic"), "--verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("limit: (2)·[(X0)·(X1)]"), "{out}");
    assert!(out.contains("verification: all-match"), "{out}");
}

#[test]
fn dual_limit_of_the_conic() {
    let (code, out, _) = call(&["dual-limit", &job("conic")]);
    assert_eq!(code, 0);
    assert!(out.contains("2·(0:0:1)^∨"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["limit", &job("malformed")]).0, 1);
    assert_eq!(call(&["limit", "/nonexistent/job.json"]).0, 1);
    assert_eq!(call(&["limit"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    let (code, _, err) = call(&["ramification", &job("double_line")]);
    assert_eq!(code, 2);
    assert!(err.contains("not square-free"), "{err}");
    let (code, out, _) = call(&["limit", &job("conic_perturbed"), "--verify"]);
    assert_eq!(code, 3);
    assert!(out.contains("perturbed for self-test"), "{out}");
    let (code, _, err) = call(&["limit", &job("no_type")]);
    assert_eq!(code, 4);
    assert!(err.contains("raise --order"), "{err}");
    // X0*(X2 + t*X1)^2 has a non-reduced generic fibre: no order helps
    assert_eq!(call(&["limit", &job("no_type"), "--order", "24"]).0, 4);
}

#[test]
fn engine_override_is_checked() {
    // the Zeuthen engine needs the E/A split in the job
    let (code, _, err) = call(&["limit", &job("conic"), "--engine", "zeuthen"]);
    assert_eq!(code, 1, "{err}");
    // the general engine needs gcd(F0, F1) = 1
    assert_eq!(call(&["limit", &job("quasi_cubic"), "--engine", "general"]).0, 2);
    assert_eq!(call(&["limit", &job("conic"), "--engine", "fast"]).0, 1);
    assert_eq!(call(&["limit", &job("conic"), "--engine", "quasi"]).0, 0);
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for k in 0..2 {
        let p = dir.path().join(format!("r{k}.json"));
        let (code, _, _) = call(&[
            "limit",
            &job("quasi_cubic"),
            "--verify",
            "--seed",
            "7",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        bodies.push(std::fs::read(&p).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let v: serde_json::Value = serde_json::from_slice(&bodies[0]).unwrap();
    assert_eq!(v["verification"]["verdict"], "all-match");
    assert_eq!(v["degree"], "6");
}

#[test]
fn binary_matches_in_process_run() {
    let out = Command::new(env!("CARGO_BIN_EXE_ramlimit"))
        .args(["equiv-check", &job("equiv_jacobi")])
        .output()
        .unwrap();
    let (code, text, _) = call(&["equiv-check", &job("equiv_jacobi")]);
    assert_eq!(out.status.code(), Some(code));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), text);
    assert!(text.contains("a = 1"), "{text}");
}
