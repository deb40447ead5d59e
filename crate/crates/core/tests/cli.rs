mod common;

use std::process::Command;

use common::*;
use structctl::io::{Report, SystemFile};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut argv = vec!["structctl".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = structctl::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn fx(name: &str) -> String {
    fixture_path(name).display().to_string()
}

#[test]
fn check_exit_codes() {
    let r = run(&["check", &fx("example2")]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("matroid: CERTIFIED"));
    assert!(r.out.contains("{a4, a5}") && r.out.contains("{a6, a7}") && r.out.contains("{a2, a3}"));

    let r = run(&["check", &fx("repeated_mode"), "--method", "pbh"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("pbh: NOT_CONTROLLABLE (gcd of maximal minors in s: -z1 + s)"), "{}", r.out);

    let r = run(&["check", &fx("no_inputs"), "--method", "matroid"]);
    assert_eq!(r.code, 2);
    assert!(r.out.contains("INCONCLUSIVE"));

    let r = run(&["check", &fx("bad_expr")]);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("A[1][1]:1:2"), "{}", r.err);

    let r = run(&["check", "/nonexistent/system.json"]);
    assert_eq!(r.code, 3);

    let r = run(&["check", &fx("example1"), "--method", "bogus"]);
    assert_eq!(r.code, 3);
}

#[test]
fn fixture_partition_is_used_unless_overridden() {
    let r = run(&["check", &fx("example1"), "--method", "matroid"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("partition: 1,2;3,4,5"), "{}", r.out);
    let r = run(&["check", &fx("example1"), "--method", "matroid", "--partition", "1;2;3;4;5"]);
    assert!(r.out.contains("partition: 1;2;3;4;5"), "{}", r.out);
}

#[test]
fn compose_mismatch_names_both_input_counts() {
    let r = run(&["compose", &fx("scalar"), &fx("scalar_two_inputs")]);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("m = 1") && r.err.contains("m = 2"), "{}", r.err);
}

#[test]
fn verify_exit_codes() {
    let r = run(&["verify", &fx("example2"), &fx("example2_cert")]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.contains("certificate: VALID"));

    let r = run(&["verify", &fx("example1"), &fx("example1_nonunit_cert")]);
    assert_ne!(r.code, 0);
    assert!(r.out.contains("-s^2 + s"));
    assert!(r.out.contains("certificate: INVALID"));

    let r = run(&["verify", &fx("example1"), &fx("overlap_cert")]);
    assert_ne!(r.code, 0);
    assert!(r.out.contains("FAILED disjointness"), "{}", r.out);
}

#[test]
fn json_report_parses() {
    let r = run(&["check", &fx("example1"), "--json"]);
    assert_eq!(r.code, 0);
    let report: Report = serde_json::from_str(&r.out).unwrap();
    assert_eq!((report.system.as_str(), report.n, report.m), ("example1", 5, 2));
    assert_eq!(report.exit_status, 0);
    let methods: Vec<&str> = report.results.iter().map(|e| e.method.as_str()).collect();
    assert_eq!(methods, ["pbh", "kalman", "matroid"]);
    assert_eq!(report.results[0].gcd.as_deref(), Some("1"));
    assert_eq!(report.results[1].rank, Some(5));
    let cert = report.results[2].certificate.as_ref().unwrap();
    assert_eq!(cert.bases[0].labels, ["a2", "a6"]);

    let r = run(&["check", &fx("repeated_mode"), "--json"]);
    let report: Report = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report.exit_status, 1);
    assert_eq!(r.code, 1);
}

#[test]
fn output_is_deterministic() {
    for f in ["example1", "example2", "bridge"] {
        let a = run(&["check", &fx(f), "--json"]);
        let b = run(&["check", &fx(f), "--json"]);
        assert_eq!(a.out, b.out);
    }
}

#[test]
fn compose_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("single.json");
    let r = run(&["compose", &fx("sigma1"), "-o", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let back = SystemFile::load(&out).unwrap().to_system("single").unwrap();
    let orig = fixture("sigma1");
    assert_eq!((back.a(), back.b()), (orig.a(), orig.b()));

    let r = run(&["compose", &fx("sigma1"), &fx("sigma2"), "--name", "joined"]);
    assert_eq!(r.code, 0);
    let joined = SystemFile::from_json(&r.out).unwrap();
    assert_eq!(joined.name, "joined");
    let sys = joined.to_system("joined").unwrap();
    let ex1 = fixture("example1");
    assert_eq!((sys.a(), sys.b()), (ex1.a(), ex1.b()));
}

#[test]
fn emitted_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let r = run(&[
        "check",
        &fx("bridge"),
        "--method",
        "matroid",
        "--emit-certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let r = run(&["verify", &fx("bridge"), cert.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.contains("certificate: VALID"));
}

#[test]
fn binary_matches_library_entry_point() {
    let out = Command::new(env!("CARGO_BIN_EXE_structctl"))
        .args(["check", &fx("repeated_mode"), "--method", "pbh"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let lib = run(&["check", &fx("repeated_mode"), "--method", "pbh"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.out);

    let help = Command::new(env!("CARGO_BIN_EXE_structctl")).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
