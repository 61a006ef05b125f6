//! The `critline` binary: exit codes, report schemas and determinism.

use std::process::{Command, Output};

use critline::report::{ErrorReport, EvalReport, Stamped};
use critline::rootscan::{CurveReport, GridReport, LocusKind, ZeroRecord};
use critline::verify::VerifyReport;
use serde_json::Value;

fn critline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critline"))
        .args(args)
        .env_remove("CRITLINE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

/// Parses, re-serializes, and compares against the emitted JSON.
fn round_trip<T>(text: &str) -> T
where
    T: serde::de::DeserializeOwned + serde::Serialize,
{
    let parsed: T = serde_json::from_str(text).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, text);
    parsed
}

#[test]
fn eval_examples() {
    let out = critline(&["eval", "--fn", "zeta", "--re", "2", "--im", "0"]);
    assert_eq!(code(&out), 0);
    let r: EvalReport = round_trip(&stdout(&out));
    assert!((r.value.re - 1.644934).abs() < 1e-6);
    assert_eq!(r.function, "zeta");

    let out = critline(&["eval", "--fn", "zeta", "--re", "1", "--im", "0"]);
    assert_eq!(code(&out), 2);
    let e: ErrorReport = round_trip(&stdout(&out));
    assert_eq!(e.error, "pole");

    let out = critline(&["eval", "--fn", "xi", "--re", "0.5", "--im", "14.134725"]);
    assert_eq!(code(&out), 0);
    let r: EvalReport = round_trip(&stdout(&out));
    assert!(r.value.abs() < 1e-8);

    let out = critline(&["eval", "--fn", "gamma", "--re", "-3", "--im", "0"]);
    assert_eq!(code(&out), 2);
    let e: ErrorReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(e.error, "pole");

    let out = critline(&["eval", "--fn", "exp", "--re", "800"]);
    assert_eq!(code(&out), 2);
    let e: ErrorReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(e.error, "overflow");

    let out = critline(&[
        "eval", "--fn", "zeta", "--re", "0.5", "--im", "3", "--method", "direct",
    ]);
    assert_eq!(code(&out), 2);
    let e: ErrorReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(e.error, "domain");
}

#[test]
fn eval_report_schema() {
    let out = critline(&["eval", "--fn", "cos", "--re", "1", "--im", "2"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["abs_error_estimate", "fn", "terms_used", "value", "z"]
    );
    assert_eq!(v["z"]["re"], 1.0);
    assert_eq!(v["z"]["im"], 2.0);
}

#[test]
fn verify_examples() {
    let out = critline(&[
        "verify",
        "--suite",
        "reflection",
        "--samples",
        "1000",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0);
    let r: VerifyReport = round_trip(&stdout(&out));
    assert!(r.pass && r.max_residual < 1e-10 && r.samples == 1000);

    let out = critline(&["verify", "--suite", "line-real", "--t-max", "50"]);
    assert_eq!(code(&out), 0);
    let r: VerifyReport = round_trip(&stdout(&out));
    assert!(r.pass);

    assert_eq!(
        code(&critline(&[
            "verify",
            "--suite",
            "functional-eq",
            "--samples",
            "0"
        ])),
        2
    );
    assert_eq!(code(&critline(&["verify", "--suite", "bogus"])), 2);
    assert_eq!(
        code(&critline(&[
            "verify", "--suite", "symmetry", "--t-max", "61"
        ])),
        2
    );
}

#[test]
fn verify_failure_exits_one() {
    // An impossible tolerance turns a passing suite into a reported failure.
    let out = critline(&["verify", "--suite", "symmetry", "--tol-residual", "1e-300"]);
    assert_eq!(code(&out), 1);
    let r: VerifyReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!r.pass);
}

#[test]
fn verify_is_seed_deterministic() {
    let args = [
        "verify",
        "--suite",
        "functional-eq",
        "--samples",
        "200",
        "--seed",
        "11",
    ];
    assert_eq!(critline(&args).stdout, critline(&args).stdout);
    let other = critline(&[
        "verify",
        "--suite",
        "functional-eq",
        "--samples",
        "200",
        "--seed",
        "12",
    ]);
    assert_ne!(critline(&args).stdout, other.stdout);
}

#[test]
fn zeros_examples() {
    let out = critline(&["zeros", "--t-lo", "0", "--t-hi", "30", "--step", "0.25"]);
    assert_eq!(code(&out), 0);
    let records: Vec<ZeroRecord> = round_trip(&stdout(&out));
    let want = [14.134725, 21.022040, 25.010858];
    assert_eq!(records.len(), 3);
    for (r, w) in records.iter().zip(want) {
        assert!((r.t - w).abs() < 1e-6);
    }

    let out = critline(&["zeros", "--t-lo", "0", "--t-hi", "10", "--step", "0.25"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "[]");

    assert_eq!(
        code(&critline(&["zeros", "--t-lo", "30", "--t-hi", "20"])),
        2
    );
    assert_eq!(code(&critline(&["zeros", "--t", "0:30", "--t-lo", "1"])), 2);
    assert_eq!(code(&critline(&["zeros", "--t", "0:61"])), 2);
}

#[test]
fn zeros_range_flag_and_csv() {
    let json = critline(&["zeros", "--t", "0:30"]);
    let flags = critline(&["zeros", "--t-lo", "0", "--t-hi", "30", "--step", "0.25"]);
    assert_eq!(json.stdout, flags.stdout);

    let out = critline(&["zeros", "--t", "0:30", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,residual,iterations");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("14.134725141735"));
    let digits: usize = lines[1]
        .split(',')
        .next()
        .unwrap()
        .chars()
        .filter(char::is_ascii_digit)
        .count();
    assert_eq!(digits, 15);
}

#[test]
fn zeros_non_convergence_exits_one() {
    let out = critline(&["zeros", "--t", "10:16", "--tol-resid", "1e-30"]);
    assert_eq!(code(&out), 1);
    let e: ErrorReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(e.error, "non_convergence");
}

#[test]
fn scan_report_and_raster() {
    let dir = std::env::temp_dir().join(format!("critline-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let raster = dir.join("raster.csv");
    let out = critline(&[
        "scan",
        "--re",
        "0.4:0.6",
        "--t",
        "14:15",
        "--step",
        "0.01",
        "--margin",
        "0.05",
        "--raster",
        raster.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report: GridReport = round_trip(&stdout(&out));
    assert!((report.global_argmin.re - 0.5).abs() <= 0.02);
    assert!((report.global_argmin.im - 14.1347).abs() <= 0.02);
    assert!(!report.candidate_cells.is_empty());
    // |ξ| < 1e-4 around the zero is a disk of radius about 1e-4 / |ξ'| = 0.07.
    let zero = critline::Complex::new(0.5, 14.134725);
    assert!(report.candidate_cells.iter().all(|p| p.dist(zero) < 0.1));

    let csv = std::fs::read_to_string(&raster).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "re_lo,re_hi,t_lo,t_hi,step");
    assert_eq!(lines[1], "0.4,0.6,14,15,0.01");
    assert_eq!(lines.len(), 2 + 101);
    assert!(lines[2..].iter().all(|l| l.split(',').count() == 21));

    let as_csv = critline(&[
        "scan", "--re", "0.4:0.6", "--t", "14:15", "--step", "0.01", "--format", "csv",
    ]);
    assert_eq!(stdout(&as_csv), csv);
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(code(&critline(&["scan", "--re", "0:1", "--t", "0:5"])), 2);
    assert_eq!(
        code(&critline(&[
            "scan", "--re", "0.1:0.9", "--t", "0:5", "--step", "0.5"
        ])),
        2
    );
    assert_eq!(code(&critline(&["scan", "--re", "x:0.9"])), 2);
}

#[test]
fn curves_examples() {
    let out = critline(&[
        "curves", "--fn", "exp", "--re", "-1:1", "--im", "0:7", "--step", "0.02",
    ]);
    assert_eq!(code(&out), 0);
    let report: CurveReport = round_trip(&stdout(&out));
    let quarter = std::f64::consts::FRAC_PI_4;
    let lines: Vec<_> = report
        .segments
        .iter()
        .filter(|s| s.locus_kind == LocusKind::VEqW)
        .collect();
    assert_eq!(lines.len(), 2);
    for (seg, b) in lines.iter().zip([quarter, quarter + std::f64::consts::PI]) {
        assert!(seg.points.iter().all(|p| (p.im - b).abs() <= 0.02));
    }
    assert!(report.candidates.is_empty());

    assert_eq!(
        code(&critline(&[
            "curves", "--fn", "unknown", "--re", "0:1", "--im", "0:1"
        ])),
        2
    );
    let out = critline(&["curves", "--fn", "unknown", "--re", "0:1", "--im", "0:1"]);
    let e: ErrorReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(e.error, "unknown_function");
    assert_eq!(
        code(&critline(&[
            "curves", "--fn", "cos", "--re", "1:0", "--im", "0:1"
        ])),
        2
    );
    assert_eq!(
        code(&critline(&[
            "curves", "--fn", "xi", "--re", "-20:0", "--im", "0:1"
        ])),
        2
    );
    assert_eq!(
        code(&critline(&[
            "curves", "--fn", "cos", "--re", "0:1", "--im", "0:1", "--format", "csv"
        ])),
        2
    );
}

#[test]
fn thread_count_does_not_change_output() {
    let runs = [
        vec!["zeros", "--t", "0:30", "--step", "0.25"],
        vec![
            "scan",
            "--re",
            "0.05:0.95",
            "--t",
            "10:20",
            "--step",
            "0.05",
        ],
        vec![
            "curves", "--fn", "gamma", "--re", "-3.5:3", "--im", "-2:2", "--step", "0.1",
        ],
        vec!["verify", "--suite", "symmetry"],
    ];
    for args in runs {
        let one: Vec<&str> = ["--threads", "1"]
            .iter()
            .copied()
            .chain(args.iter().copied())
            .collect();
        let eight: Vec<&str> = ["--threads", "8"]
            .iter()
            .copied()
            .chain(args.iter().copied())
            .collect();
        let a = critline(&one);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, critline(&eight).stdout, "{args:?}");
    }
}

#[test]
fn thread_env_fallback() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_critline"))
            .args(["zeros", "--t", "0:20"])
            .env("CRITLINE_THREADS", value)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("2")), 0);
    assert_eq!(run("2").stdout, critline(&["zeros", "--t", "0:20"]).stdout);
    assert_eq!(code(&run("zero")), 2);
    assert_eq!(code(&run("0")), 2);
}

#[test]
fn timestamps_are_opt_in() {
    let plain = critline(&["eval", "--fn", "exp", "--re", "0"]);
    assert!(!stdout(&plain).contains("unix_time"));
    let stamped = critline(&["--timestamps", "eval", "--fn", "exp", "--re", "0"]);
    let s: Stamped<EvalReport> = serde_json::from_str(&stdout(&stamped)).unwrap();
    assert!(s.unix_time > 0.0);
    let r: EvalReport = serde_json::from_str(&stdout(&plain)).unwrap();
    assert_eq!(s.report, r);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("critline-out-{}.json", std::process::id()));
    let out = critline(&[
        "eval",
        "--fn",
        "gamma",
        "--re",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let r: EvalReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((r.value.re - 24.0).abs() < 1e-11);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bad_input_never_panics() {
    let cases: &[&[&str]] = &[
        &[],
        &["eval"],
        &["eval", "--fn", "xi", "--re", "1e400"],
        &["eval", "--fn", "xi", "--re", "-12"],
        &["eval", "--fn", "zeta", "--re", "-11"],
        &["zeros", "--step", "-1"],
        &["zeros", "--t", "5"],
        &["scan", "--margin", "0"],
        &["scan", "--tol-candidate", "-1"],
        &[
            "curves", "--fn", "xi", "--re", "0:1", "--im", "0:1", "--step", "0",
        ],
        &[
            "curves",
            "--fn",
            "xi",
            "--re",
            "0:1",
            "--im",
            "0:1",
            "--tol-curve",
            "0",
        ],
        &["verify", "--suite", "reflection", "--samples", "-3"],
        &["--format", "xml", "zeros"],
    ];
    for args in cases {
        let out = critline(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(
            !String::from_utf8_lossy(&out.stderr).contains("panicked"),
            "{args:?}"
        );
    }
}
