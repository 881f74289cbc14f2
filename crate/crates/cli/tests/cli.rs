use std::process::{Command, Output};

use riley_lo::certify::{verify_certificate, RootCertificate, ScanReport};
use riley_lo::riley::riley_for_knot;

fn rileylo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rileylo"))
        .args(args)
        .env_remove("RILEYLO_PREC")
        .output()
        .expect("spawn rileylo")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn riley_cross_check_and_hash() {
    let o = rileylo(&["riley", "--knot", "J:2,-3", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("cross-check: ok"), "{text}");
    let phi = riley_for_knot(&"J:2,-3".parse().unwrap()).unwrap();
    assert!(text.contains(phi.hash()));
    assert!(text.contains(&phi.poly().to_canonical_text()));
}

#[test]
fn riley_from_fraction() {
    let o = rileylo(&["riley", "--fraction", "17/7", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cross-check: ok"));
}

#[test]
fn signs_and_reduction() {
    let o = rileylo(&["signs", "--fraction", "17/7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "<2><-2><3><-2><3><-2><2>");

    let o = rileylo(&["signs", "--fraction", "17/7", "--reduce"]);
    let text = stdout(&o);
    assert!(text.contains("3/7: <2>  (degenerate)"), "{text}");

    let o = rileylo(&["signs", "--fraction", "5/3", "--reduce"]);
    assert!(stdout(&o).contains("no reduction applies"));
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["signs", "--fraction", "8/3"][..],
        &["signs", "--fraction", "7/2"],
        &["riley", "--knot", "J:0,2"],
        &["riley", "--knot", "Kl:1"],
        &["riley", "--knot", "J:1,2", "--fraction", "5/3"],
        &["certify", "--knot", "J:1,2", "--n", "1"],
        &["no-such-command"],
    ] {
        let o = rileylo(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(rileylo(&["--help"]).status.code(), Some(0));
    assert_eq!(rileylo(&["--version"]).status.code(), Some(0));
}

#[test]
fn certify_emits_verifiable_certificate() {
    let o = rileylo(&[
        "certify",
        "--knot",
        "J:1,3",
        "--n",
        "6",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: ScanReport = serde_json::from_slice(&o.stdout).unwrap();
    let cert = report.certificate.expect("certificate");
    let phi = riley_for_knot(&"J:1,3".parse().unwrap()).unwrap();
    assert!(verify_certificate(&cert, &phi).unwrap());
}

#[test]
fn certify_text_contains_certificate_json() {
    let o = rileylo(&["certify", "--knot", "Kl:3", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json = &text[text.find('{').unwrap()..];
    let cert = RootCertificate::from_json(json).unwrap();
    assert_eq!(cert.n, 5);
}

#[test]
fn inconclusive_exits_two_and_says_so() {
    let o = rileylo(&[
        "certify",
        "--knot",
        "J:1,2",
        "--n",
        "2",
        "--ymax",
        "8",
        "--ymax-cap",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("inconclusive"));
    assert!(text.contains("does not show that no root exists"));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_rileylo"))
        .args([
            "certify",
            "--knot",
            "J:1,2",
            "--n",
            "7",
            "--format",
            "structured",
        ])
        .env("RILEYLO_PREC", "96")
        .output()
        .unwrap();
    let report: ScanReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.certificate.unwrap().parameters.precision, 96);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "lo-set",
        "--knot",
        "J:1,-2",
        "--n-max",
        "6",
        "--format",
        "structured",
    ];
    let a = rileylo(&args);
    let b = rileylo(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn lo_set_table() {
    let o = rileylo(&["lo-set", "--knot", "J:1,4", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certified n: {3, 4, 5}"));
}

#[test]
fn selftest_exit_codes() {
    let o = rileylo(&["selftest", "--quick"]);
    assert_eq!(o.status.code(), Some(0));
    let o = rileylo(&["selftest", "--corrupt-kl-lambda", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"K_l engines agree"), "{failed:?}");
}
