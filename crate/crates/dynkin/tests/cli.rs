//! Binary-level tests: exit codes, format round-trips, stream separation,
//! and byte-for-byte determinism of repeated invocations.

use std::process::{Command, Output};

use dynkin::cli::{entries_from_csv, verify_from_csv};
use dynkin::index::{fundamental_index_table_with, OracleMode};
use dynkin::report::{build_verification, Scope};
use dynkin::representation::DEFAULT_MASS_CAP;
use dynkin::rootsystem::{LieType, RootSystem, Series};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("stdout utf8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("stderr utf8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn usage_errors_exit_2_with_empty_stdout() {
    for args in [
        &["roots", "H4"][..],              // unknown series
        &["table", "E9"],                  // rank outside the admitted range
        &["table", "B2"],                  // admitted letter, inadmissible rank
        &["verify", "frobnicate"],         // unknown scope token
        &["index", "A2", "1,0,x"],         // malformed weight
        &["index", "A2", "-1,0"],          // non-dominant weight
        &["index", "B3"],                  // missing required argument
        &["no-such-subcommand"],           // unknown subcommand
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "args {args:?}: {}", stderr(&out));
        assert!(
            stdout(&out).is_empty(),
            "usage error for {args:?} wrote to stdout"
        );
        assert!(
            !stderr(&out).is_empty(),
            "usage error for {args:?} left stderr empty"
        );
    }
}

#[test]
fn forced_oracle_over_cap_exits_3() {
    let out = run(&[
        "index", "E8", "1,0,0,0,0,0,0,0", "--oracle", "on", "--cap", "1000",
    ]);
    assert_eq!(code(&out), 3, "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty());
    assert!(
        stderr(&out).contains("cap"),
        "diagnostic should name the cap: {}",
        stderr(&out)
    );
}

#[test]
fn auto_oracle_over_cap_skips_and_succeeds() {
    let out = run(&["index", "E8", "1,0,0,0,0,0,0,0", "--cap", "1000"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("skipped-oracle"), "text was:\n{text}");
    assert!(text.contains("index (closed form): 1500"));
    assert!(stderr(&out).is_empty());
}

#[test]
fn verify_scope_exits_0_and_reports_all_ok() {
    let out = run(&["verify", "G2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ALL OK"), "text was:\n{text}");
    assert!(stderr(&out).is_empty());
}

#[test]
fn table_json_matches_published_exceptional_values() {
    let out = run(&["table", "F4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "table");
    assert_eq!(v["lie_type"], "F4");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    let closed: Vec<&str> = entries
        .iter()
        .map(|e| e["index_closed"].as_str().unwrap())
        .collect();
    assert_eq!(closed, ["18", "882", "126", "6"]);
    for e in entries {
        assert_eq!(e["agree_internal"], true);
        assert_eq!(e["agree_reference"], true);
    }
}

#[test]
fn table_csv_round_trips_through_the_library_parser() {
    let out = run(&["table", "E7", "--format", "csv", "--oracle", "off"]);
    assert_eq!(code(&out), 0);
    let parsed = entries_from_csv(&stdout(&out)).unwrap();
    let t = LieType::new(Series::E, 7).unwrap();
    let expected =
        fundamental_index_table_with(&RootSystem::new(t), OracleMode::Off, DEFAULT_MASS_CAP)
            .unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn verify_csv_round_trips_entries_and_checks() {
    let out = run(&["verify", "E6", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let (entries, checks) = verify_from_csv(&stdout(&out)).unwrap();
    let expected = build_verification(
        Scope::parse("E6").unwrap(),
        OracleMode::Auto,
        DEFAULT_MASS_CAP,
    )
    .unwrap();
    assert_eq!(entries, expected.entries);
    assert_eq!(checks, expected.checks);
}

#[test]
fn verify_json_round_trips_the_full_report() {
    let out = run(&["verify", "B", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let parsed: dynkin::report::VerificationReport =
        serde_json::from_str(&stdout(&out)).unwrap();
    let expected = build_verification(
        Scope::parse("B").unwrap(),
        OracleMode::Auto,
        DEFAULT_MASS_CAP,
    )
    .unwrap();
    assert_eq!(parsed, expected);
    assert!(parsed.summary_consistent());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "dtable", "--format", "csv"][..],
        &["bounds", "--format", "json"],
        &["table", "D5", "--format", "text"],
        &["roots", "F4", "--format", "csv"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0);
        assert_eq!(
            a.stdout, b.stdout,
            "output of {args:?} differs between runs"
        );
    }
}

#[test]
fn roots_text_reports_known_invariants() {
    let out = run(&["roots", "G2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for needle in [
        "type: G2",
        "positive roots: 6",
        "d(g): 2",
        "dual Coxeter number: 4",
        "canonical level: -8",
        "highest root: [0,1]",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn assume_sqrt_halves_even_orthogonal_index_only() {
    // The B3 adjoint is orthogonal with even index 10: the conditional
    // theta level is half.
    let out = run(&["index", "B3", "0,1,0", "--assume-sqrt"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("index (closed form): 10"), "text:\n{text}");
    assert!(text.contains("orthogonal: yes"), "text:\n{text}");
    assert!(
        text.contains("theta level (conditional on square-root hypothesis): 5"),
        "text:\n{text}"
    );

    // The defining representation of A1 is symplectic, not orthogonal:
    // its level is not halved.
    let out = run(&["index", "A1", "1", "--assume-sqrt"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("orthogonal: no"), "text:\n{text}");
    assert!(
        text.contains("theta level (conditional on square-root hypothesis): 1"),
        "text:\n{text}"
    );

    // Without the flag the conditional line is absent.
    let out = run(&["index", "B3", "0,1,0"]);
    assert!(!stdout(&out).contains("theta level"));
}

#[test]
fn version_flag_works() {
    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dynkin"));
}
