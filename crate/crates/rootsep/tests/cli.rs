//! End-to-end checks of the `rootsep` binary: output schemas, exit codes,
//! and byte-level determinism across the process boundary.

use std::process::{Command, Output};

fn rootsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootsep"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_str(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout should be UTF-8")
}

#[test]
fn exponent_json_schema_and_enclosure() {
    let out = rootsep(&["exponent", "2,-8,7,0,4,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["poly"], "2,-8,7,0,4,1");
    assert_eq!(v["height"], "8");
    let field = |name: &str| v[name].as_str().unwrap().parse::<f64>().unwrap();
    let (sep_lo, sep_hi) = (field("sep_lo"), field("sep_hi"));
    let (e_lo, e_hi) = (field("e_lo"), field("e_hi"));
    assert!(0.0 < sep_lo && sep_lo <= sep_hi);
    assert!(e_lo <= e_hi);
    // Certified enclosure of the known exponent of this quintic.
    assert!(e_lo <= 2.6665 && 2.6664 <= e_hi, "e in [{e_lo}, {e_hi}]");
    let witness = v["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 2);
    assert!(witness[0].as_u64().unwrap() < witness[1].as_u64().unwrap());
}

#[test]
fn sep_reports_undefined_exponent_as_null() {
    let out = rootsep(&["sep", "-1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["e_lo"].is_null() && v["e_hi"].is_null());
    let sep_lo = v["sep_lo"].as_str().unwrap().parse::<f64>().unwrap();
    let sep_hi = v["sep_hi"].as_str().unwrap().parse::<f64>().unwrap();
    assert!(sep_lo <= 2.0 && 2.0 <= sep_hi);
}

#[test]
fn undefined_quantities_exit_3() {
    // A constant has no root pair; a height-1 polynomial has no exponent.
    for args in [&["sep", "5"][..], &["exponent", "-1,0,1"][..]] {
        let out = rootsep(args);
        assert_eq!(out.status.code(), Some(3), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["sep", "1,a,3"],                     // unparsable coefficient
        &["family", "t"],                      // unknown family name
        &["family", "p", "--d", "6"],          // even degree
        &["search", "1,0,1"],                  // quadratic, not a cubic
        &["survey", "--d", "5", "--shape", "2,2", "--bound", "1"],
        &["--rel-width", "2.0", "sep", "-1,0,1"],
        &["frobnicate"],                       // unknown subcommand (clap)
    ];
    for args in cases {
        let out = rootsep(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn family_csv_header_and_crlf_free() {
    let out = rootsep(&[
        "--format", "csv", "family", "p", "--n-min", "2", "--n-max", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.starts_with(
        "family,d,k,n,height,sep_lo,sep_hi,e_lo,e_hi,predicted_e,bound_ok\n"
    ));
    assert!(!out.stdout.contains(&b'\r'), "CSV must be LF-terminated");
    assert_eq!(text.lines().count(), 6, "header plus five rows");
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",1"), "sep bound should hold: {line}");
    }
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "--format", "csv", "family", "s", "--n-min", "2", "--n-max", "8",
    ];
    let first = rootsep(&args);
    let second = rootsep(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_flag_writes_stdout_bytes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let to_file = rootsep(&[
        "--output",
        path.to_str().unwrap(),
        "exponent",
        "2,-8,7,0,4,1",
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let to_stdout = rootsep(&["exponent", "2,-8,7,0,4,1"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn search_with_unreachable_threshold_returns_empty_array() {
    let out = rootsep(&[
        "search", "-1,10,0,1", "--threshold", "50", "--ladder", "1000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out).trim(), "[]");
}

#[test]
fn search_finds_known_quadratic() {
    let out = rootsep(&[
        "search", "-1,10,0,1",
        "--threshold", "2.2",
        "--ladder", "10000000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let hits = v.as_array().unwrap();
    assert!(hits
        .iter()
        .any(|h| h["quadratic"] == "-10,100,1"), "hits: {v}");
}

#[test]
fn verify_emits_suite_rows_and_exit_codes() {
    let out = rootsep(&[
        "--format", "csv", "verify", "gelfond", "--samples", "200",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "suite,checked,violations,pass\ngelfond,200,0,1\n"
    );

    let all = rootsep(&["--format", "csv", "verify", "all", "--samples", "50"]);
    assert_eq!(all.status.code(), Some(0));
    let text = stdout_str(&all);
    assert!(text.contains("\ngelfond,50,0,1\n"));
    assert!(text.contains("\nmahler,50,0,1\n"));
    assert!(text.contains("\nlinear-factor,50,0,1\n"));
}

#[test]
fn survey_csv_quotes_shape_and_sorts_descending() {
    let out = rootsep(&[
        "--format", "csv", "survey", "--d", "5", "--shape", "2,3",
        "--bound", "1", "--top", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.starts_with("shape,hQ,hR,height,e_lo,e_hi,polys\n"));
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    let e_los: Vec<f64> = rows
        .iter()
        .map(|r| {
            let rest = r
                .strip_prefix("\"{2,3}\",")
                .unwrap_or_else(|| panic!("shape cell: {r}"));
            rest.split(',').nth(3).unwrap().parse().unwrap()
        })
        .collect();
    assert!(e_los.windows(2).all(|w| w[0] >= w[1]), "e_lo sorted: {e_los:?}");
}
