use std::process::Command;

use overpartition::classes::ClassMember;
use overpartition::{cli, lookup_class, MapId};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("overpartition").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn enumerate_rr1_over_at_four() {
    let (code, out, _) = run(&["enumerate", "--class", "rr1-over", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3,1\n3,1~\n");
}

#[test]
fn bijection_example_after_frr() {
    let (code, out, _) = run(&["bijection", "--map", "h-oe", "--input", "20,18,15,13,10,7,4,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~");
}

#[test]
fn verify_frr_table_has_four_side_columns() {
    let (code, out, _) = run(&["verify", "--id", "frr", "--max-n", "40", "--format", "table"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let headline = lines.next().unwrap();
    assert!(headline.starts_with("frr  N=40  PASS  PROVEN"), "{headline}");
    let header = out.lines().find(|l| l.trim_start().starts_with("n ")).unwrap();
    assert_eq!(
        header.split("  ").filter(|c| !c.trim().is_empty()).count(),
        5,
        "{header}"
    );
    let rows = out
        .lines()
        .filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()))
        .count();
    assert_eq!(rows, 41);
}

#[test]
fn unknown_ids_exit_two_with_registered_list() {
    for args in [
        &["count", "--class", "nope", "--n", "3"][..],
        &["coeff", "--series", "nope", "--n", "3"][..],
        &["verify", "--id", "nope"][..],
        &["bijection", "--map", "nope", "--input", "1"][..],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("nope") && err.lines().count() > 3, "{args:?}: {err}");
    }
    let (_, _, err) = run(&["verify", "--id", "nope"]);
    assert!(err.lines().any(|l| l.trim() == "frr"));
}

#[test]
fn malformed_partition_reports_position() {
    let (code, _, err) = run(&["bijection", "--map", "f", "--input", "3,x"]);
    assert_eq!(code, 2);
    assert!(err.contains("column 3"), "{err}");
    let (code, _, err) = run(&["bijection", "--map", "f", "--input", "2,4", "--inverse"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn input_outside_source_class_exits_one() {
    let (code, _, err) = run(&["bijection", "--map", "f", "--input", "2,2"]);
    assert_eq!(code, 1);
    assert!(err.contains("not in the source class"), "{err}");
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["count", "--class", "rr1"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn count_and_coeff_ranges() {
    let (code, out, _) = run(&["count", "--class", "distinct", "--from", "0", "--to", "9"]);
    assert_eq!(code, 0);
    let values: Vec<&str> = out.lines().map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(values, ["1", "1", "1", "2", "2", "3", "4", "5", "6", "8"]);
    let (code, coeffs, _) = run(&["coeff", "--series", "distinct-product", "--from", "0", "--to", "9"]);
    assert_eq!(code, 0);
    assert_eq!(coeffs, out);
}

#[test]
fn bijection_round_trip_through_cli() {
    for m in MapId::ALL {
        let source = lookup_class(m.classes().0).unwrap();
        for n in 0..=20 {
            for member in source.enumerate(n) {
                let ClassMember::Partition(lambda) = member else {
                    unreachable!()
                };
                let text = lambda.to_string();
                let (code, image, err) = run(&["bijection", "--map", m.id(), "--input", &text]);
                assert_eq!(code, 0, "{m} {text}: {err}");
                let (code, back, err) = run(&["bijection", "--map", m.id(), "--input", image.trim_end(), "--inverse"]);
                assert_eq!(code, 0, "{m} {image}: {err}");
                assert_eq!(back.trim_end(), text, "{m}");
            }
        }
    }
}

#[test]
fn verify_all_exit_status_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let p = path.to_str().unwrap();
    let (code, out, err) = run(&[
        "verify", "--max-n", "12", "--format", "records", "--jobs", "2", "--out", p,
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let records: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), overpartition::harness::identity_ids().len());
    assert!(records.iter().all(|r| r["status"] != "FAIL"));
    assert!(records.iter().any(|r| r["status"] == "FLAGGED"));
}

#[test]
fn oeis_against_vendored_bfile() {
    let bfile = concat!(env!("CARGO_MANIFEST_DIR"), "/data/b027349.txt");
    let (code, out, err) = run(&["oeis", "--series", "a027349", "--bfile", bfile, "--max-n", "120"]);
    assert_eq!(code, 0, "{out}{err}");
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 0\n2 0\n3 1\n4 7\n").unwrap();
    let (code, out, _) = run(&["oeis", "--series", "a027349", "--bfile", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("n=4"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_overpartition");
    let ok = Command::new(bin)
        .args(["enumerate", "--class", "rr1-over", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "3,1\n3,1~\n");
    let bad = Command::new(bin)
        .args(["count", "--class", "nope", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
