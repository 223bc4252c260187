use std::process::{Command, Output};

use qhopf::cli::{parse_input_str, resolve_builtin, CliError};
use qhopf::twisted::{cyclic_cocycle, FiniteGroup, GroupError};

fn qhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn table_text(w: &qhopf::twisted::Cocycle3) -> String {
    let g = w.group();
    let n = g.order();
    let mut s = String::from("group table\n");
    for row in g.cayley() {
        s.push_str(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        s.push('\n');
    }
    s.push_str(&format!("cocycle table\nroot_order {}\n", w.root_order()));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let e = w.exp(a, b, c);
                if e != 0 {
                    s.push_str(&format!("{a} {b} {c} -> {e}\n"));
                }
            }
        }
    }
    s
}

#[test]
fn exit_zero_when_all_suites_pass() {
    let o = qhopf(&["--example", "zn:3:1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("summary: 7 passed, 0 failed, 0 skipped, exit code 0"), "{text}");
}

#[test]
fn exit_two_on_usage_errors() {
    assert_eq!(qhopf(&[]).status.code(), Some(2));
    assert_eq!(qhopf(&["--example", "zn:2:1", "--input", "x"]).status.code(), Some(2));
    assert_eq!(qhopf(&["--example", "zn:2:1", "--backend", "quad"]).status.code(), Some(2));
    let o = qhopf(&["--example", "zn:2:1", "--check", "axioms,nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite `nonsense`"));
    let o = qhopf(&["--example", "q8:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown example"));
    let o = qhopf(&["--input", "/nonexistent/qhopf-input.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read"));
}

#[test]
fn exit_two_on_invalid_builtin_cocycle() {
    let o = qhopf(&["--example", "v4:a1a2b1c1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("not a normalized 3-cocycle"), "{err}");
    assert!(err.contains("cocycle condition fails at (a,b,c,d)"), "{err}");
}

#[test]
fn json_and_text_reports_are_byte_deterministic() {
    for format in ["json", "text"] {
        let args = ["--example", "zn:4:1", "--report", format];
        let (a, b) = (qhopf(&args), qhopf(&args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format} output differs between runs");
    }
}

#[test]
fn json_report_has_expected_shape() {
    let o = qhopf(&["--example", "zn:2:1", "--check", "theorems", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["spec"]["group_order"], 2);
    assert_eq!(v["spec"]["suites"], serde_json::json!(["theorems"]));
    let labels: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["axioms", "twist", "lemma41", "heisenberg", "theorems"]);
    for s in v["suites"].as_array().unwrap() {
        assert_eq!(s["status"], "pass");
        assert_eq!(s["millis"], 0);
        assert!(!s["discrepancies"].as_array().unwrap().is_empty());
    }
    assert_eq!(v["summary"]["exit_code"], 0);
    assert!(v["summary"].get("float_defects").is_none());
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = qhopf(&["--example", "zn:2:0", "--check", "axioms", "--report", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suites"][0]["label"], "axioms");
}

#[test]
fn float_backend_agrees_with_exact() {
    let o = qhopf(&["--example", "zn:3:2", "--check", "heisenberg", "--backend", "float"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("float cross-check: agrees with exact backend"));
}

#[test]
fn invertibility_note_for_z2() {
    let o = qhopf(&["--example", "zn:2:1", "--check", "invertibility"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("W not invertible"), "{text}");
    assert!(text.contains("at a = 1"), "{text}");
}

#[test]
fn cyclic_stanzas_match_builtin() {
    let (_, w) = parse_input_str("# Z/4, level 1\ngroup cyclic 4\ncocycle cyclic 1\n").unwrap();
    assert_eq!(w, cyclic_cocycle(4, 1));
    let (_, w) = parse_input_str("group product cyclic 2 cyclic 2\ncocycle trivial\n").unwrap();
    assert_eq!(w.group().order(), 4);
    assert!(w.check().is_valid());
}

#[test]
fn explicit_tables_round_trip() {
    for id in ["zn:2:1", "zn:3:2", "v4:a1b2c1+a2b1c2"] {
        let w = resolve_builtin(id).unwrap();
        let (g, parsed) = parse_input_str(&table_text(&w)).unwrap();
        assert_eq!(&g, w.group());
        assert_eq!(parsed, w, "{id}");
    }
}

#[test]
fn latin_square_violation_reports_position() {
    let err = parse_input_str("group table\n0 1 2\n1 1 0\n2 0 1\ncocycle trivial\n").unwrap_err();
    match err {
        CliError::Group { line: 1, source } => {
            assert!(matches!(source, GroupError::RowRepeat { row: 1, value: 1 } | GroupError::ColumnRepeat { .. }), "{source:?}");
        }
        other => panic!("unexpected {other:?}"),
    }
    let err = parse_input_str("group cyclic 3\ncocycle table\nroot_order 3\n0 1 5 -> 1\n").unwrap_err();
    assert!(matches!(err, CliError::Syntax { line: 4, .. }), "{err:?}");
}

#[test]
fn non_cocycle_file_exits_two_with_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    let mut w = cyclic_cocycle(3, 1);
    w.set_exp(1, 2, 1, 1 + w.exp(1, 2, 1) as i64);
    std::fs::write(&path, table_text(&w)).unwrap();
    let o = qhopf(&["--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("not a normalized 3-cocycle"), "{err}");
    assert!(err.contains("cocycle-condition failure(s)"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn cyclic_group_from_table_matches_builtin() {
    let g = FiniteGroup::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
    assert_eq!(g, FiniteGroup::cyclic(3));
}
