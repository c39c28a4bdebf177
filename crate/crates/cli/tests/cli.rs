//! End-to-end command tests: every documented exit code and the
//! byte-determinism of reports.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn poly_trefoil_braid() {
    let out = run(&["poly", "--braid", "2: 1 1 1", "--which", "homflypt"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2*v^2 + v^2*z^2 - v^4"), "{text}");
}

#[test]
fn poly_unknot_is_one_everywhere() {
    let out = run(&["poly", "--pd", "unknot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["homflypt", "dubrovnik_delta", "dubrovnik", "kauffman"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with(name) && l.trim_end().ends_with("= 1")),
            "{name} not normalized in:\n{text}"
        );
    }
}

#[test]
fn poly_parse_error_exits_2_with_position() {
    let dir = std::env::temp_dir().join("linkpoly-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "PD[X(1,2,3)]").unwrap();
    let out = run(&["poly", "--pd", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("offset"), "{}", stderr(&out));
}

#[test]
fn poly_crossing_cap_exits_3() {
    let out = run(&["poly", "--braid", "2: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["poly", "--braid", "2: 1 1 1", "--cap", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn approx_qmax_below_floor_exits_4() {
    let out = run(&["approx", "--pd", "unknot", "--qmax", "-1", "--Nmax", "5"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("floor"));
}

#[test]
fn approx_accepts_a_table_file() {
    let dir = std::env::temp_dir().join("linkpoly-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("unknot.json");
    std::fs::write(&table, r#"{"mu":1,"d":0,"entries":[[0,0,"1/1"]]}"#).unwrap();
    let out = run(&[
        "approx",
        "--table",
        table.to_str().unwrap(),
        "--Nmax",
        "10",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\"exact\": \"1/1\""));
    assert!(text.contains("\"final_abs_error\": 0.0"));
}

#[test]
fn verify_single_check_passes() {
    let out = run(&["verify", "--only", "unknot_normalization"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_mutation_fails_with_exit_1() {
    let out = run(&[
        "verify",
        "--only",
        "two_path_w",
        "--mutate",
        "1",
        "--seed",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = [
        "approx", "--braid", "2: 1 1", "--Nmax", "40", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));

    let args = ["lambda", "--Nmax", "3", "--nmax", "2", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn lambda_small_grid_has_exact_zeroth_row() {
    let out = run(&["lambda", "--Nmax", "2", "--nmax", "2", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // lambda_{0,0} = 1 and lambda_{0,n} = 0 for n != 0
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols[0] == "0" {
            let expect = if cols[1] == "0" { "1e0" } else { "0e0" };
            assert_eq!(cols[2], expect, "row: {line}");
            assert_eq!(cols[3], "0e0", "row: {line}");
        }
    }
}
