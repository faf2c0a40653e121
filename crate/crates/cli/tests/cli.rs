use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mfkit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mfkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn catalog(name: &str) -> String {
    let o = mfkit(&["catalog", "--name", name], "");
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn factor_prints_the_four_by_four_pair() {
    let o = mfkit(
        &["factor", "--vars", "x,y,z", "--terms", "x^2:y,x^2:z,y:z^2"],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("f = x^2*y + x^2*z + y*z^2\n"));
    assert!(text.contains("[ x^2  -x^2  -y  0   ]"));
    assert!(text.contains("[ 0     -z^2  z    y    ]"));
}

#[test]
fn factor_json_matches_catalog() {
    let o = mfkit(
        &[
            "--json",
            "factor",
            "--vars",
            "x,y,z",
            "--terms",
            "x^2:y,x^2:z,y:z^2",
        ],
        "",
    );
    assert_eq!(stdout(&o), catalog("std-3"));
}

#[test]
fn catalog_output_verifies() {
    for name in ["two-squares", "grouped", "f4", "f8"] {
        let o = mfkit(&["verify"], &catalog(name));
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("document 1: ok"));
    }
    let all = mfkit(&["catalog"], "");
    let o = mfkit(&["verify"], &stdout(&all));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn flipped_sign_fails_with_coordinates() {
    let doc = catalog("two-squares").replacen(r#"["z","-y"]"#, r#"["z","y"]"#, 1);
    let o = mfkit(&["verify"], &doc);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("entry (row 1, col 2) is `2*z*y`"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mfkit(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(mfkit(&["factor", "--vars", "x"], "").status.code(), Some(2));
    assert_eq!(
        mfkit(&["factor", "--vars", "x", "--terms", "x:q"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(mfkit(&["verify"], "{not json").status.code(), Some(2));
    assert_eq!(mfkit(&["verify"], "").status.code(), Some(2));
    assert_eq!(
        mfkit(&["verify", "--file", "/nonexistent.json"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mfkit(&["catalog", "--name", "f16"], "").status.code(),
        Some(2)
    );
}

#[test]
fn rotate_and_reverse_emit_verifiable_json() {
    let seed = catalog("std-3");
    for verb in ["rotate", "reverse"] {
        let o = mfkit(&["--json", verb], &seed);
        assert_eq!(o.status.code(), Some(0));
        let v = mfkit(&["verify"], &stdout(&o));
        assert_eq!(v.status.code(), Some(0), "{verb}");
    }
}

#[test]
fn blockgen_writes_fourteen_pairs() {
    let o = mfkit(&["--json", "blockgen"], &catalog("f8"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 14);
    let text = mfkit(&["blockgen"], &catalog("f4"));
    assert!(stdout(&text).starts_with("hypothesis holds (variant B"));
}

#[test]
fn blockgen_without_hypothesis_exits_one() {
    // diag(x, x) * diag(y, y) = x*y I2 matches neither sign pattern.
    let doc = r#"{"target":"x*y","variables":["x","y"],"verified":false,"factors":[
        {"size":2,"variables":["x","y"],"entries":[["x","0"],["0","x"]]},
        {"size":2,"variables":["x","y"],"entries":[["y","0"],["0","y"]]}]}"#;
    let o = mfkit(&["blockgen"], doc);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("block hypothesis does not hold"));
}

#[test]
fn certify_reports_powers() {
    let o = mfkit(&["certify", "--irreducible"], &catalog("two-squares"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("det       = 1 * f^1"));
    let o = mfkit(&["--json", "certify"], &catalog("grouped"));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["exponent"], 2);
    assert_eq!(doc["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn certify_respects_det_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_mfkit"))
        .args(["certify", "--file", "/dev/stdin"])
        .env("MFKIT_DET_CAP", "4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin
                .take()
                .unwrap()
                .write_all(catalog("f8").as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn orbit_counts() {
    let o = mfkit(&["--json", "orbit"], &catalog("f8"));
    let doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["count"], 16);
    assert_eq!(doc["complete"], true);
    let o = mfkit(&["orbit", "--cap", "3"], &catalog("f4"));
    assert!(stdout(&o).starts_with("orbit size 3 (truncated"));
}
