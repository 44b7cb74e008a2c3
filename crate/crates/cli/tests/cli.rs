use std::process::{Command, Output};

use serde_json::{json, Value};
use zelisko::format::{matrix_from_json, phi_from_json};
use zelisko::zelisko::{enumerate_members, is_member};

fn zelisko(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zelisko")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = zelisko(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn solve_reproduces_the_z36_example() {
    let v = json_out(&["solve", "33", "30", "--mod", "36"]);
    assert_eq!(v["solutions"], json!([2, 14, 26]));
    assert_eq!(v["ann_generator"], json!(12));
    assert_eq!(v["generating"], json!(true));
    // x0 is an associate of 2: 14 = 2 * 7 with 7 a unit mod 36
    assert_eq!(v["x0"], json!(14));
    let human = stdout(&zelisko(&["solve", "33", "30", "--mod", "36"]));
    assert!(human.contains("{2, 14, 26}"), "{human}");
}

#[test]
fn ann_and_decompose() {
    let v = json_out(&["ann", "8", "--mod", "144"]);
    assert_eq!(v["generator"], json!(18));
    assert_eq!(v["elements"], json!([0, 18, 36, 54, 72, 90, 108, 126]));
    let v = json_out(&["decompose", "30", "--mod", "36"]);
    assert_eq!((v["mu"].clone(), v["unit"].clone()), (json!(6), json!(5)));
    assert_eq!(stdout(&zelisko(&["decompose", "30", "--mod", "36"])), "(6, 5)\n");
}

#[test]
fn negative_numbers_are_elements() {
    let v = json_out(&["decompose", "-6", "--mod", "36"]);
    assert_eq!(v["c"], json!(30));
}

#[test]
fn large_rings_skip_the_listing() {
    let v = json_out(&["solve", "2", "4", "--mod", "1000000000000000000000"]);
    assert_eq!(v["x0"], json!(2));
    assert_eq!(v["solutions"], Value::Null);
    assert_eq!(v["ann_generator"], json!("500000000000000000000"));
}

#[test]
fn polynomial_ring() {
    let v = json_out(&["ann", "[0,1]", "--mod", "[0,1,0,0,1]", "--poly-p", "2"]);
    assert_eq!(v["generator"], json!([1, 0, 0, 1]));
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);
    let phi = r#"{"mod": [0,1,0,0,1], "p": 2, "diag": [[1], [0,1], [0,1,1], [0]]}"#;
    let v = json_out(&["phi-check", phi]);
    assert_eq!(v["case"], json!("i"));
}

#[test]
fn membership_examples() {
    let phi = r#"{"mod": 8, "diag": [2, 4]}"#;
    let yes = zelisko(&["member", r#"{"mod": 8, "rows": [[1, 0], [2, 1]]}"#, phi]);
    assert_eq!(code(&yes), 0);
    assert!(stdout(&yes).starts_with("yes"));

    let no = zelisko(&["member", r#"{"mod": 8, "rows": [[1, 0], [1, 1]]}"#, phi, "--format", "json"]);
    assert_eq!(code(&no), 1);
    let v: Value = serde_json::from_str(&stdout(&no)).unwrap();
    assert_eq!(v["member"], json!(false));
    assert_eq!(v["reason"]["kind"], json!("structure"));
    assert_eq!((v["reason"]["row"].clone(), v["reason"]["col"].clone()), (json!(1), json!(0)));

    let singular = zelisko(&["member", r#"{"mod": 8, "rows": [[2, 0], [0, 1]]}"#, phi, "--format", "json"]);
    assert_eq!(code(&singular), 1);
    assert!(stdout(&singular).contains("not_invertible"));

    for (m, diag) in [(4, "[1, 2, 0]"), (36, "[3, 6, 12]"), (9, "[1, 0]")] {
        let phi = format!(r#"{{"mod": {m}, "diag": {diag}}}"#);
        let n = diag.matches(',').count() + 1;
        let rows: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
        let id = json!({"mod": m, "rows": rows}).to_string();
        assert_eq!(code(&zelisko(&["member", &id, &phi])), 0, "{phi}");
    }
}

#[test]
fn witness_report() {
    let v = json_out(&["witness", r#"{"mod": 8, "rows": [[1, 0], [2, 1]]}"#, r#"{"mod": 8, "diag": [2, 4]}"#]);
    assert_eq!(v["h_phi_eq_phi_s"], json!(true));
    assert_eq!(v["det_equal"], json!(true));
    assert_eq!(v["s"]["rows"], json!([[1, 0], [1, 1]]));
    let no = zelisko(&["witness", r#"{"mod": 8, "rows": [[1, 0], [1, 1]]}"#, r#"{"mod": 8, "diag": [2, 4]}"#]);
    assert_eq!(code(&no), 1);
}

#[test]
fn enumerate_matches_the_oracle() {
    let phi_text = r#"{"mod": 4, "diag": [2, 2]}"#;
    let out = zelisko(&["enumerate", phi_text, "--format", "json"]);
    assert_eq!(code(&out), 0);
    let mut rows = lines(&out);
    let count = rows.pop().unwrap();
    let phi = phi_from_json::<zelisko::euclid::Integer>(&serde_json::from_str(phi_text).unwrap(), None).unwrap();
    let members = enumerate_members(&phi).unwrap();
    assert_eq!(count["count"], json!(members.len()));
    assert_eq!(rows.len(), members.len());
    for (line, h) in rows.iter().zip(&members) {
        let parsed = matrix_from_json(line, None).unwrap();
        assert_eq!(&parsed, h);
        assert!(is_member(&parsed, &phi).unwrap());
    }
}

#[test]
fn enumeration_refuses_instead_of_truncating() {
    let out = zelisko(&["enumerate", r#"{"mod": 8, "diag": [2, 4]}"#, "--bound", "100"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).is_empty());
    let out = zelisko(&["enumerate", r#"{"mod": 16, "diag": [2, 4]}"#]);
    assert_eq!(code(&out), 3);
}

#[test]
fn sample_is_deterministic_and_round_trips() {
    let phi = r#"{"mod": 144, "diag": [1, 2, 12, 24, 0]}"#;
    let args = ["sample", phi, "--seed", "11", "--count", "3", "--format", "json"];
    let a = zelisko(&args);
    let b = zelisko(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let other = zelisko(&["sample", phi, "--seed", "12", "--count", "3", "--format", "json"]);
    assert_ne!(a.stdout, other.stdout);

    for sample in lines(&a) {
        let h = sample["h"].to_string();
        let member = zelisko(&["member", &h, phi]);
        assert_eq!(code(&member), 0);
        let w = json_out(&["witness", &h, phi]);
        assert_eq!(w["s"], sample["s"]);
    }
}

#[test]
fn emitted_json_is_read_back_exactly() {
    let v = json_out(&["phi-check", r#"{"mod": 36, "diag": [5, 3, 6, 0]}"#]);
    assert_eq!(v["phi"], json!({"mod": 36, "diag": [1, 3, 6, 0]}));
    assert_eq!(v["normalized"], json!([0]));
    let again = json_out(&["phi-check", &v["phi"].to_string()]);
    assert_eq!(again["phi"], v["phi"]);

    let snf = json_out(&["snf", r#"{"rows": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]}"#]);
    assert_eq!(snf["diagonal"], json!([2, 6, 12]));
    assert_eq!(snf["uav_eq_d"], json!(true));
    let d = json_out(&["snf", &snf["d"].to_string()]);
    assert_eq!(d["d"], snf["d"]);
}

#[test]
fn files_and_stdin() {
    let dir = std::env::temp_dir().join(format!("zelisko-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let phi = dir.join("phi.json");
    std::fs::write(&phi, r#"{"mod": 8, "diag": [2, 4]}"#).unwrap();
    let v = json_out(&["phi-check", phi.to_str().unwrap()]);
    assert_eq!(v["case"], json!("iii"));

    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_zelisko"))
        .args(["member", "-", phi.to_str().unwrap()])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"mod": 8, "rows": [[3, 0], [2, 1]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_input_exits_with_2() {
    for args in [
        vec!["solve", "1", "2"],
        vec!["solve", "x", "2", "--mod", "8"],
        vec!["ann", "2", "--mod", "1"],
        vec!["ann", "2", "--mod", "[0,1]", "--poly-p", "4"],
        vec!["phi-check", "/nonexistent/phi.json"],
        vec!["phi-check", "{not json"],
        vec!["phi-check", r#"{"mod": 8, "diag": [2, 3]}"#],
        vec!["member", r#"{"mod": 8, "rows": [[1]]}"#, r#"{"mod": 8, "diag": [2, 4]}"#],
        vec!["member", r#"{"mod": 8, "rows": [[1, 0], [0, 1]]}"#, r#"{"mod": 8, "diag": [2, 4]}"#, "--mod", "16"],
        vec!["enumerate", r#"{"mod": 8, "diag": [2, 4]}"#, "--bound", "0"],
        vec!["frobnicate"],
    ] {
        let out = zelisko(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn unsolvable_exits_with_1() {
    let out = zelisko(&["solve", "2", "1", "--mod", "4", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exit"], json!(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no solution"));
}

#[test]
fn verify_quick_passes() {
    let out = zelisko(&["verify", "quick", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], json!(true), "{v}");
    assert_eq!(code(&out), 0);
    assert!(v["checks"].as_array().unwrap().len() >= 9);
}
