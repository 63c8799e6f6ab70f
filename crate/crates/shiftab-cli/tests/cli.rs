use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn shiftab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../shiftab/goldens").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Write `v` to a fresh file under the target temp dir and return its path.
fn temp_json(name: &str, v: &Value) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_asm_prints_both_counts() {
    let o = shiftab(&["count-asm", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "42\n42\n");
}

#[test]
fn verify_square_asm_product() {
    let o = shiftab(&["verify", "--id", "CHAPMAN", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": equal"));
}

#[test]
fn verify_json_round_trips() {
    let o = shiftab(&["verify", "--id", "PROP11_Q", "--n", "2", "--lambda", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: shiftab::identities::IdentityReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.equal);
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<Value>(&stdout(&o)).unwrap());
}

#[test]
fn biject_gl_on_the_worked_example() {
    let g = golden("gl_bijection.json");
    let input = temp_json("gl_input.json", &g["input"]);
    let o = shiftab(&["biject", "gl", "--in", &input, "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["pd"]["rows"], g["pd"]);
    assert_eq!(out["t"]["rows"], g["t"]);

    let pair = temp_json("gl_pair.json", &out);
    let back = shiftab(&["invert", "gl", "--in", &pair, "--json"]);
    assert_eq!(back.status.code(), Some(0));
    let back: Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(back["rows"], g["input"]);
}

#[test]
fn biject_sp_on_the_worked_example() {
    let g = golden("sp_bijection.json");
    let input = temp_json("sp_input.json", &g["input"]);
    let o = shiftab(&["biject", "sp", "--in", &input, "--json", "--trace"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let stair = if out.get("qd").is_some() { &out["qd"] } else { &out["pd"] };
    assert_eq!(stair["rows"], g["qd"]);
    assert_eq!(out["t"]["rows"], g["t"]);
    assert!(out["trace"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn tableau_to_matrix_and_back() {
    let g = golden("asm_gl.json");
    let st = temp_json("asm_st.json", &g["st"]);
    let o = shiftab(&["to-asm", "--in", &st, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let a: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(a["rows"], g["asm"]);

    let path = temp_json("asm_matrix.json", &a);
    let back = shiftab(&["from-asm", "--in", &path, "--json"]);
    assert_eq!(back.status.code(), Some(0));
    let back: Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(back["rows"], g["st"]);

    let cm = shiftab(&["compass", "--in", &path, "--json"]);
    let cm: Value = serde_json::from_str(&stdout(&cm)).unwrap();
    assert_eq!(cm["compass"], g["compass"]);

    let ice = shiftab(&["ice", "--in", &path]);
    assert_eq!(ice.status.code(), Some(0));
    assert!(stdout(&ice).contains('+'));
}

#[test]
fn enumerate_respects_limit() {
    let o = shiftab(&["enumerate", "--n", "2", "--lambda", "1", "--family", "QST", "--limit", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(shiftab(&["verify", "--id", "NO_SUCH", "--n", "2"]).status.code(), Some(2));
    assert_eq!(shiftab(&["count-asm"]).status.code(), Some(2));
    assert_eq!(
        shiftab(&["verify", "--id", "PROP11_Q", "--n", "2", "--lambda", "2", "--ceiling", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        shiftab(&["enumerate", "--n", "2", "--lambda", "1", "--family", "QST", "--ceiling", "3"]).status.code(),
        Some(3)
    );
}

#[test]
fn smoke_suite_is_deterministic() {
    let a = shiftab(&["suite", "--depth", "smoke"]);
    let b = shiftab(&["suite", "--depth", "smoke"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("checks passed\n"));
}
