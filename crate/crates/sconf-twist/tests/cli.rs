use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(root().join("schemas").join(name)).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(schema_name: &str, doc: &Value) {
    let s = schema(schema_name);
    let msgs: Vec<String> = match s.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    assert!(msgs.is_empty(), "{schema_name}: {msgs:?}");
}

fn cli() -> Command {
    let mut c = Command::cargo_bin("sconf-twist").unwrap();
    c.env_remove("SCONF_TWIST_WORKERS");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = cli().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

const SCHUR: [&str; 9] = ["twist", "classify", "--family", "sl4k", "--k", "2", "--qplus", "1,0,0,0;0,0,1,0", "--qminus"];

#[test]
fn classify_schur_matches_golden() {
    let mut args = SCHUR.to_vec();
    args.extend(["zero", "--no-timing"]);
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(out, golden("classify_schur.json"));
    let doc = json(&out);
    assert_eq!(doc["payload"]["label"], "(2,0)");
    assert_valid("report.schema.json", &doc);
    assert_valid("classify.schema.json", &doc["payload"]);
}

#[test]
fn non_nilpotent_exits_one_with_diagnostic() {
    let (code, out, _) =
        run(&["twist", "classify", "--family", "sl4k", "--k", "2", "--qplus", "1,0,0,0;0,0,0,0", "--qminus", "1,0;0,0;0,0;0,0"]);
    assert_eq!(code, 1);
    let doc = json(&out);
    assert_eq!(doc["payload"]["nilpotent"], false);
    let diag = doc["payload"]["diagnostic"].as_str().unwrap();
    assert!(diag.contains("Q+ o Q-"), "{diag}");
    assert_valid("report.schema.json", &doc);
    assert_valid("classify.schema.json", &doc["payload"]);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["twist", "classify", "--family", "bogus", "--k", "2"],
        &["twist", "classify", "--family", "sl4k", "--k", "2", "--qplus", "1,0;0,1", "--qminus", "zero"],
        &["twist", "classify", "--family", "sl4k", "--k", "2", "--qminus", "zero"],
        &["twist", "classify", "--family", "sl4k", "--k", "4", "--qplus", "zero", "--qminus", "zero"],
        &["frobnicate"],
        &["verify", "tables", "--k", "x..3"],
        &["verify", "all", "--only", "9"],
        &["realform", "schur", "--signature", "1,3"],
        &["twist", "canonical", "--k", "5", "--r", "2", "--r-minus", "3"],
    ];
    for args in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.contains("sconf-twist") || err.contains("Usage"), "{args:?}: {err}");
    }
}

#[test]
fn bad_worker_count_is_a_usage_error() {
    let out = cli().env("SCONF_TWIST_WORKERS", "zero").args(["centralizer", "schur"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["verify", "--help"]).0, 0);
}

#[test]
fn tables_markdown_matches_golden() {
    let (code, out, _) = run(&["verify", "tables", "--k", "1..8", "--format", "markdown"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("tables_k1_8.md"));
    // 26 cells plus the header rows
    assert_eq!(out.lines().count(), 28);
}

#[test]
fn tables_json_lists_every_cell() {
    let (code, out, _) = run(&["verify", "tables", "--k", "2,3"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_valid("report.schema.json", &doc);
    assert_eq!(doc["payload"]["cells"].as_array().unwrap().len(), 5);
}

#[test]
fn chiral_and_canonical_golden() {
    let (code, out, _) = run(&["centralizer", "chiral", "--k", "2", "--r", "2", "--no-timing"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("chiral_k2_r2.json"));
    let (code, out, _) = run(&["twist", "canonical", "--k", "3", "--r", "1", "--r-minus", "1", "--no-timing"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("canonical_k3_11.json"));
}

#[test]
fn mismatching_closed_form_exits_one() {
    let (code, out, _) = run(&["centralizer", "chiral", "--k", "3", "--r", "1"]);
    assert_eq!(code, 1);
    let doc = json(&out);
    assert_eq!(doc["payload"]["dim_z"], 18);
    assert_eq!(doc["payload"]["expected"]["dim_z"], 17);
}

#[test]
fn canonical_output_round_trips_through_input_file() {
    let (_, out, _) = run(&["twist", "canonical", "--k", "3", "--r", "1", "--r-minus", "1"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    std::fs::write(&path, serde_json::to_string(&json(&out)["payload"]).unwrap()).unwrap();
    let (code, out, _) = run(&["twist", "classify", "--family", "sl4k", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["payload"]["label"], "(1,1)");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&["centralizer", "schur", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let doc = json(&std::fs::read_to_string(path).unwrap());
    assert_eq!(doc["payload"]["z_conformal_dim"], 11);
}

#[test]
fn other_families_classify() {
    let (code, out, _) = run(&["twist", "classify", "--family", "osp", "--k", "4", "--block", "1,i,0,0;0,0,0,0;0,0,1,i;0,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["payload"]["label"], "rank 2");
    let (code, out, _) = run(&[
        "twist", "classify", "--family", "psl44", "--qplus", "1,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0", "--qminus",
        "0,0,0,0;0,1,0,0;0,0,0,0;0,0,0,0",
    ]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["payload"]["label"], "(1,1)");
    assert_valid("classify.schema.json", &doc["payload"]);
    let zero = "0,0,0,0,0,0,0,0";
    let (code, out, _) = run(&["twist", "classify", "--family", "f4", "--q1", zero, "--q2", zero]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["payload"]["label"], "rank 0");
}

#[test]
fn markdown_generic_rendering() {
    let (code, out, _) = run(&["realform", "schur", "--signature", "lorentzian", "--format", "markdown"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# realform schur"));
    assert!(out.contains("| z_real_dim | 7 |"));
}

#[test]
fn stated_real_dims_mismatch_exits_one() {
    let (code, out, _) = run(&["realform", "schur", "--signature", "4,0"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["payload"]["z_real_dim"], 7);
}

#[test]
fn partial_verify_validates_and_corruption_fails_the_key() {
    let (code, out, _) = run(&["verify", "all", "--only", "7", "--no-timing"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_valid("report.schema.json", &doc);
    assert_valid("verify_all.schema.json", &doc["payload"]);
    let (code, out, _) = run(&["verify", "all", "--only", "7", "--corrupt", "labels:basis-invariance"]);
    assert_eq!(code, 1);
    let doc = json(&out);
    assert_eq!(doc["payload"]["failed_keys"], serde_json::json!(["labels:basis-invariance"]));
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["verify", "all", "--only", "3,7", "--no-timing"];
    let a = cli().args(args).output().unwrap();
    let b = cli().env("SCONF_TWIST_WORKERS", "1").args(args).output().unwrap();
    let c = cli().env("SCONF_TWIST_WORKERS", "3").args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn verify_all_is_byte_identical_across_runs() {
    let args = ["verify", "all", "--seed", "7", "--no-timing"];
    let a = cli().args(args).output().unwrap();
    let b = cli().args(args).output().unwrap();
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    let doc = json(std::str::from_utf8(&a.stdout).unwrap());
    assert_valid("report.schema.json", &doc);
    assert_valid("verify_all.schema.json", &doc["payload"]);
    assert!(doc["payload"]["claim_count"].as_u64().unwrap() >= 40);
    // analysed mismatches make the run fail
    assert_eq!(a.status.code(), Some(1));
}
