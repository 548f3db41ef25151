use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn blowup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(args)
        .arg("--quiet")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn inputs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("inputs")
}

fn input(name: &str) -> String {
    inputs().join(name).display().to_string()
}

fn tmp_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("blowup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn ex62_is_goto_minimal_with_reduction_number_two() {
    let out = blowup(&["run", "--example", "ex62", "--checks", "jmult,classify,theo1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    let res = &r["results"];
    assert_eq!(res["classify"]["classification"]["r_j"], 2);
    assert_eq!(res["classify"]["classification"]["goto_minimal"], true);
    assert_eq!(res["jmult"]["goto_minimal_j"], true);
    assert_eq!(res["theo1"]["verdict"], "consistent");
    for key in ["R_cm", "G_cm", "F_cm"] {
        assert_eq!(res["theo1"]["values"][key], true, "{key}");
    }
}

#[test]
fn ex63_has_one_extra_generator_and_shallow_algebras() {
    let out = blowup(&["run", "--example", "ex63", "--checks", "classify,depths"]);
    assert_eq!(out.status.code(), Some(0));
    let res = &json(&out)["results"];
    assert_eq!(res["classify"]["reduction_source"], "given");
    assert_eq!(res["classify"]["classification"]["length_im_over_jm"]["finite"], 1);
    assert_eq!(res["depths"]["associated_graded"]["depth"], 0);
    assert_eq!(res["depths"]["fiber"]["depth"], 1);
}

#[test]
fn empty_or_unknown_check_lists_are_input_errors() {
    assert_eq!(
        blowup(&["run", "--example", "ex62", "--checks", ""]).status.code(),
        Some(1)
    );
    assert_eq!(
        blowup(&["run", "--example", "ex62", "--checks", ",,"]).status.code(),
        Some(1)
    );
    assert_eq!(
        blowup(&["run", "--example", "ex62", "--checks", "nope"]).status.code(),
        Some(1)
    );
    assert_eq!(blowup(&["run", "--example", "ex62"]).status.code(), Some(1));
    assert_eq!(blowup(&["run", "--checks", "jmult"]).status.code(), Some(1));
    assert_eq!(
        blowup(&["run", "--example", "ex99", "--checks", "jmult"]).status.code(),
        Some(1)
    );
}

#[test]
fn parse_errors_name_line_and_column() {
    let f = tmp_file("bad.txt", "ring x y\nx^2\n  x*q + y\n");
    let out = blowup(&["run", &f, "--checks", "gs"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 5"), "{err}");
    assert!(err.contains("unknown variable `q`"), "{err}");
}

#[test]
fn same_job_gives_the_same_report() {
    let args = [
        "run",
        "--example",
        "ex61(3,3)",
        "--checks",
        "jmult,gs,core",
        "--seed",
        "7",
    ];
    let (a, b) = (json(&blowup(&args)), json(&blowup(&args)));
    assert_eq!(a["determinism_hash"], b["determinism_hash"]);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timestamps");
        v
    };
    assert_eq!(strip(a.clone()), strip(b));
    let other = json(&blowup(&[
        "run",
        "--example",
        "ex61(3,3)",
        "--checks",
        "jmult,gs,core",
        "--seed",
        "8",
    ]));
    assert_ne!(a["determinism_hash"], other["determinism_hash"]);
    assert_eq!(a["results"]["core"]["equals_im"], true);
}

#[test]
fn family_with_no_samples_is_empty_and_succeeds() {
    let out = blowup(&["family", "3", "5", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["family"]["samples"].as_array().unwrap().len(), 0);
    assert_eq!(r["family"]["disagreements"], 0);
}

#[test]
fn family_without_a_gap_puts_every_sample_inside() {
    // n - d - 1 = 0: the membership test is K ⊆ I + J, true for every K
    let out = blowup(&["family", "3", "4", "5", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let fam = &json(&out)["family"];
    let samples = fam["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 5);
    assert!(samples.iter().all(|s| s["inside"] == true && s["goto_minimal"] == true));
    assert_eq!(fam["agreements"], 5);
}

#[test]
fn family_rejects_bad_shapes() {
    assert_eq!(blowup(&["family", "2", "4", "3"]).status.code(), Some(1));
    assert_eq!(blowup(&["family", "4", "4", "3"]).status.code(), Some(1));
}

#[test]
fn shipped_inputs_never_produce_a_violation() {
    let theorems = "fcm,theo1,hs,almost-goto";
    for name in [
        "ex62.txt",
        "ex63.txt",
        "strongly_stable.txt",
        "maximal_ideal_square.txt",
    ] {
        let out = blowup(&["run", &input(name), "--checks", theorems]);
        let r = json(&out);
        assert_eq!(r["outcome"]["violation"], false, "{name}");
        assert_eq!(r["outcome"]["errors"], false, "{name}");
        assert!(matches!(out.status.code(), Some(0 | 2)), "{name}");
    }
    let out = blowup(&["run", &input("mixed_degree.txt"), "--checks", "gs,depths"]);
    assert_eq!(out.status.code(), Some(0));
    // equigenerated-only checks fail cleanly on mixed degrees
    let out = blowup(&["run", &input("mixed_degree.txt"), "--checks", "jmult"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["results"]["jmult"]["error"]
        .as_str()
        .unwrap()
        .starts_with("jmult:"));
}

#[test]
fn example_corpus_check_meets_hypotheses_or_is_consistent() {
    let out = blowup(&["run", "--checks", "examples"]);
    // some hypotheses fail on the corpus, and no theorem is contradicted
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(
        r["results"]["examples"]["ex63"]["almost-goto"]["verdict"],
        "hypotheses-not-met"
    );
    assert_eq!(r["results"]["examples"]["ex62"]["fcm"]["verdict"], "consistent");
}

#[test]
fn degree_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(["run", "--example", "ex62", "--checks", "depths", "--quiet"])
        .env("BLOWUP_DEGREE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["input"]["budgets"]["degree_cap"], 3);
    assert!(r["results"]["depths"]["error"]
        .as_str()
        .unwrap()
        .contains("degree budget 3"));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("blowup-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = blowup(&[
        "run",
        &input("maximal_ideal_square.txt"),
        "--checks",
        "jmult",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["results"]["jmult"]["j_value"], 4);
}

#[test]
fn hash_is_recomputable_and_schema_lists_the_top_level_fields() {
    use sha2::{Digest, Sha256};
    let mut r = json(&blowup(&["run", "--example", "ex63", "--checks", "classify"]));
    let obj = r.as_object_mut().unwrap();
    obj.remove("timestamps");
    let claimed = obj.remove("determinism_hash").unwrap();
    let hex: String = Sha256::digest(serde_json::to_vec(&r).unwrap())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    assert_eq!(claimed, hex);

    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let required = schema["$defs"]["runReport"]["required"].as_array().unwrap();
    let mut names: Vec<&str> = required.iter().map(|v| v.as_str().unwrap()).collect();
    names.sort();
    assert_eq!(
        names,
        [
            "determinism_hash",
            "input",
            "outcome",
            "results",
            "schema",
            "timestamps"
        ]
    );
    assert_eq!(schema["$defs"]["runReport"]["properties"]["schema"]["const"], 1);
}
