use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn foliant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foliant"))
        .args(args)
        .env_remove("FOLIANT_SEED")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const MULT1: &str =
    "(5*x*y*z - y^3 + 2*z^3) d/dx + (-3/2*x^2*y - 3/2*x*z^2 + 9/2*y^2*z) d/dy + (-3*x*y^2) d/dz";
const MULT3: &str = "(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy";

#[test]
fn analyze_reports_invariants() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "m1.fol", MULT1);
    let v = json(&foliant(&["analyze", &f, "--point", "1,0,0"]));
    assert_eq!(v["singularity"]["milnor"], 13);
    assert_eq!(v["singularity"]["multiplicity"], 1);
    assert_eq!(v["singularity"]["unique"], true);
    let f = write(dir.path(), "m3.fol", MULT3);
    let v = json(&foliant(&["analyze", &f, "--point", "1,0,0"]));
    assert_eq!(v["singularity"]["milnor"], 13);
    assert_eq!(v["singularity"]["multiplicity"], 3);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.fol", "(y^2 +) d/dx");
    assert_eq!(foliant(&["analyze", &bad]).status.code(), Some(2));
    let m3 = write(dir.path(), "m3.fol", MULT3);
    assert_eq!(
        foliant(&["analyze", &m3, "--point", "0,1,0"]).status.code(),
        Some(3)
    );
    let null = write(dir.path(), "null.fol", "(x^2) d/dx + (x*y) d/dy + (x*z) d/dz");
    assert_eq!(foliant(&["analyze", &null]).status.code(), Some(4));
    let out = foliant(&[
        "generate", "unstable-m2", "--param", "b11=1", "b02=0", "b21=1", "b12=0", "b03=1",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("b11*b02 != 0 violated"));
}

#[test]
fn classify_examples() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("ss.fol");
    let gen = foliant(&[
        "generate", "ss", "--param", "b02=1", "b21=4", "b12=3", "c12=2", "--out",
        out.to_str().unwrap(),
    ]);
    let g = json(&gen);
    assert_eq!(g["generated"]["milnor"], 13);
    assert_eq!(g["generated"]["multiplicity"], 2);
    let v = json(&foliant(&["classify", out.to_str().unwrap(), "--point", "1,0,0"]));
    assert_eq!(v["verdict"]["class"], "StrictlySemistable");
    assert_eq!(v["verdict"]["certificate"]["kind"], "NormalFormMatch");
    assert_eq!(v["verdict"]["certificate"]["rule"], "ss-theorem");

    let lemma = dir.path().join("lemma.fol");
    json(&foliant(&[
        "generate", "unstable-m2", "--param", "b11=1", "b02=1", "b21=1", "b12=0", "b03=1",
        "--out", lemma.to_str().unwrap(),
    ]));
    let v = json(&foliant(&["classify", lemma.to_str().unwrap(), "--point", "1,0,0"]));
    assert_eq!(v["verdict"]["class"], "Unstable");
    assert_eq!(v["verdict"]["certificate"]["kind"], "DestabilizingPair");
    let lambda = v["verdict"]["certificate"]["lambda"].as_array().unwrap();
    assert_eq!(lambda.len(), 3);
    assert_eq!(lambda.iter().map(|r| r.as_i64().unwrap()).sum::<i64>(), 0);
}

#[test]
fn json_is_byte_identical_and_seed_env_is_honoured() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "dense.fol",
        "(x^3 + y^2*z - 2*x*z^2) d/dx + (x*y*z + z^3 - y^3) d/dy + (x^2*y + 3*z^3) d/dz",
    );
    let a = foliant(&["classify", &f, "--budget", "60", "--seed", "9"]);
    let b = foliant(&["classify", &f, "--budget", "60", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_foliant"))
        .args(["classify", &f, "--budget", "60", "--seed", "1"])
        .env("FOLIANT_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn generate_then_classify_reproduces_catalog_verdicts() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("cat");
    let rows = json(&foliant(&["catalog", "--out-dir", out_dir.to_str().unwrap()]));
    for row in rows.as_array().unwrap() {
        let name = row["name"].as_str().unwrap();
        let file = out_dir.join(format!("{name}.fol"));
        let v = json(&foliant(&["classify", file.to_str().unwrap(), "--point", "1,0,0"]));
        assert_eq!(v["verdict"]["class"], row["verdict"], "{name}");
        assert_eq!(v["singularity"]["milnor"], row["milnor"], "{name}");
    }
}

#[test]
fn stable_family_generation_echoes_validation() {
    let v = json(&foliant(&[
        "generate", "stable-m2", "--param", "a10=1", "a01=2", "a20=-8", "a11=-16", "a02=-8",
        "a30=1", "a21=1", "a12=1", "a03=1",
    ]));
    assert_eq!(v["generated"]["milnor"], 13);
    assert_eq!(v["generated"]["params"]["a11"], "-16");
    let out = foliant(&[
        "generate", "stable-m2", "--param", "a10=1", "a01=2", "a20=-8", "a11=-16", "a02=-8",
        "a30=1", "a21=2", "a12=0", "a03=0",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition (7)"));
}

#[test]
fn weights_dump_and_svg() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "mono.fol", "(y^3) d/dx");
    let svg = dir.path().join("w.svg");
    let v = json(&foliant(&["weights", &f, "--dump", "--svg", svg.to_str().unwrap()]));
    assert_eq!(v["weights"]["classes"], 1);
    assert_eq!(v["weights"]["hull"]["position"], "OriginOutside");
    assert_eq!(v["weights"]["dump"], "4 0 3 : y^3 d/dx\n");
    let text = std::fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches(r#"r="7""#).count(), 1);
}
