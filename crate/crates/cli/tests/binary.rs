use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_braidforge"));
    for var in ["TOLERANCE", "ENUM_GUARD", "AUT_GUARD", "RANK_GUARD", "OUTPUT"] {
        c.env_remove(format!("BRAIDFORGE_{var}"));
    }
    c
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braidforge-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, contents: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gauss_sum_of_a_i() {
    let f = write("ai.json", r#"{"group":{"orders":[2]},"values":["0/1","1/4"]}"#);
    let out = run(&["qform", "gauss", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["tau_plus"]["conductor"], 4);
    assert_eq!(v["results"]["tau_plus"]["coeffs"], serde_json::json!(["1/1", "1/1"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn odd_table_is_rejected() {
    let f = write("odd.json", r#"{"group":{"orders":[4]},"values":["0/1","1/8","1/2","3/8"]}"#);
    let out = run(&["qform", "analyze", p(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotEven"));
    assert_eq!(json(&out)["checks"][0]["status"], "fail");
}

#[test]
fn truncated_values_are_rejected() {
    let f = write("short.json", r#"{"group":{"orders":[3]},"values":["0/1","1/3"]}"#);
    assert_eq!(run(&["qform", "gauss", p(&f)]).status.code(), Some(2));
    let f = write("garbage.json", "{\"group\":");
    assert_eq!(run(&["qform", "gauss", p(&f)]).status.code(), Some(2));
    let f = write("missing.json", r#"{"values":["0/1"]}"#);
    assert_eq!(run(&["qform", "gauss", p(&f)]).status.code(), Some(2));
}

#[test]
fn unreduced_fractions_are_normalized() {
    let f = write("unreduced.json", r#"{"group":{"orders":[2]},"values":["0/7","2/8"]}"#);
    let out = run(&["qform", "gauss", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["tau_plus_text"], "1 + E(4)^1");
}

#[test]
fn guard_exceeded_exits_3() {
    let f = write("z8.json", r#"{"group":{"orders":[8]},"values":["0/1","1/16","1/4","9/16","0/1","9/16","1/4","1/16"]}"#);
    assert_eq!(run(&["--enum-guard", "4", "qform", "analyze", p(&f)]).status.code(), Some(3));
    let out = bin()
        .env("BRAIDFORGE_ENUM_GUARD", "4")
        .args(["qform", "analyze", p(&f)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["qform", "analyze", p(&f)]).status.code(), Some(0));
}

#[test]
fn bad_config_exits_2() {
    let f = write("ai2.json", r#"{"group":{"orders":[2]},"values":["0/1","1/4"]}"#);
    assert_eq!(run(&["--tolerance", "0.5", "qform", "gauss", p(&f)]).status.code(), Some(2));
    assert_eq!(run(&["--aut-guard", "0", "qform", "gauss", p(&f)]).status.code(), Some(2));
}

#[test]
fn ising_catalog_report() {
    let out = run(&["catalog", "ising", "--zeta", "1/16", "--eps", "+1"]);
    assert_eq!(out.status.code(), Some(0));
    let f = scratch("ising.json");
    std::fs::write(&f, &out.stdout).unwrap();
    let out = run(&["premodular", "report", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
    // 2ζ^-1 = 2ζ^15 = -2ζ^7 in the power basis of Q(ζ_16)
    let mut want = vec!["0/1"; 8];
    want[7] = "-2/1";
    assert_eq!(v["results"]["tau_plus"]["conductor"], 16);
    assert_eq!(v["results"]["tau_plus"]["coeffs"], serde_json::json!(want));
    assert_eq!(v["results"]["nondegenerate"], true);

    let out = run(&["premodular", "gfp", p(&f)]);
    assert_eq!(json(&out)["results"]["x_class"], 2);
    let out = run(&["premodular", "centralizer", p(&f), "--subring", "0,1"]);
    let v = json(&out);
    assert_eq!(v["results"]["centralizer"], serde_json::json!([0, 1]));
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["premodular", "centralizer", p(&f), "--subring", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_ising_parameters() {
    assert_eq!(run(&["catalog", "ising", "--zeta", "1/8", "--eps", "1"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "ising", "--zeta", "1/16", "--eps", "2"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "ising", "--zeta", "1/16", "--eps", "-1"]).status.code(), Some(0));
}

#[test]
fn pointed_and_product_catalog() {
    let h = write(
        "hyp3.json",
        r#"{"group":{"orders":[3,3]},"values":["0","0","0","0","1/3","2/3","0","2/3","1/3"]}"#,
    );
    let out = run(&["catalog", "pointed", "--form", p(&h)]);
    assert_eq!(out.status.code(), Some(0));
    let d = scratch("pointed.json");
    std::fs::write(&d, &out.stdout).unwrap();
    assert_eq!(run(&["premodular", "report", p(&d)]).status.code(), Some(0));
    let chi = write("chi.json", r#"{"chi":[1,1,1,1,1,1,1,1,-1]}"#);
    assert_eq!(run(&["catalog", "pointed", "--form", p(&h), "--chi", p(&chi)]).status.code(), Some(2));

    let a = write("a.json", r#"{"group":{"orders":[2]},"values":["0/1","1/4"]}"#);
    let out = run(&["catalog", "pointed", "--form", p(&a)]);
    let da = scratch("da.json");
    std::fs::write(&da, &out.stdout).unwrap();
    let out = run(&["catalog", "product", p(&da), p(&d)]);
    assert_eq!(out.status.code(), Some(0));
    let prod: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(prod["ring"]["labels"].as_array().unwrap().len(), 18);
}

#[test]
fn fusion_commands() {
    let ring = r#"{"labels":["1","d","X"],"unit":0,"dual":[0,1,2],"N":[
        [[1,0,0],[0,1,0],[0,0,1]],
        [[0,1,0],[1,0,0],[0,0,1]],
        [[0,0,1],[0,0,1],[1,1,0]]]}"#;
    let f = write("ising_ring.json", ring);
    for op in ["check", "dims", "grading", "subrings"] {
        let out = run(&["fusion", op, p(&f)]);
        assert_eq!(out.status.code(), Some(0), "{op}");
    }
    let v = json(&run(&["fusion", "grading", p(&f)]));
    assert_eq!(v["results"]["group"], serde_json::json!([2]));
    let v = json(&run(&["fusion", "dims", p(&f)]));
    let x = v["results"]["fpdim"][2].as_f64().unwrap();
    assert!((x - 2f64.sqrt()).abs() < 1e-9);
    let broken = ring.replace("[1,1,0]]]", "[1,0,0]]]");
    let f = write("broken_ring.json", &broken);
    assert_eq!(run(&["fusion", "check", p(&f)]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_written_atomically() {
    let f = write("z6.json", r#"{"group":{"orders":[2,3]},"values":["0","1/3","1/3","1/2","5/6","5/6"]}"#);
    let first = run(&["qform", "core", p(&f)]).stdout;
    let second = run(&["qform", "core", p(&f)]).stdout;
    assert_eq!(first, second);
    let out = scratch("core-report.json");
    let o = run(&["--out", p(&out), "qform", "core", p(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), first);
    let text = run(&["--output", "text", "qform", "core", p(&f)]);
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("subject: qform core"));
}

#[test]
fn every_qform_command_runs() {
    let f = write("aa.json", r#"{"group":{"orders":[2,2]},"values":["0/1","1/4","1/4","1/2"]}"#);
    for op in ["analyze", "classify", "gauss", "witt", "core", "wap"] {
        let out = run(&["qform", op, p(&f)]);
        assert_eq!(out.status.code(), Some(0), "{op}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
