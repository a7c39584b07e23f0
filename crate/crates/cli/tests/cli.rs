use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn hopfwit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfwit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn integral_over_q_is_half_sum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let input = data("kc2_q.json");
    let o = hopfwit(&["solve", "integral", "--input", path(&input), "--out", path(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let w: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(w["tag"], "NormalizedIntegral");
    assert_eq!(w["verified"], true);
    assert_eq!(w["data"][0]["entries"], serde_json::json!([["1/2"], ["1/2"]]));
    assert_eq!(w["context"]["input"].as_str().unwrap().len(), 64);

    let v = hopfwit(&["verify", "integral", "--input", path(&input), "--witness", path(&out)]);
    assert_eq!(code(&v), 0);
    assert_eq!(stdout(&v).trim(), "verified");
}

#[test]
fn integral_over_gf2_is_no_witness() {
    let o = hopfwit(&["solve", "integral", "--input", path(&data("kc2_gf2.json"))]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "NoWitness");
}

#[test]
fn h4_passes_hopf_check() {
    let o = hopfwit(&["check", "hopf", "--input", path(&data("h4_q.json"))]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = r["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn failed_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(data("kc2_q.json")).unwrap()).unwrap();
    v["counit"] = serde_json::json!(["1", "0"]);
    std::fs::write(&bad, v.to_string()).unwrap();
    assert_eq!(code(&hopfwit(&["check", "hopf", "--input", path(&bad)])), 1);
}

#[test]
fn solve_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, input) in [
        ("dual-integral", "kc2_q.json"),
        ("idempotent", "kc2_q.json"),
        ("quantum-integral", "kc2_q.json"),
        ("yd-cocasimir", "kc2_q.json"),
        ("theta", "relhopf_kc2_q.json"),
        ("theta", "yd_kc2_q.json"),
        ("cocasimir", "lc_kc2_q.json"),
        ("total-integral", "relhopf_kc2_q.json"),
        ("cointegral", "lc_kc2_q.json"),
    ] {
        let out = dir.path().join(format!("{kind}-{input}"));
        let input = data(input);
        let s = hopfwit(&["solve", kind, "--input", path(&input), "--out", path(&out)]);
        assert_eq!(code(&s), 0, "solve {kind}: {}", String::from_utf8_lossy(&s.stderr));
        let v = hopfwit(&["verify", kind, "--input", path(&input), "--witness", path(&out)]);
        assert_eq!(code(&v), 0, "verify {kind}");
    }
}

#[test]
fn verify_refuses_foreign_context() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    assert_eq!(
        code(&hopfwit(&[
            "solve",
            "integral",
            "--input",
            path(&data("kc2_q.json")),
            "--out",
            path(&out)
        ])),
        0
    );
    let o = hopfwit(&[
        "verify",
        "integral",
        "--input",
        path(&data("kc2_gf2.json")),
        "--witness",
        path(&out),
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn tampered_witness_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let input = data("kc2_q.json");
    hopfwit(&["solve", "integral", "--input", path(&input), "--out", path(&out)]);
    let mut w: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    w["data"][0]["entries"][0][0] = "1".into();
    std::fs::write(&out, w.to_string()).unwrap();
    let o = hopfwit(&["verify", "integral", "--input", path(&input), "--witness", path(&out)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "rejected");
}

#[test]
fn transports_produce_verifiable_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    for (src, dst, dir_name, input) in [
        ("integral", "idempotent", "integral->idempotent", "kc2_q.json"),
        ("theta", "total-integral", "theta->totalintegral", "relhopf_kc2_q.json"),
        ("total-integral", "theta", "totalintegral->theta", "relhopf_kc2_q.json"),
        ("cocasimir", "cointegral", "cocasimir->cointegral", "lc_kc2_q.json"),
    ] {
        let input = data(input);
        let a = dir.path().join(format!("{src}.json"));
        let b = dir.path().join(format!("{dst}-from-{src}.json"));
        assert_eq!(
            code(&hopfwit(&["solve", src, "--input", path(&input), "--out", path(&a)])),
            0
        );
        let t = hopfwit(&[
            "transport",
            "--direction",
            dir_name,
            "--witness",
            path(&a),
            "--input",
            path(&input),
            "--out",
            path(&b),
        ]);
        assert_eq!(code(&t), 0, "{dir_name}: {}", String::from_utf8_lossy(&t.stderr));
        let v = hopfwit(&["verify", dst, "--input", path(&input), "--witness", path(&b)]);
        assert_eq!(code(&v), 0, "{dir_name}");
    }
}

#[test]
fn deform_with_theta_fixes_identity() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("yd_kc2_q.json");
    let theta = dir.path().join("theta.json");
    assert_eq!(
        code(&hopfwit(&[
            "solve",
            "theta",
            "--input",
            path(&input),
            "--out",
            path(&theta)
        ])),
        0
    );
    let o = hopfwit(&[
        "deform",
        "--theta",
        path(&theta),
        "--input",
        path(&input),
        "--map",
        path(&data("yd_module_map.json")),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let map: Value = serde_json::from_str(&std::fs::read_to_string(data("yd_module_map.json")).unwrap()).unwrap();
    assert_eq!(m, map["map"]);
}

#[test]
fn deform_field_extension_kills_conjugation() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("k.json");
    std::fs::write(
        &spec,
        r#"{"kind":"SimpleExt","base":{"kind":"Q"},"minpoly":["-2","0","1"]}"#,
    )
    .unwrap();
    let map = dir.path().join("sigma.json");
    std::fs::write(&map, r#"{"map":{"rows":2,"cols":2,"entries":[["1","0"],["0","-1"]]}}"#).unwrap();
    let o = hopfwit(&["deform", "--fieldext", path(&spec), "--map", path(&map)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(m["entries"], serde_json::json!([["0", "0"], ["0", "0"]]));

    std::fs::write(
        &spec,
        r#"{"kind":"SimpleExt","base":{"kind":"RatFunc","p":2,"var":"s"},"minpoly":["s","0","1"]}"#,
    )
    .unwrap();
    assert_eq!(
        code(&hopfwit(&["deform", "--fieldext", path(&spec), "--map", path(&map)])),
        2
    );
}

#[test]
fn malformed_input_and_usage_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let o = hopfwit(&["check", "hopf", "--input", path(&junk)]);
    assert_eq!(code(&o), 2);
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
    assert_eq!(code(&hopfwit(&["solve", "integral"])), 2);
    assert_eq!(code(&hopfwit(&["frobnicate"])), 2);
    let missing = hopfwit(&["solve", "integral", "--input", "/nonexistent/x.json"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn catalog_filtered_json_report() {
    let o = hopfwit(&["catalog", "--filter", "C2/GF(2)", "--json"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(lines.iter().all(|l| l["entry"] == "C2/GF(2)" && l["pass"] == true));
    let integral = lines.iter().find(|l| l["solver"] == "integral").unwrap();
    assert_eq!(integral["outcome"], "notexists");
    for key in ["entry", "solver", "outcome", "expected", "pass"] {
        assert!(integral.get(key).is_some());
    }
}
