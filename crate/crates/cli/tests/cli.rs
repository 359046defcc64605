use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_incidence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn temp_poset(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn analyze_p8_prints_grade_bijection() {
    let o = run(&["analyze", data("p8.json").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains("S_1->S_8 S_2->S_5 S_3->S_4 S_4->S_7 S_5->S_6 S_6->S_2 S_7->S_3 S_8->S_1"),
        "{text}"
    );
    assert!(text.contains("not a lattice"));

    let o = run(&["analyze", data("p8.json").to_str().unwrap(), "--output", "json"]);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["profile"]["gldim"], 3);
    assert_eq!(v["profile"]["auslander_regular"], true);
    assert_eq!(v["grade_bijection"][0], serde_json::json!(["1", "8"]));
}

#[test]
fn analyze_chain() {
    let o = run(&["analyze", data("chain4.json").to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("gldim 1,"), "{text}");
    assert!(text.contains("Auslander regular: yes, diagonal: yes"));
}

#[test]
fn analyze_antichain_is_not_a_lattice_but_has_a_profile() {
    let f = temp_poset(r#"{"elements": ["a", "b"], "covers": []}"#);
    let o = run(&["analyze", path(&f), "--output=json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["lattice"]["is_lattice"], false);
    assert_eq!(v["profile"]["gldim"], 0);
}

#[test]
fn analyze_reports_forbidden_sublattice() {
    let o = run(&["--output", "json", "analyze", data("pentagon.json").to_str().unwrap()]);
    let v = json(&o);
    assert_eq!(v["lattice"]["distributive"], false);
    assert_eq!(v["lattice"]["forbidden_sublattice"]["kind"], "pentagon");
}

#[test]
fn exit_codes_for_bad_input() {
    let cycle = temp_poset(r#"{"elements": ["a", "b"], "covers": [[0, 1], [1, 0]]}"#);
    assert_eq!(run(&["analyze", path(&cycle)]).status.code(), Some(3));

    let malformed = temp_poset(r#"{"elements": ["a""#);
    assert_eq!(run(&["analyze", path(&malformed)]).status.code(), Some(2));

    assert_eq!(run(&["analyze", "/nonexistent/poset.json"]).status.code(), Some(2));
    assert_eq!(
        run(&["--field", "fp:4", "analyze", data("p8.json").to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let o = run(&["resolve", data("p8.json").to_str().unwrap(), "--module", "simple:nine"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nine"));

    let o = run(&["resolve", data("p8.json").to_str().unwrap(), "--module", "flat:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resolve_injective_over_b4() {
    let b4 = incidence::verify::fixtures::boolean_lattice(4).unwrap();
    let f = temp_poset(&serde_json::to_string(&b4.to_json()).unwrap());
    let o = run(&["resolve", path(&f), "--module", "injective:{4}", "--output", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let terms: Vec<Value> = v["projective_resolution"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["summands"].clone())
        .collect();
    assert_eq!(
        terms,
        vec![
            serde_json::json!(["{}"]),
            serde_json::json!(["{1}", "{2}", "{3}"]),
            serde_json::json!(["{1,2}", "{1,3}", "{2,3}"]),
            serde_json::json!(["{1,2,3}"]),
        ]
    );
    assert_eq!(v["pdim"], 3);
}

#[test]
fn resolve_projective_and_diamond_simple() {
    let o = run(&[
        "resolve",
        data("l9.json").to_str().unwrap(),
        "--module",
        "projective:v3",
        "--output",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["pdim"], 0);
    assert_eq!(v["projective_resolution"].as_array().unwrap().len(), 1);

    let o = run(&[
        "resolve",
        data("diamond.json").to_str().unwrap(),
        "--module",
        "simple:m",
    ]);
    let text = stdout(&o);
    assert!(text.contains("(pdim 2)"), "{text}");
    assert!(text.contains("P_2 = P(M)^2"), "{text}");
}

#[test]
fn verify_p7_passes_with_sentinel() {
    let o = run(&["verify", data("p7.json").to_str().unwrap(), "--output", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let checks = v["report"]["checks"].as_array().unwrap();
    let sentinel = checks
        .iter()
        .find(|c| c["name"] == "auslander_regular_non_lattice_sentinel")
        .unwrap();
    assert_eq!(sentinel["status"], "pass");
}

#[test]
fn verify_pentagon_confirms_gorenstein_failure() {
    let o = run(&["verify", data("pentagon.json").to_str().unwrap(), "--output", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let check = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "not_2_gorenstein")
        .unwrap()
        .clone();
    assert_eq!(check["status"], "pass");
}

#[test]
fn verify_fixtures_over_prime_fields() {
    for field in ["q", "fp:2", "fp:3"] {
        for name in ["p8", "l10", "b4"] {
            let o = run(&["--field", field, "verify", "--fixture", name]);
            assert!(o.status.success(), "{name} over {field}: {}", stdout(&o));
        }
    }
    assert_eq!(run(&["verify", "--fixture", "unknown"]).status.code(), Some(3));
}

#[test]
fn sweep_five() {
    let o = run(&["sweep", "--nmax", "5", "--output", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let counts = v["report"]["sweep"].as_array().unwrap();
    assert_eq!(counts[4]["posets"], 63);
    assert_eq!(counts[4]["ideal_lattices_verified"], 63);
    assert!(v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "fail"));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["verify", "--fixture", "l10", "--output", "json"],
        vec!["analyze", "data", "--output", "json"],
        vec!["sweep", "--nmax", "4", "--output", "json"],
    ] {
        let p8 = data("p8.json");
        let args: Vec<&str> = args
            .iter()
            .map(|&a| if a == "data" { p8.to_str().unwrap() } else { a })
            .collect();
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timings_are_opt_in() {
    let v = json(&run(&["verify", "--fixture", "diamond", "--output", "json"]));
    assert!(v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["millis"].is_null()));
    let v = json(&run(&[
        "verify",
        "--fixture",
        "diamond",
        "--output",
        "json",
        "--timings",
    ]));
    assert!(v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["millis"].is_u64()));
}
