use std::process::{Command, Output};

use serde_json::Value;

fn fano35(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano35"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn a2_surface_confirms_with_method_failure_note() {
    let out = fano35(&["verify-surface", "--config", "a2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "confirmed");
    assert!(v["notes"][0].as_str().unwrap().starts_with("method failure"));
    let fixtures = v["fixtures"].as_array().unwrap();
    assert!(!fixtures.is_empty());
    for f in fixtures {
        for key in ["id", "paper_location", "samples", "verdict"] {
            assert!(f.get(key).is_some(), "missing {key}");
        }
        for s in f["samples"].as_array().unwrap() {
            for key in ["u", "expected", "computed", "match"] {
                assert!(s.get(key).is_some(), "missing {key}");
            }
        }
    }
    assert!(v["gates"].is_array());
    assert!(v["meta"].is_object());
}

#[test]
fn too_few_samples_is_a_usage_error() {
    let out = fano35(&["verify-surface", "--config", "a1", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least 7"));
}

#[test]
fn threefold_checks_pass() {
    let out = fano35(&["verify-threefold"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("branch integrals 14 and 13/4"));
    assert!(text.contains("verdict: confirmed"));
}

#[test]
fn exit_status_tracks_refutations() {
    let out = fano35(&["verify-surface", "--config", "2a1", "--format", "json"]);
    let v = json(&out);
    let refuted = v["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["verdict"] == "refuted")
        .count();
    assert!(refuted > 0);
    assert_eq!(out.status.code(), Some(1));
    let f = v["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["id"] == "2a1.e4.sw.e4-l24")
        .unwrap();
    assert!(f["note"].as_str().unwrap().contains("4u^3 - 15u^2 + 6u + 17"));
}

#[test]
fn certificate_report_has_exact_value() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = fano35(&["certificate", "--endpoints", "paper", "--format", "json", "--output", path.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["details"]["value"], "78409391764017/80000000000000");
    assert_eq!(v["details"]["certificate_holds"], true);
    let gate = v["gates"].as_array().unwrap().iter().find(|g| g["id"] == "certificate.value").unwrap();
    assert_eq!(gate["passed"], true);
    let expected = if v["refutations"] == 0 { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(expected));
}

#[test]
fn reports_are_deterministic() {
    let a = fano35(&["verify-surface", "--config", "a2", "--format", "json"]);
    let b = fano35(&["verify-surface", "--config", "a2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chamber_dump_is_csv() {
    let out = fano35(&["dump", "--table", "chambers", "--grid", "3", "--config", "a1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("config,flag,u,v_lo,v_hi,n_support,p2_c0,p2_c1,p2_c2"));
    // E4 at u = 3/2: 11/4 - 2v^2 on [0, 1/2]
    assert!(text.lines().any(|l| l == "a1,E4,3/2,0,1/2,,11/4,0,-2"));
}

#[test]
fn csv_report_has_header() {
    let out = fano35(&["verify-threefold", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("kind,id,paper_location,u,expected,computed,match,verdict\n"));
    assert!(text.contains("gate,threefold.s_x"));
}
