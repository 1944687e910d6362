use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use quasiord::qo::{catalog, CatalogEntry, QuasiOrder};
use quasiord::ring::Ring;
use serde_json::Value;

fn quasiord(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasiord"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not a report ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn entry(ring: Ring, id: &str) -> CatalogEntry {
    catalog(ring, 23).into_iter().find(|e| e.id() == id).unwrap()
}

/// Walks a report and collects every decision object with its endpoints.
fn decisions<'a>(v: &'a Value, lower: Option<&'a str>, upper: Option<&'a str>, out: &mut Vec<(String, String, &'a Value)>) {
    match v {
        Value::Object(m) => {
            let lo = m.get("lower").and_then(Value::as_str).or(lower);
            let up = m.get("upper").and_then(Value::as_str).or(upper);
            if let (Some(d), Some(lo), Some(up)) = (m.get("decision"), lo, up) {
                out.push((lo.to_string(), up.to_string(), d));
            }
            for x in m.values() {
                decisions(x, lo, up, out);
            }
        }
        Value::Array(a) => a.iter().for_each(|x| decisions(x, lower, upper, out)),
        _ => {}
    }
}

fn assert_witnesses_recheck(ring: Ring, report: &Value) {
    let mut found = Vec::new();
    decisions(&report["results"], None, None, &mut found);
    assert!(!found.is_empty());
    for (lo, up, d) in found {
        if d["status"] != "refuted" {
            continue;
        }
        let (a, b) = (entry(ring, &lo), entry(ring, &up));
        for key in ["witness", "search_witness"] {
            let Some(w) = d.get(key) else { continue };
            let x = ring.parse(w[0].as_str().unwrap()).unwrap();
            let y = ring.parse(w[1].as_str().unwrap()).unwrap();
            assert!(a.le(&x, &y) && !b.le(&x, &y), "{lo} vs {up}: {key} ({x}, {y})");
        }
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(quasiord(&["--ring", "Z", "catalog"], dir.path()).status.code(), Some(0));
    assert_eq!(quasiord(&["--ring", "Z", "check", "Z:leq"], dir.path()).status.code(), Some(0));
    assert_eq!(
        quasiord(&["--ring", "Z", "check", "--mutant", "swap", "Z:vp:2"], dir.path()).status.code(),
        Some(1)
    );
    assert_eq!(quasiord(&["--ring", "W", "catalog"], dir.path()).status.code(), Some(2));
    assert_eq!(quasiord(&["--ring", "QX", "compare", "QX:nope", "QX:w"], dir.path()).status.code(), Some(2));
    assert_eq!(quasiord(&["--ring", "Z", "compare", "Z:leq", "QX:w"], dir.path()).status.code(), Some(2));
    assert_eq!(quasiord(&["frobnicate"], dir.path()).status.code(), Some(2));
}

#[test]
fn catalog_lists_every_entry() {
    let dir = tempfile::tempdir().unwrap();
    for ring in Ring::ALL {
        let out = quasiord(&["--ring", &ring.to_string(), "catalog"], dir.path());
        let report = json(&out);
        assert_eq!(report["command"], "catalog");
        assert_eq!(report["status"], "pass");
        let listed: BTreeSet<&str> =
            report["results"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
        let expected: BTreeSet<String> = catalog(ring, 5).iter().map(|e| e.id().to_string()).collect();
        assert_eq!(listed, expected.iter().map(String::as_str).collect());
        let table = String::from_utf8_lossy(&out.stderr);
        for id in &expected {
            assert!(table.contains(id.as_str()), "{id} missing from table");
        }
        for e in report["results"].as_array().unwrap() {
            let a = entry(ring, e["id"].as_str().unwrap());
            for f in e["facts"].as_array().unwrap() {
                let b = entry(ring, f["other"].as_str().unwrap());
                let Some(w) = f.get("witness") else { continue };
                let x = ring.parse(w[0].as_str().unwrap()).unwrap();
                let y = ring.parse(w[1].as_str().unwrap()).unwrap();
                assert_eq!(f["relation"], "not-finer");
                assert!(a.le(&x, &y) && !b.le(&x, &y), "{} vs {}", a.id(), b.id());
            }
        }
    }
}

#[test]
fn compare_reports_search_witness_or_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = quasiord(&["--ring", "QX", "compare", "QX:vdeg", "QX:w"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["results"]["decision"]["status"], "refuted");
    assert_witnesses_recheck(Ring::PolyUni, &report);

    let report = json(&quasiord(&["--ring", "QX", "compare", "QX:Pa", "QX:w"], dir.path()));
    let d = &report["results"]["decision"];
    assert_eq!(d["status"], "not-refuted");
    assert!(d["pairs_checked"].as_u64().unwrap() > 0);
    assert_eq!(report["results"]["positivity"]["results"][0]["status"], "pass");
}

#[test]
fn tree_dot_edges_are_the_hasse_edges() {
    let dir = tempfile::tempdir().unwrap();
    let out = quasiord(&["--ring", "QX", "--dot", "t.dot", "tree"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let poset = &report["results"]["certificate"]["poset"];
    let hasse: BTreeSet<(String, String, bool)> = poset["hasse"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["lower"].as_str().unwrap().to_string(),
                e["upper"].as_str().unwrap().to_string(),
                e["verified"].as_bool().unwrap(),
            )
        })
        .collect();
    let dot = std::fs::read_to_string(dir.path().join("t.dot")).unwrap();
    let edges: BTreeSet<(String, String, bool)> = dot
        .lines()
        .filter(|l| l.contains("->"))
        .map(|l| {
            let q: Vec<&str> = l.split('"').collect();
            (q[1].to_string(), q[3].to_string(), l.contains("style=solid"))
        })
        .collect();
    assert_eq!(edges, hasse);
    assert!(dot.contains("\"QX:triv:0\" [shape=doublecircle]"));
}

#[test]
fn forest_le_reports_cross_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let out = quasiord(&["--ring", "QX", "--dot", "f.dot", "forest", "--relation", "le"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let r = &report["results"];
    assert_eq!(r["relation"], "le");
    let cross: BTreeSet<(&str, &str)> = r["forest"]["cross_pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["lower"].as_str().unwrap(), p["upper"].as_str().unwrap()))
        .collect();
    assert!(cross.contains(&("QX:w", "QX:triv:X")));
    assert!(cross.contains(&("QX:Pa", "QX:eval0")));
    // Cross pairs join different supports and survive the sweep.
    for p in r["forest"]["cross_pairs"].as_array().unwrap() {
        let lo = entry(Ring::PolyUni, p["lower"].as_str().unwrap());
        let up = entry(Ring::PolyUni, p["upper"].as_str().unwrap());
        assert!(lo.support() != up.support(), "{} {}", lo.id(), up.id());
        assert_eq!(p["decision"]["status"], "not-refuted");
    }
    assert!(dir.path().join("f.dot").exists());
    assert_witnesses_recheck(Ring::PolyUni, &report);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.json"), r#"{"ring": "Z", "bound": 5, "prime_bound": 3}"#).unwrap();
    let report = json(&quasiord(&["--config", "c.json", "catalog"], dir.path()));
    assert_eq!(report["config"]["ring"], "Z");
    assert_eq!(report["config"]["bound"], 5);
    assert_eq!(report["config"]["prime_bound"], 3);
    assert_eq!(report["results"].as_array().unwrap().len(), catalog(Ring::Integers, 3).len());

    let report = json(&quasiord(&["--config", "c.json", "--bound", "7", "catalog"], dir.path()));
    assert_eq!(report["config"]["bound"], 7);

    std::fs::write(dir.path().join("bad.json"), r#"{"rings": "Z"}"#).unwrap();
    assert_eq!(quasiord(&["--config", "bad.json", "catalog"], dir.path()).status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = quasiord(&["--ring", "Z", "--out", "r.json", "check", "Z:vp:2"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("r.json")).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["command"], "check");
    assert_eq!(report["status"], "pass");
}

#[test]
fn corrupted_suite_fails_first_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let out = quasiord(&["suite", "--corrupt"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.lines().any(|l| l.starts_with("FAIL criterion 1")), "{err}");
    assert!(err.contains("first failing criterion: 1"), "{err}");
}
