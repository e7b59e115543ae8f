//! End-to-end tests of the `finspace` binary against the fixtures corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use finspace_cli::PosetDocument;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn assert_golden(args: &[&str], golden: &str) {
    let out = run(args);
    assert!(out.status.success(), "{:?} failed: {}", args, String::from_utf8_lossy(&out.stderr));
    let expected = std::fs::read_to_string(fixtures().join("golden").join(golden)).unwrap();
    assert_eq!(stdout(&out), expected, "golden mismatch for {golden}");
}

#[test]
fn homology_golden() {
    assert_golden(&["homology", &fixture("rp2.json")], "rp2_homology.txt");
    assert_golden(&["homology", &fixture("z_wedge.json")], "z_wedge_homology.txt");
    let out = run(&["homology", &fixture("rp2.json")]);
    assert!(stdout(&out).starts_with("H0=Z, H1=Z/2\n"));
}

#[test]
fn spectral_golden_and_deterministic() {
    assert_golden(&["spectral", &fixture("rp2.json"), "--filtration", "main"], "rp2_spectral.txt");
    let a = run(&["spectral", &fixture("rp2.json"), "--filtration", "main"]);
    let b = run(&["spectral", &fixture("rp2.json"), "--filtration", "main"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cover_golden() {
    assert_golden(
        &["cover", &fixture("rp2.json"), "--coloring", "z2", "--filtration", "main"],
        "rp2_cover.txt",
    );
    let out = run(&["cover", &fixture("rp2.json"), "--coloring", "z2"]);
    assert!(stdout(&out).starts_with("H0=Z, H1=0, H2=Z; pi2=Z\n"));
}

#[test]
fn quasicell_golden_and_witness() {
    assert_golden(
        &["quasicell", &fixture("z_wedge.json"), "--relative", "A"],
        "z_wedge_quasicell.txt",
    );
    // absolute mode is infeasible: domain error with the obstructed element
    let out = run(&["quasicell", &fixture("z_wedge.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("a"));
}

#[test]
fn morse_report_and_forced_complex() {
    let out = run(&["morse", &fixture("morse_remark.json"), "--matching", "m"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("is_morse: true"));
    assert!(text.contains("critical points: a b"));

    assert_golden(
        &["morse", &fixture("morse_remark.json"), "--matching", "m", "--forced"],
        "morse_remark_forced.txt",
    );
    let out = run(&["morse", &fixture("morse_remark.json"), "--matching", "m", "--forced"]);
    assert!(stdout(&out).contains("H0=Z^2"));
}

#[test]
fn mobius_golden_and_methods() {
    assert_golden(&["mobius", &fixture("chain3.json")], "chain3_mobius.txt");
    let out = run(&["mobius", &fixture("chain3.json")]);
    assert!(stdout(&out).starts_with("0\n"));
    let out = run(&["mobius", &fixture("rp2.json"), "--method", "chains"]);
    assert!(stdout(&out).starts_with("0\n"));
    // open-subset method needs a subset name
    let out = run(&["mobius", &fixture("rp2.json"), "--method", "open"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suspend_feeds_back_into_homology() {
    assert_golden(&["suspend", &fixture("circle.json")], "circle_suspend.txt");
    let out = run(&["suspend", &fixture("circle.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points_after"], 6);
    let doc: PosetDocument = serde_json::from_value(v["document"].clone()).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s2.json");
    std::fs::write(&path, doc.to_json()).unwrap();
    let out = run(&["homology", path.to_str().unwrap()]);
    assert!(stdout(&out).starts_with("H0=Z, H1=0, H2=Z\n"));
}

#[test]
fn reduce_and_info() {
    let out = run(&["reduce", &fixture("chain3.json")]);
    assert!(stdout(&out).starts_with("core: 3 -> 1 points"));
    assert_golden(&["info", &fixture("rp2.json")], "rp2_info.txt");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    // malformed JSON
    let p = write("bad.json", "{\"elements\": [");
    assert_eq!(run(&["homology", &p]).status.code(), Some(2));
    // unknown field
    let p = write("unknown.json", "{\"elements\": [\"a\"], \"extra\": 1}");
    assert_eq!(run(&["homology", &p]).status.code(), Some(2));
    // unresolved reference
    let p = write("unres.json", "{\"elements\": [\"a\"], \"relations\": [[\"a\", \"b\"]]}");
    assert_eq!(run(&["homology", &p]).status.code(), Some(2));
    // domain error: cyclic relation
    let p = write("cycle.json", "{\"elements\": [\"a\", \"b\"], \"relations\": [[\"a\", \"b\"], [\"b\", \"a\"]]}");
    assert_eq!(run(&["homology", &p]).status.code(), Some(1));
    // unknown named object
    assert_eq!(
        run(&["spectral", &fixture("rp2.json"), "--filtration", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let out = run(&["homology", &fixture("rp2.json"), "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph poset {"));
    assert!(text.contains("rankdir=BT"));
    assert!(text.contains("\"a\" -> \"d\";"));

    // matched edges are bold, colored edges carry labels
    let out = run(&[
        "morse", &fixture("morse_remark.json"), "--matching", "m", "--forced",
        "--dot", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"c\" -> \"e\" [style=bold,color=blue];"));
}

#[test]
fn bench_table() {
    let out = run(&["bench", &fixtures().to_string_lossy()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rp2"));
    assert!(text.contains("f-gens"));
    // infeasible quasicellular routes show up as dashes, not failures
    assert!(text.contains("morse_remark"));
}

#[test]
fn document_round_trip() {
    for name in ["rp2.json", "z_wedge.json", "morse_remark.json", "circle.json", "chain3.json"] {
        let doc = PosetDocument::from_path(&fixtures().join(name)).unwrap();
        let text = doc.to_json();
        let again: PosetDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, again, "round trip differs for {name}");
    }
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["cover", &fixture("rp2.json"), "--coloring", "z2", "--json"]);
    let b = run(&["cover", &fixture("rp2.json"), "--coloring", "z2", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["points"], 26);
    assert_eq!(v["pi2"]["pi2"]["display"], "Z");
}
