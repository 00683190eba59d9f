//! The `girth5` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use girth5::doc;
use girth5_core::coloring::is_ring_critical;
use girth5_core::weight::graph_weight;

fn girth5(args: &[&str], threads: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_girth5"));
    c.args(args);
    if let Some(t) = threads {
        c.env("GIRTH5_THREADS", t);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit_to(dir: &Path, name: &str, family: &[&str]) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut args = vec!["catalog", "emit"];
    args.extend(family);
    args.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(girth5(&args, None).status.code(), Some(0));
    path
}

#[test]
fn exit_codes() {
    assert_eq!(girth5(&["verify", "s-props"], None).status.code(), Some(0));
    assert_eq!(girth5(&["verify", "s-props", "--budget", "inject_failure=1"], None).status.code(), Some(1));
    assert_eq!(girth5(&["verify", "no-such-suite"], None).status.code(), Some(2));
    assert_eq!(girth5(&["verify", "cyl", "--budget", "cyl_xmax=2"], None).status.code(), Some(2));
    assert_eq!(girth5(&["verify", "cyl", "--budget", "bogus=2"], None).status.code(), Some(2));
    assert_eq!(girth5(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(girth5(&["weigh", "/nonexistent.graph"], None).status.code(), Some(2));
}

#[test]
fn injected_failure_shows_in_json() {
    let o = girth5(&["--json", "verify", "surfineq", "--budget", "inject_failure=1"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert!(cases.iter().any(|c| c["ok"] == false));
}

#[test]
fn weigh_and_critical_agree_with_the_library() {
    let dir = tempfile::tempdir().unwrap();
    for (name, fam) in [
        ("e2.graph", vec!["exceptional", "E2", "9"]),
        ("myc.graph", vec!["mycielski", "5"]),
        ("chain.graph", vec!["chain", "2", "--embedding", "broken"]),
    ] {
        let path = emit_to(dir.path(), name, &fam);
        let g = doc::load(&std::fs::read_to_string(&path).unwrap()).unwrap().0;
        let p = path.to_str().unwrap();

        let v: serde_json::Value = serde_json::from_str(&stdout(&girth5(&["--json", "weigh", p], None))).unwrap();
        assert_eq!(v["weight"], graph_weight(&g).to_string(), "{name}");

        let v: serde_json::Value = serde_json::from_str(&stdout(&girth5(&["--json", "critical", p], None))).unwrap();
        assert_eq!(v["critical"], is_ring_critical(&g).critical, "{name}");
    }
}

#[test]
fn emitted_documents_are_canonical() {
    let dir = tempfile::tempdir().unwrap();
    for (i, fam) in [
        vec!["chain", "2"],
        vec!["chain", "2", "--embedding", "klein"],
        vec!["exceptional", "E4", "11"],
        vec!["tube", "5", "2"],
        vec!["six-ring-triangle"],
    ]
    .into_iter()
    .enumerate()
    {
        let path = emit_to(dir.path(), &format!("{i}.graph"), &fam);
        let text = std::fs::read_to_string(&path).unwrap();
        let again = doc::emit(&doc::parse(&text).unwrap());
        assert_eq!(text, again, "{fam:?}");
        // stdout and --out agree
        let mut args = vec!["catalog", "emit"];
        args.extend(&fam);
        assert_eq!(stdout(&girth5(&args, None)), text);
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let args = ["--json", "verify", "planechar-small", "--budget", "disk_lmax=9", "--budget", "disk_internal=4"];
    let one = girth5(&args, Some("1"));
    let four = girth5(&args, Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, girth5(&args, Some("1")).stdout);
}

#[test]
fn enumerate_writes_an_index() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = girth5(&["enumerate", "--topology", "cylinder", "--ring", "3", "--ring", "3", "--max-internal", "2", "--out", d], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let index: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
    let n = index["count"].as_u64().unwrap() as usize;
    assert!(n > 0);
    let instances = index["instances"].as_array().unwrap();
    assert_eq!(instances.len(), n);
    for inst in instances {
        assert_eq!(inst["critical"], true);
        let text = std::fs::read_to_string(dir.path().join(inst["file"].as_str().unwrap())).unwrap();
        let g = doc::load(&text).unwrap().0;
        assert_eq!(g.n_vertices() as u64, inst["vertices"].as_u64().unwrap());
    }
}
