mod common;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use common::random_ac_drawing;
use fap::io::serialize_ac_drawing;
use fap::AngleSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_fap");

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn fap(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("FAP_TOLERANCE").output().unwrap()
}

fn fap_stdin(args: &[&str], input: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("FAP_TOLERANCE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Compares against `tests/golden/<name>`; rewrites it when `UPDATE_GOLDEN` is set.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn construct_and_validate(args: &[&str], mode: &str) -> u64 {
    let out = scratch(&format!("{}.json", args.join("_").replace('/', "-")));
    let out_s = out.to_str().unwrap();
    let mut full = vec!["--json", "construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", out_s]);
    let o = fap(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let v = fap(&["--json", "validate", "--mode", mode, out_s]);
    let report = json(&v);
    assert_eq!(report["valid"], true, "{args:?}");
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    doc["edges"].as_array().unwrap().len() as u64
}

#[test]
fn every_construction_revalidates() {
    let p6 = data("points6.json");
    let p6 = p6.to_str().unwrap();
    let cases: Vec<(Vec<&str>, &str, u64)> = vec![
        (vec!["collinear", "--n", "6", "--alpha", "1/2pi", "--style", "arc-multi"], "multigraph", 18),
        (vec!["collinear", "--n", "6", "--alpha", "1/4pi", "--style", "arc-simple"], "simple", 9),
        (vec!["collinear", "--n", "6", "--alpha", "2/3pi", "--style", "bend-multi"], "multigraph", 18),
        (vec!["collinear", "--n", "5", "--alpha", "1/2pi", "--style", "bend-simple"], "simple", 9),
        (vec!["small-angle", "--alpha", "1/16pi", p6], "multigraph", 18),
        (vec!["diametric", "--alpha", "1/3pi", p6], "simple", 11),
        (vec!["large-angle", "--alpha", "15/16pi", "--multi", p6], "multigraph", 20),
        (vec!["grid", "--m", "3", "--alpha", "3/4pi"], "multigraph", 18),
    ];
    for (args, mode, edges) in cases {
        assert_eq!(construct_and_validate(&args, mode), edges, "{args:?}");
    }
}

#[test]
fn spec_examples() {
    let o = fap(&["construct", "collinear", "--n", "6", "--alpha", "1/2pi", "--style", "arc-multi", "--json"]);
    assert_eq!(json(&o)["edges"].as_array().unwrap().len(), 18);

    let o = fap(&["bounds", "--n", "10", "--alpha", "1/3pi", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("174"));

    let o = fap_stdin(
        &["--json", "solve", "--family", "arc", "--mode", "simple", "--alpha", "1/4pi", "-"],
        r#"{"points":[[0,0],[1,0],[2,0]]}"#,
        &[],
    );
    assert_eq!(json(&o)["count"], 3);

    let o = fap_stdin(
        &["solve", "--family", "arc", "--mode", "simple", "--alpha", "1/4pi", "-"],
        r#"{"points":[[0,0],[1,0],[2,0]]}"#,
        &[],
    );
    assert!(stdout(&o).contains('3'));
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        (vec!["bounds", "--n", "10", "--alpha", "3/2pi"], "--alpha"),
        (vec!["bounds", "--n", "10", "--alpha", "rad:1.0"], "--alpha"),
        (vec!["bounds", "--n", "10", "--alpha", "third"], "--alpha"),
        (vec!["bounds", "--n", "10", "--alpha", "1/2pi", "--bogus"], "--bogus"),
        (vec!["bounds", "--alpha", "1/2pi"], "--n"),
        (vec!["solve", "--family", "spline", "--alpha", "1/2pi", "x.json"], "--family"),
    ] {
        let o = fap(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(flag), "{args:?}: {}", stderr(&o));
    }
    let o = fap(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let o = fap(&["construct", "collinear", "--n", "2", "--alpha", "1/2pi", "--style", "arc-multi"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fap(&["ac-bound", "--n", "10", "--alpha", "2/3pi"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fap(&["construct", "large-angle", "--alpha", "7/8pi", data("points6.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = fap(&["validate", "/nonexistent/drawing.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fap_stdin(&["validate", "-"], "{not json", &[]);
    assert_eq!(o.status.code(), Some(1));

    let crossing = r#"{"alpha":{"pi_num":1,"pi_den":2},"vertices":[[0,0],[1,0],[2,0],[3,0]],
        "edges":[{"type":"arc","u":0,"v":2,"side":"left"},{"type":"arc","u":1,"v":3,"side":"left"}]}"#;
    let o = fap_stdin(&["--json", "validate", "-"], crossing, &[]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["valid"], false);
}

#[test]
fn tolerance_from_environment() {
    let doc = r#"{"alpha":{"pi_num":1,"pi_den":2},"vertices":[[0,0],[1e-10,0],[2,0]],"edges":[]}"#;
    assert_eq!(fap_stdin(&["validate", "-"], doc, &[]).status.code(), Some(1));
    assert_eq!(fap_stdin(&["validate", "-"], doc, &[("FAP_TOLERANCE", "1e-12")]).status.code(), Some(0));
    let o = fap_stdin(&["validate", "-"], doc, &[("FAP_TOLERANCE", "-1")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("FAP_TOLERANCE"));
}

#[test]
fn render_is_deterministic() {
    let drawing = scratch("render_in.json");
    let d = drawing.to_str().unwrap();
    let o = fap(&["construct", "collinear", "--n", "4", "--alpha", "1/3pi", "--style", "arc-multi", "--out", d]);
    assert_eq!(o.status.code(), Some(0));
    let a = fap(&["render", d]);
    let b = fap(&["render", d]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    golden("render_collinear4_third.svg", &svg);

    let out = scratch("render_out.svg");
    let o = fap(&["render", d, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), svg);
}

#[test]
fn golden_json_outputs() {
    let p6 = data("points6.json");
    let p6 = p6.to_str().unwrap();
    let cases: [(&str, Vec<&str>); 6] = [
        (
            "construct_collinear4_half.json",
            vec!["construct", "collinear", "--n", "4", "--alpha", "1/2pi", "--style", "arc-multi"],
        ),
        ("bounds_10_third.json", vec!["bounds", "--n", "10", "--alpha", "1/3pi"]),
        ("bounds_10_half.json", vec!["bounds", "--n", "10", "--alpha", "1/2pi"]),
        ("ac_bound_10_third.json", vec!["ac-bound", "--n", "10", "--alpha", "1/3pi"]),
        ("thresholds_points6.json", vec!["thresholds", p6]),
        ("diametric_points6.json", vec!["construct", "diametric", "--alpha", "1/3pi", p6]),
    ];
    for (name, args) in cases {
        let mut full = vec!["--json"];
        full.extend(args);
        let o = fap(&full);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap();
        golden(name, &stdout(&o));
    }
}

#[test]
fn segment_commands() {
    let segs = r#"{"segments":[[0,0,4,0],[1,-1,1,3],[0,2,4,2],[3,-1,3,3],[-1,1,5,1]]}"#;
    let v = json(&fap_stdin(&["--json", "segments-select", "--alpha", "1/2pi", "-"], segs, &[]));
    assert_eq!(v["total"], 5);
    assert!(v["selected"].as_array().unwrap().len() >= 3);
    let o = fap_stdin(&["segments-partition", "--alpha", "1/2pi", "-"], segs, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2 classes"));
}

#[test]
fn red_graph_command() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let d = random_ac_drawing(&mut rng, 8, AngleSpec::frac_pi(1, 2), 60);
    let doc = String::from_utf8(serialize_ac_drawing(&d)).unwrap();
    let v = json(&fap_stdin(&["--json", "red-graph", "-"], &doc, &[]));
    assert!(v.is_object());
    let o = fap_stdin(&["red-graph", "--select", "-"], &doc, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}
