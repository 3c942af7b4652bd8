use std::process::Command;

use flipsurf::cli::{run, Outcome};
use flipsurf::fixtures::fixture_names;
use serde_json::Value;

fn call(args: &[&str]) -> Outcome {
    call_with(args, "")
}

fn call_with(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["flipsurf".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    run(&argv, &mut stdin.as_bytes())
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("valid JSON")
}

fn keys(out: &Outcome) -> Vec<String> {
    json(&out.stdout)["triangulations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            t.as_array()
                .unwrap()
                .iter()
                .map(|e| format!("{},{}", e[0], e[1]))
                .collect::<Vec<_>>()
                .join("-")
        })
        .collect()
}

#[test]
fn fixture_verify_reports_components() {
    let out = call(&["fixture", "skew-torus-hexagon", "--verify"]);
    assert_eq!(out.code, 0);
    let report = json(&out.stdout);
    assert_eq!(report["components"], 2);
    assert_eq!(report["all_pass"], true);
}

#[test]
fn enumerate_counts_and_round_trips() {
    let out = call(&["enumerate", "planar-convex-6", "--format", "json"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out.stdout)["count"], 14);
    let ks = keys(&out);
    assert_eq!(ks.len(), 14);
    for k in &ks {
        let v = call(&["verify", "planar-convex-6", "--key", k]);
        assert_eq!(v.code, 0, "{k}");
    }
    // The listed keys parse back to the same canonical sets.
    let again = keys(&call(&["enumerate", "planar-convex-6"]));
    assert_eq!(again, ks);
}

#[test]
fn path_between_components_is_disconnected() {
    let ks = keys(&call(&["enumerate", "skew-torus-hexagon"]));
    let out = call(&["path", "skew-torus-hexagon", "--from", &ks[0], "--to", &ks[1]]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stderr)["error"], "disconnected");
}

#[test]
fn path_methods_agree_on_endpoints() {
    let ks = keys(&call(&["enumerate", "planar-convex-7"]));
    let (a, b) = (&ks[0], &ks[ks.len() - 1]);
    for method in ["bfs", "constructive"] {
        let out = call(&["path", "planar-convex-7", "--from", a, "--to", b, "--method", method]);
        assert_eq!(out.code, 0, "{method}");
        let v = json(&out.stdout);
        assert_eq!(
            v["moves"].as_array().unwrap().len() as u64,
            v["length"].as_u64().unwrap()
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["enumerate", "no-such-fixture"]).code, 2);
    let unknown = call(&["fixture", "no-such-fixture"]);
    assert_eq!(unknown.code, 1);
    assert_eq!(json(&unknown.stderr)["error"], "unknown-fixture");
    let broken = call_with(&["enumerate", "-"], "{ not json");
    assert_eq!(broken.code, 2);
    assert_eq!(json(&broken.stderr)["error"], "malformed");
    let empty = call_with(&["enumerate", "-"], r#"{"surface": {"kind": "plane"}, "vertices": []}"#);
    assert_eq!(empty.code, 2);
    let quad = call(&["triangulate", "torus-non-triangulable-quad"]);
    assert_eq!(quad.code, 1);
    assert_eq!(json(&quad.stderr)["error"], "not-triangulable");
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(
        call(&["path", "planar-convex-5", "--from", "0,2-0,3", "--to", "zz"]).code,
        2
    );
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn failed_verification_prints_report() {
    let out = call(&["verify"]);
    assert_eq!(out.code, 1);
    let reports = json(&out.stdout);
    let failing: Vec<&str> = reports
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["all_pass"] == false)
        .map(|r| r["fixture"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["skew-torus-pointset"]);
    assert_eq!(json(&out.stderr)["error"], "verification-failed");
}

#[test]
fn stdin_input_matches_fixture() {
    let text = call(&["fixture", "torus-non-triangulable-quad"]);
    let scenario = json(&text.stdout)["scenario"].to_string();
    let from_stdin = call_with(&["components", "-"], &scenario);
    let from_name = call(&["components", "torus-non-triangulable-quad"]);
    assert_eq!(from_stdin.code, 0);
    assert_eq!(from_stdin.stdout, from_name.stdout);
    assert_eq!(json(&from_name.stdout)["nodes"], 0);
}

#[test]
fn render_hexagon_with_triangulation() {
    let ks = keys(&call(&["enumerate", "skew-torus-hexagon"]));
    let out = call(&["render", "skew-torus-hexagon", "--key", &ks[0]]);
    assert_eq!(out.code, 0);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"<circle class="vertex""#).count(), 6);
    assert_eq!(svg.matches(r#"<line class="diagonal""#).count(), 3);
    assert_eq!(svg.matches(r#"<line class="edge""#).count(), 6);
}

#[test]
fn render_point_set_without_key() {
    let out = call(&["render", "cylinder-two-boundary-pointset"]);
    assert_eq!(out.code, 0);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches(r#"<circle class="vertex""#).count(), 5);
    assert!(svg.contains(r#"<line class="segment""#));
    assert!(!svg.contains(r#"<line class="diagonal""#));
}

#[test]
fn flip_graph_exports() {
    let dot = call(&["flipgraph", "planar-convex-5", "--format", "dot"]);
    assert_eq!(dot.code, 0);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("graph"));
    let svg = String::from_utf8(call(&["flipgraph", "planar-convex-5", "--format", "svg"]).stdout).unwrap();
    assert_eq!(svg.matches("<circle").count(), 5);
    assert_eq!(svg.matches("<line").count(), 5);
    let j = json(&call(&["flipgraph", "planar-convex-5"]).stdout);
    assert!(j.is_object());
}

#[test]
fn repeated_runs_are_identical() {
    for name in fixture_names().iter().filter(|n| *n != "skew-torus-pointset") {
        for cmd in ["enumerate", "components", "render"] {
            let a = call(&[cmd, name]);
            let b = call(&[cmd, name]);
            assert_eq!(a, b, "{cmd} {name}");
        }
    }
}

#[test]
fn size_bound_from_environment_and_flag() {
    let bin = env!("CARGO_BIN_EXE_flipsurf");
    let limited = Command::new(bin)
        .args(["enumerate", "planar-convex-8"])
        .env("FLIPSURF_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(1));
    assert_eq!(json(&limited.stderr)["error"], "size-bound");
    let flag = Command::new(bin)
        .args(["--max-n", "8", "enumerate", "planar-convex-8"])
        .env("FLIPSURF_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));
    assert_eq!(json(&flag.stdout)["count"], 132);
    let bad = Command::new(bin)
        .args(["enumerate", "planar-convex-4"])
        .env("FLIPSURF_MAX_N", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
