use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn semidual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semidual")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> Output {
    let out = semidual(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_is_deterministic() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [&a, &b] {
        ok(&["gen", "--n", "7", "--m", "50", "--pr", "0.4", "--seed", "3", "--out", p(dir.path())]);
    }
    for f in ["region.json", "lines.csv"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap());
    }
    let lines = fs::read_to_string(a.path().join("lines.csv")).unwrap();
    assert_eq!(lines.lines().count(), 51);
}

#[test]
fn o1_and_oracle_results_are_identical() {
    for (dim, n) in [("2", "9"), ("3", "40")] {
        let d = TempDir::new().unwrap();
        ok(&["gen", "--dim", dim, "--n", n, "--m", "400", "--pr", "0.5", "--seed", "1", "--out", p(d.path())]);
        let region = d.path().join("region.json");
        let lines = d.path().join("lines.csv");
        let mut outs = Vec::new();
        for algo in ["o1", "oracle", "cb"] {
            let out = d.path().join(format!("{algo}.csv"));
            ok(&["clip", "--region", p(&region), "--lines", p(&lines), "--algo", algo, "--verify", "--out", p(&out)]);
            outs.push(fs::read(&out).unwrap());
        }
        assert_eq!(outs[0], outs[1], "o1 vs oracle, dim {dim}");
        assert_eq!(outs[1], outs[2], "cb vs oracle, dim {dim}");
        let text = String::from_utf8(outs[0].clone()).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains(",hit,")).count(), 200);
    }
}

#[test]
fn saved_clipper_gives_same_results() {
    let d = TempDir::new().unwrap();
    ok(&["gen", "--dim", "3", "--n", "24", "--m", "300", "--seed", "2", "--out", p(d.path())]);
    let region = d.path().join("region.json");
    let lines = d.path().join("lines.csv");
    let clipper = d.path().join("clipper.json");
    let built = ok(&["build", "--region", p(&region), "--nk", "5", "--out", p(&clipper)]);
    assert!(String::from_utf8(built.stdout).unwrap().starts_with("dim,n,n_k"));
    let a = ok(&["clip", "--region", p(&region), "--lines", p(&lines), "--clipper", p(&clipper)]).stdout;
    let b = ok(&["clip", "--region", p(&region), "--lines", p(&lines), "--nk", "5"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn malformed_inputs_exit_with_2() {
    let d = TempDir::new().unwrap();
    let bad_region = d.path().join("bad.json");
    fs::write(&bad_region, "{\"vertices\": [[0, 0],\n  [1, 0],\n  [1 1]]}").unwrap();
    let lines = d.path().join("lines.csv");
    fs::write(&lines, "x0,y0,x1,y1\n0,0,1,1\n").unwrap();
    let out = semidual(&["clip", "--region", p(&bad_region), "--lines", p(&lines)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json:3:"), "{err}");

    let region = d.path().join("sq.json");
    fs::write(&region, "{\"vertices\": [[-1,-1],[1,-1],[1,1],[-1,1]]}").unwrap();
    fs::write(&lines, "x0,y0,x1,y1\n0,0,1,1\n0,0,oops,1\n").unwrap();
    let out = semidual(&["clip", "--region", p(&region), "--lines", p(&lines)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lines.csv:3:3"));

    let out = semidual(&["clip", "--region", p(&d.path().join("missing.json")), "--lines", p(&lines)]);
    assert_eq!(out.status.code(), Some(2));

    let clipper = d.path().join("c.json");
    ok(&["build", "--region", p(&region), "--out", p(&clipper)]);
    let text = fs::read_to_string(&clipper).unwrap().replace("\"version\":1", "\"version\":7");
    fs::write(&clipper, text).unwrap();
    fs::write(&lines, "x0,y0,x1,y1\n0,0,1,1\n").unwrap();
    let out = semidual(&["clip", "--region", p(&region), "--lines", p(&lines), "--clipper", p(&clipper)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported clipper version 7"));
}

#[test]
fn corrupted_clipper_is_caught_by_verify() {
    let d = TempDir::new().unwrap();
    let region = d.path().join("sq.json");
    fs::write(&region, "{\"vertices\": [[-1,-1],[1,-1],[1,1],[-1,1]]}").unwrap();
    let clipper = d.path().join("c.json");
    ok(&["build", "--region", p(&region), "--nk", "1", "--nq", "1", "--out", p(&clipper)]);
    // drop every edge from every cell: structurally valid, geometrically wrong
    let text = fs::read_to_string(&clipper).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for g in v["grids"].as_array_mut().unwrap() {
        for c in g["cells"].as_array_mut().unwrap() {
            *c = serde_json::json!([]);
        }
    }
    fs::write(&clipper, v.to_string()).unwrap();
    let lines = d.path().join("lines.csv");
    fs::write(&lines, "x0,y0,x1,y1\n-2,0.1,2,0.2\n").unwrap();
    let out = semidual(&["clip", "--region", p(&region), "--lines", p(&lines), "--clipper", p(&clipper), "--verify"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("algorithms disagree"));
}

#[test]
fn empty_lines_file_gives_header_only() {
    let d = TempDir::new().unwrap();
    let region = d.path().join("sq.json");
    fs::write(&region, "{\"vertices\": [[-1,-1],[1,-1],[1,1],[-1,1]]}").unwrap();
    let lines = d.path().join("lines.csv");
    fs::write(&lines, "x0,y0,x1,y1\n").unwrap();
    let out = ok(&["clip", "--region", p(&region), "--lines", p(&lines)]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "index,status,t_enter,t_exit,ex0,ey0,ex1,ey1\n");
}

#[test]
fn bench_e2_has_table_structure() {
    let out = ok(&["bench-e2", "--n", "3,4,5,10,20,50", "--m", "500", "--pr", "0"]).stdout;
    let text = String::from_utf8(out.clone()).unwrap();
    let mut rows = text.lines();
    assert!(rows.next().unwrap().starts_with("dim,n,m,pr,seed,n_k,n_q,n_m,n_p,prep_cost,cb_cost,o1_cost,v1,v2"));
    assert_eq!(rows.count(), 6);
    assert_eq!(ok(&["bench-e2", "--n", "3,4,5,10,20,50", "--m", "500", "--pr", "0"]).stdout, out);
    let json = ok(&["bench-e2", "--n", "4", "--m", "100", "--format", "json"]).stdout;
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    let wall = ok(&["bench-e2", "--n", "4", "--m", "100", "--wall-clock"]).stdout;
    assert!(String::from_utf8(wall).unwrap().lines().next().unwrap().ends_with("cb_ns_per_line,o1_ns_per_line"));
}

#[test]
fn stats_mean_ael_does_not_grow_with_nk() {
    let out = ok(&["stats", "--n", "10", "--nk", "1,10,100,1000", "--nq", "100"]).stdout;
    let text = String::from_utf8(out).unwrap();
    let means: Vec<f64> = text
        .lines()
        .filter(|l| l.split(',').nth(6) == Some("all"))
        .map(|l| l.split(',').nth(8).unwrap().parse().unwrap())
        .collect();
    assert_eq!(means.len(), 4);
    assert!(means.windows(2).all(|w| w[1] <= w[0]), "{means:?}");
    let out = ok(&["stats", "--dim", "3", "--n", "60", "--nk", "4", "--m", "200"]).stdout;
    let text = String::from_utf8(out).unwrap();
    assert!(text.lines().any(|l| l.split(',').nth(6) == Some("omega")));
    assert_eq!(
        text.lines().filter(|l| matches!(l.split(',').nth(6), Some("1" | "2" | "3" | "4" | "5" | "6"))).count(),
        6
    );
}

#[test]
fn bad_arguments_exit_with_2() {
    let out = semidual(&["bench-e3", "--n", "5", "--m", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = semidual(&["gen", "--n", "5", "--pr", "1.5", "--out", "/tmp/unused-semidual-dir"]);
    assert_eq!(out.status.code(), Some(2));
}
