use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gmono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmono")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const IDENTITY_T0: &str = r#"{"side":"right","triple":"laplace-t0",
  "F1":{"poly":[[0,0],[1,0]]},"F2":{"poly":[[0,0],[1,0]]},"F3":{"poly":[]},"F4":{"poly":[]}}"#;

const CONSTANT_LEFT: &str = r#"{"side":"left","triple":{"a1":[0,1],"a2":[0.5,1],"b1":[0,2],"b2":[-0.3,0.7]},
  "F1":{"poly":[[1,2]]},"F2":{"poly":[[0,-1]]},"F3":{"poly":[[3,0]]},"F4":{"poly":[[0,0.5]]}}"#;

const CUBIC_RIGHT: &str = r#"{"side":"right","triple":{"a1":[0.2,1],"a2":[-0.4,0.3],"b1":[0.1,-0.5],"b2":[0.7,0.9]},
  "F1":{"poly":[[1,0],[0,1],[0.5,0],[0,-0.2]]},"F2":{"poly":[[0,0],[1,0],[0,0],[0.3,0.3]]},
  "F3":{"poly":[[0,1],[0.2,0]]},"F4":{"poly":[[0,0],[0,0],[1,-1]]}}"#;

#[test]
fn eval_identity_on_t0() {
    let o = gmono(&["--format", "json", "eval", "--map", IDENTITY_T0, "--point", "1,2,3"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["xi1"], serde_json::json!([1.0, 3.0]));
    assert_eq!(v["xi2"], serde_json::json!([1.0, 2.0]));
    assert_eq!(v["value"]["e"][0], serde_json::json!([1.0, 3.0]));
    assert_eq!(v["value"]["e"][2], serde_json::json!([0.0, 0.0]));
}

#[test]
fn eval_constant_map_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.json", CONSTANT_LEFT);
    let o = gmono(&["--format", "json", "eval", "--map", &path, "--point", "-0.3,4,1e3"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["value"]["e"], serde_json::json!([[1.0, 2.0], [0.0, -1.0], [3.0, 0.0], [0.0, 0.5]]));
}

#[test]
fn eval_out_of_domain_is_input_error() {
    let map = r#"{"side":"right","triple":"laplace-t0",
      "F1":{"series":{"center":[0,0],"coeffs":[[1,0],[1,0]],"radius":1}},"F2":{"poly":[]},"F3":{"poly":[]},"F4":{"poly":[]}}"#;
    let o = gmono(&["eval", "--map", map, "--point", "0.95,0,0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside"));
}

#[test]
fn bad_inputs_exit_2() {
    assert_eq!(code(&gmono(&["eval", "--map", IDENTITY_T0, "--point", "1,2"])), 2);
    assert_eq!(code(&gmono(&["eval", "--map", "/nonexistent/map.json", "--point", "1,2,3"])), 2);
    assert_eq!(code(&gmono(&["solve-char", "--pde", "heat", "--a", "0,0"])), 2);
    let invalid = r#"{"side":"right","triple":{"a1":[1,0],"a2":[1,0],"b1":[2,0],"b2":[2,0]},
      "F1":{"poly":[]},"F2":{"poly":[]},"F3":{"poly":[]},"F4":{"poly":[]}}"#;
    let o = gmono(&["eval", "--map", invalid, "--point", "0,0,0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("triple"));
}

#[test]
fn check_cr_canonical_map_passes() {
    let o = gmono(&["--format", "json", "--step", "1e-5", "--tol", "1e-7", "check-cr", "--map", CUBIC_RIGHT, "--counts", "4"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["summary"]["points"], 64);
    assert_eq!(v["records"].as_array().unwrap().len(), 64);
    assert!(v["summary"]["max"].as_f64().unwrap() <= 1e-7);
}

#[test]
fn check_cr_counterexample_fails_near_one() {
    let o = gmono(&["--format", "json", "check-cr", "--demo", "counterexample"]);
    assert_eq!(code(&o), 1);
    let max = stdout_json(&o)["summary"]["max"].as_f64().unwrap();
    assert!((max - 1.0).abs() <= 1e-3, "{max}");
}

#[test]
fn check_cr_degenerate_box_has_eight_points() {
    let o = gmono(&["--format", "json", "check-cr", "--map", IDENTITY_T0, "--min", "0.5,0.5,0.5", "--max", "0.5,0.5,0.5", "--counts", "2"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["summary"]["points"], 8);
    // records are in grid order regardless of scheduling
    let recs = v["records"].as_array().unwrap();
    assert!(recs.iter().all(|r| r["point"] == serde_json::json!([0.5, 0.5, 0.5])));
}

#[test]
fn solve_char_example5() {
    let o = gmono(&["--format", "json", "solve-char", "--pde", "example5", "--a", "0,1"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    let roots = v["solutions"][0]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 4);
    for r in roots {
        assert!(r["residual"].as_f64().unwrap() <= 1e-12);
        let (re, im) = (r["b"][0].as_f64().unwrap(), r["b"][1].as_f64().unwrap());
        assert!((re.hypot(im) - 1.0).abs() <= 1e-12);
        assert!((re.abs() - 3f64.sqrt() / 2.0).abs() <= 1e-12);
    }
    let triples = v["triples"].as_array().unwrap();
    assert_eq!(triples.len(), 16);
    assert!(triples.iter().any(|t| t["valid"] == Value::Bool(true)));
    // a pair with itself gives dependent vectors
    assert!(triples.iter().any(|t| t["valid"] == Value::Bool(false)));
}

#[test]
fn solve_char_pde_file_and_multiple_a() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "lap.json", r#"{"n":2,"terms":[{"a":2,"b":0,"g":0,"c":1.0},{"a":0,"b":2,"g":0,"c":1.0},{"a":0,"b":0,"g":2,"c":1.0}]}"#);
    let o = gmono(&["--format", "json", "solve-char", "--pde", &path, "--a", "0,0", "--a", "0,0.6"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 2);
    // a = 0.6i: b² = -(1 - 0.36), so b = ±0.8i
    let b = &v["solutions"][1]["roots"][0]["b"];
    assert!((b[1].as_f64().unwrap().abs() - 0.8).abs() <= 1e-12);
}

#[test]
fn laplace_linear_residual_is_rounding() {
    let o = gmono(&["laplace", "--f", r#"{"poly":[[0,0],[1,0]]}"#, "--t", "0.3,0.2", "--counts", "3"]);
    assert_eq!(code(&o), 0);
    let csv = String::from_utf8(o.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,y,z,u,fd_residual"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|s| s.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 27);
    for r in rows {
        assert!(r[4].abs() <= 1e-9);
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS"));
}

#[test]
fn laplace_tolerance_below_truncation_fails() {
    // FD truncation for exp at step 1e-3 is around 1e-7
    let o = gmono(&["--tol", "1e-12", "laplace", "--f", "exp", "--t", "0.3,0.2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn laplace_imaginary_part() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("u.csv");
    let o = gmono(&["laplace", "--f", "w2", "--part", "im", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    // Im (x + i z)² = 2 x z
    let csv = std::fs::read_to_string(&out).unwrap();
    for line in csv.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert!((v[3] - 2.0 * v[0] * v[2]).abs() <= 1e-15);
    }
}

#[test]
fn cauchy_check_constant_and_degenerate() {
    let o = gmono(&["--format", "json", "--tol", "1e-14", "cauchy-check", "--map", CONSTANT_LEFT, "--point", "0.1,0.2,0.3", "--nodes", "16"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert!(v["convergence"][0]["error"].as_f64().unwrap() <= 1e-14);

    // on T0, ξ1 = ξ2 exactly when y = z
    let o = gmono(&["cauchy-check", "--map", IDENTITY_T0, "--point", "0.5,1,1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn cauchy_check_polynomial_table() {
    let o = gmono(&["--format", "json", "cauchy-check", "--map", CUBIC_RIGHT, "--point", "0.3,-0.4,0.2"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    let rows = v["convergence"].as_array().unwrap();
    assert_eq!(rows.iter().map(|r| r["nodes"].as_u64().unwrap()).collect::<Vec<_>>(), vec![32, 64, 128, 256]);
    assert!(rows[3]["error"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn table_json_dump() {
    let o = gmono(&["--format", "json", "table"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["entries"].as_array().unwrap().len(), 16);
    assert_eq!(v["pass"], Value::Bool(true));
    let e34 = v["entries"].as_array().unwrap().iter().find(|e| e["left"] == "e3" && e["right"] == "e4").unwrap();
    assert_eq!(e34["expected"], "e1");
}
