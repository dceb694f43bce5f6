use std::io::Write;
use std::process::{Command, Output};

fn gzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gzeta"))
        .args(args)
        .output()
        .expect("run gzeta")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gzeta(args);
    assert!(
        out.status.success(),
        "gzeta {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows of a CSV table, header dropped.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    rows(csv).into_iter().map(|r| r[i].clone()).collect()
}

#[test]
fn exact_zeta_of_the_square_lattice() {
    let out = stdout_of(&["zeta", "--graph", "zd:2", "--s", "-3", "--mode", "exact"]);
    assert_eq!(column(&out, "re"), ["112"]);
    let out = stdout_of(&["zeta", "--graph", "cycle:4", "--s", "-2"]);
    assert_eq!(column(&out, "re"), ["6"]);
}

#[test]
fn mellin_and_closed_agree() {
    let m = stdout_of(&["zeta", "--graph", "zd:1", "--s", "0.25", "--mode", "mellin"]);
    let c = stdout_of(&["zeta", "--graph", "zd:1", "--s", "0.25", "--mode", "closed"]);
    let m: f64 = column(&m, "re")[0].parse().unwrap();
    let c: f64 = column(&c, "re")[0].parse().unwrap();
    assert!((m - c).abs() < 1e-6);
}

#[test]
fn poles_are_flagged_rows() {
    let out = stdout_of(&["zeta", "--graph", "zd:1", "--s", "0:1:0.25"]);
    let notes = column(&out, "note");
    assert_eq!(notes.len(), 5);
    assert_eq!(notes[2], "pole at 0.5");
    assert_eq!(column(&out, "re")[2], "");
}

#[test]
fn incompatible_modes_are_usage_errors() {
    assert_eq!(gzeta(&["zeta", "--graph", "cycle:3", "--s", "0.3", "--mode", "mellin"]).status.code(), Some(2));
    assert_eq!(gzeta(&["zeta", "--graph", "zd:2", "--s", "0.3", "--mode", "closed"]).status.code(), Some(2));
    assert_eq!(gzeta(&["zeta", "--graph", "zd:1", "--s", "0.5", "--mode", "exact"]).status.code(), Some(2));
}

#[test]
fn heat_examples() {
    assert_eq!(rows(&stdout_of(&["heat", "--graph", "zd:1", "--t", "0:0:1"])), [["0", "1"]]);
    let h: f64 = column(&stdout_of(&["heat", "--graph", "cycle:3", "--t", "1:1:1"]), "heat")[0]
        .parse()
        .unwrap();
    assert!((h - (1.0 + 2.0 * (-3.0f64).exp()) / 3.0).abs() < 1e-15);
    let h: f64 = column(&stdout_of(&["heat", "--graph", "zd:2", "--t", "1"]), "heat")[0]
        .parse()
        .unwrap();
    assert!((h - 0.3085083225536712f64.powi(2)).abs() < 1e-15);
    assert_eq!(gzeta(&["heat", "--graph", "zd:1", "--t", "-1"]).status.code(), Some(2));
}

#[test]
fn charpoly_and_forests() {
    let out = stdout_of(&["charpoly", "--cycle", "4"]);
    assert_eq!(column(&out, "coefficient"), ["0", "16", "20", "8", "1"]);
    let exact = stdout_of(&["charpoly", "--graph", "cycle:4"]);
    assert_eq!(out, exact);
    let out = stdout_of(&["forests", "--n", "6", "--brute"]);
    assert!(column(&out, "match").iter().all(|m| m == "true"));
    assert_eq!(column(&out, "count")[0], "36");
}

#[test]
fn regdet_series_is_catalan() {
    let out = stdout_of(&["regdet", "--graph", "zd:1", "--series", "6"]);
    assert_eq!(column(&out, "coefficient"), ["1", "2", "-1", "2", "-5", "14", "-42"]);
    let out = stdout_of(&["regdet", "--graph", "zd:1", "--x", "5"]);
    assert_eq!(column(&out, "regdet"), ["6.8541019662496847"]);
}

#[test]
fn funceq_all_true() {
    let out = stdout_of(&["funceq", "--kmax", "10"]);
    let holds = column(&out, "holds");
    assert_eq!(holds.len(), 11);
    assert!(holds.iter().all(|h| h == "true"));
}

#[test]
fn ihara_outputs() {
    let out = stdout_of(&["ihara", "--graph", "cycle:3", "--u", "0.3"]);
    let v: f64 = column(&out, "re")[0].parse().unwrap();
    assert!((v - 0.973f64.powi(-2)).abs() < 1e-12);
    let out = stdout_of(&["ihara", "--graph", "zd:1", "--u", "0.25:0.75:0.25", "--regularized"]);
    for v in column(&out, "value") {
        assert!((v.parse::<f64>().unwrap() - 1.0).abs() < 1e-12);
    }
    let out = stdout_of(&["ihara", "--graph", "cycle:6", "--u", "0.4", "--functional"]);
    assert_eq!(column(&out, "holds"), ["true"]);
    assert_eq!(gzeta(&["ihara", "--graph", "zd:1", "--u", "0.3"]).status.code(), Some(2));
}

#[test]
fn residue_rows() {
    let out = stdout_of(&["residue", "--d", "2", "--k", "0"]);
    let r: f64 = column(&out, "residue")[0].parse().unwrap();
    assert!((r + 1.0 / (4.0 * std::f64::consts::PI)).abs() < 1e-12);
    assert_eq!(column(&out, "rho_rational"), ["1/4"]);
}

#[test]
fn exit_codes() {
    let bad_spec = gzeta(&["zeta", "--graph", "torus:3", "--s", "1"]);
    assert_eq!(bad_spec.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_spec.stderr).contains("torus"));
    assert!(bad_spec.stdout.is_empty());
    assert_eq!(gzeta(&["regdet", "--graph", "zd:1", "--x", "0"]).status.code(), Some(3));
    assert_eq!(gzeta(&["charpoly", "--graph", "cycle:65"]).status.code(), Some(4));
    assert_eq!(gzeta(&["forests", "--n", "11", "--brute"]).status.code(), Some(4));
    assert_eq!(gzeta(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn graph_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // triangle written out by hand, rooted at vertex 2
    write!(f, r#"{{"vertices": 3, "edges": [[0,1],[1,2],[2,0]], "root": 2}}"#).unwrap();
    let spec = format!("file:{}", f.path().display());
    assert_eq!(
        stdout_of(&["charpoly", "--graph", &spec]),
        stdout_of(&["charpoly", "--cycle", "3"])
    );
    let a = stdout_of(&["heat", "--graph", &spec, "--t", "0:2:0.5"]);
    let b = stdout_of(&["heat", "--graph", "cycle:3", "--t", "0:2:0.5"]);
    let (a, b) = (column(&a, "heat"), column(&b, "heat"));
    for (x, y) in a.iter().zip(&b) {
        let (x, y): (f64, f64) = (x.parse().unwrap(), y.parse().unwrap());
        assert!((x - y).abs() < 1e-12);
    }
    let missing = gzeta(&["heat", "--graph", "file:/no/such/file.json", "--t", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    let mut broken = tempfile::NamedTempFile::new().unwrap();
    write!(broken, r#"{{"vertices": 3, "edges": [[0,1]]}}"#).unwrap();
    let spec = format!("file:{}", broken.path().display());
    assert_eq!(gzeta(&["heat", "--graph", &spec, "--t", "1"]).status.code(), Some(2));
}

#[test]
fn products_and_json() {
    let out = stdout_of(&["--format", "json", "heat", "--graph", "prod:cycle:3,cycle:3", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], serde_json::json!(["t", "heat"]));
    let h = v["rows"][0][1].as_f64().unwrap();
    let single = (1.0 + 2.0 * (-3.0f64).exp()) / 3.0;
    assert!((h - single * single).abs() < 1e-12);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = ["zeta", "--graph", "zd:2", "--s", "-2:1.5:0.25"];
    let one = stdout_of(&[&["--jobs", "1"][..], &args].concat());
    let many = stdout_of(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(one, many);
    assert_eq!(one, stdout_of(&args));
}
