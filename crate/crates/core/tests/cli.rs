use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpshift")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap())
        .collect()
}

#[test]
fn eval_plane_json() {
    let o = run(&["--format", "json", "eval", "plane", "--d", "1", "--E", "0"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["command"], "eval");
    let row = &v["rows"][0];
    assert_eq!(row["xi_rho"].as_f64().unwrap(), 0.125);
    assert_eq!(row["regime"], "NR");
    assert_eq!(row["converged"], true);
    let keys: Vec<&str> = row.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys[..3], ["geometry", "d", "R"]);
}

#[test]
fn eval_text_lists_every_field() {
    let o = run(&["eval", "halfplane", "--rho", "1", "--phi", "pi", "--E", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for key in ["xi_rho", "xi_phi", "xi_z", "error_estimate", "dW_iso", "regime"] {
        assert!(
            text.lines().any(|l| l.trim_start().starts_with(key)),
            "{key} missing in\n{text}"
        );
    }
}

#[test]
fn eval_wire_csv_matches_library() {
    let o = run(&["--format", "csv", "eval", "wire", "--R", "1", "--rho", "2", "--E", "1"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    let xi_rho: f64 = rows[0][6].parse().unwrap();
    assert!((xi_rho / 0.041_740_378_016_774_76 - 1.0).abs() < 1e-8);
    // d = R = λ: a regime is reported but flagged as not clear-cut.
    assert_eq!(&rows[0][12], "false");
}

#[test]
fn sweep_is_ordered_and_deterministic() {
    let args = [
        "sweep",
        "halfplane",
        "--var",
        "phi",
        "--min",
        "0.5",
        "--max",
        "pi",
        "--count",
        "6",
        "--rho",
        "1",
        "--E",
        "1",
    ];
    let a = run(&args);
    let b = run(&[&["--jobs", "1"][..], &args[..]].concat());
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let rows = csv_rows(&stdout(&a));
    assert_eq!(rows.len(), 6);
    let phis: Vec<f64> = rows.iter().map(|r| r[4].parse().unwrap()).collect();
    assert!(phis.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(phis[5], std::f64::consts::PI);
}

#[test]
fn sweep_reports_failed_points_in_rows() {
    let o = run(&[
        "sweep",
        "halfplane",
        "--var",
        "phi",
        "--min",
        "1e-9",
        "--max",
        "1",
        "--count",
        "2",
        "--rho",
        "1",
        "--E",
        "1",
    ]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(&rows[0][13], "false");
    assert!(!rows[0][14].is_empty());
    assert_eq!(&rows[1][13], "true");
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 of 2 points failed"));
}

#[test]
fn figure_writes_file() {
    let dir = std::env::temp_dir().join(format!("cpshift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig4.csv");
    let o = run(&[
        "--out",
        path.to_str().unwrap(),
        "figure",
        "fig4_direction",
        "--rho",
        "1",
        "--points",
        "4",
        "--E",
        "50",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = csv_rows(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(rows.len(), 3);
    // The middle angle is the edge direction: straight towards the edge.
    let e_rho: f64 = rows[1][4].parse().unwrap();
    assert!((e_rho + 1.0).abs() < 1e-12);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn regimes_lists_all_six() {
    let o = run(&["regimes"]);
    assert!(o.status.success());
    assert_eq!(csv_rows(&stdout(&o)).len(), 6);
    let o = run(&["regimes", "--d", "0.01", "--R", "1", "--E", "0.001"]);
    assert_eq!(&csv_rows(&stdout(&o))[0][0], "NR_close");
}

#[test]
fn si_units_scale_outputs() {
    let base = run(&["--format", "csv", "eval", "plane", "--d", "1", "--E", "0"]);
    let si = run(&[
        "--format",
        "csv",
        "--units",
        "si",
        "--dipole",
        "1e-29",
        "--length-unit",
        "1e-8",
        "eval",
        "plane",
        "--d",
        "1",
        "--E",
        "0",
    ]);
    let (a, b) = (&csv_rows(&stdout(&base))[0], &csv_rows(&stdout(&si))[0]);
    let ratio: f64 = b[6].parse::<f64>().unwrap() / a[6].parse::<f64>().unwrap();
    assert!((ratio / 1e24 - 1.0).abs() < 1e-12);
    assert!(b[10].parse::<f64>().unwrap() < 0.0);
    assert_eq!(
        run(&["--units", "si", "eval", "plane", "--d", "1", "--E", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn errors_map_to_exit_codes() {
    // Missing argument: clap usage error.
    assert_eq!(run(&["eval", "wire", "--R", "1", "--E", "1"]).status.code(), Some(2));
    // Unparsable number.
    assert_eq!(run(&["eval", "plane", "--d", "abc", "--E", "1"]).status.code(), Some(2));
    // Numerically invalid configuration.
    let o = run(&["eval", "wire", "--R", "1", "--rho", "0.5", "--E", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty() && o.stdout.is_empty());
    // Sweep of a variable the geometry does not have.
    assert_eq!(
        run(&["sweep", "plane", "--var", "phi", "--min", "0", "--max", "1", "--E", "1"])
            .status
            .code(),
        Some(2)
    );
}
