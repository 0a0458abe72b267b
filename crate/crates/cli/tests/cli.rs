use std::process::Command;

use graphene_cs::basis::landau_component;
use graphene_cs::PhysicsConfig64;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_graphene-cs"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn table(csv_text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn uncertainty_limits_at_origin() {
    for (family, expected) in [("one", 0.25), ("shifted", 1.0), ("cubic", 4.0)] {
        let r = run(&[
            "uncertainty",
            "--family",
            family,
            "--alpha-re",
            "0",
            "--alpha-im",
            "0",
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let (h, rows) = table(&r.stdout);
        assert_eq!(h, ["re_alpha", "im_alpha", "var_z", "var_p", "product"]);
        assert_eq!(rows.len(), 1);
        assert!((num(&rows[0][4]) - expected).abs() < 1e-9);
    }
}

#[test]
fn uncertainty_grid_order_and_point_symmetry() {
    let r = run(&[
        "uncertainty",
        "--family",
        "shifted",
        "--grid-re",
        "-2:2:5",
        "--grid-im",
        "-1:1:3",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (_, rows) = table(&r.stdout);
    assert_eq!(rows.len(), 15);
    // Re runs fastest
    let first: Vec<(f64, f64)> = rows[..6].iter().map(|x| (num(&x[0]), num(&x[1]))).collect();
    assert_eq!(
        first,
        [
            (-2.0, -1.0),
            (-1.0, -1.0),
            (0.0, -1.0),
            (1.0, -1.0),
            (2.0, -1.0),
            (-2.0, 0.0)
        ]
    );
    // alpha -> -alpha is the reversed row order on this symmetric grid
    for (a, b) in rows.iter().zip(rows.iter().rev()) {
        assert_eq!(num(&a[0]), -num(&b[0]));
        assert!((num(&a[4]) - num(&b[4])).abs() < 1e-12 * num(&a[4]));
    }
}

#[test]
fn default_plane_grid() {
    let r = run(&["energy", "--family", "one"]);
    assert_eq!(r.code, 0);
    let (_, rows) = table(&r.stdout);
    assert_eq!(rows.len(), 31 * 31);
    assert_eq!(num(&rows[0][0]), -3.0);
    assert_eq!(num(&rows[rows.len() - 1][1]), 3.0);
}

#[test]
fn energy_examples() {
    let r = run(&["energy", "--family", "one", "--r", "0"]);
    assert_eq!(num(&table(&r.stdout).1[0][2]), 0.0);

    let r = run(&["energy", "--family", "shifted", "--b0", "2", "--r", "0"]);
    assert!((num(&table(&r.stdout).1[0][2]) - 2.0).abs() < 1e-15);

    let grid = ["--grid-re", "-2:2:5", "--grid-im", "-2:2:5"];
    let low = run(&[&["energy", "--family", "one", "--b0", "0.125"], &grid[..]].concat());
    let high = run(&[&["energy", "--family", "one", "--b0", "2"], &grid[..]].concat());
    let (_, low) = table(&low.stdout);
    let (_, high) = table(&high.stdout);
    for (l, h) in low.iter().zip(&high) {
        let (el, eh) = (num(&l[2]), num(&h[2]));
        if eh > 0.0 {
            assert!((el / eh - 0.25).abs() < 1e-14);
        }
    }
}

#[test]
fn density_of_vacuum_is_ground_state() {
    let r = run(&[
        "density", "--family", "one", "--r", "0", "--theta", "0", "--x", "-4:3:29",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    assert_eq!(h, ["x", "r", "theta", "rho"]);
    assert_eq!(rows.len(), 30);
    let cfg = PhysicsConfig64::new(2.0, 1.0).unwrap();
    for row in &rows[..29] {
        let x = num(&row[0]);
        let psi0 = landau_component(&cfg, 0, x).unwrap();
        assert!((num(&row[3]) - psi0 * psi0).abs() < 1e-14);
    }
    assert_eq!(rows[29][0], "integral");
}

#[test]
fn density_figure_sets_are_normalized() {
    for (family, b0) in [
        ("one", "2"),
        ("one", "0.125"),
        ("shifted", "2"),
        ("cubic", "2"),
    ] {
        let r = run(&["density", "--family", family, "--b0", b0]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let (_, rows) = table(&r.stdout);
        let sums: Vec<f64> = rows
            .iter()
            .filter(|r| r[0] == "integral")
            .map(|r| num(&r[3]))
            .collect();
        assert_eq!(sums.len(), 9);
        for s in sums {
            assert!((s - 1.0).abs() < 1e-6, "{family} b0={b0}: {s}");
        }
    }
}

#[test]
fn density_theta_parity() {
    let r = run(&[
        "density",
        "--family",
        "one",
        "--r-list",
        "4",
        "--theta-list",
        "pi/4,-pi/4",
        "--x",
        "-3:6:37",
    ]);
    let (_, rows) = table(&r.stdout);
    let (a, b) = rows.split_at(38);
    for (p, m) in a[..37].iter().zip(&b[..37]) {
        assert_eq!(p[0], m[0]);
        assert!((num(&p[3]) - num(&m[3])).abs() <= 1e-12);
    }
}

#[test]
fn coeffs_report_truncation() {
    let r = run(&[
        "coeffs", "--family", "cubic", "--r", "100", "--theta", "pi/2",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    assert_eq!(
        h,
        [
            "re_alpha",
            "im_alpha",
            "n",
            "re_a",
            "im_a",
            "abs2",
            "trunc_order",
            "tail_bound"
        ]
    );
    let order: usize = rows[0][6].parse().unwrap();
    assert_eq!(rows.len(), order + 1);
    assert!(num(&rows[0][7]) < 1e-15);
    let total: f64 = rows.iter().map(|r| num(&r[5])).sum();
    assert!((total - 1.0).abs() < 1e-12);
    assert_eq!(num(&rows[0][5]) + num(&rows[1][5]), 0.0);
}

#[test]
fn json_envelope() {
    let r = run(&[
        "uncertainty",
        "--family",
        "cubic",
        "--grid-re",
        "0:1:2",
        "--alpha-im",
        "0.5",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["command"], "uncertainty");
    assert_eq!(v["family"], "cubic");
    assert_eq!(v["config"]["omega"], 4.0);
    assert_eq!(v["tol"], 1e-15);
    assert_eq!(v["truncation"]["states"], 2);
    assert_eq!(v["columns"].as_array().unwrap().len(), 5);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    assert_eq!(v["rows"][1][1], 0.5);
}

#[test]
fn output_is_deterministic_and_file_matches_stdout() {
    let args = [
        "density",
        "--family",
        "shifted",
        "--r-list",
        "1,3",
        "--theta-list",
        "0,pi/3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains('\r'));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let c = run(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(c.code, 0);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), a.stdout);
}

#[test]
fn verify_report() {
    let r = run(&["verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert!(v["suite"].is_string());
    assert!(v["errata"].is_array());
    for c in cases {
        for key in ["name", "params", "residual", "tolerance", "pass"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    let eigen = cases
        .iter()
        .filter(|c| c["name"] == "eigen_residual")
        .count();
    assert_eq!(eigen, 36);
    let ortho = cases
        .iter()
        .find(|c| c["name"] == "orthonormality")
        .unwrap();
    assert!(ortho["residual"].as_f64().unwrap() <= 1e-10);
    let floor: Vec<_> = cases
        .iter()
        .filter(|c| c["name"] == "uncertainty_floor")
        .collect();
    assert!(floor.iter().all(|c| c["params"]["violations"] == 0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--format", "csv"]).code, 2);
    assert_eq!(run(&["energy", "--b0", "-1"]).code, 2);
    assert_eq!(run(&["energy", "--tol", "1e-6"]).code, 2);
    assert_eq!(run(&["energy", "--grid-re", "0:1:1"]).code, 2);
    assert_eq!(run(&["energy", "--r", "-1"]).code, 2);
    assert_eq!(run(&["energy", "--family", "quartic"]).code, 2);
    assert_eq!(run(&["energy", "--r", "1", "--grid-re", "0:1:3"]).code, 2);

    // grid points past the truncation cap are reported but do not stop the sweep
    let r = run(&["energy", "--family", "one", "--grid-re", "0:30:3"]);
    assert_eq!(r.code, 3);
    let (_, rows) = table(&r.stdout);
    assert_eq!(rows.len(), 2);
    assert!(r.stderr.contains("alpha=(30, 0)"));
}
