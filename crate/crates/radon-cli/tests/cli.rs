//! End-to-end tests of the `radon` binary: exit codes, file round trips,
//! golden report and render output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use radon_plane::{fixtures, Tolerance};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_radon"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn body_json(body: &radon_plane::CentrallySymmetricPolygon) -> String {
    let verts: Vec<Vec<f64>> = body.vertices().iter().map(|p| vec![p.a, p.b]).collect();
    serde_json::json!({
        "format": 1,
        "frame": {"v": [1.0, 0.0], "w": [0.0, 1.0]},
        "vertices": verts,
    })
    .to_string()
}

#[test]
fn construct_segment_yields_six_vertex_curve() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"segment"}"#);
    let out = run(
        &["construct", "--input", "arc.json", "--out", "curve.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("curve.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(parsed["format"], 1);
}

#[test]
fn construct_square_yields_six_vertex_curve() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"square"}"#);
    let out = run(
        &["construct", "--input", "arc.json", "--out", "curve.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("curve.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn construct_rejects_nonconvex_arc_naming_the_violation() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "arc.json",
        r#"{"kind":"explicit","vertices":[[0,1],[0.2,0.2],[1,0]]}"#,
    );
    let out = run(
        &["construct", "--input", "arc.json", "--out", "curve.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("convexity"), "stderr: {stderr}");
}

#[test]
fn construct_missing_input_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["construct", "--input", "nope.json", "--out", "curve.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn curve_file_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"lp-arc","p":3.0,"resolution":48}"#);
    let out = run(
        &["construct", "--input", "arc.json", "--out", "curve.json"],
        dir.path(),
    );
    assert!(out.status.success());
    // Re-reading yields bit-identical vertices and ranges versus the
    // in-memory construction.
    let tol = Tolerance::default();
    let arc = fixtures::lp_arc(3.0, 48, &tol).unwrap();
    let curve = radon_plane::RadonCurve::assemble(&arc, &tol).unwrap();
    let text = std::fs::read_to_string(dir.path().join("curve.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let file_verts: Vec<(f64, f64)> = parsed["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| (v[0].as_f64().unwrap(), v[1].as_f64().unwrap()))
        .collect();
    let mem_verts: Vec<(f64, f64)> = curve
        .polygon()
        .vertices()
        .iter()
        .map(|p| (p.a, p.b))
        .collect();
    assert_eq!(file_verts, mem_verts);
    assert_eq!(
        parsed["meta"]["arc1_range"][1].as_u64().unwrap() as usize,
        curve.generator_range().end
    );
    assert_eq!(
        parsed["meta"]["arc2_range"][1].as_u64().unwrap() as usize,
        curve.dual_range().end
    );
}

#[test]
fn verify_constructed_curve_passes_all_checks() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"lp-arc","p":4.0,"resolution":48}"#);
    assert!(run(
        &["construct", "--input", "arc.json", "--out", "curve.json"],
        dir.path()
    )
    .status
    .success());
    let out = run(
        &["verify", "--input", "curve.json", "--seed", "7"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    // All applicable checks appear exactly once and pass.
    let mut names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    names.sort_unstable();
    let mut deduped = names.clone();
    deduped.dedup();
    assert_eq!(names, deduped, "duplicate check records");
    assert!(checks.iter().all(|c| c["pass"].as_bool().unwrap()));
    assert!(names.contains(&"duality") && names.contains(&"norm-antinorm"));
}

#[test]
fn verify_square_fails_the_radon_checks() {
    let dir = tempfile::tempdir().unwrap();
    let square = fixtures::unit_square(&Tolerance::default());
    write(dir.path(), "square.json", &body_json(&square));
    let out = run(&["verify", "--input", "square.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let get = |name: &str| {
        report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == name)
            .unwrap_or_else(|| panic!("check {name} missing"))["pass"]
            .as_bool()
            .unwrap()
    };
    assert!(get("convexity"));
    assert!(get("central-symmetry"));
    assert!(!get("birkhoff-symmetry"));
    assert!(!get("homothety"));
    assert!(!get("constant-area"));
    assert!(!get("bisector"));
}

#[test]
fn verify_rejects_unknown_check_and_seedless_randomized_check() {
    let dir = tempfile::tempdir().unwrap();
    let hexagon = fixtures::hexagon(&Tolerance::default());
    write(dir.path(), "hex.json", &body_json(&hexagon));
    let out = run(
        &["verify", "--input", "hex.json", "--checks", "no-such-check"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &["verify", "--input", "hex.json", "--checks", "norm-antinorm"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &[
            "verify",
            "--input",
            "hex.json",
            "--checks",
            "norm-antinorm",
            "--seed",
            "5",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_report_matches_golden_hexagon_report() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"segment"}"#);
    assert!(run(
        &["construct", "--input", "arc.json", "--out", "hexagon.json"],
        dir.path()
    )
    .status
    .success());
    let out = run(
        &["verify", "--input", "hexagon.json", "--seed", "11"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let got = String::from_utf8(out.stdout).unwrap();
    let golden = include_str!("golden/hexagon_report.json");
    assert_eq!(got.trim_end(), golden.trim_end(), "report drifted from golden file");
}

#[test]
fn eval_hexagon_values() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"segment"}"#);
    assert!(run(
        &["construct", "--input", "arc.json", "--out", "hexagon.json"],
        dir.path()
    )
    .status
    .success());
    let cases = [
        ("norm", "1,1", "2.000000000000\n"),
        ("antinorm", "1,1", "2.000000000000\n"),
        ("norm", "0,0", "0.000000000000\n"),
    ];
    for (mode, vector, expect) in cases {
        let out = run(
            &[
                "eval",
                "--input",
                "hexagon.json",
                "--vector",
                vector,
                "--mode",
                mode,
            ],
            dir.path(),
        );
        assert!(out.status.success());
        assert_eq!(String::from_utf8_lossy(&out.stdout), expect, "{mode} {vector}");
    }
    // Companion mode rejects the zero vector.
    let out = run(
        &[
            "eval",
            "--input",
            "hexagon.json",
            "--vector",
            "0,0",
            "--mode",
            "birkhoff-companion",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_hexagon_with_anticircle_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"segment"}"#);
    assert!(run(
        &["construct", "--input", "arc.json", "--out", "hexagon.json"],
        dir.path()
    )
    .status
    .success());
    let out = run(
        &[
            "render",
            "--input",
            "hexagon.json",
            "--out",
            "hex.svg",
            "--overlay",
            "anticircle",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let got = std::fs::read_to_string(dir.path().join("hex.svg")).unwrap();
    let golden = include_str!("golden/hexagon_anticircle.svg");
    assert_eq!(got, golden, "render drifted from golden file");
}

#[test]
fn render_bisector_overlay_contains_points_and_chords() {
    let dir = tempfile::tempdir().unwrap();
    let square = fixtures::unit_square(&Tolerance::default());
    write(dir.path(), "square.json", &body_json(&square));
    let out = run(
        &[
            "render",
            "--input",
            "square.json",
            "--out",
            "sq.svg",
            "--overlay",
            "bisector=2,0.5",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let svg = std::fs::read_to_string(dir.path().join("sq.svg")).unwrap();
    // 2 axes + square + 2 tangents + 2 chords; 4 construction points + p.
    assert_eq!(svg.matches("<path").count(), 7);
    assert_eq!(svg.matches("<circle").count(), 5);
}

#[test]
fn construct_csv_profile_has_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "arc.json", r#"{"kind":"segment"}"#);
    let out = run(
        &[
            "construct",
            "--input",
            "arc.json",
            "--out",
            "curve.json",
            "--csv",
            "profile.csv",
            "--samples",
            "16",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("profile.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("lambda,s,lower_bound,upper_bound"));
    assert_eq!(csv.lines().count(), 18); // header + 17 grid rows
    // s = max(lambda, 1 - lambda) for the segment arc.
    for line in csv.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!((cols[1] - cols[0].max(1.0 - cols[0])).abs() < 1e-12);
        assert!((cols[1] - cols[2]).abs() < 1e-12);
        assert_eq!(cols[3], 1.0);
    }
}

#[test]
fn verify_csv_defect_sweep_has_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    let hexagon = fixtures::hexagon(&Tolerance::default());
    write(dir.path(), "hex.json", &body_json(&hexagon));
    let out = run(
        &[
            "verify",
            "--input",
            "hex.json",
            "--csv",
            "defects.csv",
            "--samples",
            "256",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("defects.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("sample,defect"));
    assert_eq!(csv.lines().count(), 17); // header + 256/16 ring samples
    for line in csv.lines().skip(1) {
        let defect: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!(defect <= 1e-9);
    }
}
