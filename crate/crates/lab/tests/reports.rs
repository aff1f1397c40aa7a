use kobayashi_lab::config::ExperimentConfig;
use kobayashi_lab::report::{csv_header, csv_string, summary_inputs_from_csv, Summary};
use kobayashi_lab::runner::{config_hash, run, write_outputs};

fn visibility_config(seed: u64) -> ExperimentConfig {
    ExperimentConfig::from_json(&format!(
        r#"{{
          "experiment": "sweep",
          "domain": {{ "kind": "disc" }},
          "profile": {{ "kind": "power", "c": 1.0, "a": 0.5 }},
          "pairs": {{ "kind": "boundary", "radius": 0.99, "theta": [0.01, 1.0], "count": 6 }},
          "seed": {seed}
        }}"#
    ))
    .unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a.is_nan() && b.is_nan()) || (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn csv_is_deterministic() {
    let a = run(&visibility_config(7)).unwrap();
    let b = run(&visibility_config(7)).unwrap();
    assert_eq!(csv_string(&a.rows), csv_string(&b.rows));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn summary_recomputes_from_csv() {
    let bundle = run(&visibility_config(7)).unwrap();
    let inputs = summary_inputs_from_csv(&csv_string(&bundle.rows)).unwrap();
    let again = Summary::from_inputs(&inputs);
    let s = &bundle.summary;
    assert_eq!((again.rows, again.violations, again.skipped), (s.rows, s.violations, s.skipped));
    assert_eq!(again.constants.len(), s.constants.len());
    for (x, y) in again.constants.iter().zip(&s.constants) {
        assert_eq!((&x.id, x.n), (&y.id, y.n));
        assert!(close(x.min, y.min) && close(x.median, y.median) && close(x.max, y.max), "{x:?} vs {y:?}");
    }
    assert_eq!(again.fits.len(), s.fits.len());
    for (x, y) in again.fits.iter().zip(&s.fits) {
        assert!(close(x.slope, y.slope) && close(x.stderr, y.stderr), "{x:?} vs {y:?}");
    }
}

#[test]
fn csv_shape() {
    assert_eq!(csv_string(&[]), csv_header(1) + "\n");
    let header = csv_header(1);
    assert!(header.starts_with("id,domain,m,x_re,x_im,"));
    assert!(header.ends_with(",dist_euclid,delta_x,delta_y,D,L_e,k_up,k_low_best,g_xy,c_vis,C_gh,lambda_cert,pass"));
    let bundle = run(&visibility_config(1)).unwrap();
    let text = csv_string(&bundle.rows[..1]);
    assert_eq!(text.lines().count(), 2);
    assert!(!text.contains('\r'));
    let text = csv_string(&bundle.rows);
    let widths: Vec<usize> = text.lines().map(|l| l.split(',').count()).collect();
    assert!(widths.iter().all(|&w| w == widths[0]));
}

#[test]
fn ball_header_lists_every_coordinate() {
    assert!(csv_header(2).starts_with("id,domain,m,x_re,x_im,x2_re,x2_im,y_re,y_im,y2_re,y2_im,"));
}

#[test]
fn unknown_domain_kind_is_a_config_error() {
    let e = ExperimentConfig::from_json(
        r#"{ "experiment": "geodesic", "domain": { "kind": "torus" }, "pairs": { "kind": "explicit", "pairs": [] } }"#,
    );
    assert!(e.is_err());
}

#[test]
fn missing_profile_is_rejected() {
    let c = ExperimentConfig::from_json(
        r#"{ "experiment": "visibility", "domain": { "kind": "disc" },
             "pairs": { "kind": "explicit", "pairs": [[[[0.1, 0.0]], [[0.2, 0.0]]]] } }"#,
    )
    .unwrap();
    assert!(run(&c).is_err());
}

#[test]
fn oracle_lower_bound_sweep_passes() {
    let c = ExperimentConfig::from_json(
        r#"{ "experiment": "lower-bounds", "domain": { "kind": "disc" },
             "profile": { "kind": "power", "c": 1.0, "a": 0.5 },
             "pairs": { "kind": "random", "count": 60, "band": [0.001, 1.0] },
             "reference": "oracle", "seed": 3 }"#,
    )
    .unwrap();
    let b = run(&c).unwrap();
    assert!(b.summary.rows > 0);
    assert_eq!(b.exit_code(), 0);
}

#[test]
fn geodesic_rows_carry_certificates() {
    let c = ExperimentConfig::from_json(
        r#"{ "experiment": "geodesic", "domain": { "kind": "ball", "n": 2 },
             "pairs": { "kind": "random", "count": 5, "band": [0.01, 1.0] }, "seed": 9 }"#,
    )
    .unwrap();
    let b = run(&c).unwrap();
    assert_eq!(b.rows.len(), 5);
    for r in &b.rows {
        assert!(r.pass);
        assert!(r.lambda_cert.unwrap() >= 1.0 && r.lambda_cert.unwrap() <= 1.1);
        assert!(r.k_low_best.unwrap() <= r.k_up.unwrap());
    }
}

#[test]
fn output_location_does_not_change_the_hash() {
    let a = visibility_config(7);
    let mut b = a.clone();
    b.output.dir = "elsewhere".into();
    assert_eq!(config_hash(&a), config_hash(&b));
    let mut c = a.clone();
    c.seed = 8;
    assert_ne!(config_hash(&a), config_hash(&c));
}

#[test]
fn outputs_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = run(&visibility_config(7)).unwrap();
    let files = write_outputs(&bundle, dir.path(), "r", true).unwrap();
    let names: Vec<String> = files.iter().map(|p| p.file_name().unwrap().to_string_lossy().into_owned()).collect();
    assert_eq!(names, ["r.json", "r.csv", "r_visibility.svg", "r_gehring_hayman.svg"]);
    let svg = std::fs::read_to_string(dir.path().join("r_visibility.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("slope"));
    let again = dir.path().join("again");
    write_outputs(&bundle, &again, "r", true).unwrap();
    assert_eq!(std::fs::read(dir.path().join("r_visibility.svg")).unwrap(), std::fs::read(again.join("r_visibility.svg")).unwrap());
}

#[test]
fn shells_experiment_reports_invariants() {
    let c = ExperimentConfig::from_json(
        r#"{ "experiment": "shells", "domain": { "kind": "disc" },
             "profile": { "kind": "power", "c": 1.0, "a": 0.5 },
             "pairs": { "kind": "random", "count": 8, "band": [0.001, 1.0] }, "seed": 4 }"#,
    )
    .unwrap();
    let b = run(&c).unwrap();
    let inv: Vec<_> = b.rows.iter().filter(|r| r.id == "shell_invariants" || r.id == "shell_concat").collect();
    assert_eq!(inv.len(), 16);
    assert!(inv.iter().all(|r| r.pass));
}
