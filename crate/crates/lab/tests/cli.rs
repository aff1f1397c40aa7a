use std::process::Command;

fn lab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kobayashi-lab")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn config(dir: &std::path::Path, body: &str) -> String {
    let p = dir.join("c.json");
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn help_exits_zero() {
    assert_eq!(lab(&["--help"]).0, 0);
    assert_eq!(lab(&["verify", "--help"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lab(&[]).0, 2);
    assert_eq!(lab(&["bogus"]).0, 2);
    assert_eq!(lab(&["verify", "nonsense"]).0, 2);
    assert_eq!(lab(&["sweep"]).0, 2);
    assert_eq!(lab(&["sweep", "--config", "/nonexistent/c.json"]).0, 2);
}

#[test]
fn unknown_domain_exits_two() {
    let d = tempfile::tempdir().unwrap();
    let c = config(d.path(), r#"{"experiment":"geodesic","domain":{"kind":"torus"},"pairs":{"kind":"explicit","pairs":[]}}"#);
    assert_eq!(lab(&["geodesic", "solve", "--config", &c]).0, 2);
}

#[test]
fn domain_info_prints_json() {
    let d = tempfile::tempdir().unwrap();
    let c = config(d.path(), r#"{"experiment":"geodesic","domain":{"kind":"ball","n":2},"pairs":{"kind":"explicit","pairs":[]}}"#);
    let (code, out) = lab(&["domain", "info", "--config", &c]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["diameter"], 2.0);
}

#[test]
fn metric_eval_and_seed_override() {
    let d = tempfile::tempdir().unwrap();
    let c = config(
        d.path(),
        r#"{"experiment":"geodesic","domain":{"kind":"disc"},"pairs":{"kind":"random","count":50,"band":[0.0001,1.0]}}"#,
    );
    let out = |k: &str| d.path().join(k).to_string_lossy().into_owned();
    assert_eq!(lab(&["metric", "eval", "--config", &c, "--out", &out("a"), "--seed", "1"]).0, 0);
    assert_eq!(lab(&["metric", "eval", "--config", &c, "--out", &out("b"), "--seed", "2"]).0, 0);
    let a = std::fs::read_to_string(d.path().join("a/report.csv")).unwrap();
    let b = std::fs::read_to_string(d.path().join("b/report.csv")).unwrap();
    assert!(a.lines().nth(1).unwrap().starts_with("kappa_sandwich_lower,disc,1,"));
    assert_ne!(a, b);
}

#[test]
fn violations_exit_one() {
    let d = tempfile::tempdir().unwrap();
    let c = config(
        d.path(),
        r#"{"experiment":"gehring-hayman","domain":{"kind":"disc"},
            "profile":{"kind":"power","c":1.0,"a":0.5},
            "pairs":{"kind":"boundary","radius":0.99,"theta":[0.1,1.0],"count":4},
            "verify":{"c_gh":0.01}}"#,
    );
    let out = d.path().join("o").to_string_lossy().into_owned();
    assert_eq!(lab(&["verify", "gehring-hayman", "--config", &c, "--out", &out, "--no-plots"]).0, 1);
    assert!(!d.path().join("o/report_gehring_hayman.svg").exists());
    assert!(d.path().join("o/report.csv").exists());
}
