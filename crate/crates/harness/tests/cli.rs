//! End-to-end checks of the installed binary: exit codes, file formats,
//! and reproducibility of emitted artifacts.

use std::process::Command;

fn hyperproc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperproc"))
}

#[test]
fn gen_then_connectivity_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.edges");
    let status = hyperproc()
        .args(["gen", "--n", "40", "--d", "3", "--m", "150", "--seed", "9"])
        .arg("--out")
        .arg(&file)
        .status()
        .unwrap();
    assert!(status.success());

    let out = hyperproc()
        .args(["connectivity", "--k", "2", "--input"])
        .arg(&file)
        .args(["--pair", "1", "40"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"], 40);
    assert_eq!(report["edges"], 150);
    assert!(report["k_connected"].is_boolean());
    assert!(report["pair_cut"].is_number() || report["pair_cut"] == "inseparable");
}

#[test]
fn gen_requires_a_density_flag() {
    let out = hyperproc().args(["gen", "--n", "20"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = hyperproc()
        .args(["sweep", "--bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scale_guard_is_runtime_error() {
    let out = hyperproc()
        .args(["hitting-times", "--n", "20000", "--trials", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("scale guard"), "stderr: {err}");
}

#[test]
fn property_q_k_guard() {
    let out = hyperproc()
        .args(["property-q", "--n", "100", "--k", "4", "--trials", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("quasi.json");
    std::fs::write(
        &config_path,
        serde_json::json!({
            "kind": "quasi-disjoint",
            "n": 60, "d": 3, "k": 2,
            "trials": 5, "master-seed-typo": null
        })
        .to_string(),
    )
    .unwrap();
    // unknown field: config parse failure -> usage error
    let out = hyperproc()
        .args(["quasi", "--config"])
        .arg(&config_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    std::fs::write(
        &config_path,
        serde_json::json!({
            "kind": "quasi-disjoint",
            "n": 60, "d": 3, "k": 2,
            "trials": 5, "master_seed": 11, "omega": 2.0
        })
        .to_string(),
    )
    .unwrap();
    let out = hyperproc()
        .args(["quasi", "--trials", "8", "--config"])
        .arg(&config_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["config"]["trials"], 8); // flag beats file
    assert_eq!(summary["config"]["n"], 60);

    // wrong subcommand for the config kind
    let out = hyperproc()
        .args(["poisson", "--config"])
        .arg(&config_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_runs_emit_identical_bytes() {
    let run = |dir: &std::path::Path| {
        let status = hyperproc()
            .args([
                "sweep", "--n", "100", "--k", "2", "--trials", "30", "--seed", "5", "--c-min",
                "-1", "--c-max", "1", "--c-steps", "3", "--format", "csv",
            ])
            .arg("--out")
            .arg(dir)
            .stdout(std::process::Stdio::null())
            .status()
            .unwrap();
        assert!(status.success());
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run(a.path());
    run(b.path());
    for name in ["rows.csv", "summary.json"] {
        assert_eq!(
            std::fs::read(a.path().join(name)).unwrap(),
            std::fs::read(b.path().join(name)).unwrap(),
            "{name} differs"
        );
    }
}

#[test]
fn csv_format_on_stdout() {
    let out = hyperproc()
        .args([
            "hitting-times",
            "--n",
            "30",
            "--k",
            "2",
            "--trials",
            "4",
            "--seed",
            "3",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "trial,min_degree_step_1,min_degree_step_2,connect_step_1,connect_step_2,equal,quasi_ok"
    );
    assert_eq!(lines.count(), 4);
}
