//! End-to-end checks of the command-line interface: exit codes, output
//! schemas, config-file precedence, and determinism across invocations.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sscm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sscm")).args(args).output().expect("binary launches")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn run_prints_report_and_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = sscm(&[
        "run",
        "--scenario",
        "los-28-73",
        "--n",
        "40",
        "--seed",
        "5",
        "--out",
        out_dir.to_str().unwrap(),
        "--emit",
        "pdp,spectrum,stats,cdf",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let report: Value = serde_json::from_str(&stdout_of(&out)).expect("report is JSON");
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["scenario"], "los-28-73");
    assert_eq!(report["n_realizations"], 40);
    assert_eq!(report["master_seed"], 5);

    assert_eq!(fs::read_to_string(out_dir.join("report.json")).unwrap(), stdout_of(&out));

    let stats = fs::read_to_string(out_dir.join("stats.csv")).unwrap();
    let mut lines = stats.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("seed_index,distance_m,pr_dbm,"));
    assert_eq!(lines.count(), 40);

    let cdf = fs::read_to_string(out_dir.join("rms_ds_cdf.csv")).unwrap();
    assert!(cdf.starts_with("value,probability\n"));

    for name in ["pdp_000000.csv", "spectrum_aod_000000.csv", "spectrum_aoa_000000.csv"] {
        assert!(out_dir.join(name).is_file(), "{name} missing");
    }
}

#[test]
fn report_key_set_is_stable() {
    let out = sscm(&["run", "--scenario", "nlos-28", "--n", "8", "--seed", "3"]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut keys: Vec<&str> = report.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "carrier_frequency_hz",
            "lobe_bin_width_deg",
            "lobe_threshold_db",
            "master_seed",
            "mean_aoa_lobe_az_spread_deg",
            "mean_aoa_lobe_el_spread_deg",
            "mean_aod_lobe_az_spread_deg",
            "mean_aod_lobe_el_spread_deg",
            "mean_n_aoa_lobes",
            "mean_n_aod_lobes",
            "mean_n_clusters",
            "mean_n_subpaths",
            "mean_rms_ds_ns",
            "median_global_as_aoa_az",
            "median_global_as_aoa_el",
            "median_global_as_aod_az",
            "median_global_as_aod_el",
            "median_rms_ds_ns",
            "n_outage",
            "n_realizations",
            "outage_fraction",
            "scenario",
            "schema_version",
            "tx_power_dbm",
        ]
    );
}

#[test]
fn pdp_is_deterministic_and_sorted() {
    let args = ["pdp", "--scenario", "nlos-28", "--seed", "7", "--index", "3"];
    let first = sscm(&args);
    let second = sscm(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "same seed and index must reproduce bytes");

    let text = stdout_of(&first);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delay_ns,power_dbm"));
    let delays: Vec<f64> = lines.map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(!delays.is_empty());
    assert!(delays.windows(2).all(|w| w[0] <= w[1]), "delays must ascend");
}

#[test]
fn pdp_json_dump_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("chan.json");
    let out = sscm(&[
        "pdp",
        "--scenario",
        "nlos-73",
        "--seed",
        "3",
        "--index",
        "1",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&json_path).unwrap();
    let chan = sscm::emit::channel_from_json(&text).expect("dump loads");
    assert!(chan.outage || !chan.clusters.is_empty());
}

#[test]
fn pdp_directional_variant_runs() {
    let out =
        sscm(&["pdp", "--scenario", "nlos-28", "--seed", "9", "--index", "0", "--hpbw", "15"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).starts_with("delay_ns,power_dbm\n"));
}

#[test]
fn validate_passes_and_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let expect = dir.path().join("expect.json");
    fs::write(
        &expect,
        r#"{"expectations":[
            {"metric":"mean_n_clusters","expected":3.5,"tolerance":0.9,"kind":"relative"},
            {"metric":"outage_fraction","expected":0.0,"tolerance":0.2,"kind":"absolute"}
        ]}"#,
    )
    .unwrap();
    let out = sscm(&[
        "validate",
        "--scenario",
        "nlos-28",
        "--n",
        "200",
        "--seed",
        "42",
        "--expect",
        expect.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("validation: pass"));
}

#[test]
fn validate_miss_exits_one_and_writes_summary() {
    let dir = tempfile::tempdir().unwrap();
    let expect = dir.path().join("expect.json");
    fs::write(
        &expect,
        r#"{"expectations":[{"metric":"median_rms_ds_ns","expected":1000.0,"tolerance":0.0001,"kind":"absolute"}]}"#,
    )
    .unwrap();
    let out_dir = dir.path().join("v");
    let out = sscm(&[
        "validate",
        "--scenario",
        "nlos-28",
        "--n",
        "50",
        "--seed",
        "42",
        "--expect",
        expect.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("FAIL"));
    let summary: Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("validation.json")).unwrap())
            .unwrap();
    assert_eq!(summary["passed"], false);
    assert!(out_dir.join("report.json").is_file());
}

#[test]
fn validate_missing_expectations_file_exits_three() {
    let out = sscm(&["validate", "--n", "5", "--expect", "/nonexistent/expect.json"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn validate_malformed_expectations_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let expect = dir.path().join("expect.json");
    fs::write(&expect, "{ not json").unwrap();
    let out = sscm(&["validate", "--n", "5", "--expect", expect.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn config_file_overrides_every_flag() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "scenario = \"nlos-28\"\nmaster_seed = 9\nn_realizations = 10\n").unwrap();
    let out = sscm(&[
        "run",
        "--scenario",
        "los-28-73",
        "--seed",
        "1",
        "--n",
        "25",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["scenario"], "nlos-28");
    assert_eq!(report["master_seed"], 9);
    assert_eq!(report["n_realizations"], 10);
}

#[test]
fn config_errors_exit_two() {
    // Unknown scenario name (rejected by argument parsing).
    let out = sscm(&["run", "--scenario", "indoor-60", "--n", "2"]);
    assert_eq!(exit_code(&out), 2);

    // Inverted separation interval.
    let out = sscm(&["run", "--n", "2", "--dmin", "50", "--dmax", "10"]);
    assert_eq!(exit_code(&out), 2);

    // Carrier outside the supported range.
    let out = sscm(&["run", "--n", "2", "--freq", "1e9"]);
    assert_eq!(exit_code(&out), 2);

    // Config file with an unknown key.
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "not_a_field = 1\n").unwrap();
    let out = sscm(&["run", "--n", "2", "--config", cfg.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn directional_study_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("directional.csv");
    let out = sscm(&[
        "directional",
        "--scenario",
        "nlos-28",
        "--seed",
        "2",
        "--n-distances",
        "3",
        "--hpbw",
        "15,30",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some(
            "seed_index,distance_m,hpbw_deg,tx_az_deg,tx_el_deg,rx_az_deg,rx_el_deg,\
             total_power_dbm,rms_ds_ns"
        )
    );
    assert!(lines.count() > 0);
}

#[test]
fn golden_profile_output_is_stable() {
    let golden_path =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/pdp_los_seed11_k0.csv");
    let golden = fs::read_to_string(&golden_path).expect("golden file present");
    let out = sscm(&["pdp", "--scenario", "los-28-73", "--seed", "11", "--index", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), golden, "profile output drifted from the frozen golden file");
}
