//! Command line front end.
//!
//! Exit codes: 0 success, 1 validation failure, 2 configuration error,
//! 3 I/O failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use sscm::antenna::{AntennaPattern, Pointing, best_pointing, directional_pdp};
use sscm::channel::Side;
use sscm::emit;
use sscm::ensemble::{
    AntennaConfig, DEFAULT_STUDY_DISTANCES, DEFAULT_STUDY_HPBWS_DEG, EmitFlags, Expectations,
    PointingMode, RunConfig, directional_study, realize_channel, run_ensemble, validate,
};
use sscm::error::{Error, Result};
use sscm::params::{ScenarioKey, ScenarioOverrides};
use sscm::stats::{AngularSpectrum, empirical_cdf};

#[derive(Parser)]
#[command(
    name = "sscm",
    version,
    about = "Statistical spatial channel model simulator for millimeter-wave links"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a seeded Monte Carlo ensemble and emit its statistics.
    Run(RunArgs),
    /// Regenerate one realization and emit its power delay profile.
    Pdp(PdpArgs),
    /// Run an ensemble and check its report against expectations.
    Validate(ValidateArgs),
    /// Directional delay spread study over random separations.
    Directional(DirectionalArgs),
}

/// Flags shared by every subcommand. A config file given with --config
/// overrides any flag.
#[derive(Args)]
struct CommonArgs {
    /// Scenario preset: los-28-73, nlos-28, nlos-73, or nlos-28-73.
    #[arg(long)]
    scenario: Option<ScenarioKey>,

    /// Carrier frequency in Hz (defaults to the scenario's own band).
    #[arg(long)]
    freq: Option<f64>,

    /// Number of realizations.
    #[arg(long)]
    n: Option<usize>,

    /// Master seed; realization k uses substream k.
    #[arg(long)]
    seed: Option<u64>,

    /// Transmit power in dBm.
    #[arg(long)]
    pt: Option<f64>,

    /// Minimum separation in meters.
    #[arg(long)]
    dmin: Option<f64>,

    /// Maximum separation in meters.
    #[arg(long)]
    dmax: Option<f64>,

    /// Path loss exponent override.
    #[arg(long)]
    ple: Option<f64>,

    /// Shadow fading sigma override in dB.
    #[arg(long)]
    shadow_sigma: Option<f64>,

    /// Azimuth bin width for ensemble lobe statistics in degrees.
    #[arg(long)]
    lobe_bin_width: Option<f64>,

    /// Lobe threshold below the peak bin in dB (negative).
    #[arg(long)]
    lobe_threshold: Option<f64>,

    /// Run realizations on one thread instead of the worker pool.
    #[arg(long)]
    serial: bool,

    /// TOML or JSON config file; its values override these flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Output directory; without it only the report goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Artifact kinds to write: any of pdp, spectrum, stats, cdf.
    #[arg(long, value_delimiter = ',')]
    emit: Vec<String>,
}

#[derive(Args)]
struct PdpArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Realization index within the run.
    #[arg(long, default_value_t = 0)]
    index: u64,

    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Also dump the full channel as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,

    /// Square-beam half-power beamwidth in degrees; makes the profile
    /// directional.
    #[arg(long)]
    hpbw: Option<f64>,

    /// Aperture efficiency of the directional beams.
    #[arg(long, default_value_t = 0.7)]
    efficiency: f64,

    /// Beam steering: "best" or "TXAZ,TXEL,RXAZ,RXEL" in degrees.
    #[arg(long, default_value = "best")]
    pointing: String,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Expectations file (JSON or TOML).
    #[arg(long)]
    expect: PathBuf,

    /// Directory for the report and summary.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DirectionalArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Number of random separations.
    #[arg(long, default_value_t = DEFAULT_STUDY_DISTANCES)]
    n_distances: usize,

    /// Beamwidths to sweep, degrees.
    #[arg(long, value_delimiter = ',')]
    hpbw: Vec<f64>,

    /// Aperture efficiency of the study beams.
    #[arg(long)]
    efficiency: Option<f64>,

    /// Beam steering: "best" or "TXAZ,TXEL,RXAZ,RXEL" in degrees.
    #[arg(long, default_value = "best")]
    pointing: String,

    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Config file schema: every run field optional, plus nested parameter
/// overrides and antenna setup.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct FileConfig {
    scenario: Option<ScenarioKey>,
    carrier_frequency_hz: Option<f64>,
    tx_power_dbm: Option<f64>,
    n_realizations: Option<usize>,
    master_seed: Option<u64>,
    distance_range_m: Option<(f64, f64)>,
    pathloss_exponent: Option<f64>,
    shadow_sigma_db: Option<f64>,
    lobe_bin_width_deg: Option<f64>,
    lobe_threshold_db: Option<f64>,
    parallel: Option<bool>,
    params: Option<ScenarioOverrides>,
    antenna: Option<AntennaConfig>,
    emit: Option<EmitFlags>,
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn load_file_config(path: &Path) -> Result<FileConfig> {
    let text = read_to_string(path)?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        serde_json::from_str(&text).map_err(|e| Error::config(format!("{}: {e}", path.display())))
    } else {
        toml::from_str(&text).map_err(|e| Error::config(format!("{}: {e}", path.display())))
    }
}

/// Resolves flags and optional config file into a run config. File
/// values override flags; flags override scenario defaults.
fn build_run_config(common: &CommonArgs, emit: Option<EmitFlags>) -> Result<RunConfig> {
    let file = match &common.config {
        Some(path) => Some(load_file_config(path)?),
        None => None,
    };
    let scenario = file
        .as_ref()
        .and_then(|f| f.scenario)
        .or(common.scenario)
        .unwrap_or(ScenarioKey::Nlos28_73);
    let mut cfg = RunConfig::new(scenario);

    // Flags first.
    if let Some(f) = common.freq {
        cfg.carrier_frequency_hz = f;
    }
    if let Some(n) = common.n {
        cfg.n_realizations = n;
    }
    if let Some(s) = common.seed {
        cfg.master_seed = s;
    }
    if let Some(p) = common.pt {
        cfg.tx_power_dbm = p;
    }
    match (common.dmin, common.dmax) {
        (None, None) => {}
        (Some(lo), Some(hi)) => cfg.distance_range_m = Some((lo, hi)),
        _ => return Err(Error::config("--dmin and --dmax must be given together")),
    }
    if let Some(n) = common.ple {
        cfg.pathloss_exponent = Some(n);
    }
    if let Some(s) = common.shadow_sigma {
        cfg.shadow_sigma_db = Some(s);
    }
    if let Some(w) = common.lobe_bin_width {
        cfg.lobe_bin_width_deg = w;
    }
    if let Some(t) = common.lobe_threshold {
        cfg.lobe_threshold_db = t;
    }
    if common.serial {
        cfg.parallel = false;
    }
    if let Some(e) = emit {
        cfg.emit = e;
    }

    // File values win over flags.
    if let Some(f) = file {
        if let Some(v) = f.carrier_frequency_hz {
            cfg.carrier_frequency_hz = v;
        }
        if let Some(v) = f.tx_power_dbm {
            cfg.tx_power_dbm = v;
        }
        if let Some(v) = f.n_realizations {
            cfg.n_realizations = v;
        }
        if let Some(v) = f.master_seed {
            cfg.master_seed = v;
        }
        if let Some(v) = f.distance_range_m {
            cfg.distance_range_m = Some(v);
        }
        if let Some(v) = f.pathloss_exponent {
            cfg.pathloss_exponent = Some(v);
        }
        if let Some(v) = f.shadow_sigma_db {
            cfg.shadow_sigma_db = Some(v);
        }
        if let Some(v) = f.lobe_bin_width_deg {
            cfg.lobe_bin_width_deg = v;
        }
        if let Some(v) = f.lobe_threshold_db {
            cfg.lobe_threshold_db = v;
        }
        if let Some(v) = f.parallel {
            cfg.parallel = v;
        }
        if let Some(v) = f.params {
            cfg.params = v;
        }
        if let Some(v) = f.antenna {
            cfg.antenna = v;
        }
        if let Some(v) = f.emit {
            cfg.emit = v;
        }
    }
    // Surface config problems before any work happens.
    cfg.channel_config()?;
    Ok(cfg)
}

fn parse_emit_flags(names: &[String]) -> Result<Option<EmitFlags>> {
    if names.is_empty() {
        return Ok(None);
    }
    let mut flags = EmitFlags { pdp: false, spectrum: false, stats: false, cdf: false };
    for name in names {
        match name.as_str() {
            "pdp" => flags.pdp = true,
            "spectrum" => flags.spectrum = true,
            "stats" => flags.stats = true,
            "cdf" => flags.cdf = true,
            other => {
                return Err(Error::config(format!(
                    "unknown emit kind {other:?} (expected pdp, spectrum, stats, or cdf)"
                )));
            }
        }
    }
    Ok(Some(flags))
}

fn parse_pointing(text: &str) -> Result<PointingMode> {
    if text == "best" {
        return Ok(PointingMode::Best);
    }
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::config(format!("pointing {text:?} is not numeric")))?;
    if parts.len() != 4 {
        return Err(Error::config(
            "pointing must be \"best\" or four comma-separated degrees: TXAZ,TXEL,RXAZ,RXEL",
        ));
    }
    Ok(PointingMode::Fixed {
        tx_azimuth_deg: parts[0],
        tx_elevation_deg: parts[1],
        rx_azimuth_deg: parts[2],
        rx_elevation_deg: parts[3],
    })
}

fn ensure_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path).map_err(|e| Error::io(path, e))
}

fn write_or_stdout(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => emit::save(p, content),
        None => {
            std::io::stdout().write_all(content.as_bytes()).map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn cmd_run(args: &RunArgs) -> Result<()> {
    let emit_flags = parse_emit_flags(&args.emit)?;
    let cfg = build_run_config(&args.common, emit_flags)?;
    let run = run_ensemble(&cfg)?;
    let report_json = emit::report_to_json(&run.report);

    if let Some(dir) = &args.out {
        ensure_dir(dir)?;
        emit::save(&dir.join("report.json"), &report_json)?;
        if cfg.emit.stats {
            let csv = emit::to_csv_string(|w| emit::write_stats_csv(w, &run.records));
            emit::save(&dir.join("stats.csv"), &csv)?;
        }
        if cfg.emit.cdf {
            let ds: Vec<f64> = run.records.iter().filter_map(|r| r.rms_ds_ns).collect();
            if !ds.is_empty() {
                let cdf = empirical_cdf(&ds)?;
                let csv = emit::to_csv_string(|w| emit::write_cdf_csv(w, &cdf));
                emit::save(&dir.join("rms_ds_cdf.csv"), &csv)?;
            }
        }
        if cfg.emit.pdp || cfg.emit.spectrum {
            for rec in &run.records {
                if rec.outage {
                    continue;
                }
                let chan = realize_channel(&cfg, rec.index)?;
                if cfg.emit.pdp {
                    let csv = emit::to_csv_string(|w| emit::write_pdp_csv(w, &chan));
                    emit::save(&dir.join(format!("pdp_{:06}.csv", rec.index)), &csv)?;
                }
                if cfg.emit.spectrum {
                    for (side, tag) in [(Side::Aod, "aod"), (Side::Aoa, "aoa")] {
                        let sp = AngularSpectrum::from_channel(&chan, side)?;
                        let csv = emit::to_csv_string(|w| emit::write_spectrum_csv(w, &sp));
                        emit::save(
                            &dir.join(format!("spectrum_{tag}_{:06}.csv", rec.index)),
                            &csv,
                        )?;
                    }
                }
            }
        }
    }
    print!("{report_json}");
    Ok(())
}

fn cmd_pdp(args: &PdpArgs) -> Result<()> {
    let cfg = build_run_config(&args.common, None)?;
    let chan = realize_channel(&cfg, args.index)?;

    let csv = match args.hpbw {
        None => emit::to_csv_string(|w| emit::write_pdp_csv(w, &chan)),
        Some(width) => {
            if chan.outage {
                return Err(Error::Empty("realization is an outage; no profile to steer"));
            }
            let horn = AntennaPattern::from_hpbw(width, width, args.efficiency)?;
            let (tx, rx) = match parse_pointing(&args.pointing)? {
                PointingMode::Best => best_pointing(&chan)?,
                PointingMode::Fixed {
                    tx_azimuth_deg,
                    tx_elevation_deg,
                    rx_azimuth_deg,
                    rx_elevation_deg,
                } => (
                    Pointing::new(tx_azimuth_deg, tx_elevation_deg),
                    Pointing::new(rx_azimuth_deg, rx_elevation_deg),
                ),
            };
            let pdp = directional_pdp(&chan, &horn, &horn, tx, rx);
            let mut buf = String::from("delay_ns,power_dbm\n");
            for tap in &pdp.taps {
                buf.push_str(&format!(
                    "{},{}\n",
                    tap.abs_delay_ns,
                    sscm::pathloss::mw_to_dbm(tap.power_mw)
                ));
            }
            buf
        }
    };
    write_or_stdout(args.out.as_deref(), &csv)?;
    if let Some(json_path) = &args.json {
        emit::save(json_path, &emit::channel_to_json(&chan))?;
    }
    if chan.outage {
        eprintln!("note: realization {} is an outage; profile is empty", args.index);
    }
    Ok(())
}

fn cmd_validate(args: &ValidateArgs) -> Result<()> {
    let cfg = build_run_config(&args.common, None)?;
    let text = read_to_string(&args.expect)?;
    let is_toml = args.expect.extension().is_some_and(|e| e.eq_ignore_ascii_case("toml"));
    let expectations: Expectations = if is_toml {
        toml::from_str(&text)
            .map_err(|e| Error::config(format!("{}: {e}", args.expect.display())))?
    } else {
        serde_json::from_str(&text)
            .map_err(|e| Error::config(format!("{}: {e}", args.expect.display())))?
    };

    let run = run_ensemble(&cfg)?;
    let summary = validate(&run.report, &expectations);
    println!("{summary}");
    if let Some(dir) = &args.out {
        ensure_dir(dir)?;
        emit::save(&dir.join("report.json"), &emit::report_to_json(&run.report))?;
        let summary_json =
            serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
        emit::save(&dir.join("validation.json"), &summary_json)?;
    }
    if summary.passed {
        Ok(())
    } else {
        Err(Error::Validation("one or more expectations missed".into()))
    }
}

fn cmd_directional(args: &DirectionalArgs) -> Result<()> {
    let mut cfg = build_run_config(&args.common, None)?;
    if let Some(e) = args.efficiency {
        cfg.antenna.efficiency = e;
    }
    cfg.antenna.pointing = parse_pointing(&args.pointing)?;
    let hpbws: Vec<f64> =
        if args.hpbw.is_empty() { DEFAULT_STUDY_HPBWS_DEG.to_vec() } else { args.hpbw.clone() };
    let records = directional_study(&cfg, args.n_distances, &hpbws)?;
    let csv = emit::to_csv_string(|w| emit::write_directional_csv(w, &records));
    write_or_stdout(args.out.as_deref(), &csv)
}

fn real_main() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Run(args) => cmd_run(&args),
        Cmd::Pdp(args) => cmd_pdp(&args),
        Cmd::Validate(args) => cmd_validate(&args),
        Cmd::Directional(args) => cmd_directional(&args),
    }
}

fn main() {
    match real_main() {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
