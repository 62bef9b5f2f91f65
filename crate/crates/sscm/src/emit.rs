//! Output artifacts: plot-ready CSVs and JSON dumps.
//!
//! Every writer is deterministic: floats print in Rust's shortest
//! round-trip form, rows follow the natural order of the data, and no
//! timestamps or environment details leak in, so identical runs emit
//! identical bytes.

use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channel::Channel;
use crate::ensemble::{DirectionalRecord, EnsembleReport, RealizationRecord, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::pathloss::mw_to_dbm;
use crate::stats::AngularSpectrum;

/// Omnidirectional PDP rows `(delay_ns, power_dbm)`, sorted by delay.
pub fn write_pdp_csv<W: Write>(w: &mut W, chan: &Channel) -> io::Result<()> {
    let mut taps: Vec<(f64, f64)> = chan.subpaths().map(|s| (s.abs_delay_ns, s.power_mw)).collect();
    taps.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    writeln!(w, "delay_ns,power_dbm")?;
    for (t, p) in taps {
        writeln!(w, "{},{}", t, mw_to_dbm(p))?;
    }
    Ok(())
}

/// Angular spectrum rows `(az_deg, el_deg, power_dbm)` in subpath
/// order.
pub fn write_spectrum_csv<W: Write>(w: &mut W, spectrum: &AngularSpectrum) -> io::Result<()> {
    writeln!(w, "az_deg,el_deg,power_dbm")?;
    for s in &spectrum.samples {
        writeln!(w, "{},{},{}", s.azimuth_deg, s.elevation_deg, mw_to_dbm(s.power_mw))?;
    }
    Ok(())
}

/// Distribution rows `(value, probability)`.
pub fn write_cdf_csv<W: Write>(w: &mut W, cdf: &[(f64, f64)]) -> io::Result<()> {
    writeln!(w, "value,probability")?;
    for (x, p) in cdf {
        writeln!(w, "{},{}", x, p)?;
    }
    Ok(())
}

/// Lobe-spread column slots per side in the statistics CSV. Lobes print
/// strongest first; when a realization segments into more lobes than
/// slots, the count columns stay authoritative and the overflow lobes
/// are simply not listed.
pub const STATS_LOBE_SLOTS: usize = 5;

/// Per-realization statistics table; one row per realization, outages
/// keep their identity columns and leave statistics cells empty.
pub fn write_stats_csv<W: Write>(w: &mut W, records: &[RealizationRecord]) -> io::Result<()> {
    write!(
        w,
        "seed_index,distance_m,pr_dbm,n_clusters,n_subpaths_total,rms_ds_ns,\
         global_as_aod_az,global_as_aoa_az,global_as_aod_el,global_as_aoa_el,\
         n_aod_lobes,n_aoa_lobes"
    )?;
    for side in ["aod", "aoa"] {
        for k in 1..=STATS_LOBE_SLOTS {
            write!(w, ",{side}_lobe{k}_az_spread_deg,{side}_lobe{k}_el_spread_deg")?;
        }
    }
    writeln!(w)?;

    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        write!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.index,
            r.distance_m,
            r.rx_power_dbm,
            r.n_clusters,
            r.n_subpaths,
            opt(r.rms_ds_ns),
            opt(r.global_as_aod_az_deg),
            opt(r.global_as_aoa_az_deg),
            opt(r.global_as_aod_el_deg),
            opt(r.global_as_aoa_el_deg),
            r.aod_lobes.len(),
            r.aoa_lobes.len(),
        )?;
        for lobes in [&r.aod_lobes, &r.aoa_lobes] {
            let mut ranked: Vec<_> = lobes.iter().collect();
            ranked.sort_by(|a, b| b.power_fraction.partial_cmp(&a.power_fraction).unwrap());
            for k in 0..STATS_LOBE_SLOTS {
                match ranked.get(k) {
                    Some(l) => {
                        write!(w, ",{},{}", l.rms_azimuth_spread_deg, l.rms_elevation_spread_deg)?
                    }
                    None => write!(w, ",,")?,
                }
            }
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Directional study rows.
pub fn write_directional_csv<W: Write>(w: &mut W, records: &[DirectionalRecord]) -> io::Result<()> {
    writeln!(
        w,
        "seed_index,distance_m,hpbw_deg,tx_az_deg,tx_el_deg,rx_az_deg,rx_el_deg,\
         total_power_dbm,rms_ds_ns"
    )?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{}",
            r.index,
            r.distance_m,
            r.hpbw_deg,
            r.tx_azimuth_deg,
            r.tx_elevation_deg,
            r.rx_azimuth_deg,
            r.rx_elevation_deg,
            r.total_power_dbm,
            r.rms_ds_ns,
        )?;
    }
    Ok(())
}

/// Versioned envelope for full-channel JSON dumps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelDump {
    pub schema_version: u32,
    pub channel: Channel,
}

/// Serializes a channel (with schema version) to pretty JSON.
pub fn channel_to_json(chan: &Channel) -> String {
    let dump = ChannelDump { schema_version: SCHEMA_VERSION, channel: chan.clone() };
    serde_json::to_string_pretty(&dump).expect("channel serializes") + "\n"
}

/// Parses a dump produced by [`channel_to_json`].
pub fn channel_from_json(text: &str) -> Result<Channel> {
    let dump: ChannelDump =
        serde_json::from_str(text).map_err(|e| Error::config(format!("channel dump: {e}")))?;
    if dump.schema_version != SCHEMA_VERSION {
        return Err(Error::config(format!(
            "channel dump schema version {} unsupported (expected {})",
            dump.schema_version, SCHEMA_VERSION
        )));
    }
    Ok(dump.channel)
}

/// Serializes an ensemble report to pretty JSON.
pub fn report_to_json(report: &EnsembleReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes") + "\n"
}

/// Writes `content` to `path`, mapping failures to I/O errors carrying
/// the path.
pub fn save(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::io(path, e))
}

/// Runs a CSV writer into a string.
pub fn to_csv_string<F>(f: F) -> String
where
    F: FnOnce(&mut Vec<u8>) -> io::Result<()>,
{
    let mut buf = Vec::new();
    f(&mut buf).expect("in-memory write");
    String::from_utf8(buf).expect("writers emit utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{ChannelConfig, Side, generate_channel};
    use crate::ensemble::{RunConfig, run_ensemble};
    use crate::params::ScenarioKey;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn test_channel(seed: u64) -> Channel {
        let cfg = ChannelConfig::new(ScenarioKey::Nlos28, 28e9).unwrap();
        generate_channel(&cfg, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    #[test]
    fn pdp_rows_are_sorted_and_in_dbm() {
        let chan = test_channel(5);
        let text = to_csv_string(|w| write_pdp_csv(w, &chan));
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "delay_ns,power_dbm");
        let rows: Vec<(f64, f64)> = lines
            .map(|l| {
                let (a, b) = l.split_once(',').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
        assert_eq!(rows.len(), chan.n_subpaths());
        for w in rows.windows(2) {
            assert!(w[0].0 <= w[1].0);
        }
        // dBm column round-trips to the strongest subpath power.
        let max_dbm = rows.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
        let max_mw = chan.subpaths().map(|s| s.power_mw).fold(0.0, f64::max);
        assert!((10f64.powf(max_dbm / 10.0) - max_mw).abs() <= max_mw * 1e-12);
    }

    #[test]
    fn spectrum_rows_cover_every_subpath() {
        let chan = test_channel(6);
        let sp = AngularSpectrum::from_channel(&chan, Side::Aoa).unwrap();
        let text = to_csv_string(|w| write_spectrum_csv(w, &sp));
        assert!(text.starts_with("az_deg,el_deg,power_dbm\n"));
        assert_eq!(text.lines().count(), 1 + chan.n_subpaths());
    }

    #[test]
    fn stats_csv_has_a_rectangular_schema() {
        let mut cfg = RunConfig::new(ScenarioKey::Nlos73);
        cfg.n_realizations = 12;
        let run = run_ensemble(&cfg).unwrap();
        let text = to_csv_string(|w| write_stats_csv(w, &run.records));
        let mut lines = text.lines();
        let header = lines.next().unwrap();
        assert!(
            header
                .starts_with("seed_index,distance_m,pr_dbm,n_clusters,n_subpaths_total,rms_ds_ns")
        );
        let n_cols = header.split(',').count();
        assert_eq!(n_cols, 12 + 4 * STATS_LOBE_SLOTS);
        let mut n_rows = 0;
        for line in lines {
            assert_eq!(line.split(',').count(), n_cols, "ragged row: {line}");
            n_rows += 1;
        }
        assert_eq!(n_rows, 12);
    }

    #[test]
    fn outage_rows_leave_statistics_empty() {
        let mut cfg = RunConfig::new(ScenarioKey::Nlos28);
        cfg.n_realizations = 2;
        cfg.params.max_path_loss_db = Some(1.0);
        let run = run_ensemble(&cfg).unwrap();
        let text = to_csv_string(|w| write_stats_csv(w, &run.records));
        let row = text.lines().nth(1).unwrap();
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[3], "0"); // n_clusters
        assert_eq!(cells[5], ""); // rms_ds_ns
        assert_eq!(cells[10], "0"); // n_aod_lobes
        assert_eq!(cells[12], ""); // first lobe slot
    }

    #[test]
    fn channel_dump_round_trips_with_schema_version() {
        let chan = test_channel(7);
        let json = channel_to_json(&chan);
        assert!(json.contains("\"schema_version\": 1"));
        let back = channel_from_json(&json).unwrap();
        assert!(back == chan);

        let tampered = json.replace("\"schema_version\": 1", "\"schema_version\": 99");
        assert!(channel_from_json(&tampered).is_err());
        assert!(channel_from_json("{not json").is_err());
    }

    #[test]
    fn identical_runs_emit_identical_bytes() {
        let mut cfg = RunConfig::new(ScenarioKey::Nlos28_73);
        cfg.n_realizations = 8;
        let a = run_ensemble(&cfg).unwrap();
        let b = run_ensemble(&cfg).unwrap();
        assert_eq!(report_to_json(&a.report), report_to_json(&b.report));
        assert_eq!(
            to_csv_string(|w| write_stats_csv(w, &a.records)),
            to_csv_string(|w| write_stats_csv(w, &b.records)),
        );
    }

    #[test]
    fn cdf_csv_lists_value_probability_pairs() {
        let cdf = vec![(1.5, 0.5), (2.5, 1.0)];
        let text = to_csv_string(|w| write_cdf_csv(w, &cdf));
        assert_eq!(text, "value,probability\n1.5,0.5\n2.5,1\n");
    }
}
