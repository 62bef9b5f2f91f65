//! Randomized invariants of the generator, the antenna model, and the
//! statistics, checked across seeds and synthetic spectra.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sscm::antenna::{AntennaPattern, wrap_to_principal_deg};
use sscm::channel::{Channel, ChannelConfig, Side, generate_channel, wrap_azimuth_deg};
use sscm::emit::{channel_from_json, channel_to_json};
use sscm::params::ScenarioKey;
use sscm::pathloss::dbm_to_mw;
use sscm::stats::{
    AngularSample, AngularSpectrum, Axis, empirical_cdf, global_angular_spread, median,
    rms_delay_spread, rms_lobe_spread, segment_lobes,
};

fn scenario_strategy() -> impl Strategy<Value = ScenarioKey> {
    (0usize..ScenarioKey::ALL.len()).prop_map(|i| ScenarioKey::ALL[i])
}

fn channel_for(key: ScenarioKey, seed: u64, keep_all: bool) -> (ChannelConfig, Channel) {
    let mut cfg = ChannelConfig::new(key, key.default_carrier_hz()).unwrap();
    if keep_all {
        cfg.params.max_path_loss_db = f64::INFINITY;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chan = generate_channel(&cfg, &mut rng);
    (cfg, chan)
}

fn spectrum_strategy() -> impl Strategy<Value = AngularSpectrum> {
    prop::collection::vec((0.0..360.0f64, -90.0..=90.0f64, 1e-6..10.0f64), 1..40).prop_map(|rows| {
        AngularSpectrum {
            side: Side::Aoa,
            samples: rows
                .into_iter()
                .map(|(azimuth_deg, elevation_deg, power_mw)| AngularSample {
                    azimuth_deg,
                    elevation_deg,
                    power_mw,
                })
                .collect(),
        }
    })
}

proptest! {
    #[test]
    fn generated_channels_respect_structure(key in scenario_strategy(), seed in any::<u64>()) {
        let (cfg, chan) = channel_for(key, seed, true);
        let p = &cfg.params;

        prop_assert!(!chan.outage);
        prop_assert!((1..=p.max_clusters as usize).contains(&chan.clusters.len()));
        prop_assert!((1..=p.max_lobes as usize).contains(&chan.aod_lobes.len()));
        prop_assert!((1..=p.max_lobes as usize).contains(&chan.aoa_lobes.len()));

        let pr_mw = dbm_to_mw(chan.rx_power_dbm);
        let total: f64 = chan.clusters.iter().map(|c| c.power_mw).sum();
        prop_assert!(((total - pr_mw) / pr_mw).abs() <= 1e-9);

        let mut prev_end = f64::NEG_INFINITY;
        for (ci, cluster) in chan.clusters.iter().enumerate() {
            prop_assert!((1..=p.max_subpaths as usize).contains(&cluster.subpaths.len()));
            let sp: f64 = cluster.subpaths.iter().map(|s| s.power_mw).sum();
            prop_assert!(((sp - cluster.power_mw) / cluster.power_mw).abs() <= 1e-9);
            prop_assert_eq!(cluster.subpaths[0].intra_delay_ns, 0.0);
            prop_assert!(
                cluster.subpaths.windows(2).all(|w| w[1].intra_delay_ns > w[0].intra_delay_ns)
            );
            if ci == 0 {
                prop_assert_eq!(cluster.excess_delay_ns, 0.0);
            } else {
                prop_assert!(cluster.excess_delay_ns - prev_end >= p.min_void_ns - 1e-9);
            }
            prev_end = cluster.excess_delay_ns
                + cluster.subpaths.last().unwrap().intra_delay_ns;

            for s in &cluster.subpaths {
                prop_assert!((0.0..360.0).contains(&s.aod_azimuth_deg));
                prop_assert!((0.0..360.0).contains(&s.aoa_azimuth_deg));
                prop_assert!((-90.0..=90.0).contains(&s.aod_elevation_deg));
                prop_assert!((-90.0..=90.0).contains(&s.aoa_elevation_deg));
                prop_assert!((0.0..std::f64::consts::TAU).contains(&s.phase_rad));
                prop_assert!((s.amplitude * s.amplitude - s.power_mw).abs() <= 1e-12 * s.power_mw);
                prop_assert!(s.abs_delay_ns >= chan.t0_ns);
                prop_assert!((1..=chan.aod_lobes.len() as u32).contains(&s.aod_lobe));
                prop_assert!((1..=chan.aoa_lobes.len() as u32).contains(&s.aoa_lobe));
            }
        }
    }

    #[test]
    fn channel_json_round_trips_exactly(key in scenario_strategy(), seed in any::<u64>()) {
        let (_, chan) = channel_for(key, seed, false);
        let back = channel_from_json(&channel_to_json(&chan)).unwrap();
        prop_assert_eq!(back, chan);
    }

    #[test]
    fn antenna_gain_wraps_azimuth_and_stays_bounded(
        az in -720.0..720.0f64,
        el in -90.0..90.0f64,
        turns in -3i32..=3,
    ) {
        let pattern = AntennaPattern::from_hpbw(12.0, 9.0, 0.8).unwrap();
        let g0 = pattern.boresight_gain();
        let g = pattern.gain(az, el);
        prop_assert!(g >= g0 / 100.0 - 1e-12 && g <= g0 + 1e-12);

        let shifted = pattern.gain(az + 360.0 * turns as f64, el);
        prop_assert!((shifted - g).abs() <= 1e-9 * g0);

        // The gain depends on the offsets only through their squares.
        let mirrored = pattern.gain(-az, -el);
        prop_assert!((mirrored - g).abs() <= 1e-9 * g0);
    }

    #[test]
    fn angle_wrappers_land_in_their_ranges(x in -1e4..1e4f64) {
        let principal = wrap_to_principal_deg(x);
        prop_assert!(principal > -180.0 && principal <= 180.0);
        let az = wrap_azimuth_deg(x);
        prop_assert!((0.0..360.0).contains(&az));
        prop_assert!((wrap_azimuth_deg(x + 360.0) - az).abs() <= 1e-9);
    }

    #[test]
    fn delay_spread_ignores_origin_and_scale(
        taps in prop::collection::vec((0.0..1000.0f64, 1e-6..10.0f64), 1..25),
        shift in 0.0..1e4f64,
        scale in 1e-6..1e3f64,
    ) {
        let base = rms_delay_spread(taps.iter().copied()).unwrap();
        let shifted =
            rms_delay_spread(taps.iter().map(|&(t, p)| (t + shift, p))).unwrap();
        let scaled =
            rms_delay_spread(taps.iter().map(|&(t, p)| (t, p * scale))).unwrap();
        prop_assert!((shifted - base).abs() <= 1e-6);
        prop_assert!((scaled - base).abs() <= 1e-9 * (1.0 + base));
    }

    #[test]
    fn circular_azimuth_spread_never_tops_uniform(spectrum in spectrum_strategy()) {
        let s = global_angular_spread(&spectrum, Axis::Azimuth).unwrap();
        // 360 / sqrt(12) is the circular-uniform limit.
        prop_assert!((0.0..=103.93).contains(&s));
    }

    #[test]
    fn lobe_segmentation_partitions_lit_power(spectrum in spectrum_strategy()) {
        let binned = spectrum.bin_azimuth(10.0).unwrap();
        // A bottomless threshold lights every nonzero bin, so the
        // segments must jointly carry the whole spectrum's power.
        let segments = segment_lobes(&binned, -1000.0);
        let seg_power: f64 = segments.iter().map(|s| s.power_mw).sum();
        let total = spectrum.total_power_mw();
        prop_assert!(((seg_power - total) / total).abs() <= 1e-9);

        let covered: usize = segments.iter().map(|s| s.n_bins).sum();
        prop_assert!(covered <= binned.n_bins());

        for seg in &segments {
            let stats = rms_lobe_spread(&spectrum, seg).unwrap();
            prop_assert!(stats.power_fraction > 0.0 && stats.power_fraction <= 1.0 + 1e-12);
            prop_assert!(stats.rms_azimuth_spread_deg >= 0.0);
            prop_assert!(stats.rms_elevation_spread_deg >= 0.0);
            prop_assert!(seg.contains_azimuth(stats.mean_azimuth_deg.rem_euclid(360.0)));
        }
    }

    #[test]
    fn ecdf_is_a_right_continuous_step_to_one(
        samples in prop::collection::vec(-1e6..1e6f64, 1..200),
    ) {
        let cdf = empirical_cdf(&samples).unwrap();
        prop_assert_eq!(cdf.len(), samples.len());
        prop_assert!(cdf.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 < w[1].1));
        prop_assert!((cdf.last().unwrap().1 - 1.0).abs() <= 1e-12);
        let n = samples.len() as f64;
        for (i, &(_, prob)) in cdf.iter().enumerate() {
            prop_assert!((prob - (i + 1) as f64 / n).abs() <= 1e-12);
        }
    }

    #[test]
    fn median_splits_the_sample(samples in prop::collection::vec(-1e6..1e6f64, 1..200)) {
        let m = median(&samples).unwrap();
        prop_assert!(samples.contains(&m));
        let below = samples.iter().filter(|&&v| v <= m).count();
        let above = samples.iter().filter(|&&v| v >= m).count();
        prop_assert!(below * 2 >= samples.len());
        prop_assert!(above * 2 >= samples.len());
    }
}
