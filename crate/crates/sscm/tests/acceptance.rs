//! Acceptance gate for the simulator: one test per criterion, each
//! printing a single PASS/FAIL line (visible with `--nocapture`).
//!
//! Run with `cargo test --test acceptance -- --test-threads=1 --nocapture`
//! for ordered output, or plainly as part of `cargo test --workspace`.

use std::sync::LazyLock;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sscm::antenna::{AntennaPattern, Pointing, directional_pdp};
use sscm::channel::{ChannelConfig, generate_channel};
use sscm::draw;
use sscm::emit::channel_to_json;
use sscm::ensemble::{EnsembleReport, RunConfig, realize_channel, run_ensemble};
use sscm::params::{PathLossParams, ScenarioKey};
use sscm::pathloss::{dbm_to_mw, free_space_ref_db, path_loss_db};
use sscm::stats::{AngularSample, AngularSpectrum, Axis, global_angular_spread, rms_delay_spread};

fn report(criterion: &str, pass: bool, details: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("acceptance [{criterion}]: {verdict} -- {details}");
    assert!(pass, "acceptance [{criterion}] failed: {details}");
}

/// Full-size ensembles at the committed defaults, shared across tests.
struct Ensembles {
    reports: Vec<(ScenarioKey, EnsembleReport)>,
    elapsed: Duration,
}

static ENSEMBLES: LazyLock<Ensembles> = LazyLock::new(|| {
    let start = Instant::now();
    let reports = ScenarioKey::ALL
        .iter()
        .map(|&key| {
            let run = run_ensemble(&RunConfig::new(key)).expect("default config is valid");
            (key, run.report)
        })
        .collect();
    Ensembles { reports, elapsed: start.elapsed() }
});

#[test]
fn c1_median_delay_spreads_within_tolerance() {
    let targets = [
        (ScenarioKey::Los28_73, 16.0),
        (ScenarioKey::Nlos28, 32.0),
        (ScenarioKey::Nlos73, 39.0),
        (ScenarioKey::Nlos28_73, 35.0),
    ];
    let ens = &*ENSEMBLES;
    let mut pass = ens.elapsed < Duration::from_secs(4 * 60);
    let mut details = Vec::new();
    for (key, target) in targets {
        let rep = &ens.reports.iter().find(|(k, _)| *k == key).unwrap().1;
        let median = rep.median_rms_ds_ns.expect("non-outage realizations exist");
        let (lo, hi) = (0.8 * target, 1.2 * target);
        let ok = (lo..=hi).contains(&median);
        pass &= ok;
        details.push(format!("{key} median {median:.3} ns in [{lo:.1}, {hi:.1}]: {ok}"));
    }
    details.push(format!("four 10k-realization runs took {:.1} s", ens.elapsed.as_secs_f64()));
    report("median delay spreads", pass, &details.join("; "));
}

#[test]
fn c2_arrival_lobe_spread_means_within_tolerance() {
    let ens = &*ENSEMBLES;
    let report_73 = &ens.reports.iter().find(|(k, _)| *k == ScenarioKey::Nlos73).unwrap().1;
    let az = report_73.mean_aoa_lobe_az_spread_deg.unwrap();
    let el = report_73.mean_aoa_lobe_el_spread_deg.unwrap();
    let az_ok = (2.5..=5.5).contains(&az);
    let el_ok = (0.5..=3.5).contains(&el);
    report(
        "arrival lobe spread means",
        az_ok && el_ok,
        &format!(
            "nlos-73 mean arrival lobe spreads az {az:.3} deg in [2.5, 5.5]: {az_ok}; \
             el {el:.3} deg in [0.5, 3.5]: {el_ok}"
        ),
    );
}

#[test]
fn c3_structural_invariants_hold_exactly() {
    let mut checked = 0usize;
    let mut pass = true;
    let mut first_failure = String::new();
    let mut fail = |msg: String| {
        if pass {
            first_failure = msg;
        }
        pass = false;
    };

    for key in ScenarioKey::ALL {
        let mut cfg = ChannelConfig::new(key, key.default_carrier_hz()).unwrap();
        // An infinite detectability cut keeps every subpath, so the power
        // cascade must telescope exactly to the omnidirectional budget.
        cfg.params.max_path_loss_db = f64::INFINITY;
        let p = &cfg.params;
        for index in 0..250u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(7_000 + index);
            let chan = generate_channel(&cfg, &mut rng);
            checked += 1;

            let n = chan.clusters.len() as u32;
            if !(1..=p.max_clusters).contains(&n) {
                fail(format!("{key}/{index}: cluster count {n}"));
            }
            let pr_mw = dbm_to_mw(chan.rx_power_dbm);
            let cluster_sum: f64 = chan.clusters.iter().map(|c| c.power_mw).sum();
            if ((cluster_sum - pr_mw) / pr_mw).abs() > 1e-9 {
                fail(format!(
                    "{key}/{index}: cluster powers sum {cluster_sum:e} vs budget {pr_mw:e}"
                ));
            }

            let mut prev_end = f64::NEG_INFINITY;
            for (ci, cluster) in chan.clusters.iter().enumerate() {
                let m = cluster.subpaths.len() as u32;
                if !(1..=p.max_subpaths).contains(&m) {
                    fail(format!("{key}/{index}: subpath count {m}"));
                }
                let sp_sum: f64 = cluster.subpaths.iter().map(|s| s.power_mw).sum();
                if ((sp_sum - cluster.power_mw) / cluster.power_mw).abs() > 1e-9 {
                    fail(format!("{key}/{index}: subpath powers off in cluster {ci}"));
                }
                let intra: Vec<f64> = cluster.subpaths.iter().map(|s| s.intra_delay_ns).collect();
                if intra[0] != 0.0 {
                    fail(format!("{key}/{index}: first intra delay {}", intra[0]));
                }
                if intra.windows(2).any(|w| w[1] <= w[0]) {
                    fail(format!("{key}/{index}: intra delays not strictly increasing"));
                }
                if ci == 0 {
                    if cluster.excess_delay_ns != 0.0 {
                        fail(format!("{key}/{index}: first cluster delay nonzero"));
                    }
                } else {
                    let void = cluster.excess_delay_ns - prev_end;
                    if void < p.min_void_ns - 1e-9 {
                        fail(format!("{key}/{index}: void {void} ns < {}", p.min_void_ns));
                    }
                }
                prev_end = cluster.excess_delay_ns + intra.last().unwrap();
            }

            for lobes in [&chan.aod_lobes, &chan.aoa_lobes] {
                let l = lobes.len() as u32;
                if !(1..=p.max_lobes).contains(&l) {
                    fail(format!("{key}/{index}: lobe count {l}"));
                }
                for (i, lobe) in lobes.iter().enumerate() {
                    let sector = 360.0 / l as f64;
                    let (lo, hi) = (sector * i as f64, sector * (i + 1) as f64);
                    let az = lobe.mean_azimuth_deg;
                    if !(az >= lo && az < hi) {
                        fail(format!("{key}/{index}: lobe {i} azimuth {az} outside [{lo}, {hi})"));
                    }
                }
            }
        }
    }
    let details = if pass {
        format!(
            "{checked} realizations: counts in bounds, voids >= 25 ns, delays strictly increasing, power telescopes to 1e-9, lobe sectors disjoint"
        )
    } else {
        format!("first failure: {first_failure}")
    };
    report("structural invariants", pass, &details);
}

#[test]
fn c4_path_loss_closed_form_reference_points() {
    let fspl_28 = free_space_ref_db(28e9).unwrap();
    let fspl_73 = free_space_ref_db(73e9).unwrap();
    let ok_28 = (fspl_28 - 61.38).abs() <= 0.01;
    let ok_73 = (fspl_73 - 69.71).abs() <= 0.01;

    let mut ok_doubling = true;
    for (freq, exponent) in [(28e9, 2.1), (28e9, 3.4), (73e9, 2.0), (73e9, 3.3)] {
        let params = PathLossParams { exponent, shadow_sigma_db: 0.0 };
        for d in [1.0, 5.0, 40.0, 120.0] {
            let step = path_loss_db(&params, freq, 2.0 * d, 0.0).unwrap()
                - path_loss_db(&params, freq, d, 0.0).unwrap();
            ok_doubling &= (step - 10.0 * exponent * 2.0f64.log10()).abs() < 1e-9;
        }
    }
    report(
        "path loss closed forms",
        ok_28 && ok_73 && ok_doubling,
        &format!(
            "1 m free-space reference {fspl_28:.4} dB (28 GHz), {fspl_73:.4} dB (73 GHz); \
             each distance doubling adds 10 n log10(2) dB: {ok_doubling}"
        ),
    );
}

#[test]
fn c5_antenna_gain_closed_form_and_unity_equivalence() {
    let (az_w, el_w, eta) = (10.4, 7.3, 0.63);
    let pattern = AntennaPattern::from_hpbw(az_w, el_w, eta).unwrap();
    let g0 = pattern.boresight_gain();
    let ok_g0 = (g0 - 41_253.0 * eta / (az_w * el_w)).abs() / g0 < 1e-15;

    let mut ok_half = true;
    for (da, de) in [(az_w / 2.0, 0.0), (-az_w / 2.0, 0.0), (0.0, el_w / 2.0), (0.0, -el_w / 2.0)] {
        ok_half &= (pattern.gain(da, de) - g0 / 2.0).abs() / (g0 / 2.0) <= 1e-12;
    }
    let ok_floor = pattern.gain(179.0, 0.0) == g0 / 100.0 && pattern.gain(0.0, 90.0) == g0 / 100.0;

    let unity = AntennaPattern::isotropic();
    let mut ok_unity = true;
    let cfg = ChannelConfig::new(ScenarioKey::Nlos28_73, 28e9).unwrap();
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(9_100 + seed);
        let chan = generate_channel(&cfg, &mut rng);
        if chan.outage {
            continue;
        }
        let pdp = directional_pdp(
            &chan,
            &unity,
            &unity,
            Pointing::new(31.0, 4.0),
            Pointing::new(200.0, -12.0),
        );
        let omni = chan.total_power_mw();
        ok_unity &= ((pdp.total_power_mw() - omni) / omni).abs() <= 1e-9;
    }
    report(
        "antenna gain model",
        ok_g0 && ok_half && ok_floor && ok_unity,
        &format!(
            "boresight gain matches 41253 eta / (az el): {ok_g0}; half gain at half beamwidth: {ok_half}; \
             floor at 1/100 boresight: {ok_floor}; unity pattern reproduces omni power: {ok_unity}"
        ),
    );
}

/// Minimum over a 0.1 degree grid of shifts of the weighted angular
/// standard deviation, the slow reference for the circular spread.
fn brute_force_circular_spread(samples: &[AngularSample]) -> f64 {
    let total: f64 = samples.iter().map(|s| s.power_mw).sum();
    let mut best = f64::INFINITY;
    for tenth in -1800..1800 {
        let shift = tenth as f64 / 10.0;
        let mut mean = 0.0;
        let mut second = 0.0;
        for s in samples {
            let mut a = (s.azimuth_deg + shift) % 360.0;
            if a > 180.0 {
                a -= 360.0;
            } else if a <= -180.0 {
                a += 360.0;
            }
            mean += s.power_mw * a;
            second += s.power_mw * a * a;
        }
        mean /= total;
        second /= total;
        best = best.min((second - mean * mean).max(0.0).sqrt());
    }
    best
}

#[test]
fn c6_spread_statistics_match_brute_force_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(60_601);
    let mut worst_az: f64 = 0.0;
    let mut worst_ds: f64 = 0.0;
    for _ in 0..120 {
        let n = rng.random_range(1..=12usize);
        let samples: Vec<AngularSample> = (0..n)
            .map(|_| AngularSample {
                azimuth_deg: rng.random_range(0.0..360.0),
                elevation_deg: rng.random_range(-60.0..60.0),
                power_mw: rng.random_range(0.05..5.0),
            })
            .collect();
        let spectrum = AngularSpectrum { side: sscm::channel::Side::Aoa, samples };

        let fast = global_angular_spread(&spectrum, Axis::Azimuth).unwrap();
        let slow = brute_force_circular_spread(&spectrum.samples);
        worst_az = worst_az.max((fast - slow).abs());

        let taps: Vec<(f64, f64)> = spectrum
            .samples
            .iter()
            .enumerate()
            .map(|(i, s)| (40.0 * i as f64 + s.azimuth_deg, s.power_mw))
            .collect();
        // Pairwise identity: var = sum_ij w_i w_j (t_i - t_j)^2 / 2, an
        // independent route to the same spread.
        let total: f64 = taps.iter().map(|t| t.1).sum();
        let mut pairwise = 0.0;
        for (i, &(ti, pi)) in taps.iter().enumerate() {
            for &(tj, pj) in &taps[i + 1..] {
                pairwise += pi * pj * (ti - tj) * (ti - tj);
            }
        }
        let slow_ds = (pairwise / (total * total)).sqrt();
        let fast_ds = rms_delay_spread(taps.iter().copied()).unwrap();
        worst_ds = worst_ds.max((fast_ds - slow_ds).abs());
    }
    report(
        "statistics oracles",
        worst_az <= 0.5 && worst_ds <= 1e-9,
        &format!(
            "120 random spectra: circular azimuth spread within {worst_az:.2e} deg of a \
             0.1 deg shift scan (limit 0.5); delay spread within {worst_ds:.2e} ns of a \
             pairwise-difference reference (limit 1e-9)"
        ),
    );
}

#[test]
fn c7_serial_and_parallel_runs_are_byte_identical() {
    let mut cfg = RunConfig::new(ScenarioKey::Nlos28);
    cfg.n_realizations = 96;

    let serial: Vec<String> = (0..cfg.n_realizations as u64)
        .map(|k| channel_to_json(&realize_channel(&cfg, k).unwrap()))
        .collect();
    let parallel: Vec<String> = (0..cfg.n_realizations as u64)
        .into_par_iter()
        .map(|k| channel_to_json(&realize_channel(&cfg, k).unwrap()))
        .collect();
    let dumps_ok = serial == parallel;

    cfg.parallel = false;
    let run_serial = run_ensemble(&cfg).unwrap();
    cfg.parallel = true;
    let run_parallel = run_ensemble(&cfg).unwrap();
    let reports_ok = run_serial == run_parallel;

    report(
        "determinism",
        dumps_ok && reports_ok,
        &format!(
            "96 channel dumps byte-identical serial vs parallel: {dumps_ok}; \
             ensemble records and report identical: {reports_ok}"
        ),
    );
}

#[test]
fn c8_sampling_distributions_match_their_laws() {
    const N: usize = 1_000_000;
    let nf = N as f64;
    let mut pass = true;
    let mut details = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(88_001);
    let mut in_bounds = true;
    let mut sum = 0.0;
    for _ in 0..N {
        let v = draw::discrete_uniform(&mut rng, 1, 6);
        in_bounds &= (1..=6).contains(&v);
        sum += v as f64;
    }
    let ok = in_bounds && ((sum / nf - 3.5) / 3.5).abs() <= 0.01;
    pass &= ok;
    details.push(format!("discrete uniform 1..=6 bounds and mean {:.4}: {ok}", sum / nf));

    let mut rng = ChaCha8Rng::seed_from_u64(88_002);
    let mut in_bounds = true;
    let mut sum = 0.0;
    for _ in 0..N {
        let v = draw::discrete_uniform(&mut rng, 1, 30);
        in_bounds &= (1..=30).contains(&v);
        sum += v as f64;
    }
    let ok = in_bounds && ((sum / nf - 15.5) / 15.5).abs() <= 0.01;
    pass &= ok;
    details.push(format!("discrete uniform 1..=30 bounds and mean {:.3}: {ok}", sum / nf));

    let mut rng = ChaCha8Rng::seed_from_u64(88_003);
    let mean: f64 = (0..N).map(|_| draw::exp_mean(&mut rng, 83.0)).sum::<f64>() / nf;
    let ok = ((mean - 83.0) / 83.0).abs() <= 0.01;
    pass &= ok;
    details.push(format!("exponential mean {mean:.3} vs 83: {ok}"));

    let mut rng = ChaCha8Rng::seed_from_u64(88_004);
    let sq = (0..N).map(|_| draw::gaussian(&mut rng, 0.0, 25.9).powi(2)).sum::<f64>() / nf;
    let std = sq.sqrt();
    let ok = ((std - 25.9) / 25.9).abs() <= 0.01;
    pass &= ok;
    details.push(format!("gaussian std {std:.3} vs 25.9: {ok}"));

    let mut rng = ChaCha8Rng::seed_from_u64(88_005);
    let sq = (0..N).map(|_| draw::laplace(&mut rng, 11.0).powi(2)).sum::<f64>() / nf;
    let std = sq.sqrt();
    let ok = ((std - 11.0) / 11.0).abs() <= 0.01;
    pass &= ok;
    details.push(format!("laplace std {std:.3} vs 11.0: {ok}"));

    let mut rng = ChaCha8Rng::seed_from_u64(88_006);
    let mut phases: Vec<f64> = (0..N).map(|_| draw::phase(&mut rng)).collect();
    phases.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut d: f64 = 0.0;
    for (i, &p) in phases.iter().enumerate() {
        let u = p / std::f64::consts::TAU;
        d = d.max(((i + 1) as f64 / nf - u).abs()).max((u - i as f64 / nf).abs());
    }
    // 1.628 / sqrt(n) is the asymptotic 1% critical value of the
    // one-sample Kolmogorov-Smirnov statistic.
    let crit = 1.628 / nf.sqrt();
    let ok = d <= crit;
    pass &= ok;
    details.push(format!("phase uniformity KS {d:.3e} <= {crit:.3e}: {ok}"));

    report("sampling distributions", pass, &details.join("; "));
}
