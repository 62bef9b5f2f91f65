//! Omnidirectional double-directional channel generation.
//!
//! A channel realization is a set of time clusters, each holding
//! baseband-resolvable subpaths, with departure and arrival directions
//! organized into spatial lobes. Generation runs as a fixed sequence of
//! stages: link geometry and budget, cluster/lobe/subpath counts,
//! intra-cluster and inter-cluster delays, cluster then subpath powers,
//! phases, lobe directions, and finally per-subpath angles. The stage
//! order fixes the random draw order, which is what makes a realization
//! a pure function of `(master seed, realization index)`.
//!
//! # Usage
//!
//! ```
//! use rand::SeedableRng;
//! use sscm::channel::{ChannelConfig, generate_channel};
//! use sscm::params::ScenarioKey;
//!
//! let cfg = ChannelConfig::new(ScenarioKey::Nlos28, 28e9).unwrap();
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let chan = generate_channel(&cfg, &mut rng);
//! assert!(!chan.clusters.is_empty());
//! assert_eq!(chan.clusters[0].excess_delay_ns, 0.0);
//! ```

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::draw;
use crate::error::{Error, Result};
use crate::params::{
    Band, Environment, PathLossParams, ScenarioKey, ScenarioParams, lookup_pathloss,
    lookup_scenario,
};
use crate::pathloss::{self, FREQ_RANGE_HZ, SPEED_OF_LIGHT_M_S};

/// Departure or arrival side of the double-directional channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Departure (transmitter) side.
    Aod,
    /// Arrival (receiver) side.
    Aoa,
}

/// One spatial lobe: a main direction energy departs toward or arrives
/// from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpatialLobe {
    pub side: Side,
    /// 1-based lobe index; lobe `i` owns the azimuth sector
    /// `[360 (i-1) / L, 360 i / L)` degrees.
    pub index: u32,
    /// Mean azimuth, degrees in `[0, 360)`.
    pub mean_azimuth_deg: f64,
    /// Mean elevation, degrees (positive above horizon).
    pub mean_elevation_deg: f64,
}

/// One resolvable multipath component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Subpath {
    /// Delay past the start of its cluster, ns.
    pub intra_delay_ns: f64,
    /// Absolute propagation delay, ns.
    pub abs_delay_ns: f64,
    /// Received power, mW.
    pub power_mw: f64,
    /// Field amplitude, `sqrt(power_mw)`.
    pub amplitude: f64,
    /// Phase, radians in `[0, 2 pi)`.
    pub phase_rad: f64,
    pub aod_azimuth_deg: f64,
    pub aod_elevation_deg: f64,
    pub aoa_azimuth_deg: f64,
    pub aoa_elevation_deg: f64,
    /// 1-based index of the departure lobe the subpath belongs to.
    pub aod_lobe: u32,
    /// 1-based index of the arrival lobe the subpath belongs to.
    pub aoa_lobe: u32,
}

/// A group of subpaths arriving close in time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeCluster {
    /// 1-based position in arrival order.
    pub index: u32,
    /// Delay of the cluster start past the first arrival, ns.
    pub excess_delay_ns: f64,
    /// Total cluster power, mW.
    pub power_mw: f64,
    pub subpaths: Vec<Subpath>,
}

/// One omnidirectional channel realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Channel {
    /// Transmitter-receiver separation, m.
    pub distance_m: f64,
    /// Line-of-sight propagation delay `d / c`, ns.
    pub t0_ns: f64,
    /// Transmit power, dBm.
    pub tx_power_dbm: f64,
    /// Omnidirectional received power, dBm.
    pub rx_power_dbm: f64,
    /// Shadow fading realization, dB.
    pub shadow_db: f64,
    /// Path loss realization, dB.
    pub path_loss_db: f64,
    /// True when every subpath fell below the detectability cut; the
    /// cluster list is empty in that case.
    pub outage: bool,
    pub clusters: Vec<TimeCluster>,
    pub aod_lobes: Vec<SpatialLobe>,
    pub aoa_lobes: Vec<SpatialLobe>,
}

impl Channel {
    /// Iterates over all subpaths in cluster order.
    pub fn subpaths(&self) -> impl Iterator<Item = &Subpath> {
        self.clusters.iter().flat_map(|c| c.subpaths.iter())
    }

    /// Number of retained subpaths.
    pub fn n_subpaths(&self) -> usize {
        self.clusters.iter().map(|c| c.subpaths.len()).sum()
    }

    /// Sum of retained subpath powers, mW.
    pub fn total_power_mw(&self) -> f64 {
        self.subpaths().map(|s| s.power_mw).sum()
    }
}

/// Everything needed to generate channel realizations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub scenario: ScenarioKey,
    pub carrier_frequency_hz: f64,
    /// Transmit power, dBm.
    pub tx_power_dbm: f64,
    /// Separation is drawn uniformly from this closed-open interval, m.
    pub distance_range_m: (f64, f64),
    pub pathloss: PathLossParams,
    pub params: ScenarioParams,
}

/// Default transmit power, dBm.
pub const DEFAULT_TX_POWER_DBM: f64 = 30.0;

/// Default separation ranges by blockage condition, m.
pub fn default_distance_range_m(env: Environment) -> (f64, f64) {
    match env {
        Environment::Los => (30.0, 60.0),
        Environment::Nlos => (60.0, 200.0),
    }
}

impl ChannelConfig {
    /// Builds a config from a preset at the given carrier.
    ///
    /// The path loss row comes from the measured table at the nearest
    /// band, except under line of sight where validation runs use the
    /// free-space exponent 2.0 with the measured shadowing sigma.
    pub fn new(scenario: ScenarioKey, carrier_frequency_hz: f64) -> Result<Self> {
        let env = scenario.environment();
        let band = Band::nearest(carrier_frequency_hz);
        let mut pl = lookup_pathloss(band, env);
        if env == Environment::Los {
            pl.exponent = 2.0;
        }
        let cfg = ChannelConfig {
            scenario,
            carrier_frequency_hz,
            tx_power_dbm: DEFAULT_TX_POWER_DBM,
            distance_range_m: default_distance_range_m(env),
            pathloss: pl,
            params: lookup_scenario(scenario),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks the config against its documented domain.
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = FREQ_RANGE_HZ;
        if !(self.carrier_frequency_hz >= lo && self.carrier_frequency_hz <= hi) {
            return Err(Error::config(format!(
                "carrier frequency {} Hz outside supported range [{lo}, {hi}]",
                self.carrier_frequency_hz
            )));
        }
        let (dmin, dmax) = self.distance_range_m;
        if !(dmin >= 1.0 && dmax >= dmin) {
            return Err(Error::config(format!(
                "distance range [{dmin}, {dmax}] m must satisfy 1 <= dmin <= dmax"
            )));
        }
        if !self.tx_power_dbm.is_finite() {
            return Err(Error::config("tx_power_dbm must be finite"));
        }
        if !(self.pathloss.exponent.is_finite() && self.pathloss.exponent > 0.0) {
            return Err(Error::config("path loss exponent must be positive"));
        }
        if !(self.pathloss.shadow_sigma_db.is_finite() && self.pathloss.shadow_sigma_db >= 0.0) {
            return Err(Error::config("shadow sigma must be nonnegative"));
        }
        self.params.validate()
    }
}

/// Draws the terminal separation, uniform over the config range. One draw.
pub fn draw_distance<R: Rng + ?Sized>(rng: &mut R, range_m: (f64, f64)) -> f64 {
    draw::uniform(rng, range_m.0, range_m.1)
}

/// Cluster and lobe counts for one realization: the cluster count is
/// discrete uniform on `[1, max_clusters]`; each lobe count is Poisson,
/// clamped to `[1, max_lobes]`. Three draws.
pub fn draw_counts<R: Rng + ?Sized>(rng: &mut R, p: &ScenarioParams) -> (u32, u32, u32) {
    let n_clusters = draw::discrete_uniform(rng, 1, p.max_clusters);
    let l_aod = (draw::poisson(rng, p.mean_aod_lobes) as u32).clamp(1, p.max_lobes);
    let l_aoa = (draw::poisson(rng, p.mean_aoa_lobes) as u32).clamp(1, p.max_lobes);
    (n_clusters, l_aod, l_aoa)
}

/// Subpath count per cluster, discrete uniform on `[1, max_subpaths]`.
/// One draw per cluster.
pub fn draw_subpath_counts<R: Rng + ?Sized>(
    rng: &mut R,
    n_clusters: u32,
    max_subpaths: u32,
) -> Vec<u32> {
    (0..n_clusters).map(|_| draw::discrete_uniform(rng, 1, max_subpaths)).collect()
}

/// Intra-cluster delays for one cluster, ns: component `m` (1-based)
/// sits at `((1e9 / bw) * (m - 1)) ^ (1 + x)` where `x` is one uniform
/// draw on `[0, x_max]` shared by the whole cluster. The leading
/// component is always at 0. One draw.
pub fn gen_intra_delays<R: Rng + ?Sized>(
    rng: &mut R,
    n_subpaths: u32,
    baseband_bandwidth_hz: f64,
    x_max: f64,
) -> Vec<f64> {
    let x = draw::uniform(rng, 0.0, x_max);
    let step_ns = 1e9 / baseband_bandwidth_hz;
    (0..n_subpaths).map(|m| (step_ns * m as f64).powf(1.0 + x)).collect()
}

/// Cluster excess delays, ns. Raw exponential draws (one per cluster,
/// mean `mean_excess_delay_ns`) are sorted ascending and baselined to
/// zero; cluster `n` then starts a guaranteed void past the point where
/// cluster `n-1` stops ringing:
///
/// `tau[0] = 0`,
/// `tau[n] = tau[n-1] + last_intra[n-1] + delta[n] + min_void_ns`.
///
/// `last_intra_delays_ns[k]` is the largest intra-cluster delay of
/// cluster `k`. `n_clusters` draws.
pub fn gen_cluster_delays<R: Rng + ?Sized>(
    rng: &mut R,
    n_clusters: u32,
    mean_excess_delay_ns: f64,
    min_void_ns: f64,
    last_intra_delays_ns: &[f64],
) -> Vec<f64> {
    debug_assert_eq!(last_intra_delays_ns.len(), n_clusters as usize);
    let mut raw: Vec<f64> =
        (0..n_clusters).map(|_| draw::exp_mean(rng, mean_excess_delay_ns)).collect();
    raw.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let base = raw[0];
    let delta: Vec<f64> = raw.iter().map(|t| t - base).collect();

    let mut tau = Vec::with_capacity(n_clusters as usize);
    tau.push(0.0);
    for n in 1..n_clusters as usize {
        tau.push(tau[n - 1] + last_intra_delays_ns[n - 1] + delta[n] + min_void_ns);
    }
    tau
}

/// Cluster powers, mW: exponential decay over excess delay with
/// per-cluster lognormal shadowing, normalized so the retained total is
/// exactly `rx_power_mw`. One draw per cluster.
pub fn gen_cluster_powers<R: Rng + ?Sized>(
    rng: &mut R,
    excess_delays_ns: &[f64],
    decay_ns: f64,
    shadow_sigma_db: f64,
    scale_mw: f64,
    rx_power_mw: f64,
) -> Vec<f64> {
    let raw: Vec<f64> = excess_delays_ns
        .iter()
        .map(|tau| {
            let z = draw::gaussian(rng, 0.0, shadow_sigma_db);
            scale_mw * (-tau / decay_ns).exp() * 10f64.powf(z / 10.0)
        })
        .collect();
    normalize_to(raw, rx_power_mw)
}

/// Subpath powers within one cluster, mW: exponential decay over
/// intra-cluster delay with per-subpath lognormal shadowing, normalized
/// to the cluster power. One draw per subpath.
pub fn gen_subpath_powers<R: Rng + ?Sized>(
    rng: &mut R,
    intra_delays_ns: &[f64],
    decay_ns: f64,
    shadow_sigma_db: f64,
    scale_mw: f64,
    cluster_power_mw: f64,
) -> Vec<f64> {
    let raw: Vec<f64> = intra_delays_ns
        .iter()
        .map(|rho| {
            let u = draw::gaussian(rng, 0.0, shadow_sigma_db);
            scale_mw * (-rho / decay_ns).exp() * 10f64.powf(u / 10.0)
        })
        .collect();
    normalize_to(raw, cluster_power_mw)
}

fn normalize_to(raw: Vec<f64>, total: f64) -> Vec<f64> {
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|p| p * total / sum).collect()
}

/// Independent subpath phases, uniform on `[0, 2 pi)`. One draw each.
pub fn gen_phases<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<f64> {
    (0..count).map(|_| draw::phase(rng)).collect()
}

/// Spatial lobe directions for one side. Lobe `i` of `l` draws its mean
/// azimuth uniformly inside its private sector
/// `[360 (i-1) / l, 360 i / l)` so lobes never collide; mean elevations
/// are Gaussian. All azimuth draws happen before the elevation draws.
/// `2 l` draws.
pub fn gen_lobes<R: Rng + ?Sized>(
    rng: &mut R,
    side: Side,
    l: u32,
    elevation_mean_deg: f64,
    elevation_sigma_deg: f64,
) -> Vec<SpatialLobe> {
    let sector = 360.0 / l as f64;
    let azimuths: Vec<f64> =
        (0..l).map(|i| draw::uniform(rng, sector * i as f64, sector * (i + 1) as f64)).collect();
    azimuths
        .into_iter()
        .enumerate()
        .map(|(i, az)| SpatialLobe {
            side,
            index: i as u32 + 1,
            mean_azimuth_deg: az,
            mean_elevation_deg: draw::gaussian(rng, elevation_mean_deg, elevation_sigma_deg),
        })
        .collect()
}

/// Wraps an azimuth to `[0, 360)` degrees.
pub fn wrap_azimuth_deg(az: f64) -> f64 {
    az.rem_euclid(360.0)
}

/// Clamps an elevation to `[-90, 90]` degrees.
pub fn clamp_elevation_deg(el: f64) -> f64 {
    el.clamp(-90.0, 90.0)
}

/// Angle set of one subpath produced by [`gen_subpath_angles`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubpathAngles {
    pub aod_azimuth_deg: f64,
    pub aod_elevation_deg: f64,
    pub aoa_azimuth_deg: f64,
    pub aoa_elevation_deg: f64,
    pub aod_lobe: u32,
    pub aoa_lobe: u32,
}

/// Assigns each of `count` subpaths a departure and arrival lobe
/// (discrete uniform over the lobes) and scatters it about the lobe
/// means: Gaussian azimuth and elevation offsets on the departure side,
/// Gaussian azimuth and Laplace elevation offsets on the arrival side.
/// Azimuths wrap to `[0, 360)`; elevations clamp to `[-90, 90]`.
///
/// Per subpath: the two lobe assignments are drawn first (all subpaths),
/// then the four offsets (all subpaths), keeping each block contiguous
/// in the stream. Six draws per subpath.
pub fn gen_subpath_angles<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    aod_lobes: &[SpatialLobe],
    aoa_lobes: &[SpatialLobe],
    p: &ScenarioParams,
) -> Vec<SubpathAngles> {
    let assignments: Vec<(u32, u32)> = (0..count)
        .map(|_| {
            let i = draw::discrete_uniform(rng, 1, aod_lobes.len() as u32);
            let j = draw::discrete_uniform(rng, 1, aoa_lobes.len() as u32);
            (i, j)
        })
        .collect();
    assignments
        .into_iter()
        .map(|(i, j)| {
            let aod = &aod_lobes[(i - 1) as usize];
            let aoa = &aoa_lobes[(j - 1) as usize];
            let d_az_aod = draw::gaussian(rng, 0.0, p.aod_azimuth_offset_sigma_deg);
            let d_el_aod = draw::gaussian(rng, 0.0, p.aod_elevation_offset_sigma_deg);
            let d_az_aoa = draw::gaussian(rng, 0.0, p.aoa_azimuth_offset_sigma_deg);
            let d_el_aoa = draw::laplace(rng, p.aoa_elevation_offset_sigma_deg);
            SubpathAngles {
                aod_azimuth_deg: wrap_azimuth_deg(aod.mean_azimuth_deg + d_az_aod),
                aod_elevation_deg: clamp_elevation_deg(aod.mean_elevation_deg + d_el_aod),
                aoa_azimuth_deg: wrap_azimuth_deg(aoa.mean_azimuth_deg + d_az_aoa),
                aoa_elevation_deg: clamp_elevation_deg(aoa.mean_elevation_deg + d_el_aoa),
                aod_lobe: i,
                aoa_lobe: j,
            }
        })
        .collect()
}

/// Generates one omnidirectional channel realization.
///
/// Draw order (fixed; see the module docs): distance, shadowing,
/// cluster/lobe counts, subpath counts, per-cluster delay exponents,
/// cluster excess delays, cluster powers, subpath powers, phases,
/// departure lobes, arrival lobes, lobe assignments, angle offsets.
///
/// Subpaths whose omnidirectional loss `tx_power_dbm - power_dbm`
/// exceeds `params.max_path_loss_db` are dropped afterwards; clusters
/// emptied by the cut disappear, and a realization losing every subpath
/// is returned with `outage` set and no clusters.
pub fn generate_channel<R: Rng + ?Sized>(cfg: &ChannelConfig, rng: &mut R) -> Channel {
    let p = &cfg.params;

    let distance_m = draw_distance(rng, cfg.distance_range_m);
    let shadow_db = pathloss::draw_shadow(rng, cfg.pathloss.shadow_sigma_db);
    // Domain was checked at config construction.
    let path_loss_db =
        pathloss::path_loss_db(&cfg.pathloss, cfg.carrier_frequency_hz, distance_m, shadow_db)
            .expect("validated config");
    let rx_power_dbm = cfg.tx_power_dbm - path_loss_db;
    let rx_power_mw = pathloss::dbm_to_mw(rx_power_dbm);
    let t0_ns = distance_m / SPEED_OF_LIGHT_M_S * 1e9;

    let (n_clusters, l_aod, l_aoa) = draw_counts(rng, p);
    let subpath_counts = draw_subpath_counts(rng, n_clusters, p.max_subpaths);

    let intra: Vec<Vec<f64>> = subpath_counts
        .iter()
        .map(|&m| gen_intra_delays(rng, m, p.baseband_bandwidth_hz, p.delay_exponent_max))
        .collect();
    let last_intra: Vec<f64> = intra.iter().map(|d| *d.last().expect("m >= 1")).collect();
    let tau =
        gen_cluster_delays(rng, n_clusters, p.mean_excess_delay_ns, p.min_void_ns, &last_intra);

    let cluster_powers = gen_cluster_powers(
        rng,
        &tau,
        p.cluster_decay_ns,
        p.cluster_shadow_sigma_db,
        p.cluster_power_scale_mw,
        rx_power_mw,
    );
    let subpath_powers: Vec<Vec<f64>> = intra
        .iter()
        .zip(&cluster_powers)
        .map(|(rho, &pc)| {
            gen_subpath_powers(
                rng,
                rho,
                p.subpath_decay_ns,
                p.subpath_shadow_sigma_db,
                p.subpath_power_scale_mw,
                pc,
            )
        })
        .collect();

    let total_subpaths: usize = subpath_counts.iter().map(|&m| m as usize).sum();
    let phases = gen_phases(rng, total_subpaths);

    let aod_lobes = gen_lobes(
        rng,
        Side::Aod,
        l_aod,
        p.aod_lobe_elevation_deg.mean,
        p.aod_lobe_elevation_deg.sigma,
    );
    let aoa_lobes = gen_lobes(
        rng,
        Side::Aoa,
        l_aoa,
        p.aoa_lobe_elevation_deg.mean,
        p.aoa_lobe_elevation_deg.sigma,
    );
    let angles = gen_subpath_angles(rng, total_subpaths, &aod_lobes, &aoa_lobes, p);

    // Assembly and the detectability cut; no draws past this point.
    let mut clusters = Vec::with_capacity(n_clusters as usize);
    let mut flat = 0usize;
    for n in 0..n_clusters as usize {
        let mut subpaths = Vec::with_capacity(subpath_counts[n] as usize);
        for m in 0..subpath_counts[n] as usize {
            let power_mw = subpath_powers[n][m];
            let loss_db = cfg.tx_power_dbm - pathloss::mw_to_dbm(power_mw);
            if loss_db <= p.max_path_loss_db {
                let a = &angles[flat];
                subpaths.push(Subpath {
                    intra_delay_ns: intra[n][m],
                    abs_delay_ns: t0_ns + tau[n] + intra[n][m],
                    power_mw,
                    amplitude: power_mw.sqrt(),
                    phase_rad: phases[flat],
                    aod_azimuth_deg: a.aod_azimuth_deg,
                    aod_elevation_deg: a.aod_elevation_deg,
                    aoa_azimuth_deg: a.aoa_azimuth_deg,
                    aoa_elevation_deg: a.aoa_elevation_deg,
                    aod_lobe: a.aod_lobe,
                    aoa_lobe: a.aoa_lobe,
                });
            }
            flat += 1;
        }
        if !subpaths.is_empty() {
            clusters.push(TimeCluster {
                index: n as u32 + 1,
                excess_delay_ns: tau[n],
                power_mw: subpaths.iter().map(|s| s.power_mw).sum(),
                subpaths,
            });
        }
    }

    let outage = clusters.is_empty();
    Channel {
        distance_m,
        t0_ns,
        tx_power_dbm: cfg.tx_power_dbm,
        rx_power_dbm,
        shadow_db,
        path_loss_db,
        outage,
        clusters,
        aod_lobes,
        aoa_lobes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn nlos_cfg() -> ChannelConfig {
        ChannelConfig::new(ScenarioKey::Nlos28, 28e9).unwrap()
    }

    #[test]
    fn intra_delays_start_at_zero_and_follow_the_power_law() {
        // x_max = 0 pins the exponent at 1: delays are exact multiples of
        // the 2.5 ns step at 400 MHz.
        let mut r = rng(1);
        let d = gen_intra_delays(&mut r, 4, 400e6, 0.0);
        assert_eq!(d, vec![0.0, 2.5, 5.0, 7.5]);

        // A known exponent reproduces by hand: (2.5 * 2)^1.5.
        let d = (2.5f64 * 2.0).powf(1.5);
        assert_abs_diff_eq!(d, 11.180339887498949, epsilon = 1e-12);
    }

    #[test]
    fn intra_delays_are_strictly_increasing() {
        let mut r = rng(2);
        for _ in 0..200 {
            let d = gen_intra_delays(&mut r, 30, 400e6, 0.5);
            assert_eq!(d[0], 0.0);
            for w in d.windows(2) {
                assert!(w[1] > w[0]);
            }
        }
    }

    #[test]
    fn cluster_delays_enforce_the_minimum_void() {
        let mut r = rng(3);
        for _ in 0..500 {
            let last = [7.5, 12.0, 3.0, 40.0, 0.0, 9.0];
            let tau = gen_cluster_delays(&mut r, 6, 83.0, 25.0, &last);
            assert_eq!(tau[0], 0.0);
            for n in 1..6 {
                // Void between end of cluster n-1 and start of cluster n.
                let gap = tau[n] - (tau[n - 1] + last[n - 1]);
                assert!(gap >= 25.0, "void {gap} below floor");
                assert!(tau[n] > tau[n - 1]);
            }
        }
    }

    #[test]
    fn single_cluster_has_zero_excess_delay() {
        let mut r = rng(4);
        let tau = gen_cluster_delays(&mut r, 1, 123.0, 25.0, &[5.0]);
        assert_eq!(tau, vec![0.0]);
    }

    #[test]
    fn cluster_powers_sum_to_received_power() {
        let mut r = rng(5);
        let tau = [0.0, 60.0, 130.0, 300.0];
        let p = gen_cluster_powers(&mut r, &tau, 49.4, 3.0, 1.0, 2.5e-9);
        assert_eq!(p.len(), 4);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 2.5e-9, epsilon = 2.5e-9 * 1e-12);
        assert!(p.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn subpath_powers_sum_to_cluster_power() {
        let mut r = rng(6);
        let rho: Vec<f64> = (0..20).map(|m| 2.5 * m as f64).collect();
        let p = gen_subpath_powers(&mut r, &rho, 16.9, 6.0, 1.0, 7.7e-10);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 7.7e-10, epsilon = 7.7e-10 * 1e-12);
    }

    #[test]
    fn powers_without_shadowing_decay_monotonically() {
        let mut r = rng(7);
        let tau = [0.0, 50.0, 100.0, 200.0];
        let p = gen_cluster_powers(&mut r, &tau, 49.4, 0.0, 1.0, 1.0);
        for w in p.windows(2) {
            assert!(w[1] < w[0]);
        }
        // Zero sigma still consumes draws: stream position must match the
        // shadowed variant.
        let mut a = rng(8);
        let _ = gen_cluster_powers(&mut a, &tau, 49.4, 0.0, 1.0, 1.0);
        let mut b = rng(8);
        let _ = gen_cluster_powers(&mut b, &tau, 49.4, 3.0, 1.0, 1.0);
        use rand::RngExt;
        assert_eq!(a.random::<u64>(), b.random::<u64>());
    }

    #[test]
    fn lobes_stay_inside_their_sectors() {
        let mut r = rng(9);
        for _ in 0..200 {
            for l in 1..=5u32 {
                let lobes = gen_lobes(&mut r, Side::Aoa, l, 3.6, 4.8);
                assert_eq!(lobes.len(), l as usize);
                let sector = 360.0 / l as f64;
                for (i, lobe) in lobes.iter().enumerate() {
                    assert_eq!(lobe.index, i as u32 + 1);
                    let lo = sector * i as f64;
                    let hi = sector * (i + 1) as f64;
                    assert!(
                        lobe.mean_azimuth_deg >= lo && lobe.mean_azimuth_deg < hi,
                        "lobe {} azimuth {} outside [{lo}, {hi})",
                        lobe.index,
                        lobe.mean_azimuth_deg
                    );
                }
            }
        }
    }

    #[test]
    fn azimuth_wrap_and_elevation_clamp() {
        assert_abs_diff_eq!(wrap_azimuth_deg(365.0), 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_azimuth_deg(-10.0), 350.0, epsilon = 1e-12);
        assert_eq!(wrap_azimuth_deg(0.0), 0.0);
        assert!(wrap_azimuth_deg(360.0) < 360.0);
        assert_eq!(clamp_elevation_deg(95.0), 90.0);
        assert_eq!(clamp_elevation_deg(-95.0), -90.0);
        assert_eq!(clamp_elevation_deg(12.0), 12.0);
    }

    #[test]
    fn subpath_angles_reference_existing_lobes() {
        let mut r = rng(10);
        let p = lookup_scenario(ScenarioKey::Nlos73);
        let aod = gen_lobes(&mut r, Side::Aod, 2, -4.9, 4.5);
        let aoa = gen_lobes(&mut r, Side::Aoa, 5, 3.6, 4.8);
        let angles = gen_subpath_angles(&mut r, 300, &aod, &aoa, &p);
        assert_eq!(angles.len(), 300);
        let mut seen_aoa = [false; 5];
        for a in &angles {
            assert!((1..=2).contains(&a.aod_lobe));
            assert!((1..=5).contains(&a.aoa_lobe));
            assert!((0.0..360.0).contains(&a.aod_azimuth_deg));
            assert!((0.0..360.0).contains(&a.aoa_azimuth_deg));
            assert!((-90.0..=90.0).contains(&a.aod_elevation_deg));
            assert!((-90.0..=90.0).contains(&a.aoa_elevation_deg));
            seen_aoa[(a.aoa_lobe - 1) as usize] = true;
        }
        assert!(seen_aoa.iter().all(|&s| s), "all five arrival lobes should be hit");
    }

    #[test]
    fn generated_channel_upholds_structure() {
        let cfg = nlos_cfg();
        let mut r = rng(11);
        for _ in 0..300 {
            let c = generate_channel(&cfg, &mut r);
            assert!((60.0..200.0).contains(&c.distance_m));
            assert_abs_diff_eq!(c.t0_ns, c.distance_m / 0.3, epsilon = 1e-9);
            assert!(!c.outage);
            assert!((1..=6).contains(&c.clusters.len()));
            assert!((1..=5).contains(&c.aod_lobes.len()));
            assert!((1..=5).contains(&c.aoa_lobes.len()));
            for cl in &c.clusters {
                assert!((1..=30).contains(&cl.subpaths.len()));
                assert_abs_diff_eq!(
                    cl.power_mw,
                    cl.subpaths.iter().map(|s| s.power_mw).sum::<f64>(),
                    epsilon = cl.power_mw * 1e-12
                );
                for s in &cl.subpaths {
                    assert_abs_diff_eq!(
                        s.abs_delay_ns,
                        c.t0_ns + cl.excess_delay_ns + s.intra_delay_ns,
                        epsilon = 1e-9
                    );
                    assert_abs_diff_eq!(s.amplitude, s.power_mw.sqrt(), epsilon = 1e-15);
                    assert!((0.0..std::f64::consts::TAU).contains(&s.phase_rad));
                    assert!(s.aod_lobe as usize <= c.aod_lobes.len());
                    assert!(s.aoa_lobe as usize <= c.aoa_lobes.len());
                }
            }
            // First cluster starts at zero excess delay.
            assert_eq!(c.clusters[0].excess_delay_ns, 0.0);
        }
    }

    #[test]
    fn power_conserves_exactly_without_the_detectability_cut() {
        let mut cfg = nlos_cfg();
        cfg.params.max_path_loss_db = f64::INFINITY;
        let mut r = rng(12);
        for _ in 0..300 {
            let c = generate_channel(&cfg, &mut r);
            let rx_mw = pathloss::dbm_to_mw(c.rx_power_dbm);
            assert_abs_diff_eq!(c.total_power_mw(), rx_mw, epsilon = rx_mw * 1e-9);
            let cluster_sum: f64 = c.clusters.iter().map(|cl| cl.power_mw).sum();
            assert_abs_diff_eq!(cluster_sum, rx_mw, epsilon = rx_mw * 1e-9);
        }
    }

    #[test]
    fn detectability_cut_produces_outage_when_loss_budget_is_tiny() {
        let mut cfg = nlos_cfg();
        cfg.params.max_path_loss_db = 1.0;
        let mut r = rng(13);
        let c = generate_channel(&cfg, &mut r);
        assert!(c.outage);
        assert!(c.clusters.is_empty());
        assert_eq!(c.n_subpaths(), 0);
        // Lobes are part of the geometry and survive the cut.
        assert!(!c.aoa_lobes.is_empty());
    }

    #[test]
    fn same_seed_reproduces_the_channel_exactly() {
        let cfg = nlos_cfg();
        let a = generate_channel(&cfg, &mut rng(99));
        let b = generate_channel(&cfg, &mut rng(99));
        assert!(a == b);
        let c = generate_channel(&cfg, &mut rng(100));
        assert!(a != c);
    }

    #[test]
    fn los_config_spans_the_short_range() {
        let cfg = ChannelConfig::new(ScenarioKey::Los28_73, 28e9).unwrap();
        assert_eq!(cfg.distance_range_m, (30.0, 60.0));
        assert_eq!(cfg.pathloss.exponent, 2.0);
        assert_eq!(cfg.pathloss.shadow_sigma_db, 3.6);
        let cfg73 = ChannelConfig::new(ScenarioKey::Los28_73, 73e9).unwrap();
        assert_eq!(cfg73.pathloss.shadow_sigma_db, 5.2);
    }

    #[test]
    fn nlos_config_uses_measured_exponents() {
        let cfg = ChannelConfig::new(ScenarioKey::Nlos28, 28e9).unwrap();
        assert_eq!(cfg.pathloss.exponent, 3.4);
        let cfg = ChannelConfig::new(ScenarioKey::Nlos73, 73e9).unwrap();
        assert_eq!(cfg.pathloss.exponent, 3.3);
        assert_eq!(cfg.distance_range_m, (60.0, 200.0));
    }

    #[test]
    fn config_rejects_bad_domains() {
        assert!(ChannelConfig::new(ScenarioKey::Nlos28, 1e9).is_err());
        let mut cfg = nlos_cfg();
        cfg.distance_range_m = (200.0, 60.0);
        assert!(cfg.validate().is_err());
        let mut cfg = nlos_cfg();
        cfg.distance_range_m = (0.5, 60.0);
        assert!(cfg.validate().is_err());
        let mut cfg = nlos_cfg();
        cfg.params.baseband_bandwidth_hz = 1e9;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn channel_serializes_and_round_trips() {
        let cfg = nlos_cfg();
        let c = generate_channel(&cfg, &mut rng(21));
        let json = serde_json::to_string(&c).unwrap();
        let back: Channel = serde_json::from_str(&json).unwrap();
        assert!(back == c);
    }
}
