//! Scenario parameters and built-in presets.
//!
//! A [`ScenarioParams`] bundle fully determines the statistical channel
//! generator: cluster and lobe count laws, delay decay constants,
//! per-stage shadowing sigmas, and the subpath angle-offset scales.
//! Four presets ship with the crate, fit to 28 and 73 GHz urban
//! measurement campaigns; [`ScenarioOverrides`] lets a config file or
//! caller replace any subset of fields.
//!
//! # Usage
//!
//! ```
//! use sscm::params::{ScenarioKey, lookup_scenario};
//!
//! let p = lookup_scenario(ScenarioKey::Nlos73);
//! assert_eq!(p.max_clusters, 6);
//! assert_eq!(p.cluster_decay_ns, 56.0);
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Link blockage condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Environment {
    /// Unobstructed optical path between terminals.
    Los,
    /// Obstructed path; propagation by reflection and scattering.
    Nlos,
}

/// Measured carrier band a parameter table row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Band {
    /// 28 GHz campaign.
    Ghz28,
    /// 73 GHz campaign.
    Ghz73,
}

impl Band {
    /// Band whose measurements sit closest to `freq_hz`.
    pub fn nearest(freq_hz: f64) -> Band {
        // Midpoint of the two measured carriers.
        if freq_hz < 50.5e9 { Band::Ghz28 } else { Band::Ghz73 }
    }

    /// Carrier frequency of the campaign in Hz.
    pub fn carrier_hz(self) -> f64 {
        match self {
            Band::Ghz28 => 28e9,
            Band::Ghz73 => 73e9,
        }
    }
}

/// Identifies one of the built-in parameter presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScenarioKey {
    /// Line-of-sight, joint 28/73 GHz fit.
    #[serde(rename = "los-28-73")]
    Los28_73,
    /// Non-line-of-sight, 28 GHz fit.
    #[serde(rename = "nlos-28")]
    Nlos28,
    /// Non-line-of-sight, 73 GHz fit.
    #[serde(rename = "nlos-73")]
    Nlos73,
    /// Non-line-of-sight, joint 28/73 GHz fit.
    #[serde(rename = "nlos-28-73")]
    Nlos28_73,
}

impl ScenarioKey {
    /// All presets, in a stable order.
    pub const ALL: [ScenarioKey; 4] =
        [ScenarioKey::Los28_73, ScenarioKey::Nlos28, ScenarioKey::Nlos73, ScenarioKey::Nlos28_73];

    /// Blockage condition the preset was fit under.
    pub fn environment(self) -> Environment {
        match self {
            ScenarioKey::Los28_73 => Environment::Los,
            _ => Environment::Nlos,
        }
    }

    /// Default carrier for simulations under this preset: the single-band
    /// presets use their own campaign carrier, the joint fits default to
    /// 28 GHz.
    pub fn default_carrier_hz(self) -> f64 {
        match self {
            ScenarioKey::Nlos73 => 73e9,
            _ => 28e9,
        }
    }

    /// Kebab-case name used by the CLI and config files.
    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioKey::Los28_73 => "los-28-73",
            ScenarioKey::Nlos28 => "nlos-28",
            ScenarioKey::Nlos73 => "nlos-73",
            ScenarioKey::Nlos28_73 => "nlos-28-73",
        }
    }
}

impl std::fmt::Display for ScenarioKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ScenarioKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "los-28-73" => Ok(ScenarioKey::Los28_73),
            "nlos-28" => Ok(ScenarioKey::Nlos28),
            "nlos-73" => Ok(ScenarioKey::Nlos73),
            "nlos-28-73" => Ok(ScenarioKey::Nlos28_73),
            other => Err(Error::config(format!(
                "unknown scenario {other:?} (expected one of: los-28-73, nlos-28, nlos-73, nlos-28-73)"
            ))),
        }
    }
}

/// Large-scale path loss parameters: close-in reference exponent and
/// lognormal shadowing sigma.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathLossParams {
    /// Path loss exponent referenced to the 1 m free-space intercept.
    pub exponent: f64,
    /// Shadow fading standard deviation in dB.
    pub shadow_sigma_db: f64,
}

/// Measured close-in path loss table, by band and blockage condition.
pub fn lookup_pathloss(band: Band, env: Environment) -> PathLossParams {
    match (band, env) {
        (Band::Ghz28, Environment::Los) => PathLossParams { exponent: 2.1, shadow_sigma_db: 3.6 },
        (Band::Ghz28, Environment::Nlos) => PathLossParams { exponent: 3.4, shadow_sigma_db: 9.7 },
        (Band::Ghz73, Environment::Los) => PathLossParams { exponent: 2.0, shadow_sigma_db: 5.2 },
        (Band::Ghz73, Environment::Nlos) => PathLossParams { exponent: 3.3, shadow_sigma_db: 7.6 },
    }
}

/// Mean and standard deviation of a Gaussian, in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianDeg {
    pub mean: f64,
    pub sigma: f64,
}

/// Full statistical parameter set for channel generation.
///
/// Field units are carried in the names: `_ns` nanoseconds, `_db`
/// decibels, `_deg` degrees, `_hz` hertz, `_mw` milliwatts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioParams {
    /// Largest number of time clusters a realization may hold.
    pub max_clusters: u32,
    /// Largest number of subpaths any cluster may hold.
    pub max_subpaths: u32,
    /// Largest number of spatial lobes per side.
    pub max_lobes: u32,
    /// Poisson mean for the departure lobe count, before clamping to
    /// `[1, max_lobes]`.
    pub mean_aod_lobes: f64,
    /// Poisson mean for the arrival lobe count, likewise clamped.
    pub mean_aoa_lobes: f64,
    /// Upper bound of the uniform per-cluster exponent jitter applied to
    /// intra-cluster delays.
    pub delay_exponent_max: f64,
    /// Mean of the exponential law behind inter-cluster void intervals, ns.
    pub mean_excess_delay_ns: f64,
    /// Minimum inter-cluster void duration, ns.
    pub min_void_ns: f64,
    /// Cluster power decay time constant, ns.
    pub cluster_decay_ns: f64,
    /// Per-cluster lognormal shadowing sigma, dB.
    pub cluster_shadow_sigma_db: f64,
    /// Subpath power decay time constant, ns.
    pub subpath_decay_ns: f64,
    /// Per-subpath lognormal shadowing sigma, dB.
    pub subpath_shadow_sigma_db: f64,
    /// Average cluster power scale before normalization, mW.
    pub cluster_power_scale_mw: f64,
    /// Average subpath power scale before normalization, mW.
    pub subpath_power_scale_mw: f64,
    /// Baseband bandwidth setting the intra-cluster delay granularity, Hz.
    pub baseband_bandwidth_hz: f64,
    /// Departure lobe elevation law, deg.
    pub aod_lobe_elevation_deg: GaussianDeg,
    /// Arrival lobe elevation law, deg.
    pub aoa_lobe_elevation_deg: GaussianDeg,
    /// Subpath departure azimuth offset about its lobe center: sigma of a
    /// zero-mean Gaussian, deg.
    pub aod_azimuth_offset_sigma_deg: f64,
    /// Subpath departure elevation offset sigma (zero-mean Gaussian), deg.
    pub aod_elevation_offset_sigma_deg: f64,
    /// Subpath arrival azimuth offset sigma (zero-mean Gaussian), deg.
    pub aoa_azimuth_offset_sigma_deg: f64,
    /// Subpath arrival elevation offset standard deviation (zero-mean
    /// Laplace), deg.
    pub aoa_elevation_offset_sigma_deg: f64,
    /// Maximum tolerable omnidirectional path loss before a subpath is
    /// dropped as undetectable, dB.
    pub max_path_loss_db: f64,
}

/// Built-in preset lookup.
pub fn lookup_scenario(key: ScenarioKey) -> ScenarioParams {
    let common = ScenarioParams {
        max_clusters: 6,
        max_subpaths: 30,
        max_lobes: 5,
        mean_aod_lobes: f64::NAN,
        mean_aoa_lobes: f64::NAN,
        delay_exponent_max: f64::NAN,
        mean_excess_delay_ns: f64::NAN,
        min_void_ns: 25.0,
        cluster_decay_ns: f64::NAN,
        cluster_shadow_sigma_db: f64::NAN,
        subpath_decay_ns: f64::NAN,
        subpath_shadow_sigma_db: 6.0,
        cluster_power_scale_mw: 1.0,
        subpath_power_scale_mw: 1.0,
        baseband_bandwidth_hz: 400e6,
        aod_lobe_elevation_deg: GaussianDeg { mean: f64::NAN, sigma: f64::NAN },
        aoa_lobe_elevation_deg: GaussianDeg { mean: f64::NAN, sigma: f64::NAN },
        aod_azimuth_offset_sigma_deg: f64::NAN,
        aod_elevation_offset_sigma_deg: f64::NAN,
        aoa_azimuth_offset_sigma_deg: f64::NAN,
        aoa_elevation_offset_sigma_deg: f64::NAN,
        max_path_loss_db: 180.0,
    };
    match key {
        ScenarioKey::Los28_73 => ScenarioParams {
            mean_aod_lobes: 1.9,
            mean_aoa_lobes: 1.8,
            delay_exponent_max: 0.2,
            mean_excess_delay_ns: 123.0,
            cluster_decay_ns: 25.9,
            cluster_shadow_sigma_db: 1.0,
            subpath_decay_ns: 16.9,
            aod_lobe_elevation_deg: GaussianDeg { mean: -12.6, sigma: 5.9 },
            aoa_lobe_elevation_deg: GaussianDeg { mean: 10.8, sigma: 5.3 },
            aod_azimuth_offset_sigma_deg: 8.5,
            aod_elevation_offset_sigma_deg: 2.5,
            aoa_azimuth_offset_sigma_deg: 10.5,
            aoa_elevation_offset_sigma_deg: 11.5,
            ..common
        },
        ScenarioKey::Nlos28 => ScenarioParams {
            mean_aod_lobes: 1.6,
            mean_aoa_lobes: 1.6,
            delay_exponent_max: 0.5,
            mean_excess_delay_ns: 83.0,
            cluster_decay_ns: 49.4,
            cluster_shadow_sigma_db: 3.0,
            subpath_decay_ns: 16.9,
            aod_lobe_elevation_deg: GaussianDeg { mean: -4.9, sigma: 4.5 },
            aoa_lobe_elevation_deg: GaussianDeg { mean: 3.6, sigma: 4.8 },
            aod_azimuth_offset_sigma_deg: 9.0,
            aod_elevation_offset_sigma_deg: 2.5,
            aoa_azimuth_offset_sigma_deg: 10.1,
            aoa_elevation_offset_sigma_deg: 10.5,
            ..common
        },
        ScenarioKey::Nlos73 => ScenarioParams {
            mean_aod_lobes: 1.5,
            mean_aoa_lobes: 2.5,
            delay_exponent_max: 0.5,
            mean_excess_delay_ns: 83.0,
            cluster_decay_ns: 56.0,
            cluster_shadow_sigma_db: 3.0,
            subpath_decay_ns: 15.3,
            aod_lobe_elevation_deg: GaussianDeg { mean: -4.9, sigma: 4.5 },
            aoa_lobe_elevation_deg: GaussianDeg { mean: 3.6, sigma: 4.8 },
            aod_azimuth_offset_sigma_deg: 7.0,
            aod_elevation_offset_sigma_deg: 3.5,
            aoa_azimuth_offset_sigma_deg: 6.0,
            aoa_elevation_offset_sigma_deg: 3.5,
            ..common
        },
        ScenarioKey::Nlos28_73 => ScenarioParams {
            mean_aod_lobes: 1.5,
            mean_aoa_lobes: 2.1,
            delay_exponent_max: 0.5,
            mean_excess_delay_ns: 83.0,
            cluster_decay_ns: 51.0,
            cluster_shadow_sigma_db: 3.0,
            subpath_decay_ns: 15.5,
            aod_lobe_elevation_deg: GaussianDeg { mean: -4.9, sigma: 4.5 },
            aoa_lobe_elevation_deg: GaussianDeg { mean: 3.6, sigma: 4.8 },
            aod_azimuth_offset_sigma_deg: 11.0,
            aod_elevation_offset_sigma_deg: 3.0,
            aoa_azimuth_offset_sigma_deg: 7.5,
            aoa_elevation_offset_sigma_deg: 6.0,
            ..common
        },
    }
}

/// Partial parameter set for layering user values over a preset.
/// Every field is optional; `None` keeps the preset value.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioOverrides {
    pub max_clusters: Option<u32>,
    pub max_subpaths: Option<u32>,
    pub max_lobes: Option<u32>,
    pub mean_aod_lobes: Option<f64>,
    pub mean_aoa_lobes: Option<f64>,
    pub delay_exponent_max: Option<f64>,
    pub mean_excess_delay_ns: Option<f64>,
    pub min_void_ns: Option<f64>,
    pub cluster_decay_ns: Option<f64>,
    pub cluster_shadow_sigma_db: Option<f64>,
    pub subpath_decay_ns: Option<f64>,
    pub subpath_shadow_sigma_db: Option<f64>,
    pub cluster_power_scale_mw: Option<f64>,
    pub subpath_power_scale_mw: Option<f64>,
    pub baseband_bandwidth_hz: Option<f64>,
    pub aod_lobe_elevation_deg: Option<GaussianDeg>,
    pub aoa_lobe_elevation_deg: Option<GaussianDeg>,
    pub aod_azimuth_offset_sigma_deg: Option<f64>,
    pub aod_elevation_offset_sigma_deg: Option<f64>,
    pub aoa_azimuth_offset_sigma_deg: Option<f64>,
    pub aoa_elevation_offset_sigma_deg: Option<f64>,
    pub max_path_loss_db: Option<f64>,
}

impl ScenarioOverrides {
    /// True when no field is set.
    pub fn is_empty(&self) -> bool {
        *self == ScenarioOverrides::default()
    }
}

impl ScenarioParams {
    /// Returns a copy with every `Some` override applied.
    pub fn with_overrides(&self, o: &ScenarioOverrides) -> ScenarioParams {
        let mut p = self.clone();
        macro_rules! apply {
            ($($field:ident),+ $(,)?) => {
                $(if let Some(v) = o.$field { p.$field = v; })+
            };
        }
        apply!(
            max_clusters,
            max_subpaths,
            max_lobes,
            mean_aod_lobes,
            mean_aoa_lobes,
            delay_exponent_max,
            mean_excess_delay_ns,
            min_void_ns,
            cluster_decay_ns,
            cluster_shadow_sigma_db,
            subpath_decay_ns,
            subpath_shadow_sigma_db,
            cluster_power_scale_mw,
            subpath_power_scale_mw,
            baseband_bandwidth_hz,
            aod_lobe_elevation_deg,
            aoa_lobe_elevation_deg,
            aod_azimuth_offset_sigma_deg,
            aod_elevation_offset_sigma_deg,
            aoa_azimuth_offset_sigma_deg,
            aoa_elevation_offset_sigma_deg,
            max_path_loss_db,
        );
        p
    }

    /// Checks every field against its documented domain.
    pub fn validate(&self) -> Result<()> {
        fn require(ok: bool, msg: &str) -> Result<()> {
            if ok { Ok(()) } else { Err(Error::config(msg)) }
        }
        require(self.max_clusters >= 1, "max_clusters must be at least 1")?;
        require(self.max_subpaths >= 1, "max_subpaths must be at least 1")?;
        require(self.max_lobes >= 1, "max_lobes must be at least 1")?;
        require(
            self.mean_aod_lobes.is_finite() && self.mean_aod_lobes > 0.0,
            "mean_aod_lobes must be positive",
        )?;
        require(
            self.mean_aoa_lobes.is_finite() && self.mean_aoa_lobes > 0.0,
            "mean_aoa_lobes must be positive",
        )?;
        require(
            (0.0..=1.0).contains(&self.delay_exponent_max),
            "delay_exponent_max must lie in [0, 1]",
        )?;
        require(
            self.mean_excess_delay_ns.is_finite() && self.mean_excess_delay_ns > 0.0,
            "mean_excess_delay_ns must be positive",
        )?;
        require(
            self.min_void_ns.is_finite() && self.min_void_ns >= 0.0,
            "min_void_ns must be nonnegative",
        )?;
        require(
            self.cluster_decay_ns.is_finite() && self.cluster_decay_ns > 0.0,
            "cluster_decay_ns must be positive",
        )?;
        require(
            self.cluster_shadow_sigma_db.is_finite() && self.cluster_shadow_sigma_db >= 0.0,
            "cluster_shadow_sigma_db must be nonnegative",
        )?;
        require(
            self.subpath_decay_ns.is_finite() && self.subpath_decay_ns > 0.0,
            "subpath_decay_ns must be positive",
        )?;
        require(
            self.subpath_shadow_sigma_db.is_finite() && self.subpath_shadow_sigma_db >= 0.0,
            "subpath_shadow_sigma_db must be nonnegative",
        )?;
        require(
            self.cluster_power_scale_mw.is_finite() && self.cluster_power_scale_mw > 0.0,
            "cluster_power_scale_mw must be positive",
        )?;
        require(
            self.subpath_power_scale_mw.is_finite() && self.subpath_power_scale_mw > 0.0,
            "subpath_power_scale_mw must be positive",
        )?;
        require(
            self.baseband_bandwidth_hz > 0.0 && self.baseband_bandwidth_hz <= 400e6,
            "baseband_bandwidth_hz must lie in (0, 400e6]",
        )?;
        for (name, g) in [
            ("aod_lobe_elevation_deg", self.aod_lobe_elevation_deg),
            ("aoa_lobe_elevation_deg", self.aoa_lobe_elevation_deg),
        ] {
            require(g.mean.is_finite(), &format!("{name}.mean must be finite"))?;
            require(
                g.sigma.is_finite() && g.sigma >= 0.0,
                &format!("{name}.sigma must be nonnegative"),
            )?;
        }
        for (name, s) in [
            ("aod_azimuth_offset_sigma_deg", self.aod_azimuth_offset_sigma_deg),
            ("aod_elevation_offset_sigma_deg", self.aod_elevation_offset_sigma_deg),
            ("aoa_azimuth_offset_sigma_deg", self.aoa_azimuth_offset_sigma_deg),
            ("aoa_elevation_offset_sigma_deg", self.aoa_elevation_offset_sigma_deg),
        ] {
            require(s.is_finite() && s >= 0.0, &format!("{name} must be nonnegative"))?;
        }
        require(self.max_path_loss_db > 0.0, "max_path_loss_db must be positive")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for key in ScenarioKey::ALL {
            lookup_scenario(key).validate().unwrap();
        }
    }

    #[test]
    fn preset_values_match_fit_tables() {
        // (key, mean lobes aod/aoa, x_max, mu_tau, cluster decay/sigma,
        //  subpath decay/sigma, aod elev, aoa elev, offsets aod az/el,
        //  aoa az/el)
        #[rustfmt::skip]
        let rows: [(ScenarioKey, f64, f64, f64, f64, f64, f64, f64, f64, (f64, f64), (f64, f64), f64, f64, f64, f64); 4] = [
            (ScenarioKey::Los28_73,  1.9, 1.8, 0.2, 123.0, 25.9, 1.0, 16.9, 6.0, (-12.6, 5.9), (10.8, 5.3),  8.5, 2.5, 10.5, 11.5),
            (ScenarioKey::Nlos28,    1.6, 1.6, 0.5,  83.0, 49.4, 3.0, 16.9, 6.0, (-4.9, 4.5),  (3.6, 4.8),   9.0, 2.5, 10.1, 10.5),
            (ScenarioKey::Nlos73,    1.5, 2.5, 0.5,  83.0, 56.0, 3.0, 15.3, 6.0, (-4.9, 4.5),  (3.6, 4.8),   7.0, 3.5,  6.0,  3.5),
            (ScenarioKey::Nlos28_73, 1.5, 2.1, 0.5,  83.0, 51.0, 3.0, 15.5, 6.0, (-4.9, 4.5),  (3.6, 4.8),  11.0, 3.0,  7.5,  6.0),
        ];
        for (key, aod, aoa, xmax, mu, gc, sz, gs, su, eod, eoa, oaz, oel, aaz, ael) in rows {
            let p = lookup_scenario(key);
            assert_eq!(p.mean_aod_lobes, aod, "{key}");
            assert_eq!(p.mean_aoa_lobes, aoa, "{key}");
            assert_eq!(p.delay_exponent_max, xmax, "{key}");
            assert_eq!(p.mean_excess_delay_ns, mu, "{key}");
            assert_eq!(p.cluster_decay_ns, gc, "{key}");
            assert_eq!(p.cluster_shadow_sigma_db, sz, "{key}");
            assert_eq!(p.subpath_decay_ns, gs, "{key}");
            assert_eq!(p.subpath_shadow_sigma_db, su, "{key}");
            assert_eq!(
                (p.aod_lobe_elevation_deg.mean, p.aod_lobe_elevation_deg.sigma),
                eod,
                "{key}"
            );
            assert_eq!(
                (p.aoa_lobe_elevation_deg.mean, p.aoa_lobe_elevation_deg.sigma),
                eoa,
                "{key}"
            );
            assert_eq!(p.aod_azimuth_offset_sigma_deg, oaz, "{key}");
            assert_eq!(p.aod_elevation_offset_sigma_deg, oel, "{key}");
            assert_eq!(p.aoa_azimuth_offset_sigma_deg, aaz, "{key}");
            assert_eq!(p.aoa_elevation_offset_sigma_deg, ael, "{key}");
            // Structural constants shared by every preset.
            assert_eq!(p.max_clusters, 6);
            assert_eq!(p.max_subpaths, 30);
            assert_eq!(p.max_lobes, 5);
            assert_eq!(p.min_void_ns, 25.0);
            assert_eq!(p.baseband_bandwidth_hz, 400e6);
            assert_eq!(p.max_path_loss_db, 180.0);
            assert_eq!(p.cluster_power_scale_mw, 1.0);
            assert_eq!(p.subpath_power_scale_mw, 1.0);
        }
    }

    #[test]
    fn pathloss_table_rows() {
        let rows = [
            (Band::Ghz28, Environment::Los, 2.1, 3.6),
            (Band::Ghz28, Environment::Nlos, 3.4, 9.7),
            (Band::Ghz73, Environment::Los, 2.0, 5.2),
            (Band::Ghz73, Environment::Nlos, 3.3, 7.6),
        ];
        for (band, env, n, sigma) in rows {
            let p = lookup_pathloss(band, env);
            assert_eq!(p.exponent, n);
            assert_eq!(p.shadow_sigma_db, sigma);
        }
    }

    #[test]
    fn nearest_band_splits_at_midpoint() {
        assert_eq!(Band::nearest(28e9), Band::Ghz28);
        assert_eq!(Band::nearest(50.4e9), Band::Ghz28);
        assert_eq!(Band::nearest(50.6e9), Band::Ghz73);
        assert_eq!(Band::nearest(73e9), Band::Ghz73);
    }

    #[test]
    fn scenario_key_round_trips_through_names() {
        for key in ScenarioKey::ALL {
            assert_eq!(key.as_str().parse::<ScenarioKey>().unwrap(), key);
        }
        assert!("indoor-60".parse::<ScenarioKey>().is_err());
    }

    #[test]
    fn overrides_layer_only_set_fields() {
        let base = lookup_scenario(ScenarioKey::Nlos28);
        let o = ScenarioOverrides {
            cluster_decay_ns: Some(40.0),
            aoa_lobe_elevation_deg: Some(GaussianDeg { mean: 5.0, sigma: 2.0 }),
            ..Default::default()
        };
        let p = base.with_overrides(&o);
        assert_eq!(p.cluster_decay_ns, 40.0);
        assert_eq!(p.aoa_lobe_elevation_deg, GaussianDeg { mean: 5.0, sigma: 2.0 });
        assert_eq!(p.mean_excess_delay_ns, base.mean_excess_delay_ns);
        assert_eq!(p.subpath_decay_ns, base.subpath_decay_ns);
        assert!(base.with_overrides(&ScenarioOverrides::default()) == base);
    }

    #[test]
    fn validate_rejects_out_of_domain_values() {
        let good = lookup_scenario(ScenarioKey::Nlos73);
        let cases: [(&str, Box<dyn Fn(&mut ScenarioParams)>); 6] = [
            ("bandwidth above cap", Box::new(|p| p.baseband_bandwidth_hz = 500e6)),
            ("zero bandwidth", Box::new(|p| p.baseband_bandwidth_hz = 0.0)),
            ("negative void", Box::new(|p| p.min_void_ns = -1.0)),
            ("exponent jitter above 1", Box::new(|p| p.delay_exponent_max = 1.5)),
            ("zero cluster decay", Box::new(|p| p.cluster_decay_ns = 0.0)),
            ("negative offset sigma", Box::new(|p| p.aoa_azimuth_offset_sigma_deg = -2.0)),
        ];
        for (name, mutate) in cases {
            let mut p = good.clone();
            mutate(&mut p);
            assert!(p.validate().is_err(), "{name} should fail validation");
        }
    }

    #[test]
    fn params_round_trip_json_and_toml() {
        for key in ScenarioKey::ALL {
            let p = lookup_scenario(key);
            let json = serde_json::to_string(&p).unwrap();
            let back: ScenarioParams = serde_json::from_str(&json).unwrap();
            assert!(back == p, "json round trip for {key}");
            let toml_text = toml::to_string(&p).unwrap();
            let back: ScenarioParams = toml::from_str(&toml_text).unwrap();
            assert!(back == p, "toml round trip for {key}");
        }
    }

    #[test]
    fn overrides_round_trip_and_reject_unknown_fields() {
        let o = ScenarioOverrides { mean_excess_delay_ns: Some(90.0), ..Default::default() };
        let json = serde_json::to_string(&o).unwrap();
        let back: ScenarioOverrides = serde_json::from_str(&json).unwrap();
        assert_eq!(back, o);
        let bad: std::result::Result<ScenarioOverrides, _> =
            serde_json::from_str(r#"{"mean_excss_delay_ns": 90.0}"#);
        assert!(bad.is_err());
    }
}
