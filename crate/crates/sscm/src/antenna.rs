//! Directional antenna patterns and directional channel synthesis.
//!
//! Patterns are single-beam Gaussian mainlobes parameterized by their
//! half-power beamwidths. Applying a transmit and a receive pattern to
//! an omnidirectional realization weights each subpath by the pattern
//! power gains at its departure and arrival directions, giving the
//! power delay profile a directional sounder would record.
//!
//! # Usage
//!
//! ```
//! use sscm::antenna::AntennaPattern;
//!
//! let horn = AntennaPattern::from_hpbw(10.0, 10.0, 0.7).unwrap();
//! let g0 = horn.boresight_gain();
//! assert!((horn.gain(0.0, 0.0) - g0).abs() < 1e-12);
//! // Half power at half a beamwidth off boresight.
//! assert!((horn.gain(5.0, 0.0) - g0 / 2.0).abs() < 1e-9 * g0);
//! ```

use serde::{Deserialize, Serialize};

use crate::channel::{Channel, wrap_azimuth_deg};
use crate::error::{Error, Result};
use crate::stats::rms_delay_spread;

const LN_2: f64 = std::f64::consts::LN_2;

/// Single-mainlobe antenna power pattern.
///
/// The gain at offsets `(theta, phi)` degrees from boresight is
/// `max(g0 * exp(-(alpha theta^2 + beta phi^2)), g0 / 100)`: a Gaussian
/// mainlobe over an isotropic floor 20 dB down. `g0` follows from the
/// beamwidths through the directivity approximation
/// `g0 = 41253 eta / (az_hpbw * el_hpbw)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AntennaPattern {
    az_hpbw_deg: f64,
    el_hpbw_deg: f64,
    efficiency: f64,
    boresight_gain: f64,
    alpha: f64,
    beta: f64,
}

impl AntennaPattern {
    /// Builds a pattern from half-power beamwidths (degrees) and
    /// efficiency.
    pub fn from_hpbw(az_hpbw_deg: f64, el_hpbw_deg: f64, efficiency: f64) -> Result<Self> {
        if !(az_hpbw_deg > 0.0 && az_hpbw_deg <= 360.0 && el_hpbw_deg > 0.0 && el_hpbw_deg <= 360.0)
        {
            return Err(Error::config(format!(
                "beamwidths ({az_hpbw_deg}, {el_hpbw_deg}) deg must lie in (0, 360]"
            )));
        }
        if !(efficiency > 0.0 && efficiency <= 1.0) {
            return Err(Error::config(format!("efficiency {efficiency} must lie in (0, 1]")));
        }
        Ok(AntennaPattern {
            az_hpbw_deg,
            el_hpbw_deg,
            efficiency,
            boresight_gain: 41253.0 * efficiency / (az_hpbw_deg * el_hpbw_deg),
            alpha: 4.0 * LN_2 / (az_hpbw_deg * az_hpbw_deg),
            beta: 4.0 * LN_2 / (el_hpbw_deg * el_hpbw_deg),
        })
    }

    /// Unit-gain pattern: every direction sees gain exactly 1.
    pub fn isotropic() -> Self {
        AntennaPattern {
            az_hpbw_deg: 360.0,
            el_hpbw_deg: 360.0,
            efficiency: 1.0,
            boresight_gain: 1.0,
            alpha: 0.0,
            beta: 0.0,
        }
    }

    /// Boresight power gain, linear.
    pub fn boresight_gain(&self) -> f64 {
        self.boresight_gain
    }

    /// Boresight gain in dBi.
    pub fn boresight_gain_dbi(&self) -> f64 {
        10.0 * self.boresight_gain.log10()
    }

    /// Azimuth half-power beamwidth, degrees.
    pub fn az_hpbw_deg(&self) -> f64 {
        self.az_hpbw_deg
    }

    /// Elevation half-power beamwidth, degrees.
    pub fn el_hpbw_deg(&self) -> f64 {
        self.el_hpbw_deg
    }

    /// Power gain at the given offsets from boresight, degrees. The
    /// azimuth offset wraps to the principal interval `(-180, 180]`;
    /// elevation offsets are used as given.
    pub fn gain(&self, az_off_deg: f64, el_off_deg: f64) -> f64 {
        let az = wrap_to_principal_deg(az_off_deg);
        let el = el_off_deg;
        let mainlobe = self.boresight_gain * (-(self.alpha * az * az + self.beta * el * el)).exp();
        mainlobe.max(self.boresight_gain / 100.0)
    }
}

/// Wraps an angle difference to `(-180, 180]` degrees.
pub fn wrap_to_principal_deg(deg: f64) -> f64 {
    180.0 - (180.0 - deg).rem_euclid(360.0)
}

/// Boresight direction of a steered antenna.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pointing {
    /// Azimuth, degrees in `[0, 360)`.
    pub azimuth_deg: f64,
    /// Elevation, degrees.
    pub elevation_deg: f64,
}

impl Pointing {
    /// Normalizes the azimuth into `[0, 360)`.
    pub fn new(azimuth_deg: f64, elevation_deg: f64) -> Self {
        Pointing { azimuth_deg: wrap_azimuth_deg(azimuth_deg), elevation_deg }
    }
}

/// One tap of a directional power delay profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PdpTap {
    pub abs_delay_ns: f64,
    pub power_mw: f64,
    pub phase_rad: f64,
}

/// Power delay profile seen through a transmit and receive antenna
/// pointed somewhere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionalPdp {
    pub tx_pointing: Pointing,
    pub rx_pointing: Pointing,
    /// Taps in absolute delay order. Subpaths pushed below the noise
    /// floor by the patterns are kept; their power is simply small.
    pub taps: Vec<PdpTap>,
}

impl DirectionalPdp {
    /// Total received power through the patterns, mW.
    pub fn total_power_mw(&self) -> f64 {
        self.taps.iter().map(|t| t.power_mw).sum()
    }

    /// RMS delay spread of the profile, ns.
    pub fn rms_delay_spread_ns(&self) -> Result<f64> {
        rms_delay_spread(self.taps.iter().map(|t| (t.abs_delay_ns, t.power_mw)))
    }
}

/// Applies transmit and receive patterns to an omnidirectional
/// realization: each subpath keeps its delay and phase and scales its
/// power by both pattern gains at its departure and arrival offsets
/// from the respective boresights.
pub fn directional_pdp(
    chan: &Channel,
    tx_pattern: &AntennaPattern,
    rx_pattern: &AntennaPattern,
    tx_pointing: Pointing,
    rx_pointing: Pointing,
) -> DirectionalPdp {
    let mut taps: Vec<PdpTap> = chan
        .subpaths()
        .map(|s| {
            let g_tx = tx_pattern.gain(
                s.aod_azimuth_deg - tx_pointing.azimuth_deg,
                s.aod_elevation_deg - tx_pointing.elevation_deg,
            );
            let g_rx = rx_pattern.gain(
                s.aoa_azimuth_deg - rx_pointing.azimuth_deg,
                s.aoa_elevation_deg - rx_pointing.elevation_deg,
            );
            PdpTap {
                abs_delay_ns: s.abs_delay_ns,
                power_mw: s.power_mw * g_tx * g_rx,
                phase_rad: s.phase_rad,
            }
        })
        .collect();
    taps.sort_by(|a, b| a.abs_delay_ns.partial_cmp(&b.abs_delay_ns).unwrap());
    DirectionalPdp { tx_pointing, rx_pointing, taps }
}

/// Pointings aligned with the strongest subpath's departure and arrival
/// directions. Errs on an outage realization.
pub fn best_pointing(chan: &Channel) -> Result<(Pointing, Pointing)> {
    let best = chan
        .subpaths()
        .max_by(|a, b| a.power_mw.partial_cmp(&b.power_mw).unwrap())
        .ok_or(Error::Empty("no subpaths to point at"))?;
    Ok((
        Pointing::new(best.aod_azimuth_deg, best.aod_elevation_deg),
        Pointing::new(best.aoa_azimuth_deg, best.aoa_elevation_deg),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{ChannelConfig, generate_channel};
    use crate::params::ScenarioKey;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn boresight_gain_follows_directivity_rule() {
        let p = AntennaPattern::from_hpbw(10.0, 10.0, 0.7).unwrap();
        assert_abs_diff_eq!(p.boresight_gain(), 41253.0 * 0.7 / 100.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.boresight_gain(), 288.771, epsilon = 1e-3);
        let wide = AntennaPattern::from_hpbw(30.0, 30.0, 0.7).unwrap();
        assert_abs_diff_eq!(wide.boresight_gain(), 41253.0 * 0.7 / 900.0, epsilon = 1e-12);
    }

    #[test]
    fn half_power_at_half_beamwidth_on_both_axes() {
        for (az, el) in [(7.0, 7.0), (10.0, 10.0), (30.0, 15.0)] {
            let p = AntennaPattern::from_hpbw(az, el, 0.7).unwrap();
            let g0 = p.boresight_gain();
            let rel = |g: f64, want: f64| (g - want).abs() / want;
            assert!(rel(p.gain(az / 2.0, 0.0), g0 / 2.0) < 1e-12);
            assert!(rel(p.gain(-az / 2.0, 0.0), g0 / 2.0) < 1e-12);
            assert!(rel(p.gain(0.0, el / 2.0), g0 / 2.0) < 1e-12);
            assert!(rel(p.gain(0.0, -el / 2.0), g0 / 2.0) < 1e-12);
        }
    }

    #[test]
    fn gain_floors_at_one_hundredth_of_boresight() {
        let p = AntennaPattern::from_hpbw(7.0, 7.0, 0.7).unwrap();
        let g0 = p.boresight_gain();
        assert_abs_diff_eq!(p.gain(90.0, 0.0), g0 / 100.0, epsilon = g0 * 1e-15);
        assert_abs_diff_eq!(p.gain(180.0, 45.0), g0 / 100.0, epsilon = g0 * 1e-15);
        // 20 dB down exactly.
        assert_abs_diff_eq!(10.0 * (p.gain(150.0, 0.0) / g0).log10(), -20.0, epsilon = 1e-12);
    }

    #[test]
    fn azimuth_offset_wraps_but_elevation_does_not() {
        let p = AntennaPattern::from_hpbw(10.0, 10.0, 0.7).unwrap();
        assert_abs_diff_eq!(p.gain(357.0, 0.0), p.gain(-3.0, 0.0), epsilon = 1e-12);
        assert_abs_diff_eq!(p.gain(363.0, 0.0), p.gain(3.0, 0.0), epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_to_principal_deg(180.0), 180.0, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_to_principal_deg(-180.0), 180.0, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_to_principal_deg(190.0), -170.0, epsilon = 1e-12);
        // A 120 deg elevation offset is a real off-pattern direction, not
        // a wrap back toward boresight.
        assert!(p.gain(0.0, 120.0) <= p.gain(0.0, 60.0));
    }

    #[test]
    fn isotropic_pattern_is_unity_everywhere() {
        let iso = AntennaPattern::isotropic();
        for az in [-180.0, -31.0, 0.0, 95.5, 180.0] {
            for el in [-90.0, -10.0, 0.0, 45.0, 90.0] {
                assert_eq!(iso.gain(az, el), 1.0);
            }
        }
        assert_eq!(iso.boresight_gain_dbi(), 0.0);
    }

    #[test]
    fn pattern_construction_rejects_bad_domains() {
        assert!(AntennaPattern::from_hpbw(0.0, 10.0, 0.7).is_err());
        assert!(AntennaPattern::from_hpbw(10.0, -5.0, 0.7).is_err());
        assert!(AntennaPattern::from_hpbw(400.0, 10.0, 0.7).is_err());
        assert!(AntennaPattern::from_hpbw(10.0, 10.0, 0.0).is_err());
        assert!(AntennaPattern::from_hpbw(10.0, 10.0, 1.5).is_err());
    }

    fn test_channel(seed: u64) -> Channel {
        let cfg = ChannelConfig::new(ScenarioKey::Nlos73, 73e9).unwrap();
        generate_channel(&cfg, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    #[test]
    fn unity_patterns_reproduce_the_omnidirectional_profile() {
        let chan = test_channel(31);
        let pdp = directional_pdp(
            &chan,
            &AntennaPattern::isotropic(),
            &AntennaPattern::isotropic(),
            Pointing::new(0.0, 0.0),
            Pointing::new(0.0, 0.0),
        );
        assert_eq!(pdp.taps.len(), chan.n_subpaths());
        let total = chan.total_power_mw();
        assert_abs_diff_eq!(pdp.total_power_mw(), total, epsilon = total * 1e-9);
        for w in pdp.taps.windows(2) {
            assert!(w[0].abs_delay_ns <= w[1].abs_delay_ns);
        }
    }

    #[test]
    fn directional_power_stays_within_pattern_bounds() {
        let chan = test_channel(32);
        let horn = AntennaPattern::from_hpbw(10.0, 10.0, 0.7).unwrap();
        let (tx, rx) = best_pointing(&chan).unwrap();
        let pdp = directional_pdp(&chan, &horn, &horn, tx, rx);
        let g0 = horn.boresight_gain();
        let omni = chan.total_power_mw();
        assert!(pdp.total_power_mw() <= omni * g0 * g0 * (1.0 + 1e-12));
        assert!(pdp.total_power_mw() >= omni * (g0 / 100.0) * (g0 / 100.0) * (1.0 - 1e-12));
    }

    #[test]
    fn best_pointing_targets_the_strongest_subpath() {
        let chan = test_channel(33);
        let strongest =
            chan.subpaths().max_by(|a, b| a.power_mw.partial_cmp(&b.power_mw).unwrap()).unwrap();
        let (tx, rx) = best_pointing(&chan).unwrap();
        assert_eq!(tx.azimuth_deg, strongest.aod_azimuth_deg);
        assert_eq!(rx.elevation_deg, strongest.aoa_elevation_deg);

        // Pointing at the strongest subpath beats pointing 90 deg away.
        let horn = AntennaPattern::from_hpbw(10.0, 10.0, 0.7).unwrap();
        let aligned = directional_pdp(&chan, &horn, &horn, tx, rx);
        let off = directional_pdp(
            &chan,
            &horn,
            &horn,
            Pointing::new(tx.azimuth_deg + 90.0, tx.elevation_deg),
            rx,
        );
        assert!(aligned.total_power_mw() > off.total_power_mw());
    }

    #[test]
    fn narrower_beams_shrink_delay_spread_on_average() {
        // Spatial filtering strips late clusters, so the directional
        // spread should typically fall below the omnidirectional one.
        let horn = AntennaPattern::from_hpbw(7.0, 7.0, 0.7).unwrap();
        let mut narrower = 0u64;
        let n = 60u64;
        for seed in 0..n {
            let chan = test_channel(1000 + seed);
            let omni =
                rms_delay_spread(chan.subpaths().map(|s| (s.abs_delay_ns, s.power_mw))).unwrap();
            let (tx, rx) = best_pointing(&chan).unwrap();
            let dir = directional_pdp(&chan, &horn, &horn, tx, rx);
            if dir.rms_delay_spread_ns().unwrap() <= omni {
                narrower += 1;
            }
        }
        assert!(narrower * 10 >= n * 9, "only {narrower}/{n} profiles narrowed");
    }
}
