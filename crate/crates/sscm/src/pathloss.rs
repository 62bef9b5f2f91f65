//! Close-in reference path loss and link budget.
//!
//! Large-scale attenuation follows the close-in free-space reference
//! model: the loss at 1 m is the free-space value at the carrier, and
//! beyond that distance decays with a single measured exponent plus
//! lognormal shadowing.
//!
//! # Usage
//!
//! ```
//! use sscm::pathloss::{self, free_space_ref_db};
//! use sscm::params::PathLossParams;
//!
//! let p = PathLossParams { exponent: 3.4, shadow_sigma_db: 9.7 };
//! let pl = pathloss::path_loss_db(&p, 28e9, 100.0, 0.0).unwrap();
//! assert!((pl - (free_space_ref_db(28e9).unwrap() + 68.0)).abs() < 1e-9);
//! ```

use rand::Rng;

use crate::draw;
use crate::error::{Error, Result};
use crate::params::PathLossParams;

/// Propagation speed used for all delay and wavelength conversions, m/s.
/// The model convention is exactly 3e8, not the SI value.
pub const SPEED_OF_LIGHT_M_S: f64 = 3.0e8;

/// Close-in reference distance, m.
pub const REF_DISTANCE_M: f64 = 1.0;

/// Carrier frequency domain accepted by the model, Hz.
pub const FREQ_RANGE_HZ: (f64, f64) = (6e9, 100e9);

/// Carrier wavelength in meters.
pub fn wavelength_m(freq_hz: f64) -> Result<f64> {
    check_freq(freq_hz)?;
    Ok(SPEED_OF_LIGHT_M_S / freq_hz)
}

/// Free-space path loss at the 1 m reference distance, dB:
/// `20 log10(4 pi d0 f / c)`.
pub fn free_space_ref_db(freq_hz: f64) -> Result<f64> {
    check_freq(freq_hz)?;
    let ratio = 4.0 * std::f64::consts::PI * REF_DISTANCE_M * freq_hz / SPEED_OF_LIGHT_M_S;
    Ok(20.0 * ratio.log10())
}

/// Close-in path loss at distance `d_m`, dB, with the shadowing term
/// passed in explicitly so deterministic evaluation stays possible.
pub fn path_loss_db(
    params: &PathLossParams,
    freq_hz: f64,
    d_m: f64,
    shadow_db: f64,
) -> Result<f64> {
    if !(d_m >= REF_DISTANCE_M) {
        return Err(Error::config(format!(
            "distance {d_m} m is below the {REF_DISTANCE_M} m close-in reference"
        )));
    }
    Ok(free_space_ref_db(freq_hz)?
        + 10.0 * params.exponent * (d_m / REF_DISTANCE_M).log10()
        + shadow_db)
}

/// One lognormal shadowing draw, dB.
pub fn draw_shadow<R: Rng + ?Sized>(rng: &mut R, sigma_db: f64) -> f64 {
    draw::gaussian(rng, 0.0, sigma_db)
}

/// Milliwatts for a dBm quantity.
pub fn dbm_to_mw(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

/// dBm for a milliwatt quantity.
pub fn mw_to_dbm(mw: f64) -> f64 {
    10.0 * mw.log10()
}

/// Large-scale budget of one link realization.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LinkBudget {
    pub tx_power_dbm: f64,
    pub distance_m: f64,
    pub shadow_db: f64,
    pub path_loss_db: f64,
    pub rx_power_dbm: f64,
}

/// Evaluates the budget for given path loss inputs:
/// `rx = tx - path_loss`.
pub fn link_budget(
    params: &PathLossParams,
    freq_hz: f64,
    d_m: f64,
    tx_power_dbm: f64,
    shadow_db: f64,
) -> Result<LinkBudget> {
    let pl = path_loss_db(params, freq_hz, d_m, shadow_db)?;
    Ok(LinkBudget {
        tx_power_dbm,
        distance_m: d_m,
        shadow_db,
        path_loss_db: pl,
        rx_power_dbm: tx_power_dbm - pl,
    })
}

fn check_freq(freq_hz: f64) -> Result<()> {
    let (lo, hi) = FREQ_RANGE_HZ;
    if freq_hz >= lo && freq_hz <= hi {
        Ok(())
    } else {
        Err(Error::config(format!(
            "carrier frequency {freq_hz} Hz outside supported range [{lo}, {hi}]"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    // Reference intercepts computed independently from
    // 20*log10(4*pi*f/3e8).
    const FSPL_28_DB: f64 = 61.38493281289306;
    const FSPL_73_DB: f64 = 69.70822938845780;

    #[test]
    fn free_space_reference_at_both_carriers() {
        assert_abs_diff_eq!(free_space_ref_db(28e9).unwrap(), FSPL_28_DB, epsilon = 1e-9);
        assert_abs_diff_eq!(free_space_ref_db(73e9).unwrap(), FSPL_73_DB, epsilon = 1e-9);
        // Published two-decimal values.
        assert_abs_diff_eq!(free_space_ref_db(28e9).unwrap(), 61.38, epsilon = 0.005);
        assert_abs_diff_eq!(free_space_ref_db(73e9).unwrap(), 69.71, epsilon = 0.005);
    }

    #[test]
    fn close_in_loss_at_100m_nlos_28() {
        let p = PathLossParams { exponent: 3.4, shadow_sigma_db: 9.7 };
        let pl = path_loss_db(&p, 28e9, 100.0, 0.0).unwrap();
        assert_abs_diff_eq!(pl, FSPL_28_DB + 34.0 * 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(pl, 129.38, epsilon = 0.005);
    }

    #[test]
    fn free_space_loss_at_10m_73ghz() {
        let p = PathLossParams { exponent: 2.0, shadow_sigma_db: 0.0 };
        let pl = path_loss_db(&p, 73e9, 10.0, 0.0).unwrap();
        assert_abs_diff_eq!(pl, 89.71, epsilon = 0.005);
    }

    #[test]
    fn doubling_distance_adds_exponent_decades() {
        for n in [2.0, 2.1, 3.3, 3.4] {
            let p = PathLossParams { exponent: n, shadow_sigma_db: 0.0 };
            let a = path_loss_db(&p, 28e9, 50.0, 0.0).unwrap();
            let b = path_loss_db(&p, 28e9, 100.0, 0.0).unwrap();
            assert_abs_diff_eq!(b - a, 10.0 * n * 2f64.log10(), epsilon = 1e-12);
        }
    }

    #[test]
    fn shadow_term_shifts_loss_linearly() {
        let p = PathLossParams { exponent: 3.3, shadow_sigma_db: 7.6 };
        let base = path_loss_db(&p, 73e9, 80.0, 0.0).unwrap();
        let shifted = path_loss_db(&p, 73e9, 80.0, 4.25).unwrap();
        assert_abs_diff_eq!(shifted - base, 4.25, epsilon = 1e-12);
    }

    #[test]
    fn budget_is_tx_minus_loss() {
        let p = PathLossParams { exponent: 3.4, shadow_sigma_db: 9.7 };
        let b = link_budget(&p, 28e9, 100.0, 30.0, 0.0).unwrap();
        assert_abs_diff_eq!(b.rx_power_dbm, 30.0 - 129.38, epsilon = 0.005);
        assert_eq!(b.tx_power_dbm, 30.0);
    }

    #[test]
    fn rejects_bad_domains() {
        let p = PathLossParams { exponent: 2.0, shadow_sigma_db: 0.0 };
        assert!(path_loss_db(&p, 28e9, 0.5, 0.0).is_err());
        assert!(path_loss_db(&p, 1e9, 100.0, 0.0).is_err());
        assert!(path_loss_db(&p, 200e9, 100.0, 0.0).is_err());
        assert!(free_space_ref_db(5.9e9).is_err());
        assert!(wavelength_m(28e9).is_ok());
    }

    #[test]
    fn dbm_mw_round_trip() {
        for dbm in [-120.0, -30.0, 0.0, 30.0] {
            assert_abs_diff_eq!(mw_to_dbm(dbm_to_mw(dbm)), dbm, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(dbm_to_mw(30.0), 1000.0, epsilon = 1e-9);
        assert_abs_diff_eq!(mw_to_dbm(1.0), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn wavelength_follows_model_light_speed() {
        assert_abs_diff_eq!(wavelength_m(28e9).unwrap(), 3.0e8 / 28e9, epsilon = 1e-18);
        assert_abs_diff_eq!(wavelength_m(73e9).unwrap(), 3.0e8 / 73e9, epsilon = 1e-18);
    }
}
