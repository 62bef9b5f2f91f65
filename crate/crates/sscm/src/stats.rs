//! Delay and angle statistics of channel realizations.
//!
//! Everything here is power-weighted. Azimuth statistics respect the
//! circular topology: global spreads minimize over rotations of the
//! branch cut, and lobe statistics unwrap azimuths about the lobe
//! center before taking moments.
//!
//! # Usage
//!
//! ```
//! use sscm::stats::rms_delay_spread;
//!
//! // Two equal-power taps 10 ns apart spread by half the gap.
//! let s = rms_delay_spread([(100.0, 1.0), (110.0, 1.0)]).unwrap();
//! assert!((s - 5.0).abs() < 1e-12);
//! ```

use serde::{Deserialize, Serialize};

use crate::channel::{Channel, Side, wrap_azimuth_deg};
use crate::error::{Error, Result};

/// Power-weighted RMS spread of tap delays, ns: the square root of the
/// second central moment of delay under the power distribution. Errs on
/// an empty profile or one with no power.
///
/// Deviations are taken about the mean rather than assembled from raw
/// moments, so the result stays accurate when spreads are far smaller
/// than the absolute delays.
pub fn rms_delay_spread(taps: impl IntoIterator<Item = (f64, f64)>) -> Result<f64> {
    let taps: Vec<(f64, f64)> = taps.into_iter().collect();
    let mut sum_p = 0.0;
    let mut sum_pt = 0.0;
    for &(t, p) in &taps {
        debug_assert!(p >= 0.0);
        sum_p += p;
        sum_pt += p * t;
    }
    if sum_p <= 0.0 {
        return Err(Error::Empty("delay profile holds no power"));
    }
    let mean = sum_pt / sum_p;
    let second: f64 = taps.iter().map(|&(t, p)| p * (t - mean) * (t - mean)).sum();
    Ok((second / sum_p).sqrt())
}

/// One directional power sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularSample {
    pub azimuth_deg: f64,
    pub elevation_deg: f64,
    pub power_mw: f64,
}

/// Power resolved over departure or arrival directions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularSpectrum {
    pub side: Side,
    pub samples: Vec<AngularSample>,
}

impl AngularSpectrum {
    /// Extracts the spectrum of one side of a realization. Errs on an
    /// outage realization, which has no directional power to resolve.
    pub fn from_channel(chan: &Channel, side: Side) -> Result<Self> {
        if chan.outage {
            return Err(Error::Empty("outage realization has no angular spectrum"));
        }
        let samples = chan
            .subpaths()
            .map(|s| match side {
                Side::Aod => AngularSample {
                    azimuth_deg: s.aod_azimuth_deg,
                    elevation_deg: s.aod_elevation_deg,
                    power_mw: s.power_mw,
                },
                Side::Aoa => AngularSample {
                    azimuth_deg: s.aoa_azimuth_deg,
                    elevation_deg: s.aoa_elevation_deg,
                    power_mw: s.power_mw,
                },
            })
            .collect();
        Ok(AngularSpectrum { side, samples })
    }

    /// Total power across samples, mW.
    pub fn total_power_mw(&self) -> f64 {
        self.samples.iter().map(|s| s.power_mw).sum()
    }

    /// Integrates elevation out and accumulates power into azimuth bins
    /// `[k w, (k+1) w)`. The last bin may be narrower when the width
    /// does not divide 360.
    pub fn bin_azimuth(&self, bin_width_deg: f64) -> Result<BinnedAzimuth> {
        if !(bin_width_deg > 0.0 && bin_width_deg <= 360.0) {
            return Err(Error::config(format!(
                "azimuth bin width {bin_width_deg} deg must lie in (0, 360]"
            )));
        }
        let n_bins = (360.0 / bin_width_deg).ceil() as usize;
        let mut power_mw = vec![0.0; n_bins];
        for s in &self.samples {
            let az = wrap_azimuth_deg(s.azimuth_deg);
            let k = ((az / bin_width_deg) as usize).min(n_bins - 1);
            power_mw[k] += s.power_mw;
        }
        Ok(BinnedAzimuth { bin_width_deg, power_mw })
    }
}

/// Azimuth power profile on a regular circular grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinnedAzimuth {
    pub bin_width_deg: f64,
    /// Power per bin, mW; bin `k` covers `[k w, (k+1) w)` degrees.
    pub power_mw: Vec<f64>,
}

impl BinnedAzimuth {
    /// Number of bins.
    pub fn n_bins(&self) -> usize {
        self.power_mw.len()
    }
}

/// A contiguous run of azimuth bins holding significant power.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LobeSegment {
    pub bin_width_deg: f64,
    /// Index of the first bin of the run.
    pub start_bin: usize,
    /// Run length in bins; wrapped runs continue past the last bin back
    /// into bin 0.
    pub n_bins: usize,
    /// Total power inside the run, mW.
    pub power_mw: f64,
    /// Total bins of the profile the segment came from.
    pub total_bins: usize,
}

impl LobeSegment {
    /// Azimuth where the segment starts, degrees.
    pub fn start_deg(&self) -> f64 {
        self.start_bin as f64 * self.bin_width_deg
    }

    /// Angular width, degrees (360 for a full-circle segment).
    pub fn width_deg(&self) -> f64 {
        if self.n_bins >= self.total_bins {
            return 360.0;
        }
        let mut width = self.n_bins as f64 * self.bin_width_deg;
        // A run touching the final bin only gets that bin's ragged width.
        if self.start_bin + self.n_bins >= self.total_bins {
            width -= self.total_bins as f64 * self.bin_width_deg - 360.0;
        }
        width
    }

    /// Center azimuth of the covered arc, degrees in `[0, 360)`.
    pub fn center_deg(&self) -> f64 {
        wrap_azimuth_deg(self.start_deg() + self.width_deg() / 2.0)
    }

    /// True when the azimuth falls inside the covered arc.
    pub fn contains_azimuth(&self, az_deg: f64) -> bool {
        if self.n_bins >= self.total_bins {
            return true;
        }
        let rel = wrap_azimuth_deg(az_deg) - self.start_deg();
        let rel = wrap_azimuth_deg(rel);
        rel < self.width_deg()
    }
}

/// Splits a binned azimuth profile into lobes: maximal circularly
/// contiguous runs of bins at or above `10 ^ (threshold_db / 10)` times
/// the peak bin. The default threshold is -10 dB. If every bin
/// qualifies, the whole circle is one segment starting at bin 0.
/// Segments come back ordered by start bin.
pub fn segment_lobes(binned: &BinnedAzimuth, threshold_db: f64) -> Vec<LobeSegment> {
    let n = binned.n_bins();
    let peak = binned.power_mw.iter().cloned().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Vec::new();
    }
    let cut = peak * 10f64.powf(threshold_db / 10.0);
    let lit: Vec<bool> = binned.power_mw.iter().map(|&p| p >= cut).collect();

    if lit.iter().all(|&b| b) {
        return vec![LobeSegment {
            bin_width_deg: binned.bin_width_deg,
            start_bin: 0,
            n_bins: n,
            power_mw: binned.power_mw.iter().sum(),
            total_bins: n,
        }];
    }

    // Walk the circle starting just past a dark bin so wrapped runs stay
    // whole.
    let origin = lit.iter().position(|&b| !b).expect("not all lit");
    let mut segments = Vec::new();
    let mut run_start: Option<usize> = None;
    for step in 0..=n {
        let idx = (origin + step) % n;
        let on = step < n && lit[idx];
        match (on, run_start) {
            (true, None) => run_start = Some(idx),
            (false, Some(start)) => {
                let len = (idx + n - start) % n;
                let power = (0..len).map(|k| binned.power_mw[(start + k) % n]).sum();
                segments.push(LobeSegment {
                    bin_width_deg: binned.bin_width_deg,
                    start_bin: start,
                    n_bins: len,
                    power_mw: power,
                    total_bins: n,
                });
                run_start = None;
            }
            _ => {}
        }
    }
    segments.sort_by_key(|s| s.start_bin);
    segments
}

/// Power-weighted statistics of one lobe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LobeStats {
    /// Share of the spectrum's total power inside the lobe.
    pub power_fraction: f64,
    /// Power-weighted mean azimuth, degrees in `[0, 360)`.
    pub mean_azimuth_deg: f64,
    /// Power-weighted mean elevation, degrees.
    pub mean_elevation_deg: f64,
    /// RMS azimuth spread about the mean, degrees.
    pub rms_azimuth_spread_deg: f64,
    /// RMS elevation spread about the mean, degrees.
    pub rms_elevation_spread_deg: f64,
}

/// Moments of the spectrum samples falling inside one segment's arc.
/// Azimuths are unwrapped about the arc center so a lobe straddling 0
/// degrees keeps a tight spread. Errs when no sample lands in the arc.
pub fn rms_lobe_spread(spectrum: &AngularSpectrum, segment: &LobeSegment) -> Result<LobeStats> {
    let center = segment.center_deg();
    let mut sum_p = 0.0;
    let mut sum_az = 0.0;
    let mut sum_az2 = 0.0;
    let mut sum_el = 0.0;
    let mut sum_el2 = 0.0;
    for s in &spectrum.samples {
        if !segment.contains_azimuth(s.azimuth_deg) {
            continue;
        }
        // Nearest representative of the azimuth around the arc center.
        let az = center + crate::antenna::wrap_to_principal_deg(s.azimuth_deg - center);
        sum_p += s.power_mw;
        sum_az += s.power_mw * az;
        sum_az2 += s.power_mw * az * az;
        sum_el += s.power_mw * s.elevation_deg;
        sum_el2 += s.power_mw * s.elevation_deg * s.elevation_deg;
    }
    if sum_p <= 0.0 {
        return Err(Error::Empty("no spectrum power inside the lobe segment"));
    }
    let mean_az = sum_az / sum_p;
    let mean_el = sum_el / sum_p;
    let total = spectrum.total_power_mw();
    Ok(LobeStats {
        power_fraction: sum_p / total,
        mean_azimuth_deg: wrap_azimuth_deg(mean_az),
        mean_elevation_deg: mean_el,
        rms_azimuth_spread_deg: (sum_az2 / sum_p - mean_az * mean_az).max(0.0).sqrt(),
        rms_elevation_spread_deg: (sum_el2 / sum_p - mean_el * mean_el).max(0.0).sqrt(),
    })
}

/// Axis selector for [`global_angular_spread`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Azimuth,
    Elevation,
}

/// Power-weighted global angular spread, degrees.
///
/// Elevation is an ordinary weighted standard deviation. Azimuth is
/// circular: for every branch-cut rotation on a 1 degree grid over
/// `[-180, 180)`, azimuths are rotated, wrapped to `(-180, 180]`, and
/// their weighted standard deviation taken; the spread is the minimum
/// over rotations. Errs when the spectrum holds no power.
pub fn global_angular_spread(spectrum: &AngularSpectrum, axis: Axis) -> Result<f64> {
    let samples = &spectrum.samples;
    let sum_p: f64 = samples.iter().map(|s| s.power_mw).sum();
    if sum_p <= 0.0 {
        return Err(Error::Empty("spectrum holds no power"));
    }
    match axis {
        Axis::Elevation => {
            let mean: f64 =
                samples.iter().map(|s| s.power_mw * s.elevation_deg).sum::<f64>() / sum_p;
            let var: f64 = samples
                .iter()
                .map(|s| s.power_mw * (s.elevation_deg - mean) * (s.elevation_deg - mean))
                .sum::<f64>()
                / sum_p;
            Ok(var.max(0.0).sqrt())
        }
        Axis::Azimuth => {
            let mut best = f64::INFINITY;
            for shift in -180..180 {
                let delta = shift as f64;
                let mut sp = 0.0;
                let mut spx = 0.0;
                let mut spx2 = 0.0;
                for s in samples {
                    let x = crate::antenna::wrap_to_principal_deg(s.azimuth_deg + delta);
                    sp += s.power_mw;
                    spx += s.power_mw * x;
                    spx2 += s.power_mw * x * x;
                }
                let mean = spx / sp;
                let var = (spx2 / sp - mean * mean).max(0.0);
                if var < best {
                    best = var;
                }
            }
            Ok(best.sqrt())
        }
    }
}

/// Right-continuous empirical distribution: returns the sorted sample
/// values paired with `F(x) = (rank + 1) / n`. Errs on empty input or
/// non-finite values.
pub fn empirical_cdf(samples: &[f64]) -> Result<Vec<(f64, f64)>> {
    if samples.is_empty() {
        return Err(Error::Empty("no samples for a distribution"));
    }
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(Error::config("distribution samples must be finite"));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    Ok(sorted.into_iter().enumerate().map(|(i, x)| (x, (i + 1) as f64 / n)).collect())
}

/// Arithmetic mean. Errs on empty input.
pub fn mean(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Empty("no samples for a mean"));
    }
    Ok(samples.iter().sum::<f64>() / samples.len() as f64)
}

/// Lower median: the sorted sample at 0-based rank `ceil(n / 2) - 1`.
/// Errs on empty input.
pub fn median(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Empty("no samples for a median"));
    }
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(Error::config("median samples must be finite"));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(sorted[samples.len().div_ceil(2) - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn delay_spread_matches_hand_computation() {
        // Two thirds of the power at 0 ns, one third at 100 ns:
        // sqrt(10000/3 - (100/3)^2).
        let taps = [(0.0, 2.0 / 3.0), (100.0, 1.0 / 3.0)];
        let want = (10000.0f64 / 3.0 - (100.0f64 / 3.0).powi(2)).sqrt();
        assert_abs_diff_eq!(rms_delay_spread(taps).unwrap(), want, epsilon = 1e-12);
        assert_abs_diff_eq!(rms_delay_spread(taps).unwrap(), 47.14045207910317, epsilon = 1e-9);

        // Three-tap case recomputed from the raw moments.
        let taps = [(0.0, 1.0), (50.0, 0.5), (150.0, 0.25)];
        let mean = (50.0 * 0.5 + 150.0 * 0.25) / 1.75;
        let m2 = (50.0f64.powi(2) * 0.5 + 150.0f64.powi(2) * 0.25) / 1.75;
        let want = (m2 - mean * mean).sqrt();
        assert_abs_diff_eq!(rms_delay_spread(taps).unwrap(), want, epsilon = 1e-12);
    }

    #[test]
    fn delay_spread_ignores_absolute_offset_and_power_scale() {
        let taps = [(10.0, 2.0), (30.0, 1.0), (90.0, 4.0)];
        let a = rms_delay_spread(taps).unwrap();
        let shifted: Vec<_> = taps.iter().map(|&(t, p)| (t + 500.0, p)).collect();
        let scaled: Vec<_> = taps.iter().map(|&(t, p)| (t, p * 1e-9)).collect();
        assert_abs_diff_eq!(rms_delay_spread(shifted).unwrap(), a, epsilon = 1e-9);
        assert_abs_diff_eq!(rms_delay_spread(scaled).unwrap(), a, epsilon = 1e-9);
    }

    #[test]
    fn delay_spread_edge_cases() {
        assert_eq!(rms_delay_spread([(42.0, 1.0)]).unwrap(), 0.0);
        assert!(rms_delay_spread([]).is_err());
        assert!(rms_delay_spread([(1.0, 0.0), (2.0, 0.0)]).is_err());
    }

    fn spectrum(samples: &[(f64, f64, f64)]) -> AngularSpectrum {
        AngularSpectrum {
            side: Side::Aoa,
            samples: samples
                .iter()
                .map(|&(az, el, p)| AngularSample {
                    azimuth_deg: az,
                    elevation_deg: el,
                    power_mw: p,
                })
                .collect(),
        }
    }

    #[test]
    fn binning_respects_half_open_bins_and_wrap() {
        let sp = spectrum(&[
            (0.0, 0.0, 1.0),
            (0.999, 0.0, 2.0),
            (1.0, 0.0, 4.0),
            (359.5, 0.0, 8.0),
            (-0.5, 0.0, 16.0), // same direction as 359.5
        ]);
        let b = sp.bin_azimuth(1.0).unwrap();
        assert_eq!(b.n_bins(), 360);
        assert_eq!(b.power_mw[0], 3.0);
        assert_eq!(b.power_mw[1], 4.0);
        assert_eq!(b.power_mw[359], 24.0);
    }

    #[test]
    fn ragged_last_bin_catches_the_tail() {
        let sp = spectrum(&[(355.0, 0.0, 1.0), (349.0, 0.0, 2.0)]);
        let b = sp.bin_azimuth(25.0).unwrap();
        // ceil(360/25) = 15 bins; bin 14 covers [350, 360).
        assert_eq!(b.n_bins(), 15);
        assert_eq!(b.power_mw[14], 1.0);
        assert_eq!(b.power_mw[13], 2.0);
    }

    #[test]
    fn segmentation_finds_isolated_and_wrapped_lobes() {
        // Power at bins 10-12, a weak bin at 40 (below cut), and a lobe
        // wrapping across 0: bins 358, 359, 0, 1.
        let mut power = vec![0.0; 360];
        power[10] = 1.0;
        power[11] = 0.5;
        power[12] = 0.2;
        power[40] = 0.05; // below the -10 dB cut of peak 1.0
        power[358] = 0.3;
        power[359] = 0.4;
        power[0] = 0.35;
        power[1] = 0.15;
        let b = BinnedAzimuth { bin_width_deg: 1.0, power_mw: power };
        let segs = segment_lobes(&b, -10.0);
        assert_eq!(segs.len(), 2);
        // Ordered by start bin: the run at 10, then the wrapped one.
        assert_eq!((segs[0].start_bin, segs[0].n_bins), (10, 3));
        assert_eq!((segs[1].start_bin, segs[1].n_bins), (358, 4));
        assert_abs_diff_eq!(segs[0].power_mw, 1.7, epsilon = 1e-12);
        assert_abs_diff_eq!(segs[1].power_mw, 1.2, epsilon = 1e-12);
        assert!(segs[1].contains_azimuth(0.5));
        assert!(segs[1].contains_azimuth(359.2));
        assert!(!segs[1].contains_azimuth(2.5));
        assert_abs_diff_eq!(segs[1].center_deg(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn threshold_is_relative_to_the_peak() {
        let mut power = vec![0.0; 360];
        power[100] = 1.0;
        power[200] = 0.11; // above 0.1
        power[300] = 0.09; // below
        let b = BinnedAzimuth { bin_width_deg: 1.0, power_mw: power };
        let segs = segment_lobes(&b, -10.0);
        assert_eq!(segs.len(), 2);
        // Exact boundary qualifies.
        let mut power = vec![0.0; 360];
        power[100] = 1.0;
        power[200] = 0.1;
        let b = BinnedAzimuth { bin_width_deg: 1.0, power_mw: power };
        assert_eq!(segment_lobes(&b, -10.0).len(), 2);
    }

    #[test]
    fn all_lit_collapses_to_one_full_circle_segment() {
        let b = BinnedAzimuth { bin_width_deg: 1.0, power_mw: vec![1.0; 360] };
        let segs = segment_lobes(&b, -10.0);
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].start_bin, 0);
        assert_eq!(segs[0].n_bins, 360);
        assert_eq!(segs[0].width_deg(), 360.0);
        assert!(segs[0].contains_azimuth(123.4));
    }

    #[test]
    fn empty_profile_yields_no_segments() {
        let b = BinnedAzimuth { bin_width_deg: 1.0, power_mw: vec![0.0; 360] };
        assert!(segment_lobes(&b, -10.0).is_empty());
    }

    #[test]
    fn every_lit_bin_lands_in_exactly_one_segment() {
        // Pseudo-random profile; deterministic arithmetic generator keeps
        // the test hermetic.
        let mut power = vec![0.0; 72];
        let mut x = 7u64;
        for p in power.iter_mut() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            *p = (x >> 40) as f64 / 1e6;
        }
        let b = BinnedAzimuth { bin_width_deg: 5.0, power_mw: power.clone() };
        let segs = segment_lobes(&b, -10.0);
        let peak = power.iter().cloned().fold(0.0, f64::max);
        let cut = peak * 0.1;
        for (k, &p) in power.iter().enumerate() {
            let owners =
                segs.iter().filter(|s| (0..s.n_bins).any(|j| (s.start_bin + j) % 72 == k)).count();
            assert_eq!(owners, usize::from(p >= cut), "bin {k}");
        }
    }

    #[test]
    fn lobe_spread_unwraps_about_the_segment_center() {
        // Lobe straddling north: equal power half a degree either side
        // lands in wrapped-adjacent bins and must read as a half degree
        // spread, not 179.5.
        let sp = spectrum(&[(359.5, 0.0, 1.0), (0.5, 10.0, 1.0)]);
        let b = sp.bin_azimuth(1.0).unwrap();
        let segs = segment_lobes(&b, -10.0);
        assert_eq!(segs.len(), 1);
        assert_eq!((segs[0].start_bin, segs[0].n_bins), (359, 2));
        let stats = rms_lobe_spread(&sp, &segs[0]).unwrap();
        assert_abs_diff_eq!(stats.rms_azimuth_spread_deg, 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(stats.mean_azimuth_deg, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(stats.mean_elevation_deg, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(stats.rms_elevation_spread_deg, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(stats.power_fraction, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn lobe_power_fraction_splits_between_lobes() {
        let sp = spectrum(&[(10.0, 0.0, 3.0), (11.0, 0.0, 1.0), (200.0, 0.0, 1.0)]);
        let b = sp.bin_azimuth(1.0).unwrap();
        let segs = segment_lobes(&b, -10.0);
        assert_eq!(segs.len(), 2);
        let s0 = rms_lobe_spread(&sp, &segs[0]).unwrap();
        let s1 = rms_lobe_spread(&sp, &segs[1]).unwrap();
        assert_abs_diff_eq!(s0.power_fraction, 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(s1.power_fraction, 0.2, epsilon = 1e-12);
        assert_eq!(s1.rms_azimuth_spread_deg, 0.0);
    }

    #[test]
    fn global_azimuth_spread_is_rotation_invariant() {
        let base = [(350.0, 0.0, 1.0), (10.0, 0.0, 1.0), (20.0, 0.0, 0.5)];
        let a = global_angular_spread(&spectrum(&base), Axis::Azimuth).unwrap();
        for rot in [37.0, 180.0, 271.0] {
            let rotated: Vec<_> =
                base.iter().map(|&(az, el, p)| (wrap_azimuth_deg(az + rot), el, p)).collect();
            let b = global_angular_spread(&spectrum(&rotated), Axis::Azimuth).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn global_azimuth_spread_beats_the_naive_linear_std() {
        // Two equal powers 20 degrees apart across the cut: circular
        // spread is 10, the naive linear one 170.
        let sp = spectrum(&[(350.0, 0.0, 1.0), (10.0, 0.0, 1.0)]);
        let s = global_angular_spread(&sp, Axis::Azimuth).unwrap();
        assert_abs_diff_eq!(s, 10.0, epsilon = 1e-9);
    }

    #[test]
    fn global_elevation_spread_is_plain_weighted_std() {
        let sp = spectrum(&[(0.0, -10.0, 1.0), (90.0, 10.0, 1.0)]);
        let s = global_angular_spread(&sp, Axis::Elevation).unwrap();
        assert_abs_diff_eq!(s, 10.0, epsilon = 1e-12);
        let sp = spectrum(&[(0.0, 4.0, 2.0), (0.0, 13.0, 1.0)]);
        let mean: f64 = (4.0 * 2.0 + 13.0) / 3.0;
        let var: f64 = (2.0 * (4.0 - mean) * (4.0 - mean) + (13.0 - mean) * (13.0 - mean)) / 3.0;
        assert_abs_diff_eq!(s_el(&sp), var.sqrt(), epsilon = 1e-12);
    }

    fn s_el(sp: &AngularSpectrum) -> f64 {
        global_angular_spread(sp, Axis::Elevation).unwrap()
    }

    #[test]
    fn single_direction_has_zero_spread() {
        let sp = spectrum(&[(123.0, 45.0, 2.0)]);
        assert_abs_diff_eq!(
            global_angular_spread(&sp, Axis::Azimuth).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert_eq!(global_angular_spread(&sp, Axis::Elevation).unwrap(), 0.0);
    }

    #[test]
    fn cdf_is_right_continuous_with_unit_top() {
        let cdf = empirical_cdf(&[3.0, 1.0, 2.0, 2.0]).unwrap();
        assert_eq!(cdf.len(), 4);
        assert_eq!(cdf[0], (1.0, 0.25));
        assert_eq!(cdf[1], (2.0, 0.5));
        assert_eq!(cdf[2], (2.0, 0.75));
        assert_eq!(cdf[3], (3.0, 1.0));
        assert!(empirical_cdf(&[]).is_err());
        assert!(empirical_cdf(&[f64::NAN]).is_err());
    }

    #[test]
    fn median_is_the_lower_middle_order_statistic() {
        assert_eq!(median(&[5.0]).unwrap(), 5.0);
        assert_eq!(median(&[2.0, 1.0]).unwrap(), 1.0);
        assert_eq!(median(&[3.0, 1.0, 2.0]).unwrap(), 2.0);
        assert_eq!(median(&[4.0, 1.0, 3.0, 2.0]).unwrap(), 2.0);
        assert_eq!(median(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap(), 3.0);
        assert!(median(&[]).is_err());
    }
}
