//! Rule-based baseline picker working directly on amplitude and radius logs.
//!
//! Per depth row, both signals are smoothed with a circular moving average.
//! A cell is flagged when the smoothed amplitude is unusually low *and* the
//! smoothed radius unusually high relative to that row's own mean and
//! standard deviation. Circular runs of flagged cells at least 10° wide
//! become picks.

use crate::error::{Error, Result};
use crate::grid::{GridGeometry, ImageLogGrid};
use crate::picks::{BreakoutPick, PickSet, PickSource};
use crate::postproc::{extract_runs, run_to_pick_with, MIN_WIDTH_DEG};
use crate::validation::validate;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakDetectParams {
    pub smooth_window_deg: f64,
    /// Amplitude threshold is `μ − k_amp·σ`.
    pub k_amp: f64,
    /// Radius threshold is `μ + max(k_rad·σ, min_radius_excess_mm)`.
    pub k_rad: f64,
    /// Floor on the radius excess, so rows carrying nothing but tool noise
    /// do not flag their own noise tails.
    pub min_radius_excess_mm: f64,
    pub min_width_deg: f64,
    pub apply_symmetry_validation: bool,
}

impl Default for PeakDetectParams {
    fn default() -> Self {
        Self {
            smooth_window_deg: 15.0,
            k_amp: 1.0,
            k_rad: 1.0,
            min_radius_excess_mm: 1.0,
            min_width_deg: MIN_WIDTH_DEG,
            apply_symmetry_validation: false,
        }
    }
}

impl PeakDetectParams {
    pub fn check(&self, g: &GridGeometry) -> Result<()> {
        if !(self.smooth_window_deg >= g.azimuth_step()) {
            return Err(Error::param(format!(
                "smoothing window {}° is narrower than one column ({}°)",
                self.smooth_window_deg,
                g.azimuth_step()
            )));
        }
        if !(self.k_amp > 0.0 && self.k_rad > 0.0) {
            return Err(Error::param("k_amp and k_rad must be > 0"));
        }
        if !(self.min_radius_excess_mm >= 0.0) {
            return Err(Error::param("min_radius_excess_mm must be ≥ 0"));
        }
        if !(self.min_width_deg >= 0.0) {
            return Err(Error::param("min_width_deg must be ≥ 0"));
        }
        Ok(())
    }
}

/// Circular moving average over an odd number of columns.
///
/// The window is `window_deg` rounded to the nearest odd column count (capped
/// at the row length). NaN cells are left out of every average; a window with
/// no valid cell yields NaN.
pub fn smooth_circular(row: &[f64], window_deg: f64, g: &GridGeometry) -> Result<Vec<f64>> {
    let n = g.n_azimuth();
    if row.len() != n {
        return Err(Error::shape(format!("row has {} cells, grid has {n} columns", row.len())));
    }
    let step = g.azimuth_step();
    if !(window_deg >= step) {
        return Err(Error::param(format!("smoothing window {window_deg}° is narrower than one column ({step}°)")));
    }
    let half = (((window_deg / step) - 1.0) / 2.0).round().max(0.0) as usize;
    let half = half.min((n - 1) / 2);
    let (mut sum, mut cnt) = (0.0, 0usize);
    let at = |i: isize| row[i.rem_euclid(n as isize) as usize];
    let h = half as isize;
    for k in -h..=h {
        let v = at(k);
        if !v.is_nan() {
            sum += v;
            cnt += 1;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in 0..n as isize {
        out.push(if cnt == 0 { f64::NAN } else { sum / cnt as f64 });
        let leaving = at(c - h);
        let entering = at(c + h + 1);
        if !leaving.is_nan() {
            sum -= leaving;
            cnt -= 1;
        }
        if !entering.is_nan() {
            sum += entering;
            cnt += 1;
        }
    }
    Ok(out)
}

fn mean_std(v: &[f64]) -> Option<(f64, f64)> {
    let valid: Vec<f64> = v.iter().copied().filter(|x| !x.is_nan()).collect();
    if valid.is_empty() {
        return None;
    }
    let n = valid.len() as f64;
    let mean = valid.iter().sum::<f64>() / n;
    let var = valid.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    Some((mean, var.sqrt()))
}

/// One detected zone with the azimuth of its amplitude minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakZone {
    pub pick: BreakoutPick,
    /// Center of the column with the lowest smoothed amplitude in the zone.
    pub min_amplitude_deg: f64,
}

/// Detected zones for a single depth row.
pub fn detect_row_zones(
    amp_row: &[f64],
    rad_row: &[f64],
    params: &PeakDetectParams,
    g: &GridGeometry,
    depth: f64,
) -> Result<Vec<PeakZone>> {
    let n = g.n_azimuth();
    if amp_row.len() != n || rad_row.len() != n {
        return Err(Error::shape("amplitude and radius rows must match the grid width"));
    }
    params.check(g)?;
    let amp = smooth_circular(amp_row, params.smooth_window_deg, g)?;
    let rad = smooth_circular(rad_row, params.smooth_window_deg, g)?;
    let (Some((mu_a, sd_a)), Some((mu_r, sd_r))) = (mean_std(&amp), mean_std(&rad)) else {
        log::warn!("depth {depth}: no valid samples, row skipped");
        return Ok(Vec::new());
    };
    let amp_cut = mu_a - params.k_amp * sd_a;
    let rad_cut = mu_r + (params.k_rad * sd_r).max(params.min_radius_excess_mm);
    let flags: Vec<u8> = amp
        .iter()
        .zip(&rad)
        .map(|(&a, &r)| u8::from(a < amp_cut && r > rad_cut))
        .collect();

    let step = g.azimuth_step();
    let mut zones = Vec::new();
    for run in extract_runs(&flags) {
        let Some(pick) = run_to_pick_with(run, g, depth, params.min_width_deg) else {
            continue;
        };
        let min_col = (0..run.length)
            .map(|k| (run.start_col + k) % n)
            .min_by(|&x, &y| amp[x].total_cmp(&amp[y]))
            .expect("runs are non-empty");
        zones.push(PeakZone {
            pick,
            min_amplitude_deg: (min_col as f64 + 0.5) * step,
        });
    }
    Ok(zones)
}

/// Candidate picks for one depth row.
pub fn detect_row(
    amp_row: &[f64],
    rad_row: &[f64],
    params: &PeakDetectParams,
    g: &GridGeometry,
    depth: f64,
) -> Result<Vec<BreakoutPick>> {
    Ok(detect_row_zones(amp_row, rad_row, params, g, depth)?
        .into_iter()
        .map(|z| z.pick)
        .collect())
}

/// Runs [`detect_row`] over every depth. With `apply_symmetry_validation`
/// only the picks that pass [`validate`] on native depths are returned.
pub fn peak_detect(amp: &ImageLogGrid, rad: &ImageLogGrid, params: &PeakDetectParams) -> Result<PickSet> {
    let g = amp.geometry();
    g.check_same(rad.geometry(), "peak_detect")?;
    params.check(g)?;
    let mut picks = Vec::new();
    for r in 0..g.n_depth() {
        picks.extend(detect_row(&amp.row_f64(r), &rad.row_f64(r), params, g, g.depth_of_row(r))?);
    }
    let set = PickSet::new(picks, PickSource::PeakDetect)?;
    if params.apply_symmetry_validation {
        Ok(validate(&set, None)?.retained)
    } else {
        Ok(set)
    }
}
