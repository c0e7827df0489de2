//! Segmentation output → per-depth candidate picks.
//!
//! Each mask row is a binary function of azimuth. Every maximal circular run
//! of ones becomes one breakout candidate: its first column gives the left
//! edge, its length the clockwise width, and its midpoint the azimuth.

use crate::angle::wrap360;
use crate::error::{Error, Result};
use crate::grid::{GridGeometry, MaskGrid, ProbGrid};
use crate::picks::{BreakoutPick, PickSet, PickSource, PickStatus};

pub const DEFAULT_THRESHOLD: f64 = 0.5;
pub const MIN_WIDTH_DEG: f64 = 10.0;

/// Slack on the width comparison so that lattice widths such as
/// `7 · (360/252)` are not lost to rounding.
const WIDTH_EPS: f64 = 1e-9;

/// A maximal run of ones on a circular row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularRun {
    pub start_col: usize,
    pub length: usize,
}

impl CircularRun {
    pub fn is_full_circle(&self, n_azimuth: usize) -> bool {
        self.length == n_azimuth
    }
}

/// `cell = 1` iff `p ≥ threshold`.
pub fn binarize(p: &ProbGrid, threshold: f64) -> Result<MaskGrid> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::param(format!("threshold {threshold} outside (0, 1)")));
    }
    let values = p.values().iter().map(|&v| u8::from(v as f64 >= threshold)).collect();
    MaskGrid::new(*p.geometry(), values)
}

/// Maximal runs of ones in a circular row, ordered by start column.
///
/// A run crossing the end of the row is reported once, starting at its true
/// first column. A row of all ones yields a single run of full length
/// starting at column 0.
pub fn extract_runs(row: &[u8]) -> Vec<CircularRun> {
    let n = row.len();
    if n == 0 {
        return Vec::new();
    }
    let Some(first_zero) = row.iter().position(|&v| v == 0) else {
        return vec![CircularRun { start_col: 0, length: n }];
    };
    let mut runs = Vec::new();
    // Walk one full turn starting just after a zero, so no run is split.
    let mut i = 1;
    while i <= n {
        let c = (first_zero + i) % n;
        if row[c] != 0 {
            let start = c;
            let mut len = 0;
            while i <= n && row[(first_zero + i) % n] != 0 {
                len += 1;
                i += 1;
            }
            runs.push(CircularRun { start_col: start, length: len });
        } else {
            i += 1;
        }
    }
    runs.sort();
    runs
}

/// Converts one run to a pick, or `None` for washouts (full circle) and
/// runs narrower than `min_width_deg`.
pub fn run_to_pick_with(run: CircularRun, g: &GridGeometry, depth: f64, min_width_deg: f64) -> Option<BreakoutPick> {
    let n = g.n_azimuth();
    if run.is_full_circle(n) || run.length == 0 {
        return None;
    }
    let width = run.length as f64 * 360.0 / n as f64;
    if width + WIDTH_EPS < min_width_deg {
        return None;
    }
    let left = run.start_col as f64 * 360.0 / n as f64;
    Some(BreakoutPick {
        depth,
        left_deg: left,
        right_deg: wrap360(left + width),
        width_deg: width,
        azimuth_deg: wrap360(left + width / 2.0),
        status: PickStatus::Candidate,
    })
}

/// [`run_to_pick_with`] at the default 10° minimum width.
pub fn run_to_pick(run: CircularRun, g: &GridGeometry, depth: f64) -> Option<BreakoutPick> {
    run_to_pick_with(run, g, depth, MIN_WIDTH_DEG)
}

/// Result of scanning a whole mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    pub picks: PickSet,
    /// Depths whose row was entirely ones.
    pub washout_depths: Vec<f64>,
}

pub fn extract_picks(m: &MaskGrid, min_width_deg: f64) -> Result<Extraction> {
    if !(min_width_deg.is_finite() && min_width_deg >= 0.0) {
        return Err(Error::param(format!("min width {min_width_deg} must be finite and ≥ 0")));
    }
    let g = m.geometry();
    let mut picks = Vec::new();
    let mut washout_depths = Vec::new();
    for r in 0..g.n_depth() {
        let depth = g.depth_of_row(r);
        for run in extract_runs(m.row(r)) {
            if run.is_full_circle(g.n_azimuth()) {
                washout_depths.push(depth);
                continue;
            }
            picks.extend(run_to_pick_with(run, g, depth, min_width_deg));
        }
    }
    Ok(Extraction {
        picks: PickSet::new(picks, PickSource::Segnet)?,
        washout_depths,
    })
}

/// All candidate picks of a mask at the default minimum width.
pub fn picks_from_mask(m: &MaskGrid) -> PickSet {
    extract_picks(m, MIN_WIDTH_DEG)
        .expect("runs in one row never share a start column")
        .picks
}

/// Paints picks back onto a mask. Edges are snapped to the column lattice and
/// depths to the nearest row.
///
/// Overlapping picks at one depth merge into a single run; a warning is
/// logged.
pub fn rasterize_picks(s: &PickSet, g: &GridGeometry) -> Result<MaskGrid> {
    let mut m = MaskGrid::zeros(*g);
    let n = g.n_azimuth();
    let step = g.azimuth_step();
    for p in s {
        let r = g
            .row_of_depth(p.depth)
            .ok_or_else(|| Error::param(format!("pick depth {} outside the grid", p.depth)))?;
        let start = g.column_of_azimuth(p.left_deg);
        let len = ((p.width_deg / step).round() as usize).clamp(1, n);
        let row = m.row_mut(r);
        let mut overlapped = false;
        for k in 0..len {
            let c = (start + k) % n;
            overlapped |= row[c] == 1;
            row[c] = 1;
        }
        if overlapped {
            log::warn!("overlapping picks at depth {} merged into one run", p.depth);
        }
    }
    Ok(m)
}
