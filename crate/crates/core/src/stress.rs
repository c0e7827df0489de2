//! Maximum horizontal stress from breakout width.
//!
//! For a breakout of full width `W` (degrees),
//!
//! ```text
//!            C_ef + P_f            1 + 2 cos(π − W)
//! S_Hmax = ----------------- − S_hmin ----------------
//!          1 − 2 cos(π − W)           1 − 2 cos(π − W)
//! ```
//!
//! which blows up at `W = 120°`.

use crate::angle::cos_deg;
use crate::error::{Error, Result};

/// Widths closer than this to 120° are treated as singular.
pub const SINGULARITY_BAND_DEG: f64 = 1e-6;
pub const SINGULAR_WIDTH_DEG: f64 = 120.0;

/// Stress inputs in MPa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressParams {
    pub shmin: f64,
    pub pf: f64,
    pub cef: f64,
}

impl StressParams {
    pub fn new(shmin: f64, pf: f64, cef: f64) -> Result<Self> {
        let p = Self { shmin, pf, cef };
        p.check()?;
        Ok(p)
    }

    /// Deep diorite example: S_hmin 37 MPa, hydrostatic P_f 14.7 MPa,
    /// C_ef 143 MPa.
    pub fn diorite_example() -> Self {
        Self {
            shmin: 37.0,
            pf: 14.7,
            cef: 143.0,
        }
    }

    pub fn check(&self) -> Result<()> {
        if !(self.cef.is_finite() && self.cef > 0.0) {
            return Err(Error::param(format!("C_ef must be > 0, got {}", self.cef)));
        }
        if !(self.pf.is_finite() && self.pf >= 0.0) {
            return Err(Error::param(format!("P_f must be ≥ 0, got {}", self.pf)));
        }
        if !(self.shmin.is_finite() && self.shmin > 0.0) {
            return Err(Error::param(format!("S_hmin must be > 0, got {}", self.shmin)));
        }
        Ok(())
    }
}

/// S_Hmax in MPa for a breakout of `width_deg` degrees.
pub fn shmax(width_deg: f64, prm: &StressParams) -> Result<f64> {
    prm.check()?;
    if !(width_deg > 0.0 && width_deg < 360.0) {
        return Err(Error::param(format!("breakout width {width_deg}° outside (0, 360)")));
    }
    if (width_deg - SINGULAR_WIDTH_DEG).abs() <= SINGULARITY_BAND_DEG {
        return Err(Error::Singularity { width_deg });
    }
    let c = cos_deg(180.0 - width_deg);
    let den = 1.0 - 2.0 * c;
    Ok((prm.cef + prm.pf) / den - prm.shmin * (1.0 + 2.0 * c) / den)
}

/// |S_Hmax(W + ΔW) − S_Hmax(W)|: the differential-stress error caused by a
/// width error of `dwidth_deg`, with S_hmin held fixed.
pub fn width_sensitivity(width0_deg: f64, dwidth_deg: f64, prm: &StressParams) -> Result<f64> {
    Ok((shmax(width0_deg + dwidth_deg, prm)? - shmax(width0_deg, prm)?).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub width0_deg: f64,
    pub shmax_mpa: f64,
    pub delta_shmax_mpa: f64,
}

/// Tabulates [`width_sensitivity`] for baseline widths `lo, lo+step, … ≤ hi`.
///
/// Baselines where `W` or `W + ΔW` falls outside the formula's domain (the
/// 120° singularity, or outside (0°, 360°)) are skipped with a warning, which
/// splits the table around the singularity.
pub fn sensitivity_sweep(lo: f64, hi: f64, step: f64, dwidth_deg: f64, prm: &StressParams) -> Result<Vec<SweepRow>> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::param(format!("sweep step {step} must be > 0")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::param(format!("sweep range {lo}..{hi} is empty or not finite")));
    }
    if !dwidth_deg.is_finite() {
        return Err(Error::param("width error must be finite"));
    }
    prm.check()?;
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut rows = Vec::with_capacity(n + 1);
    let mut skipped = 0usize;
    for i in 0..=n {
        let w = lo + i as f64 * step;
        match (shmax(w, prm), width_sensitivity(w, dwidth_deg, prm)) {
            (Ok(s), Ok(d)) => rows.push(SweepRow {
                width0_deg: w,
                shmax_mpa: s,
                delta_shmax_mpa: d,
            }),
            _ => skipped += 1,
        }
    }
    if skipped > 0 {
        log::warn!("sensitivity sweep skipped {skipped} baseline width(s) outside the formula's domain");
    }
    Ok(rows)
}
