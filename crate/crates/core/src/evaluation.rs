//! Scoring automatic picks against manual ones.
//!
//! Pixel agreement is measured with IoU on masks; pick agreement by matching
//! picks depth by depth on a common depth grid and counting what is left over
//! on either side. Azimuth statistics are directional (circular), and the
//! World Stress Map C-quality check is provided for quick triage.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::angle::wrap360;
pub use crate::angle::circ_diff;
use crate::error::{Error, Result};
use crate::grid::{MaskGrid, ProbGrid};
use crate::picks::{BreakoutPick, PickSet};

pub const DEFAULT_RESAMPLE_STEP_M: f64 = 0.2;
pub const DEFAULT_MATCH_TOLERANCE_DEG: f64 = 30.0;
pub const BCE_EPSILON: f64 = 1e-7;
pub const ROSE_BIN_DEG: f64 = 10.0;
pub const REPORT_SCHEMA: u32 = 1;

/// Intersection over union of two masks; 1 when both are empty.
pub fn iou(pred: &MaskGrid, label: &MaskGrid) -> Result<f64> {
    pred.geometry().check_same(label.geometry(), "iou")?;
    let (mut inter, mut union) = (0usize, 0usize);
    for (&a, &b) in pred.values().iter().zip(label.values()) {
        inter += usize::from(a == 1 && b == 1);
        union += usize::from(a == 1 || b == 1);
    }
    Ok(if union == 0 { 1.0 } else { inter as f64 / union as f64 })
}

/// Rounds a depth to the nearest nanometer so that bin centers computed as
/// `(k + 0.5)·step` compare equal to their decimal spelling.
fn snap_depth(d: f64) -> f64 {
    (d * 1e9).round() / 1e9
}

/// Index of the `step`-wide bin `[k·step, (k+1)·step)` holding `depth`.
fn bin_index(depth: f64, step: f64) -> i64 {
    (depth / step + 1e-9).floor() as i64
}

/// Moves picks onto a regular depth grid of `step` meters.
///
/// Bins are `[k·step, (k+1)·step)`. For each bin the native depth closest to
/// the bin center (ties go to the shallower one) contributes all of its
/// picks, relabelled with the bin-center depth.
pub fn resample_picks(s: &PickSet, step: f64) -> Result<PickSet> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::param(format!("resample step {step} must be > 0")));
    }
    let mut chosen: Vec<(i64, f64, &[BreakoutPick])> = Vec::new();
    for (depth, group) in s.depth_groups() {
        let k = bin_index(depth, step);
        let center = (k as f64 + 0.5) * step;
        match chosen.last_mut() {
            Some((bk, bd, bg)) if *bk == k => {
                if (depth - center).abs() < (*bd - center).abs() - 1e-9 {
                    *bd = depth;
                    *bg = group;
                }
            }
            _ => chosen.push((k, depth, group)),
        }
    }
    let mut out = Vec::with_capacity(s.len());
    for (k, _, group) in chosen {
        let center = snap_depth((k as f64 + 0.5) * step);
        out.extend(group.iter().map(|p| BreakoutPick { depth: center, ..*p }));
    }
    PickSet::new(out, s.source())
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MatchResult {
    /// `(auto, manual)` pairs.
    pub matched: Vec<(BreakoutPick, BreakoutPick)>,
    pub false_positives: Vec<BreakoutPick>,
    pub false_negatives: Vec<BreakoutPick>,
}

impl MatchResult {
    pub fn n_auto(&self) -> usize {
        self.matched.len() + self.false_positives.len()
    }

    pub fn n_manual(&self) -> usize {
        self.matched.len() + self.false_negatives.len()
    }
}

fn depth_key(d: f64) -> u64 {
    (d + 0.0).to_bits()
}

/// Pairs automatic with manual picks at identical depths.
///
/// Within a depth, candidate pairs closer than `az_tol_deg` are taken
/// greedily in order of increasing azimuth difference.
pub fn match_picks(auto: &PickSet, manual: &PickSet, az_tol_deg: f64) -> MatchResult {
    let mut by_depth: HashMap<u64, (Vec<BreakoutPick>, Vec<BreakoutPick>)> = HashMap::new();
    let mut order: Vec<f64> = Vec::new();
    for p in auto {
        by_depth
            .entry(depth_key(p.depth))
            .or_insert_with(|| {
                order.push(p.depth);
                Default::default()
            })
            .0
            .push(*p);
    }
    for p in manual {
        by_depth
            .entry(depth_key(p.depth))
            .or_insert_with(|| {
                order.push(p.depth);
                Default::default()
            })
            .1
            .push(*p);
    }
    order.sort_by(f64::total_cmp);

    let mut result = MatchResult::default();
    for d in order {
        let (a, m) = &by_depth[&depth_key(d)];
        let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
        for (i, pa) in a.iter().enumerate() {
            for (j, pm) in m.iter().enumerate() {
                let diff = circ_diff(pa.azimuth_deg, pm.azimuth_deg);
                if diff <= az_tol_deg {
                    pairs.push((diff, i, j));
                }
            }
        }
        pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
        let mut used_a = vec![false; a.len()];
        let mut used_m = vec![false; m.len()];
        for (_, i, j) in pairs {
            if !used_a[i] && !used_m[j] {
                used_a[i] = true;
                used_m[j] = true;
                result.matched.push((a[i], m[j]));
            }
        }
        result
            .false_positives
            .extend(a.iter().zip(&used_a).filter(|(_, u)| !**u).map(|(p, _)| *p));
        result
            .false_negatives
            .extend(m.iter().zip(&used_m).filter(|(_, u)| !**u).map(|(p, _)| *p));
    }
    result
}

/// `(fpr, fnr)`: unmatched automatic picks over all automatic picks, and
/// unmatched manual picks over all manual picks. Empty denominators give 0.
pub fn rates(m: &MatchResult) -> (f64, f64) {
    let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    (
        ratio(m.false_positives.len(), m.n_auto()),
        ratio(m.false_negatives.len(), m.n_manual()),
    )
}

/// Mean azimuth error and mean absolute width error over matched pairs.
pub fn pick_errors(m: &MatchResult) -> Option<(f64, f64)> {
    if m.matched.is_empty() {
        return None;
    }
    let n = m.matched.len() as f64;
    let az = m.matched.iter().map(|(a, b)| circ_diff(a.azimuth_deg, b.azimuth_deg)).sum::<f64>() / n;
    let w = m.matched.iter().map(|(a, b)| (a.width_deg - b.width_deg).abs()).sum::<f64>() / n;
    Some((az, w))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularStats {
    pub mean_deg: f64,
    pub std_deg: f64,
    /// Mean resultant length R̄ in `[0, 1]`.
    pub resultant_length: f64,
}

const MIN_RESULTANT: f64 = 1e-12;

/// Directional mean `atan2(Σ sin, Σ cos)` and circular standard deviation
/// `sqrt(−2 ln R̄)`, both in degrees.
pub fn circular_stats(azimuths: &[f64]) -> Result<CircularStats> {
    if azimuths.is_empty() {
        return Err(Error::Undefined("circular statistics of an empty list".into()));
    }
    let (s, c) = azimuths.iter().fold((0.0, 0.0), |(s, c), a| {
        let r = a.to_radians();
        (s + r.sin(), c + r.cos())
    });
    let n = azimuths.len() as f64;
    let r_bar = ((s / n).powi(2) + (c / n).powi(2)).sqrt().min(1.0);
    if r_bar < MIN_RESULTANT {
        return Err(Error::Undefined("azimuths are uniformly spread; mean direction undefined".into()));
    }
    Ok(CircularStats {
        mean_deg: wrap360(s.atan2(c).to_degrees()),
        std_deg: (-2.0 * r_bar.ln()).max(0.0).sqrt().to_degrees(),
        resultant_length: r_bar,
    })
}

/// Statistics of axial data (a direction and its opposite are the same
/// observation), computed on doubled angles. The mean lies in `[0, 180)`.
///
/// Breakout pairs sit 180° apart, so this is the summary that makes sense for
/// a set holding both sides of every breakout.
pub fn axial_stats(azimuths: &[f64]) -> Result<CircularStats> {
    let doubled: Vec<f64> = azimuths.iter().map(|a| 2.0 * a).collect();
    let st = circular_stats(&doubled)?;
    Ok(CircularStats {
        mean_deg: st.mean_deg / 2.0,
        std_deg: st.std_deg / 2.0,
        resultant_length: st.resultant_length,
    })
}

/// Plain arithmetic mean and population standard deviation.
pub fn arithmetic_stats(azimuths: &[f64]) -> Result<(f64, f64)> {
    if azimuths.is_empty() {
        return Err(Error::Undefined("statistics of an empty list".into()));
    }
    let n = azimuths.len() as f64;
    let mean = azimuths.iter().sum::<f64>() / n;
    let var = azimuths.iter().map(|a| (a - mean).powi(2)).sum::<f64>() / n;
    Ok((mean, var.sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WsmRank {
    #[serde(rename = "C_or_better")]
    COrBetter,
    #[serde(rename = "below_C")]
    BelowC,
}

impl fmt::Display for WsmRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WsmRank::COrBetter => "C_or_better",
            WsmRank::BelowC => "below_C",
        })
    }
}

pub const WSM_MIN_ZONES: usize = 4;
pub const WSM_MIN_LENGTH_M: f64 = 20.0;
pub const WSM_MAX_STD_DEG: f64 = 25.0;

#[derive(Debug, Clone, PartialEq)]
pub struct WsmAssessment {
    pub rank: WsmRank,
    pub zones: usize,
    pub combined_length_m: f64,
    pub azimuth_std_deg: Option<f64>,
}

/// Breakout zones: runs of consecutive depth samples that carry picks.
/// Returns `(top, bottom)` depth of each zone.
pub fn breakout_zones(s: &PickSet, native_step: f64) -> Vec<(f64, f64)> {
    let mut zones: Vec<(f64, f64)> = Vec::new();
    let max_gap = native_step * (1.0 + 1e-6) + 1e-9;
    for d in s.depths() {
        match zones.last_mut() {
            Some((_, bottom)) if d - *bottom <= max_gap => *bottom = d,
            _ => zones.push((d, d)),
        }
    }
    zones
}

/// World Stress Map C-quality check: at least 4 zones, at least 20 m
/// combined length and azimuth standard deviation below 25°.
///
/// Each zone spans `bottom − top + native_step` meters, i.e. every depth
/// sample counts for one step. Azimuth spread uses [`axial_stats`].
pub fn wsm_quality(s: &PickSet, native_step: f64) -> WsmAssessment {
    let zones = breakout_zones(s, native_step);
    let combined: f64 = zones.iter().map(|(t, b)| b - t + native_step).sum();
    let std = axial_stats(&s.azimuths()).ok().map(|st| st.std_deg);
    let ok = zones.len() >= WSM_MIN_ZONES
        && combined >= WSM_MIN_LENGTH_M - 1e-9
        && std.is_some_and(|v| v < WSM_MAX_STD_DEG);
    WsmAssessment {
        rank: if ok { WsmRank::COrBetter } else { WsmRank::BelowC },
        zones: zones.len(),
        combined_length_m: combined,
        azimuth_std_deg: std,
    }
}

/// Class-balanced binary cross-entropy, summed over all cells.
///
/// `β` is the fraction of background cells; the loss is
/// `−β Σ y ln p − Σ (1−y) ln(1−p)`. The arguments of both logarithms are
/// floored at `ε`, so exact predictions cost exactly 0.
/// Returns `(β, loss)`.
pub fn balanced_bce(y: &MaskGrid, p: &ProbGrid) -> Result<(f64, f64)> {
    y.geometry().check_same(p.geometry(), "balanced_bce")?;
    let labels: Vec<f64> = y.values().iter().map(|&v| v as f64).collect();
    let probs: Vec<f64> = p.values().iter().map(|&v| v as f64).collect();
    Ok(balanced_bce_slices(&labels, &probs))
}

/// Slice form of [`balanced_bce`] for callers holding raw tensors.
pub fn balanced_bce_slices(y: &[f64], p: &[f64]) -> (f64, f64) {
    assert_eq!(y.len(), p.len(), "label and probability lengths differ");
    let n = y.len() as f64;
    let beta = y.iter().map(|v| 1.0 - v).sum::<f64>() / n;
    let (mut pos, mut neg) = (0.0, 0.0);
    for (&yi, &pi) in y.iter().zip(p) {
        if yi != 0.0 {
            pos += yi * pi.max(BCE_EPSILON).ln();
        }
        if yi != 1.0 {
            neg += (1.0 - yi) * (1.0 - pi).max(BCE_EPSILON).ln();
        }
    }
    (beta, -beta * pos - neg)
}

/// Azimuth counts in `bin_deg`-wide bins starting at 0°.
pub fn rose_histogram(azimuths: &[f64], bin_deg: f64) -> Vec<(f64, usize)> {
    let nbins = (360.0 / bin_deg).ceil() as usize;
    let mut counts = vec![0usize; nbins];
    for &a in azimuths {
        let b = ((wrap360(a) / bin_deg).floor() as usize).min(nbins - 1);
        counts[b] += 1;
    }
    counts.into_iter().enumerate().map(|(i, c)| (i as f64 * bin_deg, c)).collect()
}

pub fn write_rose_csv<W: Write>(hist: &[(f64, usize)], mut out: W) -> Result<()> {
    writeln!(out, "bin_start_deg,count")?;
    for (start, count) in hist {
        writeln!(out, "{start},{count}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationReport {
    pub schema: u32,
    pub iou: Option<f64>,
    pub azimuth_mean_deg: Option<f64>,
    pub azimuth_std_deg: Option<f64>,
    pub azimuth_error_deg: Option<f64>,
    pub width_error_deg: Option<f64>,
    pub fpr: f64,
    pub fnr: f64,
    pub wsm_rank: WsmRank,
    pub n_auto: usize,
    pub n_manual: usize,
    pub n_matched: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub az_tol_deg: f64,
    /// Common depth grid for matching; `None` matches on native depths.
    pub resample_step: Option<f64>,
    /// Depth sampling of the picks when `resample_step` is `None`.
    pub native_step: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            az_tol_deg: DEFAULT_MATCH_TOLERANCE_DEG,
            resample_step: Some(DEFAULT_RESAMPLE_STEP_M),
            native_step: DEFAULT_RESAMPLE_STEP_M,
        }
    }
}

/// Full metric set for one method on one borehole.
///
/// `masks` is `(pred, label)` when pixel-level IoU is wanted. Azimuth mean and
/// spread describe the automatic picks (axial statistics).
pub fn evaluate(
    auto: &PickSet,
    manual: &PickSet,
    masks: Option<(&MaskGrid, &MaskGrid)>,
    opts: &EvalOptions,
) -> Result<EvaluationReport> {
    let (auto, manual, step) = match opts.resample_step {
        Some(step) => (resample_picks(auto, step)?, resample_picks(manual, step)?, step),
        None => (auto.clone(), manual.clone(), opts.native_step),
    };
    let m = match_picks(&auto, &manual, opts.az_tol_deg);
    let (fpr, fnr) = rates(&m);
    let errors = pick_errors(&m);
    let stats = axial_stats(&auto.azimuths()).ok();
    let iou = masks.map(|(p, l)| iou(p, l)).transpose()?;
    Ok(EvaluationReport {
        schema: REPORT_SCHEMA,
        iou,
        azimuth_mean_deg: stats.map(|s| s.mean_deg),
        azimuth_std_deg: stats.map(|s| s.std_deg),
        azimuth_error_deg: errors.map(|e| e.0),
        width_error_deg: errors.map(|e| e.1),
        fpr,
        fnr,
        wsm_rank: wsm_quality(&auto, step).rank,
        n_auto: m.n_auto(),
        n_manual: m.n_manual(),
        n_matched: m.matched.len(),
    })
}
