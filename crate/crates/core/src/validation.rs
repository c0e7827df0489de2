//! Azimuthal-symmetry validation of candidate picks.
//!
//! Breakouts form in pairs on opposite sides of the hole. A depth is kept
//! only when it carries exactly two candidates whose azimuths are
//! `160° ≤ circ360(φ2 − φ1) ≤ 200°` apart. Everything else is kept in the
//! output as rejected, tagged with the reason.

pub use crate::angle::circ360;
use crate::angle::wrap360;
use crate::error::Result;
use crate::evaluation::resample_picks;
use crate::picks::{BreakoutPick, PickSet, PickStatus, RejectReason};

pub const MIN_SEPARATION_DEG: f64 = 160.0;
pub const MAX_SEPARATION_DEG: f64 = 200.0;

/// Candidates sharing one depth.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthGroup {
    pub depth: f64,
    pub picks: Vec<BreakoutPick>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationOutcome {
    pub retained: PickSet,
    pub rejected: PickSet,
}

impl ValidationOutcome {
    pub fn len(&self) -> usize {
        self.retained.len() + self.rejected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// True when two azimuths satisfy the symmetry window (both bounds inclusive).
pub fn is_symmetric_pair(phi1: f64, phi2: f64) -> bool {
    let d = wrap360(phi2 - phi1);
    (MIN_SEPARATION_DEG..=MAX_SEPARATION_DEG).contains(&d)
}

fn depth_decision(picks: &[BreakoutPick]) -> PickStatus {
    match picks {
        [a, b] if is_symmetric_pair(a.azimuth_deg, b.azimuth_deg) => PickStatus::Validated,
        [_, _] => PickStatus::Rejected(RejectReason::Separation),
        _ => PickStatus::Rejected(RejectReason::CountNotTwo),
    }
}

/// Returns `(retained, rejected)` picks for one depth, statuses updated.
fn split_group(picks: &[BreakoutPick]) -> (Vec<BreakoutPick>, Vec<BreakoutPick>) {
    let status = depth_decision(picks);
    let tagged = picks.iter().map(|p| p.with_status(status)).collect();
    if status == PickStatus::Validated {
        (tagged, Vec::new())
    } else {
        (Vec::new(), tagged)
    }
}

/// Applies the symmetry rule to one depth. Fails if two picks share a left
/// edge.
pub fn validate_depth(g: &DepthGroup) -> Result<ValidationOutcome> {
    let (kept, dropped) = split_group(&g.picks);
    let source = crate::picks::PickSource::Manual;
    Ok(ValidationOutcome {
        retained: PickSet::new(kept, source)?,
        rejected: PickSet::new(dropped, source)?,
    })
}

/// Validates every depth of `s`.
///
/// With `depth_grid_step = None` picks are grouped on their own (native)
/// depths. With `Some(step)` they are first resampled to that grid
/// (see [`resample_picks`]) and grouped there.
pub fn validate(s: &PickSet, depth_grid_step: Option<f64>) -> Result<ValidationOutcome> {
    let resampled;
    let input = match depth_grid_step {
        Some(step) => {
            resampled = resample_picks(s, step)?;
            &resampled
        }
        None => s,
    };
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for (_, group) in input.depth_groups() {
        let (k, d) = split_group(group);
        kept.extend(k);
        dropped.extend(d);
    }
    Ok(ValidationOutcome {
        retained: PickSet::new(kept, s.source())?,
        rejected: PickSet::new(dropped, s.source())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picks::PickSource;

    /// A 20°-wide candidate centred on `az`.
    fn at(depth: f64, az: f64) -> BreakoutPick {
        BreakoutPick::candidate(depth, az - 10.0, 20.0).unwrap()
    }

    fn group(azs: &[f64]) -> DepthGroup {
        DepthGroup {
            depth: 1.0,
            picks: azs.iter().map(|&a| at(1.0, a)).collect(),
        }
    }

    #[test]
    fn validate_depth_examples() {
        let out = validate_depth(&group(&[10.0, 190.0])).unwrap();
        assert_eq!(out.retained.len(), 2);
        assert!(out.retained.iter().all(|p| p.status == PickStatus::Validated));
        assert!(out.rejected.is_empty());

        let out = validate_depth(&group(&[10.0])).unwrap();
        assert!(out.retained.is_empty());
        assert_eq!(out.rejected.picks()[0].status, PickStatus::Rejected(RejectReason::CountNotTwo));

        let out = validate_depth(&group(&[10.0, 150.0])).unwrap();
        assert!(out.retained.is_empty());
        assert!(out.rejected.iter().all(|p| p.status == PickStatus::Rejected(RejectReason::Separation)));

        let out = validate_depth(&group(&[10.0, 100.0, 190.0])).unwrap();
        assert_eq!(out.rejected.len(), 3);
        assert!(out.rejected.iter().all(|p| p.status == PickStatus::Rejected(RejectReason::CountNotTwo)));
    }

    #[test]
    fn window_bounds_inclusive() {
        assert!(is_symmetric_pair(0.0, 160.0));
        assert!(is_symmetric_pair(0.0, 200.0));
        assert!(!is_symmetric_pair(0.0, 159.999));
        assert!(!is_symmetric_pair(0.0, 200.001));
    }

    #[test]
    fn exhaustive_integer_separations() {
        let retained: Vec<u32> = (0..360).filter(|&d| is_symmetric_pair(0.0, d as f64)).collect();
        assert_eq!(retained.len(), 41);
        assert_eq!((retained[0], retained[40]), (160, 200));
    }

    #[test]
    fn validate_whole_set() {
        assert!(validate(&PickSet::empty(PickSource::Segnet), None).unwrap().is_empty());

        let mut picks = Vec::new();
        for r in 0..20 {
            let d = r as f64 * 0.2;
            picks.push(at(d, 60.0));
            picks.push(at(d, 240.0));
        }
        // one-sided keyseat-like picks below
        for r in 20..30 {
            picks.push(at(r as f64 * 0.2, 300.0));
        }
        let s = PickSet::new(picks, PickSource::PeakDetect).unwrap();
        let out = validate(&s, None).unwrap();
        assert_eq!(out.retained.len(), 40);
        assert_eq!(out.rejected.len(), 10);
        assert_eq!(out.retained.source(), PickSource::PeakDetect);
    }
}
