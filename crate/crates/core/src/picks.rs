//! Breakout picks and the pick CSV format.
//!
//! ```text
//! depth_m,azimuth_deg,width_deg,left_deg,right_deg,status,source
//! 1850.250000,143.437500,45.000000,120.937500,165.937500,validated,segnet
//! ```

use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::angle::wrap360;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 7] = ["depth_m", "azimuth_deg", "width_deg", "left_deg", "right_deg", "status", "source"];

/// Tolerance for derived-field consistency of picks read from text.
const TEXT_TOL_DEG: f64 = 2e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    /// The depth had fewer or more than two candidates.
    CountNotTwo,
    /// Two candidates, but not 160° to 200° apart.
    Separation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PickStatus {
    Candidate,
    Validated,
    Rejected(RejectReason),
}

impl fmt::Display for PickStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PickStatus::Candidate => "candidate",
            PickStatus::Validated => "validated",
            PickStatus::Rejected(RejectReason::CountNotTwo) => "rejected:count_not_two",
            PickStatus::Rejected(RejectReason::Separation) => "rejected:separation",
        })
    }
}

impl FromStr for PickStatus {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "candidate" => PickStatus::Candidate,
            "validated" => PickStatus::Validated,
            "rejected:count_not_two" => PickStatus::Rejected(RejectReason::CountNotTwo),
            "rejected:separation" => PickStatus::Rejected(RejectReason::Separation),
            other => return Err(format!("unknown status {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PickSource {
    Manual,
    PeakDetect,
    Segnet,
    Synthetic,
}

impl fmt::Display for PickSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PickSource::Manual => "manual",
            PickSource::PeakDetect => "peak_detect",
            PickSource::Segnet => "segnet",
            PickSource::Synthetic => "synthetic",
        })
    }
}

impl FromStr for PickSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "manual" => PickSource::Manual,
            "peak_detect" => PickSource::PeakDetect,
            "segnet" => PickSource::Segnet,
            "synthetic" => PickSource::Synthetic,
            other => return Err(format!("unknown source {other:?}")),
        })
    }
}

/// One breakout zone at one depth.
///
/// `left_deg` is where the zone starts going clockwise and `width_deg` its
/// clockwise extent. `right_deg` and `azimuth_deg` (the midpoint) are derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BreakoutPick {
    pub depth: f64,
    pub left_deg: f64,
    pub right_deg: f64,
    pub width_deg: f64,
    pub azimuth_deg: f64,
    pub status: PickStatus,
}

impl BreakoutPick {
    /// Builds a pick from its left edge and clockwise width.
    pub fn from_edges(depth: f64, left_deg: f64, width_deg: f64, status: PickStatus) -> Result<Self> {
        if !depth.is_finite() || !left_deg.is_finite() {
            return Err(Error::param("pick depth and left edge must be finite"));
        }
        if !(width_deg > 0.0 && width_deg < 360.0) {
            return Err(Error::param(format!("pick width {width_deg}° outside (0, 360)")));
        }
        let left = wrap360(left_deg);
        Ok(Self {
            depth,
            left_deg: left,
            right_deg: wrap360(left + width_deg),
            width_deg,
            azimuth_deg: wrap360(left + width_deg / 2.0),
            status,
        })
    }

    pub fn candidate(depth: f64, left_deg: f64, width_deg: f64) -> Result<Self> {
        Self::from_edges(depth, left_deg, width_deg, PickStatus::Candidate)
    }

    pub fn with_status(mut self, status: PickStatus) -> Self {
        self.status = status;
        self
    }

    /// Largest disagreement between the stored and the recomputed derived fields.
    pub fn derived_field_error(&self) -> f64 {
        let w = wrap360(self.right_deg - self.left_deg);
        let a = wrap360(self.left_deg + self.width_deg / 2.0);
        crate::angle::circ_diff(w, self.width_deg).max(crate::angle::circ_diff(a, self.azimuth_deg))
    }

    fn check_fields(&self, tol: f64) -> std::result::Result<(), String> {
        if !(self.width_deg > 0.0 && self.width_deg < 360.0) {
            return Err(format!("width_deg {} outside (0, 360)", self.width_deg));
        }
        for (name, v) in [("left_deg", self.left_deg), ("right_deg", self.right_deg), ("azimuth_deg", self.azimuth_deg)] {
            if !(0.0..360.0).contains(&v) {
                return Err(format!("{name} {v} outside [0, 360)"));
            }
        }
        if !self.depth.is_finite() {
            return Err("depth is not finite".into());
        }
        let err = self.derived_field_error();
        if err > tol {
            return Err(format!("width/azimuth inconsistent with edges (off by {err:.3e}°)"));
        }
        Ok(())
    }
}

/// Picks ordered by `(depth, left_deg)`, all from one source.
#[derive(Debug, Clone, PartialEq)]
pub struct PickSet {
    picks: Vec<BreakoutPick>,
    source: PickSource,
}

fn order(a: &BreakoutPick, b: &BreakoutPick) -> std::cmp::Ordering {
    a.depth.total_cmp(&b.depth).then(a.left_deg.total_cmp(&b.left_deg))
}

impl PickSet {
    pub fn empty(source: PickSource) -> Self {
        Self { picks: Vec::new(), source }
    }

    /// Sorts the picks; two picks at the same depth with the same left edge
    /// are an error.
    pub fn new(mut picks: Vec<BreakoutPick>, source: PickSource) -> Result<Self> {
        picks.sort_by(order);
        if let Some(w) = picks.windows(2).find(|w| w[0].depth == w[1].depth && w[0].left_deg == w[1].left_deg) {
            return Err(Error::Invariant(format!(
                "duplicate pick at depth {} with left edge {}°",
                w[0].depth, w[0].left_deg
            )));
        }
        Ok(Self { picks, source })
    }

    pub fn source(&self) -> PickSource {
        self.source
    }

    pub fn with_source(mut self, source: PickSource) -> Self {
        self.source = source;
        self
    }

    pub fn picks(&self) -> &[BreakoutPick] {
        &self.picks
    }

    pub fn into_picks(self) -> Vec<BreakoutPick> {
        self.picks
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BreakoutPick> {
        self.picks.iter()
    }

    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    /// Picks grouped by exactly equal depth, in depth order.
    pub fn depth_groups(&self) -> Vec<(f64, &[BreakoutPick])> {
        self.picks
            .chunk_by(|a, b| a.depth == b.depth)
            .map(|chunk| (chunk[0].depth, chunk))
            .collect()
    }

    /// Distinct depths carrying at least one pick.
    pub fn depths(&self) -> Vec<f64> {
        self.depth_groups().into_iter().map(|(d, _)| d).collect()
    }

    pub fn azimuths(&self) -> Vec<f64> {
        self.picks.iter().map(|p| p.azimuth_deg).collect()
    }
}

impl<'a> IntoIterator for &'a PickSet {
    type Item = &'a BreakoutPick;
    type IntoIter = std::slice::Iter<'a, BreakoutPick>;

    fn into_iter(self) -> Self::IntoIter {
        self.picks.iter()
    }
}

pub fn write_picks_to<W: Write>(set: &PickSet, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    let source = set.source.to_string();
    for p in &set.picks {
        w.write_record([
            format!("{:.6}", p.depth),
            format!("{:.6}", p.azimuth_deg),
            format!("{:.6}", p.width_deg),
            format!("{:.6}", p.left_deg),
            format!("{:.6}", p.right_deg),
            p.status.to_string(),
            source.clone(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn picks_to_csv_string(set: &PickSet) -> String {
    let mut buf = Vec::new();
    write_picks_to(set, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is ascii")
}

pub fn write_picks(set: &PickSet, path: impl AsRef<Path>) -> Result<()> {
    let f = std::fs::File::create(path)?;
    write_picks_to(set, std::io::BufWriter::new(f))
}

/// Parses pick CSV. A header-only file yields an empty `Manual` set.
pub fn read_picks_from<R: Read>(input: R) -> Result<PickSet> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let headers = rdr.headers().map_err(|e| Error::line(1, e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(Error::line(1, format!("expected header {:?}", CSV_HEADER.join(","))));
    }
    let mut picks = Vec::new();
    let mut source: Option<PickSource> = None;
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            Error::line(line, e.to_string())
        })?;
        let line = rec.position().map(|p| p.line()).unwrap_or(0);
        let num = |i: usize| -> Result<f64> {
            let s = &rec[i];
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::line(line, format!("{} is not a number: {s:?}", CSV_HEADER[i])))
        };
        let status: PickStatus = rec[5].parse().map_err(|e: String| Error::line(line, e))?;
        let src: PickSource = rec[6].parse().map_err(|e: String| Error::line(line, e))?;
        match source {
            None => source = Some(src),
            Some(s) if s != src => {
                return Err(Error::line(line, format!("mixed sources in one file: {s} and {src}")));
            }
            _ => {}
        }
        let pick = BreakoutPick {
            depth: num(0)?,
            azimuth_deg: num(1)?,
            width_deg: num(2)?,
            left_deg: num(3)?,
            right_deg: num(4)?,
            status,
        };
        pick.check_fields(TEXT_TOL_DEG).map_err(|m| Error::line(line, m))?;
        picks.push(pick);
    }
    PickSet::new(picks, source.unwrap_or(PickSource::Manual))
}

pub fn read_picks(path: impl AsRef<Path>) -> Result<PickSet> {
    let f = std::fs::File::open(path)?;
    read_picks_from(std::io::BufReader::new(f))
}
