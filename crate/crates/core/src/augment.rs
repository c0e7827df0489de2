//! Training-sample augmentation: depth flip, azimuthal shift with wrap-around,
//! and crop-and-enlarge (positives only).
//!
//! Every geometric operation is applied identically to the amplitude patch,
//! the radius patch and the label. Randomness comes from a per-sample
//! generator derived from `(seed, sample index)`, so output does not depend on
//! processing order.

use std::io::Write;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::{GridGeometry, ImageLogGrid, MaskGrid};
use crate::igrid::{read_grid, write_grid, AnyGrid};

pub const PATCH_SIZE: usize = 256;
pub const SHIFT_MIN_DEG: f64 = 45.0;
pub const SHIFT_MAX_DEG: f64 = 135.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
        }
    }
}

impl std::str::FromStr for Polarity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "positive" => Ok(Polarity::Positive),
            "negative" => Ok(Polarity::Negative),
            other => Err(format!("unknown polarity {other:?}")),
        }
    }
}

/// Amplitude, radius and label patches on one geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingSample {
    pub amplitude: ImageLogGrid,
    pub radius: ImageLogGrid,
    pub label: MaskGrid,
    pub polarity: Polarity,
}

impl TrainingSample {
    pub fn new(amplitude: ImageLogGrid, radius: ImageLogGrid, label: MaskGrid, polarity: Polarity) -> Result<Self> {
        amplitude.geometry().check_same(radius.geometry(), "sample radius")?;
        amplitude.geometry().check_same(label.geometry(), "sample label")?;
        if polarity == Polarity::Negative && !label.is_all_zero() {
            return Err(Error::Invariant("negative samples must have an all-zero label".into()));
        }
        Ok(Self {
            amplitude,
            radius,
            label,
            polarity,
        })
    }

    pub fn geometry(&self) -> &GridGeometry {
        self.label.geometry()
    }

    /// Concatenated IGRID encodings of the three patches.
    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        use crate::igrid::IgridEncode;
        let mut out = self.amplitude.to_igrid_bytes()?;
        out.extend(self.radius.to_igrid_bytes()?);
        out.extend(self.label.to_igrid_bytes()?);
        out.push(self.polarity as u8);
        Ok(out)
    }
}

fn remap<T: Copy>(values: &[T], n_depth: usize, n_az: usize, src: impl Fn(usize, usize) -> (usize, usize)) -> Vec<T> {
    let mut out = Vec::with_capacity(values.len());
    for r in 0..n_depth {
        for c in 0..n_az {
            let (sr, sc) = src(r, c);
            out.push(values[sr * n_az + sc]);
        }
    }
    out
}

fn map_sample(s: &TrainingSample, src: impl Fn(usize, usize) -> (usize, usize) + Copy) -> TrainingSample {
    let g = *s.geometry();
    let (nd, na) = (g.n_depth(), g.n_azimuth());
    TrainingSample {
        amplitude: ImageLogGrid::from_parts_unchecked(g, s.amplitude.channel(), remap(s.amplitude.values(), nd, na, src)),
        radius: ImageLogGrid::from_parts_unchecked(g, s.radius.channel(), remap(s.radius.values(), nd, na, src)),
        label: MaskGrid::new(g, remap(s.label.values(), nd, na, src)).expect("remapped mask stays binary"),
        polarity: s.polarity,
    }
}

/// Reverses the depth axis of all three patches.
pub fn flip_depth(s: &TrainingSample) -> TrainingSample {
    let nd = s.geometry().n_depth();
    map_sample(s, |r, c| (nd - 1 - r, c))
}

/// Column shift equivalent to `theta_deg`, rounded to whole columns.
pub fn shift_columns(theta_deg: f64, g: &GridGeometry) -> usize {
    g.column_of_azimuth(theta_deg)
}

/// Rotates the patches clockwise by `theta_deg` (quantized to whole columns),
/// wrapping at 0°/360°. A feature at azimuth `a` moves to `a + theta`.
pub fn shift_azimuth(s: &TrainingSample, theta_deg: f64) -> TrainingSample {
    let n = s.geometry().n_azimuth();
    let k = shift_columns(theta_deg, s.geometry());
    map_sample(s, |r, c| (r, (c + n - k) % n))
}

/// Axis-aligned crop window in cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CropWindow {
    pub row0: usize,
    pub col0: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Source coordinate (pixel-center aligned) for output index `j` when
/// stretching `len` source cells starting at `off` over `out` cells.
fn source_coord(j: usize, off: usize, len: usize, out: usize) -> f64 {
    off as f64 + (j as f64 + 0.5) * len as f64 / out as f64 - 0.5
}

fn nearest_index(j: usize, off: usize, len: usize, out: usize) -> usize {
    off + ((j as f64 + 0.5) * len as f64 / out as f64).floor().min(len as f64 - 1.0) as usize
}

/// Bilinear sample; a zero weight never touches its cell, and NaN
/// neighbours fall back to the nearest cell.
fn bilinear(values: &[f32], n_az: usize, y: f64, x: f64, ylim: (usize, usize), xlim: (usize, usize)) -> f32 {
    let y = y.clamp(ylim.0 as f64, (ylim.1 - 1) as f64);
    let x = x.clamp(xlim.0 as f64, (xlim.1 - 1) as f64);
    let (y0, x0) = (y.floor() as usize, x.floor() as usize);
    let (fy, fx) = (y - y0 as f64, x - x0 as f64);
    let y1 = (y0 + 1).min(ylim.1 - 1);
    let x1 = (x0 + 1).min(xlim.1 - 1);
    let mut acc = 0.0f64;
    let mut nan = false;
    for (yy, wy) in [(y0, 1.0 - fy), (y1, fy)] {
        for (xx, wx) in [(x0, 1.0 - fx), (x1, fx)] {
            let w = wy * wx;
            if w == 0.0 {
                continue;
            }
            let v = values[yy * n_az + xx];
            nan |= v.is_nan();
            acc += w * v as f64;
        }
    }
    if nan {
        values[y.round() as usize * n_az + x.round() as usize]
    } else {
        acc as f32
    }
}

/// Crops `w` and stretches it back to the full patch: nearest neighbour for
/// the label, bilinear for the signals. The output depth axis is rescaled to
/// the cropped interval.
pub fn crop_enlarge_window(s: &TrainingSample, w: CropWindow) -> Result<TrainingSample> {
    let g = *s.geometry();
    let (nd, na) = (g.n_depth(), g.n_azimuth());
    if w.rows == 0 || w.cols == 0 || w.row0 + w.rows > nd || w.col0 + w.cols > na {
        return Err(Error::param(format!("crop window {w:?} does not fit a {nd}x{na} patch")));
    }
    let out_g = GridGeometry::new(
        nd,
        na,
        g.depth_start() + w.row0 as f64 * g.depth_step(),
        g.depth_step() * w.rows as f64 / nd as f64,
    )?;
    let ylim = (w.row0, w.row0 + w.rows);
    let xlim = (w.col0, w.col0 + w.cols);
    let stretch = |grid: &ImageLogGrid| {
        let mut v = Vec::with_capacity(nd * na);
        for r in 0..nd {
            let y = source_coord(r, w.row0, w.rows, nd);
            for c in 0..na {
                let x = source_coord(c, w.col0, w.cols, na);
                v.push(bilinear(grid.values(), na, y, x, ylim, xlim));
            }
        }
        ImageLogGrid::from_parts_unchecked(out_g, grid.channel(), v)
    };
    let mut label = Vec::with_capacity(nd * na);
    for r in 0..nd {
        let sr = nearest_index(r, w.row0, w.rows, nd);
        for c in 0..na {
            label.push(s.label.get(sr, nearest_index(c, w.col0, w.cols, na)));
        }
    }
    Ok(TrainingSample {
        amplitude: stretch(&s.amplitude),
        radius: stretch(&s.radius),
        label: MaskGrid::new(out_g, label)?,
        polarity: s.polarity,
    })
}

/// Picks a random window of `[n/2, n]` cells per axis that contains at least
/// one breakout cell, then applies [`crop_enlarge_window`].
pub fn crop_enlarge<R: Rng>(s: &TrainingSample, rng: &mut R) -> Result<TrainingSample> {
    if s.polarity == Polarity::Negative {
        return Err(Error::Precondition("crop-and-enlarge is not applied to negative samples".into()));
    }
    let ones: Vec<usize> = (0..s.label.values().len()).filter(|&i| s.label.values()[i] == 1).collect();
    if ones.is_empty() {
        return Err(Error::Precondition("positive sample has an empty label".into()));
    }
    let g = s.geometry();
    let (nd, na) = (g.n_depth(), g.n_azimuth());
    let anchor = ones[rng.random_range(0..ones.len())];
    let (ar, ac) = (anchor / na, anchor % na);
    let rows = rng.random_range(nd.div_ceil(2)..=nd);
    let cols = rng.random_range(na.div_ceil(2)..=na);
    // window must contain the anchor and fit inside the patch
    let row0 = rng.random_range(ar.saturating_sub(rows - 1)..=ar.min(nd - rows));
    let col0 = rng.random_range(ac.saturating_sub(cols - 1)..=ac.min(na - cols));
    crop_enlarge_window(s, CropWindow { row0, col0, rows, cols })
}

/// Crop-and-enlarge seeded directly.
pub fn crop_enlarge_seeded(s: &TrainingSample, rng_seed: u64) -> Result<TrainingSample> {
    crop_enlarge(s, &mut ChaCha8Rng::seed_from_u64(rng_seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AugOp {
    Identity,
    FlipDepth,
    /// Random shift in `[45°, 135°]`.
    ShiftAzimuth,
    CropEnlarge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AugmentConfig {
    pub positive: Vec<AugOp>,
    pub negative: Vec<AugOp>,
}

impl Default for AugmentConfig {
    /// Five variants per sample for both polarities. Negatives get a third
    /// shift in place of the crop.
    fn default() -> Self {
        use AugOp::*;
        Self {
            positive: vec![Identity, FlipDepth, ShiftAzimuth, ShiftAzimuth, CropEnlarge],
            negative: vec![Identity, FlipDepth, ShiftAzimuth, ShiftAzimuth, ShiftAzimuth],
        }
    }
}

impl AugmentConfig {
    pub fn check(&self) -> Result<()> {
        if self.negative.contains(&AugOp::CropEnlarge) {
            return Err(Error::param("crop-and-enlarge cannot be configured for negative samples"));
        }
        Ok(())
    }

    pub fn ops_for(&self, p: Polarity) -> &[AugOp] {
        match p {
            Polarity::Positive => &self.positive,
            Polarity::Negative => &self.negative,
        }
    }

    pub fn output_count(&self, samples: &[TrainingSample]) -> usize {
        samples.iter().map(|s| self.ops_for(s.polarity).len()).sum()
    }
}

/// Generator for sample `index` under `seed`, independent of all others.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Applies one configured operation.
pub fn apply_op<R: Rng>(s: &TrainingSample, op: AugOp, rng: &mut R) -> Result<TrainingSample> {
    Ok(match op {
        AugOp::Identity => s.clone(),
        AugOp::FlipDepth => flip_depth(s),
        AugOp::ShiftAzimuth => shift_azimuth(s, rng.random_range(SHIFT_MIN_DEG..=SHIFT_MAX_DEG)),
        AugOp::CropEnlarge => crop_enlarge(s, rng)?,
    })
}

/// Lazily augments `samples`, yielding the variants of each input in order.
pub fn augment_iter<'a>(
    samples: &'a [TrainingSample],
    config: &'a AugmentConfig,
    seed: u64,
) -> impl Iterator<Item = Result<TrainingSample>> + 'a {
    samples.iter().enumerate().flat_map(move |(i, s)| {
        let mut rng = sample_rng(seed, i as u64);
        config
            .ops_for(s.polarity)
            .iter()
            .map(move |&op| apply_op(s, op, &mut rng))
            .collect::<Vec<_>>()
    })
}

pub fn augment_set(samples: &[TrainingSample], config: &AugmentConfig, seed: u64) -> Result<Vec<TrainingSample>> {
    config.check()?;
    augment_iter(samples, config, seed).collect()
}

/// One manifest row: `sample_id,polarity,amp_path,rad_path,label_path`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub sample_id: String,
    pub polarity: Polarity,
    pub amp_path: PathBuf,
    pub rad_path: PathBuf,
    pub label_path: PathBuf,
}

pub const MANIFEST_HEADER: [&str; 5] = ["sample_id", "polarity", "amp_path", "rad_path", "label_path"];

pub fn write_manifest<W: Write>(entries: &[ManifestEntry], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let e = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(MANIFEST_HEADER).map_err(e)?;
    for m in entries {
        w.write_record([
            m.sample_id.as_str(),
            m.polarity.as_str(),
            &m.amp_path.to_string_lossy(),
            &m.rad_path.to_string_lossy(),
            &m.label_path.to_string_lossy(),
        ])
        .map_err(e)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_manifest(path: impl AsRef<Path>) -> Result<Vec<ManifestEntry>> {
    let mut rdr = csv::Reader::from_path(path.as_ref()).map_err(|e| Error::line(1, e.to_string()))?;
    let headers = rdr.headers().map_err(|e| Error::line(1, e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != MANIFEST_HEADER {
        return Err(Error::line(1, format!("expected header {}", MANIFEST_HEADER.join(","))));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::line(e.position().map(|p| p.line()).unwrap_or(0), e.to_string()))?;
        let line = rec.position().map(|p| p.line()).unwrap_or(0);
        out.push(ManifestEntry {
            sample_id: rec[0].to_string(),
            polarity: rec[1].parse().map_err(|e: String| Error::line(line, e))?,
            amp_path: PathBuf::from(&rec[2]),
            rad_path: PathBuf::from(&rec[3]),
            label_path: PathBuf::from(&rec[4]),
        });
    }
    Ok(out)
}

/// Loads the samples a manifest refers to. Relative paths are resolved
/// against `base`.
pub fn load_samples(entries: &[ManifestEntry], base: &Path) -> Result<Vec<TrainingSample>> {
    let resolve = |p: &Path| if p.is_absolute() { p.to_path_buf() } else { base.join(p) };
    entries
        .iter()
        .map(|e| {
            let amp = match read_grid(resolve(&e.amp_path))? {
                AnyGrid::Image(g) => g,
                other => return Err(Error::shape(format!("{}: expected a log grid, found {}", e.sample_id, other.kind()))),
            };
            let rad = match read_grid(resolve(&e.rad_path))? {
                AnyGrid::Image(g) => g,
                other => return Err(Error::shape(format!("{}: expected a log grid, found {}", e.sample_id, other.kind()))),
            };
            let label = match read_grid(resolve(&e.label_path))? {
                AnyGrid::Mask(m) => m,
                other => return Err(Error::shape(format!("{}: expected a mask, found {}", e.sample_id, other.kind()))),
            };
            TrainingSample::new(amp, rad, label, e.polarity)
        })
        .collect()
}

/// Writes each sample as three IGRID files under `dir` and returns the
/// manifest rows (paths relative to `dir`).
pub fn save_samples(samples: &[TrainingSample], dir: &Path, prefix: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::with_capacity(samples.len());
    for (i, s) in samples.iter().enumerate() {
        let id = format!("{prefix}{i:05}");
        let e = ManifestEntry {
            sample_id: id.clone(),
            polarity: s.polarity,
            amp_path: PathBuf::from(format!("{id}_amp.igrid")),
            rad_path: PathBuf::from(format!("{id}_rad.igrid")),
            label_path: PathBuf::from(format!("{id}_label.igrid")),
        };
        write_grid(&s.amplitude, dir.join(&e.amp_path))?;
        write_grid(&s.radius, dir.join(&e.rad_path))?;
        write_grid(&s.label, dir.join(&e.label_path))?;
        entries.push(e);
    }
    Ok(entries)
}
