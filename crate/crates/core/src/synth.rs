//! Synthetic acoustic image logs with exact ground truth.
//!
//! A [`SceneSpec`] lists parametric features on a noisy background. Rendering
//! produces amplitude and radius logs, the breakout truth mask and the picks
//! that mask implies. Feature footprints are snapped to the column lattice, so
//! truth picks are exact.
//!
//! Feature models:
//!
//! * breakout pair: two patches at `φ0` and `φ0 + 180° + ε`, low amplitude and
//!   enlarged radius;
//! * keyseat: a single such patch on one side of the hole;
//! * fracture: a sinusoidal low-amplitude band with *reduced* radius;
//! * artifact stripes: two full-length low-amplitude stripes 180° apart with
//!   no radius change;
//! * washout: full-circumference enlargement over a depth interval.
//!
//! Scenes round-trip through a flat `key = value` text form, see
//! [`SceneSpec::to_config`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::grid::{Channel, GridGeometry, ImageLogGrid, MaskGrid};
use crate::picks::{PickSet, PickSource};
use crate::postproc::picks_from_mask;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Background {
    pub amp_mean: f64,
    pub amp_sigma: f64,
    pub rad_mean_mm: f64,
    pub rad_sigma_mm: f64,
}

impl Default for Background {
    fn default() -> Self {
        Self {
            amp_mean: 1.0,
            amp_sigma: 0.1,
            rad_mean_mm: 108.0,
            rad_sigma_mm: 0.2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FeatureSpec {
    BreakoutPair {
        center_azimuth_deg: f64,
        asymmetry_deg: f64,
        width_deg: f64,
        depth_top: f64,
        depth_bottom: f64,
        amp_drop: f64,
        rad_gain_mm: f64,
    },
    Keyseat {
        azimuth_deg: f64,
        width_deg: f64,
        depth_top: f64,
        depth_bottom: f64,
        amp_drop: f64,
        rad_gain_mm: f64,
    },
    Fracture {
        mid_depth: f64,
        amplitude_m: f64,
        phase_deg: f64,
        thickness_m: f64,
        amp_drop: f64,
        /// Radius *reduction*; the anomaly is always negative.
        rad_drop_mm: f64,
    },
    ArtifactStripes {
        azimuth_deg: f64,
        width_deg: f64,
        amp_drop: f64,
    },
    Washout {
        depth_top: f64,
        depth_bottom: f64,
        amp_drop: f64,
        rad_gain_mm: f64,
    },
}

/// Per-cell feature label in [`RenderedScene::class_map`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum FeatureClass {
    Background = 0,
    Breakout = 1,
    Keyseat = 2,
    Fracture = 3,
    Artifact = 4,
    Washout = 5,
}

impl FeatureSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FeatureSpec::BreakoutPair { .. } => "breakout_pair",
            FeatureSpec::Keyseat { .. } => "keyseat",
            FeatureSpec::Fracture { .. } => "fracture",
            FeatureSpec::ArtifactStripes { .. } => "artifact_stripes",
            FeatureSpec::Washout { .. } => "washout",
        }
    }

    pub fn class(&self) -> FeatureClass {
        match self {
            FeatureSpec::BreakoutPair { .. } => FeatureClass::Breakout,
            FeatureSpec::Keyseat { .. } => FeatureClass::Keyseat,
            FeatureSpec::Fracture { .. } => FeatureClass::Fracture,
            FeatureSpec::ArtifactStripes { .. } => FeatureClass::Artifact,
            FeatureSpec::Washout { .. } => FeatureClass::Washout,
        }
    }

    /// Field names and values in config order.
    pub fn fields(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FeatureSpec::BreakoutPair {
                center_azimuth_deg,
                asymmetry_deg,
                width_deg,
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => vec![
                ("center_azimuth_deg", center_azimuth_deg),
                ("asymmetry_deg", asymmetry_deg),
                ("width_deg", width_deg),
                ("depth_top", depth_top),
                ("depth_bottom", depth_bottom),
                ("amp_drop", amp_drop),
                ("rad_gain_mm", rad_gain_mm),
            ],
            FeatureSpec::Keyseat {
                azimuth_deg,
                width_deg,
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => vec![
                ("azimuth_deg", azimuth_deg),
                ("width_deg", width_deg),
                ("depth_top", depth_top),
                ("depth_bottom", depth_bottom),
                ("amp_drop", amp_drop),
                ("rad_gain_mm", rad_gain_mm),
            ],
            FeatureSpec::Fracture {
                mid_depth,
                amplitude_m,
                phase_deg,
                thickness_m,
                amp_drop,
                rad_drop_mm,
            } => vec![
                ("mid_depth", mid_depth),
                ("amplitude_m", amplitude_m),
                ("phase_deg", phase_deg),
                ("thickness_m", thickness_m),
                ("amp_drop", amp_drop),
                ("rad_drop_mm", rad_drop_mm),
            ],
            FeatureSpec::ArtifactStripes {
                azimuth_deg,
                width_deg,
                amp_drop,
            } => vec![("azimuth_deg", azimuth_deg), ("width_deg", width_deg), ("amp_drop", amp_drop)],
            FeatureSpec::Washout {
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => vec![
                ("depth_top", depth_top),
                ("depth_bottom", depth_bottom),
                ("amp_drop", amp_drop),
                ("rad_gain_mm", rad_gain_mm),
            ],
        }
    }

    fn from_fields(kind: &str, f: &BTreeMap<String, (f64, u64)>, line: u64) -> Result<Self> {
        let get = |k: &str| -> Result<f64> {
            f.get(k)
                .map(|v| v.0)
                .ok_or_else(|| Error::line(line, format!("{kind} feature is missing field {k}")))
        };
        let spec = match kind {
            "breakout_pair" => FeatureSpec::BreakoutPair {
                center_azimuth_deg: get("center_azimuth_deg")?,
                asymmetry_deg: get("asymmetry_deg")?,
                width_deg: get("width_deg")?,
                depth_top: get("depth_top")?,
                depth_bottom: get("depth_bottom")?,
                amp_drop: get("amp_drop")?,
                rad_gain_mm: get("rad_gain_mm")?,
            },
            "keyseat" => FeatureSpec::Keyseat {
                azimuth_deg: get("azimuth_deg")?,
                width_deg: get("width_deg")?,
                depth_top: get("depth_top")?,
                depth_bottom: get("depth_bottom")?,
                amp_drop: get("amp_drop")?,
                rad_gain_mm: get("rad_gain_mm")?,
            },
            "fracture" => FeatureSpec::Fracture {
                mid_depth: get("mid_depth")?,
                amplitude_m: get("amplitude_m")?,
                phase_deg: get("phase_deg")?,
                thickness_m: get("thickness_m")?,
                amp_drop: get("amp_drop")?,
                rad_drop_mm: get("rad_drop_mm")?,
            },
            "artifact_stripes" => FeatureSpec::ArtifactStripes {
                azimuth_deg: get("azimuth_deg")?,
                width_deg: get("width_deg")?,
                amp_drop: get("amp_drop")?,
            },
            "washout" => FeatureSpec::Washout {
                depth_top: get("depth_top")?,
                depth_bottom: get("depth_bottom")?,
                amp_drop: get("amp_drop")?,
                rad_gain_mm: get("rad_gain_mm")?,
            },
            other => return Err(Error::line(line, format!("unknown feature kind {other:?}"))),
        };
        let known: Vec<&str> = spec.fields().into_iter().map(|(k, _)| k).collect();
        if let Some((k, (_, l))) = f.iter().find(|(k, _)| !known.contains(&k.as_str())) {
            return Err(Error::line(*l, format!("field {k} does not belong to a {kind} feature")));
        }
        Ok(spec)
    }

    fn depth_span(&self) -> Option<(f64, f64)> {
        match *self {
            FeatureSpec::BreakoutPair { depth_top, depth_bottom, .. }
            | FeatureSpec::Keyseat { depth_top, depth_bottom, .. }
            | FeatureSpec::Washout { depth_top, depth_bottom, .. } => Some((depth_top, depth_bottom)),
            FeatureSpec::Fracture {
                mid_depth,
                amplitude_m,
                thickness_m,
                ..
            } => Some((
                mid_depth - amplitude_m.abs() - thickness_m / 2.0,
                mid_depth + amplitude_m.abs() + thickness_m / 2.0,
            )),
            FeatureSpec::ArtifactStripes { .. } => None,
        }
    }

    fn width(&self) -> Option<f64> {
        match *self {
            FeatureSpec::BreakoutPair { width_deg, .. }
            | FeatureSpec::Keyseat { width_deg, .. }
            | FeatureSpec::ArtifactStripes { width_deg, .. } => Some(width_deg),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneSpec {
    pub geometry: GridGeometry,
    pub background: Background,
    pub features: Vec<FeatureSpec>,
    /// Multiplier on `background.amp_sigma` for the amplitude noise.
    pub speckle_level: f64,
    pub seed: u64,
    /// Also mark keyseat cells in the truth mask.
    pub truth_includes_keyseat: bool,
}

pub const SCENE_NAMES: [&str; 7] = [
    "clean_pair",
    "keyseat",
    "fracture",
    "artifact",
    "mixed",
    "washout",
    "asymmetric_pair",
];

impl SceneSpec {
    pub fn new(geometry: GridGeometry, features: Vec<FeatureSpec>, seed: u64) -> Self {
        Self {
            geometry,
            background: Background::default(),
            features,
            speckle_level: 1.0,
            seed,
            truth_includes_keyseat: false,
        }
    }

    pub fn check(&self) -> Result<()> {
        let g = &self.geometry;
        let top = g.depth_start() - g.depth_step() / 2.0;
        let bottom = g.depth_of_row(g.n_depth() - 1) + g.depth_step() / 2.0;
        for (i, f) in self.features.iter().enumerate() {
            for (k, v) in f.fields() {
                if !v.is_finite() {
                    return Err(Error::param(format!("feature {i} field {k} is not finite")));
                }
            }
            if let Some(w) = f.width() {
                if !(w > 0.0 && w < 180.0) {
                    return Err(Error::param(format!("feature {i}: width {w}° outside (0, 180)")));
                }
            }
            if let Some((a, b)) = f.depth_span() {
                if a > b || a < top || b > bottom {
                    return Err(Error::param(format!(
                        "feature {i}: depth span {a}..{b} not inside grid {top}..{bottom}"
                    )));
                }
            }
        }
        let b = &self.background;
        if !(b.amp_sigma >= 0.0 && b.rad_sigma_mm >= 0.0 && self.speckle_level >= 0.0) {
            return Err(Error::param("noise levels must be ≥ 0"));
        }
        if !(b.rad_mean_mm > 0.0) {
            return Err(Error::param("background radius must be > 0"));
        }
        Ok(())
    }

    /// Flat `key = value` text, one entry per line, features as
    /// `feature.<n>.<field>`. Numbers use shortest round-trip formatting.
    pub fn to_config(&self) -> String {
        let g = &self.geometry;
        let b = &self.background;
        let mut s = String::new();
        let mut kv = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(s, "{k} = {v}");
        };
        kv("geometry.n_depth", &g.n_depth());
        kv("geometry.n_azimuth", &g.n_azimuth());
        kv("geometry.depth_start", &g.depth_start());
        kv("geometry.depth_step", &g.depth_step());
        kv("background.amp_mean", &b.amp_mean);
        kv("background.amp_sigma", &b.amp_sigma);
        kv("background.rad_mean_mm", &b.rad_mean_mm);
        kv("background.rad_sigma_mm", &b.rad_sigma_mm);
        kv("speckle_level", &self.speckle_level);
        kv("seed", &self.seed);
        kv("truth_includes_keyseat", &self.truth_includes_keyseat);
        for (i, f) in self.features.iter().enumerate() {
            kv(&format!("feature.{i}.kind"), &f.kind());
            for (k, v) in f.fields() {
                kv(&format!("feature.{i}.{k}"), &v);
            }
        }
        s
    }

    /// Parses [`SceneSpec::to_config`] output. Blank lines and `#` comments
    /// are ignored; unknown or duplicate keys are errors.
    pub fn from_config(text: &str) -> Result<Self> {
        let mut top: BTreeMap<String, (String, u64)> = BTreeMap::new();
        let mut feats: BTreeMap<usize, BTreeMap<String, (String, u64)>> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i as u64 + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| Error::line(line, format!("expected `key = value`, got {l:?}")))?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            let dup = if let Some(rest) = k.strip_prefix("feature.") {
                let (idx, field) = rest
                    .split_once('.')
                    .ok_or_else(|| Error::line(line, format!("bad feature key {k:?}")))?;
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::line(line, format!("bad feature index in {k:?}")))?;
                feats.entry(idx).or_default().insert(field.to_string(), (v, line)).is_some()
            } else {
                top.insert(k.clone(), (v, line)).is_some()
            };
            if dup {
                return Err(Error::line(line, format!("duplicate key {k:?}")));
            }
        }

        let mut take = |k: &str| -> Result<(String, u64)> {
            top.remove(k).ok_or_else(|| Error::line(0, format!("missing key {k}")))
        };
        fn num<T: std::str::FromStr>((v, line): (String, u64), k: &str) -> Result<T> {
            v.parse().map_err(|_| Error::line(line, format!("{k}: cannot parse {v:?}")))
        }
        let geometry = GridGeometry::new(
            num(take("geometry.n_depth")?, "geometry.n_depth")?,
            num(take("geometry.n_azimuth")?, "geometry.n_azimuth")?,
            num(take("geometry.depth_start")?, "geometry.depth_start")?,
            num(take("geometry.depth_step")?, "geometry.depth_step")?,
        )?;
        let background = Background {
            amp_mean: num(take("background.amp_mean")?, "background.amp_mean")?,
            amp_sigma: num(take("background.amp_sigma")?, "background.amp_sigma")?,
            rad_mean_mm: num(take("background.rad_mean_mm")?, "background.rad_mean_mm")?,
            rad_sigma_mm: num(take("background.rad_sigma_mm")?, "background.rad_sigma_mm")?,
        };
        let speckle_level = num(take("speckle_level")?, "speckle_level")?;
        let seed = num(take("seed")?, "seed")?;
        let truth_includes_keyseat = num(take("truth_includes_keyseat")?, "truth_includes_keyseat")?;
        if let Some((k, (_, line))) = top.into_iter().next() {
            return Err(Error::line(line, format!("unknown key {k:?}")));
        }

        let mut features = Vec::with_capacity(feats.len());
        for (expect, (idx, mut fields)) in feats.into_iter().enumerate() {
            let (kind, line) = fields
                .remove("kind")
                .ok_or_else(|| Error::line(0, format!("feature {idx} has no kind")))?;
            if idx != expect {
                return Err(Error::line(line, format!("feature indices must be contiguous from 0; found {idx}")));
            }
            let mut values = BTreeMap::new();
            for (k, (v, l)) in fields {
                let x: f64 = v.parse().map_err(|_| Error::line(l, format!("feature.{idx}.{k}: cannot parse {v:?}")))?;
                values.insert(k, (x, l));
            }
            features.push(FeatureSpec::from_fields(&kind, &values, line)?);
        }

        let spec = SceneSpec {
            geometry,
            background,
            features,
            speckle_level,
            seed,
            truth_includes_keyseat,
        };
        spec.check()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone)]
pub struct RenderedScene {
    pub amplitude: ImageLogGrid,
    pub radius: ImageLogGrid,
    pub truth_mask: MaskGrid,
    pub truth_picks: PickSet,
    /// [`FeatureClass`] code of every cell, row-major.
    pub class_map: Vec<u8>,
    /// Cells painted by more than one feature (the later one won).
    pub overlap_cells: usize,
}

impl RenderedScene {
    /// Mask of every cell carrying `class`.
    pub fn class_mask(&self, class: FeatureClass) -> MaskGrid {
        let values = self.class_map.iter().map(|&c| u8::from(c == class as u8)).collect();
        MaskGrid::new(*self.truth_mask.geometry(), values).expect("class map matches geometry")
    }
}

/// Rows whose depth lies in `[top, bottom]`.
fn rows_in(g: &GridGeometry, top: f64, bottom: f64) -> std::ops::Range<usize> {
    let eps = g.depth_step() * 1e-6;
    let first = ((top - g.depth_start()) / g.depth_step() - 1e-6).ceil().max(0.0) as usize;
    let mut last = first;
    while last < g.n_depth() && g.depth_of_row(last) <= bottom + eps {
        last += 1;
    }
    first..last.max(first)
}

/// Lattice columns of a patch centred on `center_deg`.
fn patch_columns(g: &GridGeometry, center_deg: f64, width_deg: f64) -> impl Iterator<Item = usize> {
    let n = g.n_azimuth();
    let len = ((width_deg / g.azimuth_step()).round() as usize).clamp(1, n);
    let start = g.column_of_azimuth(center_deg - len as f64 * g.azimuth_step() / 2.0);
    (0..len).map(move |k| (start + k) % n)
}

struct Canvas {
    n_az: usize,
    class: Vec<u8>,
    amp: Vec<f64>,
    rad: Vec<f64>,
    overlap: usize,
}

impl Canvas {
    fn paint(&mut self, r: usize, c: usize, class: FeatureClass, d_amp: f64, d_rad: f64) {
        let i = r * self.n_az + c;
        if self.class[i] != FeatureClass::Background as u8 {
            self.overlap += 1;
        }
        self.class[i] = class as u8;
        self.amp[i] = d_amp;
        self.rad[i] = d_rad;
    }
}

/// Renders a scene. Deterministic in `spec` (including its seed).
pub fn render(spec: &SceneSpec) -> Result<RenderedScene> {
    spec.check()?;
    let g = spec.geometry;
    let n_az = g.n_azimuth();
    let mut cv = Canvas {
        n_az,
        class: vec![0; g.len()],
        amp: vec![0.0; g.len()],
        rad: vec![0.0; g.len()],
        overlap: 0,
    };
    let step = g.azimuth_step();

    for f in &spec.features {
        let cls = f.class();
        match *f {
            FeatureSpec::BreakoutPair {
                center_azimuth_deg,
                asymmetry_deg,
                width_deg,
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => {
                for r in rows_in(&g, depth_top, depth_bottom) {
                    for center in [center_azimuth_deg, center_azimuth_deg + 180.0 + asymmetry_deg] {
                        for c in patch_columns(&g, center, width_deg) {
                            cv.paint(r, c, cls, -amp_drop, rad_gain_mm);
                        }
                    }
                }
            }
            FeatureSpec::Keyseat {
                azimuth_deg,
                width_deg,
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => {
                for r in rows_in(&g, depth_top, depth_bottom) {
                    for c in patch_columns(&g, azimuth_deg, width_deg) {
                        cv.paint(r, c, cls, -amp_drop, rad_gain_mm);
                    }
                }
            }
            FeatureSpec::Fracture {
                mid_depth,
                amplitude_m,
                phase_deg,
                thickness_m,
                amp_drop,
                rad_drop_mm,
            } => {
                for c in 0..n_az {
                    let phi = (c as f64 + 0.5) * step;
                    let trace = mid_depth + amplitude_m * (phi + phase_deg).to_radians().sin();
                    let half = thickness_m / 2.0;
                    for r in rows_in(&g, trace - half, trace + half) {
                        cv.paint(r, c, cls, -amp_drop, -rad_drop_mm.abs());
                    }
                }
            }
            FeatureSpec::ArtifactStripes {
                azimuth_deg,
                width_deg,
                amp_drop,
            } => {
                for r in 0..g.n_depth() {
                    for center in [azimuth_deg, azimuth_deg + 180.0] {
                        for c in patch_columns(&g, center, width_deg) {
                            cv.paint(r, c, cls, -amp_drop, 0.0);
                        }
                    }
                }
            }
            FeatureSpec::Washout {
                depth_top,
                depth_bottom,
                amp_drop,
                rad_gain_mm,
            } => {
                for r in rows_in(&g, depth_top, depth_bottom) {
                    for c in 0..n_az {
                        cv.paint(r, c, cls, -amp_drop, rad_gain_mm);
                    }
                }
            }
        }
    }
    if cv.overlap > 0 {
        log::warn!("{} cells painted by more than one feature; later features win", cv.overlap);
    }

    let bg = &spec.background;
    let amp_noise = Normal::new(0.0, bg.amp_sigma * spec.speckle_level).map_err(|e| Error::param(e.to_string()))?;
    let rad_noise = Normal::new(0.0, bg.rad_sigma_mm).map_err(|e| Error::param(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut amp = Vec::with_capacity(g.len());
    let mut rad = Vec::with_capacity(g.len());
    for i in 0..g.len() {
        amp.push((bg.amp_mean + cv.amp[i] + amp_noise.sample(&mut rng)) as f32);
        let r = bg.rad_mean_mm + cv.rad[i] + rad_noise.sample(&mut rng);
        rad.push(r.max(1e-3) as f32);
    }

    let truth_values = cv
        .class
        .iter()
        .map(|&c| {
            u8::from(
                c == FeatureClass::Breakout as u8
                    || (spec.truth_includes_keyseat && c == FeatureClass::Keyseat as u8),
            )
        })
        .collect();
    let truth_mask = MaskGrid::new(g, truth_values)?;
    let truth_picks = picks_from_mask(&truth_mask).with_source(PickSource::Synthetic);
    Ok(RenderedScene {
        amplitude: ImageLogGrid::new(g, Channel::Amplitude, amp)?,
        radius: ImageLogGrid::new(g, Channel::Radius, rad)?,
        truth_mask,
        truth_picks,
        class_map: cv.class,
        overlap_cells: cv.overlap,
    })
}

/// Default geometry of the named scenes: 20 m at 5 cm, 256 azimuth columns.
pub fn default_scene_geometry() -> GridGeometry {
    GridGeometry::new(400, 256, 100.0, 0.05).expect("valid constant geometry")
}

fn pair(center: f64, asymmetry: f64, top: f64, bottom: f64) -> FeatureSpec {
    FeatureSpec::BreakoutPair {
        center_azimuth_deg: center,
        asymmetry_deg: asymmetry,
        width_deg: 45.0,
        depth_top: top,
        depth_bottom: bottom,
        amp_drop: 0.3,
        rad_gain_mm: 5.0,
    }
}

fn keyseat(top: f64, bottom: f64) -> FeatureSpec {
    FeatureSpec::Keyseat {
        azimuth_deg: 100.0,
        width_deg: 40.0,
        depth_top: top,
        depth_bottom: bottom,
        amp_drop: 0.3,
        rad_gain_mm: 5.0,
    }
}

fn fracture(mid: f64) -> FeatureSpec {
    FeatureSpec::Fracture {
        mid_depth: mid,
        amplitude_m: 0.8,
        phase_deg: 30.0,
        thickness_m: 0.15,
        amp_drop: 0.3,
        rad_drop_mm: 3.0,
    }
}

fn stripes() -> FeatureSpec {
    FeatureSpec::ArtifactStripes {
        azimuth_deg: 50.0,
        width_deg: 12.0,
        amp_drop: 0.3,
    }
}

/// Canonical fixed-seed regression scenes, see [`SCENE_NAMES`].
pub fn scene_suite(name: &str) -> Result<SceneSpec> {
    let g = default_scene_geometry();
    let features = match name {
        "clean_pair" => vec![pair(143.0, 0.0, 102.0, 118.0)],
        "keyseat" => vec![keyseat(102.0, 118.0)],
        "fracture" => vec![fracture(110.0)],
        "artifact" => vec![stripes()],
        "washout" => vec![FeatureSpec::Washout {
            depth_top: 106.0,
            depth_bottom: 110.0,
            amp_drop: 0.2,
            rad_gain_mm: 15.0,
        }],
        "asymmetric_pair" => vec![pair(143.0, 30.0, 102.0, 118.0)],
        "mixed" => vec![
            stripes(),
            pair(143.0, 0.0, 101.0, 107.0),
            keyseat(109.0, 113.0),
            fracture(116.5),
        ],
        other => {
            return Err(Error::param(format!(
                "unknown scene {other:?}; expected one of {}",
                SCENE_NAMES.join(", ")
            )))
        }
    };
    Ok(SceneSpec::new(g, features, 20_240_601))
}
