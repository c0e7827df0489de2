//! Depth × azimuth rasters and their geometry conventions.
//!
//! Rows are depth samples, columns are azimuth samples. Column `c` covers
//! `[c·Δ, (c+1)·Δ)` degrees with `Δ = 360 / n_azimuth`, and the last column is
//! adjacent to column 0. Values are stored row-major (depth-major).

use crate::error::{Error, Result};

/// Smallest azimuth sampling accepted by [`GridGeometry::new`].
pub const MIN_AZIMUTH_COLUMNS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridGeometry {
    n_depth: usize,
    n_azimuth: usize,
    depth_start: f64,
    depth_step: f64,
}

impl GridGeometry {
    pub fn new(n_depth: usize, n_azimuth: usize, depth_start: f64, depth_step: f64) -> Result<Self> {
        if n_depth == 0 {
            return Err(Error::param("n_depth must be positive"));
        }
        if n_azimuth < MIN_AZIMUTH_COLUMNS {
            return Err(Error::param(format!(
                "n_azimuth must be at least {MIN_AZIMUTH_COLUMNS}, got {n_azimuth}"
            )));
        }
        if !depth_start.is_finite() {
            return Err(Error::param("depth_start must be finite"));
        }
        if !(depth_step.is_finite() && depth_step > 0.0) {
            return Err(Error::param(format!("depth_step must be > 0, got {depth_step}")));
        }
        Ok(Self {
            n_depth,
            n_azimuth,
            depth_start,
            depth_step,
        })
    }

    pub fn n_depth(&self) -> usize {
        self.n_depth
    }

    pub fn n_azimuth(&self) -> usize {
        self.n_azimuth
    }

    pub fn depth_start(&self) -> f64 {
        self.depth_start
    }

    pub fn depth_step(&self) -> f64 {
        self.depth_step
    }

    pub fn azimuth_step(&self) -> f64 {
        360.0 / self.n_azimuth as f64
    }

    pub fn len(&self) -> usize {
        self.n_depth * self.n_azimuth
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Depth of row `r`: `depth_start + r·depth_step`.
    pub fn depth_of_row(&self, r: usize) -> f64 {
        self.depth_start + r as f64 * self.depth_step
    }

    /// Nearest row to `depth`, or `None` if it falls outside the grid by more
    /// than half a row.
    pub fn row_of_depth(&self, depth: f64) -> Option<usize> {
        let x = ((depth - self.depth_start) / self.depth_step).round();
        if x < 0.0 || x >= self.n_depth as f64 || !x.is_finite() {
            None
        } else {
            Some(x as usize)
        }
    }

    /// Left boundary of column `c` in degrees.
    pub fn azimuth_of_column(&self, c: usize) -> Result<f64> {
        if c >= self.n_azimuth {
            return Err(Error::Range {
                index: c,
                len: self.n_azimuth,
            });
        }
        Ok(c as f64 * 360.0 / self.n_azimuth as f64)
    }

    /// Nearest column boundary to an azimuth, wrapped into `0..n_azimuth`.
    pub fn column_of_azimuth(&self, azimuth_deg: f64) -> usize {
        let n = self.n_azimuth as i64;
        let c = (azimuth_deg / self.azimuth_step()).round() as i64;
        c.rem_euclid(n) as usize
    }

    pub(crate) fn check_same(&self, other: &GridGeometry, what: &str) -> Result<()> {
        if self != other {
            return Err(Error::shape(format!(
                "{what}: {}x{} (start {}, step {}) vs {}x{} (start {}, step {})",
                self.n_depth,
                self.n_azimuth,
                self.depth_start,
                self.depth_step,
                other.n_depth,
                other.n_azimuth,
                other.depth_start,
                other.depth_step
            )));
        }
        Ok(())
    }
}

/// Free-function form of [`GridGeometry::azimuth_of_column`].
pub fn azimuth_of_column(c: usize, g: &GridGeometry) -> Result<f64> {
    g.azimuth_of_column(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    /// Reflected acoustic amplitude, dimensionless.
    Amplitude,
    /// Borehole radius in millimeters.
    Radius,
}

fn check_len(g: &GridGeometry, n: usize) -> Result<()> {
    if n != g.len() {
        return Err(Error::shape(format!(
            "value array has {n} cells, geometry {}x{} needs {}",
            g.n_depth,
            g.n_azimuth,
            g.len()
        )));
    }
    Ok(())
}

/// Amplitude or radius log. NaN marks missing samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageLogGrid {
    geometry: GridGeometry,
    channel: Channel,
    values: Vec<f32>,
}

impl ImageLogGrid {
    pub fn new(geometry: GridGeometry, channel: Channel, values: Vec<f32>) -> Result<Self> {
        let g = Self {
            geometry,
            channel,
            values,
        };
        g.check()?;
        Ok(g)
    }

    pub fn filled(geometry: GridGeometry, channel: Channel, value: f32) -> Result<Self> {
        Self::new(geometry, channel, vec![value; geometry.len()])
    }

    /// Re-checks the invariants (length, positive radius).
    pub fn check(&self) -> Result<()> {
        check_len(&self.geometry, self.values.len())?;
        if self.channel == Channel::Radius {
            if let Some(i) = self.values.iter().position(|v| !v.is_nan() && *v <= 0.0) {
                return Err(Error::Invariant(format!(
                    "radius cell {i} is {} mm; radius must be > 0",
                    self.values[i]
                )));
            }
        }
        if let Some(i) = self.values.iter().position(|v| v.is_infinite()) {
            return Err(Error::Invariant(format!("cell {i} is infinite")));
        }
        Ok(())
    }

    pub fn geometry(&self) -> &GridGeometry {
        &self.geometry
    }

    pub fn channel(&self) -> Channel {
        self.channel
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f32] {
        &mut self.values
    }

    pub fn row(&self, r: usize) -> &[f32] {
        let n = self.geometry.n_azimuth;
        &self.values[r * n..(r + 1) * n]
    }

    /// Row `r` widened to f64.
    pub fn row_f64(&self, r: usize) -> Vec<f64> {
        self.row(r).iter().map(|&v| v as f64).collect()
    }

    pub fn get(&self, r: usize, c: usize) -> f32 {
        self.values[r * self.geometry.n_azimuth + c]
    }

    pub(crate) fn from_parts_unchecked(geometry: GridGeometry, channel: Channel, values: Vec<f32>) -> Self {
        Self {
            geometry,
            channel,
            values,
        }
    }
}

/// Binary breakout label: 1 = breakout, 0 = background.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskGrid {
    geometry: GridGeometry,
    values: Vec<u8>,
}

impl MaskGrid {
    pub fn new(geometry: GridGeometry, values: Vec<u8>) -> Result<Self> {
        let m = Self { geometry, values };
        m.check()?;
        Ok(m)
    }

    pub fn zeros(geometry: GridGeometry) -> Self {
        Self {
            geometry,
            values: vec![0; geometry.len()],
        }
    }

    pub fn check(&self) -> Result<()> {
        check_len(&self.geometry, self.values.len())?;
        if let Some(i) = self.values.iter().position(|&v| v > 1) {
            return Err(Error::Invariant(format!(
                "mask cell {i} has value {}; masks hold only 0 or 1",
                self.values[i]
            )));
        }
        Ok(())
    }

    pub fn geometry(&self) -> &GridGeometry {
        &self.geometry
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Raw access; [`MaskGrid::check`] (or writing the grid) re-validates.
    pub fn values_mut(&mut self) -> &mut [u8] {
        &mut self.values
    }

    pub fn row(&self, r: usize) -> &[u8] {
        let n = self.geometry.n_azimuth;
        &self.values[r * n..(r + 1) * n]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u8] {
        let n = self.geometry.n_azimuth;
        &mut self.values[r * n..(r + 1) * n]
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.values[r * self.geometry.n_azimuth + c]
    }

    pub fn set(&mut self, r: usize, c: usize, on: bool) {
        let n = self.geometry.n_azimuth;
        self.values[r * n + c] = u8::from(on);
    }

    pub fn count_ones(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    pub fn is_all_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Cellwise OR of two label masks on the same grid.
///
/// Used to merge a mask annotated on the amplitude log with one annotated on
/// the radius log.
pub fn union_masks(a: &MaskGrid, b: &MaskGrid) -> Result<MaskGrid> {
    a.geometry.check_same(&b.geometry, "union_masks")?;
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(&x, &y)| u8::from(x == 1 || y == 1))
        .collect();
    Ok(MaskGrid {
        geometry: a.geometry,
        values,
    })
}

/// Per-cell breakout probability in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbGrid {
    geometry: GridGeometry,
    values: Vec<f32>,
}

impl ProbGrid {
    pub fn new(geometry: GridGeometry, values: Vec<f32>) -> Result<Self> {
        let p = Self { geometry, values };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        check_len(&self.geometry, self.values.len())?;
        if let Some(i) = self.values.iter().position(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Invariant(format!(
                "probability cell {i} is {}; must lie in [0, 1]",
                self.values[i]
            )));
        }
        Ok(())
    }

    pub fn geometry(&self) -> &GridGeometry {
        &self.geometry
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f32] {
        &mut self.values
    }

    pub fn row(&self, r: usize) -> &[f32] {
        let n = self.geometry.n_azimuth;
        &self.values[r * n..(r + 1) * n]
    }
}
