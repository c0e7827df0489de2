//! IGRID binary raster format.
//!
//! Little-endian layout:
//!
//! ```text
//! offset  size  field
//!      0     4  magic "IGLG"
//!      4     2  version (u16) = 1
//!      6     2  dtype (u16): 0 = f32, 1 = u8
//!      8     4  n_depth (u32)
//!     12     4  n_azimuth (u32)
//!     16     8  depth_start (f64, meters)
//!     24     8  depth_step (f64, meters)
//!     32     2  channel (u16): 0 amplitude, 1 radius, 2 mask, 3 probability
//!     34     2  reserved (u16) = 0
//!     36     8  padding, all zero
//!     44        payload, row-major (depth-major, azimuth-minor)
//! ```
//!
//! Masks are stored as u8, everything else as f32.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::{Channel, GridGeometry, ImageLogGrid, MaskGrid, ProbGrid};

pub const MAGIC: &[u8; 4] = b"IGLG";
pub const VERSION: u16 = 1;
pub const HEADER_LEN: usize = 44;

const DTYPE_F32: u16 = 0;
const DTYPE_U8: u16 = 1;

const CH_AMPLITUDE: u16 = 0;
const CH_RADIUS: u16 = 1;
const CH_MASK: u16 = 2;
const CH_PROBABILITY: u16 = 3;

/// Any grid kind that can live in an IGRID file.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyGrid {
    Image(ImageLogGrid),
    Mask(MaskGrid),
    Prob(ProbGrid),
}

impl AnyGrid {
    pub fn geometry(&self) -> &GridGeometry {
        match self {
            AnyGrid::Image(g) => g.geometry(),
            AnyGrid::Mask(g) => g.geometry(),
            AnyGrid::Prob(g) => g.geometry(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AnyGrid::Image(g) if g.channel() == Channel::Amplitude => "amplitude",
            AnyGrid::Image(_) => "radius",
            AnyGrid::Mask(_) => "mask",
            AnyGrid::Prob(_) => "probability",
        }
    }
}

impl From<ImageLogGrid> for AnyGrid {
    fn from(g: ImageLogGrid) -> Self {
        AnyGrid::Image(g)
    }
}

impl From<MaskGrid> for AnyGrid {
    fn from(g: MaskGrid) -> Self {
        AnyGrid::Mask(g)
    }
}

impl From<ProbGrid> for AnyGrid {
    fn from(g: ProbGrid) -> Self {
        AnyGrid::Prob(g)
    }
}

/// Grid kinds that serialize to IGRID.
pub trait IgridEncode {
    /// Checks invariants, then produces the full file image.
    fn to_igrid_bytes(&self) -> Result<Vec<u8>>;
}

fn header(g: &GridGeometry, dtype: u16, channel: u16) -> Result<Vec<u8>> {
    let n_depth = u32::try_from(g.n_depth()).map_err(|_| Error::param("n_depth exceeds u32"))?;
    let n_az = u32::try_from(g.n_azimuth()).map_err(|_| Error::param("n_azimuth exceeds u32"))?;
    let mut h = Vec::with_capacity(HEADER_LEN);
    h.extend_from_slice(MAGIC);
    h.extend_from_slice(&VERSION.to_le_bytes());
    h.extend_from_slice(&dtype.to_le_bytes());
    h.extend_from_slice(&n_depth.to_le_bytes());
    h.extend_from_slice(&n_az.to_le_bytes());
    h.extend_from_slice(&g.depth_start().to_le_bytes());
    h.extend_from_slice(&g.depth_step().to_le_bytes());
    h.extend_from_slice(&channel.to_le_bytes());
    h.extend_from_slice(&0u16.to_le_bytes());
    h.extend_from_slice(&[0u8; 8]);
    debug_assert_eq!(h.len(), HEADER_LEN);
    Ok(h)
}

fn encode_f32(g: &GridGeometry, channel: u16, values: &[f32]) -> Result<Vec<u8>> {
    let mut out = header(g, DTYPE_F32, channel)?;
    out.reserve(values.len() * 4);
    for v in values {
        out.extend_from_slice(&v.to_le_bytes());
    }
    Ok(out)
}

impl IgridEncode for ImageLogGrid {
    fn to_igrid_bytes(&self) -> Result<Vec<u8>> {
        self.check()?;
        let ch = match self.channel() {
            Channel::Amplitude => CH_AMPLITUDE,
            Channel::Radius => CH_RADIUS,
        };
        encode_f32(self.geometry(), ch, self.values())
    }
}

impl IgridEncode for ProbGrid {
    fn to_igrid_bytes(&self) -> Result<Vec<u8>> {
        self.check()?;
        encode_f32(self.geometry(), CH_PROBABILITY, self.values())
    }
}

impl IgridEncode for MaskGrid {
    fn to_igrid_bytes(&self) -> Result<Vec<u8>> {
        self.check()?;
        let mut out = header(self.geometry(), DTYPE_U8, CH_MASK)?;
        out.extend_from_slice(self.values());
        Ok(out)
    }
}

impl IgridEncode for AnyGrid {
    fn to_igrid_bytes(&self) -> Result<Vec<u8>> {
        match self {
            AnyGrid::Image(g) => g.to_igrid_bytes(),
            AnyGrid::Mask(g) => g.to_igrid_bytes(),
            AnyGrid::Prob(g) => g.to_igrid_bytes(),
        }
    }
}

/// Writes a grid to `path` in one shot.
pub fn write_grid<G: IgridEncode + ?Sized>(grid: &G, path: impl AsRef<Path>) -> Result<()> {
    let bytes = grid.to_igrid_bytes()?;
    let mut f = std::fs::File::create(path)?;
    f.write_all(&bytes)?;
    f.flush()?;
    Ok(())
}

pub fn read_grid(path: impl AsRef<Path>) -> Result<AnyGrid> {
    let bytes = std::fs::read(path)?;
    decode_grid(&bytes)
}

fn u16_at(b: &[u8], off: usize) -> u16 {
    u16::from_le_bytes([b[off], b[off + 1]])
}

fn u32_at(b: &[u8], off: usize) -> u32 {
    u32::from_le_bytes(b[off..off + 4].try_into().unwrap())
}

fn f64_at(b: &[u8], off: usize) -> f64 {
    f64::from_le_bytes(b[off..off + 8].try_into().unwrap())
}

/// Parses a complete IGRID file image.
pub fn decode_grid(b: &[u8]) -> Result<AnyGrid> {
    if b.len() < 4 || &b[0..4] != MAGIC {
        let got = &b[..b.len().min(4)];
        return Err(Error::parse(0, format!("bad magic {:?}, expected \"IGLG\"", String::from_utf8_lossy(got))));
    }
    if b.len() < HEADER_LEN {
        return Err(Error::parse(
            b.len() as u64,
            format!("truncated header: {} of {HEADER_LEN} bytes", b.len()),
        ));
    }
    let version = u16_at(b, 4);
    if version != VERSION {
        return Err(Error::parse(4, format!("unsupported version {version}")));
    }
    let dtype = u16_at(b, 6);
    if dtype != DTYPE_F32 && dtype != DTYPE_U8 {
        return Err(Error::parse(6, format!("unknown dtype code {dtype}")));
    }
    let n_depth = u32_at(b, 8) as usize;
    let n_az = u32_at(b, 12) as usize;
    let depth_start = f64_at(b, 16);
    let depth_step = f64_at(b, 24);
    let geometry = GridGeometry::new(n_depth, n_az, depth_start, depth_step).map_err(|e| {
        let off = if n_depth == 0 {
            8
        } else if n_az < crate::grid::MIN_AZIMUTH_COLUMNS {
            12
        } else if !depth_start.is_finite() {
            16
        } else {
            24
        };
        Error::parse(off, e.to_string())
    })?;
    let channel = u16_at(b, 32);
    let expected_dtype = match channel {
        CH_AMPLITUDE | CH_RADIUS | CH_PROBABILITY => DTYPE_F32,
        CH_MASK => DTYPE_U8,
        other => return Err(Error::parse(32, format!("unknown channel code {other}"))),
    };
    if dtype != expected_dtype {
        return Err(Error::parse(
            6,
            format!("dtype {dtype} does not match channel {channel} (expects dtype {expected_dtype})"),
        ));
    }
    if u16_at(b, 34) != 0 {
        return Err(Error::parse(34, "reserved field must be zero"));
    }
    if let Some(i) = b[36..HEADER_LEN].iter().position(|&x| x != 0) {
        return Err(Error::parse((36 + i) as u64, "header padding must be zero"));
    }

    let cell_size = if dtype == DTYPE_U8 { 1 } else { 4 };
    let cells = geometry.len();
    let expected = HEADER_LEN + cells * cell_size;
    if b.len() < expected {
        return Err(Error::parse(
            b.len() as u64,
            format!(
                "truncated payload: header declares {n_depth}x{n_az} = {cells} cells ({} bytes), found {} bytes",
                cells * cell_size,
                b.len() - HEADER_LEN
            ),
        ));
    }
    if b.len() > expected {
        return Err(Error::parse(expected as u64, format!("{} trailing bytes after payload", b.len() - expected)));
    }
    let payload = &b[HEADER_LEN..];

    if dtype == DTYPE_U8 {
        if let Some(i) = payload.iter().position(|&v| v > 1) {
            return Err(Error::parse((HEADER_LEN + i) as u64, format!("mask value {} is not 0 or 1", payload[i])));
        }
        return Ok(AnyGrid::Mask(MaskGrid::new(geometry, payload.to_vec())?));
    }

    let values: Vec<f32> = payload
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let bad_cell = |pred: &dyn Fn(f32) -> bool| values.iter().position(|&v| pred(v));
    match channel {
        CH_PROBABILITY => {
            if let Some(i) = bad_cell(&|v| !(0.0..=1.0).contains(&v)) {
                return Err(Error::parse((HEADER_LEN + 4 * i) as u64, format!("probability {} outside [0, 1]", values[i])));
            }
            Ok(AnyGrid::Prob(ProbGrid::new(geometry, values)?))
        }
        _ => {
            let ch = if channel == CH_RADIUS { Channel::Radius } else { Channel::Amplitude };
            let invalid = |v: f32| v.is_infinite() || (ch == Channel::Radius && !v.is_nan() && v <= 0.0);
            if let Some(i) = bad_cell(&invalid) {
                return Err(Error::parse((HEADER_LEN + 4 * i) as u64, format!("invalid {:?} value {}", ch, values[i])));
            }
            Ok(AnyGrid::Image(ImageLogGrid::from_parts_unchecked(geometry, ch, values)))
        }
    }
}
