//! Borehole breakout characterization from acoustic image logs.
//!
//! The crate turns segmentation output (probability or binary masks over a
//! depth × azimuth grid) into per-depth breakout picks, filters them with an
//! azimuthal-symmetry rule, scores them against manual picks and feeds the
//! resulting widths into a breakout-width stress estimate.
//!
//! Pipeline stages:
//!
//! 1. [`grid`] / [`igrid`] / [`picks`]: domain types and file formats.
//! 2. [`postproc`]: mask → circular runs → candidate picks.
//! 3. [`validation`]: keep only depths with two near-opposite picks.
//! 4. [`peakdetect`]: rule-based baseline picker working on raw signals.
//! 5. [`evaluation`]: IoU, matching, FPR/FNR, circular statistics, WSM rank, loss.
//! 6. [`stress`]: S_Hmax from breakout width and width-error sensitivity.
//! 7. [`augment`] / [`synth`]: training-sample augmentation and synthetic scenes.
//!
//! The `breakout` binary wraps all of this behind subcommands (see [`cli`]).

pub mod angle;
pub mod augment;
pub mod bench;
pub mod cli;
pub mod error;
pub mod evaluation;
pub mod grid;
pub mod igrid;
pub mod peakdetect;
pub mod picks;
pub mod postproc;
pub mod stress;
pub mod synth;
pub mod validation;

pub use error::{Error, Result};
pub use grid::{Channel, GridGeometry, ImageLogGrid, MaskGrid, ProbGrid};
pub use picks::{BreakoutPick, PickSet, PickSource, PickStatus, RejectReason};
