//! Augment a handful of training patches and write them with a manifest.

use borehole_breakout::augment::{augment_set, save_samples, write_manifest, AugmentConfig, Polarity, TrainingSample};
use borehole_breakout::postproc::{picks_from_mask, rasterize_picks};
use borehole_breakout::{BreakoutPick, Channel, GridGeometry, ImageLogGrid, MaskGrid, PickSet, PickSource};

fn patch(label: MaskGrid, polarity: Polarity) -> borehole_breakout::Result<TrainingSample> {
    let g = *label.geometry();
    let amp = label.values().iter().map(|&v| 1.0 - 0.4 * v as f32).collect();
    let rad = label.values().iter().map(|&v| 108.0 + 5.0 * v as f32).collect();
    TrainingSample::new(
        ImageLogGrid::new(g, Channel::Amplitude, amp)?,
        ImageLogGrid::new(g, Channel::Radius, rad)?,
        label,
        polarity,
    )
}

fn main() -> borehole_breakout::Result<()> {
    let g = GridGeometry::new(64, 64, 800.0, 0.05)?;
    let mut picks = Vec::new();
    for r in 10..40 {
        picks.push(BreakoutPick::candidate(g.depth_of_row(r), 45.0, 45.0)?);
        picks.push(BreakoutPick::candidate(g.depth_of_row(r), 225.0, 45.0)?);
    }
    let label = rasterize_picks(&PickSet::new(picks, PickSource::Manual)?, &g)?;
    let samples = vec![patch(label, Polarity::Positive)?, patch(MaskGrid::zeros(g), Polarity::Negative)?];

    let out = augment_set(&samples, &AugmentConfig::default(), 2024)?;
    println!("{} samples -> {}", samples.len(), out.len());
    for (i, s) in out.iter().enumerate() {
        let p = picks_from_mask(&s.label);
        let az: Vec<String> = p.iter().take(2).map(|p| format!("{:.1}", p.azimuth_deg)).collect();
        println!("  #{i} {:<8} {:>5} label cells, first picks at [{}]", s.polarity.as_str(), s.label.count_ones(), az.join(", "));
    }

    let dir = tempfile::tempdir()?;
    let rows = save_samples(&out, dir.path(), "aug_")?;
    let mut manifest = Vec::new();
    write_manifest(&rows, &mut manifest)?;
    print!("{}", String::from_utf8_lossy(&manifest));
    Ok(())
}
