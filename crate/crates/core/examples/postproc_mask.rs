//! Turn a segmentation probability map into breakout picks.

use borehole_breakout::picks::picks_to_csv_string;
use borehole_breakout::postproc::{binarize, extract_picks, MIN_WIDTH_DEG};
use borehole_breakout::{GridGeometry, ProbGrid};

fn main() -> borehole_breakout::Result<()> {
    // 4 depths x 72 columns (5° each); a pair of blobs near 140° / 320°,
    // a narrow 5° speck and a full-circle washout row
    let g = GridGeometry::new(4, 72, 2500.0, 0.2)?;
    let mut p = vec![0.05f32; g.len()];
    for r in 0..3 {
        for c in 24..33 {
            p[r * 72 + c] = 0.9;
            p[r * 72 + c + 36] = 0.8;
        }
    }
    p[2 * 72 + 5] = 0.95;
    for v in &mut p[3 * 72..] {
        *v = 0.7;
    }
    let mask = binarize(&ProbGrid::new(g, p)?, 0.5)?;
    let ex = extract_picks(&mask, MIN_WIDTH_DEG)?;
    print!("{}", picks_to_csv_string(&ex.picks));
    println!("washout depths: {:?}", ex.washout_depths);
    Ok(())
}
