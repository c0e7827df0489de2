//! Rule-based picking from amplitude and radius, before and after the
//! symmetry filter.

use borehole_breakout::evaluation::{match_picks, rates};
use borehole_breakout::peakdetect::{peak_detect, PeakDetectParams};
use borehole_breakout::synth::{render, scene_suite};
use borehole_breakout::validation::validate;

fn main() -> borehole_breakout::Result<()> {
    for name in ["clean_pair", "keyseat", "artifact", "mixed", "asymmetric_pair"] {
        let scene = render(&scene_suite(name)?)?;
        let raw = peak_detect(&scene.amplitude, &scene.radius, &PeakDetectParams::default())?;
        let kept = validate(&raw, None)?.retained;
        let (fpr0, fnr0) = rates(&match_picks(&raw, &scene.truth_picks, 30.0));
        let (fpr1, fnr1) = rates(&match_picks(&kept, &scene.truth_picks, 30.0));
        println!(
            "{name:<16} raw {:>4} picks  FPR {fpr0:.2} FNR {fnr0:.2} | validated {:>4} picks  FPR {fpr1:.2} FNR {fnr1:.2}",
            raw.len(),
            kept.len()
        );
    }
    Ok(())
}
