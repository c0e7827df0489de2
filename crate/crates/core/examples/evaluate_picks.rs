//! Score automatic picks against manual ones and print the JSON report.

use borehole_breakout::evaluation::{evaluate, rose_histogram, write_rose_csv, EvalOptions};
use borehole_breakout::peakdetect::{peak_detect, PeakDetectParams};
use borehole_breakout::postproc::rasterize_picks;
use borehole_breakout::synth::{render, scene_suite};
use borehole_breakout::validation::validate;

fn main() -> borehole_breakout::Result<()> {
    let scene = render(&scene_suite("clean_pair")?)?;
    let g = *scene.truth_mask.geometry();
    let auto = validate(&peak_detect(&scene.amplitude, &scene.radius, &PeakDetectParams::default())?, None)?.retained;
    let pred = rasterize_picks(&auto, &g)?;

    let opts = EvalOptions {
        native_step: g.depth_step(),
        ..EvalOptions::default()
    };
    let report = evaluate(&auto, &scene.truth_picks, Some((&pred, &scene.truth_mask)), &opts)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));

    let hist: Vec<_> = rose_histogram(&auto.azimuths(), 30.0);
    write_rose_csv(&hist, std::io::stdout())?;
    Ok(())
}
