//! Compare peak detection and externally produced picks across scenes.

use std::collections::BTreeMap;

use borehole_breakout::bench::{run_bench, BenchConfig};
use borehole_breakout::peakdetect::PeakDetectParams;
use borehole_breakout::postproc::picks_from_mask;
use borehole_breakout::synth::{render, scene_suite};

fn main() -> borehole_breakout::Result<()> {
    let seed = 7;
    // stand-in for network output: the truth mask of the mixed scene with the
    // keyseat painted in, so validation has something to remove
    let mut spec = scene_suite("mixed")?;
    spec.seed = seed;
    spec.truth_includes_keyseat = true;
    let external = picks_from_mask(&render(&spec)?.truth_mask);

    let cfg = BenchConfig {
        scenes: vec!["mixed".into(), "clean_pair".into()],
        external: BTreeMap::from([("mixed".to_string(), external)]),
        external_name: Some("segnet".into()),
        peak: PeakDetectParams::default(),
        eval: None,
    };
    let report = run_bench(&cfg, seed)?;
    println!("{:<12} {:<24} {:>6} {:>6} {:>7}", "borehole", "method", "FPR", "FNR", "n_auto");
    for row in &report.rows {
        println!(
            "{:<12} {:<24} {:>6.3} {:>6.3} {:>7}",
            row.borehole, row.method, row.report.fpr, row.report.fnr, row.report.n_auto
        );
    }
    Ok(())
}
