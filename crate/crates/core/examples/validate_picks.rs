//! Filter candidate picks with the two-opposite-picks rule.

use borehole_breakout::postproc::picks_from_mask;
use borehole_breakout::synth::{render, scene_suite};
use borehole_breakout::validation::validate;

fn main() -> borehole_breakout::Result<()> {
    let mut spec = scene_suite("mixed")?;
    spec.truth_includes_keyseat = true;
    let scene = render(&spec)?;
    let candidates = picks_from_mask(&scene.truth_mask);
    let out = validate(&candidates, None)?;
    println!("{} candidates -> {} retained, {} rejected", candidates.len(), out.retained.len(), out.rejected.len());

    let mut reasons = std::collections::BTreeMap::new();
    for p in &out.rejected {
        *reasons.entry(p.status.to_string()).or_insert(0) += 1;
    }
    for (reason, n) in reasons {
        println!("  {reason}: {n}");
    }

    // same rule on a 0.2 m grid
    let coarse = validate(&candidates, Some(0.2))?;
    println!("at 0.2 m: {} retained, {} rejected", coarse.retained.len(), coarse.rejected.len());
    Ok(())
}
