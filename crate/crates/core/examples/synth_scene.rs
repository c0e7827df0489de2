//! Render a named synthetic scene and save it as IGRID files.
//!
//! cargo run --example synth_scene -- mixed

use borehole_breakout::igrid::write_grid;
use borehole_breakout::picks::write_picks;
use borehole_breakout::synth::{render, scene_suite, SCENE_NAMES};

fn main() -> borehole_breakout::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "mixed".into());
    let spec = scene_suite(&name)?;
    let scene = render(&spec)?;
    let g = scene.amplitude.geometry();
    println!("scene {name}: {} x {} cells, {} truth picks", g.n_depth(), g.n_azimuth(), scene.truth_picks.len());
    println!("available scenes: {}", SCENE_NAMES.join(", "));

    let dir = tempfile::tempdir()?;
    write_grid(&scene.amplitude, dir.path().join("amplitude.igrid"))?;
    write_grid(&scene.radius, dir.path().join("radius.igrid"))?;
    write_grid(&scene.truth_mask, dir.path().join("truth_mask.igrid"))?;
    write_picks(&scene.truth_picks, dir.path().join("truth_picks.csv"))?;
    for entry in std::fs::read_dir(dir.path())? {
        let entry = entry?;
        println!("  {:<20} {:>8} bytes", entry.file_name().to_string_lossy(), entry.metadata()?.len());
    }
    println!("\nscene config:\n{}", spec.to_config());
    Ok(())
}
