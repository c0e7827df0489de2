//! Maximum horizontal stress from breakout width, and how width errors
//! propagate.

use borehole_breakout::stress::{sensitivity_sweep, shmax, width_sensitivity, StressParams};

fn main() -> borehole_breakout::Result<()> {
    let prm = StressParams::diorite_example();
    for w in [30.0, 60.0, 90.0, 110.0] {
        println!("W = {w:>5.1}°  S_Hmax = {:.2} MPa", shmax(w, &prm)?);
    }
    if let Err(e) = shmax(120.0, &prm) {
        println!("W = 120.0°  {e}");
    }
    println!(
        "40° read as 70°: +{:.1} MPa; 40° read as 50°: +{:.1} MPa",
        width_sensitivity(40.0, 30.0, &prm)?,
        width_sensitivity(40.0, 10.0, &prm)?
    );
    println!("width0_deg,shmax_mpa,delta_shmax_mpa");
    for row in sensitivity_sweep(20.0, 80.0, 10.0, 10.0, &prm)? {
        println!("{:.1},{:.3},{:.3}", row.width0_deg, row.shmax_mpa, row.delta_shmax_mpa);
    }
    Ok(())
}
