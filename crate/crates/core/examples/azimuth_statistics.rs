//! Circular and axial azimuth statistics and the WSM quality check.

use borehole_breakout::evaluation::{arithmetic_stats, axial_stats, circular_stats, wsm_quality};
use borehole_breakout::{BreakoutPick, PickSet, PickSource};

fn main() -> borehole_breakout::Result<()> {
    // directions straddling north
    let north = [350.0, 355.0, 5.0, 10.0];
    let c = circular_stats(&north)?;
    let (m, s) = arithmetic_stats(&north)?;
    println!("circular mean {:.1}° std {:.1}° | arithmetic mean {m:.1}° std {s:.1}°", c.mean_deg, c.std_deg);

    // five 6 m zones of breakout pairs around 143° / 323°
    let mut picks = Vec::new();
    for zone in 0..5 {
        let az = 143.0 + [-12.0, 4.0, 9.0, -3.0, 15.0][zone];
        for i in 0..30 {
            let depth = 1000.0 + zone as f64 * 20.0 + i as f64 * 0.2;
            picks.push(BreakoutPick::candidate(depth, az - 20.0, 40.0)?);
            picks.push(BreakoutPick::candidate(depth, az + 160.0, 40.0)?);
        }
    }
    let set = PickSet::new(picks, PickSource::Manual)?;
    let ax = axial_stats(&set.azimuths())?;
    println!("axial mean {:.1}° ± {:.1}° over {} picks", ax.mean_deg, ax.std_deg, set.len());
    match circular_stats(&set.azimuths()) {
        Ok(st) => println!("directional mean {:.1}° (R = {:.3})", st.mean_deg, st.resultant_length),
        Err(e) => println!("directional mean: {e}"),
    }
    let wsm = wsm_quality(&set, 0.2);
    println!(
        "WSM: {} ({} zones, {:.1} m, std {:.1}°)",
        wsm.rank,
        wsm.zones,
        wsm.combined_length_m,
        wsm.azimuth_std_deg.unwrap_or(f64::NAN)
    );
    Ok(())
}
