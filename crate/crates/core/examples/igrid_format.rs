//! Write, inspect and read back an IGRID file.

use borehole_breakout::igrid::{read_grid, IgridEncode};
use borehole_breakout::{GridGeometry, MaskGrid};

fn main() -> borehole_breakout::Result<()> {
    let g = GridGeometry::new(2, 8, 1500.0, 0.1)?;
    let mut m = MaskGrid::zeros(g);
    m.set(0, 3, true);
    m.set(1, 4, true);
    let bytes = m.to_igrid_bytes()?;
    println!("{} bytes (44 header + {} cells)", bytes.len(), g.len());
    for chunk in bytes.chunks(16) {
        let hex: Vec<String> = chunk.iter().map(|b| format!("{b:02x}")).collect();
        println!("  {}", hex.join(" "));
    }

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("mask.igrid");
    std::fs::write(&path, &bytes)?;
    let back = read_grid(&path)?;
    println!("read back a {} grid, {:?}", back.kind(), back.geometry());

    std::fs::write(&path, &bytes[..40])?;
    if let Err(e) = read_grid(&path) {
        println!("truncated file: {e}");
    }
    Ok(())
}
