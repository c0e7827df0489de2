//! Generators and brute-force oracles shared by the integration suites.
#![allow(dead_code)]

use borehole_breakout::{BreakoutPick, GridGeometry, MaskGrid, PickSet, PickSource};
use rand::Rng;

/// Naive run scanner: every maximal circular run of ones as
/// `(start, length)`, found by checking each cell's left neighbour.
pub fn brute_runs(row: &[u8]) -> Vec<(usize, usize)> {
    let n = row.len();
    if row.iter().all(|&v| v == 1) {
        return vec![(0, n)];
    }
    let mut out = Vec::new();
    for s in 0..n {
        if row[s] == 1 && row[(s + n - 1) % n] == 0 {
            let mut len = 0;
            while len < n && row[(s + len) % n] == 1 {
                len += 1;
            }
            out.push((s, len));
        }
    }
    out.sort();
    out
}

/// Random row of non-touching runs, each `min_len..=max_len` columns. Returns
/// the row and the runs as `(start, length)`.
pub fn random_runs<R: Rng>(rng: &mut R, n: usize, min_len: usize, max_len: usize, max_runs: usize) -> (Vec<u8>, Vec<(usize, usize)>) {
    let mut row = vec![0u8; n];
    let mut runs = Vec::new();
    let want = rng.random_range(0..=max_runs);
    for _ in 0..want * 4 {
        if runs.len() == want {
            break;
        }
        let len = rng.random_range(min_len..=max_len.min(n - 2));
        let start = rng.random_range(0..n);
        // the run plus one clear cell on each side must be free
        let free = (0..len + 2).all(|k| row[(start + n - 1 + k) % n] == 0);
        if free {
            for k in 0..len {
                row[(start + k) % n] = 1;
            }
            runs.push((start, len));
        }
    }
    runs.sort();
    (row, runs)
}

/// Lattice-aligned, non-touching picks on `g`, widths in
/// `[min_w, max_w]` degrees (rounded to whole columns).
pub fn random_lattice_picks<R: Rng>(rng: &mut R, g: &GridGeometry, min_w: f64, max_w: f64, max_per_row: usize) -> PickSet {
    let step = g.azimuth_step();
    let min_len = (min_w / step).ceil() as usize;
    let max_len = (max_w / step).floor() as usize;
    let mut picks = Vec::new();
    for r in 0..g.n_depth() {
        let (_, runs) = random_runs(rng, g.n_azimuth(), min_len, max_len, max_per_row);
        for (start, len) in runs {
            picks.push(
                BreakoutPick::candidate(g.depth_of_row(r), start as f64 * step, len as f64 * step).expect("valid pick"),
            );
        }
    }
    PickSet::new(picks, PickSource::Segnet).expect("distinct lattice picks")
}

pub fn random_mask<R: Rng>(rng: &mut R, g: GridGeometry, density: f64) -> MaskGrid {
    let v = (0..g.len()).map(|_| u8::from(rng.random_bool(density))).collect();
    MaskGrid::new(g, v).unwrap()
}

/// `(depth, left, width)` triples in a stable order.
pub fn edges(s: &PickSet) -> Vec<(f64, f64, f64)> {
    let mut v: Vec<_> = s.iter().map(|p| (p.depth, p.left_deg, p.width_deg)).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}
