mod common;

use borehole_breakout::angle::{circ360, circ_diff, wrap360};
use borehole_breakout::augment::{crop_enlarge_seeded, flip_depth, shift_azimuth, Polarity, TrainingSample};
use borehole_breakout::evaluation::{
    axial_stats, balanced_bce_slices, evaluate, iou, match_picks, rates, wsm_quality, EvalOptions, WsmRank,
};
use borehole_breakout::grid::union_masks;
use borehole_breakout::igrid::{decode_grid, AnyGrid, IgridEncode};
use borehole_breakout::peakdetect::{detect_row, PeakDetectParams};
use borehole_breakout::picks::{picks_to_csv_string, read_picks_from};
use borehole_breakout::postproc::{extract_runs, picks_from_mask, rasterize_picks};
use borehole_breakout::stress::{shmax, width_sensitivity, StressParams};
use borehole_breakout::synth::{render, Background, FeatureSpec, SceneSpec};
use borehole_breakout::validation::{validate, validate_depth, DepthGroup};
use borehole_breakout::{BreakoutPick, Channel, GridGeometry, ImageLogGrid, MaskGrid, PickSet, PickSource, PickStatus, ProbGrid};
use common::{brute_runs, edges, random_lattice_picks, random_mask, random_runs};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn geom(nd: usize, na: usize) -> GridGeometry {
    GridGeometry::new(nd, na, 1000.0, 0.1).unwrap()
}

fn shift_row<T: Copy>(row: &[T], k: usize) -> Vec<T> {
    let n = row.len();
    (0..n).map(|c| row[(c + n - k % n) % n]).collect()
}

fn shift_mask(m: &MaskGrid, k: usize) -> MaskGrid {
    let g = *m.geometry();
    let v = (0..g.n_depth()).flat_map(|r| shift_row(m.row(r), k)).collect();
    MaskGrid::new(g, v).unwrap()
}

fn rotate_set(s: &PickSet, theta: f64) -> PickSet {
    let v = s
        .iter()
        .map(|p| BreakoutPick::from_edges(p.depth, wrap360(p.left_deg + theta), p.width_deg, p.status).unwrap())
        .collect();
    PickSet::new(v, s.source()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn igrid_round_trip(seed: u64, nd in 1usize..12, na in 8usize..40, kind in 0u8..4) {
        let mut r = rng(seed);
        let g = GridGeometry::new(nd, na, r.random_range(-50.0..3000.0), r.random_range(0.001..1.0)).unwrap();
        let grid: AnyGrid = match kind {
            0 => ImageLogGrid::new(g, Channel::Amplitude, (0..g.len()).map(|_| if r.random_bool(0.05) { f32::NAN } else { r.random_range(-5.0..5.0) }).collect()).unwrap().into(),
            1 => ImageLogGrid::new(g, Channel::Radius, (0..g.len()).map(|_| r.random_range(50.0..200.0)).collect()).unwrap().into(),
            2 => random_mask(&mut r, g, 0.3).into(),
            _ => ProbGrid::new(g, (0..g.len()).map(|_| r.random_range(0.0..=1.0)).collect()).unwrap().into(),
        };
        let bytes = grid.to_igrid_bytes().unwrap();
        prop_assert_eq!(bytes.len(), 44 + g.len() * if kind == 2 { 1 } else { 4 });
        let back = decode_grid(&bytes).unwrap();
        prop_assert_eq!(back.to_igrid_bytes().unwrap(), bytes.clone());
        prop_assert_eq!(grid.to_igrid_bytes().unwrap(), bytes);
        prop_assert_eq!(back.geometry(), grid.geometry());
    }

    #[test]
    fn azimuth_steps_cover_the_circle(na in 8usize..4096) {
        let g = geom(1, na);
        let total: f64 = (0..na).map(|_| g.azimuth_step()).sum();
        prop_assert!((total - 360.0).abs() <= 1e-9);
    }

    #[test]
    fn union_is_commutative_associative_idempotent(seed: u64, nd in 1usize..6, na in 8usize..30) {
        let mut r = rng(seed);
        let g = geom(nd, na);
        let (a, b, c) = (random_mask(&mut r, g, 0.3), random_mask(&mut r, g, 0.5), random_mask(&mut r, g, 0.1));
        prop_assert_eq!(union_masks(&a, &b).unwrap(), union_masks(&b, &a).unwrap());
        prop_assert_eq!(
            union_masks(&union_masks(&a, &b).unwrap(), &c).unwrap(),
            union_masks(&a, &union_masks(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(union_masks(&a, &a).unwrap(), a);
    }

    #[test]
    fn pick_derived_fields_agree(depth in -100.0f64..5000.0, left in -720.0f64..720.0, width in 0.001f64..359.0) {
        let p = BreakoutPick::candidate(depth, left, width).unwrap();
        prop_assert!(p.derived_field_error() <= 1e-9);
        prop_assert!((0.0..360.0).contains(&p.left_deg));
        prop_assert!((0.0..360.0).contains(&p.azimuth_deg));
        prop_assert!(circ_diff(p.right_deg, p.left_deg + width) < 1e-9);
    }

    #[test]
    fn pick_csv_round_trip(seed: u64) {
        let mut r = rng(seed);
        let set = random_lattice_picks(&mut r, &geom(8, 360), 10.0, 180.0, 3);
        let text = picks_to_csv_string(&set);
        let back = read_picks_from(text.as_bytes()).unwrap();
        if set.is_empty() {
            // a header-only file carries no source
            prop_assert!(back.is_empty());
        } else {
            prop_assert_eq!(back, set);
        }
    }

    #[test]
    fn runs_match_brute_force_and_conserve_ones(seed: u64, n in 1usize..300, density in 0.0f64..1.0) {
        let mut r = rng(seed);
        let row: Vec<u8> = (0..n).map(|_| u8::from(r.random_bool(density))).collect();
        let runs = extract_runs(&row);
        let got: Vec<_> = runs.iter().map(|x| (x.start_col, x.length)).collect();
        prop_assert_eq!(got, brute_runs(&row));
        let total: usize = runs.iter().map(|x| x.length).sum();
        prop_assert_eq!(total, row.iter().filter(|&&v| v == 1).count());
    }

    #[test]
    fn postproc_rotation_equivariance(seed: u64, k in 0usize..256, density in 0.05f64..0.95) {
        let mut r = rng(seed);
        let g = geom(4, 256);
        let m = random_mask(&mut r, g, density);
        let before = picks_from_mask(&m);
        let after = picks_from_mask(&shift_mask(&m, k));
        prop_assert_eq!(before.len(), after.len());
        let step = g.azimuth_step();
        let mut expect: Vec<_> = before
            .iter()
            .map(|p| {
                let c = (p.left_deg / step).round() as usize;
                (p.depth, ((c + k) % 256) as f64 * step, p.width_deg)
            })
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(edges(&after), expect);
        let shifted: Vec<f64> = before.azimuths().iter().map(|a| wrap360(a + k as f64 * step)).collect();
        for a in after.azimuths() {
            prop_assert!(shifted.iter().any(|s| circ_diff(*s, a) < 1e-9));
        }
    }

    #[test]
    fn rasterize_then_extract_is_identity(seed: u64, na in prop::sample::select(vec![72usize, 256, 360, 720])) {
        let mut r = rng(seed);
        let g = geom(6, na);
        let set = random_lattice_picks(&mut r, &g, 10.0, 180.0, 3);
        let back = picks_from_mask(&rasterize_picks(&set, &g).unwrap());
        prop_assert_eq!(back, set);
    }

    #[test]
    fn validation_order_invariance(a in 0u32..360, b in 0u32..360) {
        let pa = BreakoutPick::candidate(7.0, a as f64 - 5.0, 10.0).unwrap();
        let pb = BreakoutPick::candidate(7.0, b as f64 - 5.0, 10.0).unwrap();
        prop_assume!(a != b);
        let x = validate_depth(&DepthGroup { depth: 7.0, picks: vec![pa, pb] }).unwrap();
        let y = validate_depth(&DepthGroup { depth: 7.0, picks: vec![pb, pa] }).unwrap();
        prop_assert_eq!(x.retained.len(), y.retained.len());
        prop_assert_eq!(circ360(a as f64 - b as f64).unwrap(), 360.0 - circ360(b as f64 - a as f64).unwrap());
    }

    #[test]
    fn validation_subset_partition_and_rotation(seed: u64, theta in 0u32..360) {
        let mut r = rng(seed);
        let g = geom(12, 360);
        let set = random_lattice_picks(&mut r, &g, 10.0, 60.0, 3);
        let out = validate(&set, None).unwrap();
        prop_assert_eq!(out.len(), set.len());
        for p in out.retained.iter() {
            prop_assert!(set.iter().any(|q| q.depth == p.depth && q.left_deg == p.left_deg && q.width_deg == p.width_deg));
            prop_assert_eq!(p.status, PickStatus::Validated);
        }
        for (_, group) in out.retained.depth_groups() {
            prop_assert_eq!(group.len(), 2);
            let d = circ360(group[1].azimuth_deg - group[0].azimuth_deg).unwrap();
            prop_assert!((160.0..=200.0).contains(&d));
        }
        let rot = validate(&rotate_set(&set, theta as f64), None).unwrap();
        let kept_depths = |s: &PickSet| { let mut d = s.depths(); d.dedup(); d };
        prop_assert_eq!(kept_depths(&rot.retained), kept_depths(&out.retained));
        prop_assert_eq!(rot.retained.len(), out.retained.len());
    }

    #[test]
    fn peakdetect_rotation_and_offset(seed: u64, k in 0usize..128, offset in -50.0f64..50.0) {
        let mut r = rng(seed);
        let g = geom(1, 128);
        let (flags, _) = random_runs(&mut r, 128, 8, 30, 2);
        let amp: Vec<f64> = flags.iter().map(|&f| 1.0 - 0.5 * f as f64 + r.random_range(-0.05..0.05)).collect();
        let rad: Vec<f64> = flags.iter().map(|&f| 108.0 + 6.0 * f as f64 + r.random_range(-0.2..0.2)).collect();
        let p = PeakDetectParams::default();
        let base = detect_row(&amp, &rad, &p, &g, 1000.0).unwrap();
        let rot = detect_row(&shift_row(&amp, k), &shift_row(&rad, k), &p, &g, 1000.0).unwrap();
        prop_assert_eq!(base.len(), rot.len());
        let step = g.azimuth_step();
        for b in &base {
            let moved = wrap360(b.left_deg + k as f64 * step);
            prop_assert!(rot.iter().any(|q| circ_diff(q.left_deg, moved) < 1e-9 && (q.width_deg - b.width_deg).abs() < 1e-9));
        }
        let lifted: Vec<f64> = amp.iter().map(|a| a + offset).collect();
        let off = detect_row(&lifted, &rad, &p, &g, 1000.0).unwrap();
        prop_assert_eq!(off, base);
    }

    #[test]
    fn iou_properties(seed: u64) {
        let mut r = rng(seed);
        let g = geom(5, 16);
        let (a, b) = (random_mask(&mut r, g, 0.4), random_mask(&mut r, g, 0.4));
        let ab = iou(&a, &b).unwrap();
        prop_assert_eq!(ab, iou(&b, &a).unwrap());
        prop_assert_eq!(iou(&a, &a).unwrap(), 1.0);
        prop_assert!((0.0..=1.0).contains(&ab));
        let (mut a2, mut b2) = (a.clone(), b.clone());
        let cell = r.random_range(0..g.len());
        a2.values_mut()[cell] = 1;
        b2.values_mut()[cell] = 1;
        prop_assert!(iou(&a2, &b2).unwrap() >= ab - 1e-15);
    }

    #[test]
    fn circ_diff_is_a_metric(a in -1000.0f64..1000.0, b in -1000.0f64..1000.0, c in -1000.0f64..1000.0) {
        prop_assert_eq!(circ_diff(a, b), circ_diff(b, a));
        prop_assert!((0.0..=180.0).contains(&circ_diff(a, b)));
        prop_assert!(circ_diff(a, c) <= circ_diff(a, b) + circ_diff(b, c) + 1e-9);
        prop_assert!(circ_diff(a, a) < 1e-12);
    }

    #[test]
    fn evaluation_rotation_invariance(seed: u64, theta in 0u32..360) {
        let mut r = rng(seed);
        let g = geom(10, 360);
        let manual = random_lattice_picks(&mut r, &g, 10.0, 60.0, 2);
        let mut auto_picks = Vec::new();
        for p in manual.iter() {
            if r.random_bool(0.8) {
                // fractional offsets, so two auto picks are almost never equidistant from a manual one
                let left = wrap360(p.left_deg + r.random_range(-20.0..20.0));
                let width = p.width_deg + r.random_range(0u32..5) as f64;
                auto_picks.push(BreakoutPick::from_edges(p.depth, left, width, PickStatus::Candidate).unwrap());
            }
        }
        prop_assume!(!auto_picks.is_empty());
        let Ok(auto) = PickSet::new(auto_picks, PickSource::PeakDetect) else { return Ok(()); };
        let opts = EvalOptions { resample_step: None, native_step: 0.1, ..Default::default() };
        let a = evaluate(&auto, &manual, None, &opts).unwrap();
        let b = evaluate(&rotate_set(&auto, theta as f64), &rotate_set(&manual, theta as f64), None, &opts).unwrap();
        prop_assert_eq!((a.fpr, a.fnr, a.n_matched), (b.fpr, b.fnr, b.n_matched));
        prop_assert!((0.0..=1.0).contains(&a.fpr) && (0.0..=1.0).contains(&a.fnr));
        let close = |x: Option<f64>, y: Option<f64>| match (x, y) { (Some(x), Some(y)) => (x - y).abs() < 1e-9, (None, None) => true, _ => false };
        prop_assert!(close(a.azimuth_error_deg, b.azimuth_error_deg));
        prop_assert!(close(a.width_error_deg, b.width_error_deg));
        // sqrt(-2 ln R) amplifies one ulp of R to ~1e-6° when R ≈ 1
        let (sa, sb) = (a.azimuth_std_deg.unwrap_or(-1.0), b.azimuth_std_deg.unwrap_or(-1.0));
        prop_assert!((sa - sb).abs() < 1e-5, "{} {}", sa, sb);
        if let (Some(m0), Some(m1)) = (a.azimuth_mean_deg, b.azimuth_mean_deg) {
            // axial mean is defined modulo 180°
            prop_assert!(circ_diff(2.0 * (m0 + theta as f64), 2.0 * m1) < 1e-6);
        }
    }

    #[test]
    fn rates_stay_in_unit_interval(seed: u64, tol in 1.0f64..180.0) {
        let mut r = rng(seed);
        let g = geom(6, 72);
        let a = random_lattice_picks(&mut r, &g, 10.0, 90.0, 3);
        let m = random_lattice_picks(&mut r, &g, 10.0, 90.0, 3);
        let res = match_picks(&a, &m, tol);
        let (fpr, fnr) = rates(&res);
        prop_assert!((0.0..=1.0).contains(&fpr) && (0.0..=1.0).contains(&fnr));
        prop_assert_eq!(res.n_auto(), a.len());
        prop_assert_eq!(res.n_manual(), m.len());
    }

    #[test]
    fn bce_properties(seed: u64, n in 1usize..64) {
        let mut r = rng(seed);
        let y: Vec<f64> = (0..n).map(|_| if r.random_bool(0.3) { 1.0 } else { 0.0 }).collect();
        let p: Vec<f64> = (0..n).map(|_| r.random_range(0.0..=1.0)).collect();
        let (beta, loss) = balanced_bce_slices(&y, &p);
        prop_assert!(loss >= 0.0);
        prop_assert_eq!(balanced_bce_slices(&y, &y).1, 0.0);
        prop_assert!((beta - y.iter().filter(|&&v| v == 0.0).count() as f64 / n as f64).abs() < 1e-15);

        let zeros = vec![0.0; n];
        let (beta0, l0) = balanced_bce_slices(&zeros, &p);
        let plain: f64 = p.iter().map(|&pi| -(1.0 - pi).max(1e-7).ln()).sum();
        prop_assert_eq!(beta0, 1.0);
        prop_assert!((l0 - plain).abs() <= 1e-12 * plain.max(1.0));

        let mut off = y.clone();
        let i = r.random_range(0..n);
        off[i] = 1.0 - y[i];
        let q: Vec<f64> = off.iter().map(|v| (v - 0.5) * 0.998 + 0.5).collect();
        // with one class absent that class carries zero weight
        if y.contains(&0.0) && y.contains(&1.0) {
            prop_assert!(balanced_bce_slices(&y, &q).1 > 0.0);
        }
    }

    #[test]
    fn wsm_adding_consistent_zone_never_demotes(seed: u64, zones in 1usize..8) {
        let mut r = rng(seed);
        let step = 0.2;
        let mut picks = Vec::new();
        let mut depth = 100.0;
        for _ in 0..zones {
            let len = r.random_range(5..40);
            let az = 143.0 + r.random_range(-20.0..20.0);
            for i in 0..len {
                let d = depth + i as f64 * step;
                picks.push(BreakoutPick::candidate(d, az - 20.0, 40.0).unwrap());
                picks.push(BreakoutPick::candidate(d, az + 160.0, 40.0).unwrap());
            }
            depth += (len + 10) as f64 * step;
        }
        let set = PickSet::new(picks.clone(), PickSource::Manual).unwrap();
        let before = wsm_quality(&set, step);
        let mean = axial_stats(&set.azimuths()).unwrap().mean_deg;
        for i in 0..r.random_range(1..60) {
            let d = depth + i as f64 * step;
            picks.push(BreakoutPick::candidate(d, mean - 20.0, 40.0).unwrap());
            picks.push(BreakoutPick::candidate(d, mean + 160.0, 40.0).unwrap());
        }
        let after = wsm_quality(&PickSet::new(picks, PickSource::Manual).unwrap(), step);
        if before.rank == WsmRank::COrBetter {
            prop_assert_eq!(after.rank, WsmRank::COrBetter);
        }
        prop_assert!(after.zones >= before.zones);
        // sqrt(-2 ln R) turns a 1e-16 change in R into ~1e-6°
        prop_assert!(after.azimuth_std_deg.unwrap() <= before.azimuth_std_deg.unwrap() + 1e-5);
    }

    #[test]
    fn stress_sensitivity_symmetry(w in 1.0f64..110.0, d in -0.99f64..9.0) {
        let prm = StressParams::diorite_example();
        let w2 = w + d;
        prop_assume!(w2 > 0.0 && w2 < 119.0);
        let a = width_sensitivity(w, d, &prm).unwrap();
        let b = width_sensitivity(w2, -d, &prm).unwrap();
        prop_assert!((a - b).abs() <= 1e-9);
        prop_assert!((a - (shmax(w2, &prm).unwrap() - shmax(w, &prm).unwrap()).abs()).abs() <= 1e-9);
    }
}

fn sample_from_picks(r: &mut ChaCha8Rng, g: GridGeometry, positive: bool) -> TrainingSample {
    let label = if positive {
        loop {
            let s = random_lattice_picks(r, &g, 12.0, 90.0, 2);
            if !s.is_empty() {
                break rasterize_picks(&s, &g).unwrap();
            }
        }
    } else {
        MaskGrid::zeros(g)
    };
    let amp = (0..g.len()).map(|_| r.random_range(0.0..2.0)).collect();
    let rad = (0..g.len()).map(|_| r.random_range(100.0..120.0)).collect();
    TrainingSample::new(
        ImageLogGrid::new(g, Channel::Amplitude, amp).unwrap(),
        ImageLogGrid::new(g, Channel::Radius, rad).unwrap(),
        label,
        if positive { Polarity::Positive } else { Polarity::Negative },
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn augment_ops_commute_with_picks(seed: u64, theta in 0.0f64..360.0, positive: bool) {
        let mut r = rng(seed);
        let g = GridGeometry::new(16, 64, 50.0, 0.25).unwrap();
        let s = sample_from_picks(&mut r, g, positive);
        let picks = picks_from_mask(&s.label);
        let step = g.azimuth_step();
        let k = g.column_of_azimuth(theta);

        let shifted = shift_azimuth(&s, theta);
        let mut expect: Vec<_> = picks
            .iter()
            .map(|p| (p.depth, ((g.column_of_azimuth(p.left_deg) + k) % 64) as f64 * step, p.width_deg))
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(edges(&picks_from_mask(&shifted.label)), expect);

        let flipped = flip_depth(&s);
        let mut expect: Vec<_> = picks
            .iter()
            .map(|p| (g.depth_of_row(15 - g.row_of_depth(p.depth).unwrap()), p.left_deg, p.width_deg))
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(edges(&picks_from_mask(&flipped.label)), expect);

        for out in [&shifted, &flipped] {
            prop_assert_eq!(out.label.count_ones(), s.label.count_ones());
            prop_assert_eq!(out.polarity, s.polarity);
        }
        if positive {
            let c = crop_enlarge_seeded(&s, seed).unwrap();
            prop_assert!(!c.label.is_all_zero());
            prop_assert_eq!(c.polarity, Polarity::Positive);
        } else {
            prop_assert!(shifted.label.is_all_zero() && flipped.label.is_all_zero());
            prop_assert!(crop_enlarge_seeded(&s, seed).is_err());
        }
    }

    #[test]
    fn scene_config_round_trip(seed: u64, n_feat in 0usize..5) {
        let mut r = rng(seed);
        let g = GridGeometry::new(r.random_range(10..200), r.random_range(8..300), r.random_range(0.0..3000.0), r.random_range(0.01..0.5)).unwrap();
        let top = g.depth_start();
        let bottom = g.depth_of_row(g.n_depth() - 1);
        let span = |r: &mut ChaCha8Rng| { let a = r.random_range(top..=bottom); let b = r.random_range(a..=bottom); (a, b) };
        let mut features = Vec::new();
        for _ in 0..n_feat {
            let (a, b) = span(&mut r);
            features.push(match r.random_range(0..5) {
                0 => FeatureSpec::BreakoutPair { center_azimuth_deg: r.random_range(0.0..360.0), asymmetry_deg: r.random_range(-40.0..40.0), width_deg: r.random_range(10.0..90.0), depth_top: a, depth_bottom: b, amp_drop: r.random(), rad_gain_mm: r.random_range(0.0..10.0) },
                1 => FeatureSpec::Keyseat { azimuth_deg: r.random_range(0.0..360.0), width_deg: r.random_range(10.0..90.0), depth_top: a, depth_bottom: b, amp_drop: r.random(), rad_gain_mm: r.random_range(0.0..10.0) },
                2 => FeatureSpec::Fracture { mid_depth: (a + b) / 2.0, amplitude_m: (b - a) / 4.0, phase_deg: r.random_range(0.0..360.0), thickness_m: (b - a) / 4.0, amp_drop: r.random(), rad_drop_mm: r.random_range(0.0..5.0) },
                3 => FeatureSpec::ArtifactStripes { azimuth_deg: r.random_range(0.0..360.0), width_deg: r.random_range(1.0..30.0), amp_drop: r.random() },
                _ => FeatureSpec::Washout { depth_top: a, depth_bottom: b, amp_drop: r.random(), rad_gain_mm: r.random_range(0.0..20.0) },
            });
        }
        let mut spec = SceneSpec::new(g, features, r.random());
        spec.background = Background { amp_mean: r.random_range(0.5..2.0), amp_sigma: r.random_range(0.0..0.3), rad_mean_mm: r.random_range(50.0..150.0), rad_sigma_mm: r.random_range(0.0..1.0) };
        spec.speckle_level = r.random_range(0.0..2.0);
        spec.truth_includes_keyseat = r.random();
        prop_assert!(spec.check().is_ok());
        let back = SceneSpec::from_config(&spec.to_config()).unwrap();
        prop_assert_eq!(&back, &spec);

        // small scenes: rendering is deterministic and truth is self-consistent
        if g.len() <= 6000 {
            let x = render(&spec).unwrap();
            let y = render(&back).unwrap();
            prop_assert_eq!(x.amplitude.to_igrid_bytes().unwrap(), y.amplitude.to_igrid_bytes().unwrap());
            prop_assert_eq!(x.radius.to_igrid_bytes().unwrap(), y.radius.to_igrid_bytes().unwrap());
            prop_assert_eq!(picks_from_mask(&x.truth_mask).with_source(PickSource::Synthetic), x.truth_picks);
        }
    }
}
