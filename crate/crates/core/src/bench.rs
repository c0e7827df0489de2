//! Method comparison over synthetic boreholes: peak detection and optional
//! external picks, each before and after symmetry validation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::evaluation::{evaluate, EvalOptions, EvaluationReport, REPORT_SCHEMA};
use crate::peakdetect::{peak_detect, PeakDetectParams};
use crate::picks::PickSet;
use crate::synth::{render, scene_suite};
use crate::validation::validate;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub borehole: String,
    pub method: String,
    #[serde(flatten)]
    pub report: EvaluationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub schema: u32,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn row(&self, borehole: &str, method: &str) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.borehole == borehole && r.method == method)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchConfig {
    pub scenes: Vec<String>,
    /// Picks from another method, keyed by scene name.
    pub external: BTreeMap<String, PickSet>,
    pub external_name: Option<String>,
    pub peak: PeakDetectParams,
    pub eval: Option<EvalOptions>,
}

/// Renders each scene with `seed` and scores every method against the
/// scene's truth picks.
pub fn run_bench(cfg: &BenchConfig, seed: u64) -> Result<BenchReport> {
    let mut rows = Vec::new();
    let ext_name = cfg.external_name.as_deref().unwrap_or("external");
    for name in &cfg.scenes {
        let mut spec = scene_suite(name)?;
        spec.seed = seed;
        let scene = render(&spec)?;
        let opts = cfg.eval.unwrap_or(EvalOptions {
            native_step: spec.geometry.depth_step(),
            ..EvalOptions::default()
        });
        let mut push = |method: String, picks: &PickSet| -> Result<()> {
            let report = evaluate(picks, &scene.truth_picks, None, &opts)?;
            rows.push(BenchRow {
                borehole: name.clone(),
                method,
                report,
            });
            Ok(())
        };
        let raw = peak_detect(
            &scene.amplitude,
            &scene.radius,
            &PeakDetectParams {
                apply_symmetry_validation: false,
                ..cfg.peak
            },
        )?;
        push("peak_detect".into(), &raw)?;
        push("peak_detect_validated".into(), &validate(&raw, None)?.retained)?;
        if let Some(ext) = cfg.external.get(name) {
            push(ext_name.to_string(), ext)?;
            push(format!("{ext_name}_validated"), &validate(ext, None)?.retained)?;
        }
    }
    Ok(BenchReport {
        schema: REPORT_SCHEMA,
        seed,
        rows,
    })
}
