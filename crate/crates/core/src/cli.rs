//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and maps errors onto exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | unreadable or malformed input |
//! | 3 | invalid parameter |
//! | 4 | internal error |
//!
//! Files are written atomically into `--out-dir` and never replace an
//! existing file unless `--force` is given.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::augment::{augment_set, load_samples, read_manifest, save_samples, write_manifest, AugmentConfig};
use crate::bench::{run_bench, BenchConfig};
use crate::error::{Error, Result};
use crate::evaluation::{evaluate, rose_histogram, write_rose_csv, EvalOptions};
use crate::grid::{Channel, ImageLogGrid, MaskGrid};
use crate::igrid::{read_grid, AnyGrid, IgridEncode};
use crate::peakdetect::{peak_detect, PeakDetectParams};
use crate::picks::{picks_to_csv_string, read_picks, PickSet};
use crate::postproc::{binarize, extract_picks, DEFAULT_THRESHOLD, MIN_WIDTH_DEG};
use crate::stress::{sensitivity_sweep, shmax, StressParams};
use crate::synth::{render, scene_suite, SceneSpec, SCENE_NAMES};
use crate::validation::validate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PARAM: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "breakout", version, about = "Breakout picking and stress estimation for acoustic image logs")]
pub struct Cli {
    /// Directory for output files.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Seed for randomized subcommands (synth, augment, bench).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Replace existing output files.
    #[arg(long, global = true)]
    pub force: bool,
    /// Only log errors.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability or binary mask (IGRID) to candidate picks.
    Postproc(PostprocArgs),
    /// Split picks into retained and rejected sets by the symmetry rule.
    Validate(ValidateArgs),
    /// Rule-based picks straight from amplitude and radius logs.
    Peakdetect(PeakdetectArgs),
    /// Compare automatic with manual picks and write a JSON report.
    Evaluate(EvaluateArgs),
    /// Method comparison over synthetic scenes.
    Bench(BenchArgs),
    /// Augment a manifest of training samples.
    Augment(AugmentArgs),
    /// Render a synthetic scene.
    Synth(SynthArgs),
    /// Maximum horizontal stress from breakout width (CSV to stdout).
    Stress(StressArgs),
}

#[derive(Debug, Args)]
pub struct PostprocArgs {
    /// IGRID probability grid or binary mask.
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    pub threshold: f64,
    #[arg(long, default_value_t = MIN_WIDTH_DEG)]
    pub min_width: f64,
    #[arg(long, default_value = "picks.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    pub picks: PathBuf,
    /// Resample to this depth step (m) before validating.
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long, default_value = "retained.csv")]
    pub retained: PathBuf,
    #[arg(long, default_value = "rejected.csv")]
    pub rejected: PathBuf,
}

#[derive(Debug, Args)]
pub struct PeakdetectArgs {
    pub amplitude: PathBuf,
    pub radius: PathBuf,
    #[arg(long, default_value_t = 15.0)]
    pub smooth_window: f64,
    #[arg(long, default_value_t = 1.0)]
    pub k_amp: f64,
    #[arg(long, default_value_t = 1.0)]
    pub k_rad: f64,
    #[arg(long, default_value_t = 1.0)]
    pub min_radius_excess: f64,
    #[arg(long, default_value_t = MIN_WIDTH_DEG)]
    pub min_width: f64,
    /// Keep only picks that pass the symmetry rule.
    #[arg(long)]
    pub validate: bool,
    #[arg(long, default_value = "picks.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    pub auto: PathBuf,
    pub manual: PathBuf,
    /// Predicted mask (IGRID) for pixel IoU; needs --label.
    #[arg(long, requires = "label")]
    pub pred: Option<PathBuf>,
    #[arg(long, requires = "pred")]
    pub label: Option<PathBuf>,
    #[arg(long, default_value_t = 30.0)]
    pub tolerance: f64,
    /// Common depth step for matching (m).
    #[arg(long, default_value_t = 0.2)]
    pub step: f64,
    /// Match on native depths instead of resampling.
    #[arg(long)]
    pub native: bool,
    /// Native depth step, used for zone lengths with --native.
    #[arg(long, default_value_t = 0.2)]
    pub native_step: f64,
    /// Also write a rose histogram with this bin width.
    #[arg(long)]
    pub rose_bin: Option<f64>,
    #[arg(long, default_value = "report.json")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Scene names (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "mixed")]
    pub scenes: Vec<String>,
    /// External picks as `scene=path.csv` (repeatable).
    #[arg(long = "external", value_parser = parse_external)]
    pub external: Vec<(String, PathBuf)>,
    #[arg(long, default_value = "external")]
    pub external_name: String,
    #[arg(long, default_value = "bench.json")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct AugmentArgs {
    /// Manifest CSV of input samples; paths resolve against its directory.
    pub manifest: PathBuf,
    #[arg(long, default_value = "aug_")]
    pub prefix: String,
    #[arg(long, default_value = "manifest.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Named scene.
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    pub scene: Option<String>,
    /// Scene config file (`key = value`).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file prefix.
    #[arg(long, default_value = "")]
    pub prefix: String,
}

#[derive(Debug, Args)]
pub struct StressArgs {
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    pub width_deg: Option<f64>,
    /// Minimum horizontal stress (MPa).
    #[arg(long)]
    pub shmin: f64,
    /// Pore pressure (MPa).
    #[arg(long)]
    pub pf: f64,
    /// Effective compressive strength (MPa).
    #[arg(long)]
    pub cef: f64,
    /// Width range `lo:hi:step` in degrees.
    #[arg(long, value_parser = parse_sweep, requires = "dwidth")]
    pub sweep: Option<(f64, f64, f64)>,
    /// Width error for the sweep (degrees).
    #[arg(long)]
    pub dwidth: Option<f64>,
}

fn parse_external(s: &str) -> std::result::Result<(String, PathBuf), String> {
    let (scene, path) = s.split_once('=').ok_or_else(|| format!("expected scene=path, got {s:?}"))?;
    Ok((scene.to_string(), PathBuf::from(path)))
}

fn parse_sweep(s: &str) -> std::result::Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(format!("expected lo:hi:step, got {s:?}"));
    };
    let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(lo)?, num(hi)?, num(step)?))
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Singularity { .. } => EXIT_PARAM,
        Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

struct Outputs<'a> {
    dir: &'a Path,
    force: bool,
}

impl Outputs<'_> {
    fn path(&self, name: &Path) -> PathBuf {
        self.dir.join(name)
    }

    /// Fails before any work is done if a target exists and `--force` is off.
    fn claim(&self, names: &[&Path]) -> Result<()> {
        for n in names {
            let p = self.path(n);
            if p.exists() && !self.force {
                return Err(Error::param(format!("{} exists; pass --force to overwrite", p.display())));
            }
        }
        Ok(())
    }

    fn write(&self, name: &Path, bytes: &[u8]) -> Result<()> {
        let target = self.path(name);
        if target.exists() && !self.force {
            return Err(Error::param(format!("{} exists; pass --force to overwrite", target.display())));
        }
        let dir = target.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(bytes)?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|e| Error::Io(e.error))?;
        log::info!("wrote {}", target.display());
        Ok(())
    }
}

fn require_inputs(paths: &[&Path]) -> Result<()> {
    for p in paths {
        if !p.is_file() {
            return Err(Error::Io(std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!("input {} not found", p.display()),
            )));
        }
    }
    Ok(())
}

fn require_seed(seed: Option<u64>, cmd: &str) -> Result<u64> {
    seed.ok_or_else(|| Error::param(format!("{cmd} needs an explicit --seed")))
}

fn read_image(path: &Path, want: Channel) -> Result<ImageLogGrid> {
    match read_grid(path)? {
        AnyGrid::Image(g) if g.channel() == want => Ok(g),
        other => Err(Error::shape(format!(
            "{}: expected a {want:?} log, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn read_mask(path: &Path) -> Result<MaskGrid> {
    match read_grid(path)? {
        AnyGrid::Mask(m) => Ok(m),
        other => Err(Error::shape(format!("{}: expected a mask, found {}", path.display(), other.kind()))),
    }
}

fn csv_bytes(set: &PickSet) -> Vec<u8> {
    picks_to_csv_string(set).into_bytes()
}

fn cmd_postproc(a: &PostprocArgs, out: &Outputs) -> Result<()> {
    require_inputs(&[&a.input])?;
    if !(a.threshold > 0.0 && a.threshold < 1.0) {
        return Err(Error::param(format!("threshold {} must lie in (0, 1)", a.threshold)));
    }
    out.claim(&[&a.output])?;
    let mask = match read_grid(&a.input)? {
        AnyGrid::Mask(m) => m,
        AnyGrid::Prob(p) => binarize(&p, a.threshold)?,
        AnyGrid::Image(_) => return Err(Error::shape("postproc needs a probability grid or a mask")),
    };
    let ex = extract_picks(&mask, a.min_width)?;
    if !ex.washout_depths.is_empty() {
        log::warn!("{} full-circle rows treated as washout", ex.washout_depths.len());
    }
    out.write(&a.output, &csv_bytes(&ex.picks))
}

fn cmd_validate(a: &ValidateArgs, out: &Outputs) -> Result<()> {
    require_inputs(&[&a.picks])?;
    out.claim(&[&a.retained, &a.rejected])?;
    let set = read_picks(&a.picks)?;
    let v = validate(&set, a.step)?;
    log::info!("{} retained, {} rejected", v.retained.len(), v.rejected.len());
    out.write(&a.retained, &csv_bytes(&v.retained))?;
    out.write(&a.rejected, &csv_bytes(&v.rejected))
}

fn cmd_peakdetect(a: &PeakdetectArgs, out: &Outputs) -> Result<()> {
    require_inputs(&[&a.amplitude, &a.radius])?;
    let params = PeakDetectParams {
        smooth_window_deg: a.smooth_window,
        k_amp: a.k_amp,
        k_rad: a.k_rad,
        min_radius_excess_mm: a.min_radius_excess,
        min_width_deg: a.min_width,
        apply_symmetry_validation: a.validate,
    };
    out.claim(&[&a.output])?;
    let amp = read_image(&a.amplitude, Channel::Amplitude)?;
    let rad = read_image(&a.radius, Channel::Radius)?;
    let picks = peak_detect(&amp, &rad, &params)?;
    out.write(&a.output, &csv_bytes(&picks))
}

fn cmd_evaluate(a: &EvaluateArgs, out: &Outputs) -> Result<()> {
    let mut inputs = vec![a.auto.as_path(), a.manual.as_path()];
    inputs.extend(a.pred.as_deref());
    inputs.extend(a.label.as_deref());
    require_inputs(&inputs)?;
    let rose_name = PathBuf::from("rose.csv");
    let mut targets = vec![a.output.as_path()];
    if a.rose_bin.is_some() {
        targets.push(&rose_name);
    }
    out.claim(&targets)?;
    let opts = EvalOptions {
        az_tol_deg: a.tolerance,
        resample_step: (!a.native).then_some(a.step),
        native_step: a.native_step,
    };
    if !(opts.az_tol_deg > 0.0 && opts.az_tol_deg <= 180.0) {
        return Err(Error::param(format!("tolerance {} must lie in (0, 180]", a.tolerance)));
    }
    let auto = read_picks(&a.auto)?;
    let manual = read_picks(&a.manual)?;
    let masks = match (&a.pred, &a.label) {
        (Some(p), Some(l)) => Some((read_mask(p)?, read_mask(l)?)),
        _ => None,
    };
    let report = evaluate(&auto, &manual, masks.as_ref().map(|(p, l)| (p, l)), &opts)?;
    let mut json = serde_json::to_string_pretty(&report).map_err(|e| Error::Invariant(e.to_string()))?;
    json.push('\n');
    out.write(&a.output, json.as_bytes())?;
    if let Some(bin) = a.rose_bin {
        if !(bin > 0.0 && bin <= 360.0) {
            return Err(Error::param(format!("rose bin {bin} must lie in (0, 360]")));
        }
        let mut buf = Vec::new();
        write_rose_csv(&rose_histogram(&auto.azimuths(), bin), &mut buf)?;
        out.write(&rose_name, &buf)?;
    }
    Ok(())
}

fn cmd_bench(a: &BenchArgs, seed: Option<u64>, out: &Outputs) -> Result<()> {
    let seed = require_seed(seed, "bench")?;
    let ext_paths: Vec<&Path> = a.external.iter().map(|(_, p)| p.as_path()).collect();
    require_inputs(&ext_paths)?;
    out.claim(&[&a.output])?;
    let mut external = BTreeMap::new();
    for (scene, path) in &a.external {
        if !a.scenes.contains(scene) {
            return Err(Error::param(format!("external picks given for scene {scene:?} which is not benchmarked")));
        }
        external.insert(scene.clone(), read_picks(path)?);
    }
    let cfg = BenchConfig {
        scenes: a.scenes.clone(),
        external,
        external_name: Some(a.external_name.clone()),
        ..Default::default()
    };
    let report = run_bench(&cfg, seed)?;
    out.write(&a.output, report.to_json().as_bytes())
}

fn cmd_augment(a: &AugmentArgs, seed: Option<u64>, out: &Outputs) -> Result<()> {
    let seed = require_seed(seed, "augment")?;
    require_inputs(&[&a.manifest])?;
    out.claim(&[&a.output])?;
    let entries = read_manifest(&a.manifest)?;
    let base = a.manifest.parent().unwrap_or(Path::new("."));
    let samples = load_samples(&entries, base)?;
    let augmented = augment_set(&samples, &AugmentConfig::default(), seed)?;
    log::info!("{} samples -> {}", samples.len(), augmented.len());
    let staging = tempfile::tempdir_in(out.dir)?;
    let rows = save_samples(&augmented, staging.path(), &a.prefix)?;
    for row in &rows {
        for name in [&row.amp_path, &row.rad_path, &row.label_path] {
            out.write(name, &std::fs::read(staging.path().join(name))?)?;
        }
    }
    let mut buf = Vec::new();
    write_manifest(&rows, &mut buf)?;
    out.write(&a.output, &buf)
}

fn cmd_synth(a: &SynthArgs, seed: Option<u64>, out: &Outputs) -> Result<()> {
    let seed = require_seed(seed, "synth")?;
    let mut spec = match (&a.scene, &a.config) {
        (Some(name), _) => scene_suite(name)?,
        (None, Some(path)) => {
            require_inputs(&[path])?;
            SceneSpec::from_config(&std::fs::read_to_string(path)?)?
        }
        (None, None) => return Err(Error::param(format!("give --scene ({}) or --config", SCENE_NAMES.join(", ")))),
    };
    spec.seed = seed;
    let names: Vec<PathBuf> = ["amplitude.igrid", "radius.igrid", "truth_mask.igrid", "truth_picks.csv", "scene.cfg"]
        .iter()
        .map(|n| PathBuf::from(format!("{}{n}", a.prefix)))
        .collect();
    out.claim(&names.iter().map(|p| p.as_path()).collect::<Vec<_>>())?;
    let scene = render(&spec)?;
    out.write(&names[0], &scene.amplitude.to_igrid_bytes()?)?;
    out.write(&names[1], &scene.radius.to_igrid_bytes()?)?;
    out.write(&names[2], &scene.truth_mask.to_igrid_bytes()?)?;
    out.write(&names[3], &csv_bytes(&scene.truth_picks))?;
    out.write(&names[4], spec.to_config().as_bytes())
}

fn cmd_stress(a: &StressArgs, stdout: &mut dyn Write) -> Result<()> {
    let prm = StressParams::new(a.shmin, a.pf, a.cef)?;
    if let Some((lo, hi, step)) = a.sweep {
        let dwidth = a.dwidth.ok_or_else(|| Error::param("--sweep needs --dwidth"))?;
        writeln!(stdout, "width0_deg,shmax_mpa,delta_shmax_mpa")?;
        for row in sensitivity_sweep(lo, hi, step, dwidth, &prm)? {
            writeln!(
                stdout,
                "{:.6},{:.6},{:.6}",
                row.width0_deg, row.shmax_mpa, row.delta_shmax_mpa
            )?;
        }
    }
    if let Some(w) = a.width_deg {
        let s = shmax(w, &prm)?;
        writeln!(stdout, "width_deg,shmax_mpa")?;
        writeln!(stdout, "{w:.6},{s:.6}")?;
    }
    Ok(())
}

/// Runs one parsed command.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    if !matches!(cli.command, Command::Stress(_)) {
        std::fs::create_dir_all(&cli.out_dir)?;
    }
    let out = Outputs {
        dir: &cli.out_dir,
        force: cli.force,
    };
    match &cli.command {
        Command::Postproc(a) => cmd_postproc(a, &out),
        Command::Validate(a) => cmd_validate(a, &out),
        Command::Peakdetect(a) => cmd_peakdetect(a, &out),
        Command::Evaluate(a) => cmd_evaluate(a, &out),
        Command::Bench(a) => cmd_bench(a, cli.seed, &out),
        Command::Augment(a) => cmd_augment(a, cli.seed, &out),
        Command::Synth(a) => cmd_synth(a, cli.seed, &out),
        Command::Stress(a) => cmd_stress(a, stdout),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
        }
    };
    let level = if cli.quiet { log::LevelFilter::Error } else { log::LevelFilter::Warn };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .parse_env("BREAKOUT_LOG")
        .try_init();
    let stdout = std::io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
