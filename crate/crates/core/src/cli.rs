//! Command-line front end. The binary only calls [`run`].

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::agbuilder::{build_functional_code, chart_translations, ChartChoice, EvaluationCodeSpec};
use crate::code::{
    min_distance_exhaustive, min_distance_isd, min_weight_random, ExhaustiveOptions, IsdOptions, LinearCode,
    RandomOptions, DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_ISD_BUDGET,
};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::picard::{bound_basic, bound_improved, DivisorClass};
use crate::projspace::{find_cubic_no_lines, CubicFamily, ProjectivePoint, Surface, SurfaceKind};
use crate::tables::{self, DistanceMode, ReproduceOptions, Table};

pub const THREADS_ENV: &str = "SURFACECODES_THREADS";

#[derive(Parser)]
#[command(name = "surfacecodes", version, about = "Functional codes on surfaces over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the evaluation code and write its generator matrix.
    Build(BuildArgs),
    /// Minimum distance of a code file or of a preset code.
    Distance(DistanceArgs),
    /// Lower bound for the dual distance as a JSON report.
    Bounds(BoundsArgs),
    /// Emit a parameter table as CSV.
    Reproduce(ReproduceArgs),
    /// Search for a smooth cubic surface without rational lines.
    FindCubic(FindCubicArgs),
    /// Recompute points, lines and smoothness of a surface file.
    ValidateSurface(ValidateArgs),
}

#[derive(Args, Clone)]
struct SurfaceArgs {
    /// Surface kind: p2, hyperbolic-quadric, elliptic-quadric (presets), or
    /// the expected kind of --surface.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    q: Option<u32>,
    /// Surface file; overrides the preset equation.
    #[arg(long)]
    surface: Option<PathBuf>,
}

impl SurfaceArgs {
    fn load(&self) -> anyhow::Result<Surface> {
        let kind: Option<SurfaceKind> = self.preset.as_deref().map(str::parse).transpose()?;
        if let Some(path) = &self.surface {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let s = Surface::from_text(&text)?;
            if let Some(k) = kind {
                if s.kind() != k {
                    bail!("{} is a {}, not a {k}", path.display(), s.kind());
                }
            }
            if self.q.is_some_and(|q| q != s.field().order()) {
                bail!("--q does not match the surface file");
            }
            return Ok(s);
        }
        let (Some(kind), Some(q)) = (kind, self.q) else {
            bail!("give --preset and --q, or --surface");
        };
        Ok(Surface::preset(kind, &Field::of_order(q)?)?)
    }
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    #[arg(long)]
    m: Option<u32>,
    /// `tangent:i` for the tangent plane at the i-th rational point, or
    /// `linear:a,b,c[,d]` for an explicit plane. Defaults to the preset chart.
    #[arg(long)]
    chart: Option<String>,
}

impl CodeArgs {
    fn spec(&self) -> anyhow::Result<EvaluationCodeSpec> {
        let s = self.surface.load()?;
        let m = self.m.context("--m is required")?;
        let chart = match self.chart.as_deref() {
            None => EvaluationCodeSpec::default_chart(&s)?,
            Some(c) => parse_chart(&s, c)?,
        };
        Ok(EvaluationCodeSpec::new(&s, m, chart)?)
    }
}

fn parse_chart(s: &Surface, text: &str) -> anyhow::Result<ChartChoice> {
    if let Some(i) = text.strip_prefix("tangent:") {
        let i: usize = i.parse()?;
        let p: &ProjectivePoint = s.points().get(i).context("point index out of range")?;
        return Ok(ChartChoice::Tangent(p.clone()));
    }
    if let Some(c) = text.strip_prefix("linear:") {
        let coeffs = c.split(',').map(|v| v.trim().parse()).collect::<Result<Vec<u16>, _>>()?;
        return Ok(ChartChoice::Linear(coeffs));
    }
    bail!("chart must be tangent:i or linear:a,b,...")
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Generator matrix of the code.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Generator matrix of the dual code.
    #[arg(long)]
    dual_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Exhaustive,
    Isd,
    Random,
}

#[derive(Args)]
struct DistanceArgs {
    /// Generator matrix file; otherwise the code is built from the flags.
    code_file: Option<PathBuf>,
    #[command(flatten)]
    code: CodeArgs,
    /// Use the dual of the code.
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value = "isd")]
    engine: Engine,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Zero the timing field so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    improved: bool,
    /// Class set as coefficient vectors, `;`-separated (`1,0;0,1;1,1`).
    #[arg(long)]
    classes: Option<String>,
    /// Explicit improved subset, same syntax.
    #[arg(long)]
    subset: Option<String>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// q4-quadrics, q8-quadrics, q16-quadrics, q9-cubic or rm.
    table: String,
    /// Cubic surface file for q9-cubic.
    #[arg(long)]
    surface: Option<PathBuf>,
    /// CSV with header `table,q,m,best_known`.
    #[arg(long)]
    reference: Option<PathBuf>,
    #[arg(long, default_value = "witness")]
    distances: String,
    #[arg(long, default_value_t = 1 << 24)]
    budget: u128,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Generic,
    EmptyPlane,
}

#[derive(Args)]
struct FindCubicArgs {
    #[arg(long)]
    q: u32,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "empty-plane")]
    family: Family,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    file: PathBuf,
    /// Fail unless the surface has this kind.
    #[arg(long)]
    expect: Option<String>,
    /// Search singular points over GF(q^k) for k up to this degree.
    #[arg(long, default_value_t = 2)]
    smooth_degree: u32,
}

/// `SURFACECODES_THREADS` wins over the flag.
fn workers(flag: usize) -> anyhow::Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{THREADS_ENV}={v}")),
        Err(_) => Ok(flag),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_classes(text: &str, rank: usize) -> anyhow::Result<Vec<DivisorClass>> {
    text.split(';')
        .map(|c| {
            let v = c.split(',').map(|x| x.trim().parse()).collect::<Result<Vec<i64>, _>>()?;
            if v.len() != rank {
                bail!("class `{c}` needs {rank} coefficients");
            }
            Ok(DivisorClass::new(v))
        })
        .collect()
}

fn build(a: BuildArgs) -> anyhow::Result<()> {
    let spec = a.code.spec()?;
    let code = build_functional_code(&spec)?;
    let dual = code.dual();
    if let Some(p) = &a.out {
        fs::write(p, code.generator().to_text())?;
    }
    if let Some(p) = &a.dual_out {
        fs::write(p, dual.generator().to_text())?;
    }
    let s = spec.surface();
    let summary = json!({
        "schema": 1,
        "surface": s.kind().name(),
        "q": s.field().order(),
        "m": spec.m(),
        "chart": spec.chart_form(),
        "length": code.length(),
        "dimension": code.dimension(),
        "dual_dimension": dual.dimension(),
    });
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

fn distance(a: DistanceArgs) -> anyhow::Result<()> {
    let (code, automorphisms) = match &a.code_file {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            (LinearCode::from_generator(&Matrix::from_text(&text, None)?)?, Vec::new())
        }
        None => {
            let spec = a.code.spec()?;
            (build_functional_code(&spec)?, chart_translations(&spec).unwrap_or_default())
        }
    };
    let code = if a.dual { code.dual() } else { code };
    let workers = workers(a.workers)?;
    let mut r = match a.engine {
        Engine::Exhaustive => min_distance_exhaustive(
            &code,
            &ExhaustiveOptions { budget: a.budget.unwrap_or(DEFAULT_EXHAUSTIVE_BUDGET), workers },
        )?,
        Engine::Isd => min_distance_isd(
            &code,
            &IsdOptions { target: a.target, budget: a.budget.unwrap_or(DEFAULT_ISD_BUDGET), workers, seed: a.seed, automorphisms },
        )?,
        Engine::Random => min_weight_random(
            &code,
            &RandomOptions { budget: a.budget.map_or(1000, |b| b as u64), seed: a.seed.max(1), p: 2 },
        )?,
    };
    if a.no_timing {
        r.millis = 0;
    }
    println!("{}", r.to_json());
    Ok(())
}

fn bounds(a: BoundsArgs) -> anyhow::Result<()> {
    let (lat, q) = if a.surface.surface.is_some() {
        let s = a.surface.load()?;
        let lat = s.picard().cloned().context("surface has no lattice (custom kind)")?;
        (lat, s.field().order())
    } else {
        let kind: SurfaceKind = a.surface.preset.as_deref().context("--preset is required")?.parse()?;
        (tables::preset_lattice(kind)?, a.surface.q.context("--q is required")?)
    };
    let classes = a.classes.as_deref().map(|c| parse_classes(c, lat.rank())).transpose()?;
    let subset = a.subset.as_deref().map(|c| parse_classes(c, lat.rank())).transpose()?;
    let report = if a.improved || subset.is_some() {
        bound_improved(&lat, q, a.m, classes.as_deref(), subset.as_deref())?
    } else {
        bound_basic(&lat, q, a.m, classes.as_deref())?
    };
    println!("{}", report.to_json());
    Ok(())
}

fn reproduce(a: ReproduceArgs) -> anyhow::Result<()> {
    let table: Table = a.table.parse()?;
    let surface = match &a.surface {
        Some(p) => Some(Surface::from_text(&fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?),
        None => None,
    };
    let reference = match &a.reference {
        Some(p) => tables::read_reference(&fs::read_to_string(p)?, table)?,
        None => Default::default(),
    };
    let opts = ReproduceOptions {
        distances: a.distances.parse::<DistanceMode>()?,
        budget: a.budget,
        workers: workers(a.workers)?,
        surface,
        reference,
    };
    let rows = tables::reproduce(table, &opts)?;
    emit(&a.out, &tables::to_csv(&rows))
}

fn find_cubic(a: FindCubicArgs) -> anyhow::Result<()> {
    let f = Field::of_order(a.q)?;
    let family = match a.family {
        Family::Generic => CubicFamily::Generic,
        Family::EmptyPlane => CubicFamily::EmptyPlane,
    };
    let r = find_cubic_no_lines(&f, a.budget, a.seed, family)?;
    if let Some(p) = &a.out {
        fs::write(p, r.surface.to_text())?;
    }
    let summary = json!({
        "schema": 1,
        "q": a.q,
        "seed": r.seed,
        "attempts": r.attempts,
        "points": r.surface.points().len(),
        "lines": r.surface.lines().len(),
        "empty_plane": r.empty_plane.as_ref().map(|h| h.to_string()),
        "smoothness": r.smoothness,
        "equation": r.surface.equation().map(|e| e.to_string()),
    });
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

/// Exit code 2 when the surface fails validation.
fn validate(a: ValidateArgs) -> anyhow::Result<i32> {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let s = Surface::from_text(&text)?;
    let smooth = s.smoothness_check(a.smooth_degree)?;
    let expected: Option<SurfaceKind> = a.expect.as_deref().map(str::parse).transpose()?;
    let kind_ok = expected.is_none_or(|k| k == s.kind());
    let summary = json!({
        "schema": 1,
        "kind": s.kind().name(),
        "q": s.field().order(),
        "points": s.points().len(),
        "lines": s.lines().len(),
        "empty_plane": s.find_empty_plane().map(|h| h.to_string()),
        "smoothness": smooth,
        "kind_matches": kind_ok,
    });
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(if kind_ok && smooth.passed() { 0 } else { 2 })
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => build(a).map(|_| 0),
        Command::Distance(a) => distance(a).map(|_| 0),
        Command::Bounds(a) => bounds(a).map(|_| 0),
        Command::Reproduce(a) => reproduce(a).map(|_| 0),
        Command::FindCubic(a) => find_cubic(a).map(|_| 0),
        Command::ValidateSurface(a) => validate(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
