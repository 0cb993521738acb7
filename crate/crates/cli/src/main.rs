use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use semidual_cli::bench::{
    run_sweep, stats_rows, write_bench_csv, write_bench_json, write_stats_csv, write_stats_json, Mismatch,
    SubdivisionArgs, Sweep, AGREEMENT_TOL,
};
use semidual_cli::io::{
    clipper_json, read_clipper, read_lines, read_region, region_json, write_lines, write_results, Clipper, InputError,
    Lines, Region,
};
use semidual_core::DEFAULT_MAX_ENTRIES;
use semidual_core::{
    build_clipper_2d, build_clipper_3d, clip_cyrus_beck_2d, clip_cyrus_beck_3d, clip_halfspace_oracle_2d,
    clip_halfspace_oracle_3d, gen_convex_polygon, gen_convex_polyhedron, gen_segments_2d, gen_segments_3d,
    recommend_subdivision, weighted_cost, ClipResult, CostModel, OpCounter, Subdivision, WorkloadSpec,
};

#[derive(Parser)]
#[command(name = "semidual", version, about = "Constant-time line clipping against convex polygons and polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random region (region.json) and segment set (lines.csv) into a directory
    Gen(GenArgs),
    /// Build a clipper for a region and save it
    Build(BuildArgs),
    /// Clip every segment of a lines file against a region
    Clip(ClipArgs),
    /// Sweep polygon clipping over N, M, Pr and subdivision
    #[command(name = "bench-e2")]
    BenchE2(BenchArgs),
    /// Sweep polyhedron clipping over facet count, M, Pr and subdivision
    #[command(name = "bench-e3")]
    BenchE3(BenchArgs),
    /// Report active list statistics for one or more subdivisions
    Stats(StatsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Cb,
    O1,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct GridFlags {
    #[arg(long)]
    nk: Option<usize>,
    #[arg(long)]
    nq: Option<usize>,
    #[arg(long)]
    nm: Option<usize>,
    #[arg(long)]
    np: Option<usize>,
}

impl GridFlags {
    fn args(&self) -> SubdivisionArgs {
        SubdivisionArgs { n_k: self.nk, n_q: self.nq, n_m: self.nm, n_p: self.np }
    }

    fn any(&self) -> bool {
        self.nk.is_some() || self.nq.is_some() || self.nm.is_some() || self.np.is_some()
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 2)]
    dim: u8,
    /// Polygon vertices or polyhedron facets
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    m: usize,
    #[arg(long, default_value_t = 0.5)]
    pr: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    extent: f64,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    region: PathBuf,
    #[command(flatten)]
    grid: GridFlags,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Where to write the clipper
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ClipArgs {
    #[arg(long)]
    region: PathBuf,
    #[arg(long)]
    lines: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::O1)]
    algo: Algo,
    /// Prebuilt clipper for `--algo o1`; built on the fly otherwise
    #[arg(long)]
    clipper: Option<PathBuf>,
    #[command(flatten)]
    grid: GridFlags,
    /// Also run the oracle and exit with status 3 on any disagreement
    #[arg(long)]
    verify: bool,
    /// Results file; standard output if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "10000")]
    m: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pr: Vec<f64>,
    /// Slope subdivision; a list sweeps it
    #[arg(long, value_delimiter = ',')]
    nk: Vec<usize>,
    /// Intercept subdivision; a list sweeps it
    #[arg(long, value_delimiter = ',')]
    nq: Vec<usize>,
    #[arg(long)]
    nm: Option<usize>,
    #[arg(long)]
    np: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    extent: f64,
    /// Add per-line wall-clock columns (not reproducible between runs)
    #[arg(long)]
    wall_clock: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Region file; otherwise one is generated from --dim, --n, --seed
    #[arg(long)]
    region: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    dim: u8,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    nk: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    nq: Vec<usize>,
    #[arg(long)]
    nm: Option<usize>,
    #[arg(long)]
    np: Option<usize>,
    /// Lines sampled for the candidate counts of a polyhedron
    #[arg(long, default_value_t = 1000)]
    m: usize,
    #[arg(long, default_value_t = 1.0)]
    pr: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    extent: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn sweep_points(nk: &[usize], nq: &[usize], nm: Option<usize>, np: Option<usize>) -> Vec<SubdivisionArgs> {
    let ks: Vec<Option<usize>> = if nk.is_empty() { vec![None] } else { nk.iter().map(|&k| Some(k)).collect() };
    let qs: Vec<Option<usize>> = if nq.is_empty() { vec![None] } else { nq.iter().map(|&q| Some(q)).collect() };
    ks.iter().flat_map(|&n_k| qs.iter().map(move |&n_q| SubdivisionArgs { n_k, n_q, n_m: nm, n_p: np })).collect()
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            Box::new(io::BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?))
        }
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn check_spec(spec: &WorkloadSpec) -> Result<()> {
    spec.validate().map_err(|e| InputError::new(Path::new("<arguments>"), e.to_string()))?;
    Ok(())
}

fn gen(a: &GenArgs) -> Result<()> {
    let spec = WorkloadSpec { dimension: a.dim, n: a.n, m: a.m, pr: a.pr, seed: a.seed, extent: a.extent };
    check_spec(&spec)?;
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let (region, lines) = if a.dim == 2 {
        let p = gen_convex_polygon(a.n, a.seed, a.extent);
        let l = gen_segments_2d(&p, a.m, a.pr, a.seed);
        (Region::Polygon(p), Lines::Planar(l))
    } else {
        let p = gen_convex_polyhedron(a.n, a.seed, a.extent)?;
        let l = gen_segments_3d(&p, a.m, a.pr, a.seed);
        (Region::Polyhedron(p), Lines::Spatial(l))
    };
    fs::write(a.out.join("region.json"), region_json(&region))?;
    let mut w = io::BufWriter::new(fs::File::create(a.out.join("lines.csv"))?);
    write_lines(&mut w, &lines)?;
    w.flush()?;
    Ok(())
}

/// Explicit flags win; otherwise polygons use the gap-based recommendation
/// and polyhedra the spatial adequate rule.
fn choose_subdivision(region: &Region, flags: &GridFlags) -> Subdivision {
    if flags.any() {
        return flags.args().resolve(region.dimension(), region.size());
    }
    match region {
        Region::Polygon(p) => recommend_subdivision(p, DEFAULT_MAX_ENTRIES / p.len() as u64).subdivision,
        Region::Polyhedron(_) => SubdivisionArgs::default().resolve(3, region.size()),
    }
}

fn build_for(region: &Region, sub: Subdivision) -> Result<Clipper> {
    Ok(match region {
        Region::Polygon(p) => Clipper::Planar(build_clipper_2d(p.clone(), sub)?),
        Region::Polyhedron(p) => Clipper::Spatial(build_clipper_3d(p.clone(), sub)?),
    })
}

fn build(a: &BuildArgs) -> Result<()> {
    let region = read_region(&a.region)?;
    let sub = choose_subdivision(&region, &a.grid);
    let clipper = build_for(&region, sub)?;
    fs::write(&a.out, clipper_json(&clipper)).with_context(|| format!("writing {}", a.out.display()))?;
    let model = CostModel::default();
    let rows = stats_rows(&region, &[sub_args(sub)], &[], &model)?;
    let mut w = output(None)?;
    match a.format {
        Format::Csv => write_stats_csv(&mut w, &rows)?,
        Format::Json => write_stats_json(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(())
}

fn sub_args(s: Subdivision) -> SubdivisionArgs {
    SubdivisionArgs { n_k: Some(s.n_k), n_q: Some(s.n_q), n_m: Some(s.n_m), n_p: Some(s.n_p) }
}

fn clip(a: &ClipArgs) -> Result<()> {
    let region = read_region(&a.region)?;
    let lines = read_lines(&a.lines)?;
    if lines.dimension() != region.dimension() && !lines.is_empty() {
        return Err(InputError::new(&a.lines, "lines and region have different dimensions").into());
    }
    let clipper = match (a.algo, &a.clipper) {
        (Algo::O1, Some(path)) => {
            let c = read_clipper(path)?;
            let same = match (&c, &region) {
                (Clipper::Planar(c), Region::Polygon(p)) => c.polygon() == p,
                (Clipper::Spatial(c), Region::Polyhedron(p)) => c.polyhedron() == p,
                _ => false,
            };
            if !same {
                return Err(InputError::new(path, "clipper was built for a different region").into());
            }
            Some(c)
        }
        (Algo::O1, None) => Some(build_for(&region, choose_subdivision(&region, &a.grid))?),
        _ => None,
    };
    let mut ops = OpCounter::new();
    let results: Vec<ClipResult> = match (&region, &lines) {
        (Region::Polygon(p), Lines::Planar(v)) => v
            .iter()
            .map(|s| match (&clipper, a.algo) {
                (Some(Clipper::Planar(c)), _) => c.clip(s, &mut ops),
                (_, Algo::Cb) => clip_cyrus_beck_2d(p, s, &mut ops),
                _ => clip_halfspace_oracle_2d(p, s),
            })
            .collect(),
        (Region::Polyhedron(p), Lines::Spatial(v)) => v
            .iter()
            .map(|s| match (&clipper, a.algo) {
                (Some(Clipper::Spatial(c)), _) => c.clip(s, &mut ops),
                (_, Algo::Cb) => clip_cyrus_beck_3d(p, s, &mut ops),
                _ => clip_halfspace_oracle_3d(p, s),
            })
            .collect(),
        _ => Vec::new(),
    };
    if a.verify {
        let expect: Vec<ClipResult> = match (&region, &lines) {
            (Region::Polygon(p), Lines::Planar(v)) => v.iter().map(|s| clip_halfspace_oracle_2d(p, s)).collect(),
            (Region::Polyhedron(p), Lines::Spatial(v)) => v.iter().map(|s| clip_halfspace_oracle_3d(p, s)).collect(),
            _ => Vec::new(),
        };
        for (i, (got, want)) in results.iter().zip(&expect).enumerate() {
            if !got.approx_eq(want, AGREEMENT_TOL) {
                let mut one = Vec::new();
                match &lines {
                    Lines::Planar(v) => write_lines(&mut one, &Lines::Planar(vec![v[i]]))?,
                    Lines::Spatial(v) => write_lines(&mut one, &Lines::Spatial(vec![v[i]]))?,
                }
                let line = String::from_utf8_lossy(&one).lines().nth(1).unwrap_or_default().to_string();
                return Err(Mismatch {
                    description: format!(
                        "line {i} ({line}): got {got:?}, oracle {want:?}; region\n{}",
                        region_json(&region)
                    ),
                }
                .into());
            }
        }
    }
    let mut w = output(a.out.as_deref())?;
    write_results(&mut w, &lines, &results)?;
    w.flush()?;
    if a.algo != Algo::Oracle {
        eprintln!("weighted cost {}", weighted_cost(&ops, &CostModel::default()));
    }
    Ok(())
}

fn bench(dim: u8, a: &BenchArgs) -> Result<()> {
    for &n in &a.n {
        for &m in &a.m {
            for &pr in &a.pr {
                check_spec(&WorkloadSpec { dimension: dim, n, m, pr, seed: a.seed, extent: a.extent })?;
            }
        }
    }
    let mut sweep = Sweep::new(dim, a.n.clone(), a.m.clone(), a.pr.clone());
    sweep.subdivisions = sweep_points(&a.nk, &a.nq, a.nm, a.np);
    sweep.seed = a.seed;
    sweep.extent = a.extent;
    sweep.wall_clock = a.wall_clock;
    let rows = run_sweep(&sweep)?;
    let mut w = output(a.out.as_deref())?;
    match a.format {
        Format::Csv => write_bench_csv(&mut w, &rows, a.wall_clock)?,
        Format::Json => write_bench_json(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(())
}

fn stats(a: &StatsArgs) -> Result<()> {
    let region = match (&a.region, a.n) {
        (Some(path), _) => read_region(path)?,
        (None, Some(n)) => {
            check_spec(&WorkloadSpec { dimension: a.dim, n, m: a.m.max(1), pr: a.pr, seed: a.seed, extent: a.extent })?;
            if a.dim == 2 {
                Region::Polygon(gen_convex_polygon(n, a.seed, a.extent))
            } else {
                Region::Polyhedron(gen_convex_polyhedron(n, a.seed, a.extent)?)
            }
        }
        (None, None) => bail!(InputError::new(Path::new("<arguments>"), "either --region or --n is required")),
    };
    let lines = match &region {
        Region::Polyhedron(p) if a.m > 0 => gen_segments_3d(p, a.m, a.pr, a.seed),
        _ => Vec::new(),
    };
    let rows = stats_rows(&region, &sweep_points(&a.nk, &a.nq, a.nm, a.np), &lines, &CostModel::default())?;
    let mut w = output(a.out.as_deref())?;
    match a.format {
        Format::Csv => write_stats_csv(&mut w, &rows)?,
        Format::Json => write_stats_json(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Build(a) => build(a),
        Command::Clip(a) => clip(a),
        Command::BenchE2(a) => bench(2, a),
        Command::BenchE3(a) => bench(3, a),
        Command::Stats(a) => stats(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else if e.downcast_ref::<Mismatch>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
