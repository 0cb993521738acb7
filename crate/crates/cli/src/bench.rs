//! Benchmark sweeps and grid statistics.
//!
//! Costs are weighted operation counts totalled over all lines of a sweep
//! point, so `v1 = cb / o1` and `v2 = cb / (o1 + prep)` compare whole runs.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use serde::Serialize;

use semidual_core::DEFAULT_MAX_ENTRIES;
use semidual_core::{
    adequate_subdivision_3d, build_clipper_2d, build_clipper_3d, clip_cyrus_beck_2d, clip_cyrus_beck_3d,
    clip_halfspace_oracle_2d, clip_halfspace_oracle_3d, gen_convex_polygon, gen_convex_polyhedron, gen_segments_2d,
    gen_segments_3d, weighted_cost, ClipResult, CostModel, GridStats, OpCounter, Subdivision,
};

use crate::io::{fmt_num, region_json, Region};

/// Parameter tolerance used when comparing clippers against the oracle.
pub const AGREEMENT_TOL: f64 = 1e-9;

/// Two algorithms returned different results for the same line.
/// The binary exits with status 3 on these.
#[derive(Debug)]
pub struct Mismatch {
    pub description: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algorithms disagree: {}", self.description)
    }
}

impl std::error::Error for Mismatch {}

/// Explicit subdivision counts; unset counts fall back to the adequate rule.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SubdivisionArgs {
    pub n_k: Option<usize>,
    pub n_q: Option<usize>,
    pub n_m: Option<usize>,
    pub n_p: Option<usize>,
}

impl SubdivisionArgs {
    /// Resolves against the default for a region of `n` edges or facets:
    /// `(N, 10N, N, 10N)` in the plane, the spatial adequate rule in space.
    /// `n_m` follows `n_k` and `n_p` follows `n_q` when unset; in space `n_q`
    /// also follows `n_k`.
    pub fn resolve(&self, dim: u8, n: usize) -> Subdivision {
        let d = if dim == 2 { Subdivision::adequate(n) } else { adequate_subdivision_3d(n, DEFAULT_MAX_ENTRIES) };
        // spatial grids are square unless told otherwise
        let q = self.n_q.or(if dim == 3 { self.n_k } else { None });
        Subdivision::new(
            self.n_k.unwrap_or(d.n_k),
            q.unwrap_or(d.n_q),
            self.n_m.or(self.n_k).unwrap_or(d.n_m),
            self.n_p.or(q).unwrap_or(d.n_p),
        )
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub dim: u8,
    pub ns: Vec<usize>,
    pub ms: Vec<usize>,
    pub prs: Vec<f64>,
    /// Each entry is one subdivision sweep point; an empty list means the default.
    pub subdivisions: Vec<SubdivisionArgs>,
    pub seed: u64,
    pub extent: f64,
    pub wall_clock: bool,
    pub model: CostModel,
}

impl Sweep {
    pub fn new(dim: u8, ns: Vec<usize>, ms: Vec<usize>, prs: Vec<f64>) -> Self {
        Sweep {
            dim,
            ns,
            ms,
            prs,
            subdivisions: Vec::new(),
            seed: 0,
            extent: 1.0,
            wall_clock: false,
            model: CostModel::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub dim: u8,
    pub n: usize,
    pub m: usize,
    pub pr: f64,
    pub seed: u64,
    pub n_k: usize,
    pub n_q: usize,
    pub n_m: usize,
    pub n_p: usize,
    pub prep_cost: f64,
    pub cb_cost: f64,
    pub o1_cost: f64,
    pub v1: f64,
    pub v2: f64,
    /// Mean active list length (2D) or bitmap popcount (3D) over all cells.
    pub mean_list: f64,
    pub max_list: usize,
    /// Mean per-plane candidate count before the AND, 3D only.
    pub mean_before: Option<f64>,
    /// Mean candidate count after the AND, 3D only.
    pub mean_after: Option<f64>,
    pub cb_ns_per_line: Option<f64>,
    pub o1_ns_per_line: Option<f64>,
}

impl BenchRow {
    fn finish(mut self) -> Self {
        self.v1 = self.cb_cost / self.o1_cost;
        self.v2 = self.cb_cost / (self.o1_cost + self.prep_cost);
        self
    }

    /// The efficiency columns are the ratios of the cost columns.
    pub fn identities_hold(&self) -> bool {
        self.v1 == self.cb_cost / self.o1_cost && self.v2 == self.cb_cost / (self.o1_cost + self.prep_cost)
    }
}

fn merged(stats: &[GridStats]) -> (f64, usize) {
    let cells: usize = stats.iter().map(|s| s.cells).sum();
    let total: f64 = stats.iter().map(|s| s.mean * s.cells as f64).sum();
    let max = stats.iter().map(|s| s.max).max().unwrap_or(0);
    (if cells == 0 { 0.0 } else { total / cells as f64 }, max)
}

fn compare(kind: &str, i: usize, got: &ClipResult, want: &ClipResult, region: &Region, line: String) -> Result<()> {
    if got.approx_eq(want, AGREEMENT_TOL) {
        return Ok(());
    }
    Err(Mismatch {
        description: format!(
            "{kind} gave {got:?}, oracle {want:?} for line {i} ({line}) against region\n{}",
            region_json(region)
        ),
    }
    .into())
}

fn time_it<T>(on: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let t = Instant::now();
    let r = f();
    (r, on.then(|| t.elapsed().as_nanos() as f64))
}

/// Runs every sweep point. Results of both clippers are checked against the
/// oracle; the first disagreement aborts the sweep with [`Mismatch`].
pub fn run_sweep(sweep: &Sweep) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let subs =
        if sweep.subdivisions.is_empty() { vec![SubdivisionArgs::default()] } else { sweep.subdivisions.clone() };
    for &n in &sweep.ns {
        for &m in &sweep.ms {
            for &pr in &sweep.prs {
                for sub in &subs {
                    rows.push(match sweep.dim {
                        2 => run_point_2d(sweep, n, m, pr, sub.resolve(2, n))?,
                        3 => run_point_3d(sweep, n, m, pr, sub.resolve(3, n))?,
                        d => anyhow::bail!("dimension {d} is not 2 or 3"),
                    });
                }
            }
        }
    }
    Ok(rows)
}

fn run_point_2d(sweep: &Sweep, n: usize, m: usize, pr: f64, sub: Subdivision) -> Result<BenchRow> {
    let poly = gen_convex_polygon(n, sweep.seed, sweep.extent);
    let segs = gen_segments_2d(&poly, m, pr, sweep.seed);
    let clipper = build_clipper_2d(poly.clone(), sub)?;
    let mut cb_ops = OpCounter::new();
    let (cb, cb_ns) = time_it(sweep.wall_clock, || {
        segs.iter().map(|s| clip_cyrus_beck_2d(&poly, s, &mut cb_ops)).collect::<Vec<_>>()
    });
    let mut o1_ops = OpCounter::new();
    let (o1, o1_ns) =
        time_it(sweep.wall_clock, || segs.iter().map(|s| clipper.clip(s, &mut o1_ops)).collect::<Vec<_>>());
    let region = Region::Polygon(poly.clone());
    for (i, s) in segs.iter().enumerate() {
        let want = clip_halfspace_oracle_2d(&poly, s);
        let line = format!("{},{},{},{}", s.p0.x, s.p0.y, s.p1.x, s.p1.y);
        compare("cb", i, &cb[i], &want, &region, line.clone())?;
        compare("o1", i, &o1[i], &want, &region, line)?;
    }
    let st = clipper.ael_statistics();
    let (mean_list, max_list) = merged(&[st.kq, st.mp]);
    let per_line = |ns: Option<f64>| ns.map(|t| t / m as f64);
    Ok(BenchRow {
        dim: 2,
        n,
        m,
        pr,
        seed: sweep.seed,
        n_k: sub.n_k,
        n_q: sub.n_q,
        n_m: sub.n_m,
        n_p: sub.n_p,
        prep_cost: weighted_cost(&clipper.prep_ops(), &sweep.model),
        cb_cost: weighted_cost(&cb_ops, &sweep.model),
        o1_cost: weighted_cost(&o1_ops, &sweep.model),
        v1: 0.0,
        v2: 0.0,
        mean_list,
        max_list,
        mean_before: None,
        mean_after: None,
        cb_ns_per_line: per_line(cb_ns),
        o1_ns_per_line: per_line(o1_ns),
    }
    .finish())
}

fn run_point_3d(sweep: &Sweep, n: usize, m: usize, pr: f64, sub: Subdivision) -> Result<BenchRow> {
    let poly = gen_convex_polyhedron(n, sweep.seed, sweep.extent)?;
    let segs = gen_segments_3d(&poly, m, pr, sweep.seed);
    let clipper = build_clipper_3d(poly.clone(), sub)?;
    let mut cb_ops = OpCounter::new();
    let (cb, cb_ns) = time_it(sweep.wall_clock, || {
        segs.iter().map(|s| clip_cyrus_beck_3d(&poly, s, &mut cb_ops)).collect::<Vec<_>>()
    });
    let mut o1_ops = OpCounter::new();
    let (o1, o1_ns) =
        time_it(sweep.wall_clock, || segs.iter().map(|s| clipper.clip(s, &mut o1_ops)).collect::<Vec<_>>());
    let region = Region::Polyhedron(poly.clone());
    for (i, s) in segs.iter().enumerate() {
        let want = clip_halfspace_oracle_3d(&poly, s);
        let line = format!("{},{},{},{},{},{}", s.p0.x, s.p0.y, s.p0.z, s.p1.x, s.p1.y, s.p1.z);
        compare("cb", i, &cb[i], &want, &region, line.clone())?;
        compare("o1", i, &o1[i], &want, &region, line)?;
    }
    let st = clipper.afl_statistics(&segs);
    let grids: Vec<GridStats> = st.grids.iter().map(|(_, g)| g.clone()).collect();
    let (mean_list, max_list) = merged(&grids);
    let per_line = |ns: Option<f64>| ns.map(|t| t / m as f64);
    Ok(BenchRow {
        dim: 3,
        n,
        m,
        pr,
        seed: sweep.seed,
        n_k: sub.n_k,
        n_q: sub.n_q,
        n_m: sub.n_m,
        n_p: sub.n_p,
        prep_cost: weighted_cost(&clipper.prep_ops(), &sweep.model),
        cb_cost: weighted_cost(&cb_ops, &sweep.model),
        o1_cost: weighted_cost(&o1_ops, &sweep.model),
        v1: 0.0,
        v2: 0.0,
        mean_list,
        max_list,
        mean_before: Some(st.mean_before),
        mean_after: Some(st.mean_after),
        cb_ns_per_line: per_line(cb_ns),
        o1_ns_per_line: per_line(o1_ns),
    }
    .finish())
}

pub const BENCH_HEADER: [&str; 18] = [
    "dim",
    "n",
    "m",
    "pr",
    "seed",
    "n_k",
    "n_q",
    "n_m",
    "n_p",
    "prep_cost",
    "cb_cost",
    "o1_cost",
    "v1",
    "v2",
    "mean_list",
    "max_list",
    "mean_before",
    "mean_after",
];

fn opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// Costs print exactly; ratios and means with six significant digits.
/// Wall-clock columns are appended only when the sweep measured them.
pub fn write_bench_csv(out: impl Write, rows: &[BenchRow], wall_clock: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = BENCH_HEADER.to_vec();
    if wall_clock {
        header.extend(["cb_ns_per_line", "o1_ns_per_line"]);
    }
    w.write_record(&header)?;
    for r in rows {
        anyhow::ensure!(r.identities_hold(), "efficiency columns out of sync with costs");
        let mut rec = vec![
            r.dim.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            fmt_num(r.pr),
            r.seed.to_string(),
            r.n_k.to_string(),
            r.n_q.to_string(),
            r.n_m.to_string(),
            r.n_p.to_string(),
            r.prep_cost.to_string(),
            r.cb_cost.to_string(),
            r.o1_cost.to_string(),
            fmt_num(r.v1),
            fmt_num(r.v2),
            fmt_num(r.mean_list),
            r.max_list.to_string(),
            opt(r.mean_before),
            opt(r.mean_after),
        ];
        if wall_clock {
            rec.extend([opt(r.cb_ns_per_line), opt(r.o1_ns_per_line)]);
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_bench_json(mut out: impl Write, rows: &[BenchRow]) -> Result<()> {
    for r in rows {
        anyhow::ensure!(r.identities_hold(), "efficiency columns out of sync with costs");
    }
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}

/// One line of a statistics report: one grid (`kq`, `mp`, or a spatial grid
/// number `1`..`6`), the union of all grids (`all`), or the sampled
/// candidate counts of a spatial clipper (`omega`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsRow {
    pub dim: u8,
    pub n: usize,
    pub n_k: usize,
    pub n_q: usize,
    pub n_m: usize,
    pub n_p: usize,
    pub grid: String,
    pub cells: usize,
    pub mean: f64,
    pub max: usize,
    pub prep_cost: f64,
}

/// Statistics for `region` at every subdivision; spatial regions also get an
/// `omega` row measured on `lines` (its `mean` is the count after the AND,
/// `max` the largest such count, and `cells` the number of located lines).
pub fn stats_rows(
    region: &Region,
    subs: &[SubdivisionArgs],
    lines: &[semidual_core::Segment3],
    model: &CostModel,
) -> Result<Vec<StatsRow>> {
    let n = region.size();
    let mut rows = Vec::new();
    for args in subs {
        let sub = args.resolve(region.dimension(), n);
        let row = |grid: String, st: &GridStats, prep: f64| StatsRow {
            dim: region.dimension(),
            n,
            n_k: sub.n_k,
            n_q: sub.n_q,
            n_m: sub.n_m,
            n_p: sub.n_p,
            grid,
            cells: st.cells,
            mean: st.mean,
            max: st.max,
            prep_cost: prep,
        };
        match region {
            Region::Polygon(p) => {
                let c = build_clipper_2d(p.clone(), sub)?;
                let st = c.ael_statistics();
                let prep = weighted_cost(&st.prep_ops, model);
                rows.push(row("kq".into(), &st.kq, prep));
                rows.push(row("mp".into(), &st.mp, prep));
                let (mean, max) = merged(&[st.kq.clone(), st.mp.clone()]);
                let all = GridStats { cells: st.kq.cells + st.mp.cells, mean, max, histogram: Vec::new() };
                rows.push(row("all".into(), &all, prep));
            }
            Region::Polyhedron(p) => {
                let c = build_clipper_3d(p.clone(), sub)?;
                let st = c.afl_statistics(lines);
                let prep = weighted_cost(&st.prep_ops, model);
                for (g, s) in &st.grids {
                    rows.push(row(g.to_string(), s, prep));
                }
                let grids: Vec<GridStats> = st.grids.iter().map(|(_, g)| g.clone()).collect();
                let (mean, max) = merged(&grids);
                let cells = grids.iter().map(|g| g.cells).sum();
                rows.push(row("all".into(), &GridStats { cells, mean, max, histogram: Vec::new() }, prep));
                let omega = GridStats {
                    cells: st.sampled - st.misses,
                    mean: st.mean_after,
                    max: st.max_after,
                    histogram: Vec::new(),
                };
                rows.push(row("omega".into(), &omega, prep));
                let before = GridStats { mean: st.mean_before, ..omega.clone() };
                rows.push(row("before".into(), &before, prep));
            }
        }
    }
    Ok(rows)
}

pub fn write_stats_csv(out: impl Write, rows: &[StatsRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["dim", "n", "n_k", "n_q", "n_m", "n_p", "grid", "cells", "mean", "max", "prep_cost"])?;
    for r in rows {
        w.write_record([
            r.dim.to_string(),
            r.n.to_string(),
            r.n_k.to_string(),
            r.n_q.to_string(),
            r.n_m.to_string(),
            r.n_p.to_string(),
            r.grid.clone(),
            r.cells.to_string(),
            fmt_num(r.mean),
            r.max.to_string(),
            r.prep_cost.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_stats_json(mut out: impl Write, rows: &[StatsRow]) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_defaults() {
        let a = SubdivisionArgs::default();
        assert_eq!(a.resolve(2, 10), Subdivision::new(10, 100, 10, 100));
        let a = SubdivisionArgs { n_k: Some(10), n_q: Some(50), ..Default::default() };
        assert_eq!(a.resolve(2, 4), Subdivision::new(10, 50, 10, 50));
        let a = SubdivisionArgs { n_k: Some(15), ..Default::default() };
        assert_eq!(a.resolve(3, 2112), Subdivision::uniform(15));
    }

    #[test]
    fn rows_satisfy_identities() {
        let mut s = Sweep::new(2, vec![3, 10], vec![200], vec![0.0, 1.0]);
        s.seed = 4;
        let rows = run_sweep(&s).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(BenchRow::identities_hold));
        let mut out = Vec::new();
        write_bench_csv(&mut out, &rows, false).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 5);
        for line in text.lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            let (prep, cb, o1): (f64, f64, f64) =
                (f[9].parse().unwrap(), f[10].parse().unwrap(), f[11].parse().unwrap());
            assert_eq!(f[12], fmt_num(cb / o1));
            assert_eq!(f[13], fmt_num(cb / (o1 + prep)));
        }
    }

    #[test]
    fn spatial_sweep_runs() {
        let s = Sweep::new(3, vec![12], vec![100], vec![0.5]);
        let rows = run_sweep(&s).unwrap();
        assert!(rows[0].mean_after.unwrap() <= rows[0].mean_before.unwrap());
    }
}
