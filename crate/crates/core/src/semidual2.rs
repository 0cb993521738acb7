//! Constant-time clipping against a convex polygon.
//!
//! Preprocessing subdivides both semidual spaces, `(k, q)` and `(m, p)`, into
//! rectangles and stores per rectangle the active edge list (AEL): every edge
//! crossed by at least one line whose coordinates fall in the rectangle. A
//! clip converts the segment's carrier line to semidual coordinates, finds its
//! rectangle in O(1) and only tests the edges of that list.

use alloc::vec::Vec;

use crate::counter::OpCounter;
use crate::error::GeomError;
use crate::geometry::{
    finish_interval, BoundingBox2, Branch, ClipResult, ConvexPolygon, LineRep, Point2, Segment2, PARALLEL_SIN,
};
use crate::grid::{points_interfere_counted, GridFrame, GridStats};

/// Default cap on stored list entries (summed over grids).
pub const DEFAULT_MAX_ENTRIES: u64 = 1 << 24;

/// Residual tolerance of the interference test, in units of the region's
/// geometric tolerance. Ordinate residuals overestimate perpendicular
/// distances by at most √2 for `|slope| <= 1`.
pub(crate) const AEL_TOL_FACTOR: f64 = 4.0;

/// Padding of the intercept range beyond `h`, in the same units.
pub(crate) const H_PAD_FACTOR: f64 = 4.0;

/// Subdivision counts of both semidual spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subdivision {
    pub n_k: usize,
    pub n_q: usize,
    pub n_m: usize,
    pub n_p: usize,
}

impl Subdivision {
    pub const fn new(n_k: usize, n_q: usize, n_m: usize, n_p: usize) -> Self {
        Subdivision { n_k, n_q, n_m, n_p }
    }

    pub const fn uniform(n: usize) -> Self {
        Subdivision { n_k: n, n_q: n, n_m: n, n_p: n }
    }

    /// Slope steps equal to the edge count, intercept steps ten times that.
    pub const fn adequate(edges: usize) -> Self {
        Subdivision { n_k: edges, n_q: 10 * edges, n_m: edges, n_p: 10 * edges }
    }

    /// `(n_slope, n_intercept)` for one branch.
    pub fn for_branch(&self, branch: Branch) -> (usize, usize) {
        match branch {
            Branch::KQ => (self.n_k, self.n_q),
            Branch::MP => (self.n_m, self.n_p),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.n_k >= 1 && self.n_q >= 1 && self.n_m >= 1 && self.n_p >= 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_entries: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_entries: DEFAULT_MAX_ENTRIES }
    }
}

/// Output of [`recommend_subdivision`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Recommendation {
    pub subdivision: Subdivision,
    /// Criteria `(k, q, m, p)` that had fewer than two distinct values and
    /// fell back to `N`.
    pub defaulted: [bool; 4],
    /// Some pair was scaled down to respect `max_cells`.
    pub capped: bool,
    /// The gaps the criteria were computed from: `Δk, Δy, Δm, Δx`.
    pub gaps: [Option<f64>; 4],
}

fn min_positive_gap(mut values: Vec<f64>) -> Option<f64> {
    values.sort_by(f64::total_cmp);
    values.windows(2).map(|w| w[1] - w[0]).filter(|&g| g > 0.0).min_by(f64::total_cmp)
}

/// Subdivision counts from the vertex-ordinate and edge-slope gaps:
/// `n_q = ⌈2a/Δy⌉ + 1`, `n_k = ⌈2/Δk⌉ + 1`, and symmetrically `n_p` from
/// `Δx`, `n_m` from `Δm`, where `a = max(half_x, half_y)`. Slope gaps only
/// consider edges of the same branch. Each `(slope, intercept)` pair is then
/// scaled down proportionally if its cell count exceeds `max_cells`.
pub fn recommend_subdivision(polygon: &ConvexPolygon, max_cells: u64) -> Recommendation {
    let n = polygon.len();
    let bbox = polygon.bbox();
    let a = bbox.half_x.max(bbox.half_y);
    let mut kq_slopes = Vec::new();
    let mut mp_slopes = Vec::new();
    for i in 0..n {
        let (p, q) = polygon.edge(i);
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        if libm::fabs(dy) <= libm::fabs(dx) {
            kq_slopes.push(dy / dx);
        } else {
            mp_slopes.push(dx / dy);
        }
    }
    let gaps = [
        min_positive_gap(kq_slopes),
        min_positive_gap(polygon.vertices().iter().map(|v| v.y).collect()),
        min_positive_gap(mp_slopes),
        min_positive_gap(polygon.vertices().iter().map(|v| v.x).collect()),
    ];
    let spans = [2.0, 2.0 * a, 2.0, 2.0 * a];
    let mut counts = [0usize; 4];
    let mut defaulted = [false; 4];
    for c in 0..4 {
        match gaps[c] {
            Some(g) => {
                let v = libm::ceil(spans[c] / g) + 1.0;
                counts[c] = if v >= usize::MAX as f64 { usize::MAX } else { v as usize };
            }
            None => {
                counts[c] = n;
                defaulted[c] = true;
            }
        }
    }
    let mut capped = false;
    let max_cells = max_cells.max(1);
    for (s, b) in [(0usize, 1usize), (2, 3)] {
        let cells = counts[s] as f64 * counts[b] as f64;
        if cells > max_cells as f64 {
            let f = libm::sqrt(max_cells as f64 / cells);
            counts[s] = (libm::floor(counts[s] as f64 * f) as usize).max(1);
            counts[b] = (libm::floor(counts[b] as f64 * f) as usize).max(1);
            // a pair this lopsided rounds one side up to 1; trim the other
            let limit = usize::try_from(max_cells).unwrap_or(usize::MAX);
            if counts[s].saturating_mul(counts[b]) > limit {
                if counts[s] == 1 {
                    counts[b] = limit;
                } else {
                    counts[s] = limit / counts[b];
                }
            }
            capped = true;
        }
    }
    Recommendation {
        subdivision: Subdivision::new(counts[0], counts[1], counts[2], counts[3]),
        defaulted,
        capped,
        gaps,
    }
}

/// One semidual space with an active edge list per cell, stored
/// contiguously (cell `c` owns `edges[offsets[c]..offsets[c + 1]]`).
#[derive(Clone, Debug, PartialEq)]
pub struct SemidualGrid {
    frame: GridFrame,
    offsets: Vec<u32>,
    edges: Vec<u32>,
}

impl SemidualGrid {
    /// Assembles a grid from per-cell lists (row-major), checking that every
    /// list is sorted, duplicate-free and within `0..n_edges`.
    pub fn from_lists(frame: GridFrame, lists: Vec<Vec<u32>>, n_edges: usize) -> Result<Self, GeomError> {
        if lists.len() != frame.cell_count() {
            return Err(GeomError::GridMismatch);
        }
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut edges = Vec::new();
        offsets.push(0);
        for list in lists {
            if list.windows(2).any(|w| w[0] >= w[1]) || list.iter().any(|&e| e as usize >= n_edges) {
                return Err(GeomError::GridMismatch);
            }
            edges.extend_from_slice(&list);
            offsets.push(u32::try_from(edges.len()).map_err(|_| GeomError::GridMismatch)?);
        }
        Ok(SemidualGrid { frame, offsets, edges })
    }

    pub fn frame(&self) -> &GridFrame {
        &self.frame
    }

    pub fn ael(&self, i: usize, j: usize) -> &[u32] {
        let c = self.frame.index(i, j);
        &self.edges[self.offsets[c] as usize..self.offsets[c + 1] as usize]
    }

    /// All lists in row-major order.
    pub fn lists(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.offsets.windows(2).map(move |w| &self.edges[w[0] as usize..w[1] as usize])
    }

    pub fn total_entries(&self) -> usize {
        self.edges.len()
    }

    pub fn stats(&self) -> GridStats {
        GridStats::from_lengths(self.lists().map(|l| l.len()))
    }
}

/// Per-grid AEL statistics plus the counted preprocessing work.
#[derive(Clone, Debug, PartialEq)]
pub struct AelStats {
    pub kq: GridStats,
    pub mp: GridStats,
    pub prep_ops: OpCounter,
}

/// Polygon plus its two semidual grids.
#[derive(Clone, Debug)]
pub struct SemidualClipper2D {
    polygon: ConvexPolygon,
    bbox: BoundingBox2,
    grids: [SemidualGrid; 2],
    local: Vec<Point2>,
    eps: f64,
    prep_ops: OpCounter,
}

fn local_vertices(polygon: &ConvexPolygon) -> Vec<Point2> {
    polygon.vertices().iter().map(|&v| polygon.bbox().to_local(v)).collect()
}

pub(crate) fn padded_h(bbox: &BoundingBox2, eps: f64) -> f64 {
    bbox.h + H_PAD_FACTOR * eps
}

pub(crate) fn check_budget(cells: impl Iterator<Item = usize>, items: usize, budget: u64) -> Result<(), GeomError> {
    let entries = cells.fold(0u64, |acc, c| acc.saturating_add((c as u64).saturating_mul(items as u64)));
    if entries > budget {
        return Err(GeomError::SubdivisionTooFine { entries, budget });
    }
    Ok(())
}

fn build_grid(local: &[Point2], frame: GridFrame, tol: f64, ops: &mut OpCounter) -> SemidualGrid {
    let n = local.len();
    let mut offsets = Vec::with_capacity(frame.cell_count() + 1);
    let mut edges = Vec::new();
    offsets.push(0u32);
    for i in 0..frame.n_intercept {
        for j in 0..frame.n_slope {
            let rect = frame.cell_rect(i, j);
            ops.mul(4);
            ops.div(4);
            ops.addsub(4);
            for e in 0..n {
                let pts = [local[e], local[(e + 1) % n]];
                if points_interfere_counted(&pts, &rect, frame.branch, tol, ops) {
                    edges.push(e as u32);
                    ops.assign(1);
                }
            }
            offsets.push(edges.len() as u32);
        }
    }
    SemidualGrid { frame, offsets, edges }
}

impl SemidualClipper2D {
    pub fn build(polygon: ConvexPolygon, sub: Subdivision, opts: &BuildOptions) -> Result<Self, GeomError> {
        if !sub.is_valid() {
            return Err(GeomError::InvalidSubdivision);
        }
        let n = polygon.len();
        check_budget(
            Branch::ALL.iter().map(|&b| {
                let (s, i) = sub.for_branch(b);
                s.saturating_mul(i)
            }),
            n,
            opts.max_entries,
        )?;
        let bbox = *polygon.bbox();
        let eps = polygon.eps();
        let local = local_vertices(&polygon);
        let h = padded_h(&bbox, eps);
        let mut ops = OpCounter::new();
        ops.addsub(2 * n as u64);
        let mut make = |branch: Branch| -> Result<SemidualGrid, GeomError> {
            let (ns, ni) = sub.for_branch(branch);
            let frame = GridFrame::new(branch, ns, ni, h)?;
            Ok(build_grid(&local, frame, AEL_TOL_FACTOR * eps, &mut ops))
        };
        let grids = [make(Branch::KQ)?, make(Branch::MP)?];
        Ok(SemidualClipper2D { polygon, bbox, grids, local, eps, prep_ops: ops })
    }

    /// Reassembles a clipper from stored grids, verifying that they were
    /// built for this polygon's bounding box.
    pub fn from_parts(polygon: ConvexPolygon, kq: SemidualGrid, mp: SemidualGrid) -> Result<Self, GeomError> {
        let bbox = *polygon.bbox();
        let eps = polygon.eps();
        let h = padded_h(&bbox, eps);
        for (g, b) in [(&kq, Branch::KQ), (&mp, Branch::MP)] {
            if g.frame.branch != b || g.frame.h != h || g.edges.iter().any(|&e| e as usize >= polygon.len()) {
                return Err(GeomError::GridMismatch);
            }
        }
        let local = local_vertices(&polygon);
        Ok(SemidualClipper2D { polygon, bbox, grids: [kq, mp], local, eps, prep_ops: OpCounter::new() })
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    pub fn bbox(&self) -> &BoundingBox2 {
        &self.bbox
    }

    pub fn grid(&self, branch: Branch) -> &SemidualGrid {
        match branch {
            Branch::KQ => &self.grids[0],
            Branch::MP => &self.grids[1],
        }
    }

    pub fn subdivision(&self) -> Subdivision {
        let (k, q) = (self.grids[0].frame.n_slope, self.grids[0].frame.n_intercept);
        let (m, p) = (self.grids[1].frame.n_slope, self.grids[1].frame.n_intercept);
        Subdivision::new(k, q, m, p)
    }

    /// Operations counted while building the grids (zero for reloaded clippers).
    pub fn prep_ops(&self) -> OpCounter {
        self.prep_ops
    }

    /// Polygon vertices in the box-centred frame.
    pub fn local_vertices(&self) -> &[Point2] {
        &self.local
    }

    /// Semidual coordinates of the segment's carrier line in the box-centred frame.
    pub fn line_rep(&self, seg: &Segment2) -> LineRep {
        self.line_rep_counted(seg, &mut OpCounter::new())
    }

    fn line_rep_counted(&self, seg: &Segment2, ops: &mut OpCounter) -> LineRep {
        let p0 = self.bbox.to_local(seg.p0);
        let p1 = self.bbox.to_local(seg.p1);
        ops.addsub(4);
        ops.assign(2);
        semidual_counted(p0, p1, ops)
    }

    /// Cell `(branch, i, j)` holding the segment's carrier line, `None` if out of range.
    pub fn locate(&self, seg: &Segment2) -> Option<(Branch, usize, usize)> {
        let rep = self.line_rep(seg);
        self.grid(rep.branch).frame.locate_cell(&rep).map(|(i, j)| (rep.branch, i, j))
    }

    pub fn clip(&self, seg: &Segment2, ops: &mut OpCounter) -> ClipResult {
        let rep = self.line_rep_counted(seg, ops);
        let grid = self.grid(rep.branch);
        match grid.frame.locate_counted(&rep, ops) {
            None => ClipResult::Empty,
            Some((i, j)) => self.clip_edges(seg, grid.ael(i, j), ops),
        }
    }

    /// [`clip`](Self::clip) followed by a brute-force check that every edge
    /// the line crosses is in the AEL that was used.
    pub fn clip_audited(&self, seg: &Segment2, ops: &mut OpCounter) -> Result<ClipResult, GeomError> {
        let result = self.clip(seg, ops);
        let ael = self.locate(seg).map(|(b, i, j)| self.grid(b).ael(i, j)).unwrap_or(&[]);
        let d = seg.direction();
        let tol = self.eps * d.norm();
        for e in 0..self.polygon.len() {
            let (a, b) = self.polygon.edge(e);
            if crosses(d, seg.p0, a, b, tol) && !ael.contains(&(e as u32)) {
                return Err(GeomError::AelNotConservative { edge: e });
            }
        }
        Ok(result)
    }

    /// Intersects the carrier line with the listed edges only.
    fn clip_edges(&self, seg: &Segment2, edges: &[u32], ops: &mut OpCounter) -> ClipResult {
        let p0 = seg.p0;
        let d = seg.direction();
        ops.addsub(2);
        ops.assign(2);
        let dlen = d.norm();
        ops.dot2();
        ops.div(1);
        let tol = self.eps * dlen;
        ops.mul(1);
        let mut t_in = f64::NEG_INFINITY;
        let mut t_out = f64::INFINITY;
        let mut hits = 0u32;
        ops.assign(3);
        let verts = self.polygon.vertices();
        let n = verts.len();
        for &e in edges {
            let e = e as usize;
            let a = verts[e];
            let b = verts[(e + 1) % n];
            ops.assign(2);
            // 2 subtractions, 2 products, 1 difference per endpoint
            ops.addsub(6);
            ops.mul(4);
            ops.compare(4);
            if !crosses(d, p0, a, b, tol) {
                continue;
            }
            let nrm = self.polygon.normal(e);
            let dn = nrm.dot(d);
            ops.dot2();
            ops.mul(1);
            ops.compare(1);
            if libm::fabs(dn) <= PARALLEL_SIN * dlen {
                continue;
            }
            let t = nrm.dot(a - p0) / dn;
            ops.addsub(2);
            ops.dot2();
            ops.div(1);
            ops.assign(1);
            hits += 1;
            ops.addsub(1);
            ops.compare(2);
            if dn < 0.0 {
                if t > t_in {
                    t_in = t;
                    ops.assign(1);
                }
            } else if t < t_out {
                t_out = t;
                ops.assign(1);
            }
        }
        ops.compare(1);
        if hits == 0 {
            return ClipResult::Empty;
        }
        // a lone tangency may report only one side
        ops.compare(2);
        if t_in == f64::NEG_INFINITY {
            t_in = t_out;
        } else if t_out == f64::INFINITY {
            t_out = t_in;
        }
        ops.div(1);
        ops.compare(3);
        finish_interval(t_in, t_out, self.eps / dlen)
    }

    pub fn ael_statistics(&self) -> AelStats {
        AelStats { kq: self.grids[0].stats(), mp: self.grids[1].stats(), prep_ops: self.prep_ops }
    }
}

/// Carrier line of `d` through `p0` touches edge `a–b`: the endpoints are not
/// both farther than `tol / |d|` on the same side.
#[inline]
fn crosses(d: Point2, p0: Point2, a: Point2, b: Point2, tol: f64) -> bool {
    let sa = d.cross(a - p0);
    let sb = d.cross(b - p0);
    !((sa > tol && sb > tol) || (sa < -tol && sb < -tol))
}

pub(crate) fn semidual_counted(p0: Point2, p1: Point2, ops: &mut OpCounter) -> LineRep {
    let dx = p1.x - p0.x;
    let dy = p1.y - p0.y;
    ops.addsub(3);
    ops.compare(1);
    ops.div(1);
    ops.mul(1);
    ops.assign(3);
    if libm::fabs(dy) <= libm::fabs(dx) {
        let k = dy / dx;
        LineRep { branch: Branch::KQ, slope: k, intercept: p0.y - k * p0.x }
    } else {
        let m = dx / dy;
        LineRep { branch: Branch::MP, slope: m, intercept: p0.x - m * p0.y }
    }
}

pub fn build_clipper_2d(polygon: ConvexPolygon, sub: Subdivision) -> Result<SemidualClipper2D, GeomError> {
    SemidualClipper2D::build(polygon, sub, &BuildOptions::default())
}

pub fn clip_o1_2d(clipper: &SemidualClipper2D, seg: &Segment2, ops: &mut OpCounter) -> ClipResult {
    clipper.clip(seg, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{regular_polygon, unit_square};
    use crate::oracle::clip_halfspace_oracle_2d;
    use alloc::vec;

    fn seg(a: (f64, f64), b: (f64, f64)) -> Segment2 {
        Segment2::new(Point2::new(a.0, a.1), Point2::new(b.0, b.1)).unwrap()
    }

    #[test]
    fn square_examples() {
        let c = build_clipper_2d(unit_square(), Subdivision::uniform(4)).unwrap();
        let mut ops = OpCounter::new();
        let r = clip_o1_2d(&c, &seg((-2.0, 0.0), (2.0, 0.0)), &mut ops);
        assert_eq!(r.interval(), Some((0.25, 0.75)));
        assert!(clip_o1_2d(&c, &seg((-2.0, 3.0), (2.0, 3.0)), &mut ops).is_empty());
        assert_eq!(clip_o1_2d(&c, &seg((-0.5, 0.0), (0.5, 0.0)), &mut ops).interval(), Some((0.0, 1.0)));
    }

    #[test]
    fn triangle_recommendation() {
        let tri =
            ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(4.0, 1.0), Point2::new(1.0, 3.0)]).unwrap();
        let r = recommend_subdivision(&tri, u64::MAX);
        assert_eq!(r.gaps[1], Some(1.0));
        // a = max(2, 1.5) = 2, so 2a/Δy = 4
        assert_eq!(r.subdivision.n_q, 5);
        assert!(!r.capped);
    }

    #[test]
    fn square_recommendation_defaults_slope() {
        let r = recommend_subdivision(&unit_square(), u64::MAX);
        assert!(r.defaulted[0] && r.defaulted[2]);
        assert_eq!(r.subdivision.n_k, 4);
        assert_eq!(r.subdivision.n_m, 4);
        assert_eq!(r.subdivision.n_q, 2);
    }

    #[test]
    fn recommendation_is_capped() {
        let p = regular_polygon(40, 1.0, 0.123);
        let r = recommend_subdivision(&p, 1000);
        assert!(r.capped);
        let s = r.subdivision;
        assert!(s.n_k.saturating_mul(s.n_q) <= 1000 && s.n_m.saturating_mul(s.n_p) <= 1000, "{s:?}");
        assert!(s.n_k * s.n_q <= 1000 && s.n_m * s.n_p <= 1000);
        assert!(s.n_k >= 1 && s.n_q >= 1);
    }

    #[test]
    fn adequate_for_ten_gon() {
        assert_eq!(Subdivision::adequate(10), Subdivision::new(10, 100, 10, 100));
    }

    #[test]
    fn single_cell_holds_all_edges() {
        let p = regular_polygon(7, 2.0, 0.3);
        let c = build_clipper_2d(p, Subdivision::uniform(1)).unwrap();
        let s = c.ael_statistics();
        assert_eq!((s.kq.max, s.kq.mean), (7, 7.0));
        assert_eq!((s.mp.max, s.mp.mean), (7, 7.0));
        assert!(s.prep_ops.total() > 0);
    }

    #[test]
    fn budget_is_enforced() {
        let p = regular_polygon(10, 1.0, 0.0);
        let err =
            SemidualClipper2D::build(p, Subdivision::uniform(100), &BuildOptions { max_entries: 1000 }).unwrap_err();
        assert!(matches!(err, GeomError::SubdivisionTooFine { .. }));
        assert_eq!(
            build_clipper_2d(unit_square(), Subdivision::new(0, 1, 1, 1)).unwrap_err(),
            GeomError::InvalidSubdivision
        );
    }

    #[test]
    fn vertex_tangent_is_degenerate() {
        let c = build_clipper_2d(unit_square(), Subdivision::uniform(8)).unwrap();
        // y = -x + 2 touches the corner (1, 1)
        let s = seg((-1.0, 3.0), (3.0, -1.0));
        let r = c.clip(&s, &mut OpCounter::new());
        let o = clip_halfspace_oracle_2d(c.polygon(), &s);
        let (a, b) = r.interval().unwrap();
        assert!((a - 0.5).abs() < 1e-12 && a == b);
        assert!(r.approx_eq(&o, 1e-12));
    }

    #[test]
    fn audited_clip_agrees() {
        let c = build_clipper_2d(regular_polygon(9, 1.0, 0.2), Subdivision::new(5, 20, 5, 20)).unwrap();
        for k in 0..50 {
            let a = k as f64 * 0.37;
            let s = seg((2.0 * libm::cos(a), 1.7 * libm::sin(a)), (-1.5 * libm::sin(a * 1.3), 0.4 - libm::cos(a)));
            let r = c.clip_audited(&s, &mut OpCounter::new()).unwrap();
            assert!(r.approx_eq(&clip_halfspace_oracle_2d(c.polygon(), &s), 1e-12));
        }
    }

    #[test]
    fn from_parts_round_trip() {
        let c = build_clipper_2d(regular_polygon(6, 1.0, 0.1), Subdivision::new(3, 7, 4, 5)).unwrap();
        let lists = |b| c.grid(b).lists().map(|l| l.to_vec()).collect::<Vec<_>>();
        let kq = SemidualGrid::from_lists(*c.grid(Branch::KQ).frame(), lists(Branch::KQ), 6).unwrap();
        let mp = SemidualGrid::from_lists(*c.grid(Branch::MP).frame(), lists(Branch::MP), 6).unwrap();
        let c2 = SemidualClipper2D::from_parts(c.polygon().clone(), kq.clone(), mp.clone()).unwrap();
        assert_eq!(c2.grid(Branch::KQ), c.grid(Branch::KQ));
        assert_eq!(c2.subdivision(), Subdivision::new(3, 7, 4, 5));
        // grids swapped
        assert!(SemidualClipper2D::from_parts(c.polygon().clone(), mp, kq).is_err());
    }
}
