//! Constant-time clipping against a convex polyhedron.
//!
//! The polyhedron is projected to the `xy`, `xz` and `yz` planes; each
//! projection gets a `(k, q)` and an `(m, p)` grid whose cells store the
//! active facet list (AFL) as a bitmap, six grids in all:
//!
//! | branch | xy | xz | yz |
//! |--------|----|----|----|
//! | k, q   | 1  | 3  | 5  |
//! | m, p   | 2  | 4  | 6  |
//!
//! A line selects the two planes containing its dominant axis, looks up one
//! cell in each and ANDs the bitmaps. Only facets surviving the AND get the
//! exact line–triangle test.

use alloc::vec::Vec;

use crate::bitmap::{words_for, FacetBitmap};
use crate::counter::OpCounter;
use crate::error::GeomError;
use crate::geometry::{
    finish_interval, project_point, BoundingBox2, Branch, ClipResult, ConvexPolyhedron, LineRep, Plane, Point2, Point3,
    Segment3, PARALLEL_SIN,
};
use crate::grid::{points_interfere_counted, GridFrame, GridStats};
use crate::semidual2::{check_budget, padded_h, semidual_counted, BuildOptions, Subdivision, AEL_TOL_FACTOR};

/// Grid number of a plane/branch pair, `1..=6`: odd for `(k, q)`, even for `(m, p)`.
pub fn grid_number(plane: Plane, branch: Branch) -> u8 {
    let i = plane.index() as u8 + 1;
    match branch {
        Branch::KQ => 2 * i - 1,
        Branch::MP => 2 * i,
    }
}

/// The two projection planes containing the dominant axis of `d`
/// (ties prefer x, then y).
pub fn select_planes(d: Point3) -> Result<[Plane; 2], GeomError> {
    let (ax, ay, az) = (libm::fabs(d.x), libm::fabs(d.y), libm::fabs(d.z));
    if !(ax > 0.0 || ay > 0.0 || az > 0.0) {
        return Err(GeomError::ZeroDirection);
    }
    Ok(if ax >= ay && ax >= az {
        [Plane::XY, Plane::XZ]
    } else if ay >= az {
        [Plane::XY, Plane::YZ]
    } else {
        [Plane::XZ, Plane::YZ]
    })
}

/// Uniform subdivision `⌈3√F⌉` per axis, lowered if needed so the six
/// bitmaps fit in `max_entries` bits. Keeps the mean candidate count roughly
/// independent of the facet count on round polyhedra.
pub fn adequate_subdivision_3d(facets: usize, max_entries: u64) -> Subdivision {
    let want = libm::ceil(3.0 * libm::sqrt(facets as f64)) as usize;
    let fit = libm::floor(libm::sqrt(max_entries as f64 / (6.0 * facets.max(1) as f64))) as usize;
    Subdivision::uniform(want.min(fit).max(1))
}

/// Projected triangle interference: some line of the cell crosses or touches
/// the triangle (given in the box-centred frame of its plane).
pub fn facet_interferes_cell(tri: [Point2; 3], rect: &crate::grid::CellRect, branch: Branch, tol: f64) -> bool {
    crate::grid::points_interfere_cell(&tri, rect, branch, tol)
}

/// Per-facet data for the line–triangle test.
#[derive(Clone, Copy, Debug)]
struct FacetFrame {
    normal: Point3,
    corners: [Point3; 3],
    /// Unit vectors in the facet plane, perpendicular to each edge, pointing inward.
    inward: [Point3; 3],
}

impl FacetFrame {
    fn new(poly: &ConvexPolyhedron, f: usize) -> Self {
        let corners = poly.facet_vertices(f);
        let normal = poly.normal(f);
        let inward = core::array::from_fn(|k| {
            let e = corners[(k + 1) % 3] - corners[k];
            let v = normal.cross(e);
            v * (1.0 / v.norm())
        });
        FacetFrame { normal, corners, inward }
    }

    /// Parameter where the carrier line meets the facet, with `n·d`.
    fn hit(&self, p0: Point3, d: Point3, dlen: f64, eps: f64, ops: &mut OpCounter) -> Option<(f64, f64)> {
        let dn = self.normal.dot(d);
        ops.dot3();
        ops.mul(1);
        ops.compare(1);
        if libm::fabs(dn) <= PARALLEL_SIN * dlen {
            return None;
        }
        let t = self.normal.dot(self.corners[0] - p0) / dn;
        ops.addsub(3);
        ops.dot3();
        ops.div(1);
        let x = p0 + d * t;
        ops.mul(3);
        ops.addsub(3);
        ops.assign(5);
        for k in 0..3 {
            ops.addsub(3);
            ops.dot3();
            ops.compare(1);
            if self.inward[k].dot(x - self.corners[k]) < -eps {
                return None;
            }
        }
        Some((t, dn))
    }
}

/// Line–facet intersection parameter, if the carrier line meets the facet
/// triangle (edges and vertices included, within the region tolerance).
pub fn detail_test(poly: &ConvexPolyhedron, facet: usize, seg: &Segment3) -> Option<f64> {
    let d = seg.direction();
    FacetFrame::new(poly, facet).hit(seg.p0, d, d.norm(), poly.eps(), &mut OpCounter::new()).map(|(t, _)| t)
}

/// One semidual space whose cells hold facet bitmaps, stored contiguously.
#[derive(Clone, Debug, PartialEq)]
pub struct FacetGrid {
    frame: GridFrame,
    n_facets: usize,
    words_per_cell: usize,
    words: Vec<u64>,
}

impl FacetGrid {
    pub fn from_bitmaps(frame: GridFrame, n_facets: usize, cells: Vec<FacetBitmap>) -> Result<Self, GeomError> {
        if cells.len() != frame.cell_count() || cells.iter().any(|b| b.len() != n_facets) {
            return Err(GeomError::GridMismatch);
        }
        let words_per_cell = words_for(n_facets);
        let words = cells.iter().flat_map(|b| b.words().iter().copied()).collect();
        Ok(FacetGrid { frame, n_facets, words_per_cell, words })
    }

    pub fn frame(&self) -> &GridFrame {
        &self.frame
    }

    pub fn n_facets(&self) -> usize {
        self.n_facets
    }

    pub fn cell_words(&self, i: usize, j: usize) -> &[u64] {
        let c = self.frame.index(i, j) * self.words_per_cell;
        &self.words[c..c + self.words_per_cell]
    }

    pub fn bitmap(&self, i: usize, j: usize) -> FacetBitmap {
        FacetBitmap::from_words(self.n_facets, self.cell_words(i, j).to_vec()).expect("word count matches")
    }

    /// All cell bitmaps in row-major order.
    pub fn bitmaps(&self) -> impl Iterator<Item = FacetBitmap> + '_ {
        (0..self.frame.n_intercept).flat_map(move |i| (0..self.frame.n_slope).map(move |j| self.bitmap(i, j)))
    }

    pub fn stats(&self) -> GridStats {
        let wpc = self.words_per_cell.max(1);
        GridStats::from_lengths(self.words.chunks(wpc).map(|c| c.iter().map(|w| w.count_ones() as usize).sum()))
    }
}

/// Projection data for one coordinate plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneGrids {
    pub plane: Plane,
    pub bbox: BoundingBox2,
    pub kq: FacetGrid,
    pub mp: FacetGrid,
}

impl PlaneGrids {
    pub fn grid(&self, branch: Branch) -> &FacetGrid {
        match branch {
            Branch::KQ => &self.kq,
            Branch::MP => &self.mp,
        }
    }
}

/// Candidate facets of a line before and after the AND.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidates {
    pub planes: [Plane; 2],
    pub per_plane: [FacetBitmap; 2],
    pub omega: FacetBitmap,
}

/// Exact per-grid popcount statistics plus sampled candidate counts.
#[derive(Clone, Debug, PartialEq)]
pub struct AflStats {
    /// `(grid number, stats)` for grids 1..=6.
    pub grids: Vec<(u8, GridStats)>,
    pub sampled: usize,
    pub misses: usize,
    /// Mean of `(|Ω₁| + |Ω₂|) / 2` over sampled non-missing lines.
    pub mean_before: f64,
    /// Mean `|Ω₁ ∩ Ω₂|` over sampled non-missing lines.
    pub mean_after: f64,
    pub max_after: usize,
    pub prep_ops: OpCounter,
}

#[derive(Clone, Debug)]
pub struct SemidualClipper3D {
    poly: ConvexPolyhedron,
    planes: [PlaneGrids; 3],
    frames: Vec<FacetFrame>,
    eps: f64,
    prep_ops: OpCounter,
}

fn build_facet_grid(tris: &[[Point2; 3]], frame: GridFrame, tol: f64, ops: &mut OpCounter) -> FacetGrid {
    let n = tris.len();
    let wpc = words_for(n);
    let mut words = alloc::vec![0u64; wpc * frame.cell_count()];
    for i in 0..frame.n_intercept {
        for j in 0..frame.n_slope {
            let rect = frame.cell_rect(i, j);
            ops.mul(4);
            ops.div(4);
            ops.addsub(4);
            let base = frame.index(i, j) * wpc;
            for (f, tri) in tris.iter().enumerate() {
                if points_interfere_counted(tri, &rect, frame.branch, tol, ops) {
                    words[base + f / 64] |= 1 << (f % 64);
                    ops.assign(1);
                }
            }
        }
    }
    FacetGrid { frame, n_facets: n, words_per_cell: wpc, words }
}

fn projected_triangles(poly: &ConvexPolyhedron, plane: Plane, bbox: &BoundingBox2) -> Vec<[Point2; 3]> {
    (0..poly.facet_count()).map(|f| poly.facet_vertices(f).map(|v| bbox.to_local(project_point(v, plane)))).collect()
}

impl SemidualClipper3D {
    /// Builds all six grids; `n_k, n_q` apply to the `(k, q)` grids of every
    /// plane and `n_m, n_p` to the `(m, p)` grids.
    pub fn build(poly: ConvexPolyhedron, sub: Subdivision, opts: &BuildOptions) -> Result<Self, GeomError> {
        if !sub.is_valid() {
            return Err(GeomError::InvalidSubdivision);
        }
        let n = poly.facet_count();
        check_budget(
            (0..3).flat_map(|_| {
                Branch::ALL.iter().map(|&b| {
                    let (s, i) = sub.for_branch(b);
                    s.saturating_mul(i)
                })
            }),
            n,
            opts.max_entries,
        )?;
        let eps = poly.eps();
        let tol = AEL_TOL_FACTOR * eps;
        let mut ops = OpCounter::new();
        let mut build_plane = |plane: Plane| -> Result<PlaneGrids, GeomError> {
            let bbox = poly.projected_bbox(plane);
            let tris = projected_triangles(&poly, plane, &bbox);
            ops.addsub(6 * n as u64);
            let h = padded_h(&bbox, eps);
            let mut grid = |branch: Branch| -> Result<FacetGrid, GeomError> {
                let (ns, ni) = sub.for_branch(branch);
                Ok(build_facet_grid(&tris, GridFrame::new(branch, ns, ni, h)?, tol, &mut ops))
            };
            let kq = grid(Branch::KQ)?;
            let mp = grid(Branch::MP)?;
            Ok(PlaneGrids { plane, bbox, kq, mp })
        };
        let planes = [build_plane(Plane::XY)?, build_plane(Plane::XZ)?, build_plane(Plane::YZ)?];
        let frames = (0..n).map(|f| FacetFrame::new(&poly, f)).collect();
        Ok(SemidualClipper3D { poly, planes, frames, eps, prep_ops: ops })
    }

    /// Reassembles a clipper from stored grids (in plane order xy, xz, yz),
    /// verifying them against the polyhedron.
    pub fn from_parts(poly: ConvexPolyhedron, planes: [(FacetGrid, FacetGrid); 3]) -> Result<Self, GeomError> {
        let eps = poly.eps();
        let n = poly.facet_count();
        let mut out = Vec::with_capacity(3);
        for (plane, (kq, mp)) in Plane::ALL.into_iter().zip(planes) {
            let bbox = poly.projected_bbox(plane);
            let h = padded_h(&bbox, eps);
            for (g, b) in [(&kq, Branch::KQ), (&mp, Branch::MP)] {
                if g.frame.branch != b || g.frame.h != h || g.n_facets != n {
                    return Err(GeomError::GridMismatch);
                }
            }
            out.push(PlaneGrids { plane, bbox, kq, mp });
        }
        let planes: [PlaneGrids; 3] = out.try_into().map_err(|_| GeomError::GridMismatch)?;
        let frames = (0..n).map(|f| FacetFrame::new(&poly, f)).collect();
        Ok(SemidualClipper3D { poly, planes, frames, eps, prep_ops: OpCounter::new() })
    }

    pub fn polyhedron(&self) -> &ConvexPolyhedron {
        &self.poly
    }

    pub fn plane(&self, plane: Plane) -> &PlaneGrids {
        &self.planes[plane.index()]
    }

    /// Grid by its number `1..=6`.
    pub fn grid_by_number(&self, number: u8) -> Option<&FacetGrid> {
        if !(1..=6).contains(&number) {
            return None;
        }
        let p = &self.planes[((number - 1) / 2) as usize];
        Some(if number % 2 == 1 { &p.kq } else { &p.mp })
    }

    pub fn subdivision(&self) -> Subdivision {
        let p = &self.planes[0];
        Subdivision::new(p.kq.frame.n_slope, p.kq.frame.n_intercept, p.mp.frame.n_slope, p.mp.frame.n_intercept)
    }

    pub fn prep_ops(&self) -> OpCounter {
        self.prep_ops
    }

    /// Semidual coordinates of the segment projected to `plane`.
    pub fn line_rep(&self, plane: Plane, seg: &Segment3) -> LineRep {
        self.line_rep_counted(plane, seg, &mut OpCounter::new())
    }

    fn line_rep_counted(&self, plane: Plane, seg: &Segment3, ops: &mut OpCounter) -> LineRep {
        let bbox = &self.planes[plane.index()].bbox;
        let a = bbox.to_local(project_point(seg.p0, plane));
        let b = bbox.to_local(project_point(seg.p1, plane));
        ops.addsub(4);
        ops.assign(4);
        semidual_counted(a, b, ops)
    }

    fn cell_words_counted(&self, plane: Plane, seg: &Segment3, ops: &mut OpCounter) -> Option<&[u64]> {
        let rep = self.line_rep_counted(plane, seg, ops);
        let grid = self.planes[plane.index()].grid(rep.branch);
        grid.frame.locate_counted(&rep, ops).map(|(i, j)| grid.cell_words(i, j))
    }

    /// Per-plane candidates and their AND, or `None` when the line falls
    /// outside the intercept range of either selected plane.
    pub fn candidates(&self, seg: &Segment3) -> Option<Candidates> {
        let planes = select_planes(seg.direction()).expect("segment direction is nonzero");
        let mut ops = OpCounter::new();
        let a = self.cell_words_counted(planes[0], seg, &mut ops)?;
        let b = self.cell_words_counted(planes[1], seg, &mut ops)?;
        let n = self.poly.facet_count();
        let pa = FacetBitmap::from_words(n, a.to_vec()).expect("word count");
        let pb = FacetBitmap::from_words(n, b.to_vec()).expect("word count");
        let omega = pa.and(&pb);
        Some(Candidates { planes, per_plane: [pa, pb], omega })
    }

    /// The candidate set Ω, or `None` (miss).
    pub fn candidate_facets(&self, seg: &Segment3) -> Option<FacetBitmap> {
        self.candidates(seg).map(|c| c.omega)
    }

    pub fn clip(&self, seg: &Segment3, ops: &mut OpCounter) -> ClipResult {
        let d = seg.direction();
        ops.addsub(3);
        ops.assign(3);
        let (ax, ay, az) = (libm::fabs(d.x), libm::fabs(d.y), libm::fabs(d.z));
        ops.compare(3);
        ops.assign(2);
        let planes = if ax >= ay && ax >= az {
            [Plane::XY, Plane::XZ]
        } else if ay >= az {
            [Plane::XY, Plane::YZ]
        } else {
            [Plane::XZ, Plane::YZ]
        };
        let Some(a) = self.cell_words_counted(planes[0], seg, ops) else {
            return ClipResult::Empty;
        };
        let Some(b) = self.cell_words_counted(planes[1], seg, ops) else {
            return ClipResult::Empty;
        };
        self.detail_pass(seg, a, b, ops)
    }

    fn detail_pass(&self, seg: &Segment3, a: &[u64], b: &[u64], ops: &mut OpCounter) -> ClipResult {
        let d = seg.direction();
        let dlen = d.norm();
        ops.dot3();
        ops.div(1);
        let mut t_in = f64::NEG_INFINITY;
        let mut t_out = f64::INFINITY;
        let mut hits = 0u32;
        ops.assign(3);
        for (wi, (&x, &y)) in a.iter().zip(b).enumerate() {
            let mut w = x & y;
            ops.addsub(1);
            ops.assign(1);
            ops.compare(1);
            while w != 0 {
                let f = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                ops.addsub(2);
                ops.assign(2);
                ops.compare(1);
                let Some((t, dn)) = self.frames[f].hit(seg.p0, d, dlen, self.eps, ops) else {
                    continue;
                };
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
        }
        ops.compare(1);
        if hits == 0 {
            return ClipResult::Empty;
        }
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

    /// [`clip`](Self::clip) plus a brute-force check that every facet the
    /// carrier line meets is in Ω.
    pub fn clip_audited(&self, seg: &Segment3, ops: &mut OpCounter) -> Result<ClipResult, GeomError> {
        let result = self.clip(seg, ops);
        let omega = self.candidate_facets(seg);
        let d = seg.direction();
        let dlen = d.norm();
        for (f, frame) in self.frames.iter().enumerate() {
            let crossed = frame.hit(seg.p0, d, dlen, self.eps, &mut OpCounter::new()).is_some();
            if crossed && !omega.as_ref().is_some_and(|o| o.get(f)) {
                return Err(GeomError::AflNotConservative { facet: f });
            }
        }
        Ok(result)
    }

    pub fn afl_statistics(&self, sample: &[Segment3]) -> AflStats {
        let mut grids = Vec::with_capacity(6);
        for p in &self.planes {
            for b in Branch::ALL {
                grids.push((grid_number(p.plane, b), p.grid(b).stats()));
            }
        }
        let (mut sum_before, mut sum_after, mut max_after, mut misses) = (0usize, 0usize, 0usize, 0usize);
        for seg in sample {
            match self.candidates(seg) {
                None => misses += 1,
                Some(c) => {
                    sum_before += c.per_plane[0].count_ones() + c.per_plane[1].count_ones();
                    let after = c.omega.count_ones();
                    sum_after += after;
                    max_after = max_after.max(after);
                }
            }
        }
        let located = sample.len() - misses;
        let mean = |s: usize, k: f64| if located == 0 { 0.0 } else { s as f64 / (k * located as f64) };
        AflStats {
            grids,
            sampled: sample.len(),
            misses,
            mean_before: mean(sum_before, 2.0),
            mean_after: mean(sum_after, 1.0),
            max_after,
            prep_ops: self.prep_ops,
        }
    }
}

pub fn build_clipper_3d(poly: ConvexPolyhedron, sub: Subdivision) -> Result<SemidualClipper3D, GeomError> {
    SemidualClipper3D::build(poly, sub, &BuildOptions::default())
}

pub fn clip_o1_3d(clipper: &SemidualClipper3D, seg: &Segment3, ops: &mut OpCounter) -> ClipResult {
    clipper.clip(seg, ops)
}
