//! Rectangular subdivision of one semidual space and the cell/primitive
//! interference predicate shared by the polygon and polyhedron clippers.

use alloc::vec::Vec;

use crate::counter::OpCounter;
use crate::error::GeomError;
use crate::geometry::{Branch, LineRep, Point2};

/// Closed rectangle `[slope_lo, slope_hi] × [intercept_lo, intercept_hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CellRect {
    pub slope_lo: f64,
    pub slope_hi: f64,
    pub intercept_lo: f64,
    pub intercept_hi: f64,
}

/// Geometry of a semidual grid: slope range `[-1, 1]` split into `n_slope`
/// columns, intercept range `[-h, h]` into `n_intercept` rows.
///
/// Cell `(i, j)` is row `i` (intercept), column `j` (slope).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridFrame {
    pub branch: Branch,
    pub n_slope: usize,
    pub n_intercept: usize,
    pub h: f64,
}

impl GridFrame {
    pub fn new(branch: Branch, n_slope: usize, n_intercept: usize, h: f64) -> Result<Self, GeomError> {
        if n_slope == 0 || n_intercept == 0 || n_slope > u32::MAX as usize || n_intercept > u32::MAX as usize {
            return Err(GeomError::InvalidSubdivision);
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(GeomError::DegenerateExtent);
        }
        Ok(GridFrame { branch, n_slope, n_intercept, h })
    }

    pub fn cell_count(&self) -> usize {
        self.n_slope * self.n_intercept
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n_slope + j
    }

    /// Cell bounds. Boundaries are computed from the ratio `j / n`, so a grid
    /// with doubled counts shares its boundaries bit-for-bit with its parent.
    pub fn cell_rect(&self, i: usize, j: usize) -> CellRect {
        let s = |k: usize| -1.0 + 2.0 * (k as f64 / self.n_slope as f64);
        let b = |k: usize| -self.h + 2.0 * self.h * (k as f64 / self.n_intercept as f64);
        CellRect { slope_lo: s(j), slope_hi: s(j + 1), intercept_lo: b(i), intercept_hi: b(i + 1) }
    }

    /// Row/column of the cell holding `rep`, or `None` when `|intercept| > h`
    /// (the line misses the bounding box).
    pub fn locate_cell(&self, rep: &LineRep) -> Option<(usize, usize)> {
        self.locate_counted(rep, &mut OpCounter::new())
    }

    pub(crate) fn locate_counted(&self, rep: &LineRep, ops: &mut OpCounter) -> Option<(usize, usize)> {
        debug_assert_eq!(rep.branch, self.branch);
        ops.compare(1);
        if !(libm::fabs(rep.intercept) <= self.h) {
            return None;
        }
        let fi = libm::floor((rep.intercept + self.h) * self.n_intercept as f64 / (2.0 * self.h));
        let fj = libm::floor((rep.slope + 1.0) * self.n_slope as f64 / 2.0);
        ops.addsub(2);
        ops.mul(3);
        ops.div(4);
        ops.compare(4);
        ops.assign(2);
        let clamp = |v: f64, n: usize| {
            if v <= 0.0 {
                0
            } else if v >= (n - 1) as f64 {
                n - 1
            } else {
                v as usize
            }
        };
        Some((clamp(fi, self.n_intercept), clamp(fj, self.n_slope)))
    }
}

/// Whether some line of the cell passes within `tol` (measured along the
/// ordinate of the branch frame) of the convex hull of `points`.
///
/// The residual `r = c - s·d - b` of a point `(d, c)` is affine in the line
/// coordinates `(s, b)`, so over the cell it is extremal at the corners. The
/// hull misses every line of the cell iff all residuals keep one strict sign
/// over the whole cell; otherwise some line of the cell touches it. Points
/// are given in the branch frame of the box-centred coordinates.
pub fn points_interfere_cell(points: &[Point2], rect: &CellRect, branch: Branch, tol: f64) -> bool {
    points_interfere_counted(points, rect, branch, tol, &mut OpCounter::new())
}

pub(crate) fn points_interfere_counted(
    points: &[Point2],
    rect: &CellRect,
    branch: Branch,
    tol: f64,
    ops: &mut OpCounter,
) -> bool {
    let mut all_above = true;
    let mut all_below = true;
    for &p in points {
        let (d, c) = branch.frame(p);
        let a = rect.slope_lo * d;
        let b = rect.slope_hi * d;
        let (sd_min, sd_max) = if a <= b { (a, b) } else { (b, a) };
        let r_min = c - rect.intercept_hi - sd_max;
        let r_max = c - rect.intercept_lo - sd_min;
        ops.mul(2);
        ops.compare(3);
        ops.addsub(4);
        ops.assign(2);
        all_above &= r_min > tol;
        all_below &= r_max < -tol;
        if !all_above && !all_below {
            return true;
        }
    }
    false
}

/// Edge test: some line of the cell crosses (or touches) the edge `a–b`.
pub fn edge_interferes_cell(a: Point2, b: Point2, rect: &CellRect, branch: Branch, tol: f64) -> bool {
    points_interfere_cell(&[a, b], rect, branch, tol)
}

/// Distribution of list lengths (or bitmap popcounts) over a grid's cells.
#[derive(Clone, Debug, PartialEq)]
pub struct GridStats {
    pub cells: usize,
    pub mean: f64,
    pub max: usize,
    /// `histogram[n]` = number of cells holding exactly `n` entries.
    pub histogram: Vec<u64>,
}

impl GridStats {
    pub fn from_lengths(lengths: impl Iterator<Item = usize>) -> Self {
        let mut histogram: Vec<u64> = Vec::new();
        let mut total = 0usize;
        let mut cells = 0usize;
        for n in lengths {
            if histogram.len() <= n {
                histogram.resize(n + 1, 0);
            }
            histogram[n] += 1;
            total += n;
            cells += 1;
        }
        GridStats {
            cells,
            mean: if cells == 0 { 0.0 } else { total as f64 / cells as f64 },
            max: histogram.len().saturating_sub(1),
            histogram,
        }
    }
}
