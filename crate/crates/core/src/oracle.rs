//! Brute-force half-plane / half-space clipping used to check the other
//! clippers and to label generated workloads.
//!
//! Deliberately plain: edge and facet planes are rebuilt from the raw
//! vertex coordinates on every call, nothing is shared with the instrumented
//! clippers beyond the point types and region accessors.

use crate::geometry::{ClipResult, ConvexPolygon, ConvexPolyhedron, Point2, Segment2, Segment3};

/// A constraint `lower <= t` or `t <= upper` on the line parameter.
enum Bound {
    Lower(f64),
    Upper(f64),
    /// Line parallel to the boundary and inside (or on) it.
    Free,
    /// Line parallel to the boundary and strictly outside.
    Infeasible,
}

fn half_plane_bound(normal_dot_dir: f64, slack: f64, normal_len: f64, dir_len: f64, eps: f64) -> Bound {
    // constraint: t * normal_dot_dir <= slack
    if libm::fabs(normal_dot_dir) <= 1e-12 * normal_len * dir_len {
        if slack < -eps * normal_len {
            Bound::Infeasible
        } else {
            Bound::Free
        }
    } else if normal_dot_dir > 0.0 {
        Bound::Upper(slack / normal_dot_dir)
    } else {
        Bound::Lower(slack / normal_dot_dir)
    }
}

fn resolve(bounds: impl Iterator<Item = Bound>, tol: f64) -> ClipResult {
    let mut lower = 0.0f64;
    let mut upper = 1.0f64;
    for b in bounds {
        match b {
            Bound::Lower(t) => lower = lower.max(t),
            Bound::Upper(t) => upper = upper.min(t),
            Bound::Free => {}
            Bound::Infeasible => return ClipResult::Empty,
        }
    }
    if lower <= upper {
        ClipResult::Interval { t_enter: lower, t_exit: upper }
    } else if lower - upper <= tol {
        let mid = ((lower + upper) / 2.0).clamp(0.0, 1.0);
        ClipResult::Interval { t_enter: mid, t_exit: mid }
    } else {
        ClipResult::Empty
    }
}

pub fn clip_halfspace_oracle_2d(polygon: &ConvexPolygon, seg: &Segment2) -> ClipResult {
    let verts = polygon.vertices();
    let n = verts.len();
    let eps = polygon.eps();
    let (x0, y0) = (seg.p0.x, seg.p0.y);
    let (dx, dy) = (seg.p1.x - x0, seg.p1.y - y0);
    let dir_len = libm::sqrt(dx * dx + dy * dy);
    let bounds = (0..n).map(|i| {
        let (ax, ay) = (verts[i].x, verts[i].y);
        let (bx, by) = (verts[(i + 1) % n].x, verts[(i + 1) % n].y);
        // outward normal of a counter-clockwise edge: (by - ay, ax - bx)
        let (a, b) = (by - ay, ax - bx);
        let c = a * ax + b * ay;
        let normal_len = libm::sqrt(a * a + b * b);
        half_plane_bound(a * dx + b * dy, c - a * x0 - b * y0, normal_len, dir_len, eps)
    });
    resolve(bounds, eps / dir_len)
}

pub fn clip_halfspace_oracle_3d(poly: &ConvexPolyhedron, seg: &Segment3) -> ClipResult {
    let verts = poly.vertices();
    let eps = poly.eps();
    let p = [seg.p0.x, seg.p0.y, seg.p0.z];
    let d = [seg.p1.x - p[0], seg.p1.y - p[1], seg.p1.z - p[2]];
    let dir_len = libm::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    let bounds = poly.facets().iter().map(|f| {
        let v: [[f64; 3]; 3] = core::array::from_fn(|k| {
            let q = verts[f[k] as usize];
            [q.x, q.y, q.z]
        });
        let u = [v[1][0] - v[0][0], v[1][1] - v[0][1], v[1][2] - v[0][2]];
        let w = [v[2][0] - v[0][0], v[2][1] - v[0][1], v[2][2] - v[0][2]];
        let nrm = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
        let normal_len = libm::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
        let c = nrm[0] * v[0][0] + nrm[1] * v[0][1] + nrm[2] * v[0][2];
        let nd = nrm[0] * d[0] + nrm[1] * d[1] + nrm[2] * d[2];
        let np = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2];
        half_plane_bound(nd, c - np, normal_len, dir_len, eps)
    });
    resolve(bounds, eps / dir_len)
}

/// Brute-force crossing test of a segment's carrier line against one edge.
///
/// True when the edge endpoints are not both strictly (beyond `eps`) on the
/// same side of the line.
pub fn line_crosses_edge(seg: &Segment2, a: Point2, b: Point2, eps: f64) -> bool {
    let (dx, dy) = (seg.p1.x - seg.p0.x, seg.p1.y - seg.p0.y);
    let len = libm::sqrt(dx * dx + dy * dy);
    let side = |q: Point2| (dx * (q.y - seg.p0.y) - dy * (q.x - seg.p0.x)) / len;
    let (sa, sb) = (side(a), side(b));
    !((sa > eps && sb > eps) || (sa < -eps && sb < -eps))
}
