//! Points, segments, clip regions and the semidual line representation.
//!
//! A line in the plane is stored as `y = k·x + q` when `|k| <= 1` and as
//! `x = m·y + p` otherwise, so the slope coordinate of either form lies in
//! `[-1, 1]`. Intercepts are taken in the frame centred on the region's
//! bounding box, where every line meeting the box has `|intercept| <= h`
//! with `h = half_x + half_y`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::GeomError;

/// Relative tolerance used for all containment and side tests.
pub const REL_EPS: f64 = 1e-9;

/// Sine of the angle below which a line counts as parallel to an edge or facet.
pub const PARALLEL_SIN: f64 = 1e-12;

/// Absolute geometric tolerance for a region of the given diameter.
#[inline]
pub fn geom_eps(diameter: f64) -> f64 {
    REL_EPS * (1.0 + diameter)
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    #[inline]
    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(self.y * o.z - self.z * o.y, self.z * o.x - self.x * o.z, self.x * o.y - self.y * o.x)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Point3 {
    type Output = Point3;
    #[inline]
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    #[inline]
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    #[inline]
    fn mul(self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    #[inline]
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

/// Segment `p(t) = p0 + t·(p1 - p0)`, `t ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment2 {
    pub p0: Point2,
    pub p1: Point2,
}

impl Segment2 {
    pub fn new(p0: Point2, p1: Point2) -> Result<Self, GeomError> {
        if !p0.is_finite() || !p1.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if p0 == p1 {
            return Err(GeomError::ZeroLengthSegment);
        }
        Ok(Segment2 { p0, p1 })
    }

    #[inline]
    pub fn direction(&self) -> Point2 {
        self.p1 - self.p0
    }

    #[inline]
    pub fn at(&self, t: f64) -> Point2 {
        self.p0 + self.direction() * t
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment3 {
    pub p0: Point3,
    pub p1: Point3,
}

impl Segment3 {
    pub fn new(p0: Point3, p1: Point3) -> Result<Self, GeomError> {
        if !p0.is_finite() || !p1.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if p0 == p1 {
            return Err(GeomError::ZeroLengthSegment);
        }
        Ok(Segment3 { p0, p1 })
    }

    #[inline]
    pub fn direction(&self) -> Point3 {
        self.p1 - self.p0
    }

    #[inline]
    pub fn at(&self, t: f64) -> Point3 {
        self.p0 + self.direction() * t
    }
}

/// Which explicit form a line uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `y = k·x + q`, `|k| <= 1`.
    KQ,
    /// `x = m·y + p`, `|m| < 1`.
    MP,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::KQ, Branch::MP];

    pub fn name(self) -> &'static str {
        match self {
            Branch::KQ => "kq",
            Branch::MP => "mp",
        }
    }

    /// Coordinates `(abscissa, ordinate)` of a point in this branch's frame:
    /// `(x, y)` for `KQ`, `(y, x)` for `MP`.
    #[inline]
    pub fn frame(self, p: Point2) -> (f64, f64) {
        match self {
            Branch::KQ => (p.x, p.y),
            Branch::MP => (p.y, p.x),
        }
    }
}

/// Semidual coordinates of a line: `(slope, intercept)` in one branch.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineRep {
    pub branch: Branch,
    pub slope: f64,
    pub intercept: f64,
}

/// Converts the carrier line through `p0` and `p1` to semidual coordinates.
///
/// Ties `|Δx| = |Δy|` go to the `KQ` branch.
pub fn to_semidual(p0: Point2, p1: Point2) -> Result<LineRep, GeomError> {
    let dx = p1.x - p0.x;
    let dy = p1.y - p0.y;
    if dx == 0.0 && dy == 0.0 {
        return Err(GeomError::ZeroLengthSegment);
    }
    if libm::fabs(dy) <= libm::fabs(dx) {
        let k = dy / dx;
        Ok(LineRep { branch: Branch::KQ, slope: k, intercept: p0.y - k * p0.x })
    } else {
        let m = dx / dy;
        Ok(LineRep { branch: Branch::MP, slope: m, intercept: p0.x - m * p0.y })
    }
}

/// Axis-aligned box around a planar point set, with the intercept bound `h`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox2 {
    pub center: Point2,
    pub half_x: f64,
    pub half_y: f64,
    pub h: f64,
}

impl BoundingBox2 {
    pub fn from_points<I: IntoIterator<Item = Point2>>(points: I) -> Result<Self, GeomError> {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            if !p.is_finite() {
                return Err(GeomError::NonFinite);
            }
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        let half_x = 0.5 * (hi.x - lo.x);
        let half_y = 0.5 * (hi.y - lo.y);
        if !(half_x > 0.0 && half_y > 0.0) {
            return Err(GeomError::DegenerateExtent);
        }
        Ok(BoundingBox2 {
            center: Point2::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)),
            half_x,
            half_y,
            h: half_x + half_y,
        })
    }

    pub fn diameter(&self) -> f64 {
        2.0 * libm::sqrt(self.half_x * self.half_x + self.half_y * self.half_y)
    }

    pub fn eps(&self) -> f64 {
        geom_eps(self.diameter())
    }

    pub fn contains(&self, p: Point2, eps: f64) -> bool {
        libm::fabs(p.x - self.center.x) <= self.half_x + eps && libm::fabs(p.y - self.center.y) <= self.half_y + eps
    }

    /// Translates a world point into the box-centred frame.
    #[inline]
    pub fn to_local(&self, p: Point2) -> Point2 {
        p - self.center
    }
}

pub fn bounding_box(polygon: &ConvexPolygon) -> BoundingBox2 {
    *polygon.bbox()
}

/// The three coordinate planes a polyhedron is projected to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Plane {
    XY,
    XZ,
    YZ,
}

impl Plane {
    pub const ALL: [Plane; 3] = [Plane::XY, Plane::XZ, Plane::YZ];

    /// 0-based position in `ALL`.
    pub fn index(self) -> usize {
        match self {
            Plane::XY => 0,
            Plane::XZ => 1,
            Plane::YZ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Plane::XY => "xy",
            Plane::XZ => "xz",
            Plane::YZ => "yz",
        }
    }
}

/// Orthogonal projection: `XY → (x, y)`, `XZ → (x, z)`, `YZ → (y, z)`.
#[inline]
pub fn project_point(p: Point3, plane: Plane) -> Point2 {
    match plane {
        Plane::XY => Point2::new(p.x, p.y),
        Plane::XZ => Point2::new(p.x, p.z),
        Plane::YZ => Point2::new(p.y, p.z),
    }
}

/// Result of clipping a segment: the parameter range inside the region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClipResult {
    Empty,
    /// `0 <= t_enter <= t_exit <= 1`.
    Interval {
        t_enter: f64,
        t_exit: f64,
    },
}

impl ClipResult {
    pub fn is_empty(&self) -> bool {
        matches!(self, ClipResult::Empty)
    }

    pub fn interval(&self) -> Option<(f64, f64)> {
        match *self {
            ClipResult::Empty => None,
            ClipResult::Interval { t_enter, t_exit } => Some((t_enter, t_exit)),
        }
    }

    pub fn endpoints2(&self, seg: &Segment2) -> Option<(Point2, Point2)> {
        self.interval().map(|(a, b)| (seg.at(a), seg.at(b)))
    }

    pub fn endpoints3(&self, seg: &Segment3) -> Option<(Point3, Point3)> {
        self.interval().map(|(a, b)| (seg.at(a), seg.at(b)))
    }

    /// Same emptiness and both parameters within `tol`.
    pub fn approx_eq(&self, other: &ClipResult, tol: f64) -> bool {
        match (self.interval(), other.interval()) {
            (None, None) => true,
            (Some((a0, a1)), Some((b0, b1))) => libm::fabs(a0 - b0) <= tol && libm::fabs(a1 - b1) <= tol,
            _ => false,
        }
    }
}

/// Intersects the carrier-line interval `[t_enter, t_exit]` with `[0, 1]`.
///
/// An inverted interval no wider than `tol` is a tangency and collapses to a
/// single parameter.
pub(crate) fn finish_interval(t_enter: f64, t_exit: f64, tol: f64) -> ClipResult {
    let lo = if t_enter > 0.0 { t_enter } else { 0.0 };
    let hi = if t_exit < 1.0 { t_exit } else { 1.0 };
    if lo <= hi {
        ClipResult::Interval { t_enter: lo, t_exit: hi }
    } else if lo - hi <= tol {
        let t = (0.5 * (lo + hi)).clamp(0.0, 1.0);
        ClipResult::Interval { t_enter: t, t_exit: t }
    } else {
        ClipResult::Empty
    }
}

/// Strictly convex polygon with counter-clockwise vertices.
///
/// Edge `i` runs from vertex `i` to vertex `i + 1 (mod N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
    normals: Vec<Point2>,
    bbox: BoundingBox2,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        // Every other vertex strictly left of every edge: convex, simple, CCW.
        for i in 0..n {
            let a = vertices[i];
            let e = vertices[(i + 1) % n] - a;
            for (j, &v) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                if e.cross(v - a) <= 0.0 {
                    return Err(GeomError::NotStrictlyConvex { edge: i, vertex: j });
                }
            }
        }
        let normals = (0..n)
            .map(|i| {
                let e = vertices[(i + 1) % n] - vertices[i];
                let len = e.norm();
                Point2::new(e.y / len, -e.x / len)
            })
            .collect();
        let bbox = BoundingBox2::from_points(vertices.iter().copied())?;
        Ok(ConvexPolygon { vertices, normals, bbox })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()])
    }

    /// Outward unit normal of edge `i`.
    pub fn normal(&self, i: usize) -> Point2 {
        self.normals[i]
    }

    pub fn bbox(&self) -> &BoundingBox2 {
        &self.bbox
    }

    pub fn eps(&self) -> f64 {
        self.bbox.eps()
    }

    /// Inside or on the boundary within `eps`.
    pub fn contains(&self, p: Point2, eps: f64) -> bool {
        (0..self.len()).all(|i| self.normals[i].dot(p - self.vertices[i]) <= eps)
    }
}

/// Closed convex polyhedron with triangular facets.
///
/// Facet vertices are counter-clockwise seen from outside, so
/// `(b - a) × (c - a)` points outward.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolyhedron {
    vertices: Vec<Point3>,
    facets: Vec<[u32; 3]>,
    normals: Vec<Point3>,
    lo: Point3,
    hi: Point3,
}

impl ConvexPolyhedron {
    pub fn new(vertices: Vec<Point3>, facets: Vec<[u32; 3]>) -> Result<Self, GeomError> {
        if facets.len() < 4 {
            return Err(GeomError::TooFewFacets(facets.len()));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let nv = vertices.len();
        let mut lo = Point3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
        let mut hi = Point3::new(f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &vertices {
            lo = Point3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
            hi = Point3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
        }
        let diameter = (hi - lo).norm();
        let eps = geom_eps(diameter);

        let mut normals = Vec::with_capacity(facets.len());
        let mut directed: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut used = alloc::vec![false; nv];
        for (fi, f) in facets.iter().enumerate() {
            if f.iter().any(|&i| i as usize >= nv) {
                return Err(GeomError::FacetIndexOutOfRange { facet: fi });
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(GeomError::DegenerateFacet { facet: fi });
            }
            let (a, b, c) = (vertices[f[0] as usize], vertices[f[1] as usize], vertices[f[2] as usize]);
            let n = (b - a).cross(c - a);
            let len = n.norm();
            if !(len > 1e-14 * diameter * diameter) {
                return Err(GeomError::DegenerateFacet { facet: fi });
            }
            normals.push(n * (1.0 / len));
            for k in 0..3 {
                used[f[k] as usize] = true;
                *directed.entry((f[k], f[(k + 1) % 3])).or_insert(0) += 1;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(GeomError::UnreferencedVertex(v));
        }
        for (&(from, to), &count) in &directed {
            if count != 1 || directed.get(&(to, from)) != Some(&1) {
                return Err(GeomError::NotClosed { from, to });
            }
        }
        let e = directed.len() / 2;
        if nv + facets.len() != e + 2 {
            return Err(GeomError::Euler { v: nv, e, f: facets.len() });
        }
        for (fi, f) in facets.iter().enumerate() {
            let a = vertices[f[0] as usize];
            for (vi, &v) in vertices.iter().enumerate() {
                if normals[fi].dot(v - a) > eps {
                    return Err(GeomError::NotConvex { facet: fi, vertex: vi });
                }
            }
        }
        Ok(ConvexPolyhedron { vertices, facets, normals, lo, hi })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[[u32; 3]] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_vertices(&self, f: usize) -> [Point3; 3] {
        let [a, b, c] = self.facets[f];
        [self.vertices[a as usize], self.vertices[b as usize], self.vertices[c as usize]]
    }

    /// Outward unit normal of facet `f`.
    pub fn normal(&self, f: usize) -> Point3 {
        self.normals[f]
    }

    pub fn bounds(&self) -> (Point3, Point3) {
        (self.lo, self.hi)
    }

    pub fn diameter(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    pub fn eps(&self) -> f64 {
        geom_eps(self.diameter())
    }

    pub fn centroid(&self) -> Point3 {
        let s = self.vertices.iter().fold(Point3::default(), |acc, &v| acc + v);
        s * (1.0 / self.vertices.len() as f64)
    }

    pub fn contains(&self, p: Point3, eps: f64) -> bool {
        (0..self.facets.len()).all(|f| {
            let a = self.vertices[self.facets[f][0] as usize];
            self.normals[f].dot(p - a) <= eps
        })
    }

    /// Bounding box of the vertices projected to `plane`.
    pub fn projected_bbox(&self, plane: Plane) -> BoundingBox2 {
        BoundingBox2::from_points(self.vertices.iter().map(|&v| project_point(v, plane)))
            .expect("a valid polyhedron has volume, so every projection has area")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, -1.0),
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn semidual_examples() {
        let r = to_semidual(Point2::new(-5.0, 0.0), Point2::new(5.0, 0.0)).unwrap();
        assert_eq!(r, LineRep { branch: Branch::KQ, slope: 0.0, intercept: 0.0 });
        let r = to_semidual(Point2::new(0.0, -5.0), Point2::new(0.0, 5.0)).unwrap();
        assert_eq!(r, LineRep { branch: Branch::MP, slope: 0.0, intercept: 0.0 });
        let r = to_semidual(Point2::new(0.0, 0.0), Point2::new(1.0, 2.0)).unwrap();
        assert_eq!(r, LineRep { branch: Branch::MP, slope: 0.5, intercept: 0.0 });
        assert_eq!(to_semidual(Point2::new(1.0, 1.0), Point2::new(1.0, 1.0)), Err(GeomError::ZeroLengthSegment));
    }

    #[test]
    fn unit_slope_goes_to_kq() {
        let r = to_semidual(Point2::new(0.0, 1.0), Point2::new(2.0, 3.0)).unwrap();
        assert_eq!(r.branch, Branch::KQ);
        assert_eq!(r.slope, 1.0);
        assert_eq!(r.intercept, 1.0);
        let r = to_semidual(Point2::new(0.0, 0.0), Point2::new(-1.0, 1.0)).unwrap();
        assert_eq!((r.branch, r.slope), (Branch::KQ, -1.0));
    }

    #[test]
    fn bounding_box_examples() {
        let b = bounding_box(&square());
        assert_eq!(b.center, Point2::new(0.0, 0.0));
        assert_eq!((b.half_x, b.half_y, b.h), (1.0, 1.0, 2.0));

        let tri =
            ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(4.0, 0.0), Point2::new(0.0, 2.0)]).unwrap();
        let b = bounding_box(&tri);
        assert_eq!(b.center, Point2::new(2.0, 1.0));
        assert_eq!((b.half_x, b.half_y, b.h), (2.0, 1.0, 3.0));
    }

    #[test]
    fn projections() {
        let p = Point3::new(1.0, 2.0, 3.0);
        assert_eq!(project_point(p, Plane::XY), Point2::new(1.0, 2.0));
        assert_eq!(project_point(p, Plane::XZ), Point2::new(1.0, 3.0));
        assert_eq!(project_point(p, Plane::YZ), Point2::new(2.0, 3.0));
    }

    #[test]
    fn polygon_validation() {
        assert_eq!(
            ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]),
            Err(GeomError::TooFewVertices(2))
        );
        // clockwise
        assert!(ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(0.0, 1.0), Point2::new(1.0, 0.0),]).is_err());
        // collinear middle vertex
        assert!(ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 1.0),
        ])
        .is_err());
        // pentagram: every turn is left but it winds twice
        let star: Vec<Point2> = (0..5)
            .map(|i| {
                let a = core::f64::consts::TAU * (2 * i) as f64 / 5.0;
                Point2::new(libm::cos(a), libm::sin(a))
            })
            .collect();
        assert!(ConvexPolygon::new(star).is_err());
        let sq = square();
        assert_eq!(sq.normal(0), Point2::new(0.0, -1.0));
        assert!(sq.contains(Point2::new(0.0, 0.0), 0.0));
        assert!(!sq.contains(Point2::new(0.0, 1.5), 0.0));
    }

    #[test]
    fn finish_interval_cases() {
        assert_eq!(finish_interval(-0.5, 0.5, 1e-9), ClipResult::Interval { t_enter: 0.0, t_exit: 0.5 });
        assert_eq!(finish_interval(1.5, 2.0, 1e-9), ClipResult::Empty);
        assert_eq!(
            finish_interval(0.3 + 1e-12, 0.3, 1e-9),
            ClipResult::Interval { t_enter: 0.3 + 5e-13, t_exit: 0.3 + 5e-13 }
        );
        assert_eq!(finish_interval(f64::NEG_INFINITY, f64::INFINITY, 0.0).interval(), Some((0.0, 1.0)));
    }
}
