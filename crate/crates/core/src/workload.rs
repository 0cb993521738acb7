//! Seeded generators for clip regions and line sets.
//!
//! Every generator draws from its own ChaCha8 stream derived from the seed,
//! so the same arguments always give bit-identical output.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GeomError;
use crate::geometry::{BoundingBox2, ClipResult, ConvexPolygon, ConvexPolyhedron, Point2, Point3, Segment2, Segment3};
use crate::hull::convex_hull;
use crate::oracle::{clip_halfspace_oracle_2d, clip_halfspace_oracle_3d};
use crate::semidual2::recommend_subdivision;

const STREAM_POLYGON: u64 = 1;
const STREAM_POLYHEDRON: u64 = 2;
const STREAM_LINES: u64 = 3;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Parameters of one benchmark instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorkloadSpec {
    /// 2 or 3.
    pub dimension: u8,
    /// Polygon vertex count or target facet count.
    pub n: usize,
    /// Number of lines.
    pub m: usize,
    /// Fraction of lines that hit the region.
    pub pr: f64,
    pub seed: u64,
    pub extent: f64,
}

impl WorkloadSpec {
    pub fn validate(&self) -> Result<(), GeomError> {
        match self.dimension {
            2 if self.n < 3 => Err(GeomError::InvalidWorkload("a polygon needs at least 3 vertices")),
            3 if self.n < 4 || self.n % 2 == 1 => {
                Err(GeomError::InvalidWorkload("facet count must be even and at least 4"))
            }
            2 | 3 => Ok(()),
            _ => Err(GeomError::InvalidWorkload("dimension must be 2 or 3")),
        }?;
        if self.m < 1 {
            return Err(GeomError::InvalidWorkload("at least one line is required"));
        }
        if !(0.0..=1.0).contains(&self.pr) {
            return Err(GeomError::InvalidWorkload("hit probability must lie in [0, 1]"));
        }
        if !(self.extent > 0.0 && self.extent.is_finite()) {
            return Err(GeomError::InvalidWorkload("extent must be positive"));
        }
        Ok(())
    }

    /// Number of hitting lines, `round(pr * m)`.
    pub fn hit_count(&self) -> usize {
        hit_count(self.m, self.pr)
    }
}

fn hit_count(m: usize, pr: f64) -> usize {
    (libm::round(pr * m as f64) as usize).min(m)
}

fn acceptable_polygon(p: &ConvexPolygon) -> bool {
    let v = p.vertices();
    let distinct = |f: fn(&Point2) -> f64| {
        let mut xs: Vec<f64> = v.iter().map(f).collect();
        xs.sort_by(f64::total_cmp);
        xs.windows(2).all(|w| w[1] > w[0])
    };
    if !distinct(|p| p.x) || !distinct(|p| p.y) {
        return false;
    }
    // both slope branches need two distinct slopes once there are enough edges
    v.len() < 8 || recommend_subdivision(p, u64::MAX).defaulted.iter().all(|d| !d)
}

/// Random strictly convex polygon with `n` vertices, counter-clockwise,
/// inscribed in an ellipse of semi-major axis `extent` centred at the origin.
///
/// Vertex ordinates and abscissae are pairwise distinct. After a bounded
/// number of failed draws a rotated regular polygon is returned instead.
pub fn gen_convex_polygon(n: usize, seed: u64, extent: f64) -> ConvexPolygon {
    assert!(n >= 3, "a polygon needs at least 3 vertices");
    let mut rng = rng(seed, STREAM_POLYGON);
    let min_gap = TAU / (4.0 * n as f64);
    for attempt in 0..64 {
        let jitter = 0.2 / (1.0 + attempt as f64) / n as f64;
        let b = extent * rng.gen_range(0.5..1.0);
        let tilt = rng.gen_range(0.0..TAU);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let wrap = angles[0] + TAU - angles[n - 1];
        if wrap < min_gap || angles.windows(2).any(|w| w[1] - w[0] < min_gap) {
            continue;
        }
        let (ct, st) = (libm::cos(tilt), libm::sin(tilt));
        let verts = angles
            .iter()
            .map(|&a| {
                let r = 1.0 + jitter * rng.gen_range(-1.0..1.0);
                let (x, y) = (extent * r * libm::cos(a), b * r * libm::sin(a));
                Point2::new(ct * x - st * y, st * x + ct * y)
            })
            .collect();
        if let Ok(p) = ConvexPolygon::new(verts) {
            if acceptable_polygon(&p) {
                return p;
            }
        }
    }
    // irrational rotation keeps the fallback free of axis-aligned edges
    crate::fixtures::regular_polygon(n, extent, core::f64::consts::SQRT_2 / 10.0)
}

/// Convex hull of `target_facets / 2 + 2` random points on the sphere of
/// radius `extent`, redrawn until it has exactly `target_facets` triangles.
pub fn gen_convex_polyhedron(target_facets: usize, seed: u64, extent: f64) -> Result<ConvexPolyhedron, GeomError> {
    if target_facets < 4 || target_facets % 2 == 1 {
        return Err(GeomError::InvalidWorkload("facet count must be even and at least 4"));
    }
    let v = target_facets / 2 + 2;
    let mut rng = rng(seed, STREAM_POLYHEDRON);
    for _ in 0..1000 {
        let points: Vec<Point3> = (0..v)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let phi = rng.gen_range(0.0..TAU);
                let r = libm::sqrt(1.0 - z * z);
                Point3::new(r * libm::cos(phi), r * libm::sin(phi), z) * extent
            })
            .collect();
        if let Ok(p) = convex_hull(&points) {
            if p.facet_count() == target_facets {
                return Ok(p);
            }
        }
    }
    Err(GeomError::InvalidWorkload("no hull with the requested facet count"))
}

fn extend_2d(rng: &mut ChaCha8Rng, p: Point2, q: Point2, reach: f64) -> Option<Segment2> {
    let d = q - p;
    let len = d.norm();
    if len <= 0.0 {
        return None;
    }
    let u = d * (1.0 / len);
    let a = p - u * (reach * rng.gen_range(0.0..1.0));
    let b = q + u * (reach * rng.gen_range(0.0..1.0));
    Segment2::new(a, b).ok()
}

fn extend_3d(rng: &mut ChaCha8Rng, p: Point3, q: Point3, reach: f64) -> Option<Segment3> {
    let d = q - p;
    let len = d.norm();
    if len <= 0.0 {
        return None;
    }
    let u = d * (1.0 / len);
    let a = p - u * (reach * rng.gen_range(0.0..1.0));
    let b = q + u * (reach * rng.gen_range(0.0..1.0));
    Segment3::new(a, b).ok()
}

fn sample_in(rng: &mut ChaCha8Rng, bbox: &BoundingBox2, scale: f64) -> Point2 {
    Point2::new(
        bbox.center.x + scale * bbox.half_x * rng.gen_range(-1.0..1.0),
        bbox.center.y + scale * bbox.half_y * rng.gen_range(-1.0..1.0),
    )
}

fn sample_in3(rng: &mut ChaCha8Rng, lo: Point3, hi: Point3, scale: f64) -> Point3 {
    let c = (lo + hi) * 0.5;
    let h = (hi - lo) * 0.5;
    Point3::new(
        c.x + scale * h.x * rng.gen_range(-1.0..1.0),
        c.y + scale * h.y * rng.gen_range(-1.0..1.0),
        c.z + scale * h.z * rng.gen_range(-1.0..1.0),
    )
}

/// `m` segments of which exactly `round(pr * m)` meet the polygon.
///
/// Hitting segments pass through two interior points and extend a random
/// amount past them. Missing segments are drawn in the box three times the
/// polygon's extent and kept only if the reference oracle reports a miss.
pub fn gen_segments_2d(polygon: &ConvexPolygon, m: usize, pr: f64, seed: u64) -> Vec<Segment2> {
    let mut rng = rng(seed, STREAM_LINES);
    let bbox = *polygon.bbox();
    let reach = 2.0 * bbox.diameter();
    let inner = -polygon.eps();
    let interior = |rng: &mut ChaCha8Rng| loop {
        let p = sample_in(rng, &bbox, 1.0);
        if polygon.contains(p, inner) {
            break p;
        }
    };
    let hits = hit_count(m, pr);
    let mut out = Vec::with_capacity(m);
    while out.len() < hits {
        let (p, q) = (interior(&mut rng), interior(&mut rng));
        if let Some(s) = extend_2d(&mut rng, p, q, reach) {
            out.push(s);
        }
    }
    while out.len() < m {
        let (p, q) = (sample_in(&mut rng, &bbox, 3.0), sample_in(&mut rng, &bbox, 3.0));
        if let Ok(s) = Segment2::new(p, q) {
            if clip_halfspace_oracle_2d(polygon, &s) == ClipResult::Empty {
                out.push(s);
            }
        }
    }
    out.shuffle(&mut rng);
    out
}

/// Spatial counterpart of [`gen_segments_2d`].
pub fn gen_segments_3d(poly: &ConvexPolyhedron, m: usize, pr: f64, seed: u64) -> Vec<Segment3> {
    let mut rng = rng(seed, STREAM_LINES);
    let (lo, hi) = poly.bounds();
    let reach = 2.0 * poly.diameter();
    let inner = -poly.eps();
    let interior = |rng: &mut ChaCha8Rng| loop {
        let p = sample_in3(rng, lo, hi, 1.0);
        if poly.contains(p, inner) {
            break p;
        }
    };
    let hits = hit_count(m, pr);
    let mut out = Vec::with_capacity(m);
    while out.len() < hits {
        let (p, q) = (interior(&mut rng), interior(&mut rng));
        if let Some(s) = extend_3d(&mut rng, p, q, reach) {
            out.push(s);
        }
    }
    while out.len() < m {
        let (p, q) = (sample_in3(&mut rng, lo, hi, 3.0), sample_in3(&mut rng, lo, hi, 3.0));
        if let Ok(s) = Segment3::new(p, q) {
            if clip_halfspace_oracle_3d(poly, &s) == ClipResult::Empty {
                out.push(s);
            }
        }
    }
    out.shuffle(&mut rng);
    out
}
