//! Instrumented Cyrus-Beck clipping against every edge or facet.
//!
//! Both clippers intersect the carrier line with all `N` half-planes
//! (half-spaces), keeping the largest entering and smallest leaving
//! parameter. There is no early exit on an emptied interval, so the cost per
//! line is the same for hits and misses.

use crate::counter::OpCounter;
use crate::geometry::{finish_interval, ClipResult, ConvexPolygon, ConvexPolyhedron, Segment2, Segment3, PARALLEL_SIN};

pub fn clip_cyrus_beck_2d(polygon: &ConvexPolygon, seg: &Segment2, ops: &mut OpCounter) -> ClipResult {
    let eps = polygon.eps();
    let p0 = seg.p0;
    let d = seg.direction();
    ops.addsub(2);
    ops.assign(2);
    let dlen = d.norm();
    ops.dot2();
    ops.div(1);
    let mut t_in = f64::NEG_INFINITY;
    let mut t_out = f64::INFINITY;
    ops.assign(2);

    for i in 0..polygon.len() {
        let n = polygon.normal(i);
        let a = polygon.vertices()[i];
        let dn = n.dot(d);
        ops.dot2();
        ops.assign(1);
        let num = n.dot(a - p0);
        ops.addsub(2);
        ops.dot2();
        ops.assign(1);
        ops.mul(1);
        ops.compare(1);
        if libm::fabs(dn) <= PARALLEL_SIN * dlen {
            ops.compare(1);
            if -num > eps {
                return ClipResult::Empty;
            }
            continue;
        }
        let t = num / dn;
        ops.div(1);
        ops.assign(1);
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
    ops.div(1);
    ops.compare(3);
    finish_interval(t_in, t_out, eps / dlen)
}

pub fn clip_cyrus_beck_3d(poly: &ConvexPolyhedron, seg: &Segment3, ops: &mut OpCounter) -> ClipResult {
    let eps = poly.eps();
    let p0 = seg.p0;
    let d = seg.direction();
    ops.addsub(3);
    ops.assign(3);
    let dlen = d.norm();
    ops.dot3();
    ops.div(1);
    let mut t_in = f64::NEG_INFINITY;
    let mut t_out = f64::INFINITY;
    ops.assign(2);

    for f in 0..poly.facet_count() {
        let n = poly.normal(f);
        let a = poly.vertices()[poly.facets()[f][0] as usize];
        let dn = n.dot(d);
        ops.dot3();
        ops.assign(1);
        let num = n.dot(a - p0);
        ops.addsub(3);
        ops.dot3();
        ops.assign(1);
        ops.mul(1);
        ops.compare(1);
        if libm::fabs(dn) <= PARALLEL_SIN * dlen {
            ops.compare(1);
            if -num > eps {
                return ClipResult::Empty;
            }
            continue;
        }
        let t = num / dn;
        ops.div(1);
        ops.assign(1);
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
    ops.div(1);
    ops.compare(3);
    finish_interval(t_in, t_out, eps / dlen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cube, regular_tetrahedron, unit_square};
    use crate::geometry::{Point2, Point3};
    use crate::oracle::{clip_halfspace_oracle_2d, clip_halfspace_oracle_3d};

    fn seg2(a: (f64, f64), b: (f64, f64)) -> Segment2 {
        Segment2::new(Point2::new(a.0, a.1), Point2::new(b.0, b.1)).unwrap()
    }

    fn seg3(a: (f64, f64, f64), b: (f64, f64, f64)) -> Segment3 {
        Segment3::new(Point3::new(a.0, a.1, a.2), Point3::new(b.0, b.1, b.2)).unwrap()
    }

    #[test]
    fn square_examples() {
        let sq = unit_square();
        let mut ops = OpCounter::new();
        let cases = [
            (seg2((-2.0, 0.0), (2.0, 0.0)), Some((0.25, 0.75))),
            (seg2((-2.0, 3.0), (2.0, 3.0)), None),
            (seg2((-0.5, 0.0), (0.5, 0.0)), Some((0.0, 1.0))),
        ];
        for (s, want) in cases {
            let got = clip_cyrus_beck_2d(&sq, &s, &mut ops);
            assert_eq!(got.interval(), want);
            assert_eq!(clip_halfspace_oracle_2d(&sq, &s).interval(), want);
        }
        let r = clip_cyrus_beck_2d(&sq, &cases[0].0, &mut ops);
        let (a, b) = r.endpoints2(&cases[0].0).unwrap();
        assert_eq!((a, b), (Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0)));
        assert!(ops.total() > 0);
    }

    #[test]
    fn cube_examples() {
        let c = cube();
        let mut ops = OpCounter::new();
        let r = clip_cyrus_beck_3d(&c, &seg3((-2.0, 0.0, 0.0), (2.0, 0.0, 0.0)), &mut ops);
        assert_eq!(r.interval(), Some((0.25, 0.75)));
        let r = clip_cyrus_beck_3d(&c, &seg3((-2.0, 0.0, 3.0), (2.0, 0.0, 3.0)), &mut ops);
        assert!(r.is_empty());
    }

    #[test]
    fn tetrahedron_matches_triangle_intersections() {
        // Oracle: intersect the line with each facet triangle directly
        // (Möller-Trumbore) and take the extreme parameters.
        let tet = regular_tetrahedron();
        let c = tet.centroid();
        let s = Segment3::new(c - Point3::new(3.0, 0.37, 0.21), c + Point3::new(3.0, 0.37, 0.21)).unwrap();
        let mut ts = alloc::vec::Vec::new();
        for f in 0..tet.facet_count() {
            let [a, b, cc] = tet.facet_vertices(f);
            let d = s.direction();
            let e1 = b - a;
            let e2 = cc - a;
            let p = d.cross(e2);
            let det = e1.dot(p);
            if det.abs() < 1e-14 {
                continue;
            }
            let inv = 1.0 / det;
            let tv = s.p0 - a;
            let u = tv.dot(p) * inv;
            let q = tv.cross(e1);
            let v = d.dot(q) * inv;
            if u >= 0.0 && v >= 0.0 && u + v <= 1.0 {
                ts.push(e2.dot(q) * inv);
            }
        }
        assert_eq!(ts.len(), 2);
        let lo = ts.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ts.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let (a, b) = clip_cyrus_beck_3d(&tet, &s, &mut OpCounter::new()).interval().unwrap();
        assert!((a - lo).abs() < 1e-12 && (b - hi).abs() < 1e-12, "{a} {b} vs {lo} {hi}");
        let o = clip_halfspace_oracle_3d(&tet, &s).interval().unwrap();
        assert!((o.0 - lo).abs() < 1e-12 && (o.1 - hi).abs() < 1e-12);
    }

    #[test]
    fn parallel_outside_rejects() {
        let sq = unit_square();
        let s = seg2((-0.5, 1.5), (0.5, 1.5));
        assert!(clip_cyrus_beck_2d(&sq, &s, &mut OpCounter::new()).is_empty());
        // along the boundary edge: the edge itself
        let s = seg2((-3.0, 1.0), (3.0, 1.0));
        let (a, b) = clip_cyrus_beck_2d(&sq, &s, &mut OpCounter::new()).interval().unwrap();
        assert!((a - 1.0 / 3.0).abs() < 1e-15 && (b - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn cost_is_affine_in_edge_count() {
        // every edge executes the same straight-line code on a non-parallel line
        let s = seg2((-3.0, 0.1), (3.0, 0.2));
        let mut prev = None;
        let mut step = None;
        for n in 3..12 {
            let poly = crate::fixtures::regular_polygon(n, 1.0, 0.1);
            let mut ops = OpCounter::new();
            clip_cyrus_beck_2d(&poly, &s, &mut ops);
            let w = ops.assigns + ops.addsubs + ops.muls + ops.divs;
            if let Some(p) = prev {
                let dw = w - p;
                if let Some(st) = step {
                    // assignment updates vary by at most one per edge
                    assert!((dw as i64 - st as i64).abs() <= 2);
                }
                step = Some(dw);
            }
            prev = Some(w);
        }
    }
}
