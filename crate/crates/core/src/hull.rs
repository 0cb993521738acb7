//! Incremental convex hull in three dimensions, used by the workload
//! generator to turn random points into a triangulated polyhedron.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::GeomError;
use crate::geometry::{ConvexPolyhedron, Point3};

fn orient(a: Point3, b: Point3, c: Point3, p: Point3) -> f64 {
    (b - a).cross(c - a).dot(p - a)
}

/// Convex hull of `points` as outward-oriented triangles.
///
/// Points that are not hull vertices (or lie within `tol` of a hull facet)
/// are dropped from the result. Fails when the input is coplanar.
pub fn convex_hull(points: &[Point3]) -> Result<ConvexPolyhedron, GeomError> {
    let n = points.len();
    if n < 4 {
        return Err(GeomError::TooFewVertices(n));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    let scale = points.iter().fold(0.0f64, |m, p| m.max(p.norm()));
    let tol = 1e-12 * scale * scale * scale;

    // initial tetrahedron from extreme points
    let i0 = 0;
    let i1 =
        (1..n).max_by(|&a, &b| (points[a] - points[i0]).norm().total_cmp(&(points[b] - points[i0]).norm())).unwrap();
    let i2 = (0..n)
        .max_by(|&a, &b| {
            let f = |k: usize| (points[i1] - points[i0]).cross(points[k] - points[i0]).norm();
            f(a).total_cmp(&f(b))
        })
        .unwrap();
    let i3 = (0..n)
        .max_by(|&a, &b| {
            let f = |k: usize| libm::fabs(orient(points[i0], points[i1], points[i2], points[k]));
            f(a).total_cmp(&f(b))
        })
        .unwrap();
    if libm::fabs(orient(points[i0], points[i1], points[i2], points[i3])) <= tol {
        return Err(GeomError::DegenerateExtent);
    }

    let mut faces: Vec<[usize; 3]> = Vec::new();
    let add = |faces: &mut Vec<[usize; 3]>, a, b, c, inside: Point3| {
        if orient(points[a], points[b], points[c], inside) > 0.0 {
            faces.push([a, c, b]);
        } else {
            faces.push([a, b, c]);
        }
    };
    let centre = (points[i0] + points[i1] + points[i2] + points[i3]) * 0.25;
    add(&mut faces, i0, i1, i2, centre);
    add(&mut faces, i0, i1, i3, centre);
    add(&mut faces, i0, i2, i3, centre);
    add(&mut faces, i1, i2, i3, centre);

    for (k, &p) in points.iter().enumerate() {
        if [i0, i1, i2, i3].contains(&k) {
            continue;
        }
        let visible: Vec<bool> =
            faces.iter().map(|f| orient(points[f[0]], points[f[1]], points[f[2]], p) > tol).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        // horizon: edges of visible faces whose twin belongs to a hidden face
        let seen: BTreeSet<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| (0..3).map(move |e| (f[e], f[(e + 1) % 3])))
            .collect();
        let mut next = Vec::with_capacity(faces.len() + 2);
        let mut horizon = Vec::new();
        for (f, &vis) in faces.iter().zip(&visible) {
            if !vis {
                next.push(*f);
                continue;
            }
            for e in 0..3 {
                let (a, b) = (f[e], f[(e + 1) % 3]);
                if !seen.contains(&(b, a)) {
                    horizon.push((a, b));
                }
            }
        }
        for (a, b) in horizon {
            next.push([a, b, k]);
        }
        faces = next;
    }

    // compact to referenced vertices
    let mut remap = alloc::vec![u32::MAX; n];
    let mut vertices = Vec::new();
    let facets = faces
        .iter()
        .map(|f| {
            f.map(|i| {
                if remap[i] == u32::MAX {
                    remap[i] = vertices.len() as u32;
                    vertices.push(points[i]);
                }
                remap[i]
            })
        })
        .collect();
    ConvexPolyhedron::new(vertices, facets)
}
