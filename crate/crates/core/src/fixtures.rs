//! Small hand-built regions used by examples and tests.

use alloc::vec::Vec;

use crate::geometry::{ConvexPolygon, ConvexPolyhedron, Point2, Point3};

/// Square `[-1, 1]²`.
pub fn unit_square() -> ConvexPolygon {
    ConvexPolygon::new(alloc::vec![
        Point2::new(-1.0, -1.0),
        Point2::new(1.0, -1.0),
        Point2::new(1.0, 1.0),
        Point2::new(-1.0, 1.0),
    ])
    .expect("square is strictly convex")
}

/// Regular `n`-gon of circumradius `r`, first vertex at angle `rotation`.
pub fn regular_polygon(n: usize, r: f64, rotation: f64) -> ConvexPolygon {
    let verts = (0..n)
        .map(|i| {
            let a = rotation + core::f64::consts::TAU * i as f64 / n as f64;
            Point2::new(r * libm::cos(a), r * libm::sin(a))
        })
        .collect();
    ConvexPolygon::new(verts).expect("regular polygon is strictly convex")
}

/// Flips triangles so that each normal points away from `inside`.
fn orient(vertices: &[Point3], tris: &mut [[u32; 3]], inside: Point3) {
    for t in tris.iter_mut() {
        let [a, b, c] = t.map(|i| vertices[i as usize]);
        if (b - a).cross(c - a).dot(a - inside) < 0.0 {
            t.swap(1, 2);
        }
    }
}

/// Cube `[-1, 1]³` split into 12 triangles.
pub fn cube() -> ConvexPolyhedron {
    // vertex i has x = bit 0, y = bit 1, z = bit 2
    let vertices: Vec<Point3> = (0..8u32)
        .map(|i| {
            let c = |b: u32| if i >> b & 1 == 1 { 1.0 } else { -1.0 };
            Point3::new(c(0), c(1), c(2))
        })
        .collect();
    let quads: [[u32; 4]; 6] = [[0, 2, 6, 4], [1, 3, 7, 5], [0, 1, 5, 4], [2, 3, 7, 6], [0, 1, 3, 2], [4, 5, 7, 6]];
    let mut tris: Vec<[u32; 3]> = quads.iter().flat_map(|q| [[q[0], q[1], q[2]], [q[0], q[2], q[3]]]).collect();
    orient(&vertices, &mut tris, Point3::default());
    ConvexPolyhedron::new(vertices, tris).expect("cube is valid")
}

pub fn regular_tetrahedron() -> ConvexPolyhedron {
    let vertices = alloc::vec![
        Point3::new(1.0, 1.0, 1.0),
        Point3::new(1.0, -1.0, -1.0),
        Point3::new(-1.0, 1.0, -1.0),
        Point3::new(-1.0, -1.0, 1.0),
    ];
    let mut tris = alloc::vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    orient(&vertices, &mut tris, Point3::default());
    ConvexPolyhedron::new(vertices, tris).expect("tetrahedron is valid")
}
