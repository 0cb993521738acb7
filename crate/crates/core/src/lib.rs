//! Line and segment clipping against convex polygons and polyhedra in
//! constant time per line.
//!
//! A line is mapped to a point of a bounded "semidual" space: `y = kx + q`
//! when its slope is at most one in magnitude and `x = my + p` otherwise,
//! with the intercept measured in the frame centred on the region's
//! bounding box. A uniform grid over that space stores, per cell, the
//! polygon edges (or, after projection, the polyhedron facets) that any line
//! of the cell can cross. Clipping looks up one cell and tests only those.
//!
//! [`clip_cyrus_beck_2d`] and [`clip_cyrus_beck_3d`] are the O(N)
//! baselines, and the `oracle` module holds an independent implementation
//! used for differential testing. Every clipper reports its work to an
//! [`OpCounter`], which [`weighted_cost`] turns into machine-independent
//! cost.

#![no_std]

extern crate alloc;

pub mod bitmap;
pub mod cost;
pub mod counter;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod grid;
pub mod hull;
pub mod oracle;
pub mod reference;
pub mod semidual2;
pub mod semidual3;
pub mod workload;

pub use bitmap::FacetBitmap;
pub use cost::{theoretical_efficiency, weighted_cost, CostModel, Efficiency};
pub use counter::OpCounter;
pub use error::GeomError;
pub use geometry::{
    bounding_box, geom_eps, project_point, to_semidual, BoundingBox2, Branch, ClipResult, ConvexPolygon,
    ConvexPolyhedron, LineRep, Plane, Point2, Point3, Segment2, Segment3,
};
pub use grid::{edge_interferes_cell, points_interfere_cell, CellRect, GridFrame, GridStats};
pub use oracle::{clip_halfspace_oracle_2d, clip_halfspace_oracle_3d};
pub use reference::{clip_cyrus_beck_2d, clip_cyrus_beck_3d};
pub use semidual2::{
    build_clipper_2d, clip_o1_2d, recommend_subdivision, BuildOptions, Recommendation, SemidualClipper2D, SemidualGrid,
    Subdivision, DEFAULT_MAX_ENTRIES,
};
pub use semidual3::{
    adequate_subdivision_3d, build_clipper_3d, clip_o1_3d, detail_test, grid_number, select_planes, FacetGrid,
    SemidualClipper3D,
};
pub use workload::{gen_convex_polygon, gen_convex_polyhedron, gen_segments_2d, gen_segments_3d, WorkloadSpec};
