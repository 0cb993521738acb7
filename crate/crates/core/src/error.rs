use core::fmt;

/// Errors raised while validating inputs or building clippers.
#[derive(Clone, Debug, PartialEq)]
pub enum GeomError {
    ZeroLengthSegment,
    ZeroDirection,
    NonFinite,
    TooFewVertices(usize),
    /// Vertex `vertex` is not strictly to the left of edge `edge`.
    NotStrictlyConvex {
        edge: usize,
        vertex: usize,
    },
    DegenerateExtent,
    TooFewFacets(usize),
    FacetIndexOutOfRange {
        facet: usize,
    },
    DegenerateFacet {
        facet: usize,
    },
    /// A directed edge is missing its twin or appears more than once.
    NotClosed {
        from: u32,
        to: u32,
    },
    UnreferencedVertex(usize),
    Euler {
        v: usize,
        e: usize,
        f: usize,
    },
    /// Vertex lies outside the plane of a facet.
    NotConvex {
        facet: usize,
        vertex: usize,
    },
    InvalidSubdivision,
    SubdivisionTooFine {
        entries: u64,
        budget: u64,
    },
    /// A grid payload does not match the region it was loaded with.
    GridMismatch,
    /// An edge crossed by the line is missing from its cell's active edge list.
    AelNotConservative {
        edge: usize,
    },
    /// A facet crossed by the line is missing from the candidate bitmap.
    AflNotConservative {
        facet: usize,
    },
    InvalidWorkload(&'static str),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::ZeroLengthSegment => write!(f, "zero-length segment"),
            GeomError::ZeroDirection => write!(f, "zero direction vector"),
            GeomError::NonFinite => write!(f, "non-finite coordinate"),
            GeomError::TooFewVertices(n) => write!(f, "polygon needs at least 3 vertices, got {n}"),
            GeomError::NotStrictlyConvex { edge, vertex } => {
                write!(f, "polygon is not strictly convex and counter-clockwise (vertex {vertex} vs edge {edge})")
            }
            GeomError::DegenerateExtent => write!(f, "bounding box has zero extent"),
            GeomError::TooFewFacets(n) => write!(f, "polyhedron needs at least 4 facets, got {n}"),
            GeomError::FacetIndexOutOfRange { facet } => {
                write!(f, "facet {facet} references a vertex out of range")
            }
            GeomError::DegenerateFacet { facet } => write!(f, "facet {facet} is degenerate"),
            GeomError::NotClosed { from, to } => {
                write!(f, "surface is not closed at edge {from}->{to}")
            }
            GeomError::UnreferencedVertex(v) => write!(f, "vertex {v} is not used by any facet"),
            GeomError::Euler { v, e, f: fc } => {
                write!(f, "Euler relation violated: V={v} E={e} F={fc}")
            }
            GeomError::NotConvex { facet, vertex } => {
                write!(f, "vertex {vertex} lies outside facet {facet}")
            }
            GeomError::InvalidWorkload(why) => write!(f, "invalid workload: {why}"),
            GeomError::InvalidSubdivision => write!(f, "subdivision counts must be at least 1"),
            GeomError::SubdivisionTooFine { entries, budget } => {
                write!(f, "subdivision too fine: {entries} list entries exceed the budget of {budget}")
            }
            GeomError::GridMismatch => write!(f, "grid payload does not match the region"),
            GeomError::AelNotConservative { edge } => {
                write!(f, "AEL not conservative: crossed edge {edge} missing")
            }
            GeomError::AflNotConservative { facet } => {
                write!(f, "AFL not conservative: crossed facet {facet} missing")
            }
        }
    }
}

impl core::error::Error for GeomError {}
