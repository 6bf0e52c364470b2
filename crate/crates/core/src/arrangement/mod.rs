//! Exact planar arrangement of a divide.
//!
//! The divide input file is parsed into a [`StrandSet`], all pairwise and
//! self intersections are computed with exact rational arithmetic into a
//! [`CrossingSet`], and the pieces are assembled into a half-edge
//! [`PlanarMap`] whose vertices are the double points, the strand endpoints
//! on the boundary, the four square corners, and (for crossing-free closed
//! strands) one anchor point per circle.

mod intersect;
mod parse;
mod planar_map;
mod strand;

pub use intersect::{intersect_strands, Crossing, CrossingSet};
pub use parse::parse_divide_file;
pub use planar_map::{
    build_planar_map, Face, FaceId, HalfEdge, HalfEdgeId, OrbitId, PlanarMap, Vertex, VertexId,
    VertexKind,
};
pub use strand::{Strand, StrandKind, StrandSet};
