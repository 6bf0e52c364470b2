//! Tools for divides in the disk and their links.
//!
//! A divide is the image of a proper generic immersion of a compact
//! 1-manifold into a disk: double points are transverse and there are no
//! triple points. This crate parses divide files, computes their exact
//! planar arrangement, classifies double points into the eleven local
//! models, evaluates the hyperbolic volume bound for the associated link
//! complement, assembles the ideal polyhedral block decomposition together
//! with its combinatorial hyperbolicity certificates, and produces link
//! diagrams (PD codes) via the tangent lift.
//!
//! The disk is modeled as the axis-aligned square `[-N, N]^2`; all
//! arrangement computations use exact rational arithmetic.

pub mod arrangement;
pub mod blocks;
pub mod corpus;
pub mod diagram;
pub mod divide;
pub mod error;
pub mod exact;
pub mod hypvol;
pub mod random;
pub mod render;
pub mod report;
pub mod typing;

pub use arrangement::{build_planar_map, intersect_strands, parse_divide_file};
pub use divide::Divide;
pub use error::Error;
