//! Error types for the whole pipeline.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: open strand endpoint {point} is not on the square boundary")]
    EndpointOffBoundary { line: usize, point: String },

    #[error("line {line}: interior point {point} of an open strand lies on the square boundary")]
    InteriorPointOnBoundary { line: usize, point: String },

    #[error("line {line}: closed strand touches the square boundary at {point}")]
    ClosedStrandTouchesBoundary { line: usize, point: String },

    #[error("line {line}: point {point} lies outside the square [-{n},{n}]^2")]
    PointOutsideSquare { line: usize, point: String, n: i64 },

    #[error("line {line}: zero-length segment at {point}")]
    ZeroLengthSegment { line: usize, point: String },

    #[error("line {line}: closed strand repeats the point {point}")]
    RepeatedPoint { line: usize, point: String },

    #[error("line {line}: segment lies on the square boundary")]
    SegmentOnBoundary { line: usize },

    #[error("tangency between strand {s0} and strand {s1} near {at}")]
    Tangency { s0: usize, s1: usize, at: String },

    #[error("crossing at a polyline vertex (corner crossing) at {at}")]
    CornerCrossing { at: String },

    #[error("triple point at {at}")]
    TriplePoint { at: String },

    #[error("divide is disconnected")]
    Disconnected,

    #[error("divide has no double point")]
    NoDoublePoint,

    #[error("divide has a Type 6-3 double point: the link is the Hopf link, non-hyperbolic")]
    HopfCase,

    #[error("divide is not prime-admissible: vertex types {found:?} have no block decomposition")]
    NotPrimeAdmissible { found: Vec<String> },

    #[error("a connected divide with a Type 6-3 vertex must be the X-shape (one double point), found {double_points}")]
    BadHopfStructure { double_points: usize },

    #[error("Dehn filling bound inapplicable: slope length {len} does not exceed 2*pi")]
    BoundInapplicable { len: f64 },

    #[error("angle sum precondition violated: {0}")]
    AngleSum(String),

    #[error("hole count mismatch on divide edge {edge}: {a} vs {b}")]
    HoleCountMismatch { edge: usize, a: usize, b: usize },

    #[error("boundary component is not a torus: {0}")]
    NonTorusBoundary(String),

    #[error("rectification failure: {0}")]
    RectificationFailure(String),

    #[error("projection coincidence: {0}")]
    PerturbationError(String),

    #[error("random divide generation timed out after {attempts} attempts")]
    GenerationTimeout { attempts: usize },

    #[error("unknown corpus divide {0:?}")]
    UnknownCorpus(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
