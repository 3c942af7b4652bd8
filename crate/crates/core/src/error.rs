use thiserror::Error;

/// Single error type for the whole crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid scalar literal `{0}`")]
    BadScalar(String),

    #[error("invalid surface group: {0}")]
    BadGroup(String),

    #[error("group element exponent {0} exceeds the supported bound")]
    ExponentOverflow(i64),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("boundary self-intersects")]
    NonSimple,

    #[error("edge {0}-{1} is not a segment")]
    EdgeNotSegment(usize, usize),

    #[error("vertices {0} and {1} are the same surface point")]
    RepeatedVertex(usize, usize),

    #[error("polygon overlaps one of its own copies")]
    SelfOverlap,

    #[error("vertices {0} and {1} are adjacent or equal")]
    AdjacentVertices(usize, usize),

    #[error("unsupported surface kind for this operation: {0}")]
    UnsupportedKind(String),

    #[error("not triangulable")]
    NotTriangulable,

    #[error("size bound exceeded: {size} > {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("crossing edges {0:?} and {1:?}")]
    CrossingEdges((usize, usize), (usize, usize)),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("illegal flip of {0:?}")]
    IllegalFlip((usize, usize)),

    #[error("flip graph is not closed under flips")]
    ClosureViolation,

    #[error("unknown triangulation")]
    UnknownNode,

    #[error("disconnected")]
    Disconnected,

    #[error("point set is in Euclidean position")]
    EuclideanPosition,

    #[error("triangulations have different boundaries")]
    DifferentBoundaries,

    #[error("vertex {0} is not an extreme earable vertex")]
    NotExtremeEarable(usize),

    #[error("constructive step failed: {0}")]
    Construction(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadScalar(_) => "bad-scalar",
            Error::BadGroup(_) => "bad-group",
            Error::ExponentOverflow(_) => "exponent-overflow",
            Error::Degenerate(_) => "degenerate",
            Error::NonSimple => "non-simple",
            Error::EdgeNotSegment(..) => "edge-not-segment",
            Error::RepeatedVertex(..) => "repeated-vertex",
            Error::SelfOverlap => "self-overlap",
            Error::AdjacentVertices(..) => "adjacent-vertices",
            Error::UnsupportedKind(_) => "unsupported-kind",
            Error::NotTriangulable => "not-triangulable",
            Error::SizeBound { .. } => "size-bound",
            Error::CrossingEdges(..) => "crossing-edges",
            Error::InvalidTriangulation(_) => "invalid-triangulation",
            Error::IllegalFlip(_) => "illegal-flip",
            Error::ClosureViolation => "closure-violation",
            Error::UnknownNode => "unknown-node",
            Error::Disconnected => "disconnected",
            Error::EuclideanPosition => "euclidean-position",
            Error::DifferentBoundaries => "different-boundaries",
            Error::NotExtremeEarable(_) => "not-extreme-earable",
            Error::Construction(_) => "construction",
            Error::UnknownFixture(_) => "unknown-fixture",
            Error::Malformed(_) => "malformed",
        }
    }

    /// Whether the input itself is unusable, as opposed to a well-formed input with no answer.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::BadScalar(_)
                | Error::BadGroup(_)
                | Error::Degenerate(_)
                | Error::NonSimple
                | Error::EdgeNotSegment(..)
                | Error::RepeatedVertex(..)
                | Error::SelfOverlap
                | Error::Malformed(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
