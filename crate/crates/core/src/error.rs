use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) has multiplicity zero")]
    ZeroMultiplicity(usize, usize),

    #[error("invalid color scheme: r = {r} exceeds k = {k} or k = 0")]
    InvalidScheme { k: usize, r: usize },

    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },

    #[error("coloring is not feasible for scheme (r = {r}, k = {k})")]
    InfeasibleColoring { k: usize, r: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance too large: {what} = {size} exceeds limit {limit}")]
    InstanceTooLarge { what: &'static str, size: f64, limit: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
