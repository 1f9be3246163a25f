use thiserror::Error;

/// Errors raised by graph, complex and homology constructions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: u64, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("pattern graph has {size} vertices, brute-force cap is {cap}")]
    PatternTooLarge { size: usize, cap: usize },

    #[error("face limit exceeded: construction needs more than {limit} faces (reached {reached})")]
    FaceLimit { reached: usize, limit: usize },

    #[error("{0} is not a vertex of the complex")]
    NotAVertex(u32),

    #[error("face {0:?} does not belong to the complex")]
    FaceNotInComplex(Vec<u32>),

    #[error("not a subcomplex: face {0:?} is missing from the ambient complex")]
    NotSubcomplex(Vec<u32>),

    #[error("vertex counts differ ({0} vs {1})")]
    VertexCountMismatch(usize, usize),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("torsion coefficient {0} does not fit in 64 bits")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for resource-guard failures (as opposed to bad input).
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::FaceLimit { .. } | Error::PatternTooLarge { .. })
    }
}
