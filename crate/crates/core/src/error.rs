use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("iteration {iteration} would produce {vertices} vertices, above the cap of {cap}")]
    SizeCapExceeded {
        iteration: usize,
        vertices: usize,
        cap: usize,
    },
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("automorphism group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("automorphism search exceeded its cap: {0}")]
    SearchCapExceeded(String),
    #[error("work cap of {cap} elementary steps exceeded")]
    WorkCapExceeded { cap: u64 },
    #[error("no distinguishing coloring with at most {max} colors")]
    ColorCapExceeded { max: usize },
    #[error("ineligible graph: {0}")]
    IneligibleGraph(String),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short stable name of the error class.
    pub fn name(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "OutOfRange",
            Error::LoopEdge(_) => "LoopEdge",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::EmptyGraph => "EmptyGraph",
            Error::Disconnected => "Disconnected",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::NotAutomorphism => "NotAutomorphism",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::SearchCapExceeded(_) => "SearchCapExceeded",
            Error::WorkCapExceeded { .. } => "WorkCapExceeded",
            Error::ColorCapExceeded { .. } => "ColorCapExceeded",
            Error::IneligibleGraph(_) => "IneligibleGraph",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotATree => "NotATree",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Parse { .. } => "ParseError",
            Error::Verification(_) => "VerificationFailed",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Json(_) => 2,
            Error::OutOfRange { .. } | Error::LoopEdge(_) | Error::DuplicateEdge(..) => 2,
            Error::IneligibleGraph(_)
            | Error::Disconnected
            | Error::NotATree
            | Error::EmptyGraph
            | Error::NotAutomorphism => 3,
            Error::SizeCapExceeded { .. }
            | Error::GroupTooLarge { .. }
            | Error::SearchCapExceeded(_)
            | Error::WorkCapExceeded { .. }
            | Error::ColorCapExceeded { .. } => 4,
            Error::Verification(_) => 5,
            Error::SizeMismatch { .. } | Error::IndexOutOfRange { .. } | Error::Io(_) => 1,
        }
    }
}
