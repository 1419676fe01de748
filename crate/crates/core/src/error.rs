use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0}-{1} has a non-positive weight")]
    NonpositiveWeight(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected; eccentricity is undefined")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, limit: usize },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("weighted graphs are not supported by {0}")]
    WeightedUnsupported(&'static str),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error("family `{0}` has no closed-form value for these parameters")]
    NoClosedForm(String),
    #[error("bad pendant-path configuration: {0}")]
    BadConfig(String),
    #[error("transformation not applicable: {0}")]
    NotApplicable(String),
    #[error("no eligible (u, w) pair for rotation")]
    NoEligiblePair,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
