use thiserror::Error;

/// Errors reported by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("parallel edge `{0}`-`{1}`")]
    ParallelEdge(String, String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("color class {0} contains a cycle")]
    CyclicColorClass(u32),
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance exceeds oracle capacity: {what} = {got}, bound {bound}")]
    Capacity {
        what: &'static str,
        got: usize,
        bound: usize,
    },
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("variable x{0} does not occur in any clause")]
    UnusedVariable(u32),
    #[error("assignment does not satisfy the formula: {0}")]
    UnsatisfyingAssignment(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
