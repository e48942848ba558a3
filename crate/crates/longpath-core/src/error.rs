use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("vertex {v} is outside 0..{n}")]
    NoSuchVertex { v: usize, n: usize },
    #[error("source and target must differ (both are {0})")]
    SameEndpoints(usize),
    #[error("graph is not strongly connected: {to} is unreachable from {from}")]
    NotStronglyConnected { from: usize, to: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("target {t} is unreachable from {s}")]
    Unreachable { s: usize, t: usize },
    #[error("subset DP limited to {cap} vertices, graph has {n}")]
    DpCapExceeded { n: usize, cap: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}
