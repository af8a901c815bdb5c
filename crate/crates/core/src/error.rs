use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loops unsupported: edge ({0}, {0})")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range for graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("invalid parameter for {kind}: {reason}")]
    InvalidParameter { kind: &'static str, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has parallel edges but a simple graph is required")]
    NotSimple,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph has no more edges than vertices (m = {m}, n = {n}); no chain structure")]
    NoExcessEdges { n: usize, m: usize },
    #[error("chain index {index} out of range ({count} chains)")]
    ChainOutOfRange { index: usize, count: usize },
    #[error("edge set is not a cut")]
    NotACut,
    #[error("edge count {m} exceeds brute-force budget of {max} edges")]
    TooManyEdges { m: usize, max: usize },
    #[error("spectra have different lengths ({left} vs {right} edges)")]
    SpectrumLengthMismatch { left: usize, right: usize },
    #[error("graphs do not share the same (n, m) class")]
    MixedClass,
    #[error("failure probability must lie in [0, 1]")]
    RhoOutOfRange,
    #[error("{0}")]
    BadSubdivision(String),
    #[error("H_n is undefined for n = {n}: a chain length would drop to zero")]
    HnUndefined { n: usize },
    #[error("n = {n} below the minimum {min} for this construction")]
    NBelowMinimum { n: usize, min: usize },
    #[error("enumeration needs {needed} labeled candidates, over budget {budget}")]
    OverBudget { needed: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph does not fit the (2p+i, 3p+i) frame with p >= 2")]
    FrameMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
