use thiserror::Error;

use crate::realizability::Certificate;

/// Errors reported by instance validation, the solver phases, the graph
/// construction, and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The instance data itself is malformed: negative entries, inverted
    /// intervals, or vector lengths that disagree with the part sizes.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// The instance is well-formed but admits no realization. Carries the
    /// smallest violated dominance prefix as a certificate.
    #[error("not realizable: {0}")]
    NotRealizable(Certificate),

    /// The degree pair handed to the construction step admits no bipartite
    /// graph with exactly those degrees.
    #[error("degree pair is not bi-graphical")]
    NotBigraphical,

    /// An edge list referenced vertices outside the declared part sizes or
    /// contained a duplicate edge.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A caller violated a documented precondition of a solver routine.
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    /// The exhaustive oracle was asked to enumerate more cells than its budget.
    #[error("instance too large for exhaustive enumeration: {cells} cells (limit {limit})")]
    EnumerationBudget { cells: usize, limit: usize },
}
