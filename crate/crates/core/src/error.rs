use thiserror::Error;

use crate::{EdgeId, VertexId};

/// Errors reported by the library.
///
/// Duality failures are not errors: they are reported through
/// [`crate::Verdict`]. Errors are reserved for violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe of {requested} vertices exceeds the limit of {limit}")]
    UniverseTooLarge { requested: usize, limit: usize },

    #[error("vertex {vertex} is outside a universe of {universe} vertices")]
    VertexOutOfRange { vertex: usize, universe: usize },

    #[error("hypergraphs are defined over different universes ({left} vs {right} vertices)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("vertex {0} is not a member of the given set")]
    VertexNotInSet(VertexId),

    #[error("extension not applicable: {0}")]
    Extension(String),

    #[error("included and excluded sets overlap")]
    Overlap,

    #[error("label set is not congruent: {0}")]
    Incongruent(String),

    #[error("path step {step} is not applicable: {reason}")]
    InvalidPath { step: usize, reason: String },

    #[error("edge {0} does not exist")]
    EdgeOutOfRange(EdgeId),

    #[error("the given set is not a transversal")]
    NotTransversal,

    #[error("hypergraph is not simple: edge {contained} is contained in edge {container}")]
    NotSimple {
        contained: EdgeId,
        container: EdgeId,
    },

    #[error("intersection property violated: G edge {g} and H edge {h} are disjoint")]
    IntersectionProperty { g: EdgeId, h: EdgeId },

    #[error("oracle limit exceeded: {vertices} vertices, limit {limit}")]
    OracleLimit { vertices: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
