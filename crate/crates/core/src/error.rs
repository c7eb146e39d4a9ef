use thiserror::Error;

use crate::poset::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("order table is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset has no unique minimum")]
    NoUniqueBottom,
    #[error("poset has no unique maximum")]
    NoUniqueTop,
    #[error("elements {0} and {1} are not comparable (x <= y required)")]
    NotComparable(ElementId, ElementId),
    #[error("interval is not a lattice")]
    NotALattice,
    #[error("chain is not a bottom-to-top chain of the interval")]
    ChainNotInInterval,
    #[error("not a forest: {0}")]
    NotAForest(String),
    #[error("interval is decomposable; an indecomposable interval is required")]
    InputDecomposable,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = HopfError> = std::result::Result<T, E>;
