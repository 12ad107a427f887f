use thiserror::Error;

use crate::exact::ExactError;
use crate::tree::{NewickError, TreeError};

/// Crate-level error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Newick(#[from] NewickError),

    #[error(transparent)]
    Tree(#[from] TreeError),

    #[error(transparent)]
    Exact(#[from] ExactError),

    /// A brute-force routine was asked to run beyond its configured size.
    #[error("{what}: size {actual} exceeds the configured bound {limit}")]
    ScaleBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computed quantity contradicts a proven identity. Either the input is
    /// not what the caller claims (e.g. a rank oracle that is not a tree
    /// matroid) or there is a bug.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
