//! The cord matroid of a phylogenetic X-tree.
//!
//! For an X-tree `T` with edge set `E`, every cord `xy` (a pair of distinct
//! leaves) gives a 0/1 vector over `E` marking the path between `x` and `y`.
//! The matroid on the cords represented by these vectors decides which sets
//! of leaf-to-leaf distances determine the edge weights of `T`, and its
//! structure encodes the tree itself.
//!
//! Everything is computed exactly over the rationals.

pub mod cli;
pub mod error;
pub mod exact;
pub mod lasso;
pub mod matroid;
pub mod reconstruct;
pub mod stargraph;
pub mod tree;

pub use error::{Error, Result};
