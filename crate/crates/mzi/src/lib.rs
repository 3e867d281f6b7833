//! Exact multiplicative Zagreb indices and their extremal structures on
//! small graphs.
//!
//! The first multiplicative Zagreb index of a graph is the product of the
//! squared vertex degrees; the second is the product over edges of the
//! endpoint degree product, equivalently the product of `d(v)^d(v)` over
//! vertices. This crate computes both exactly in arbitrary precision,
//! builds the families that attain their extremes under connectivity caps
//! or a fixed pendant count, and verifies the extremal statements
//! exhaustively over all small graphs via isomorph-free enumeration.
//!
//! # Example
//!
//! ```
//! use mzi::constructions::path;
//! use mzi::indices::{pi1, pi2};
//! use num_bigint::BigUint;
//!
//! let p4 = path(4).unwrap();
//! assert_eq!(pi1(&p4), BigUint::from(16u32));
//! assert_eq!(pi2(&p4), BigUint::from(16u32));
//! ```

pub mod canon;
pub mod connectivity;
pub mod constructions;
pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod transforms;
pub mod verify;

#[cfg(test)]
pub(crate) mod test_support;

pub use canon::{canonical_form, CanonicalCode};
pub use connectivity::ClassConstraint;
pub use graph::Graph;
pub use num_bigint::BigUint;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph order must be between 1 and 64, got {0}")]
    OrderOutOfRange(usize),
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeAbsent(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("log-domain index undefined: graph has a degree-0 vertex")]
    DegenerateLog,
    #[error("invalid class constraint: {0}")]
    InvalidConstraint(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("enumeration order {got} outside supported range 1..={max}")]
    EnumRange { got: usize, max: usize },
    #[error("class has no members")]
    EmptyClass,
}

pub type Result<T> = std::result::Result<T, Error>;
