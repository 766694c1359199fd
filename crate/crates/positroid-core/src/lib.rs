//! Positroids as explicit basis collections: construction from decorated
//! permutations, Grassmann intervals, necklaces, and rational matrices;
//! Johnson graphs and their DOT export; tangent-space codimension at torus
//! fixed points with an exact Jacobian rank oracle; and the matroid
//! operations (dual, cyclic shift, ground reversal, direct sum).

mod gale;
mod jacobian;
mod johnson;
mod matrix;
mod positroid;

pub use gale::gale_leq;
pub use jacobian::{jacobian_matrix, jacobian_rank_oracle};
pub use johnson::JohnsonGraph;
pub use matrix::RationalMatrix;
pub use positroid::{codimension, Positroid};

/// Errors raised by positroid construction and queries.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] perm_core::Error),
    #[error(transparent)]
    Decorated(#[from] decorated_perm::Error),
    #[error("subset sizes differ: {0} vs {1}")]
    MismatchedSizes(usize, usize),
    #[error("{0} is not a basis of the matroid")]
    NotABasis(perm_core::KSubset),
    #[error("the basis collection is not a positroid")]
    NotAPositroid,
    #[error("matrix is rank-deficient: rank {0} < {1} rows")]
    RankDeficient(usize, usize),
    #[error("invalid rational entry {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
