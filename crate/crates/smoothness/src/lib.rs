//! Smoothness decisions for positroid varieties.
//!
//! A positroid variety is smooth exactly when its decorated permutation
//! avoids crossed alignments, and this is equivalent to several other
//! conditions: a uniform tangent-space codimension over all torus-fixed
//! points, regularity of the Johnson graph on bases, every stabilized
//! interval-free component being a spirograph, and the matroid being a
//! direct sum of uniform matroids. [`smoothness_report`] evaluates all of
//! them, asserts they agree, and returns a verdict with a concrete witness
//! when the variety is singular.
//!
//! The crate also exposes the combinatorial machinery behind the
//! equivalence proof: anti-exchange pairs at the first necklace set and the
//! injection from those pairs into alignments ([`psi_map`]).

mod anti_exchange;
mod report;

pub use anti_exchange::{
    anti_exchange_pairs, exchange_test_I1, psi_map, AeClass, AntiExchangePair,
};
pub use report::{
    singular_tfixed_points, smoothness_report, SmoothnessReport, Verdict, Witness,
};

/// Errors reported by smoothness computations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] perm_core::Error),
    #[error(transparent)]
    Decorated(#[from] decorated_perm::Error),
    #[error(transparent)]
    Positroid(#[from] positroid_core::Error),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("({0},{1}) is not an anti-exchange pair")]
    NotAntiExchangePair(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
