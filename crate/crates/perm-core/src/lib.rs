//! Exact permutations of `[n] = {1, …, n}` with Bruhat-order machinery:
//! length, the tableau and Grassmannian order criteria, brute-force interval
//! enumeration, and canonical coset representatives.
//!
//! All values are 1-based in every public interface; permutations are held in
//! one-line notation `w(1), …, w(n)`.

mod bruhat;
mod perm;
mod subset;

pub use bruhat::{bruhat_covers, bruhat_interval, bruhat_leq};
pub use perm::{all_permutations, Permutation};
pub use subset::KSubset;

/// Errors raised by permutation and subset construction and queries.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("one-line notation {0:?} is not a bijection on [{1}]")]
    NotABijection(Vec<usize>, usize),
    #[error("subset element {0} out of range for ground set [{1}]")]
    ElementOutOfRange(usize, usize),
    #[error("duplicate subset element {0}")]
    DuplicateElement(usize),
    #[error("ground sets differ: {0} vs {1}")]
    MismatchedGroundSets(usize, usize),
    #[error("index {0} out of range for [{1}]")]
    IndexOutOfRange(usize, usize),
    #[error("{0} is not {1}-Grassmannian")]
    NotGrassmannian(Permutation, usize),
    #[error("interval requires u <= v in Bruhat order")]
    NotAnInterval,
    #[error("interval enumeration is limited to n <= {0}, got n = {1}")]
    IntervalTooLarge(usize, usize),
    #[error("canonical representative undefined: element {0} of I exceeds v({1}) = {2}")]
    CanonicalRepPrecondition(usize, usize, usize),
    #[error("ground sets larger than 64 are unsupported")]
    GroundSetTooLarge,
}

pub type Result<T> = std::result::Result<T, Error>;
