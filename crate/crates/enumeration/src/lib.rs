//! Exact enumeration of smooth positroid varieties.
//!
//! The number s(n) of smooth positroid varieties in all Grassmannians
//! Gr(k, n) together is computed three ways: a big-integer coefficient
//! extraction from a generating-function power ([`smooth_count_coeff`]), a
//! partial-Bell-polynomial recurrence ([`smooth_count_bell`]), and a
//! dynamic program over noncrossing partitions that also refines the count
//! by k and by number of components ([`census`]). A brute-force
//! classification of all decorated permutations ([`brute_force_census`])
//! serves as an independent check for small n, and [`growth_ratio`]
//! renders consecutive-term ratios exactly.

mod census;
mod counts;
mod poly;

pub use census::{brute_force_census, census, Census, CensusRow};
pub use counts::{
    bell_b, growth_ratio, smooth_count_bell, smooth_count_coeff, spirograph_count,
};
pub use poly::IntPolynomial;

/// Errors reported by enumeration routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
