//! Decorated permutations and their chord-diagram combinatorics: alignments,
//! crossings, crossed alignments, spirographs, stabilized-interval-free
//! decomposition, the bijections to Grassmann intervals and necklaces, and
//! the rigid transformations of the diagram.

mod arcs;
mod decorated;
mod interval;
mod sif;
mod svg;

pub use arcs::{crossings, Alignment, Arc, CrossedAlignment, Tacking};
pub use decorated::{all_decorated, DecoratedPermutation, LoopOrientation, Transform};
pub use interval::{GrassmannInterval, GrassmannNecklace};
pub use sif::{reassemble, NoncrossingPartition};
pub use svg::chord_diagram_svg;

/// Errors raised when constructing or converting decorated permutations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] perm_core::Error),
    #[error("orientation must be given for exactly the fixed points; offending point {0}")]
    BadOrientation(usize),
    #[error("shift index {0} out of range for [{1}]")]
    ShiftOutOfRange(usize, usize),
    #[error("spirograph shift {0} invalid for n = {1}")]
    BadSpirographShift(usize, usize),
    #[error("the given sets do not form a Grassmann necklace: {0}")]
    NotANecklace(String),
    #[error("not a Grassmann interval: {0}")]
    NotAGrassmannInterval(String),
    #[error("blocks do not form a noncrossing partition of [{0}]")]
    NotANoncrossingPartition(usize),
    #[error("invalid decorated-permutation JSON: {0}")]
    BadJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
