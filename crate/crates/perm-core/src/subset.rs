use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A subset of `[n]`, stored as a strictly increasing list of elements.
///
/// Ordering is lexicographic on the sorted element lists, giving deterministic
/// output order everywhere subsets are listed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: usize,
    elements: Vec<usize>,
}

impl KSubset {
    /// Builds a subset of `[n]`; elements may arrive in any order but must be
    /// distinct and within range.
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        for (i, &e) in elements.iter().enumerate() {
            if e < 1 || e > n {
                return Err(Error::ElementOutOfRange(e, n));
            }
            if i > 0 && elements[i - 1] == e {
                return Err(Error::DuplicateElement(e));
            }
        }
        Ok(Self { n, elements })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, elements: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The subset size `k`.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Bitmask with bit `e-1` set for each element `e`; requires `n ≤ 64`.
    pub fn mask(&self) -> Result<u64> {
        if self.n > 64 {
            return Err(Error::GroundSetTooLarge);
        }
        Ok(self.elements.iter().fold(0u64, |m, &e| m | (1u64 << (e - 1))))
    }

    /// Inverse of [`KSubset::mask`].
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let elements = (1..=n).filter(|&e| mask & (1u64 << (e - 1)) != 0).collect();
        Self { n, elements }
    }

    /// The complement `[n] \ self`.
    pub fn complement(&self) -> Self {
        let elements = (1..=self.n).filter(|&e| !self.contains(e)).collect();
        Self { n: self.n, elements }
    }

    /// Size of the intersection with another subset of the same ground set.
    pub fn intersection_size(&self, other: &Self) -> usize {
        self.elements.iter().filter(|&&e| other.contains(e)).count()
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KSubset({self})")
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

impl Serialize for KSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}
