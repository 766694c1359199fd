use perm_core::KSubset;

use crate::{Error, Result};

/// The shifted Gale order: `I ⪯_r J` iff after sorting both sets under the
/// linear order `r <_r r+1 <_r ⋯ <_r r−1`, each element of `I` is `≤_r` the
/// corresponding element of `J`.
pub fn gale_leq(i: &KSubset, j: &KSubset, r: usize) -> Result<bool> {
    if i.k() != j.k() {
        return Err(Error::MismatchedSizes(i.k(), j.k()));
    }
    let n = i.n();
    let key = |x: usize| (x + n - r) % n;
    let mut a: Vec<usize> = i.elements().iter().map(|&x| key(x)).collect();
    let mut b: Vec<usize> = j.elements().iter().map(|&x| key(x)).collect();
    a.sort_unstable();
    b.sort_unstable();
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// Mask-level shifted Gale comparison used in the hot construction loops:
/// `keys` must hold `key(x) = (x − r) mod n` sorted ascending for the
/// left-hand set.
pub(crate) fn gale_leq_mask(left_keys: &[usize], right_mask: u64, n: usize, r: usize) -> bool {
    let mut idx = 0;
    // Walk [n] in <_r order; every time an element of the right set appears,
    // it must dominate the next key of the left set.
    for key in 0..n {
        let x = (key + r - 1) % n + 1;
        if right_mask & (1u64 << (x - 1)) != 0 {
            if left_keys[idx] > key {
                return false;
            }
            idx += 1;
            if idx == left_keys.len() {
                return true;
            }
        }
    }
    idx == left_keys.len()
}
