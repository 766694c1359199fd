use perm_core::{KSubset, Permutation};
use serde::Serialize;

use crate::{DecoratedPermutation, Error, Result};

/// A partition of `[n]` into blocks no two of which interleave cyclically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<KSubset>,
}

impl NoncrossingPartition {
    /// Validates that the blocks are disjoint, cover `[n]`, and are pairwise
    /// noncrossing; blocks are sorted by minimum element.
    pub fn new(n: usize, mut blocks: Vec<KSubset>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.n() != n || b.k() == 0 {
                return Err(Error::NotANoncrossingPartition(n));
            }
            for &e in b.elements() {
                if seen[e] {
                    return Err(Error::NotANoncrossingPartition(n));
                }
                seen[e] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(Error::NotANoncrossingPartition(n));
        }
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks_cross(&blocks[i], &blocks[j]) {
                    return Err(Error::NotANoncrossingPartition(n));
                }
            }
        }
        blocks.sort_by_key(|b| b.elements()[0]);
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[KSubset] {
        &self.blocks
    }
}

/// True iff the two disjoint sets interleave cyclically: some `a < b < c < d`
/// in cyclic order with `a, c` in one and `b, d` in the other. Equivalently,
/// walking once around the circle through the elements of the union meets
/// more than two maximal runs of constant membership.
fn blocks_cross(s: &KSubset, t: &KSubset) -> bool {
    let mut labels: Vec<(usize, bool)> = s
        .elements()
        .iter()
        .map(|&e| (e, true))
        .chain(t.elements().iter().map(|&e| (e, false)))
        .collect();
    labels.sort_unstable();
    let runs = labels
        .iter()
        .zip(labels.iter().cycle().skip(1))
        .filter(|((_, a), (_, b))| a != b)
        .count();
    runs > 2
}

impl DecoratedPermutation {
    /// Decomposes the chord diagram into its connected components: the unique
    /// noncrossing partition of `[n]` whose blocks are unions of cycle
    /// supports closed under cyclic crossing, together with the restricted
    /// decorated permutations relabeled order-preservingly to `[|B|]`.
    ///
    /// Every component is stabilized-interval-free and reassembling the
    /// components reproduces `w°`.
    pub fn sif_decomposition(&self) -> (NoncrossingPartition, Vec<DecoratedPermutation>) {
        let n = self.n();
        // Start from the cycle supports (loops are singletons).
        let mut part_of: Vec<usize> = vec![usize::MAX; n + 1];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for i in 1..=n {
            if part_of[i] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut cycle = vec![i];
            part_of[i] = id;
            let mut j = self.perm().apply(i);
            while j != i {
                part_of[j] = id;
                cycle.push(j);
                j = self.perm().apply(j);
            }
            cycle.sort_unstable();
            parts.push(cycle);
        }
        // Merge parts whose supports interleave until the partition is
        // noncrossing.
        loop {
            let live: Vec<usize> =
                (0..parts.len()).filter(|&i| !parts[i].is_empty()).collect();
            let mut merged = false;
            'merge: for (ai, &a) in live.iter().enumerate() {
                for &b in &live[ai + 1..] {
                    let sa = KSubset::new(n, parts[a].clone()).unwrap();
                    let sb = KSubset::new(n, parts[b].clone()).unwrap();
                    if blocks_cross(&sa, &sb) {
                        let moved = std::mem::take(&mut parts[b]);
                        parts[a].extend(moved);
                        parts[a].sort_unstable();
                        merged = true;
                        break 'merge;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        let blocks: Vec<KSubset> = parts
            .into_iter()
            .filter(|p| !p.is_empty())
            .map(|p| KSubset::new(n, p).unwrap())
            .collect();
        let partition = NoncrossingPartition::new(n, blocks).expect("closure is noncrossing");
        let components: Vec<DecoratedPermutation> = partition
            .blocks()
            .iter()
            .map(|b| self.restrict_to(b))
            .collect();
        debug_assert!(components.iter().all(|c| c.is_sif()));
        debug_assert_eq!(reassemble(&partition, &components), *self);
        (partition, components)
    }

    /// Restricts to a block that is a union of cycles, relabeling
    /// order-preservingly to `[|B|]`.
    fn restrict_to(&self, block: &KSubset) -> DecoratedPermutation {
        let elems = block.elements();
        let index = |e: usize| elems.binary_search(&e).unwrap() + 1;
        let vals: Vec<usize> = elems.iter().map(|&e| index(self.perm().apply(e))).collect();
        let perm = Permutation::from_one_line(vals).unwrap();
        let (mut cw, mut ccw) = (Vec::new(), Vec::new());
        for &e in elems {
            match self.orientation(e) {
                Some(crate::LoopOrientation::Cw) => cw.push(index(e)),
                Some(crate::LoopOrientation::Ccw) => ccw.push(index(e)),
                None => {}
            }
        }
        DecoratedPermutation::new(perm, &cw, &ccw).unwrap()
    }

    /// True iff no proper nonempty interval `[a, b] ⊂ [n]` is stabilized
    /// (`w[a,b] = [a,b]`); every decorated permutation of `[1]` qualifies.
    pub fn is_sif(&self) -> bool {
        let n = self.n();
        if n == 1 {
            return true;
        }
        for a in 1..=n {
            for b in a..=n {
                if b - a + 1 == n {
                    continue;
                }
                if (a..=b).all(|i| (a..=b).contains(&self.perm().apply(i))) {
                    return false;
                }
            }
        }
        true
    }
}

/// Rebuilds a decorated permutation from a noncrossing partition and a
/// component per block (inverse of `sif_decomposition`).
pub fn reassemble(
    partition: &NoncrossingPartition,
    components: &[DecoratedPermutation],
) -> DecoratedPermutation {
    let n = partition.n();
    let mut vals = vec![0usize; n];
    let (mut cw, mut ccw) = (Vec::new(), Vec::new());
    for (block, comp) in partition.blocks().iter().zip(components) {
        let elems = block.elements();
        for (j, &e) in elems.iter().enumerate() {
            vals[e - 1] = elems[comp.perm().apply(j + 1) - 1];
            match comp.orientation(j + 1) {
                Some(crate::LoopOrientation::Cw) => cw.push(e),
                Some(crate::LoopOrientation::Ccw) => ccw.push(e),
                None => {}
            }
        }
    }
    let perm = Permutation::from_one_line(vals).unwrap();
    DecoratedPermutation::new(perm, &cw, &ccw).unwrap()
}
