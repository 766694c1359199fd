use std::fmt;

use decorated_perm::{DecoratedPermutation, GrassmannInterval, GrassmannNecklace};
use perm_core::KSubset;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::gale::gale_leq_mask;
use crate::{Error, Result};

/// A rank-`k` basis collection on `[n]`, stored as sorted bitmasks.
///
/// The constructors from decorated permutations, intervals, and necklaces
/// always produce positroids; [`Positroid::from_matrix`] produces the matroid
/// of any full-rank matrix, and arbitrary collections can be wrapped with
/// [`Positroid::from_bases`] (membership of the positroid class is then
/// established by the round trip through `decorated_from_positroid`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Positroid {
    n: usize,
    k: usize,
    bases: Vec<u64>,
}

impl Positroid {
    /// Wraps an explicit nonempty list of `k`-subsets of `[n]`.
    pub fn from_bases(n: usize, k: usize, bases: &[KSubset]) -> Result<Self> {
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if b.n() != n {
                return Err(perm_core::Error::MismatchedGroundSets(b.n(), n).into());
            }
            if b.k() != k {
                return Err(Error::MismatchedSizes(b.k(), k));
            }
            masks.push(b.mask()?);
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Self { n, k, bases: masks })
    }

    /// The positroid `M(w°) = {I : I_r(w°) ⪯_r I for all r}`, by filtering
    /// all of `C(n,k)` through the `n` shifted Gale conditions.
    ///
    /// Complexity is `C(n,k)·n·k`; intended for moderate `n` (≤ 20 or so).
    pub fn from_decorated(w: &DecoratedPermutation) -> Self {
        let n = w.n();
        let necklace = w.grassmann_necklace();
        let k = necklace.k();
        // Pre-sort each necklace set by its shifted key.
        let keyed: Vec<Vec<usize>> = (1..=n)
            .map(|r| {
                let mut keys: Vec<usize> = necklace
                    .set(r)
                    .elements()
                    .iter()
                    .map(|&x| (x + n - r) % n)
                    .collect();
                keys.sort_unstable();
                keys
            })
            .collect();
        let bases = masks_of_size(n, k)
            .filter(|&m| (1..=n).all(|r| gale_leq_mask(&keyed[r - 1], m, n, r)))
            .collect();
        Self { n, k, bases }
    }

    /// The positroid `{y[k] : y ∈ [u,v]}` of a Grassmann interval, by
    /// brute-force interval enumeration (so limited to `n ≤ 8`).
    pub fn from_interval(iv: &GrassmannInterval) -> Result<Self> {
        let members = perm_core::bruhat_interval(&iv.u, &iv.v)?;
        let sets: Vec<KSubset> = members.iter().map(|y| y.initial_set(iv.k)).collect();
        Self::from_bases(iv.n(), iv.k, &sets)
    }

    /// The positroid of a Grassmann necklace.
    pub fn from_necklace(neck: &GrassmannNecklace) -> Result<Self> {
        Ok(Self::from_decorated(&DecoratedPermutation::from_necklace(neck)?))
    }

    /// Recovers the unique decorated permutation with `M(w°) = M`: the
    /// `⪯_r`-minima of the bases form the Grassmann necklace. Fails (as "not
    /// a positroid") when a minimum is missing or the round trip does not
    /// reproduce the bases.
    pub fn decorated_permutation(&self) -> Result<DecoratedPermutation> {
        let mut sets = Vec::with_capacity(self.n);
        for r in 1..=self.n {
            let min = self
                .bases
                .iter()
                .find(|&&cand| {
                    let keys = self.sorted_keys(cand, r);
                    self.bases.iter().all(|&other| gale_leq_mask(&keys, other, self.n, r))
                })
                .copied()
                .ok_or(Error::NotAPositroid)?;
            sets.push(KSubset::from_mask(self.n, min));
        }
        let neck = GrassmannNecklace::from_sets(sets).map_err(|_| Error::NotAPositroid)?;
        let w = DecoratedPermutation::from_necklace(&neck).map_err(|_| Error::NotAPositroid)?;
        if Self::from_decorated(&w) != *self {
            return Err(Error::NotAPositroid);
        }
        Ok(w)
    }

    fn sorted_keys(&self, mask: u64, r: usize) -> Vec<usize> {
        let mut keys: Vec<usize> = (1..=self.n)
            .filter(|&x| mask & (1u64 << (x - 1)) != 0)
            .map(|x| (x + self.n - r) % self.n)
            .collect();
        keys.sort_unstable();
        keys
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.bases
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: &KSubset) -> bool {
        set.mask().map(|m| self.contains_mask(m)).unwrap_or(false)
    }

    /// The bases as sorted subsets, in lexicographic order.
    pub fn bases(&self) -> Vec<KSubset> {
        let mut sets: Vec<KSubset> =
            self.bases.iter().map(|&m| KSubset::from_mask(self.n, m)).collect();
        sets.sort();
        sets
    }

    /// The nonbases `Q(M) = C(n,k) \ M`, in lexicographic order.
    pub fn nonbases(&self) -> Vec<KSubset> {
        let mut sets: Vec<KSubset> = masks_of_size(self.n, self.k)
            .filter(|&m| !self.contains_mask(m))
            .map(|m| KSubset::from_mask(self.n, m))
            .collect();
        sets.sort();
        sets
    }

    /// True iff the collection satisfies the basis exchange property.
    pub fn satisfies_basis_exchange(&self) -> bool {
        self.bases.iter().all(|&i| {
            self.bases.iter().all(|&j| {
                let only_i = i & !j;
                (0..self.n)
                    .filter(|&a| only_i & (1u64 << a) != 0)
                    .all(|a| {
                        let only_j = j & !i;
                        (0..self.n).any(|b| {
                            only_j & (1u64 << b) != 0
                                && self.contains_mask((i & !(1u64 << a)) | (1u64 << b))
                        })
                    })
            })
        })
    }

    /// The number of nonbases at Johnson distance one from the basis `J`:
    /// the tangent-space codimension of the positroid variety at the torus
    /// fixed point `A_J`.
    pub fn tangent_codim(&self, j: &KSubset) -> Result<usize> {
        let jm = j.mask()?;
        if !self.contains_mask(jm) {
            return Err(Error::NotABasis(j.clone()));
        }
        let mut count = 0;
        for a in 0..self.n {
            if jm & (1u64 << a) == 0 {
                continue;
            }
            for b in 0..self.n {
                if jm & (1u64 << b) != 0 {
                    continue;
                }
                if !self.contains_mask((jm & !(1u64 << a)) | (1u64 << b)) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// The degree of a basis in the Johnson graph `J(M)`.
    pub fn johnson_degree(&self, j: &KSubset) -> Result<usize> {
        Ok(self.k * (self.n - self.k) - self.tangent_codim(j)?)
    }

    /// The dual `{[n] \ I : I ∈ M}`.
    pub fn dual(&self) -> Self {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut bases: Vec<u64> = self.bases.iter().map(|&m| full & !m).collect();
        bases.sort_unstable();
        Self { n: self.n, k: self.n - self.k, bases }
    }

    /// The cyclic shift `I ↦ I + s (mod n)` applied to every basis.
    pub fn cyclic_shift(&self, s: i64) -> Self {
        let s = s.rem_euclid(self.n as i64) as usize;
        let mut bases: Vec<u64> = self
            .bases
            .iter()
            .map(|&m| {
                (0..self.n)
                    .filter(|&a| m & (1u64 << a) != 0)
                    .fold(0u64, |acc, a| acc | (1u64 << ((a + s) % self.n)))
            })
            .collect();
        bases.sort_unstable();
        Self { n: self.n, k: self.k, bases }
    }

    /// Ground-set reversal `I ↦ w₀ · I = {n+1−i}`.
    pub fn ground_reversal(&self) -> Self {
        let mut bases: Vec<u64> = self
            .bases
            .iter()
            .map(|&m| {
                (0..self.n)
                    .filter(|&a| m & (1u64 << a) != 0)
                    .fold(0u64, |acc, a| acc | (1u64 << (self.n - 1 - a)))
            })
            .collect();
        bases.sort_unstable();
        Self { n: self.n, k: self.k, bases }
    }

    /// The direct sum `M ⊕ M₂` on `[n + n₂]`, the second ground set shifted
    /// up by `n`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | (b << self.n));
            }
        }
        bases.sort_unstable();
        Self { n: self.n + other.n, k: self.k + other.k, bases }
    }

    /// The connected components of the matroid, via the transitive closure of
    /// single-element basis exchanges (two elements lie in a common circuit
    /// iff some basis exchanges one for the other). Loops and coloops are
    /// singleton components.
    pub fn components(&self) -> Vec<KSubset> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &b in &self.bases {
            for a in 0..self.n {
                if b & (1u64 << a) == 0 {
                    continue;
                }
                for c in 0..self.n {
                    if b & (1u64 << c) != 0 {
                        continue;
                    }
                    if self.contains_mask((b & !(1u64 << a)) | (1u64 << c)) {
                        let (ra, rc) = (find(&mut parent, a + 1), find(&mut parent, c + 1));
                        parent[ra.max(rc)] = ra.min(rc);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        for x in 1..=self.n {
            let r = find(&mut parent, x);
            groups[r].push(x);
        }
        groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| KSubset::new(self.n, g).unwrap())
            .collect()
    }

    /// True iff the matroid is a direct sum of uniform matroids over its
    /// connected components.
    pub fn is_direct_sum_of_uniforms(&self) -> bool {
        self.non_uniform_component().is_none()
    }

    /// A component whose restriction is not uniform, if any.
    pub fn non_uniform_component(&self) -> Option<KSubset> {
        let comps = self.components();
        let sample = self.bases[0];
        for comp in comps {
            let cmask = comp.mask().unwrap();
            let ki = (sample & cmask).count_ones() as usize;
            let mut projections: Vec<u64> = self.bases.iter().map(|&b| b & cmask).collect();
            projections.sort_unstable();
            projections.dedup();
            if projections.len() != binomial(comp.k(), ki)
                || projections.iter().any(|p| p.count_ones() as usize != ki)
            {
                return Some(comp);
            }
        }
        None
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All bitmasks of `k`-subsets of `[n]`, ascending.
pub(crate) fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack for the next mask with the same popcount.
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let candidate = (((r ^ cur) >> 2) / c) | r;
            (candidate <= full).then_some(candidate)
        };
        (cur <= full).then_some(cur)
    })
}

impl fmt::Display for Positroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.bases().iter().map(|b| b.to_string()).collect();
        write!(f, "{{{}}}", strs.join(", "))
    }
}

impl Serialize for Positroid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Positroid", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("bases", &self.bases())?;
        s.end()
    }
}

/// Computes `codim(Π_{w°})` both as the alignment count and as
/// `k(n−k) − (ℓ(v) − ℓ(u))`, asserting the two agree.
pub fn codimension(w: &DecoratedPermutation) -> usize {
    let count = w.alignments().len();
    let iv = w.to_grassmann_interval();
    let formula = iv.k * (w.n() - iv.k) - (iv.v.length() - iv.u.length());
    assert_eq!(count, formula, "alignment count disagrees with length formula at {w}");
    count
}
