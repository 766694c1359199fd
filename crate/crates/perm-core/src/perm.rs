use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::subset::KSubset;
use crate::{Error, Result};

/// A permutation of `[n]` in one-line notation, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    vals: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation `w(1), …, w(n)`.
    pub fn from_one_line(vals: Vec<usize>) -> Result<Self> {
        let n = vals.len();
        let mut seen = vec![false; n + 1];
        for &v in &vals {
            if v < 1 || v > n || seen[v] {
                return Err(Error::NotABijection(vals.clone(), n));
            }
            seen[v] = true;
        }
        Ok(Self { vals })
    }

    /// The identity permutation of `[n]`.
    pub fn identity(n: usize) -> Self {
        Self { vals: (1..=n).collect() }
    }

    /// The longest element `w₀ = n … 2 1`.
    pub fn longest(n: usize) -> Self {
        Self { vals: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.vals.len()
    }

    /// `w(i)` for `i ∈ [n]`.
    pub fn apply(&self, i: usize) -> usize {
        self.vals[i - 1]
    }

    /// One-line notation as a slice (`values()[i-1] = w(i)`).
    pub fn values(&self) -> &[usize] {
        &self.vals
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.vals.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { vals: inv }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::MismatchedGroundSets(self.n(), other.n()));
        }
        Ok(Self { vals: other.vals.iter().map(|&v| self.vals[v - 1]).collect() })
    }

    /// Length `ℓ(w)`: the number of inversions `i < j` with `w(i) > w(j)`.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.vals[i] > self.vals[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.vals[i - 1] > self.vals[i]).collect()
    }

    /// True iff `w(1) < ⋯ < w(k)` and `w(k+1) < ⋯ < w(n)`.
    pub fn is_k_grassmannian(&self, k: usize) -> Result<bool> {
        if k > self.n() {
            return Err(Error::IndexOutOfRange(k, self.n()));
        }
        Ok(self.descents().iter().all(|&d| d == k))
    }

    /// The initial set `w[k] = {w(1), …, w(k)}`.
    pub fn initial_set(&self, k: usize) -> KSubset {
        let mut elems: Vec<usize> = self.vals[..k].to_vec();
        elems.sort_unstable();
        KSubset::new(self.n(), elems).expect("prefix of a bijection is a valid subset")
    }

    /// Fixed points `{i : w(i) = i}` in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    /// The canonical representative `u(I, v)`: the unique maximal permutation
    /// below `v` (in Bruhat order) whose initial set is `I`, for `v`
    /// k-Grassmannian with `k = |I|`.
    ///
    /// Requires `iⱼ ≤ v(j)` for each `j ≤ k` (elements of `I` in increasing
    /// order against the increasing prefix of `v`).
    pub fn canonical_rep(i_set: &KSubset, v: &Permutation, k: usize) -> Result<Permutation> {
        let n = v.n();
        if i_set.n() != n {
            return Err(Error::MismatchedGroundSets(i_set.n(), n));
        }
        if i_set.k() != k || !v.is_k_grassmannian(k)? {
            return Err(Error::NotGrassmannian(v.clone(), k));
        }
        for (j, &i) in i_set.elements().iter().enumerate() {
            if i > v.apply(j + 1) {
                return Err(Error::CanonicalRepPrecondition(i, j + 1, v.apply(j + 1)));
            }
        }

        let mut vals = vec![0usize; n];
        let mut used = vec![false; n + 1];
        // First pass: u(j) = max { i ∈ I : i ≤ v(j) } among unused, j = 1..k.
        for j in 1..=k {
            let pick = i_set
                .elements()
                .iter()
                .rev()
                .copied()
                .find(|&i| i <= v.apply(j) && !used[i])
                .expect("precondition guarantees an available element");
            vals[j - 1] = pick;
            used[pick] = true;
        }
        // Second pass: u(j) = min [v(j), n] minus everything already placed,
        // working down from j = n to k+1.
        for j in (k + 1..=n).rev() {
            let pick = (v.apply(j)..=n)
                .find(|&c| !used[c])
                .expect("a k-Grassmannian v always leaves a candidate free");
            vals[j - 1] = pick;
            used[pick] = true;
        }
        let result = Permutation::from_one_line(vals)?;
        debug_assert_eq!(result.initial_set(k), {
            let mut e = i_set.elements().to_vec();
            e.sort_unstable();
            KSubset::new(n, e).unwrap()
        });
        debug_assert!(crate::bruhat_leq(&result, v).unwrap());
        Ok(result)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.vals {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", strs.join(","))
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vals.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vals = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_line(vals).map_err(D::Error::custom)
    }
}

/// All permutations of `[n]` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (1..=n).permutations(n).map(|vals| Permutation { vals })
}
