use perm_core::{bruhat_leq, KSubset, Permutation};
use serde::Serialize;

use crate::{DecoratedPermutation, Error, Result};

/// A Bruhat interval `[u, v]` with `v` k-Grassmannian, `u ≤ v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GrassmannInterval {
    pub u: Permutation,
    pub v: Permutation,
    pub k: usize,
}

impl GrassmannInterval {
    pub fn new(u: Permutation, v: Permutation, k: usize) -> Result<Self> {
        if u.n() != v.n() {
            return Err(perm_core::Error::MismatchedGroundSets(u.n(), v.n()).into());
        }
        if !v.is_k_grassmannian(k)? {
            return Err(Error::NotAGrassmannInterval(format!("{v} is not {k}-Grassmannian")));
        }
        if !bruhat_leq(&u, &v)? {
            return Err(Error::NotAGrassmannInterval(format!("{u} is not below {v}")));
        }
        Ok(Self { u, v, k })
    }

    pub fn n(&self) -> usize {
        self.v.n()
    }
}

/// The Grassmann necklace `(I₁, …, I_n)` of shifted anti-exceedance sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    sets: Vec<KSubset>,
}

impl GrassmannNecklace {
    /// Wraps a candidate list of sets; full validity is established by
    /// converting back to a decorated permutation.
    pub fn from_sets(sets: Vec<KSubset>) -> Result<Self> {
        let n = sets.len();
        if n == 0 {
            return Err(Error::NotANecklace("empty set list".into()));
        }
        let k = sets[0].k();
        for s in &sets {
            if s.n() != n {
                return Err(Error::NotANecklace(format!(
                    "set {s} does not live on ground set [{n}]"
                )));
            }
            if s.k() != k {
                return Err(Error::NotANecklace(format!("set {s} does not have size {k}")));
            }
        }
        Ok(Self { n, k, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The set `I_r`, `r ∈ [n]`.
    pub fn set(&self, r: usize) -> &KSubset {
        &self.sets[r - 1]
    }

    pub fn sets(&self) -> &[KSubset] {
        &self.sets
    }
}

impl DecoratedPermutation {
    /// The Grassmann necklace `(I₁(w°), …, I_n(w°))`.
    pub fn grassmann_necklace(&self) -> GrassmannNecklace {
        let sets: Vec<KSubset> =
            (1..=self.n()).map(|r| self.anti_exceedance_set(r).unwrap()).collect();
        GrassmannNecklace { n: self.n(), k: sets[0].k(), sets }
    }

    /// Recovers the decorated permutation from its necklace: consecutive sets
    /// satisfy `I_{r+1} = I_r` exactly at fixed points (cw iff `r ∈ I_r`) and
    /// otherwise `I_{r+1} = I_r \ {r} ∪ {w(r)}`.
    pub fn from_necklace(necklace: &GrassmannNecklace) -> Result<Self> {
        let n = necklace.n;
        let mut vals = vec![0usize; n];
        let mut cw = Vec::new();
        let mut ccw = Vec::new();
        for r in 1..=n {
            let cur = necklace.set(r);
            let next = necklace.set(r % n + 1);
            if cur == next {
                vals[r - 1] = r;
                if cur.contains(r) {
                    cw.push(r);
                } else {
                    ccw.push(r);
                }
            } else {
                let added: Vec<usize> =
                    next.elements().iter().copied().filter(|&e| !cur.contains(e)).collect();
                let removed: Vec<usize> =
                    cur.elements().iter().copied().filter(|&e| !next.contains(e)).collect();
                if added.len() != 1 || removed != [r] {
                    return Err(Error::NotANecklace(format!(
                        "consecutive sets {cur} and {next} do not differ by removing {r}"
                    )));
                }
                vals[r - 1] = added[0];
            }
        }
        let perm = Permutation::from_one_line(vals)
            .map_err(|_| Error::NotANecklace("recovered map is not a permutation".into()))?;
        let result = Self::new(perm, &cw, &ccw)?;
        if &result.grassmann_necklace() != necklace {
            return Err(Error::NotANecklace(
                "round trip does not reproduce the given sets".into(),
            ));
        }
        Ok(result)
    }

    /// The Grassmann interval `[u, v]` of `w°` via the shuffling algorithm:
    /// `v[k]` is the sorted set of anti-exceedance positions `w⁻¹(I₁)`,
    /// `u = w ∘ v`, so that `u[k] = I₁(w°)`.
    pub fn to_grassmann_interval(&self) -> GrassmannInterval {
        let n = self.n();
        let i1 = self.anti_exceedance_set(1).unwrap();
        let k = i1.k();
        let inv = self.perm().inverse();
        let mut front: Vec<usize> = i1.elements().iter().map(|&e| inv.apply(e)).collect();
        front.sort_unstable();
        let mut back: Vec<usize> = (1..=n).filter(|p| !front.contains(p)).collect();
        front.append(&mut back);
        let v = Permutation::from_one_line(front).unwrap();
        let u = self.perm().compose(&v).unwrap();
        debug_assert_eq!(u.initial_set(k), i1);
        debug_assert!(v.is_k_grassmannian(k).unwrap());
        debug_assert!(bruhat_leq(&u, &v).unwrap());
        GrassmannInterval { u, v, k }
    }

    /// Inverse of [`DecoratedPermutation::to_grassmann_interval`]:
    /// `w = u v⁻¹`, with a fixed point `j` oriented cw iff `j ∈ u[k]`.
    pub fn from_grassmann_interval(iv: &GrassmannInterval) -> Result<Self> {
        let iv = GrassmannInterval::new(iv.u.clone(), iv.v.clone(), iv.k)?;
        let w = iv.u.compose(&iv.v.inverse())?;
        let uk = iv.u.initial_set(iv.k);
        let (mut cw, mut ccw) = (Vec::new(), Vec::new());
        for j in w.fixed_points() {
            if uk.contains(j) {
                cw.push(j);
            } else {
                ccw.push(j);
            }
        }
        Self::new(w, &cw, &ccw)
    }
}
