//! Refined census of smooth positroid varieties by k and by number of
//! components.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use perm_core::all_permutations;

use crate::counts::{bell_table, factorial, smooth_count_bell};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// One census row: the counts for a fixed n, indexed by k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub by_k: BTreeMap<usize, BigInt>,
}

impl CensusRow {
    pub fn count(&self, k: usize) -> BigInt {
        self.by_k.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn sum(&self) -> BigInt {
        self.by_k.values().sum()
    }

    /// The q-analog Σₖ (count at k) qᵏ.
    pub fn q_polynomial(&self) -> IntPolynomial {
        let top = self.by_k.keys().max().copied().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (&k, c) in &self.by_k {
            coeffs[k] = c.clone();
        }
        IntPolynomial::new(coeffs)
    }

    /// Comma-separated counts in increasing k, matching the table layout.
    pub fn csv(&self) -> String {
        self.by_k.values().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The three refinements of s(n): s₁ counts smooth positroid varieties in
/// Gr(k, n) by k; s₂ counts them by the number of components of their
/// stabilized interval-free decomposition; s₃(n, k) = b_{n,k}/(n−k+1)! is
/// the closed form for s₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub s1: CensusRow,
    pub s2: CensusRow,
    pub s3: CensusRow,
}

/// Per-block weight in q for the s₁ refinement: a singleton block carries
/// a loop of either orientation (k contribution 0 or 1); a block of size
/// m > 1 carries a spirograph with shift m′ ∈ [1, m−1], contributing m′
/// to k.
fn weight_s1(m: usize) -> IntPolynomial {
    if m == 1 {
        IntPolynomial::new(vec![BigInt::one(), BigInt::one()])
    } else {
        IntPolynomial::new(
            (0..m).map(|d| if d == 0 { BigInt::zero() } else { BigInt::one() }).collect(),
        )
    }
}

/// Per-block weight for the s₂ refinement: every block contributes one
/// component, with as many spirograph choices as `spirograph_count`.
fn weight_s2(m: usize) -> IntPolynomial {
    let c = if m == 1 { 2 } else { m as i64 - 1 };
    IntPolynomial::monomial(BigInt::from(c), 1)
}

/// Total weight of all noncrossing partitions of [r] with multiplicative
/// per-block weights, for every r ≤ n. Decomposes by the block containing
/// the smallest element: a block of size m splits the remaining points
/// into m independent gaps, each again a noncrossing partition.
fn noncrossing_dp(n: usize, weight: impl Fn(usize) -> IntPolynomial) -> Vec<IntPolynomial> {
    let w: Vec<IntPolynomial> = (0..=n).map(|m| if m == 0 { IntPolynomial::zero() } else { weight(m) }).collect();
    let mut f: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    for r in 1..=n {
        let mut total = IntPolynomial::zero();
        // gaps[g] = Σ over m gaps totalling g of Π f(gap); starts at m = 1.
        let mut gaps: Vec<IntPolynomial> = f[..r].to_vec();
        for m in 1..=r {
            if m > 1 {
                let mut next = vec![IntPolynomial::zero(); r + 1 - m];
                for (g, slot) in next.iter_mut().enumerate() {
                    let mut acc = IntPolynomial::zero();
                    for (j, fj) in f.iter().enumerate().take(g + 1) {
                        acc = acc.add(&gaps[g - j].mul(fj));
                    }
                    *slot = acc;
                }
                gaps = next;
            }
            total = total.add(&w[m].mul(&gaps[r - m]));
        }
        f.push(total);
    }
    f
}

/// The refined census at n. Asserts the internal identities: the s₂ row
/// equals the s₃ closed form, and all three rows sum to s(n).
pub fn census(n: usize) -> Result<Census> {
    if n == 0 {
        return Err(Error::OutOfRange("census requires n ≥ 1".into()));
    }
    let p1 = noncrossing_dp(n, weight_s1).pop().expect("n entries");
    let p2 = noncrossing_dp(n, weight_s2).pop().expect("n entries");
    let s1 = CensusRow { n, by_k: (0..=n).map(|k| (k, p1.coeff(k))).collect() };
    let s2 = CensusRow { n, by_k: (1..=n).map(|k| (k, p2.coeff(k))).collect() };
    let table = bell_table(n);
    let mut by_k = BTreeMap::new();
    for k in 1..=n {
        let b = &table[n][k];
        let f = factorial(n - k + 1);
        assert!((b % &f).is_zero(), "b_{{{n},{k}}} not divisible by ({})!", n - k + 1);
        by_k.insert(k, b / f);
    }
    let s3 = CensusRow { n, by_k };
    assert_eq!(s2, s3, "component refinement disagrees with its closed form at n = {n}");
    let total = smooth_count_bell(n)?;
    assert_eq!(s1.sum(), total, "s₁ row sum differs from s({n})");
    assert_eq!(s2.sum(), total, "s₂ row sum differs from s({n})");
    Ok(Census { s1, s2, s3 })
}

/// Classifies every decorated permutation on [n] directly: smooth iff all
/// components of the stabilized interval-free decomposition are
/// spirographs. Returns the observed (s₁, s₂) rows; an independent check
/// of [`census`] for small n. Work is split across threads, capped by the
/// `POSITROID_THREADS` environment variable.
pub fn brute_force_census(n: usize) -> Result<(CensusRow, CensusRow)> {
    if n == 0 || n > 9 {
        return Err(Error::OutOfRange("brute_force_census requires 1 ≤ n ≤ 9".into()));
    }
    let perms: Vec<_> = all_permutations(n).collect();
    let threads = std::thread::available_parallelism().map_or(1, |p| p.get());
    let threads = match std::env::var("POSITROID_THREADS") {
        Ok(v) => v.parse::<usize>().unwrap_or(threads).clamp(1, threads),
        Err(_) => threads,
    };
    let chunk = perms.len().div_ceil(threads);
    let tallies: Vec<(Vec<u64>, Vec<u64>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = perms
            .chunks(chunk)
            .map(|chunk| {
                scope.spawn(move || {
                    let mut by_k = vec![0u64; n + 1];
                    let mut by_comp = vec![0u64; n + 1];
                    for p in chunk {
                        let fixed = p.fixed_points();
                        for mask in 0u32..1 << fixed.len() {
                            let cw: Vec<usize> = fixed
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| mask >> i & 1 == 1)
                                .map(|(_, &x)| x)
                                .collect();
                            let ccw: Vec<usize> =
                                fixed.iter().copied().filter(|x| !cw.contains(x)).collect();
                            let w = decorated_perm::DecoratedPermutation::new(p.clone(), &cw, &ccw)
                                .expect("valid orientation split");
                            let components = w.sif_decomposition().1;
                            if components.iter().all(|c| c.is_spirograph().is_some()) {
                                by_k[w.k()] += 1;
                                by_comp[components.len()] += 1;
                            }
                        }
                    }
                    (by_k, by_comp)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("census worker")).collect()
    });
    let mut by_k = vec![0u64; n + 1];
    let mut by_comp = vec![0u64; n + 1];
    for (tk, tc) in tallies {
        for k in 0..=n {
            by_k[k] += tk[k];
            by_comp[k] += tc[k];
        }
    }
    let s1 = CensusRow { n, by_k: (0..=n).map(|k| (k, BigInt::from(by_k[k]))).collect() };
    let s2 = CensusRow { n, by_k: (1..=n).map(|k| (k, BigInt::from(by_comp[k]))).collect() };
    Ok((s1, s2))
}
