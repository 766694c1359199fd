use crate::{all_permutations, Error, Permutation, Result};

/// Maximum ground-set size accepted by [`bruhat_interval`], which filters all
/// of `S_n`.
pub const MAX_INTERVAL_N: usize = 8;

/// Bruhat order on `S_n`.
///
/// Uses the tableau criterion (`u[i] ⪯ v[i]` componentwise after sorting, for
/// every prefix length `i`); when `v` is Grassmannian the one-descent
/// comparison is used instead, and in debug builds the two are asserted to
/// agree.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::MismatchedGroundSets(u.n(), v.n()));
    }
    let descents = v.descents();
    if descents.len() <= 1 {
        // v is k-Grassmannian with k its unique descent (or the identity,
        // where any k works): u ≤ v iff u(j) ≤ v(j) for j ≤ k and
        // u(m) ≥ v(m) for m > k.
        let k = descents.first().copied().unwrap_or(0);
        let fast = (1..=u.n()).all(|j| {
            if j <= k {
                u.apply(j) <= v.apply(j)
            } else {
                u.apply(j) >= v.apply(j)
            }
        });
        debug_assert_eq!(fast, tableau_leq(u, v));
        Ok(fast)
    } else {
        Ok(tableau_leq(u, v))
    }
}

fn tableau_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.n();
    let mut u_prefix: Vec<usize> = Vec::with_capacity(n);
    let mut v_prefix: Vec<usize> = Vec::with_capacity(n);
    for i in 1..=n {
        let (a, b) = (u.apply(i), v.apply(i));
        u_prefix.insert(u_prefix.partition_point(|&x| x < a), a);
        v_prefix.insert(v_prefix.partition_point(|&x| x < b), b);
        if u_prefix.iter().zip(&v_prefix).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// The Bruhat interval `[u, v] = {y : u ≤ y ≤ v}`, by filtering all of `S_n`.
///
/// Intended for small ground sets only; rejects `n > 8`.
pub fn bruhat_interval(u: &Permutation, v: &Permutation) -> Result<Vec<Permutation>> {
    if u.n() != v.n() {
        return Err(Error::MismatchedGroundSets(u.n(), v.n()));
    }
    if u.n() > MAX_INTERVAL_N {
        return Err(Error::IntervalTooLarge(MAX_INTERVAL_N, u.n()));
    }
    if !bruhat_leq(u, v)? {
        return Err(Error::NotAnInterval);
    }
    Ok(all_permutations(u.n())
        .filter(|y| bruhat_leq(u, y).unwrap() && bruhat_leq(y, v).unwrap())
        .collect())
}

/// The Bruhat covers of `w`: all `w·t_{ij}` with `w(i) < w(j)` and no
/// intermediate `w(m)` between them for `i < m < j`.
///
/// Exposed for use as an independent BFS reachability oracle in tests.
pub fn bruhat_covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut covers = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (w.apply(i), w.apply(j));
            if a < b && (i + 1..j).all(|m| w.apply(m) < a || w.apply(m) > b) {
                let mut vals = w.values().to_vec();
                vals.swap(i - 1, j - 1);
                covers.push(Permutation::from_one_line(vals).unwrap());
            }
        }
    }
    covers
}
