//! Exact Jacobian rank oracle at torus fixed points.
//!
//! The positroid variety is cut out (inside the chart at the basis `J`) by
//! the maximal-minor polynomials `Δ_I` over the nonbases `I`. At the 0/1
//! matrix `A_J` — the identity pattern supported on the columns of `J` — the
//! partial derivative `∂Δ_I/∂x_{st}` is, up to a cofactor sign, a
//! `(k−1)-minor` of `A_J`, an exact integer. The Jacobian rank is computed by
//! fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_traits::Zero;
use perm_core::KSubset;

use crate::{Error, Positroid, Result};

/// The Jacobian of all nonbasis minors at `A_J`: one row per nonbasis (in
/// lexicographic order), one column per variable `x_{st}` in row-major order
/// (`s ∈ [k]`, `t ∈ [n]`). Returns the row labels, column labels, and the
/// integer matrix.
pub fn jacobian_matrix(
    m: &Positroid,
    j: &KSubset,
) -> Result<(Vec<KSubset>, Vec<(usize, usize)>, Vec<Vec<i64>>)> {
    if !m.contains(j) {
        return Err(Error::NotABasis(j.clone()));
    }
    let (n, k) = (m.n(), m.k());
    let j_elems = j.elements();
    let nonbases = m.nonbases();
    let cols: Vec<(usize, usize)> =
        (1..=k).flat_map(|s| (1..=n).map(move |t| (s, t))).collect();
    // A_J has a 1 at (s, j_s) and zeros elsewhere.
    let a_entry = |s: usize, t: usize| -> i64 { i64::from(j_elems[s - 1] == t) };
    let mut rows = Vec::with_capacity(nonbases.len());
    for i_set in &nonbases {
        let i_elems = i_set.elements();
        let mut row = Vec::with_capacity(cols.len());
        for &(s, t) in &cols {
            // ∂Δ_I/∂x_{st} vanishes unless t ∈ I; otherwise it is the signed
            // complementary minor of A_J on rows [k]\{s}, columns I\{t}.
            let Some(pos) = i_elems.iter().position(|&e| e == t) else {
                row.push(0);
                continue;
            };
            let sub: Vec<Vec<i64>> = (1..=k)
                .filter(|&r| r != s)
                .map(|r| {
                    i_elems
                        .iter()
                        .filter(|&&c| c != t)
                        .map(|&c| a_entry(r, c))
                        .collect()
                })
                .collect();
            let sign = if (s + pos + 1) % 2 == 0 { 1 } else { -1 };
            row.push(sign * det_01(&sub));
        }
        rows.push(row);
    }
    Ok((nonbases, cols, rows))
}

/// Determinant of a small 0/1 partial-permutation-like matrix.
fn det_01(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut m: Vec<Vec<i64>> = m.to_vec();
    let mut det = 1i64;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        // Entries are 0/±1 with a single 1 per row/column pattern; clearing
        // below the pivot keeps everything in {−1, 0, 1}.
        for r in c + 1..n {
            if m[r][c] != 0 {
                let f = m[r][c] / m[c][c];
                for cc in c..n {
                    m[r][cc] -= f * m[c][cc];
                }
            }
        }
    }
    det
}

/// Rank of the Jacobian at `A_J` over the rationals, by fraction-free
/// integer elimination (cross-multiplication, with content reduction to keep
/// entries small). Must equal [`Positroid::tangent_codim`] — the two together
/// are the cross-validation oracle for the tangent-space dimension count.
pub fn jacobian_rank_oracle(m: &Positroid, j: &KSubset) -> Result<usize> {
    let (_, _, rows) = jacobian_matrix(m, j)?;
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Ok(integer_rank(&mut mat))
}

fn integer_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = m[r][c].clone();
            for cc in c..cols {
                let val = &m[r][cc] * &pivot - &m[rank][cc] * &factor;
                m[r][cc] = val;
            }
            reduce_content(&mut m[r]);
        }
        rank += 1;
    }
    rank
}

/// Divides a row by the gcd of its entries to keep growth in check.
fn reduce_content(row: &mut [BigInt]) {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}
