use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use perm_core::KSubset;

use crate::positroid::masks_of_size;
use crate::{Error, Positroid, Result};

/// A `k × n` matrix of exact rationals, used to define matroids via maximal
/// minors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, entries }
    }

    /// Parses a JSON array of rows whose entries are integers or rational
    /// strings `"p/q"`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let rows_json = value
            .as_array()
            .ok_or_else(|| Error::BadRational(value.to_string()))?;
        let rows = rows_json.len();
        let mut entries = Vec::new();
        let mut cols = None;
        for row in rows_json {
            let row = row
                .as_array()
                .ok_or_else(|| Error::BadRational(row.to_string()))?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(Error::BadRational("ragged rows".into()));
            }
            for cell in row {
                entries.push(parse_rational(cell)?);
            }
        }
        Ok(Self { rows, cols: cols.unwrap_or(0), entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    /// The maximal minor `Δ_J` on the columns of `J` (1-based).
    pub fn minor(&self, j: &KSubset) -> BigRational {
        let cols: Vec<usize> = j.elements().iter().map(|&c| c - 1).collect();
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self.at(r, c).clone()).collect())
            .collect();
        determinant(&mut m)
    }

    /// The matroid `M_A = {J : Δ_J(A) ≠ 0}` together with a flag reporting
    /// whether every maximal minor is ≥ 0 (total nonnegativity of the row
    /// span's Plücker vector).
    ///
    /// The result is a matroid, not necessarily a positroid when the flag is
    /// false; rejects rank-deficient matrices.
    pub fn matroid(&self) -> Result<(Positroid, bool)> {
        let (k, n) = (self.rows, self.cols);
        let mut bases = Vec::new();
        let mut tnn = true;
        for mask in masks_of_size(n, k) {
            let j = KSubset::from_mask(n, mask);
            let d = self.minor(&j);
            if d.is_negative() {
                tnn = false;
            }
            if !d.is_zero() {
                bases.push(j);
            }
        }
        if bases.is_empty() {
            let rank = self.rank();
            return Err(Error::RankDeficient(rank, k));
        }
        Ok((Positroid::from_bases(n, k, &bases)?, tnn))
    }

    fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            if let Some(p) = (rank..self.rows).find(|&r| !m[r][c].is_zero()) {
                m.swap(rank, p);
                let pivot = m[rank][c].clone();
                for r in rank + 1..self.rows {
                    let factor = &m[r][c] / &pivot;
                    for cc in c..self.cols {
                        let sub = &m[rank][cc] * &factor;
                        m[r][cc] -= sub;
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

fn parse_rational(value: &serde_json::Value) -> Result<BigRational> {
    if let Some(i) = value.as_i64() {
        return Ok(BigRational::from_integer(BigInt::from(i)));
    }
    if let Some(s) = value.as_str() {
        let parts: Vec<&str> = s.split('/').collect();
        let bad = || Error::BadRational(s.to_string());
        match parts.as_slice() {
            [p] => {
                let num: BigInt = p.trim().parse().map_err(|_| bad())?;
                return Ok(BigRational::from_integer(num));
            }
            [p, q] => {
                let num: BigInt = p.trim().parse().map_err(|_| bad())?;
                let den: BigInt = q.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                return Ok(BigRational::new(num, den));
            }
            _ => return Err(bad()),
        }
    }
    Err(Error::BadRational(value.to_string()))
}

/// Exact determinant by Gaussian elimination with rational arithmetic.
fn determinant(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            let factor = &m[r][c] / &pivot;
            for cc in c..n {
                let sub = &m[c][cc] * &factor;
                m[r][cc] -= sub;
            }
        }
    }
    det
}
