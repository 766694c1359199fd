//! Closed-form and recursive counts of smooth positroid varieties.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// The number of spirographs on n marked points: 2 for n = 1 (a single
/// point carries either loop orientation), n − 1 otherwise (one per
/// rotation amount 1, …, n−1).
pub fn spirograph_count(n: usize) -> Result<u64> {
    match n {
        0 => Err(Error::OutOfRange("spirograph_count requires n ≥ 1".into())),
        1 => Ok(2),
        _ => Ok(n as u64 - 1),
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// The total count s(n) of smooth positroid varieties on n marked points,
/// extracted as
///   s(n) = [xⁿ] (1 + 2x + Σᵢ₌₂ⁿ (i−1)xⁱ)ⁿ⁺¹ / (n+1),
/// with all arithmetic over big integers. The outer power is exactly
/// divisible by n + 1.
pub fn smooth_count_coeff(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("smooth_count_coeff requires n ≥ 1".into()));
    }
    let mut g = vec![BigInt::zero(); n + 1];
    g[0] = BigInt::one();
    g[1] = BigInt::from(2);
    for i in 2..=n {
        g[i] = BigInt::from(i - 1);
    }
    let c = IntPolynomial::new(g).pow_trunc(n + 1, n).coeff(n);
    let (q, r) = c.div_rem(&BigInt::from(n + 1));
    assert!(r.is_zero(), "coefficient {c} not divisible by {}", n + 1);
    Ok(q)
}

/// The partial Bell polynomial value
///   b_{n,k} = B_{n,k}(2·1!, 1·2!, 2·3!, …, (n−k)·(n−k+1)!),
/// i.e. the sum over set partitions of [n] into k blocks of the product of
/// s_c(|B|)·|B|! over blocks B. Computed by the recurrence
///   b_{n,k} = Σᵢ₌₁^{n−k+1} C(n−1, i−1) · s_c(i) · i! · b_{n−i,k−1}
/// with b_{0,0} = 1 and b_{n,0} = 0 for n > 0.
pub fn bell_b(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange(format!("bell_b requires k ≤ n, got ({n},{k})")));
    }
    Ok(std::mem::take(&mut bell_table(n)[n][k]))
}

/// The full table of b_{m,j} for m, j ≤ n.
pub(crate) fn bell_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); n + 1]; n + 1];
    table[0][0] = BigInt::one();
    for m in 1..=n {
        for j in 1..=m {
            let mut sum = BigInt::zero();
            for i in 1..=m - j + 1 {
                sum += binomial(m - 1, i - 1)
                    * spirograph_count(i).expect("i ≥ 1")
                    * factorial(i)
                    * &table[m - i][j - 1];
            }
            table[m][j] = sum;
        }
    }
    table
}

/// s(n) again, via s(n) = Σₖ b_{n,k} / (n−k+1)!; every summand is an exact
/// integer.
pub fn smooth_count_bell(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("smooth_count_bell requires n ≥ 1".into()));
    }
    let table = bell_table(n);
    let mut sum = BigInt::zero();
    for k in 1..=n {
        let b = &table[n][k];
        let (q, r) = b.div_rem(&factorial(n - k + 1));
        assert!(r.is_zero(), "b_{{{n},{k}}} = {b} not divisible by ({})!", n - k + 1);
        sum += q;
    }
    Ok(sum)
}

/// The ratio s(n+1)/s(n) rendered to `digits` significant digits by exact
/// scaled integer division, rounding half away from zero.
pub fn growth_ratio(n: usize, digits: usize) -> Result<String> {
    if n == 0 || digits == 0 {
        return Err(Error::OutOfRange("growth_ratio requires n ≥ 1 and digits ≥ 1".into()));
    }
    let num = smooth_count_coeff(n + 1)?;
    let den = smooth_count_coeff(n)?;
    let int_digits = (&num / &den).to_string().len();
    if int_digits >= digits {
        let scale = BigInt::from(10).pow((int_digits - digits) as u32);
        let rounded: BigInt = (&num * 2 + &den * &scale) / (&den * &scale * 2) * &scale;
        return Ok(rounded.to_string());
    }
    let frac_digits = digits - int_digits;
    let scale = BigInt::from(10).pow(frac_digits as u32);
    let rounded = BigInt::from(&num * &scale * 2 + &den).div_floor(&(&den * 2)).to_string();
    let (int_part, frac_part) = rounded.split_at(rounded.len() - frac_digits);
    Ok(format!("{int_part}.{frac_part}"))
}
