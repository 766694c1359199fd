//! Dense univariate polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

/// A polynomial with arbitrary-precision integer coefficients, stored
/// densely with index = degree. Truncation never happens implicitly; the
/// multiplication and powering helpers take an explicit degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::from(1)] }
    }

    /// The monomial c·xᵈ.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPolynomial::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of xᵈ (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product, dropping all terms of degree above `cap`.
    pub fn mul_trunc(&self, other: &Self, cap: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > cap || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(cap + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.coeffs.len() + other.coeffs.len();
        self.mul_trunc(other, cap)
    }

    /// Power by binary exponentiation, truncated to degree `cap`.
    pub fn pow_trunc(&self, mut e: usize, cap: usize) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_trunc(&base, cap);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, cap);
            }
        }
        acc
    }
}
