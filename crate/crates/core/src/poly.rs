//! Dense polynomial arithmetic over exact nonnegative integers, and the
//! weighted polynomial coefficients read off from powers of the weight
//! polynomial.

use num_traits::{One, Zero};

use crate::weights::WeightVector;
use crate::Count;

/// A polynomial in one variable with [`Count`] coefficients, stored dense:
/// `coeffs[i]` is the coefficient of `x^i`.
///
/// Always normalized: the last coefficient is nonzero, except for the zero
/// polynomial which is the single coefficient `[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    coeffs: Vec<Count>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self {
            coeffs: vec![Count::zero()],
        }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Count::one()],
        }
    }

    /// Builds from raw coefficients, trimming trailing zeros.
    pub fn from_counts(mut coeffs: Vec<Count>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Self::zero();
        }
        Self { coeffs }
    }

    /// The weight polynomial `b_1 + b_2 x + ... + b_r x^(r-1)`.
    ///
    /// Trailing zero weights vanish in the polynomial form (the polynomial
    /// does not remember `r`); the weight vector itself is untouched.
    pub fn from_weights(b: &WeightVector) -> Self {
        Self::from_counts(b.weights().iter().map(|&w| Count::from(w)).collect())
    }

    pub fn coeffs(&self) -> &[Count] {
        &self.coeffs
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Coefficient of `x^i`; zero beyond the stored degree.
    pub fn coefficient(&self, i: usize) -> Count {
        self.coeffs.get(i).cloned().unwrap_or_else(Count::zero)
    }

    /// Exact convolution product, normalized.
    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Count::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in other.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    coeffs[i + j] += a * c;
                }
            }
        }
        // leading coefficient is a product of nonzero naturals, so the
        // result is already normalized
        DensePoly { coeffs }
    }

    /// Exact `k`-th power by iterated multiplication; `k = 0` is the empty
    /// product `[1]`, including for the zero polynomial.
    pub fn pow(&self, k: usize) -> DensePoly {
        let mut acc = DensePoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// The weighted polynomial coefficient: the coefficient of `x^i` in
/// `(b_1 + b_2 x + ... + b_r x^(r-1))^k`.
///
/// Out-of-range `i` (negative, or above the top degree `(r-1)*k`) is a
/// defined zero rather than an error, so identity checkers can sum over
/// uniform index ranges without guards.
pub fn weighted_polynomial_coefficient(b: &WeightVector, k: usize, i: i64) -> Count {
    if i < 0 {
        return Count::zero();
    }
    DensePoly::from_weights(b).pow(k).coefficient(i as usize)
}

/// The all-ones specialization, the classical polynomial coefficient: the
/// coefficient of `x^i` in `(1 + x + ... + x^(r-1))^k`. It counts ordinary
/// compositions of `i + k` into `k` parts that are all at most `r`.
pub fn polynomial_coefficient(k: usize, r: usize, i: i64) -> Count {
    weighted_polynomial_coefficient(&WeightVector::ones(r), k, i)
}
