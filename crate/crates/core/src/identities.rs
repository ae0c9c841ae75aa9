//! Executable checks for the identities relating composition counts,
//! polynomial coefficients, and the Fibonacci-style totals.
//!
//! Every check evaluates both sides of an identity on a bounded parameter
//! grid with two genuinely independent computations (dynamic programming or
//! linear recurrence on one side, polynomial expansion or Pascal's rule on
//! the other) and records every mismatch.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::counting::{
    binomial, count_all, count_all_via_coefficients, fibonacci_via_binomials, r_fibonacci,
    r_fibonacci_via_coefficients, CountTable,
};
use crate::poly::DensePoly;
use crate::weights::WeightVector;
use crate::Count;

/// The identities this crate can verify mechanically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `C(k, n)` equals the coefficient of `x^(n-k)` in the k-th power of
    /// the weight polynomial, for `k <= n <= r*k`.
    CountCoefficient,
    /// With `b = (1,1)`, `C(k, n+k)` equals `binomial(k, n)` for
    /// `0 <= n <= k`.
    BinomialCase,
    /// The Fibonacci number `F(n+1)` equals the diagonal binomial sum
    /// `sum_i binomial(i, n-i)`, checked against the `(1,1)` totals.
    FibonacciBinomial,
    /// `F(n)` equals the coefficient sum
    /// `sum_{k=ceil(n/r)}^{n} [x^(n-k)] (b_1 + ... + b_r x^(r-1))^k`.
    TotalCoefficientSum,
    /// The all-ones specialization of the coefficient sum: the k-bonacci
    /// total of `n` equals `sum_k polynomial_coefficient(k, r, n-k)`.
    KbonacciCoefficientSum,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::CountCoefficient,
        Identity::BinomialCase,
        Identity::FibonacciBinomial,
        Identity::TotalCoefficientSum,
        Identity::KbonacciCoefficientSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::CountCoefficient => "count-coefficient",
            Identity::BinomialCase => "binomial-case",
            Identity::FibonacciBinomial => "fibonacci-binomial",
            Identity::TotalCoefficientSum => "total-coefficient-sum",
            Identity::KbonacciCoefficientSum => "kbonacci-coefficient-sum",
        }
    }

    /// Whether the identity says anything about this weight vector. The
    /// binomial and Fibonacci forms are statements about `b = (1,1)`; the
    /// k-bonacci form is a statement about all-ones vectors.
    pub fn applies_to(self, b: &WeightVector) -> bool {
        match self {
            Identity::CountCoefficient | Identity::TotalCoefficientSum => true,
            Identity::BinomialCase | Identity::FibonacciBinomial => b.weights() == [1, 1],
            Identity::KbonacciCoefficientSum => b.is_all_ones(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Raised when an identity name is not recognized.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "unknown identity '{0}'; expected one of count-coefficient, binomial-case, \
     fibonacci-binomial, total-coefficient-sum, kbonacci-coefficient-sum"
)]
pub struct UnknownIdentity(pub String);

impl FromStr for Identity {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, UnknownIdentity> {
        Identity::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

/// Upper bounds for the parameter grids swept by [`check_identity`].
#[derive(Debug, Clone, Copy)]
pub struct GridBounds {
    pub n_max: usize,
    pub k_max: usize,
}

/// One grid point where the two sides disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    /// Named grid coordinates, e.g. `[("k", 2), ("n", 3)]`.
    pub params: Vec<(&'static str, usize)>,
    pub left: Count,
    pub right: Count,
}

/// Outcome of sweeping one identity over its grid. The identity held
/// everywhere iff `failures` is empty.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: Identity,
    /// Human-readable description of the swept grid.
    pub grid: String,
    /// Number of grid points evaluated.
    pub checked: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates both sides of `identity` on every point of the bounded grid.
///
/// The weight vector parameterizes the count-coefficient and
/// total-coefficient-sum grids directly; the binomial and Fibonacci
/// identities are fixed statements about `b = (1,1)` and ignore the weights;
/// the k-bonacci identity uses only `r = b.r()`. Deterministic: equal inputs
/// produce equal reports.
pub fn check_identity(identity: Identity, b: &WeightVector, bounds: &GridBounds) -> IdentityReport {
    match identity {
        Identity::CountCoefficient => check_count_coefficient(b, bounds.k_max),
        Identity::BinomialCase => check_binomial_case(bounds.k_max),
        Identity::FibonacciBinomial => check_fibonacci_binomial(bounds.n_max),
        Identity::TotalCoefficientSum => check_total_coefficient_sum(b, bounds.n_max),
        Identity::KbonacciCoefficientSum => check_kbonacci_coefficient_sum(b.r(), bounds.n_max),
    }
}

/// DP counts vs. polynomial-power coefficients over `1 <= k <= k_max`,
/// `k <= n <= r*k`.
pub fn check_count_coefficient(b: &WeightVector, k_max: usize) -> IdentityReport {
    let table = CountTable::build(b, b.r().saturating_mul(k_max));
    check_count_coefficient_table(&table, k_max)
}

/// Same sweep against a prebuilt table (also lets tests verify that the
/// checker notices a wrong entry).
pub(crate) fn check_count_coefficient_table(table: &CountTable, k_max: usize) -> IdentityReport {
    let b = table.weights();
    let r = b.r();
    let base = DensePoly::from_weights(b);
    let mut power = DensePoly::one();
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 1..=k_max {
        power = power.mul(&base);
        for n in k..=r * k {
            let left = table.get(k, n).clone();
            let right = power.coefficient(n - k);
            checked += 1;
            if left != right {
                failures.push(IdentityFailure {
                    params: vec![("k", k), ("n", n)],
                    left,
                    right,
                });
            }
        }
    }
    IdentityReport {
        identity: Identity::CountCoefficient,
        grid: format!("b={b}, k in 1..={k_max}, n in k..={r}k"),
        checked,
        failures,
    }
}

/// `(1,1)` counts vs. Pascal-rule binomials over `1 <= k <= k_max`,
/// `0 <= n <= k`.
pub fn check_binomial_case(k_max: usize) -> IdentityReport {
    let b = WeightVector::ones(2);
    let table = CountTable::build(&b, 2 * k_max);
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 1..=k_max {
        for n in 0..=k {
            let left = table.get(k, n + k).clone();
            let right = binomial(k, n);
            checked += 1;
            if left != right {
                failures.push(IdentityFailure {
                    params: vec![("k", k), ("n", n)],
                    left,
                    right,
                });
            }
        }
    }
    IdentityReport {
        identity: Identity::BinomialCase,
        grid: format!("b=(1,1), k in 1..={k_max}, n in 0..=k"),
        checked,
        failures,
    }
}

/// Diagonal binomial sums vs. the `(1,1)` totals over `1 <= n <= n_max`.
pub fn check_fibonacci_binomial(n_max: usize) -> IdentityReport {
    let b = WeightVector::ones(2);
    compare_over_n(
        Identity::FibonacciBinomial,
        format!("b=(1,1), n in 1..={n_max}"),
        n_max,
        fibonacci_via_binomials,
        |n| count_all(&b, n),
    )
}

/// Recurrence totals vs. coefficient sums over `1 <= n <= n_max`.
pub fn check_total_coefficient_sum(b: &WeightVector, n_max: usize) -> IdentityReport {
    compare_over_n(
        Identity::TotalCoefficientSum,
        format!("b={b}, n in 1..={n_max}"),
        n_max,
        |n| count_all(b, n),
        |n| count_all_via_coefficients(b, n),
    )
}

/// All-ones coefficient sums vs. the k-bonacci recurrence over
/// `1 <= n <= n_max`.
pub fn check_kbonacci_coefficient_sum(r: usize, n_max: usize) -> IdentityReport {
    compare_over_n(
        Identity::KbonacciCoefficientSum,
        format!("r={r}, n in 1..={n_max}"),
        n_max,
        |n| r_fibonacci_via_coefficients(r, n),
        |n| r_fibonacci(r, n),
    )
}

fn compare_over_n(
    identity: Identity,
    grid: String,
    n_max: usize,
    left_of: impl Fn(usize) -> Count,
    right_of: impl Fn(usize) -> Count,
) -> IdentityReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let left = left_of(n);
        let right = right_of(n);
        checked += 1;
        if left != right {
            failures.push(IdentityFailure {
                params: vec![("n", n)],
                left,
                right,
            });
        }
    }
    IdentityReport {
        identity,
        grid,
        checked,
        failures,
    }
}
