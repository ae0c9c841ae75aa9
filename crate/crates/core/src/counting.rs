//! Exact counting of generalized compositions: the per-part-count numbers
//! `C(k, n)`, the totals `F(n)`, Pascal-rule binomials, and the k-bonacci
//! specializations.

use std::collections::VecDeque;

use num_traits::{One, Zero};

use crate::poly::DensePoly;
use crate::weights::WeightVector;
use crate::Count;

/// Number of generalized compositions of `n` into exactly `k` parts under
/// the weight vector `b`.
///
/// Conventions and zero rules:
///
/// - `C(0, 0) = 1` (the empty composition) and `C(0, n) = 0` for `n >= 1`;
/// - `C(k, n) = 0` whenever `k > n` (parts are at least 1) or `n > r*k`
///   (parts are at most `r`).
///
/// Inside the band `k <= n <= r*k`, classifying compositions by their final
/// part gives the recursion
///
/// ```text
/// C(k, n) = sum_{i=1}^{min(r, n-k+1)} b_i * C(k-1, n-i)
/// ```
///
/// which is evaluated bottom-up one row at a time. Each call computes from
/// scratch; build a [`CountTable`] to query many entries at once.
pub fn count_compositions(b: &WeightVector, k: usize, n: usize) -> Count {
    if k == 0 {
        return if n == 0 { Count::one() } else { Count::zero() };
    }
    let r = b.r();
    if k > n || n > r * k {
        return Count::zero();
    }
    let mut prev: Vec<Count> = vec![Count::zero(); n + 1];
    prev[0] = Count::one();
    for row in 1..=k {
        let mut cur = vec![Count::zero(); n + 1];
        #[allow(clippy::needless_range_loop)] // m is the composed total, not a plain index
        for m in row..=n.min(r * row) {
            cur[m] = final_part_sum(b, &prev, row, m);
        }
        prev = cur;
    }
    std::mem::take(&mut prev[n])
}

/// One application of the final-part recursion at `C(row, m)` given the
/// previous row `C(row-1, _)`.
fn final_part_sum(b: &WeightVector, prev_row: &[Count], row: usize, m: usize) -> Count {
    let mut acc = Count::zero();
    for i in 1..=b.r().min(m - row + 1) {
        let w = b.weight(i);
        if w != 0 {
            acc += &prev_row[m - i] * w;
        }
    }
    acc
}

/// A dense table of `C(k, n)` for all `0 <= k, n <= max_n`, filled by the
/// same final-part recursion as [`count_compositions`].
///
/// Entries obey the zero rules (`0` when `k > n` or `n > r*k`, except
/// `C(0, 0) = 1`), and the diagonal satisfies `C(n, n) = b_1^n`.
#[derive(Debug, Clone)]
pub struct CountTable {
    weights: WeightVector,
    max_n: usize,
    rows: Vec<Vec<Count>>,
}

impl CountTable {
    pub fn build(b: &WeightVector, max_n: usize) -> Self {
        let r = b.r();
        let mut rows = vec![vec![Count::zero(); max_n + 1]; max_n + 1];
        rows[0][0] = Count::one();
        for k in 1..=max_n {
            let mut row = vec![Count::zero(); max_n + 1];
            #[allow(clippy::needless_range_loop)] // m is the composed total, not a plain index
            for m in k..=max_n.min(r.saturating_mul(k)) {
                row[m] = final_part_sum(b, &rows[k - 1], k, m);
            }
            rows[k] = row;
        }
        Self {
            weights: b.clone(),
            max_n,
            rows,
        }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `C(k, n)`; panics when `k` or `n` exceeds `max_n`.
    pub fn get(&self, k: usize, n: usize) -> &Count {
        &self.rows[k][n]
    }

    // Test hook: lets checker-sensitivity tests plant a wrong entry.
    #[cfg(test)]
    pub(crate) fn set_entry(&mut self, k: usize, n: usize, value: Count) {
        self.rows[k][n] = value;
    }
}

/// Number of all generalized compositions of `n`, any number of parts, with
/// the convention `F(0) = 1`. These are the weighted r-generalized Fibonacci
/// numbers.
///
/// Classifying by the final part gives the order-`r` linear recurrence
///
/// ```text
/// F(n) = b_1 F(n-1) + b_2 F(n-2) + ... + b_r F(n-r)    for n >= r
/// F(n) = b_1 F(n-1) + ... + b_n F(0)                   for 1 <= n < r
/// ```
///
/// evaluated with a sliding window of the last `r` values.
pub fn count_all(b: &WeightVector, n: usize) -> Count {
    let r = b.r();
    let mut window: VecDeque<Count> = VecDeque::with_capacity(r + 1);
    window.push_front(Count::one());
    for m in 1..=n {
        let mut acc = Count::zero();
        for i in 1..=r.min(m) {
            let w = b.weight(i);
            if w != 0 {
                acc += &window[i - 1] * w;
            }
        }
        window.push_front(acc);
        if window.len() > r {
            window.pop_back();
        }
    }
    window.pop_front().expect("window is never empty")
}

/// The same total as [`count_all`], reached through polynomial coefficients:
///
/// ```text
/// F(n) = sum_{k=ceil(n/r)}^{n} [x^(n-k)] (b_1 + b_2 x + ... + b_r x^(r-1))^k
/// ```
///
/// The summand powers come from a single running product
/// (`p^k = p^(k-1) * p`), so the value equals summing
/// [`weighted_polynomial_coefficient`](crate::weighted_polynomial_coefficient)
/// term by term.
pub fn count_all_via_coefficients(b: &WeightVector, n: usize) -> Count {
    if n == 0 {
        return Count::one();
    }
    let base = DensePoly::from_weights(b);
    let lower = n.div_ceil(b.r());
    let mut power = DensePoly::one();
    let mut acc = Count::zero();
    for k in 1..=n {
        power = power.mul(&base);
        if k >= lower {
            acc += power.coefficient(n - k);
        }
    }
    acc
}

/// Binomial coefficient `n choose k`, computed exactly by Pascal's rule
/// `C(n, k) = C(n-1, k) + C(n-1, k-1)` rather than by factorials.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let mut row = vec![Count::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Count::one());
        for j in 1..row.len() {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(Count::one());
        row = next;
    }
    std::mem::take(&mut row[k])
}

/// The Fibonacci number `F(n+1)` (indexing `F(1) = F(2) = 1`) as a diagonal
/// sum of Pascal's triangle:
///
/// ```text
/// F(n+1) = sum_{i=ceil(n/2)}^{n} binomial(i, n-i)
/// ```
///
/// Equivalently, the number of compositions of `n` with parts 1 and 2.
pub fn fibonacci_via_binomials(n: usize) -> Count {
    (n.div_ceil(2)..=n).map(|i| binomial(i, n - i)).sum()
}

/// The r-generalized Fibonacci (k-bonacci) numbers in the convention used
/// throughout this crate: `r_fibonacci(r, m) = count_all((1,...,1), m)`, the
/// number of compositions of `m` with parts at most `r`.
///
/// `r = 2` gives `1, 1, 2, 3, 5, 8, ...` (Fibonacci shifted one index
/// forward) and `r = 3` gives `1, 1, 2, 4, 7, 13, ...`.
pub fn r_fibonacci(r: usize, m: usize) -> Count {
    count_all(&WeightVector::ones(r), m)
}

/// The same sequence through the classical polynomial coefficients:
///
/// ```text
/// sum_{k=ceil(n/r)}^{n} polynomial_coefficient(k, r, n-k)
/// ```
pub fn r_fibonacci_via_coefficients(r: usize, n: usize) -> Count {
    count_all_via_coefficients(&WeightVector::ones(r), n)
}
