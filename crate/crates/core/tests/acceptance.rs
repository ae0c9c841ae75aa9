//! Acceptance suite: one test per criterion, each printing a pass line with
//! the number of instances checked (run with `--nocapture` to see them).
//! Every comparison is exact.

mod common;

use std::time::Instant;

use common::{all_weight_vectors, c, SplitMix64};
use gencomp_core::{
    binomial, count_all, count_all_via_coefficients, count_by_enumeration, count_compositions,
    fibonacci_via_binomials, r_fibonacci_via_coefficients, CountTable, DensePoly, WeightVector,
};

fn pass(criterion: &str, checked: usize, started: Instant) {
    println!(
        "criterion {criterion}: PASS ({checked} instances, {} ms)",
        started.elapsed().as_millis()
    );
}

/// Criterion 1: the per-part-count numbers equal the polynomial-power
/// coefficients, C(k, n) = [x^(n-k)] (b_1 + ... + b_r x^(r-1))^k, for every
/// weight vector with r <= 4 and entries in 0..=3, every k <= 8, and every
/// k <= n <= r*k.
#[test]
fn criterion_1_counts_equal_power_coefficients() {
    let started = Instant::now();
    let mut checked = 0;
    let vectors = all_weight_vectors(4, 3);
    assert_eq!(vectors.len(), 4 + 16 + 64 + 256);
    for b in vectors {
        let r = b.r();
        let table = CountTable::build(&b, r * 8);
        let base = DensePoly::from_weights(&b);
        let mut power = DensePoly::one();
        for k in 1..=8usize {
            power = power.mul(&base);
            for n in k..=r * k {
                assert_eq!(
                    *table.get(k, n),
                    power.coefficient(n - k),
                    "b={b} k={k} n={n}"
                );
                checked += 1;
            }
        }
    }
    pass("1 (counts equal power coefficients)", checked, started);
}

/// Criterion 2: totals equal coefficient sums,
/// F(n) = sum_{k=ceil(n/r)}^{n} [x^(n-k)] p^k, for 50 seeded random vectors
/// with r <= 5 and entries <= 4, and every n <= 40.
#[test]
fn criterion_2_totals_equal_coefficient_sums() {
    let started = Instant::now();
    let mut rng = SplitMix64::new(0x9C0B_57A3_11E5_D2F4);
    let mut checked = 0;
    for _ in 0..50 {
        let r = 1 + rng.below(5) as usize;
        let raw: Vec<i64> = (0..r).map(|_| rng.below(5) as i64).collect();
        let b = WeightVector::new(&raw).unwrap();
        for n in 1..=40usize {
            assert_eq!(
                count_all(&b, n),
                count_all_via_coefficients(&b, n),
                "b={b} n={n}"
            );
            checked += 1;
        }
    }
    pass("2 (totals equal coefficient sums)", checked, started);
}

/// Criterion 3: brute-force enumeration counts agree with the dynamic
/// program (per part count) and the linear recurrence (total) for every
/// vector with r <= 3 and entries <= 2, and every n <= 10.
#[test]
fn criterion_3_enumeration_oracle_agrees() {
    let started = Instant::now();
    let mut checked = 0;
    for b in all_weight_vectors(3, 2) {
        for n in 1..=10usize {
            assert_eq!(
                count_by_enumeration(&b, n, None),
                count_all(&b, n),
                "total: b={b} n={n}"
            );
            checked += 1;
            for k in 1..=n {
                assert_eq!(
                    count_by_enumeration(&b, n, Some(k)),
                    count_compositions(&b, k, n),
                    "per-k: b={b} n={n} k={k}"
                );
                checked += 1;
            }
        }
    }
    pass("3 (enumeration oracle agrees)", checked, started);
}

/// Criterion 4: with b = (1,1), C(k, n+k) equals the Pascal-rule binomial
/// for 0 <= n <= k <= 20, and the diagonal binomial sums reproduce the
/// (1,1) totals for n <= 30, with the frozen spot value at n = 10.
#[test]
fn criterion_4_binomial_and_fibonacci_forms() {
    let started = Instant::now();
    let mut checked = 0;
    let b = WeightVector::ones(2);
    let table = CountTable::build(&b, 40);
    for k in 0..=20usize {
        for n in 0..=k {
            assert_eq!(*table.get(k, n + k), binomial(k, n), "k={k} n={n}");
            checked += 1;
        }
    }
    for n in 1..=30usize {
        assert_eq!(fibonacci_via_binomials(n), count_all(&b, n), "n={n}");
        checked += 1;
    }
    // two-term recurrence oracle: F(1) = F(2) = 1, F(m) = F(m-1) + F(m-2)
    let mut prev = c(1);
    let mut cur = c(1);
    for _ in 3..=11 {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    assert_eq!(cur, c(89));
    assert_eq!(fibonacci_via_binomials(10), c(89));
    checked += 1;
    pass("4 (binomial and Fibonacci forms)", checked, started);
}

/// Criterion 5: the all-ones coefficient sums reproduce the k-bonacci
/// totals, sum_{k=ceil(n/r)}^{n} polynomial_coefficient(k, r, n-k) =
/// count_all((1,...,1)_r, n), for r <= 5 and n <= 25.
#[test]
fn criterion_5_kbonacci_coefficient_sums() {
    let started = Instant::now();
    let mut checked = 0;
    for r in 1..=5usize {
        let ones = WeightVector::ones(r);
        for n in 1..=25usize {
            assert_eq!(
                r_fibonacci_via_coefficients(r, n),
                count_all(&ones, n),
                "r={r} n={n}"
            );
            checked += 1;
        }
    }
    pass("5 (k-bonacci coefficient sums)", checked, started);
}

/// Criterion 6: the two routes agree at n = 300 for b = (1,1) and the value
/// needs more than 60 decimal digits, so the arithmetic is genuinely
/// arbitrary-precision.
#[test]
fn criterion_6_big_integer_soundness() {
    let started = Instant::now();
    let b = WeightVector::ones(2);
    let via_recurrence = count_all(&b, 300);
    let via_coefficients = count_all_via_coefficients(&b, 300);
    assert_eq!(via_recurrence, via_coefficients);
    let digits = via_recurrence.to_string().len();
    assert!(digits > 60, "expected more than 60 digits, got {digits}");
    pass("6 (arbitrary-precision soundness)", 2, started);
}

/// The criterion-6 value cross-checked by a third route: a plain two-term
/// addition chain, independent of both the sliding window and the
/// polynomial powers.
#[test]
fn criterion_6_spot_value_is_stable() {
    let b = WeightVector::ones(2);
    let mut prev = c(1); // count_all((1,1), 0)
    let mut cur = c(1); // count_all((1,1), 1)
    for _ in 2..=300 {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    assert_eq!(count_all(&b, 300), cur);
}
