//! Weight vectors: how many interchangeable types each part value has.

use std::fmt;

use thiserror::Error;

/// Errors from [`WeightVector`] construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WeightVectorError {
    /// The input had no entries; at least `b_1` is required.
    #[error("weight vector must have at least one entry")]
    EmptyVector,
    /// Weights count types and must be nonnegative. `position` is 1-based.
    #[error("weight b_{position} is negative ({value})")]
    NegativeWeight { position: usize, value: i64 },
}

/// The finite sequence `b = (b_1, ..., b_r)` of type multiplicities: part
/// value `i` comes in `b_i` interchangeable types, and a weight of zero makes
/// that part value unavailable.
///
/// Trailing zero weights are preserved exactly as given. They change `r`,
/// which changes the lower summation bound `ceil(n/r)` in the
/// coefficient-sum identities, so they are semantically meaningful. Use
/// [`WeightVector::trimmed`] to drop them explicitly; nothing in the crate
/// ever does so implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<u64>,
}

impl WeightVector {
    /// Validates raw integers into a weight vector with `r = raw.len()`.
    pub fn new(raw: &[i64]) -> Result<Self, WeightVectorError> {
        if raw.is_empty() {
            return Err(WeightVectorError::EmptyVector);
        }
        let mut weights = Vec::with_capacity(raw.len());
        for (idx, &value) in raw.iter().enumerate() {
            if value < 0 {
                return Err(WeightVectorError::NegativeWeight {
                    position: idx + 1,
                    value,
                });
            }
            weights.push(value as u64);
        }
        Ok(Self { weights })
    }

    /// The all-ones vector of length `r`: ordinary compositions with every
    /// part at most `r`, one type each.
    ///
    /// Panics if `r` is zero.
    pub fn ones(r: usize) -> Self {
        assert!(r >= 1, "weight vector length must be at least 1");
        Self {
            weights: vec![1; r],
        }
    }

    /// Number of entries, i.e. the largest usable part value.
    pub fn r(&self) -> usize {
        self.weights.len()
    }

    /// The weights as a slice; `weights()[i]` is `b_{i+1}`.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `b_i` for 1-based `i`; part values above `r` have zero types.
    ///
    /// Panics if `i` is zero.
    pub fn weight(&self, i: usize) -> u64 {
        assert!(i >= 1, "part values are 1-based");
        self.weights.get(i - 1).copied().unwrap_or(0)
    }

    /// Copy with trailing zero weights removed; at least one entry is kept,
    /// so the all-zero vector trims to `(0)`.
    pub fn trimmed(&self) -> Self {
        let mut weights = self.weights.clone();
        while weights.len() > 1 && weights.last() == Some(&0) {
            weights.pop();
        }
        Self { weights }
    }

    /// True when every weight is 1.
    pub fn is_all_ones(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, w) in self.weights.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_reports_length() {
        let b = WeightVector::new(&[2, 1]).unwrap();
        assert_eq!(b.r(), 2);
        assert_eq!(b.weights(), &[2, 1]);
        assert_eq!(b.weight(1), 2);
        assert_eq!(b.weight(2), 1);
        assert_eq!(b.weight(3), 0);
    }

    #[test]
    fn trailing_zeros_are_preserved() {
        let b = WeightVector::new(&[1, 1, 0]).unwrap();
        assert_eq!(b.r(), 3);
        assert_eq!(b.weights(), &[1, 1, 0]);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(WeightVector::new(&[]), Err(WeightVectorError::EmptyVector));
    }

    #[test]
    fn negative_weight_is_rejected_with_position() {
        assert_eq!(
            WeightVector::new(&[1, -2]),
            Err(WeightVectorError::NegativeWeight {
                position: 2,
                value: -2
            })
        );
    }

    #[test]
    fn construction_is_deterministic() {
        assert_eq!(
            WeightVector::new(&[0, 3, 0]).unwrap(),
            WeightVector::new(&[0, 3, 0]).unwrap()
        );
    }

    #[test]
    fn trimmed_drops_trailing_zeros_only() {
        assert_eq!(
            WeightVector::new(&[1, 1, 0]).unwrap().trimmed(),
            WeightVector::new(&[1, 1]).unwrap()
        );
        assert_eq!(
            WeightVector::new(&[0, 1]).unwrap().trimmed(),
            WeightVector::new(&[0, 1]).unwrap()
        );
        assert_eq!(
            WeightVector::new(&[0, 0]).unwrap().trimmed(),
            WeightVector::new(&[0]).unwrap()
        );
    }

    #[test]
    fn ones_and_display() {
        let b = WeightVector::ones(3);
        assert!(b.is_all_ones());
        assert_eq!(b.to_string(), "(1,1,1)");
        assert_eq!(WeightVector::new(&[2, 1, 3]).unwrap().to_string(), "(2,1,3)");
    }
}
