//! Typed parts and generalized compositions, the objects being counted.

use std::fmt;

use thiserror::Error;

use crate::weights::WeightVector;

/// Errors from building [`TypedPart`]s and [`GeneralizedComposition`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("part value {value} is outside 1..={r}")]
    PartValueOutOfRange { value: usize, r: usize },
    #[error("part value {value} has {available} types, got type index {type_index}")]
    TypeIndexOutOfRange {
        value: usize,
        type_index: usize,
        available: u64,
    },
    #[error("a generalized composition must have at least one part")]
    EmptyComposition,
}

/// One part of a generalized composition: a value `v` together with which of
/// the `b_v` types it carries. Both fields are 1-based; a part cannot exist
/// for a value whose weight is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypedPart {
    value: usize,
    type_index: usize,
}

impl TypedPart {
    /// Validates a part against the governing weight vector.
    pub fn new(
        b: &WeightVector,
        value: usize,
        type_index: usize,
    ) -> Result<Self, CompositionError> {
        if value < 1 || value > b.r() {
            return Err(CompositionError::PartValueOutOfRange { value, r: b.r() });
        }
        let available = b.weight(value);
        if type_index < 1 || type_index as u64 > available {
            return Err(CompositionError::TypeIndexOutOfRange {
                value,
                type_index,
                available,
            });
        }
        Ok(Self { value, type_index })
    }

    pub(crate) fn new_unchecked(value: usize, type_index: usize) -> Self {
        Self { value, type_index }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn type_index(self) -> usize {
        self.type_index
    }
}

impl fmt::Display for TypedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.value, self.type_index)
    }
}

/// An ordered, nonempty sequence of typed parts. Order matters: the same
/// multiset of parts in a different order is a different composition. The
/// total is always the sum of the part values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedComposition {
    parts: Vec<TypedPart>,
    total: usize,
}

impl GeneralizedComposition {
    pub fn new(parts: Vec<TypedPart>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::EmptyComposition);
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<TypedPart>) -> Self {
        let total = parts.iter().map(|p| p.value()).sum();
        Self { parts, total }
    }

    pub fn parts(&self) -> &[TypedPart] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

/// Renders as `value.type` terms joined by `+`, e.g. `1.2+2.1`.
impl fmt::Display for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, part) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(raw: &[i64]) -> WeightVector {
        WeightVector::new(raw).unwrap()
    }

    #[test]
    fn typed_part_validation() {
        let b = wv(&[2, 1, 0]);
        assert!(TypedPart::new(&b, 1, 2).is_ok());
        assert!(TypedPart::new(&b, 2, 1).is_ok());
        assert_eq!(
            TypedPart::new(&b, 4, 1),
            Err(CompositionError::PartValueOutOfRange { value: 4, r: 3 })
        );
        assert_eq!(
            TypedPart::new(&b, 2, 2),
            Err(CompositionError::TypeIndexOutOfRange {
                value: 2,
                type_index: 2,
                available: 1
            })
        );
        // weight zero: no part of value 3 exists at all
        assert_eq!(
            TypedPart::new(&b, 3, 1),
            Err(CompositionError::TypeIndexOutOfRange {
                value: 3,
                type_index: 1,
                available: 0
            })
        );
    }

    #[test]
    fn composition_total_is_sum_of_values() {
        let b = wv(&[2, 1]);
        let parts = vec![
            TypedPart::new(&b, 1, 2).unwrap(),
            TypedPart::new(&b, 2, 1).unwrap(),
        ];
        let comp = GeneralizedComposition::new(parts).unwrap();
        assert_eq!(comp.total(), 3);
        assert_eq!(comp.part_count(), 2);
        assert_eq!(comp.to_string(), "1.2+2.1");
    }

    #[test]
    fn empty_composition_is_rejected() {
        assert_eq!(
            GeneralizedComposition::new(Vec::new()),
            Err(CompositionError::EmptyComposition)
        );
    }

    #[test]
    fn order_distinguishes_compositions() {
        let b = wv(&[1, 1]);
        let p1 = TypedPart::new(&b, 1, 1).unwrap();
        let p2 = TypedPart::new(&b, 2, 1).unwrap();
        let a = GeneralizedComposition::new(vec![p1, p2]).unwrap();
        let c = GeneralizedComposition::new(vec![p2, p1]).unwrap();
        assert_ne!(a, c);
    }
}
