//! Brute-force generation of generalized compositions, the oracle the
//! counting recursions are checked against.
//!
//! Generation walks untyped compositions (the part-value sequences) by
//! depth-first descent over available values, then expands the type choices
//! of each value sequence with an odometer over the per-part type ranges.

use crate::composition::{GeneralizedComposition, TypedPart};
use crate::weights::WeightVector;
use crate::Count;

/// Streams every generalized composition of `n` exactly once, then ends.
///
/// Order contract: compositions are yielded in lexicographic order of their
/// part-value sequences, ties broken by the type-index sequences compared
/// position by position. The order and the `limit` cutoff are stable, so
/// paginated output is reproducible.
///
/// Memory use is proportional to the composition length, never to the number
/// of compositions. A cursor is single-consumer; distinct cursors are
/// independent.
pub struct CompositionCursor {
    weights: Vec<u64>,
    parts_required: Option<usize>,
    remaining_limit: Option<usize>,
    reachable: Reachability,
    values: Vec<usize>,
    types: Vec<usize>,
    remaining: usize,
    state: CursorState,
}

enum CursorState {
    Fresh { n: usize },
    AtLeaf,
    Done,
}

/// Which remainders can still be completed, precomputed so that the cursor
/// never wanders into a dead branch.
enum Reachability {
    /// `[m]`: `m` is a sum of available part values (`m = 0` included).
    AnyParts(Vec<bool>),
    /// `[j][m]`: `m` is a sum of exactly `j` available part values.
    ExactParts(Vec<Vec<bool>>),
}

impl CompositionCursor {
    pub fn new(b: &WeightVector, n: usize, parts: Option<usize>, limit: Option<usize>) -> Self {
        let weights = b.weights().to_vec();
        let infeasible = n == 0 || parts.is_some_and(|k| k == 0 || k > n);
        let reachable = match parts {
            Some(k) if !infeasible => Reachability::ExactParts(reach_exact(&weights, n, k)),
            Some(_) => Reachability::ExactParts(Vec::new()),
            None => Reachability::AnyParts(reach_any(&weights, n)),
        };
        Self {
            weights,
            parts_required: parts,
            remaining_limit: limit,
            reachable,
            values: Vec::new(),
            types: Vec::new(),
            remaining: 0,
            state: if infeasible {
                CursorState::Done
            } else {
                CursorState::Fresh { n }
            },
        }
    }

    fn can_finish(&self, m: usize, parts_used: usize) -> bool {
        match &self.reachable {
            Reachability::AnyParts(reach) => reach[m],
            Reachability::ExactParts(rows) => {
                let k = self.parts_required.expect("exact table implies k");
                parts_used <= k && rows[k - parts_used][m]
            }
        }
    }

    /// Extends the current prefix with the smallest available values until
    /// the remainder hits zero. Callers guarantee the prefix is completable.
    fn descend_to_leaf(&mut self) {
        while self.remaining > 0 {
            let used = self.values.len();
            let v = (1..=self.weights.len())
                .find(|&v| {
                    self.weights[v - 1] > 0
                        && v <= self.remaining
                        && self.can_finish(self.remaining - v, used + 1)
                })
                .expect("reachability table guarantees a continuation");
            self.values.push(v);
            self.remaining -= v;
        }
        self.types.clear();
        self.types.resize(self.values.len(), 1);
        self.state = CursorState::AtLeaf;
    }

    /// Advances the type odometer; false once all assignments are spent.
    fn advance_types(&mut self) -> bool {
        for i in (0..self.values.len()).rev() {
            if (self.types[i] as u64) < self.weights[self.values[i] - 1] {
                self.types[i] += 1;
                for t in &mut self.types[i + 1..] {
                    *t = 1;
                }
                return true;
            }
        }
        false
    }

    /// Pops values until some position can move to a larger value, then
    /// descends to the first leaf beneath it; false once the tree is spent.
    fn backtrack_values(&mut self) -> bool {
        while let Some(v) = self.values.pop() {
            self.remaining += v;
            let used = self.values.len();
            let next = ((v + 1)..=self.weights.len()).find(|&cand| {
                self.weights[cand - 1] > 0
                    && cand <= self.remaining
                    && self.can_finish(self.remaining - cand, used + 1)
            });
            if let Some(cand) = next {
                self.values.push(cand);
                self.remaining -= cand;
                self.descend_to_leaf();
                return true;
            }
        }
        false
    }

    fn current(&self) -> GeneralizedComposition {
        let parts = self
            .values
            .iter()
            .zip(&self.types)
            .map(|(&v, &t)| TypedPart::new_unchecked(v, t))
            .collect();
        GeneralizedComposition::from_parts_unchecked(parts)
    }
}

impl Iterator for CompositionCursor {
    type Item = GeneralizedComposition;

    fn next(&mut self) -> Option<GeneralizedComposition> {
        if let CursorState::Fresh { n } = self.state {
            self.state = CursorState::Done;
            if self.can_finish(n, 0) {
                self.remaining = n;
                self.descend_to_leaf();
            }
        }
        if matches!(self.remaining_limit, Some(0)) || matches!(self.state, CursorState::Done) {
            return None;
        }
        let item = self.current();
        if let Some(limit) = &mut self.remaining_limit {
            *limit -= 1;
        }
        if !self.advance_types() && !self.backtrack_values() {
            self.state = CursorState::Done;
        }
        Some(item)
    }
}

fn reach_any(weights: &[u64], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for m in 1..=n {
        reach[m] = (1..=weights.len().min(m)).any(|v| weights[v - 1] > 0 && reach[m - v]);
    }
    reach
}

fn reach_exact(weights: &[u64], n: usize, k: usize) -> Vec<Vec<bool>> {
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(k + 1);
    let mut row0 = vec![false; n + 1];
    row0[0] = true;
    rows.push(row0);
    for _ in 1..=k {
        let prev = rows.last().expect("rows start nonempty");
        let mut row = vec![false; n + 1];
        for m in 1..=n {
            row[m] = (1..=weights.len().min(m)).any(|v| weights[v - 1] > 0 && prev[m - v]);
        }
        rows.push(row);
    }
    rows
}

/// Streams every generalized composition of `n` under `b`, restricted to
/// exactly `parts` parts when given, stopping after `limit` items when
/// given. An empty stream is the valid result when nothing matches.
pub fn enumerate_compositions(
    b: &WeightVector,
    n: usize,
    parts: Option<usize>,
    limit: Option<usize>,
) -> CompositionCursor {
    CompositionCursor::new(b, n, parts, limit)
}

/// Counts compositions by generating every one of them. Slow by design and
/// intended for small `n`: this is the cross-check for the counting
/// recursions, sharing no logic with them.
pub fn count_by_enumeration(b: &WeightVector, n: usize, parts: Option<usize>) -> Count {
    Count::from(enumerate_compositions(b, n, parts, None).count())
}
