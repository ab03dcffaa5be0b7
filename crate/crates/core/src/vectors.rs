//! Integer-vector primitives: conjugates, partial sums, prefix-sum dominance,
//! and counting sort with permutation tracking.
//!
//! Everything here runs in time linear in the vector length (plus the value
//! range for the counting passes), which is what keeps the realization
//! pipeline linear overall. All types are immutable after construction and
//! all operations are pure.

use std::fmt;
use std::ops::Index;

/// Nonnegative integer vector describing the vertex degrees of one part of a
/// bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DegreeVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        DegreeVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    /// Sum of all entries, widened so that totals up to n1*n2 cannot overflow.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The conjugate vector of the given length: entry `i` (1-based) counts
    /// how many entries of `self` are `>= i`.
    ///
    /// Entries are capped at `target_length` while building the histogram;
    /// larger values are indistinguishable from `target_length` for every
    /// position of the result, and the cap keeps the histogram dense.
    pub fn conjugate(&self, target_length: usize) -> DegreeVector {
        let mut histogram = vec![0usize; target_length + 1];
        for &entry in &self.0 {
            histogram[entry.min(target_length)] += 1;
        }
        let mut out = vec![0usize; target_length];
        let mut at_least = 0;
        for value in (1..=target_length).rev() {
            at_least += histogram[value];
            out[value - 1] = at_least;
        }
        DegreeVector(out)
    }

    /// Prefix sums: `sums[k]` is the sum of the first `k + 1` entries.
    pub fn partial_sums(&self) -> PartialSums {
        let mut sums = Vec::with_capacity(self.0.len());
        let mut acc = 0u64;
        for &entry in &self.0 {
            acc += entry as u64;
            sums.push(acc);
        }
        PartialSums(sums)
    }

    /// True iff every entry is `>=` its successor. Empty and single-entry
    /// vectors are trivially non-increasing.
    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<Vec<usize>> for DegreeVector {
    fn from(entries: Vec<usize>) -> Self {
        DegreeVector(entries)
    }
}

impl Index<usize> for DegreeVector {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        &self.0[index]
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for entry in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", entry)?;
            first = false;
        }
        Ok(())
    }
}

/// Vector of prefix sums of a [`DegreeVector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSums(Vec<u64>);

impl PartialSums {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The full total, i.e. the last prefix sum (0 for an empty vector).
    pub fn total(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }
}

/// True iff every prefix sum of `a` is at most the corresponding prefix sum
/// of `b`; in dominance-order notation, `a` is dominated by `b`.
///
/// Both vectors must have equal length.
pub fn dominates(a: &DegreeVector, b: &DegreeVector) -> bool {
    assert_eq!(
        a.len(),
        b.len(),
        "dominance is only defined for equal-length vectors"
    );
    let mut sum_a = 0u64;
    let mut sum_b = 0u64;
    for (&x, &y) in a.iter().zip(b.iter()) {
        sum_a += x as u64;
        sum_b += y as u64;
        if sum_a > sum_b {
            return false;
        }
    }
    true
}

/// Bijection between original and sorted index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation {
    /// original index -> sorted index
    forward: Vec<usize>,
    /// sorted index -> original index
    inverse: Vec<usize>,
}

impl SortPermutation {
    pub fn identity(len: usize) -> Self {
        SortPermutation {
            forward: (0..len).collect(),
            inverse: (0..len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &f)| i == f)
    }

    /// Where the entry at `original` ended up after sorting.
    pub fn to_sorted(&self, original: usize) -> usize {
        self.forward[original]
    }

    /// Which original entry sits at `sorted` after sorting.
    pub fn to_original(&self, sorted: usize) -> usize {
        self.inverse[sorted]
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    /// Maps values given in sorted order back to original order.
    pub fn restore_order<T: Copy + Default>(&self, sorted_values: &[T]) -> Vec<T> {
        assert_eq!(sorted_values.len(), self.len());
        let mut out = vec![T::default(); sorted_values.len()];
        for (sorted, &value) in sorted_values.iter().enumerate() {
            out[self.inverse[sorted]] = value;
        }
        out
    }
}

/// Sorts the pairs `(low[i], up[i])` so that `low` becomes non-increasing,
/// keeping each pair together, and returns the permutation that maps results
/// back to the original order.
///
/// Uses a stable counting sort keyed on the lower-bound value, so ties keep
/// their original relative order and the whole pass is `O(n + max(low))`.
pub fn sort_pairs_descending(
    low: &DegreeVector,
    up: &DegreeVector,
) -> (DegreeVector, DegreeVector, SortPermutation) {
    assert_eq!(low.len(), up.len(), "paired vectors must have equal length");
    let n = low.len();
    let max = low.max_entry();

    let mut counts = vec![0usize; max + 1];
    for &value in low.iter() {
        counts[value] += 1;
    }
    // next free slot per value, highest value first
    let mut offsets = vec![0usize; max + 1];
    let mut acc = 0;
    for value in (0..=max).rev() {
        offsets[value] = acc;
        acc += counts[value];
    }

    let mut forward = vec![0usize; n];
    let mut inverse = vec![0usize; n];
    let mut low_sorted = vec![0usize; n];
    let mut up_sorted = vec![0usize; n];
    for (original, (&l, &u)) in low.iter().zip(up.iter()).enumerate() {
        let dst = offsets[l];
        offsets[l] += 1;
        forward[original] = dst;
        inverse[dst] = original;
        low_sorted[dst] = l;
        up_sorted[dst] = u;
    }

    (
        DegreeVector(low_sorted),
        DegreeVector(up_sorted),
        SortPermutation { forward, inverse },
    )
}
