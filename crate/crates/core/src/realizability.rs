//! The two decision procedures: the Gale–Ryser test for exact degree pairs
//! and the Fulkerson–Schocker test for interval bounds.
//!
//! Both are pure prefix-sum comparisons against conjugate vectors and run in
//! `O(n1 + n2)`.

use std::fmt;

use crate::model::SortedInstance;
use crate::vectors::{dominates, DegreeVector};

/// Which of the two dominance conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The row lower bounds are not dominated by the conjugate of the column
    /// upper bounds.
    Row,
    /// The column lower bounds are not dominated by the conjugate of the row
    /// upper bounds.
    Col,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Row => write!(f, "r"),
            Side::Col => write!(f, "c"),
        }
    }
}

/// Witness of non-realizability: the smallest prefix (in sorted vertex order)
/// whose lower-bound sum exceeds the capacity offered by the opposite side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub side: Side,
    /// 1-based prefix length `k` at which the dominance first fails.
    pub prefix: usize,
    /// Sum of the first `k` lower bounds.
    pub demanded: u64,
    /// Corresponding conjugate prefix sum (the available capacity).
    pub available: u64,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prefix k={}, side {}", self.prefix, self.side)
    }
}

fn first_dominance_violation(low: &DegreeVector, capacity: &DegreeVector) -> Option<(usize, u64, u64)> {
    debug_assert_eq!(low.len(), capacity.len());
    let mut demanded = 0u64;
    let mut available = 0u64;
    for (k, (&l, &cap)) in low.iter().zip(capacity.iter()).enumerate() {
        demanded += l as u64;
        available += cap as u64;
        if demanded > available {
            return Some((k + 1, demanded, available));
        }
    }
    None
}

/// Gale–Ryser: a non-increasing `r` and an arbitrary `c` admit a bipartite
/// graph with exactly those degrees iff the totals agree and `r` is dominated
/// by the conjugate of `c`.
///
/// `c` may be unsorted because it enters only through its conjugate, which is
/// permutation-invariant. Panics if `r` is not non-increasing.
pub fn is_bigraphical(r: &DegreeVector, c: &DegreeVector) -> bool {
    assert!(
        r.is_non_increasing(),
        "is_bigraphical requires a non-increasing row degree vector"
    );
    r.total() == c.total() && dominates(r, &c.conjugate(r.len()))
}

/// Fulkerson–Schocker on bare vectors: interval bounds with non-increasing
/// lower-bound vectors admit a realization iff each side's lower bounds are
/// dominated by the conjugate of the other side's upper bounds.
///
/// Returns the smallest violated prefix on failure, checking the row
/// condition first. Panics if a lower-bound vector is not non-increasing.
pub fn check_realizable_vectors(
    r_low: &DegreeVector,
    r_up: &DegreeVector,
    c_low: &DegreeVector,
    c_up: &DegreeVector,
) -> Result<(), Certificate> {
    assert!(r_low.is_non_increasing() && c_low.is_non_increasing());
    assert_eq!(r_low.len(), r_up.len());
    assert_eq!(c_low.len(), c_up.len());
    if let Some((prefix, demanded, available)) =
        first_dominance_violation(r_low, &c_up.conjugate(r_low.len()))
    {
        return Err(Certificate {
            side: Side::Row,
            prefix,
            demanded,
            available,
        });
    }
    if let Some((prefix, demanded, available)) =
        first_dominance_violation(c_low, &r_up.conjugate(c_low.len()))
    {
        return Err(Certificate {
            side: Side::Col,
            prefix,
            demanded,
            available,
        });
    }
    Ok(())
}

pub fn is_realizable_vectors(
    r_low: &DegreeVector,
    r_up: &DegreeVector,
    c_low: &DegreeVector,
    c_up: &DegreeVector,
) -> bool {
    check_realizable_vectors(r_low, r_up, c_low, c_up).is_ok()
}

/// Fulkerson–Schocker on a normalized instance; see
/// [`check_realizable_vectors`]. The sorted-instance type guarantees the
/// non-increasing precondition.
pub fn check_realizable(inst: &SortedInstance) -> Result<(), Certificate> {
    check_realizable_vectors(inst.r_low(), inst.r_up(), inst.c_low(), inst.c_up())
}

pub fn is_realizable(inst: &SortedInstance) -> bool {
    check_realizable(inst).is_ok()
}
