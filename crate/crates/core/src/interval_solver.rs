//! The two-phase solver that turns a realizable four-tuple of interval
//! bounds into an exact bi-graphical degree pair.
//!
//! Phase one fixes the column degrees: starting from the column lower
//! bounds, it repeatedly finds the right-most position whose value is still
//! below its upper bound, increments the left-most position holding the same
//! value, and swaps the two positions' upper bounds. After exactly `delta1`
//! such steps the four-tuple `(r_low, r_up, c, c)` is realizable, where
//! `delta1` is the largest prefix deficit of the row lower bounds against
//! the conjugate of the column lower bounds. Incrementing the left-most
//! occurrence of a value keeps the vector non-increasing, and the upper-bound
//! swap keeps the multiset of upper bounds intact, so the
//! Fulkerson–Schocker conditions are preserved step by step.
//!
//! Phase two runs the same machinery with the parts swapped: it raises the
//! row degrees from their lower bounds until the totals match, which takes
//! exactly `delta2 = sum(c) - sum(r_low)` steps and yields a bi-graphical
//! pair `(r, c)`.
//!
//! An upper-bound swap pairs two positions with equal current value, so it
//! is really an exchange of which input vertex each position stands for.
//! Both phases report that exchange as an identity permutation; callers
//! must route per-vertex results through it, or a vertex could be assigned
//! a degree that only its swap partner's interval allows.
//!
//! Two details keep the whole thing linear:
//!
//! * the right-most scan cursor persists across iterations and only ever
//!   moves left, so all inner-loop work together is at most one pass;
//! * a dense [`LeftmostIndex`] table answers "left-most position holding
//!   value v" in constant time and needs only two table writes per
//!   increment.

use crate::error::Error;
use crate::model::SortedInstance;
use crate::vectors::DegreeVector;

/// Lookup table mapping a value to the left-most position currently holding
/// it, for a non-increasing vector that is modified by single increments.
#[derive(Debug, Clone)]
pub struct LeftmostIndex {
    table: Vec<usize>,
}

const ABSENT: usize = usize::MAX;

impl LeftmostIndex {
    /// Builds the table in one right-to-left pass. `max_value` must bound
    /// every value the vector can reach.
    pub fn new(values: &[usize], max_value: usize) -> Self {
        let mut table = vec![ABSENT; max_value + 2];
        for pos in (0..values.len()).rev() {
            table[values[pos]] = pos;
        }
        LeftmostIndex { table }
    }

    /// Left-most position holding `value`, which must be present.
    pub fn leftmost(&self, value: usize) -> usize {
        debug_assert_ne!(self.table[value], ABSENT, "value {} not present", value);
        self.table[value]
    }

    /// Updates the table after `values[pos]` was raised from `old_value` to
    /// `old_value + 1`. Only the entries for those two values can change.
    ///
    /// Call with `values` already reflecting the increment.
    pub fn record_increment(&mut self, pos: usize, old_value: usize, values: &[usize]) {
        let new_value = old_value + 1;
        debug_assert_eq!(values[pos], new_value);
        // pos was the left-most occurrence of old_value, so the entry to its
        // left is at least new_value; if it is exactly new_value the existing
        // (smaller) table entry stays correct.
        if pos == 0 || values[pos - 1] > new_value {
            self.table[new_value] = pos;
        }
        self.table[old_value] = if pos + 1 < values.len() && values[pos + 1] == old_value {
            pos + 1
        } else {
            ABSENT
        };
    }

    /// Slow reference check: every present value maps to its true left-most
    /// position. Used by tests.
    pub fn is_consistent_with(&self, values: &[usize]) -> bool {
        for (pos, &v) in values.iter().enumerate() {
            let leftmost = values.iter().position(|&x| x == v).unwrap();
            if pos == leftmost && self.table[v] != pos {
                return false;
            }
        }
        true
    }
}

/// Callback invoked after each completed solver step with the step number
/// and the current values and upper bounds.
type StepObserver<'a> = &'a mut dyn FnMut(u64, &[usize], &[usize]);

/// Raises entries of `values` (non-increasing, `values <= uppers`) by one,
/// `steps` times, following the right-most-deficit / left-most-equal rule and
/// swapping upper bounds alongside.
///
/// An upper-bound swap only ever pairs two positions whose current values
/// are equal, so it amounts to exchanging which input vertex each position
/// stands for: both vertices' lower bounds were already met at the swapped
/// value and stay met as values only grow. The returned identity vector
/// records that exchange; `identity[p]` is the input index whose interval
/// position `p` carries at the end.
///
/// The observer runs after every completed step with the step number (from
/// 1) and the current state of both vectors.
fn raise_vector(
    values: &mut [usize],
    uppers: &mut [usize],
    steps: u64,
    observer: StepObserver<'_>,
) -> Result<(u64, Vec<usize>), Error> {
    let n = values.len();
    let mut identity: Vec<usize> = (0..n).collect();
    let mut work = n as u64;
    if steps == 0 {
        return Ok((work, identity));
    }
    let max_value = uppers.iter().copied().max().unwrap_or(0);
    let mut leftmost = LeftmostIndex::new(values, max_value);
    // 1-based cursor; every position to its right is saturated and stays so,
    // because steps only touch positions at or left of the cursor.
    let mut cursor = n;
    for step in 1..=steps {
        while cursor > 0 && values[cursor - 1] == uppers[cursor - 1] {
            cursor -= 1;
            work += 1;
        }
        if cursor == 0 {
            return Err(Error::PreconditionViolated(
                "all entries reached their upper bounds before the step budget was spent",
            ));
        }
        let value = values[cursor - 1];
        let target = leftmost.leftmost(value);
        debug_assert_eq!(values[target], value);
        uppers.swap(cursor - 1, target);
        identity.swap(cursor - 1, target);
        values[target] += 1;
        leftmost.record_increment(target, value, values);
        debug_assert!(target == 0 || values[target - 1] >= values[target]);
        debug_assert!(values[target] <= uppers[target]);
        work += 1;
        observer(step, values, uppers);
    }
    Ok((work, identity))
}

/// Result of fixing the column degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseOneResult {
    /// Final column degrees by position; non-increasing.
    pub c: DegreeVector,
    /// The column upper bounds after the phase's swaps; a permutation of the
    /// input upper bounds, with `c[p] <= c_up_permuted[p]` everywhere.
    pub c_up_permuted: DegreeVector,
    /// `identity[p]` is the input column whose interval position `p` carries:
    /// the vertex that receives degree `c[p]`.
    pub identity: Vec<usize>,
    /// Number of outer iterations executed.
    pub delta1: u64,
    /// Operation count for the scaling diagnostics.
    pub work: u64,
}

/// Result of fixing the row degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseTwoResult {
    /// Final row degrees by position; non-increasing.
    pub r: DegreeVector,
    /// `identity[p]` is the input row whose interval position `p` carries:
    /// the vertex that receives degree `r[p]`.
    pub identity: Vec<usize>,
    /// Number of outer iterations executed.
    pub delta2: u64,
    /// Operation count for the scaling diagnostics.
    pub work: u64,
}

/// The exact number of phase-one steps: the largest prefix deficit of the
/// row lower bounds against the conjugate of the column lower bounds,
/// clamped at zero.
///
/// The clamp covers the case where `(r_low, r_up, c_low, c_low)` is already
/// realizable and no step is needed. `r_low` must be non-increasing.
pub fn compute_delta1(r_low: &DegreeVector, c_low: &DegreeVector) -> u64 {
    assert!(r_low.is_non_increasing());
    let conj = c_low.conjugate(r_low.len());
    let mut best = 0u64;
    let mut demanded = 0u64;
    let mut available = 0u64;
    for (&r, &c) in r_low.iter().zip(conj.iter()) {
        demanded += r as u64;
        available += c as u64;
        if demanded > available {
            best = best.max(demanded - available);
        }
    }
    best
}

/// The exact number of phase-two steps: the gap between the fixed column
/// total and the row lower-bound total.
///
/// A negative gap means the caller's realizability precondition was violated.
pub fn compute_delta2(c: &DegreeVector, r_low: &DegreeVector) -> Result<u64, Error> {
    c.total().checked_sub(r_low.total()).ok_or(Error::PreconditionViolated(
        "column degree total is below the row lower-bound total",
    ))
}

/// Phase one: constructs column degrees `c` with `c_low <= c <= c_up` (up to
/// the recorded upper-bound permutation) such that `(r_low, r_up, c, c)` is
/// realizable. Requires a realizable instance.
pub fn phase_one(inst: &SortedInstance) -> Result<PhaseOneResult, Error> {
    phase_one_with_observer(inst, |_, _, _| {})
}

/// Same as [`phase_one`] but reporting the state after every step; used to
/// inspect intermediate states in tests and diagnostics.
pub fn phase_one_with_observer(
    inst: &SortedInstance,
    mut observer: impl FnMut(u64, &[usize], &[usize]),
) -> Result<PhaseOneResult, Error> {
    let delta1 = compute_delta1(inst.r_low(), inst.c_low());
    let mut c = inst.c_low().as_slice().to_vec();
    let mut c_up = inst.c_up().as_slice().to_vec();
    let (work, identity) = raise_vector(&mut c, &mut c_up, delta1, &mut observer)?;
    Ok(PhaseOneResult {
        c: c.into(),
        c_up_permuted: c_up.into(),
        identity,
        delta1,
        work,
    })
}

/// Phase two: the phase-one machinery with the parts swapped. Raises the row
/// degrees from `r_low` until their total matches `sum(c)`, yielding the row
/// half of a bi-graphical pair. Requires `(r_low, r_up, c, c)` realizable.
pub fn phase_two(
    r_low: &DegreeVector,
    r_up: &DegreeVector,
    c: &DegreeVector,
) -> Result<PhaseTwoResult, Error> {
    assert!(r_low.is_non_increasing());
    assert_eq!(r_low.len(), r_up.len());
    if r_low.iter().zip(r_up.iter()).any(|(&l, &u)| l > u) {
        return Err(Error::PreconditionViolated(
            "row lower bound exceeds its upper bound",
        ));
    }
    let delta2 = compute_delta2(c, r_low)?;
    let mut r = r_low.as_slice().to_vec();
    let mut r_up = r_up.as_slice().to_vec();
    let (work, identity) = raise_vector(&mut r, &mut r_up, delta2, &mut |_, _, _| {})?;
    Ok(PhaseTwoResult {
        r: r.into(),
        identity,
        delta2,
        work,
    })
}
