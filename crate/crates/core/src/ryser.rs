//! Ryser-style construction of a bipartite graph matching an exact
//! bi-graphical degree pair in `O(n1 + n2 + |E|)` time.
//!
//! Rows are processed in non-increasing degree order; each row is connected
//! to the columns that currently have the largest residual capacity. That
//! greedy choice keeps the remaining degree pair bi-graphical (the bipartite
//! Havel–Hakimi argument), so the construction never gets stuck.
//!
//! Picking the largest residuals in constant time per edge is the whole
//! trick. [`ResidualBuckets`] keeps the columns in a fixed array ordered by
//! initial capacity and maintains the boundaries of the runs of equal
//! residual value. Taking the top `k` residuals then means: consume whole
//! runs from the left, plus a partial take from the tail of one boundary
//! run. Because every column inside a run has the same residual, taking from
//! the run's tail costs no data movement at all; only run boundaries move,
//! and a decremented stretch merges with the neighboring run in O(1). The
//! column order inside the array never changes, which also makes the output
//! deterministic.

use crate::error::Error;
use crate::model::BipartiteGraph;
use crate::realizability::is_bigraphical;
use crate::vectors::DegreeVector;

/// Columns bucketed by residual capacity, stored as runs of equal value over
/// a statically ordered slot array.
#[derive(Debug, Clone)]
pub struct ResidualBuckets {
    /// Columns ordered by (residual descending, column index ascending) at
    /// construction time; never reordered afterwards.
    order: Vec<usize>,
    /// Current residual capacity per column.
    residual: Vec<usize>,
    /// First slot of the run holding each value; valid while present.
    run_start: Vec<usize>,
    /// Length of the run holding each value; valid while present.
    run_len: Vec<usize>,
    /// Fully-taken runs of the current assignment, reused across rows.
    scratch: Vec<(usize, usize, usize)>,
    ops: u64,
}

impl ResidualBuckets {
    /// Buckets the columns of `c` by value; `max_value` must bound every
    /// entry. Runs one counting pass, `O(len(c) + max_value)`.
    pub fn new(c: &[usize], max_value: usize) -> Self {
        let n = c.len();
        let mut counts = vec![0usize; max_value + 1];
        for &value in c {
            counts[value] += 1;
        }
        let mut run_start = vec![0usize; max_value + 1];
        let mut acc = 0;
        for value in (0..=max_value).rev() {
            run_start[value] = acc;
            acc += counts[value];
        }
        let mut order = vec![0usize; n];
        let mut next = run_start.clone();
        for (col, &value) in c.iter().enumerate() {
            order[next[value]] = col;
            next[value] += 1;
        }
        ResidualBuckets {
            order,
            residual: c.to_vec(),
            run_start,
            run_len: counts,
            scratch: Vec::new(),
            ops: n as u64,
        }
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    /// Hands the `need` columns of largest residual capacity to `take` and
    /// decrements their residuals. Amortized `O(1)` per column taken.
    pub fn take_largest(
        &mut self,
        need: usize,
        mut take: impl FnMut(usize),
    ) -> Result<(), Error> {
        if need == 0 {
            return Ok(());
        }
        let n = self.order.len();

        // Scan: whole runs from the left, then a partial take from one
        // boundary run.
        self.scratch.clear();
        let mut partial: Option<(usize, usize)> = None; // (value, how many)
        let mut slot = 0;
        let mut remaining = need;
        while remaining > 0 {
            if slot >= n {
                return Err(Error::PreconditionViolated(
                    "not enough columns with positive residual capacity",
                ));
            }
            let value = self.residual[self.order[slot]];
            if value == 0 {
                return Err(Error::PreconditionViolated(
                    "not enough columns with positive residual capacity",
                ));
            }
            debug_assert_eq!(self.run_start[value], slot);
            let len = self.run_len[value];
            self.ops += 1;
            if remaining >= len {
                self.scratch.push((value, slot, len));
                remaining -= len;
                slot += len;
            } else {
                partial = Some((value, remaining));
                remaining = 0;
            }
        }

        // Apply right to left, so that each relabeled run sees the final
        // residual of the slot just after it and can merge in O(1).
        if let Some((value, count)) = partial {
            let start = self.run_start[value];
            let len = self.run_len[value];
            let tail_start = start + len - count;
            for q in tail_start..start + len {
                let col = self.order[q];
                self.residual[col] = value - 1;
                take(col);
                self.ops += 1;
            }
            self.run_len[value] = len - count;
            self.relabel(tail_start, count, value - 1);
        }
        for idx in (0..self.scratch.len()).rev() {
            let (value, start, len) = self.scratch[idx];
            for q in start..start + len {
                let col = self.order[q];
                self.residual[col] = value - 1;
                take(col);
                self.ops += 1;
            }
            self.relabel(start, len, value - 1);
        }
        Ok(())
    }

    /// Declares `[start, start + len)` a run of `value`, merging with an
    /// existing run of the same value immediately to its right.
    fn relabel(&mut self, start: usize, len: usize, value: usize) {
        let next = start + len;
        if next < self.order.len() && self.residual[self.order[next]] == value {
            debug_assert_eq!(self.run_start[value], next);
            self.run_len[value] += len;
        } else {
            self.run_len[value] = len;
        }
        self.run_start[value] = start;
        self.ops += 1;
    }

    /// Slow reference check: run bookkeeping matches the residual array.
    /// Used by tests.
    pub fn runs_are_consistent(&self) -> bool {
        let n = self.order.len();
        let mut slot = 0;
        while slot < n {
            let value = self.residual[self.order[slot]];
            if self.run_start[value] != slot {
                return false;
            }
            let len = self.run_len[value];
            if len == 0 || slot + len > n {
                return false;
            }
            if !(slot..slot + len).all(|q| self.residual[self.order[q]] == value) {
                return false;
            }
            slot += len;
        }
        true
    }
}

/// Constructs a simple bipartite graph whose degrees are exactly `(r, c)`.
///
/// `r` must be non-increasing and `(r, c)` bi-graphical; both are checked up
/// front in `O(n1 + n2)`. The output is deterministic for a fixed input.
pub fn ryser_realize(r: &DegreeVector, c: &DegreeVector) -> Result<BipartiteGraph, Error> {
    ryser_realize_counted(r, c).map(|(graph, _)| graph)
}

/// [`ryser_realize`] plus the bucket-operation count, used by the scaling
/// diagnostics.
pub fn ryser_realize_counted(
    r: &DegreeVector,
    c: &DegreeVector,
) -> Result<(BipartiteGraph, u64), Error> {
    if !r.is_non_increasing() {
        return Err(Error::PreconditionViolated(
            "row degrees must be non-increasing",
        ));
    }
    if !is_bigraphical(r, c) {
        return Err(Error::NotBigraphical);
    }
    let n1 = r.len();
    let n2 = c.len();
    // bi-graphicality bounds every column degree by n1
    let mut buckets = ResidualBuckets::new(c.as_slice(), n1);
    let mut edges = Vec::with_capacity(c.total() as usize);
    for (row, &need) in r.iter().enumerate() {
        if need == 0 {
            break; // r is non-increasing
        }
        buckets.take_largest(need, |col| edges.push((row, col)))?;
    }
    let ops = buckets.ops();
    let graph = BipartiteGraph::from_edge_list(n1, n2, edges)?;
    debug_assert_eq!(graph.degrees(), (r.clone(), c.clone()));
    Ok((graph, ops))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(entries: &[usize]) -> DegreeVector {
        DegreeVector::new(entries.to_vec())
    }

    #[test]
    fn realizes_reference_pair() {
        let r = dv(&[4, 1, 1]);
        let c = dv(&[2, 2, 1, 1, 0]);
        let graph = ryser_realize(&r, &c).unwrap();
        assert_eq!(graph.edge_count(), 6);
        assert_eq!(graph.degrees(), (r, c));
    }

    #[test]
    fn realizes_trivial_pairs() {
        let graph = ryser_realize(&dv(&[0, 0]), &dv(&[0])).unwrap();
        assert_eq!(graph.edge_count(), 0);

        let graph = ryser_realize(&dv(&[2, 2]), &dv(&[2, 2])).unwrap();
        assert_eq!(graph, BipartiteGraph::complete(2, 2));
    }

    #[test]
    fn rejects_non_bigraphical_pairs() {
        assert_eq!(
            ryser_realize(&dv(&[2]), &dv(&[1, 0])).unwrap_err(),
            Error::NotBigraphical
        );
        assert!(matches!(
            ryser_realize(&dv(&[1, 2]), &dv(&[2, 1])).unwrap_err(),
            Error::PreconditionViolated(_)
        ));
    }

    #[test]
    fn output_is_deterministic() {
        let r = dv(&[3, 2, 2, 1]);
        let c = dv(&[3, 2, 2, 1, 0]);
        let a = ryser_realize(&r, &c).unwrap();
        let b = ryser_realize(&r, &c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn handles_unsorted_columns() {
        let r = dv(&[3, 1]);
        let c = dv(&[1, 2, 0, 1]);
        let graph = ryser_realize(&r, &c).unwrap();
        assert_eq!(graph.degrees(), (r, c));
    }

    #[test]
    fn equal_value_runs_stay_consistent() {
        // forces repeated partial takes inside runs of equal residual
        let c = vec![2, 2, 1];
        let mut buckets = ResidualBuckets::new(&c, 5);
        assert!(buckets.runs_are_consistent());
        for _ in 0..5 {
            buckets.take_largest(1, |_| {}).unwrap();
            assert!(buckets.runs_are_consistent());
        }
        assert!(buckets.take_largest(1, |_| {}).is_err());
    }

    #[test]
    fn bucket_operations_stay_linear() {
        let n = 512;
        let r = dv(&vec![4; n]);
        let c = dv(&vec![4; n]);
        let (graph, ops) = ryser_realize_counted(&r, &c).unwrap();
        let bound = 10 * (graph.n1() + graph.n2() + graph.edge_count()) as u64;
        assert!(ops <= bound, "ops {} exceeded {}", ops, bound);
    }

    #[test]
    fn exhaustive_small_pairs_match_their_degrees() {
        // all non-increasing r with entries <= 3, len <= 3, against all c
        fn non_increasing(len: usize, max: usize) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for _ in 0..len {
                out = out
                    .into_iter()
                    .flat_map(|prefix: Vec<usize>| {
                        let cap = prefix.last().copied().unwrap_or(max);
                        (0..=cap).map(move |next| {
                            let mut v = prefix.clone();
                            v.push(next);
                            v
                        })
                    })
                    .collect();
            }
            out
        }
        for n1 in 1..=3usize {
            for n2 in 1..=3usize {
                for r in non_increasing(n1, 3) {
                    for mask in 0..4u32.pow(n2 as u32) {
                        let mut c = Vec::with_capacity(n2);
                        let mut m = mask;
                        for _ in 0..n2 {
                            c.push((m % 4) as usize);
                            m /= 4;
                        }
                        let r = dv(&r);
                        let c = dv(&c);
                        if is_bigraphical(&r, &c) {
                            let graph = ryser_realize(&r, &c).unwrap();
                            assert_eq!(graph.degrees(), (r, c));
                        }
                    }
                }
            }
        }
    }
}
