//! Problem instances, validation and normalization, and the bipartite-graph
//! data model.
//!
//! An [`IntervalInstance`] is raw input: per-vertex degree intervals for both
//! parts, exactly as parsed from a file or built by a caller. Nothing about
//! it is trusted. [`validate_and_normalize`] is the single gate that turns it
//! into a [`SortedInstance`]: entries checked nonnegative, intervals checked
//! non-inverted, upper bounds clamped to the opposite part size, and both
//! `(low, up)` pair sequences sorted so the lower bounds are non-increasing,
//! with the permutations retained to map results back.

use crate::error::Error;
use crate::vectors::{sort_pairs_descending, DegreeVector, SortPermutation};

/// Degree-interval bounds for both parts of a bipartite graph, in the
/// caller's original vertex order. Entries are signed so that malformed input
/// (negative bounds) can be represented and rejected during validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalInstance {
    /// Size of part U (rows).
    pub n1: usize,
    /// Size of part V (columns).
    pub n2: usize,
    pub r_low: Vec<i64>,
    pub r_up: Vec<i64>,
    pub c_low: Vec<i64>,
    pub c_up: Vec<i64>,
}

impl IntervalInstance {
    pub fn new(
        n1: usize,
        n2: usize,
        r_low: Vec<i64>,
        r_up: Vec<i64>,
        c_low: Vec<i64>,
        c_up: Vec<i64>,
    ) -> Self {
        IntervalInstance {
            n1,
            n2,
            r_low,
            r_up,
            c_low,
            c_up,
        }
    }

    /// Instance whose intervals pin the degrees exactly to `(r, c)`.
    pub fn exact(r: Vec<i64>, c: Vec<i64>) -> Self {
        IntervalInstance {
            n1: r.len(),
            n2: c.len(),
            r_low: r.clone(),
            r_up: r,
            c_low: c.clone(),
            c_up: c,
        }
    }
}

fn check_vector(name: &str, entries: &[i64], expected_len: usize) -> Result<(), Error> {
    if entries.len() != expected_len {
        return Err(Error::InvalidInstance(format!(
            "{} has {} entries but the declared part size is {}",
            name,
            entries.len(),
            expected_len
        )));
    }
    for (i, &e) in entries.iter().enumerate() {
        if e < 0 {
            return Err(Error::InvalidInstance(format!(
                "{}[{}] = {} is negative",
                name,
                i + 1,
                e
            )));
        }
    }
    Ok(())
}

fn check_and_clamp_side(
    low_name: &str,
    up_name: &str,
    low: &[i64],
    up: &[i64],
    opposite_size: usize,
) -> Result<Vec<i64>, Error> {
    let mut clamped = Vec::with_capacity(up.len());
    for (i, (&l, &u)) in low.iter().zip(up.iter()).enumerate() {
        if l > u {
            return Err(Error::InvalidInstance(format!(
                "inverted interval at position {}: {} = {} > {} = {}",
                i + 1,
                low_name,
                l,
                up_name,
                u
            )));
        }
        let u = u.min(opposite_size as i64);
        if l > u {
            return Err(Error::InvalidInstance(format!(
                "{}[{}] = {} exceeds the opposite part size {}",
                low_name,
                i + 1,
                l,
                opposite_size
            )));
        }
        clamped.push(u);
    }
    Ok(clamped)
}

/// Validates an instance and clamps its upper bounds to the opposite part
/// size, keeping the original vertex order.
///
/// A simple-graph degree can never exceed the opposite part size, so clamping
/// preserves the realization set exactly. Rejected: vector lengths that
/// disagree with `n1`/`n2`, negative entries, and intervals that are inverted
/// either as given or after clamping (a lower bound above the opposite part
/// size can never be met).
pub fn validate_and_clamp(raw: &IntervalInstance) -> Result<IntervalInstance, Error> {
    check_vector("r_low", &raw.r_low, raw.n1)?;
    check_vector("r_up", &raw.r_up, raw.n1)?;
    check_vector("c_low", &raw.c_low, raw.n2)?;
    check_vector("c_up", &raw.c_up, raw.n2)?;
    let r_up = check_and_clamp_side("r_low", "r_up", &raw.r_low, &raw.r_up, raw.n2)?;
    let c_up = check_and_clamp_side("c_low", "c_up", &raw.c_low, &raw.c_up, raw.n1)?;
    Ok(IntervalInstance {
        n1: raw.n1,
        n2: raw.n2,
        r_low: raw.r_low.clone(),
        r_up,
        c_low: raw.c_low.clone(),
        c_up,
    })
}

/// A validated instance with clamped upper bounds and both sides sorted so
/// the lower-bound vectors are non-increasing. The permutations map sorted
/// indices back to the caller's original order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedInstance {
    n1: usize,
    n2: usize,
    r_low: DegreeVector,
    r_up: DegreeVector,
    c_low: DegreeVector,
    c_up: DegreeVector,
    row_perm: SortPermutation,
    col_perm: SortPermutation,
}

impl SortedInstance {
    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn r_low(&self) -> &DegreeVector {
        &self.r_low
    }

    pub fn r_up(&self) -> &DegreeVector {
        &self.r_up
    }

    pub fn c_low(&self) -> &DegreeVector {
        &self.c_low
    }

    pub fn c_up(&self) -> &DegreeVector {
        &self.c_up
    }

    pub fn row_perm(&self) -> &SortPermutation {
        &self.row_perm
    }

    pub fn col_perm(&self) -> &SortPermutation {
        &self.col_perm
    }

    /// Builds a sorted instance directly from vectors that are already in
    /// sorted order (both lower-bound vectors non-increasing, uppers within
    /// the opposite part size). The permutations are identities.
    pub fn from_sorted_vectors(
        r_low: DegreeVector,
        r_up: DegreeVector,
        c_low: DegreeVector,
        c_up: DegreeVector,
    ) -> Result<Self, Error> {
        if r_low.len() != r_up.len() || c_low.len() != c_up.len() {
            return Err(Error::InvalidInstance(
                "paired bound vectors must have equal lengths".to_string(),
            ));
        }
        if !r_low.is_non_increasing() || !c_low.is_non_increasing() {
            return Err(Error::InvalidInstance(
                "lower-bound vectors must be non-increasing".to_string(),
            ));
        }
        let (n1, n2) = (r_low.len(), c_low.len());
        for (side, low, up, opposite) in [
            ("r", &r_low, &r_up, n2),
            ("c", &c_low, &c_up, n1),
        ] {
            for i in 0..low.len() {
                if low[i] > up[i] || up[i] > opposite {
                    return Err(Error::InvalidInstance(format!(
                        "{}-interval at position {} is out of range",
                        side,
                        i + 1
                    )));
                }
            }
        }
        Ok(SortedInstance {
            n1,
            n2,
            r_low,
            r_up,
            c_low,
            c_up,
            row_perm: SortPermutation::identity(n1),
            col_perm: SortPermutation::identity(n2),
        })
    }
}

/// The validation gate: checks the raw instance, clamps upper bounds to the
/// opposite part size, and sorts both `(low, up)` pair sequences descending
/// by lower bound.
pub fn validate_and_normalize(raw: &IntervalInstance) -> Result<SortedInstance, Error> {
    let clamped = validate_and_clamp(raw)?;
    let to_unsigned = |v: &[i64]| DegreeVector::new(v.iter().map(|&e| e as usize).collect());
    let (r_low, r_up, row_perm) = sort_pairs_descending(
        &to_unsigned(&clamped.r_low),
        &to_unsigned(&clamped.r_up),
    );
    let (c_low, c_up, col_perm) = sort_pairs_descending(
        &to_unsigned(&clamped.c_low),
        &to_unsigned(&clamped.c_up),
    );
    Ok(SortedInstance {
        n1: clamped.n1,
        n2: clamped.n2,
        r_low,
        r_up,
        c_low,
        c_up,
        row_perm,
        col_perm,
    })
}

/// The interval bounds of the complement graph: every bound is the opposite
/// part size minus the mirrored original bound.
///
/// Expects a clamped instance (upper bounds at most the opposite part size)
/// so that all complementary entries come out nonnegative; a graph realizes
/// the original bounds iff its complement within `U x V` realizes these.
pub fn complementary_instance(inst: &IntervalInstance) -> IntervalInstance {
    debug_assert!(inst.r_up.iter().all(|&u| u <= inst.n2 as i64));
    debug_assert!(inst.c_up.iter().all(|&u| u <= inst.n1 as i64));
    let flip = |bounds: &[i64], opposite: usize| -> Vec<i64> {
        bounds.iter().map(|&b| opposite as i64 - b).collect()
    };
    IntervalInstance {
        n1: inst.n1,
        n2: inst.n2,
        r_low: flip(&inst.r_up, inst.n2),
        r_up: flip(&inst.r_low, inst.n2),
        c_low: flip(&inst.c_up, inst.n1),
        c_up: flip(&inst.c_low, inst.n1),
    }
}

/// Simple bipartite graph over parts U (rows, size `n1`) and V (columns,
/// size `n2`), stored as sorted adjacency lists per row vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n1: usize,
    n2: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn empty(n1: usize, n2: usize) -> Self {
        BipartiteGraph {
            n1,
            n2,
            adjacency: vec![Vec::new(); n1],
            edge_count: 0,
        }
    }

    pub fn complete(n1: usize, n2: usize) -> Self {
        BipartiteGraph {
            n1,
            n2,
            adjacency: vec![(0..n2).collect(); n1],
            edge_count: n1 * n2,
        }
    }

    /// Builds a graph from 0-based `(u, v)` pairs in any order, in
    /// `O(n1 + n2 + edges)` time. Rejects out-of-range endpoints and
    /// duplicate edges.
    pub fn from_edge_list(
        n1: usize,
        n2: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, Error> {
        let mut rows_per_col: Vec<Vec<usize>> = vec![Vec::new(); n2];
        let edge_count = edges.len();
        for (u, v) in edges {
            if u >= n1 || v >= n2 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) is outside a {} x {} graph",
                    u + 1,
                    v + 1,
                    n1,
                    n2
                )));
            }
            rows_per_col[v].push(u);
        }
        // Distributing by column first and then appending column indices in
        // ascending column order leaves every adjacency list sorted.
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n1];
        for (v, rows) in rows_per_col.iter().enumerate() {
            for &u in rows {
                adjacency[u].push(v);
            }
        }
        for (u, list) in adjacency.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate edge ({}, {})",
                        u + 1,
                        w[0] + 1
                    )));
                }
            }
        }
        Ok(BipartiteGraph {
            n1,
            n2,
            adjacency,
            edge_count,
        })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of row vertex `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Degree vectors of both parts; their totals both equal `edge_count`.
    pub fn degrees(&self) -> (DegreeVector, DegreeVector) {
        let row = self.adjacency.iter().map(Vec::len).collect();
        let mut col = vec![0usize; self.n2];
        for list in &self.adjacency {
            for &v in list {
                col[v] += 1;
            }
        }
        (DegreeVector::new(row), DegreeVector::new(col))
    }

    /// The complement within `U x V`: an edge is present exactly when it is
    /// absent here.
    pub fn complement(&self) -> BipartiteGraph {
        let mut adjacency = Vec::with_capacity(self.n1);
        for list in &self.adjacency {
            let mut complement_list = Vec::with_capacity(self.n2 - list.len());
            let mut present = list.iter().peekable();
            for v in 0..self.n2 {
                if present.peek() == Some(&&v) {
                    present.next();
                } else {
                    complement_list.push(v);
                }
            }
            adjacency.push(complement_list);
        }
        BipartiteGraph {
            n1: self.n1,
            n2: self.n2,
            edge_count: self.n1 * self.n2 - self.edge_count,
            adjacency,
        }
    }
}

/// True iff every vertex degree of `graph` lies within the instance's
/// interval for that vertex, compared in original index order.
pub fn verify_realization(graph: &BipartiteGraph, inst: &IntervalInstance) -> bool {
    assert_eq!(graph.n1(), inst.n1, "part U size mismatch");
    assert_eq!(graph.n2(), inst.n2, "part V size mismatch");
    let (row, col) = graph.degrees();
    let within = |deg: &DegreeVector, low: &[i64], up: &[i64]| {
        deg.iter()
            .zip(low.iter().zip(up.iter()))
            .all(|(&d, (&l, &u))| l <= d as i64 && d as i64 <= u)
    };
    within(&row, &inst.r_low, &inst.r_up) && within(&col, &inst.c_low, &inst.c_up)
}

/// Per-stage operation counts of one realization run; evidence that the
/// amount of work stays proportional to `n1 + n2 + |E|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WorkCounters {
    pub phase_one: u64,
    pub phase_two: u64,
    pub construction: u64,
}

impl WorkCounters {
    pub fn total(&self) -> u64 {
        self.phase_one + self.phase_two + self.construction
    }
}

/// A constructed realization plus diagnostics. Degrees and vertex indices are
/// in the caller's original order.
#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub graph: BipartiteGraph,
    /// Outer iterations spent fixing the column degrees.
    pub delta1: u64,
    /// Outer iterations spent fixing the row degrees.
    pub delta2: u64,
    pub final_r: DegreeVector,
    pub final_c: DegreeVector,
    pub work: WorkCounters,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_instance() -> IntervalInstance {
        IntervalInstance::new(
            3,
            5,
            vec![4, 1, 0],
            vec![4, 2, 3],
            vec![2, 2, 0, 0, 0],
            vec![2, 3, 1, 2, 2],
        )
    }

    /// A 3 x 5 graph with degree pair (4,1,1) / (2,2,1,1,0).
    fn reference_graph() -> BipartiteGraph {
        BipartiteGraph::from_edge_list(
            3,
            5,
            vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (2, 1)],
        )
        .unwrap()
    }

    #[test]
    fn normalize_keeps_already_sorted_instance() {
        let sorted = validate_and_normalize(&reference_instance()).unwrap();
        assert_eq!(sorted.r_low().as_slice(), &[4, 1, 0]);
        assert_eq!(sorted.r_up().as_slice(), &[4, 2, 3]);
        assert_eq!(sorted.c_low().as_slice(), &[2, 2, 0, 0, 0]);
        assert_eq!(sorted.c_up().as_slice(), &[2, 3, 1, 2, 2]);
        assert!(sorted.row_perm().is_identity());
        assert!(sorted.col_perm().is_identity());
    }

    #[test]
    fn normalize_clamps_upper_bounds() {
        let raw = IntervalInstance::new(1, 2, vec![0], vec![99], vec![0, 0], vec![1, 1]);
        let sorted = validate_and_normalize(&raw).unwrap();
        assert_eq!(sorted.r_up().as_slice(), &[2]);
    }

    #[test]
    fn normalize_rejects_inverted_interval() {
        let raw = IntervalInstance::new(1, 3, vec![3], vec![2], vec![0; 3], vec![1; 3]);
        assert!(matches!(
            validate_and_normalize(&raw),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn normalize_rejects_negative_entries() {
        let raw = IntervalInstance::new(1, 1, vec![-1], vec![1], vec![0], vec![1]);
        let err = validate_and_normalize(&raw).unwrap_err();
        assert!(matches!(err, Error::InvalidInstance(ref m) if m.contains("negative")));
    }

    #[test]
    fn normalize_rejects_lower_bound_above_opposite_size() {
        let raw = IntervalInstance::new(1, 2, vec![3], vec![5], vec![0, 0], vec![1, 1]);
        assert!(matches!(
            validate_and_normalize(&raw),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn normalize_rejects_length_mismatch() {
        let raw = IntervalInstance::new(2, 1, vec![0], vec![1], vec![0], vec![1]);
        assert!(matches!(
            validate_and_normalize(&raw),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn normalize_sorts_pairs_and_restores() {
        let raw = IntervalInstance::new(
            3,
            2,
            vec![0, 2, 1],
            vec![1, 2, 2],
            vec![1, 0],
            vec![2, 3],
        );
        let sorted = validate_and_normalize(&raw).unwrap();
        assert_eq!(sorted.r_low().as_slice(), &[2, 1, 0]);
        assert_eq!(sorted.r_up().as_slice(), &[2, 2, 1]);
        assert_eq!(
            sorted.row_perm().restore_order(sorted.r_low().as_slice()),
            &[0, 2, 1]
        );
        assert_eq!(
            sorted.row_perm().restore_order(sorted.r_up().as_slice()),
            &[1, 2, 2]
        );
        // column side already sorted; uppers stay within n1 = 3
        assert!(sorted.col_perm().is_identity());
        assert_eq!(sorted.c_up().as_slice(), &[2, 3]);
    }

    #[test]
    fn degrees_of_reference_graph() {
        let (r, c) = reference_graph().degrees();
        assert_eq!(r.as_slice(), &[4, 1, 1]);
        assert_eq!(c.as_slice(), &[2, 2, 1, 1, 0]);
    }

    #[test]
    fn degrees_of_empty_and_complete_graphs() {
        let (r, c) = BipartiteGraph::empty(2, 3).degrees();
        assert_eq!(r.as_slice(), &[0, 0]);
        assert_eq!(c.as_slice(), &[0, 0, 0]);

        let (r, c) = BipartiteGraph::complete(2, 2).degrees();
        assert_eq!(r.as_slice(), &[2, 2]);
        assert_eq!(c.as_slice(), &[2, 2]);
    }

    #[test]
    fn degree_totals_equal_edge_count() {
        let g = reference_graph();
        let (r, c) = g.degrees();
        assert_eq!(r.total(), g.edge_count() as u64);
        assert_eq!(c.total(), g.edge_count() as u64);
    }

    #[test]
    fn verify_realization_on_reference_instance() {
        let inst = reference_instance();
        assert!(verify_realization(&reference_graph(), &inst));
        assert!(!verify_realization(&BipartiteGraph::empty(3, 5), &inst));
        // complete graph: column 1 reaches degree 3 > upper bound 2
        assert!(!verify_realization(&BipartiteGraph::complete(3, 5), &inst));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            BipartiteGraph::empty(2, 2).complement(),
            BipartiteGraph::complete(2, 2)
        );
        let g = reference_graph();
        assert_eq!(g.complement().edge_count(), 15 - 6);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complementary_instance_reference_values() {
        let clamped = validate_and_clamp(&reference_instance()).unwrap();
        let comp = complementary_instance(&clamped);
        assert_eq!(comp.r_low, vec![1, 3, 2]);
        assert_eq!(comp.r_up, vec![1, 4, 5]);
        assert_eq!(comp.c_low, vec![1, 0, 2, 1, 1]);
        assert_eq!(comp.c_up, vec![1, 1, 3, 3, 3]);
        assert_eq!(complementary_instance(&comp), clamped);
    }

    #[test]
    fn complementary_instance_all_zero_one_by_one() {
        let inst = IntervalInstance::new(1, 1, vec![0], vec![0], vec![0], vec![0]);
        let comp = complementary_instance(&inst);
        assert_eq!(comp.r_low, vec![1]);
        assert_eq!(comp.r_up, vec![1]);
        assert_eq!(comp.c_low, vec![1]);
        assert_eq!(comp.c_up, vec![1]);
    }

    #[test]
    fn from_edge_list_rejects_duplicates_and_range() {
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, vec![(0, 0), (0, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, vec![(2, 0)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = BipartiteGraph::from_edge_list(2, 3, vec![(1, 2), (0, 1), (1, 0), (0, 2)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 0), (1, 2)]);
    }
}
