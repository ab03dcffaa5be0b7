//! Top-level orchestration: validate, check realizability, fix the column
//! then the row degrees, construct the graph, and map everything back to the
//! caller's vertex order.

use crate::error::Error;
use crate::interval_solver::{phase_one, phase_two};
use crate::model::{
    complementary_instance, validate_and_clamp, validate_and_normalize, BipartiteGraph,
    IntervalInstance, RealizationReport, WorkCounters,
};
use crate::realizability::check_realizable;
use crate::ryser::ryser_realize_counted;
use crate::vectors::DegreeVector;

/// Constructs a realization with the fewest edges any realization of the
/// instance can have, namely `sum(c_low) + delta1`.
///
/// Fails with [`Error::InvalidInstance`] on malformed input and with
/// [`Error::NotRealizable`] (carrying the smallest violated dominance prefix,
/// in sorted vertex order) when no realization exists. The returned graph
/// and degree vectors use the caller's original vertex order; the hot path
/// itself runs on the sorted instance and vertices are relabeled exactly
/// once at the end, composing the normalization sort with the identity
/// exchanges the solver phases performed.
pub fn realize_edge_minimal(raw: &IntervalInstance) -> Result<RealizationReport, Error> {
    let sorted = validate_and_normalize(raw)?;
    check_realizable(&sorted).map_err(Error::NotRealizable)?;

    let columns = phase_one(&sorted)?;
    let rows = phase_two(sorted.r_low(), sorted.r_up(), &columns.c)?;
    let (sorted_graph, construction_ops) = ryser_realize_counted(&rows.r, &columns.c)?;

    // solver position -> original vertex
    let row_perm = sorted.row_perm();
    let col_perm = sorted.col_perm();
    let row_map: Vec<usize> = rows
        .identity
        .iter()
        .map(|&v| row_perm.to_original(v))
        .collect();
    let col_map: Vec<usize> = columns
        .identity
        .iter()
        .map(|&v| col_perm.to_original(v))
        .collect();

    let graph = if row_map.iter().enumerate().all(|(p, &v)| p == v)
        && col_map.iter().enumerate().all(|(p, &v)| p == v)
    {
        sorted_graph
    } else {
        let edges = sorted_graph
            .edges()
            .map(|(u, v)| (row_map[u], col_map[v]))
            .collect();
        BipartiteGraph::from_edge_list(raw.n1, raw.n2, edges)?
    };

    let compose = |map: &[usize], positional: &DegreeVector| {
        let mut out = vec![0usize; positional.len()];
        for (position, &vertex) in map.iter().enumerate() {
            out[vertex] = positional[position];
        }
        DegreeVector::new(out)
    };
    let final_r = compose(&row_map, &rows.r);
    let final_c = compose(&col_map, &columns.c);
    debug_assert_eq!(graph.degrees(), (final_r.clone(), final_c.clone()));

    Ok(RealizationReport {
        graph,
        delta1: columns.delta1,
        delta2: rows.delta2,
        final_r,
        final_c,
        work: WorkCounters {
            phase_one: columns.work,
            phase_two: rows.work,
            construction: construction_ops,
        },
    })
}

/// Constructs a realization with the most edges any realization of the
/// instance can have.
///
/// Works through complementation: an edge-minimal realization of the
/// complementary bounds, complemented within `U x V`, is edge-maximal for
/// the original bounds. Clamping happens before complementation so every
/// complementary bound is nonnegative. Errors are as in
/// [`realize_edge_minimal`]; a non-realizability certificate refers to the
/// complementary bounds (the two instances are realizable together).
/// The reported `delta1`/`delta2` and work counters come from the
/// complementary minimal run.
pub fn realize_edge_maximal(raw: &IntervalInstance) -> Result<RealizationReport, Error> {
    let clamped = validate_and_clamp(raw)?;
    let complementary = complementary_instance(&clamped);
    let minimal = realize_edge_minimal(&complementary)?;

    let graph = minimal.graph.complement();
    let flip = |degrees: &DegreeVector, opposite: usize| {
        DegreeVector::new(degrees.iter().map(|&d| opposite - d).collect())
    };
    let final_r = flip(&minimal.final_r, raw.n2);
    let final_c = flip(&minimal.final_c, raw.n1);
    debug_assert_eq!(graph.degrees(), (final_r.clone(), final_c.clone()));

    Ok(RealizationReport {
        graph,
        delta1: minimal.delta1,
        delta2: minimal.delta2,
        final_r,
        final_c,
        work: minimal.work,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::verify_realization;
    use crate::realizability::Side;

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

    #[test]
    fn minimal_realization_of_reference_instance() {
        let inst = reference_instance();
        let report = realize_edge_minimal(&inst).unwrap();
        assert_eq!(report.delta1, 2);
        assert_eq!(report.delta2, 1);
        assert_eq!(report.graph.edge_count(), 6);
        assert_eq!(report.final_r.as_slice(), &[4, 1, 1]);
        // the sorted column degrees are (2,2,1,1,0); the phase-one swaps
        // route the two raised degrees to columns 3 and 5
        assert_eq!(report.final_c.as_slice(), &[2, 2, 1, 0, 1]);
        assert!(verify_realization(&report.graph, &inst));
        // edge count identity: sum of column lower bounds plus delta1
        assert_eq!(report.graph.edge_count() as u64, 4 + report.delta1);
    }

    #[test]
    fn zero_lower_bounds_give_the_empty_graph() {
        let inst = IntervalInstance::new(2, 3, vec![0, 0], vec![2, 3], vec![0; 3], vec![2; 3]);
        let report = realize_edge_minimal(&inst).unwrap();
        assert_eq!(report.graph.edge_count(), 0);
        assert_eq!(report.delta1, 0);
        assert_eq!(report.delta2, 0);
    }

    #[test]
    fn infeasible_instance_yields_certificate() {
        let inst = IntervalInstance::new(1, 2, vec![2], vec![2], vec![0, 0], vec![1, 0]);
        match realize_edge_minimal(&inst).unwrap_err() {
            Error::NotRealizable(cert) => {
                assert_eq!(cert.side, Side::Row);
                assert_eq!(cert.prefix, 1);
            }
            other => panic!("expected a certificate, got {:?}", other),
        }
    }

    #[test]
    fn results_are_reported_in_original_order() {
        // same bounds as the reference instance, rows and columns shuffled
        let inst = IntervalInstance::new(
            3,
            5,
            vec![0, 4, 1],
            vec![3, 4, 2],
            vec![0, 2, 0, 2, 0],
            vec![2, 3, 1, 2, 2],
        );
        let report = realize_edge_minimal(&inst).unwrap();
        assert_eq!(report.graph.edge_count(), 6);
        assert!(verify_realization(&report.graph, &inst));
        assert_eq!(report.final_r.as_slice(), &[1, 4, 1]);
    }

    #[test]
    fn forced_complete_graph_is_maximal() {
        let inst = IntervalInstance::new(2, 2, vec![2, 2], vec![2, 2], vec![2, 2], vec![2, 2]);
        let report = realize_edge_maximal(&inst).unwrap();
        assert_eq!(report.graph, BipartiteGraph::complete(2, 2));
    }

    #[test]
    fn exact_intervals_fix_the_edge_count() {
        let inst = IntervalInstance::exact(vec![2, 1], vec![1, 1, 1]);
        let min = realize_edge_minimal(&inst).unwrap();
        let max = realize_edge_maximal(&inst).unwrap();
        assert_eq!(min.graph.edge_count(), max.graph.edge_count());
    }

    #[test]
    fn maximal_realization_of_reference_instance() {
        let inst = reference_instance();
        let report = realize_edge_maximal(&inst).unwrap();
        assert!(verify_realization(&report.graph, &inst));
        // duality against the complementary minimal run
        let clamped = validate_and_clamp(&inst).unwrap();
        let comp_min = realize_edge_minimal(&complementary_instance(&clamped)).unwrap();
        assert_eq!(
            report.graph.edge_count(),
            15 - comp_min.graph.edge_count()
        );
    }

    #[test]
    fn maximal_respects_original_order_after_shuffling() {
        let inst = IntervalInstance::new(
            3,
            5,
            vec![0, 4, 1],
            vec![3, 4, 2],
            vec![0, 2, 0, 2, 0],
            vec![2, 3, 1, 2, 2],
        );
        let report = realize_edge_maximal(&inst).unwrap();
        assert!(verify_realization(&report.graph, &inst));
    }

    #[test]
    fn empty_parts_are_fine() {
        let inst = IntervalInstance::new(0, 3, vec![], vec![], vec![0; 3], vec![0; 3]);
        let report = realize_edge_minimal(&inst).unwrap();
        assert_eq!(report.graph.edge_count(), 0);

        let bad = IntervalInstance::new(0, 3, vec![], vec![], vec![1, 0, 0], vec![1, 0, 0]);
        assert!(matches!(
            realize_edge_minimal(&bad),
            Err(Error::InvalidInstance(_))
        ));
    }
}
