//! Construction of bipartite graphs whose vertex degrees lie in prescribed
//! per-vertex intervals.
//!
//! Given lower and upper degree bounds for every vertex of both parts, the
//! library decides whether a simple bipartite graph within those bounds
//! exists (the Fulkerson–Schocker dominance conditions) and, if so, builds
//! an edge-minimal or edge-maximal realization in `O(n1 + n2 + |E|)` time:
//!
//! 1. normalize the instance (validate, clamp upper bounds, sort both sides
//!    by lower bound);
//! 2. fix an exact column-degree vector, then an exact row-degree vector,
//!    each by a linear sweep of single increments
//!    ([`interval_solver`]);
//! 3. realize the resulting bi-graphical pair with a bucket-based
//!    Ryser-style construction ([`ryser`]);
//! 4. relabel vertices back to the caller's order.
//!
//! The edge-minimal realization has exactly `sum(c_low) + delta1` edges;
//! the edge-maximal variant is obtained by realizing the complementary
//! bounds and complementing the result. A max-flow oracle and an exhaustive
//! enumerator ([`oracles`]) provide independent cross-checks.
//!
//! ```
//! use bigraph_realize::{realize_edge_minimal, IntervalInstance};
//!
//! let inst = IntervalInstance::new(
//!     3,
//!     5,
//!     vec![4, 1, 0],
//!     vec![4, 2, 3],
//!     vec![2, 2, 0, 0, 0],
//!     vec![2, 3, 1, 2, 2],
//! );
//! let report = realize_edge_minimal(&inst).unwrap();
//! assert_eq!(report.graph.edge_count(), 6);
//! ```

pub mod error;
pub mod interval_solver;
pub mod model;
pub mod oracles;
pub mod planted;
pub mod realizability;
pub mod realizer;
pub mod ryser;
pub mod vectors;

pub use error::Error;
pub use model::{
    complementary_instance, validate_and_clamp, validate_and_normalize, verify_realization,
    BipartiteGraph, IntervalInstance, RealizationReport, SortedInstance, WorkCounters,
};
pub use realizability::{check_realizable, is_bigraphical, is_realizable, Certificate, Side};
pub use realizer::{realize_edge_maximal, realize_edge_minimal};
pub use ryser::ryser_realize;
pub use vectors::{dominates, sort_pairs_descending, DegreeVector, PartialSums, SortPermutation};
