//! Maximum priority matchings in bipartite graphs.
//!
//! Every vertex carries an integer priority (1 is the most important). A
//! matching's priority score counts matched vertices per priority class, and
//! scores compare lexicographically with class 1 as the most significant
//! digit. [`max_priority_matching`] finds a matching with the largest score
//! in `O(k m sqrt(n))` time for `k` non-empty priority classes: a
//! Hopcroft-Karp maximum matching is refined class by class, each class
//! solving two unit-capacity max-flow problems with Dinic's algorithm.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, instance
//! generation and the command line live in the `primatch` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod flow;
pub mod graph;
pub mod hk;
pub mod matching;
pub mod oracle;
pub mod priority;
pub mod score;

pub use flow::{is_unit_graph, max_flow, ArcId, FlowError, FlowNetwork, FlowStats};
pub use graph::{BipartiteGraph, GraphError, Side, Vertex};
pub use hk::maximum_matching;
pub use oracle::{oracle_max_flow, oracle_max_matching_size, oracle_priority_matching, OracleError};
pub use matching::{Matching, MatchingError};
pub use priority::{
    build_x1, build_x2, extract_m2, extract_m3, max_priority_matching,
    max_priority_matching_checked, ClassStepTrace, PhaseNetwork, Solution, SolveError,
};
pub use score::{compare_scores, priority_score, PriorityScore};
