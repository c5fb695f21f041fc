//! Slow reference implementations used to check the real solvers.
//!
//! Exhaustive matching enumeration (include/exclude over the sorted edge
//! list) and single-path breadth-first augmentation for max flow. Nothing
//! here shares code with [`crate::hk`], [`crate::flow`] or
//! [`crate::priority`].

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{BipartiteGraph, Vertex};
use crate::matching::Matching;
use crate::score::{compare_scores, PriorityScore};

pub const MAX_ORACLE_VERTICES: usize = 24;
pub const MAX_ORACLE_NODES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {got} vertices, oracle limit is {limit}")]
    TooManyVertices { got: usize, limit: usize },
    #[error("network has {got} nodes, oracle limit is {limit}")]
    TooManyNodes { got: usize, limit: usize },
    #[error("source or sink out of range")]
    BadTerminals,
}

fn check_size(g: &BipartiteGraph) -> Result<(), OracleError> {
    if g.vertex_count() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooManyVertices { got: g.vertex_count(), limit: MAX_ORACLE_VERTICES });
    }
    Ok(())
}

/// Calls `visit` once per matching of `g` with the chosen pairs.
pub fn for_each_matching<F>(g: &BipartiteGraph, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[(Vertex, Vertex)]),
{
    check_size(g)?;
    let mut used = vec![false; g.vertex_count() + 1];
    let mut chosen = Vec::new();
    enumerate(g.edges(), 0, &mut used, &mut chosen, &mut visit);
    Ok(())
}

fn enumerate<F>(
    edges: &[(Vertex, Vertex)],
    k: usize,
    used: &mut [bool],
    chosen: &mut Vec<(Vertex, Vertex)>,
    visit: &mut F,
) where
    F: FnMut(&[(Vertex, Vertex)]),
{
    if k == edges.len() {
        visit(chosen);
        return;
    }
    let (u, v) = edges[k];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        enumerate(edges, k + 1, used, chosen, visit);
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    enumerate(edges, k + 1, used, chosen, visit);
}

/// A matching with lexicographically largest priority score, found by trying
/// every matching. Ties keep the first one enumerated.
pub fn oracle_priority_matching(g: &BipartiteGraph) -> Result<(Matching, PriorityScore), OracleError> {
    let mut best_pairs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut best = PriorityScore::zero(g.max_priority());
    let mut digits = vec![0usize; g.max_priority()];
    for_each_matching(g, |pairs| {
        digits.iter_mut().for_each(|d| *d = 0);
        for &(u, v) in pairs {
            digits[g.priority(u) - 1] += 1;
            digits[g.priority(v) - 1] += 1;
        }
        let score = PriorityScore::new(digits.clone());
        if compare_scores(&score, &best) == Ordering::Greater {
            best = score;
            best_pairs = pairs.to_vec();
        }
    })?;
    let m = Matching::from_pairs(g, best_pairs).expect("enumerated pairs form a matching");
    Ok((m, best))
}

/// Largest matching cardinality, by enumeration.
pub fn oracle_max_matching_size(g: &BipartiteGraph) -> Result<usize, OracleError> {
    let mut best = 0;
    for_each_matching(g, |pairs| best = best.max(pairs.len()))?;
    Ok(best)
}

/// Max flow value by repeated shortest augmenting paths on a capacity matrix.
/// Ignores any flow already on the network.
pub fn oracle_max_flow(net: &FlowNetwork) -> Result<usize, OracleError> {
    let n = net.node_count();
    if n > MAX_ORACLE_NODES {
        return Err(OracleError::TooManyNodes { got: n, limit: MAX_ORACLE_NODES });
    }
    let (s, t) = (net.source(), net.sink());
    if s >= n || t >= n || s == t {
        return Err(OracleError::BadTerminals);
    }
    let mut cap = vec![vec![0i64; n]; n];
    for (a, b) in net.arcs() {
        cap[a][b] += 1;
    }
    let mut value = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return Ok(value);
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        value += 1;
    }
}
