//! Bipartite graphs with per-vertex priorities.
//!
//! Vertices share one flat id space: `1..=n1` is V1 and `n1+1..=n1+n2` is V2.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

/// A vertex id in `1..=n1+n2`.
pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    V1,
    V2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge endpoint {vertex} not in V1 (V1 ids are 1..{n1})")]
    NotInV1 { vertex: usize, n1: usize },
    #[error("edge endpoint {vertex} not in V2 (V2 ids are {first}..{last})")]
    NotInV2 { vertex: usize, first: usize, last: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("priority {priority} of vertex {vertex} outside 1..{n}")]
    PriorityOutOfRange { vertex: usize, priority: usize, n: usize },
    #[error("expected {expected} priorities, got {got}")]
    PriorityCount { expected: usize, got: usize },
}

/// An undirected bipartite graph with vertex priorities.
///
/// Edges are kept sorted by `(u, v)` with `u` in V1. Adjacency of each V1
/// vertex is the matching slice of that sorted list, so neighbor scans run in
/// ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n1: usize,
    n2: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// `offsets[u - 1]..offsets[u]` indexes the edges leaving V1 vertex `u`.
    offsets: Vec<usize>,
    /// Indexed by vertex id; slot 0 unused.
    priority: Vec<usize>,
    max_priority: usize,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list and a priority per vertex
    /// (`priorities[v - 1]` is the priority of `v`).
    pub fn new(
        n1: usize,
        n2: usize,
        mut edges: Vec<(Vertex, Vertex)>,
        priorities: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let n = n1 + n2;
        if priorities.len() != n {
            return Err(GraphError::PriorityCount { expected: n, got: priorities.len() });
        }
        for (idx, &p) in priorities.iter().enumerate() {
            if p == 0 || p > n {
                return Err(GraphError::PriorityOutOfRange { vertex: idx + 1, priority: p, n });
            }
        }
        for &(u, v) in &edges {
            check_edge(n1, n2, u, v)?;
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }

        let mut offsets = vec![0usize; n1 + 1];
        for &(u, _) in &edges {
            offsets[u] += 1;
        }
        for u in 1..=n1 {
            offsets[u] += offsets[u - 1];
        }

        let max_priority = priorities.iter().copied().max().unwrap_or(0);
        let mut priority = Vec::with_capacity(n + 1);
        priority.push(0);
        priority.extend(priorities);

        Ok(Self { n1, n2, edges, offsets, priority, max_priority })
    }

    /// Same as [`new`](Self::new) but every vertex gets priority 1.
    pub fn uniform(n1: usize, n2: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        Self::new(n1, n2, edges, vec![1; n1 + n2])
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Total vertex count `n1 + n2`.
    pub fn vertex_count(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending by `(u, v)`, `u` in V1.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        1..=self.vertex_count()
    }

    pub fn v1(&self) -> core::ops::RangeInclusive<Vertex> {
        1..=self.n1
    }

    pub fn v2(&self) -> core::ops::RangeInclusive<Vertex> {
        self.n1 + 1..=self.n1 + self.n2
    }

    pub fn side(&self, v: Vertex) -> Side {
        debug_assert!(v >= 1 && v <= self.vertex_count());
        if v <= self.n1 {
            Side::V1
        } else {
            Side::V2
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.vertex_count()
    }

    pub fn priority(&self, v: Vertex) -> usize {
        self.priority[v]
    }

    /// Largest priority value present, 0 for an empty vertex set.
    pub fn max_priority(&self) -> usize {
        self.max_priority
    }

    /// Distinct priority values that occur, ascending.
    pub fn classes(&self) -> Vec<usize> {
        let mut present = vec![false; self.max_priority + 1];
        for v in self.vertices() {
            present[self.priority[v]] = true;
        }
        (1..=self.max_priority).filter(|&p| present[p]).collect()
    }

    /// Number of vertices with priority `p`.
    pub fn class_size(&self, p: usize) -> usize {
        self.vertices().filter(|&v| self.priority[v] == p).count()
    }

    /// Edge indices (into [`edges`](Self::edges)) leaving V1 vertex `u`.
    pub fn edge_range(&self, u: Vertex) -> core::ops::Range<usize> {
        self.offsets[u - 1]..self.offsets[u]
    }

    /// V2 neighbors of V1 vertex `u`, ascending.
    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges[self.edge_range(u)].iter().map(|&(_, v)| v)
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.edge_range(u).len()
    }

    /// Index of edge `{u, v}` in the sorted edge list. Endpoints may be given
    /// in either order.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let (u, v) = if a <= self.n1 { (a, b) } else { (b, a) };
        if !self.contains(u) || !self.contains(v) || u > self.n1 || v <= self.n1 {
            return None;
        }
        let range = self.edge_range(u);
        let start = range.start;
        self.edges[range].binary_search(&(u, v)).ok().map(|i| start + i)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_index(a, b).is_some()
    }
}

fn check_edge(n1: usize, n2: usize, u: usize, v: usize) -> Result<(), GraphError> {
    let n = n1 + n2;
    for x in [u, v] {
        if x == 0 || x > n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    if u > n1 {
        return Err(GraphError::NotInV1 { vertex: u, n1 });
    }
    if v <= n1 {
        return Err(GraphError::NotInV2 { vertex: v, first: n1 + 1, last: n });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_sorted_and_adjacency() {
        let g = BipartiteGraph::uniform(2, 2, vec![(2, 4), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 3), (2, 4)]);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edge_index(4, 2), Some(2));
        assert!(!g.has_edge(1, 4));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            BipartiteGraph::uniform(1, 1, vec![(1, 1)]),
            Err(GraphError::NotInV2 { vertex: 1, first: 2, last: 2 })
        );
        assert_eq!(
            BipartiteGraph::uniform(1, 1, vec![(1, 2), (1, 2)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 2 })
        );
        assert_eq!(
            BipartiteGraph::uniform(1, 1, vec![(1, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert!(matches!(
            BipartiteGraph::new(1, 1, vec![], vec![1, 3]),
            Err(GraphError::PriorityOutOfRange { vertex: 2, priority: 3, n: 2 })
        ));
    }

    #[test]
    fn classes_skip_empty() {
        let g = BipartiteGraph::new(2, 2, vec![], vec![4, 1, 4, 2]).unwrap();
        assert_eq!(g.classes(), vec![1, 2, 4]);
        assert_eq!(g.max_priority(), 4);
        assert_eq!(g.class_size(4), 2);
        assert_eq!(g.side(3), Side::V2);
    }
}
