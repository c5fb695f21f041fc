use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex {0} matched twice")]
    MatchedTwice(Vertex),
    #[error("pair {0} {1} is not an edge of the graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("matching covers {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
}

/// A set of vertex-disjoint edges, stored as a symmetric partner table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    n1: usize,
    /// Indexed by vertex id, 0 = unmatched. Slot 0 unused.
    mate: Vec<Vertex>,
    len: usize,
}

impl Matching {
    pub fn empty(g: &BipartiteGraph) -> Self {
        Self { n1: g.n1(), mate: vec![0; g.vertex_count() + 1], len: 0 }
    }

    /// Builds a matching from pairs, each given in either endpoint order.
    pub fn from_pairs<I>(g: &BipartiteGraph, pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut m = Self::empty(g);
        for (a, b) in pairs {
            if !g.has_edge(a, b) {
                return Err(MatchingError::NotAnEdge(a, b));
            }
            for x in [a, b] {
                if m.mate[x] != 0 {
                    return Err(MatchingError::MatchedTwice(x));
                }
            }
            m.mate[a] = b;
            m.mate[b] = a;
            m.len += 1;
        }
        Ok(m)
    }

    /// Wraps a raw partner table (slot 0 unused, 0 = unmatched) without
    /// validating it against a graph.
    pub(crate) fn from_mates(n1: usize, mate: Vec<Vertex>) -> Self {
        let len = (1..=n1).filter(|&u| mate[u] != 0).count();
        Self { n1, mate, len }
    }

    /// Checks this is a matching of `g`: right size, symmetric, every pair an edge.
    pub fn validate(&self, g: &BipartiteGraph) -> Result<(), MatchingError> {
        let n = g.vertex_count();
        if self.mate.len() != n + 1 || self.n1 != g.n1() {
            return Err(MatchingError::SizeMismatch { expected: n, got: self.mate.len().saturating_sub(1) });
        }
        for v in 1..=n {
            let w = self.mate[v];
            if w == 0 {
                continue;
            }
            if w > n || self.mate[w] != v {
                return Err(MatchingError::MatchedTwice(w.min(n)));
            }
            if !g.has_edge(v, w) {
                return Err(MatchingError::NotAnEdge(v, w));
            }
        }
        Ok(())
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        match self.mate[v] {
            0 => None,
            w => Some(w),
        }
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate[v] != 0
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.mate[u] == v && v != 0
    }

    /// Pairs `(u, v)` with `u` in V1, ascending by `u`.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n1).filter_map(move |u| self.partner(u).map(|v| (u, v)))
    }

    /// Vertices covered by the matching, ascending.
    pub fn matched_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..self.mate.len()).filter(move |&v| self.mate[v] != 0)
    }

    pub(crate) fn mates(&self) -> &[Vertex] {
        &self.mate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> BipartiteGraph {
        // a1=1, a2=2, b1=3, b2=4; a1-b1, a2-b1, a2-b2
        BipartiteGraph::uniform(2, 2, vec![(1, 3), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn partner_is_symmetric() {
        let g = path();
        let m = Matching::from_pairs(&g, [(4, 2), (1, 3)]).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.partner(2), Some(4));
        assert_eq!(m.partner(4), Some(2));
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(1, 3), (2, 4)]);
        m.validate(&g).unwrap();
    }

    #[test]
    fn rejects_shared_vertex_and_non_edges() {
        let g = path();
        assert_eq!(Matching::from_pairs(&g, [(1, 3), (2, 3)]), Err(MatchingError::MatchedTwice(3)));
        assert_eq!(Matching::from_pairs(&g, [(1, 4)]), Err(MatchingError::NotAnEdge(1, 4)));
    }

    #[test]
    fn from_mates_counts_pairs() {
        let g = path();
        let m = Matching::from_mates(2, vec![0, 0, 4, 0, 2]);
        assert_eq!(m.len(), 1);
        m.validate(&g).unwrap();
        assert_eq!(m.matched_vertices().collect::<Vec<_>>(), vec![2, 4]);
    }
}
