//! Hopcroft-Karp maximum-cardinality matching.
//!
//! Each phase layers V1 from all free V1 vertices along alternating edges,
//! then extracts a maximal set of vertex-disjoint shortest augmenting paths by
//! depth-first search. `O(sqrt(n))` phases, `O(m)` each.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BipartiteGraph, Vertex};
use crate::matching::Matching;

const UNREACHED: usize = usize::MAX;

/// Maximum-cardinality matching of `g`. Neighbors are scanned in ascending
/// id order, so the result is a deterministic function of the graph.
pub fn maximum_matching(g: &BipartiteGraph) -> Matching {
    let mut search = Search::new(g);
    while search.layer() {
        search.augment_all();
    }
    Matching::from_mates(g.n1(), search.mate)
}

/// Number of layering phases that found at least one augmenting path.
pub fn phase_count(g: &BipartiteGraph) -> usize {
    let mut search = Search::new(g);
    let mut phases = 0;
    while search.layer() {
        search.augment_all();
        phases += 1;
    }
    phases
}

struct Search<'g> {
    g: &'g BipartiteGraph,
    mate: Vec<Vertex>,
    /// BFS layer of each V1 vertex, indexed by id.
    dist: Vec<usize>,
    /// Layer at which a free V2 vertex is reached.
    limit: usize,
    queue: VecDeque<Vertex>,
}

impl<'g> Search<'g> {
    fn new(g: &'g BipartiteGraph) -> Self {
        Self {
            g,
            mate: vec![0; g.vertex_count() + 1],
            dist: vec![UNREACHED; g.n1() + 1],
            limit: UNREACHED,
            queue: VecDeque::new(),
        }
    }

    /// Returns true if some free V1 vertex reaches a free V2 vertex.
    fn layer(&mut self) -> bool {
        self.queue.clear();
        for u in self.g.v1() {
            if self.mate[u] == 0 {
                self.dist[u] = 0;
                self.queue.push_back(u);
            } else {
                self.dist[u] = UNREACHED;
            }
        }
        self.limit = UNREACHED;
        while let Some(u) = self.queue.pop_front() {
            if self.dist[u] >= self.limit {
                continue;
            }
            for v in self.g.neighbors(u) {
                match self.mate[v] {
                    0 => {
                        if self.limit == UNREACHED {
                            self.limit = self.dist[u];
                        }
                    }
                    w if self.dist[w] == UNREACHED => {
                        self.dist[w] = self.dist[u] + 1;
                        self.queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        self.limit != UNREACHED
    }

    fn augment_all(&mut self) {
        let g = self.g;
        // next[u]: position in u's edge range still to be scanned this phase.
        let mut next: Vec<usize> = (0..=g.n1()).map(|u| if u == 0 { 0 } else { g.edge_range(u).start }).collect();
        // (V1 vertex, V2 vertex taken from it)
        let mut path: Vec<(Vertex, Vertex)> = Vec::new();

        for root in g.v1() {
            if self.mate[root] != 0 || self.dist[root] != 0 {
                continue;
            }
            path.clear();
            let mut u = root;
            loop {
                let end = g.edge_range(u).end;
                let mut advanced = false;
                while next[u] < end {
                    let v = g.edges()[next[u]].1;
                    next[u] += 1;
                    let w = self.mate[v];
                    if w == 0 {
                        if self.dist[u] == self.limit {
                            path.push((u, v));
                            self.flip(&path);
                            path.clear();
                            break;
                        }
                    } else if self.dist[w] == self.dist[u] + 1 {
                        path.push((u, v));
                        u = w;
                        advanced = true;
                        break;
                    }
                }
                if path.is_empty() && !advanced {
                    // Augmented from root, or root is exhausted.
                    if self.mate[root] == 0 {
                        self.dist[root] = UNREACHED;
                    }
                    break;
                }
                if !advanced {
                    // Dead end: u leaves the layered graph for this phase.
                    self.dist[u] = UNREACHED;
                    let (parent, _) = path.pop().expect("non-root dead end has a parent");
                    u = parent;
                }
            }
        }
    }

    /// Flips `path` and retires its V1 vertices for the rest of the phase,
    /// keeping the phase's paths vertex-disjoint.
    fn flip(&mut self, path: &[(Vertex, Vertex)]) {
        for &(u, v) in path {
            self.mate[u] = v;
            self.mate[v] = u;
            self.dist[u] = UNREACHED;
        }
    }
}
