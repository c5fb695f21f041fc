#![allow(dead_code)]

use primatch_core::{BipartiteGraph, FlowNetwork};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random bipartite graph: each of the `n1 * n2` edges kept with probability
/// `density`, priorities uniform in `1..=k`.
pub fn random_graph(rng: &mut ChaCha8Rng, n1: usize, n2: usize, density: f64, k: usize) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 1..=n1 {
        for v in n1 + 1..=n1 + n2 {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let priorities = (0..n1 + n2).map(|_| rng.random_range(1..=k)).collect();
    BipartiteGraph::new(n1, n2, edges, priorities).unwrap()
}

/// Small graph with sizes and density drawn from `rng`.
pub fn small_graph(rng: &mut ChaCha8Rng, max_side: usize, max_k: usize) -> BipartiteGraph {
    let n1 = rng.random_range(1..=max_side);
    let n2 = rng.random_range(1..=max_side);
    let density = rng.random_range(0.0..=1.0);
    let k = rng.random_range(1..=max_k.min(n1 + n2));
    random_graph(rng, n1, n2, density, k)
}

/// Random unit-capacity digraph, source 0, sink `nodes - 1`.
pub fn random_network(rng: &mut ChaCha8Rng, nodes: usize, arcs: usize) -> FlowNetwork {
    let mut net = FlowNetwork::new(nodes, 0, nodes - 1);
    for _ in 0..arcs {
        let a = rng.random_range(0..nodes);
        let b = rng.random_range(0..nodes);
        if a != b {
            net.add_arc(a, b);
        }
    }
    net
}

/// True if the residual graph of `net` has an s-t path.
pub fn residual_path_exists(net: &FlowNetwork) -> bool {
    let n = net.node_count();
    let mut seen = vec![false; n];
    let mut stack = vec![net.source()];
    seen[net.source()] = true;
    let arcs: Vec<_> = net.arcs().enumerate().collect();
    while let Some(x) = stack.pop() {
        for &(a, (from, to)) in &arcs {
            let f = net.flow(primatch_core::ArcId(a));
            let step = if from == x && f == 0 {
                Some(to)
            } else if to == x && f == 1 {
                Some(from)
            } else {
                None
            };
            if let Some(y) = step {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen[net.sink()]
}
