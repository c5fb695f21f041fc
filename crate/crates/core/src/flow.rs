//! Dinic's maximum flow on unit-capacity networks.
//!
//! Every arc has capacity 1, so a flow is one bit per arc. Each arc `a` owns
//! two residual half-arcs: `2a` (forward, residual `1 - f(a)`) and `2a + 1`
//! (reverse, residual `f(a)`).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("{which} node {node} out of range 0..{nodes}")]
    EndpointOutOfRange { which: &'static str, node: usize, nodes: usize },
    #[error("source and sink are both node {0}")]
    SourceIsSink(usize),
    #[error("flow not conserved at node {node}: in {inflow}, out {outflow}")]
    NotConserved { node: usize, inflow: usize, outflow: usize },
}

/// Directed network with unit capacities and a 0/1 flow on every arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    tails: Vec<usize>,
    heads: Vec<usize>,
    flow: Vec<bool>,
}

/// Outcome of a [`max_flow`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FlowStats {
    /// Units of flow from source to sink.
    pub value: usize,
    /// Blocking-flow phases that reached the sink.
    pub phases: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        Self { nodes, source, sink, tails: Vec::new(), heads: Vec::new(), flow: Vec::new() }
    }

    pub fn with_capacity(nodes: usize, source: usize, sink: usize, arcs: usize) -> Self {
        Self {
            nodes,
            source,
            sink,
            tails: Vec::with_capacity(arcs),
            heads: Vec::with_capacity(arcs),
            flow: Vec::with_capacity(arcs),
        }
    }

    /// Adds a capacity-1 arc carrying no flow.
    ///
    /// Panics if either endpoint is not a node of the network.
    pub fn add_arc(&mut self, from: usize, to: usize) -> ArcId {
        assert!(from < self.nodes && to < self.nodes, "arc {from}->{to} outside 0..{}", self.nodes);
        self.tails.push(from);
        self.heads.push(to);
        self.flow.push(false);
        ArcId(self.heads.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arc(&self, a: ArcId) -> (usize, usize) {
        (self.tails[a.0], self.heads[a.0])
    }

    /// All arcs in insertion order.
    pub fn arcs(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.tails.iter().copied().zip(self.heads.iter().copied())
    }

    pub fn capacity(&self, _a: ArcId) -> usize {
        1
    }

    pub fn flow(&self, a: ArcId) -> usize {
        usize::from(self.flow[a.0])
    }

    pub fn set_flow(&mut self, a: ArcId, units: bool) {
        self.flow[a.0] = units;
    }

    pub fn clear_flow(&mut self) {
        self.flow.iter_mut().for_each(|f| *f = false);
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes];
        self.heads.iter().for_each(|&h| deg[h] += 1);
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes];
        self.tails.iter().for_each(|&t| deg[t] += 1);
        deg
    }

    /// Verifies conservation at every node but source and sink and returns
    /// the net outflow of the source.
    pub fn check_conservation(&self) -> Result<usize, FlowError> {
        let mut inflow = vec![0usize; self.nodes];
        let mut outflow = vec![0usize; self.nodes];
        for a in 0..self.arc_count() {
            if self.flow[a] {
                outflow[self.tails[a]] += 1;
                inflow[self.heads[a]] += 1;
            }
        }
        for node in 0..self.nodes {
            if node != self.source && node != self.sink && inflow[node] != outflow[node] {
                return Err(FlowError::NotConserved { node, inflow: inflow[node], outflow: outflow[node] });
            }
        }
        Ok(outflow[self.source].saturating_sub(inflow[self.source]))
    }

    fn validate_terminals(&self) -> Result<(), FlowError> {
        for (which, node) in [("source", self.source), ("sink", self.sink)] {
            if node >= self.nodes {
                return Err(FlowError::EndpointOutOfRange { which, node, nodes: self.nodes });
            }
        }
        if self.source == self.sink {
            return Err(FlowError::SourceIsSink(self.source));
        }
        Ok(())
    }

    fn half_head(&self, h: usize) -> usize {
        if h & 1 == 0 {
            self.heads[h >> 1]
        } else {
            self.tails[h >> 1]
        }
    }

    fn half_tail(&self, h: usize) -> usize {
        self.half_head(h ^ 1)
    }

    fn residual(&self, h: usize) -> bool {
        self.flow[h >> 1] == (h & 1 == 1)
    }

    fn push(&mut self, h: usize) {
        self.flow[h >> 1] = h & 1 == 0;
    }
}

/// True iff every node other than source and sink has in-degree at most 1
/// or out-degree at most 1.
pub fn is_unit_graph(net: &FlowNetwork) -> bool {
    let indeg = net.in_degrees();
    let outdeg = net.out_degrees();
    (0..net.node_count())
        .filter(|&v| v != net.source() && v != net.sink())
        .all(|v| indeg[v] <= 1 || outdeg[v] <= 1)
}

const UNLEVELED: usize = usize::MAX;

/// Raises the network's current flow to a maximum one with Dinic's algorithm.
///
/// Half-arcs leave each node in arc insertion order, so the resulting flow is
/// a deterministic function of the network.
pub fn max_flow(net: &mut FlowNetwork) -> Result<FlowStats, FlowError> {
    net.validate_terminals()?;
    let (s, t) = (net.source, net.sink);

    // CSR adjacency over residual half-arcs.
    let mut start = vec![0usize; net.nodes + 1];
    for a in 0..net.arc_count() {
        start[net.tails[a] + 1] += 1;
        start[net.heads[a] + 1] += 1;
    }
    for v in 0..net.nodes {
        start[v + 1] += start[v];
    }
    let mut fill = start.clone();
    let mut adj = vec![0usize; 2 * net.arc_count()];
    for a in 0..net.arc_count() {
        adj[fill[net.tails[a]]] = 2 * a;
        fill[net.tails[a]] += 1;
        adj[fill[net.heads[a]]] = 2 * a + 1;
        fill[net.heads[a]] += 1;
    }

    let mut level = vec![UNLEVELED; net.nodes];
    let mut cur = vec![0usize; net.nodes];
    let mut queue = VecDeque::new();
    let mut path: Vec<usize> = Vec::new();
    let mut phases = 0;

    loop {
        // Level assignment in the residual graph.
        level.iter_mut().for_each(|l| *l = UNLEVELED);
        level[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                continue;
            }
            for &h in &adj[start[u]..start[u + 1]] {
                let w = net.half_head(h);
                if level[w] == UNLEVELED && net.residual(h) {
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if level[t] == UNLEVELED {
            break;
        }
        phases += 1;

        // Blocking flow by advance / retreat.
        cur.copy_from_slice(&start[..net.nodes]);
        path.clear();
        loop {
            let u = path.last().map_or(s, |&h| net.half_head(h));
            if u == t {
                for &h in &path {
                    net.push(h);
                }
                path.clear();
                continue;
            }
            let end = start[u + 1];
            let mut next = None;
            while cur[u] < end {
                let h = adj[cur[u]];
                let w = net.half_head(h);
                if net.residual(h) && level[w] != UNLEVELED && level[w] == level[u] + 1 {
                    next = Some(h);
                    break;
                }
                cur[u] += 1;
            }
            match next {
                Some(h) => path.push(h),
                None if u == s => break,
                None => {
                    level[u] = UNLEVELED;
                    let h = path.pop().expect("retreat below source");
                    cur[net.half_tail(h)] += 1;
                }
            }
        }
    }

    let value = net.check_conservation()?;
    let bound = 2 * ceil_sqrt(net.arc_count()) + 2;
    if phases > bound {
        log::warn!("dinic used {phases} phases on {} arcs (unit-graph bound {bound})", net.arc_count());
    } else {
        log::trace!("dinic: value {value}, {phases} phases, {} arcs", net.arc_count());
    }
    Ok(FlowStats { value, phases })
}

/// Smallest `r` with `r * r >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut r = 0usize;
    while r * r < n {
        r += 1;
    }
    r
}
