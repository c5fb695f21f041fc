//! Maximum priority matching, one priority class at a time.
//!
//! Starting from a maximum-cardinality matching, each non-empty class `i`
//! (ascending) runs two unit-capacity flow problems:
//!
//! * X1 routes flow from unmatched V1 vertices of priority `i` to matched V1
//!   vertices of priority `> i` along alternating paths. Flipping the flow
//!   paths gives M2.
//! * X2 does the same on the V2 side, routing from matched V2 vertices of
//!   priority `> i` to unmatched V2 vertices of priority `i`, giving M3.
//!
//! Both phases flip only even-length alternating paths, so the matching size
//! never changes and no vertex of priority `<= i` loses its partner.
//!
//! Network layout: vertex `v` is node `v`, the source is `n + 1` and the sink
//! `n + 2` (node 0 is unused). Edge arcs come first in sorted edge order, so
//! arc `k` belongs to edge `k`; then source arcs, then sink arcs, each in
//! ascending vertex order.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::flow::{is_unit_graph, max_flow, ArcId, FlowError, FlowNetwork};
use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::hk::maximum_matching;
use crate::matching::{Matching, MatchingError};
use crate::score::{score_unchecked, PriorityScore};

/// Flow network for one phase of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseNetwork {
    pub net: FlowNetwork,
    /// V1 for X1, V2 for X2.
    pub side: Side,
    pub class: usize,
}

impl PhaseNetwork {
    /// Arc carrying edge `k` of the graph's sorted edge list.
    pub fn edge_arc(&self, k: usize) -> ArcId {
        ArcId(k)
    }
}

/// What one class step did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStepTrace {
    pub class: usize,
    pub flow_v1: usize,
    pub flow_v2: usize,
    pub phases_v1: usize,
    pub phases_v2: usize,
    pub score_before: PriorityScore,
    pub score_after: PriorityScore,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub matching: Matching,
    pub score: PriorityScore,
    pub trace: Vec<ClassStepTrace>,
    /// Size of the initial Hopcroft-Karp matching.
    pub initial_size: usize,
    /// Dinic phases summed over every solve.
    pub flow_phases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error("class {class}: {side:?} network is not a unit graph")]
    NotUnitGraph { class: usize, side: Side },
    #[error("class {class}: vertex {vertex} (priority {priority}) lost its partner in the {side:?} phase")]
    LostPartner { class: usize, vertex: Vertex, priority: usize, side: Side },
    #[error("class {class}: matching size changed from {before} to {after}")]
    SizeChanged { class: usize, before: usize, after: usize },
    #[error("class {class}: {side:?} phase changed the matched status of vertex {vertex} on the other side")]
    OtherSideTouched { class: usize, vertex: Vertex, side: Side },
    #[error("class {class}: {side:?} flow {flow} but {gained} vertices of the class became matched")]
    FlowGainMismatch { class: usize, side: Side, flow: usize, gained: usize },
    #[error("class {class}: digit {digit} changed after its class was processed")]
    FrozenDigitChanged { class: usize, digit: usize },
}

/// Builds X1 for class `i` against matching `m1`.
pub fn build_x1(g: &BipartiteGraph, m1: &Matching, i: usize) -> Result<PhaseNetwork, MatchingError> {
    m1.validate(g)?;
    Ok(build_phase(g, m1, i, Side::V1))
}

/// Builds X2 for class `i` against matching `m2`.
pub fn build_x2(g: &BipartiteGraph, m2: &Matching, i: usize) -> Result<PhaseNetwork, MatchingError> {
    m2.validate(g)?;
    Ok(build_phase(g, m2, i, Side::V2))
}

fn build_phase(g: &BipartiteGraph, m: &Matching, class: usize, side: Side) -> PhaseNetwork {
    let n = g.vertex_count();
    let (s, t) = (n + 1, n + 2);
    let mut net = FlowNetwork::with_capacity(n + 3, s, t, g.edge_count() + n);
    let mates = m.mates();
    for &(u, v) in g.edges() {
        if mates[u] == v {
            net.add_arc(v, u);
        } else {
            net.add_arc(u, v);
        }
    }
    let frontier = match side {
        Side::V1 => g.v1(),
        Side::V2 => g.v2(),
    };
    // X1: s -> unmatched class-i, matched lower-priority -> t.
    // X2: s -> matched lower-priority, unmatched class-i -> t.
    let wants_in = |v: Vertex| mates[v] == 0 && g.priority(v) == class;
    let can_give = |v: Vertex| mates[v] != 0 && g.priority(v) > class;
    let (from_source, to_sink): (&dyn Fn(Vertex) -> bool, &dyn Fn(Vertex) -> bool) = match side {
        Side::V1 => (&wants_in, &can_give),
        Side::V2 => (&can_give, &wants_in),
    };
    for v in frontier.clone().filter(|&v| from_source(v)) {
        net.add_arc(s, v);
    }
    for v in frontier.filter(|&v| to_sink(v)) {
        net.add_arc(v, t);
    }
    PhaseNetwork { net, side, class }
}

/// Reads M2 off a solved X1: unmatched edges carrying flow join the
/// matching, matched edges carrying flow leave it.
pub fn extract_m2(g: &BipartiteGraph, m1: &Matching, x1: &PhaseNetwork) -> Result<Matching, SolveError> {
    extract(g, m1, x1)
}

/// Reads M3 off a solved X2; same rule as [`extract_m2`].
pub fn extract_m3(g: &BipartiteGraph, m2: &Matching, x2: &PhaseNetwork) -> Result<Matching, SolveError> {
    extract(g, m2, x2)
}

fn extract(g: &BipartiteGraph, m: &Matching, x: &PhaseNetwork) -> Result<Matching, SolveError> {
    x.net.check_conservation()?;
    let mates = m.mates();
    let mut next = vec![0; g.vertex_count() + 1];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let matched = mates[u] == v;
        let carries = x.net.flow(x.edge_arc(k)) == 1;
        if matched != carries {
            for w in [u, v] {
                if next[w] != 0 {
                    return Err(MatchingError::MatchedTwice(w).into());
                }
            }
            next[u] = v;
            next[v] = u;
        }
    }
    Ok(Matching::from_mates(g.n1(), next))
}

/// Maximum priority matching of `g`.
pub fn max_priority_matching(g: &BipartiteGraph) -> Solution {
    solve(g, false).expect("internally built networks are valid")
}

/// Like [`max_priority_matching`], additionally verifying after every phase
/// that the network is a unit graph, the matching keeps its size, the other
/// side is untouched, no vertex of priority `<= i` loses its partner, and
/// processed digits stay frozen.
pub fn max_priority_matching_checked(g: &BipartiteGraph) -> Result<Solution, SolveError> {
    solve(g, true)
}

fn solve(g: &BipartiteGraph, checked: bool) -> Result<Solution, SolveError> {
    let mut m = maximum_matching(g);
    let initial_size = m.len();
    if checked {
        m.validate(g)?;
    }
    let mut trace = Vec::new();
    let mut flow_phases = 0;

    for class in g.classes() {
        let score_before = score_unchecked(g, &m);

        let mut x1 = build_phase(g, &m, class, Side::V1);
        let f1 = max_flow(&mut x1.net)?;
        let m2 = extract(g, &m, &x1)?;

        let mut x2 = build_phase(g, &m2, class, Side::V2);
        let f2 = max_flow(&mut x2.net)?;
        let m3 = extract(g, &m2, &x2)?;

        if checked {
            check_phase(g, &m, &m2, &x1, f1.value)?;
            check_phase(g, &m2, &m3, &x2, f2.value)?;
            // Preservation is measured against M1 for both phases.
            check_preserved(g, &m, &m3, class, Side::V2)?;
        }

        let score_after = score_unchecked(g, &m3);
        if checked {
            for digit in 1..class {
                if score_after.digit(digit) != score_before.digit(digit) {
                    return Err(SolveError::FrozenDigitChanged { class, digit });
                }
            }
        }
        log::debug!("class {class}: flows {} / {}, score {score_after}", f1.value, f2.value);
        flow_phases += f1.phases + f2.phases;
        trace.push(ClassStepTrace {
            class,
            flow_v1: f1.value,
            flow_v2: f2.value,
            phases_v1: f1.phases,
            phases_v2: f2.phases,
            score_before,
            score_after,
        });
        m = m3;
    }

    let score = score_unchecked(g, &m);
    Ok(Solution { matching: m, score, trace, initial_size, flow_phases })
}

fn check_phase(
    g: &BipartiteGraph,
    before: &Matching,
    after: &Matching,
    x: &PhaseNetwork,
    flow: usize,
) -> Result<(), SolveError> {
    let (class, side) = (x.class, x.side);
    if !is_unit_graph(&x.net) {
        return Err(SolveError::NotUnitGraph { class, side });
    }
    after.validate(g)?;
    if after.len() != before.len() {
        return Err(SolveError::SizeChanged { class, before: before.len(), after: after.len() });
    }
    let (this_side, other_side) = match side {
        Side::V1 => (g.v1(), g.v2()),
        Side::V2 => (g.v2(), g.v1()),
    };
    if let Some(vertex) = other_side.into_iter().find(|&v| before.is_matched(v) != after.is_matched(v)) {
        return Err(SolveError::OtherSideTouched { class, vertex, side });
    }
    let gained = this_side
        .filter(|&v| g.priority(v) == class && !before.is_matched(v) && after.is_matched(v))
        .count();
    if gained != flow {
        return Err(SolveError::FlowGainMismatch { class, side, flow, gained });
    }
    check_preserved(g, before, after, class, side)
}

fn check_preserved(
    g: &BipartiteGraph,
    before: &Matching,
    after: &Matching,
    class: usize,
    side: Side,
) -> Result<(), SolveError> {
    match g
        .vertices()
        .find(|&v| g.priority(v) <= class && before.is_matched(v) && !after.is_matched(v))
    {
        Some(vertex) => Err(SolveError::LostPartner { class, vertex, priority: g.priority(vertex), side }),
        None => Ok(()),
    }
}
