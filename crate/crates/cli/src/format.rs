//! Line-oriented instance and matching files.
//!
//! Instance:
//!
//! ```text
//! c optional comment
//! p bpm <n1> <n2> <m>
//! v <id> <priority>      (optional, at most one per vertex)
//! e <u> <v>              (exactly m, u in 1..=n1, v in n1+1..=n1+n2)
//! ```
//!
//! Matching: `m <u> <v>` lines ascending by `u`, then `s <d1> ... <dP>`,
//! then optional `t <i> <flow1> <flow2> <digits...>` trace lines.

use std::collections::HashSet;
use std::fmt::Write as _;

use primatch_core::{BipartiteGraph, ClassStepTrace, GraphError, Matching, PriorityScore};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("expected `p bpm <n1> <n2> <m>` before any other line")]
    MissingProblem,
    #[error("second problem line")]
    DuplicateProblem,
    #[error("vertex {vertex} out of range 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("second priority line for vertex {0}")]
    DuplicatePriority(usize),
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("second score line")]
    DuplicateScore,
    #[error("missing score line")]
    MissingScore,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError { line, kind: kind.into() }
}

fn numbers<const N: usize>(line: usize, raw: &str, fields: &[&str]) -> Result<[usize; N], ParseError> {
    if fields.len() != N {
        return Err(err(line, ParseErrorKind::Malformed(raw.to_owned())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| err(line, ParseErrorKind::Malformed(raw.to_owned())))?;
    }
    Ok(out)
}

/// Parses an instance file. Vertices without a `v` line get priority
/// `n1 + n2`, the lowest.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut header: Option<(usize, [usize; 3])> = None;
    let mut priorities: Vec<Option<usize>> = Vec::new();
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else {
            continue;
        };
        if tag == "c" {
            continue;
        }
        let Some((_, [n1, n2, _])) = header else {
            if tag != "p" {
                return Err(err(line, ParseErrorKind::MissingProblem));
            }
            if rest.first() != Some(&"bpm") {
                return Err(err(line, ParseErrorKind::Malformed(raw.to_owned())));
            }
            let dims = numbers::<3>(line, raw, &rest[1..])?;
            priorities = vec![None; dims[0] + dims[1]];
            header = Some((line, dims));
            continue;
        };
        let n = n1 + n2;
        match tag {
            "p" => return Err(err(line, ParseErrorKind::DuplicateProblem)),
            "v" => {
                let [vertex, priority] = numbers::<2>(line, raw, rest)?;
                if vertex == 0 || vertex > n {
                    return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex, n }));
                }
                if priority == 0 || priority > n {
                    return Err(err(line, GraphError::PriorityOutOfRange { vertex, priority, n }));
                }
                if priorities[vertex - 1].replace(priority).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicatePriority(vertex)));
                }
            }
            "e" => {
                let [u, v] = numbers::<2>(line, raw, rest)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex: x, n }));
                    }
                }
                if u > n1 {
                    return Err(err(line, GraphError::NotInV1 { vertex: u, n1 }));
                }
                if v <= n1 {
                    return Err(err(line, GraphError::NotInV2 { vertex: v, first: n1 + 1, last: n }));
                }
                if !seen.insert((u, v)) {
                    return Err(err(line, GraphError::DuplicateEdge { u, v }));
                }
                edges.push((u, v));
            }
            _ => return Err(err(line, ParseErrorKind::Malformed(raw.to_owned()))),
        }
    }

    let Some((header_line, [n1, n2, m])) = header else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingProblem));
    };
    if edges.len() != m {
        return Err(err(header_line, ParseErrorKind::EdgeCount { expected: m, found: edges.len() }));
    }
    let lowest = n1 + n2;
    let priorities = priorities.into_iter().map(|p| p.unwrap_or(lowest)).collect();
    BipartiteGraph::new(n1, n2, edges, priorities).map_err(|e| err(header_line, e))
}

/// Instance text for `g` with every priority and edge listed explicitly.
/// `parse_graph(&write_instance(g, ..))` reproduces `g`.
pub fn write_instance(g: &BipartiteGraph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p bpm {} {} {}", g.n1(), g.n2(), g.edge_count());
    for v in g.vertices() {
        let _ = writeln!(out, "v {v} {}", g.priority(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// `m u v` lines ascending by `u`, then the score line.
pub fn serialize_matching(m: &Matching, score: &PriorityScore) -> String {
    let mut out = String::new();
    for (u, v) in m.pairs() {
        let _ = writeln!(out, "m {u} {v}");
    }
    out.push('s');
    for d in score.digits() {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
    out
}

/// One `t <i> <flow1> <flow2> <digits...>` line per class step.
pub fn format_trace(trace: &[ClassStepTrace]) -> String {
    let mut out = String::new();
    for step in trace {
        let _ = write!(out, "t {} {} {}", step.class, step.flow_v1, step.flow_v2);
        for d in step.score_after.digits() {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    out
}

/// Contents of a matching file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingFile {
    /// `(u, v, line)` per `m` line.
    pub pairs: Vec<(usize, usize, usize)>,
    pub score: Vec<usize>,
    pub score_line: usize,
}

pub fn parse_matching(text: &str) -> Result<MatchingFile, ParseError> {
    let mut pairs = Vec::new();
    let mut score: Option<(usize, Vec<usize>)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else {
            continue;
        };
        match tag {
            "c" | "t" => {}
            "m" => {
                let [u, v] = numbers::<2>(line, raw, rest)?;
                pairs.push((u, v, line));
            }
            "s" => {
                if score.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateScore));
                }
                let digits = rest
                    .iter()
                    .map(|f| f.parse().map_err(|_| err(line, ParseErrorKind::Malformed(raw.to_owned()))))
                    .collect::<Result<_, _>>()?;
                score = Some((line, digits));
            }
            _ => return Err(err(line, ParseErrorKind::Malformed(raw.to_owned()))),
        }
    }
    let (score_line, score) = score.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingScore))?;
    Ok(MatchingFile { pairs, score, score_line })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instance() {
        let g = parse_graph("p bpm 1 1 1\nv 1 1\nv 2 2\ne 1 2").unwrap();
        assert_eq!((g.n1(), g.n2()), (1, 1));
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!((g.priority(1), g.priority(2)), (1, 2));
    }

    #[test]
    fn default_priority_is_lowest() {
        let g = parse_graph("p bpm 2 2 3\ne 1 3\ne 2 3\ne 2 4").unwrap();
        assert!(g.vertices().all(|v| g.priority(v) == 4));
    }

    #[test]
    fn bipartition_violation() {
        let e = parse_graph("p bpm 1 1 1\ne 1 1").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.to_string(), "line 2: edge endpoint 1 not in V2 (V2 ids are 2..2)");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("c hi\ne 1 2\n", 2, "expected `p bpm"),
            ("p bpm 1 1 1\np bpm 1 1 1\n", 2, "second problem line"),
            ("p bpm 1 1 1\nv 3 1\ne 1 2\n", 2, "vertex 3 out of range"),
            ("p bpm 1 1 1\nv 1 3\ne 1 2\n", 2, "priority 3"),
            ("p bpm 1 1 1\nv 1 1\nv 1 2\ne 1 2\n", 3, "second priority line"),
            ("p bpm 1 1 2\ne 1 2\ne 1 2\n", 3, "duplicate edge 1 2"),
            ("p bpm 1 1 2\ne 1 2\n", 1, "expected 2 edge lines, found 1"),
            ("p bpm 1 1 1\ne 1 x\n", 2, "malformed"),
            ("p bpm 1 1 1\nq\n", 2, "malformed"),
            ("p bpm 2 1 1\ne 3 3\n", 2, "not in V1"),
            ("", 1, "expected `p bpm"),
        ];
        for (text, line, needle) in cases {
            let e = parse_graph(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.to_string().contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn matching_output() {
        let g = parse_graph("p bpm 1 1 1\nv 1 1\nv 2 2\ne 1 2\n").unwrap();
        let m = Matching::from_pairs(&g, [(1, 2)]).unwrap();
        assert_eq!(serialize_matching(&m, &PriorityScore::new(vec![1, 1])), "m 1 2\ns 1 1\n");
        assert_eq!(serialize_matching(&Matching::empty(&g), &PriorityScore::zero(2)), "s 0 0\n");

        let g = parse_graph("p bpm 2 2 2\ne 2 3\ne 1 4\n").unwrap();
        let m = Matching::from_pairs(&g, [(2, 3), (1, 4)]).unwrap();
        let text = serialize_matching(&m, &primatch_core::priority_score(&g, &m).unwrap());
        assert_eq!(text, "m 1 4\nm 2 3\ns 0 0 0 4\n");
    }

    #[test]
    fn matching_file_roundtrip() {
        let mf = parse_matching("m 1 4\nm 2 3\ns 0 0 0 4\nt 4 0 0 0 0 0 4\n").unwrap();
        assert_eq!(mf.pairs, vec![(1, 4, 1), (2, 3, 2)]);
        assert_eq!(mf.score, vec![0, 0, 0, 4]);
        assert_eq!(mf.score_line, 3);
        assert_eq!(parse_matching("m 1 2\n").unwrap_err().kind, ParseErrorKind::MissingScore);
        assert_eq!(parse_matching("s 1\ns 1\n").unwrap_err().kind, ParseErrorKind::DuplicateScore);
    }
}
