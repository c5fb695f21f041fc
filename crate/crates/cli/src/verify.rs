use primatch_core::{priority_score, BipartiteGraph, Matching, PriorityScore};
use thiserror::Error;

use crate::format::MatchingFile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub pairs: usize,
    pub score: PriorityScore,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("line {line}: vertex {vertex} matched twice")]
    MatchedTwice { line: usize, vertex: usize },
    #[error("line {line}: {u} {v} is not an edge")]
    NotAnEdge { line: usize, u: usize, v: usize },
    #[error("score mismatch at digit {digit}: file has {claimed}, matching scores {actual}")]
    ScoreMismatch { digit: usize, claimed: usize, actual: usize },
    #[error("score line has {claimed} digits, instance has {expected} priority classes")]
    ScoreLength { claimed: usize, expected: usize },
}

/// Checks that the file's pairs form a matching of `g` and that its score
/// line equals the recomputed score.
pub fn verify_matching(g: &BipartiteGraph, file: &MatchingFile) -> Result<VerifyReport, VerifyError> {
    let mut used = vec![false; g.vertex_count() + 1];
    for &(u, v, line) in &file.pairs {
        if !g.has_edge(u, v) {
            return Err(VerifyError::NotAnEdge { line, u, v });
        }
        for vertex in [u, v] {
            if std::mem::replace(&mut used[vertex], true) {
                return Err(VerifyError::MatchedTwice { line, vertex });
            }
        }
    }
    let m = Matching::from_pairs(g, file.pairs.iter().map(|&(u, v, _)| (u, v))).expect("pairs checked above");
    let score = priority_score(g, &m).expect("matching built against g");
    let claimed = PriorityScore::new(file.score.clone());
    if let Some(digit) = score.first_difference(&claimed) {
        return Err(VerifyError::ScoreMismatch { digit, claimed: claimed.digit(digit), actual: score.digit(digit) });
    }
    if file.score.len() != score.digits().len() {
        return Err(VerifyError::ScoreLength { claimed: file.score.len(), expected: score.digits().len() });
    }
    Ok(VerifyReport { pairs: m.len(), score })
}
