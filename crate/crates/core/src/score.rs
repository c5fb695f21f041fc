//! Priority scores.
//!
//! Digit `i` (1-based) counts matched vertices of priority `i`; digit 1 is the
//! most significant.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::graph::BipartiteGraph;
use crate::matching::{Matching, MatchingError};

/// Dense digit vector over priority classes `1..=P`.
///
/// Equality and ordering read missing trailing digits as zero, so `[1]` and
/// `[1, 0]` are equal. Use [`digits`](Self::digits) for exact vector checks.
#[derive(Debug, Clone, Default)]
pub struct PriorityScore {
    digits: Vec<usize>,
}

impl PriorityScore {
    pub fn new(digits: Vec<usize>) -> Self {
        Self { digits }
    }

    pub fn zero(classes: usize) -> Self {
        Self { digits: vec![0; classes] }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// Digit for priority class `p` (1-based); 0 past the end.
    pub fn digit(&self, p: usize) -> usize {
        p.checked_sub(1).and_then(|i| self.digits.get(i)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.digits.iter().sum()
    }

    /// First 1-based digit position where the two scores differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.digits.len().max(other.digits.len());
        (1..=len).find(|&p| self.digit(p) != other.digit(p))
    }
}

impl fmt::Display for PriorityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl PartialEq for PriorityScore {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Eq for PriorityScore {}

impl core::hash::Hash for PriorityScore {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        let used = self.digits.iter().rposition(|&d| d != 0).map_or(0, |i| i + 1);
        self.digits[..used].hash(state);
    }
}

impl Ord for PriorityScore {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_scores(self, other)
    }
}

impl PartialOrd for PriorityScore {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison, digit 1 most significant, shorter vector padded
/// with zeros.
pub fn compare_scores(a: &PriorityScore, b: &PriorityScore) -> Ordering {
    match a.first_difference(b) {
        Some(p) => a.digit(p).cmp(&b.digit(p)),
        None => Ordering::Equal,
    }
}

/// Score of `m` in `g`, with one digit per class `1..=g.max_priority()`.
pub fn priority_score(g: &BipartiteGraph, m: &Matching) -> Result<PriorityScore, MatchingError> {
    m.validate(g)?;
    Ok(score_unchecked(g, m))
}

pub(crate) fn score_unchecked(g: &BipartiteGraph, m: &Matching) -> PriorityScore {
    let mut digits = vec![0; g.max_priority()];
    for v in m.matched_vertices() {
        digits[g.priority(v) - 1] += 1;
    }
    PriorityScore { digits }
}
