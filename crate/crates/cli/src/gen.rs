//! Seeded random instances.
//!
//! Edges are drawn before priorities from one ChaCha8 stream, so instances
//! that differ only in `k` or the priority distribution share their edge set.

use primatch_core::BipartiteGraph;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::write_instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PriorityDistribution {
    #[default]
    Uniform,
    /// Class `c` drawn with weight `2^(k - c)`.
    Skewed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    /// Priorities are drawn from classes `1..=k`.
    pub k: usize,
    pub seed: u64,
    pub distribution: PriorityDistribution,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("m = {m} exceeds n1 * n2 = {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("k = {k} exceeds n1 + n2 = {n}")]
    TooManyClasses { k: usize, n: usize },
    #[error("k must be at least 1")]
    NoClasses,
}

impl InstanceSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        let max = self.n1.saturating_mul(self.n2);
        if self.m > max {
            return Err(GenError::TooManyEdges { m: self.m, max });
        }
        let n = self.n1 + self.n2;
        if self.k > n {
            return Err(GenError::TooManyClasses { k: self.k, n });
        }
        if self.k == 0 && n > 0 {
            return Err(GenError::NoClasses);
        }
        Ok(())
    }
}

pub fn generate(spec: &InstanceSpec) -> Result<BipartiteGraph, GenError> {
    spec.validate()?;
    let InstanceSpec { n1, n2, m, k, .. } = *spec;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let edges = if m == 0 {
        Vec::new()
    } else {
        rand::seq::index::sample(&mut rng, n1 * n2, m)
            .into_iter()
            .map(|cell| (cell / n2 + 1, n1 + cell % n2 + 1))
            .collect()
    };

    let n = n1 + n2;
    let priorities: Vec<usize> = match spec.distribution {
        _ if n == 0 => Vec::new(),
        PriorityDistribution::Uniform => (0..n).map(|_| rng.random_range(1..=k)).collect(),
        PriorityDistribution::Skewed => {
            // 2^(k-c) scaled by 2^(1-k) so large k stays finite.
            let weights = (1..=k).map(|c| 0.5f64.powi((c - 1) as i32));
            let dist = WeightedIndex::new(weights).expect("class 1 has weight 1");
            (0..n).map(|_| dist.sample(&mut rng) + 1).collect()
        }
    };

    Ok(BipartiteGraph::new(n1, n2, edges, priorities).expect("generated instance is valid"))
}

/// Instance file text for `spec`, with a comment recording the parameters.
pub fn instance_text(spec: &InstanceSpec) -> Result<String, GenError> {
    let g = generate(spec)?;
    let dist = match spec.distribution {
        PriorityDistribution::Uniform => "uniform",
        PriorityDistribution::Skewed => "skewed",
    };
    let comment = format!(
        "n1={} n2={} m={} k={} seed={} priorities={dist}",
        spec.n1, spec.n2, spec.m, spec.k, spec.seed
    );
    Ok(write_instance(&g, &[&comment]))
}
