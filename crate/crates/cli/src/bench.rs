//! Timing harness: one CSV row per (k, seed, repetition) cell.

use std::io::Write;
use std::time::Instant;

use primatch_core::{max_priority_matching, PriorityScore};
use rayon::prelude::*;

use crate::gen::{generate, GenError, InstanceSpec, PriorityDistribution};

pub const CSV_HEADER: [&str; 9] = ["n1", "n2", "m", "k", "seed", "rep", "usec", "flow_phases", "score"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    pub k_list: Vec<usize>,
    pub seeds: Vec<u64>,
    pub reps: usize,
    pub distribution: PriorityDistribution,
    /// Worker threads; cells are independent.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub rep: usize,
    /// Solver wall time only, instance generation excluded.
    pub usec: f64,
    pub flow_phases: usize,
    pub score: String,
}

/// Digits joined by `/`, e.g. `12/0/7`.
pub fn score_digest(score: &PriorityScore) -> String {
    score.digits().iter().map(|d| d.to_string()).collect::<Vec<_>>().join("/")
}

/// Runs every cell. Rows come back ordered by `(k position, seed position, rep)`
/// regardless of `jobs`.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>, GenError> {
    let cells: Vec<(usize, u64)> =
        config.k_list.iter().flat_map(|&k| config.seeds.iter().map(move |&seed| (k, seed))).collect();
    for &(k, seed) in &cells {
        spec(config, k, seed).validate()?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    let rows: Vec<Vec<BenchRow>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(k, seed)| run_cell(config, k, seed))
            .collect::<Result<_, _>>()
    })?;
    Ok(rows.into_iter().flatten().collect())
}

fn spec(config: &BenchConfig, k: usize, seed: u64) -> InstanceSpec {
    InstanceSpec { n1: config.n1, n2: config.n2, m: config.m, k, seed, distribution: config.distribution }
}

fn run_cell(config: &BenchConfig, k: usize, seed: u64) -> Result<Vec<BenchRow>, GenError> {
    let g = generate(&spec(config, k, seed))?;
    Ok((0..config.reps)
        .map(|rep| {
            let start = Instant::now();
            let sol = max_priority_matching(&g);
            let usec = start.elapsed().as_nanos() as f64 / 1000.0;
            log::info!("k={k} seed={seed} rep={rep}: {usec:.1} us, {} flow phases", sol.flow_phases);
            BenchRow {
                n1: config.n1,
                n2: config.n2,
                m: config.m,
                k,
                seed,
                rep,
                usec,
                flow_phases: sol.flow_phases,
                score: score_digest(&sol.score),
            }
        })
        .collect())
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.n1.to_string(),
            r.n2.to_string(),
            r.m.to_string(),
            r.k.to_string(),
            r.seed.to_string(),
            r.rep.to_string(),
            format!("{:.3}", r.usec),
            r.flow_phases.to_string(),
            r.score.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Median solve time in microseconds over the rows with class count `k`.
pub fn median_usec(rows: &[BenchRow], k: usize) -> Option<f64> {
    let mut times: Vec<f64> = rows.iter().filter(|r| r.k == k).map(|r| r.usec).collect();
    if times.is_empty() {
        return None;
    }
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    Some(if times.len() % 2 == 1 { times[mid] } else { (times[mid - 1] + times[mid]) / 2.0 })
}
