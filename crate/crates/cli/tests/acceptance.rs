//! Acceptance checks. Runs as a plain binary (no libtest harness) and prints
//! one PASS/FAIL line per criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use primatch::bench::{self, BenchConfig};
use primatch::{generate, instance_text, serialize_matching, InstanceSpec, PriorityDistribution};
use primatch_core::oracle::{oracle_max_flow, oracle_max_matching_size, oracle_priority_matching};
use primatch_core::{
    build_x1, build_x2, extract_m2, is_unit_graph, max_flow, max_priority_matching, max_priority_matching_checked,
    maximum_matching, BipartiteGraph, FlowNetwork,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_INSTANCES: usize = 600;
const UNIT_GRAPH_PAIRS: usize = 1000;
const SUBROUTINE_CASES: usize = 250;
const TIMING_REPS: usize = 5;
const RATIO_RANGE: (f64, f64) = (2.0, 24.0);
const K8_LIMIT_SECS: f64 = 10.0;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn small_spec(rng: &mut ChaCha8Rng, seed: u64) -> InstanceSpec {
    let n1 = rng.random_range(1..=6);
    let n2 = rng.random_range(1..=6);
    let m = rng.random_range(0..=n1 * n2);
    let k = rng.random_range(1..=4usize.min(n1 + n2));
    InstanceSpec { n1, n2, m, k, seed, distribution: PriorityDistribution::Uniform }
}

fn small_instances() -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    (0..ORACLE_INSTANCES as u64)
        .map(|seed| generate(&small_spec(&mut rng, seed)).unwrap())
        .collect()
}

fn oracle_optimality(instances: &[BipartiteGraph]) -> Outcome {
    let start = Instant::now();
    for (idx, g) in instances.iter().enumerate() {
        let sol = max_priority_matching(g);
        let (_, best) = oracle_priority_matching(g).unwrap();
        if sol.score.digits() != best.digits() {
            return outcome(false, format!("instance {idx}: solver {} vs oracle {best}", sol.score));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(secs < 60.0, format!("{} instances equal to oracle in {secs:.2}s", instances.len()))
}

fn size_preservation(instances: &[BipartiteGraph]) -> Outcome {
    for (idx, g) in instances.iter().enumerate() {
        let sol = max_priority_matching(g);
        let hk = maximum_matching(g).len();
        let brute = oracle_max_matching_size(g).unwrap();
        if sol.matching.len() != hk || hk != brute || sol.initial_size != hk {
            return outcome(false, format!("instance {idx}: output {} hk {hk} brute {brute}", sol.matching.len()));
        }
    }
    outcome(true, format!("|output| = hk = brute force on {} instances", instances.len()))
}

fn preservation_claims(instances: &[BipartiteGraph]) -> Outcome {
    let mut steps = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e5);
    let mut larger = Vec::new();
    for seed in 0..50 {
        let n1 = rng.random_range(20..=200);
        let n2 = rng.random_range(20..=200);
        let m = rng.random_range(0..=4 * (n1 + n2));
        let k = rng.random_range(1..=8);
        larger.push(
            generate(&InstanceSpec { n1, n2, m, k, seed, distribution: PriorityDistribution::Skewed }).unwrap(),
        );
    }
    for (idx, g) in instances.iter().chain(&larger).enumerate() {
        match max_priority_matching_checked(g) {
            Ok(sol) => steps += sol.trace.len(),
            Err(e) => return outcome(false, format!("instance {idx}: {e}")),
        }
    }
    outcome(true, format!("{steps} class steps over {} instances, no vertex of priority <= i lost", instances.len() + larger.len()))
}

fn unit_graphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e17);
    let mut pairs = 0;
    let mut seed = 0;
    while pairs < UNIT_GRAPH_PAIRS {
        let n1 = rng.random_range(1..=60);
        let n2 = rng.random_range(1..=60);
        let m = rng.random_range(0..=n1 * n2 / 3);
        let k = rng.random_range(1..=6usize.min(n1 + n2));
        let g = generate(&InstanceSpec { n1, n2, m, k, seed, distribution: PriorityDistribution::Uniform }).unwrap();
        seed += 1;
        let m1 = maximum_matching(&g);
        for class in g.classes() {
            let mut x1 = build_x1(&g, &m1, class).unwrap();
            max_flow(&mut x1.net).unwrap();
            let m2 = extract_m2(&g, &m1, &x1).unwrap();
            let x2 = build_x2(&g, &m2, class).unwrap();
            if !is_unit_graph(&x1.net) || !is_unit_graph(&x2.net) {
                return outcome(false, format!("instance seed {} class {class}", seed - 1));
            }
            pairs += 1;
        }
    }
    outcome(true, format!("{pairs} (instance, class) pairs, X1 and X2 all unit graphs"))
}

fn subroutines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ab);
    for case in 0..SUBROUTINE_CASES {
        let nodes = rng.random_range(2..=20);
        let mut net = FlowNetwork::new(nodes, 0, nodes - 1);
        for _ in 0..rng.random_range(0..=4 * nodes) {
            let (a, b) = (rng.random_range(0..nodes), rng.random_range(0..nodes));
            if a != b {
                net.add_arc(a, b);
            }
        }
        let expected = oracle_max_flow(&net).unwrap();
        let got = max_flow(&mut net).unwrap().value;
        if got != expected {
            return outcome(false, format!("network {case}: dinic {got}, oracle {expected}"));
        }
    }
    for case in 0..SUBROUTINE_CASES {
        let n1 = rng.random_range(1..=6);
        let n2 = rng.random_range(1..=12 - n1);
        let m = rng.random_range(0..=n1 * n2);
        let g = generate(&InstanceSpec {
            n1,
            n2,
            m,
            k: 1,
            seed: case as u64,
            distribution: PriorityDistribution::Uniform,
        })
        .unwrap();
        let (hk, brute) = (maximum_matching(&g).len(), oracle_max_matching_size(&g).unwrap());
        if hk != brute {
            return outcome(false, format!("graph {case}: hk {hk}, brute force {brute}"));
        }
    }
    outcome(true, format!("{SUBROUTINE_CASES} networks and {SUBROUTINE_CASES} graphs agree with oracles"))
}

fn complexity_trend() -> Outcome {
    let config = BenchConfig {
        n1: 10_000,
        n2: 10_000,
        m: 100_000,
        k_list: vec![1, 8],
        seeds: vec![2015],
        reps: TIMING_REPS,
        distribution: PriorityDistribution::Uniform,
        jobs: 1,
    };
    let rows = bench::run(&config).unwrap();
    let t1 = bench::median_usec(&rows, 1).unwrap();
    let t8 = bench::median_usec(&rows, 8).unwrap();
    let ratio = t8 / t1;
    let secs8 = t8 / 1e6;
    let pass = (RATIO_RANGE.0..=RATIO_RANGE.1).contains(&ratio) && secs8 < K8_LIMIT_SECS;
    outcome(
        pass,
        format!(
            "median k=1 {:.1} ms, k=8 {:.1} ms, ratio {ratio:.2} (want {}..{}), k=8 under {K8_LIMIT_SECS} s",
            t1 / 1e3,
            t8 / 1e3,
            RATIO_RANGE.0,
            RATIO_RANGE.1
        ),
    )
}

fn determinism() -> Outcome {
    let spec = InstanceSpec { n1: 3000, n2: 2500, m: 20_000, k: 7, seed: 99, distribution: PriorityDistribution::Skewed };
    let text_a = instance_text(&spec).unwrap();
    let text_b = instance_text(&spec).unwrap();
    if text_a != text_b {
        return outcome(false, "generator output differs between runs");
    }
    let g = primatch::parse_graph(&text_a).unwrap();
    let solve = || {
        let sol = max_priority_matching(&g);
        serialize_matching(&sol.matching, &sol.score)
    };
    if solve() != solve() {
        return outcome(false, "library solve output differs between runs");
    }

    let dir = tempfile::TempDir::new().unwrap();
    let inst = dir.path().join("g.txt");
    std::fs::write(&inst, &text_a).unwrap();
    let run = || Command::new(env!("CARGO_BIN_EXE_primatch")).arg("solve").arg(&inst).output().unwrap().stdout;
    let (a, b) = (run(), run());
    if a != b || a != solve().into_bytes() {
        return outcome(false, "CLI solve output differs between runs");
    }
    outcome(true, "generator, library and CLI outputs byte-identical across runs")
}

fn main() -> ExitCode {
    let instances = small_instances();
    let criteria: Vec<Criterion> = vec![
        ("1 oracle optimality", Box::new(|| oracle_optimality(&instances))),
        ("2 maximum size preserved", Box::new(|| size_preservation(&instances))),
        ("3 preservation claims", Box::new(|| preservation_claims(&instances))),
        ("4 unit-graph property", Box::new(unit_graphs)),
        ("5 subroutine equivalence", Box::new(subroutines)),
        ("6 complexity trend", Box::new(complexity_trend)),
        ("7 determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let result = check();
        println!("[{}] criterion {name}: {}", if result.pass { "PASS" } else { "FAIL" }, result.detail);
        failed += usize::from(!result.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
