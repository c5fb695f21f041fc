use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use primatch::bench::{self, BenchConfig};
use primatch::{
    format_trace, instance_text, parse_graph, parse_matching, serialize_matching, verify_matching, InstanceSpec,
    PriorityDistribution,
};
use primatch_core::oracle::oracle_priority_matching;
use primatch_core::{max_priority_matching, max_priority_matching_checked};

#[derive(Parser)]
#[command(name = "primatch", version, about = "Maximum priority matchings in bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance.
    Gen {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw class c with weight 2^(k-c) instead of uniformly.
        #[arg(long)]
        skewed: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a maximum priority matching.
    Solve {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Append one `t` line per processed priority class.
        #[arg(long)]
        trace: bool,
        /// Check per-phase invariants and re-verify the result before writing.
        #[arg(long)]
        check: bool,
    },
    /// Check a matching file against an instance.
    Verify { instance: PathBuf, matching: PathBuf },
    /// Exhaustive search (at most 24 vertices).
    Oracle {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the solver over a grid of class counts and seeds, writing CSV.
    Bench {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
        k_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long)]
        skewed: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn distribution(skewed: bool) -> PriorityDistribution {
    if skewed {
        PriorityDistribution::Skewed
    } else {
        PriorityDistribution::Uniform
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { n1, n2, m, k, seed, skewed, output } => {
            let spec = InstanceSpec { n1, n2, m, k, seed, distribution: distribution(skewed) };
            emit(output.as_deref(), &instance_text(&spec)?)?;
        }
        Command::Solve { input, output, trace, check } => {
            let g = parse_graph(&read(&input)?).with_context(|| format!("parsing {}", input.display()))?;
            let sol = if check { max_priority_matching_checked(&g)? } else { max_priority_matching(&g) };
            let mut text = serialize_matching(&sol.matching, &sol.score);
            if check {
                verify_matching(&g, &parse_matching(&text)?).context("self-check of solver output")?;
            }
            if trace {
                text.push_str(&format_trace(&sol.trace));
            }
            emit(output.as_deref(), &text)?;
        }
        Command::Verify { instance, matching } => {
            let g = parse_graph(&read(&instance)?).with_context(|| format!("parsing {}", instance.display()))?;
            let file = parse_matching(&read(&matching)?).with_context(|| format!("parsing {}", matching.display()))?;
            match verify_matching(&g, &file) {
                Ok(report) => println!("ok: {} pairs, score {}", report.pairs, report.score),
                Err(e) => {
                    println!("fail: {e}");
                    return Ok(false);
                }
            }
        }
        Command::Oracle { input, output } => {
            let g = parse_graph(&read(&input)?).with_context(|| format!("parsing {}", input.display()))?;
            let (m, score) = oracle_priority_matching(&g)?;
            emit(output.as_deref(), &serialize_matching(&m, &score))?;
        }
        Command::Bench { n1, n2, m, k_list, seeds, reps, skewed, jobs, output } => {
            if k_list.is_empty() || seeds.is_empty() {
                bail!("--k-list and --seeds need at least one value");
            }
            let config = BenchConfig { n1, n2, m, k_list, seeds, reps, distribution: distribution(skewed), jobs };
            let rows = bench::run(&config)?;
            match output {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    bench::write_csv(&rows, file)?;
                }
                None => bench::write_csv(&rows, io::stdout().lock())?,
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
