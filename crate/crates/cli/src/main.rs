//! `genabc`: radicals, tuple quality, and power-sum searches from the shell.
//!
//! Exit codes: 0 on success, 1 on usage or runtime errors, 2 when
//! `verify-gflt` finds a solution at an exponent `n >= 2k + 2`.

mod config;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use genabc_core::arith::{self, CoprimeMode};
use genabc_core::powersum::{self, Algorithm, PowerSumSearch, PowerSumSolution, SolutionFilter};
use genabc_core::store::{self, Format, ResumableRun, SearchParams};
use genabc_core::tuples::{self, Epsilon, TupleSearch};
use genabc_core::{audit, WorkerPool};

#[derive(Debug, Parser)]
#[command(name = "genabc", version, about = "Radicals, abc-tuple quality and power-sum searches")]
pub struct Cli {
    /// Worker threads for searches; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Output format for search and audit results.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Flat `key = value` file with defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Jsonl,
    Csv,
}

impl OutputFormat {
    fn machine(self) -> Option<Format> {
        match self {
            OutputFormat::Table => None,
            OutputFormat::Jsonl => Some(Format::Jsonl),
            OutputFormat::Csv => Some(Format::Csv),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    All,
    Setwise,
    Pairwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Dfs,
    Mitm,
}

#[derive(Debug, clap::Args)]
struct CheckpointArgs {
    /// Resume from and save progress to this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,

    /// Outer-loop values per checkpoint.
    #[arg(long, default_value_t = 256)]
    chunk: u64,

    /// Stop after the checkpoint covering this outer value is written.
    #[arg(long, hide = true, requires = "checkpoint")]
    halt_after: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the prime factorization of each argument.
    Factor {
        #[arg(required = true)]
        values: Vec<u64>,
    },
    /// Print the radical of each argument.
    Rad {
        #[arg(required = true)]
        values: Vec<u64>,
    },
    /// Print the radical of the product of all arguments.
    RadSet {
        #[arg(required = true)]
        values: Vec<u64>,
    },
    /// Print log(b) / log(rad(a_1 ... a_k b)).
    Quality {
        b: u64,
        #[arg(required = true)]
        parts: Vec<u64>,
    },
    /// Rank tuples a_1 + ... + a_k = b by quality, keeping q > 1 + epsilon.
    HuntAbc {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b_max: u64,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Setwise)]
        mode: ModeArg,
        /// Keep only the best N tuples.
        #[arg(long)]
        top: Option<usize>,
        #[command(flatten)]
        checkpoint: CheckpointArgs,
    },
    /// List solutions of x_1^n + ... + x_k^n = z^n with z <= z-max.
    HuntPowersum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        z_max: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Dfs)]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        checkpoint: CheckpointArgs,
    },
    /// Search every exponent from n-from (default 2k + 2) to n-to.
    VerifyGflt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_from: Option<u32>,
        #[arg(long)]
        n_to: u32,
        #[arg(long)]
        z_max: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
    },
    /// Evaluate the inequality chain on one solution.
    Audit {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        z: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        xs: Vec<u64>,
    },
}

fn coprime_mode(mode: ModeArg) -> Result<CoprimeMode> {
    match mode {
        ModeArg::Setwise => Ok(CoprimeMode::Setwise),
        ModeArg::Pairwise => Ok(CoprimeMode::Pairwise),
        ModeArg::All => bail!("hunt-abc needs --mode setwise or pairwise"),
    }
}

fn filter(mode: ModeArg) -> SolutionFilter {
    match mode {
        ModeArg::All => SolutionFilter::All,
        ModeArg::Setwise => SolutionFilter::Setwise,
        ModeArg::Pairwise => SolutionFilter::Pairwise,
    }
}

/// What the run found, beyond success.
enum Finding {
    Nothing,
    Counterexample,
}

fn run(cli: Cli) -> Result<Finding> {
    let machine = cli.format.machine();
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = sink;
    let plain_only = |name: &str| -> Result<()> {
        ensure!(machine.is_none(), "{name} only supports --format table");
        Ok(())
    };

    let mut finding = Finding::Nothing;
    match cli.command {
        Command::Factor { values } => {
            plain_only("factor")?;
            for v in values {
                writeln!(out, "{}", arith::factorize(v)?)?;
            }
        }
        Command::Rad { values } => {
            plain_only("rad")?;
            for v in values {
                writeln!(out, "{}", arith::radical(v)?)?;
            }
        }
        Command::RadSet { values } => {
            plain_only("rad-set")?;
            writeln!(out, "{}", arith::radical_of_set(&values)?)?;
        }
        Command::Quality { b, parts } => {
            plain_only("quality")?;
            let q = tuples::quality(&parts, b)?;
            writeln!(out, "{}", store::format_quality(q))?;
        }
        Command::HuntAbc {
            k,
            b_max,
            epsilon,
            mode,
            top,
            checkpoint,
        } => {
            let eps = Epsilon::new(epsilon)?;
            let search = TupleSearch::new(k, b_max, coprime_mode(mode)?)?;
            let pool = WorkerPool::new(cli.workers);
            let run = resumable(SearchParams::abc_hunt(&search, eps), &checkpoint);
            let Some(mut hunt) = store::resume_abc_hunt(&search, eps, &pool, &run)? else {
                eprintln!("halted; progress saved to checkpoint");
                return Ok(Finding::Nothing);
            };
            if let Some(top) = top {
                hunt.hits.truncate(top);
            }
            report::abc_hunt(&mut out, &hunt, eps, machine)?;
        }
        Command::HuntPowersum {
            k,
            n,
            z_max,
            mode,
            algorithm,
            checkpoint,
        } => {
            let algorithm = match algorithm {
                AlgorithmArg::Dfs => Algorithm::Dfs,
                AlgorithmArg::Mitm => Algorithm::MeetInTheMiddle,
            };
            let search = PowerSumSearch::new(k, n, z_max, filter(mode), algorithm)?;
            let pool = WorkerPool::new(cli.workers);
            let run = resumable(SearchParams::power_sum(&search), &checkpoint);
            let Some(found) = store::resume_power_sum(&search, &pool, &run)? else {
                eprintln!("halted; progress saved to checkpoint");
                return Ok(Finding::Nothing);
            };
            report::solutions(&mut out, &found, machine)?;
        }
        Command::VerifyGflt {
            k,
            n_from,
            n_to,
            z_max,
            mode,
        } => {
            let g = powersum::g(k)?;
            let n_from = n_from.unwrap_or(g);
            ensure!(n_from <= n_to, "--n-from {n_from} exceeds --n-to {n_to}");
            let pool = WorkerPool::new(cli.workers);
            let report = powersum::verify_gflt_range(k, n_from, n_to, z_max, filter(mode), &pool)?;
            report::gflt(&mut out, &report, machine)?;
            if report.has_counterexample() {
                for s in report.counterexamples() {
                    eprintln!("COUNTEREXAMPLE at n={} >= g({k})={g}: {s}", s.n);
                }
                finding = Finding::Counterexample;
            }
        }
        Command::Audit { k, n, z, xs } => {
            ensure!(xs.len() == k, "--k {k} but --xs has {} values", xs.len());
            ensure!(n >= 2, "--n must be at least 2");
            let solution = PowerSumSolution::new(xs, z, n)?;
            let audit = audit::audit_chain(&solution)?;
            report::audit(&mut out, &audit, machine)?;
        }
    }
    out.flush()?;
    Ok(finding)
}

fn resumable(params: SearchParams, args: &CheckpointArgs) -> ResumableRun {
    let mut run = ResumableRun::new(params).chunk(args.chunk);
    if let Some(path) = &args.checkpoint {
        run = run.checkpoint(path);
    }
    if let Some(h) = args.halt_after {
        run = run.halt_after(h);
    }
    run
}

fn main() -> ExitCode {
    let args = match config::apply(std::env::args_os().collect()) {
        Ok(args) => args,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Finding::Nothing) => ExitCode::SUCCESS,
        Ok(Finding::Counterexample) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
