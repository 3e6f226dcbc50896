use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use symreg::plot::{weight_svg, weight_table};
use symreg::report::ReportDocument;
use symreg::sweep;
use symreg_core::engine::{minimal_period, reduce};
use symreg_core::simulator::{cycle_structure, generate, orbit_period, weight_trace};
use symreg_core::{BitString, RegisterParams, RunVector};

#[derive(Parser)]
#[command(name = "symreg", version, about = "Minimal periods of symmetric shift registers over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal period of the sequence generated from a start state.
    Period {
        #[arg(long)]
        bits: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        /// Also simulate the register and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a prefix of the generated sequence.
    Simulate {
        #[arg(long)]
        bits: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        /// Prefix length; defaults to 2n.
        #[arg(long)]
        length: Option<usize>,
        /// Also iterate until the start state recurs and print the period.
        #[arg(long)]
        period: bool,
    },
    /// Show the contraction chain of a run vector and its dynamical parameters.
    Reduce {
        /// Run vector such as "(3,4,2,4,1,0)" or "3,4,2,4,1,0".
        #[arg(long, conflicts_with = "bits", required_unless_present = "bits")]
        vector: Option<String>,
        /// Bit string starting with 1; its run vector is used.
        #[arg(long)]
        bits: Option<String>,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit the modified weight parameters w_i* for i = 0..=length.
    PlotWeights {
        #[arg(long)]
        bits: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 80)]
        length: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: PlotFormat,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cycle-length histogram over all 2^n states.
    Cycles {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compare analytic and simulated periods over all small inputs.
    Sweep {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Check this many random inputs per length instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn register(bits: &str, k: usize, p: usize) -> Result<(BitString, RegisterParams)> {
    let a: BitString = bits.parse().with_context(|| format!("invalid bit string {bits:?}"))?;
    let params = RegisterParams::new(k, p, a.len())?;
    Ok((a, params))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Period { bits, k, p, verify, format } => {
            let (a, params) = register(&bits, k, p)?;
            let report = minimal_period(&a, params)?;
            let doc = ReportDocument::from_report(&report);
            match format {
                Format::Text => print!("{}", doc.to_text()),
                Format::Json => print!("{}", doc.to_json()),
            }
            if verify {
                let simulated = orbit_period(&a, params)?;
                let agree = simulated == report.minimal_period;
                let verdict = if agree { "verified" } else { "MISMATCH" };
                eprintln!("simulated period: {simulated} ({verdict})");
                return Ok(agree);
            }
        }
        Command::Simulate { bits, k, p, length, period } => {
            let (a, params) = register(&bits, k, p)?;
            let length = length.unwrap_or(2 * params.n);
            println!("{}", generate(&a, params, length)?);
            if period {
                println!("period: {}", orbit_period(&a, params)?);
            }
        }
        Command::Reduce { vector, bits, p, format } => {
            let q: RunVector = match (vector, bits) {
                (Some(v), _) => v.parse().with_context(|| format!("invalid run vector {v:?}"))?,
                (None, Some(b)) => {
                    let a: BitString = b.parse().with_context(|| format!("invalid bit string {b:?}"))?;
                    a.run_vector()?
                }
                (None, None) => bail!("either --vector or --bits is required"),
            };
            let r = reduce(&q, p)?;
            let doc = ReportDocument::from_reduction(&r.chain, &r.dynamics);
            match format {
                Format::Text => print!("{}", doc.to_text()),
                Format::Json => print!("{}", doc.to_json()),
            }
        }
        Command::PlotWeights { bits, k, p, length, format, output } => {
            let (a, params) = register(&bits, k, p)?;
            let trace = weight_trace(&a, params, length)?;
            let body = match format {
                PlotFormat::Text => weight_table(&trace),
                PlotFormat::Svg => weight_svg(&trace, &format!("Modified weight parameters of {a} (k={k}, p={p})")),
            };
            match output {
                Some(path) => fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{body}"),
            }
        }
        Command::Cycles { k, p, n } => {
            let params = RegisterParams::new(k, p, n)?;
            println!("length\tcycles");
            let histogram = cycle_structure(params)?;
            for (len, count) in &histogram {
                println!("{len}\t{count}");
            }
            let states: u64 = histogram.iter().map(|(l, c)| l * c).sum();
            println!("{states} states");
        }
        Command::Sweep { n_max, sample, seed, format } => {
            if sample.is_none() && n_max > 16 {
                bail!("exhaustive sweeps are limited to n <= 16; use --sample");
            }
            let summary = match sample {
                Some(samples) => sweep::sampled(n_max, samples, seed),
                None => sweep::exhaustive(n_max),
            };
            match format {
                Format::Text => print!("{}", summary.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&summary)?),
            }
            return Ok(summary.mismatches.is_empty());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
