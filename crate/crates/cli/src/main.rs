//! Command-line front-end: decide realizability, construct edge-minimal or
//! edge-maximal realizations, and benchmark the pipeline on planted
//! instances.
//!
//! Exit codes: 0 success / realizable, 1 not realizable, 2 parse or
//! validation error.

mod format;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use bigraph_realize::oracles::flow_realize;
use bigraph_realize::planted::planted_instance;
use bigraph_realize::{
    check_realizable, realize_edge_maximal, realize_edge_minimal, validate_and_normalize,
    verify_realization, Error, IntervalInstance, RealizationReport,
};

use format::{edges_text, graph_dot, graph_json, parse_instance};

#[derive(Parser)]
#[command(
    name = "bigraph-realize",
    about = "Bipartite graphs with degrees in prescribed intervals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance admits a realization.
    Check {
        /// Instance file (plain text or JSON).
        instance: PathBuf,
    },
    /// Construct a realization and print it to standard output.
    Realize {
        /// Instance file (plain text or JSON).
        instance: PathBuf,
        /// Edge-minimal or edge-maximal realization.
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        /// Re-check the output against the instance and the flow oracle.
        #[arg(long)]
        verify: bool,
        /// Suppress the diagnostics block on standard error.
        #[arg(long)]
        quiet: bool,
    },
    /// Time the realizer on planted instances and print a table.
    Bench {
        /// Schedule entries of the form N1xN2:DENSITY, e.g. 1024x1024:4.
        #[arg(required = true)]
        schedule: Vec<String>,
        /// Seed for the instance generator; entry index is added per entry.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Interval half-width around the planted degrees.
        #[arg(long, default_value_t = 2)]
        slack: usize,
        /// Only print the table, no header.
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Json,
    Dot,
}

const EXIT_OK: u8 = 0;
const EXIT_NOT_REALIZABLE: u8 = 1;
const EXIT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { instance } => cmd_check(&instance),
        Command::Realize {
            instance,
            mode,
            format,
            verify,
            quiet,
        } => cmd_realize(&instance, mode, format, verify, quiet),
        Command::Bench {
            schedule,
            seed,
            slack,
            quiet,
        } => cmd_bench(&schedule, seed, slack, quiet),
    };
    ExitCode::from(code)
}

fn load_instance(path: &PathBuf) -> Result<IntervalInstance, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    parse_instance(&text).map_err(|e| e.to_string())
}

fn cmd_check(path: &PathBuf) -> u8 {
    let instance = match load_instance(path) {
        Ok(instance) => instance,
        Err(message) => {
            eprintln!("error: {}", message);
            return EXIT_ERROR;
        }
    };
    let sorted = match validate_and_normalize(&instance) {
        Ok(sorted) => sorted,
        Err(error) => {
            eprintln!("error: {}", error);
            return EXIT_ERROR;
        }
    };
    match check_realizable(&sorted) {
        Ok(()) => {
            println!("realizable");
            EXIT_OK
        }
        Err(certificate) => {
            println!("not realizable: {}", certificate);
            EXIT_NOT_REALIZABLE
        }
    }
}

fn cmd_realize(path: &PathBuf, mode: Mode, format: Format, verify: bool, quiet: bool) -> u8 {
    let instance = match load_instance(path) {
        Ok(instance) => instance,
        Err(message) => {
            eprintln!("error: {}", message);
            return EXIT_ERROR;
        }
    };
    let result = match mode {
        Mode::Min => realize_edge_minimal(&instance),
        Mode::Max => realize_edge_maximal(&instance),
    };
    let report = match result {
        Ok(report) => report,
        Err(Error::NotRealizable(certificate)) => {
            eprintln!("not realizable: {}", certificate);
            return EXIT_NOT_REALIZABLE;
        }
        Err(error) => {
            eprintln!("error: {}", error);
            return EXIT_ERROR;
        }
    };

    print!(
        "{}",
        match format {
            Format::Edges => edges_text(&report.graph),
            Format::Json => graph_json(&report.graph),
            Format::Dot => graph_dot(&report.graph),
        }
    );
    if !quiet {
        emit_diagnostics(&report);
    }
    if verify {
        if !verify_realization(&report.graph, &instance) {
            eprintln!("error: output failed degree-interval verification");
            return EXIT_ERROR;
        }
        match flow_realize(&instance) {
            Ok(Some(_)) => {}
            Ok(None) => {
                eprintln!("error: flow oracle contradicts the realization");
                return EXIT_ERROR;
            }
            Err(error) => {
                eprintln!("error: flow oracle failed: {}", error);
                return EXIT_ERROR;
            }
        }
        if !quiet {
            eprintln!("verified: degree intervals and flow oracle agree");
        }
    }
    EXIT_OK
}

fn emit_diagnostics(report: &RealizationReport) {
    eprintln!("delta1: {}", report.delta1);
    eprintln!("delta2: {}", report.delta2);
    eprintln!("edges: {}", report.graph.edge_count());
    eprintln!("final_r: {}", report.final_r);
    eprintln!("final_c: {}", report.final_c);
}

fn parse_schedule_entry(entry: &str) -> Result<(usize, usize, f64), String> {
    let (sizes, density) = entry
        .split_once(':')
        .ok_or_else(|| format!("`{}` is not of the form N1xN2:DENSITY", entry))?;
    let (n1, n2) = sizes
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("`{}` is not of the form N1xN2", sizes))?;
    let n1 = n1.parse().map_err(|_| format!("bad part size `{}`", n1))?;
    let n2 = n2.parse().map_err(|_| format!("bad part size `{}`", n2))?;
    let density = density
        .parse()
        .map_err(|_| format!("bad density `{}`", density))?;
    Ok((n1, n2, density))
}

fn cmd_bench(schedule: &[String], seed: u64, slack: usize, quiet: bool) -> u8 {
    let mut entries = Vec::with_capacity(schedule.len());
    for entry in schedule {
        match parse_schedule_entry(entry) {
            Ok(parsed) => entries.push(parsed),
            Err(message) => {
                eprintln!("error: {}", message);
                return EXIT_ERROR;
            }
        }
    }
    if !quiet {
        println!("n1\tn2\tedges\tms");
    }
    for (index, &(n1, n2, density)) in entries.iter().enumerate() {
        let instance = planted_instance(n1, n2, density, slack, seed.wrapping_add(index as u64));
        let start = Instant::now();
        let report = match realize_edge_minimal(&instance) {
            Ok(report) => report,
            Err(error) => {
                eprintln!("error: planted instance failed: {}", error);
                return EXIT_ERROR;
            }
        };
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        println!(
            "{}\t{}\t{}\t{:.3}",
            n1,
            n2,
            report.graph.edge_count(),
            elapsed
        );
    }
    EXIT_OK
}
