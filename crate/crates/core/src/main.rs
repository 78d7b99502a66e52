use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use semimod::analysis::{self, parse_checks, AnalysisConfig, AnalysisError, Check};
use semimod::error::SemiringError;
use semimod::golden;
use semimod::semiring::{FiniteSemiring, DEFAULT_MAX_ELEMENTS};

const EXIT_USAGE: u8 = 64;
const EXIT_MISMATCH: u8 = 5;

#[derive(Parser)]
#[command(name = "semimod", version, about = "Subsemimodule lattices, orthogonality and projections over finite semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semiring axioms and classify the semiring.
    Validate {
        /// `builtin:bool`, `builtin:zN`, `builtin:chainN` or a JSON file.
        source: String,
    },
    /// Enumerate L(M) for M = S^k and evaluate every verdict and check.
    Analyze {
        source: String,
        #[arg(long, short = 'k')]
        rank: usize,
        /// Also write Graphviz files for L(M), L_c(M) and L_s(M).
        #[arg(long, requires = "out")]
        dot: bool,
        /// Directory for report.json (and DOT files); stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = semimod::sublattice::DEFAULT_MAX_SUBSEMIMODULES)]
        cap_subs: usize,
        #[arg(long, default_value_t = semimod::splitting::DEFAULT_MAX_CANDIDATES)]
        cap_proj: u128,
        /// Comma-separated subset of closure, families, homomorphism,
        /// nondegenerate, structure, decomposition, projections; or all/none.
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        checks: std::collections::BTreeSet<Check>,
        /// Include wall time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Recompute a worked example and compare it with the published tables.
    Reproduce {
        /// `example1` or `example2`.
        id: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Validate { source } => validate(&source),
        Command::Analyze { source, rank, dot, out, cap_subs, cap_proj, checks, timing } => {
            let config = AnalysisConfig {
                cap_subs,
                cap_proj,
                out_dir: out,
                dot,
                checks,
                timing,
                ..AnalysisConfig::new(source, rank)
            };
            analyze(&config)
        }
        Command::Reproduce { id } => reproduce(&id),
    }
}

fn fail(e: &AnalysisError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn validate(source: &str) -> ExitCode {
    let tables = match analysis::load_tables(source) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let cap = if source.starts_with("builtin:") { tables.labels.len().max(DEFAULT_MAX_ELEMENTS) } else { DEFAULT_MAX_ELEMENTS };
    match FiniteSemiring::new(tables.clone(), cap) {
        Ok(s) => {
            let c = s.classification();
            let mut kinds = Vec::new();
            if c.ring {
                kinds.push("ring");
            }
            if c.bounded_distributive_lattice {
                kinds.push("bounded-distributive-lattice");
            }
            if c.zero_meet_irreducible == Some(true) {
                kinds.push("zero-meet-irreducible");
            }
            print_json(&json!({
                "source": source,
                "name": s.name(),
                "elements": s.labels(),
                "valid": true,
                "classification": c,
                "kinds": kinds,
            }));
            ExitCode::SUCCESS
        }
        Err(SemiringError::AxiomViolation(violations)) => {
            let listed: Vec<_> = violations
                .iter()
                .map(|v| {
                    let witness: Vec<&str> = v.witness.iter().map(|&e| tables.labels[e].as_str()).collect();
                    eprintln!("{} fails at ({})", v.axiom, witness.join(", "));
                    json!({ "axiom": v.axiom, "witness": witness })
                })
                .collect();
            print_json(&json!({
                "source": source,
                "name": tables.name,
                "elements": tables.labels,
                "valid": false,
                "violations": listed,
            }));
            ExitCode::from(2)
        }
        Err(e) => fail(&AnalysisError::Semiring(e)),
    }
}

fn analyze(config: &AnalysisConfig) -> ExitCode {
    let result = match analysis::analyze(config) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match &config.out_dir {
        Some(dir) => match result.write(dir, config.dot) {
            Ok(paths) => {
                for p in paths {
                    println!("wrote {}", p.display());
                }
            }
            Err(e) => return fail(&e),
        },
        None => print!("{}", result.report.to_json()),
    }
    let failed: Vec<_> = result.report.checks.iter().flat_map(|c| c.failures().map(move |f| (c, f))).collect();
    for (c, f) in &failed {
        eprintln!("check {} failed: {} ({})", c.check, f.clause, f.witness.as_deref().unwrap_or(""));
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn reproduce(id: &str) -> ExitCode {
    let Some(example) = golden::example(id) else {
        let known: Vec<_> = golden::EXAMPLES.iter().map(|e| e.id).collect();
        eprintln!("error: unknown example {id:?}; expected one of {}", known.join(", "));
        return ExitCode::from(EXIT_USAGE);
    };
    let r = match example.reproduce() {
        Ok(r) => r,
        Err(e) => return fail(&AnalysisError::Module(e)),
    };
    for c in &r.comparisons {
        println!("{:<16} {}", c.item, if c.matches { "match" } else { "MISMATCH" });
        for d in &c.differences {
            println!("    {d}");
        }
    }
    if r.matches() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}
