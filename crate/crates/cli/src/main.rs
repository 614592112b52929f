use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use szeged_cli::commands::{self, FamilyKind, Format, GenerateKind, Method, PartitionSource};
use szeged_core::WeightMode;

/// Szeged-like topological indices of strength-weighted graphs.
#[derive(Parser)]
#[command(name = "szeged", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an index on a graph document
    Compute {
        graph: PathBuf,
        /// Catalog name (e.g. Sz, w+Sz_e*) or expr:<F(x1..x6)>
        #[arg(long)]
        index: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        /// `theta` or a JSON file of edge-index lists
        #[arg(long, default_value = "theta")]
        partition: PartitionSource,
        /// unit, degree-sum, degree-product or stored; overrides the index's own mode
        #[arg(long)]
        weights: Option<WeightMode>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Θ* classes as lists of edge indices
    Classes { graph: PathBuf },
    /// Print the quotient by one group of a partition, with induced weights
    Quotient {
        graph: PathBuf,
        #[arg(long)]
        group: usize,
        #[arg(long, default_value = "theta")]
        partition: PartitionSource,
        #[arg(long)]
        weights: Option<WeightMode>,
    },
    /// Build a molecular graph
    Generate {
        #[command(subcommand)]
        kind: GenerateCommand,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Also write the natural c-partition here
        #[arg(long, global = true)]
        partition_out: Option<PathBuf>,
    },
    /// Index values over a family
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        index: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        weights: Option<WeightMode>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check that every applicable method gives the same value
    Verify {
        graph: PathBuf,
        #[arg(long)]
        index: String,
        #[arg(long, default_value = "theta")]
        partition: PartitionSource,
        #[arg(long)]
        weights: Option<WeightMode>,
    },
    /// Time direct, cut and cut-with-tree evaluation over a family
    Bench {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long, default_value = "w+Sz_e*")]
        index: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        weights: Option<WeightMode>,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Benzenoid system from a JSON list of [q, r] cells
    Benzenoid {
        #[arg(long)]
        cells: PathBuf,
    },
    /// Phenylene whose hexagonal squeeze has the given cells
    Phenylene {
        #[arg(long)]
        cells: PathBuf,
    },
    PhenyleneStar {
        #[arg(long)]
        n: usize,
    },
    Coronoid {
        #[arg(long)]
        n: usize,
    },
    LinearChain {
        #[arg(long)]
        h: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<commands::Output> {
    match cli.command {
        Command::Compute { graph, index, method, partition, weights, format } => {
            commands::compute(&graph, &index, method, &partition, weights, format)
        }
        Command::Classes { graph } => commands::classes(&graph),
        Command::Quotient { graph, group, partition, weights } => {
            commands::quotient(&graph, group, &partition, weights)
        }
        Command::Generate { kind, out, partition_out } => {
            let kind = match kind {
                GenerateCommand::Benzenoid { cells } => GenerateKind::Benzenoid(cells),
                GenerateCommand::Phenylene { cells } => GenerateKind::Phenylene(cells),
                GenerateCommand::PhenyleneStar { n } => GenerateKind::PhenyleneStar(n),
                GenerateCommand::Coronoid { n } => GenerateKind::Coronoid(n),
                GenerateCommand::LinearChain { h } => GenerateKind::LinearChain(h),
            };
            commands::generate(&kind, out.as_deref(), partition_out.as_deref())
        }
        Command::Family { kind, index, from, to, weights, format } => {
            commands::family(kind, &index, from, to, weights, format)
        }
        Command::Verify { graph, index, partition, weights } => commands::verify(&graph, &index, &partition, weights),
        Command::Bench { kind, index, from, to, weights } => commands::bench(kind, &index, from, to, weights),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(output.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(szeged_cli::exit_code(&err))
        }
    }
}
