//! `cimat`: checks, conversions and censuses for CI-structures, matroids
//! and oriented matroids.
//!
//! Exit codes: 0 when everything passes, 1 when violations or mismatches
//! were found, 2 on unreadable input or invalid arguments.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "cimat",
    version,
    about = "Matroids and oriented matroids as CI-structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a `ci` or `oci` file against axiom systems.
    Check {
        input: PathBuf,
        /// Comma-separated: sg, mci, gaussoid, matroid-ci, oci.
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<AxiomTag>,
    },
    /// Convert a file to another kind.
    Convert {
        input: PathBuf,
        #[arg(long)]
        to: Target,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Convert back and compare with the input.
        #[arg(long)]
        verify: bool,
    },
    /// Apply an operation to a `ci` file.
    Op {
        #[arg(value_enum)]
        op: Operation,
        input: PathBuf,
        /// Second operand for `sum` and `iso`.
        #[arg(long)]
        with: Option<PathBuf>,
        /// Elements for `delete` and `contract`, comma-separated, 1-based.
        #[arg(long, value_delimiter = ',')]
        elements: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count all objects of a kind on [n].
    Enumerate {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Write every object into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Demonstrations.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
    /// Derive CI data from a `vectors` or `matrix` file and cross-check it.
    Realize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Demo {
    /// The family G_m: fails (MCI), and its single-element minors.
    Gm {
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxiomTag {
    Sg,
    Mci,
    Gaussoid,
    MatroidCi,
    Oci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ci,
    Matroid,
    Oci,
    SignedCircuits,
    Chirotope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operation {
    Delete,
    Contract,
    Dual,
    Sum,
    Iso,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Matroids,
    MatroidCi,
    GaussoidMatroids,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Check { input, axioms } => commands::check(&input, &axioms),
        Command::Convert {
            input,
            to,
            output,
            verify,
        } => commands::convert(&input, to, output.as_deref(), verify),
        Command::Op {
            op,
            input,
            with,
            elements,
            output,
        } => commands::op(op, &input, with.as_deref(), &elements, output.as_deref()),
        Command::Enumerate {
            kind,
            n,
            emit,
            sequential,
        } => commands::enumerate(kind, n, emit.as_deref(), sequential),
        Command::Demo {
            demo: Demo::Gm { m, output },
        } => commands::demo_gm(m, output.as_deref()),
        Command::Realize { input, output } => commands::realize(&input, output.as_deref()),
    };
    let report = report.unwrap_or_else(Report::from_error);
    report.print();
    report.exit_code()
}
