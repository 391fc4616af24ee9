//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 invariant violation.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use prr_debruijn::jointree::extract_tree;
use prr_debruijn::oracle::{check_de_bruijn, enumerate_family, parse_bits, DeBruijnCheck};
use prr_debruijn::registers::decompose;
use prr_debruijn::tables::{render_table, Table};
use prr_debruijn::{bench, Error, Generator, Rule, RuleKind, RuleSpec, State};

#[derive(Parser)]
#[command(
    name = "prr-debruijn",
    version,
    about = "de Bruijn sequences from PRR successor rules"
)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Raw,
    Cyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the bits of a rule's sequence.
    Generate {
        /// e.g. psi1:n=6:kset=1,6
        #[arg(long)]
        spec: String,
        /// Start state (default all zeros).
        #[arg(long)]
        start: Option<String>,
        /// Number of bits (default 2^n).
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, value_enum, default_value = "raw")]
        format: Format,
    },
    /// Check a 0/1 string (file or stdin) for the de Bruijn property.
    Verify {
        /// Input file; standard input when omitted or "-".
        input: Option<PathBuf>,
        #[arg(long)]
        n: usize,
    },
    /// List the PRR cycles of order n.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate a rule family and report distinct sequences as CSV.
    Family {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Reproduce table1 (psi rules) or table3 (upsilon rules).
    Table {
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Print the cycle join tree of a rule as DOT.
    Tree {
        #[arg(long)]
        spec: String,
    },
    /// Time bit generation.
    Bench {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 1_000_000)]
        bits: u64,
    },
}

enum Failure {
    Verify,
    Input(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidState(_) => Failure::Input(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match cli.command {
        Command::Generate {
            spec,
            start,
            count,
            format,
        } => {
            let spec: RuleSpec = spec.parse()?;
            let n = spec.n();
            let start = match start {
                Some(s) => s.parse::<State>()?,
                None => State::zeros(n)?,
            };
            let count = count.unwrap_or(if n < 64 { 1 << n } else { u64::MAX });
            let bits = Generator::new(Rule::new(&spec)?, start)?;
            if matches!(format, Format::Cyclic) {
                out.write_all(b"(")?;
            }
            for b in bits.take(count as usize) {
                out.write_all(if b == 1 { b"1" } else { b"0" })?;
            }
            if matches!(format, Format::Cyclic) {
                out.write_all(b")")?;
            }
            if count > 0 || matches!(format, Format::Cyclic) {
                out.write_all(b"\n")?;
            }
        }
        Command::Verify { input, n } => {
            let mut text = String::new();
            match input.filter(|p| p.as_os_str() != "-") {
                Some(path) => File::open(path)?.read_to_string(&mut text)?,
                None => io::stdin().read_to_string(&mut text)?,
            };
            let bits = parse_bits(&text)?;
            match check_de_bruijn(&bits, n).map_err(|e| Failure::Input(e.to_string()))? {
                DeBruijnCheck::Valid => writeln!(out, "ok: de Bruijn sequence of order {n}")?,
                DeBruijnCheck::Repeated {
                    window,
                    first,
                    second,
                } => {
                    let msg = format!("window {window} repeated at positions {first} and {second}");
                    writeln!(out, "fail: {msg}")?;
                    out.flush()?;
                    return Err(Failure::Verify);
                }
            }
        }
        Command::Decompose { n } => write!(out, "{}", decompose(n)?)?,
        Command::Family { kind, n } => {
            let kind: RuleKind = kind.parse()?;
            write!(out, "{}", enumerate_family(kind, n)?.to_csv())?;
        }
        Command::Table { which, n } => {
            let table: Table = which.parse()?;
            write!(out, "{}", render_table(table, n)?)?;
        }
        Command::Tree { spec } => {
            let spec: RuleSpec = spec.parse()?;
            write!(out, "{}", extract_tree(&spec)?.to_dot())?;
        }
        Command::Bench { spec, bits } => {
            let spec: RuleSpec = spec.parse()?;
            writeln!(out, "{}", bench::time_generation(&spec, bits)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
