//! `umx` — command-line front end for the umx library.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 size cap exceeded.

mod commands;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use umx::{Error, Limits};

#[derive(Parser, Debug)]
#[command(
    name = "umx",
    version,
    about = "Unbounded matroids on distributive lattices"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Abort linear-extension enumeration above this many orders.
    #[arg(long, global = true, value_name = "N")]
    pub cap_extensions: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input JSON file, or `-` for stdin.
    #[arg(value_name = "FILE")]
    pub file: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    LocalChain,
    Bases,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the U-matroid axioms of a rank table.
    Validate {
        #[command(flatten)]
        input: Input,
        /// How to decide the poset-matroid property.
        #[arg(long, value_enum, default_value = "local-chain")]
        method: Method,
    },
    /// List the bases.
    Bases {
        #[command(flatten)]
        input: Input,
    },
    /// List the 0/1 vertices of the base polyhedron, or the vertex of one chain.
    Vertices {
        #[command(flatten)]
        input: Input,
        /// A linear extension such as `2,3,1,4`.
        #[arg(long, value_name = "PERM")]
        order: Option<String>,
    },
    /// Print the rank table.
    RankTable {
        #[command(flatten)]
        input: Input,
    },
    /// List the flats.
    Flats {
        #[command(flatten)]
        input: Input,
    },
    /// Closure of a set, e.g. `--set 1,4`.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "SET")]
        set: String,
    },
    /// The dual U-matroid (rank-function JSON).
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Restrict to a sublattice given as a lattice or poset file.
    Restrict {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        to: String,
    },
    /// Generous or magnanimous extension (rank-function JSON).
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "magnanimous")]
        generous: bool,
        #[arg(long)]
        magnanimous: bool,
        /// `boolean` or a lattice/poset file.
        #[arg(long, value_name = "TARGET", default_value = "boolean")]
        to: String,
        /// Adjoin this single atom instead (generous only).
        #[arg(long, value_name = "I", conflicts_with = "magnanimous")]
        atom: Option<usize>,
    },
    /// 0/1 points of the base polyhedron (or independence polyhedron).
    ZeroOnePoints {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        independent: bool,
    },
    /// Check that lexicographic orders on the bases are shellings.
    ShellingCheck {
        #[command(flatten)]
        input: Input,
        /// Check every total order, not only linear extensions.
        #[arg(long, conflicts_with = "order")]
        all_orders: bool,
        /// Check a single order such as `3,1,2,4`.
        #[arg(long, value_name = "PERM")]
        order: Option<String>,
    },
    /// Decide whether a family is the basis system of a U-matroid.
    BasisSystem {
        #[command(flatten)]
        input: Input,
    },
    /// Intersection codimensions of an arrangement.
    ArrangementRank {
        #[command(flatten)]
        input: Input,
    },
    /// Minimal multisymmetric lift of an arrangement (rank-function JSON).
    Lift {
        #[command(flatten)]
        input: Input,
    },
    /// U-matroid of an arrangement on its product of chains (rank-function JSON).
    ArrangementUmatroid {
        #[command(flatten)]
        input: Input,
    },
    /// Split one space into a generic pair and verify the generous atom extension.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// 1-based index of the space to split (default: the last).
        #[arg(long, value_name = "I")]
        space: Option<usize>,
    },
    /// Estimate a rank by sampling generic spaces and compare with the exact value.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Codimension vector such as `1,1,1,0`.
        #[arg(long, value_name = "B")]
        b: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn install_limits(cli: &Cli) -> Result<(), Error> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var("UMX_MAX_N") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("UMX_MAX_N={v:?} is not a number")))?;
        limits.max_boolean_n = n.min(umx::limits::MAX_N);
    }
    if let Some(cap) = cli.cap_extensions {
        limits.max_extensions = cap;
    }
    limits.install();
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::AxiomViolation { .. } | Error::Invariant(_) | Error::GenericityFailure(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = install_limits(&cli).and_then(|()| commands::run(&cli));
    match result {
        Ok(out) => {
            let text = if cli.json { out.json_text() } else { out.text };
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("umx: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
