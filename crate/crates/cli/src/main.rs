//! `graphcert`: generate graphs, build and check colorings, Hamiltonian
//! paths and Keller-graph certificates from the command line.
//!
//! Exit codes: 0 verified, 1 verification failed or nothing found, 2 bad
//! usage or input, 3 search budget exhausted.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphcert::kempe::SearchBudget;

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "graphcert",
    version,
    about = "Edge colorings, Hamiltonian paths and Keller certificates with independent verification"
)]
pub struct Cli {
    /// Print one JSON object on stdout instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps (0 = all cores). Output order does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Allow long experiments that take minutes or more.
    #[arg(long, global = true)]
    pub long_run: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Move budget per restart of a Kempe search.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub budget_switches: u64,
    /// Restarts of a Kempe search.
    #[arg(long, global = true, default_value_t = 8)]
    pub restarts: u32,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Write a graph in DIMACS format.
    Gen(GenArgs),
    /// Color a queen graph.
    Color(ColorArgs),
    /// Queen-graph commands.
    #[command(subcommand)]
    Queen(QueenCmd),
    /// Check a certificate against a DIMACS graph.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Derived multicycles and their chromatic index.
    #[command(subcommand)]
    Multicycle(MulticycleCmd),
    /// Hamiltonian paths in Mycielskians.
    #[command(subcommand)]
    Mycielski(MycielskiCmd),
    /// Keller graph constructions and fixtures.
    #[command(subcommand)]
    Keller(KellerCmd),
    /// Run the experiment behind a numbered conjecture (2, 3, 4, 5 or 9).
    Conjecture(ConjectureArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Queen,
    Rook,
    Bishop,
    WhiteBishop,
    Keller,
    Mycielski,
    MuCycle,
    Cycle,
    Complete,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Rows (boards).
    #[arg(long)]
    pub m: Option<usize>,
    /// Columns (boards), or vertex count (cycle, complete, mu-cycle).
    #[arg(long)]
    pub n: Option<usize>,
    /// Keller dimension.
    #[arg(long)]
    pub d: Option<usize>,
    /// Mycielski index.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Auto,
    EvenUnion,
    SquareOdd,
    LadderMulticycle,
    Overfull,
    Kempe,
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub construction: ConstructionArg,
    /// Coloring file to start the Kempe search from.
    #[arg(long)]
    pub warm_start: Option<PathBuf>,
    /// Coloring file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON sidecar `{m, n, class, construction, colors}` to write.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum QueenCmd {
    /// Same as the top-level `color`.
    Color(ColorArgs),
    /// Predicted class of Q_{m,n} from the known results.
    Predict {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Proper (and by default total) edge coloring.
    Coloring {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Accept colorings that leave edges uncolored.
        #[arg(long)]
        partial: bool,
        /// Also require exactly this many colors.
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Hamiltonian cycle given as one vertex list.
    Hamcycle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        path: PathBuf,
    },
    /// Hamiltonian path between two 1-based vertices.
    Hampath {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Hamiltonian decomposition: cycles one per line, optional matching as pairs.
    Decomposition {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cycles: PathBuf,
        #[arg(long)]
        matching: Option<PathBuf>,
    },
    /// Clique cover: one clique per line.
    Cover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        /// Read the cover as a Keller clique table of dimension d.
        #[arg(long)]
        keller_d: Option<usize>,
        #[arg(long, value_enum, default_value = "digits", requires = "keller_d")]
        encoding: VertexEncoding,
    },
}

#[derive(Subcommand, Debug)]
pub enum MulticycleCmd {
    /// Derived multicycle of the canonical bishop coloring of B_{m,n}.
    Derive {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// List the cyan bishop edges and their positions.
        #[arg(long)]
        edges: bool,
    },
    /// Chromatic index of a multicycle given by multiplicities or by (m, n).
    Chi {
        /// Comma-separated multiplicities, e.g. 0,0,0,1,2.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["m", "n"])]
        mult: Option<Vec<usize>>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
    },
    /// CSV survey over odd m and odd n >= m.
    Survey(RangeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 3)]
    pub m_min: usize,
    #[arg(long, default_value_t = 9)]
    pub m_max: usize,
    #[arg(long, default_value_t = 3)]
    pub n_min: usize,
    #[arg(long, default_value_t = 39)]
    pub n_max: usize,
    /// CSV file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum MycielskiCmd {
    /// Hamiltonian path in μ(C_n), n odd, between named vertices (x1, y3, z).
    Hampath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search showing μ(C_n), n even, has no x1-z Hamiltonian path.
    Witness {
        #[arg(long)]
        n: usize,
    },
    /// Checks every pair of the Mycielski graph M_k for a Hamiltonian path.
    Hc {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VertexEncoding {
    Digits,
    Int,
}

#[derive(Subcommand, Debug)]
pub enum KellerCmd {
    /// Write G_d in DIMACS format.
    Build {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Explicit Hamiltonian cycle of G_d.
    Hamcycle {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Class-1 edge coloring of G_d.
    Edgecolor {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independence square and the 2^d vertex coloring.
    Square {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independence number.
    Alpha {
        #[arg(long)]
        d: usize,
    },
    /// Double a clique cover of G_d into one of G_{d+1}.
    DoubleCover {
        /// Dimension of the input cover.
        #[arg(long)]
        d: Option<usize>,
        /// Clique table file (index first, then members).
        #[arg(long, conflicts_with = "table")]
        cover: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "digits")]
        encoding: VertexEncoding,
        /// Use a shipped cover table (5, 6 or 7) instead of a file.
        #[arg(long)]
        table: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a Hamiltonian decomposition.
    Decompose {
        #[arg(long)]
        d: usize,
        /// Cycles, one vertex list per line.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Perfect matching (odd degree), one pair per line.
        #[arg(long)]
        matching_out: Option<PathBuf>,
    },
    /// Check a shipped table (1, 5, 6 or 7).
    VerifyFixture {
        #[arg(long)]
        table: u32,
    },
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    /// Conjecture number: 2, 3, 4, 5 or 9.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(["2", "3", "4", "5", "9"]))]
    pub which: String,
    #[command(flatten)]
    pub range: RangeArgs,
    /// Largest Keller dimension (conjecture 9).
    #[arg(long, default_value_t = 7)]
    pub d_max: usize,
    /// Board rows for the criticality check (conjecture 3).
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    /// Board columns for the criticality check (conjecture 3).
    #[arg(long, default_value_t = 13)]
    pub n: usize,
}

/// Options shared by every command.
pub struct Ctx {
    pub json: bool,
    pub long_run: bool,
    pub budget: SearchBudget,
}

/// Error-to-exit-code mapping.
fn exit_code(e: &anyhow::Error) -> u8 {
    use graphcert::Error as E;
    match e.downcast_ref::<E>() {
        Some(E::BudgetExhausted(_)) => 3,
        Some(E::Internal(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        long_run: cli.long_run,
        budget: SearchBudget {
            max_switches: cli.budget_switches,
            max_restarts: cli.restarts,
            seed: cli.seed,
        },
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let res: anyhow::Result<Report> = pool.install(|| commands::run(&ctx, cli.cmd));
    match res {
        Ok(r) => {
            r.print(ctx.json);
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(e) => {
            let code = exit_code(&e);
            if ctx.json {
                println!(
                    "{}",
                    serde_json::json!({ "ok": false, "error": format!("{e:#}"), "exit": code })
                );
            }
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
