use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod corpus;

use commands::{Context, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "reedylab",
    version,
    about = "Reedy decompositions and quasi-hereditary structures of finite-dimensional algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an algebra file from a quiver presentation.
    Build {
        quiver: PathBuf,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Vertex degrees, e.g. `a=0,b=1`.
        #[arg(long)]
        degrees: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a constructor.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a property of an algebra or of Reedy data.
    Verify(VerifyArgs),
    /// Search for Reedy structures over the idempotents of an algebra file.
    Search(SearchArgs),
    /// Run the fixture corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Truncated simplex category algebra with injections and surjections.
    Simplex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Full matrix algebra with its diagonal idempotents.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Glue a raising algebra and a lowering algebra over shared idempotents.
    Dualext {
        plus: PathBuf,
        minus: PathBuf,
        /// Overrides the degrees stored in both files.
        #[arg(long)]
        degrees: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Tensor product of two algebras, and of their Reedy data if given.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        /// Reedy files for the two factors, in order.
        #[arg(long, num_args = 2)]
        reedy: Option<Vec<PathBuf>>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Directedness and the block factorization of `A` through `A+ (x) A-`.
    Reedy,
    /// Heredity chain in the degree order.
    Qh,
    /// `A-` as an exact Borel subalgebra.
    Borel,
    /// `A+` as a delta subalgebra.
    Delta,
    /// Reedy verdict by three independent routes.
    Characterizations,
    /// Corner, quotient and multiplication map at each cut (or `--cut`).
    Recursive,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub what: Check,
    /// Algebra file, then Reedy file; a lone Reedy file naming its algebra also works.
    #[arg(required = true, num_args = 1..=2)]
    pub files: Vec<PathBuf>,
    #[arg(long)]
    pub cut: Option<usize>,
    /// Weight levels overriding the frame degrees.
    #[arg(long)]
    pub order: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Heuristic,
    Exhaustive,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    pub algebra: PathBuf,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub mode: Mode,
    #[arg(long)]
    pub max_levels: Option<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    /// Run every manifest entry and compare with its expected outcome.
    Run {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
    },
}

fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("REEDYLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("REEDYLAB_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("REEDYLAB_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let out = commands::run(&cli.command, &Context::cwd());
    emit(&out)
}

fn emit(out: &Outcome) -> ExitCode {
    if let Some(text) = &out.stdout {
        print!("{text}");
    }
    if let Some(msg) = &out.message {
        eprintln!("{msg}");
    }
    ExitCode::from(out.code)
}
