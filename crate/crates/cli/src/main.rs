mod commands;
mod output;
mod source;

use clap::{Args, Parser, Subcommand};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;

/// Spectral radius conditions for (a,b)-parity factors.
///
/// Graph arguments accept inline graph6, a file holding one graph6 line or
/// an edge list, or a constructor such as `h:8,1`, `l:13,2`,
/// `clique_join:2,[4,1,1]`, `complete:5`, `cycle:6`, `petersen`.
#[derive(Parser)]
#[command(name = "parfact", version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parity factor decisions
    #[command(subcommand)]
    Factor(FactorCmd),
    /// Spectral radius, spectrum and characteristic polynomial
    #[command(subcommand)]
    Spectral(SpectralCmd),
    /// Print a named graph as graph6
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Computational checks of the main theorem and its lemmas
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Graph source
    #[arg(long, value_name = "SRC")]
    pub graph: Option<String>,
    /// File with one graph6 string or constructor per line
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FactorCmd {
    /// Decide whether the graph has an (a,b)-parity factor
    Check(FactorCheck),
}

#[derive(Args)]
pub struct FactorCheck {
    #[command(flatten)]
    pub input: Input,
    #[arg(short, long)]
    pub a: usize,
    #[arg(short, long)]
    pub b: usize,
    /// Decision procedure
    #[arg(long, default_value = "matching", value_parser = ["lovasz", "matching", "enum"])]
    pub method: String,
    /// On "no", attach a deficiency certificate (S, T) with eta < 0
    #[arg(long)]
    pub certificate: bool,
}

#[derive(Subcommand)]
enum SpectralCmd {
    /// Certified enclosure of the spectral radius
    Radius(SpectralArgs),
    /// All adjacency eigenvalues, descending
    Spectrum(SpectralArgs),
    /// Exact characteristic polynomial and its largest root
    Charpoly(SpectralArgs),
    /// Compare spectral radii, escalating to exact arithmetic on near ties
    Compare(CompareArgs),
}

#[derive(Args)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub input: Input,
    /// Tolerance (default 1e-10 for radius, 1e-12 otherwise)
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: Input,
    /// Reference graph source
    #[arg(long, value_name = "SRC")]
    pub against: String,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Subcommand)]
pub enum ConstructCmd {
    /// K_{a-1} joined with (K_1 + K_{n-a})
    H {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    /// K_s joined with (K_{n-s-3} + 3K_1)
    L {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// K_s joined with a disjoint union of cliques
    CliqueJoin {
        #[arg(long)]
        s: usize,
        /// Clique orders, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Scan the cosparse family of order n against the extremal graph
    Theorem(TheoremArgs),
    /// Check one of the supporting lemmas over a parameter range
    Lemma(LemmaArgs),
}

#[derive(Args)]
pub struct TheoremArgs {
    #[arg(short, long)]
    pub a: usize,
    #[arg(short, long)]
    pub b: usize,
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, default_value = "exhaustive", value_parser = ["exhaustive", "sample"])]
    pub mode: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random graphs drawn in sample mode
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Worker threads (0 = all cores); results do not depend on it
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Args)]
pub struct LemmaArgs {
    #[arg(long, value_parser = ["nofactor", "zhw", "spectral"])]
    pub which: String,
    /// nofactor: a
    #[arg(short, long)]
    pub a: Option<usize>,
    /// nofactor: b
    #[arg(short, long)]
    pub b: Option<usize>,
    /// nofactor: orders to check (comma separated); zhw: the single order
    #[arg(short, long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// zhw: clique size s
    #[arg(short, long)]
    pub s: Option<usize>,
    /// zhw: largest number of cliques
    #[arg(long, default_value_t = 4)]
    pub q_max: usize,
    /// spectral: s range, inclusive
    #[arg(long, default_value = "1..8", value_name = "LO..HI")]
    pub s_range: String,
    /// spectral: n range, inclusive
    #[arg(long, default_value = "4..72", value_name = "LO..HI")]
    pub n_range: String,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Factor(FactorCmd::Check(args)) => commands::factor_check(&args, cli.format),
        Cmd::Spectral(SpectralCmd::Radius(args)) => commands::spectral(&args, commands::SpectralOp::Radius, cli.format),
        Cmd::Spectral(SpectralCmd::Spectrum(args)) => commands::spectral(&args, commands::SpectralOp::Spectrum, cli.format),
        Cmd::Spectral(SpectralCmd::Charpoly(args)) => commands::spectral(&args, commands::SpectralOp::Charpoly, cli.format),
        Cmd::Spectral(SpectralCmd::Compare(args)) => commands::compare(&args, cli.format),
        Cmd::Construct(c) => commands::construct(&c, cli.format),
        Cmd::Verify(VerifyCmd::Theorem(args)) => commands::theorem(&args, cli.format),
        Cmd::Verify(VerifyCmd::Lemma(args)) => commands::lemma(&args, cli.format),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("parfact: {e}");
            ExitCode::from(e.code())
        }
    }
}
