mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use chainmatch::oracle::OracleConfig;

use crate::output::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "chainmatch", version, about = "Exact counts of non-crossing matchings on chain-like point sets")]
struct Cli {
    /// TOML file with oracle caps and thread count.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a point set as JSON.
    Gen(FamilyArgs),
    /// Census of matchings of a point set.
    Count(CountArgs),
    /// Counting sequences from the recursions.
    Recurse(RecurseArgs),
    /// Growth constants, exact and as floats.
    Growth(GrowthArgs),
    /// Per-r growth table for chains with or without corners.
    Table(TableArgs),
    /// Perfect matchings of double chains.
    DoublePm(DoublePmArgs),
    /// Build and verify a sub-eigenvector certificate.
    Subeig(SubeigArgs),
    /// Compare recursions against the oracle over a size grid.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Chain,
    Zigzag,
    Rchain,
    DoubleChain,
    DoubleZigzag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Down,
    Up,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    /// Number of points (chains, zigzags, doubles).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    parity: ParityArg,
    #[arg(long, value_enum, default_value_t = DirectionArg::Down)]
    direction: DirectionArg,
    /// Arc length of an r-chain.
    #[arg(long)]
    r: Option<usize>,
    /// Number of arcs of an r-chain.
    #[arg(long)]
    k: Option<usize>,
    /// Keep the corner points of an r-chain.
    #[arg(long)]
    corners: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    All,
    Perfect,
    DownFree,
    UpFree,
    RhoDownFree,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "family"])))]
pub struct CountArgs {
    /// Point-set JSON file, as written by `gen`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    set: FamilyArgs,
    #[arg(long, value_enum, default_value_t = KindArg::DownFree)]
    kind: KindArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceFamily {
    Zigzag,
    Rchain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Dfm,
    Am,
}

#[derive(Args, Debug)]
pub struct RecurseArgs {
    #[arg(long, value_enum)]
    family: SequenceFamily,
    #[arg(long)]
    kmax: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    corners: bool,
    /// Zigzag only: down-free or all matchings.
    #[arg(long, value_enum, default_value_t = VariantArg::Dfm)]
    variant: VariantArg,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    /// Arc length; without it the zigzag constants are reported.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    corners: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 12)]
    max_r: usize,
    #[arg(long)]
    corners: bool,
}

#[derive(Args, Debug)]
pub struct DoublePmArgs {
    /// Largest even size.
    #[arg(long)]
    max_n: usize,
}

#[derive(Args, Debug)]
pub struct SubeigArgs {
    #[arg(long)]
    r: usize,
    /// Positive rational such as 1/100.
    #[arg(long)]
    epsilon: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFamily {
    Zigzag,
    Rchain,
    Corners,
    DoubleChain,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    family: VerifyFamily,
    #[arg(long, default_value_t = 12)]
    max_points: usize,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    max_points: Option<usize>,
    max_points_rho: Option<usize>,
    threads: Option<usize>,
}

fn load_config(path: Option<&PathBuf>) -> Result<OracleConfig> {
    let mut oracle = OracleConfig::default();
    let Some(path) = path else { return Ok(oracle) };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cfg: Config = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if let Some(v) = cfg.max_points {
        oracle.max_points = v;
    }
    if let Some(v) = cfg.max_points_rho {
        oracle.max_points_rho = v;
    }
    if let Some(t) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(oracle)
}

fn run(cli: Cli) -> Result<Report> {
    let oracle = load_config(cli.config.as_ref())?;
    match cli.command {
        Command::Gen(a) => commands::gen(&a),
        Command::Count(a) => commands::count(&a, &oracle),
        Command::Recurse(a) => commands::recurse(&a),
        Command::Growth(a) => commands::growth(&a),
        Command::Table(a) => commands::table(&a),
        Command::DoublePm(a) => commands::double_pm(&a),
        Command::Subeig(a) => commands::subeig(&a),
        Command::Verify(a) => commands::verify(&a, &oracle),
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<serde_json::Error>()
                .is_some_and(|j| j.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe))
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // help and version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or("invalid arguments").to_string();
            eprintln!("{}", one_line(&first));
            return ExitCode::from(2);
        }
    };
    let format = cli.format;
    match run(cli).and_then(|r| r.emit(format)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", one_line(&format!("{e:#}")));
            ExitCode::FAILURE
        }
    }
}
