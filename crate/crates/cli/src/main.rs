use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graded_cli::{
    cmd_bfile, cmd_cache_inspect, cmd_cache_rebuild, cmd_classify, cmd_count, cmd_crosscheck, CacheConfig, CliError,
    FileConfig, Format, Kind, Method, RunConfig, Session, Target, DEFAULT_N_MAX,
};

/// Count graded posets and related families by transfer matrices, closed
/// forms, substitution, or brute-force enumeration.
#[derive(Parser)]
#[command(name = "graded", version)]
struct Cli {
    /// TOML file supplying defaults for any flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory holding the enumeration cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the enumeration cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct SeriesArgs {
    /// all_posets, weakly_graded, graded, graded_semiorder, graded_interval,
    /// graded_31_avoiding, interval_order, semiorder, or weakly_graded_ranked.
    #[arg(long)]
    family: Option<String>,
    /// labeled_egf, unlabeled_ogf, or seed_egf.
    #[arg(long)]
    kind: Option<String>,
    /// transfer, closed_form, oracle, or trictionary-from:<kind>.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Restrict to posets of exactly this many ranks.
    #[arg(long)]
    height: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the counts for n = 0..=n_max.
    Count {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        n_min: Option<usize>,
        /// table, json, or bfile.
        #[arg(long)]
        format: Option<String>,
    },
    /// Compare every available method against each other and the reference values.
    Crosscheck {
        /// Families to check; all when omitted.
        #[arg(long)]
        family: Vec<String>,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Write `index value` lines for n_min..=n_max.
    Bfile {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        n_min: Option<usize>,
        /// Index printed for n_min; defaults to n_min.
        #[arg(long)]
        offset: Option<usize>,
    },
    /// Inspect or rebuild the enumeration cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Describe one poset given in the text format.
    Classify { file: PathBuf },
}

#[derive(Subcommand)]
enum CacheAction {
    Inspect {
        #[arg(long, default_value = "table")]
        format: String,
    },
    Rebuild {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
}

fn run_config(
    file: &FileConfig,
    args: SeriesArgs,
    n_min: Option<usize>,
    format: Option<String>,
    offset: Option<usize>,
) -> Result<RunConfig, CliError> {
    let pick = |flag: Option<String>, fallback: &Option<String>, name: &str| {
        flag.or_else(|| fallback.clone())
            .ok_or_else(|| CliError::Config(format!("--{name} is required")))
    };
    let target: Target = pick(args.family, &file.family, "family")?.parse()?;
    let kind: Kind = pick(args.kind, &file.kind, "kind")?.parse()?;
    let method: Method = pick(args.method, &file.method, "method")?.parse()?;
    let format: Format = format
        .or_else(|| file.format.clone())
        .unwrap_or_else(|| "table".into())
        .parse()?;
    Ok(RunConfig {
        target,
        kind,
        method,
        n_min: n_min.or(file.n_min).unwrap_or(0),
        n_max: args.n_max.or(file.n_max).unwrap_or(DEFAULT_N_MAX),
        height: args.height.or(file.height),
        format,
        offset: offset.or(file.offset),
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let cache = CacheConfig::resolve(
        cli.cache_dir.or_else(|| file.cache_dir.clone()),
        !(cli.no_cache || file.no_cache.unwrap_or(false)),
    );
    let mut session = Session::new(cache);
    match cli.command {
        Command::Count { series, n_min, format } => {
            let config = run_config(&file, series, n_min, format, None)?;
            cmd_count(&mut session, &config)
        }
        Command::Bfile { series, n_min, offset } => {
            let config = run_config(&file, series, n_min, Some("bfile".into()), offset)?;
            cmd_bfile(&mut session, &config)
        }
        Command::Crosscheck { family, n_max } => {
            let targets = if family.is_empty() {
                Target::all()
            } else {
                family.iter().map(|f| f.parse()).collect::<Result<Vec<Target>, _>>()?
            };
            cmd_crosscheck(&mut session, &targets, n_max.or(file.n_max).unwrap_or(DEFAULT_N_MAX))
        }
        Command::Cache {
            action: CacheAction::Inspect { format },
        } => match format.as_str() {
            "table" => cmd_cache_inspect(&mut session, false),
            "json" => cmd_cache_inspect(&mut session, true),
            other => Err(CliError::Config(format!(
                "unknown format {other:?} (expected table or json)"
            ))),
        },
        Command::Cache {
            action: CacheAction::Rebuild { n_max },
        } => cmd_cache_rebuild(&mut session, n_max),
        Command::Classify { file: path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            cmd_classify(&text)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch { report }) => {
            print!("{report}");
            eprintln!("error: cross-check found mismatches");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
