//! `wtaut`: semigroups, Weierstrass cycle classes, Krichever pullbacks and
//! Hilbert-function bounds from the command line.
//!
//! Exit codes: 0 success, 2 usage, 3 data, 4 resource.

mod commands;
mod config;
mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use wtaut::semigroups::DEFAULT_MAX_GENUS;
use wtaut::{MultiPoly, NumericalSemigroup, Partition};

use crate::commands::Selector;
use crate::config::{ConfigFile, Format, GenusRange, Method, ModeArg, RunConfig, SchurKind, MAX_CUTOFF};
use crate::output::Rendered;

/// An error with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError { code: 4, message: message.into() }
    }
}

impl From<wtaut::Error> for CliError {
    fn from(e: wtaut::Error) -> Self {
        use wtaut::Error::*;
        match e {
            InvalidGenus(_) | Parse(_) => CliError::usage(e.to_string()),
            GenusTooLarge { .. } => CliError::resource(format!("{e}; raise it with WTAUT_MAX_GENUS")),
            _ => CliError::data(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "wtaut", version, about = "Weierstrass cycles and the tautological ring of pointed curves")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
struct Common {
    /// Genus, or an inclusive range such as 1..4
    #[arg(long, global = true, allow_hyphen_values = true)]
    genus: Option<String>,

    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Cohen-Macaulay curves, or smooth curves with Mumford's relation imposed
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,

    /// Use the unshifted argument convention for cycle classes
    #[arg(long, global = true)]
    unshifted: bool,

    /// Use the + sign for even smooth power sums
    #[arg(long = "paper-sign", global = true)]
    paper_sign: bool,

    /// Replace kappa0 by 2g-2 in pushforwards
    #[arg(long = "kappa0-substitute", global = true)]
    kappa0_substitute: bool,

    /// Write here instead of stdout; ranges write one file per genus
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// key=value file supplying defaults for any long option
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Largest genus accepted
    #[arg(long = "max-genus", global = true, env = "WTAUT_MAX_GENUS")]
    max_genus: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// List numerical semigroups with their sequences and partitions
    Semigroups,
    /// Weierstrass or virtual cycle classes and their pushforwards
    Class {
        /// Gap list of a numerical semigroup, e.g. 1,3
        #[arg(long)]
        gaps: Option<String>,
        /// Drive the class by a partition instead
        #[arg(long, conflicts_with = "gaps")]
        partition: Option<String>,
    },
    /// Pullback of a Schubert class under the Krichever map
    Pullback {
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Pullback of a power sum
    Psum {
        /// A single degree s; otherwise 1..=max-degree
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long = "max-degree")]
        max_degree: Option<u32>,
        /// Divide by s!
        #[arg(long = "chern-character")]
        chern_character: bool,
    },
    /// Relation generators of the tautological ring up to a weight
    Relations {
        #[arg(long = "max-weight", visible_alias = "max-degree")]
        max_weight: Option<u32>,
    },
    /// Lower and upper Hilbert-function bounds
    Hilbert {
        #[arg(long = "max-degree", visible_alias = "max-weight")]
        max_degree: Option<u32>,
    },
    /// Evaluate a shifted or factorial Schur polynomial
    SchurEval {
        #[arg(long)]
        partition: Option<String>,
        /// Comma-separated arguments; each may be a polynomial
        #[arg(long, allow_hyphen_values = true)]
        args: Option<String>,
        #[arg(long, value_enum)]
        kind: Option<SchurKind>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Semigroups => "semigroups",
            Command::Class { .. } => "class",
            Command::Pullback { .. } => "pullback",
            Command::Psum { .. } => "psum",
            Command::Relations { .. } => "relations",
            Command::Hilbert { .. } => "hilbert",
            Command::SchurEval { .. } => "schur-eval",
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse::<Partition>().map_err(|e| CliError::usage(format!("--partition: {e}")))
}

fn parse_gaps(s: &str) -> Result<NumericalSemigroup, CliError> {
    let gaps = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| CliError::usage(format!("--gaps: '{t}' is not a positive integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NumericalSemigroup::from_gaps(gaps)?)
}

fn base_config(cli: &Cli, file: &ConfigFile) -> Result<RunConfig, CliError> {
    let c = &cli.common;
    let genus = file.pick(c.genus.clone(), "genus")?.map(|g| g.parse::<GenusRange>()).transpose()?;
    Ok(RunConfig {
        command: cli.command.name(),
        genus,
        max_genus: file.pick(c.max_genus, "max-genus")?.unwrap_or(DEFAULT_MAX_GENUS),
        cutoff: None,
        mode: file.pick_enum(c.mode, "mode")?.unwrap_or_default(),
        format: file.pick_enum(c.format, "format")?.unwrap_or_default(),
        unshifted: file.flag(c.unshifted, "unshifted")?,
        paper_sign: file.flag(c.paper_sign, "paper-sign")?,
        kappa0_substitute: file.flag(c.kappa0_substitute, "kappa0-substitute")?,
        output: file.pick(c.output.clone(), "output")?,
        selector: BTreeMap::new(),
    })
}

/// Runs `f` for every genus in the range, in parallel, in genus order.
fn per_genus<F>(cfg: &RunConfig, min_genus: u32, f: F) -> Result<Vec<Rendered>, CliError>
where
    F: Fn(u32) -> Result<Rendered, CliError> + Sync + Send,
{
    let range = cfg.genera()?;
    if range.start < min_genus {
        return Err(CliError::usage(format!("genus must be at least {min_genus} for {}", cfg.command)));
    }
    range.iter().collect::<Vec<_>>().into_par_iter().map(f).collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.common.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let mut cfg = base_config(&cli, &file)?;
    let results = match &cli.command {
        Command::Semigroups => per_genus(&cfg, 0, |g| commands::semigroups(&cfg, g))?,
        Command::Class { gaps, partition } => {
            let gaps = file.pick(gaps.clone(), "gaps")?;
            let partition = if gaps.is_some() { None } else { file.pick(partition.clone(), "partition")? };
            let selector = match (&gaps, &partition) {
                (Some(g), _) => {
                    cfg.selector.insert("gaps", g.clone());
                    Selector::Gaps(parse_gaps(g)?)
                }
                (None, Some(p)) => {
                    cfg.selector.insert("partition", p.clone());
                    Selector::Partition(parse_partition(p)?)
                }
                (None, None) => Selector::AllSemigroups,
            };
            if let (Selector::Gaps(h), None) = (&selector, cfg.genus) {
                cfg.genus = Some(GenusRange { start: h.genus(), end: h.genus() });
            }
            per_genus(&cfg, 1, |g| commands::class(&cfg, g, &selector))?
        }
        Command::Pullback { partition, method } => {
            let p = file.pick(partition.clone(), "partition")?.ok_or_else(|| CliError::usage("--partition is required"))?;
            let mu = parse_partition(&p)?;
            let method = file.pick_enum(*method, "method")?.unwrap_or_default();
            cfg.selector.insert("partition", p);
            cfg.selector.insert("method", format!("{method:?}").to_lowercase());
            per_genus(&cfg, 1, |g| commands::pullback(&cfg, g, &mu, method))?
        }
        Command::Psum { degree, max_degree, chern_character } => {
            let chern = file.flag(*chern_character, "chern-character")?;
            let degrees: Vec<u32> = match file.pick(*degree, "degree")? {
                Some(0) => return Err(CliError::usage("--degree must be at least 1")),
                Some(s) if s > MAX_CUTOFF => {
                    return Err(CliError::resource(format!("--degree {s} is beyond the supported range; use {MAX_CUTOFF} or lower")))
                }
                Some(s) => {
                    cfg.selector.insert("degree", s.to_string());
                    vec![s]
                }
                None => {
                    cfg.cutoff = file.pick(*max_degree, "max-degree")?;
                    (1..=cfg.cutoff("max-degree")?).collect()
                }
            };
            if chern {
                cfg.selector.insert("chern-character", "true".into());
            }
            per_genus(&cfg, 1, |g| commands::psum(&cfg, g, &degrees, chern))?
        }
        Command::Relations { max_weight } => {
            cfg.cutoff = file.pick(*max_weight, "max-weight")?.or(file.pick(None, "max-degree")?);
            let d = cfg.cutoff("max-weight")?;
            if cfg.mode == ModeArg::Smooth {
                return Err(CliError::usage("relations are defined on the Cohen-Macaulay space; drop --mode smooth"));
            }
            per_genus(&cfg, 1, |g| commands::relations(g, d))?
        }
        Command::Hilbert { max_degree } => {
            cfg.cutoff = file.pick(*max_degree, "max-degree")?.or(file.pick(None, "max-weight")?);
            let d = cfg.cutoff("max-degree")?;
            if cfg.mode == ModeArg::Smooth {
                return Err(CliError::usage("hilbert bounds are defined on the Cohen-Macaulay space; drop --mode smooth"));
            }
            per_genus(&cfg, 0, |g| commands::hilbert(g, d))?
        }
        Command::SchurEval { partition, args, kind } => {
            let p = file.pick(partition.clone(), "partition")?.ok_or_else(|| CliError::usage("--partition is required"))?;
            let a = file.pick(args.clone(), "args")?.ok_or_else(|| CliError::usage("--args is required"))?;
            let mu = parse_partition(&p)?;
            let values = a
                .split(',')
                .map(|t| t.parse::<MultiPoly>().map_err(|e| CliError::usage(format!("--args: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let kind = file.pick_enum(*kind, "kind")?.unwrap_or_default();
            cfg.selector.insert("partition", p);
            cfg.selector.insert("args", a);
            vec![commands::schur_eval(&mu, &values, kind)?]
        }
    };
    output::emit(&cfg, &results)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
