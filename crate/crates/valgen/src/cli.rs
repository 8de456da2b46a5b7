//! `valgen` subcommands. Exit codes: 0 ok, 2 usage, 3 data.

use std::collections::BTreeMap;
use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use valgen_core::generation::{export_phrases, ExportFormat, Generation};

use crate::config::{ServiceConfig, DEFAULT_BIND};
use crate::service::{GenerateBody, Service, ServiceError};

#[derive(Debug, Parser)]
#[command(
    name = "valgen",
    version,
    about = "Valency-driven noun phrase generator"
)]
pub struct Cli {
    /// Data bundle directory.
    #[arg(long, env = "VALGEN_DATA_DIR", global = true)]
    pub data_dir: Option<PathBuf>,
    /// Log filter, e.g. `info` or `valgen=debug`. RUST_LOG takes precedence.
    #[arg(long, default_value = "warn", global = true)]
    pub log_level: String,
    /// Emit logs as JSON lines.
    #[arg(long, global = true)]
    pub log_json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate phrases for one noun, pattern and package selection.
    Generate(GenerateArgs),
    /// List the languages in the bundle.
    Languages,
    /// List the nouns of a language.
    Nouns {
        #[arg(long)]
        lang: String,
    },
    /// List the structures offered for a noun.
    Structures {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        noun: String,
    },
    /// List the semantic packages offered for one slot of a structure.
    Packages {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        noun: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        slot: String,
    },
    /// Run the HTTP API.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub lang: String,
    #[arg(long)]
    pub noun: String,
    #[arg(long)]
    pub pattern: String,
    /// `slot=package`, repeatable; slot is `a`, `b` or an argument like `Arg1.1`.
    #[arg(long = "package", value_name = "SLOT=ID", value_parser = parse_package)]
    pub packages: Vec<(String, String)>,
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub threshold: Option<f64>,
    /// Fill free adjective positions.
    #[arg(long)]
    pub adjectives: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value = DEFAULT_BIND)]
    pub bind: SocketAddr,
    /// Directory with the web client's static build.
    #[arg(long)]
    pub static_dir: Option<PathBuf>,
    #[arg(long)]
    pub default_limit: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub default_threshold: Option<f64>,
}

fn parse_package(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((slot, id)) if !slot.is_empty() && !id.is_empty() => {
            Ok((slot.to_string(), id.to_string()))
        }
        _ => Err(format!("expected SLOT=ID, got '{s}'")),
    }
}

impl GenerateArgs {
    pub fn body(&self) -> GenerateBody {
        let mut packages: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (slot, id) in &self.packages {
            packages.entry(slot.clone()).or_default().push(id.clone());
        }
        GenerateBody {
            language: self.lang.clone(),
            lemma: self.noun.clone(),
            pattern_id: self.pattern.clone(),
            packages,
            limit: self.limit,
            seed: self.seed,
            compat_threshold: self.threshold,
            include_adjectives: self.adjectives.then_some(true),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Data(_) | CliError::Io(_) => ExitCode::from(3),
        }
    }
}

impl From<ServiceError> for CliError {
    fn from(e: ServiceError) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Data(e.to_string())
        }
    }
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    out.write_all(&serde_json::to_vec(value).expect("output serializes"))?;
    out.write_all(b"\n")?;
    Ok(())
}

fn write_text(out: &mut impl Write, g: &Generation) -> std::io::Result<()> {
    for (i, p) in g.phrases.iter().enumerate() {
        match p.scores.similarity {
            Some(s) => writeln!(out, "{:>4}  {}  ({s:.3})", i + 1, p.text)?,
            None => writeln!(out, "{:>4}  {}", i + 1, p.text)?,
        }
    }
    writeln!(
        out,
        "-- {} generated, {} filtered, {} truncated",
        g.stats.generated, g.stats.filtered, g.stats.truncated
    )
}

fn config(data_dir: Option<PathBuf>) -> Result<ServiceConfig, CliError> {
    data_dir.map(ServiceConfig::new).ok_or_else(|| {
        CliError::Usage("no data directory: pass --data-dir or set VALGEN_DATA_DIR".into())
    })
}

pub fn load(config: ServiceConfig) -> Result<Service, CliError> {
    Service::load(config).map_err(|e| CliError::Data(format!("cannot load data bundle: {e}")))
}

pub fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let mut config = config(cli.data_dir)?;
    match cli.command {
        Command::Serve(args) => {
            config.bind = args.bind;
            config.log_level = cli.log_level;
            if let Some(l) = args.default_limit {
                config.default_limit = l;
            }
            if let Some(t) = args.default_threshold {
                config.default_threshold = t;
            }
            let service = Arc::new(load(config)?);
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(crate::http::serve(service, args.bind, args.static_dir))?;
            Ok(())
        }
        command => run_query(&load(config)?, command, out),
    }
}

/// Every subcommand except `serve`, against an already loaded service.
pub fn run_query(
    service: &Service,
    command: Command,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match command {
        Command::Languages => write_json(out, &service.languages()),
        Command::Nouns { lang } => write_json(out, &service.nouns(&lang)?),
        Command::Structures { lang, noun } => write_json(out, &service.structures(&lang, &noun)?),
        Command::Packages {
            lang,
            noun,
            pattern,
            slot,
        } => write_json(out, &service.packages(&lang, &noun, &pattern, &slot)?),
        Command::Generate(args) => {
            let g = service.generate(&args.body())?;
            match args.format {
                OutputFormat::Json => {
                    out.write_all(&export_phrases(&g.phrases, ExportFormat::Json))?
                }
                OutputFormat::Csv => {
                    out.write_all(&export_phrases(&g.phrases, ExportFormat::Csv))?
                }
                OutputFormat::Text => write_text(out, &g)?,
            }
            Ok(())
        }
        Command::Serve(_) => Err(CliError::Usage("serve needs its own runtime".into())),
    }
}
