//! `kisin`: command-line front end for semi-module strata computations.

mod commands;
mod config;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Which;
use crate::config::{parse_blocks, parse_list, BSpec, CarusoSpec, InstanceConfig};
use crate::error::{CliError, CliResult};
use crate::report::{Report, SCHEMA};

#[derive(Parser)]
#[command(name = "kisin", version, about = "Semi-module strata of Kisin varieties for simple b")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fixed point and alcove reduction of the Frobenius datum.
    NormalForm(InstanceArgs),
    /// The set S with lambda^natural, dimensions and singleton verdicts.
    Strata(InstanceArgs),
    /// Coroot-curve graph on S and the pi_0 report.
    Graph(InstanceArgs),
    /// Unique zero-dimensional stratum in the d-copy group.
    Multicopy(InstanceArgs),
    /// Explicit chains in S for a single GL_3 block.
    ChainGl3(InstanceArgs),
    /// Points of the variety over a small field, labelled by stratum.
    OracleCount(InstanceArgs),
    /// Recompute one of the two disconnected examples and compare.
    VerifyCounterexample(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct InstanceArgs {
    /// JSON instance file, or a previous report.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    /// Frobenius scales per block, e.g. `3,1`.
    #[arg(long)]
    eps: Option<String>,
    /// Caruso parameter m.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["tau", "w"])]
    m: Option<i64>,
    /// Translation part, e.g. `2,0,1;0,0,1`.
    #[arg(long, allow_hyphen_values = true, requires = "w")]
    tau: Option<String>,
    /// 1-based permutation images per block, e.g. `2,3,1;1,2,3`.
    #[arg(long, requires = "tau")]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    field_deg: Option<u32>,
    #[arg(long = "box")]
    box_bound: Option<i64>,
    /// Chain start for `chain-gl3`.
    #[arg(long, allow_hyphen_values = true)]
    from: Option<String>,
    /// Chain end for `chain-gl3`.
    #[arg(long, allow_hyphen_values = true)]
    to: Option<String>,
    /// Move an explicit datum into the fundamental alcove first.
    #[arg(long)]
    alcove_reduce: bool,
    #[arg(long, value_enum, default_value = "json")]
    out: OutFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    which: Which,
    #[arg(long, default_value_t = 3)]
    p: i64,
}

impl InstanceArgs {
    fn resolve(&self) -> CliResult<InstanceConfig> {
        let mut cfg = match &self.config {
            Some(path) => config::load(path)?,
            None => InstanceConfig::default(),
        };
        cfg.p = self.p.or(cfg.p);
        cfg.n = self.n.or(cfg.n);
        cfg.f = self.f.or(cfg.f);
        cfg.d = self.d.or(cfg.d);
        cfg.field_deg = self.field_deg.or(cfg.field_deg);
        cfg.box_bound = self.box_bound.or(cfg.box_bound);
        cfg.alcove_reduce |= self.alcove_reduce;
        if let Some(s) = &self.eps {
            cfg.eps = Some(parse_list(s)?);
        }
        if let Some(m) = self.m {
            cfg.b = Some(BSpec::Caruso { caruso: CarusoSpec { m } });
        }
        if let (Some(tau), Some(w)) = (&self.tau, &self.w) {
            cfg.b = Some(BSpec::Explicit { tau: parse_blocks(tau)?, w: parse_blocks(w)? });
        }
        if let Some(s) = &self.mu {
            cfg.mu = Some(parse_blocks(s)?);
        }
        if let Some(s) = &self.from {
            cfg.from = Some(parse_blocks(s)?);
        }
        if let Some(s) = &self.to {
            cfg.to = Some(parse_blocks(s)?);
        }
        Ok(cfg)
    }
}

fn emit_json(command: &str, config: &InstanceConfig, result: serde_json::Value) -> CliResult<()> {
    let report = Report { schema: SCHEMA, command, config, result };
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let (name, args) = match &cli.command {
        Command::VerifyCounterexample(v) => {
            let (cfg, value, matched) = commands::verify(v.which, v.p)?;
            emit_json("verify-counterexample", &cfg, value)?;
            return if matched { Ok(()) } else { Err(CliError::Mismatch("computed strata differ from the stored answer".into())) };
        }
        Command::NormalForm(a) => ("normal-form", a),
        Command::Strata(a) => ("strata", a),
        Command::Graph(a) => ("graph", a),
        Command::Multicopy(a) => ("multicopy", a),
        Command::ChainGl3(a) => ("chain-gl3", a),
        Command::OracleCount(a) => ("oracle-count", a),
    };
    let cfg = args.resolve()?;
    if args.out == OutFormat::Dot && name != "graph" {
        return Err(CliError::Config(format!("--out dot is only available for graph, not {name}")));
    }
    let value = match &cli.command {
        Command::NormalForm(_) => commands::normal_form(&cfg)?,
        Command::Strata(_) => commands::strata(&cfg)?,
        Command::Graph(_) => {
            let (value, dot) = commands::graph(&cfg)?;
            if args.out == OutFormat::Dot {
                print!("{dot}");
                return Ok(());
            }
            value
        }
        Command::Multicopy(_) => commands::multicopy(&cfg)?,
        Command::ChainGl3(_) => commands::chain(&cfg)?,
        Command::OracleCount(_) => commands::oracle_count(&cfg)?,
        Command::VerifyCounterexample(_) => unreachable!("handled above"),
    };
    emit_json(name, &cfg, value)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
