//! Command-line arguments and dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};

use crate::chains::{CoeffSpec, HomologyTarget};
use crate::morphisms::InducedTarget;
use crate::morse::ExtensionConfig;

use super::commands::{self, ComplexMode, MorseAction, MorseHost, Outcome};
use super::document::{load_hypergraph, load_morphism, read_input};
use super::report::{digest, CliError, ExitStatus, Report};

#[derive(Debug, Parser)]
#[command(name = "hypermorse", version, about = "Discrete Morse theory and embedded homology of hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, ClapArgs)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add a `timestamp` field (seconds since the Unix epoch) to the report.
    #[arg(long, global = true)]
    pub timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the associated (Δℋ) or lower-associated (δℋ) simplicial complex.
    Complex {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Assoc)]
        mode: ModeArg,
    },
    /// Betti numbers and torsion.
    Homology {
        file: PathBuf,
        /// z, q or zp:<p>.
        #[arg(long, default_value = "z")]
        coeff: CoeffSpec,
        #[arg(long, value_enum, default_value_t = WhichArg::Embedded)]
        which: WhichArg,
    },
    /// Discrete Morse function analysis; the document must carry a `morse` block.
    Morse {
        #[command(subcommand)]
        action: MorseCommand,
    },
    /// Homology maps induced by a hypergraph morphism (field coefficients).
    Map {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = InducedArg::All)]
        induced: InducedArg,
        /// q or zp:<p>.
        #[arg(long, default_value = "q")]
        coeff: CoeffSpec,
        /// Also verify the commuting diagram relating the three maps.
        #[arg(long)]
        check_diagram: bool,
    },
    /// Cells critical on ℋ but not on Δℋ, for values given on all of Δℋ.
    Discrepancy { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum MorseCommand {
    /// Validate the Morse conditions.
    Check(MorseArgs),
    /// Critical hyperedges with witnesses for the others.
    Critical(MorseArgs),
    /// Gradient pairs, properness, acyclicity and the matrices of R(V).
    Gradient(MorseArgs),
    /// Try to extend the function from ℋ to Δℋ.
    Extend {
        file: PathBuf,
        /// Fresh grid levels per gap (default: number of unknown cells).
        #[arg(long)]
        grid: Option<usize>,
    },
}

#[derive(Debug, ClapArgs)]
pub struct MorseArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = HostArg::Hyper)]
    pub on: HostArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Assoc,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Embedded,
    Assoc,
    Lower,
    Inf,
    Sup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HostArg {
    Hyper,
    Assoc,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InducedArg {
    Lower,
    Assoc,
    Embedded,
    All,
}

impl From<WhichArg> for HomologyTarget {
    fn from(w: WhichArg) -> Self {
        match w {
            WhichArg::Embedded => HomologyTarget::Embedded,
            WhichArg::Assoc => HomologyTarget::Assoc,
            WhichArg::Lower => HomologyTarget::Lower,
            WhichArg::Inf => HomologyTarget::Inf,
            WhichArg::Sup => HomologyTarget::Sup,
        }
    }
}

impl From<HostArg> for MorseHost {
    fn from(h: HostArg) -> Self {
        match h {
            HostArg::Hyper => MorseHost::Hyper,
            HostArg::Assoc => MorseHost::Assoc,
            HostArg::Lower => MorseHost::Lower,
        }
    }
}

impl InducedArg {
    fn targets(self) -> Vec<InducedTarget> {
        match self {
            InducedArg::Lower => vec![InducedTarget::Lower],
            InducedArg::Assoc => vec![InducedTarget::Assoc],
            InducedArg::Embedded => vec![InducedTarget::Embedded],
            InducedArg::All => InducedTarget::ALL.to_vec(),
        }
    }
}

struct Run {
    command: &'static str,
    inputs: Vec<Vec<u8>>,
    coeff: Option<CoeffSpec>,
    warnings: Vec<String>,
    outcome: Outcome,
}

fn hypergraph_run(
    command: &'static str,
    file: &Path,
    coeff: Option<CoeffSpec>,
    body: impl FnOnce(&super::document::LoadedHypergraph) -> Result<Outcome, CliError>,
) -> Result<Run, CliError> {
    let bytes = read_input(file)?;
    let loaded = load_hypergraph(&bytes)?;
    let outcome = body(&loaded)?;
    Ok(Run { command, inputs: vec![bytes], coeff, warnings: loaded.warnings.clone(), outcome })
}

fn dispatch(command: &Command) -> Result<Run, CliError> {
    match command {
        Command::Complex { file, mode } => hypergraph_run("complex", file, None, |l| {
            let mode = match mode {
                ModeArg::Assoc => ComplexMode::Assoc,
                ModeArg::Lower => ComplexMode::Lower,
            };
            Ok(commands::complex(l, mode).into())
        }),
        Command::Homology { file, coeff, which } => hypergraph_run("homology", file, Some(*coeff), |l| {
            Ok(commands::homology(&l.hypergraph, *coeff, (*which).into())?.into())
        }),
        Command::Morse { action } => {
            let (name, file, action, on, grid) = match action {
                MorseCommand::Check(a) => ("morse check", &a.file, MorseAction::Check, a.on, None),
                MorseCommand::Critical(a) => ("morse critical", &a.file, MorseAction::Critical, a.on, None),
                MorseCommand::Gradient(a) => ("morse gradient", &a.file, MorseAction::Gradient, a.on, None),
                MorseCommand::Extend { file, grid } => {
                    ("morse extend", file, MorseAction::Extend, HostArg::Hyper, *grid)
                }
            };
            let config = ExtensionConfig { grid_levels: grid, ..ExtensionConfig::default() };
            hypergraph_run(name, file, None, |l| Ok(commands::morse(l, action, on.into(), &config)?))
        }
        Command::Map { file, induced, coeff, check_diagram } => {
            let loaded = load_morphism(file)?.map_err(|e| CliError::new(ExitStatus::InvalidMorphism, e))?;
            let result = commands::map(&loaded.morphism, &induced.targets(), *coeff, *check_diagram)?;
            Ok(Run {
                command: "map",
                inputs: loaded.inputs,
                coeff: Some(*coeff),
                warnings: loaded.warnings,
                outcome: result.into(),
            })
        }
        Command::Discrepancy { file } => {
            hypergraph_run("discrepancy", file, None, |l| Ok(commands::discrepancy(l)?.into()))
        }
    }
}

/// Runs a parsed command line, writing the report to `out` and diagnostics to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus {
    match dispatch(&cli.command) {
        Ok(run) => {
            let timestamp =
                cli.output.timestamp.then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
            let report = Report {
                command: run.command.to_string(),
                input_sha256: digest(&run.inputs),
                coeff: run.coeff,
                result: run.outcome.result,
                warnings: run.warnings,
                timestamp,
            };
            let text = match cli.output.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return ExitStatus::Internal;
            }
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            run.outcome.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.error);
            e.status
        }
    }
}
