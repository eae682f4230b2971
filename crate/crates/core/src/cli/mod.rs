//! JSON documents, reports and the command implementations behind the
//! `hypermorse` binary.

mod args;
pub mod commands;
pub mod document;
pub mod report;

pub use args::{execute, Cli, Command, Format, MorseCommand};
pub use document::{load_hypergraph, load_morphism, HypergraphDocument, LoadedHypergraph, MorphismDocument};
pub use report::{digest, CliError, ExitStatus, Report};
