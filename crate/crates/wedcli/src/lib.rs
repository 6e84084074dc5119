//! Command-line front end for the bounded edit-distance pipelines.
//!
//! The `wed` binary reads sequences, forests, or bracket strings from
//! files, runs the matching kernelization pipeline, and prints one
//! `distance` line per instance. Batches fan out across a thread pool
//! when the `parallel` feature is on (the default) and fall back to a
//! plain loop otherwise; outputs keep the list order either way.

mod batch;
mod cli;
mod exec;
mod io;

pub use batch::{run_batch_with_mode, BatchMode};
pub use cli::{Cli, Command, DyckArgs, StringArgs, TreeArgs, ValidateArgs};
pub use exec::execute;
pub use io::{read_sequence, render_sequence, token_mode, TokenMode};
