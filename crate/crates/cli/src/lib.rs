//! The `avoid` command-line tool: graph input, command dispatch and output.

pub mod commands;
pub mod config;
pub mod dimacs;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{execute, Outcome, Report};
pub use config::{Command, Format, GenSpec, RunConfig};
pub use dimacs::{parse_graph, parse_graph_bytes, to_dimacs, DimacsError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code: 0 on success, 1 on usage or input errors, 2 when `--check` finds a
/// disagreement.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if shown {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return if shown { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return EXIT_INPUT;
        }
    };
    let written = match cfg.format {
        Format::Plain => outcome.lines.iter().try_for_each(|l| writeln!(out, "{l}")),
        Format::Json => serde_json::to_writer_pretty(&mut *out, &outcome.report)
            .map_err(std::io::Error::other)
            .and_then(|_| writeln!(out)),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_INPUT;
    }
    if outcome.failures.is_empty() {
        EXIT_OK
    } else {
        for f in &outcome.failures {
            let _ = writeln!(err, "check failed: {f}");
        }
        EXIT_CHECK
    }
}
