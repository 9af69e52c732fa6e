//! The `lattle` command line.
//!
//! Exit codes: 0 success (including a search that finds nothing), 1 usage,
//! 2 unreadable or malformed input, 3 input that is not a lattice, 4 a law
//! of the catalog fails.

mod args;
mod commands;
mod input;
mod render;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, CorpusAction, Format, Mode, Universe};
pub use input::{load, CliError};
pub use render::{dot, Style};
pub use report::{AnalysisReport, ElementRow, FilterRow, LawSummary, StoneanSummary};

/// Runs one invocation; `argv[0]` is the program name. Returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_style(argv, Style::from_env(), out, err)
}

pub fn run_with_style<I, T>(argv: I, style: Style, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            return if informational {
                let _ = out.write_all(text.as_bytes());
                0
            } else {
                let _ = err.write_all(text.as_bytes());
                1
            };
        }
    };
    let result = match &cli.command {
        Command::Analyze { input } => commands::analyze(&cli, input, style),
        Command::Laws { inputs, laws } => commands::laws(&cli, inputs, laws, style),
        Command::Search { target } => commands::search(&cli, target, style),
        Command::Corpus { action } => match action {
            CorpusAction::List => commands::corpus_list(&cli),
            CorpusAction::Show { key } => commands::corpus_show(&cli, key),
            CorpusAction::Export { key, path } => commands::corpus_export(key, path),
        },
    };
    match result {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).is_err() {
                return 2;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "lattle: {e}");
            e.exit_code()
        }
    }
}
