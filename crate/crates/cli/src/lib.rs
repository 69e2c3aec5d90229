//! Command-line front end for `detcount`.
//!
//! [`run`] parses arguments, evaluates one command and renders the records;
//! the binary only prints and exits.

mod args;
mod commands;
pub mod record;
mod verify;

use std::ffi::OsString;
use std::fmt;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Format};
pub use record::{CheckStatus, CrossCheck, OutputRecord, ResultValue, Term};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

/// Bad or missing arguments.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

#[derive(Debug, Default)]
pub struct Response {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<detcount::Error>() {
        Some(detcount::Error::Consistency(_)) => EXIT_MISMATCH,
        Some(_) => EXIT_USAGE,
        None => EXIT_FAILURE,
    }
}

fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Json => records.iter().map(|r| r.to_json() + "\n").collect(),
        Format::Text => records.iter().map(OutputRecord::to_text).collect(),
    }
}

pub fn run<I, T>(argv: I) -> Response
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Response { code: EXIT_OK, stdout: text, ..Response::default() }
                }
                _ => Response { code: EXIT_USAGE, stderr: text, ..Response::default() },
            };
        }
    };
    let records = match commands::execute(&cli.command, &cli.global) {
        Ok(r) => r,
        Err(e) => {
            return Response { code: exit_code(&e), stderr: format!("error: {e:#}\n"), ..Response::default() };
        }
    };
    let code = if records.iter().any(OutputRecord::failed) { EXIT_MISMATCH } else { EXIT_OK };
    let body = render(&records, cli.global.format);
    match &cli.global.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Response { code, ..Response::default() },
            Err(e) => Response {
                code: EXIT_FAILURE,
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                ..Response::default()
            },
        },
        None => Response { code, stdout: body, ..Response::default() },
    }
}
