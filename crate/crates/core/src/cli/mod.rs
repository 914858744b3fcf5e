//! Batch command-line front end.
//!
//! ```text
//! hvi [--config FILE] [--seed N] <COMMAND> ...
//!
//!   to-hvi        PNG -> HVI1 tensor
//!   from-hvi      HVI1 tensor -> PNG (clip, then perceptual inverse)
//!   report        PSNR / SSIM / GT-mean table for prediction vs reference
//!   ablate-space  corrected-image PSNR in HSV, polarised, collapsed and HVI spaces
//!   sweep-k       collapse curves C_k(I) for plotting
//!   augment       random gamma curve augmentation
//! ```
//!
//! A config file holds `key = value` lines named after the long flags
//! (`k = 2`, `gt-mean = true`); flags given on the command line win.
//! `HVI_THREADS` caps the worker pool (`0` or unset = one per core).
//!
//! Exit codes: 0 success, 2 usage, 3 I/O, 4 numerical invariant violation.

mod args;
mod commands;

use std::ffi::OsString;
use std::fmt;
use std::path::Path;

use clap::Parser;

pub use args::{Cli, Command};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        Self { code: EXIT_INVARIANT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io { .. } | Error::Decode { .. } | Error::Encode { .. } | Error::Tensor(_) => EXIT_IO,
            Error::InvalidImage(_) | Error::ZeroMeanReference => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self { code: EXIT_IO, message: format!("csv: {e}") }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Errors are reported on stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv = match with_config(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return e.code;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let threads = match std::env::var("HVI_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("HVI_THREADS must be a non-negative integer, got {v:?}")))?,
        Err(_) => 0,
    };
    if threads == 0 {
        return commands::dispatch(cli);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    pool.install(|| commands::dispatch(cli))
}

const SUBCOMMANDS: [&str; 6] = ["to-hvi", "from-hvi", "report", "ablate-space", "sweep-k", "augment"];

/// Splices flags from `--config FILE` in right after the subcommand name so
/// that the user's own flags, which come later, override them.
fn with_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let mut config = None;
    for (i, a) in argv.iter().enumerate().skip(1) {
        let Some(s) = a.to_str() else { continue };
        if s == "--" {
            break;
        }
        if s == "--config" {
            config = argv.get(i + 1).cloned();
        } else if let Some(p) = s.strip_prefix("--config=") {
            config = Some(p.into());
        }
    }
    let Some(path) = config else { return Ok(argv) };
    let Some(pos) = argv
        .iter()
        .position(|a| a.to_str().is_some_and(|s| SUBCOMMANDS.contains(&s)))
    else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(Path::new(&path)).map_err(|e| CliError {
        code: EXIT_IO,
        message: format!("{}: {e}", Path::new(&path).display()),
    })?;
    let extra = config_args(&text)?;
    argv.splice(pos + 1..pos + 1, extra);
    Ok(argv)
}

/// Turns `key = value` lines into flags. Booleans become bare switches.
pub fn config_args(text: &str) -> Result<Vec<OsString>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("config line {}: expected key = value", n + 1)))?;
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() || key == "config" {
            return Err(CliError::usage(format!("config line {}: bad key {key:?}", n + 1)));
        }
        match value {
            "true" => out.push(format!("--{key}").into()),
            "false" => {}
            _ => {
                out.push(format!("--{key}").into());
                out.push(value.into());
            }
        }
    }
    Ok(out)
}
