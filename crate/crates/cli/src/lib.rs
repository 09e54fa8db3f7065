//! Command-line front end for `dedekind-lab`.
//!
//! [`run`] parses a full argv (program name first), executes one subcommand and
//! returns the process exit code: 0 on success, 1 when the library reports a
//! domain error, 2 on usage errors. Output is assembled on the calling thread in
//! a fixed order, so it is byte-identical for any `--threads` value.

use std::ffi::OsString;
use std::path::Path;
use std::{fs, io::Write};

use clap::{CommandFactory, Parser};
use thiserror::Error;

pub mod args;
mod commands;
pub mod output;

use args::{Cli, FormatArg};
use output::Format;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "DEDEKIND_LAB_THREADS";

/// Flags that take a value and may appear before the subcommand.
const GLOBAL_VALUE_FLAGS: [&str; 4] = ["--format", "--out", "--threads", "--config"];

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {}", .0.name(), .0)]
    Domain(#[from] dedekind_lab::Error),
    #[error("Io: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let argv = match with_config(argv) {
        Ok(a) => a,
        Err(e) => return report(&e),
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn threads(cli: &Cli) -> Result<Option<usize>, CliError> {
    if let Some(t) = cli.threads {
        return Ok(Some(t as usize));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let threads = threads(cli)?;
    let table = dedekind_lab::par::with_threads(threads, || commands::execute(&cli.command))?;
    let format = cli.format.map(|f| match f {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    });
    let text = table.render(format);
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Splices `--config` file entries into argv ahead of the explicit flags.
///
/// Global keys go right after the program name and subcommand keys right after
/// the subcommand, so a flag given on the command line always comes later and
/// wins. Keys that are flags of some other subcommand are ignored; keys that are
/// not flags anywhere are rejected.
fn with_config(argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let entries = read_config(&path)?;
    let Some(sub_pos) = subcommand_position(&argv) else {
        return Ok(argv);
    };
    let sub_name = argv[sub_pos].to_string_lossy().into_owned();

    let cmd = Cli::command();
    let globals: Vec<String> = cmd
        .get_arguments()
        .filter_map(|a| a.get_long().map(str::to_owned))
        .collect();
    let mut known: Vec<String> = globals.clone();
    let mut local: Vec<String> = Vec::new();
    for sub in cmd.get_subcommands() {
        for arg in sub.get_arguments() {
            if let Some(long) = arg.get_long() {
                known.push(long.to_owned());
                if sub.get_name() == sub_name {
                    local.push(long.to_owned());
                }
            }
        }
    }

    let mut front = Vec::new();
    let mut after_sub = Vec::new();
    for (key, value) in entries {
        if key == "config" || !known.contains(&key) {
            return Err(CliError::Usage(format!(
                "unknown config key '{key}' in {}",
                path.display()
            )));
        }
        let pair = [OsString::from(format!("--{key}")), OsString::from(value)];
        if globals.contains(&key) {
            front.extend(pair);
        } else if local.contains(&key) {
            after_sub.extend(pair);
        }
    }

    let mut out = Vec::with_capacity(argv.len() + front.len() + after_sub.len());
    out.push(argv[0].clone());
    out.extend(front);
    out.extend(argv[1..=sub_pos].iter().cloned());
    out.extend(after_sub);
    out.extend(argv[sub_pos + 1..].iter().cloned());
    Ok(out)
}

fn config_path(argv: &[OsString]) -> Option<std::path::PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(tok) = it.next() {
        let tok = tok.to_string_lossy();
        if tok == "--config" {
            return it.next().map(Into::into);
        }
        if let Some(p) = tok.strip_prefix("--config=") {
            return Some(p.into());
        }
    }
    None
}

fn subcommand_position(argv: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < argv.len() {
        let tok = argv[i].to_string_lossy();
        if tok.starts_with('-') {
            if GLOBAL_VALUE_FLAGS.contains(&tok.as_ref()) {
                i += 1;
            }
        } else {
            return Some(i);
        }
        i += 1;
    }
    None
}

/// `key = value` lines; blank lines and `#` comments are skipped.
fn read_config(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read --config {}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "{}:{}: expected key=value, got {line:?}",
                path.display(),
                lineno + 1
            )));
        };
        entries.push((
            key.trim().trim_start_matches("--").to_owned(),
            value.trim().to_owned(),
        ));
    }
    Ok(entries)
}
