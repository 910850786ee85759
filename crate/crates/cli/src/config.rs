//! `--config <path>`: a flat `key = value` file supplying flag defaults.
//!
//! Keys are long flag names (`b-max`, `b_max` and `--b-max` are all
//! accepted). A key applies only if the chosen subcommand has that flag, and
//! flags given on the command line always win.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::CommandFactory;

use crate::Cli;

/// Global options that take a value, for locating the subcommand token.
const GLOBAL_VALUED: [&str; 4] = ["--workers", "--format", "--output", "--config"];

pub fn parse_file(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once(['=', ':']) else {
            bail!("{}:{}: expected `key = value`", path.display(), lineno + 1);
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        let value = value.trim().trim_matches('"').to_string();
        if key.is_empty() {
            bail!("{}:{}: empty key", path.display(), lineno + 1);
        }
        entries.push((key, value));
    }
    Ok(entries)
}

fn config_path(args: &[OsString]) -> Option<OsString> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(p.into());
        }
    }
    None
}

fn subcommand_index(args: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let s = args[i].to_string_lossy();
        if GLOBAL_VALUED.contains(&s.as_ref()) {
            i += 2;
        } else if s.starts_with('-') {
            i += 1;
        } else {
            return Some(i);
        }
    }
    None
}

fn given(args: &[OsString], key: &str) -> bool {
    let flag = format!("--{key}");
    let with_eq = format!("--{key}=");
    args.iter().any(|a| {
        let s = a.to_string_lossy();
        s == flag || s.starts_with(&with_eq)
    })
}

/// Splices config values into `args` right after the subcommand name.
pub fn apply(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let entries = parse_file(Path::new(&path))?;
    let Some(at) = subcommand_index(&args) else {
        return Ok(args);
    };
    let command = Cli::command();
    let name = args[at].to_string_lossy().into_owned();
    let Some(sub) = command.find_subcommand(&name) else {
        return Ok(args);
    };
    let accepts = |key: &str| {
        sub.get_arguments()
            .chain(command.get_arguments())
            .any(|a| a.get_long() == Some(key))
    };
    let known = |key: &str| {
        command
            .get_subcommands()
            .flat_map(|s| s.get_arguments())
            .chain(command.get_arguments())
            .any(|a| a.get_long() == Some(key))
    };

    let mut injected = Vec::new();
    for (key, value) in entries {
        if key == "config" {
            bail!("{}: config files cannot include other config files", Path::new(&path).display());
        }
        if !known(&key) {
            bail!("{}: unknown key {key:?}", Path::new(&path).display());
        }
        if accepts(&key) && !given(&args, &key) {
            injected.push(OsString::from(format!("--{key}")));
            injected.push(OsString::from(value));
        }
    }
    let mut out = args;
    out.splice(at + 1..at + 1, injected);
    Ok(out)
}
