//! `--config PATH` files: one `flag = value` per line, `#` comments. Their
//! flags are placed before the command-line ones so the latter win.

use std::ffi::OsString;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("config line {line}: expected `flag = value`, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("--config needs a path")]
    MissingPath,
}

pub fn parse_config(text: &str) -> Result<Vec<OsString>, ConfigError> {
    let mut args = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = || ConfigError::Syntax {
            line: i + 1,
            text: raw.to_string(),
        };
        let (key, value) = line.split_once('=').ok_or_else(syntax)?;
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() || key == "config" {
            return Err(syntax());
        }
        match (key, value) {
            (_, "true") => args.push(format!("--{key}").into()),
            (_, "false") => {}
            (_, v) => args.push(format!("--{key}={v}").into()),
        }
    }
    Ok(args)
}

/// Splices the config file named by `--config` (if any) in right after the
/// program name.
pub fn expand_args(args: Vec<OsString>) -> Result<Vec<OsString>, ConfigError> {
    let mut path = None;
    let mut iter = args.iter().skip(1);
    while let Some(a) = iter.next() {
        let Some(a) = a.to_str() else { continue };
        if a == "--config" {
            path = Some(iter.next().ok_or(ConfigError::MissingPath)?.clone());
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.into());
        }
    }
    let Some(path) = path else { return Ok(args) };
    let text = std::fs::read_to_string(Path::new(&path)).map_err(|source| ConfigError::Read {
        path: Path::new(&path).display().to_string(),
        source,
    })?;
    let mut out = Vec::with_capacity(args.len() + 8);
    out.extend(args.first().cloned());
    out.extend(parse_config(&text)?);
    out.extend(args.into_iter().skip(1));
    Ok(out)
}
