use std::path::Path;

use clap::Parser;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::{self, Context, Outcome};
use crate::{Cli, Command};

#[derive(Debug, Deserialize)]
struct Manifest {
    entries: Vec<Entry>,
}

/// One fixture: a command line run with paths relative to the corpus
/// directory, and the outcome it must produce.
#[derive(Debug, Deserialize)]
struct Entry {
    name: String,
    /// Where the expected outcome comes from.
    provenance: String,
    args: Vec<String>,
    expected: Expected,
}

#[derive(Debug, Deserialize)]
struct Expected {
    exit: u8,
    /// Must be contained in the produced report.
    #[serde(default)]
    report: Option<Value>,
}

/// `expected` is contained in `actual`: object keys recursively, arrays
/// elementwise with equal length, everything else by equality.
pub fn contains(actual: &Value, expected: &Value) -> bool {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => e.iter().all(|(k, v)| a.get(k).is_some_and(|x| contains(x, v))),
        (Value::Array(a), Value::Array(e)) => a.len() == e.len() && a.iter().zip(e).all(|(x, y)| contains(x, y)),
        _ => actual == expected,
    }
}

fn check(entry: &Entry, dir: &Path) -> Result<(), String> {
    let argv = std::iter::once("reedylab".to_string()).chain(entry.args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| format!("bad arguments: {}", e.kind()))?;
    if matches!(cli.command, Command::Corpus { .. }) {
        return Err("nested corpus run".into());
    }
    let out: Outcome = commands::run(
        &cli.command,
        &Context {
            base: dir.to_path_buf(),
        },
    );
    if out.code != entry.expected.exit {
        let why = out.message.unwrap_or_default();
        return Err(format!("exit {} (expected {}) {why}", out.code, entry.expected.exit));
    }
    if let Some(exp) = &entry.expected.report {
        let got = out.report.unwrap_or(Value::Null);
        if !contains(&got, exp) {
            return Err("report differs from fixture".into());
        }
    }
    Ok(())
}

pub fn run(dir: &Path) -> Outcome {
    let path = dir.join("manifest.json");
    let manifest: Manifest = match std::fs::read_to_string(&path)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
    {
        Ok(m) => m,
        Err(e) => {
            return Outcome {
                code: 2,
                report: None,
                stdout: None,
                message: Some(format!("error: {}: {e}", path.display())),
            }
        }
    };
    if manifest.entries.is_empty() {
        return Outcome {
            code: 2,
            report: None,
            stdout: None,
            message: Some(format!("error: {} has no entries", path.display())),
        };
    }
    let results: Vec<Result<(), String>> = manifest.entries.par_iter().map(|e| check(e, dir)).collect();

    let width = manifest.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    let mut failed = Vec::new();
    for (e, r) in manifest.entries.iter().zip(&results) {
        match r {
            Ok(()) => text.push_str(&format!("PASS  {:width$}  {}\n", e.name, e.provenance)),
            Err(why) => {
                text.push_str(&format!("FAIL  {:width$}  {}: {why}\n", e.name, e.provenance));
                failed.push(e.name.clone());
            }
        }
    }
    let total = manifest.entries.len();
    text.push_str(&format!("{} of {total} entries match\n", total - failed.len()));
    Outcome {
        code: if failed.is_empty() { 0 } else { 1 },
        report: Some(json!({ "total": total, "failed": failed })),
        stdout: Some(text),
        message: (!failed.is_empty()).then(|| format!("mismatched: {}", failed.join(", "))),
    }
}
