//! Result envelopes and their JSON / CSV / LaTeX renderings.

use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;
use wtaut::MultiPoly;

use crate::config::{Format, RunConfig};
use crate::CliError;

/// The result of one subcommand at one genus, in every output format.
#[derive(Clone, Debug, Default)]
pub struct Rendered {
    pub genus: Option<u32>,
    pub payload: Value,
    pub csv: String,
    pub latex: String,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    version: &'static str,
    config: &'a RunConfig,
    timestamp: String,
    payload: &'a Value,
    warnings: &'a [String],
}

fn envelope(config: &RunConfig, r: &Rendered) -> Value {
    let e = Envelope {
        version: env!("CARGO_PKG_VERSION"),
        config,
        timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        payload: &r.payload,
        warnings: &r.warnings,
    };
    // round-tripping through Value sorts every object's keys
    serde_json::to_value(e).expect("envelope is serializable")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn render_one(config: &RunConfig, r: &Rendered) -> String {
    match config.format {
        Format::Json => pretty(&envelope(config, r)),
        Format::Csv => r.csv.clone(),
        Format::Latex => r.latex.clone(),
    }
}

/// Writes to stdout, one file, or one file per genus.
pub fn emit(config: &RunConfig, results: &[Rendered]) -> Result<(), CliError> {
    for w in results.iter().flat_map(|r| &r.warnings) {
        eprintln!("warning: {w}");
    }
    match &config.output {
        Some(path) if results.len() > 1 => {
            for r in results {
                write_atomic(&per_genus_path(path, r.genus), &render_one(config, r))?;
            }
            Ok(())
        }
        Some(path) => write_atomic(path, &render_one(config, &results[0])),
        None => {
            let text = if results.len() == 1 {
                render_one(config, &results[0])
            } else {
                combined(config, results)
            };
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::resource(format!("cannot write to stdout: {e}")))
        }
    }
}

fn combined(config: &RunConfig, results: &[Rendered]) -> String {
    match config.format {
        Format::Json => pretty(&Value::Array(results.iter().map(|r| envelope(config, r)).collect())),
        Format::Csv => sections(results, "#"),
        Format::Latex => sections(results, "%"),
    }
}

fn sections(results: &[Rendered], comment: &str) -> String {
    let fmt = |r: &Rendered| match r.genus {
        Some(g) => format!("{comment} genus {g}\n"),
        None => String::new(),
    };
    results
        .iter()
        .map(|r| format!("{}{}", fmt(r), if comment == "#" { &r.csv } else { &r.latex }))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `out.json` becomes `out-g3.json`.
pub fn per_genus_path(path: &Path, genus: Option<u32>) -> PathBuf {
    let Some(g) = genus else { return path.to_path_buf() };
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}-g{g}.{}", ext.to_string_lossy()),
        None => format!("{stem}-g{g}"),
    };
    path.with_file_name(name)
}

/// Write to a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::resource(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// `a b c` for list-valued CSV cells.
pub fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// `$…$` wrapped LaTeX for a polynomial.
pub fn math(p: &MultiPoly) -> String {
    format!("${}$", p.latex())
}

/// A `tabular` with a header row.
pub fn latex_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(header.len()));
    s.push_str(&header.join(" & "));
    s.push_str(" \\\\\n\\hline\n");
    for r in rows {
        s.push_str(&r.join(" & "));
        s.push_str(" \\\\\n");
    }
    s.push_str("\\hline\n\\end{tabular}\n");
    s
}

/// CSV text with a header row; cells never contain commas.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}
