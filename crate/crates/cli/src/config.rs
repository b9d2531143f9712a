//! Run configuration: command-line flags merged over an optional
//! `key=value` file.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

/// Degree cutoffs above this are refused as resource errors.
pub const MAX_CUTOFF: u32 = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    #[default]
    Cm,
    Smooth,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Auto,
    Shifted,
    Determinant,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SchurKind {
    #[default]
    Shifted,
    Factorial,
}

/// A single genus or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusRange {
    pub start: u32,
    pub end: u32,
}

impl GenusRange {
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }

    pub fn is_single(&self) -> bool {
        self.start == self.end
    }
}

impl FromStr for GenusRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::usage(format!("invalid genus '{s}': expected a non-negative integer or a range a..b"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let s = s.trim();
        let range = match s.split_once("..") {
            Some((a, b)) => GenusRange { start: num(a)?, end: num(b.strip_prefix('=').unwrap_or(b))? },
            None => {
                let g = num(s)?;
                GenusRange { start: g, end: g }
            }
        };
        if range.start > range.end {
            return Err(bad());
        }
        Ok(range)
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

impl Serialize for GenusRange {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `key=value` pairs; blank lines and `#` comments are skipped.
#[derive(Clone, Debug, Default)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("config line {}: expected key=value", n + 1)))?;
            entries.insert(k.trim().replace('_', "-"), v.trim().to_string());
        }
        Ok(ConfigFile { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// The flag value if given, else the parsed file value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        self.get(key)
            .map(|v| v.parse::<T>().map_err(|_| CliError::usage(format!("config key {key}: invalid value '{v}'"))))
            .transpose()
    }

    pub fn pick_enum<T: ValueEnum>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        self.get(key)
            .map(|v| T::from_str(v, true).map_err(|_| CliError::usage(format!("config key {key}: invalid value '{v}'"))))
            .transpose()
    }

    pub fn flag(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes" | "on") => Ok(true),
            Some("false" | "0" | "no" | "off") => Ok(false),
            Some(v) => Err(CliError::usage(format!("config key {key}: expected a boolean, got '{v}'"))),
        }
    }
}

/// Settings shared by every subcommand after merging.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub genus: Option<GenusRange>,
    pub max_genus: u32,
    pub cutoff: Option<u32>,
    pub mode: ModeArg,
    pub format: Format,
    pub unshifted: bool,
    pub paper_sign: bool,
    pub kappa0_substitute: bool,
    pub output: Option<PathBuf>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub selector: BTreeMap<&'static str, String>,
}

impl RunConfig {
    /// The genus range, checked against the cap.
    pub fn genera(&self) -> Result<GenusRange, CliError> {
        let range = self.genus.ok_or_else(|| CliError::usage("--genus is required"))?;
        if range.end > self.max_genus {
            return Err(CliError::resource(format!(
                "genus {} exceeds the configured maximum {}; raise it with WTAUT_MAX_GENUS",
                range.end, self.max_genus
            )));
        }
        Ok(range)
    }

    /// The degree cutoff, checked to lie in `1..=MAX_CUTOFF`.
    pub fn cutoff(&self, name: &str) -> Result<u32, CliError> {
        let d = self.cutoff.ok_or_else(|| CliError::usage(format!("--{name} is required")))?;
        if d == 0 {
            return Err(CliError::usage(format!("--{name} must be at least 1")));
        }
        if d > MAX_CUTOFF {
            return Err(CliError::resource(format!(
                "--{name} {d} is beyond the supported range; use --{name} {MAX_CUTOFF} or lower"
            )));
        }
        Ok(d)
    }
}
