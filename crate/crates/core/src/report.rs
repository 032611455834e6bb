//! Verification rows and their JSON / CSV persistence.
//!
//! Data files hold only deterministic fields. Timings go to a separate
//! `<path>.meta.json` written by [`write_meta`].

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::Clique;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Connected,
    All,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Connected => "connected",
            Scope::All => "all",
        })
    }
}

/// Oracle value against the predicted value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Exact prediction met.
    Equal,
    /// The oracle beats the prediction; legal below the asymptotic range.
    OracleGreater,
    /// Upper-bound-only prediction, not exceeded.
    BoundRespected,
    /// The oracle falls short of a value realised by a free construction,
    /// which means the search or the formula is wrong.
    OracleLess,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::OracleLess
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equal => "EQUAL",
            Status::OracleGreater => "ORACLE_GREATER",
            Status::BoundRespected => "BOUND_RESPECTED",
            Status::OracleLess => "ORACLE_LESS",
        })
    }
}

/// Oracle extremal classes against the predicted family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Match {
    Exact,
    /// The oracle found every predicted class and more.
    Superset,
    /// The oracle found only some predicted classes.
    Subset,
    Disjoint,
    /// Some shared classes, some extra and some missing.
    Overlap,
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Match::Exact => "exact",
            Match::Superset => "superset",
            Match::Subset => "subset",
            Match::Disjoint => "disjoint",
            Match::Overlap => "overlap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub k: usize,
    pub m: usize,
    pub r: usize,
    pub n: usize,
    pub scope: Scope,
    pub oracle_value: Clique,
    pub predicted_value: Clique,
    pub case_tag: String,
    pub status: Status,
    /// `None` when no extremal family is predicted for this `n`.
    pub extremal_match: Option<Match>,
    #[serde(skip)]
    pub runtime_ms: u64,
    /// Oracle extremal classes as graph6.
    pub witnesses: Vec<String>,
}

impl VerificationRow {
    fn sort_key(&self) -> (usize, usize, usize, usize, Scope) {
        (self.k, self.m, self.r, self.n, self.scope)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    /// Guesses the format from a file extension, defaulting to JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    k: usize,
    m: usize,
    r: usize,
    n: usize,
    scope: Scope,
    oracle_value: Clique,
    predicted_value: Clique,
    case_tag: &'a str,
    status: Status,
    extremal_match: String,
    witnesses: String,
}

const CSV_HEADER: [&str; 11] = [
    "k",
    "m",
    "r",
    "n",
    "scope",
    "oracle_value",
    "predicted_value",
    "case_tag",
    "status",
    "extremal_match",
    "witnesses",
];

fn sorted(rows: &[VerificationRow]) -> Vec<&VerificationRow> {
    let mut rows: Vec<&VerificationRow> = rows.iter().collect();
    rows.sort_by_key(|r| r.sort_key());
    rows
}

/// Serializes rows sorted by `(k, m, r, n, scope)`.
pub fn render_report(rows: &[VerificationRow], format: Format) -> io::Result<String> {
    let rows = sorted(rows);
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.serialize(CsvRow {
                    k: row.k,
                    m: row.m,
                    r: row.r,
                    n: row.n,
                    scope: row.scope,
                    oracle_value: row.oracle_value,
                    predicted_value: row.predicted_value,
                    case_tag: &row.case_tag,
                    status: row.status,
                    extremal_match: row
                        .extremal_match
                        .map(|m| m.to_string())
                        .unwrap_or_default(),
                    witnesses: row.witnesses.join(";"),
                })?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn write_report(rows: &[VerificationRow], format: Format, path: &Path) -> io::Result<()> {
    fs::write(path, render_report(rows, format)?)
}

pub fn meta_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Writes timings and the producing command line next to a report.
pub fn write_meta(rows: &[VerificationRow], path: &Path, command: &[String]) -> io::Result<()> {
    let timings: Vec<serde_json::Value> = sorted(rows)
        .into_iter()
        .map(|r| {
            serde_json::json!({
                "k": r.k, "m": r.m, "r": r.r, "n": r.n, "scope": r.scope,
                "runtime_ms": r.runtime_ms,
            })
        })
        .collect();
    let meta = serde_json::json!({
        "command": command,
        "total_runtime_ms": rows.iter().map(|r| r.runtime_ms).sum::<u64>(),
        "rows": timings,
    });
    let mut s = serde_json::to_string_pretty(&meta)?;
    s.push('\n');
    fs::write(meta_path(path), s)
}
