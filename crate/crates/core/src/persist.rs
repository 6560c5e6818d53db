//! Results files.
//!
//! ```text
//! # gauss-lintel v1 size=5 filter=prime+CA
//! [[0,3],[1,6],[2,9],[4,7],[5,8]]
//! [[0,5],[1,6],[2,7],[3,8],[4,9]]
//! # count=2 elapsed=0.004
//! ```
//!
//! Other `#` lines are comments and blank lines are skipped.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::criteria::Criterion;
use crate::enumeration::DiscrepancyRecord;
use crate::error::{Error, Result};
use crate::lintel::SortedLintel;

const MAGIC: &str = "gauss-lintel v1";

/// The contents of a results file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultsFile {
    pub size: usize,
    pub filter: String,
    pub lintels: Vec<SortedLintel>,
    /// Wall time at millisecond resolution.
    pub elapsed_ms: u64,
}

impl ResultsFile {
    pub fn new(size: usize, filter: impl Into<String>, lintels: Vec<SortedLintel>, elapsed: Duration) -> Self {
        ResultsFile {
            size,
            filter: filter.into(),
            lintels,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn count(&self) -> usize {
        self.lintels.len()
    }

    pub fn render(&self) -> String {
        let mut out = format!("# {MAGIC} size={} filter={}\n", self.size, self.filter);
        for l in &self.lintels {
            let _ = writeln!(out, "{l}");
        }
        let _ = writeln!(
            out,
            "# count={} elapsed={}.{:03}",
            self.count(),
            self.elapsed_ms / 1000,
            self.elapsed_ms % 1000
        );
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        write_text(path.as_ref(), &self.render())
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let at = |line: usize, e: Error| Error::AtLine {
            path: path.to_path_buf(),
            line,
            source: Box::new(e),
        };
        let malformed = |line: usize, msg: &str| {
            at(
                line,
                Error::Parse {
                    column: 1,
                    message: msg.to_string(),
                },
            )
        };

        let mut header: Option<(usize, String)> = None;
        let mut footer: Option<(usize, u64)> = None;
        let mut lintels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(rest) = comment.strip_prefix(MAGIC) {
                    let fields = key_values(rest);
                    let size = fields
                        .iter()
                        .find(|(k, _)| *k == "size")
                        .and_then(|(_, v)| v.parse().ok())
                        .ok_or_else(|| malformed(line_no, "header lacks size"))?;
                    let filter = fields
                        .iter()
                        .find(|(k, _)| *k == "filter")
                        .map(|(_, v)| v.to_string())
                        .unwrap_or_default();
                    header = Some((size, filter));
                } else if comment.starts_with("count=") {
                    let fields = key_values(comment);
                    let count = fields
                        .iter()
                        .find(|(k, _)| *k == "count")
                        .and_then(|(_, v)| v.parse().ok())
                        .ok_or_else(|| malformed(line_no, "bad count"))?;
                    let elapsed_ms = fields
                        .iter()
                        .find(|(k, _)| *k == "elapsed")
                        .map(|(_, v)| parse_millis(v))
                        .unwrap_or(Some(0))
                        .ok_or_else(|| malformed(line_no, "bad elapsed"))?;
                    footer = Some((count, elapsed_ms));
                }
                continue;
            }
            let lintel: SortedLintel = line.parse().map_err(|e| at(line_no, e))?;
            lintels.push(lintel);
        }

        let (size, filter) = header.ok_or_else(|| malformed(1, "missing header"))?;
        let (count, elapsed_ms) = footer.unwrap_or((lintels.len(), 0));
        if count != lintels.len() {
            return Err(malformed(
                text.lines().count(),
                &format!("footer says {count} lintels, found {}", lintels.len()),
            ));
        }
        if let Some(pos) = lintels.iter().position(|l| l.size() != size) {
            return Err(malformed(pos + 2, "lintel size disagrees with header"));
        }
        Ok(ResultsFile {
            size,
            filter,
            lintels,
            elapsed_ms,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, path)
    }
}

fn key_values(s: &str) -> Vec<(&str, &str)> {
    s.split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .collect()
}

fn parse_millis(v: &str) -> Option<u64> {
    let (secs, frac) = v.split_once('.').unwrap_or((v, "0"));
    let secs: u64 = secs.parse().ok()?;
    let mut frac = frac.to_string();
    frac.truncate(3);
    while frac.len() < 3 {
        frac.push('0');
    }
    Some(secs * 1000 + frac.parse::<u64>().ok()?)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: PathBuf::from(path),
        source,
    })
}

/// Reads lintels, one per line, from the listing format. `#` lines and blank
/// lines are skipped.
pub fn read_lintels(path: impl AsRef<Path>) -> Result<Vec<SortedLintel>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.parse().map_err(|e| Error::AtLine {
                path: path.to_path_buf(),
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn render_discrepancies(size: usize, a: Criterion, b: Criterion, records: &[DiscrepancyRecord]) -> String {
    let mut out = format!("# {MAGIC} size={size} discrepancies={a}/{b}\n");
    for r in records {
        let _ = writeln!(out, "{}", r.report);
    }
    let _ = writeln!(out, "# count={}", records.len());
    out
}

pub fn save_discrepancies(
    path: impl AsRef<Path>,
    size: usize,
    a: Criterion,
    b: Criterion,
    records: &[DiscrepancyRecord],
) -> Result<()> {
    write_text(path.as_ref(), &render_discrepancies(size, a, b, records))
}

/// One row of the cross-size summary table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub size: usize,
    pub filter: String,
    pub count: u64,
}

pub fn render_summary_tsv(rows: &[SummaryRow]) -> String {
    let mut out = String::from("size\tfilter\tcount\n");
    for r in rows {
        let _ = writeln!(out, "{}\t{}\t{}", r.size, r.filter, r.count);
    }
    out
}

pub fn save_summary_tsv(path: impl AsRef<Path>, rows: &[SummaryRow]) -> Result<()> {
    write_text(path.as_ref(), &render_summary_tsv(rows))
}
