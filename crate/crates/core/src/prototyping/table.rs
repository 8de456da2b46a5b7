//! Co-occurrence frequency tables (one TSV per frame pattern and slot).
//!
//! ```text
//! # corpus_size_tokens=19807413543
//! # template=Text die {}
//! rank<TAB>filler<TAB>count<TAB>per_million
//! 1<TAB>Text die Lied<TAB>1913<TAB>0.09658
//! ```
//!
//! A fifth column may name the lexeme explicitly when the template cannot
//! recover it (compounds with a linking element: `Augenschmerz` -> `Auge`).
//!
//! Optional header keys: `pattern_total` (hits of the whole pattern, when the
//! table lists only a slice of it), `template` (how the filler lexeme sits
//! inside the listed string), `pattern`, `evidence`. Lines starting with `#`
//! after the header are comments.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::features::Language;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatedPerMillion {
    Value(f64),
    /// Printed as `< x` in the source.
    Below(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CooccurrenceEntry {
    pub rank: u32,
    /// The listed string, verbatim (`Text die Lied`).
    pub filler: String,
    /// The filler lexeme, cut out of `filler` via the table template.
    pub lexeme: String,
    pub count: u64,
    pub per_million: StatedPerMillion,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CooccurrenceTable {
    pub frame: (Language, String),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern_id: Option<String>,
    pub corpus_size_tokens: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_pattern_total: Option<u64>,
    /// Sorted by count descending, source rank ascending.
    pub entries: Vec<CooccurrenceEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(
        "line {line}: per-million for '{filler}' is {stated}, recomputed {recomputed:.6} from count {count}"
    )]
    InconsistentPerMillion {
        line: usize,
        filler: String,
        count: u64,
        stated: String,
        recomputed: f64,
    },
}

/// Relative tolerance of the per-million cross check.
pub const PER_MILLION_TOLERANCE: f64 = 0.01;

pub fn per_million(count: u64, corpus_size: u64) -> f64 {
    count as f64 / corpus_size as f64 * 1e6
}

/// Half a unit in the last printed decimal of `raw` ("0.30" -> 0.005).
fn rounding_slack(raw: &str) -> f64 {
    match raw.split_once('.') {
        Some((_, frac)) => 0.5 * 10f64.powi(-(frac.len() as i32)),
        None => 0.5,
    }
}

fn consistent(raw: &str, stated: StatedPerMillion, recomputed: f64) -> bool {
    match stated {
        StatedPerMillion::Below(bound) => recomputed < bound,
        StatedPerMillion::Value(v) => {
            let allowed = (PER_MILLION_TOLERANCE * v.abs()).max(rounding_slack(raw));
            (recomputed - v).abs() <= allowed + 1e-12
        }
    }
}

fn extract_lexeme(filler: &str, template: Option<&str>) -> String {
    let Some(t) = template else {
        return filler.to_string();
    };
    let Some((pre, post)) = t.split_once("{}") else {
        return filler.to_string();
    };
    filler
        .strip_prefix(pre)
        .and_then(|rest| rest.strip_suffix(post))
        .filter(|s| !s.is_empty())
        .unwrap_or(filler)
        .to_string()
}

impl CooccurrenceTable {
    /// Hits of the whole pattern: the declared total, or the sum of listed counts.
    pub fn pattern_total(&self) -> u64 {
        self.declared_pattern_total
            .unwrap_or_else(|| self.listed_total())
    }

    pub fn listed_total(&self) -> u64 {
        self.entries.iter().map(|e| e.count).sum()
    }

    pub fn pattern_per_million(&self) -> f64 {
        per_million(self.pattern_total(), self.corpus_size_tokens)
    }

    pub fn recomputed_per_million(&self, entry: &CooccurrenceEntry) -> f64 {
        per_million(entry.count, self.corpus_size_tokens)
    }

    /// Entry whose lexeme (or verbatim filler) equals `lexeme`.
    pub fn find(&self, lexeme: &str) -> Option<&CooccurrenceEntry> {
        self.entries
            .iter()
            .find(|e| e.lexeme == lexeme || e.filler == lexeme)
    }

    pub fn parse(text: &str, frame: (Language, String)) -> Result<CooccurrenceTable, TableError> {
        let fmt_err = |line: usize, message: String| TableError::Format { line, message };
        let mut corpus_size = None;
        let mut pattern_total = None;
        let mut template: Option<String> = None;
        let mut pattern_id = None;
        let mut entries = Vec::new();
        let mut in_header = true;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            if let Some(meta) = line.strip_prefix('#') {
                if in_header {
                    if let Some((k, v)) = meta.trim().split_once('=') {
                        let v = v.trim();
                        match k.trim() {
                            "corpus_size_tokens" => {
                                corpus_size = Some(v.parse::<u64>().map_err(|_| {
                                    fmt_err(line_no, format!("bad corpus size '{v}'"))
                                })?)
                            }
                            "pattern_total" => {
                                pattern_total = Some(v.parse::<u64>().map_err(|_| {
                                    fmt_err(line_no, format!("bad pattern total '{v}'"))
                                })?)
                            }
                            "template" => template = Some(v.to_string()),
                            "pattern" => pattern_id = Some(v.to_string()),
                            _ => {}
                        }
                    }
                }
                continue;
            }
            in_header = false;
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 && cols.len() != 5 {
                return Err(fmt_err(
                    line_no,
                    format!("expected 4 or 5 tab-separated columns, got {}", cols.len()),
                ));
            }
            if cols[0] == "rank" {
                continue;
            }
            let rank: u32 = cols[0]
                .trim()
                .parse()
                .ok()
                .filter(|&r| r >= 1)
                .ok_or_else(|| fmt_err(line_no, format!("bad rank '{}'", cols[0])))?;
            let filler = cols[1].trim().to_string();
            if filler.is_empty() {
                return Err(fmt_err(line_no, "empty filler".into()));
            }
            let count: u64 = cols[2]
                .trim()
                .parse()
                .map_err(|_| fmt_err(line_no, format!("bad count '{}'", cols[2])))?;
            let pm_raw = cols[3].trim();
            let stated = if let Some(b) = pm_raw.strip_prefix('<') {
                StatedPerMillion::Below(
                    b.trim()
                        .parse()
                        .map_err(|_| fmt_err(line_no, format!("bad per_million '{pm_raw}'")))?,
                )
            } else {
                StatedPerMillion::Value(
                    pm_raw
                        .parse::<f64>()
                        .ok()
                        .filter(|v| *v >= 0.0 && v.is_finite())
                        .ok_or_else(|| fmt_err(line_no, format!("bad per_million '{pm_raw}'")))?,
                )
            };
            let size = corpus_size.filter(|&n| n > 0).ok_or_else(|| {
                fmt_err(line_no, "missing or zero corpus_size_tokens header".into())
            })?;
            let recomputed = per_million(count, size);
            if !consistent(pm_raw, stated, recomputed) {
                return Err(TableError::InconsistentPerMillion {
                    line: line_no,
                    filler,
                    count,
                    stated: pm_raw.to_string(),
                    recomputed,
                });
            }
            let lexeme = match cols.get(4).map(|s| s.trim()).filter(|s| !s.is_empty()) {
                Some(explicit) => explicit.to_string(),
                None => extract_lexeme(&filler, template.as_deref()),
            };
            entries.push(CooccurrenceEntry {
                rank,
                filler,
                lexeme,
                count,
                per_million: stated,
            });
        }

        let corpus_size_tokens = corpus_size
            .filter(|&n| n > 0)
            .ok_or_else(|| fmt_err(0, "missing or zero corpus_size_tokens header".into()))?;
        let mut ranks = BTreeSet::new();
        for e in &entries {
            if !ranks.insert(e.rank) {
                return Err(fmt_err(0, format!("duplicate rank {}", e.rank)));
            }
        }
        entries.sort_by(|a, b| b.count.cmp(&a.count).then(a.rank.cmp(&b.rank)));
        if entries.windows(2).any(|w| w[0].rank > w[1].rank) {
            return Err(fmt_err(0, "ranks contradict count order".into()));
        }
        Ok(CooccurrenceTable {
            frame,
            pattern_id,
            corpus_size_tokens,
            declared_pattern_total: pattern_total,
            entries,
        })
    }
}

pub fn ingest_frequency_table(
    path: impl AsRef<Path>,
    frame: (Language, String),
) -> Result<CooccurrenceTable, TableError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })?;
    CooccurrenceTable::parse(&text, frame)
}
