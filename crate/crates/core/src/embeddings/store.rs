//! Dense word vectors in the common text format:
//!
//! ```text
//! 3 2
//! Kopf 0.9 0.1
//! Rücken 0.8 0.2
//! Lippenstift 0.1 0.9
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::exec::Execution;

#[derive(Debug, thiserror::Error)]
pub enum VectorError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: '{word}' has {found} values, expected {expected}")]
    DimensionMismatch {
        line: usize,
        word: String,
        expected: usize,
        found: usize,
    },
    #[error("'{0}' is a zero vector")]
    ZeroVector(String),
    #[error("'{0}' occurs more than once")]
    DuplicateWord(String),
    #[error("no vector for '{0}'")]
    MissingVector(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VectorStore {
    dimension: usize,
    words: Vec<String>,
    index: HashMap<String, usize>,
    data: Vec<f64>,
    norms: Vec<f64>,
}

impl VectorStore {
    pub fn new(dimension: usize) -> Result<VectorStore, VectorError> {
        if dimension < 2 {
            return Err(VectorError::Format {
                line: 1,
                message: format!("dimension {dimension} < 2"),
            });
        }
        Ok(VectorStore {
            dimension,
            words: Vec::new(),
            index: HashMap::new(),
            data: Vec::new(),
            norms: Vec::new(),
        })
    }

    pub fn insert(&mut self, word: &str, vector: &[f64]) -> Result<(), VectorError> {
        if vector.len() != self.dimension {
            return Err(VectorError::DimensionMismatch {
                line: 0,
                word: word.into(),
                expected: self.dimension,
                found: vector.len(),
            });
        }
        if self.index.contains_key(word) {
            return Err(VectorError::DuplicateWord(word.into()));
        }
        let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(VectorError::ZeroVector(word.into()));
        }
        self.index.insert(word.to_string(), self.words.len());
        self.words.push(word.to_string());
        self.data.extend_from_slice(vector);
        self.norms.push(norm);
        Ok(())
    }

    pub fn parse(text: &str) -> Result<VectorStore, VectorError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(VectorError::Format {
            line: 1,
            message: "missing header".into(),
        })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let parse_usize = |s: &str| s.parse::<usize>().ok();
        let (count, dim) = match head.as_slice() {
            [c, d] => match (parse_usize(c), parse_usize(d)) {
                (Some(c), Some(d)) => (c, d),
                _ => {
                    return Err(VectorError::Format {
                        line: 1,
                        message: format!("bad header '{header}'"),
                    })
                }
            },
            _ => {
                return Err(VectorError::Format {
                    line: 1,
                    message: format!("bad header '{header}'"),
                })
            }
        };
        let mut store = VectorStore::new(dim)?;
        for (i, line) in lines {
            let line_no = i + 1;
            let mut parts = line.split_whitespace();
            let word = parts.next().unwrap_or_default();
            let values = parts
                .map(|v| v.parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| VectorError::Format {
                    line: line_no,
                    message: e.to_string(),
                })?;
            store.insert(word, &values).map_err(|e| match e {
                VectorError::DimensionMismatch {
                    word,
                    expected,
                    found,
                    ..
                } => VectorError::DimensionMismatch {
                    line: line_no,
                    word,
                    expected,
                    found,
                },
                other => other,
            })?;
        }
        if store.len() != count {
            return Err(VectorError::Format {
                line: 1,
                message: format!("header declares {count} words, found {}", store.len()),
            });
        }
        Ok(store)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<VectorStore, VectorError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| VectorError::Io {
            path: path.display().to_string(),
            source,
        })?;
        VectorStore::parse(&text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.dimension);
        for (i, w) in self.words.iter().enumerate() {
            out.push_str(w);
            for v in self.row(i) {
                let _ = write!(out, " {v:.6}");
            }
            out.push('\n');
        }
        out
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn vector(&self, word: &str) -> Option<&[f64]> {
        self.index.get(word).map(|&i| self.row(i))
    }

    pub fn norm(&self, word: &str) -> Option<f64> {
        self.index.get(word).map(|&i| self.norms[i])
    }

    fn cosine_idx(&self, a: usize, b: usize) -> f64 {
        let dot: f64 = self
            .row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| x * y)
            .sum();
        (dot / (self.norms[a] * self.norms[b])).clamp(-1.0, 1.0)
    }

    pub fn cosine(&self, a: &str, b: &str) -> Result<f64, VectorError> {
        let ia = *self
            .index
            .get(a)
            .ok_or_else(|| VectorError::MissingVector(a.into()))?;
        let ib = *self
            .index
            .get(b)
            .ok_or_else(|| VectorError::MissingVector(b.into()))?;
        Ok(self.cosine_idx(ia, ib))
    }

    /// Top `k` by similarity, ties broken by word; `word` itself is left out.
    pub fn nearest_neighbors(
        &self,
        word: &str,
        k: usize,
        exec: Execution,
    ) -> Result<Vec<(String, f64)>, VectorError> {
        let iw = *self
            .index
            .get(word)
            .ok_or_else(|| VectorError::MissingVector(word.into()))?;
        let ids: Vec<usize> = (0..self.len()).filter(|&i| i != iw).collect();
        let sims = exec.map(&ids, |&i| self.cosine_idx(iw, i));
        let mut ranked: Vec<(String, f64)> = ids
            .iter()
            .zip(sims)
            .map(|(&i, s)| (self.words[i].clone(), s))
            .collect();
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        ranked.truncate(k);
        Ok(ranked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_errors() {
        let s = VectorStore::parse("2 2\na 1 0\nb 0 1\n").unwrap();
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.cosine("a", "b").unwrap(), 0.0);
        assert!(matches!(
            VectorStore::parse("2 3\na 1 0 0\nb 0 1\n"),
            Err(VectorError::DimensionMismatch { line: 3, .. })
        ));
        assert!(matches!(
            VectorStore::parse("2 2\na 1 0\na 0 1\n"),
            Err(VectorError::DuplicateWord(_))
        ));
        assert!(matches!(
            VectorStore::parse("1 2\na 0 0\n"),
            Err(VectorError::ZeroVector(_))
        ));
        assert!(VectorStore::parse("1 1\na 1\n").is_err());
        assert!(VectorStore::parse("3 2\na 1 0\n").is_err());
    }

    #[test]
    fn antipodal_and_identity() {
        let s = VectorStore::parse("2 2\na 1 0\nb -1 0\n").unwrap();
        assert_eq!(s.cosine("a", "b").unwrap(), -1.0);
        assert!((s.cosine("a", "a").unwrap() - 1.0).abs() < 1e-9);
        assert!(matches!(
            s.cosine("a", "z"),
            Err(VectorError::MissingVector(_))
        ));
    }

    #[test]
    fn neighbors_ties_and_overflow() {
        let s = VectorStore::parse("4 2\nq 1 0\nc 1 1\nb 1 1\na 0 1\n").unwrap();
        let nn = s.nearest_neighbors("q", 10, Execution::Sequential).unwrap();
        let names: Vec<&str> = nn.iter().map(|(w, _)| w.as_str()).collect();
        assert_eq!(names, ["b", "c", "a"]);
    }

    #[test]
    fn text_round_trip() {
        let s = VectorStore::parse("2 2\nx 0.5 0.25\ny -1 2\n").unwrap();
        assert_eq!(VectorStore::parse(&s.to_text()).unwrap(), s);
    }
}
