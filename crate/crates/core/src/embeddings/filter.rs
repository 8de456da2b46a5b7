//! Cosine compatibility filter for filler pairs.

use serde::{Deserialize, Serialize};

use super::store::VectorStore;
use crate::exec::Execution;

pub const DEFAULT_THRESHOLD: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Accept,
    Reject,
    /// One of the vectors is missing; the pair passes, flagged.
    UnscoredAccept,
}

impl Decision {
    pub fn passes(self) -> bool {
        self != Decision::Reject
    }

    pub fn label(self) -> &'static str {
        match self {
            Decision::Accept => "accept",
            Decision::Reject => "reject",
            Decision::UnscoredAccept => "unscored_accept",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompatibilityVerdict {
    pub pair: (String, String),
    pub similarity: Option<f64>,
    pub decision: Decision,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("threshold {0} outside [-1, 1]")]
pub struct ThresholdOutOfRange(pub f64);

pub fn check_threshold(threshold: f64) -> Result<(), ThresholdOutOfRange> {
    if (-1.0..=1.0).contains(&threshold) {
        Ok(())
    } else {
        Err(ThresholdOutOfRange(threshold))
    }
}

pub fn judge(a: &str, b: &str, threshold: f64, store: &VectorStore) -> CompatibilityVerdict {
    let similarity = store.cosine(a, b).ok();
    let decision = match similarity {
        None => Decision::UnscoredAccept,
        Some(s) if s < threshold => Decision::Reject,
        Some(_) => Decision::Accept,
    };
    CompatibilityVerdict {
        pair: (a.to_string(), b.to_string()),
        similarity,
        decision,
    }
}

pub fn compatibility_filter(
    pairs: &[(String, String)],
    threshold: f64,
    store: &VectorStore,
    exec: Execution,
) -> Result<Vec<CompatibilityVerdict>, ThresholdOutOfRange> {
    check_threshold(threshold)?;
    Ok(exec.map(pairs, |(a, b)| judge(a, b, threshold, store)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> VectorStore {
        VectorStore::parse("3 2\na 1 0\nb 0.6 0.8\nc -1 0\n").unwrap()
    }

    #[test]
    fn decisions() {
        let pairs = vec![
            ("a".to_string(), "b".to_string()),
            ("a".to_string(), "c".to_string()),
            ("a".to_string(), "zz".to_string()),
        ];
        let v = compatibility_filter(&pairs, 0.3, &store(), Execution::Sequential).unwrap();
        let d: Vec<Decision> = v.iter().map(|x| x.decision).collect();
        assert_eq!(
            d,
            [Decision::Accept, Decision::Reject, Decision::UnscoredAccept]
        );
        assert!((v[0].similarity.unwrap() - 0.6).abs() < 1e-12);
        let all = compatibility_filter(&pairs, -1.0, &store(), Execution::Sequential).unwrap();
        assert!(all.iter().all(|x| x.decision.passes()));
        assert!(compatibility_filter(&pairs, 1.0 + 1e-9, &store(), Execution::Sequential).is_err());
        assert!(compatibility_filter(&pairs, f64::NAN, &store(), Execution::Sequential).is_err());
    }
}
