//! Role annotations and the candidate filter.
//!
//! A frequency list mixes true slot fillers with hits that realize another
//! role (or no role at all). Annotations are expert decisions recorded per
//! filler; the filter keeps exactly the fillers marked as required by the
//! requested slot, in table order.

use std::collections::{BTreeSet, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::table::CooccurrenceTable;
use crate::lexicon::ArgRef;
use crate::ontology::{ClassPath, Ontology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ValencyRequired,
    NotValency,
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleAnnotation {
    pub filler: String,
    pub verdict: Verdict,
    /// Required for `valency_required`; informative otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slot: Option<ArgRef>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl RoleAnnotation {
    pub fn required(filler: &str, slot: ArgRef) -> Self {
        RoleAnnotation {
            filler: filler.into(),
            verdict: Verdict::ValencyRequired,
            slot: Some(slot),
            note: String::new(),
        }
    }

    pub fn not_valency(filler: &str) -> Self {
        RoleAnnotation {
            filler: filler.into(),
            verdict: Verdict::NotValency,
            slot: None,
            note: String::new(),
        }
    }

    pub fn excluded(filler: &str) -> Self {
        RoleAnnotation {
            filler: filler.into(),
            verdict: Verdict::Excluded,
            slot: None,
            note: String::new(),
        }
    }

    pub fn requires(&self, slot: ArgRef) -> bool {
        self.verdict == Verdict::ValencyRequired && self.slot == Some(slot)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FilterError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("annotation schema error: {0}")]
    Schema(String),
    #[error("filler '{0}' annotated more than once")]
    DuplicateAnnotation(String),
    #[error("filler '{0}' marked valency_required without a slot")]
    MissingSlot(String),
    #[error("filler '{filler}' at rank {rank} has no annotation")]
    UnannotatedFiller { filler: String, rank: u32 },
}

/// Check the one-annotation-per-filler invariant.
pub fn check_annotations(annotations: &[RoleAnnotation]) -> Result<(), FilterError> {
    let mut seen = HashSet::new();
    for a in annotations {
        if !seen.insert(a.filler.as_str()) {
            return Err(FilterError::DuplicateAnnotation(a.filler.clone()));
        }
        if a.verdict == Verdict::ValencyRequired && a.slot.is_none() {
            return Err(FilterError::MissingSlot(a.filler.clone()));
        }
    }
    Ok(())
}

pub fn parse_annotations(json: &str) -> Result<Vec<RoleAnnotation>, FilterError> {
    let list: Vec<RoleAnnotation> =
        serde_json::from_str(json).map_err(|e| FilterError::Schema(e.to_string()))?;
    check_annotations(&list)?;
    Ok(list)
}

pub fn load_annotations(path: impl AsRef<Path>) -> Result<Vec<RoleAnnotation>, FilterError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FilterError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_annotations(&text)
}

/// A filler judged to realize a slot, with its frequency evidence and classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexicalPrototype {
    pub lexeme: String,
    pub filler: String,
    pub slot: ArgRef,
    pub rank: u32,
    pub count: u64,
    pub per_million: f64,
    pub classes: BTreeSet<ClassPath>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMode {
    #[default]
    Lenient,
    /// Every filler among the first `top_k` table rows must carry an annotation.
    Strict { top_k: usize },
}

pub fn filter_candidates(
    table: &CooccurrenceTable,
    annotations: &[RoleAnnotation],
    slot: ArgRef,
    ontology: Option<&Ontology>,
    mode: FilterMode,
) -> Result<Vec<LexicalPrototype>, FilterError> {
    check_annotations(annotations)?;
    let lookup = |filler: &str, lexeme: &str| {
        annotations
            .iter()
            .find(|a| a.filler == filler || a.filler == lexeme)
    };
    if let FilterMode::Strict { top_k } = mode {
        for e in table.entries.iter().take(top_k) {
            if lookup(&e.filler, &e.lexeme).is_none() {
                return Err(FilterError::UnannotatedFiller {
                    filler: e.filler.clone(),
                    rank: e.rank,
                });
            }
        }
    }
    Ok(table
        .entries
        .iter()
        .filter(|e| lookup(&e.filler, &e.lexeme).is_some_and(|a| a.requires(slot)))
        .map(|e| LexicalPrototype {
            lexeme: e.lexeme.clone(),
            filler: e.filler.clone(),
            slot,
            rank: e.rank,
            count: e.count,
            per_million: table.recomputed_per_million(e),
            classes: ontology
                .map(|o| o.classify_lexeme(&e.lexeme))
                .unwrap_or_default(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::Language;

    fn table() -> CooccurrenceTable {
        let text = "# corpus_size_tokens=19807413543\n# template=Text die {}\n\
            1\tText die Lied\t1913\t0.09658\n2\tText die Bibel\t1820\t0.09188\n\
            3\tText die Buch\t866\t0.04372\n4\tText die Autor\t844\t0.04261\n";
        CooccurrenceTable::parse(text, (Language::De, "Text".into())).unwrap()
    }

    #[test]
    fn duplicate_annotation_rejected() {
        let a = [
            RoleAnnotation::excluded("Lied"),
            RoleAnnotation::not_valency("Lied"),
        ];
        assert!(matches!(
            check_annotations(&a),
            Err(FilterError::DuplicateAnnotation(_))
        ));
    }

    #[test]
    fn empty_annotations_lenient_and_strict() {
        let agens = ArgRef::new(1, 1);
        assert!(
            filter_candidates(&table(), &[], agens, None, FilterMode::Lenient)
                .unwrap()
                .is_empty()
        );
        let err = filter_candidates(&table(), &[], agens, None, FilterMode::Strict { top_k: 2 });
        assert!(matches!(
            err,
            Err(FilterError::UnannotatedFiller { rank: 1, .. })
        ));
    }

    #[test]
    fn other_slot_is_not_kept() {
        let a = [
            RoleAnnotation::required("Bibel", ArgRef::new(2, 1)),
            RoleAnnotation::required("Autor", ArgRef::new(1, 1)),
        ];
        let out =
            filter_candidates(&table(), &a, ArgRef::new(2, 1), None, FilterMode::Lenient).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].lexeme, "Bibel");
    }

    #[test]
    fn annotation_json() {
        let list = parse_annotations(
            r#"[{"filler":"Autor","verdict":"valency_required","slot":{"index":1,"variant":1}},
                {"filler":"Monat","verdict":"excluded","note":"temporal"}]"#,
        )
        .unwrap();
        assert!(list[0].requires(ArgRef::new(1, 1)));
        assert!(parse_annotations(r#"[{"filler":"x","verdict":"valency_required"}]"#).is_err());
    }
}
