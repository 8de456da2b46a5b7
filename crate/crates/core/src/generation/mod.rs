//! Structure and package menus, the one- and two-slot generators, export.

pub mod catalog;
pub mod engine;
pub mod export;

use crate::features::Language;
use crate::morphology::MorphError;

pub use catalog::{
    list_semantic_packages, list_structures, pattern_grade, SemanticPackage, StructureInfo,
};
pub use engine::{
    generate, generate_bi, generate_mono, realize_derivation, Derivation, GeneratedPhrase,
    Generation, GenerationRequest, GenerationStats, Scores, SlotBinding, DEFAULT_LIMIT,
};
pub use export::{
    export_phrases, parse_csv_export, parse_json_export, CsvRecord, ExportFormat, ExportRecord,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenerationError {
    #[error("unknown language {0}")]
    UnknownLanguage(String),
    #[error("unknown frame {lemma} ({language})")]
    UnknownFrame { language: Language, lemma: String },
    #[error("unknown pattern {0}")]
    UnknownPattern(String),
    #[error("unknown slot {0}")]
    UnknownSlot(String),
    #[error("package {package} is not offered for slot {slot}")]
    UnknownPackage { slot: String, package: String },
    #[error("pattern binds {expected} slot(s), request selects packages for {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("no package selected for slot {0}")]
    EmptyPackageSelection(String),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error(transparent)]
    Realization(#[from] MorphError),
}

impl GenerationError {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            GenerationError::UnknownLanguage(_) => "unknown_language",
            GenerationError::UnknownFrame { .. } => "unknown_frame",
            GenerationError::UnknownPattern(_) => "unknown_pattern",
            GenerationError::UnknownSlot(_) => "unknown_slot",
            GenerationError::UnknownPackage { .. } => "package_mismatch",
            GenerationError::ArityMismatch { .. } => "arity_mismatch",
            GenerationError::EmptyPackageSelection(_) => "empty_package_selection",
            GenerationError::InvalidRequest(_) => "invalid_request",
            GenerationError::Realization(_) => "realization_failed",
        }
    }
}
