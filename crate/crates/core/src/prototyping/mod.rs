//! Frequency evidence, role filtering and prototypicality grading.

pub mod contrast;
pub mod filter;
pub mod grade;
pub mod table;

pub use contrast::{contrast_report, ContrastReport, ContrastVerdict, LexemeAbsent, Occurrence};
pub use filter::{
    check_annotations, filter_candidates, load_annotations, parse_annotations, FilterError,
    FilterMode, LexicalPrototype, RoleAnnotation, Verdict,
};
pub use grade::{
    grade_class, grade_from_evidence, grade_pattern, ClassGrade, ClassPrototypicality, Grade,
    GradeEvidence, PrototypicalityGrade, Thresholds,
};
pub use table::{
    ingest_frequency_table, per_million, CooccurrenceEntry, CooccurrenceTable, StatedPerMillion,
    TableError, PER_MILLION_TOLERANCE,
};
