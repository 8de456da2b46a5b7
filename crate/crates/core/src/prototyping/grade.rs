//! Prototypicality grading of argument structures and semantic classes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::filter::LexicalPrototype;
use super::table::CooccurrenceTable;
use crate::ontology::ClassPath;

/// Grading thresholds. The defaults put the attested fixture tables into their
/// known grades.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Thresholds {
    /// Minimum pattern frequency, per million tokens.
    pub freq_min: f64,
    /// Minimum number of distinct valency-required fillers.
    pub diversity_min: usize,
    /// A rare pattern is still representative if a required filler ranks this high.
    pub rank_window: u32,
    pub class_members_min: usize,
    /// Absolute summed count that lets a sparse class through.
    pub class_freq_min: u64,
    /// Rank up to which a lexeme counts as prototypical in a contrast report.
    pub contrast_window: u32,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            freq_min: 0.05,
            diversity_min: 5,
            rank_window: 20,
            class_members_min: 3,
            class_freq_min: 1_000,
            contrast_window: 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Grade {
    Excluded,
    #[serde(rename = "TypeII_representative_rare")]
    TypeII,
    #[serde(rename = "TypeI_prototypical")]
    TypeI,
}

impl Grade {
    pub fn label(self) -> &'static str {
        match self {
            Grade::TypeI => "TypeI_prototypical",
            Grade::TypeII => "TypeII_representative_rare",
            Grade::Excluded => "Excluded",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GradeEvidence {
    pub pattern_per_million: f64,
    pub distinct_candidates: usize,
    /// Share of listed hits that belong to valency-required fillers.
    pub valency_share: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrototypicalityGrade {
    pub grade: Grade,
    pub evidence: GradeEvidence,
}

/// TypeI: frequent pattern with diverse required fillers. TypeII: not TypeI,
/// but some required filler ranks inside the rank window. Otherwise Excluded.
pub fn grade_pattern(
    table: &CooccurrenceTable,
    candidates: &[LexicalPrototype],
    config: &Thresholds,
) -> PrototypicalityGrade {
    let distinct: BTreeSet<&str> = candidates.iter().map(|c| c.lexeme.as_str()).collect();
    let listed = table.listed_total();
    let required: u64 = candidates.iter().map(|c| c.count).sum();
    let evidence = GradeEvidence {
        pattern_per_million: table.pattern_per_million(),
        distinct_candidates: distinct.len(),
        valency_share: if listed == 0 {
            0.0
        } else {
            required as f64 / listed as f64
        },
    };
    PrototypicalityGrade {
        grade: grade_from_evidence(&evidence, candidates, config),
        evidence,
    }
}

pub fn grade_from_evidence(
    evidence: &GradeEvidence,
    candidates: &[LexicalPrototype],
    config: &Thresholds,
) -> Grade {
    if evidence.pattern_per_million >= config.freq_min
        && evidence.distinct_candidates >= config.diversity_min
    {
        Grade::TypeI
    } else if candidates.iter().any(|c| c.rank <= config.rank_window) {
        Grade::TypeII
    } else {
        Grade::Excluded
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassGrade {
    Excluded,
    #[serde(rename = "FewRepresentatives_Frequent")]
    FewFrequent,
    #[serde(rename = "ManyRepresentatives_Frequent")]
    ManyFrequent,
}

impl ClassGrade {
    pub fn label(self) -> &'static str {
        match self {
            ClassGrade::ManyFrequent => "ManyRepresentatives_Frequent",
            ClassGrade::FewFrequent => "FewRepresentatives_Frequent",
            ClassGrade::Excluded => "Excluded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPrototypicality {
    pub class: ClassPath,
    pub grade: ClassGrade,
    pub representative_count: usize,
    pub summed_count: u64,
}

/// Grade a class by the required fillers classified under it (at or below `class`).
pub fn grade_class(
    class: &ClassPath,
    candidates: &[LexicalPrototype],
    pattern_grade: Grade,
    config: &Thresholds,
) -> ClassPrototypicality {
    let mut reps = BTreeSet::new();
    let mut summed = 0u64;
    for c in candidates {
        if c.classes.iter().any(|p| class.is_prefix_of(p)) && reps.insert(c.lexeme.as_str()) {
            summed += c.count;
        }
    }
    let representative_count = reps.len();
    let grade = if representative_count >= config.class_members_min
        && pattern_grade != Grade::Excluded
    {
        ClassGrade::ManyFrequent
    } else if representative_count < config.class_members_min && summed >= config.class_freq_min {
        ClassGrade::FewFrequent
    } else {
        ClassGrade::Excluded
    };
    ClassPrototypicality {
        class: class.clone(),
        grade,
        representative_count,
        summed_count: summed,
    }
}
