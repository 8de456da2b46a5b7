//! The structure menu and the semantic packages offered per slot.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::GenerationError;
use crate::bundle::{fits_slot, overridden, Bundle, FrameEvidence, SlotEvidence};
use crate::features::Language;
use crate::lexicon::{ArgRef, Arity, LexemeId, RealizationPattern, SlotKind, ValencyFrame};
use crate::morphology::{realize_np, Binding, RealizeOptions};
use crate::ontology::{rank_by_frequency, ClassPath};
use crate::prototyping::{grade_class, ClassGrade, ClassPrototypicality, Grade};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureInfo {
    pub pattern_id: String,
    pub label: String,
    pub arity: Arity,
    pub grade: Grade,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticPackage {
    /// Dotted class path, or the id of a curated package.
    pub id: String,
    pub label: String,
    pub class: ClassPath,
    pub preview: String,
    pub grade: ClassPrototypicality,
    pub members: Vec<LexemeId>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub curated: bool,
}

/// The weakest grade among the pattern's bound slots.
pub fn pattern_grade(ev: &FrameEvidence, pattern: &RealizationPattern) -> Grade {
    pattern
        .bound_args()
        .iter()
        .map(|a| ev.slots.get(a).map_or(Grade::Excluded, |s| s.grade.grade))
        .min()
        .unwrap_or(Grade::Excluded)
}

pub(crate) fn lookup_frame<'b>(
    bundle: &'b Bundle,
    lang: Language,
    lemma: &str,
) -> Result<(&'b ValencyFrame, &'b FrameEvidence), GenerationError> {
    bundle
        .frame(lang, lemma)
        .ok_or_else(|| GenerationError::UnknownFrame {
            language: lang,
            lemma: lemma.to_string(),
        })
}

/// A pattern that `list_structures` offers.
pub(crate) fn lookup_pattern<'f>(
    frame: &'f ValencyFrame,
    ev: &FrameEvidence,
    pattern_id: &str,
) -> Result<&'f RealizationPattern, GenerationError> {
    frame
        .pattern(pattern_id)
        .filter(|p| pattern_grade(ev, p) != Grade::Excluded)
        .ok_or_else(|| GenerationError::UnknownPattern(pattern_id.to_string()))
}

pub fn list_structures(
    bundle: &Bundle,
    lang: Language,
    lemma: &str,
) -> Result<Vec<StructureInfo>, GenerationError> {
    let (frame, ev) = lookup_frame(bundle, lang, lemma)?;
    let mut out: Vec<StructureInfo> = frame
        .patterns
        .iter()
        .map(|p| StructureInfo {
            pattern_id: p.id.clone(),
            label: p.label.clone(),
            arity: p.arity,
            grade: pattern_grade(ev, p),
        })
        .filter(|s| s.grade != Grade::Excluded)
        .collect();
    out.sort_by(|a, b| {
        b.grade
            .cmp(&a.grade)
            .then_with(|| a.pattern_id.cmp(&b.pattern_id))
    });
    Ok(out)
}

pub(crate) fn slot_kind(pattern: &RealizationPattern, arg: ArgRef) -> SlotKind {
    pattern
        .slots
        .iter()
        .find(|s| s.binds == Some(arg))
        .map(|s| s.kind)
        .expect("bound argument")
}

fn frequencies(slot: &SlotEvidence) -> HashMap<LexemeId, u64> {
    slot.candidates
        .iter()
        .map(|c| (c.lexeme.clone(), c.count))
        .collect()
}

pub fn list_semantic_packages(
    bundle: &Bundle,
    lang: Language,
    lemma: &str,
    pattern_id: &str,
    slot: &str,
) -> Result<Vec<SemanticPackage>, GenerationError> {
    let (frame, ev) = lookup_frame(bundle, lang, lemma)?;
    let pattern = lookup_pattern(frame, ev, pattern_id)?;
    let arg = pattern
        .resolve_slot_name(slot)
        .ok_or_else(|| GenerationError::UnknownSlot(slot.to_string()))?;
    let evidence = &ev.slots[&arg];
    let kind = slot_kind(pattern, arg);
    let lb = bundle.language(lang).expect("frame implies language");
    let freq = frequencies(evidence);
    let usable = |m: &String| fits_slot(&bundle.lexicon, lang, kind, m) && !evidence.rejects(m);

    let mut out = Vec::new();
    for pc in &evidence.config.packages {
        let grade = grade_class(
            &pc.class,
            &evidence.candidates,
            evidence.grade.grade,
            &bundle.thresholds,
        );
        let mut members: Vec<LexemeId> = pc.members.iter().filter(|m| usable(m)).cloned().collect();
        rank_by_frequency(&mut members, &freq);
        if grade.grade == ClassGrade::Excluded || members.is_empty() {
            continue;
        }
        out.push(SemanticPackage {
            id: pc.id.clone(),
            label: pc.id.clone(),
            class: pc.class.clone(),
            preview: String::new(),
            grade,
            members,
            curated: true,
        });
    }

    let induced: BTreeSet<&ClassPath> = evidence
        .candidates
        .iter()
        .flat_map(|c| c.classes.iter())
        .collect();
    let mut classes = Vec::new();
    for class in induced {
        let grade = grade_class(
            class,
            &evidence.candidates,
            evidence.grade.grade,
            &bundle.thresholds,
        );
        if grade.grade == ClassGrade::Excluded {
            continue;
        }
        let dropped = overridden(&evidence.config, class);
        let mut members: Vec<LexemeId> = lb
            .ontology
            .expand_class(class)
            .expect("induced classes exist")
            .into_iter()
            .filter(|m| !dropped.contains(m) && usable(m))
            .collect();
        rank_by_frequency(&mut members, &freq);
        if members.is_empty() {
            continue;
        }
        let label = lb
            .ontology
            .node(class)
            .and_then(|n| n.tags.get("label"))
            .cloned()
            .unwrap_or_else(|| class.dotted());
        classes.push(SemanticPackage {
            id: class.dotted(),
            label,
            class: class.clone(),
            preview: String::new(),
            grade,
            members,
            curated: false,
        });
    }
    classes.sort_by(|a, b| {
        b.grade
            .grade
            .cmp(&a.grade.grade)
            .then(b.grade.summed_count.cmp(&a.grade.summed_count))
            .then_with(|| a.id.cmp(&b.id))
    });
    out.extend(classes);

    for p in &mut out {
        p.preview = preview(bundle, frame, ev, pattern, arg, p)?;
    }
    Ok(out)
}

/// Positions of optional free adjectives, each with the argument whose group it
/// sits in (`None` for the head's group).
pub(crate) fn free_adjective_slots(
    pattern: &RealizationPattern,
    lang: Language,
) -> Vec<(usize, Option<ArgRef>)> {
    let Ok(segments) = pattern.segments(lang) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for seg in &segments {
        let owner = match pattern.slots[seg.nominal].kind {
            SlotKind::Head => None,
            _ => pattern.slots[seg.nominal].binds,
        };
        for &m in &seg.members {
            let s = &pattern.slots[m];
            if s.kind == SlotKind::Adjective && s.binds.is_none() {
                out.push((m, owner));
            }
        }
    }
    out
}

fn preview(
    bundle: &Bundle,
    frame: &ValencyFrame,
    ev: &FrameEvidence,
    pattern: &RealizationPattern,
    arg: ArgRef,
    package: &SemanticPackage,
) -> Result<String, GenerationError> {
    let lang = frame.language();
    let mut binding = Binding::default().with_arg(arg, &package.members[0], None);
    for other in pattern.bound_args().into_iter().filter(|a| *a != arg) {
        let kind = slot_kind(pattern, other);
        let slot = &ev.slots[&other];
        let top = slot
            .candidates
            .iter()
            .map(|c| &c.lexeme)
            .find(|l| fits_slot(&bundle.lexicon, lang, kind, l))
            .ok_or_else(|| {
                GenerationError::InvalidRequest(format!("slot {other} has no usable candidate"))
            })?;
        binding = binding.with_arg(other, top, None);
    }

    let config = &ev.slots[&arg].config;
    let chosen = config.previews.get(&package.class.dotted());
    let head_adj = chosen
        .and_then(|c| c.head.clone())
        .or_else(|| ev.adjectives.first().cloned());
    let filler_adj = chosen
        .and_then(|c| c.filler.clone())
        .or_else(|| config.adjectives.first().cloned());
    let mut adjectives = BTreeMap::new();
    for (pos, owner) in free_adjective_slots(pattern, lang) {
        let pick = match owner {
            None => head_adj.clone(),
            Some(a) if a == arg => filler_adj.clone(),
            Some(_) => None,
        };
        if let Some(adj) = pick {
            adjectives.insert(pos, adj);
        }
    }
    binding.adjectives = adjectives;
    let real = realize_np(
        frame,
        pattern,
        &binding,
        &bundle.lexicon,
        RealizeOptions {
            parenthesize_optional: true,
        },
    )?;
    Ok(real.text)
}
