//! Valency frames, realization patterns and the lexicon container.
//!
//! A lexicon file holds one language: its noun frames (argument slots plus the
//! surface patterns that realize them) and the explicit inflection tables of
//! every lexeme those patterns can mention. Loading is all-or-nothing; a file
//! that violates any invariant yields no `Lexicon` at all.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::features::{
    adjective_key, noun_key, Case, Declension, Definiteness, Gender, GrammaticalFeatures, Language,
    Number,
};

/// Scene labels used to select the frame nouns. Metadata only.
pub const SCENES: [&str; 5] = [
    "BEWEGUNG",
    "LOKATION",
    "AUSDRUCK",
    "AFFIZIERTHEIT",
    "KLASSIFIKATION",
];

pub type LexemeId = String;

/// Argument position `index` realized in variant `variant`, written `Arg<index>.<variant>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArgRef {
    pub index: u32,
    pub variant: u32,
}

impl ArgRef {
    pub fn new(index: u32, variant: u32) -> Self {
        ArgRef { index, variant }
    }
}

impl fmt::Display for ArgRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arg{}.{}", self.index, self.variant)
    }
}

impl FromStr for ArgRef {
    type Err = String;

    /// Accepts `Arg1.1`, `arg1.1` and `1.1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .strip_prefix("Arg")
            .or_else(|| s.strip_prefix("arg"))
            .unwrap_or(s);
        let (i, v) = body
            .split_once('.')
            .ok_or_else(|| format!("malformed argument reference '{s}'"))?;
        let index = i
            .parse()
            .map_err(|_| format!("malformed argument reference '{s}'"))?;
        let variant = v
            .parse()
            .map_err(|_| format!("malformed argument reference '{s}'"))?;
        Ok(ArgRef { index, variant })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgumentSlot {
    pub index: u32,
    pub variant: u32,
    pub role: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub role_gloss: String,
}

impl ArgumentSlot {
    pub fn arg_ref(&self) -> ArgRef {
        ArgRef::new(self.index, self.variant)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotKind {
    Determiner,
    Adjective,
    Head,
    ArgumentFiller,
    Preposition,
    CompoundModifier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSlot {
    pub kind: SlotKind,
    /// Only meaningful for unbound adjective slots.
    #[serde(default, skip_serializing_if = "is_false")]
    pub optional: bool,
    #[serde(default, skip_serializing_if = "GrammaticalFeatures::is_empty")]
    pub marks: GrammaticalFeatures,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binds: Option<ArgRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_text: Option<String>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl PatternSlot {
    /// Head or a nominal argument filler: the noun a group agrees with.
    pub fn is_nominal(&self) -> bool {
        matches!(self.kind, SlotKind::Head | SlotKind::ArgumentFiller)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arity {
    Mono,
    Bi,
}

impl Arity {
    pub fn count(self) -> usize {
        match self {
            Arity::Mono => 1,
            Arity::Bi => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationPattern {
    pub id: String,
    /// Human readable menu label.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub label: String,
    pub arity: Arity,
    pub slots: Vec<PatternSlot>,
    #[serde(skip)]
    pub language: Option<Language>,
}

/// One agreement group: a nominal plus the determiners and adjectives that agree with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Positions (into `slots`) of every member, in surface order.
    pub members: Vec<usize>,
    /// Position of the nominal slot.
    pub nominal: usize,
    /// Preposition governing this group, if any.
    pub governor: Option<usize>,
    pub case: Case,
}

impl RealizationPattern {
    /// Slots that bind an argument, in surface order. Their count is the arity.
    pub fn binding_slots(&self) -> impl Iterator<Item = (usize, &PatternSlot)> {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.binds.is_some())
    }

    pub fn bound_args(&self) -> Vec<ArgRef> {
        self.binding_slots().filter_map(|(_, s)| s.binds).collect()
    }

    /// Resolve a slot name: positional `a`/`b` or an argument reference like `Arg1.1`.
    pub fn resolve_slot_name(&self, name: &str) -> Option<ArgRef> {
        let args = self.bound_args();
        match name {
            "a" => args.first().copied(),
            "b" => args.get(1).copied(),
            other => other.parse::<ArgRef>().ok().filter(|r| args.contains(r)),
        }
    }

    /// Split the slot list into agreement groups.
    ///
    /// A determiner or preposition closes the running group; a second nominal
    /// or a compound modifier after a nominal starts a new one. In German an
    /// adjective after the nominal also starts a new group (and is then
    /// reported as a group without a noun).
    pub fn segments(&self, lang: Language) -> Result<Vec<Segment>, Vec<String>> {
        struct Open {
            members: Vec<usize>,
            nominal: Option<usize>,
            governor: Option<usize>,
        }
        let mut problems = Vec::new();
        let mut groups: Vec<Open> = Vec::new();
        let mut pending_governor: Option<usize> = None;
        let mut current: Option<Open> = None;

        let close = |cur: &mut Option<Open>, groups: &mut Vec<Open>| {
            if let Some(open) = cur.take() {
                groups.push(open);
            }
        };

        for (pos, slot) in self.slots.iter().enumerate() {
            let starts_new = match slot.kind {
                SlotKind::Preposition => {
                    close(&mut current, &mut groups);
                    pending_governor = Some(pos);
                    continue;
                }
                SlotKind::Determiner => true,
                SlotKind::Head | SlotKind::ArgumentFiller => {
                    current.as_ref().is_some_and(|c| c.nominal.is_some())
                }
                SlotKind::CompoundModifier => current.as_ref().is_some_and(|c| c.nominal.is_some()),
                SlotKind::Adjective => {
                    lang.has_case() && current.as_ref().is_some_and(|c| c.nominal.is_some())
                }
            };
            if starts_new {
                close(&mut current, &mut groups);
            }
            let open = current.get_or_insert_with(|| Open {
                members: Vec::new(),
                nominal: None,
                governor: pending_governor.take(),
            });
            open.members.push(pos);
            if slot.is_nominal() {
                open.nominal = Some(pos);
            }
        }
        close(&mut current, &mut groups);
        if pending_governor.is_some() {
            problems.push(format!(
                "pattern {}: preposition at end of pattern",
                self.id
            ));
        }

        let mut segments = Vec::new();
        for (k, g) in groups.into_iter().enumerate() {
            let Some(nominal) = g.nominal else {
                problems.push(format!("pattern {}: group {} has no noun", self.id, k + 1));
                continue;
            };
            // compound modifiers must directly precede the head
            for &m in &g.members {
                if self.slots[m].kind == SlotKind::CompoundModifier {
                    let next = self.slots.get(m + 1).map(|s| s.kind);
                    if next != Some(SlotKind::Head) {
                        problems.push(format!(
                            "pattern {}: compound modifier at position {} not followed by the head",
                            self.id, m
                        ));
                    }
                }
            }
            let mut case: Option<Case> = None;
            let mut marked = |c: Option<Case>, problems: &mut Vec<String>| {
                if let Some(c) = c {
                    match case {
                        Some(prev) if prev != c => problems.push(format!(
                            "pattern {}: group {} has conflicting case marks",
                            self.id,
                            k + 1
                        )),
                        _ => case = Some(c),
                    }
                }
            };
            marked(self.slots[nominal].marks.case, &mut problems);
            for &m in &g.members {
                marked(self.slots[m].marks.case, &mut problems);
            }
            if let Some(gov) = g.governor {
                marked(self.slots[gov].marks.case, &mut problems);
            }
            let case = match case {
                Some(c) => c,
                None if self.slots[nominal].kind == SlotKind::Head => Case::unmarked(lang),
                None if !lang.has_case() => Case::None,
                None => {
                    problems.push(format!(
                        "pattern {}: argument group {} carries no case",
                        self.id,
                        k + 1
                    ));
                    continue;
                }
            };
            segments.push(Segment {
                members: g.members,
                nominal,
                governor: g.governor,
                case,
            });
        }
        if problems.is_empty() {
            Ok(segments)
        } else {
            Err(problems)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValencyFrame {
    pub lemma: String,
    #[serde(skip)]
    pub language: Option<Language>,
    pub gender: Gender,
    pub inflection_ref: LexemeId,
    pub scene: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<String>,
    pub slots: Vec<ArgumentSlot>,
    pub patterns: Vec<RealizationPattern>,
}

impl ValencyFrame {
    pub fn language(&self) -> Language {
        self.language.expect("frame language is set at load time")
    }

    pub fn pattern(&self, id: &str) -> Option<&RealizationPattern> {
        self.patterns.iter().find(|p| p.id == id)
    }

    pub fn slot(&self, arg: ArgRef) -> Option<&ArgumentSlot> {
        self.slots.iter().find(|s| s.arg_ref() == arg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartOfSpeech {
    Noun,
    Adjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexicalEntry {
    pub id: LexemeId,
    pub lemma: String,
    #[serde(skip)]
    pub language: Option<Language>,
    pub pos: PartOfSpeech,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gender: Option<Gender>,
    /// Explicit inflection table, keyed by feature path (`gen.sg`, `weak.masc.nom.sg`).
    pub forms: BTreeMap<String, String>,
    /// German linking element used when this noun is a compound modifier.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compound_link: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<String>,
}

impl LexicalEntry {
    pub fn language(&self) -> Language {
        self.language.expect("entry language is set at load time")
    }

    /// Every key the declared table must contain.
    pub fn required_keys(lang: Language, pos: PartOfSpeech) -> Vec<String> {
        match pos {
            PartOfSpeech::Noun => Case::for_language(lang)
                .iter()
                .flat_map(|&c| Number::ALL.iter().map(move |&n| noun_key(lang, c, n)))
                .collect(),
            PartOfSpeech::Adjective => {
                let classes: &[Declension] = if lang.has_case() {
                    &Declension::ALL
                } else {
                    &Declension::ALL[..1]
                };
                let mut keys = Vec::new();
                for &d in classes {
                    for &g in Gender::for_language(lang) {
                        for &c in Case::for_language(lang) {
                            for n in Number::ALL {
                                keys.push(adjective_key(lang, d, g, c, n));
                            }
                        }
                    }
                }
                keys
            }
        }
    }

    fn violations(&self, lang: Language) -> Vec<String> {
        let mut out = Vec::new();
        if self.id.is_empty() || self.lemma.is_empty() {
            out.push(format!("entry '{}': empty id or lemma", self.id));
        }
        match (self.pos, self.gender) {
            (PartOfSpeech::Noun, None) => {
                out.push(format!("entry {}: noun without gender", self.id))
            }
            (PartOfSpeech::Noun, Some(Gender::Neut)) if !lang.has_case() => out.push(format!(
                "entry {}: neuter gender only exists in de",
                self.id
            )),
            _ => {}
        }
        let required: BTreeSet<String> = Self::required_keys(lang, self.pos).into_iter().collect();
        for key in &required {
            match self.forms.get(key) {
                None => out.push(format!("entry {}: missing form {key}", self.id)),
                Some(f) if f.trim().is_empty() && self.pos == PartOfSpeech::Noun => {
                    out.push(format!("entry {}: empty form {key}", self.id))
                }
                _ => {}
            }
        }
        for key in self.forms.keys() {
            if !required.contains(key) {
                out.push(format!("entry {}: unexpected form key {key}", self.id));
            }
        }
        if self.compound_link.is_some() && (self.pos != PartOfSpeech::Noun || !lang.has_case()) {
            out.push(format!(
                "entry {}: linking element only applies to de nouns",
                self.id
            ));
        }
        out
    }
}

/// The on-disk shape of one lexicon file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexiconDocument {
    pub language: Language,
    #[serde(default)]
    pub frames: Vec<ValencyFrame>,
    #[serde(default)]
    pub entries: Vec<LexicalEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("dangling reference: {0}")]
    DanglingReference(String),
    #[error("duplicate id: {0}")]
    DuplicateId(String),
    #[error("invalid frame {lemma}: {}", violations.join("; "))]
    InvalidFrame {
        lemma: String,
        violations: Vec<String>,
    },
}

/// Kind of a frame invariant violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Scene,
    Slot,
    Pattern,
    Dangling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Check every frame-local invariant. An empty result means the frame is well formed.
pub fn validate_frame(frame: &ValencyFrame) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |rule, message: String| out.push(Violation { rule, message });

    if !SCENES.contains(&frame.scene.as_str()) {
        push(
            Rule::Scene,
            format!(
                "scene '{}' not in the scene set {}",
                frame.scene,
                SCENES.join("/")
            ),
        );
    }
    if frame.lemma.trim().is_empty() {
        push(Rule::Slot, "lemma: empty".to_string());
    }
    let mut seen = BTreeSet::new();
    for s in &frame.slots {
        if s.index == 0 || s.variant == 0 {
            push(
                Rule::Slot,
                format!("slot {}: index and variant start at 1", s.arg_ref()),
            );
        }
        if !seen.insert(s.arg_ref()) {
            push(
                Rule::Slot,
                format!("slot {}: duplicate (index, variant)", s.arg_ref()),
            );
        }
        if s.role.trim().is_empty() {
            push(
                Rule::Slot,
                format!("slot {}: empty role label", s.arg_ref()),
            );
        }
    }

    let lang = frame.language.unwrap_or(Language::De);
    let mut ids = BTreeSet::new();
    for p in &frame.patterns {
        if !ids.insert(p.id.as_str()) {
            push(Rule::Pattern, format!("pattern {}: duplicate id", p.id));
        }
        if p.language.is_some_and(|l| l != lang) {
            push(
                Rule::Pattern,
                format!("pattern {}: language differs from frame", p.id),
            );
        }
        let heads = p.slots.iter().filter(|s| s.kind == SlotKind::Head).count();
        if heads == 0 {
            push(Rule::Pattern, format!("pattern {}: no head slot", p.id));
        } else if heads > 1 {
            push(
                Rule::Pattern,
                format!("pattern {}: multiple head slots", p.id),
            );
        }
        let bound = p.binding_slots().count();
        if bound != p.arity.count() {
            push(
                Rule::Pattern,
                format!(
                    "pattern {}: arity {:?} but {} argument slots",
                    p.id, p.arity, bound
                ),
            );
        }
        let mut bound_args = BTreeSet::new();
        for (pos, s) in p.slots.iter().enumerate() {
            match s.kind {
                SlotKind::ArgumentFiller | SlotKind::CompoundModifier if s.binds.is_none() => push(
                    Rule::Pattern,
                    format!("pattern {}: slot {pos} must bind an argument", p.id),
                ),
                SlotKind::Preposition
                    if s.fixed_text.as_deref().is_none_or(|t| t.trim().is_empty()) =>
                {
                    push(
                        Rule::Pattern,
                        format!("pattern {}: preposition {pos} without text", p.id),
                    )
                }
                SlotKind::Head | SlotKind::Determiner | SlotKind::Preposition
                    if s.binds.is_some() =>
                {
                    push(
                        Rule::Pattern,
                        format!("pattern {}: slot {pos} cannot bind", p.id),
                    )
                }
                SlotKind::CompoundModifier if !lang.has_case() => push(
                    Rule::Pattern,
                    format!("pattern {}: compounds are only realized in de", p.id),
                ),
                _ => {}
            }
            if s.optional && !(s.kind == SlotKind::Adjective && s.binds.is_none()) {
                push(
                    Rule::Pattern,
                    format!("pattern {}: slot {pos} cannot be optional", p.id),
                );
            }
            if let Some(c) = s.marks.case {
                if lang.has_case() == (c == Case::None) {
                    push(
                        Rule::Pattern,
                        format!("pattern {}: case {} not valid for {lang}", p.id, c.key()),
                    );
                }
            }
            if s.marks.gender == Some(Gender::Neut) && !lang.has_case() {
                push(
                    Rule::Pattern,
                    format!("pattern {}: neuter not valid for {lang}", p.id),
                );
            }
            if s.kind == SlotKind::Determiner && s.marks.definiteness == Some(Definiteness::None) {
                push(
                    Rule::Pattern,
                    format!("pattern {}: determiner {pos} without article", p.id),
                );
            }
            if let Some(arg) = s.binds {
                if !bound_args.insert(arg) {
                    push(
                        Rule::Pattern,
                        format!("pattern {}: {arg} bound twice", p.id),
                    );
                }
                if frame.slot(arg).is_none() {
                    push(
                        Rule::Dangling,
                        format!("pattern {}: binds unknown slot {arg}", p.id),
                    );
                }
            }
        }
        if let Err(problems) = p.segments(lang) {
            for m in problems {
                push(Rule::Pattern, m);
            }
        }
    }
    out
}

/// All frames and lexical entries of the loaded languages. Immutable after load.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Lexicon {
    frames: BTreeMap<(Language, String), ValencyFrame>,
    entries: BTreeMap<(Language, LexemeId), LexicalEntry>,
}

impl Lexicon {
    pub fn frame(&self, lang: Language, lemma: &str) -> Option<&ValencyFrame> {
        self.frames.get(&(lang, lemma.to_string()))
    }

    pub fn entry(&self, lang: Language, id: &str) -> Option<&LexicalEntry> {
        self.entries.get(&(lang, id.to_string()))
    }

    pub fn frames(&self) -> impl Iterator<Item = &ValencyFrame> {
        self.frames.values()
    }

    pub fn frames_of(&self, lang: Language) -> impl Iterator<Item = &ValencyFrame> {
        self.frames
            .iter()
            .filter(move |((l, _), _)| *l == lang)
            .map(|(_, f)| f)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexicalEntry> {
        self.entries.values()
    }

    pub fn entries_of(&self, lang: Language) -> impl Iterator<Item = &LexicalEntry> {
        self.entries
            .iter()
            .filter(move |((l, _), _)| *l == lang)
            .map(|(_, e)| e)
    }

    pub fn languages(&self) -> BTreeSet<Language> {
        self.frames
            .keys()
            .map(|(l, _)| *l)
            .chain(self.entries.keys().map(|(l, _)| *l))
            .collect()
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Build a lexicon from one parsed document, checking every invariant.
    pub fn from_document(mut doc: LexiconDocument) -> Result<Lexicon, LexiconError> {
        let lang = doc.language;
        let mut lex = Lexicon::default();

        for e in &mut doc.entries {
            e.language = Some(lang);
        }
        let mut entry_problems = Vec::new();
        for e in doc.entries {
            let problems = e.violations(lang);
            if !problems.is_empty() {
                entry_problems.extend(problems);
                continue;
            }
            let key = (lang, e.id.clone());
            if lex.entries.insert(key, e.clone()).is_some() {
                return Err(LexiconError::DuplicateId(format!(
                    "entry {}:{}",
                    lang, e.id
                )));
            }
        }
        if !entry_problems.is_empty() {
            return Err(LexiconError::Schema(entry_problems.join("; ")));
        }

        let mut pattern_ids = BTreeSet::new();
        for mut frame in doc.frames {
            frame.language = Some(lang);
            for p in &mut frame.patterns {
                p.language = Some(lang);
            }
            let violations = validate_frame(&frame);
            if let Some(d) = violations.iter().find(|v| v.rule == Rule::Dangling) {
                return Err(LexiconError::DanglingReference(format!(
                    "{}: {}",
                    frame.lemma, d
                )));
            }
            if !violations.is_empty() {
                return Err(LexiconError::InvalidFrame {
                    lemma: frame.lemma.clone(),
                    violations: violations.iter().map(ToString::to_string).collect(),
                });
            }
            for p in &frame.patterns {
                if !pattern_ids.insert(p.id.clone()) {
                    return Err(LexiconError::DuplicateId(format!("pattern {}", p.id)));
                }
            }
            match lex.entries.get(&(lang, frame.inflection_ref.clone())) {
                Some(e) if e.pos == PartOfSpeech::Noun && e.gender == Some(frame.gender) => {}
                Some(_) => {
                    return Err(LexiconError::Schema(format!(
                        "frame {}: inflection_ref {} is not a {:?} noun",
                        frame.lemma, frame.inflection_ref, frame.gender
                    )))
                }
                None => {
                    return Err(LexiconError::DanglingReference(format!(
                        "frame {}: inflection_ref {} has no entry",
                        frame.lemma, frame.inflection_ref
                    )))
                }
            }
            let key = (lang, frame.lemma.clone());
            if lex.frames.contains_key(&key) {
                return Err(LexiconError::DuplicateId(format!(
                    "frame {}:{}",
                    lang, frame.lemma
                )));
            }
            lex.frames.insert(key, frame);
        }
        Ok(lex)
    }

    /// Fold another lexicon in. Languages must not overlap.
    pub fn merge(&mut self, other: Lexicon) -> Result<(), LexiconError> {
        for (k, f) in other.frames {
            if self.frames.contains_key(&k) {
                return Err(LexiconError::DuplicateId(format!("frame {}:{}", k.0, k.1)));
            }
            self.frames.insert(k, f);
        }
        for (k, e) in other.entries {
            if self.entries.contains_key(&k) {
                return Err(LexiconError::DuplicateId(format!("entry {}:{}", k.0, k.1)));
            }
            self.entries.insert(k, e);
        }
        Ok(())
    }

    /// One document per language, in the on-disk schema.
    pub fn to_documents(&self) -> Vec<LexiconDocument> {
        self.languages()
            .into_iter()
            .map(|lang| LexiconDocument {
                language: lang,
                frames: self.frames_of(lang).cloned().collect(),
                entries: self.entries_of(lang).cloned().collect(),
            })
            .collect()
    }
}

pub fn parse_lexicon(json: &str) -> Result<Lexicon, LexiconError> {
    let doc: LexiconDocument =
        serde_json::from_str(json).map_err(|e| LexiconError::Schema(e.to_string()))?;
    Lexicon::from_document(doc)
}

pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let lex = parse_lexicon(&text)?;
    tracing::debug!(path = %path.display(), frames = lex.frame_count(), entries = lex.entry_count(), "lexicon loaded");
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn noun(id: &str, gender: &str) -> serde_json::Value {
        let mut forms = serde_json::Map::new();
        for c in ["nom", "gen", "dat", "acc"] {
            for n in ["sg", "pl"] {
                forms.insert(format!("{c}.{n}"), json!(id));
            }
        }
        json!({"id": id, "lemma": id, "pos": "noun", "gender": gender, "forms": forms})
    }

    fn text_frame(patterns: serde_json::Value) -> serde_json::Value {
        json!({
            "lemma": "Text", "gender": "masc", "inflection_ref": "Text", "scene": "AUSDRUCK",
            "slots": [
                {"index": 1, "variant": 1, "role": "AGENS"},
                {"index": 5, "variant": 2, "role": "TEXTSORTE"}
            ],
            "patterns": patterns
        })
    }

    fn gen_pattern(id: &str, arg: (u32, u32)) -> serde_json::Value {
        json!({"id": id, "arity": "mono", "slots": [
            {"kind": "determiner", "marks": {"definiteness": "definite"}},
            {"kind": "head"},
            {"kind": "determiner", "marks": {"definiteness": "definite", "case": "gen"}},
            {"kind": "argument_filler", "binds": {"index": arg.0, "variant": arg.1}, "marks": {"case": "gen"}}
        ]})
    }

    fn doc(frames: serde_json::Value) -> String {
        json!({"language": "de", "frames": frames, "entries": [noun("Text", "masc")]}).to_string()
    }

    #[test]
    fn empty_document() {
        let lex = parse_lexicon(r#"{"language":"de","frames":[],"entries":[]}"#).unwrap();
        assert_eq!(lex.frame_count(), 0);
        assert_eq!(lex.entry_count(), 0);
    }

    #[test]
    fn unknown_language_is_schema_error() {
        let err = parse_lexicon(r#"{"language":"it","frames":[],"entries":[]}"#).unwrap_err();
        assert!(matches!(err, LexiconError::Schema(_)), "{err}");
    }

    #[test]
    fn dangling_slot_reference() {
        let text = doc(json!([text_frame(json!([gen_pattern("p1", (9, 1))]))]));
        let err = parse_lexicon(&text).unwrap_err();
        assert!(matches!(err, LexiconError::DanglingReference(_)), "{err}");
    }

    #[test]
    fn duplicate_pattern_id_across_frames() {
        let mut second = text_frame(json!([gen_pattern("p1", (1, 1))]));
        second["lemma"] = json!("Text2");
        let text = doc(json!([
            text_frame(json!([gen_pattern("p1", (1, 1))])),
            second
        ]));
        assert!(matches!(
            parse_lexicon(&text).unwrap_err(),
            LexiconError::DuplicateId(_)
        ));
    }

    #[test]
    fn well_formed_frame_has_no_violations() {
        let text = doc(json!([text_frame(json!([gen_pattern("p1", (1, 1))]))]));
        let lex = parse_lexicon(&text).unwrap();
        let frame = lex.frame(Language::De, "Text").unwrap();
        assert!(validate_frame(frame).is_empty());
    }

    #[test]
    fn two_heads_reported() {
        let mut p = gen_pattern("p1", (1, 1));
        p["slots"]
            .as_array_mut()
            .unwrap()
            .insert(1, json!({"kind": "head"}));
        let mut frame: ValencyFrame = serde_json::from_value(text_frame(json!([p]))).unwrap();
        frame.language = Some(Language::De);
        let v: Vec<String> = validate_frame(&frame)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert!(
            v.contains(&"pattern p1: multiple head slots".to_string()),
            "{v:?}"
        );
    }

    #[test]
    fn scene_outside_inventory() {
        let mut raw = text_frame(json!([gen_pattern("p1", (1, 1))]));
        raw["scene"] = json!("WETTER");
        let mut frame: ValencyFrame = serde_json::from_value(raw).unwrap();
        frame.language = Some(Language::De);
        let v = validate_frame(&frame);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::Scene);
        for scene in SCENES {
            frame.scene = scene.to_string();
            assert!(validate_frame(&frame).is_empty());
        }
    }

    #[test]
    fn preposition_needs_text_and_filler_needs_binding() {
        let p = json!({"id": "p2", "arity": "mono", "slots": [
            {"kind": "determiner"}, {"kind": "head"},
            {"kind": "preposition", "marks": {"case": "acc"}},
            {"kind": "argument_filler", "binds": {"index": 1, "variant": 1}},
            {"kind": "argument_filler"}
        ]});
        let mut frame: ValencyFrame = serde_json::from_value(text_frame(json!([p]))).unwrap();
        frame.language = Some(Language::De);
        let v: Vec<String> = validate_frame(&frame)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert!(v.iter().any(|m| m.contains("without text")), "{v:?}");
        assert!(v.iter().any(|m| m.contains("must bind")), "{v:?}");
    }

    #[test]
    fn segments_of_compound_genitive_pattern() {
        let p: RealizationPattern =
            serde_json::from_value(json!({"id": "c", "arity": "bi", "slots": [
                {"kind": "determiner"},
                {"kind": "compound_modifier", "binds": {"index": 5, "variant": 2}},
                {"kind": "head"},
                {"kind": "determiner", "marks": {"case": "gen"}},
                {"kind": "argument_filler", "binds": {"index": 1, "variant": 1}}
            ]}))
            .unwrap();
        let segs = p.segments(Language::De).unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].members, vec![0, 1, 2]);
        assert_eq!(segs[0].case, Case::Nom);
        assert_eq!(segs[1].members, vec![3, 4]);
        assert_eq!(segs[1].case, Case::Gen);
        assert_eq!(p.resolve_slot_name("a"), Some(ArgRef::new(5, 2)));
        assert_eq!(p.resolve_slot_name("Arg1.1"), Some(ArgRef::new(1, 1)));
        assert_eq!(p.resolve_slot_name("c"), None);
    }

    #[test]
    fn spanish_postnominal_adjective_joins_group() {
        let p: RealizationPattern = serde_json::from_value(json!({"id": "es", "arity": "mono", "slots": [
            {"kind": "determiner"}, {"kind": "head"}, {"kind": "adjective", "optional": true},
            {"kind": "preposition", "fixed_text": "de"},
            {"kind": "determiner"}, {"kind": "argument_filler", "binds": {"index": 1, "variant": 1}}
        ]}))
        .unwrap();
        let segs = p.segments(Language::Es).unwrap();
        assert_eq!(segs[0].members, vec![0, 1, 2]);
        assert_eq!(segs[1].governor, Some(3));
        assert!(p.segments(Language::De).is_err());
    }

    #[test]
    fn arg_ref_parsing() {
        assert_eq!("Arg5.2".parse::<ArgRef>().unwrap(), ArgRef::new(5, 2));
        assert_eq!("1.4".parse::<ArgRef>().unwrap(), ArgRef::new(1, 4));
        assert!("Arg5".parse::<ArgRef>().is_err());
        assert_eq!(ArgRef::new(3, 1).to_string(), "Arg3.1");
    }
}
