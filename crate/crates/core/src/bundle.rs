//! Loading a data directory: lexica, ontologies, slot evidence and vectors.
//!
//! Layout, per language code `xx`:
//!
//! ```text
//! lexicon.xx.json      frames and inflection tables (required)
//! ontology.xx.json     semantic classes
//! prototypes.xx.json   per-frame slot configuration: table, annotations, policies
//! vectors.xx.txt       word vectors (optional; pairs go unscored without it)
//! ```
//!
//! Table and annotation paths inside `prototypes.xx.json` are relative to the
//! data directory.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::embeddings::{VectorError, VectorStore};
use crate::features::Language;
use crate::lexicon::{
    load_lexicon, ArgRef, LexemeId, Lexicon, LexiconError, PartOfSpeech, SlotKind, ValencyFrame,
};
use crate::ontology::{load_ontology, ClassPath, Ontology, OntologyError};
use crate::prototyping::{
    filter_candidates, grade_pattern, ingest_frequency_table, load_annotations, CooccurrenceTable,
    FilterError, FilterMode, LexicalPrototype, PrototypicalityGrade, RoleAnnotation, TableError,
    Thresholds,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberPolicy {
    #[default]
    Sg,
    /// Realize each member in singular and plural.
    Both,
}

/// A hand-picked member list offered next to the ontology classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageConfig {
    pub id: String,
    #[serde(with = "dotted")]
    pub class: ClassPath,
    pub members: Vec<LexemeId>,
}

/// Adjectives used in the preview string of one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreviewAdjectives {
    #[serde(default)]
    pub head: Option<LexemeId>,
    #[serde(default)]
    pub filler: Option<LexemeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotConfig {
    pub table: PathBuf,
    pub annotations: PathBuf,
    #[serde(default)]
    pub number: NumberPolicy,
    /// Adjectives that may modify a filler of this slot.
    #[serde(default)]
    pub adjectives: Vec<LexemeId>,
    /// Ontology members that never fill this slot, keyed by the class they are dropped from.
    #[serde(default)]
    pub overrides: BTreeMap<String, Vec<LexemeId>>,
    #[serde(default)]
    pub packages: Vec<PackageConfig>,
    #[serde(default)]
    pub previews: BTreeMap<String, PreviewAdjectives>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameConfig {
    pub lemma: String,
    /// Adjectives that may modify the head noun.
    #[serde(default)]
    pub adjectives: Vec<LexemeId>,
    pub slots: BTreeMap<String, SlotConfig>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrototypesDocument {
    pub language: Language,
    pub frames: Vec<FrameConfig>,
}

/// Everything known about one argument slot of one frame.
#[derive(Debug, Clone)]
pub struct SlotEvidence {
    pub arg: ArgRef,
    pub config: SlotConfig,
    pub table: CooccurrenceTable,
    pub annotations: Vec<RoleAnnotation>,
    /// Valency-required fillers in table order.
    pub candidates: Vec<LexicalPrototype>,
    pub grade: PrototypicalityGrade,
}

impl SlotEvidence {
    /// Corpus count of a required filler; zero when it is not among the candidates.
    pub fn frequency(&self, lexeme: &str) -> u64 {
        self.candidates
            .iter()
            .find(|c| c.lexeme == lexeme)
            .map_or(0, |c| c.count)
    }

    /// Annotated for this table but judged not to realize this slot.
    pub fn rejects(&self, lexeme: &str) -> bool {
        self.annotations
            .iter()
            .any(|a| a.filler == lexeme && !a.requires(self.arg))
    }
}

#[derive(Debug, Clone)]
pub struct FrameEvidence {
    pub lemma: String,
    pub adjectives: Vec<LexemeId>,
    pub slots: BTreeMap<ArgRef, SlotEvidence>,
}

#[derive(Debug, Clone)]
pub struct LanguageBundle {
    pub language: Language,
    pub ontology: Ontology,
    pub vectors: Option<VectorStore>,
    pub frames: BTreeMap<String, FrameEvidence>,
}

#[derive(Debug, thiserror::Error)]
pub enum BundleError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Ontology(#[from] OntologyError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Annotations(#[from] FilterError),
    #[error(transparent)]
    Vectors(#[from] VectorError),
    #[error("{0}")]
    Invalid(String),
    #[error("no lexicon.<lang>.json in {0}")]
    Empty(String),
}

/// An immutable snapshot of a data directory.
#[derive(Debug, Clone)]
pub struct Bundle {
    pub root: PathBuf,
    pub thresholds: Thresholds,
    pub lexicon: Lexicon,
    languages: BTreeMap<Language, LanguageBundle>,
}

impl Bundle {
    pub fn load(dir: impl AsRef<Path>, thresholds: Thresholds) -> Result<Bundle, BundleError> {
        let root = dir.as_ref().to_path_buf();
        let mut lexicon = Lexicon::default();
        let mut languages = BTreeMap::new();
        let mut tables: HashMap<PathBuf, CooccurrenceTable> = HashMap::new();
        for lang in Language::ALL {
            let lex_path = root.join(format!("lexicon.{lang}.json"));
            if !lex_path.exists() {
                continue;
            }
            lexicon.merge(load_lexicon(&lex_path)?)?;
            let ontology = load_ontology(root.join(format!("ontology.{lang}.json")))?;
            let proto_path = root.join(format!("prototypes.{lang}.json"));
            let text = std::fs::read_to_string(&proto_path).map_err(|source| BundleError::Io {
                path: proto_path.display().to_string(),
                source,
            })?;
            let doc: PrototypesDocument =
                serde_json::from_str(&text).map_err(|e| BundleError::Schema {
                    path: proto_path.display().to_string(),
                    message: e.to_string(),
                })?;
            if doc.language != lang {
                return Err(BundleError::Invalid(format!(
                    "{} declares language {}",
                    proto_path.display(),
                    doc.language
                )));
            }
            let vec_path = root.join(format!("vectors.{lang}.txt"));
            let vectors = if vec_path.exists() {
                Some(VectorStore::load(&vec_path)?)
            } else {
                None
            };

            let mut frames = BTreeMap::new();
            for fc in doc.frames {
                let frame = lexicon.frame(lang, &fc.lemma).ok_or_else(|| {
                    BundleError::Invalid(format!(
                        "{lang}: configured frame {} has no lexicon entry",
                        fc.lemma
                    ))
                })?;
                let ev = load_frame(&root, lang, frame, fc, &ontology, &thresholds, &mut tables)?;
                frames.insert(ev.lemma.clone(), ev);
            }
            languages.insert(
                lang,
                LanguageBundle {
                    language: lang,
                    ontology,
                    vectors,
                    frames,
                },
            );
        }
        if languages.is_empty() {
            return Err(BundleError::Empty(root.display().to_string()));
        }
        let bundle = Bundle {
            root,
            thresholds,
            lexicon,
            languages,
        };
        bundle.validate()?;
        Ok(bundle)
    }

    pub fn languages(&self) -> impl Iterator<Item = Language> + '_ {
        self.languages.keys().copied()
    }

    pub fn language(&self, lang: Language) -> Option<&LanguageBundle> {
        self.languages.get(&lang)
    }

    pub fn frame(&self, lang: Language, lemma: &str) -> Option<(&ValencyFrame, &FrameEvidence)> {
        let frame = self.lexicon.frame(lang, lemma)?;
        let ev = self.languages.get(&lang)?.frames.get(lemma)?;
        Some((frame, ev))
    }

    /// Cross-file checks: ontology members, configured adjectives and pattern slots.
    fn validate(&self) -> Result<(), BundleError> {
        let mut problems = Vec::new();
        for (lang, lb) in &self.languages {
            for node in lb.ontology.nodes() {
                for m in &node.members {
                    if self.lexicon.entry(*lang, m).is_none() {
                        problems.push(format!(
                            "{lang}: ontology member {m} of {} has no entry",
                            node.path
                        ));
                    }
                }
            }
            let adjective = |id: &str| {
                self.lexicon
                    .entry(*lang, id)
                    .is_some_and(|e| e.pos == PartOfSpeech::Adjective)
            };
            for frame in self.lexicon.frames_of(*lang) {
                let Some(ev) = lb.frames.get(&frame.lemma) else {
                    problems.push(format!(
                        "{lang}: frame {} has no slot configuration",
                        frame.lemma
                    ));
                    continue;
                };
                for a in ev.adjectives.iter().filter(|a| !adjective(a)) {
                    problems.push(format!(
                        "{lang}: {} head adjective {a} is not an adjective entry",
                        frame.lemma
                    ));
                }
                for s in ev.slots.values() {
                    let c = &s.config;
                    let listed = c.adjectives.iter().chain(
                        c.previews
                            .values()
                            .flat_map(|p| p.head.iter().chain(&p.filler)),
                    );
                    for a in listed.filter(|a| !adjective(a)) {
                        problems.push(format!(
                            "{lang}: {} {} adjective {a} is not an adjective entry",
                            frame.lemma, s.arg
                        ));
                    }
                    for p in &c.packages {
                        if !lb.ontology.contains(&p.class) {
                            problems.push(format!(
                                "{lang}: package {} names unknown class {}",
                                p.id, p.class
                            ));
                        }
                        for m in p
                            .members
                            .iter()
                            .filter(|m| self.lexicon.entry(*lang, m).is_none())
                        {
                            problems
                                .push(format!("{lang}: package {} member {m} has no entry", p.id));
                        }
                    }
                    for class in c.overrides.keys().chain(c.previews.keys()) {
                        if class
                            .parse::<ClassPath>()
                            .map_or(true, |p| !lb.ontology.contains(&p))
                        {
                            problems.push(format!(
                                "{lang}: {} {} names unknown class {class}",
                                frame.lemma, s.arg
                            ));
                        }
                    }
                }
                for p in &frame.patterns {
                    for arg in p.bound_args() {
                        if !ev.slots.contains_key(&arg) {
                            problems.push(format!(
                                "{lang}: {} pattern {} binds {arg} without slot evidence",
                                frame.lemma, p.id
                            ));
                        }
                    }
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(BundleError::Invalid(problems.join("\n")))
        }
    }
}

fn load_frame(
    root: &Path,
    lang: Language,
    frame: &ValencyFrame,
    fc: FrameConfig,
    ontology: &Ontology,
    thresholds: &Thresholds,
    tables: &mut HashMap<PathBuf, CooccurrenceTable>,
) -> Result<FrameEvidence, BundleError> {
    let mut slots = BTreeMap::new();
    for (name, config) in fc.slots {
        let arg: ArgRef = name.parse().map_err(BundleError::Invalid)?;
        if frame.slot(arg).is_none() {
            return Err(BundleError::Invalid(format!(
                "{lang}: {} has no argument slot {arg}",
                fc.lemma
            )));
        }
        let table_path = root.join(&config.table);
        let table = match tables.get(&table_path) {
            Some(t) => t.clone(),
            None => {
                let t = ingest_frequency_table(&table_path, (lang, fc.lemma.clone()))?;
                tables.insert(table_path, t.clone());
                t
            }
        };
        let annotations = load_annotations(root.join(&config.annotations))?;
        let candidates = filter_candidates(
            &table,
            &annotations,
            arg,
            Some(ontology),
            FilterMode::Lenient,
        )?;
        let grade = grade_pattern(&table, &candidates, thresholds);
        tracing::debug!(lang = %lang, lemma = %fc.lemma, slot = %arg, grade = grade.grade.label(), candidates = candidates.len(), "slot graded");
        slots.insert(
            arg,
            SlotEvidence {
                arg,
                config,
                table,
                annotations,
                candidates,
                grade,
            },
        );
    }
    Ok(FrameEvidence {
        lemma: fc.lemma,
        adjectives: fc.adjectives,
        slots,
    })
}

/// Whether `lexeme` can fill a pattern slot of `kind`.
pub fn fits_slot(lexicon: &Lexicon, lang: Language, kind: SlotKind, lexeme: &str) -> bool {
    let Some(e) = lexicon.entry(lang, lexeme) else {
        return false;
    };
    match kind {
        SlotKind::ArgumentFiller => e.pos == PartOfSpeech::Noun,
        SlotKind::Adjective => e.pos == PartOfSpeech::Adjective,
        SlotKind::CompoundModifier => e.pos == PartOfSpeech::Noun && e.compound_link.is_some(),
        _ => false,
    }
}

/// Members removed from `class` for a slot: every override list whose class
/// is an ancestor or descendant of `class`.
pub fn overridden(config: &SlotConfig, class: &ClassPath) -> BTreeSet<LexemeId> {
    config
        .overrides
        .iter()
        .filter(|(k, _)| {
            k.parse::<ClassPath>()
                .is_ok_and(|p| p.is_prefix_of(class) || class.is_prefix_of(&p))
        })
        .flat_map(|(_, v)| v.iter().cloned())
        .collect()
}

/// Class paths written as dotted strings in configuration files.
mod dotted {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::ontology::ClassPath;

    pub fn serialize<S: Serializer>(p: &ClassPath, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.dotted())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ClassPath, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
