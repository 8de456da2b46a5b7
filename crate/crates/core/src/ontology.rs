//! A small WordNet-style class tree. Classes are addressed by their path from
//! the root (`belebt.menschlich.körperteil.extern`); a node's parent is the
//! path with the last segment dropped, so the tree is acyclic by construction.
//! Lexemes may be listed under several nodes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lexicon::LexemeId;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassPath(Vec<String>);

impl ClassPath {
    /// Build a path from raw labels, lowercasing each one.
    pub fn new<I, S>(segments: I) -> Result<ClassPath, OntologyError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let segs: Vec<String> = segments
            .into_iter()
            .map(|s| s.as_ref().trim().to_lowercase())
            .collect();
        if segs.is_empty() || segs.iter().any(|s| s.is_empty() || s.contains('.')) {
            return Err(OntologyError::Schema(format!(
                "malformed class path {segs:?}"
            )));
        }
        Ok(ClassPath(segs))
    }

    pub fn segments(&self) -> &[String] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn parent(&self) -> Option<ClassPath> {
        (self.0.len() > 1).then(|| ClassPath(self.0[..self.0.len() - 1].to_vec()))
    }

    pub fn is_prefix_of(&self, other: &ClassPath) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn dotted(&self) -> String {
        self.0.join(".")
    }
}

impl fmt::Display for ClassPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dotted())
    }
}

impl FromStr for ClassPath {
    type Err = OntologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassPath::new(s.split('.'))
    }
}

impl Serialize for ClassPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        ClassPath::new(raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OntologyNode {
    pub path: ClassPath,
    #[serde(default)]
    pub members: BTreeSet<LexemeId>,
    /// Opaque external annotations (SUMO class, domain, display label ...).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, String>,
}

impl OntologyNode {
    pub fn parent(&self) -> Option<ClassPath> {
        self.path.parent()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OntologyDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<crate::features::Language>,
    pub nodes: Vec<OntologyNode>,
}

#[derive(Debug, thiserror::Error)]
pub enum OntologyError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("orphan node {0}: parent path missing")]
    OrphanNode(String),
    #[error("duplicate path {0}")]
    DuplicatePath(String),
    #[error("unknown class path {0}")]
    UnknownPath(String),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Ontology {
    nodes: BTreeMap<ClassPath, OntologyNode>,
    /// lexeme -> every node listing it
    index: HashMap<LexemeId, BTreeSet<ClassPath>>,
}

impl Ontology {
    pub fn from_nodes(nodes: Vec<OntologyNode>) -> Result<Ontology, OntologyError> {
        let mut map = BTreeMap::new();
        for n in nodes {
            if map.contains_key(&n.path) {
                return Err(OntologyError::DuplicatePath(n.path.dotted()));
            }
            map.insert(n.path.clone(), n);
        }
        for path in map.keys() {
            if let Some(parent) = path.parent() {
                if !map.contains_key(&parent) {
                    return Err(OntologyError::OrphanNode(path.dotted()));
                }
            }
        }
        let mut index: HashMap<LexemeId, BTreeSet<ClassPath>> = HashMap::new();
        for n in map.values() {
            for m in &n.members {
                index.entry(m.clone()).or_default().insert(n.path.clone());
            }
        }
        Ok(Ontology { nodes: map, index })
    }

    pub fn node(&self, path: &ClassPath) -> Option<&OntologyNode> {
        self.nodes.get(path)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &OntologyNode> {
        self.nodes.values()
    }

    pub fn contains(&self, path: &ClassPath) -> bool {
        self.nodes.contains_key(path)
    }

    pub fn roots(&self) -> BTreeSet<ClassPath> {
        self.nodes
            .keys()
            .filter(|p| p.depth() == 1)
            .cloned()
            .collect()
    }

    pub fn children(&self, path: &ClassPath) -> impl Iterator<Item = &OntologyNode> {
        let depth = path.depth() + 1;
        let path = path.clone();
        self.nodes
            .range(path.clone()..)
            .take_while(move |(p, _)| path.is_prefix_of(p))
            .filter(move |(p, _)| p.depth() == depth)
            .map(|(_, n)| n)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of distinct lexemes listed anywhere.
    pub fn member_count(&self) -> usize {
        self.index.len()
    }

    fn require(&self, path: &ClassPath) -> Result<(), OntologyError> {
        if self.contains(path) {
            Ok(())
        } else {
            Err(OntologyError::UnknownPath(path.dotted()))
        }
    }

    /// True iff `ancestor` is a prefix of `descendant` (reflexive).
    pub fn subsumes(
        &self,
        ancestor: &ClassPath,
        descendant: &ClassPath,
    ) -> Result<bool, OntologyError> {
        self.require(ancestor)?;
        self.require(descendant)?;
        Ok(ancestor.is_prefix_of(descendant))
    }

    /// Every class listing `lexeme`; empty when unclassified.
    pub fn classify_lexeme(&self, lexeme: &str) -> BTreeSet<ClassPath> {
        self.index.get(lexeme).cloned().unwrap_or_default()
    }

    /// Members of `query` and all of its descendants, in lexeme order.
    pub fn expand_class(&self, query: &ClassPath) -> Result<BTreeSet<LexemeId>, OntologyError> {
        self.require(query)?;
        Ok(self
            .nodes
            .range(query.clone()..)
            .take_while(|(p, _)| query.is_prefix_of(p))
            .flat_map(|(_, n)| n.members.iter().cloned())
            .collect())
    }

    /// Expansion ordered by frequency descending, then lexeme ascending.
    /// Lexemes without a frequency count as zero.
    pub fn expand_class_ranked(
        &self,
        query: &ClassPath,
        frequency: &HashMap<LexemeId, u64>,
    ) -> Result<Vec<LexemeId>, OntologyError> {
        let mut members: Vec<LexemeId> = self.expand_class(query)?.into_iter().collect();
        rank_by_frequency(&mut members, frequency);
        Ok(members)
    }

    pub fn to_document(&self) -> OntologyDocument {
        OntologyDocument {
            language: None,
            nodes: self.nodes.values().cloned().collect(),
        }
    }
}

/// Sort by (frequency desc, lexeme asc).
pub fn rank_by_frequency(members: &mut [LexemeId], frequency: &HashMap<LexemeId, u64>) {
    members.sort_by(|a, b| {
        let fa = frequency.get(a).copied().unwrap_or(0);
        let fb = frequency.get(b).copied().unwrap_or(0);
        fb.cmp(&fa).then_with(|| a.cmp(b))
    });
}

pub fn parse_ontology(json: &str) -> Result<Ontology, OntologyError> {
    let doc: OntologyDocument =
        serde_json::from_str(json).map_err(|e| OntologyError::Schema(e.to_string()))?;
    Ontology::from_nodes(doc.nodes)
}

pub fn load_ontology(path: impl AsRef<Path>) -> Result<Ontology, OntologyError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| OntologyError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let onto = parse_ontology(&text)?;
    tracing::debug!(path = %path.display(), nodes = onto.node_count(), members = onto.member_count(), "ontology loaded");
    Ok(onto)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ClassPath {
        s.parse().unwrap()
    }

    fn small() -> Ontology {
        parse_ontology(
            r#"{"nodes":[
              {"path":["belebt"]},
              {"path":["belebt","menschlich"],"members":["Autor","Jury"]},
              {"path":["belebt","menschlich","Beruf"],"members":["Autor","Architekt"]},
              {"path":["belebt","menschlich","Körperteil"]},
              {"path":["belebt","menschlich","Körperteil","extern"],"members":["Kopf"]},
              {"path":["materiell"]}
            ]}"#,
        )
        .unwrap()
    }

    #[test]
    fn labels_are_lowercased() {
        assert_eq!(p("Belebt.Menschlich").segments(), &["belebt", "menschlich"]);
        assert!(ClassPath::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn orphan_and_duplicate() {
        let err = parse_ontology(
            r#"{"nodes":[{"path":["belebt"]},{"path":["belebt","menschlich","Beruf"]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, OntologyError::OrphanNode(_)));
        let err =
            parse_ontology(r#"{"nodes":[{"path":["belebt"]},{"path":["Belebt"]}]}"#).unwrap_err();
        assert!(matches!(err, OntologyError::DuplicatePath(_)));
    }

    #[test]
    fn roots_only() {
        let o = parse_ontology(r#"{"nodes":[{"path":["a"]},{"path":["b"]}]}"#).unwrap();
        assert_eq!(o.roots().len(), o.node_count());
    }

    #[test]
    fn subsumption() {
        let o = small();
        assert!(o
            .subsumes(&p("belebt.menschlich"), &p("belebt.menschlich.beruf"))
            .unwrap());
        assert!(!o
            .subsumes(&p("belebt.menschlich.beruf"), &p("belebt.menschlich"))
            .unwrap());
        assert!(o.subsumes(&p("belebt"), &p("belebt")).unwrap());
        assert!(matches!(
            o.subsumes(&p("belebt"), &p("x")),
            Err(OntologyError::UnknownPath(_))
        ));
    }

    #[test]
    fn classify_and_expand() {
        let o = small();
        assert_eq!(
            o.classify_lexeme("Autor"),
            [p("belebt.menschlich"), p("belebt.menschlich.beruf")]
                .into_iter()
                .collect()
        );
        assert!(o.classify_lexeme("zzz").is_empty());
        let all: Vec<_> = o.expand_class(&p("belebt")).unwrap().into_iter().collect();
        assert_eq!(all, ["Architekt", "Autor", "Jury", "Kopf"]);
        assert!(o.expand_class(&p("materiell")).unwrap().is_empty());
        // sibling prefix must not leak: "belebt.menschlich.beruf" vs "...körperteil"
        let beruf: Vec<_> = o
            .expand_class(&p("belebt.menschlich.beruf"))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(beruf, ["Architekt", "Autor"]);
        let freq: HashMap<_, _> = [("Kopf".to_string(), 5), ("Jury".to_string(), 5)].into();
        assert_eq!(
            o.expand_class_ranked(&p("belebt"), &freq).unwrap(),
            ["Jury", "Kopf", "Architekt", "Autor"]
        );
    }

    #[test]
    fn children_listing() {
        let o = small();
        let kids: Vec<_> = o
            .children(&p("belebt.menschlich"))
            .map(|n| n.path.dotted())
            .collect();
        assert_eq!(
            kids,
            ["belebt.menschlich.beruf", "belebt.menschlich.körperteil"]
        );
    }
}
