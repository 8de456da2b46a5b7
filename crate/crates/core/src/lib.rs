//! Valency-driven noun phrase generation.
//!
//! A lexicon of valency frames and inflection tables, a small class
//! ontology, corpus frequency evidence for grading which structures and
//! classes are worth generating, word vectors for filtering two-slot
//! combinations, and the generators themselves.

pub mod bundle;
pub mod embeddings;
pub mod exec;
pub mod features;
pub mod generation;
pub mod lexicon;
pub mod morphology;
pub mod ontology;
pub mod prototyping;

pub use exec::Execution;
pub use features::Language;
