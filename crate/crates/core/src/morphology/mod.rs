//! Table-driven inflection and noun phrase realization.

pub mod agreement;
pub mod determiners;
pub mod inflection;
pub mod realize;

use crate::lexicon::PartOfSpeech;

pub use agreement::{recheck, verify_provenance, AgreementError};
pub use determiners::{analyze_determiner, inflect_determiner};
pub use inflection::{
    analyze_adjective, analyze_noun, compose_compound, inflect_adjective, inflect_noun,
};
pub use realize::{
    realize_np, Binding, BoundFiller, GroupTrace, Realization, RealizeOptions, Source, Token,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphError {
    #[error("{lexeme} has no form {key}")]
    MissingForm { lexeme: String, key: String },
    #[error("{lexeme} is not a {expected:?}")]
    WrongPartOfSpeech {
        lexeme: String,
        expected: PartOfSpeech,
    },
    #[error("invalid feature combination: {0}")]
    InvalidFeatureCombination(String),
    #[error("{0} has no linking element")]
    MissingLinkElement(String),
    #[error("missing binding for {0}")]
    MissingBinding(String),
    #[error("unknown lexeme {0}")]
    UnknownLexeme(String),
    #[error("agreement unsatisfiable: {0}")]
    AgreementUnsatisfiable(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
}
