//! Languages and grammatical feature values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    De,
    Es,
    Fr,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::De, Language::Es, Language::Fr];

    pub fn code(self) -> &'static str {
        match self {
            Language::De => "de",
            Language::Es => "es",
            Language::Fr => "fr",
        }
    }

    /// German is the only language with morphological case.
    pub fn has_case(self) -> bool {
        matches!(self, Language::De)
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown language code '{0}'")]
pub struct UnknownLanguage(pub String);

impl FromStr for Language {
    type Err = UnknownLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "de" => Ok(Language::De),
            "es" => Ok(Language::Es),
            "fr" => Ok(Language::Fr),
            other => Err(UnknownLanguage(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Masc,
    Fem,
    Neut,
}

impl Gender {
    pub const ALL: [Gender; 3] = [Gender::Masc, Gender::Fem, Gender::Neut];

    pub fn key(self) -> &'static str {
        match self {
            Gender::Masc => "masc",
            Gender::Fem => "fem",
            Gender::Neut => "neut",
        }
    }

    pub fn for_language(lang: Language) -> &'static [Gender] {
        match lang {
            Language::De => &Gender::ALL,
            Language::Es | Language::Fr => &Gender::ALL[..2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Number {
    Sg,
    Pl,
}

impl Number {
    pub const ALL: [Number; 2] = [Number::Sg, Number::Pl];

    pub fn key(self) -> &'static str {
        match self {
            Number::Sg => "sg",
            Number::Pl => "pl",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Nom,
    Gen,
    Dat,
    Acc,
    /// The fixed case value of languages without morphological case.
    None,
}

impl Case {
    pub const GERMAN: [Case; 4] = [Case::Nom, Case::Gen, Case::Dat, Case::Acc];

    pub fn key(self) -> &'static str {
        match self {
            Case::Nom => "nom",
            Case::Gen => "gen",
            Case::Dat => "dat",
            Case::Acc => "acc",
            Case::None => "none",
        }
    }

    pub fn for_language(lang: Language) -> &'static [Case] {
        if lang.has_case() {
            &Case::GERMAN
        } else {
            &[Case::None]
        }
    }

    /// Default case of an unmarked nominal group in `lang`.
    pub fn unmarked(lang: Language) -> Case {
        if lang.has_case() {
            Case::Nom
        } else {
            Case::None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Definiteness {
    Definite,
    Indefinite,
    None,
}

/// German adjective inflection class, selected by the preceding determiner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Declension {
    Weak,
    Strong,
    Mixed,
}

impl Declension {
    pub const ALL: [Declension; 3] = [Declension::Weak, Declension::Strong, Declension::Mixed];

    pub fn key(self) -> &'static str {
        match self {
            Declension::Weak => "weak",
            Declension::Strong => "strong",
            Declension::Mixed => "mixed",
        }
    }

    /// Class required after a determiner of the given definiteness and number.
    pub fn after(definiteness: Definiteness, number: Number) -> Declension {
        match (definiteness, number) {
            (Definiteness::Definite, _) => Declension::Weak,
            (Definiteness::Indefinite, Number::Sg) => Declension::Mixed,
            // zero plural article behaves like no article
            (Definiteness::Indefinite, Number::Pl) => Declension::Strong,
            (Definiteness::None, _) => Declension::Strong,
        }
    }
}

/// Feature requirements attached to a pattern slot. Every field is optional;
/// unset fields are resolved during realization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrammaticalFeatures {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gender: Option<Gender>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub definiteness: Option<Definiteness>,
}

impl GrammaticalFeatures {
    pub fn is_empty(&self) -> bool {
        *self == GrammaticalFeatures::default()
    }
}

/// A fully resolved agreement bundle for one nominal group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Agreement {
    pub gender: Gender,
    pub number: Number,
    pub case: Case,
}

/// Table key of a noun cell: `"gen.sg"` in German, `"sg"` elsewhere.
pub fn noun_key(lang: Language, case: Case, number: Number) -> String {
    if lang.has_case() {
        format!("{}.{}", case.key(), number.key())
    } else {
        number.key().to_string()
    }
}

/// Table key of an adjective cell: `"weak.masc.nom.sg"` in German, `"masc.sg"` elsewhere.
pub fn adjective_key(
    lang: Language,
    class: Declension,
    gender: Gender,
    case: Case,
    number: Number,
) -> String {
    if lang.has_case() {
        format!(
            "{}.{}.{}.{}",
            class.key(),
            gender.key(),
            case.key(),
            number.key()
        )
    } else {
        format!("{}.{}", gender.key(), number.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn language_codes_round_trip() {
        for lang in Language::ALL {
            assert_eq!(lang.code().parse::<Language>().unwrap(), lang);
        }
        assert!("it".parse::<Language>().is_err());
        assert!("DE".parse::<Language>().is_err());
    }

    #[test]
    fn keys() {
        assert_eq!(noun_key(Language::De, Case::Gen, Number::Sg), "gen.sg");
        assert_eq!(noun_key(Language::Fr, Case::None, Number::Pl), "pl");
        assert_eq!(
            adjective_key(
                Language::De,
                Declension::Weak,
                Gender::Masc,
                Case::Nom,
                Number::Sg
            ),
            "weak.masc.nom.sg"
        );
        assert_eq!(
            adjective_key(
                Language::Es,
                Declension::Weak,
                Gender::Fem,
                Case::None,
                Number::Pl
            ),
            "fem.pl"
        );
    }

    #[test]
    fn declension_after_determiner() {
        assert_eq!(
            Declension::after(Definiteness::Definite, Number::Sg),
            Declension::Weak
        );
        assert_eq!(
            Declension::after(Definiteness::Indefinite, Number::Sg),
            Declension::Mixed
        );
        assert_eq!(
            Declension::after(Definiteness::None, Number::Pl),
            Declension::Strong
        );
    }
}
