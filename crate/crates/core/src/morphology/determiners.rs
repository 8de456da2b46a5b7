//! Closed determiner tables and the French/Spanish article contractions.

use crate::features::{Case, Definiteness, Gender, Language, Number};

use super::MorphError;

/// Article for the given features. The German indefinite plural is the zero
/// article and comes back as `""`.
pub fn inflect_determiner(
    definiteness: Definiteness,
    gender: Gender,
    case: Case,
    number: Number,
    lang: Language,
) -> Result<&'static str, MorphError> {
    use Case::*;
    use Gender::*;
    use Number::*;
    let invalid = || {
        MorphError::InvalidFeatureCombination(format!(
            "{lang} determiner {definiteness:?} {gender:?} {case:?} {number:?}"
        ))
    };
    if !Gender::for_language(lang).contains(&gender) || !Case::for_language(lang).contains(&case) {
        return Err(invalid());
    }
    let form = match (lang, definiteness) {
        (_, Definiteness::None) => return Err(invalid()),
        (Language::De, Definiteness::Definite) => match (number, gender, case) {
            (Pl, _, Nom | Acc) => "die",
            (Pl, _, Gen) => "der",
            (Pl, _, Dat) => "den",
            (Sg, Masc, Nom) => "der",
            (Sg, Masc, Acc) => "den",
            (Sg, Masc | Neut, Gen) => "des",
            (Sg, Masc | Neut, Dat) => "dem",
            (Sg, Neut, Nom | Acc) => "das",
            (Sg, Fem, Nom | Acc) => "die",
            (Sg, Fem, Gen | Dat) => "der",
            _ => return Err(invalid()),
        },
        (Language::De, Definiteness::Indefinite) => match (number, gender, case) {
            (Pl, _, _) => "",
            (Sg, Masc | Neut, Nom) => "ein",
            (Sg, Masc, Acc) => "einen",
            (Sg, Neut, Acc) => "ein",
            (Sg, Masc | Neut, Gen) => "eines",
            (Sg, Masc | Neut, Dat) => "einem",
            (Sg, Fem, Nom | Acc) => "eine",
            (Sg, Fem, Gen | Dat) => "einer",
            _ => return Err(invalid()),
        },
        (Language::Es, Definiteness::Definite) => match (gender, number) {
            (Masc, Sg) => "el",
            (Fem, Sg) => "la",
            (Masc, Pl) => "los",
            (Fem, Pl) => "las",
            _ => return Err(invalid()),
        },
        (Language::Es, Definiteness::Indefinite) => match (gender, number) {
            (Masc, Sg) => "un",
            (Fem, Sg) => "una",
            (Masc, Pl) => "unos",
            (Fem, Pl) => "unas",
            _ => return Err(invalid()),
        },
        (Language::Fr, Definiteness::Definite) => match (gender, number) {
            (Masc, Sg) => "le",
            (Fem, Sg) => "la",
            (_, Pl) => "les",
            _ => return Err(invalid()),
        },
        (Language::Fr, Definiteness::Indefinite) => match (gender, number) {
            (Masc, Sg) => "un",
            (Fem, Sg) => "une",
            (_, Pl) => "des",
            _ => return Err(invalid()),
        },
    };
    Ok(form)
}

/// Every feature bundle under which `form` is the article. Elided `l'` is
/// analyzed as both `le` and `la`.
pub fn analyze_determiner(form: &str, lang: Language) -> Vec<(Definiteness, Gender, Case, Number)> {
    let targets: Vec<&str> = match (lang, form) {
        (Language::Fr, "l'") => vec!["le", "la"],
        _ => vec![form],
    };
    let mut out = Vec::new();
    for def in [Definiteness::Definite, Definiteness::Indefinite] {
        for &g in Gender::for_language(lang) {
            for &c in Case::for_language(lang) {
                for n in Number::ALL {
                    if let Ok(f) = inflect_determiner(def, g, c, n, lang) {
                        if targets.contains(&f) {
                            out.push((def, g, c, n));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Preposition + article fusions: es `de el` -> `del`, fr `à les` -> `aux`.
pub fn contract(lang: Language, preposition: &str, article: &str) -> Option<&'static str> {
    match (lang, preposition, article) {
        (Language::Es, "de", "el") => Some("del"),
        (Language::Es, "a", "el") => Some("al"),
        (Language::Fr, "de", "le") => Some("du"),
        (Language::Fr, "de", "les") => Some("des"),
        (Language::Fr, "à", "le") => Some("au"),
        (Language::Fr, "à", "les") => Some("aux"),
        _ => None,
    }
}

/// Inverse of [`contract`].
pub fn expand_contraction(lang: Language, form: &str) -> Option<(&'static str, &'static str)> {
    match (lang, form) {
        (Language::Es, "del") => Some(("de", "el")),
        (Language::Es, "al") => Some(("a", "el")),
        (Language::Fr, "du") => Some(("de", "le")),
        (Language::Fr, "au") => Some(("à", "le")),
        (Language::Fr, "aux") => Some(("à", "les")),
        _ => None,
    }
}

/// French words that lose their vowel before a vowel or mute h.
pub fn elided(form: &str) -> Option<&'static str> {
    match form {
        "le" | "la" => Some("l'"),
        "de" => Some("d'"),
        _ => None,
    }
}

pub fn starts_with_vowel_sound(word: &str) -> bool {
    word.chars()
        .next()
        .map(|c| "aeiouyhàâäéèêëîïôöùûüœæAEIOUYHÀÂÉÈÊÎÔÙÛŒÆ".contains(c))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn german_definite() {
        let de =
            |g, c, n| inflect_determiner(Definiteness::Definite, g, c, n, Language::De).unwrap();
        assert_eq!(de(Gender::Fem, Case::Gen, Number::Sg), "der");
        assert_eq!(de(Gender::Masc, Case::Gen, Number::Sg), "des");
        assert_eq!(de(Gender::Masc, Case::Nom, Number::Pl), "die");
        assert_eq!(de(Gender::Neut, Case::Acc, Number::Sg), "das");
    }

    #[test]
    fn invalid_combinations() {
        assert!(inflect_determiner(
            Definiteness::Definite,
            Gender::Neut,
            Case::None,
            Number::Sg,
            Language::Es
        )
        .is_err());
        assert!(inflect_determiner(
            Definiteness::Definite,
            Gender::Masc,
            Case::Nom,
            Number::Sg,
            Language::Fr
        )
        .is_err());
        assert!(inflect_determiner(
            Definiteness::Definite,
            Gender::Masc,
            Case::None,
            Number::Sg,
            Language::De
        )
        .is_err());
        assert!(inflect_determiner(
            Definiteness::None,
            Gender::Masc,
            Case::Nom,
            Number::Sg,
            Language::De
        )
        .is_err());
    }

    #[test]
    fn analysis_inverts_inflection() {
        let a = analyze_determiner("des", Language::De);
        assert!(a
            .iter()
            .all(|&(_, g, c, n)| c == Case::Gen && n == Number::Sg && g != Gender::Fem));
        assert_eq!(a.len(), 2);
        assert_eq!(analyze_determiner("l'", Language::Fr).len(), 2);
        assert_eq!(expand_contraction(Language::Fr, "du"), Some(("de", "le")));
    }
}
