//! Table lookups for nouns and adjectives, and German compounding.

use std::collections::BTreeMap;

use crate::features::{adjective_key, noun_key, Case, Declension, Gender, Language, Number};
use crate::lexicon::{LexicalEntry, PartOfSpeech};

use super::MorphError;

fn expect_pos(entry: &LexicalEntry, pos: PartOfSpeech) -> Result<(), MorphError> {
    if entry.pos == pos {
        Ok(())
    } else {
        Err(MorphError::WrongPartOfSpeech {
            lexeme: entry.id.clone(),
            expected: pos,
        })
    }
}

fn cell<'a>(entry: &'a LexicalEntry, key: &str) -> Result<&'a str, MorphError> {
    entry
        .forms
        .get(key)
        .map(String::as_str)
        .ok_or_else(|| MorphError::MissingForm {
            lexeme: entry.id.clone(),
            key: key.to_string(),
        })
}

pub fn inflect_noun(entry: &LexicalEntry, case: Case, number: Number) -> Result<&str, MorphError> {
    expect_pos(entry, PartOfSpeech::Noun)?;
    cell(entry, &noun_key(entry.language(), case, number))
}

pub fn inflect_adjective(
    entry: &LexicalEntry,
    class: Declension,
    gender: Gender,
    case: Case,
    number: Number,
) -> Result<&str, MorphError> {
    expect_pos(entry, PartOfSpeech::Adjective)?;
    cell(
        entry,
        &adjective_key(entry.language(), class, gender, case, number),
    )
}

/// Table keys whose cell equals `form`.
pub fn analyze_form<'a>(entry: &'a LexicalEntry, form: &str) -> Vec<&'a str> {
    entry
        .forms
        .iter()
        .filter(|(_, f)| f.as_str() == form)
        .map(|(k, _)| k.as_str())
        .collect()
}

/// (case, number) readings of a noun form.
pub fn analyze_noun(entry: &LexicalEntry, form: &str) -> Vec<(Case, Number)> {
    let lang = entry.language();
    let mut out = Vec::new();
    for &c in Case::for_language(lang) {
        for n in Number::ALL {
            if entry
                .forms
                .get(&noun_key(lang, c, n))
                .is_some_and(|f| f == form)
            {
                out.push((c, n));
            }
        }
    }
    out
}

/// (class, gender, case, number) readings of an adjective form. Outside German
/// the class is reported as every class, since it is not marked.
pub fn analyze_adjective(
    entry: &LexicalEntry,
    form: &str,
) -> Vec<(Declension, Gender, Case, Number)> {
    let lang = entry.language();
    let mut out = Vec::new();
    for d in Declension::ALL {
        for &g in Gender::for_language(lang) {
            for &c in Case::for_language(lang) {
                for n in Number::ALL {
                    if entry
                        .forms
                        .get(&adjective_key(lang, d, g, c, n))
                        .is_some_and(|f| f == form)
                    {
                        out.push((d, g, c, n));
                    }
                }
            }
        }
    }
    out
}

fn capitalize_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// `modifier + link + lowercased head`, inflecting through the head's table.
pub fn compose_compound(
    modifier: &LexicalEntry,
    head: &LexicalEntry,
) -> Result<LexicalEntry, MorphError> {
    expect_pos(modifier, PartOfSpeech::Noun)?;
    expect_pos(head, PartOfSpeech::Noun)?;
    if modifier.language() != Language::De || head.language() != Language::De {
        return Err(MorphError::InvalidFeatureCombination(format!(
            "compounds are German only ({} + {})",
            modifier.id, head.id
        )));
    }
    let link = modifier
        .compound_link
        .as_deref()
        .ok_or_else(|| MorphError::MissingLinkElement(modifier.id.clone()))?;
    let join = |form: &str| {
        capitalize_first(&format!(
            "{}{}{}",
            modifier.lemma,
            link,
            form.to_lowercase()
        ))
    };
    let forms: BTreeMap<String, String> = head
        .forms
        .iter()
        .map(|(k, f)| (k.clone(), join(f)))
        .collect();
    let lemma = join(&head.lemma);
    Ok(LexicalEntry {
        id: lemma.clone(),
        lemma,
        language: head.language,
        pos: PartOfSpeech::Noun,
        gender: head.gender,
        forms,
        compound_link: None,
        evidence: None,
    })
}
