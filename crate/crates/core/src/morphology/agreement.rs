//! Independent re-analysis of realized phrases.
//!
//! Every emitted form is looked up backwards in the tables it claims to come
//! from; the readings of all members of a group must then share at least one
//! gender/number/case assignment, and the assignment the realizer recorded
//! must be one of them.

use crate::features::{Agreement, Case, Declension, Definiteness, Language, Number};
use crate::lexicon::{Lexicon, RealizationPattern};

use super::determiners::{analyze_determiner, contract, elided};
use super::inflection::{analyze_adjective, analyze_noun, compose_compound};
use super::realize::{Realization, Source, Token};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("group {group}: {message}")]
pub struct AgreementError {
    pub group: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reading {
    Det(Definiteness, Agreement),
    Adj(Declension, Agreement),
    Noun(Agreement),
}

fn readings(tok: &Token, lang: Language, lexicon: &Lexicon) -> Result<Vec<Reading>, String> {
    let form = tok.form();
    let det = |f: &str| {
        analyze_determiner(f, lang)
            .into_iter()
            .map(|(d, gender, case, number)| {
                Reading::Det(
                    d,
                    Agreement {
                        gender,
                        number,
                        case,
                    },
                )
            })
            .collect::<Vec<_>>()
    };
    match &tok.source {
        Source::Determiner { .. } => Ok(det(form)),
        Source::Contraction { article, .. } => Ok(det(article)),
        Source::Literal => Err(format!("literal '{form}' inside a group")),
        Source::Compound { modifier, head, .. } => {
            let m = lexicon
                .entry(lang, modifier)
                .ok_or(format!("unknown lexeme {modifier}"))?;
            let h = lexicon
                .entry(lang, head)
                .ok_or(format!("unknown lexeme {head}"))?;
            let compound = compose_compound(m, h).map_err(|e| e.to_string())?;
            let gender = compound.gender.ok_or("compound without gender")?;
            Ok(analyze_noun(&compound, form)
                .into_iter()
                .map(|(case, number)| {
                    Reading::Noun(Agreement {
                        gender,
                        number,
                        case,
                    })
                })
                .collect())
        }
        Source::Cell { lexeme, .. } => {
            let e = lexicon
                .entry(lang, lexeme)
                .ok_or(format!("unknown lexeme {lexeme}"))?;
            match e.gender {
                Some(gender) => Ok(analyze_noun(e, form)
                    .into_iter()
                    .map(|(case, number)| {
                        Reading::Noun(Agreement {
                            gender,
                            number,
                            case,
                        })
                    })
                    .collect()),
                None => Ok(analyze_adjective(e, form)
                    .into_iter()
                    .map(|(d, gender, case, number)| {
                        Reading::Adj(
                            d,
                            Agreement {
                                gender,
                                number,
                                case,
                            },
                        )
                    })
                    .collect()),
            }
        }
    }
}

/// All (definiteness, agreement) assignments consistent with the group's forms.
fn consistent(
    members: &[Vec<Reading>],
    lang: Language,
    has_det: bool,
) -> Vec<(Definiteness, Agreement)> {
    let mut out = Vec::new();
    let Some(noun) = members
        .iter()
        .find(|r| r.iter().any(|x| matches!(x, Reading::Noun(_))))
    else {
        return out;
    };
    for r in noun {
        let Reading::Noun(a) = *r else { continue };
        let defs: Vec<Definiteness> = if has_det {
            members
                .iter()
                .flatten()
                .filter_map(|x| match x {
                    Reading::Det(d, da) if *da == a => Some(*d),
                    _ => None,
                })
                .collect()
        } else if lang == Language::De && a.number == Number::Pl {
            vec![Definiteness::None, Definiteness::Indefinite]
        } else {
            vec![Definiteness::None]
        };
        for d in defs {
            let ok = members.iter().all(|m| {
                m.iter().any(|x| match *x {
                    Reading::Noun(na) => na == a,
                    Reading::Det(dd, da) => dd == d && da == a,
                    Reading::Adj(class, aa) => {
                        aa == a && (lang != Language::De || class == Declension::after(d, a.number))
                    }
                })
            });
            if ok && !out.contains(&(d, a)) {
                out.push((d, a));
            }
        }
    }
    out
}

pub fn recheck(real: &Realization, lexicon: &Lexicon) -> Result<(), AgreementError> {
    let lang = real.language;
    for (g, trace) in real.groups.iter().enumerate() {
        let err = |message: String| AgreementError { group: g, message };
        let toks: Vec<&Token> = real.tokens.iter().filter(|t| t.group == Some(g)).collect();
        let mut members = Vec::with_capacity(toks.len());
        for t in &toks {
            let r = readings(t, lang, lexicon).map_err(err)?;
            if r.is_empty() {
                return Err(err(format!("'{}' has no reading in its table", t.form())));
            }
            members.push(r);
        }
        let has_det = toks.iter().any(|t| {
            matches!(
                t.source,
                Source::Determiner { .. } | Source::Contraction { .. }
            )
        });
        let found = consistent(&members, lang, has_det);
        if found.is_empty() {
            let forms: Vec<&str> = toks.iter().map(|t| t.form()).collect();
            return Err(err(format!(
                "no consistent assignment for '{}'",
                forms.join(" ")
            )));
        }
        let recorded = Agreement {
            gender: trace.gender,
            number: trace.number,
            case: trace.case,
        };
        if !found
            .iter()
            .any(|&(d, a)| a == recorded && (d == trace.definiteness || !has_det))
        {
            return Err(err(format!(
                "recorded {recorded:?} is not among the readings {found:?}"
            )));
        }
        if lang.has_case() == (trace.case == Case::None) {
            return Err(err(format!("case {:?} is not valid in {lang}", trace.case)));
        }
    }
    Ok(())
}

/// Every token is a table cell, a compound of table cells, a closed-table
/// article (possibly elided or fused) or a literal of the pattern.
pub fn verify_provenance(
    real: &Realization,
    pattern: &RealizationPattern,
    lexicon: &Lexicon,
) -> Result<(), String> {
    let lang = real.language;
    let is_article =
        |f: &str| !analyze_determiner(f, lang).is_empty() || (lang == Language::Fr && f == "l'");
    for t in &real.tokens {
        let form = t.form();
        let ok = match &t.source {
            Source::Cell { lexeme, key } => lexicon
                .entry(lang, lexeme)
                .and_then(|e| e.forms.get(key))
                .is_some_and(|f| f == form),
            Source::Compound {
                modifier,
                head,
                key,
            } => match (lexicon.entry(lang, modifier), lexicon.entry(lang, head)) {
                (Some(m), Some(h)) => compose_compound(m, h)
                    .is_ok_and(|c| c.forms.get(key).is_some_and(|f| f == form)),
                _ => false,
            },
            Source::Determiner { .. } => is_article(form),
            Source::Literal => pattern
                .slots
                .get(t.slot)
                .and_then(|s| s.fixed_text.as_deref())
                .is_some_and(|lit| lit == form || elided(lit) == Some(form)),
            Source::Contraction {
                preposition,
                article,
            } => contract(lang, preposition, article) == Some(form),
        };
        if !ok {
            return Err(format!(
                "token '{}' at slot {} has no provenance",
                t.text, t.slot
            ));
        }
    }
    Ok(())
}
