//! Left-to-right realization of a pattern under a binding.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::features::{Case, Declension, Definiteness, Gender, Language, Number};
use crate::lexicon::{
    ArgRef, LexemeId, LexicalEntry, Lexicon, PartOfSpeech, RealizationPattern, SlotKind,
    ValencyFrame,
};

use super::determiners::{contract, elided, inflect_determiner, starts_with_vowel_sound};
use super::inflection::{compose_compound, inflect_adjective, inflect_noun};
use super::MorphError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundFiller {
    pub lexeme: LexemeId,
    /// Unset means the slot's marked number, else singular.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<Number>,
}

impl BoundFiller {
    pub fn new(lexeme: &str, number: Option<Number>) -> Self {
        BoundFiller {
            lexeme: lexeme.to_string(),
            number,
        }
    }
}

/// What fills the pattern: argument fillers by slot, free adjectives by
/// pattern position, and the head's number.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Binding {
    pub args: BTreeMap<ArgRef, BoundFiller>,
    pub adjectives: BTreeMap<usize, LexemeId>,
    /// Unset means: the compound modifier's number if there is one, else singular.
    pub head_number: Option<Number>,
}

impl Binding {
    pub fn with_arg(mut self, arg: ArgRef, lexeme: &str, number: Option<Number>) -> Self {
        self.args.insert(arg, BoundFiller::new(lexeme, number));
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Wrap optional adjectives in parentheses (package previews).
    pub parenthesize_optional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Cell {
        lexeme: LexemeId,
        key: String,
    },
    Compound {
        modifier: LexemeId,
        head: LexemeId,
        key: String,
    },
    Determiner {
        definiteness: Definiteness,
    },
    Literal,
    Contraction {
        preposition: String,
        article: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub slot: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<usize>,
    pub source: Source,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub parenthesized: bool,
}

impl Token {
    /// The form without preview parentheses.
    pub fn form(&self) -> &str {
        if self.parenthesized {
            self.text.trim_start_matches('(').trim_end_matches(')')
        } else {
            &self.text
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTrace {
    pub nominal_slot: usize,
    pub gender: Gender,
    pub number: Number,
    pub case: Case,
    pub definiteness: Definiteness,
    pub declension: Declension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub text: String,
    pub language: Language,
    pub tokens: Vec<Token>,
    pub groups: Vec<GroupTrace>,
}

fn entry<'a>(
    lexicon: &'a Lexicon,
    lang: Language,
    id: &str,
) -> Result<&'a LexicalEntry, MorphError> {
    lexicon
        .entry(lang, id)
        .ok_or_else(|| MorphError::UnknownLexeme(format!("{lang}:{id}")))
}

fn conflict(
    what: &str,
    slot: usize,
    want: impl std::fmt::Debug,
    got: impl std::fmt::Debug,
) -> MorphError {
    MorphError::AgreementUnsatisfiable(format!(
        "slot {slot} requires {what} {want:?}, binding gives {got:?}"
    ))
}

pub fn realize_np(
    frame: &ValencyFrame,
    pattern: &RealizationPattern,
    binding: &Binding,
    lexicon: &Lexicon,
    options: RealizeOptions,
) -> Result<Realization, MorphError> {
    let lang = frame.language();
    let segments = pattern
        .segments(lang)
        .map_err(|p| MorphError::InvalidPattern(p.join("; ")))?;
    let head = entry(lexicon, lang, &frame.inflection_ref)?;

    let filler = |pos: usize| -> Result<&BoundFiller, MorphError> {
        let arg = pattern.slots[pos].binds.expect("binding slot");
        binding
            .args
            .get(&arg)
            .ok_or_else(|| MorphError::MissingBinding(arg.to_string()))
    };
    for (pos, _) in pattern.binding_slots() {
        filler(pos)?;
    }

    let modifier_pos = pattern
        .slots
        .iter()
        .position(|s| s.kind == SlotKind::CompoundModifier);
    let head_number = binding
        .head_number
        .or(modifier_pos.and_then(|p| binding.args.get(&pattern.slots[p].binds?)?.number))
        .unwrap_or(Number::Sg);

    let mut group_of = vec![None; pattern.slots.len()];
    let mut groups = Vec::with_capacity(segments.len());
    let mut nominal_entries: Vec<(LexicalEntry, Option<LexemeId>)> =
        Vec::with_capacity(segments.len());
    for (g, seg) in segments.iter().enumerate() {
        for &m in &seg.members {
            group_of[m] = Some(g);
        }
        let slot = &pattern.slots[seg.nominal];
        let (noun, modifier, number) = if slot.kind == SlotKind::Head {
            let modifier = seg
                .members
                .iter()
                .find(|&&m| pattern.slots[m].kind == SlotKind::CompoundModifier);
            match modifier {
                Some(&m) => {
                    let f = filler(m)?;
                    let me = entry(lexicon, lang, &f.lexeme)?;
                    (
                        compose_compound(me, head)?,
                        Some(me.id.clone()),
                        head_number,
                    )
                }
                None => (head.clone(), None, head_number),
            }
        } else {
            let f = filler(seg.nominal)?;
            let e = entry(lexicon, lang, &f.lexeme)?;
            if e.pos != PartOfSpeech::Noun {
                return Err(MorphError::WrongPartOfSpeech {
                    lexeme: e.id.clone(),
                    expected: PartOfSpeech::Noun,
                });
            }
            (
                e.clone(),
                None,
                f.number.or(slot.marks.number).unwrap_or(Number::Sg),
            )
        };
        let gender = noun.gender.ok_or_else(|| {
            MorphError::InvalidFeatureCombination(format!("{} has no gender", noun.id))
        })?;
        for &m in seg.members.iter().chain(std::iter::once(&seg.nominal)) {
            let marks = &pattern.slots[m].marks;
            if let Some(n) = marks.number.filter(|&n| n != number) {
                return Err(conflict("number", m, n, number));
            }
            if let Some(gm) = marks.gender.filter(|&gm| gm != gender) {
                return Err(conflict("gender", m, gm, gender));
            }
        }
        let definiteness = seg
            .members
            .iter()
            .find(|&&m| pattern.slots[m].kind == SlotKind::Determiner)
            .map(|&m| {
                pattern.slots[m]
                    .marks
                    .definiteness
                    .unwrap_or(Definiteness::Definite)
            })
            .unwrap_or(Definiteness::None);
        groups.push(GroupTrace {
            nominal_slot: seg.nominal,
            gender,
            number,
            case: seg.case,
            definiteness,
            declension: Declension::after(definiteness, number),
        });
        nominal_entries.push((noun, modifier));
    }

    let mut tokens: Vec<Token> = Vec::new();
    for (pos, slot) in pattern.slots.iter().enumerate() {
        let group = group_of[pos];
        let push = |tokens: &mut Vec<Token>, text: String, source: Source, parenthesized: bool| {
            tokens.push(Token {
                text,
                slot: pos,
                group,
                source,
                parenthesized,
            })
        };
        match slot.kind {
            SlotKind::Preposition => {
                let text = slot.fixed_text.clone().ok_or_else(|| {
                    MorphError::InvalidPattern(format!(
                        "pattern {}: preposition without text",
                        pattern.id
                    ))
                })?;
                push(&mut tokens, text, Source::Literal, false);
            }
            SlotKind::CompoundModifier => {}
            _ => {
                let g = group.expect("non-preposition slots belong to a group");
                let tr = groups[g];
                match slot.kind {
                    SlotKind::Determiner => {
                        let form = inflect_determiner(
                            tr.definiteness,
                            tr.gender,
                            tr.case,
                            tr.number,
                            lang,
                        )?;
                        if !form.is_empty() {
                            push(
                                &mut tokens,
                                form.to_string(),
                                Source::Determiner {
                                    definiteness: tr.definiteness,
                                },
                                false,
                            );
                        }
                    }
                    SlotKind::Adjective => {
                        let lexeme = match slot.binds {
                            Some(_) => Some(filler(pos)?.lexeme.clone()),
                            None => binding.adjectives.get(&pos).cloned(),
                        };
                        let Some(lexeme) = lexeme else {
                            if slot.optional {
                                continue;
                            }
                            return Err(MorphError::MissingBinding(format!(
                                "adjective at position {pos}"
                            )));
                        };
                        let e = entry(lexicon, lang, &lexeme)?;
                        let form =
                            inflect_adjective(e, tr.declension, tr.gender, tr.case, tr.number)?;
                        let key = crate::features::adjective_key(
                            lang,
                            tr.declension,
                            tr.gender,
                            tr.case,
                            tr.number,
                        );
                        let paren =
                            options.parenthesize_optional && slot.optional && slot.binds.is_none();
                        let text = if paren {
                            format!("({form})")
                        } else {
                            form.to_string()
                        };
                        push(&mut tokens, text, Source::Cell { lexeme, key }, paren);
                    }
                    SlotKind::Head | SlotKind::ArgumentFiller => {
                        let (noun, modifier) = &nominal_entries[g];
                        let form = inflect_noun(noun, tr.case, tr.number)?.to_string();
                        let key = crate::features::noun_key(lang, tr.case, tr.number);
                        let source = match modifier {
                            Some(m) => Source::Compound {
                                modifier: m.clone(),
                                head: head.id.clone(),
                                key,
                            },
                            None => Source::Cell {
                                lexeme: noun.id.clone(),
                                key,
                            },
                        };
                        push(&mut tokens, form, source, false);
                    }
                    SlotKind::Preposition | SlotKind::CompoundModifier => unreachable!(),
                }
            }
        }
    }

    if lang != Language::De {
        tokens = romance_adjustments(lang, tokens);
    }
    let text = join_tokens(&tokens);
    Ok(Realization {
        text,
        language: lang,
        tokens,
        groups,
    })
}

/// Article elision, preposition + article fusion, then elision of `de`.
fn romance_adjustments(lang: Language, tokens: Vec<Token>) -> Vec<Token> {
    let next_text = |tokens: &[Token], i: usize| tokens.get(i + 1).map(|t| t.form().to_string());
    let mut tokens = tokens;
    if lang == Language::Fr {
        for i in 0..tokens.len() {
            if matches!(tokens[i].source, Source::Determiner { .. })
                && matches!(tokens[i].text.as_str(), "le" | "la")
                && next_text(&tokens, i).is_some_and(|n| starts_with_vowel_sound(&n))
            {
                tokens[i].text = elided(&tokens[i].text).unwrap().to_string();
            }
        }
    }
    let mut out: Vec<Token> = Vec::with_capacity(tokens.len());
    for t in tokens {
        if let (Some(prev), Source::Determiner { .. }) = (out.last(), &t.source) {
            if prev.source == Source::Literal {
                if let Some(fused) = contract(lang, &prev.text, &t.text) {
                    let prep = out.pop().unwrap();
                    out.push(Token {
                        text: fused.to_string(),
                        slot: t.slot,
                        group: t.group,
                        source: Source::Contraction {
                            preposition: prep.text,
                            article: t.text,
                        },
                        parenthesized: false,
                    });
                    continue;
                }
            }
        }
        out.push(t);
    }
    if lang == Language::Fr {
        for i in 0..out.len() {
            if out[i].source == Source::Literal
                && out[i].text == "de"
                && next_text(&out, i).is_some_and(|n| starts_with_vowel_sound(&n))
            {
                out[i].text = "d'".to_string();
            }
        }
    }
    out
}

fn join_tokens(tokens: &[Token]) -> String {
    let mut text = String::new();
    for t in tokens {
        if !text.is_empty() && !text.ends_with('\'') {
            text.push(' ');
        }
        text.push_str(&t.text);
    }
    text
}
