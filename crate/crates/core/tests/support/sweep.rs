//! Exhaustive inflection and realization over the fixture lexicon.

use valgen_core::features::{Case, Definiteness, Gender, GrammaticalFeatures, Language, Number};
use valgen_core::lexicon::{
    Arity, LexicalEntry, Lexicon, PartOfSpeech, PatternSlot, RealizationPattern, SlotKind,
    ValencyFrame,
};
use valgen_core::morphology::{
    analyze_noun, inflect_noun, realize_np, recheck, verify_provenance, Binding, RealizeOptions,
};

fn slot(kind: SlotKind) -> PatternSlot {
    PatternSlot {
        kind,
        optional: false,
        marks: GrammaticalFeatures::default(),
        binds: None,
        fixed_text: None,
    }
}

fn det(case: Option<Case>, definiteness: Definiteness) -> PatternSlot {
    let mut s = slot(SlotKind::Determiner);
    s.marks.case = case;
    s.marks.definiteness = Some(definiteness);
    s
}

fn optional_adj() -> PatternSlot {
    PatternSlot {
        optional: true,
        ..slot(SlotKind::Adjective)
    }
}

/// `det (adj) head` over an ad hoc frame headed by `head`.
pub fn head_phrase(
    head: &LexicalEntry,
    case: Option<Case>,
    definiteness: Definiteness,
) -> (ValencyFrame, RealizationPattern) {
    let lang = head.language();
    let frame = ValencyFrame {
        lemma: head.lemma.clone(),
        language: Some(lang),
        gender: head.gender.unwrap(),
        inflection_ref: head.id.clone(),
        scene: "AUSDRUCK".into(),
        evidence: None,
        slots: vec![],
        patterns: vec![],
    };
    let slots = vec![
        det(case, definiteness),
        optional_adj(),
        slot(SlotKind::Head),
    ];
    let pattern = RealizationPattern {
        id: "det+adj+head".into(),
        label: String::new(),
        arity: Arity::Mono,
        slots,
        language: Some(lang),
    };
    (frame, pattern)
}

/// Inflect every fixture noun in every cell and realize every noun, and every
/// adjective over one noun per gender, under `det (adj) head` in every case,
/// definiteness and number; each phrase must pass the agreement re-check and
/// provenance check. Returns the number of phrases checked.
pub fn sweep(lex: &Lexicon) -> Result<usize, String> {
    let mut checked = 0usize;
    for lang in Language::ALL {
        let nouns: Vec<&LexicalEntry> = lex
            .entries_of(lang)
            .filter(|e| e.pos == PartOfSpeech::Noun)
            .collect();
        let adjectives: Vec<&LexicalEntry> = lex
            .entries_of(lang)
            .filter(|e| e.pos == PartOfSpeech::Adjective)
            .collect();
        for n in &nouns {
            for case in Case::for_language(lang) {
                for number in Number::ALL {
                    let form =
                        inflect_noun(n, *case, number).map_err(|e| format!("{}: {e}", n.id))?;
                    if !analyze_noun(n, form).contains(&(*case, number)) {
                        return Err(format!(
                            "{} {form} does not analyze as {case:?} {number:?}",
                            n.id
                        ));
                    }
                }
            }
        }
        let mut render = |head: &LexicalEntry, adj: Option<&str>| -> Result<(), String> {
            for case in Case::for_language(lang) {
                let marked = lang.has_case().then_some(*case);
                for definiteness in [Definiteness::Definite, Definiteness::Indefinite] {
                    for number in Number::ALL {
                        let (frame, pattern) = head_phrase(head, marked, definiteness);
                        let mut binding = Binding {
                            head_number: Some(number),
                            ..Binding::default()
                        };
                        if let Some(a) = adj {
                            binding.adjectives.insert(1, a.to_string());
                        }
                        let real =
                            realize_np(&frame, &pattern, &binding, lex, RealizeOptions::default())
                                .map_err(|e| format!("{} {case:?} {number:?}: {e}", head.id))?;
                        recheck(&real, lex).map_err(|e| format!("{}: {e}", real.text))?;
                        verify_provenance(&real, &pattern, lex)
                            .map_err(|e| format!("{}: {e}", real.text))?;
                        checked += 1;
                    }
                }
            }
            Ok(())
        };
        for n in &nouns {
            render(n, None)?;
        }
        for a in &adjectives {
            for g in Gender::for_language(lang) {
                if let Some(n) = nouns.iter().find(|n| n.gender == Some(*g)) {
                    render(n, Some(&a.id))?;
                }
            }
        }
    }
    Ok(checked)
}
