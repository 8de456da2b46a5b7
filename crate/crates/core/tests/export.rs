mod common;

use std::collections::BTreeMap;

use valgen_core::features::Number;
use valgen_core::generation::{
    export_phrases, generate, parse_csv_export, parse_json_export, Derivation, ExportFormat,
    GeneratedPhrase, GenerationRequest, Scores, SlotBinding,
};
use valgen_core::lexicon::ArgRef;
use valgen_core::{Execution, Language};

fn text_gen_run(limit: usize) -> Vec<GeneratedPhrase> {
    let req = GenerationRequest::new(Language::De, "Text", common::TEXT_GEN_PATTERN)
        .package("a", "Bemerkung-set")
        .package("b", "belebt.menschlich.beruf.ausbildung")
        .limit(limit);
    generate(common::bundle(), &req, Execution::default())
        .unwrap()
        .phrases
}

fn awkward() -> GeneratedPhrase {
    GeneratedPhrase {
        text: "he said \"x, y\"\nand left".into(),
        derivation: Derivation {
            language: Language::De,
            lemma: "Text".into(),
            pattern_id: "p,q".into(),
            bindings: vec![SlotBinding {
                slot: ArgRef::new(1, 1),
                lexeme: "A\"b".into(),
                number: Some(Number::Pl),
                package: "k".into(),
            }],
            adjectives: BTreeMap::new(),
            trace: vec![],
        },
        scores: Scores {
            frequencies: [("Arg1.1".to_string(), 3)].into(),
            similarity: Some(0.5),
            decision: None,
        },
    }
}

#[test]
fn repeated_exports_are_byte_identical() {
    for format in [ExportFormat::Json, ExportFormat::Csv] {
        let a = export_phrases(&text_gen_run(50), format);
        let b = export_phrases(&text_gen_run(50), format);
        assert_eq!(a, b);
    }
}

#[test]
fn csv_follows_rfc4180() {
    let bytes = export_phrases(&[awkward()], ExportFormat::Csv);
    let text = String::from_utf8(bytes.clone()).unwrap();
    assert_eq!(
        text,
        "text,pattern_id,slot_fillers,similarity\r\n\"he said \"\"x, y\"\"\nand left\",\"p,q\",\"Arg1.1=A\"\"b\",0.500000\r\n"
    );
    let rows = parse_csv_export(&bytes).unwrap();
    assert_eq!(rows[0].text, awkward().text);
    assert_eq!(rows[0].pattern_id, "p,q");
}

#[test]
fn csv_rows_of_a_run() {
    let phrases = text_gen_run(20);
    let rows = parse_csv_export(&export_phrases(&phrases, ExportFormat::Csv)).unwrap();
    assert!(rows.len() <= 20);
    assert_eq!(rows.len(), phrases.len());
    for (r, p) in rows.iter().zip(&phrases) {
        assert_eq!(r.text, p.text);
        assert!(r.slot_fillers.starts_with("Arg5.2=") && r.slot_fillers.contains(";Arg1.1="));
        assert_eq!(
            r.similarity.parse::<f64>().unwrap(),
            (p.scores.similarity.unwrap() * 1e6).round() / 1e6
        );
    }
    assert!(rows
        .iter()
        .any(|r| r.text == "der Bemerkungstext der Akademikerin"));
}

#[test]
fn json_round_trip() {
    for phrases in [text_gen_run(30), vec![awkward()], vec![]] {
        let bytes = export_phrases(&phrases, ExportFormat::Json);
        let parsed = parse_json_export(&bytes).unwrap();
        assert_eq!(parsed.len(), phrases.len());
        for (r, p) in parsed.iter().zip(&phrases) {
            assert_eq!(r.text, p.text);
            assert_eq!(r.pattern_id, p.derivation.pattern_id);
            assert_eq!(r.scores, p.scores);
        }
        assert_eq!(serde_json::to_vec(&parsed).unwrap(), bytes);
    }
    let v: serde_json::Value =
        serde_json::from_slice(&export_phrases(&text_gen_run(1), ExportFormat::Json)).unwrap();
    let rec = &v[0];
    assert!(rec["slots"]["Arg5.2"]["lexeme"].is_string());
    assert!(rec["scores"]["similarity"].is_number());
    assert_eq!(
        rec.as_object().unwrap().keys().collect::<Vec<_>>(),
        ["pattern_id", "scores", "slots", "text"]
    );
}
