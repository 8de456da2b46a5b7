//! JSON and CSV export of generated phrases.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::engine::{GeneratedPhrase, Scores};
use crate::features::Number;
use crate::lexicon::LexemeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(format!("unknown export format '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportSlot {
    pub lexeme: LexemeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<Number>,
}

/// One element of the JSON export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub text: String,
    pub pattern_id: String,
    pub slots: BTreeMap<String, ExportSlot>,
    pub scores: Scores,
}

/// One row of the CSV export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub text: String,
    pub pattern_id: String,
    /// `Arg5.2=Bemerkung;Arg1.1=Akademikerin`, in pattern order.
    pub slot_fillers: String,
    /// Empty for one-slot phrases and unscored pairs.
    pub similarity: String,
}

impl From<&GeneratedPhrase> for ExportRecord {
    fn from(p: &GeneratedPhrase) -> Self {
        ExportRecord {
            text: p.text.clone(),
            pattern_id: p.derivation.pattern_id.clone(),
            slots: p
                .derivation
                .bindings
                .iter()
                .map(|b| {
                    (
                        b.slot.to_string(),
                        ExportSlot {
                            lexeme: b.lexeme.clone(),
                            number: b.number,
                        },
                    )
                })
                .collect(),
            scores: p.scores.clone(),
        }
    }
}

impl From<&GeneratedPhrase> for CsvRecord {
    fn from(p: &GeneratedPhrase) -> Self {
        let fillers: Vec<String> = p
            .derivation
            .bindings
            .iter()
            .map(|b| format!("{}={}", b.slot, b.lexeme))
            .collect();
        CsvRecord {
            text: p.text.clone(),
            pattern_id: p.derivation.pattern_id.clone(),
            slot_fillers: fillers.join(";"),
            similarity: p
                .scores
                .similarity
                .map(|s| format!("{s:.6}"))
                .unwrap_or_default(),
        }
    }
}

/// Serialize phrases. Output is a pure function of the phrase list.
pub fn export_phrases(phrases: &[GeneratedPhrase], format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => {
            let records: Vec<ExportRecord> = phrases.iter().map(ExportRecord::from).collect();
            serde_json::to_vec(&records).expect("records serialize")
        }
        ExportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::CRLF)
                .from_writer(Vec::new());
            w.write_record(["text", "pattern_id", "slot_fillers", "similarity"])
                .expect("in-memory write");
            for p in phrases {
                w.serialize(CsvRecord::from(p)).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

pub fn parse_json_export(bytes: &[u8]) -> Result<Vec<ExportRecord>, serde_json::Error> {
    serde_json::from_slice(bytes)
}

pub fn parse_csv_export(bytes: &[u8]) -> Result<Vec<CsvRecord>, csv::Error> {
    csv::Reader::from_reader(bytes).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_exports() {
        assert_eq!(export_phrases(&[], ExportFormat::Json), b"[]");
        assert_eq!(
            export_phrases(&[], ExportFormat::Csv),
            b"text,pattern_id,slot_fillers,similarity\r\n"
        );
        assert!(
            parse_csv_export(b"text,pattern_id,slot_fillers,similarity\r\n")
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<ExportFormat>().unwrap(), ExportFormat::Csv);
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}
