//! Compare one lexeme across two frames (external comparison).

use serde::{Deserialize, Serialize};

use super::grade::Thresholds;
use super::table::CooccurrenceTable;
use crate::features::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContrastVerdict {
    #[serde(rename = "prototypical_in_A_only")]
    AOnly,
    #[serde(rename = "prototypical_in_B_only")]
    BOnly,
    Both,
    Neither,
}

impl ContrastVerdict {
    /// The verdict seen from the other side.
    pub fn mirrored(self) -> ContrastVerdict {
        match self {
            ContrastVerdict::AOnly => ContrastVerdict::BOnly,
            ContrastVerdict::BOnly => ContrastVerdict::AOnly,
            v => v,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ContrastVerdict::AOnly => "prototypical_in_A_only",
            ContrastVerdict::BOnly => "prototypical_in_B_only",
            ContrastVerdict::Both => "both",
            ContrastVerdict::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub frame: (Language, String),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern_id: Option<String>,
    /// `None` when the lexeme is not listed in this table.
    pub rank: Option<u32>,
    pub count: Option<u64>,
    pub prototypical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContrastReport {
    pub lexeme: String,
    pub a: Occurrence,
    pub b: Occurrence,
    pub verdict: ContrastVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("lexeme '{0}' is listed in neither table")]
pub struct LexemeAbsent(pub String);

fn occurrence(lexeme: &str, table: &CooccurrenceTable, config: &Thresholds) -> Occurrence {
    let hit = table.find(lexeme);
    Occurrence {
        frame: table.frame.clone(),
        pattern_id: table.pattern_id.clone(),
        rank: hit.map(|e| e.rank),
        count: hit.map(|e| e.count),
        prototypical: hit.is_some_and(|e| e.rank <= config.contrast_window),
    }
}

pub fn contrast_report(
    lexeme: &str,
    a: &CooccurrenceTable,
    b: &CooccurrenceTable,
    config: &Thresholds,
) -> Result<ContrastReport, LexemeAbsent> {
    let oa = occurrence(lexeme, a, config);
    let ob = occurrence(lexeme, b, config);
    if oa.rank.is_none() && ob.rank.is_none() {
        return Err(LexemeAbsent(lexeme.to_string()));
    }
    let verdict = match (oa.prototypical, ob.prototypical) {
        (true, true) => ContrastVerdict::Both,
        (true, false) => ContrastVerdict::AOnly,
        (false, true) => ContrastVerdict::BOnly,
        (false, false) => ContrastVerdict::Neither,
    };
    Ok(ContrastReport {
        lexeme: lexeme.to_string(),
        a: oa,
        b: ob,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(lemma: &str, rows: &str) -> CooccurrenceTable {
        let text = format!("# corpus_size_tokens=19807413543\n{rows}");
        CooccurrenceTable::parse(&text, (Language::De, lemma.into())).unwrap()
    }

    #[test]
    fn verdicts_and_symmetry() {
        let farbe = t("Farbe", "31\tAuge\t460\t0.023\n38\tHaar\t402\t0.020\n");
        let schmerz = t("Schmerz", "30\tAuge\t1949\t0.098\n263\tHaar\t39\t0.002\n");
        let cfg = Thresholds::default();
        let r = contrast_report("Haar", &farbe, &schmerz, &cfg).unwrap();
        assert_eq!(r.verdict, ContrastVerdict::AOnly);
        assert_eq!(r.b.rank, Some(263));
        let swapped = contrast_report("Haar", &schmerz, &farbe, &cfg).unwrap();
        assert_eq!(swapped.verdict, r.verdict.mirrored());
        assert_eq!(
            contrast_report("Auge", &farbe, &schmerz, &cfg)
                .unwrap()
                .verdict,
            ContrastVerdict::Both
        );
        assert!(contrast_report("zzz", &farbe, &schmerz, &cfg).is_err());
    }
}
