//! One table of cases run through the CLI binary and the HTTP router.

use axum::http::StatusCode;
use serde_json::{json, Value};

use super::{call, cli, uri, EDU, TEXT_GEN_PATTERN};

#[derive(Clone, Copy, PartialEq)]
enum Compare {
    /// Parsed JSON values must be equal.
    Json,
    /// Raw bytes must be equal.
    Bytes,
    /// CLI export texts must equal the texts of the API's `/v1/generate` phrases.
    Texts,
}

pub struct Case {
    pub name: &'static str,
    cli: Vec<String>,
    method: &'static str,
    uri: String,
    body: Option<String>,
    compare: Compare,
}

fn menu(name: &'static str, cli_args: &[&str], path: &str, params: &[(&str, &str)]) -> Case {
    Case {
        name,
        cli: cli_args.iter().map(|s| s.to_string()).collect(),
        method: "GET",
        uri: uri(path, params),
        body: None,
        compare: Compare::Json,
    }
}

#[derive(Default, Clone)]
struct Gen {
    lang: &'static str,
    noun: &'static str,
    pattern: &'static str,
    packages: Vec<(&'static str, String)>,
    limit: Option<usize>,
    seed: Option<u64>,
    threshold: Option<f64>,
    adjectives: bool,
}

impl Gen {
    fn args(&self, format: &str) -> Vec<String> {
        let mut a = vec![
            "generate",
            "--lang",
            self.lang,
            "--noun",
            self.noun,
            "--pattern",
            self.pattern,
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        for (slot, id) in &self.packages {
            a.extend(["--package".into(), format!("{slot}={id}")]);
        }
        if let Some(l) = self.limit {
            a.extend(["--limit".into(), l.to_string()]);
        }
        if let Some(s) = self.seed {
            a.extend(["--seed".into(), s.to_string()]);
        }
        if let Some(t) = self.threshold {
            a.extend(["--threshold".into(), t.to_string()]);
        }
        if self.adjectives {
            a.push("--adjectives".into());
        }
        a.extend(["--format".into(), format.into()]);
        a
    }

    fn body(&self) -> String {
        let mut packages = serde_json::Map::new();
        for (slot, id) in &self.packages {
            packages
                .entry(slot.to_string())
                .or_insert_with(|| json!([]))
                .as_array_mut()
                .unwrap()
                .push(json!(id));
        }
        let mut v = json!({"language": self.lang, "lemma": self.noun, "pattern_id": self.pattern, "packages": packages});
        if let Some(l) = self.limit {
            v["limit"] = json!(l);
        }
        if let Some(s) = self.seed {
            v["seed"] = json!(s);
        }
        if let Some(t) = self.threshold {
            v["compat_threshold"] = json!(t);
        }
        if self.adjectives {
            v["include_adjectives"] = json!(true);
        }
        v.to_string()
    }

    fn export(&self, name: &'static str, format: &str) -> Case {
        Case {
            name,
            cli: self.args(format),
            method: "GET",
            uri: format!("/v1/export?format={format}"),
            body: Some(self.body()),
            compare: Compare::Bytes,
        }
    }

    fn texts(&self, name: &'static str) -> Case {
        Case {
            name,
            cli: self.args("json"),
            method: "POST",
            uri: "/v1/generate".into(),
            body: Some(self.body()),
            compare: Compare::Texts,
        }
    }
}

fn first_package(lang: &str, noun: &str, pattern: &str, slot: &str) -> String {
    super::service()
        .packages(lang, noun, pattern, slot)
        .unwrap()[0]
        .id
        .clone()
}

fn text_gen() -> Gen {
    Gen {
        lang: "de",
        noun: "Text",
        pattern: TEXT_GEN_PATTERN,
        packages: vec![("a", "Bemerkung-set".into()), ("b", EDU.into())],
        limit: Some(20),
        ..Gen::default()
    }
}

pub fn cases() -> Vec<Case> {
    let mono = Gen {
        lang: "de",
        noun: "Text",
        pattern: "det+adj+Text+gen+adj+N1aG",
        packages: vec![("a", EDU.into()), ("a", "belebt.menschlich.beruf".into())],
        limit: Some(40),
        seed: Some(7),
        adjectives: true,
        ..Gen::default()
    };
    let es = Gen {
        lang: "es",
        noun: "texto",
        pattern: "det+texto+de+det+N1a+sobre+det+N3a",
        packages: vec![
            (
                "a",
                first_package("es", "texto", "det+texto+de+det+N1a+sobre+det+N3a", "a"),
            ),
            (
                "b",
                first_package("es", "texto", "det+texto+de+det+N1a+sobre+det+N3a", "b"),
            ),
        ],
        threshold: Some(-0.1),
        ..Gen::default()
    };
    let fr = Gen {
        lang: "fr",
        noun: "amour",
        pattern: "det+amour+de+det+N1a",
        packages: vec![(
            "Arg1.1",
            first_package("fr", "amour", "det+amour+de+det+N1a", "Arg1.1"),
        )],
        limit: Some(500),
        ..Gen::default()
    };
    let mut arity = text_gen();
    arity.packages.truncate(1);
    let mut unknown_noun = text_gen();
    unknown_noun.noun = "Blub";
    let mut unknown_lang = text_gen();
    unknown_lang.lang = "it";
    let mut bad_threshold = text_gen();
    bad_threshold.threshold = Some(1.5);
    let mut bad_package = text_gen();
    bad_package.packages[1].1 = "belebt.pflanze".into();
    let mut bad_slot = text_gen();
    bad_slot.packages[1].0 = "c";
    let mut limit0 = text_gen();
    limit0.limit = Some(0);

    vec![
        menu("languages", &["languages"], "/v1/languages", &[]),
        menu(
            "nouns de",
            &["nouns", "--lang", "de"],
            "/v1/nouns",
            &[("lang", "de")],
        ),
        menu(
            "nouns fr",
            &["nouns", "--lang", "fr"],
            "/v1/nouns",
            &[("lang", "fr")],
        ),
        menu(
            "structures de Text",
            &["structures", "--lang", "de", "--noun", "Text"],
            "/v1/structures",
            &[("lang", "de"), ("noun", "Text")],
        ),
        menu(
            "structures es texto",
            &["structures", "--lang", "es", "--noun", "texto"],
            "/v1/structures",
            &[("lang", "es"), ("noun", "texto")],
        ),
        menu(
            "packages slot a",
            &[
                "packages",
                "--lang",
                "de",
                "--noun",
                "Text",
                "--pattern",
                TEXT_GEN_PATTERN,
                "--slot",
                "a",
            ],
            "/v1/packages",
            &[
                ("lang", "de"),
                ("noun", "Text"),
                ("pattern", TEXT_GEN_PATTERN),
                ("slot", "a"),
            ],
        ),
        menu(
            "packages slot Arg1.1",
            &[
                "packages",
                "--lang",
                "de",
                "--noun",
                "Text",
                "--pattern",
                TEXT_GEN_PATTERN,
                "--slot",
                "Arg1.1",
            ],
            "/v1/packages",
            &[
                ("lang", "de"),
                ("noun", "Text"),
                ("pattern", TEXT_GEN_PATTERN),
                ("slot", "Arg1.1"),
            ],
        ),
        menu(
            "nouns unknown language",
            &["nouns", "--lang", "it"],
            "/v1/nouns",
            &[("lang", "it")],
        ),
        menu(
            "structures unknown noun",
            &["structures", "--lang", "de", "--noun", "Blub"],
            "/v1/structures",
            &[("lang", "de"), ("noun", "Blub")],
        ),
        text_gen().export("text_gen json", "json"),
        text_gen().export("text_gen csv", "csv"),
        text_gen().texts("text_gen generate"),
        limit0.export("limit 0", "json"),
        mono.export("mono with adjectives", "csv"),
        mono.texts("mono generate"),
        es.export("es bi", "json"),
        fr.export("fr mono", "csv"),
        arity.export("arity mismatch", "json"),
        unknown_noun.export("unknown noun", "json"),
        unknown_lang.export("unknown language", "csv"),
        bad_threshold.export("threshold out of range", "json"),
        bad_package.export("package not offered", "json"),
        bad_slot.export("unknown slot", "json"),
    ]
}

fn exit_for(status: StatusCode) -> i32 {
    match status {
        StatusCode::OK => 0,
        StatusCode::BAD_REQUEST => 2,
        _ => 3,
    }
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub successes: usize,
    pub errors: usize,
}

/// Run one case through both surfaces; `Ok(true)` when both succeeded.
pub async fn check(case: &Case) -> Result<bool, String> {
    let args: Vec<&str> = case.cli.iter().map(String::as_str).collect();
    let run = cli(&args);
    let reply = call(case.method, &case.uri, case.body.as_deref()).await;
    if run.code != exit_for(reply.status) {
        return Err(format!(
            "exit {} vs status {}: {}",
            run.code,
            reply.status,
            run.stderr.trim_end()
        ));
    }
    if reply.status != StatusCode::OK {
        let message = reply.json()["message"]
            .as_str()
            .unwrap_or_default()
            .to_string();
        if run.stderr.trim_end() != format!("error: {message}") || !run.stdout.is_empty() {
            return Err(format!(
                "diagnostics differ: '{}' vs '{message}'",
                run.stderr.trim_end()
            ));
        }
        return Ok(false);
    }
    let same = match case.compare {
        Compare::Bytes => run.stdout == reply.body,
        Compare::Json => serde_json::from_slice::<Value>(&run.stdout).ok() == Some(reply.json()),
        Compare::Texts => {
            let texts = |v: &Value| {
                v.as_array()
                    .map(|a| a.iter().map(|p| p["text"].clone()).collect::<Vec<_>>())
            };
            let cli_texts = serde_json::from_slice::<Value>(&run.stdout)
                .ok()
                .and_then(|v| texts(&v));
            cli_texts.as_ref().is_some_and(|t| !t.is_empty())
                && cli_texts == texts(&reply.json()["phrases"])
        }
    };
    if same {
        Ok(true)
    } else {
        Err("outputs differ".into())
    }
}

pub async fn run_matrix() -> Result<Outcome, String> {
    let mut outcome = Outcome::default();
    for case in cases() {
        match check(&case).await {
            Ok(true) => outcome.successes += 1,
            Ok(false) => outcome.errors += 1,
            Err(e) => return Err(format!("{}: {e}", case.name)),
        }
    }
    Ok(outcome)
}
