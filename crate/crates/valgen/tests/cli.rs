mod common;

use std::process::Command;

use common::{cli, EDU, TEXT_GEN_PATTERN};

fn text_gen(extra: &[&str]) -> Vec<String> {
    let mut a: Vec<String> = [
        "generate",
        "--lang",
        "de",
        "--noun",
        "Text",
        "--pattern",
        TEXT_GEN_PATTERN,
        "--package",
        "a=Bemerkung-set",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    a.push("--package".into());
    a.push(format!("b={EDU}"));
    a.extend(extra.iter().map(|s| s.to_string()));
    a
}

fn run(args: &[String]) -> common::Run {
    cli(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn csv_generation() {
    let r = run(&text_gen(&["--limit", "20", "--format", "csv"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let mut reader = csv::Reader::from_reader(r.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["text", "pattern_id", "slot_fillers", "similarity"]
    );
    let texts: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    assert_eq!(texts.len(), 20);
    assert!(texts
        .iter()
        .any(|t| t == "der Bemerkungstext der Akademikerin"));
}

#[test]
fn limit_zero_is_empty_and_succeeds() {
    let r = run(&text_gen(&["--limit", "0"]));
    assert_eq!((r.code, r.stdout.as_slice()), (0, b"[]".as_slice()));
    let r = run(&text_gen(&["--limit", "0", "--format", "csv"]));
    assert_eq!(
        (r.code, r.stdout.as_slice()),
        (0, b"text,pattern_id,slot_fillers,similarity\r\n".as_slice())
    );
}

#[test]
fn unknown_noun_is_a_data_error() {
    let r = cli(&[
        "generate",
        "--lang",
        "de",
        "--noun",
        "Blub",
        "--pattern",
        TEXT_GEN_PATTERN,
        "--package",
        "a=x",
    ]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("unknown frame"), "{}", r.stderr);
    assert_eq!(r.stderr.lines().count(), 1);
    assert!(r.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["generate", "--lang", "de"],
        vec![
            "generate",
            "--lang",
            "de",
            "--noun",
            "Text",
            "--pattern",
            TEXT_GEN_PATTERN,
            "--package",
            "nonsense",
        ],
        vec![
            "generate",
            "--lang",
            "de",
            "--noun",
            "Text",
            "--pattern",
            TEXT_GEN_PATTERN,
            "--format",
            "xml",
        ],
        vec![
            "generate",
            "--lang",
            "de",
            "--noun",
            "Text",
            "--pattern",
            TEXT_GEN_PATTERN,
            "--limit",
            "-1",
        ],
        vec!["frobnicate"],
    ] {
        assert_eq!(cli(&args).code, 2, "{args:?}");
    }
    let r = run(&text_gen(&["--threshold", "2"]));
    assert_eq!(r.code, 2, "{}", r.stderr);
    assert!(r.stderr.starts_with("error: invalid request"));
}

#[test]
fn missing_data_dir() {
    let out = Command::new(env!("CARGO_BIN_EXE_valgen"))
        .args(["languages"])
        .env_remove("VALGEN_DATA_DIR")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("VALGEN_DATA_DIR"));
    let empty = std::env::temp_dir().join(format!("valgen-empty-{}", std::process::id()));
    std::fs::create_dir_all(&empty).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_valgen"))
        .args(["languages", "--data-dir"])
        .arg(&empty)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir(&empty).unwrap();
}

#[test]
fn text_format_and_negative_threshold() {
    let r = run(&text_gen(&[
        "--limit",
        "5",
        "--format",
        "text",
        "--threshold",
        "-1",
    ]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let out = String::from_utf8(r.stdout).unwrap();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("   1  der "));
    assert!(lines[5].starts_with("-- 192 generated, 0 filtered, 187 truncated"));
}

#[test]
fn logs_go_to_stderr() {
    let r = run(&text_gen(&[
        "--limit",
        "3",
        "--log-level",
        "info",
        "--log-json",
    ]));
    assert_eq!(r.code, 0);
    let events: Vec<serde_json::Value> = r
        .stderr
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let gen = events
        .iter()
        .find(|e| e["fields"]["message"] == "generate")
        .expect("generate event");
    assert_eq!(gen["fields"]["generated"], 192);
    let phrases: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(phrases.as_array().unwrap().len(), 3);
}

#[test]
fn help_and_version() {
    assert_eq!(cli(&["--help"]).code, 0);
    let v = cli(&["--version"]);
    assert_eq!(v.code, 0);
    assert!(String::from_utf8(v.stdout).unwrap().starts_with("valgen "));
}

#[test]
fn serve_answers_over_tcp() {
    use std::io::{Read, Write};
    use std::net::{TcpListener, TcpStream};
    use std::time::{Duration, Instant};

    let port = TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port();
    let mut child = Command::new(env!("CARGO_BIN_EXE_valgen"))
        .args(["serve", "--bind", &format!("127.0.0.1:{port}")])
        .env("VALGEN_DATA_DIR", common::fixtures())
        .spawn()
        .unwrap();
    let start = Instant::now();
    let mut stream = loop {
        match TcpStream::connect(("127.0.0.1", port)) {
            Ok(s) => break s,
            Err(_) if start.elapsed() < Duration::from_secs(20) => {
                std::thread::sleep(Duration::from_millis(50))
            }
            Err(e) => panic!("server did not come up: {e}"),
        }
    };
    stream
        .write_all(b"GET /v1/languages HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n")
        .unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).unwrap();
    child.kill().unwrap();
    child.wait().unwrap();
    assert!(response.starts_with("HTTP/1.1 200"), "{response}");
    assert!(
        response.ends_with(
            r#"[{"code":"de","nouns":20},{"code":"es","nouns":20},{"code":"fr","nouns":20}]"#
        ),
        "{response}"
    );
}
