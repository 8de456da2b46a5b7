mod common;

use std::sync::Arc;

use axum::http::StatusCode;
use common::{call, call_on, text_gen_body, uri, EDU, TEXT_GEN_PATTERN};
use valgen::{Service, ServiceConfig};

#[tokio::test]
async fn menus_cascade() {
    let langs = call("GET", "/v1/languages", None).await;
    assert_eq!(langs.status, StatusCode::OK);
    assert_eq!(langs.content_type, "application/json");
    let codes: Vec<String> = langs
        .json()
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["code"].as_str().unwrap().into())
        .collect();
    assert_eq!(codes, ["de", "es", "fr"]);

    let nouns = call("GET", "/v1/nouns?lang=de", None).await.json();
    assert!(nouns
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n["lemma"] == "Text" && n["gender"] == "masc"));

    let structures = call("GET", "/v1/structures?lang=de&noun=Text", None)
        .await
        .json();
    let ids: Vec<&str> = structures
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["pattern_id"].as_str().unwrap())
        .collect();
    for id in [
        "det+adj+Text+gen+adj+N1aG",
        "det+Text+gen+N1aG",
        TEXT_GEN_PATTERN,
    ] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }

    let r = call(
        "GET",
        &uri(
            "/v1/packages",
            &[
                ("lang", "de"),
                ("noun", "Text"),
                ("pattern", TEXT_GEN_PATTERN),
                ("slot", "b"),
            ],
        ),
        None,
    )
    .await;
    assert_eq!(r.status, StatusCode::OK);
    let packages = r.json();
    let edu = packages
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["id"] == EDU)
        .expect("education class offered");
    assert!(edu["preview"].as_str().unwrap().starts_with("der "));
    assert!(edu["members"]
        .as_array()
        .unwrap()
        .iter()
        .any(|m| m == "Akademikerin"));
}

#[tokio::test]
async fn generate_respects_the_limit() {
    let r = call("POST", "/v1/generate", Some(&text_gen_body(20))).await;
    assert_eq!(r.status, StatusCode::OK);
    let v = r.json();
    let phrases = v["phrases"].as_array().unwrap();
    assert!(phrases.len() <= 20);
    let stats = &v["stats"];
    assert_eq!(
        stats["truncated"].as_u64().unwrap(),
        stats["generated"].as_u64().unwrap() - phrases.len() as u64
    );
    assert!(phrases
        .iter()
        .any(|p| p["text"] == "der Bemerkungstext der Akademikerin"));
}

#[tokio::test]
async fn service_defaults_fill_unset_fields() {
    let mut config = ServiceConfig::new(common::fixtures());
    config.default_limit = 3;
    config.default_threshold = 1.0;
    let service = Arc::new(Service::load(config).unwrap());
    let body = format!(
        r#"{{"language":"de","lemma":"Text","pattern_id":"{TEXT_GEN_PATTERN}","packages":{{"a":["Bemerkung-set"],"b":["{EDU}"]}}}}"#
    );
    let v = call_on(service.clone(), "POST", "/v1/generate", Some(&body))
        .await
        .json();
    assert_eq!(v["phrases"].as_array().unwrap().len(), 0);
    assert!(v["stats"]["filtered"].as_u64().unwrap() > 0);
    let mut with_threshold: serde_json::Value = serde_json::from_str(&body).unwrap();
    with_threshold["compat_threshold"] = 0.25.into();
    let body = with_threshold.to_string();
    let v = call_on(service, "POST", "/v1/generate", Some(&body))
        .await
        .json();
    assert_eq!(v["phrases"].as_array().unwrap().len(), 3);
}

async fn error(method: &str, uri: &str, body: Option<&str>) -> (StatusCode, String) {
    let r = call(method, uri, body).await;
    assert_eq!(r.content_type, "application/json");
    let v = r.json();
    assert!(v["message"].is_string());
    (r.status, v["error"].as_str().unwrap().to_string())
}

#[tokio::test]
async fn errors_map_to_status_codes() {
    let gen = |body: String| async move { error("POST", "/v1/generate", Some(&body)).await };
    let one_package = format!(
        r#"{{"language":"de","lemma":"Text","pattern_id":"{TEXT_GEN_PATTERN}","packages":{{"a":["Bemerkung-set"]}}}}"#
    );
    assert_eq!(
        gen(one_package).await,
        (StatusCode::UNPROCESSABLE_ENTITY, "arity_mismatch".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("Bemerkung-set", "nope")).await,
        (StatusCode::UNPROCESSABLE_ENTITY, "package_mismatch".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("[\"Bemerkung-set\"]", "[]")).await,
        (
            StatusCode::UNPROCESSABLE_ENTITY,
            "empty_package_selection".into()
        )
    );
    assert_eq!(
        gen(text_gen_body(5).replace("\"Text\"", "\"Blub\"")).await,
        (StatusCode::NOT_FOUND, "unknown_frame".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace(TEXT_GEN_PATTERN, "det+x")).await,
        (StatusCode::NOT_FOUND, "unknown_pattern".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("\"b\":", "\"z\":")).await,
        (StatusCode::NOT_FOUND, "unknown_slot".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("\"de\"", "\"xx\"")).await,
        (StatusCode::NOT_FOUND, "unknown_language".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("}", ",\"compat_threshold\":3}"))
            .await
            .0,
        StatusCode::BAD_REQUEST
    );
    assert_eq!(
        gen("{not json".into()).await,
        (StatusCode::BAD_REQUEST, "malformed_request".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("\"limit\"", "\"limt\"")).await,
        (StatusCode::BAD_REQUEST, "malformed_request".into())
    );
    assert_eq!(
        gen(text_gen_body(5).replace("5}", "-5}")).await,
        (StatusCode::BAD_REQUEST, "malformed_request".into())
    );

    assert_eq!(
        error("GET", "/v1/structures?lang=de", None).await,
        (StatusCode::BAD_REQUEST, "malformed_request".into())
    );
    assert_eq!(
        error("GET", "/v1/nouns?lang=it", None).await,
        (StatusCode::NOT_FOUND, "unknown_language".into())
    );
    assert_eq!(
        error("GET", "/v1/structures?lang=de&noun=Blub", None).await,
        (StatusCode::NOT_FOUND, "unknown_frame".into())
    );
    let excluded = uri(
        "/v1/packages",
        &[
            ("lang", "de"),
            ("noun", "Schmerz"),
            ("pattern", "det+Schmerz+gen+N2bG"),
            ("slot", "a"),
        ],
    );
    assert_eq!(error("GET", &excluded, None).await.0, StatusCode::NOT_FOUND);
    assert_eq!(
        error("GET", "/v1/export?format=xml", Some(&text_gen_body(5))).await,
        (StatusCode::BAD_REQUEST, "malformed_request".into())
    );
    assert_eq!(
        error("GET", "/v1/nothing", None).await,
        (StatusCode::NOT_FOUND, "not_found".into())
    );
}

#[tokio::test]
async fn export_formats() {
    let json = call("GET", "/v1/export?format=json", Some(&text_gen_body(20))).await;
    assert_eq!(json.status, StatusCode::OK);
    assert_eq!(json.content_type, "application/json");
    assert_eq!(json.json().as_array().unwrap().len(), 20);
    let csv = call("POST", "/v1/export?format=csv", Some(&text_gen_body(20))).await;
    assert_eq!(csv.content_type, "text/csv; charset=utf-8");
    let rows: Vec<csv::StringRecord> = csv::Reader::from_reader(csv.body.as_slice())
        .records()
        .map(Result::unwrap)
        .collect();
    assert_eq!(rows.len(), 20);
    assert!(rows
        .iter()
        .any(|r| &r[0] == "der Bemerkungstext der Akademikerin"));
    let default = call("GET", "/v1/export", Some(&text_gen_body(20))).await;
    assert_eq!(default.body, json.body);
}

#[tokio::test]
async fn responses_are_identical_across_restarts() {
    let requests: Vec<(&str, String, Option<String>)> = vec![
        ("GET", "/v1/structures?lang=de&noun=Text".into(), None),
        (
            "GET",
            uri(
                "/v1/packages",
                &[
                    ("lang", "de"),
                    ("noun", "Text"),
                    ("pattern", TEXT_GEN_PATTERN),
                    ("slot", "a"),
                ],
            ),
            None,
        ),
        ("POST", "/v1/generate".into(), Some(text_gen_body(50))),
        (
            "GET",
            "/v1/export?format=json".into(),
            Some(text_gen_body(50)),
        ),
        (
            "GET",
            "/v1/export?format=csv".into(),
            Some(text_gen_body(50)),
        ),
    ];
    let (a, b) = (common::fresh_service(), common::fresh_service());
    for (m, u, body) in &requests {
        let x = call_on(a.clone(), m, u, body.as_deref()).await;
        let y = call_on(b.clone(), m, u, body.as_deref()).await;
        assert_eq!(x.status, StatusCode::OK);
        assert_eq!(x.body, y.body, "{u}");
    }
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_requests_share_the_snapshot() {
    let body = text_gen_body(100);
    let expected = call("POST", "/v1/generate", Some(&body)).await.body;
    let handles: Vec<_> = (0..16)
        .map(|_| {
            let body = body.clone();
            tokio::spawn(async move { call("POST", "/v1/generate", Some(&body)).await.body })
        })
        .collect();
    for h in handles {
        assert_eq!(h.await.unwrap(), expected);
    }
}
