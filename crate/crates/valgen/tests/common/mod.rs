#![allow(dead_code)]

pub mod parity;

use std::path::PathBuf;
use std::process::Command;
use std::sync::{Arc, OnceLock};

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use tower::ServiceExt;
use valgen::http::router;
use valgen::{Service, ServiceConfig};

pub const TEXT_GEN_PATTERN: &str = "det+arg5c+head+gen+N1a";
pub const EDU: &str = "belebt.menschlich.beruf.ausbildung";

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fresh_service() -> Arc<Service> {
    Arc::new(Service::load(ServiceConfig::new(fixtures())).expect("fixtures load"))
}

pub fn shared() -> &'static Arc<Service> {
    static S: OnceLock<Arc<Service>> = OnceLock::new();
    S.get_or_init(fresh_service)
}

pub fn service() -> Arc<Service> {
    shared().clone()
}

pub fn text_gen_body(limit: usize) -> String {
    format!(
        r#"{{"language":"de","lemma":"Text","pattern_id":"{TEXT_GEN_PATTERN}","packages":{{"a":["Bemerkung-set"],"b":["{EDU}"]}},"limit":{limit}}}"#
    )
}

pub struct Reply {
    pub status: StatusCode,
    pub content_type: String,
    pub body: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_slice(&self.body)
            .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&self.body)))
    }
}

pub async fn call_on(service: Arc<Service>, method: &str, uri: &str, body: Option<&str>) -> Reply {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = router(service).oneshot(req).await.unwrap();
    let status = resp.status();
    let content_type = resp
        .headers()
        .get("content-type")
        .map(|v| v.to_str().unwrap().to_string())
        .unwrap_or_default();
    let body = resp
        .into_body()
        .collect()
        .await
        .unwrap()
        .to_bytes()
        .to_vec();
    Reply {
        status,
        content_type,
        body,
    }
}

pub async fn call(method: &str, uri: &str, body: Option<&str>) -> Reply {
    call_on(service(), method, uri, body).await
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_valgen"))
        .args(args)
        .env("VALGEN_DATA_DIR", fixtures())
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// `path?k=v&...` with form-encoded values.
pub fn uri(path: &str, params: &[(&str, &str)]) -> String {
    let q = url::form_urlencoded::Serializer::new(String::new())
        .extend_pairs(params)
        .finish();
    format!("{path}?{q}")
}
