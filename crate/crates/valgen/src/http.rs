//! The `/v1` JSON API.

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::rejection::QueryRejection;
use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tower_http::services::ServeDir;
use tower_http::trace::TraceLayer;
use valgen_core::generation::ExportFormat;

use crate::service::{GenerateBody, Service, ServiceError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub message: String,
}

pub struct ApiError(pub ServiceError);

impl From<ServiceError> for ApiError {
    fn from(e: ServiceError) -> Self {
        ApiError(e)
    }
}

pub fn status_of(e: &ServiceError) -> StatusCode {
    match e.code() {
        "malformed_request" | "invalid_request" => StatusCode::BAD_REQUEST,
        "unknown_language" | "unknown_frame" | "unknown_pattern" | "unknown_slot" => {
            StatusCode::NOT_FOUND
        }
        "arity_mismatch" | "package_mismatch" | "empty_package_selection" => {
            StatusCode::UNPROCESSABLE_ENTITY
        }
        _ => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

fn json_response<T: Serialize>(status: StatusCode, value: &T) -> Response {
    let bytes = serde_json::to_vec(value).expect("response serializes");
    (status, [(header::CONTENT_TYPE, "application/json")], bytes).into_response()
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = status_of(&self.0);
        if status.is_server_error() {
            tracing::error!(error = %self.0, "request failed");
        } else {
            tracing::debug!(error = %self.0, "request rejected");
        }
        json_response(
            status,
            &ErrorBody {
                error: self.0.code().to_string(),
                message: self.0.to_string(),
            },
        )
    }
}

type ApiResult = Result<Response, ApiError>;

fn query<T>(q: Result<Query<T>, QueryRejection>) -> Result<T, ApiError> {
    q.map(|Query(v)| v)
        .map_err(|e| ApiError(ServiceError::Malformed(e.body_text())))
}

fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError(ServiceError::Malformed(e.to_string())))
}

#[derive(Deserialize)]
struct LangQuery {
    lang: String,
}

#[derive(Deserialize)]
struct NounQuery {
    lang: String,
    noun: String,
}

#[derive(Deserialize)]
struct PackageQuery {
    lang: String,
    noun: String,
    pattern: String,
    slot: String,
}

#[derive(Deserialize)]
struct ExportQuery {
    format: Option<String>,
}

async fn languages(State(s): State<Arc<Service>>) -> Response {
    json_response(StatusCode::OK, &s.languages())
}

async fn nouns(
    State(s): State<Arc<Service>>,
    q: Result<Query<LangQuery>, QueryRejection>,
) -> ApiResult {
    let q = query(q)?;
    Ok(json_response(StatusCode::OK, &s.nouns(&q.lang)?))
}

async fn structures(
    State(s): State<Arc<Service>>,
    q: Result<Query<NounQuery>, QueryRejection>,
) -> ApiResult {
    let q = query(q)?;
    Ok(json_response(
        StatusCode::OK,
        &s.structures(&q.lang, &q.noun)?,
    ))
}

async fn packages(
    State(s): State<Arc<Service>>,
    q: Result<Query<PackageQuery>, QueryRejection>,
) -> ApiResult {
    let q = query(q)?;
    Ok(json_response(
        StatusCode::OK,
        &s.packages(&q.lang, &q.noun, &q.pattern, &q.slot)?,
    ))
}

async fn generate(State(s): State<Arc<Service>>, bytes: Bytes) -> ApiResult {
    let req: GenerateBody = body(&bytes)?;
    Ok(json_response(StatusCode::OK, &s.generate(&req)?))
}

async fn export(
    State(s): State<Arc<Service>>,
    q: Result<Query<ExportQuery>, QueryRejection>,
    bytes: Bytes,
) -> ApiResult {
    let q = query(q)?;
    let format: ExportFormat = q
        .format
        .as_deref()
        .unwrap_or("json")
        .parse()
        .map_err(|e: String| ApiError(ServiceError::Malformed(e)))?;
    let req: GenerateBody = body(&bytes)?;
    let out = s.export(&req, format)?;
    let content_type = match format {
        ExportFormat::Json => "application/json",
        ExportFormat::Csv => "text/csv; charset=utf-8",
    };
    Ok((StatusCode::OK, [(header::CONTENT_TYPE, content_type)], out).into_response())
}

async fn not_found() -> Response {
    json_response(
        StatusCode::NOT_FOUND,
        &ErrorBody {
            error: "not_found".into(),
            message: "no such endpoint".into(),
        },
    )
}

pub fn router(service: Arc<Service>) -> Router {
    let api = Router::new()
        .route("/languages", get(languages))
        .route("/nouns", get(nouns))
        .route("/structures", get(structures))
        .route("/packages", get(packages))
        .route("/generate", post(generate))
        .route("/export", get(export).post(export))
        .fallback(not_found)
        .with_state(service);
    Router::new()
        .nest("/v1", api)
        .layer(TraceLayer::new_for_http())
}

/// Serve the API, and the web client's static build when given, until ctrl-c.
pub async fn serve(
    service: Arc<Service>,
    bind: SocketAddr,
    static_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    let mut app = router(service);
    if let Some(dir) = static_dir {
        app = app.fallback_service(ServeDir::new(dir));
    }
    let listener = tokio::net::TcpListener::bind(bind).await?;
    tracing::info!(addr = %listener.local_addr()?, "listening");
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
