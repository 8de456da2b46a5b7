use std::net::SocketAddr;
use std::path::PathBuf;

use valgen_core::embeddings::DEFAULT_THRESHOLD;
use valgen_core::generation::DEFAULT_LIMIT;
use valgen_core::prototyping::Thresholds;

pub const DEFAULT_BIND: &str = "127.0.0.1:8080";

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Lexica, ontologies, frequency tables, annotations and vectors.
    pub data_dir: PathBuf,
    pub bind: SocketAddr,
    pub default_limit: usize,
    pub default_threshold: f64,
    pub log_level: String,
    pub thresholds: Thresholds,
}

impl ServiceConfig {
    pub fn new(data_dir: impl Into<PathBuf>) -> Self {
        ServiceConfig {
            data_dir: data_dir.into(),
            bind: DEFAULT_BIND.parse().expect("valid default address"),
            default_limit: DEFAULT_LIMIT,
            default_threshold: DEFAULT_THRESHOLD,
            log_level: "info".to_string(),
            thresholds: Thresholds::default(),
        }
    }
}
