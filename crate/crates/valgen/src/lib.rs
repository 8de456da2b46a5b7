//! Command line and HTTP front end over a loaded data bundle.

pub mod cli;
pub mod config;
pub mod http;
pub mod service;

pub use config::ServiceConfig;
pub use service::{GenerateBody, Service, ServiceError};
