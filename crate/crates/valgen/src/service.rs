//! The operations both surfaces expose, over one immutable bundle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use valgen_core::bundle::{Bundle, BundleError};
use valgen_core::features::Gender;
use valgen_core::generation::{
    export_phrases, generate, list_semantic_packages, list_structures, ExportFormat, Generation,
    GenerationError, GenerationRequest, SemanticPackage, StructureInfo,
};
use valgen_core::{Execution, Language};

use crate::config::ServiceConfig;

/// A generation request as submitted by a client. Unset limit and threshold
/// fall back to the service defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateBody {
    pub language: String,
    pub lemma: String,
    pub pattern_id: String,
    #[serde(default)]
    pub packages: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compat_threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub include_adjectives: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageInfo {
    pub code: Language,
    pub nouns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NounInfo {
    pub lemma: String,
    pub gender: Gender,
    pub scene: String,
    pub structures: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum ServiceError {
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("malformed request: {0}")]
    Malformed(String),
}

impl ServiceError {
    pub fn code(&self) -> &'static str {
        match self {
            ServiceError::Generation(e) => e.code(),
            ServiceError::Malformed(_) => "malformed_request",
        }
    }

    /// Whether the caller, not the data, is at fault.
    pub fn is_usage(&self) -> bool {
        matches!(self.code(), "malformed_request" | "invalid_request")
    }
}

pub struct Service {
    bundle: Bundle,
    config: ServiceConfig,
}

impl Service {
    pub fn load(config: ServiceConfig) -> Result<Service, BundleError> {
        let bundle = Bundle::load(&config.data_dir, config.thresholds)?;
        tracing::info!(data_dir = %config.data_dir.display(), languages = bundle.languages().count(), "bundle loaded");
        Ok(Service { bundle, config })
    }

    pub fn config(&self) -> &ServiceConfig {
        &self.config
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    fn language(&self, code: &str) -> Result<Language, ServiceError> {
        code.parse::<Language>()
            .ok()
            .filter(|l| self.bundle.language(*l).is_some())
            .ok_or_else(|| GenerationError::UnknownLanguage(code.to_string()).into())
    }

    pub fn languages(&self) -> Vec<LanguageInfo> {
        self.bundle
            .languages()
            .map(|code| LanguageInfo {
                code,
                nouns: self.bundle.language(code).map_or(0, |l| l.frames.len()),
            })
            .collect()
    }

    pub fn nouns(&self, lang: &str) -> Result<Vec<NounInfo>, ServiceError> {
        let lang = self.language(lang)?;
        let mut out = Vec::new();
        for frame in self.bundle.lexicon.frames_of(lang) {
            if self.bundle.frame(lang, &frame.lemma).is_none() {
                continue;
            }
            out.push(NounInfo {
                lemma: frame.lemma.clone(),
                gender: frame.gender,
                scene: frame.scene.clone(),
                structures: list_structures(&self.bundle, lang, &frame.lemma)?.len(),
            });
        }
        out.sort_by(|a, b| a.lemma.cmp(&b.lemma));
        Ok(out)
    }

    pub fn structures(&self, lang: &str, noun: &str) -> Result<Vec<StructureInfo>, ServiceError> {
        Ok(list_structures(&self.bundle, self.language(lang)?, noun)?)
    }

    pub fn packages(
        &self,
        lang: &str,
        noun: &str,
        pattern: &str,
        slot: &str,
    ) -> Result<Vec<SemanticPackage>, ServiceError> {
        Ok(list_semantic_packages(
            &self.bundle,
            self.language(lang)?,
            noun,
            pattern,
            slot,
        )?)
    }

    pub fn request(&self, body: &GenerateBody) -> Result<GenerationRequest, ServiceError> {
        Ok(GenerationRequest {
            language: self.language(&body.language)?,
            lemma: body.lemma.clone(),
            pattern_id: body.pattern_id.clone(),
            packages: body.packages.clone(),
            limit: body.limit.unwrap_or(self.config.default_limit),
            seed: body.seed.unwrap_or(0),
            compat_threshold: body
                .compat_threshold
                .unwrap_or(self.config.default_threshold),
            include_adjectives: body.include_adjectives.unwrap_or(false),
        })
    }

    pub fn generate(&self, body: &GenerateBody) -> Result<Generation, ServiceError> {
        let req = self.request(body)?;
        let g = generate(&self.bundle, &req, Execution::default())?;
        tracing::info!(
            lang = %req.language,
            noun = %req.lemma,
            pattern = %req.pattern_id,
            generated = g.stats.generated,
            filtered = g.stats.filtered,
            truncated = g.stats.truncated,
            "generate"
        );
        Ok(g)
    }

    pub fn export(
        &self,
        body: &GenerateBody,
        format: ExportFormat,
    ) -> Result<Vec<u8>, ServiceError> {
        Ok(export_phrases(&self.generate(body)?.phrases, format))
    }
}
