//! Word vectors: storage, similarity, compatibility filtering and training.

pub mod filter;
pub mod skipgram;
pub mod store;

pub use filter::{
    check_threshold, compatibility_filter, judge, CompatibilityVerdict, Decision,
    ThresholdOutOfRange, DEFAULT_THRESHOLD,
};
pub use skipgram::{
    build_samples, train_model, train_skipgram, Corpus, Objective, Sample, SkipGramModel,
    TrainConfig, TrainError, TrainingReport,
};
pub use store::{VectorError, VectorStore};
