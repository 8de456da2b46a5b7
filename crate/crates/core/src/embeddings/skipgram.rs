//! Skip-gram with negative sampling, trained by full-batch gradient descent.
//!
//! Negatives are drawn once, up front, from the unigram distribution raised to
//! 0.75, so the objective is a fixed function of the parameters. Each epoch
//! takes one gradient step with a backtracking step size; a step that would
//! raise the loss is halved until it does not, which keeps the per-epoch loss
//! non-increasing.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::store::{VectorError, VectorStore};

#[derive(Debug, thiserror::Error)]
pub enum TrainError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("corpus contains no tokens")]
    EmptyCorpus,
    #[error("dimension must be at least 2, got {0}")]
    Dimension(usize),
    #[error(transparent)]
    Vectors(#[from] VectorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainConfig {
    pub dims: usize,
    pub window: usize,
    pub negatives: usize,
    pub epochs: usize,
    pub seed: u64,
    pub learning_rate: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            dims: 16,
            window: 2,
            negatives: 5,
            epochs: 100,
            seed: 0,
            learning_rate: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TrainingReport {
    /// Loss before training, then after each epoch.
    pub losses: Vec<f64>,
    pub samples: usize,
    pub warnings: Vec<String>,
}

/// Whitespace-tokenized sentences, one per line.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Corpus {
    pub sentences: Vec<Vec<String>>,
}

impl Corpus {
    pub fn parse(text: &str) -> Corpus {
        let sentences = text
            .lines()
            .map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
            .filter(|s| !s.is_empty())
            .collect();
        Corpus { sentences }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Corpus, TrainError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| TrainError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Corpus::parse(&text))
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    /// Sorted vocabulary with counts.
    pub fn vocabulary(&self) -> BTreeMap<String, u64> {
        let mut v = BTreeMap::new();
        for t in self.sentences.iter().flatten() {
            *v.entry(t.clone()).or_insert(0) += 1;
        }
        v
    }
}

/// Input (word) and output (context) embeddings, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SkipGramModel {
    pub vocab: Vec<String>,
    pub dims: usize,
    pub input: Vec<f64>,
    pub output: Vec<f64>,
}

impl SkipGramModel {
    /// Input rows uniform in ±0.5/dims, output rows zero.
    pub fn initialize(vocab: Vec<String>, dims: usize, seed: u64) -> SkipGramModel {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let half = 0.5 / dims as f64;
        let input = (0..vocab.len() * dims)
            .map(|_| rng.random_range(-half..half))
            .collect();
        let output = vec![0.0; vocab.len() * dims];
        SkipGramModel {
            vocab,
            dims,
            input,
            output,
        }
    }

    pub fn to_store(&self) -> Result<VectorStore, VectorError> {
        let mut store = VectorStore::new(self.dims)?;
        for (i, w) in self.vocab.iter().enumerate() {
            store.insert(w, &self.input[i * self.dims..(i + 1) * self.dims])?;
        }
        Ok(store)
    }
}

/// One (center, context) pair with its fixed negatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub center: usize,
    pub context: usize,
    pub negatives: Vec<usize>,
}

/// The mean negative-sampling loss over a fixed sample set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub samples: Vec<Sample>,
}

fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Objective {
    pub fn loss(&self, m: &SkipGramModel) -> f64 {
        self.loss_of(m.dims, &m.input, &m.output)
    }

    fn loss_of(&self, d: usize, input: &[f64], output: &[f64]) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        let row = |v: &[f64], i: usize| v[i * d..(i + 1) * d].to_vec();
        let mut total = 0.0;
        for s in &self.samples {
            let w = row(input, s.center);
            total += softplus(-dot(&w, &row(output, s.context)));
            for &n in &s.negatives {
                total += softplus(dot(&w, &row(output, n)));
            }
        }
        total / self.samples.len() as f64
    }

    /// Analytic gradient (input, output) of [`Objective::loss`].
    pub fn gradient(&self, m: &SkipGramModel) -> (Vec<f64>, Vec<f64>) {
        let d = m.dims;
        let mut gin = vec![0.0; m.input.len()];
        let mut gout = vec![0.0; m.output.len()];
        if self.samples.is_empty() {
            return (gin, gout);
        }
        let scale = 1.0 / self.samples.len() as f64;
        for s in &self.samples {
            let c = s.center * d;
            let targets =
                std::iter::once((s.context, true)).chain(s.negatives.iter().map(|&n| (n, false)));
            for (t, positive) in targets {
                let o = t * d;
                let score = dot(&m.input[c..c + d], &m.output[o..o + d]);
                let g = scale
                    * if positive {
                        sigmoid(score) - 1.0
                    } else {
                        sigmoid(score)
                    };
                for k in 0..d {
                    gin[c + k] += g * m.output[o + k];
                    gout[o + k] += g * m.input[c + k];
                }
            }
        }
        (gin, gout)
    }
}

/// Build window pairs and draw their negatives.
pub fn build_samples(
    corpus: &Corpus,
    ids: &HashMap<String, usize>,
    counts: &[u64],
    window: usize,
    negatives: usize,
    rng: &mut impl Rng,
) -> Vec<Sample> {
    let weights: Vec<f64> = counts.iter().map(|&c| (c as f64).powf(0.75)).collect();
    let table = if counts.len() > 1 {
        WeightedIndex::new(&weights).ok()
    } else {
        None
    };
    let mut samples = Vec::new();
    for sentence in &corpus.sentences {
        let tokens: Vec<usize> = sentence.iter().map(|t| ids[t]).collect();
        for (i, &center) in tokens.iter().enumerate() {
            let lo = i.saturating_sub(window);
            let hi = (i + window + 1).min(tokens.len());
            for (j, &context) in tokens.iter().enumerate().take(hi).skip(lo) {
                if j == i {
                    continue;
                }
                let mut negs = Vec::with_capacity(negatives);
                if let Some(table) = &table {
                    while negs.len() < negatives {
                        let n = table.sample(rng);
                        if n != context {
                            negs.push(n);
                        }
                    }
                }
                samples.push(Sample {
                    center,
                    context,
                    negatives: negs,
                });
            }
        }
    }
    samples
}

pub fn train_skipgram(
    corpus: &Corpus,
    config: &TrainConfig,
) -> Result<(VectorStore, TrainingReport), TrainError> {
    let (model, report) = train_model(corpus, config)?;
    Ok((model.to_store()?, report))
}

pub fn train_model(
    corpus: &Corpus,
    config: &TrainConfig,
) -> Result<(SkipGramModel, TrainingReport), TrainError> {
    if corpus.token_count() == 0 {
        return Err(TrainError::EmptyCorpus);
    }
    if config.dims < 2 {
        return Err(TrainError::Dimension(config.dims));
    }
    let vocab_counts = corpus.vocabulary();
    let vocab: Vec<String> = vocab_counts.keys().cloned().collect();
    let counts: Vec<u64> = vocab_counts.values().copied().collect();
    let ids: HashMap<String, usize> = vocab
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();

    let mut report = TrainingReport::default();
    if vocab.len() == 1 {
        let msg = format!(
            "vocabulary has a single type '{}'; no negatives can be drawn",
            vocab[0]
        );
        tracing::warn!("{msg}");
        report.warnings.push(msg);
    }

    let mut model = SkipGramModel::initialize(vocab, config.dims, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    let objective = Objective {
        samples: build_samples(
            corpus,
            &ids,
            &counts,
            config.window,
            config.negatives,
            &mut rng,
        ),
    };
    report.samples = objective.samples.len();

    let mut loss = objective.loss(&model);
    report.losses.push(loss);
    let mut lr = config.learning_rate;
    for _ in 0..config.epochs {
        let (gin, gout) = objective.gradient(&model);
        let mut step = lr;
        for _ in 0..40 {
            let input: Vec<f64> = model
                .input
                .iter()
                .zip(&gin)
                .map(|(p, g)| p - step * g)
                .collect();
            let output: Vec<f64> = model
                .output
                .iter()
                .zip(&gout)
                .map(|(p, g)| p - step * g)
                .collect();
            let candidate = objective.loss_of(model.dims, &input, &output);
            if candidate <= loss {
                model.input = input;
                model.output = output;
                loss = candidate;
                lr = step * 1.25;
                break;
            }
            step *= 0.5;
        }
        report.losses.push(loss);
    }
    Ok((model, report))
}
