//! Candidate enumeration, binding, realization, filtering and ranking.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::catalog::{free_adjective_slots, list_semantic_packages, lookup_frame, lookup_pattern};
use super::GenerationError;
use crate::bundle::{Bundle, FrameEvidence, NumberPolicy};
use crate::embeddings::{
    check_threshold, compatibility_filter, Decision, VectorStore, DEFAULT_THRESHOLD,
};
use crate::exec::Execution;
use crate::features::{Language, Number};
use crate::lexicon::{ArgRef, Arity, LexemeId, RealizationPattern, SlotKind, ValencyFrame};
use crate::morphology::{realize_np, Binding, GroupTrace, MorphError, Realization, RealizeOptions};

pub const DEFAULT_LIMIT: usize = 20;

fn default_limit() -> usize {
    DEFAULT_LIMIT
}

fn default_threshold() -> f64 {
    DEFAULT_THRESHOLD
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerationRequest {
    pub language: Language,
    pub lemma: String,
    pub pattern_id: String,
    /// Selected package ids per slot name (`a`, `b` or `Arg1.1`).
    pub packages: BTreeMap<String, Vec<String>>,
    #[serde(default = "default_limit")]
    pub limit: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_threshold")]
    pub compat_threshold: f64,
    #[serde(default)]
    pub include_adjectives: bool,
}

impl GenerationRequest {
    pub fn new(language: Language, lemma: &str, pattern_id: &str) -> Self {
        GenerationRequest {
            language,
            lemma: lemma.to_string(),
            pattern_id: pattern_id.to_string(),
            packages: BTreeMap::new(),
            limit: DEFAULT_LIMIT,
            seed: 0,
            compat_threshold: DEFAULT_THRESHOLD,
            include_adjectives: false,
        }
    }

    pub fn package(mut self, slot: &str, id: &str) -> Self {
        self.packages
            .entry(slot.to_string())
            .or_default()
            .push(id.to_string());
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotBinding {
    pub slot: ArgRef,
    pub lexeme: LexemeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<Number>,
    pub package: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub language: Language,
    pub lemma: String,
    pub pattern_id: String,
    /// In pattern order.
    pub bindings: Vec<SlotBinding>,
    /// Free adjectives by pattern position.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub adjectives: BTreeMap<usize, LexemeId>,
    pub trace: Vec<GroupTrace>,
}

impl Derivation {
    pub fn binding(&self) -> Binding {
        let mut b = Binding {
            adjectives: self.adjectives.clone(),
            ..Binding::default()
        };
        for s in &self.bindings {
            b = b.with_arg(s.slot, &s.lexeme, s.number);
        }
        b
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scores {
    /// Corpus count of each filler in its slot's table.
    pub frequencies: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub similarity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision: Option<Decision>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratedPhrase {
    pub text: String,
    pub derivation: Derivation,
    pub scores: Scores,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationStats {
    /// Distinct phrases before truncation.
    pub generated: usize,
    /// Filler pairs rejected by the compatibility filter.
    pub filtered: usize,
    /// Phrases dropped by the limit.
    pub truncated: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Generation {
    pub phrases: Vec<GeneratedPhrase>,
    pub stats: GenerationStats,
}

/// Re-realize a derivation; the result's text equals the phrase text.
pub fn realize_derivation(bundle: &Bundle, d: &Derivation) -> Result<Realization, GenerationError> {
    let (frame, _) = lookup_frame(bundle, d.language, &d.lemma)?;
    let pattern = frame
        .pattern(&d.pattern_id)
        .ok_or_else(|| GenerationError::UnknownPattern(d.pattern_id.clone()))?;
    Ok(realize_np(
        frame,
        pattern,
        &d.binding(),
        &bundle.lexicon,
        RealizeOptions::default(),
    )?)
}

/// Dispatch on the pattern's arity.
pub fn generate(
    bundle: &Bundle,
    req: &GenerationRequest,
    exec: Execution,
) -> Result<Generation, GenerationError> {
    let (frame, ev) = lookup_frame(bundle, req.language, &req.lemma)?;
    match lookup_pattern(frame, ev, &req.pattern_id)?.arity {
        Arity::Mono => generate_mono(bundle, req, exec),
        Arity::Bi => generate_bi(bundle, req, exec),
    }
}

struct Context<'b> {
    bundle: &'b Bundle,
    frame: &'b ValencyFrame,
    ev: &'b FrameEvidence,
    pattern: &'b RealizationPattern,
    vectors: Option<&'b VectorStore>,
}

/// Selected members of one slot: (lexeme, package id, frequency), deduplicated
/// in package order.
type Members = Vec<(LexemeId, String, u64)>;

fn prepare<'b>(
    bundle: &'b Bundle,
    req: &GenerationRequest,
    arity: Arity,
) -> Result<(Context<'b>, Vec<(ArgRef, Members)>), GenerationError> {
    check_threshold(req.compat_threshold)
        .map_err(|e| GenerationError::InvalidRequest(e.to_string()))?;
    let (frame, ev) = lookup_frame(bundle, req.language, &req.lemma)?;
    let pattern = lookup_pattern(frame, ev, &req.pattern_id)?;
    let args = pattern.bound_args();
    if pattern.arity != arity || req.packages.len() != args.len() {
        return Err(GenerationError::ArityMismatch {
            expected: args.len(),
            got: req.packages.len(),
        });
    }
    let mut selected: BTreeMap<ArgRef, Members> = BTreeMap::new();
    for (name, ids) in &req.packages {
        let arg = pattern
            .resolve_slot_name(name)
            .ok_or_else(|| GenerationError::UnknownSlot(name.clone()))?;
        if ids.is_empty() {
            return Err(GenerationError::EmptyPackageSelection(name.clone()));
        }
        let offered =
            list_semantic_packages(bundle, req.language, &req.lemma, &req.pattern_id, name)?;
        let slot = &ev.slots[&arg];
        let mut seen = HashSet::new();
        let mut members = Vec::new();
        for id in ids {
            let p = offered.iter().find(|p| &p.id == id).ok_or_else(|| {
                GenerationError::UnknownPackage {
                    slot: name.clone(),
                    package: id.clone(),
                }
            })?;
            for m in &p.members {
                if seen.insert(m.clone()) {
                    members.push((m.clone(), p.id.clone(), slot.frequency(m)));
                }
            }
        }
        if selected.insert(arg, members).is_some() {
            return Err(GenerationError::InvalidRequest(format!(
                "slot {arg} selected twice"
            )));
        }
    }
    let ordered = args
        .iter()
        .map(|a| (*a, selected.remove(a).expect("every bound slot selected")))
        .collect();
    let vectors = bundle
        .language(req.language)
        .and_then(|l| l.vectors.as_ref());
    Ok((
        Context {
            bundle,
            frame,
            ev,
            pattern,
            vectors,
        },
        ordered,
    ))
}

impl Context<'_> {
    /// Numbers a filler of `arg` is realized in.
    fn numbers(&self, arg: ArgRef) -> Vec<Option<Number>> {
        let slot = self
            .pattern
            .slots
            .iter()
            .find(|s| s.binds == Some(arg))
            .expect("bound");
        if slot.kind == SlotKind::Adjective {
            return vec![None];
        }
        if let Some(n) = slot.marks.number {
            return vec![Some(n)];
        }
        match self.ev.slots[&arg].config.number {
            NumberPolicy::Sg => vec![Some(Number::Sg)],
            NumberPolicy::Both => vec![Some(Number::Sg), Some(Number::Pl)],
        }
    }

    fn adjectives(
        &self,
        bindings: &[SlotBinding],
        req: &GenerationRequest,
    ) -> BTreeMap<usize, LexemeId> {
        let mut out = BTreeMap::new();
        if !req.include_adjectives {
            return out;
        }
        for (pos, owner) in free_adjective_slots(self.pattern, self.frame.language()) {
            let (pool, anchor) = match owner {
                None => (&self.ev.adjectives, self.frame.inflection_ref.as_str()),
                Some(arg) => match bindings.iter().find(|b| b.slot == arg) {
                    Some(b) => (&self.ev.slots[&arg].config.adjectives, b.lexeme.as_str()),
                    None => continue,
                },
            };
            let fitting: Vec<&LexemeId> = pool
                .iter()
                .filter(|a| match self.vectors.map(|v| v.cosine(a, anchor)) {
                    Some(Ok(s)) => s >= req.compat_threshold,
                    _ => true,
                })
                .collect();
            if fitting.is_empty() {
                continue;
            }
            let key = format!("{}|{}|{}", self.pattern.id, pos, anchor);
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed ^ fnv1a(key.as_bytes()));
            out.insert(pos, fitting[rng.random_range(0..fitting.len())].clone());
        }
        out
    }

    fn phrase(
        &self,
        req: &GenerationRequest,
        bindings: Vec<SlotBinding>,
        similarity: Option<f64>,
        decision: Option<Decision>,
    ) -> Result<GeneratedPhrase, MorphError> {
        let adjectives = self.adjectives(&bindings, req);
        let mut binding = Binding {
            adjectives: adjectives.clone(),
            ..Binding::default()
        };
        for s in &bindings {
            binding = binding.with_arg(s.slot, &s.lexeme, s.number);
        }
        let real = realize_np(
            self.frame,
            self.pattern,
            &binding,
            &self.bundle.lexicon,
            RealizeOptions::default(),
        )?;
        let frequencies = bindings
            .iter()
            .map(|b| {
                (
                    b.slot.to_string(),
                    self.ev.slots[&b.slot].frequency(&b.lexeme),
                )
            })
            .collect();
        Ok(GeneratedPhrase {
            text: real.text,
            derivation: Derivation {
                language: self.frame.language(),
                lemma: self.frame.lemma.clone(),
                pattern_id: self.pattern.id.clone(),
                bindings,
                adjectives,
                trace: real.groups,
            },
            scores: Scores {
                frequencies,
                similarity,
                decision,
            },
        })
    }
}

/// 64-bit FNV-1a, used to derive per-slot seeds.
fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(*b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Drop repeated texts, keeping the first, then cut to `limit`.
fn finish(ranked: Vec<GeneratedPhrase>, limit: usize, filtered: usize) -> Generation {
    let mut seen = HashSet::new();
    let mut phrases: Vec<GeneratedPhrase> = ranked
        .into_iter()
        .filter(|p| seen.insert(p.text.clone()))
        .collect();
    let generated = phrases.len();
    phrases.truncate(limit);
    Generation {
        stats: GenerationStats {
            generated,
            filtered,
            truncated: generated - phrases.len(),
        },
        phrases,
    }
}

pub fn generate_mono(
    bundle: &Bundle,
    req: &GenerationRequest,
    exec: Execution,
) -> Result<Generation, GenerationError> {
    let (ctx, selected) = prepare(bundle, req, Arity::Mono)?;
    let (arg, members) = &selected[0];
    let mut variants: Vec<(&LexemeId, &String, u64, Option<Number>)> = Vec::new();
    for (lexeme, package, freq) in members {
        for n in ctx.numbers(*arg) {
            variants.push((lexeme, package, *freq, n));
        }
    }
    variants.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(b.0)).then(a.3.cmp(&b.3)));
    let realized = exec.map(&variants, |(lexeme, package, _, number)| {
        let binding = SlotBinding {
            slot: *arg,
            lexeme: (*lexeme).clone(),
            number: *number,
            package: (*package).clone(),
        };
        ctx.phrase(req, vec![binding], None, None)
    });
    let phrases = realized.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(finish(phrases, req.limit, 0))
}

pub fn generate_bi(
    bundle: &Bundle,
    req: &GenerationRequest,
    exec: Execution,
) -> Result<Generation, GenerationError> {
    let (ctx, selected) = prepare(bundle, req, Arity::Bi)?;
    let ((arg_a, members_a), (arg_b, members_b)) = (&selected[0], &selected[1]);
    let pairs: Vec<(String, String)> = members_a
        .iter()
        .flat_map(|a| members_b.iter().map(move |b| (a.0.clone(), b.0.clone())))
        .collect();
    let verdicts = match ctx.vectors {
        Some(store) => compatibility_filter(&pairs, req.compat_threshold, store, exec)
            .map_err(|e| GenerationError::InvalidRequest(e.to_string()))?,
        None => pairs
            .iter()
            .map(|p| crate::embeddings::CompatibilityVerdict {
                pair: p.clone(),
                similarity: None,
                decision: Decision::UnscoredAccept,
            })
            .collect(),
    };
    let filtered = verdicts.iter().filter(|v| !v.decision.passes()).count();

    let mut jobs = Vec::new();
    for (i, v) in verdicts
        .iter()
        .enumerate()
        .filter(|(_, v)| v.decision.passes())
    {
        let (a, b) = (
            &members_a[i / members_b.len()],
            &members_b[i % members_b.len()],
        );
        for na in ctx.numbers(*arg_a) {
            for nb in ctx.numbers(*arg_b) {
                let bindings = vec![
                    SlotBinding {
                        slot: *arg_a,
                        lexeme: a.0.clone(),
                        number: na,
                        package: a.1.clone(),
                    },
                    SlotBinding {
                        slot: *arg_b,
                        lexeme: b.0.clone(),
                        number: nb,
                        package: b.1.clone(),
                    },
                ];
                jobs.push((bindings, a.2.min(b.2), v));
            }
        }
    }
    let realized = exec.map(&jobs, |(bindings, min_freq, v)| {
        ctx.phrase(req, bindings.clone(), v.similarity, Some(v.decision))
            .map(|p| (*min_freq, p))
    });
    let mut ranked = realized.into_iter().collect::<Result<Vec<_>, _>>()?;
    ranked.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.text.cmp(&y.1.text)));
    Ok(finish(
        ranked.into_iter().map(|(_, p)| p).collect(),
        req.limit,
        filtered,
    ))
}
