//! Brute-force enumeration written from the generation contract.

use std::collections::HashSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use valgen_core::bundle::{Bundle, NumberPolicy, SlotEvidence};
use valgen_core::features::Number;
use valgen_core::generation::{list_semantic_packages, list_structures, GenerationRequest};
use valgen_core::lexicon::{ArgRef, RealizationPattern, SlotKind, ValencyFrame};
use valgen_core::morphology::{realize_np, Binding, RealizeOptions};
use valgen_core::Language;

fn count(slot: &SlotEvidence, lexeme: &str) -> u64 {
    let required = slot
        .annotations
        .iter()
        .any(|a| a.filler == lexeme && a.requires(slot.arg));
    let row = slot.table.entries.iter().find(|e| e.lexeme == lexeme);
    match row {
        Some(e) if required => e.count,
        _ => 0,
    }
}

fn numbers(pattern: &RealizationPattern, slot: &SlotEvidence) -> Vec<Option<Number>> {
    let ps = pattern
        .slots
        .iter()
        .find(|s| s.binds == Some(slot.arg))
        .unwrap();
    match (ps.kind, ps.marks.number, slot.config.number) {
        (SlotKind::Adjective, _, _) => vec![None],
        (_, Some(n), _) => vec![Some(n)],
        (_, None, NumberPolicy::Sg) => vec![Some(Number::Sg)],
        (_, None, NumberPolicy::Both) => vec![Some(Number::Sg), Some(Number::Pl)],
    }
}

fn cosine(b: &Bundle, lang: Language, x: &str, y: &str) -> Option<f64> {
    let store = b.language(lang)?.vectors.as_ref()?;
    let (u, v) = (store.vector(x)?, store.vector(y)?);
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let nu = u.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nv = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    Some(dot / (nu * nv))
}

fn realize(
    b: &Bundle,
    frame: &ValencyFrame,
    p: &RealizationPattern,
    fillers: &[(ArgRef, &str, Option<Number>)],
) -> String {
    let mut binding = Binding::default();
    for (a, l, n) in fillers {
        binding = binding.with_arg(*a, l, *n);
    }
    realize_np(frame, p, &binding, &b.lexicon, RealizeOptions::default())
        .unwrap()
        .text
}

fn dedupe_truncate(texts: Vec<String>, limit: usize) -> Vec<String> {
    let mut seen = HashSet::new();
    let mut out: Vec<String> = texts
        .into_iter()
        .filter(|t| seen.insert(t.clone()))
        .collect();
    out.truncate(limit);
    out
}

/// Brute-force expected output of `req`: enumerate members and numbers, realize,
/// drop pairs below the threshold, sort, deduplicate and truncate.
pub fn oracle(b: &Bundle, req: &GenerationRequest) -> Vec<String> {
    let (frame, ev) = b.frame(req.language, &req.lemma).unwrap();
    let pattern = frame.pattern(&req.pattern_id).unwrap();
    let mut slots = Vec::new();
    for arg in pattern.bound_args() {
        let name = if slots.is_empty() { "a" } else { "b" };
        let offered =
            list_semantic_packages(b, req.language, &req.lemma, &req.pattern_id, name).unwrap();
        let mut members: Vec<String> = Vec::new();
        for id in &req.packages[name] {
            for m in &offered.iter().find(|p| &p.id == id).unwrap().members {
                if !members.contains(m) {
                    members.push(m.clone());
                }
            }
        }
        slots.push((arg, &ev.slots[&arg], members));
    }
    if slots.len() == 1 {
        let (arg, slot, members) = &slots[0];
        let mut v: Vec<(u64, &str, Option<Number>)> = Vec::new();
        for m in members {
            for n in numbers(pattern, slot) {
                v.push((count(slot, m), m, n));
            }
        }
        v.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(y.1)).then(x.2.cmp(&y.2)));
        let texts = v
            .iter()
            .map(|(_, m, n)| realize(b, frame, pattern, &[(*arg, m, *n)]))
            .collect();
        return dedupe_truncate(texts, req.limit);
    }
    let ((aa, sa, ma), (ab, sb, mb)) = (&slots[0], &slots[1]);
    let mut scored: Vec<(u64, String)> = Vec::new();
    for x in ma {
        for y in mb {
            if cosine(b, req.language, x, y).is_some_and(|c| c < req.compat_threshold) {
                continue;
            }
            for nx in numbers(pattern, sa) {
                for ny in numbers(pattern, sb) {
                    let t = realize(b, frame, pattern, &[(*aa, x, nx), (*ab, y, ny)]);
                    scored.push((count(sa, x).min(count(sb, y)), t));
                }
            }
        }
    }
    scored.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    dedupe_truncate(scored.into_iter().map(|(_, t)| t).collect(), req.limit)
}

/// A small request: up to three packages of at most ten members per slot.
pub fn random_request(b: &Bundle, rng: &mut ChaCha8Rng) -> GenerationRequest {
    loop {
        let lang = *Language::ALL.choose(rng).unwrap();
        let frames: Vec<&ValencyFrame> = b.lexicon.frames_of(lang).collect();
        let frame = frames.choose(rng).unwrap();
        let structures = list_structures(b, lang, &frame.lemma).unwrap();
        let Some(s) = structures.choose(rng) else {
            continue;
        };
        let mut req = GenerationRequest::new(lang, &frame.lemma, &s.pattern_id);
        req.limit = rng.random_range(0..80);
        req.compat_threshold = rng.random_range(-0.2..0.7);
        req.seed = rng.random();
        let mut small = Vec::new();
        for name in ["a", "b"].iter().take(s.arity.count()) {
            let mut offered =
                list_semantic_packages(b, lang, &frame.lemma, &s.pattern_id, name).unwrap();
            offered.retain(|p| p.members.len() <= 10);
            offered.shuffle(rng);
            small.push((*name, offered));
        }
        if small.iter().any(|(_, o)| o.is_empty()) {
            continue;
        }
        for (name, offered) in small {
            let k = rng.random_range(1..=offered.len().min(3));
            for p in &offered[..k] {
                req = req.package(name, &p.id);
            }
        }
        return req;
    }
}
