#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use valgen_core::bundle::Bundle;
use valgen_core::prototyping::Thresholds;

pub const TEXT_GEN_PATTERN: &str = "det+arg5c+head+gen+N1a";

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn bundle() -> &'static Bundle {
    static B: OnceLock<Bundle> = OnceLock::new();
    B.get_or_init(|| Bundle::load(fixtures(), Thresholds::default()).expect("fixtures load"))
}
