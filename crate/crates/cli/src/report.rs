//! Output envelopes and rendering: one JSON schema per subcommand, plus the
//! fixed-width human tables. JSON is pretty-printed with sorted maps
//! underneath, so identical inputs produce byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;
use vbf_core::diff::{DiffReport, Spectrum};
use vbf_core::linear::ComponentProfile;
use vbf_core::theorems::{TheoremResult, Verdict};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Echo of what was analyzed: representation, dimension, and the field
/// modulus when one was involved.
#[derive(Serialize)]
pub struct InputEcho {
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

/// Everything `analyze` reports for one function.
#[derive(Serialize)]
pub struct ReportEnvelope {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: InputEcho,
    pub diff: DiffReport,
    pub components: ComponentProfile,
    /// True iff hull(Im f̂_a) = f̂_a(0) + V_a^⊥ verified for every a ≠ 0.
    pub affine_cover_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremResult>>,
}

#[derive(Serialize)]
pub struct CheckEnvelope {
    pub schema: &'static str,
    pub results: Vec<TheoremResult>,
}

/// The scalar part of a differential report (per-a rows omitted).
#[derive(Serialize)]
pub struct WeakSummary {
    pub delta: u32,
    pub min_image: usize,
    pub weak_delta: u32,
    pub weak_delta_pow2: u32,
    pub weakly_apn: bool,
}

impl WeakSummary {
    pub fn of(r: &DiffReport) -> Self {
        WeakSummary {
            delta: r.delta,
            min_image: r.min_image,
            weak_delta: r.weak_delta,
            weak_delta_pow2: r.weak_delta_pow2,
            weakly_apn: r.weakly_apn,
        }
    }
}

#[derive(Serialize)]
pub struct SpectrumEnvelope {
    pub schema: &'static str,
    pub version: &'static str,
    pub exponent: u64,
    pub m: u32,
    pub modulus: String,
    pub spectrum: Spectrum,
    pub image_size: usize,
    pub weak: WeakSummary,
}

#[derive(Serialize)]
pub struct FoundSbox {
    pub lut: String,
    pub delta: u32,
    pub min_image: usize,
    pub weak_delta: u32,
    pub weakly_apn: bool,
    pub n_hat: u32,
}

#[derive(Serialize)]
pub struct SearchEnvelope {
    pub schema: &'static str,
    pub version: &'static str,
    pub m: u32,
    pub predicate: String,
    pub seed: u64,
    pub count_requested: usize,
    pub attempts: usize,
    pub budget: usize,
    pub found: Vec<FoundSbox>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn human_analyze(env: &ReportEnvelope) -> String {
    let mut s = String::new();
    let mut input = env.input.format.clone();
    if let Some(name) = &env.input.name {
        write!(input, " {name}").unwrap();
    }
    write!(input, ", m={}", env.input.m).unwrap();
    if let Some(modulus) = &env.input.modulus {
        write!(input, ", mod={modulus}").unwrap();
    }
    let n = 1usize << env.input.m;
    writeln!(s, "{:<18} {}", "input", input).unwrap();
    writeln!(s, "{:<18} {}", "delta", env.diff.delta).unwrap();
    writeln!(s, "{:<18} {}", "min image", env.diff.min_image).unwrap();
    writeln!(
        s,
        "{:<18} {} (power-of-two bound {})",
        "weak delta", env.diff.weak_delta, env.diff.weak_delta_pow2
    )
    .unwrap();
    writeln!(s, "{:<18} {}", "weakly APN", yes_no(env.diff.weakly_apn)).unwrap();
    writeln!(s, "{:<18} {} (t={})", "n_hat", env.components.n_hat, env.components.t).unwrap();
    let hist = env
        .components
        .n_hist
        .iter()
        .map(|(i, c)| format!("n{i}={c}"))
        .collect::<Vec<_>>()
        .join("  ");
    writeln!(s, "{:<18} {}", "degree histogram", hist).unwrap();
    writeln!(
        s,
        "{:<18} {} of {} components",
        "partially bent", env.components.pb_count, n - 1
    )
    .unwrap();
    writeln!(
        s,
        "{:<18} {} of {} components ({} of degree exactly 2)",
        "degree <= 2",
        env.components.quad_count,
        n - 1,
        env.components.quad_count_deg2_only
    )
    .unwrap();
    writeln!(
        s,
        "{:<18} {}",
        "affine cover",
        if env.affine_cover_ok { "verified for all a" } else { "MISMATCH" }
    )
    .unwrap();
    writeln!(s, "{:>4} {:>6} {:>6}", "a", "|Im|", "coset").unwrap();
    for p in &env.diff.per_a {
        writeln!(s, "{:>4} {:>6} {:>6}", p.a, p.image_size, yes_no(p.is_coset)).unwrap();
    }
    s
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Skipped => "skipped",
    }
}

pub fn human_check(results: &[TheoremResult]) -> String {
    let mut s = String::new();
    for r in results {
        writeln!(s, "{:<20} {:<8} {}", r.theorem_id, verdict_word(r.verdict), r.scope).unwrap();
        for w in &r.witnesses {
            writeln!(s, "{:<20} {:<8}   witness: {w}", "", "").unwrap();
        }
    }
    let pass = results.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let skip = results.iter().filter(|r| r.verdict == Verdict::Skipped).count();
    let fail = results.len() - pass - skip;
    writeln!(s, "{pass} pass, {skip} skipped, {fail} fail").unwrap();
    s
}

pub fn human_spectrum(env: &SpectrumEnvelope) -> String {
    let mut s = String::new();
    writeln!(s, "x^{} over F2^{}, modulus {}", env.exponent, env.m, env.modulus).unwrap();
    writeln!(s, "{:>12} {:>8}", "multiplicity", "count").unwrap();
    for (i, c) in env.spectrum.omega() {
        writeln!(s, "{:>12} {:>8}", i, c).unwrap();
    }
    writeln!(s, "{:<18} {}", "image size", env.image_size).unwrap();
    writeln!(s, "{:<18} {}", "delta", env.weak.delta).unwrap();
    writeln!(s, "{:<18} {}", "min image", env.weak.min_image).unwrap();
    writeln!(
        s,
        "{:<18} {} (power-of-two bound {})",
        "weak delta", env.weak.weak_delta, env.weak.weak_delta_pow2
    )
    .unwrap();
    writeln!(s, "{:<18} {}", "weakly APN", yes_no(env.weak.weakly_apn)).unwrap();
    s
}

pub fn human_search(env: &SearchEnvelope) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "found {} of {} requested (m={}, predicate={}, seed={}, attempts={}, budget={})",
        env.found.len(),
        env.count_requested,
        env.m,
        env.predicate,
        env.seed,
        env.attempts,
        env.budget
    )
    .unwrap();
    for f in &env.found {
        writeln!(
            s,
            "{:<20} delta={:<3} min_image={:<3} weak_delta={:<2} weakly_apn={:<3} n_hat={}",
            f.lut,
            f.delta,
            f.min_image,
            f.weak_delta,
            yes_no(f.weakly_apn),
            f.n_hat
        )
        .unwrap();
    }
    s
}
