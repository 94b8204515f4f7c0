//! Seeded random generation of functions, permutations, affine/EA
//! transformations, and quadratic functions, plus exhaustive permutation
//! enumeration at small m. Every generator is deterministic for a given
//! seed so that reported witnesses and published numbers are reproducible.

use crate::vbf::{AffineMap, EATriple, VBF};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The suite's generator, fixed so seeds mean the same stream everywhere.
pub type SampleRng = ChaCha8Rng;

/// A fresh deterministic generator for a seed.
pub fn rng_from_seed(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

/// Uniform random function table.
pub fn random_vbf(m: u32, rng: &mut SampleRng) -> VBF {
    let n = 1usize << m;
    let table: Vec<u16> = (0..n).map(|_| rng.random_range(0..n as u16)).collect();
    VBF::new(m, table).expect("entries drawn in range")
}

/// Uniform random permutation (Fisher–Yates shuffle of the table).
pub fn random_permutation(m: u32, rng: &mut SampleRng) -> VBF {
    let mut table: Vec<u16> = (0..1u16 << m).collect();
    table.shuffle(rng);
    VBF::new(m, table).expect("a shuffle stays in range")
}

/// Uniform random invertible affine map, by rejection on the rank of the
/// linear part.
pub fn random_invertible_map(m: u32, rng: &mut SampleRng) -> AffineMap {
    let n = 1u16 << m;
    loop {
        let cols: Vec<u16> = (0..m).map(|_| rng.random_range(0..n)).collect();
        let map = AffineMap::new(m, cols, rng.random_range(0..n)).expect("columns are m-bit");
        if map.is_invertible() {
            return map;
        }
    }
}

/// Random affine map, not necessarily invertible.
pub fn random_affine_map(m: u32, rng: &mut SampleRng) -> AffineMap {
    let n = 1u16 << m;
    let cols: Vec<u16> = (0..m).map(|_| rng.random_range(0..n)).collect();
    AffineMap::new(m, cols, rng.random_range(0..n)).expect("columns are m-bit")
}

/// Random extended-affine transformation: invertible outer and inner maps
/// plus an arbitrary affine additive part.
pub fn random_ea_triple(m: u32, rng: &mut SampleRng) -> EATriple {
    EATriple::new(
        random_invertible_map(m, rng),
        random_invertible_map(m, rng),
        random_affine_map(m, rng),
    )
    .expect("outer and inner are invertible by construction")
}

/// Random function of algebraic degree ≤ 2: every coordinate gets an ANF
/// supported on monomials of weight ≤ 2.
pub fn random_quadratic(m: u32, rng: &mut SampleRng) -> VBF {
    let n = 1usize << m;
    let quad_indices: Vec<u16> = (0..n as u16).filter(|u| u.count_ones() <= 2).collect();
    let mut table = vec![0u16; n];
    for i in 0..m {
        let picked: Vec<u16> = quad_indices.iter().copied().filter(|_| rng.random()).collect();
        let mut coeffs = vec![false; n];
        for u in picked {
            coeffs[u as usize] = true;
        }
        let coord = crate::vbf::anf_inverse(
            &crate::vbf::ANFRep::new(m, coeffs).expect("length is 2^m"),
        );
        for x in 0..n {
            table[x] |= u16::from(coord.get(x as u16)) << i;
        }
    }
    VBF::new(m, table).expect("entries are m-bit")
}

/// Random permutation of degree ≤ 2. Built as A ∘ T ∘ B with A, B random
/// invertible affine maps and T triangular: coordinate i is
/// xᵢ ⊕ qᵢ(x₁,…,xᵢ₋₁) with qᵢ quadratic in the lower coordinates — T is
/// invertible by back-substitution and affine conjugation keeps both the
/// degree bound and bijectivity.
pub fn random_quadratic_permutation(m: u32, rng: &mut SampleRng) -> VBF {
    let n = 1usize << m;
    let mut table = vec![0u16; n];
    for i in 0..m {
        let lower_mask = (1u16 << i) - 1;
        let indices: Vec<u16> = (0..n as u16)
            .filter(|&u| u & !lower_mask == 0 && u.count_ones() <= 2)
            .collect();
        let picked: Vec<u16> = indices.iter().copied().filter(|_| rng.random()).collect();
        let mut coeffs = vec![false; n];
        for u in picked {
            coeffs[u as usize] = true;
        }
        let q = crate::vbf::anf_inverse(
            &crate::vbf::ANFRep::new(m, coeffs).expect("length is 2^m"),
        );
        for x in 0..n {
            let bit = ((x >> i) & 1) as u16 ^ u16::from(q.get(x as u16));
            table[x] |= bit << i;
        }
    }
    let t = VBF::new(m, table).expect("entries are m-bit");
    let out = t
        .apply_affine(&random_invertible_map(m, rng), &random_invertible_map(m, rng))
        .expect("dimensions match");
    debug_assert!(out.is_permutation());
    debug_assert!(out.algebraic_degree() <= 2);
    out
}

/// Rejection-sampling outcome statistics, kept so filtered sample sizes
/// stay meaningful in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleStats {
    /// Candidates drawn.
    pub attempts: usize,
    /// Candidates that satisfied the predicate.
    pub accepted: usize,
}

impl SampleStats {
    /// Acceptance rate in percent, rounded.
    pub fn rate_percent(&self) -> u32 {
        if self.attempts == 0 {
            return 0;
        }
        (self.accepted * 100 / self.attempts) as u32
    }
}

/// Draws `count` permutations satisfying `pred` by rejection from the
/// uniform distribution, giving up after `max_attempts` draws so an
/// unsatisfiable predicate terminates with however many were found.
pub fn sample_filtered_permutations(
    m: u32,
    count: usize,
    max_attempts: usize,
    pred: impl Fn(&VBF) -> bool,
    rng: &mut SampleRng,
) -> (Vec<VBF>, SampleStats) {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < max_attempts {
        attempts += 1;
        let f = random_permutation(m, rng);
        if pred(&f) {
            out.push(f);
        }
    }
    let accepted = out.len();
    (out, SampleStats { attempts, accepted })
}

/// Visits every permutation of F₂ᵐ exactly once (Heap's algorithm on the
/// table). Only sensible for m ≤ 3 — 2ᵐ! grows immediately out of reach.
pub fn for_each_permutation(m: u32, mut visit: impl FnMut(&VBF)) {
    let n = 1usize << m;
    let mut table: Vec<u16> = (0..n as u16).collect();
    let mut c = vec![0usize; n];
    visit(&VBF::new(m, table.clone()).expect("valid table"));
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                table.swap(0, i);
            } else {
                table.swap(c[i], i);
            }
            visit(&VBF::new(m, table.clone()).expect("valid table"));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
