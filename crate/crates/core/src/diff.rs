//! Differential analysis: derivatives f̂_a, difference distribution tables,
//! differential uniformity δ(f), weak differential uniformity, derivative
//! images and their coset structure, and differential spectra of power
//! functions.

use crate::field::FieldSpec;
use crate::linalg::is_coset;
use crate::vbf::VBF;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from differential-analysis entry points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiffError {
    #[error("weak uniformity threshold must be positive")]
    ZeroDelta,
    #[error("power function x^{d} violates image uniformity at a={a}: {detail}")]
    ImageProfileViolation { d: u64, a: u16, detail: String },
}

/// The derivative f̂_a : x ↦ f(x⊕a) ⊕ f(x). a = 0 gives the zero function.
pub fn derivative(f: &VBF, a: u16) -> VBF {
    let table: Vec<u16> = (0..f.len() as u16).map(|x| f.get(x ^ a) ^ f.get(x)).collect();
    VBF::new(f.m(), table).expect("derivative entries stay in range")
}

/// Difference distribution table: counts[a][b] = #{x : f(x⊕a) ⊕ f(x) = b}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DDT {
    m: u32,
    counts: Vec<u32>,
}

impl DDT {
    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Row for input difference a.
    pub fn row(&self, a: u16) -> &[u32] {
        let n = 1usize << self.m;
        &self.counts[a as usize * n..(a as usize + 1) * n]
    }

    /// δ_f(a,b).
    pub fn get(&self, a: u16, b: u16) -> u32 {
        self.counts[(a as usize) * (1usize << self.m) + b as usize]
    }
}

/// Computes the full DDT.
pub fn ddt(f: &VBF) -> DDT {
    let n = f.len();
    let mut counts = vec![0u32; n * n];
    for a in 0..n as u16 {
        let base = a as usize * n;
        for x in 0..n as u16 {
            let b = f.get(x ^ a) ^ f.get(x);
            counts[base + b as usize] += 1;
        }
    }
    DDT { m: f.m(), counts }
}

/// δ(f): the maximum DDT entry over a ≠ 0. f is APN iff this is 2.
pub fn differential_uniformity(f: &VBF) -> u32 {
    let n = f.len();
    let mut best = 0;
    let mut row = vec![0u32; n];
    for a in 1..n as u16 {
        row.fill(0);
        for x in 0..n as u16 {
            row[(f.get(x ^ a) ^ f.get(x)) as usize] += 1;
        }
        best = best.max(*row.iter().max().unwrap());
    }
    best
}

/// True iff δ(f) = 2, the smallest possible value for m ≥ 1.
pub fn is_apn(f: &VBF) -> bool {
    differential_uniformity(f) == 2
}

/// The set of values of f̂_a, sorted ascending.
pub fn derivative_image(f: &VBF, a: u16) -> Vec<u16> {
    let n = f.len();
    let mut seen = vec![false; n];
    for x in 0..n as u16 {
        seen[(f.get(x ^ a) ^ f.get(x)) as usize] = true;
    }
    (0..n as u16).filter(|&b| seen[b as usize]).collect()
}

/// Per-difference entry of a [`DiffReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerADiff {
    pub a: u16,
    pub image_size: usize,
    pub is_coset: bool,
}

/// Differential summary of one function: uniformity, the minimum derivative
/// image size, the derived weak-uniformity thresholds, and the per-a image
/// profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    /// δ(f), the maximum DDT entry over a ≠ 0.
    pub delta: u32,
    /// min over a ≠ 0 of |Im(f̂_a)|.
    pub min_image: usize,
    /// Smallest integer δ with min_image · δ > 2^(m−1).
    pub weak_delta: u32,
    /// Smallest power of two satisfying the same inequality.
    pub weak_delta_pow2: u32,
    /// True iff min_image > 2^(m−2), i.e. weak_delta ≤ 2.
    pub weakly_apn: bool,
    /// One entry per a ≠ 0, ascending in a.
    pub per_a: Vec<PerADiff>,
}

/// Full weak-uniformity report. The thresholds are computed in exact
/// integer arithmetic: weak_delta = ⌊2^(m−1)/min_image⌋ + 1.
pub fn weak_uniformity(f: &VBF) -> DiffReport {
    let m = f.m();
    let n = f.len();
    let half = 1usize << (m - 1);
    let mut per_a = Vec::with_capacity(n - 1);
    let mut min_image = n;
    for a in 1..n as u16 {
        let image = derivative_image(f, a);
        min_image = min_image.min(image.len());
        per_a.push(PerADiff {
            a,
            image_size: image.len(),
            is_coset: is_coset(m, &image).expect("image is nonempty"),
        });
    }
    let weak_delta = (half / min_image + 1) as u32;
    DiffReport {
        delta: differential_uniformity(f),
        min_image,
        weak_delta,
        weak_delta_pow2: weak_delta.next_power_of_two(),
        weakly_apn: 4 * min_image > n,
        per_a,
    }
}

/// True iff every derivative image satisfies |Im(f̂_a)| · delta > 2^(m−1)
/// (strict, integers). Errors on delta = 0.
pub fn is_weakly_delta(f: &VBF, delta: u32) -> Result<bool, DiffError> {
    if delta == 0 {
        return Err(DiffError::ZeroDelta);
    }
    let half = 1u64 << (f.m() - 1);
    let n = f.len();
    for a in 1..n as u16 {
        if derivative_image(f, a).len() as u64 * delta as u64 <= half {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplicity distribution of one DDT row: ω_i = #{b : δ_f(a,b) = i},
/// including i = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    omega: BTreeMap<u32, u32>,
}

impl Spectrum {
    /// The ω map, multiplicity → count.
    pub fn omega(&self) -> &BTreeMap<u32, u32> {
        &self.omega
    }

    /// ω_i, zero when absent.
    pub fn get(&self, i: u32) -> u32 {
        self.omega.get(&i).copied().unwrap_or(0)
    }

    /// Number of values hit at least once: Σ_{i>0} ω_i.
    pub fn image_size(&self) -> usize {
        self.omega.iter().filter(|(&i, _)| i > 0).map(|(_, &c)| c as usize).sum()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // JSON object keys must be strings; keep numeric order
        let mut map = serializer.serialize_map(Some(self.omega.len()))?;
        for (i, c) in &self.omega {
            map.serialize_entry(&i.to_string(), c)?;
        }
        map.end()
    }
}

/// Spectrum of one DDT row of an arbitrary function.
pub fn row_spectrum(f: &VBF, a: u16) -> Spectrum {
    let n = f.len();
    let mut counts = vec![0u32; n];
    for x in 0..n as u16 {
        counts[(f.get(x ^ a) ^ f.get(x)) as usize] += 1;
    }
    let mut omega = BTreeMap::new();
    for c in counts {
        *omega.entry(c).or_insert(0) += 1;
    }
    Spectrum { omega }
}

/// Differential spectrum of the power function x^d, computed from the a=1
/// row only: for power functions every row is a permutation of every other,
/// so this determines the whole DDT shape and |Im(f̂_a)| = 2ᵐ − ω₀ for all
/// a ≠ 0.
pub fn differential_spectrum(d: u64, spec: &FieldSpec) -> Spectrum {
    row_spectrum(&VBF::power_function(d, spec), 1)
}

/// Image profile of a power function, constant over a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerImageProfile {
    pub d: u64,
    pub image_size: usize,
    pub is_coset: bool,
}

/// Checks and returns the per-a image profile of x^d: |Im(f̂_a)| equal for
/// every a ≠ 0 and the coset flag constant in a. A violation is an error
/// carrying the witness a — never silent.
pub fn power_image_uniformity(d: u64, spec: &FieldSpec) -> Result<PowerImageProfile, DiffError> {
    let f = VBF::power_function(d, spec);
    let m = f.m();
    let first = derivative_image(&f, 1);
    let image_size = first.len();
    let coset = is_coset(m, &first).expect("image is nonempty");
    for a in 2..f.len() as u16 {
        let image = derivative_image(&f, a);
        if image.len() != image_size {
            return Err(DiffError::ImageProfileViolation {
                d,
                a,
                detail: format!("image size {} differs from {} at a=1", image.len(), image_size),
            });
        }
        let c = is_coset(m, &image).expect("image is nonempty");
        if c != coset {
            return Err(DiffError::ImageProfileViolation {
                d,
                a,
                detail: format!("coset flag {} differs from {} at a=1", c, coset),
            });
        }
    }
    Ok(PowerImageProfile { d, image_size, is_coset: coset })
}
