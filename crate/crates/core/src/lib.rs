//! Analysis of vectorial Boolean functions F₂ᵐ → F₂ᵐ.
//!
//! The crate covers the differential side of S-box analysis — difference
//! distribution tables, differential uniformity, weak differential
//! uniformity, derivative images and their coset structure — together with
//! component-level metrics (algebraic degrees nᵢ, constant-derivative
//! counts n̂, Walsh spectra, partially bent detection), conversions between
//! lookup-table, ANF, and univariate-polynomial representations, a built-in
//! corpus of reference S-boxes, seeded random generators, and an executable
//! suite of structural checks over all of it.

pub mod corpus;
pub mod diff;
pub mod field;
pub mod format;
pub mod linalg;
pub mod linear;
pub mod sample;
pub mod theorems;
pub mod vbf;

pub use corpus::{corpus, corpus_lookup, corpus_names, CorpusEntry};
pub use diff::{
    ddt, derivative, derivative_image, differential_spectrum, differential_uniformity, is_apn,
    is_weakly_delta, power_image_uniformity, row_spectrum, weak_uniformity, DiffError, DiffReport,
    PerADiff, PowerImageProfile, Spectrum, DDT,
};
pub use field::{default_modulus, fe_inv, fe_mul, fe_pow, FieldElement, FieldError, FieldSpec};
pub use format::{
    emit_anf, emit_hex_lut, emit_univariate, parse_anf, parse_auto, parse_hex_lut,
    parse_univariate, FormatError, ParsedSbox,
};
pub use theorems::{
    check_fact4_and_bounds, check_invariance, check_kasami, check_kyu07, check_noncoset,
    check_noncoset_power, check_quadratic_equiv, check_spectrum_lemma, check_th_wapn,
    demo_ccz_noninvariance, known_ids, run_all, TheoremResult, TransformKind, Verdict,
};
pub use sample::{
    for_each_permutation, random_affine_map, random_ea_triple, random_invertible_map,
    random_permutation, random_quadratic, random_quadratic_permutation, random_vbf,
    rng_from_seed, sample_filtered_permutations, SampleRng, SampleStats,
};
pub use linear::{
    affine_cover_check, is_balanced, is_bent, is_partially_bent, linear_structures, n_hat,
    n_histogram, v_space, walsh, ComponentProfile, LinearError, WalshSpectrum,
};
pub use linalg::{affine_hull, is_coset, ortho_complement, span, AffineSubspace, LinalgError, SubspaceBasis};
pub use vbf::{
    anf, anf_inverse, degree, exponent_weight, reduce_exponent, ANFRep, AffineMap, BoolFn,
    EATriple, UniPoly, VbfError, VBF,
};
