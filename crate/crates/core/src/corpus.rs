//! Built-in fixture corpus: the weakly-APN/weakly-4-uniform inverse pair
//! given as univariate polynomials over F₁₆, three 4-bit S-boxes given by
//! their ANF component lists, and the standard power-function fixtures.
//! Fixtures are addressable by name for the CLI `--corpus` flag.

use crate::field::{fe_pow, FieldSpec};
use crate::format::parse_anf;
use crate::vbf::{UniPoly, VBF};

/// The field of the univariate fixtures: F₁₆ as F₂[x]/(x⁴+x+1), with the
/// primitive element e = x satisfying e⁴ = e + 1.
pub fn remark27_field() -> FieldSpec {
    let spec = FieldSpec::new(4, 0x13).expect("x^4+x+1 is irreducible");
    debug_assert_eq!(spec.generator(), 2);
    spec
}

/// Builds a polynomial whose coefficient of xⁱ is e^(exps[i]), with
/// missing degrees zero.
fn poly_from_exponents(spec: FieldSpec, pairs: &[(usize, u64)]) -> UniPoly {
    let mut coeffs = vec![0u16; pairs.iter().map(|&(i, _)| i).max().unwrap_or(0) + 1];
    for &(i, e) in pairs {
        coeffs[i] = fe_pow(spec.generator(), e, &spec);
    }
    UniPoly::new(spec, coeffs).expect("degree < field size")
}

/// The weakly APN permutation of F₂⁴ given by
/// f = x¹⁴ + e¹⁰x¹³ + ex¹² + e²x¹¹ + e⁹x¹⁰ + e⁸x⁹ + e³x⁸ + e⁵x⁷ + e⁵x⁶
///   + e¹¹x⁵ + e⁸x³ + e¹⁰x² + ex + e¹².
pub fn remark27_f() -> UniPoly {
    poly_from_exponents(
        remark27_field(),
        &[
            (14, 0),
            (13, 10),
            (12, 1),
            (11, 2),
            (10, 9),
            (9, 8),
            (8, 3),
            (7, 5),
            (6, 5),
            (5, 11),
            (3, 8),
            (2, 10),
            (1, 1),
            (0, 12),
        ],
    )
}

/// The compositional inverse of [`remark27_f`]: weakly 4-uniform but not
/// weakly APN, f⁻¹ = x¹⁴ + e¹⁰x¹³ + e¹⁴x¹² + e⁸x¹¹ + e⁷x¹⁰ + e¹⁰x⁹ + x⁸
///   + e⁵x⁷ + e¹⁴x⁶ + e²x⁵ + e⁷x⁴ + e⁵x³ + e¹⁴x² + e¹¹x + e¹⁴.
pub fn remark27_finv() -> UniPoly {
    poly_from_exponents(
        remark27_field(),
        &[
            (14, 0),
            (13, 10),
            (12, 14),
            (11, 8),
            (10, 7),
            (9, 10),
            (8, 0),
            (7, 5),
            (6, 14),
            (5, 2),
            (4, 7),
            (3, 5),
            (2, 14),
            (1, 11),
            (0, 14),
        ],
    )
}

/// ANF source of the first 4-bit example S-box (no derivative has a
/// constant component: n̂ = 0, all components cubic).
pub const SEC7_EXAMPLE1_ANF: &str = "\
f1 = x1x2x3 + x2x3x4 + x1x3 + x2x3 + x1 + x2 + x3 + x4
f2 = x1x2x4 + x1x2 + x1x3 + x2x3 + x2x4 + x4
f3 = x1x3x4 + x1x2 + x1x3 + x1x4 + x3 + x4
f4 = x2x3x4 + x1x4 + x2x4 + x2 + x3x4 + x3 + x4
";

/// ANF source of the second example S-box (n̂ = 1, all components cubic).
pub const SEC7_EXAMPLE2_ANF: &str = "\
f1 = x1x3x4 + x2x3x4 + x2x3 + x2x4 + x3x4 + x1
f2 = x1x2x4 + x1x3 + x1x4 + x2x3 + x2
f3 = x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4 + x1x2 + x3x4 + x3
f4 = x2x3x4 + x1x2 + x1x4 + x2x3 + x4
";

/// ANF source of the third example S-box (n̂ = 1, one quadratic
/// component).
pub const SEC7_EXAMPLE3_ANF: &str = "\
f1 = x1x2x3 + x1x2x4 + x1x3 + x1 + x2x3x4 + x2x3 + x3x4
f2 = x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x2
f3 = x1x2x4 + x1x2 + x1x3x4 + x1x3 + x2x4 + x3
f4 = x1x3 + x1x4 + x2x3x4 + x2x4 + x4
";

/// First example S-box as a lookup table.
pub fn sec7_example1() -> VBF {
    parse_anf(SEC7_EXAMPLE1_ANF).expect("fixture parses")
}

/// Second example S-box as a lookup table.
pub fn sec7_example2() -> VBF {
    parse_anf(SEC7_EXAMPLE2_ANF).expect("fixture parses")
}

/// Third example S-box as a lookup table.
pub fn sec7_example3() -> VBF {
    parse_anf(SEC7_EXAMPLE3_ANF).expect("fixture parses")
}

/// A corpus fixture: the function plus its source representation when it
/// has one.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub vbf: VBF,
    /// Present for fixtures defined as univariate polynomials.
    pub poly: Option<UniPoly>,
}

fn power_entry(name: &'static str, description: &'static str, d: u64, m: u32) -> CorpusEntry {
    let spec = crate::field::default_modulus(m).expect("m is in range");
    let mut coeffs = vec![0u16; d as usize + 1];
    coeffs[d as usize] = 1;
    let poly = UniPoly::new(spec, coeffs).expect("d < 2^m");
    CorpusEntry { name, description, vbf: VBF::power_function(d, &spec), poly: Some(poly) }
}

/// All named fixtures, in canonical order.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut entries = vec![
        CorpusEntry {
            name: "remark27_f",
            description: "weakly APN permutation of F2^4 (univariate over x^4+x+1)",
            vbf: VBF::from_univariate(&remark27_f()),
            poly: Some(remark27_f()),
        },
        CorpusEntry {
            name: "remark27_finv",
            description: "its inverse: weakly 4-uniform, not weakly APN",
            vbf: VBF::from_univariate(&remark27_finv()),
            poly: Some(remark27_finv()),
        },
        CorpusEntry {
            name: "sec7_example1",
            description: "4-bit S-box with n_hat=0, n3=15",
            vbf: sec7_example1(),
            poly: None,
        },
        CorpusEntry {
            name: "sec7_example2",
            description: "4-bit S-box with n_hat=1, n3=15",
            vbf: sec7_example2(),
            poly: None,
        },
        CorpusEntry {
            name: "sec7_example3",
            description: "4-bit S-box with n_hat=1, n3=14",
            vbf: sec7_example3(),
            poly: None,
        },
        power_entry("x11_m6", "x^11 over F2^6: weakly APN, not APN", 11, 6),
        power_entry("x13_m6", "x^13 over F2^6: Kasami exponent, 4-to-1 derivatives", 13, 6),
    ];
    for m in 3..=8 {
        let name: &'static str = match m {
            3 => "x3_m3",
            4 => "x3_m4",
            5 => "x3_m5",
            6 => "x3_m6",
            7 => "x3_m7",
            _ => "x3_m8",
        };
        entries.push(power_entry(name, "the cube map x^3 (APN for every m)", 3, m));
    }
    entries
}

/// Looks a fixture up by name.
pub fn corpus_lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// The fixture names, for diagnostics.
pub fn corpus_names() -> Vec<&'static str> {
    corpus().iter().map(|e| e.name).collect()
}
