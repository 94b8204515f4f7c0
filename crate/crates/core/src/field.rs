//! Binary field arithmetic in F₂ᵐ = F₂[x]/(p(x)), 1 ≤ m ≤ 16.
//!
//! Elements are m-bit integers in the polynomial basis: bit i is the
//! coefficient of xⁱ in the residue. All operations are pure and constant
//! over a validated [`FieldSpec`].

use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_M: u32 = 16;

/// A field element, encoded as the coefficient mask of a polynomial residue.
pub type FieldElement = u16;

/// Errors from field construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} outside supported range 1..={MAX_M}")]
    UnsupportedDegree(u32),
    #[error("modulus {0:#x} must have bit {1} (degree) and bit 0 set, and no higher bits")]
    BadModulusMask(u32, u32),
    #[error("modulus {0:#x} is reducible over F2")]
    ReducibleModulus(u32),
    #[error("element {0:#x} does not generate the multiplicative group")]
    NotPrimitive(FieldElement),
    #[error("no inverse of zero")]
    ZeroInverse,
    #[error("element {0:#x} out of range for F2^{1}")]
    ElementOutOfRange(u32, u32),
}

/// Default modulus masks, indexed by m−1. Each is irreducible with the class
/// of x primitive; the m=4 entry x⁴+x+1 makes e = x satisfy e⁴ = e+1.
const DEFAULT_MODULI: [u32; MAX_M as usize] = [
    0x3,     // m=1:  x + 1
    0x7,     // m=2:  x² + x + 1
    0xB,     // m=3:  x³ + x + 1
    0x13,    // m=4:  x⁴ + x + 1
    0x25,    // m=5:  x⁵ + x² + 1
    0x43,    // m=6:  x⁶ + x + 1
    0x83,    // m=7:  x⁷ + x + 1
    0x11D,   // m=8:  x⁸ + x⁴ + x³ + x² + 1
    0x211,   // m=9:  x⁹ + x⁴ + 1
    0x409,   // m=10: x¹⁰ + x³ + 1
    0x805,   // m=11: x¹¹ + x² + 1
    0x1053,  // m=12: x¹² + x⁶ + x⁴ + x + 1
    0x201B,  // m=13: x¹³ + x⁴ + x³ + x + 1
    0x4443,  // m=14: x¹⁴ + x¹⁰ + x⁶ + x + 1
    0x8003,  // m=15: x¹⁵ + x + 1
    0x1100B, // m=16: x¹⁶ + x¹² + x³ + x + 1
];

/// A binary field F₂ᵐ fixed by its degree, modulus polynomial, and a
/// primitive generator. Immutable after validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    generator: FieldElement,
}

impl FieldSpec {
    /// Builds a field from a modulus mask, verifying irreducibility by trial
    /// division and picking the smallest primitive generator (the class of x
    /// when it is primitive).
    pub fn new(m: u32, modulus: u32) -> Result<Self, FieldError> {
        if m < 1 || m > MAX_M {
            return Err(FieldError::UnsupportedDegree(m));
        }
        let expected_top = 1u32 << m;
        if modulus & expected_top == 0 || modulus & 1 == 0 || modulus >> m != 1 {
            return Err(FieldError::BadModulusMask(modulus, m));
        }
        if !is_irreducible(modulus, m) {
            return Err(FieldError::ReducibleModulus(modulus));
        }
        let mut spec = FieldSpec { m, modulus, generator: 2 };
        if m == 1 {
            spec.generator = 1; // F2* = {1}
            return Ok(spec);
        }
        // the multiplicative group is cyclic, so a generator always exists
        for g in 2..(1u32 << m) {
            spec.generator = g as FieldElement;
            if is_primitive(spec.generator, &spec) {
                return Ok(spec);
            }
        }
        unreachable!("cyclic group of order >= 3 has a generator");
    }

    /// Builds a field with an explicitly chosen generator, verifying its
    /// multiplicative order is 2ᵐ−1.
    pub fn with_generator(m: u32, modulus: u32, generator: FieldElement) -> Result<Self, FieldError> {
        let mut spec = Self::new(m, modulus)?;
        if m > 1 && !is_primitive(generator, &spec) {
            return Err(FieldError::NotPrimitive(generator));
        }
        if m == 1 && generator != 1 {
            return Err(FieldError::NotPrimitive(generator));
        }
        spec.generator = generator;
        Ok(spec)
    }

    /// The field with the documented default modulus for this degree.
    pub fn default_for(m: u32) -> Result<Self, FieldError> {
        if m < 1 || m > MAX_M {
            return Err(FieldError::UnsupportedDegree(m));
        }
        Self::new(m, DEFAULT_MODULI[(m - 1) as usize])
    }

    /// Extension degree m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Modulus polynomial as an (m+1)-bit mask.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Number of field elements, 2ᵐ.
    pub fn size(&self) -> usize {
        1usize << self.m
    }

    /// Order of the multiplicative group, 2ᵐ−1.
    pub fn order(&self) -> u32 {
        (1u32 << self.m) - 1
    }

    fn check_element(&self, a: FieldElement) -> Result<(), FieldError> {
        if (a as u32) < (1u32 << self.m) {
            Ok(())
        } else {
            Err(FieldError::ElementOutOfRange(a as u32, self.m))
        }
    }
}

/// The documented default field for degree m (modulus table above).
pub fn default_modulus(m: u32) -> Result<FieldSpec, FieldError> {
    FieldSpec::default_for(m)
}

/// Product in F₂ᵐ: carryless multiplication reduced by the modulus.
pub fn fe_mul(a: FieldElement, b: FieldElement, spec: &FieldSpec) -> FieldElement {
    debug_assert!(spec.check_element(a).is_ok() && spec.check_element(b).is_ok());
    let mut acc: u64 = 0;
    let mut aa = a as u64;
    let mut bb = b as u64;
    while bb != 0 {
        if bb & 1 == 1 {
            acc ^= aa;
        }
        aa <<= 1;
        bb >>= 1;
    }
    reduce(acc, spec)
}

/// Power in F₂ᵐ by square-and-multiply; fe_pow(a, 0) = 1 for every a.
pub fn fe_pow(a: FieldElement, d: u64, spec: &FieldSpec) -> FieldElement {
    let mut base = a;
    let mut exp = d;
    let mut acc: FieldElement = 1;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = fe_mul(acc, base, spec);
        }
        base = fe_mul(base, base, spec);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse via a^(2ᵐ−2); errors on zero.
pub fn fe_inv(a: FieldElement, spec: &FieldSpec) -> Result<FieldElement, FieldError> {
    if a == 0 {
        return Err(FieldError::ZeroInverse);
    }
    spec.check_element(a)?;
    Ok(fe_pow(a, (spec.order() - 1) as u64, spec))
}

fn reduce(mut v: u64, spec: &FieldSpec) -> FieldElement {
    let m = spec.m;
    let modulus = spec.modulus as u64;
    let mut bit = 63 - v.leading_zeros().min(63);
    while v >> m != 0 {
        if v & (1u64 << bit) != 0 {
            v ^= modulus << (bit - m);
        }
        bit -= 1;
    }
    v as FieldElement
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of polynomial division over F₂ (plain masks, no field).
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Irreducibility by trial division against every polynomial of degree
/// 1..=m/2 (a reducible degree-m polynomial has a factor in that range).
fn is_irreducible(modulus: u32, m: u32) -> bool {
    if m == 1 {
        return true;
    }
    for g in 2u32..(1u32 << (m / 2 + 1)) {
        if poly_rem(modulus, g) == 0 {
            return false;
        }
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// g generates the multiplicative group iff g^((2ᵐ−1)/p) ≠ 1 for every
/// prime p dividing 2ᵐ−1.
fn is_primitive(g: FieldElement, spec: &FieldSpec) -> bool {
    if g == 0 {
        return false;
    }
    let order = spec.order();
    if fe_pow(g, order as u64, spec) != 1 {
        return false;
    }
    prime_factors(order)
        .iter()
        .all(|&p| fe_pow(g, (order / p) as u64, spec) != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_moduli_are_valid_and_x_is_primitive() {
        for m in 1..=MAX_M {
            let spec = default_modulus(m).unwrap();
            assert_eq!(spec.m(), m);
            assert_eq!(spec.modulus(), DEFAULT_MODULI[(m - 1) as usize]);
            // the constructor picks the smallest primitive element; for every
            // default modulus that is the class of x itself (1 for m=1)
            assert_eq!(spec.generator(), if m == 1 { 1 } else { 2 });
            // full order, verified by stepping the generator
            if m <= 12 {
                let mut pow = 1u16;
                for _ in 0..spec.order() - 1 {
                    pow = fe_mul(pow, spec.generator(), &spec);
                    assert_ne!(pow, 1);
                }
                pow = fe_mul(pow, spec.generator(), &spec);
                assert_eq!(pow, 1);
            } else {
                assert_eq!(fe_pow(spec.generator(), spec.order() as u64, &spec), 1);
            }
        }
    }

    #[test]
    fn out_of_range_degrees_are_rejected() {
        assert_eq!(default_modulus(0).unwrap_err(), FieldError::UnsupportedDegree(0));
        assert_eq!(default_modulus(17).unwrap_err(), FieldError::UnsupportedDegree(17));
    }

    #[test]
    fn bad_masks_and_reducible_moduli_are_rejected() {
        // bit 0 clear
        assert!(matches!(FieldSpec::new(4, 0x12), Err(FieldError::BadModulusMask(..))));
        // top bit clear
        assert!(matches!(FieldSpec::new(4, 0xB), Err(FieldError::BadModulusMask(..))));
        // x⁴+1 = (x+1)⁴
        assert_eq!(FieldSpec::new(4, 0x11).unwrap_err(), FieldError::ReducibleModulus(0x11));
        // x⁴+x²+1 = (x²+x+1)²
        assert_eq!(FieldSpec::new(4, 0x15).unwrap_err(), FieldError::ReducibleModulus(0x15));
    }

    #[test]
    fn non_primitive_x_falls_back_to_another_generator() {
        // x⁴+x³+x²+x+1 is irreducible but x has order 5
        let spec = FieldSpec::new(4, 0x1F).unwrap();
        assert_ne!(spec.generator(), 2);
        let mut seen = std::collections::HashSet::new();
        let mut pow = 1u16;
        for _ in 0..15 {
            pow = fe_mul(pow, spec.generator(), &spec);
            seen.insert(pow);
        }
        assert_eq!(seen.len(), 15);
        assert_eq!(FieldSpec::with_generator(4, 0x1F, 2).unwrap_err(), FieldError::NotPrimitive(2));
    }

    #[test]
    fn m4_generator_power_table() {
        let spec = default_modulus(4).unwrap();
        let expected = [1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14, 15, 13, 9];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(fe_pow(2, k as u64, &spec), *want, "e^{k}");
        }
        assert_eq!(fe_pow(2, 15, &spec), 1);
    }

    #[test]
    fn low_degree_products_and_the_defining_relation() {
        let spec = default_modulus(4).unwrap();
        assert_eq!(fe_mul(2, 2, &spec), 4); // x·x = x²
        assert_eq!(fe_pow(2, 4, &spec), 3); // e⁴ = e+1
        for a in 0..16 {
            assert_eq!(fe_mul(0, a, &spec), 0);
            assert_eq!(fe_pow(a, 1, &spec), a);
            assert_eq!(fe_pow(a, 0, &spec), 1);
        }
    }

    #[test]
    fn inverses() {
        let m3 = default_modulus(3).unwrap();
        for a in 1..8 {
            assert_eq!(fe_mul(a, fe_inv(a, &m3).unwrap(), &m3), 1);
        }
        let m4 = default_modulus(4).unwrap();
        assert_eq!(fe_inv(1, &m4).unwrap(), 1);
        assert_eq!(fe_inv(2, &m4).unwrap(), 9);
        assert_eq!(fe_mul(2, 9, &m4), 1);
        assert_eq!(fe_inv(0, &m4).unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn ring_axioms_exhaustive_small_and_random_large() {
        for m in 1..=4 {
            let spec = default_modulus(m).unwrap();
            let n = spec.size() as u16;
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(fe_mul(a, b, &spec), fe_mul(b, a, &spec));
                    for c in 0..n {
                        assert_eq!(
                            fe_mul(fe_mul(a, b, &spec), c, &spec),
                            fe_mul(a, fe_mul(b, c, &spec), &spec)
                        );
                        assert_eq!(
                            fe_mul(a, b ^ c, &spec),
                            fe_mul(a, b, &spec) ^ fe_mul(a, c, &spec)
                        );
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 5..=8 {
            let spec = default_modulus(m).unwrap();
            let n = spec.size() as u16;
            for _ in 0..500 {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                assert_eq!(
                    fe_mul(fe_mul(a, b, &spec), c, &spec),
                    fe_mul(a, fe_mul(b, c, &spec), &spec)
                );
                assert_eq!(fe_mul(a, b ^ c, &spec), fe_mul(a, b, &spec) ^ fe_mul(a, c, &spec));
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in [3u32, 4, 6, 8] {
            let spec = default_modulus(m).unwrap();
            for _ in 0..50 {
                let a = rng.random_range(0..spec.size() as u16);
                let d = rng.random_range(0..=64u64);
                let mut acc = 1u16;
                for _ in 0..d {
                    acc = fe_mul(acc, a, &spec);
                }
                assert_eq!(fe_pow(a, d, &spec), acc);
            }
        }
    }

    #[test]
    fn lagrange_orders() {
        for m in [2u32, 4, 8] {
            let spec = default_modulus(m).unwrap();
            for a in 1..spec.size() as u16 {
                assert_eq!(fe_pow(a, spec.order() as u64, &spec), 1);
            }
        }
    }
}
