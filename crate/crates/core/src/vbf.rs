//! Vectorial Boolean functions F₂ᵐ → F₂ᵐ and their representations:
//! lookup table, per-component truth tables and ANF, univariate polynomial
//! over F₂ᵐ, plus affine and extended-affine transformations.
//!
//! Bit i of an m-bit word is coordinate xᵢ₊₁; the monomial x₁x₂x₃ is ANF
//! coefficient index 0b0111.

use crate::field::{fe_mul, fe_pow, FieldElement, FieldSpec};
use crate::linalg::span;
use thiserror::Error;

/// Errors from construction and conversion of function representations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum VbfError {
    #[error("table length {got} does not match 2^m = {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("entry {value:#x} at index {index} out of range for m={m}")]
    EntryOutOfRange { index: usize, value: u16, m: u32 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("affine map is not invertible")]
    NotInvertible,
    #[error("{got} coefficients exceed the field size {max}")]
    CoeffCount { max: usize, got: usize },
}

/// Hamming weight of an exponent's binary representation, w(d) — the
/// algebraic degree of x^d.
pub fn exponent_weight(d: u64) -> u32 {
    d.count_ones()
}

/// Reduces a power-function exponent to the canonical range: 0 stays 0
/// (the constant 1), nonzero d maps into 1..=2ᵐ−1 with multiples of 2ᵐ−1
/// mapping to 2ᵐ−1 (so x^d and x^reduced agree pointwise, including at 0).
pub fn reduce_exponent(d: u64, m: u32) -> u64 {
    if d == 0 {
        return 0;
    }
    let n = (1u64 << m) - 1;
    let r = d % n;
    if r == 0 {
        n
    } else {
        r
    }
}

/// A vectorial Boolean function as a full lookup table: table[x] = f(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VBF {
    m: u32,
    table: Vec<u16>,
}

impl VBF {
    /// Validates length 2ᵐ and entry range.
    pub fn new(m: u32, table: Vec<u16>) -> Result<Self, VbfError> {
        let expected = 1usize << m;
        if table.len() != expected {
            return Err(VbfError::TableLength { expected, got: table.len() });
        }
        for (index, &value) in table.iter().enumerate() {
            if (value as u32) >= (1u32 << m) {
                return Err(VbfError::EntryOutOfRange { index, value, m });
            }
        }
        Ok(VBF { m, table })
    }

    /// The identity map.
    pub fn identity(m: u32) -> Self {
        VBF { m, table: (0..1u16 << m).collect() }
    }

    /// The constant map x ↦ c.
    pub fn constant(m: u32, c: u16) -> Result<Self, VbfError> {
        Self::new(m, vec![c; 1usize << m])
    }

    /// The power function x ↦ x^d over the given field.
    pub fn power_function(d: u64, spec: &FieldSpec) -> Self {
        let table = (0..spec.size() as u16).map(|x| fe_pow(x, d, spec)).collect();
        VBF { m: spec.m(), table }
    }

    /// Evaluates a univariate polynomial at every field point (Horner).
    pub fn from_univariate(p: &UniPoly) -> Self {
        let spec = p.spec();
        let table = (0..spec.size() as u16).map(|x| p.eval(x)).collect();
        VBF { m: spec.m(), table }
    }

    /// Interpolates the unique univariate polynomial with this value table,
    /// using the closed form over the evaluation basis: c₀ = f(0),
    /// c_i = Σ_{a≠0} f(a)·a^(2ᵐ−1−i) for 1 ≤ i ≤ 2ᵐ−2, and
    /// c_{2ᵐ−1} = Σ_a f(a). Trailing zero coefficients are trimmed.
    pub fn to_univariate(&self, spec: &FieldSpec) -> Result<UniPoly, VbfError> {
        if spec.m() != self.m {
            return Err(VbfError::DimensionMismatch { left: self.m, right: spec.m() });
        }
        let n = self.table.len();
        let order = (n - 1) as u64;
        let mut coeffs = vec![0u16; n];
        coeffs[0] = self.table[0];
        for i in 1..n - 1 {
            let mut c = 0u16;
            for a in 1..n as u16 {
                c ^= fe_mul(self.table[a as usize], fe_pow(a, order - i as u64, spec), spec);
            }
            coeffs[i] = c;
        }
        coeffs[n - 1] = self.table.iter().fold(0, |acc, &v| acc ^ v);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly::new(*spec, coeffs)
    }

    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Table length 2ᵐ.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    /// True only for the degenerate m=0 case, which cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// f(x).
    pub fn get(&self, x: u16) -> u16 {
        self.table[x as usize]
    }

    /// The full value table.
    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// The component ⟨f,v⟩: bit x = parity(v AND f(x)). v = 0 gives the
    /// zero function.
    pub fn component(&self, v: u16) -> BoolFn {
        let bits = self.table.iter().map(|&y| (y & v).count_ones() & 1 == 1).collect();
        BoolFn { m: self.m, bits }
    }

    /// Coordinate function i (0-based), the component with v = 2ⁱ.
    pub fn coordinate(&self, i: u32) -> BoolFn {
        self.component(1 << i)
    }

    /// Maximum algebraic degree over the coordinate functions.
    pub fn algebraic_degree(&self) -> u32 {
        (0..self.m).map(|i| self.coordinate(i).degree()).max().unwrap_or(0)
    }

    /// True iff the table is a bijection.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        for &y in &self.table {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        true
    }

    /// The inverse permutation table; errors when f is not a bijection.
    pub fn inverse(&self) -> Result<VBF, VbfError> {
        if !self.is_permutation() {
            return Err(VbfError::NotAPermutation);
        }
        let mut table = vec![0u16; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y as usize] = x as u16;
        }
        Ok(VBF { m: self.m, table })
    }

    /// g(x) = D(f(C(x))): outer affine map applied to f of the inner one.
    pub fn apply_affine(&self, outer: &AffineMap, inner: &AffineMap) -> Result<VBF, VbfError> {
        if outer.m != self.m || inner.m != self.m {
            return Err(VbfError::DimensionMismatch { left: outer.m, right: inner.m });
        }
        let table = (0..self.table.len() as u16)
            .map(|x| outer.apply(self.get(inner.apply(x))))
            .collect();
        Ok(VBF { m: self.m, table })
    }

    /// g(x) = λ′(f(λ(x))) ⊕ λ″(x), the extended-affine transform.
    pub fn apply_ea(&self, t: &EATriple) -> Result<VBF, VbfError> {
        if t.outer.m != self.m {
            return Err(VbfError::DimensionMismatch { left: t.outer.m, right: self.m });
        }
        let table = (0..self.table.len() as u16)
            .map(|x| t.outer.apply(self.get(t.inner.apply(x))) ^ t.additive.apply(x))
            .collect();
        Ok(VBF { m: self.m, table })
    }

    /// x ↦ f(x) ⊕ f(0), the translate with g(0) = 0. Degrees, derivative
    /// images up to translation, and all difference-based metrics are
    /// unchanged.
    pub fn normalized_at_zero(&self) -> VBF {
        let c = self.table[0];
        VBF { m: self.m, table: self.table.iter().map(|&y| y ^ c).collect() }
    }
}

/// A single Boolean function F₂ᵐ → F₂ as a truth table: bits[x] = S(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolFn {
    m: u32,
    bits: Vec<bool>,
}

impl BoolFn {
    /// Validates length 2ᵐ.
    pub fn new(m: u32, bits: Vec<bool>) -> Result<Self, VbfError> {
        let expected = 1usize << m;
        if bits.len() != expected {
            return Err(VbfError::TableLength { expected, got: bits.len() });
        }
        Ok(BoolFn { m, bits })
    }

    /// The zero function.
    pub fn zero(m: u32) -> Self {
        BoolFn { m, bits: vec![false; 1usize << m] }
    }

    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Truth-table length 2ᵐ.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Never true; functions on zero variables are not representable.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// S(x).
    pub fn get(&self, x: u16) -> bool {
        self.bits[x as usize]
    }

    /// The truth table.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of inputs mapped to 1.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// True iff the function is constant 0 or constant 1.
    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.bits.len()
    }

    /// The derivative x ↦ S(x⊕a) ⊕ S(x).
    pub fn derivative(&self, a: u16) -> BoolFn {
        let bits = (0..self.bits.len())
            .map(|x| self.bits[x ^ a as usize] ^ self.bits[x])
            .collect();
        BoolFn { m: self.m, bits }
    }

    /// Möbius transform to ANF coefficients.
    pub fn anf(&self) -> ANFRep {
        anf(self)
    }

    /// Algebraic degree: maximum weight of a set ANF coefficient index;
    /// constants have degree 0.
    pub fn degree(&self) -> u32 {
        degree(self)
    }
}

/// ANF coefficients of a Boolean function: bit u is the coefficient of the
/// monomial ∏ xᵢ over the set bits i of u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ANFRep {
    m: u32,
    coeffs: Vec<bool>,
}

impl ANFRep {
    /// Validates length 2ᵐ.
    pub fn new(m: u32, coeffs: Vec<bool>) -> Result<Self, VbfError> {
        let expected = 1usize << m;
        if coeffs.len() != expected {
            return Err(VbfError::TableLength { expected, got: coeffs.len() });
        }
        Ok(ANFRep { m, coeffs })
    }

    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Coefficient vector, indexed by monomial mask.
    pub fn coeffs(&self) -> &[bool] {
        &self.coeffs
    }

    /// Coefficient of monomial u.
    pub fn get(&self, u: u16) -> bool {
        self.coeffs[u as usize]
    }

    /// Maximum weight of a set coefficient index; 0 when no coefficient is
    /// set (the zero function) or only the constant term is.
    pub fn degree(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(u, _)| (u as u16).count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Inverse Möbius transform back to a truth table.
    pub fn anf_inverse(&self) -> BoolFn {
        anf_inverse(self)
    }
}

/// The binary Möbius transform (truth table → ANF). The butterfly is an
/// involution, so [`anf_inverse`] is the same pass.
pub fn anf(b: &BoolFn) -> ANFRep {
    ANFRep { m: b.m, coeffs: moebius(b.m, b.bits.clone()) }
}

/// Inverse Möbius transform (ANF → truth table).
pub fn anf_inverse(a: &ANFRep) -> BoolFn {
    BoolFn { m: a.m, bits: moebius(a.m, a.coeffs.clone()) }
}

/// Algebraic degree of a Boolean function via its ANF.
pub fn degree(b: &BoolFn) -> u32 {
    b.anf().degree()
}

fn moebius(m: u32, mut v: Vec<bool>) -> Vec<bool> {
    let n = v.len();
    for i in 0..m {
        let step = 1usize << i;
        for x in 0..n {
            if x & step != 0 {
                v[x] ^= v[x ^ step];
            }
        }
    }
    v
}

/// A univariate polynomial over F₂ᵐ: coeffs[d] multiplies x^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    spec: FieldSpec,
    coeffs: Vec<u16>,
}

impl UniPoly {
    /// Validates coefficient count (≤ 2ᵐ) and range.
    pub fn new(spec: FieldSpec, coeffs: Vec<u16>) -> Result<Self, VbfError> {
        if coeffs.len() > spec.size() {
            return Err(VbfError::CoeffCount { max: spec.size(), got: coeffs.len() });
        }
        for (index, &value) in coeffs.iter().enumerate() {
            if (value as u32) >= (1u32 << spec.m()) {
                return Err(VbfError::EntryOutOfRange { index, value, m: spec.m() });
            }
        }
        Ok(UniPoly { spec, coeffs })
    }

    /// The ambient field.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Coefficients, low degree first.
    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    /// Degree of the polynomial, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let mut acc = 0u16;
        for &c in self.coeffs.iter().rev() {
            acc = fe_mul(acc, x, &self.spec) ^ c;
        }
        acc
    }
}

/// An affine map x ↦ Mx ⊕ c on F₂ᵐ, with M stored as columns:
/// Mx = XOR of cols[i] over the set bits i of x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    m: u32,
    cols: Vec<u16>,
    offset: u16,
}

impl AffineMap {
    /// Validates column count (= m) and entry range.
    pub fn new(m: u32, cols: Vec<u16>, offset: u16) -> Result<Self, VbfError> {
        if cols.len() != m as usize {
            return Err(VbfError::TableLength { expected: m as usize, got: cols.len() });
        }
        for (index, &value) in cols.iter().enumerate() {
            if (value as u32) >= (1u32 << m) {
                return Err(VbfError::EntryOutOfRange { index, value, m });
            }
        }
        if (offset as u32) >= (1u32 << m) {
            return Err(VbfError::EntryOutOfRange { index: m as usize, value: offset, m });
        }
        Ok(AffineMap { m, cols, offset })
    }

    /// The identity map.
    pub fn identity(m: u32) -> Self {
        AffineMap { m, cols: (0..m).map(|i| 1 << i).collect(), offset: 0 }
    }

    /// The translation x ↦ x ⊕ c.
    pub fn translation(m: u32, c: u16) -> Result<Self, VbfError> {
        Self::new(m, (0..m).map(|i| 1 << i).collect(), c)
    }

    /// The zero linear map with an optional constant part.
    pub fn constant(m: u32, c: u16) -> Result<Self, VbfError> {
        Self::new(m, vec![0; m as usize], c)
    }

    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Matrix columns.
    pub fn cols(&self) -> &[u16] {
        &self.cols
    }

    /// Constant part c.
    pub fn offset(&self) -> u16 {
        self.offset
    }

    /// Rank of the linear part over GF(2).
    pub fn rank(&self) -> u32 {
        span(self.m, &self.cols).dim()
    }

    /// True iff the linear part has full rank.
    pub fn is_invertible(&self) -> bool {
        self.rank() == self.m
    }

    /// Mx ⊕ c.
    pub fn apply(&self, x: u16) -> u16 {
        let mut y = self.offset;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros();
            y ^= self.cols[i as usize];
            rest &= rest - 1;
        }
        y
    }

    /// The composition self ∘ inner: x ↦ self(inner(x)).
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap, VbfError> {
        if self.m != inner.m {
            return Err(VbfError::DimensionMismatch { left: self.m, right: inner.m });
        }
        let cols = inner.cols.iter().map(|&c| self.apply(c) ^ self.offset).collect();
        AffineMap::new(self.m, cols, self.apply(inner.offset))
    }
}

/// An extended-affine transform g = λ′ ∘ f ∘ λ ⊕ λ″ with invertible outer
/// and inner parts; the additive part is rank-unrestricted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EATriple {
    outer: AffineMap,
    inner: AffineMap,
    additive: AffineMap,
}

impl EATriple {
    /// Validates matching dimensions and invertibility of outer and inner.
    pub fn new(outer: AffineMap, inner: AffineMap, additive: AffineMap) -> Result<Self, VbfError> {
        if outer.m != inner.m || outer.m != additive.m {
            return Err(VbfError::DimensionMismatch { left: outer.m, right: inner.m.max(additive.m) });
        }
        if !outer.is_invertible() || !inner.is_invertible() {
            return Err(VbfError::NotInvertible);
        }
        Ok(EATriple { outer, inner, additive })
    }

    /// λ′, the outer affine permutation.
    pub fn outer(&self) -> &AffineMap {
        &self.outer
    }

    /// λ, the inner affine permutation.
    pub fn inner(&self) -> &AffineMap {
        &self.inner
    }

    /// λ″, the additive affine part.
    pub fn additive(&self) -> &AffineMap {
        &self.additive
    }
}
