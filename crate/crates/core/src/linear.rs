//! Component-level metrics: Walsh spectra, balancedness and bentness,
//! linear structures, partially-bent detection, the spaces V_a of constant
//! derivative components, the counters n̂(f) and nᵢ(f), and the smallest
//! affine cover of a derivative image.

use crate::diff::derivative_image;
use crate::linalg::{affine_hull, ortho_complement, span, AffineSubspace, SubspaceBasis};
use crate::vbf::{BoolFn, VBF};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from component-level analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinearError {
    #[error("a = 0 is degenerate here: the derivative is identically zero")]
    ZeroDifference,
}

/// Walsh spectrum of a Boolean function:
/// W(u) = Σ_x (−1)^(S(x) ⊕ ⟨u,x⟩).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    /// Dimension m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// All 2ᵐ coefficients, indexed by u.
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// W(u).
    pub fn get(&self, u: u16) -> i32 {
        self.values[u as usize]
    }

    /// max_u |W(u)|.
    pub fn max_abs(&self) -> i32 {
        self.values.iter().map(|w| w.abs()).max().unwrap_or(0)
    }
}

/// Computes the Walsh spectrum with the usual in-place butterfly,
/// m·2ᵐ additions.
pub fn walsh(b: &BoolFn) -> WalshSpectrum {
    let m = b.m();
    let mut values: Vec<i32> = b.bits().iter().map(|&bit| if bit { -1 } else { 1 }).collect();
    for i in 0..m {
        let s = 1usize << i;
        for x in 0..values.len() {
            if x & s == 0 {
                let (lo, hi) = (values[x], values[x | s]);
                values[x] = lo + hi;
                values[x | s] = lo - hi;
            }
        }
    }
    WalshSpectrum { m, values }
}

/// True iff every |W(u)| = 2^(m/2). Bent functions exist only in even
/// dimension, so odd m always returns false.
pub fn is_bent(b: &BoolFn) -> bool {
    let m = b.m();
    if m % 2 != 0 {
        return false;
    }
    let target = 1i32 << (m / 2);
    walsh(b).values().iter().all(|w| w.abs() == target)
}

/// True iff S takes the values 0 and 1 equally often (W(0) = 0).
pub fn is_balanced(b: &BoolFn) -> bool {
    2 * b.weight() == b.len()
}

/// The space V(S) of linear structures: all a such that x ↦ S(x⊕a) ⊕ S(x)
/// is constant. Always a subspace.
pub fn linear_structures(b: &BoolFn) -> SubspaceBasis {
    let n = b.len();
    let members: Vec<u16> =
        (0..n as u16).filter(|&a| b.derivative(a).is_constant()).collect();
    let basis = span(b.m(), &members);
    debug_assert_eq!(basis.size(), members.len(), "linear structures form a subspace");
    basis
}

/// True iff S is partially bent, decided by the derivative criterion:
/// every derivative Ŝ_a is constant or balanced.
pub fn is_partially_bent(b: &BoolFn) -> bool {
    let n = b.len();
    (0..n as u16).all(|a| {
        let d = b.derivative(a);
        d.is_constant() || is_balanced(&d)
    })
}

/// Basis of V_a = {v : ⟨f̂_a, v⟩ is constant}. Always contains v = 0;
/// closed under XOR since ⟨f̂_a, v⊕w⟩ = ⟨f̂_a, v⟩ ⊕ ⟨f̂_a, w⟩.
///
/// a = 0 is rejected: the derivative is identically zero and V₀ would be
/// the full space for every f.
pub fn v_space(f: &VBF, a: u16) -> Result<SubspaceBasis, LinearError> {
    if a == 0 {
        return Err(LinearError::ZeroDifference);
    }
    let d = crate::diff::derivative(f, a);
    let n = f.len();
    let members: Vec<u16> =
        (0..n as u16).filter(|&v| d.component(v).is_constant()).collect();
    let basis = span(f.m(), &members);
    debug_assert_eq!(basis.size(), members.len(), "V_a is a subspace");
    Ok(basis)
}

/// n̂(f): the maximum over a ≠ 0 of the number of nonzero v whose
/// derivative component ⟨f̂_a, v⟩ is constant. Equals 2ᵗ − 1 where
/// t = max_a dim V_a.
pub fn n_hat(f: &VBF) -> u32 {
    let n = f.len();
    let mut best = 0u32;
    let mut d = vec![0u16; n];
    for a in 1..n as u16 {
        for x in 0..n as u16 {
            d[x as usize] = f.get(x ^ a) ^ f.get(x);
        }
        let mut count = 0u32;
        for v in 1..n as u16 {
            let first = (v & d[0]).count_ones() & 1;
            if d.iter().all(|&y| (v & y).count_ones() & 1 == first) {
                count += 1;
            }
        }
        best = best.max(count);
    }
    best
}

fn serialize_hist<S: Serializer>(hist: &BTreeMap<u32, u32>, s: S) -> Result<S::Ok, S::Error> {
    // JSON object keys must be strings; keep numeric order
    let mut map = s.serialize_map(Some(hist.len()))?;
    for (i, c) in hist {
        map.serialize_entry(&i.to_string(), c)?;
    }
    map.end()
}

/// Degree histogram and component structure of a vectorial function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentProfile {
    /// nᵢ(f) = #{v ≠ 0 : deg⟨f,v⟩ = i}, keyed by degree, absent for
    /// degrees that do not occur.
    #[serde(serialize_with = "serialize_hist")]
    pub n_hist: BTreeMap<u32, u32>,
    /// n̂(f), the constant-derivative-component maximum.
    pub n_hat: u32,
    /// t = max over a ≠ 0 of dim V_a; n_hat = 2ᵗ − 1.
    pub t: u32,
    /// Number of nonzero v with ⟨f,v⟩ partially bent.
    pub pb_count: u32,
    /// Number of nonzero v with 1 ≤ deg⟨f,v⟩ ≤ 2.
    pub quad_count: u32,
    /// Number of nonzero v with deg⟨f,v⟩ = 2 exactly.
    pub quad_count_deg2_only: u32,
}

/// Computes the full component profile. n_hat and t come from independent
/// routes (direct constant-component counting vs. V_a spans).
pub fn n_histogram(f: &VBF) -> ComponentProfile {
    let n = f.len();
    let mut n_hist = BTreeMap::new();
    let mut pb_count = 0;
    let mut quad_count = 0;
    let mut quad_count_deg2_only = 0;
    for v in 1..n as u16 {
        let comp = f.component(v);
        let deg = comp.degree();
        *n_hist.entry(deg).or_insert(0) += 1;
        if is_partially_bent(&comp) {
            pb_count += 1;
        }
        if deg == 2 {
            quad_count_deg2_only += 1;
        }
        if (1..=2).contains(&deg) {
            quad_count += 1;
        }
    }
    let t = (1..n as u16)
        .map(|a| v_space(f, a).expect("a is nonzero").dim())
        .max()
        .unwrap_or(0);
    let n_hat = n_hat(f);
    debug_assert_eq!(n_hat, (1u32 << t) - 1);
    ComponentProfile { n_hist, n_hat, t, pb_count, quad_count, quad_count_deg2_only }
}

/// Checks that the smallest affine subspace containing Im(f̂_a) is
/// f̂_a(0) + V_a^⊥, comparing the hull of the actual image points against
/// the claimed subspace in canonical form. The offset f̂_a(0) = f(a) ⊕ f(0)
/// reduces to f(a) for functions normalized to f(0) = 0.
pub fn affine_cover_check(f: &VBF, a: u16) -> Result<bool, LinearError> {
    if a == 0 {
        return Err(LinearError::ZeroDifference);
    }
    let m = f.m();
    let image = derivative_image(f, a);
    let hull = affine_hull(m, &image).expect("derivative image is nonempty");
    let claimed = AffineSubspace::new(f.get(a) ^ f.get(0), ortho_complement(&v_space(f, a)?));
    Ok(hull == claimed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_modulus;
    use crate::vbf::{anf_inverse, ANFRep};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn boolfn_from_anf(m: u32, set_indices: &[u16]) -> BoolFn {
        let mut coeffs = vec![false; 1usize << m];
        for &u in set_indices {
            coeffs[u as usize] = true;
        }
        anf_inverse(&ANFRep::new(m, coeffs).unwrap())
    }

    fn random_boolfn(m: u32, rng: &mut ChaCha8Rng) -> BoolFn {
        BoolFn::new(m, (0..1usize << m).map(|_| rng.random()).collect()).unwrap()
    }

    fn corpus_tables() -> Vec<(&'static str, VBF)> {
        [
            ("ex1", vec![0, 1, 9, 14, 13, 11, 7, 6, 15, 2, 12, 5, 10, 4, 3, 8]),
            ("ex2", vec![0, 1, 2, 15, 4, 7, 13, 6, 8, 3, 11, 10, 9, 5, 12, 14]),
            ("ex3", vec![0, 1, 2, 5, 4, 10, 7, 14, 8, 3, 6, 12, 13, 15, 11, 9]),
            ("f", vec![15, 6, 12, 3, 4, 11, 7, 10, 13, 0, 9, 14, 8, 5, 2, 1]),
            ("finv", vec![9, 15, 14, 3, 4, 13, 1, 6, 12, 10, 7, 5, 2, 8, 11, 0]),
        ]
        .into_iter()
        .map(|(n, t)| (n, VBF::new(4, t).unwrap()))
        .collect()
    }

    #[test]
    fn walsh_matches_defining_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for _ in 0..30 {
            let b = random_boolfn(4, &mut rng);
            let w = walsh(&b);
            for u in 0..16u16 {
                let direct: i32 = (0..16u16)
                    .map(|x| {
                        let sign = b.get(x) as u32 ^ ((u & x).count_ones() & 1);
                        if sign == 1 {
                            -1
                        } else {
                            1
                        }
                    })
                    .sum();
                assert_eq!(w.get(u), direct);
            }
            let parseval: i64 = w.values().iter().map(|&v| (v as i64) * (v as i64)).sum();
            assert_eq!(parseval, 1 << (2 * 4));
            assert_eq!(w.get(0), 16 - 2 * b.weight() as i32);
        }
    }

    #[test]
    fn walsh_extremes() {
        let w = walsh(&BoolFn::zero(4));
        assert_eq!(w.get(0), 16);
        assert!((1..16).all(|u| w.get(u) == 0));
        // ⟨u0, x⟩ concentrates on u0
        let u0 = 0b1011u16;
        let b = BoolFn::new(4, (0..16u16).map(|x| (u0 & x).count_ones() & 1 == 1).collect())
            .unwrap();
        let w = walsh(&b);
        assert_eq!(w.get(u0), 16);
        assert!((0..16).filter(|&u| u != u0).all(|u| w.get(u) == 0));
    }

    #[test]
    fn bent_and_balanced_basics() {
        let b = boolfn_from_anf(2, &[0b11]);
        assert!(is_bent(&b));
        assert!(!is_balanced(&b));
        let b = boolfn_from_anf(4, &[0b0011, 0b1100]);
        assert!(is_bent(&b));
        // odd dimension has no bent functions at all
        for bits in 0..256u32 {
            let b = BoolFn::new(3, (0..8).map(|i| bits >> i & 1 == 1).collect()).unwrap();
            assert!(!is_bent(&b));
        }
        // components of a permutation are balanced, never bent
        let (_, ex1) = &corpus_tables()[0];
        for v in 1..16 {
            let c = ex1.component(v);
            assert!(is_balanced(&c));
            assert!(!is_bent(&c));
        }
    }

    #[test]
    fn linear_structure_spaces() {
        // linear function: every a is a structure
        let u0 = 0b0110u16;
        let b = BoolFn::new(4, (0..16u16).map(|x| (u0 & x).count_ones() & 1 == 1).collect())
            .unwrap();
        assert_eq!(linear_structures(&b).dim(), 4);
        // bent: only 0
        assert_eq!(linear_structures(&boolfn_from_anf(4, &[0b0011, 0b1100])).dim(), 0);
        // x1x2 viewed on m=4: structures are exactly {a : a1 = a2 = 0}
        let q = boolfn_from_anf(4, &[0b0011]);
        let v = linear_structures(&q);
        assert_eq!(v.dim(), 2);
        let elements: BTreeSet<u16> = v.elements().into_iter().collect();
        assert_eq!(elements, BTreeSet::from([0, 4, 8, 12]));
    }

    #[test]
    fn quadratic_structure_dims_exhaustive_m4() {
        // all 2^11 quadratic ANFs on 4 variables: dim V ∈ {0,2,4} and
        // bent ⟺ dim 0; every one is partially bent
        let quad_indices: Vec<u16> = (0..16u16).filter(|u| u.count_ones() <= 2).collect();
        assert_eq!(quad_indices.len(), 11);
        for mask in 0..1u32 << 11 {
            let picked: Vec<u16> = quad_indices
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &u)| u)
                .collect();
            let b = boolfn_from_anf(4, &picked);
            let dim = linear_structures(&b).dim();
            assert!(matches!(dim, 0 | 2 | 4), "dim {dim} for mask {mask:#x}");
            assert_eq!(dim == 0, is_bent(&b));
            assert!(is_partially_bent(&b));
        }
    }

    /// Definitional partially-bent test: some complementary subspace U of
    /// V(S) has S affine on V(S), bent on U, and splits as a direct sum.
    fn is_partially_bent_definitional(b: &BoolFn, subspaces: &[SubspaceBasis]) -> bool {
        let m = b.m();
        let v = linear_structures(b);
        let want = m - v.dim();
        let vs = v.elements();
        let f0 = b.get(0);
        // restriction to V(S) must be affine no matter the complement
        for &x in &vs {
            for &y in &vs {
                if b.get(x ^ y) != b.get(x) ^ b.get(y) ^ f0 {
                    return false;
                }
            }
        }
        'outer: for u in subspaces.iter().filter(|u| u.dim() == want) {
            let us = u.elements();
            for &x in &us {
                if x != 0 && v.contains(x) {
                    continue 'outer;
                }
            }
            for &x in &vs {
                for &y in &us {
                    if b.get(x ^ y) != b.get(x) ^ b.get(y) ^ f0 {
                        continue 'outer;
                    }
                }
            }
            if want == 0 {
                return true;
            }
            let basis = u.vectors();
            let bits: Vec<bool> = (0..1u16 << want)
                .map(|y| {
                    let point = (0..want)
                        .filter(|i| y >> i & 1 == 1)
                        .fold(0u16, |acc, i| acc ^ basis[i as usize]);
                    b.get(point)
                })
                .collect();
            if is_bent(&BoolFn::new(want, bits).unwrap()) {
                return true;
            }
        }
        false
    }

    fn all_subspaces(m: u32) -> Vec<SubspaceBasis> {
        let n = 1usize << m;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let consider = |vecs: &[u16], seen: &mut BTreeSet<Vec<u16>>, out: &mut Vec<SubspaceBasis>| {
            let s = span(m, vecs);
            if seen.insert(s.vectors().to_vec()) {
                out.push(s);
            }
        };
        consider(&[], &mut seen, &mut out);
        let elems: Vec<u16> = (1..n as u16).collect();
        let k = elems.len();
        // spans of all subsets of size ≤ m reach every subspace
        let mut stack: Vec<(usize, Vec<u16>)> = vec![(0, Vec::new())];
        while let Some((start, chosen)) = stack.pop() {
            for i in start..k {
                let mut next = chosen.clone();
                next.push(elems[i]);
                consider(&next, &mut seen, &mut out);
                if next.len() < m as usize {
                    stack.push((i + 1, next));
                }
            }
        }
        out
    }

    #[test]
    fn partially_bent_matches_definition() {
        for m in 1..=3u32 {
            let subspaces = all_subspaces(m);
            for bits in 0..1u32 << (1 << m) {
                let b =
                    BoolFn::new(m, (0..1 << m).map(|i| bits >> i & 1 == 1).collect()).unwrap();
                assert_eq!(
                    is_partially_bent(&b),
                    is_partially_bent_definitional(&b, &subspaces),
                    "m={m} bits={bits:#x}"
                );
            }
        }
        let subspaces = all_subspaces(4);
        for bits in 0..=u16::MAX {
            let b = BoolFn::new(4, (0..16).map(|i| bits >> i & 1 == 1).collect()).unwrap();
            assert_eq!(
                is_partially_bent(&b),
                is_partially_bent_definitional(&b, &subspaces),
                "bits={bits:#x}"
            );
        }
    }

    #[test]
    fn cubic_monomial_is_not_partially_bent() {
        // D_{e1}(x1x2x3) = x2x3, neither constant nor balanced on F₂⁴
        let b = boolfn_from_anf(4, &[0b0111]);
        assert!(!is_partially_bent(&b));
    }

    #[test]
    fn v_space_basics() {
        let id = VBF::identity(4);
        assert_eq!(v_space(&id, 0).unwrap_err(), LinearError::ZeroDifference);
        for a in 1..16 {
            assert_eq!(v_space(&id, a).unwrap().dim(), 4);
        }
        let tables = corpus_tables();
        for a in 1..16 {
            assert_eq!(v_space(&tables[0].1, a).unwrap().dim(), 0, "ex1 a={a}");
        }
        let max3 = (1..16).map(|a| v_space(&tables[2].1, a).unwrap().dim()).max().unwrap();
        assert_eq!(max3, 1);
    }

    #[test]
    fn n_hat_values() {
        assert_eq!(n_hat(&VBF::identity(3)), 7);
        assert_eq!(n_hat(&VBF::identity(4)), 15);
        let expected = [("ex1", 0u32), ("ex2", 1), ("ex3", 1), ("f", 1), ("finv", 3)];
        for ((name, f), (_, want)) in corpus_tables().iter().zip(expected) {
            assert_eq!(n_hat(f), want, "{name}");
        }
    }

    #[test]
    fn component_profiles_pinned() {
        let tables = corpus_tables();
        let hist = |pairs: &[(u32, u32)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        let expected = [
            ("ex1", hist(&[(3, 15)]), 0u32, 0u32, 0u32, 0u32, 0u32),
            ("ex2", hist(&[(3, 15)]), 1, 1, 0, 0, 0),
            ("ex3", hist(&[(2, 1), (3, 14)]), 1, 1, 1, 1, 1),
            ("f", hist(&[(2, 1), (3, 14)]), 1, 1, 1, 1, 1),
            ("finv", hist(&[(2, 1), (3, 14)]), 3, 2, 1, 1, 1),
        ];
        for ((name, f), (_, n_hist, nh, t, pb, quad, quad2)) in tables.iter().zip(expected) {
            let p = n_histogram(f);
            assert_eq!(p.n_hist, n_hist, "{name}");
            assert_eq!(p.n_hat, nh, "{name}");
            assert_eq!(p.t, t, "{name}");
            assert_eq!(p.pb_count, pb, "{name}");
            assert_eq!(p.quad_count, quad, "{name}");
            assert_eq!(p.quad_count_deg2_only, quad2, "{name}");
        }
        let p = n_histogram(&VBF::identity(4));
        assert_eq!(p.n_hist, hist(&[(1, 15)]));
        assert_eq!((p.n_hat, p.t, p.pb_count, p.quad_count, p.quad_count_deg2_only), (15, 4, 15, 15, 0));
    }

    #[test]
    fn profile_invariants_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for m in 3..=5u32 {
            let n = 1usize << m;
            for _ in 0..15 {
                let table: Vec<u16> = (0..n).map(|_| rng.random_range(0..n as u16)).collect();
                let f = VBF::new(m, table).unwrap();
                let p = n_histogram(&f);
                assert_eq!(p.n_hist.values().sum::<u32>() as usize, n - 1);
                assert_eq!(p.n_hat, (1 << p.t) - 1);
                assert_eq!(p.n_hat, n_hat(&f));
                let t_direct =
                    (1..n as u16).map(|a| v_space(&f, a).unwrap().dim()).max().unwrap();
                assert_eq!(p.t, t_direct);
            }
        }
    }

    #[test]
    fn low_degree_components_form_a_subspace() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let mut cases: Vec<VBF> = corpus_tables().into_iter().map(|(_, f)| f).collect();
        for _ in 0..10 {
            let table: Vec<u16> = (0..16).map(|_| rng.random_range(0..16)).collect();
            cases.push(VBF::new(4, table).unwrap());
        }
        for f in &cases {
            let low: BTreeSet<u16> =
                (0..16u16).filter(|&v| f.component(v).degree() <= 2).collect();
            for &a in &low {
                for &b in &low {
                    assert!(low.contains(&(a ^ b)));
                }
            }
        }
    }

    #[test]
    fn no_linear_structure_means_no_partially_bent_component() {
        // for permutations, n̂ = 0 forces every component to have trivial
        // structure space, hence none can be partially bent
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut checked = 0;
        let mut table: Vec<u16> = (0..16).collect();
        let tables = corpus_tables();
        let mut cases: Vec<&VBF> = vec![&tables[0].1];
        let mut extra = Vec::new();
        for _ in 0..200 {
            table.shuffle(&mut rng);
            extra.push(VBF::new(4, table.clone()).unwrap());
        }
        cases.extend(extra.iter());
        for f in cases {
            assert!(f.is_permutation());
            if n_hat(f) == 0 {
                checked += 1;
                assert_eq!(n_histogram(f).pb_count, 0);
            }
        }
        assert!(checked >= 1);
    }

    #[test]
    fn affine_cover_identity_and_corpus() {
        let id = VBF::identity(4);
        assert_eq!(affine_cover_check(&id, 0).unwrap_err(), LinearError::ZeroDifference);
        for a in 1..16 {
            assert!(affine_cover_check(&id, a).unwrap());
        }
        for (name, f) in corpus_tables() {
            for a in 1..16 {
                assert!(affine_cover_check(&f, a).unwrap(), "{name} a={a}");
            }
        }
    }

    #[test]
    fn affine_cover_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..200 {
            let table: Vec<u16> = (0..16).map(|_| rng.random_range(0..16)).collect();
            let f = VBF::new(4, table).unwrap();
            for a in 1..16 {
                assert!(affine_cover_check(&f, a).unwrap());
            }
        }
        // and for power functions on a larger field
        let m6 = default_modulus(6).unwrap();
        for d in [3u64, 11, 13, 23] {
            let f = VBF::power_function(d, &m6);
            for a in 1..64 {
                assert!(affine_cover_check(&f, a).unwrap());
            }
        }
    }

    #[test]
    fn profile_serializes_with_string_keys() {
        let tables = corpus_tables();
        let json = serde_json::to_string(&n_histogram(&tables[2].1)).unwrap();
        assert_eq!(
            json,
            r#"{"n_hist":{"2":1,"3":14},"n_hat":1,"t":1,"pb_count":1,"quad_count":1,"quad_count_deg2_only":1}"#
        );
    }
}
