//! GF(2) linear algebra over m-bit vectors: spans, affine hulls, coset
//! tests, and orthogonal complements.
//!
//! Everything is kept in canonical form — reduced row echelon bases and
//! hull-reduced offsets — so equality of subspaces and of affine subspaces
//! is plain structural equality.

use thiserror::Error;

/// Errors from affine-set operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("operation requires a nonempty point set")]
    EmptyPointSet,
}

/// A linear subspace of F₂ᵐ as a reduced-row-echelon basis: leading bits
/// strictly decrease and each leading bit is cleared in every other vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    m: u32,
    vectors: Vec<u16>,
}

impl SubspaceBasis {
    /// Ambient dimension.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> u32 {
        self.vectors.len() as u32
    }

    /// Basis vectors in canonical order (decreasing leading bit).
    pub fn vectors(&self) -> &[u16] {
        &self.vectors
    }

    /// Number of elements, 2^dim.
    pub fn size(&self) -> usize {
        1usize << self.vectors.len()
    }

    /// Reduces v modulo the span: the residue is 0 iff v is in the subspace.
    pub fn reduce(&self, mut v: u16) -> u16 {
        for &b in &self.vectors {
            let lead = 15 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    /// Membership test.
    pub fn contains(&self, v: u16) -> bool {
        self.reduce(v) == 0
    }

    /// All 2^dim elements of the subspace, sorted ascending.
    pub fn elements(&self) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.size());
        for mask in 0..self.size() {
            let mut v = 0u16;
            for (i, &b) in self.vectors.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v ^= b;
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        out
    }
}

/// An affine subspace offset ⊕ span(basis), with the offset reduced modulo
/// the span so equal affine subspaces compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSubspace {
    offset: u16,
    basis: SubspaceBasis,
}

impl AffineSubspace {
    /// Builds from any representative point and a basis, canonicalizing the
    /// offset.
    pub fn new(offset: u16, basis: SubspaceBasis) -> Self {
        let offset = basis.reduce(offset);
        AffineSubspace { offset, basis }
    }

    /// Canonical offset (the unique representative reduced mod the span).
    pub fn offset(&self) -> u16 {
        self.offset
    }

    /// Direction subspace.
    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    /// Dimension of the direction space.
    pub fn dim(&self) -> u32 {
        self.basis.dim()
    }

    /// Number of points, 2^dim.
    pub fn size(&self) -> usize {
        self.basis.size()
    }

    /// Membership test.
    pub fn contains(&self, v: u16) -> bool {
        self.basis.contains(v ^ self.offset)
    }
}

/// Canonical basis of the linear span of the given vectors.
pub fn span(m: u32, vectors: &[u16]) -> SubspaceBasis {
    // forward elimination: keep one vector per leading bit
    let mut rows: [u16; 16] = [0; 16];
    for &v in vectors {
        let mut cur = v;
        while cur != 0 {
            let lead = (15 - cur.leading_zeros()) as usize;
            if rows[lead] == 0 {
                rows[lead] = cur;
                break;
            }
            cur ^= rows[lead];
        }
    }
    // back-substitution: clear each leading bit from all other rows
    for lead in 0..16 {
        if rows[lead] == 0 {
            continue;
        }
        for other in lead + 1..16 {
            if rows[other] != 0 && rows[other] >> lead & 1 == 1 {
                rows[other] ^= rows[lead];
            }
        }
    }
    let vectors = (0..16).rev().filter(|&i| rows[i] != 0).map(|i| rows[i]).collect();
    SubspaceBasis { m, vectors }
}

/// The smallest affine subspace containing the given nonempty point set:
/// offset = any point, direction = span of pairwise differences.
pub fn affine_hull(m: u32, points: &[u16]) -> Result<AffineSubspace, LinalgError> {
    let &p0 = points.first().ok_or(LinalgError::EmptyPointSet)?;
    let diffs: Vec<u16> = points.iter().map(|&p| p ^ p0).collect();
    Ok(AffineSubspace::new(p0, span(m, &diffs)))
}

/// True iff the set fills its own affine hull, i.e. it is a coset of a
/// linear subspace. Duplicates in the input are ignored.
pub fn is_coset(m: u32, points: &[u16]) -> Result<bool, LinalgError> {
    let hull = affine_hull(m, points)?;
    let mut seen = vec![false; 1usize << m];
    let mut distinct = 0usize;
    for &p in points {
        if !seen[p as usize] {
            seen[p as usize] = true;
            distinct += 1;
        }
    }
    Ok(distinct == hull.size())
}

/// Basis of {w : ⟨w,v⟩ = 0 for every v in b} under the standard dot product
/// on bit vectors; dim(b) + dim(result) = m.
pub fn ortho_complement(b: &SubspaceBasis) -> SubspaceBasis {
    let m = b.m;
    // pivot positions of the RREF rows
    let pivots: Vec<u32> = b.vectors.iter().map(|&v| 15 - v.leading_zeros()).collect();
    let is_pivot = |j: u32| pivots.contains(&j);
    // one solution per free coordinate: set that coordinate, fix pivots by
    // the orthogonality equations (RREF makes each equation solvable for its
    // own pivot bit)
    let mut gens = Vec::new();
    for j in 0..m {
        if is_pivot(j) {
            continue;
        }
        let mut w = 1u16 << j;
        for (row, &p) in b.vectors.iter().zip(&pivots) {
            if row >> j & 1 == 1 {
                w ^= 1 << p;
            }
        }
        gens.push(w);
    }
    span(m, &gens)
}
