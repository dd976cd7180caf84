//! Finite posets on vertices `0..n`, stored as strict-order bitmasks.
//!
//! `up[v]` holds every vertex strictly above `v` and `down[v]` every vertex
//! strictly below, so containment, cover and comparability queries are a few
//! mask operations. Vertex counts are capped at [`MAX_VERTICES`].

mod canon;
mod grading;
mod pattern;
mod text;

pub use canon::{automorphism_count, automorphisms, canonical_form, canonical_labeling, CanonicalForm};
pub use grading::{contiguous_rank_function_count, grading, Grading, RankedPoset, Seeing};
pub use pattern::{contains, grade_contains, locality_offsets, ChainSumPattern};

use std::fmt;

use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a poset on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cover relations contain a cycle")]
    CycleDetected,
    #[error("relation is not a strict partial order: {0}")]
    NotAnOrder(&'static str),
    #[error("invalid rank function: {0}")]
    InvalidRank(&'static str),
    #[error("invalid chain-sum pattern: {0}")]
    InvalidPattern(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Iterates the set bits of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Poset {
    pub fn empty() -> Self {
        Poset {
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    /// Transitive closure of the given cover pairs `(u, v)`, meaning `u < v`.
    /// Duplicate pairs and pairs implied by transitivity are accepted.
    pub fn build(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_VERTICES {
            return Err(PosetError::TooManyVertices(n));
        }
        let mut up = vec![0u64; n];
        for &(u, v) in covers {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(PosetError::VertexOutOfRange { vertex, n });
                }
            }
            up[u] |= 1 << v;
        }
        for k in 0..n {
            let above_k = up[k];
            for row in up.iter_mut() {
                if *row & (1 << k) != 0 {
                    *row |= above_k;
                }
            }
        }
        if (0..n).any(|v| up[v] & (1 << v) != 0) {
            return Err(PosetError::CycleDetected);
        }
        Ok(Self::from_up_unchecked(up))
    }

    /// Takes `up[v]` = mask of vertices strictly above `v` and checks that it
    /// describes a strict partial order.
    pub fn from_up_masks(up: Vec<u64>) -> Result<Self, PosetError> {
        let n = up.len();
        if n > MAX_VERTICES {
            return Err(PosetError::TooManyVertices(n));
        }
        let all = full_mask(n);
        for (v, &m) in up.iter().enumerate() {
            if m & !all != 0 {
                return Err(PosetError::VertexOutOfRange {
                    vertex: 63 - m.leading_zeros() as usize,
                    n,
                });
            }
            if m & (1 << v) != 0 {
                return Err(PosetError::NotAnOrder("relation is reflexive"));
            }
            if bits(m).any(|w| up[w] & !m != 0) {
                return Err(PosetError::NotAnOrder("relation is not transitive"));
            }
            if bits(m).any(|w| up[w] & (1 << v) != 0) {
                return Err(PosetError::NotAnOrder("relation is not antisymmetric"));
            }
        }
        Ok(Self::from_up_unchecked(up))
    }

    pub(crate) fn from_up_unchecked(up: Vec<u64>) -> Self {
        let n = up.len();
        let mut down = vec![0u64; n];
        for (u, &m) in up.iter().enumerate() {
            for v in bits(m) {
                down[v] |= 1 << u;
            }
        }
        Poset { up, down }
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::build(n, &covers).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Self::build(n, &[]).expect("antichain is valid")
    }

    /// Disjoint union of chains of the given lengths, e.g. `[2, 2]` is `(2+2)`.
    pub fn chain_sum(parts: &[usize]) -> Self {
        parts
            .iter()
            .fold(Self::empty(), |acc, &len| acc.disjoint_union(&Self::chain(len)))
    }

    /// `self` followed by a shifted copy of `other`, with no relations between.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.len();
        let mut up = self.up.clone();
        up.extend(other.up.iter().map(|&m| m << shift));
        Self::from_up_unchecked(up)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.len())
    }

    /// `u < v`
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.up[u] & (1 << v) != 0
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        u == v || self.lt(u, v) || self.lt(v, u)
    }

    pub fn up_mask(&self, v: usize) -> u64 {
        self.up[v]
    }

    pub fn down_mask(&self, v: usize) -> u64 {
        self.down[v]
    }

    pub fn up_masks(&self) -> &[u64] {
        &self.up
    }

    /// Vertices other than `v` that are incomparable to `v`.
    pub fn incomparable_mask(&self, v: usize) -> u64 {
        self.vertex_mask() & !(self.up[v] | self.down[v] | (1 << v))
    }

    /// Vertices covering `v`.
    pub fn cover_up(&self, v: usize) -> u64 {
        let above = self.up[v];
        let mut indirect = 0;
        for w in bits(above) {
            indirect |= self.up[w];
        }
        above & !indirect
    }

    /// Vertices covered by `v`.
    pub fn cover_down(&self, v: usize) -> u64 {
        let below = self.down[v];
        let mut indirect = 0;
        for w in bits(below) {
            indirect |= self.down[w];
        }
        below & !indirect
    }

    /// All cover pairs `(u, v)` with `u` covered by `v`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| bits(self.cover_up(u)).map(move |v| (u, v)))
            .collect()
    }

    pub fn minimal_mask(&self) -> u64 {
        (0..self.len())
            .filter(|&v| self.down[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    pub fn maximal_mask(&self) -> u64 {
        (0..self.len()).filter(|&v| self.up[v] == 0).fold(0, |m, v| m | 1 << v)
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.len();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut up = vec![0u64; n];
        for u in 0..n {
            let mut m = 0u64;
            for v in bits(self.up[u]) {
                m |= 1 << perm[v];
            }
            up[perm[u]] = m;
        }
        Self::from_up_unchecked(up)
    }

    /// Induced subposet on `mask`; vertices keep their relative order.
    /// Returns the subposet and, for each new vertex, its old index.
    pub fn induced(&self, mask: u64) -> (Self, Vec<usize>) {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let up = keep
            .iter()
            .map(|&old| bits(self.up[old] & mask).fold(0u64, |m, w| m | 1 << index[w]))
            .collect();
        (Self::from_up_unchecked(up), keep)
    }

    pub fn remove_vertex(&self, v: usize) -> Self {
        self.induced(self.vertex_mask() & !(1 << v)).0
    }

    /// Connected components of the comparability graph, as vertex masks in
    /// order of their smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.up[v] | self.down[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|v| self.incomparable_mask(v) == 0)
    }

    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|&m| m == 0)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}; {:?})", self.len(), self.covers())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let chain = Poset::build(2, &[(0, 1)]).unwrap();
        assert!(chain.lt(0, 1) && !chain.lt(1, 0));
        assert!(chain.is_chain());
        let anti = Poset::build(2, &[]).unwrap();
        assert!(anti.is_antichain());
        assert_eq!(
            Poset::build(2, &[(0, 1), (1, 0)]).unwrap_err(),
            PosetError::CycleDetected
        );
        assert_eq!(Poset::build(2, &[(0, 0)]).unwrap_err(), PosetError::CycleDetected);
        assert_eq!(
            Poset::build(2, &[(0, 2)]).unwrap_err(),
            PosetError::VertexOutOfRange { vertex: 2, n: 2 }
        );
        // duplicates and implied pairs are fine
        let p = Poset::build(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn transitive_closure() {
        let p = Poset::build(4, &[(2, 3), (1, 2), (0, 1)]).unwrap();
        assert!(p.lt(0, 3));
        assert_eq!(p.relation_count(), 6);
    }

    #[test]
    fn from_up_masks_validates() {
        assert!(Poset::from_up_masks(vec![0b10, 0]).is_ok());
        assert!(Poset::from_up_masks(vec![0b1]).is_err());
        // 0<1, 1<2 but not 0<2
        assert!(Poset::from_up_masks(vec![0b010, 0b100, 0]).is_err());
    }

    #[test]
    fn covers_and_extremes() {
        let p = Poset::chain_sum(&[2, 1]);
        assert_eq!(p.covers(), vec![(0, 1)]);
        assert_eq!(p.minimal_mask(), 0b101);
        assert_eq!(p.maximal_mask(), 0b110);
        assert_eq!(p.components(), vec![0b011, 0b100]);
    }

    #[test]
    fn relabel_and_induce() {
        let p = Poset::chain(3);
        let q = p.relabel(&[2, 1, 0]);
        assert!(q.lt(2, 1) && q.lt(1, 0));
        let (sub, keep) = p.induced(0b101);
        assert_eq!(keep, vec![0, 2]);
        assert_eq!(sub, Poset::chain(2));
    }
}
