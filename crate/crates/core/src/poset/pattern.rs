//! Chain-sum patterns `(a1 + ... + am)` and their containment tests.

use std::fmt;

use super::{bits, Poset, PosetError, RankedPoset};

/// A disjoint union of chains with `parts[i]` elements each, optionally
/// pinned to relative ranks `offsets[i]` (grade containment).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainSumPattern {
    parts: Vec<usize>,
    offsets: Option<Vec<usize>>,
}

impl ChainSumPattern {
    pub fn new(parts: Vec<usize>) -> Result<Self, PosetError> {
        if parts.is_empty() {
            return Err(PosetError::InvalidPattern("pattern needs at least one chain"));
        }
        if parts.contains(&0) {
            return Err(PosetError::InvalidPattern("chain lengths must be positive"));
        }
        Ok(ChainSumPattern { parts, offsets: None })
    }

    /// Offsets are normalized: their minimum must be 0.
    pub fn with_offsets(parts: Vec<usize>, offsets: Vec<usize>) -> Result<Self, PosetError> {
        let mut p = Self::new(parts)?;
        if offsets.len() != p.parts.len() {
            return Err(PosetError::InvalidPattern("one offset per chain required"));
        }
        if offsets.iter().min() != Some(&0) {
            return Err(PosetError::InvalidPattern("minimum offset must be 0"));
        }
        p.offsets = Some(offsets);
        Ok(p)
    }

    /// `(2+2)`
    pub fn two_plus_two() -> Self {
        Self::new(vec![2, 2]).expect("valid pattern")
    }

    /// `(3+1)`
    pub fn three_plus_one() -> Self {
        Self::new(vec![3, 1]).expect("valid pattern")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn offsets(&self) -> Option<&[usize]> {
        self.offsets.as_deref()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_poset(&self) -> Poset {
        Poset::chain_sum(&self.parts)
    }
}

impl fmt::Display for ChainSumPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = match &self.offsets {
            None => self.parts.iter().map(|a| a.to_string()).collect(),
            Some(off) => self.parts.iter().zip(off).map(|(a, b)| format!("{a}[{b}]")).collect(),
        };
        write!(f, "({})", terms.join("+"))
    }
}

/// Exhaustive search for vertex-disjoint, pairwise incomparable chains of the
/// pattern's lengths. Offsets, if any, are ignored.
pub fn contains(p: &Poset, pattern: &ChainSumPattern) -> bool {
    let remaining: usize = pattern.size();
    place_free(p, &pattern.parts, p.vertex_mask(), remaining)
}

fn place_free(p: &Poset, parts: &[usize], allowed: u64, remaining: usize) -> bool {
    let Some((&len, rest)) = parts.split_first() else {
        return true;
    };
    if (allowed.count_ones() as usize) < remaining {
        return false;
    }
    bits(allowed).any(|start| {
        extend_free(
            p,
            len - 1,
            start,
            allowed,
            allowed & p.incomparable_mask(start),
            &mut |next_allowed| place_free(p, rest, next_allowed, remaining - len),
        )
    })
}

/// Extends a chain ending at `last` by `more` elements drawn from `allowed`;
/// `cross` is `allowed` minus everything comparable to the chain so far.
fn extend_free(p: &Poset, more: usize, last: usize, allowed: u64, cross: u64, k: &mut dyn FnMut(u64) -> bool) -> bool {
    if more == 0 {
        return k(cross);
    }
    bits(p.up_mask(last) & allowed).any(|w| extend_free(p, more - 1, w, allowed, cross & p.incomparable_mask(w), k))
}

/// Grade containment: chain `i` must occupy consecutive ranks starting at
/// `offsets[i] + b` for one common shift `b`, consecutive elements being
/// covers. A pattern without offsets is read with all offsets 0.
pub fn grade_contains(rp: &RankedPoset, pattern: &ChainSumPattern) -> bool {
    let zeros = vec![0; pattern.parts.len()];
    let offsets = pattern.offsets().unwrap_or(&zeros);
    let reach = pattern.parts.iter().zip(offsets).map(|(a, b)| a + b).max().unwrap_or(0);
    if reach > rp.height() {
        return false;
    }
    let all = rp.poset().vertex_mask();
    (0..=rp.height() - reach).any(|shift| {
        let starts: Vec<usize> = offsets.iter().map(|b| b + shift).collect();
        place_graded(rp, &pattern.parts, &starts, all)
    })
}

fn place_graded(rp: &RankedPoset, parts: &[usize], starts: &[usize], allowed: u64) -> bool {
    let Some((&len, rest)) = parts.split_first() else {
        return true;
    };
    let p = rp.poset();
    bits(rp.level(starts[0]) & allowed).any(|v| {
        extend_graded(rp, len - 1, v, allowed, allowed & p.incomparable_mask(v), &mut |next| {
            place_graded(rp, rest, &starts[1..], next)
        })
    })
}

fn extend_graded(
    rp: &RankedPoset,
    more: usize,
    last: usize,
    allowed: u64,
    cross: u64,
    k: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if more == 0 {
        return k(cross);
    }
    let p = rp.poset();
    bits(p.cover_up(last) & allowed).any(|w| extend_graded(rp, more - 1, w, allowed, cross & p.incomparable_mask(w), k))
}

/// The finite list of graded patterns `x[bx] + y[by]` with `min(bx, by) = 0`,
/// `bx < y` and `by < x` whose joint avoidance is equivalent to avoiding
/// `(x + y)` in a strongly graded poset.
pub fn locality_offsets(x: usize, y: usize) -> Vec<ChainSumPattern> {
    let mut out = Vec::new();
    for bx in 0..y {
        for by in 0..x {
            if bx.min(by) == 0 {
                out.push(ChainSumPattern::with_offsets(vec![x, y], vec![bx, by]).expect("normalized offsets"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_validation_and_display() {
        assert!(ChainSumPattern::new(vec![]).is_err());
        assert!(ChainSumPattern::new(vec![2, 0]).is_err());
        assert!(ChainSumPattern::with_offsets(vec![2, 2], vec![1, 1]).is_err());
        assert!(ChainSumPattern::with_offsets(vec![2, 2], vec![0]).is_err());
        assert_eq!(ChainSumPattern::two_plus_two().to_string(), "(2+2)");
        let g = ChainSumPattern::with_offsets(vec![2, 2], vec![0, 1]).unwrap();
        assert_eq!(g.to_string(), "(2[0]+2[1])");
    }

    #[test]
    fn self_containment() {
        for parts in [vec![2, 2], vec![3, 1], vec![2, 1], vec![1, 1, 1]] {
            let pat = ChainSumPattern::new(parts).unwrap();
            assert!(contains(&pat.to_poset(), &pat), "{pat}");
        }
        assert!(!contains(&Poset::chain(4), &ChainSumPattern::two_plus_two()));
        assert!(!contains(&Poset::chain_sum(&[3]), &ChainSumPattern::three_plus_one()));
        assert!(contains(&Poset::chain_sum(&[3, 2]), &ChainSumPattern::three_plus_one()));
    }

    #[test]
    fn grade_containment_basics() {
        let twotwo = RankedPoset::new(Poset::chain_sum(&[2, 2]), vec![0, 1, 0, 1]).unwrap();
        let same = ChainSumPattern::with_offsets(vec![2, 2], vec![0, 0]).unwrap();
        let skew = ChainSumPattern::with_offsets(vec![2, 2], vec![0, 1]).unwrap();
        assert!(grade_contains(&twotwo, &same));
        assert!(!grade_contains(&twotwo, &skew));
        let chain = RankedPoset::new(Poset::chain(5), (0..5).collect()).unwrap();
        for pat in locality_offsets(2, 2).into_iter().chain(locality_offsets(3, 1)) {
            assert!(!grade_contains(&chain, &pat));
        }
    }

    #[test]
    fn offset_lists() {
        let names = |v: Vec<ChainSumPattern>| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(
            names(locality_offsets(2, 2)),
            vec!["(2[0]+2[0])", "(2[0]+2[1])", "(2[1]+2[0])"]
        );
        assert_eq!(
            names(locality_offsets(3, 1)),
            vec!["(3[0]+1[0])", "(3[0]+1[1])", "(3[0]+1[2])"]
        );
    }
}
