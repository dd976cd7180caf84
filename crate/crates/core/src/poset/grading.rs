//! Rank functions, gradedness and the local (per-level) avoidance criteria.

use super::{bits, Poset, PosetError};

/// A poset together with a rank function under which every cover relation
/// raises the rank by exactly one. Ranks start at 0 and occupy a contiguous
/// range; `levels()[i]` is the vertex mask of rank `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedPoset {
    poset: Poset,
    rank: Vec<usize>,
    levels: Vec<u64>,
    strong: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    NotGraded,
    /// A rank function exists but maximal chains differ in length.
    Weak(RankedPoset),
    /// All maximal chains have the same length.
    Strong(RankedPoset),
}

impl Grading {
    pub fn ranked(&self) -> Option<&RankedPoset> {
        match self {
            Grading::NotGraded => None,
            Grading::Weak(r) | Grading::Strong(r) => Some(r),
        }
    }

    pub fn is_strong(&self) -> bool {
        matches!(self, Grading::Strong(_))
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, Grading::NotGraded)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seeing {
    pub up: bool,
    pub down: bool,
}

impl Seeing {
    pub fn all(self) -> bool {
        self.up && self.down
    }
}

impl RankedPoset {
    /// Checks the rank function: covers go up by exactly one, the minimum
    /// rank is 0 and no rank between 0 and the maximum is empty.
    pub fn new(poset: Poset, rank: Vec<usize>) -> Result<Self, PosetError> {
        if rank.len() != poset.len() {
            return Err(PosetError::InvalidRank("rank vector length differs from vertex count"));
        }
        if poset.covers().iter().any(|&(u, v)| rank[v] != rank[u] + 1) {
            return Err(PosetError::InvalidRank("a cover does not raise the rank by one"));
        }
        let height = rank.iter().max().map_or(0, |&m| m + 1);
        let mut levels = vec![0u64; height];
        for (v, &r) in rank.iter().enumerate() {
            levels[r] |= 1 << v;
        }
        if levels.contains(&0) {
            return Err(PosetError::InvalidRank("ranks are not contiguous from 0"));
        }
        let top = height.saturating_sub(1);
        let strong =
            bits(poset.minimal_mask()).all(|v| rank[v] == 0) && bits(poset.maximal_mask()).all(|v| rank[v] == top);
        Ok(RankedPoset {
            poset,
            rank,
            levels,
            strong,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Number of distinct ranks.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[u64] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> u64 {
        self.levels.get(i).copied().unwrap_or(0)
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    /// Whether `v`'s covers are the entire next level, and whether the
    /// vertices it covers are the entire previous level. Both hold vacuously
    /// at the top and bottom.
    pub fn seeing(&self, v: usize) -> Seeing {
        let r = self.rank[v];
        let up = self.poset.cover_up(v) == self.level(r + 1);
        let down = r == 0 || self.poset.cover_down(v) == self.level(r - 1);
        Seeing { up, down }
    }

    /// Every level's up-sets are totally ordered by inclusion, i.e. no
    /// edge-level contains two independent cover edges.
    pub fn upsets_nested(&self) -> bool {
        self.levels.iter().all(|&level| {
            let sets: Vec<u64> = bits(level).map(|v| self.poset.cover_up(v)).collect();
            sets.iter()
                .enumerate()
                .all(|(i, &a)| sets[i + 1..].iter().all(|&b| a & !b == 0 || b & !a == 0))
        })
    }

    fn every_level_has_all_seeing(&self) -> bool {
        self.levels
            .iter()
            .all(|&level| bits(level).any(|v| self.seeing(v).all()))
    }

    /// Level-local test for `(2+2)`-avoidance of a strongly graded poset.
    pub fn avoids_22_local(&self) -> bool {
        self.upsets_nested() && self.every_level_has_all_seeing()
    }

    /// Level-local test for `(3+1)`-avoidance of a strongly graded poset:
    /// every vertex sees fully up or down, and ranks two apart are fully
    /// comparable.
    pub fn avoids_31_local(&self) -> bool {
        let n = self.poset.len();
        let seeing_ok = (0..n).all(|v| {
            let s = self.seeing(v);
            s.up || s.down
        });
        seeing_ok
            && (0..n).all(|v| {
                let two_up = self.level(self.rank[v] + 2);
                two_up & !self.poset.up_mask(v) == 0
            })
    }

    /// Level-local test for avoiding both `(2+2)` and `(3+1)`.
    pub fn avoids_both_local(&self) -> bool {
        let n = self.poset.len();
        self.upsets_nested()
            && (0..n).all(|v| {
                let s = self.seeing(v);
                s.up || s.down
            })
            && self.every_level_has_all_seeing()
    }
}

/// Decides gradedness and returns the normalized rank function.
///
/// A strongly graded poset gets the rank "length of the longest chain below".
/// Otherwise each connected component is ranked separately, normalized to
/// start at 0.
pub fn grading(p: &Poset) -> Grading {
    let n = p.len();
    // A linear extension: u < v implies |down(u)| < |down(v)|.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| p.down_mask(v).count_ones());
    let mut depth = vec![0usize; n];
    for &v in &order {
        depth[v] = bits(p.cover_down(v)).map(|u| depth[u] + 1).max().unwrap_or(0);
    }
    let consistent = p.covers().iter().all(|&(u, v)| depth[v] == depth[u] + 1);
    let top = depth.iter().copied().max().unwrap_or(0);
    if consistent && bits(p.maximal_mask()).all(|v| depth[v] == top) {
        return match RankedPoset::new(p.clone(), depth) {
            Ok(r) => Grading::Strong(r),
            Err(_) => unreachable!("longest-chain depth is a valid rank function"),
        };
    }
    match component_ranks(p) {
        Some(rank) => match RankedPoset::new(p.clone(), rank) {
            Ok(r) => Grading::Weak(r),
            Err(_) => unreachable!("component ranks are contiguous"),
        },
        None => Grading::NotGraded,
    }
}

/// Per-component rank functions, each normalized to minimum 0, or `None`
/// if some component admits none.
fn component_ranks(p: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    let mut rank = vec![0i64; n];
    for comp in p.components() {
        let start = comp.trailing_zeros() as usize;
        let mut assigned = 1u64 << start;
        let mut stack = vec![start];
        rank[start] = 0;
        while let Some(v) = stack.pop() {
            for (nbrs, delta) in [(p.cover_up(v), 1i64), (p.cover_down(v), -1i64)] {
                for w in bits(nbrs) {
                    let want = rank[v] + delta;
                    if assigned & (1 << w) != 0 {
                        if rank[w] != want {
                            return None;
                        }
                    } else {
                        assigned |= 1 << w;
                        rank[w] = want;
                        stack.push(w);
                    }
                }
            }
        }
        let min = bits(comp).map(|v| rank[v]).min().unwrap_or(0);
        for v in bits(comp) {
            rank[v] -= min;
        }
    }
    Some(rank.into_iter().map(|r| r as usize).collect())
}

/// Number of rank functions of `p` with image exactly `{0, .., h-1}` for
/// some `h`. Each component's ranks are fixed up to a shift, so this counts
/// the shift vectors whose level ranges cover an initial segment without
/// gaps. Zero when `p` is not graded; one for the empty poset.
pub fn contiguous_rank_function_count(p: &Poset) -> u64 {
    let Some(rank) = component_ranks(p) else {
        return 0;
    };
    let heights: Vec<usize> = p
        .components()
        .into_iter()
        .map(|c| bits(c).map(|v| rank[v]).max().unwrap_or(0) + 1)
        .collect();
    let total: usize = heights.iter().sum();
    let mut shifts = vec![0usize; heights.len()];
    count_shifts(&heights, total, 0, &mut shifts)
}

fn count_shifts(heights: &[usize], total: usize, i: usize, shifts: &mut Vec<usize>) -> u64 {
    if i == heights.len() {
        if heights.is_empty() {
            return 1;
        }
        let top = heights.iter().zip(shifts.iter()).map(|(h, s)| h + s).max().unwrap_or(0);
        let mut covered = vec![false; top];
        for (h, &s) in heights.iter().zip(shifts.iter()) {
            for c in covered.iter_mut().skip(s).take(*h) {
                *c = true;
            }
        }
        return u64::from(covered.iter().all(|&c| c));
    }
    let mut acc = 0;
    for s in 0..=total - heights[i] {
        shifts[i] = s;
        acc += count_shifts(heights, total, i + 1, shifts);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strong_ranks(p: &Poset) -> Vec<usize> {
        match grading(p) {
            Grading::Strong(r) => r.ranks().to_vec(),
            other => panic!("expected strong, got {other:?}"),
        }
    }

    #[test]
    fn chains_are_strong() {
        for n in 0..5 {
            let g = grading(&Poset::chain(n));
            assert!(g.is_strong());
            assert_eq!(g.ranked().unwrap().height(), n);
        }
    }

    #[test]
    fn empty_and_single_vertex_heights() {
        assert_eq!(grading(&Poset::empty()).ranked().unwrap().height(), 0);
        assert_eq!(grading(&Poset::antichain(1)).ranked().unwrap().height(), 1);
    }

    #[test]
    fn weak_not_strong() {
        // 0 < 1, 0 < 2 < 3: the chain through 1 stops a level early.
        let p = Poset::build(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        match grading(&p) {
            Grading::Weak(r) => assert_eq!(r.ranks(), &[0, 1, 1, 2]),
            other => panic!("{other:?}"),
        }
        // chain plus isolated point: component-wise ranks
        match grading(&Poset::chain_sum(&[2, 1])) {
            Grading::Weak(r) => assert_eq!(r.ranks(), &[0, 1, 0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pentagon_not_graded() {
        let p = Poset::build(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert_eq!(grading(&p), Grading::NotGraded);
    }

    #[test]
    fn two_plus_two_is_strong() {
        assert_eq!(strong_ranks(&Poset::chain_sum(&[2, 2])), vec![0, 1, 0, 1]);
    }

    #[test]
    fn ranked_poset_validation() {
        let p = Poset::chain(2);
        assert!(RankedPoset::new(p.clone(), vec![0, 2]).is_err());
        assert!(RankedPoset::new(p.clone(), vec![0]).is_err());
        assert!(RankedPoset::new(Poset::antichain(2), vec![0, 2]).is_err());
        assert!(RankedPoset::new(p, vec![0, 1]).unwrap().is_strong());
    }

    #[test]
    fn seeing_vacuous_cases() {
        let single = RankedPoset::new(Poset::antichain(1), vec![0]).unwrap();
        assert_eq!(single.seeing(0), Seeing { up: true, down: true });
        let chain = RankedPoset::new(Poset::chain(2), vec![0, 1]).unwrap();
        assert_eq!(chain.seeing(0), Seeing { up: true, down: true });
        assert_eq!(chain.seeing(1), Seeing { up: true, down: true });
    }

    #[test]
    fn local_checks_on_small_cases() {
        let chain = RankedPoset::new(Poset::chain(4), vec![0, 1, 2, 3]).unwrap();
        assert!(chain.avoids_22_local() && chain.avoids_31_local() && chain.avoids_both_local());
        let twotwo = RankedPoset::new(Poset::chain_sum(&[2, 2]), vec![0, 1, 0, 1]).unwrap();
        assert!(!twotwo.avoids_22_local());
        assert!(!twotwo.avoids_both_local());
        let anti = RankedPoset::new(Poset::antichain(3), vec![0, 0, 0]).unwrap();
        assert!(anti.avoids_31_local());
    }

    #[test]
    fn rank_function_counts() {
        assert_eq!(contiguous_rank_function_count(&Poset::empty()), 1);
        assert_eq!(contiguous_rank_function_count(&Poset::chain(3)), 1);
        // two isolated points: same level, or either one above the other
        assert_eq!(contiguous_rank_function_count(&Poset::antichain(2)), 3);
        // ordered set partitions of three points
        assert_eq!(contiguous_rank_function_count(&Poset::antichain(3)), 13);
        let pentagon = Poset::build(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert_eq!(contiguous_rank_function_count(&pentagon), 0);
    }
}
