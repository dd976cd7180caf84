//! Canonical forms and automorphism groups by pruned brute force.
//!
//! Vertices are first split by an isomorphism invariant (longest chain below
//! and above, number of elements below and above); only permutations that
//! keep those classes in a fixed order are tried. That is plenty for the
//! oracle's sizes (n <= 9), not for large posets.

use std::cmp::Ordering;

use super::{bits, Poset};

/// Minimal relation encoding over all invariant-respecting labelings; equal
/// iff the posets are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn invariants(p: &Poset) -> Vec<u64> {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| p.down_mask(v).count_ones());
    let mut below = vec![0u64; n];
    for &v in &order {
        below[v] = bits(p.down_mask(v)).map(|u| below[u] + 1).max().unwrap_or(0);
    }
    let mut above = vec![0u64; n];
    for &v in order.iter().rev() {
        above[v] = bits(p.up_mask(v)).map(|u| above[u] + 1).max().unwrap_or(0);
    }
    (0..n)
        .map(|v| {
            below[v] << 48
                | above[v] << 32
                | u64::from(p.down_mask(v).count_ones()) << 16
                | u64::from(p.up_mask(v).count_ones())
        })
        .collect()
}

/// Relations between the vertex placed at position `k` and the earlier ones.
fn block(p: &Poset, placed: &[usize], v: usize) -> u128 {
    let mut b = 0u128;
    for (i, &u) in placed.iter().enumerate() {
        if p.lt(u, v) {
            b |= 1 << (2 * i);
        }
        if p.lt(v, u) {
            b |= 1 << (2 * i + 1);
        }
    }
    b
}

struct CanonSearch<'a> {
    p: &'a Poset,
    slot_invariant: Vec<u64>,
    invariant: Vec<u64>,
    placed: Vec<usize>,
    blocks: Vec<u128>,
    best: Option<(Vec<u128>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn prefix_cmp(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some((best, _)) => self.blocks.as_slice().cmp(&best[..self.blocks.len()]),
        }
    }

    fn run(&mut self, used: u64) {
        let k = self.placed.len();
        if k == self.p.len() {
            if self.prefix_cmp() == Ordering::Less {
                self.best = Some((self.blocks.clone(), self.placed.clone()));
            }
            return;
        }
        let want = self.slot_invariant[k];
        for v in bits(self.p.vertex_mask() & !used) {
            if self.invariant[v] != want {
                continue;
            }
            let b = block(self.p, &self.placed, v);
            self.blocks.push(b);
            if self.prefix_cmp() != Ordering::Greater {
                self.placed.push(v);
                self.run(used | 1 << v);
                self.placed.pop();
            }
            self.blocks.pop();
        }
    }
}

/// The labeling behind [`canonical_form`]: `result[v]` is the canonical
/// position of vertex `v`.
pub fn canonical_labeling(p: &Poset) -> Vec<usize> {
    let invariant = invariants(p);
    let mut slot_invariant = invariant.clone();
    slot_invariant.sort_unstable();
    let mut search = CanonSearch {
        p,
        slot_invariant,
        invariant,
        placed: Vec::with_capacity(p.len()),
        blocks: Vec::with_capacity(p.len()),
        best: None,
    };
    search.run(0);
    let (_, order) = search.best.expect("every poset has a labeling");
    let mut position = vec![0; p.len()];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    position
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    let q = p.relabel(&canonical_labeling(p));
    let n = q.len();
    let mut bytes = Vec::with_capacity(1 + n * 8);
    bytes.push(n as u8);
    for &m in q.up_masks() {
        bytes.extend_from_slice(&m.to_le_bytes()[..n.div_ceil(8)]);
    }
    CanonicalForm(bytes)
}

fn search_automorphisms(
    p: &Poset,
    invariant: &[u64],
    image: &mut Vec<usize>,
    used: u64,
    visit: &mut dyn FnMut(&[usize]),
) {
    let i = image.len();
    if i == p.len() {
        visit(image);
        return;
    }
    for w in bits(p.vertex_mask() & !used) {
        if invariant[w] != invariant[i] {
            continue;
        }
        let ok = (0..i).all(|j| p.lt(j, i) == p.lt(image[j], w) && p.lt(i, j) == p.lt(w, image[j]));
        if ok {
            image.push(w);
            search_automorphisms(p, invariant, image, used | 1 << w, visit);
            image.pop();
        }
    }
}

/// Every automorphism as a vertex map `v -> result[v]`, identity first.
pub fn automorphisms(p: &Poset) -> Vec<Vec<usize>> {
    let invariant = invariants(p);
    let mut out = Vec::new();
    search_automorphisms(p, &invariant, &mut Vec::with_capacity(p.len()), 0, &mut |g| {
        out.push(g.to_vec())
    });
    out.sort();
    out
}

pub fn automorphism_count(p: &Poset) -> u64 {
    let invariant = invariants(p);
    let mut count = 0;
    search_automorphisms(p, &invariant, &mut Vec::with_capacity(p.len()), 0, &mut |_| count += 1);
    count
}
