//! Cloning, decloning, seeds and the substitutions relating seed, unlabeled
//! and labeled generating functions.
//!
//! Two incomparable vertices are exchangeable when every other vertex relates
//! to both in the same way. Cloning adds a new vertex exchangeable with a
//! given one, decloning deletes one of an exchangeable pair, and a seed is a
//! poset with no exchangeable pair. Every poset declones to a unique seed;
//! the posets that declone to a given seed are its sprouts.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numbers::rational;
use crate::poset::{automorphism_count, automorphisms, bits, Poset};
use crate::series::{NamedSeries, PowerSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("vertex {0} has no exchangeable partner")]
    NotExchangeable(usize),
    #[error("vertex {vertex} out of range for a poset on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("poset has an exchangeable pair and is not a seed")]
    NotASeed,
    #[error("poset already has the maximum number of vertices")]
    TooManyVertices,
}

/// Unordered pairs `(u, v)`, `u < v`, of exchangeable vertices in
/// lexicographic order.
pub fn exchangeable_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if exchangeable(p, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn exchangeable(p: &Poset, u: usize, v: usize) -> bool {
    u != v && p.up_mask(u) == p.up_mask(v) && p.down_mask(u) == p.down_mask(v)
}

pub fn is_seed(p: &Poset) -> bool {
    let n = p.len();
    (0..n).all(|u| (u + 1..n).all(|v| !exchangeable(p, u, v)))
}

/// Adds vertex `p.len()` as an exchangeable copy of `v`.
pub fn clone_vertex(p: &Poset, v: usize) -> Result<Poset, SeedError> {
    let n = p.len();
    if v >= n {
        return Err(SeedError::VertexOutOfRange { vertex: v, n });
    }
    if n >= crate::poset::MAX_VERTICES {
        return Err(SeedError::TooManyVertices);
    }
    let mut up: Vec<u64> = p.up_masks().to_vec();
    for w in bits(p.down_mask(v)) {
        up[w] |= 1 << n;
    }
    up.push(p.up_mask(v));
    Ok(Poset::from_up_masks(up).expect("cloning preserves the order axioms"))
}

/// Removes `v`, which must have an exchangeable partner. Higher vertices shift
/// down by one.
pub fn declone(p: &Poset, v: usize) -> Result<Poset, SeedError> {
    let n = p.len();
    if v >= n {
        return Err(SeedError::VertexOutOfRange { vertex: v, n });
    }
    if !(0..n).any(|u| exchangeable(p, u, v)) {
        return Err(SeedError::NotExchangeable(v));
    }
    Ok(p.remove_vertex(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedDecomposition {
    pub seed: Poset,
    /// `multiplicity[s]` is the number of original vertices merged into seed
    /// vertex `s`.
    pub multiplicity: Vec<usize>,
    /// `origin[v]` is the seed vertex that original vertex `v` merged into.
    pub origin: Vec<usize>,
}

/// Declones until a seed remains, always removing the larger vertex of the
/// lexicographically first exchangeable pair.
pub fn seed_of(p: &Poset) -> SeedDecomposition {
    let mut current = p.clone();
    // ids[i] = original vertex currently sitting at position i
    let mut ids: Vec<usize> = (0..p.len()).collect();
    let mut merged_into: Vec<usize> = (0..p.len()).collect();
    while let Some(&(u, v)) = exchangeable_pairs(&current).first() {
        merged_into[ids[v]] = ids[u];
        ids.remove(v);
        current = current.remove_vertex(v);
    }
    let position: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut origin = vec![0; p.len()];
    let mut multiplicity = vec![0; current.len()];
    for v in 0..p.len() {
        let mut r = v;
        while merged_into[r] != r {
            r = merged_into[r];
        }
        origin[v] = position[&r];
        multiplicity[origin[v]] += 1;
    }
    SeedDecomposition {
        seed: current,
        multiplicity,
        origin,
    }
}

/// Clones seed vertex `s` until it has `multiplicity[s]` copies.
///
/// # Panics
/// If `multiplicity` has the wrong length or a zero entry.
pub fn sprout(seed: &Poset, multiplicity: &[usize]) -> Result<Poset, SeedError> {
    assert_eq!(multiplicity.len(), seed.len(), "one multiplicity per seed vertex");
    assert!(multiplicity.iter().all(|&m| m > 0), "multiplicities must be positive");
    let mut p = seed.clone();
    for (s, &m) in multiplicity.iter().enumerate() {
        for _ in 1..m {
            p = clone_vertex(&p, s)?;
        }
    }
    Ok(p)
}

/// Trivial automorphism group.
pub fn is_primitive(p: &Poset) -> bool {
    automorphism_count(p) == 1
}

/// Which generating function a substitution starts from and produces. Seed
/// series are ordinary series counting unlabeled seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `E(x) = S(e^x - 1)`
    SeedToEgf,
    /// `O(x) = S(x / (1 - x))`
    SeedToOgf,
    /// `E(x) = O(1 - e^{-x})`
    OgfToEgf,
    /// `O(x) = E(-log(1 - x))`
    EgfToOgf,
    /// `S(x) = E(log(1 + x))`
    EgfToSeed,
    /// `S(x) = O(x / (1 + x))`
    OgfToSeed,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::SeedToEgf,
        Direction::SeedToOgf,
        Direction::OgfToEgf,
        Direction::EgfToOgf,
        Direction::EgfToSeed,
        Direction::OgfToSeed,
    ];

    pub fn inner(self) -> NamedSeries {
        match self {
            Direction::SeedToEgf => NamedSeries::ExpMinusOne,
            Direction::SeedToOgf => NamedSeries::Geom,
            Direction::OgfToEgf => NamedSeries::OneMinusExpNeg,
            Direction::EgfToOgf => NamedSeries::NegLogOneMinus,
            Direction::EgfToSeed => NamedSeries::LogOnePlus,
            Direction::OgfToSeed => NamedSeries::GeomInverse,
        }
    }

    pub fn inverse(self) -> Direction {
        match self {
            Direction::SeedToEgf => Direction::EgfToSeed,
            Direction::SeedToOgf => Direction::OgfToSeed,
            Direction::OgfToEgf => Direction::EgfToOgf,
            Direction::EgfToOgf => Direction::OgfToEgf,
            Direction::EgfToSeed => Direction::SeedToEgf,
            Direction::OgfToSeed => Direction::SeedToOgf,
        }
    }
}

/// Substitutes the direction's inner series. Exact for gardens whose seeds
/// are all primitive.
pub fn trictionary(series: &PowerSeries, direction: Direction) -> Result<PowerSeries, SeriesError> {
    series.compose(&PowerSeries::named(direction.inner(), series.order()))
}

/// `(1/|G|) * sum over g of p_{cycle type of g}`; keys are cycle types as
/// partitions sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndex {
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl CycleIndex {
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.terms
    }

    pub fn weight(&self, cycle_type: &[usize]) -> BigRational {
        self.terms.get(cycle_type).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Substitutes `p_k -> power_sum(k)`.
    pub fn evaluate(&self, order: usize, mut power_sum: impl FnMut(usize) -> PowerSeries) -> PowerSeries {
        let mut cache: BTreeMap<usize, PowerSeries> = BTreeMap::new();
        let mut total = PowerSeries::zero(order);
        for (cycle_type, w) in &self.terms {
            let mut term = PowerSeries::constant(order, w.clone());
            for &k in cycle_type {
                let pk = cache.entry(k).or_insert_with(|| power_sum(k));
                term = &term * &*pk;
            }
            total = &total + &term;
        }
        total
    }
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (cycle_type, w) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for &k in cycle_type {
                *counts.entry(k).or_default() += 1;
            }
            let monomial: Vec<String> = counts
                .iter()
                .map(|(k, e)| if *e == 1 { format!("p{k}") } else { format!("p{k}^{e}") })
                .collect();
            let monomial = if monomial.is_empty() {
                "1".to_string()
            } else {
                monomial.join("*")
            };
            if w.is_one() {
                f.write_str(&monomial)?;
            } else {
                write!(f, "{w}*{monomial}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn cycle_type(perm: &[usize], support: u64) -> Vec<usize> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in bits(support) {
        if seen >> v & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut w = v;
        while seen >> w & 1 == 0 {
            seen |= 1 << w;
            w = perm[w];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn cycle_index_on(group: &[Vec<usize>], support: u64) -> CycleIndex {
    let share = BigRational::new(1.into(), group.len().into());
    let mut terms: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
    for g in group {
        *terms.entry(cycle_type(g, support)).or_insert_with(BigRational::zero) += &share;
    }
    CycleIndex { terms }
}

/// Cycle index of the automorphism group acting on the vertices.
pub fn cycle_index(p: &Poset) -> CycleIndex {
    cycle_index_on(&automorphisms(p), p.vertex_mask())
}

/// Vertices moved by at least one automorphism.
pub fn faithful_part(p: &Poset) -> u64 {
    automorphisms(p).iter().fold(0, |acc, g| {
        acc | g
            .iter()
            .enumerate()
            .filter(|(v, w)| v != *w)
            .fold(0, |m, (v, _)| m | 1 << v)
    })
}

fn require_seed(p: &Poset) -> Result<(), SeedError> {
    if is_seed(p) {
        Ok(())
    } else {
        Err(SeedError::NotASeed)
    }
}

/// `x^k / (1 - x^k)`
fn cycle_power_sum(order: usize, k: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |i| {
        if i > 0 && i % k == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// Unlabeled sprouts of `seed` counted by size: the cycle index at
/// `p_k = x^k / (1 - x^k)`.
pub fn sprout_ogf(seed: &Poset, order: usize) -> Result<PowerSeries, SeedError> {
    require_seed(seed)?;
    Ok(cycle_index(seed).evaluate(order, |k| cycle_power_sum(order, k)))
}

/// Labeled sprouts of `seed`: `(e^x - 1)^m / |Aut|`. A labeled sprout is a
/// surjection from the labels onto the seed's vertices, and two surjections
/// give the same labeled poset exactly when they differ by an automorphism.
pub fn sprout_egf(seed: &Poset, order: usize) -> Result<PowerSeries, SeedError> {
    require_seed(seed)?;
    let aut = rational(automorphism_count(seed));
    Ok(PowerSeries::named(NamedSeries::ExpMinusOne, order)
        .pow(seed.len())
        .scale(&aut.recip()))
}

/// The correction factor `R_K` with `sprout_ogf = (x / (1 - x))^m * R_K`:
/// the cycle index of the group restricted to its faithful part `K`, each
/// `l`-cycle weighted by `(1 - x)^l / (1 - x^l)`.
pub fn r_k_factor(seed: &Poset, order: usize) -> Result<PowerSeries, SeedError> {
    require_seed(seed)?;
    let group = automorphisms(seed);
    let k_mask = faithful_part(seed);
    let index = cycle_index_on(&group, k_mask);
    let one_minus_x = PowerSeries::one(order) - PowerSeries::x(order);
    Ok(index.evaluate(order, |l| {
        let denominator = PowerSeries::one(order) - PowerSeries::monomial(order, l, BigRational::one());
        one_minus_x.pow(l).div(&denominator).expect("1 - x^l is invertible")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::canonical_form;

    fn two_plus_two() -> Poset {
        Poset::chain_sum(&[2, 2])
    }

    #[test]
    fn exchangeable_examples() {
        assert_eq!(exchangeable_pairs(&Poset::antichain(2)), vec![(0, 1)]);
        assert!(exchangeable_pairs(&two_plus_two()).is_empty());
        assert!(exchangeable_pairs(&Poset::chain(2)).is_empty());
        let n_poset = Poset::build(4, &[(0, 2), (1, 2), (0, 3)]).unwrap();
        assert!(is_seed(&n_poset));
    }

    #[test]
    fn cloning_a_point_gives_antichains() {
        let mut p = Poset::antichain(1);
        for n in 2..6 {
            p = clone_vertex(&p, 0).unwrap();
            assert_eq!(p, Poset::antichain(n));
        }
    }

    #[test]
    fn clone_declone_roundtrip() {
        let p = Poset::build(4, &[(0, 2), (1, 2), (0, 3)]).unwrap();
        for v in 0..4 {
            let c = clone_vertex(&p, v).unwrap();
            assert_eq!(exchangeable_pairs(&c), vec![(v, 4)]);
            assert_eq!(declone(&c, 4).unwrap(), p);
        }
        assert_eq!(declone(&Poset::chain(3), 1), Err(SeedError::NotExchangeable(1)));
        assert!(matches!(
            declone(&Poset::chain(3), 7),
            Err(SeedError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn seed_of_antichain_and_seed() {
        let d = seed_of(&Poset::antichain(5));
        assert_eq!(d.seed, Poset::antichain(1));
        assert_eq!(d.multiplicity, vec![5]);
        assert_eq!(d.origin, vec![0; 5]);
        let d = seed_of(&two_plus_two());
        assert_eq!(d.seed, two_plus_two());
        assert_eq!(d.multiplicity, vec![1; 4]);
    }

    #[test]
    fn seed_of_tracks_origins() {
        // 0 < {1, 2} < 3, plus 4 exchangeable with 0
        let p = Poset::build(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (4, 1), (4, 2)]).unwrap();
        let d = seed_of(&p);
        assert_eq!(d.seed, Poset::chain(3));
        assert_eq!(d.multiplicity, vec![2, 2, 1]);
        assert_eq!(d.origin, vec![0, 1, 1, 2, 0]);
        let back = sprout(&d.seed, &d.multiplicity).unwrap();
        assert_eq!(canonical_form(&back), canonical_form(&p));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&Poset::chain(4)));
        assert!(!is_primitive(&two_plus_two()));
    }

    #[test]
    fn trictionary_chain_examples() {
        let s = PowerSeries::one(8)
            .div(&(PowerSeries::one(8) - PowerSeries::x(8)))
            .unwrap();
        let e = trictionary(&s, Direction::SeedToEgf).unwrap();
        assert_eq!(
            e.egf_counts().unwrap(),
            [1, 1, 3, 13, 75, 541, 4683, 47293, 545835].map(Into::into).to_vec()
        );
        let o = trictionary(&s, Direction::SeedToOgf).unwrap();
        assert_eq!(
            o.ogf_counts().unwrap(),
            [1, 1, 2, 4, 8, 16, 32, 64, 128].map(Into::into).to_vec()
        );
        for d in Direction::ALL {
            let there = trictionary(&s, d).unwrap();
            assert_eq!(trictionary(&there, d.inverse()).unwrap(), s, "{d:?}");
        }
        assert_eq!(trictionary(&o, Direction::OgfToEgf).unwrap(), e);
    }

    #[test]
    fn cycle_indices() {
        let chain = cycle_index(&Poset::chain(3));
        assert_eq!(chain.to_string(), "p1^3");
        let pair = cycle_index(&Poset::antichain(2));
        assert_eq!(pair.to_string(), "1/2*p2 + 1/2*p1^2");
        let tt = cycle_index(&two_plus_two());
        assert_eq!(tt.weight(&[1, 1, 1, 1]), BigRational::new(1.into(), 2.into()));
        assert_eq!(tt.weight(&[2, 2]), BigRational::new(1.into(), 2.into()));
        assert_eq!(tt.terms().len(), 2);
    }

    #[test]
    fn sprout_series() {
        let point = sprout_ogf(&Poset::antichain(1), 6).unwrap();
        assert_eq!(
            point.ogf_counts().unwrap(),
            [0, 1, 1, 1, 1, 1, 1].map(Into::into).to_vec()
        );
        assert_eq!(sprout_ogf(&Poset::antichain(2), 4), Err(SeedError::NotASeed));
        let geom = PowerSeries::named(NamedSeries::Geom, 10);
        let chain = Poset::chain(3);
        assert_eq!(sprout_ogf(&chain, 10).unwrap(), geom.pow(3));
        assert_eq!(r_k_factor(&chain, 10).unwrap(), PowerSeries::one(10));
        assert_eq!(faithful_part(&chain), 0);
        // (2+2): sprouts are pairs of unordered multiplicity pairs
        let tt = two_plus_two();
        let x2 = PowerSeries::monomial(10, 2, BigRational::one());
        let p2 = x2.div(&(PowerSeries::one(10) - &x2)).unwrap();
        let expected = (geom.pow(4) + p2.pow(2)).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(sprout_ogf(&tt, 10).unwrap(), expected);
        assert_eq!(faithful_part(&tt), 0b1111);
        assert_eq!(sprout_ogf(&tt, 10).unwrap(), geom.pow(4) * r_k_factor(&tt, 10).unwrap());
    }

    #[test]
    fn sprout_egf_counts() {
        // labeled (2+2) posets: 4!/2 = 12
        let tt = sprout_egf(&two_plus_two(), 5).unwrap();
        assert_eq!(tt.egf_counts().unwrap()[4], 12.into());
        let point = sprout_egf(&Poset::antichain(1), 5).unwrap();
        assert_eq!(point.egf_counts().unwrap(), [0, 1, 1, 1, 1, 1].map(Into::into).to_vec());
    }
}
