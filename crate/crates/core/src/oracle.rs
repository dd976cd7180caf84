//! Brute-force ground truth.
//!
//! Every labeled poset on `n <= 7` vertices is generated from the naturally
//! labeled ones (those where `u < v` implies `u < v` as integers), each class
//! is classified with the definitional checks only (no locality shortcuts),
//! and the results are collected in a [`CensusTable`] that can be cached on
//! disk.
//!
//! A labeled poset is recovered from exactly one natural labeling: the one
//! given by its lexicographically first linear extension (repeatedly take
//! the smallest-labeled minimal element). So for a natural poset `Q` the
//! relabelings `sigma` to keep are those where, at every step `k`,
//! `sigma(k)` is smaller than `sigma(u)` for every other minimal element `u`
//! of `Q` restricted to `{k, .., n-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numbers::factorials_u64;
use crate::poset::{
    automorphism_count, bits, canonical_form, canonical_labeling, contains, contiguous_rank_function_count, grading,
    CanonicalForm, ChainSumPattern, Grading, Poset,
};
use crate::seeds::is_seed;
use crate::series::PowerSeries;

/// Largest `n` the enumerators accept.
pub const LABELED_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("no cache at {0}")]
    NotFound(PathBuf),
    #[error("cache i/o error: {0}")]
    Io(String),
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
}

fn check_limit(n: usize) -> Result<(), OracleError> {
    if n > LABELED_LIMIT {
        Err(OracleError::LimitExceeded {
            n,
            limit: LABELED_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Posets on `0..n` whose order relation only goes from smaller to larger
/// integers, each exactly once.
pub fn natural_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    check_limit(n)?;
    let mut out = Vec::new();
    let mut down = Vec::with_capacity(n);
    extend_natural(n, &mut down, &mut out);
    Ok(out)
}

fn extend_natural(n: usize, down: &mut Vec<u64>, out: &mut Vec<Poset>) {
    let j = down.len();
    if j == n {
        let mut up = vec![0u64; n];
        for (v, &d) in down.iter().enumerate() {
            for u in bits(d) {
                up[u] |= 1 << v;
            }
        }
        out.push(Poset::from_up_unchecked(up));
        return;
    }
    for d in 0..1u64 << j {
        if bits(d).all(|u| down[u] & !d == 0) {
            down.push(d);
            extend_natural(n, down, out);
            down.pop();
        }
    }
}

/// `before[u]`: vertices `k` whose label must be smaller than `u`'s for `q`
/// to be the canonical natural form of its relabeling.
fn relabel_constraints(q: &Poset) -> Vec<u64> {
    let n = q.len();
    let mut before = vec![0u64; n];
    for k in 0..n {
        let rest = q.vertex_mask() & !((1u64 << k) - 1);
        for u in bits(rest) {
            if u != k && q.down_mask(u) & rest == 0 {
                before[u] |= 1 << k;
            }
        }
    }
    before
}

/// Number of labeled posets whose canonical natural form is `q`.
pub fn relabel_count(q: &Poset) -> u64 {
    let n = q.len();
    let before = relabel_constraints(q);
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for mask in 0..1usize << n {
        if ways[mask] == 0 {
            continue;
        }
        for u in 0..n {
            if mask >> u & 1 == 0 && before[u] & !(mask as u64) == 0 {
                ways[mask | 1 << u] += ways[mask];
            }
        }
    }
    ways[(1 << n) - 1]
}

fn for_each_relabeling(q: &Poset, mut visit: impl FnMut(&[usize])) {
    let before = relabel_constraints(q);
    let mut perm = vec![usize::MAX; q.len()];
    assign_labels(&before, 0, 0, &mut perm, &mut visit);
}

fn assign_labels(before: &[u64], label: usize, mask: u64, perm: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if label == perm.len() {
        visit(perm);
        return;
    }
    for u in 0..perm.len() {
        if mask >> u & 1 == 0 && before[u] & !mask == 0 {
            perm[u] = label;
            assign_labels(before, label + 1, mask | 1 << u, perm, visit);
        }
    }
}

/// Every labeled poset on `0..n` exactly once, in a deterministic order.
pub fn labeled_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    let mut out = Vec::new();
    for q in natural_posets(n)? {
        for_each_relabeling(&q, |perm| out.push(q.relabel(perm)));
    }
    Ok(out)
}

/// The poset families tracked by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    AllPosets,
    WeaklyGraded,
    Graded,
    GradedSemiorder,
    GradedInterval,
    #[serde(rename = "graded_31_avoiding")]
    Graded31Avoiding,
    IntervalOrder,
    Semiorder,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::AllPosets,
        Family::WeaklyGraded,
        Family::Graded,
        Family::GradedSemiorder,
        Family::GradedInterval,
        Family::Graded31Avoiding,
        Family::IntervalOrder,
        Family::Semiorder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AllPosets => "all_posets",
            Family::WeaklyGraded => "weakly_graded",
            Family::Graded => "graded",
            Family::GradedSemiorder => "graded_semiorder",
            Family::GradedInterval => "graded_interval",
            Family::Graded31Avoiding => "graded_31_avoiding",
            Family::IntervalOrder => "interval_order",
            Family::Semiorder => "semiorder",
        }
    }

    /// Pairs `(smaller, larger)` of families with `smaller` contained in
    /// `larger`.
    pub const CONTAINMENTS: [(Family, Family); 9] = [
        (Family::GradedSemiorder, Family::GradedInterval),
        (Family::GradedInterval, Family::Graded),
        (Family::GradedSemiorder, Family::Graded31Avoiding),
        (Family::Graded31Avoiding, Family::Graded),
        (Family::Graded, Family::WeaklyGraded),
        (Family::WeaklyGraded, Family::AllPosets),
        (Family::Semiorder, Family::IntervalOrder),
        (Family::IntervalOrder, Family::AllPosets),
        (Family::GradedSemiorder, Family::Semiorder),
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        match s.as_str() {
            "all_graded" => return Ok(Family::Graded),
            "graded_31" | "graded_3_1_avoiding" => return Ok(Family::Graded31Avoiding),
            _ => {}
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Family membership, decided by definitional checks only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Classification {
    pub weakly_graded: bool,
    pub strongly_graded: bool,
    pub avoids_22: bool,
    pub avoids_31: bool,
}

impl Classification {
    pub fn contains(&self, family: Family) -> bool {
        match family {
            Family::AllPosets => true,
            Family::WeaklyGraded => self.weakly_graded,
            Family::Graded => self.strongly_graded,
            Family::GradedSemiorder => self.strongly_graded && self.avoids_22 && self.avoids_31,
            Family::GradedInterval => self.strongly_graded && self.avoids_22,
            Family::Graded31Avoiding => self.strongly_graded && self.avoids_31,
            Family::IntervalOrder => self.avoids_22,
            Family::Semiorder => self.avoids_22 && self.avoids_31,
        }
    }

    pub fn families(&self) -> Vec<Family> {
        Family::ALL.into_iter().filter(|&f| self.contains(f)).collect()
    }
}

pub fn classify(p: &Poset) -> Classification {
    let g = grading(p);
    Classification {
        weakly_graded: g.is_graded(),
        strongly_graded: matches!(g, Grading::Strong(_)),
        avoids_22: !contains(p, &ChainSumPattern::two_plus_two()),
        avoids_31: !contains(p, &ChainSumPattern::three_plus_one()),
    }
}

/// One isomorphism class on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    /// Representative in canonical labeling.
    pub poset: Poset,
    pub automorphisms: u64,
    /// Labeled posets found in this class by enumeration, counted without
    /// reference to the automorphism group.
    pub labeled: u64,
    pub classification: Classification,
    pub is_seed: bool,
    /// Rank functions whose values are exactly `0..h` for some `h`.
    pub rank_functions: u64,
}

/// All isomorphism classes on `n` vertices, ordered by canonical form.
pub fn classes(n: usize) -> Result<Vec<ClassRecord>, OracleError> {
    let naturals = natural_posets(n)?;
    let tagged: Vec<(CanonicalForm, u64, usize)> = naturals
        .par_iter()
        .enumerate()
        .map(|(i, q)| (canonical_form(q), relabel_count(q), i))
        .collect();
    let mut buckets: BTreeMap<CanonicalForm, (u64, usize)> = BTreeMap::new();
    for (form, count, i) in tagged {
        let entry = buckets.entry(form).or_insert((0, i));
        entry.0 += count;
    }
    let reps: Vec<(u64, &Poset)> = buckets.values().map(|&(count, i)| (count, &naturals[i])).collect();
    Ok(reps
        .par_iter()
        .map(|&(labeled, q)| {
            let poset = q.relabel(&canonical_labeling(q));
            ClassRecord {
                automorphisms: automorphism_count(&poset),
                labeled,
                classification: classify(&poset),
                is_seed: is_seed(&poset),
                rank_functions: contiguous_rank_function_count(&poset),
                poset,
            }
        })
        .collect())
}

/// Counts for one family at one size.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CensusEntry {
    pub labeled: u64,
    pub unlabeled: u64,
    pub seeds_unlabeled: u64,
    pub seeds_labeled: u64,
    /// Automorphism group orders of the classes, ascending.
    pub class_auts: Vec<u64>,
    /// The same for the seed classes.
    pub seed_auts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub method: String,
    /// Seconds since the Unix epoch.
    pub created: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub n_max: usize,
    /// `entries[family][n]`
    pub entries: BTreeMap<Family, Vec<CensusEntry>>,
    /// Labeled pairs (weakly graded poset, rank function onto `0..h`), by `n`.
    pub ranked_weakly_graded: Vec<u64>,
    pub provenance: Provenance,
}

pub fn census(n_max: usize) -> Result<CensusTable, OracleError> {
    check_limit(n_max)?;
    let mut entries: BTreeMap<Family, Vec<CensusEntry>> = Family::ALL
        .into_iter()
        .map(|f| (f, Vec::with_capacity(n_max + 1)))
        .collect();
    let mut ranked = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let records = classes(n)?;
        for family in Family::ALL {
            let mut e = CensusEntry::default();
            for r in records.iter().filter(|r| r.classification.contains(family)) {
                e.labeled += r.labeled;
                e.unlabeled += 1;
                e.class_auts.push(r.automorphisms);
                if r.is_seed {
                    e.seeds_unlabeled += 1;
                    e.seeds_labeled += r.labeled;
                    e.seed_auts.push(r.automorphisms);
                }
            }
            e.class_auts.sort_unstable();
            e.seed_auts.sort_unstable();
            entries.get_mut(&family).expect("all families present").push(e);
        }
        ranked.push(records.iter().map(|r| r.labeled * r.rank_functions).sum());
    }
    let created = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    Ok(CensusTable {
        n_max,
        entries,
        ranked_weakly_graded: ranked,
        provenance: Provenance {
            method: "oracle".into(),
            created,
        },
    })
}

/// Which of the three counts to read from a census entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    Labeled,
    Unlabeled,
    SeedsUnlabeled,
    SeedsLabeled,
}

impl CountKind {
    pub const ALL: [CountKind; 4] = [
        CountKind::Labeled,
        CountKind::Unlabeled,
        CountKind::SeedsUnlabeled,
        CountKind::SeedsLabeled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountKind::Labeled => "labeled",
            CountKind::Unlabeled => "unlabeled",
            CountKind::SeedsUnlabeled => "seeds_unlabeled",
            CountKind::SeedsLabeled => "seeds_labeled",
        }
    }

    fn pick(self, e: &CensusEntry) -> u64 {
        match self {
            CountKind::Labeled => e.labeled,
            CountKind::Unlabeled => e.unlabeled,
            CountKind::SeedsUnlabeled => e.seeds_unlabeled,
            CountKind::SeedsLabeled => e.seeds_labeled,
        }
    }

    fn slot(self, e: &mut CensusEntry) -> &mut u64 {
        match self {
            CountKind::Labeled => &mut e.labeled,
            CountKind::Unlabeled => &mut e.unlabeled,
            CountKind::SeedsUnlabeled => &mut e.seeds_unlabeled,
            CountKind::SeedsLabeled => &mut e.seeds_labeled,
        }
    }
}

impl CensusTable {
    pub fn entry(&self, family: Family, n: usize) -> &CensusEntry {
        &self.entries[&family][n]
    }

    /// `counts[n]` for `n = 0..=n_max`.
    pub fn counts(&self, family: Family, kind: CountKind) -> Vec<u64> {
        self.entries[&family].iter().map(|e| kind.pick(e)).collect()
    }

    /// Labeled counts as an EGF, other kinds as an OGF.
    pub fn series(&self, family: Family, kind: CountKind) -> PowerSeries {
        let counts = self.counts(family, kind);
        match kind {
            CountKind::Labeled | CountKind::SeedsLabeled => PowerSeries::from_egf_counts(self.n_max, counts),
            _ => PowerSeries::from_integers(self.n_max, counts),
        }
    }

    /// Re-derives every count that can be re-derived and checks the family
    /// containments.
    pub fn verify(&self) -> Result<(), String> {
        let fact = factorials_u64(self.n_max);
        for family in Family::ALL {
            let rows = self
                .entries
                .get(&family)
                .ok_or_else(|| format!("family {family} missing"))?;
            if rows.len() != self.n_max + 1 {
                return Err(format!(
                    "family {family} has {} rows, expected {}",
                    rows.len(),
                    self.n_max + 1
                ));
            }
            for (n, e) in rows.iter().enumerate() {
                let from_auts = |auts: &[u64]| -> Result<u64, String> {
                    auts.iter()
                        .map(|&a| {
                            if a == 0 || !fact[n].is_multiple_of(a) {
                                Err(format!("{family} n={n}: automorphism count {a} does not divide {n}!"))
                            } else {
                                Ok(fact[n] / a)
                            }
                        })
                        .sum()
                };
                if e.labeled != from_auts(&e.class_auts)? {
                    return Err(format!("{family} n={n}: labeled {} != sum of n!/|Aut|", e.labeled));
                }
                if e.seeds_labeled != from_auts(&e.seed_auts)? {
                    return Err(format!(
                        "{family} n={n}: seeds_labeled {} != sum of n!/|Aut|",
                        e.seeds_labeled
                    ));
                }
                if e.unlabeled != e.class_auts.len() as u64 || e.seeds_unlabeled != e.seed_auts.len() as u64 {
                    return Err(format!("{family} n={n}: class counts disagree with class lists"));
                }
                if e.seeds_unlabeled > e.unlabeled {
                    return Err(format!("{family} n={n}: more seeds than classes"));
                }
            }
        }
        for (small, large) in Family::CONTAINMENTS {
            for n in 0..=self.n_max {
                for kind in CountKind::ALL {
                    let (a, b) = (kind.pick(self.entry(small, n)), kind.pick(self.entry(large, n)));
                    if kind != CountKind::SeedsUnlabeled && kind != CountKind::SeedsLabeled && a > b {
                        return Err(format!("n={n}: {small} {} {a} exceeds {large} {b}", kind.name()));
                    }
                }
            }
        }
        if self.ranked_weakly_graded.len() != self.n_max + 1 {
            return Err("ranked_weakly_graded has the wrong length".into());
        }
        for n in 0..=self.n_max {
            if self.ranked_weakly_graded[n] < self.entry(Family::WeaklyGraded, n).labeled {
                return Err(format!(
                    "n={n}: fewer ranked weakly graded posets than weakly graded posets"
                ));
            }
        }
        Ok(())
    }

    /// Text cache format, one record per line:
    ///
    /// ```text
    /// graded-census 1
    /// n_max 6
    /// created 1760000000
    /// <family> <n> <kind> <method> <value...>
    /// ```
    ///
    /// Kinds are `labeled`, `unlabeled`, `seeds_unlabeled`, `seeds_labeled`
    /// (one value each) and `class_auts`, `seed_auts` (a list). The
    /// pseudo-family `ranked_weakly_graded` has only `labeled` records.
    pub fn to_text(&self) -> String {
        let method = &self.provenance.method;
        let mut out = format!(
            "{CACHE_MAGIC} {CACHE_VERSION}\nn_max {}\ncreated {}\n",
            self.n_max, self.provenance.created
        );
        for (family, rows) in &self.entries {
            for (n, e) in rows.iter().enumerate() {
                for kind in CountKind::ALL {
                    out.push_str(&format!("{family} {n} {} {method} {}\n", kind.name(), kind.pick(e)));
                }
                for (name, list) in [("class_auts", &e.class_auts), ("seed_auts", &e.seed_auts)] {
                    let values: Vec<String> = list.iter().map(u64::to_string).collect();
                    let line = format!("{family} {n} {name} {method} {}", values.join(" "));
                    out.push_str(line.trim_end());
                    out.push('\n');
                }
            }
        }
        for (n, c) in self.ranked_weakly_graded.iter().enumerate() {
            out.push_str(&format!("{RANKED} {n} labeled {method} {c}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, OracleError> {
        let corrupt = |line: usize, msg: &str| OracleError::CorruptCache(format!("line {line}: {msg}"));
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let header = |lines: &mut dyn Iterator<Item = (usize, &str)>, key: &str| -> Result<String, OracleError> {
            let (i, l) = lines.next().ok_or_else(|| corrupt(0, "truncated header"))?;
            let mut it = l.split_whitespace();
            if it.next() != Some(key) {
                return Err(corrupt(i + 1, &format!("expected `{key}`")));
            }
            it.next()
                .map(str::to_string)
                .ok_or_else(|| corrupt(i + 1, "missing value"))
        };
        let version = header(&mut lines, CACHE_MAGIC)?;
        if version != CACHE_VERSION {
            return Err(corrupt(1, &format!("unsupported version {version}")));
        }
        let n_max: usize = header(&mut lines, "n_max")?
            .parse()
            .map_err(|_| corrupt(2, "bad n_max"))?;
        check_limit(n_max).map_err(|e| OracleError::CorruptCache(e.to_string()))?;
        let created: u64 = header(&mut lines, "created")?
            .parse()
            .map_err(|_| corrupt(3, "bad timestamp"))?;
        let mut entries: BTreeMap<Family, Vec<CensusEntry>> = Family::ALL
            .into_iter()
            .map(|f| (f, vec![CensusEntry::default(); n_max + 1]))
            .collect();
        let mut ranked = vec![None; n_max + 1];
        let mut method: Option<String> = None;
        for (i, line) in lines {
            let line_no = i + 1;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() < 4 {
                return Err(corrupt(line_no, "too few fields"));
            }
            let n: usize = fields[1].parse().map_err(|_| corrupt(line_no, "bad n"))?;
            if n > n_max {
                return Err(corrupt(line_no, "n beyond n_max"));
            }
            match &method {
                None => method = Some(fields[3].to_string()),
                Some(m) if m != fields[3] => return Err(corrupt(line_no, "mixed method tags")),
                Some(_) => {}
            }
            let values: Vec<u64> = fields[4..]
                .iter()
                .map(|v| v.parse().map_err(|_| corrupt(line_no, "bad value")))
                .collect::<Result<_, _>>()?;
            if fields[0] == RANKED {
                if fields[2] != "labeled" || values.len() != 1 {
                    return Err(corrupt(line_no, "bad ranked record"));
                }
                ranked[n] = Some(values[0]);
                continue;
            }
            let family: Family = fields[0].parse().map_err(|e: String| corrupt(line_no, &e))?;
            let e = &mut entries.get_mut(&family).expect("all families present")[n];
            match fields[2] {
                "class_auts" => e.class_auts = values,
                "seed_auts" => e.seed_auts = values,
                kind => {
                    let kind = CountKind::ALL
                        .into_iter()
                        .find(|k| k.name() == kind)
                        .ok_or_else(|| corrupt(line_no, "unknown kind"))?;
                    if values.len() != 1 {
                        return Err(corrupt(line_no, "expected one value"));
                    }
                    *kind.slot(e) = values[0];
                }
            }
        }
        let ranked_weakly_graded = ranked
            .into_iter()
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| OracleError::CorruptCache("missing ranked_weakly_graded records".into()))?;
        let table = CensusTable {
            n_max,
            entries,
            ranked_weakly_graded,
            provenance: Provenance {
                method: method.unwrap_or_else(|| "oracle".into()),
                created,
            },
        };
        table.verify().map_err(OracleError::CorruptCache)?;
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, OracleError> {
        let table: CensusTable = serde_json::from_str(text).map_err(|e| OracleError::CorruptCache(e.to_string()))?;
        table.verify().map_err(OracleError::CorruptCache)?;
        Ok(table)
    }

    /// Writes the text format, or JSON if the path ends in `.json`.
    pub fn save(&self, path: &Path) -> Result<(), OracleError> {
        let body = if path.extension().is_some_and(|e| e == "json") {
            self.to_json()
        } else {
            self.to_text()
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| OracleError::Io(e.to_string()))?;
        }
        fs::write(path, body).map_err(|e| OracleError::Io(e.to_string()))
    }

    /// Reads either format and verifies the table before returning it.
    pub fn load(path: &Path) -> Result<Self, OracleError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(OracleError::NotFound(path.to_path_buf()))
            }
            Err(e) => return Err(OracleError::Io(e.to_string())),
        };
        if text.trim_start().starts_with('{') {
            Self::from_json(&text)
        } else {
            Self::from_text(&text)
        }
    }
}

const CACHE_MAGIC: &str = "graded-census";
const CACHE_VERSION: &str = "1";
const RANKED: &str = "ranked_weakly_graded";
