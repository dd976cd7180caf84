//! Command implementations behind the `graded` binary. Every command returns
//! its output as a string so it can be tested without spawning a process.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use graded_core::engines::{
    all_graded_egf, graded_31_egf, graded_interval_egf, graded_semiorder_assembled_ogf, graded_semiorder_height_ogf,
    graded_semiorder_ogf, graded_semiorder_seed_ogf, weakly_graded_egf, KnownSeries,
};
use graded_core::golden;
use graded_core::oracle::{CensusTable, CountKind, Family, OracleError, LABELED_LIMIT};
use graded_core::poset::{automorphism_count, grading, Grading, Poset};
use graded_core::seeds::{cycle_index, is_primitive, seed_of, trictionary, Direction};
use graded_core::series::{PowerSeries, SeriesError};
use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

pub const CACHE_DIR_ENV: &str = "GRADED_CACHE_DIR";
pub const CACHE_FILE: &str = "census.txt";
pub const DEFAULT_N_MAX: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("method {method} is not available for {target} {kind}")]
    UnsupportedMethod { target: Target, kind: Kind, method: Method },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("coefficient of x^{index} is not an integer count ({value}); refusing to round")]
    NonIntegral { index: usize, value: String },
    #[error("{0}")]
    Internal(String),
    #[error("cross-check found mismatches")]
    Mismatch { report: String },
}

impl CliError {
    /// 0 success, 1 mismatch, 2 configuration error, 3 internal failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch { .. } => 1,
            CliError::Config(_) | CliError::UnsupportedMethod { .. } => 2,
            CliError::Oracle(OracleError::LimitExceeded { .. }) => 2,
            CliError::Oracle(_) | CliError::NonIntegral { .. } | CliError::Internal(_) => 3,
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::NonIntegral { index, value } => CliError::NonIntegral {
                index,
                value: value.to_string(),
            },
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// What is being counted: one of the census families, or weakly graded
/// posets paired with a rank function (what the weak transfer matrix counts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Census(Family),
    RankedWeaklyGraded,
}

impl Target {
    pub fn all() -> Vec<Target> {
        Family::ALL
            .into_iter()
            .map(Target::Census)
            .chain([Target::RankedWeaklyGraded])
            .collect()
    }

    /// Families whose seeds are all primitive, so the seed substitutions are
    /// exact.
    fn primitive_seeds(self) -> bool {
        matches!(
            self,
            Target::Census(
                Family::GradedSemiorder | Family::GradedInterval | Family::IntervalOrder | Family::Semiorder
            )
        )
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Census(family) => write!(f, "{family}"),
            Target::RankedWeaklyGraded => f.write_str("weakly_graded_ranked"),
        }
    }
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().replace('-', "_").as_str() {
            "weakly_graded_ranked" | "ranked_weakly_graded" => Ok(Target::RankedWeaklyGraded),
            other => other.parse().map(Target::Census).map_err(CliError::Config),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Labeled counts, `n!` times the EGF coefficient.
    LabeledEgf,
    /// Unlabeled counts, the OGF coefficients.
    UnlabeledOgf,
    /// Labeled seed counts, `n!` times the seed EGF coefficient.
    SeedEgf,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::LabeledEgf, Kind::UnlabeledOgf, Kind::SeedEgf];

    fn census_kind(self) -> CountKind {
        match self {
            Kind::LabeledEgf => CountKind::Labeled,
            Kind::UnlabeledOgf => CountKind::Unlabeled,
            Kind::SeedEgf => CountKind::SeedsLabeled,
        }
    }

    fn exponential(self) -> bool {
        self != Kind::UnlabeledOgf
    }

    fn direction_to(self, target: Kind) -> Option<Direction> {
        match (self, target) {
            (Kind::SeedEgf, Kind::LabeledEgf) => Some(Direction::SeedToEgf),
            (Kind::SeedEgf, Kind::UnlabeledOgf) => Some(Direction::SeedToOgf),
            (Kind::UnlabeledOgf, Kind::LabeledEgf) => Some(Direction::OgfToEgf),
            (Kind::LabeledEgf, Kind::UnlabeledOgf) => Some(Direction::EgfToOgf),
            (Kind::LabeledEgf, Kind::SeedEgf) => Some(Direction::EgfToSeed),
            (Kind::UnlabeledOgf, Kind::SeedEgf) => Some(Direction::OgfToSeed),
            _ => None,
        }
    }

    fn to_series(self, values: &[BigInt]) -> PowerSeries {
        let order = values.len().saturating_sub(1);
        if self.exponential() {
            PowerSeries::from_egf_counts(order, values.iter().cloned())
        } else {
            PowerSeries::from_integers(order, values.iter().cloned())
        }
    }

    fn counts_of(self, s: &PowerSeries) -> Result<Vec<BigInt>, CliError> {
        Ok(if self.exponential() {
            s.egf_counts()?
        } else {
            s.ogf_counts()?
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::LabeledEgf => "labeled_egf",
            Kind::UnlabeledOgf => "unlabeled_ogf",
            Kind::SeedEgf => "seed_egf",
        })
    }
}

impl FromStr for Kind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('-', "_");
        Kind::ALL.into_iter().find(|k| k.to_string() == s).ok_or_else(|| {
            CliError::Config(format!(
                "unknown kind {s:?} (expected labeled_egf, unlabeled_ogf or seed_egf)"
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Transfer,
    ClosedForm,
    Oracle,
    /// Substitute into the series of another kind for the same family.
    Trictionary(Kind),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Transfer => f.write_str("transfer"),
            Method::ClosedForm => f.write_str("closed_form"),
            Method::Oracle => f.write_str("oracle"),
            Method::Trictionary(k) => write!(f, "trictionary-from:{k}"),
        }
    }
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(from) = s.strip_prefix("trictionary-from:") {
            return Ok(Method::Trictionary(from.parse()?));
        }
        match s.replace('-', "_").as_str() {
            "transfer" => Ok(Method::Transfer),
            "closed_form" => Ok(Method::ClosedForm),
            "oracle" => Ok(Method::Oracle),
            other => Err(CliError::Config(format!(
                "unknown method {other:?} (expected transfer, closed_form, oracle or trictionary-from:<kind>)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Bfile,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "bfile" => Ok(Format::Bfile),
            other => Err(CliError::Config(format!(
                "unknown format {other:?} (expected table, json or bfile)"
            ))),
        }
    }
}

/// Defaults read from a TOML file; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub family: Option<String>,
    pub kind: Option<String>,
    pub method: Option<String>,
    pub n_max: Option<usize>,
    pub n_min: Option<usize>,
    pub height: Option<usize>,
    pub format: Option<String>,
    pub offset: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("bad config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub target: Target,
    pub kind: Kind,
    pub method: Method,
    pub n_min: usize,
    pub n_max: usize,
    pub height: Option<usize>,
    pub format: Format,
    pub offset: Option<usize>,
}

/// Where oracle results are cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheConfig {
    pub dir: PathBuf,
    pub enabled: bool,
}

impl CacheConfig {
    /// Explicit directory, else `GRADED_CACHE_DIR`, else `.graded-cache`.
    pub fn resolve(dir: Option<PathBuf>, enabled: bool) -> Self {
        let dir = dir
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".graded-cache"));
        CacheConfig { dir, enabled }
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(CACHE_FILE)
    }
}

/// Holds the oracle census for the duration of one command.
pub struct Session {
    cache: CacheConfig,
    census: Option<CensusTable>,
}

impl Session {
    pub fn new(cache: CacheConfig) -> Self {
        Session { cache, census: None }
    }

    /// A census covering at least `n_max`, from memory, the cache file, or a
    /// fresh enumeration (which is then saved).
    pub fn census(&mut self, n_max: usize) -> Result<&CensusTable, CliError> {
        if n_max > LABELED_LIMIT {
            return Err(OracleError::LimitExceeded {
                n: n_max,
                limit: LABELED_LIMIT,
            }
            .into());
        }
        if self.census.as_ref().is_some_and(|t| t.n_max >= n_max) {
            return Ok(self.census.as_ref().expect("checked above"));
        }
        if self.cache.enabled {
            match CensusTable::load(&self.cache.path()) {
                Ok(t) if t.n_max >= n_max => {
                    self.census = Some(t);
                    return Ok(self.census.as_ref().expect("just set"));
                }
                Ok(_) | Err(OracleError::NotFound(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        let table = graded_core::oracle::census(n_max)?;
        if self.cache.enabled {
            table.save(&self.cache.path())?;
        }
        self.census = Some(table);
        Ok(self.census.as_ref().expect("just set"))
    }

    pub fn rebuild(&mut self, n_max: usize) -> Result<&CensusTable, CliError> {
        let table = graded_core::oracle::census(n_max)?;
        table.save(&self.cache.path())?;
        self.census = Some(table);
        Ok(self.census.as_ref().expect("just set"))
    }
}

fn formula(target: Target, kind: Kind, method: Method, order: usize, height: Option<usize>) -> Option<PowerSeries> {
    use Family::*;
    let no_height = height.is_none();
    let series = match (target, kind, method) {
        (Target::Census(Graded), Kind::LabeledEgf, Method::Transfer) => all_graded_egf(order, height),
        (Target::Census(GradedInterval), Kind::LabeledEgf, Method::Transfer) => graded_interval_egf(order, height),
        (Target::RankedWeaklyGraded, Kind::LabeledEgf, Method::Transfer) => weakly_graded_egf(order, height),
        (Target::Census(GradedSemiorder), Kind::UnlabeledOgf, Method::Transfer) => match height {
            Some(k) => graded_semiorder_height_ogf(order, k),
            None => graded_semiorder_assembled_ogf(order),
        },
        (Target::Census(GradedSemiorder), Kind::UnlabeledOgf, Method::ClosedForm) if no_height => {
            graded_semiorder_ogf(order)
        }
        (Target::Census(GradedSemiorder), Kind::SeedEgf, Method::ClosedForm) if no_height => {
            graded_semiorder_seed_ogf(order)
        }
        (Target::Census(Graded31Avoiding), Kind::LabeledEgf, Method::ClosedForm) if no_height => graded_31_egf(order),
        (Target::Census(Semiorder), Kind::UnlabeledOgf, Method::ClosedForm) if no_height => {
            KnownSeries::SemiorderOgf.series(order)
        }
        (Target::Census(Semiorder), Kind::LabeledEgf, Method::ClosedForm) if no_height => {
            KnownSeries::SemiorderEgf.series(order)
        }
        (Target::Census(IntervalOrder), Kind::LabeledEgf, Method::ClosedForm) if no_height => {
            KnownSeries::IntervalOrderEgf.series(order)
        }
        (Target::Census(IntervalOrder), Kind::UnlabeledOgf, Method::ClosedForm) if no_height => {
            KnownSeries::IntervalOrderOgf.series(order)
        }
        (Target::Census(IntervalOrder), Kind::SeedEgf, Method::ClosedForm) if no_height => {
            KnownSeries::IntervalOrderSeeds.series(order)
        }
        _ => return None,
    };
    Some(series)
}

/// Counts for `n = 0..=n_max`.
pub fn compute(
    session: &mut Session,
    target: Target,
    kind: Kind,
    method: Method,
    n_max: usize,
    height: Option<usize>,
) -> Result<Vec<BigInt>, CliError> {
    let unsupported = || CliError::UnsupportedMethod { target, kind, method };
    match method {
        Method::Transfer | Method::ClosedForm => {
            let series = formula(target, kind, method, n_max, height).ok_or_else(unsupported)?;
            kind.counts_of(&series)
        }
        Method::Oracle => {
            if height.is_some() {
                return Err(unsupported());
            }
            let table = session.census(n_max)?;
            let values: Vec<u64> = match target {
                Target::Census(family) => table.counts(family, kind.census_kind()),
                Target::RankedWeaklyGraded if kind == Kind::LabeledEgf => table.ranked_weakly_graded.clone(),
                Target::RankedWeaklyGraded => return Err(unsupported()),
            };
            Ok(values.into_iter().take(n_max + 1).map(BigInt::from).collect())
        }
        Method::Trictionary(from) => {
            let direction = from.direction_to(kind).ok_or_else(unsupported)?;
            if !target.primitive_seeds() {
                return Err(unsupported());
            }
            let source = [Method::Transfer, Method::ClosedForm, Method::Oracle]
                .into_iter()
                .find_map(|m| match compute(session, target, from, m, n_max, height) {
                    Err(CliError::UnsupportedMethod { .. }) => None,
                    other => Some(other),
                })
                .ok_or_else(unsupported)??;
            let converted = trictionary(&from.to_series(&source), direction)?;
            kind.counts_of(&converted)
        }
    }
}

/// Every method that applies to `(target, kind)` without a height filter.
pub fn available_methods(target: Target, kind: Kind, n_max: usize) -> Vec<Method> {
    let mut out: Vec<Method> = [Method::Transfer, Method::ClosedForm]
        .into_iter()
        .filter(|&m| formula(target, kind, m, 0, None).is_some())
        .collect();
    let oracle_ok = match target {
        Target::Census(_) => true,
        Target::RankedWeaklyGraded => kind == Kind::LabeledEgf,
    };
    if oracle_ok && n_max <= LABELED_LIMIT {
        out.push(Method::Oracle);
    }
    if target.primitive_seeds() {
        out.extend(Kind::ALL.into_iter().filter(|&k| k != kind).map(Method::Trictionary));
    }
    out
}

fn render_values(values: &[BigInt], n_min: usize) -> Vec<(usize, &BigInt)> {
    values.iter().enumerate().skip(n_min).collect()
}

/// b-file lines `index value`; the first listed `n` gets index `offset`.
pub fn bfile_text(values: &[BigInt], n_min: usize, offset: usize) -> String {
    render_values(values, n_min)
        .into_iter()
        .map(|(n, v)| format!("{} {v}\n", n - n_min + offset))
        .collect()
}

pub fn cmd_count(session: &mut Session, config: &RunConfig) -> Result<String, CliError> {
    let values = compute(
        session,
        config.target,
        config.kind,
        config.method,
        config.n_max,
        config.height,
    )?;
    Ok(match config.format {
        Format::Table => render_values(&values, config.n_min)
            .into_iter()
            .map(|(n, v)| format!("{n} {v}\n"))
            .collect(),
        Format::Bfile => bfile_text(&values, config.n_min, config.offset.unwrap_or(config.n_min)),
        Format::Json => {
            let numbers: Vec<serde_json::Value> = render_values(&values, config.n_min)
                .into_iter()
                .map(|(_, v)| {
                    v.to_string()
                        .parse::<serde_json::Number>()
                        .map(serde_json::Value::Number)
                        .map_err(|e| CliError::Internal(e.to_string()))
                })
                .collect::<Result<_, _>>()?;
            let doc = serde_json::json!({
                "family": config.target.to_string(),
                "kind": config.kind.to_string(),
                "method": config.method.to_string(),
                "n_min": config.n_min,
                "n_max": config.n_max,
                "height": config.height,
                "values": numbers,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("json value serializes")
            )
        }
    })
}

pub fn cmd_bfile(session: &mut Session, config: &RunConfig) -> Result<String, CliError> {
    if config.n_min > config.n_max {
        return Ok(String::new());
    }
    let values = compute(
        session,
        config.target,
        config.kind,
        config.method,
        config.n_max,
        config.height,
    )?;
    Ok(bfile_text(&values, config.n_min, config.offset.unwrap_or(config.n_min)))
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
}

/// Computes every available route for every kind of each target and compares
/// them coefficient by coefficient, and against the vendored reference
/// values. Returns the report, or [`CliError::Mismatch`] carrying it.
pub fn cmd_crosscheck(session: &mut Session, targets: &[Target], n_max: usize) -> Result<String, CliError> {
    let mut report = String::new();
    let mut mismatches = 0;
    for &target in targets {
        for kind in Kind::ALL {
            let methods = available_methods(target, kind, n_max);
            if methods.is_empty() {
                continue;
            }
            report.push_str(&format!("{target} {kind}\n"));
            let mut reference: Option<(String, Vec<BigInt>)> = None;
            let mut rows: Vec<(String, Vec<BigInt>)> = Vec::new();
            for method in methods {
                rows.push((method.to_string(), compute(session, target, kind, method, n_max, None)?));
            }
            if let Target::Census(family) = target {
                if let Some(g) = golden::find(family, kind.census_kind()) {
                    let values: Vec<BigInt> = g.values.iter().take(n_max + 1).map(|&v| v.into()).collect();
                    let label = match g.oeis {
                        Some(id) => format!("reference {id}"),
                        None => "reference".to_string(),
                    };
                    rows.push((label, values));
                }
            }
            for (label, values) in rows {
                let verdict = match &reference {
                    None => {
                        reference = Some((label.clone(), values.clone()));
                        String::new()
                    }
                    Some((ref_label, ref_values)) => {
                        let k = values.len().min(ref_values.len());
                        match (0..k).find(|&n| values[n] != ref_values[n]) {
                            None => "  ok".to_string(),
                            Some(n) => {
                                mismatches += 1;
                                format!(
                                    "  MISMATCH at n={n}: {} vs {} from {ref_label}",
                                    values[n], ref_values[n]
                                )
                            }
                        }
                    }
                };
                report.push_str(&format!("  {label:<32} {}{verdict}\n", join(&values)));
            }
        }
    }
    report.push_str(&format!("{mismatches} mismatch(es)\n"));
    if mismatches > 0 {
        Err(CliError::Mismatch { report })
    } else {
        Ok(report)
    }
}

pub fn cmd_cache_inspect(session: &mut Session, json: bool) -> Result<String, CliError> {
    let path = session.cache.path();
    let table = CensusTable::load(&path)?;
    if json {
        return Ok(format!("{}\n", table.to_json()));
    }
    let mut out = format!(
        "cache {}\nn_max {}\nmethod {}\ncreated {}\n",
        path.display(),
        table.n_max,
        table.provenance.method,
        table.provenance.created
    );
    for family in Family::ALL {
        for kind in CountKind::ALL {
            let values: Vec<String> = table.counts(family, kind).iter().map(u64::to_string).collect();
            out.push_str(&format!("{family} {} {}\n", kind.name(), values.join(" ")));
        }
    }
    let ranked: Vec<String> = table.ranked_weakly_graded.iter().map(u64::to_string).collect();
    out.push_str(&format!("weakly_graded_ranked labeled {}\n", ranked.join(" ")));
    Ok(out)
}

pub fn cmd_cache_rebuild(session: &mut Session, n_max: usize) -> Result<String, CliError> {
    let path = session.cache.path();
    let table = session.rebuild(n_max)?;
    Ok(format!(
        "wrote census through n = {} to {}\n",
        table.n_max,
        path.display()
    ))
}

/// Grading, family membership and seed data of one poset in the text format.
pub fn cmd_classify(text: &str) -> Result<String, CliError> {
    let p: Poset = text
        .parse()
        .map_err(|e| CliError::Config(format!("cannot parse poset: {e}")))?;
    let mut out = format!("vertices {}\ncovers {:?}\n", p.len(), p.covers());
    match grading(&p) {
        Grading::NotGraded => out.push_str("grading none\n"),
        Grading::Weak(r) => out.push_str(&format!("grading weak\nranks {:?}\n", r.ranks())),
        Grading::Strong(r) => out.push_str(&format!("grading strong\nranks {:?}\n", r.ranks())),
    }
    let c = graded_core::oracle::classify(&p);
    let families: Vec<String> = c.families().iter().map(Family::to_string).collect();
    out.push_str(&format!("families {}\n", families.join(" ")));
    let d = seed_of(&p);
    out.push_str(&format!(
        "seed {:?} on {} vertices, multiplicities {:?}\n",
        d.seed.covers(),
        d.seed.len(),
        d.multiplicity
    ));
    out.push_str(&format!("automorphisms {}\n", automorphism_count(&p)));
    out.push_str(&format!("primitive {}\n", is_primitive(&p)));
    if p.len() <= 9 {
        out.push_str(&format!("cycle index {}\n", cycle_index(&p)));
    }
    Ok(out)
}
