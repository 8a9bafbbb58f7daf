//! Command-line orchestration: class selection, deterministic parallel
//! Monte Carlo, and JSON/CSV reports.
//!
//! Every report embeds [`SCHEMA_VERSION`] and the resolved configuration.
//! Floating-point values are written as decimal strings with 12 significant
//! digits, and exact rationals as `p/q` strings, so output is identical on
//! every platform. The worker count is left out of the embedded
//! configuration because it never changes the output.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{
    bound_report, main_bound, main_bound_exact, univariate_bound_scale, univariate_main_bound, LogNumber,
};
use crate::error::{Error, Result};
use crate::gluing::{sample_uniform_gluing, topology};
use crate::oracle::exact_joint_distribution;
use crate::poisson::{
    from_tallies, plug_in_tv_standard_error, tv_to_product_poisson, CountVector, PoissonSpec,
};
use crate::spectrum::{ClassMatcher, MAX_CYCLE_LENGTH};
use crate::words::{canonicalize, enumerate_classes_by_length, enumerate_classes_by_trace, Word, WordClass};

pub const SCHEMA_VERSION: &str = "1.0";
/// Above this many classes, pairwise covariances and the refined bound are
/// left out of statistics reports.
pub const MAX_PAIRWISE_CLASSES: usize = 64;

/// Format `x` with 12 significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

/// A float that serializes through [`format_sig`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_sig(self.0))
    }
}

fn ratio_string(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Which word classes an experiment is about.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassSelection {
    /// Explicit words, each standing for its class.
    Classes(Vec<String>),
    /// The census `W(k)` of hyperbolic classes with trace at most `k`.
    MaxTrace(u64),
    /// Every class of length at most `m`.
    MaxWordLength(usize),
}

impl ClassSelection {
    pub fn resolve(&self) -> Result<Vec<WordClass>> {
        match self {
            ClassSelection::Classes(words) => {
                if words.is_empty() {
                    return Err(Error::out_of_range("class count", 0, ">= 1"));
                }
                words
                    .iter()
                    .map(|w| Ok(canonicalize(&w.trim().parse::<Word>()?)))
                    .collect()
            }
            ClassSelection::MaxTrace(k) => Ok(enumerate_classes_by_trace(*k)?.classes),
            ClassSelection::MaxWordLength(m) => enumerate_classes_by_length(*m),
        }
    }
}

/// Resolved parameters of one command. `workers` is not serialized.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_u128")]
    pub n: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub selection: ClassSelection,
    pub format: OutputFormat,
    #[serde(skip)]
    pub workers: usize,
}

fn ser_opt_u128<S: Serializer>(n: &Option<u128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl ExperimentConfig {
    pub fn new(command: &str, selection: ClassSelection) -> Self {
        ExperimentConfig {
            command: command.into(),
            n: None,
            samples: None,
            seed: None,
            selection,
            format: OutputFormat::Json,
            workers: 1,
        }
    }

    fn n_usize(&self) -> Result<usize> {
        let n = self.n.ok_or(Error::out_of_range("N", "missing", ">= 1"))?;
        if n == 0 || n > u32::MAX as u128 / 6 {
            return Err(Error::out_of_range("N", n, "1..=715827882"));
        }
        Ok(n as usize)
    }
}

// ---------------------------------------------------------------------------
// words

#[derive(Clone, Debug, Serialize)]
pub struct WordRecord {
    pub canonical: String,
    pub class_size: usize,
    pub word_length: usize,
    pub trace: String,
    pub length: Num,
    pub parabolic: bool,
    pub lambda: String,
    pub lambda_decimal: Num,
}

impl From<&WordClass> for WordRecord {
    fn from(c: &WordClass) -> Self {
        WordRecord {
            canonical: c.canonical.to_string(),
            class_size: c.class_size,
            word_length: c.word_length,
            trace: c.trace.to_string(),
            length: Num(c.hyperbolic_length().length),
            parabolic: c.is_parabolic(),
            lambda: ratio_string(&c.lambda),
            lambda_decimal: Num(c.lambda_f64()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WordsReport {
    pub schema_version: &'static str,
    pub config: ExperimentConfig,
    pub count: usize,
    pub records: Vec<WordRecord>,
}

pub fn run_words(config: &ExperimentConfig) -> Result<WordsReport> {
    let records: Vec<WordRecord> = config.selection.resolve()?.iter().map(WordRecord::from).collect();
    Ok(WordsReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        count: records.len(),
        records,
    })
}

// ---------------------------------------------------------------------------
// stats

#[derive(Clone, Debug, Serialize)]
pub struct ClassStats {
    pub class: String,
    pub word_length: usize,
    pub class_size: usize,
    pub lambda: String,
    pub sample_count: u64,
    pub mean: Num,
    pub mean_standard_error: Num,
    pub variance: Num,
    pub variance_standard_error: Num,
    /// Plug-in total variation between the empirical marginal and `Po(lambda)`.
    pub tv_to_poisson: Num,
    pub tv_standard_error: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct CovarianceEntry {
    pub first: String,
    pub second: String,
    pub sample_count: u64,
    pub covariance: Num,
    pub standard_error: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct JointTv {
    pub sample_count: u64,
    pub distinct_vectors: usize,
    pub estimate: Num,
    pub standard_error: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundSummary {
    pub main_bound_log10: Num,
    pub main_bound_clamped: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_mtv_bound_log10: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_mtv_bound_clamped: Option<Num>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TopologySummary {
    pub sample_count: u64,
    pub connected_fraction: Num,
    pub connected_standard_error: Num,
    pub mean_genus: Num,
    pub genus_standard_error: Num,
    /// Mean genus divided by `N / 2`.
    pub genus_ratio: Num,
    pub mean_cusp_count: Num,
    pub cusp_standard_error: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub schema_version: &'static str,
    pub config: ExperimentConfig,
    pub classes: Vec<ClassStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covariances: Option<Vec<CovarianceEntry>>,
    pub joint_tv: JointTv,
    /// Absent when the longest word exceeds `N`.
    pub bounds: Option<BoundSummary>,
    pub topology: TopologySummary,
}

struct SampleRow {
    counts: Vec<u64>,
    connected: bool,
    genus: u64,
    cusps: usize,
}

fn mean_and_se(values: impl Iterator<Item = f64> + Clone, m: f64) -> (f64, f64) {
    let mean = values.clone().sum::<f64>() / m;
    let var = if m > 1.0 {
        values.map(|x| (x - mean).powi(2)).sum::<f64>() / (m - 1.0)
    } else {
        0.0
    };
    (mean, (var / m).sqrt())
}

pub fn run_stats(config: &ExperimentConfig) -> Result<StatsReport> {
    let n = config.n_usize()?;
    let m = config.samples.unwrap_or(0);
    if m == 0 {
        return Err(Error::out_of_range("samples", m, ">= 1"));
    }
    let seed = config.seed.unwrap_or(0);
    let classes = config.selection.resolve()?;
    if let Some(c) = classes.iter().find(|c| c.word_length > MAX_CYCLE_LENGTH) {
        return Err(Error::out_of_range("word length", c.word_length, "1..=16"));
    }
    let matcher = ClassMatcher::new(&classes)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    // collected in index order, so reductions below never see the schedule
    let rows: Vec<SampleRow> = pool.install(|| {
        (0..m)
            .into_par_iter()
            .map(|i| {
                let g = sample_uniform_gluing(n, seed, i)?;
                let topo = topology(&g);
                Ok(SampleRow {
                    counts: matcher.count(&g),
                    connected: topo.connected,
                    genus: topo.total_genus,
                    cusps: topo.cusp_count,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mf = m as f64;
    let d = classes.len();
    let means: Vec<f64> = (0..d)
        .map(|j| rows.iter().map(|r| r.counts[j] as f64).sum::<f64>() / mf)
        .collect();
    let mut class_stats = Vec::with_capacity(d);
    for (j, class) in classes.iter().enumerate() {
        let mu = means[j];
        let central = |p: i32| rows.iter().map(|r| (r.counts[j] as f64 - mu).powi(p)).sum::<f64>() / mf;
        let (m2, m4) = (central(2), central(4));
        let variance = if m > 1 { m2 * mf / (mf - 1.0) } else { 0.0 };
        let mut tallies: BTreeMap<CountVector, u64> = BTreeMap::new();
        for r in &rows {
            *tallies.entry(CountVector(vec![r.counts[j]])).or_default() += 1;
        }
        let marginal = from_tallies(1, tallies, m);
        let spec = PoissonSpec::new(vec![class.lambda])?;
        class_stats.push(ClassStats {
            class: class.canonical.to_string(),
            word_length: class.word_length,
            class_size: class.class_size,
            lambda: ratio_string(&class.lambda),
            sample_count: m,
            mean: Num(mu),
            mean_standard_error: Num((variance / mf).sqrt()),
            variance: Num(variance),
            variance_standard_error: Num(((m4 - m2 * m2).max(0.0) / mf).sqrt()),
            tv_to_poisson: Num(tv_to_product_poisson(&marginal, &spec)?),
            tv_standard_error: Num(plug_in_tv_standard_error(&marginal, &spec)?),
        });
    }

    let covariances = (d <= MAX_PAIRWISE_CLASSES).then(|| {
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let dev = |r: &SampleRow| {
                    (r.counts[a] as f64 - means[a]) * (r.counts[b] as f64 - means[b])
                };
                let biased = rows.iter().map(dev).sum::<f64>() / mf;
                let m22 = rows.iter().map(|r| dev(r).powi(2)).sum::<f64>() / mf;
                let cov = if m > 1 { biased * mf / (mf - 1.0) } else { 0.0 };
                out.push(CovarianceEntry {
                    first: classes[a].canonical.to_string(),
                    second: classes[b].canonical.to_string(),
                    sample_count: m,
                    covariance: Num(cov),
                    standard_error: Num(((m22 - biased * biased).max(0.0) / mf).sqrt()),
                });
            }
        }
        out
    });

    let mut joint: BTreeMap<CountVector, u64> = BTreeMap::new();
    for r in &rows {
        *joint.entry(CountVector(r.counts.clone())).or_default() += 1;
    }
    let distinct_vectors = joint.len();
    let joint_law = from_tallies(d, joint, m);
    let spec = PoissonSpec::for_classes(&classes);
    let joint_tv = JointTv {
        sample_count: m,
        distinct_vectors,
        estimate: Num(tv_to_product_poisson(&joint_law, &spec)?),
        standard_error: Num(plug_in_tv_standard_error(&joint_law, &spec)?),
    };

    let max_len = classes.iter().map(|c| c.word_length).max().unwrap_or(0);
    let bounds = if max_len <= n {
        let main = main_bound(&classes, n as u128)?;
        let refined = if d <= MAX_PAIRWISE_CLASSES {
            Some(bound_report(&classes, n as u128)?.refined_mtv_bound)
        } else {
            None
        };
        Some(BoundSummary {
            main_bound_log10: Num(main.log10()),
            main_bound_clamped: Num(main.clamped_to_one()),
            refined_mtv_bound_log10: refined.map(|r| Num(r.log10())),
            refined_mtv_bound_clamped: refined.map(|r| Num(r.clamped_to_one())),
        })
    } else {
        None
    };

    let (connected, connected_se) = mean_and_se(rows.iter().map(|r| r.connected as u8 as f64), mf);
    let (genus, genus_se) = mean_and_se(rows.iter().map(|r| r.genus as f64), mf);
    let (cusps, cusps_se) = mean_and_se(rows.iter().map(|r| r.cusps as f64), mf);
    let topology = TopologySummary {
        sample_count: m,
        connected_fraction: Num(connected),
        connected_standard_error: Num(connected_se),
        mean_genus: Num(genus),
        genus_standard_error: Num(genus_se),
        genus_ratio: Num(genus / (n as f64 / 2.0)),
        mean_cusp_count: Num(cusps),
        cusp_standard_error: Num(cusps_se),
    };

    Ok(StatsReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        classes: class_stats,
        covariances,
        joint_tv,
        bounds,
        topology,
    })
}

// ---------------------------------------------------------------------------
// bound

#[derive(Clone, Debug, Serialize)]
pub struct BoundValue {
    pub log10: Option<Num>,
    pub clamped: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl From<LogNumber> for BoundValue {
    fn from(x: LogNumber) -> Self {
        BoundValue {
            log10: (!x.is_zero()).then(|| Num(x.log10())),
            clamped: Num(x.clamped_to_one()),
            exact: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaLog10 {
    pub sigma1: Option<Num>,
    pub sigma2: Option<Num>,
    pub sigma3: Option<Num>,
    pub sigma4: Option<Num>,
}

impl From<&crate::bounds::SigmaTerms<LogNumber>> for SigmaLog10 {
    fn from(s: &crate::bounds::SigmaTerms<LogNumber>) -> Self {
        let f = |x: &LogNumber| (!x.is_zero()).then(|| Num(x.log10()));
        SigmaLog10 {
            sigma1: f(&s.sigma1),
            sigma2: f(&s.sigma2),
            sigma3: f(&s.sigma3),
            sigma4: f(&s.sigma4),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassBoundRecord {
    pub class: String,
    pub word_length: usize,
    pub class_size: usize,
    pub lambda: String,
    pub word: SigmaLog10,
    pub class_scaled: SigmaLog10,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnivariateBound {
    pub scale: Num,
    pub main_bound: BoundValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundOutput {
    pub schema_version: &'static str,
    pub config: ExperimentConfig,
    pub class_count: usize,
    pub max_word_length: usize,
    pub max_class_size: u64,
    pub main_bound: BoundValue,
    pub refined_mtv_bound: BoundValue,
    /// Refined bound at most the main bound.
    pub chain_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub univariate: Option<UnivariateBound>,
    pub per_class: Vec<ClassBoundRecord>,
}

pub fn run_bound(config: &ExperimentConfig) -> Result<BoundOutput> {
    let n = config.n.ok_or(Error::out_of_range("N", "missing", ">= 1"))?;
    let classes = config.selection.resolve()?;
    let report = bound_report(&classes, n)?;
    let mut main = BoundValue::from(report.main_bound);
    main.exact = Some(main_bound_exact(classes.len(), report.max_word_length, n)?.to_string());
    let univariate = match classes.as_slice() {
        [single] => Some(UnivariateBound {
            scale: Num(univariate_bound_scale(single.lambda_f64())?),
            main_bound: univariate_main_bound(single, n)?.into(),
        }),
        _ => None,
    };
    let per_class = report
        .per_class
        .iter()
        .map(|s| ClassBoundRecord {
            class: s.class.canonical.to_string(),
            word_length: s.class.word_length,
            class_size: s.class.class_size,
            lambda: ratio_string(&s.class.lambda),
            word: (&s.word).into(),
            class_scaled: (&s.class_scaled).into(),
        })
        .collect();
    Ok(BoundOutput {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        class_count: classes.len(),
        max_word_length: report.max_word_length,
        max_class_size: report.max_class_size,
        chain_holds: report.chain_holds(),
        main_bound: main,
        refined_mtv_bound: report.refined_mtv_bound.into(),
        univariate,
        per_class,
    })
}

// ---------------------------------------------------------------------------
// oracle

#[derive(Clone, Debug, Serialize)]
pub struct OracleClass {
    pub class: String,
    pub lambda: String,
    pub exact_mean: String,
    pub exact_mean_decimal: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleAtom {
    pub counts: CountVector,
    pub gluings: u64,
    pub probability: String,
    pub probability_decimal: Num,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleOutput {
    pub schema_version: &'static str,
    pub config: ExperimentConfig,
    pub gluing_count: u64,
    pub classes: Vec<OracleClass>,
    pub atoms: Vec<OracleAtom>,
    pub exact_mtv: Num,
    /// `min(1, main bound)`, absent when the longest word exceeds `N`.
    pub main_bound_clamped: Option<Num>,
}

pub fn run_oracle(config: &ExperimentConfig, allow_n3: bool) -> Result<OracleOutput> {
    let n = config.n_usize()?;
    if n == 3 && !allow_n3 {
        return Err(Error::out_of_range("N", 3, "1..=2 (N = 3 needs --allow-n3)"));
    }
    let classes = config.selection.resolve()?;
    let sys = exact_joint_distribution(&classes, n)?;
    let total = sys.gluing_count;
    let atoms = sys
        .tallies
        .iter()
        .map(|(k, &c)| {
            let p = Ratio::new(c, total);
            OracleAtom {
                counts: k.clone(),
                gluings: c,
                probability: ratio_string(&p),
                probability_decimal: Num(c as f64 / total as f64),
            }
        })
        .collect();
    let means = sys.means_f64();
    let max_len = classes.iter().map(|c| c.word_length).max().unwrap_or(0);
    let main_bound_clamped = if max_len <= n {
        Some(Num(main_bound(&classes, n as u128)?.clamped_to_one()))
    } else {
        None
    };
    Ok(OracleOutput {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        gluing_count: total,
        classes: classes
            .iter()
            .zip(sys.exact_means.iter().zip(means))
            .map(|(c, (exact, dec))| OracleClass {
                class: c.canonical.to_string(),
                lambda: ratio_string(&c.lambda),
                exact_mean: exact.to_string(),
                exact_mean_decimal: Num(dec),
            })
            .collect(),
        atoms,
        exact_mtv: Num(sys.exact_mtv_f64()),
        main_bound_clamped,
    })
}

// ---------------------------------------------------------------------------
// rendering

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_table<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

pub fn render_words(r: &WordsReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_table(&r.records),
    }
}

pub fn render_stats(r: &StatsReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_table(&r.classes),
    }
}

#[derive(Serialize)]
struct BoundCsvRow<'a> {
    class: &'a str,
    word_length: usize,
    class_size: usize,
    lambda: &'a str,
    sigma1_log10: Option<Num>,
    sigma2_log10: Option<Num>,
    sigma3_log10: Option<Num>,
    sigma4_log10: Option<Num>,
    refined_log10: Option<Num>,
    main_log10: Option<Num>,
}

pub fn render_bound(r: &BoundOutput, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_table(r.per_class.iter().map(|c| BoundCsvRow {
            class: &c.class,
            word_length: c.word_length,
            class_size: c.class_size,
            lambda: &c.lambda,
            sigma1_log10: c.class_scaled.sigma1,
            sigma2_log10: c.class_scaled.sigma2,
            sigma3_log10: c.class_scaled.sigma3,
            sigma4_log10: c.class_scaled.sigma4,
            refined_log10: r.refined_mtv_bound.log10,
            main_log10: r.main_bound.log10,
        })),
    }
}

#[derive(Serialize)]
struct AtomCsvRow<'a> {
    counts: String,
    gluings: u64,
    probability: &'a str,
    probability_decimal: Num,
}

pub fn render_oracle(r: &OracleOutput, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_table(r.atoms.iter().map(|a| AtomCsvRow {
            counts: a.counts.0.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
            gluings: a.gluings,
            probability: &a.probability,
            probability_decimal: a.probability_decimal,
        })),
    }
}

// ---------------------------------------------------------------------------
// command line

#[derive(Debug, Parser)]
#[command(name = "randsurf", version, about = "Closed geodesics on random surfaces glued from ideal triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List word classes with their traces, lengths and Poisson means.
    Words(WordsArgs),
    /// Sample gluings and compare class counts with their Poisson limits.
    Stats(StatsArgs),
    /// Evaluate the explicit total-variation bounds.
    Bound(BoundArgs),
    /// Tabulate the exact law of class counts over every gluing.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ClassArgs {
    /// Comma-separated words; each stands for its class.
    #[arg(long, value_delimiter = ',')]
    pub classes: Option<Vec<String>>,
    /// Every hyperbolic class with trace at most this value.
    #[arg(long)]
    pub max_trace: Option<u64>,
    /// Every class with word length at most this value.
    #[arg(long = "max-word-len", visible_alias = "max-len")]
    pub max_word_len: Option<usize>,
}

impl ClassArgs {
    pub fn selection(&self) -> ClassSelection {
        match (&self.classes, self.max_trace, self.max_word_len) {
            (Some(words), _, _) => ClassSelection::Classes(words.clone()),
            (_, Some(k), _) => ClassSelection::MaxTrace(k),
            (_, _, Some(m)) => ClassSelection::MaxWordLength(m),
            _ => ClassSelection::Classes(Vec::new()),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct WordsArgs {
    #[command(flatten)]
    pub classes: ClassArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    /// Surfaces have 2N triangles.
    #[arg(long)]
    pub n: u128,
    #[arg(long)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Threads used for sampling; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[command(flatten)]
    pub classes: ClassArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub n: u128,
    #[command(flatten)]
    pub classes: ClassArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: u128,
    /// Permit N = 3 (34 459 425 gluings; needs the n3-oracle feature).
    #[arg(long)]
    pub allow_n3: bool,
    #[command(flatten)]
    pub classes: ClassArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Words(a) => &a.output,
            Command::Stats(a) => &a.output,
            Command::Bound(a) => &a.output,
            Command::Oracle(a) => &a.output,
        }
    }
}

/// Run a parsed command and return the rendered report.
pub fn execute(command: &Command) -> Result<String> {
    let format = command.output().format;
    match command {
        Command::Words(a) => {
            let mut cfg = ExperimentConfig::new("words", a.classes.selection());
            cfg.format = format;
            render_words(&run_words(&cfg)?, format)
        }
        Command::Stats(a) => {
            let mut cfg = ExperimentConfig::new("stats", a.classes.selection());
            cfg.n = Some(a.n);
            cfg.samples = Some(a.samples);
            cfg.seed = Some(a.seed);
            cfg.workers = a.workers;
            cfg.format = format;
            render_stats(&run_stats(&cfg)?, format)
        }
        Command::Bound(a) => {
            let mut cfg = ExperimentConfig::new("bound", a.classes.selection());
            cfg.n = Some(a.n);
            cfg.format = format;
            render_bound(&run_bound(&cfg)?, format)
        }
        Command::Oracle(a) => {
            let mut cfg = ExperimentConfig::new("oracle", a.classes.selection());
            cfg.n = Some(a.n);
            cfg.format = format;
            render_oracle(&run_oracle(&cfg, a.allow_n3)?, format)
        }
    }
}
