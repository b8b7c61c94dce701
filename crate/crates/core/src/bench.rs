//! Run algorithm suites over instance sets and tabulate the counters.
//!
//! Aggregates only cover instances that every algorithm finished within the
//! caps, so rows are directly comparable. All algorithms must agree on the
//! optimal cost of every instance; a disagreement is an error, not a data
//! point.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;
use thiserror::Error;

use crate::metareason::timing::DEFAULT_EMA_DECAY;
use crate::metareason::{calibrate, TimingModel};
use crate::search::{
    ida_star, Algorithm, Cost, Domain, HeuristicChoice, SearchConfig, SearchError, SearchStats,
    DEFAULT_MAX_DEPTH, INFINITE_COST,
};

/// Random states sampled by `calibrate`.
pub const CALIBRATION_SAMPLES: usize = 1000;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no instances to run")]
    NoInstances,
    #[error("no algorithms to run")]
    NoAlgorithms,
    #[error("caps and repetitions must be positive")]
    InvalidCap,
    #[error("instance {instance}: algorithms disagree on the optimal cost ({costs})")]
    CostMismatch { instance: String, costs: String },
    #[error("could not start worker threads: {0}")]
    Threads(String),
}

/// Where the decision rule gets `t1`, `t2` and `t_e` from.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum TimingSpec {
    /// Measure on random states of each domain before searching.
    #[default]
    Calibrate,
    Fixed {
        t1: f64,
        t2: f64,
        te: f64,
    },
    /// Online moving averages with the given decay.
    Ema {
        decay: f64,
    },
}

impl TimingSpec {
    pub fn resolve<D: Domain>(&self, domain: &D, seed: u64) -> TimingModel {
        match *self {
            TimingSpec::Calibrate => calibrate(domain, CALIBRATION_SAMPLES, seed),
            TimingSpec::Fixed { t1, t2, te } => TimingModel::fixed(t1, t2, te),
            TimingSpec::Ema { decay } => TimingModel::online(decay),
        }
    }
}

/// Accepts `calibrate`, `fixed:<t1>,<t2>,<te>` and `ema[:<decay>]`.
impl FromStr for TimingSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid timing spec `{s}` (calibrate | fixed:t1,t2,te | ema:decay)");
        let positive = |v: &str| -> Result<f64, String> {
            let x: f64 = v.trim().parse().map_err(|_| bad())?;
            if x.is_finite() && x >= 0.0 {
                Ok(x)
            } else {
                Err(bad())
            }
        };
        match s.trim() {
            "calibrate" => Ok(TimingSpec::Calibrate),
            "ema" => Ok(TimingSpec::Ema {
                decay: DEFAULT_EMA_DECAY,
            }),
            other => {
                if let Some(rest) = other.strip_prefix("fixed:") {
                    let parts: Vec<&str> = rest.split(',').collect();
                    if parts.len() != 3 {
                        return Err(bad());
                    }
                    Ok(TimingSpec::Fixed {
                        t1: positive(parts[0])?,
                        t2: positive(parts[1])?,
                        te: positive(parts[2])?,
                    })
                } else if let Some(rest) = other.strip_prefix("ema:") {
                    let decay = positive(rest)?;
                    if decay == 0.0 || decay > 1.0 {
                        return Err(bad());
                    }
                    Ok(TimingSpec::Ema { decay })
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl fmt::Display for TimingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimingSpec::Calibrate => f.write_str("calibrate"),
            TimingSpec::Fixed { t1, t2, te } => write!(f, "fixed:{t1},{t2},{te}"),
            TimingSpec::Ema { decay } => write!(f, "ema:{decay}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub timing: TimingSpec,
    pub node_cap: Option<u64>,
    pub time_cap: Option<Duration>,
    /// Timed runs per instance and algorithm; the fastest one is reported.
    pub repetitions: usize,
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    pub calibration_seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: vec![
                Algorithm::Ida(HeuristicChoice::H1),
                Algorithm::Ida(HeuristicChoice::H2),
                Algorithm::LAZY,
            ],
            timing: TimingSpec::Calibrate,
            node_cap: None,
            time_cap: None,
            repetitions: 1,
            threads: None,
            calibration_seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchInstance<D> {
    pub id: String,
    pub seed: Option<u64>,
    pub domain: D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Solved(Cost),
    Unsolvable,
    /// A node, time or depth cap stopped the run.
    Capped,
}

impl Outcome {
    fn cost_field(&self) -> String {
        match self {
            Outcome::Solved(c) => c.to_string(),
            Outcome::Unsolvable => "inf".to_string(),
            Outcome::Capped => String::new(),
        }
    }

    fn parse_field(s: &str) -> Option<Outcome> {
        match s {
            "" => Some(Outcome::Capped),
            "inf" => Some(Outcome::Unsolvable),
            n => n.parse().ok().map(Outcome::Solved),
        }
    }
}

/// One algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRecord {
    pub instance_id: String,
    /// Algorithm spec as accepted by `Algorithm::from_str`.
    pub algorithm: String,
    pub outcome: Outcome,
    pub iterations: u64,
    pub generated: u64,
    pub h1_evals: u64,
    pub h2_evals: u64,
    pub h2_helpful: u64,
    pub wall_time_s: f64,
    pub seed: Option<u64>,
}

/// Totals of one algorithm over the commensurable instances.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algorithm: String,
    pub time_s: f64,
    pub generated: u64,
    /// Blank for single-heuristic IDA*.
    pub h2_total: Option<u64>,
    pub h2_helpful: Option<u64>,
    pub instances: usize,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub records: Vec<InstanceRecord>,
    /// Instances left out of the aggregates because some run hit a cap.
    pub excluded: Vec<String>,
    /// `t2` used for the clairvoyant row.
    pub clairvoyant_t2: f64,
}

/// Run time LIDA* would have had if it computed `h2` only where it turned
/// out helpful: the measured time minus `t2` per unhelpful evaluation,
/// never below zero.
pub fn clairvoyant_estimate(lida: &SearchStats, timing: &TimingModel) -> f64 {
    clairvoyant_seconds(
        lida.wall_time.as_secs_f64(),
        lida.h2_evals,
        lida.h2_helpful,
        timing.t2,
    )
}

pub fn clairvoyant_seconds(wall_s: f64, h2_evals: u64, h2_helpful: u64, t2: f64) -> f64 {
    let wasted = h2_evals.saturating_sub(h2_helpful);
    if wasted == 0 {
        return wall_s;
    }
    (wall_s - wasted as f64 * t2).max(0.0)
}

fn single_heuristic(algorithm: &Algorithm) -> bool {
    matches!(
        algorithm,
        Algorithm::Ida(HeuristicChoice::H1) | Algorithm::Ida(HeuristicChoice::H2)
    )
}

fn run_one<D: Domain>(
    instance: &BenchInstance<D>,
    algorithm: &Algorithm,
    config: &BenchConfig,
    timing: TimingModel,
) -> InstanceRecord {
    let search = SearchConfig {
        node_cap: config.node_cap,
        time_cap: config.time_cap,
        max_depth: DEFAULT_MAX_DEPTH,
        timing,
    };
    let mut first: Option<(Outcome, SearchStats)> = None;
    let mut best = f64::INFINITY;
    for _ in 0..config.repetitions {
        let (outcome, stats) = match ida_star(&instance.domain, algorithm, &search) {
            Ok(sol) => (Outcome::Solved(sol.cost), sol.stats),
            Err(e @ SearchError::Unsolvable { .. }) => (Outcome::Unsolvable, e.stats().clone()),
            Err(e @ SearchError::LimitExceeded { .. }) => {
                log::info!("{} / {algorithm}: {e}", instance.id);
                (Outcome::Capped, e.stats().clone())
            }
        };
        best = best.min(stats.wall_time.as_secs_f64());
        let capped = outcome == Outcome::Capped;
        first.get_or_insert((outcome, stats));
        if capped {
            break;
        }
    }
    let (outcome, stats) = first.expect("at least one repetition");
    InstanceRecord {
        instance_id: instance.id.clone(),
        algorithm: algorithm.to_string(),
        outcome,
        iterations: stats.iterations,
        generated: stats.generated,
        h1_evals: stats.h1_evals,
        h2_evals: stats.h2_evals,
        h2_helpful: stats.h2_helpful,
        wall_time_s: best,
        seed: instance.seed,
    }
}

fn check_costs(records: &[InstanceRecord]) -> Result<(), BenchError> {
    let mut settled = records.iter().filter(|r| r.outcome != Outcome::Capped);
    let Some(reference) = settled.next() else {
        return Ok(());
    };
    if settled.all(|r| r.outcome == reference.outcome) {
        return Ok(());
    }
    let costs = records
        .iter()
        .map(|r| format!("{}={}", r.algorithm, r.outcome.cost_field()))
        .collect::<Vec<_>>()
        .join(", ");
    Err(BenchError::CostMismatch {
        instance: reference.instance_id.clone(),
        costs,
    })
}

/// Run every algorithm on every instance. Instances are spread over worker
/// threads; the runs for one instance happen in sequence on one thread.
pub fn run_suite<D>(
    instances: &[BenchInstance<D>],
    config: &BenchConfig,
) -> Result<BenchReport, BenchError>
where
    D: Domain + Sync,
{
    if instances.is_empty() {
        return Err(BenchError::NoInstances);
    }
    if config.algorithms.is_empty() {
        return Err(BenchError::NoAlgorithms);
    }
    if config.repetitions == 0
        || config.node_cap == Some(0)
        || config.time_cap.is_some_and(|d| d.is_zero())
    {
        return Err(BenchError::InvalidCap);
    }

    let first = &instances[0].domain;
    let names = first.heuristic_names();
    let timing = config.timing.resolve(first, config.calibration_seed);
    let clairvoyant_t2 = match config.timing {
        TimingSpec::Calibrate => timing.t2,
        _ => calibrate(first, CALIBRATION_SAMPLES, config.calibration_seed).t2,
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| BenchError::Threads(e.to_string()))?;
    let per_instance: Vec<Vec<InstanceRecord>> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| {
                config
                    .algorithms
                    .iter()
                    .map(|alg| run_one(inst, alg, config, timing))
                    .collect()
            })
            .collect()
    });

    for records in &per_instance {
        check_costs(records)?;
    }

    let mut excluded = Vec::new();
    let mut included = Vec::new();
    for (inst, records) in instances.iter().zip(&per_instance) {
        if records.iter().any(|r| r.outcome == Outcome::Capped) {
            log::info!("{} excluded from the aggregates: a run hit a cap", inst.id);
            excluded.push(inst.id.clone());
        } else {
            included.push(records);
        }
    }

    let mut rows = Vec::new();
    for (k, alg) in config.algorithms.iter().enumerate() {
        let mut row = BenchRow {
            algorithm: alg.label(names),
            time_s: 0.0,
            generated: 0,
            h2_total: None,
            h2_helpful: None,
            instances: included.len(),
        };
        let (mut h2, mut helpful) = (0, 0);
        for records in &included {
            let r = &records[k];
            row.time_s += r.wall_time_s;
            row.generated += r.generated;
            h2 += r.h2_evals;
            helpful += r.h2_helpful;
        }
        if !single_heuristic(alg) {
            row.h2_total = Some(h2);
            row.h2_helpful = Some(helpful);
        }
        rows.push(row);
    }
    if let Some(k) = config.algorithms.iter().position(|a| *a == Algorithm::LAZY) {
        let lida = &rows[k];
        let time_s = included
            .iter()
            .map(|records| {
                let r = &records[k];
                clairvoyant_seconds(r.wall_time_s, r.h2_evals, r.h2_helpful, clairvoyant_t2)
            })
            .sum();
        rows.push(BenchRow {
            algorithm: "Clairvoyant".to_string(),
            time_s,
            generated: lida.generated,
            h2_total: lida.h2_helpful,
            h2_helpful: lida.h2_helpful,
            instances: included.len(),
        });
    }

    Ok(BenchReport {
        rows,
        records: per_instance.into_iter().flatten().collect(),
        excluded,
        clairvoyant_t2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmitFormat {
    #[default]
    Markdown,
    Csv,
}

impl FromStr for EmitFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "markdown" | "md" => Ok(EmitFormat::Markdown),
            "csv" => Ok(EmitFormat::Csv),
            other => Err(format!("unknown format `{other}` (markdown or csv)")),
        }
    }
}

pub const CSV_HEADER: [&str; 10] = [
    "instance_id",
    "algorithm",
    "cost",
    "iterations",
    "generated",
    "h1_evals",
    "h2_evals",
    "h2_helpful",
    "wall_time_s",
    "seed",
];

/// `1234567` as `1,234,567`.
pub fn thousands(n: u64) -> String {
    let digits = n.to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// Markdown: one line per aggregate row. CSV: one line per instance and
/// algorithm.
pub fn emit_table(report: &BenchReport, format: EmitFormat) -> String {
    match format {
        EmitFormat::Markdown => emit_markdown(&report.rows),
        EmitFormat::Csv => emit_csv(&report.records),
    }
}

pub fn emit_markdown(rows: &[BenchRow]) -> String {
    let mut out = String::from("| algorithm | time | generated | h2 total | h2 helpful |\n");
    out.push_str("|---|---:|---:|---:|---:|\n");
    let opt = |v: Option<u64>| v.map(thousands).unwrap_or_default();
    for row in rows {
        out.push_str(&format!(
            "| {} | {:.4} | {} | {} | {} |\n",
            row.algorithm,
            row.time_s,
            thousands(row.generated),
            opt(row.h2_total),
            opt(row.h2_helpful),
        ));
    }
    out
}

pub fn emit_csv(records: &[InstanceRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        writer
            .write_record([
                r.instance_id.clone(),
                r.algorithm.clone(),
                r.outcome.cost_field(),
                r.iterations.to_string(),
                r.generated.to_string(),
                r.h1_evals.to_string(),
                r.h2_evals.to_string(),
                r.h2_helpful.to_string(),
                r.wall_time_s.to_string(),
                r.seed.map(|s| s.to_string()).unwrap_or_default(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("row {row}: unexpected header or field `{field}`")]
    Field { row: usize, field: String },
}

/// Read back what [`emit_csv`] wrote.
pub fn parse_csv(text: &str) -> Result<Vec<InstanceRecord>, CsvError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(CsvError::Field {
            row: 0,
            field: header.iter().collect::<Vec<_>>().join(","),
        });
    }
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let row = i + 1;
        let field = |k: usize| rec.get(k).unwrap_or("");
        let bad = |k: usize| CsvError::Field {
            row,
            field: field(k).to_string(),
        };
        let uint = |k: usize| field(k).parse::<u64>().map_err(|_| bad(k));
        out.push(InstanceRecord {
            instance_id: field(0).to_string(),
            algorithm: field(1).to_string(),
            outcome: Outcome::parse_field(field(2)).ok_or_else(|| bad(2))?,
            iterations: uint(3)?,
            generated: uint(4)?,
            h1_evals: uint(5)?,
            h2_evals: uint(6)?,
            h2_helpful: uint(7)?,
            wall_time_s: field(8).parse().map_err(|_| bad(8))?,
            seed: match field(9) {
                "" => None,
                _ => Some(uint(9)?),
            },
        });
    }
    Ok(out)
}

impl InstanceRecord {
    /// Cost as a number, `INFINITE_COST` when unsolvable, `None` when capped.
    pub fn cost(&self) -> Option<Cost> {
        match self.outcome {
            Outcome::Solved(c) => Some(c),
            Outcome::Unsolvable => Some(INFINITE_COST),
            Outcome::Capped => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explicit::ExplicitGraph;
    use crate::metareason::DecisionPolicy;
    use std::time::Duration;

    fn chain() -> ExplicitGraph {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 1, 2)
            .add_node(1, 1, 1)
            .add_node(2, 0, 0)
            .add_edge(0, 1, 1)
            .add_edge(1, 2, 1)
            .set_goal(2);
        g
    }

    fn config(algorithms: Vec<Algorithm>) -> BenchConfig {
        BenchConfig {
            algorithms,
            timing: TimingSpec::Fixed {
                t1: 1.0,
                t2: 1.0,
                te: 1.0,
            },
            threads: Some(1),
            ..BenchConfig::default()
        }
    }

    #[test]
    fn timing_spec_strings() {
        assert_eq!("calibrate".parse(), Ok(TimingSpec::Calibrate));
        assert_eq!(
            "fixed:1,11,1".parse(),
            Ok(TimingSpec::Fixed {
                t1: 1.0,
                t2: 11.0,
                te: 1.0
            })
        );
        assert_eq!("ema:0.05".parse(), Ok(TimingSpec::Ema { decay: 0.05 }));
        for bad in [
            "fixed:1,2",
            "ema:0",
            "ema:2",
            "fixed:a,b,c",
            "sometimes",
            "fixed:-1,1,1",
        ] {
            assert!(bad.parse::<TimingSpec>().is_err(), "{bad}");
        }
        for spec in ["calibrate", "fixed:1,11,1", "ema:0.05"] {
            assert_eq!(spec.parse::<TimingSpec>().unwrap().to_string(), spec);
        }
    }

    #[test]
    fn clairvoyant_examples() {
        assert_eq!(clairvoyant_seconds(1.0, 40, 40, 0.001), 1.0);
        assert!((clairvoyant_seconds(1.0, 100, 40, 0.001) - 0.94).abs() < 1e-12);
        assert_eq!(clairvoyant_seconds(0.01, 100, 0, 1.0), 0.0);
        let stats = SearchStats {
            h2_evals: 7,
            h2_helpful: 7,
            wall_time: Duration::from_millis(250),
            ..SearchStats::default()
        };
        assert_eq!(
            clairvoyant_estimate(&stats, &TimingModel::fixed(1.0, 5.0, 1.0)),
            0.25
        );
    }

    #[test]
    fn thousands_separator() {
        assert_eq!(thousands(0), "0");
        assert_eq!(thousands(999), "999");
        assert_eq!(thousands(1000), "1,000");
        assert_eq!(thousands(21_886_093), "21,886,093");
    }

    #[test]
    fn one_row_per_algorithm_plus_clairvoyant() {
        let inst = [BenchInstance {
            id: "chain".into(),
            seed: Some(3),
            domain: chain(),
        }];
        let algs = vec![
            Algorithm::Ida(HeuristicChoice::H1),
            Algorithm::LAZY,
            Algorithm::Lazy(DecisionPolicy::constant(0.3, Default::default()).unwrap()),
        ];
        let report = run_suite(&inst, &config(algs)).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.rows[3].algorithm, "Clairvoyant");
        assert!(report
            .records
            .iter()
            .all(|r| r.outcome == Outcome::Solved(2)));
        assert_eq!(report.rows[0].h2_total, None);
        assert!(report.rows[1].h2_total.is_some());
        assert!(report.rows[3].time_s <= report.rows[1].time_s);
    }

    #[test]
    fn capped_instances_leave_the_aggregates() {
        let mut wide = ExplicitGraph::new(0);
        wide.add_node(0, 0, 3)
            .add_node(1, 0, 2)
            .add_node(2, 0, 1)
            .add_node(3, 0, 0);
        wide.add_edge(0, 1, 1)
            .add_edge(1, 2, 1)
            .add_edge(2, 3, 1)
            .set_goal(3);
        let inst = [
            BenchInstance {
                id: "wide".into(),
                seed: None,
                domain: wide,
            },
            BenchInstance {
                id: "chain".into(),
                seed: None,
                domain: chain(),
            },
        ];
        let mut cfg = config(vec![
            Algorithm::Ida(HeuristicChoice::H1),
            Algorithm::Ida(HeuristicChoice::H2),
        ]);
        cfg.node_cap = Some(5);
        let report = run_suite(&inst, &cfg).unwrap();
        assert_eq!(report.excluded, vec!["wide".to_string()]);
        assert!(report.rows.iter().all(|r| r.instances == 1));
        let chain_generated: u64 = report
            .records
            .iter()
            .filter(|r| r.instance_id == "chain" && r.algorithm == "ida-h1")
            .map(|r| r.generated)
            .sum();
        assert_eq!(report.rows[0].generated, chain_generated);
    }

    #[test]
    fn cost_mismatch_is_an_error() {
        let recs = [
            InstanceRecord {
                instance_id: "x".into(),
                algorithm: "ida-h1".into(),
                outcome: Outcome::Solved(3),
                iterations: 1,
                generated: 1,
                h1_evals: 1,
                h2_evals: 0,
                h2_helpful: 0,
                wall_time_s: 0.0,
                seed: None,
            },
            InstanceRecord {
                algorithm: "lida".into(),
                outcome: Outcome::Solved(4),
                ..InstanceRecord {
                    instance_id: "x".into(),
                    algorithm: String::new(),
                    outcome: Outcome::Capped,
                    iterations: 0,
                    generated: 0,
                    h1_evals: 0,
                    h2_evals: 0,
                    h2_helpful: 0,
                    wall_time_s: 0.0,
                    seed: None,
                }
            },
        ];
        assert!(matches!(
            check_costs(&recs),
            Err(BenchError::CostMismatch { .. })
        ));
        assert!(check_costs(&recs[..1]).is_ok());
    }

    #[test]
    fn empty_tables_are_header_only() {
        assert_eq!(emit_markdown(&[]).lines().count(), 2);
        assert_eq!(emit_csv(&[]).trim_end(), CSV_HEADER.join(","));
        assert!(parse_csv(&emit_csv(&[])).unwrap().is_empty());
    }

    #[test]
    fn invalid_configs() {
        let inst = [BenchInstance {
            id: "c".into(),
            seed: None,
            domain: chain(),
        }];
        assert!(matches!(
            run_suite(&inst, &config(vec![])),
            Err(BenchError::NoAlgorithms)
        ));
        let none: [BenchInstance<ExplicitGraph>; 0] = [];
        assert!(matches!(
            run_suite(&none, &config(vec![Algorithm::LAZY])),
            Err(BenchError::NoInstances)
        ));
        let mut cfg = config(vec![Algorithm::LAZY]);
        cfg.repetitions = 0;
        assert!(matches!(
            run_suite(&inst, &cfg),
            Err(BenchError::InvalidCap)
        ));
    }
}
