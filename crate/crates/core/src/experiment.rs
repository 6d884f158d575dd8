//! Campaign runner: load a graph once, select seeds with every configured
//! method at every `k`, estimate spread, score the selections and write
//! the results to an output directory.
//!
//! `report.csv` holds only deterministic columns, so two runs with the same
//! configuration produce identical bytes. Wall-clock times go to
//! `timings.csv`.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::centrality::{
    degree_order, degreediscount_select, greedy_select, DegreeDiscountParams, Measure, DEFAULT_GREEDY_REPLICATIONS,
};
use crate::diffusion::{estimate_spread, ICParams, SpreadEstimate};
use crate::error::{Error, Result};
use crate::graph::{load_edge_list_file, Graph, LoadSummary};
use crate::metrics::{cn12_coverage, com_overlap, unique_influenced_percent, CoverageReport};
use crate::seedselect::{
    degreedistance2_select, degreedistance_select, fidd_select, random_select, sidd_select, Method, SeedSet,
    SelectionConfig,
};

pub const REPORT_SCHEMA: &str = "# ddseed-report v1";
pub const OVERLAP_SCHEMA: &str = "# ddseed-overlap v1";
pub const DEFAULT_K_GRID: [usize; 4] = [25, 50, 75, 100];

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub dataset: PathBuf,
    pub directed: bool,
    pub methods: Vec<Method>,
    pub k_values: Vec<usize>,
    /// `k` is overridden per run; the remaining fields apply to every selector.
    pub selection: SelectionConfig,
    /// Spread estimation; `master_seed` also drives random and greedy selection.
    pub ic: ICParams,
    pub greedy_replications: usize,
    pub out_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn new(dataset: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        Self {
            dataset: dataset.into(),
            directed: false,
            methods: Vec::new(),
            k_values: DEFAULT_K_GRID.to_vec(),
            selection: SelectionConfig::default(),
            ic: ICParams::default(),
            greedy_replications: DEFAULT_GREEDY_REPLICATIONS,
            out_dir: out_dir.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::invalid("configure at least one method"));
        }
        if self.k_values.is_empty() || self.k_values.contains(&0) {
            return Err(Error::invalid("k values must be non-empty and positive"));
        }
        if !self.k_values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("k values must be strictly ascending"));
        }
        if self.greedy_replications == 0 {
            return Err(Error::invalid("greedy needs at least one replication"));
        }
        SelectionConfig { k: 1, ..self.selection }.validate()?;
        self.ic.validate()
    }

    fn dataset_name(&self) -> String {
        self.dataset
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    }
}

/// Runs one method for one `k`.
pub fn select_seeds(
    g: &Graph,
    method: Method,
    selection: &SelectionConfig,
    ic: &ICParams,
    greedy_replications: usize,
) -> Result<SeedSet> {
    let config = *selection;
    config.validate()?;
    let k = config.k;
    if k > g.node_count() {
        return Err(Error::invalid(format!(
            "cannot select {k} seeds from {} nodes",
            g.node_count()
        )));
    }
    let mut set = match method {
        Method::Measure(Measure::Degree) => {
            let mut order = degree_order(g);
            order.truncate(k);
            SeedSet::new(method, config, order)
        }
        Method::Measure(m) => {
            let scores = m.compute(g)?;
            SeedSet::new(method, config, scores.top_k(k).to_vec())
        }
        Method::DegreeDiscount => degreediscount_select(g, k, &DegreeDiscountParams { p: ic.p })?,
        Method::Greedy => greedy_select(g, k, ic, greedy_replications)?,
        Method::Random => random_select(g, k, ic.master_seed)?,
        Method::DegreeDistance => degreedistance_select(g, &config)?,
        Method::DegreeDistance2 => degreedistance2_select(g, k)?,
        Method::Fidd => fidd_select(g, &config)?,
        Method::Sidd => sidd_select(g, &config)?,
    };
    set.config = config;
    Ok(set)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub method: Method,
    pub k: usize,
    pub seeds: Vec<crate::graph::NodeId>,
    pub spread: Option<SpreadEstimate>,
    pub coverage: Option<CoverageReport>,
    pub unique_influenced_percent: Option<f64>,
    /// Overlap with every configured method at the same `k`, in config order.
    pub com: Vec<(Method, Option<f64>)>,
    pub select_ms: f64,
    pub simulate_ms: f64,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub dataset: String,
    pub methods: Vec<Method>,
    pub rows: Vec<ReportRow>,
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

impl ExperimentReport {
    /// Deterministic columns only.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{REPORT_SCHEMA}")?;
        let mut out = csv::Writer::from_writer(w);
        let mut header: Vec<String> = [
            "dataset",
            "method",
            "k",
            "seeds_found",
            "spread_mean",
            "spread_stddev",
            "spread_stderr",
            "cov_percent",
            "cov_total",
            "cov_unique",
            "unique_influenced_percent",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        header.extend(self.methods.iter().map(|m| format!("com_{m}")));
        header.push("status".into());
        out.write_record(&header)?;
        for row in &self.rows {
            let mut rec = vec![
                self.dataset.clone(),
                row.method.to_string(),
                row.k.to_string(),
                row.seeds.len().to_string(),
                fmt_opt(row.spread.map(|s| s.mean)),
                fmt_opt(row.spread.map(|s| s.stddev)),
                fmt_opt(row.spread.map(|s| s.standard_error())),
                fmt_opt(row.coverage.map(|c| c.cov_percent)),
                row.coverage.map(|c| c.total.to_string()).unwrap_or_default(),
                row.coverage.map(|c| c.unique.to_string()).unwrap_or_default(),
                fmt_opt(row.unique_influenced_percent),
            ];
            rec.extend(row.com.iter().map(|(_, c)| fmt_opt(*c)));
            rec.push(match &row.error {
                Some(e) => format!("error: {e}"),
                None => "ok".into(),
            });
            out.write_record(&rec)?;
        }
        out.flush()?;
        Ok(())
    }

    /// Per-phase wall-clock milliseconds.
    pub fn write_timings_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["dataset", "method", "k", "select_ms", "simulate_ms"])?;
        for row in &self.rows {
            out.write_record([
                self.dataset.clone(),
                row.method.to_string(),
                row.k.to_string(),
                format!("{:.3}", row.select_ms),
                format!("{:.3}", row.simulate_ms),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn load(config: &ExperimentConfig) -> Result<(Graph, LoadSummary)> {
    config.validate()?;
    load_edge_list_file(&config.dataset, config.directed)
}

fn write_log(path: &Path, config: &ExperimentConfig, g: &Graph, summary: &LoadSummary) -> Result<()> {
    let mut log = BufWriter::new(File::create(path)?);
    writeln!(log, "dataset {}", config.dataset.display())?;
    writeln!(log, "directed {}", config.directed)?;
    writeln!(
        log,
        "lines {} comments {} edges_read {} duplicates_dropped {} self_loops_dropped {}",
        summary.lines, summary.comment_lines, summary.edges_read, summary.duplicates_dropped, summary.self_loops_dropped
    )?;
    writeln!(log, "nodes {} edges {}", g.node_count(), g.edge_count())?;
    writeln!(
        log,
        "d_td {} theta {} beta {} p_pair {} p {} reps {} seed {}",
        config.selection.d_td,
        config.selection.theta,
        config.selection.beta,
        config.selection.p_pair,
        config.ic.p,
        config.ic.replications,
        config.ic.master_seed
    )?;
    if config.selection.d_td > 3 {
        writeln!(log, "warning: d_td above 3 is experimental")?;
    }
    log.flush()?;
    Ok(())
}

/// Full campaign over `methods x k_values`. Writes `report.csv`,
/// `timings.csv`, `run.log` and `seeds/<method>_k<k>.txt` under `out_dir`.
/// A failing method yields an error row and the campaign continues.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let (g, summary) = load(config)?;
    let report = run_on_graph(&g, config)?;
    fs::create_dir_all(config.out_dir.join("seeds"))?;
    write_log(&config.out_dir.join("run.log"), config, &g, &summary)?;
    report.write_csv(BufWriter::new(File::create(config.out_dir.join("report.csv"))?))?;
    report.write_timings_csv(BufWriter::new(File::create(config.out_dir.join("timings.csv"))?))?;
    Ok(report)
}

/// The in-memory part of [`run_experiment`]; seed files are still written.
pub fn run_on_graph(g: &Graph, config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let seeds_dir = config.out_dir.join("seeds");
    fs::create_dir_all(&seeds_dir)?;
    let mut rows = Vec::new();
    for &k in &config.k_values {
        let first = rows.len();
        for &method in &config.methods {
            let selection = SelectionConfig { k, ..config.selection };
            let started = Instant::now();
            let selected = select_seeds(g, method, &selection, &config.ic, config.greedy_replications);
            let select_ms = elapsed_ms(started);
            let mut row = ReportRow {
                method,
                k,
                seeds: Vec::new(),
                spread: None,
                coverage: None,
                unique_influenced_percent: None,
                com: Vec::new(),
                select_ms,
                simulate_ms: 0.0,
                error: None,
            };
            match selected.and_then(|set| {
                let path = seeds_dir.join(format!("{method}_k{k}.txt"));
                set.write_text(g, BufWriter::new(File::create(path)?))?;
                Ok(set)
            }) {
                Ok(set) => {
                    let started = Instant::now();
                    let spread = estimate_spread(g, &set.seeds, &config.ic);
                    row.simulate_ms = elapsed_ms(started);
                    let n = set.seeds.len();
                    let scored = spread.and_then(|s| {
                        let cov = cn12_coverage(g, &set.seeds, n)?;
                        let reach = if n > 0 { Some(unique_influenced_percent(g, &set.seeds)?) } else { None };
                        Ok((s, cov, reach))
                    });
                    match scored {
                        Ok((s, cov, reach)) => {
                            row.spread = Some(s);
                            row.coverage = Some(cov);
                            row.unique_influenced_percent = reach;
                        }
                        Err(e) => row.error = Some(e.to_string()),
                    }
                    row.seeds = set.seeds;
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            rows.push(row);
        }
        let batch: Vec<(Method, Option<Vec<_>>)> = rows[first..]
            .iter()
            .map(|r| (r.method, r.error.is_none().then(|| r.seeds.clone())))
            .collect();
        for row in &mut rows[first..] {
            row.com = batch
                .iter()
                .map(|(other, seeds)| {
                    let com = match (row.error.is_none(), seeds) {
                        (true, Some(s)) => com_overlap(&row.seeds, s, k).ok().map(|o| o.com_percent),
                        _ => None,
                    };
                    (*other, com)
                })
                .collect();
        }
    }
    Ok(ExperimentReport {
        dataset: config.dataset_name(),
        methods: config.methods.clone(),
        rows,
    })
}

/// Pairwise overlap and per-method coverage over `k_values`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapSummary {
    pub dataset: String,
    pub methods: Vec<Method>,
    pub k_values: Vec<usize>,
    /// `com[ki][i][j]`: overlap of methods `i` and `j` at `k_values[ki]`.
    pub com: Vec<Vec<Vec<Option<f64>>>>,
    /// `coverage[ki][i]`.
    pub coverage: Vec<Vec<Option<CoverageReport>>>,
}

impl OverlapSummary {
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{OVERLAP_SCHEMA}")?;
        let mut out = csv::Writer::from_writer(w);
        let mut header = vec!["dataset".to_string(), "k".into(), "method".into(), "cov_percent".into()];
        header.extend(self.methods.iter().map(|m| format!("com_{m}")));
        out.write_record(&header)?;
        for (ki, &k) in self.k_values.iter().enumerate() {
            for (i, m) in self.methods.iter().enumerate() {
                let mut rec = vec![
                    self.dataset.clone(),
                    k.to_string(),
                    m.to_string(),
                    fmt_opt(self.coverage[ki][i].map(|c| c.cov_percent)),
                ];
                rec.extend(self.com[ki][i].iter().map(|c| fmt_opt(*c)));
                out.write_record(&rec)?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

/// Selects once per method at the largest `k`. Every method's selection is
/// prefix-stable except `random`, which is redrawn per `k`.
pub fn summarize_overlap_on_graph(g: &Graph, config: &ExperimentConfig) -> Result<OverlapSummary> {
    config.validate()?;
    let k_max = *config.k_values.last().unwrap();
    let select = |method: Method, k: usize| {
        select_seeds(
            g,
            method,
            &SelectionConfig { k, ..config.selection },
            &config.ic,
            config.greedy_replications,
        )
        .map(|s| s.seeds)
    };
    let full: Vec<Option<Vec<_>>> = config
        .methods
        .iter()
        .map(|&m| select(m, k_max.min(g.node_count())).ok())
        .collect();
    let mut com = Vec::new();
    let mut coverage = Vec::new();
    for &k in &config.k_values {
        let at_k: Vec<Option<Vec<_>>> = config
            .methods
            .iter()
            .zip(&full)
            .map(|(&m, seeds)| {
                if m == Method::Random {
                    select(m, k).ok()
                } else {
                    seeds.as_ref().filter(|s| s.len() >= k).map(|s| s[..k].to_vec())
                }
            })
            .collect();
        com.push(
            at_k.iter()
                .map(|a| {
                    at_k.iter()
                        .map(|b| match (a, b) {
                            (Some(a), Some(b)) => com_overlap(a, b, k).ok().map(|o| o.com_percent),
                            _ => None,
                        })
                        .collect()
                })
                .collect(),
        );
        coverage.push(
            at_k.iter()
                .map(|s| s.as_ref().and_then(|s| cn12_coverage(g, s, k).ok()))
                .collect(),
        );
    }
    Ok(OverlapSummary {
        dataset: config.dataset_name(),
        methods: config.methods.clone(),
        k_values: config.k_values.clone(),
        com,
        coverage,
    })
}

/// Loads the dataset and writes `overlap.csv` under `out_dir`.
pub fn summarize_overlap(config: &ExperimentConfig) -> Result<OverlapSummary> {
    let (g, _) = load(config)?;
    let summary = summarize_overlap_on_graph(&g, config)?;
    fs::create_dir_all(&config.out_dir)?;
    summary.write_csv(BufWriter::new(File::create(config.out_dir.join("overlap.csv"))?))?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::barabasi_albert;

    fn write_graph(dir: &Path, g: &Graph) -> PathBuf {
        let path = dir.join("toy.edges");
        let mut f = File::create(&path).unwrap();
        for u in 0..g.node_count() {
            for &w in g.neighbors(u) {
                if u < w {
                    writeln!(f, "{u} {w}").unwrap();
                }
            }
        }
        path
    }

    fn config(dir: &Path, g: &Graph) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(write_graph(dir, g), dir.join("out"));
        c.methods = vec![Measure::Degree.into(), Method::Sidd, Method::Random];
        c.k_values = vec![2, 5];
        c.ic.replications = 200;
        c.greedy_replications = 20;
        c
    }

    #[test]
    fn zero_probability_spread_equals_k() {
        let dir = tempfile::tempdir().unwrap();
        let g = barabasi_albert(60, 2, 1).unwrap();
        let mut c = config(dir.path(), &g);
        c.ic.p = 0.0;
        let report = run_experiment(&c).unwrap();
        assert_eq!(report.rows.len(), 6);
        for row in &report.rows {
            assert!(row.error.is_none());
            let s = row.spread.unwrap();
            assert_eq!(s.mean, row.k as f64);
            assert_eq!(s.stddev, 0.0);
        }
        for name in ["report.csv", "timings.csv", "run.log", "seeds/sidd_k5.txt"] {
            assert!(c.out_dir.join(name).exists(), "{name}");
        }
    }

    #[test]
    fn report_bytes_are_reproducible() {
        let dir = tempfile::tempdir().unwrap();
        let g = barabasi_albert(80, 2, 3).unwrap();
        let mut c = config(dir.path(), &g);
        c.ic.p = 0.1;
        run_experiment(&c).unwrap();
        let first = fs::read(c.out_dir.join("report.csv")).unwrap();
        run_experiment(&c).unwrap();
        let second = fs::read(c.out_dir.join("report.csv")).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert!(text.starts_with(REPORT_SCHEMA));
        assert!(text.lines().nth(1).unwrap().ends_with("com_degree,com_sidd,com_random,status"));
    }

    #[test]
    fn failing_method_is_isolated() {
        let dir = tempfile::tempdir().unwrap();
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)], false).unwrap();
        let mut c = config(dir.path(), &g);
        c.k_values = vec![2, 5];
        let report = run_experiment(&c).unwrap();
        let (ok, failed): (Vec<_>, Vec<_>) = report.rows.iter().partition(|r| r.error.is_none());
        assert!(ok.iter().all(|r| r.k == 2));
        assert!(failed.iter().all(|r| r.k == 5));
        assert_eq!(failed.len(), 3);
        assert!(ok.iter().all(|r| r.com.iter().all(|(_, c)| c.is_some())));
    }

    #[test]
    fn config_validation() {
        let mut c = ExperimentConfig::new("x", "y");
        assert!(c.validate().is_err());
        c.methods = vec![Method::Sidd];
        assert!(c.validate().is_ok());
        c.k_values = vec![50, 25];
        assert!(c.validate().is_err());
        c.k_values = vec![25];
        c.ic.p = -1.0;
        assert!(c.validate().is_err());
        assert!(run_experiment(&ExperimentConfig {
            methods: vec![Method::Sidd],
            ..ExperimentConfig::new("/nonexistent/file", "y")
        })
        .is_err());
    }

    #[test]
    fn overlap_with_itself_is_total() {
        let dir = tempfile::tempdir().unwrap();
        let g = barabasi_albert(300, 3, 5).unwrap();
        let mut c = config(dir.path(), &g);
        c.methods = vec![Measure::Degree.into(), Measure::Degree.into(), Method::Random];
        c.k_values = DEFAULT_K_GRID.to_vec();
        let s = summarize_overlap(&c).unwrap();
        for ki in 0..4 {
            assert_eq!(s.com[ki][0][1], Some(100.0));
            assert_eq!(s.com[ki][0][0], Some(100.0));
            assert!(s.coverage[ki][0].is_some());
        }
        assert!(c.out_dir.join("overlap.csv").exists());
    }

    #[test]
    fn prefixes_match_direct_selection() {
        let g = barabasi_albert(200, 2, 8).unwrap();
        let c = ExperimentConfig {
            methods: vec![Method::Sidd, Method::DegreeDiscount],
            k_values: vec![5, 20],
            ..ExperimentConfig::new("g", "o")
        };
        for &m in &c.methods {
            let small = select_seeds(&g, m, &SelectionConfig { k: 5, ..c.selection }, &c.ic, 10).unwrap();
            let large = select_seeds(&g, m, &SelectionConfig { k: 20, ..c.selection }, &c.ic, 10).unwrap();
            assert_eq!(small.seeds[..], large.seeds[..5]);
        }
    }
}
