//! The experiment pipeline: landmarks, certificates, both filtrations,
//! persistence, and the log-scale bottleneck check, with CSV/JSON output.

mod report;
mod stats;

pub use report::{ExperimentReport, MonotoneViolation, ReportRow, REPORT_HEADER};
pub use stats::{dataset_stats, default_eps_grid, graph_stats, DatasetStats, GRID_SOURCES};

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{landmark_metric, lazy_witness_filtration, rips_filtration};
use crate::epsnet::{
    build_net, certify, iterative_eps_net, maxmin_landmarks, random_landmarks, Algorithm,
    LandmarkSet, NetCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{diameter, read_edge_list_file, IdMap, WeightedGraph};
use crate::metrics::{log_bottleneck_after, three_log_three};
use crate::persistence::{compute_persistence, PersistenceDiagram};

/// Slack added to `3 ln 3` when the bound is checked.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Grid size used when a config lists no eps values.
pub const DEFAULT_GRID_SIZE: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub graph_path: PathBuf,
    pub weighted: bool,
    pub algorithms: Vec<Algorithm>,
    /// Empty means [`default_eps_grid`] with [`DEFAULT_GRID_SIZE`] values.
    pub eps_values: Vec<f64>,
    pub seeds: Vec<u64>,
    /// Filtration ceiling; the graph diameter when `None`.
    pub alpha_max: Option<f64>,
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    /// All five algorithms, seed 0 and the default eps grid.
    pub fn new(graph_path: impl Into<PathBuf>, output_dir: impl Into<PathBuf>) -> Self {
        Self {
            graph_path: graph_path.into(),
            weighted: false,
            algorithms: Algorithm::ALL.to_vec(),
            eps_values: Vec::new(),
            seeds: vec![0],
            alpha_max: None,
            output_dir: output_dir.into(),
        }
    }
}

/// Everything one (algorithm, eps, seed) cell produces.
#[derive(Clone, Debug)]
pub struct CellOutput {
    pub landmarks: LandmarkSet,
    pub certificate: NetCertificate,
    pub rips: PersistenceDiagram,
    pub lazy_witness: PersistenceDiagram,
    pub row: ReportRow,
}

/// Diagrams and bottleneck distances for a fixed landmark set.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub rips: PersistenceDiagram,
    pub lazy_witness: PersistenceDiagram,
    pub bottleneck_d0: f64,
    pub bottleneck_d1: f64,
}

impl Comparison {
    pub fn bound_ok(&self) -> bool {
        let bound = three_log_three() + BOUND_TOLERANCE;
        self.bottleneck_d0 <= bound && self.bottleneck_d1 <= bound
    }
}

/// Rips persistence on the landmark metric and lazy witness persistence on
/// the whole graph, compared in log scale on the parts born after `2 eps`.
///
/// ```
/// use netwitness::graph::WeightedGraph;
/// use netwitness::harness::compare_filtrations;
///
/// let cycle = WeightedGraph::unweighted(8, (0..8).map(|i| (i, (i + 1) % 8))).unwrap();
/// let cmp = compare_filtrations(&cycle, &[0, 2, 4, 6], 1.0, 4.0).unwrap();
/// assert_eq!(cmp.rips.in_dim(1).count(), 1);
/// assert!(cmp.bound_ok());
/// ```
pub fn compare_filtrations(
    graph: &WeightedGraph,
    landmarks: &[usize],
    eps: f64,
    alpha_max: f64,
) -> Result<Comparison> {
    let metric = landmark_metric(graph, landmarks)?;
    let rips = compute_persistence(&rips_filtration(&metric, alpha_max, 2)?, 1)?;
    let lazy_witness = compute_persistence(&lazy_witness_filtration(graph, landmarks, 1, alpha_max, 2)?, 1)?;
    let threshold = 2.0 * eps;
    let bottleneck_d0 = log_bottleneck_after(&lazy_witness, &rips, 0, threshold)?;
    let bottleneck_d1 = log_bottleneck_after(&lazy_witness, &rips, 1, threshold)?;
    Ok(Comparison {
        rips,
        lazy_witness,
        bottleneck_d0,
        bottleneck_d1,
    })
}

/// Selects landmarks for one cell. Baselines get as many landmarks as the
/// iterative net picks for the same eps and seed.
pub fn select_landmarks(
    graph: &WeightedGraph,
    algorithm: Algorithm,
    eps: f64,
    seed: u64,
) -> Result<LandmarkSet> {
    match algorithm {
        Algorithm::Maxmin | Algorithm::Random => {
            let k = iterative_eps_net(graph, eps, seed)?.len();
            let mut set = if algorithm == Algorithm::Maxmin {
                maxmin_landmarks(graph, k, seed)?
            } else {
                random_landmarks(graph, k, seed)?
            };
            set.eps = Some(eps);
            Ok(set)
        }
        _ => build_net(graph, algorithm, eps, seed),
    }
}

/// Runs one cell of the experiment grid in memory.
pub fn run_cell(
    graph: &WeightedGraph,
    algorithm: Algorithm,
    eps: f64,
    seed: u64,
    alpha_max: f64,
) -> Result<CellOutput> {
    let start = Instant::now();
    let landmarks = select_landmarks(graph, algorithm, eps, seed)?;
    let landmark_ms = elapsed_ms(start);
    let certificate = certify(graph, landmarks.as_slice(), eps)?;
    let ph_start = Instant::now();
    let cmp = compare_filtrations(graph, landmarks.as_slice(), eps, alpha_max)?;
    let ph_ms = elapsed_ms(ph_start);
    let row = ReportRow {
        algo: algorithm,
        eps,
        seed,
        n_landmarks: landmarks.len(),
        landmark_ms,
        ph_ms,
        total_ms: elapsed_ms(start),
        sparse_ok: certificate.sparse_ok,
        sample_ok: certificate.sample_ok,
        coverage_radius: certificate.coverage_radius,
        hausdorff: certificate.hausdorff,
        bottleneck_d0: cmp.bottleneck_d0,
        bottleneck_d1: cmp.bottleneck_d1,
        bound_ok: cmp.bound_ok(),
    };
    Ok(CellOutput {
        landmarks,
        certificate,
        rips: cmp.rips,
        lazy_witness: cmp.lazy_witness,
        row,
    })
}

fn elapsed_ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

/// Loads the graph, runs every (algorithm, eps, seed) cell and writes
/// `report.csv` plus one artifact directory per cell under `output_dir`.
///
/// Eps values that are not positive or exceed the diameter are skipped with
/// a warning. Cells run in parallel; rows come back in grid order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    if config.algorithms.is_empty() || config.seeds.is_empty() {
        return Err(Error::argument("algorithms and seeds must be non-empty"));
    }
    let list = read_edge_list_file(&config.graph_path, config.weighted)?;
    let graph = &list.graph;
    let diam = diameter(graph)?;
    // A single vertex has diameter 0, which no filtration accepts as a ceiling.
    let alpha_max = config.alpha_max.unwrap_or(if diam > 0.0 { diam } else { 1.0 });
    if !(alpha_max > 0.0 && alpha_max.is_finite()) {
        return Err(Error::argument(format!("alpha_max must be positive, got {alpha_max}")));
    }

    let requested = if config.eps_values.is_empty() {
        default_eps_grid(graph, DEFAULT_GRID_SIZE)?
    } else {
        config.eps_values.clone()
    };
    let mut eps_values = Vec::new();
    let mut skipped_eps = Vec::new();
    for eps in requested {
        if eps > 0.0 && (eps <= diam || diam == 0.0) {
            eps_values.push(eps);
        } else {
            log::warn!("skipping eps {eps}: outside (0, {diam}]");
            skipped_eps.push(eps);
        }
    }
    eps_values.sort_by(f64::total_cmp);
    eps_values.dedup();

    fs::create_dir_all(&config.output_dir)?;
    let cells: Vec<(Algorithm, f64, u64)> = config
        .algorithms
        .iter()
        .flat_map(|&a| {
            eps_values
                .iter()
                .flat_map(move |&e| config.seeds.iter().map(move |&s| (a, e, s)))
        })
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(algorithm, eps, seed)| {
            let out = run_cell(graph, algorithm, eps, seed, alpha_max)?;
            write_cell(&config.output_dir, &out, &list.ids)?;
            Ok(out.row)
        })
        .collect::<Result<Vec<_>>>()?;

    let report = ExperimentReport::new(rows, alpha_max, skipped_eps);
    for v in report.monotone_violations() {
        log::warn!(
            "{}: mean landmark count rises from {} at eps {} to {} at eps {}",
            v.algorithm,
            v.count_lower,
            v.eps_lower,
            v.count_higher,
            v.eps_higher
        );
    }
    fs::write(config.output_dir.join("report.csv"), report.to_csv())?;
    Ok(report)
}

/// Directory name of a cell's artifacts.
pub fn cell_dir_name(algorithm: Algorithm, eps: f64, seed: u64) -> String {
    format!("{algorithm}_eps{eps}_seed{seed}")
}

#[derive(Serialize)]
struct LandmarkArtifact<'a> {
    #[serde(flatten)]
    set: &'a LandmarkSet,
    /// Vertex ids as written in the input file.
    original_ids: Vec<u64>,
}

fn write_cell(root: &Path, out: &CellOutput, ids: &IdMap) -> Result<()> {
    let dir = root.join(cell_dir_name(out.row.algo, out.row.eps, out.row.seed));
    fs::create_dir_all(&dir)?;
    let artifact = LandmarkArtifact {
        set: &out.landmarks,
        original_ids: out
            .landmarks
            .as_slice()
            .iter()
            .filter_map(|&v| ids.original(v))
            .collect(),
    };
    fs::write(dir.join("landmarks.json"), serde_json::to_string_pretty(&artifact)?)?;
    fs::write(dir.join("certificate.json"), out.certificate.to_json()?)?;
    fs::write(dir.join("dgm_rips.csv"), out.rips.to_csv())?;
    fs::write(dir.join("dgm_lw.csv"), out.lazy_witness.to_csv())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::PersistencePoint;

    fn write_graph(dir: &Path, text: &str) -> PathBuf {
        let path = dir.join("graph.txt");
        fs::write(&path, text).unwrap();
        path
    }

    #[test]
    fn single_vertex_cell() {
        let g = WeightedGraph::unweighted(1, []).unwrap();
        let out = run_cell(&g, Algorithm::Iterative, 1.0, 3, 1.0).unwrap();
        assert_eq!(out.landmarks.as_slice(), &[0]);
        assert_eq!(out.rips.points(), &[PersistencePoint::new(0, 0.0, f64::INFINITY)]);
        assert_eq!(out.lazy_witness.points(), out.rips.points());
        assert_eq!((out.row.bottleneck_d0, out.row.bottleneck_d1), (0.0, 0.0));
        assert!(out.row.bound_ok);
    }

    #[test]
    fn baselines_match_iterative_count() {
        let g = WeightedGraph::unweighted(12, (0..12).map(|i| (i, (i + 1) % 12))).unwrap();
        let it = select_landmarks(&g, Algorithm::Iterative, 1.0, 5).unwrap();
        for algo in [Algorithm::Maxmin, Algorithm::Random] {
            let set = select_landmarks(&g, algo, 1.0, 5).unwrap();
            assert_eq!(set.len(), it.len());
            assert_eq!(set.eps, Some(1.0));
        }
    }

    #[test]
    fn experiment_writes_rows_and_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let text: String = (0..10).map(|i| format!("{} {}\n", i + 100, (i + 1) % 10 + 100)).collect();
        let mut cfg = ExperimentConfig::new(write_graph(dir.path(), &text), dir.path().join("out"));
        cfg.eps_values = vec![2.0, 1.0, -1.0, 9.0];
        cfg.seeds = vec![1, 2];
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.rows().len(), 5 * 2 * 2);
        assert_eq!(report.skipped_eps(), &[-1.0, 9.0]);
        assert!(report.rows().iter().all(|r| r.bound_ok));
        let csv = fs::read_to_string(cfg.output_dir.join("report.csv")).unwrap();
        assert_eq!(csv.lines().next().unwrap(), REPORT_HEADER);
        assert_eq!(csv.lines().count(), 21);
        let cell = cfg.output_dir.join(cell_dir_name(Algorithm::Greedy, 1.0, 2));
        for f in ["landmarks.json", "certificate.json", "dgm_rips.csv", "dgm_lw.csv"] {
            assert!(cell.join(f).is_file(), "{f}");
        }
        let json: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cell.join("landmarks.json")).unwrap()).unwrap();
        assert!(json["original_ids"].as_array().unwrap().iter().all(|v| v.as_u64().unwrap() >= 100));
    }

    #[test]
    fn disconnected_graph_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = ExperimentConfig::new(write_graph(dir.path(), "0 1\n2 3\n"), dir.path().join("out"));
        assert!(matches!(run_experiment(&cfg), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn unwritable_output_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        let cfg = ExperimentConfig::new(write_graph(dir.path(), "0 1\n1 2\n"), blocker.join("out"));
        assert!(matches!(run_experiment(&cfg), Err(Error::Io(_))));
    }
}
