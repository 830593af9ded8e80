use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::epsnet::Algorithm;

pub const REPORT_HEADER: &str = "algo,eps,seed,n_landmarks,landmark_ms,ph_ms,total_ms,sparse_ok,sample_ok,coverage_radius,hausdorff,bottleneck_d0,bottleneck_d1,bound_ok";

/// One (algorithm, eps, seed) cell. Times are wall-clock milliseconds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub algo: Algorithm,
    pub eps: f64,
    pub seed: u64,
    pub n_landmarks: usize,
    pub landmark_ms: f64,
    pub ph_ms: f64,
    pub total_ms: f64,
    pub sparse_ok: bool,
    pub sample_ok: bool,
    pub coverage_radius: f64,
    pub hausdorff: f64,
    pub bottleneck_d0: f64,
    pub bottleneck_d1: f64,
    pub bound_ok: bool,
}

impl ReportRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.3},{:.3},{:.3},{},{},{},{},{},{},{}",
            self.algo,
            self.eps,
            self.seed,
            self.n_landmarks,
            self.landmark_ms,
            self.ph_ms,
            self.total_ms,
            self.sparse_ok,
            self.sample_ok,
            self.coverage_radius,
            self.hausdorff,
            self.bottleneck_d0,
            self.bottleneck_d1,
            self.bound_ok
        )
    }
}

/// A larger eps whose seed-averaged landmark count exceeds that of a smaller one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotoneViolation {
    pub algorithm: Algorithm,
    pub eps_lower: f64,
    pub eps_higher: f64,
    pub count_lower: f64,
    pub count_higher: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    rows: Vec<ReportRow>,
    alpha_max: f64,
    skipped_eps: Vec<f64>,
}

impl ExperimentReport {
    pub fn new(rows: Vec<ReportRow>, alpha_max: f64, skipped_eps: Vec<f64>) -> Self {
        Self {
            rows,
            alpha_max,
            skipped_eps,
        }
    }

    pub fn rows(&self) -> &[ReportRow] {
        &self.rows
    }

    pub fn alpha_max(&self) -> f64 {
        self.alpha_max
    }

    pub fn skipped_eps(&self) -> &[f64] {
        &self.skipped_eps
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(REPORT_HEADER);
        out.push('\n');
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.to_csv_line());
        }
        out
    }

    /// Mean landmark count over seeds, per algorithm and ascending eps.
    pub fn mean_counts(&self) -> BTreeMap<Algorithm, Vec<(f64, f64)>> {
        let mut sums: BTreeMap<Algorithm, Vec<(f64, f64, usize)>> = BTreeMap::new();
        for row in &self.rows {
            let entries = sums.entry(row.algo).or_default();
            match entries.iter_mut().find(|e| e.0 == row.eps) {
                Some(e) => {
                    e.1 += row.n_landmarks as f64;
                    e.2 += 1;
                }
                None => entries.push((row.eps, row.n_landmarks as f64, 1)),
            }
        }
        sums.into_iter()
            .map(|(algo, mut entries)| {
                entries.sort_by(|a, b| a.0.total_cmp(&b.0));
                (algo, entries.into_iter().map(|(e, s, c)| (e, s / c as f64)).collect())
            })
            .collect()
    }

    /// Consecutive eps pairs where the mean landmark count goes up.
    pub fn monotone_violations(&self) -> Vec<MonotoneViolation> {
        let mut out = Vec::new();
        for (algorithm, counts) in self.mean_counts() {
            for pair in counts.windows(2) {
                let ((eps_lower, count_lower), (eps_higher, count_higher)) = (pair[0], pair[1]);
                if count_higher > count_lower {
                    out.push(MonotoneViolation {
                        algorithm,
                        eps_lower,
                        eps_higher,
                        count_lower,
                        count_higher,
                    });
                }
            }
        }
        out
    }
}
