use std::fmt::Write as _;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One persistence interval `[birth, death)` in homological dimension `dim`.
/// `death` is `f64::INFINITY` for classes that never die.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PersistencePoint {
    pub dim: usize,
    pub birth: f64,
    pub death: f64,
}

impl PersistencePoint {
    pub fn new(dim: usize, birth: f64, death: f64) -> Self {
        Self { dim, birth, death }
    }

    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    /// True when the class is alive at `alpha`: `birth ≤ alpha < death`.
    pub fn alive_at(&self, alpha: f64) -> bool {
        self.birth <= alpha && alpha < self.death
    }
}

/// Multiset of persistence intervals, kept sorted by `(dim, birth, death)`.
///
/// `alpha_max` is the ceiling of the filtration that produced the diagram;
/// it stands in for infinite deaths when diagrams are compared.
#[derive(Clone, Debug, PartialEq)]
pub struct PersistenceDiagram {
    points: Vec<PersistencePoint>,
    alpha_max: f64,
}

impl PersistenceDiagram {
    /// Drops zero-length intervals and sorts the rest.
    pub fn new(points: Vec<PersistencePoint>, alpha_max: f64) -> Self {
        let mut points: Vec<_> = points.into_iter().filter(|p| p.death > p.birth).collect();
        points.sort_by(|a, b| {
            a.dim
                .cmp(&b.dim)
                .then(a.birth.total_cmp(&b.birth))
                .then(a.death.total_cmp(&b.death))
        });
        Self { points, alpha_max }
    }

    pub fn points(&self) -> &[PersistencePoint] {
        &self.points
    }

    pub fn alpha_max(&self) -> f64 {
        self.alpha_max
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn in_dim(&self, dim: usize) -> impl Iterator<Item = &PersistencePoint> + '_ {
        self.points.iter().filter(move |p| p.dim == dim)
    }

    /// Number of `dim`-classes alive at `alpha`.
    pub fn betti_at(&self, dim: usize, alpha: f64) -> usize {
        self.in_dim(dim).filter(|p| p.alive_at(alpha)).count()
    }

    pub fn essential_count(&self, dim: usize) -> usize {
        self.in_dim(dim).filter(|p| p.is_essential()).count()
    }

    /// `dim,birth,death` CSV with a header row; infinite deaths print as `inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,birth,death\n");
        for p in &self.points {
            if p.is_essential() {
                writeln!(out, "{},{},inf", p.dim, p.birth).unwrap();
            } else {
                writeln!(out, "{},{},{}", p.dim, p.birth, p.death).unwrap();
            }
        }
        out
    }

    /// Parses [`PersistenceDiagram::to_csv`] output.
    pub fn from_csv<R: BufRead>(reader: R, alpha_max: f64) -> Result<Self> {
        let mut points = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || (i == 0 && trimmed.starts_with("dim")) {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
            let [dim, birth, death] = fields[..] else {
                return Err(bad(format!("expected `dim,birth,death`, got `{trimmed}`")));
            };
            let dim = dim
                .parse::<usize>()
                .map_err(|_| bad(format!("invalid dimension `{dim}`")))?;
            let birth = birth
                .parse::<f64>()
                .map_err(|_| bad(format!("invalid birth `{birth}`")))?;
            let death = match death {
                "inf" | "Inf" | "infinity" => f64::INFINITY,
                other => other
                    .parse::<f64>()
                    .map_err(|_| bad(format!("invalid death `{other}`")))?,
            };
            points.push(PersistencePoint::new(dim, birth, death));
        }
        Ok(Self::new(points, alpha_max))
    }
}
