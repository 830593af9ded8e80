use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::persistence::PersistenceDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    Linear,
    Log,
}

/// Finite `(birth, death)` points of one homological dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialDiagram {
    dim: usize,
    points: Vec<(f64, f64)>,
    threshold: f64,
    scale: Scale,
}

impl PartialDiagram {
    /// Wraps points directly (no birth cutoff). Every point must be finite
    /// with `death > birth`.
    pub fn new(dim: usize, points: Vec<(f64, f64)>, scale: Scale) -> Result<Self> {
        for &(b, d) in &points {
            if !(b.is_finite() && d.is_finite() && d > b) {
                return Err(Error::argument(format!(
                    "point ({b}, {d}) must be finite with death > birth"
                )));
            }
        }
        Ok(Self {
            dim,
            points,
            threshold: 0.0,
            scale,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Birth cutoff applied when the diagram was filtered; 0 when none was.
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Points of dimension `dim` born strictly after `threshold`, with infinite
/// deaths capped at the diagram's `alpha_max`. A zero threshold keeps every
/// point of that dimension. Points the cap leaves with zero length are dropped.
pub fn filter_after(diagram: &PersistenceDiagram, dim: usize, threshold: f64) -> Result<PartialDiagram> {
    if !(threshold >= 0.0) {
        return Err(Error::argument(format!(
            "threshold must be non-negative, got {threshold}"
        )));
    }
    let cap = diagram.alpha_max();
    let points = diagram
        .in_dim(dim)
        .filter(|p| threshold == 0.0 || p.birth > threshold)
        .map(|p| (p.birth, if p.is_essential() { cap } else { p.death }))
        .filter(|&(b, d)| d > b)
        .collect();
    Ok(PartialDiagram {
        dim,
        points,
        threshold,
        scale: Scale::Linear,
    })
}

/// Maps every `(b, d)` to `(ln b, ln d)`.
pub fn to_log_scale(diagram: &PartialDiagram) -> Result<PartialDiagram> {
    if diagram.scale == Scale::Log {
        return Err(Error::argument("diagram is already in log scale"));
    }
    let mut points = Vec::with_capacity(diagram.len());
    for &(b, d) in &diagram.points {
        if b <= 0.0 {
            return Err(Error::NonPositive(b));
        }
        let (lb, ld) = (b.ln(), d.ln());
        // Adjacent floats can collapse under ln; such points sit on the diagonal.
        if ld > lb {
            points.push((lb, ld));
        }
    }
    Ok(PartialDiagram {
        dim: diagram.dim,
        points,
        threshold: diagram.threshold,
        scale: Scale::Log,
    })
}
