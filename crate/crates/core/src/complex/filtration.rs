use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::io::BufRead;

use crate::error::{Error, Result};

/// A filtered simplex of dimension 0, 1 or 2 over landmark indices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Simplex {
    vertices: [usize; 3],
    len: u8,
    value: f64,
}

impl Simplex {
    pub fn vertex(v: usize, value: f64) -> Self {
        Self {
            vertices: [v, 0, 0],
            len: 1,
            value,
        }
    }

    pub fn edge(a: usize, b: usize, value: f64) -> Self {
        Self {
            vertices: [a.min(b), a.max(b), 0],
            len: 2,
            value,
        }
    }

    pub fn triangle(a: usize, b: usize, c: usize, value: f64) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Self {
            vertices: v,
            len: 3,
            value,
        }
    }

    /// Builds a simplex from 1 to 3 vertex labels.
    pub fn new(vertices: &[usize], value: f64) -> Result<Self> {
        match *vertices {
            [a] => Ok(Self::vertex(a, value)),
            [a, b] if a != b => Ok(Self::edge(a, b, value)),
            [a, b, c] if a != b && b != c && a != c => Ok(Self::triangle(a, b, c, value)),
            _ => Err(Error::Filtration(format!(
                "simplex needs 1 to 3 distinct vertices, got {vertices:?}"
            ))),
        }
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Codimension-one faces, as sorted vertex tuples.
    pub fn facets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let vs = self.vertices();
        let count = if vs.len() > 1 { vs.len() } else { 0 };
        (0..count).map(move |skip| {
            vs.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
    }

    /// Filtration order: value, then dimension, then vertices lexicographically.
    pub fn filtration_cmp(&self, other: &Self) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then_with(|| self.len.cmp(&other.len))
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

/// Simplices sorted in filtration order, capped at `alpha_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    simplices: Vec<Simplex>,
    alpha_max: f64,
}

impl Filtration {
    /// Validates and wraps simplices that are already in filtration order.
    pub fn new(simplices: Vec<Simplex>, alpha_max: f64) -> Result<Self> {
        let f = Self {
            simplices,
            alpha_max,
        };
        f.validate()?;
        Ok(f)
    }

    /// Sorts, then validates.
    pub fn from_unsorted(mut simplices: Vec<Simplex>, alpha_max: f64) -> Result<Self> {
        simplices.sort_by(Simplex::filtration_cmp);
        Self::new(simplices, alpha_max)
    }

    pub(crate) fn assemble(mut simplices: Vec<Simplex>, alpha_max: f64) -> Self {
        simplices.sort_unstable_by(Simplex::filtration_cmp);
        let f = Self {
            simplices,
            alpha_max,
        };
        if cfg!(debug_assertions) {
            f.validate().expect("builder produced an invalid filtration");
        }
        f
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn alpha_max(&self) -> f64 {
        self.alpha_max
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.simplices.iter().filter(|s| s.dim() == 0).count()
    }

    pub fn count_dim(&self, dim: usize) -> usize {
        self.simplices.iter().filter(|s| s.dim() == dim).count()
    }

    /// Checks ordering, value range, and that every face precedes its cofaces.
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha_max >= 0.0) {
            return Err(Error::Filtration(format!(
                "alpha_max must be non-negative, got {}",
                self.alpha_max
            )));
        }
        let mut index: HashMap<&[usize], usize> = HashMap::with_capacity(self.simplices.len());
        for (i, s) in self.simplices.iter().enumerate() {
            if !(s.value >= 0.0 && s.value <= self.alpha_max) {
                return Err(Error::Filtration(format!(
                    "simplex {:?} has value {} outside [0, {}]",
                    s.vertices(),
                    s.value,
                    self.alpha_max
                )));
            }
            if i > 0 && self.simplices[i - 1].filtration_cmp(s) != Ordering::Less {
                return Err(Error::Filtration(format!(
                    "simplex {:?} at position {i} is out of order or repeated",
                    s.vertices()
                )));
            }
            for facet in s.facets() {
                match index.get(facet.as_slice()) {
                    Some(&j) if self.simplices[j].value <= s.value => {}
                    Some(_) => {
                        return Err(Error::Filtration(format!(
                            "face {facet:?} of {:?} has a larger value",
                            s.vertices()
                        )))
                    }
                    None => {
                        return Err(Error::Filtration(format!(
                            "face {facet:?} of {:?} is missing or appears later",
                            s.vertices()
                        )))
                    }
                }
            }
            index.insert(s.vertices(), i);
        }
        Ok(())
    }

    /// The complex at parameter `alpha`: every simplex with value ≤ `alpha`.
    pub fn complex_at(&self, alpha: f64) -> Result<&[Simplex]> {
        if !(alpha >= 0.0) || alpha > self.alpha_max {
            return Err(Error::argument(format!(
                "alpha {alpha} lies outside [0, {}]",
                self.alpha_max
            )));
        }
        let end = self.simplices.partition_point(|s| s.value <= alpha);
        Ok(&self.simplices[..end])
    }

    /// Line-oriented text form: a `# alpha_max` header, then one
    /// `value v0 [v1 [v2]]` line per simplex in order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# alpha_max {}", self.alpha_max).unwrap();
        for s in &self.simplices {
            write!(out, "{}", s.value).unwrap();
            for v in s.vertices() {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`Filtration::to_text`] output. Without a header, `alpha_max`
    /// is the largest value present.
    pub fn from_text<R: BufRead>(reader: R) -> Result<Self> {
        let mut alpha_max = None;
        let mut simplices = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if let Some(rest) = trimmed.strip_prefix('#') {
                if let Some(v) = rest.trim().strip_prefix("alpha_max") {
                    alpha_max = Some(parse_number(v.trim(), i + 1)?);
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let mut fields = trimmed.split_whitespace();
            let value = parse_number(fields.next().unwrap_or_default(), i + 1)?;
            let vertices = fields
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("invalid vertex `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let simplex = Simplex::new(&vertices, value).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            simplices.push(simplex);
        }
        let alpha_max = alpha_max
            .unwrap_or_else(|| simplices.iter().map(|s| s.value).fold(0.0, f64::max));
        Self::new(simplices, alpha_max)
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_number(token: &str, line: usize) -> Result<f64> {
    token.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid value `{token}`"),
    })
}
