use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Adjacency, VertexSet};
use crate::{Error, Result};

/// What a path length is measured above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Baseline {
    Dist(usize),
    Diameter(usize),
}

impl Baseline {
    pub fn value(self) -> usize {
        match self {
            Baseline::Dist(d) | Baseline::Diameter(d) => d,
        }
    }
}

/// A simple path, with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub baseline: Option<Baseline>,
    /// Which solver stage produced the path.
    pub stage: String,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>, stage: impl Into<String>) -> Self {
        PathWitness { vertices, baseline: None, stage: stage.into() }
    }

    /// Builds the witness and replays it against `g`.
    pub fn checked(g: &impl Adjacency, vertices: Vec<usize>, stage: impl Into<String>) -> Result<Self> {
        let w = PathWitness::new(vertices, stage);
        w.validate(g)?;
        Ok(w)
    }

    pub fn with_baseline(mut self, baseline: Baseline) -> Self {
        self.baseline = Some(baseline);
        self
    }

    /// Number of arcs.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    /// Length above the baseline, if any.
    pub fn excess(&self) -> Option<isize> {
        self.baseline.map(|b| self.length() as isize - b.value() as isize)
    }

    pub fn validate(&self, g: &impl Adjacency) -> Result<()> {
        validate_path(g, &self.vertices)
    }

    pub fn validate_endpoints(&self, g: &impl Adjacency, s: usize, t: usize) -> Result<()> {
        self.validate(g)?;
        if self.first() != Some(s) || self.last() != Some(t) {
            return Err(Error::InvalidPath(format!(
                "expected an ({s},{t})-path, got endpoints {:?} and {:?}",
                self.first(),
                self.last()
            )));
        }
        Ok(())
    }
}

/// Nonempty, pairwise distinct vertices, consecutive pairs are arcs.
pub fn validate_path(g: &impl Adjacency, vertices: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    if vertices.is_empty() {
        return Err(Error::InvalidPath("empty vertex list".into()));
    }
    let mut seen = VertexSet::new(n);
    for &v in vertices {
        if v >= n {
            return Err(Error::InvalidPath(format!("vertex {v} outside 0..{n}")));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidPath(format!("vertex {v} repeats")));
        }
    }
    if let Some(w) = vertices.windows(2).find(|w| !g.has_arc(w[0], w[1])) {
        return Err(Error::InvalidPath(format!("missing arc ({}, {})", w[0], w[1])));
    }
    Ok(())
}

/// Joins paths that share their boundary vertices (`a` ends where `b`
/// starts). Does not check simplicity.
pub(crate) fn concat(parts: &[&[usize]]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for part in parts {
        match (out.last(), part.first()) {
            (Some(&x), Some(&y)) if x == y => out.extend_from_slice(&part[1..]),
            _ => out.extend_from_slice(part),
        }
    }
    out
}
