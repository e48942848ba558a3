//! Ordered chain routing: three pairwise internally disjoint paths
//! `s -> w`, `w -> v`, `v -> t`, equivalently one simple `(s,t)`-path that
//! visits `w` and then `v`.
//!
//! `v == t` is accepted and makes the last leg the one-vertex path `[t]`.
//! The detour pipeline needs this degenerate chain: on the graph
//! `s -> t, s -> a -> b -> t` with `k = 1` only the pair `(w, v) = (b, t)`
//! certifies the detour.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::flow::Network;
use crate::graph::DirectedGraph;
use crate::path::{validate_path, PathWitness};
use crate::search::{Dfs, Goal};
use crate::{Certainty, Error, Result, Search};

#[derive(Debug, Clone, Copy)]
pub struct ChainQuery<'a> {
    pub graph: &'a DirectedGraph,
    pub s: usize,
    pub w: usize,
    pub v: usize,
    pub t: usize,
}

impl<'a> ChainQuery<'a> {
    /// `s`, `w`, `v` must be distinct and `t` distinct from `s` and `w`.
    pub fn new(graph: &'a DirectedGraph, s: usize, w: usize, v: usize, t: usize) -> Result<Self> {
        for x in [s, w, v, t] {
            graph.check_vertex(x)?;
        }
        if s == w || s == v || w == v || t == s || t == w {
            return Err(Error::Precondition(alloc::format!("chain terminals ({s}, {w}, {v}, {t}) are not distinct")));
        }
        Ok(ChainQuery { graph, s, w, v, t })
    }

    fn waypoints(&self) -> Vec<usize> {
        if self.v == self.t {
            alloc::vec![self.w, self.t]
        } else {
            alloc::vec![self.w, self.v, self.t]
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainSolution {
    pub r1: PathWitness,
    pub r2: PathWitness,
    pub r3: PathWitness,
    pub total_length: usize,
}

impl ChainSolution {
    /// Splits a simple `(s,t)`-path through `w` and then `v`.
    fn split(q: &ChainQuery<'_>, path: &[usize]) -> Result<Self> {
        let find = |x: usize| {
            path.iter().position(|&y| y == x).ok_or_else(|| Error::InvalidPath(alloc::format!("chain path misses {x}")))
        };
        let (iw, iv) = (find(q.w)?, find(q.v)?);
        let piece = |a: usize, b: usize| PathWitness::checked(q.graph, path[a..=b].to_vec(), "pair-enumeration");
        let sol = ChainSolution {
            r1: piece(0, iw)?,
            r2: piece(iw, iv)?,
            r3: piece(iv, path.len() - 1)?,
            total_length: path.len() - 1,
        };
        sol.validate(q)?;
        Ok(sol)
    }

    /// `r1 ∘ r2 ∘ r3`.
    pub fn concatenate(&self) -> Vec<usize> {
        crate::path::concat(&[&self.r1.vertices, &self.r2.vertices, &self.r3.vertices])
    }

    /// Endpoints of every leg, simplicity of the concatenation and the
    /// recorded total length.
    pub fn validate(&self, q: &ChainQuery<'_>) -> Result<()> {
        self.r1.validate_endpoints(q.graph, q.s, q.w)?;
        self.r2.validate_endpoints(q.graph, q.w, q.v)?;
        if q.v == q.t {
            if self.r3.vertices != [q.t] {
                return Err(Error::InvalidPath("degenerate last leg must be [t]".into()));
            }
        } else {
            self.r3.validate_endpoints(q.graph, q.v, q.t)?;
        }
        let whole = self.concatenate();
        validate_path(q.graph, &whole)?;
        let total = self.r1.length() + self.r2.length() + self.r3.length();
        if total != self.total_length || whole.len() != total + 1 {
            return Err(Error::InvalidPath("chain length bookkeeping".into()));
        }
        Ok(())
    }
}

/// A procedure answering chain queries. Implementations must be reentrant:
/// the detour driver calls them from several workers at once.
pub trait ChainBackend: Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, q: &ChainQuery<'_>) -> Result<Search<ChainSolution>>;
}

/// Branch-and-bound over simple paths from `s` that must hit `w`, `v`, `t`
/// in order, pruned by reachability of the next terminal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhaustive {
    pub node_budget: u64,
}

impl Default for Exhaustive {
    fn default() -> Self {
        Exhaustive { node_budget: 10_000_000 }
    }
}

impl ChainBackend for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn solve(&self, q: &ChainQuery<'_>) -> Result<Search<ChainSolution>> {
        let waypoints = q.waypoints();
        let out = Dfs {
            g: q.graph,
            allowed: None,
            start: Some(q.s),
            waypoints: &waypoints,
            goal: Goal::AtLeast(0),
            node_budget: self.node_budget,
        }
        .run();
        Ok(match (out.best, out.complete) {
            (Some(p), _) => Search::Found(ChainSolution::split(q, &p)?),
            (None, true) => Search::Absent(Certainty::Exact),
            (None, false) => Search::Inconclusive,
        })
    }
}

/// Rejects a query when even the unordered relaxation fails: routing one
/// unit from each of `s`, `w`, `v` to distinct targets among `w`, `v`, `t`
/// through vertex-disjoint interiors. Otherwise defers to [`Exhaustive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FlowPrefilter {
    pub inner: Exhaustive,
}

impl FlowPrefilter {
    /// Value of the relaxed flow, capped at the number of legs.
    pub fn relaxed_flow(q: &ChainQuery<'_>) -> u32 {
        let n = q.graph.n();
        let (source, sink) = (2 * n, 2 * n + 1);
        let mut net = Network::new(2 * n + 2);
        let heads: Vec<usize> = if q.v == q.t { alloc::vec![q.s, q.w] } else { alloc::vec![q.s, q.w, q.v] };
        let tails: Vec<usize> = if q.v == q.t { alloc::vec![q.w, q.t] } else { alloc::vec![q.w, q.v, q.t] };
        let terminal = |x: usize| heads.contains(&x) || tails.contains(&x);
        for x in 0..n {
            if !terminal(x) {
                net.add_edge(2 * x, 2 * x + 1, 1);
            }
        }
        for (a, b) in q.graph.arcs() {
            net.add_edge(2 * a + 1, 2 * b, 1);
        }
        for &h in &heads {
            net.add_edge(source, 2 * h + 1, 1);
        }
        for &t in &tails {
            net.add_edge(2 * t, sink, 1);
        }
        net.max_flow(source, sink, heads.len() as u32)
    }
}

impl ChainBackend for FlowPrefilter {
    fn name(&self) -> &'static str {
        "flow-prefilter"
    }

    fn solve(&self, q: &ChainQuery<'_>) -> Result<Search<ChainSolution>> {
        let legs = if q.v == q.t { 2 } else { 3 };
        if Self::relaxed_flow(q) < legs {
            return Ok(Search::Absent(Certainty::Exact));
        }
        self.inner.solve(q)
    }
}

/// Names accepted by [`backend_by_name`].
pub const BACKEND_NAMES: [&str; 2] = ["exhaustive", "flow-prefilter"];

pub fn backend_by_name(name: &str, node_budget: u64) -> Option<Box<dyn ChainBackend>> {
    let inner = Exhaustive { node_budget };
    match name {
        "exhaustive" => Some(Box::new(inner)),
        "flow-prefilter" => Some(Box::new(FlowPrefilter { inner })),
        _ => None,
    }
}

/// Runs `backend` and re-validates whatever it returns.
pub fn solve_chain3(q: &ChainQuery<'_>, backend: &dyn ChainBackend) -> Result<Search<ChainSolution>> {
    let out = backend.solve(q)?;
    if let Search::Found(sol) = &out {
        sol.validate(q)?;
    }
    Ok(out)
}
