//! Internally vertex-disjoint paths via unit-capacity max-flow.
//!
//! Every vertex `x` is split into `x_in -> x_out` with capacity one (the
//! terminals get capacity `count`), every arc `(x,y)` becomes
//! `x_out -> y_in` with capacity one. Augmenting paths are found by BFS;
//! flow values in this crate never exceed three, so nothing fancier is
//! needed.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexSet};
use crate::path::PathWitness;
use crate::{Error, Result};

#[derive(Clone, Copy)]
struct Edge {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Residual network with adjacency-list edges.
pub(crate) struct Network {
    adj: Vec<Vec<Edge>>,
}

impl Network {
    pub(crate) fn new(nodes: usize) -> Self {
        Network { adj: vec![Vec::new(); nodes] }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Edge { to, cap, rev: rev_from });
        self.adj[to].push(Edge { to: from, cap: 0, rev: rev_to });
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for (i, e) in self.adj[x].iter().enumerate() {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    prev[e.to] = Some((x, i));
                    queue.push_back(e.to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut cur = sink;
        while let Some((x, i)) = prev[cur] {
            let rev = self.adj[x][i].rev;
            self.adj[x][i].cap -= 1;
            self.adj[cur][rev].cap += 1;
            cur = x;
        }
        true
    }

    /// Pushes unit augmenting paths until `limit` is reached or none is
    /// left; returns the flow value.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut value = 0;
        while value < limit && self.augment(source, sink) {
            value += 1;
        }
        value
    }

    /// Residual capacity of the `i`-th edge stored at `x`.
    pub(crate) fn residual(&self, x: usize, i: usize) -> (usize, u32) {
        let e = self.adj[x][i];
        (e.to, e.cap)
    }

    /// Index the next `add_edge(x, ..)` will occupy.
    pub(crate) fn next_index(&self, x: usize) -> usize {
        self.adj[x].len()
    }
}

#[inline]
fn v_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn v_out(v: usize) -> usize {
    2 * v + 1
}

/// Up to `count` internally vertex-disjoint `(s,t)`-paths whose internal
/// vertices lie in `allowed` (all vertices when `None`). Returns the
/// paths found, in order of their first internal vertex.
pub(crate) fn disjoint_paths_within(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    count: u32,
    allowed: Option<&VertexSet>,
) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut net = Network::new(2 * n);
    let mut forward: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let usable = v == s || v == t || allowed.is_none_or(|a| a.contains(v));
        if usable {
            let cap = if v == s || v == t { count } else { 1 };
            net.add_edge(v_in(v), v_out(v), cap);
        }
    }
    for (u, v) in g.arcs() {
        if v == s || u == t {
            continue;
        }
        forward.push((v_out(u), net.next_index(v_out(u))));
        net.add_edge(v_out(u), v_in(v), 1);
    }
    let value = net.max_flow(v_out(s), v_in(t), count);

    // a saturated arc edge carries one unit; walk those from s
    let mut used = vec![Vec::new(); 2 * n];
    for &(x, i) in &forward {
        let (to, cap) = net.residual(x, i);
        if cap == 0 {
            used[x].push(to);
        }
    }
    let mut paths = Vec::new();
    for _ in 0..value {
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let Some(next_in) = used[v_out(cur)].pop() else {
                break;
            };
            cur = next_in / 2;
            path.push(cur);
        }
        if cur == t {
            paths.push(path);
        }
    }
    paths.sort_by_key(|p| p.get(1).copied());
    paths
}

/// Two internally vertex-disjoint `(s,t)`-paths, if they exist.
pub fn two_internally_disjoint_paths(
    g: &DirectedGraph,
    s: usize,
    t: usize,
) -> Result<Option<(PathWitness, PathWitness)>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let mut paths = disjoint_paths_within(g, s, t, 2, None);
    if paths.len() < 2 {
        return Ok(None);
    }
    let second = paths.pop().unwrap_or_default();
    let first = paths.pop().unwrap_or_default();
    Ok(Some((PathWitness::checked(g, first, "disjoint-paths")?, PathWitness::checked(g, second, "disjoint-paths")?)))
}

/// Undirected variant, via symmetrization.
pub fn two_internally_disjoint_paths_undirected(
    g: &UndirectedGraph,
    s: usize,
    t: usize,
) -> Result<Option<(PathWitness, PathWitness)>> {
    two_internally_disjoint_paths(&g.symmetrize(), s, t)
}
