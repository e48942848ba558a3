//! Immutable simple graphs on dense vertex ids `0..n`, plus the BFS and
//! connectivity machinery every solver builds on.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Fixed-capacity bitset over vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    n: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { words: vec![0; n.div_ceil(64)], n }
    }

    pub fn full(n: usize) -> Self {
        let mut set = VertexSet::new(n);
        for v in 0..n {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::new(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Universe size.
    pub fn capacity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v >> 6] & (1 << (v & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside set universe {}", self.n);
        let fresh = !self.contains(v);
        self.words[v >> 6] |= 1 << (v & 63);
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.words[v >> 6] &= !(1 << (v & 63));
        }
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl core::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Anything paths can be replayed against.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn has_arc(&self, u: usize, v: usize) -> bool;
}

/// Directed simple graph: no loops, no parallel arcs; `(u,v)` and `(v,u)`
/// may coexist. Adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectedGraph {
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl DirectedGraph {
    /// Builds a digraph, silently dropping duplicate arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            out[u].push(v);
            inc[v].push(u);
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(DirectedGraph { out, inc })
    }

    pub fn empty(n: usize) -> Self {
        DirectedGraph { out: vec![Vec::new(); n], inc: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn transpose(&self) -> DirectedGraph {
        DirectedGraph { out: self.inc.clone(), inc: self.out.clone() }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { v, n: self.n() })
        }
    }
}

impl Adjacency for DirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn has_arc(&self, u: usize, v: usize) -> bool {
        DirectedGraph::has_arc(self, u, v)
    }
}

/// Undirected simple graph. Kept apart from [`DirectedGraph`] so that
/// level arguments which only hold for edges (endpoints differ by at most
/// one BFS level) stay type-checked; [`UndirectedGraph::symmetrize`] is the
/// bridge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(UndirectedGraph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, vs)| vs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Replaces every edge by two opposite arcs.
    pub fn symmetrize(&self) -> DirectedGraph {
        DirectedGraph { out: self.adj.clone(), inc: self.adj.clone() }
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || reachable_set(&self.symmetrize(), 0).len() == self.n()
    }
}

impl Adjacency for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

/// Borrowed graph of either kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphRef<'a> {
    Directed(&'a DirectedGraph),
    Undirected(&'a UndirectedGraph),
}

impl GraphRef<'_> {
    pub fn n(&self) -> usize {
        match self {
            GraphRef::Directed(g) => g.n(),
            GraphRef::Undirected(g) => g.n(),
        }
    }

    /// The graph itself, or its symmetric digraph.
    pub fn to_directed(&self) -> DirectedGraph {
        match self {
            GraphRef::Directed(g) => (*g).clone(),
            GraphRef::Undirected(g) => g.symmetrize(),
        }
    }
}

/// Bidirectional id map produced by [`induced_subgraph`].
#[derive(Clone, Debug)]
pub struct VertexMap {
    to_sub: Vec<Option<usize>>,
    to_orig: Vec<usize>,
}

impl VertexMap {
    pub fn sub(&self, orig: usize) -> Option<usize> {
        self.to_sub.get(orig).copied().flatten()
    }

    pub fn orig(&self, sub: usize) -> usize {
        self.to_orig[sub]
    }

    pub fn lift(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&v| self.to_orig[v]).collect()
    }
}

/// `G[keep]` with vertices renumbered in increasing original order.
pub fn induced_subgraph(g: &DirectedGraph, keep: &VertexSet) -> (DirectedGraph, VertexMap) {
    let mut to_sub = vec![None; g.n()];
    let mut to_orig = Vec::new();
    for v in keep.iter().filter(|&v| v < g.n()) {
        to_sub[v] = Some(to_orig.len());
        to_orig.push(v);
    }
    let mut out = vec![Vec::new(); to_orig.len()];
    let mut inc = vec![Vec::new(); to_orig.len()];
    for (i, &v) in to_orig.iter().enumerate() {
        for &w in g.out_neighbors(v) {
            if let Some(j) = to_sub[w] {
                out[i].push(j);
                inc[j].push(i);
            }
        }
    }
    for list in inc.iter_mut() {
        list.sort_unstable();
    }
    (DirectedGraph { out, inc }, VertexMap { to_sub, to_orig })
}

/// BFS levels `L_0, ..., L_max` from a source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayering {
    pub source: usize,
    /// `None` marks unreachable vertices.
    pub level: Vec<Option<usize>>,
    pub layers: Vec<Vec<usize>>,
}

impl BfsLayering {
    /// Index of the last nonempty layer.
    pub fn ell_max(&self) -> usize {
        self.layers.len() - 1
    }

    /// Union of the layers with index at least `from`.
    pub fn at_or_above(&self, from: usize) -> VertexSet {
        let mut set = VertexSet::new(self.level.len());
        for layer in self.layers.iter().skip(from) {
            for &v in layer {
                set.insert(v);
            }
        }
        set
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }
}

pub fn bfs_layering(g: &DirectedGraph, s: usize) -> BfsLayering {
    let level = distances_from(g, s);
    let depth = level.iter().flatten().max().copied().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, l) in level.iter().enumerate() {
        if let Some(l) = l {
            layers[*l].push(v);
        }
    }
    BfsLayering { source: s, level, layers }
}

/// Shortest-path tree restricted to `allowed` (all vertices when `None`).
/// The source is always expanded even if it is not in `allowed`.
pub(crate) fn bfs_tree(
    g: &DirectedGraph,
    s: usize,
    allowed: Option<&VertexSet>,
    reverse: bool,
) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    dist[s] = Some(0);
    queue.push_back(s);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap_or(0);
        let next = if reverse { g.in_neighbors(x) } else { g.out_neighbors(x) };
        for &y in next {
            if dist[y].is_none() && allowed.is_none_or(|a| a.contains(y)) {
                dist[y] = Some(d + 1);
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

pub fn distances_from(g: &DirectedGraph, s: usize) -> Vec<Option<usize>> {
    bfs_tree(g, s, None, false).0
}

/// A shortest `(s,t)`-path inside `allowed` (plus `s` itself).
pub fn shortest_path(g: &DirectedGraph, s: usize, t: usize, allowed: Option<&VertexSet>) -> Option<Vec<usize>> {
    let (dist, parent) = bfs_tree(g, s, allowed, false);
    dist[t]?;
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = parent[cur]?;
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Diameter with the lexicographically smallest ordered pair attaining it.
pub fn diameter_and_pair(g: &DirectedGraph) -> Result<(usize, usize, usize)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = (0, 0, 0);
    for s in 0..g.n() {
        let dist = distances_from(g, s);
        for (t, d) in dist.iter().enumerate() {
            match d {
                None => return Err(Error::NotStronglyConnected { from: s, to: t }),
                Some(d) if *d > best.0 => best = (*d, s, t),
                _ => {}
            }
        }
    }
    Ok(best)
}

pub fn reachable_set(g: &DirectedGraph, s: usize) -> VertexSet {
    reach_within(g, s, None, false)
}

/// Vertices from which `t` is reachable.
pub fn co_reachable_set(g: &DirectedGraph, t: usize) -> VertexSet {
    reach_within(g, t, None, true)
}

pub(crate) fn reach_within(g: &DirectedGraph, s: usize, allowed: Option<&VertexSet>, reverse: bool) -> VertexSet {
    let dist = bfs_tree(g, s, allowed, reverse).0;
    VertexSet::from_vertices(g.n(), dist.iter().enumerate().filter_map(|(v, d)| d.map(|_| v)))
}

fn strongly_connected_without(g: &DirectedGraph, removed: Option<usize>) -> bool {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    if let Some(r) = removed {
        alive.remove(r);
    }
    let Some(root) = alive.iter().next() else {
        return true;
    };
    let want = alive.len();
    reach_within(g, root, Some(&alive), false).len() == want && reach_within(g, root, Some(&alive), true).len() == want
}

pub fn is_strongly_connected(g: &DirectedGraph) -> bool {
    strongly_connected_without(g, None)
}

/// Why a digraph fails to be 2-strongly-connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoStrongDefect {
    TooFewVertices,
    NotStronglyConnected,
    /// Deleting this vertex destroys strong connectivity.
    StrongArticulation(usize),
}

pub fn two_strong_connectivity_defect(g: &DirectedGraph) -> Option<TwoStrongDefect> {
    if g.n() < 2 {
        return Some(TwoStrongDefect::TooFewVertices);
    }
    if !is_strongly_connected(g) {
        return Some(TwoStrongDefect::NotStronglyConnected);
    }
    (0..g.n()).find(|&v| !strongly_connected_without(g, Some(v))).map(TwoStrongDefect::StrongArticulation)
}

/// Strongly connected with at least two vertices, and still strongly
/// connected after deleting any single vertex.
pub fn is_2_strongly_connected(g: &DirectedGraph) -> bool {
    two_strong_connectivity_defect(g).is_none()
}

/// Connected, at least two vertices, and no articulation vertex.
pub fn is_2_connected_undirected(g: &UndirectedGraph) -> bool {
    let sym = g.symmetrize();
    sym.n() >= 2
        && strongly_connected_without(&sym, None)
        && (0..sym.n()).all(|v| strongly_connected_without(&sym, Some(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn build_rejects_bad_arcs() {
        assert_eq!(DirectedGraph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { u: 0, v: 2, n: 2 }));
        assert_eq!(DirectedGraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(UndirectedGraph::new(3, [(2, 2)]), Err(Error::Loop(2)));
    }

    #[test]
    fn build_examples() {
        let g = DirectedGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.arc_count(), 1);
        assert_eq!(distances_from(&g, 0)[1], Some(1));
        assert_eq!(DirectedGraph::new(1, []).unwrap().arc_count(), 0);
        assert_eq!(DirectedGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap().arc_count(), 2);
        let both = DirectedGraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(both.arc_count(), 2);
    }

    #[test]
    fn transpose_single_arc() {
        let g = DirectedGraph::new(2, [(0, 1)]).unwrap();
        let t = g.transpose();
        assert!(t.has_arc(1, 0));
        assert!(!t.has_arc(0, 1));
        assert_eq!(t.transpose(), g);
    }

    #[test]
    fn induced_subgraph_examples() {
        let tri = directed_cycle(3);
        let (all, map) = induced_subgraph(&tri, &VertexSet::full(3));
        assert_eq!(all, tri);
        assert_eq!(map.orig(2), 2);
        let (sub, map) = induced_subgraph(&tri, &VertexSet::from_vertices(3, [0, 1]));
        assert_eq!(sub.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(map.sub(2), None);
        let (empty, _) = induced_subgraph(&tri, &VertexSet::new(3));
        assert_eq!(empty.n(), 0);
    }

    #[test]
    fn layering_examples() {
        let path = directed_path(3);
        let lay = bfs_layering(&path, 0);
        assert_eq!(lay.layers, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(lay.ell_max(), 2);

        let g = DirectedGraph::new(3, [(0, 1)]).unwrap();
        let lay = bfs_layering(&g, 0);
        assert_eq!(lay.level[2], None);
        assert!(lay.layers.iter().all(|l| !l.contains(&2)));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter_and_pair(&directed_cycle(5)).unwrap(), (4, 0, 4));
        let two = DirectedGraph::new(2, []).unwrap();
        assert!(matches!(diameter_and_pair(&two), Err(Error::NotStronglyConnected { .. })));
        // ties resolve to the smallest ordered pair
        let sym = cycle(4).symmetrize();
        assert_eq!(diameter_and_pair(&sym).unwrap(), (2, 0, 2));
    }

    #[test]
    fn reachability_examples() {
        let path = directed_path(3);
        assert_eq!(reachable_set(&path, 0).to_vec(), vec![0, 1, 2]);
        assert_eq!(co_reachable_set(&path, 2).to_vec(), vec![0, 1, 2]);
        let g = DirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(reachable_set(&g, 0).to_vec(), vec![0, 1]);
        assert_eq!(co_reachable_set(&g, 3).to_vec(), vec![2, 3]);
    }

    #[test]
    fn strong_connectivity_examples() {
        let c5 = directed_cycle(5);
        assert!(is_strongly_connected(&c5));
        assert!(!is_2_strongly_connected(&c5));
        assert_eq!(two_strong_connectivity_defect(&c5), Some(TwoStrongDefect::StrongArticulation(0)));
        assert!(is_2_strongly_connected(&complete_digraph(3)));
        assert_eq!(two_strong_connectivity_defect(&DirectedGraph::empty(1)), Some(TwoStrongDefect::TooFewVertices));
        let two_cycle = DirectedGraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(is_2_strongly_connected(&two_cycle));
    }

    #[test]
    fn two_connected_examples() {
        assert!(is_2_connected_undirected(&cycle(4)));
        assert!(!is_2_connected_undirected(&UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap()));
        let bowtie = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!is_2_connected_undirected(&bowtie));
        assert!(!is_2_connected_undirected(&UndirectedGraph::new(1, []).unwrap()));
    }

    #[test]
    fn shortest_path_respects_allowed() {
        let g = DirectedGraph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        assert_eq!(shortest_path(&g, 0, 3, None), Some(vec![0, 1, 3]));
        let allowed = VertexSet::from_vertices(4, [2, 3]);
        assert_eq!(shortest_path(&g, 0, 3, Some(&allowed)), Some(vec![0, 2, 3]));
        assert_eq!(shortest_path(&g, 3, 0, None), None);
    }
}
