//! Longest path above diameter: is there a path of length at least
//! `diam(G) + k`?
//!
//! * Undirected 2-connected graphs: for `diam <= k` an exact path search,
//!   otherwise a cycle through a diametral pair contains the answer.
//! * 2-strongly-connected digraphs with `k <= 4`: a constructive builder
//!   for a path of length `diam + 4`, following the existence argument for
//!   large diameters. It is attempted on any input and may fail below
//!   [`DIAM_GUARANTEE_LOG2`]; an exact search then decides.
//! * Everything else is decided by exact search.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::detour::Verdict;
use crate::flow::{two_internally_disjoint_paths, two_internally_disjoint_paths_undirected};
use crate::graph::{
    bfs_tree, diameter_and_pair, is_2_connected_undirected, two_strong_connectivity_defect, DirectedGraph, GraphRef,
    UndirectedGraph, VertexSet,
};
use crate::path::{concat, validate_path, Baseline, PathWitness};
use crate::subroutines::{has_path_at_least, SubroutineConfig};
use crate::{Certainty, Error, Result, Search};

/// The builder is guaranteed to succeed once `diam >= 2^DIAM_GUARANTEE_LOG2`
/// (that is `2^(3^17)`), far beyond any representable graph.
pub const DIAM_GUARANTEE_LOG2: u64 = 129_140_163;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpadMode {
    Undirected2Connected,
    Directed2Sc,
    OracleOnly,
}

impl LpadMode {
    pub fn name(self) -> &'static str {
        match self {
            LpadMode::Undirected2Connected => "undirected-2connected",
            LpadMode::Directed2Sc => "directed-2sc",
            LpadMode::OracleOnly => "oracle-only",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LpadQuery<'a> {
    pub graph: GraphRef<'a>,
    pub k: usize,
    pub mode: LpadMode,
}

/// Step of the builder that produced a path or gave up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuilderStep {
    DisjointStPaths,
    LongPi,
    OuterScan,
    AlternationScan,
    FivePathNearS,
    FivePathNearT,
    Combination,
}

impl BuilderStep {
    pub fn label(self) -> &'static str {
        match self {
            BuilderStep::DisjointStPaths => "disjoint-st-paths",
            BuilderStep::LongPi => "long-Pi",
            BuilderStep::OuterScan => "outer-scan",
            BuilderStep::AlternationScan => "alternation-scan",
            BuilderStep::FivePathNearS => "five-path-near-s",
            BuilderStep::FivePathNearT => "five-path-near-t",
            BuilderStep::Combination => "combination",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuilderStatus {
    Built,
    Failed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuilderOutcome {
    pub status: BuilderStatus,
    /// Set iff built; length at least `diameter + 4`.
    pub witness: Option<PathWitness>,
    /// The step that produced the witness, or the one that gave up.
    pub step: BuilderStep,
    pub diameter: usize,
    pub pair: (usize, usize),
}

impl BuilderOutcome {
    pub fn failed_at(&self) -> Option<BuilderStep> {
        (self.status == BuilderStatus::Failed).then_some(self.step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpadMethod {
    /// Subpath of a cycle through a diametral pair.
    Cycle,
    /// Exact search for a path of length `diam + k`.
    PathSearch,
    /// The `diam + 4` builder.
    Builder,
    /// Exact search after the builder failed.
    Fallback,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpadAnswer {
    pub verdict: Verdict,
    pub witness: Option<PathWitness>,
    pub diameter: usize,
    pub method: LpadMethod,
    pub certainty: Certainty,
    pub builder: Option<BuilderOutcome>,
    /// Set when the answer came from exponential search on a hard regime.
    pub notice: Option<String>,
}

pub fn solve_lpad_undirected_2connected(g: &UndirectedGraph, k: usize, cfg: &SubroutineConfig) -> Result<LpadAnswer> {
    if !is_2_connected_undirected(g) {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    let sym = g.symmetrize();
    let (d, s, t) = diameter_and_pair(&sym)?;
    if d <= k {
        return path_search(&sym, d, k, cfg, LpadMethod::PathSearch);
    }
    let (p1, p2) = two_internally_disjoint_paths_undirected(g, s, t)?
        .ok_or_else(|| Error::Precondition(format!("no two disjoint paths between {s} and {t}")))?;
    // s P1 t P2^-1 (without s) is a cycle of length >= 2d > d + k
    let mut around = p1.vertices.clone();
    around.extend(p2.vertices.iter().rev().skip(1).take(p2.vertices.len().saturating_sub(2)));
    around.truncate(d + k + 1);
    let witness = PathWitness::checked(&sym, around, "cycle")?.with_baseline(Baseline::Diameter(d));
    Ok(LpadAnswer {
        verdict: Verdict::Yes,
        witness: Some(witness),
        diameter: d,
        method: LpadMethod::Cycle,
        certainty: Certainty::Exact,
        builder: None,
        notice: None,
    })
}

fn path_search(
    g: &DirectedGraph,
    d: usize,
    k: usize,
    cfg: &SubroutineConfig,
    method: LpadMethod,
) -> Result<LpadAnswer> {
    let (verdict, witness, certainty) = match has_path_at_least(g, d + k, cfg)? {
        Search::Found(w) => (Verdict::Yes, Some(w.with_baseline(Baseline::Diameter(d))), Certainty::Exact),
        Search::Absent(c) => (Verdict::No, None, c),
        Search::Inconclusive => (Verdict::Inconclusive, None, Certainty::Exact),
    };
    Ok(LpadAnswer { verdict, witness, diameter: d, method, certainty, builder: None, notice: None })
}

/// Decides a query in its mode. Directed inputs with `k <= 4` try the
/// builder first; every other case ends in exact search.
pub fn solve_lpad(q: &LpadQuery<'_>, cfg: &SubroutineConfig) -> Result<LpadAnswer> {
    match (q.mode, q.graph) {
        (LpadMode::Undirected2Connected, GraphRef::Undirected(g)) => solve_lpad_undirected_2connected(g, q.k, cfg),
        (LpadMode::Directed2Sc, GraphRef::Directed(g)) => {
            if let Some(defect) = two_strong_connectivity_defect(g) {
                return Err(Error::Precondition(format!("graph is not 2-strongly-connected: {defect:?}")));
            }
            let d = diameter_and_pair(g)?.0;
            if q.k >= 5 {
                let mut a = path_search(g, d, q.k, cfg, LpadMethod::PathSearch)?;
                a.notice = Some(hard_regime(q.k));
                return Ok(a);
            }
            let built = build_diam_plus4_path(g)?;
            if let Some(w) = &built.witness {
                let mut w = w.clone();
                w.vertices.truncate(d + q.k + 1);
                return Ok(LpadAnswer {
                    verdict: Verdict::Yes,
                    witness: Some(w),
                    diameter: d,
                    method: LpadMethod::Builder,
                    certainty: Certainty::Exact,
                    builder: Some(built),
                    notice: None,
                });
            }
            let mut a = path_search(g, d, q.k, cfg, LpadMethod::Fallback)?;
            a.builder = Some(built);
            Ok(a)
        }
        (LpadMode::OracleOnly, graph) => {
            let g = graph.to_directed();
            let d = diameter_and_pair(&g)?.0;
            let mut a = path_search(&g, d, q.k, cfg, LpadMethod::PathSearch)?;
            a.notice = Some(hard_regime(q.k));
            Ok(a)
        }
        (mode, _) => Err(Error::Precondition(format!("mode {} does not accept this graph kind", mode.name()))),
    }
}

fn hard_regime(k: usize) -> String {
    format!("exact exponential search: k = {k} lies in an NP-hard regime")
}

/// Tries to construct a path of length at least `diam + 4` in a
/// 2-strongly-connected digraph.
///
/// Steps, in order, each returning the first validated path:
/// (a) two internally disjoint `(s,t)`-paths for a diametral pair;
/// (b)-(c) outer paths that jump backwards between or off them;
/// (d) scans along two disjoint `(t,s)`-paths, two length-5 paths near
/// `s` and `t`, and their combination.
pub fn build_diam_plus4_path(g: &DirectedGraph) -> Result<BuilderOutcome> {
    if let Some(defect) = two_strong_connectivity_defect(g) {
        return Err(Error::Precondition(format!("graph is not 2-strongly-connected: {defect:?}")));
    }
    let (d, s, t) = diameter_and_pair(g)?;
    let outcome = |step, witness: Option<Vec<usize>>| -> Result<BuilderOutcome> {
        let witness = match witness {
            Some(v) => {
                let w = PathWitness::checked(g, v, step_stage(step))?.with_baseline(Baseline::Diameter(d));
                if w.length() < d + 4 {
                    return Err(Error::InvalidPath(format!("builder produced length {} < {}", w.length(), d + 4)));
                }
                Some(w)
            }
            None => None,
        };
        let status = if witness.is_some() { BuilderStatus::Built } else { BuilderStatus::Failed };
        Ok(BuilderOutcome { status, witness, step, diameter: d, pair: (s, t) })
    };

    let Some((p1, p2)) = two_internally_disjoint_paths(g, s, t)? else {
        return outcome(BuilderStep::DisjointStPaths, None);
    };
    let frame = Frame::new(g, s, t, d, [p1.vertices, p2.vertices]);
    for i in 0..2 {
        if frame.full(i).len() > d + 4 {
            return outcome(BuilderStep::LongPi, Some(frame.full(i)));
        }
    }
    if let Some(p) = frame.outer_scan() {
        return outcome(BuilderStep::OuterScan, Some(p));
    }
    let Some((q1, q2)) = two_internally_disjoint_paths(g, t, s)? else {
        return outcome(BuilderStep::AlternationScan, None);
    };
    let qs = [q1.vertices, q2.vertices];
    if let Some(p) = qs.iter().find_map(|q| frame.alternation_scan(q)) {
        return outcome(BuilderStep::AlternationScan, Some(p));
    }

    let near_s = match frame.five_path(&qs) {
        Five::Full(p) => return outcome(BuilderStep::FivePathNearS, Some(p)),
        Five::Fail => return outcome(BuilderStep::FivePathNearS, None),
        Five::Partial(r, i) => (r, i),
    };
    let gt = g.transpose();
    let rev = |v: &Vec<usize>| v.iter().rev().copied().collect::<Vec<_>>();
    let tframe = Frame::new(&gt, t, s, d, [rev(&frame.paths[0]), rev(&frame.paths[1])]);
    let near_t = match tframe.five_path(&[rev(&qs[0]), rev(&qs[1])]) {
        Five::Full(p) => return outcome(BuilderStep::FivePathNearT, Some(rev(&p))),
        Five::Fail => return outcome(BuilderStep::FivePathNearT, None),
        Five::Partial(r, i) => (rev(&r), i),
    };
    outcome(BuilderStep::Combination, frame.combine(&near_s, &near_t))
}

fn step_stage(step: BuilderStep) -> &'static str {
    step.label()
}

enum Five {
    /// A path of length at least `d + 4` turned up on the way.
    Full(Vec<usize>),
    /// A path of length at least 5 ending in the third inner vertex of the
    /// given side, using only the first three inner vertices of each side.
    Partial(Vec<usize>, usize),
    Fail,
}

/// Two internally disjoint `(s,t)`-paths and positions on them. Inner
/// vertex `j` of side `i` is 1-based, as `v(i, j)`.
struct Frame<'a> {
    g: &'a DirectedGraph,
    s: usize,
    t: usize,
    d: usize,
    paths: [Vec<usize>; 2],
    pos: Vec<Option<(usize, usize)>>,
    on_paths: VertexSet,
}

impl<'a> Frame<'a> {
    fn new(g: &'a DirectedGraph, s: usize, t: usize, d: usize, paths: [Vec<usize>; 2]) -> Self {
        let mut pos = vec![None; g.n()];
        let mut on_paths = VertexSet::new(g.n());
        for (i, p) in paths.iter().enumerate() {
            for (j, &v) in p.iter().enumerate() {
                on_paths.insert(v);
                if j > 0 && j + 1 < p.len() {
                    pos[v] = Some((i, j));
                }
            }
        }
        Frame { g, s, t, d, paths, pos, on_paths }
    }

    /// Number of inner vertices on side `i`.
    fn p(&self, i: usize) -> usize {
        self.paths[i].len() - 2
    }

    fn v(&self, i: usize, j: usize) -> usize {
        self.paths[i][j]
    }

    fn full(&self, i: usize) -> Vec<usize> {
        self.paths[i].clone()
    }

    /// `v(i, a) .. v(i, b)`, where 0 is `s` and `p + 1` is `t`.
    fn seg(&self, i: usize, a: usize, b: usize) -> &[usize] {
        &self.paths[i][a..=b]
    }

    fn accept(&self, path: Vec<usize>) -> Option<Vec<usize>> {
        (path.len() > self.d + 4 && validate_path(self.g, &path).is_ok()).then_some(path)
    }

    /// Shortest outer paths from `src`: no internal vertex on either path
    /// or in `avoid`.
    fn outer_from(&self, src: usize, avoid: Option<&VertexSet>) -> OuterTree {
        let mut allowed = VertexSet::full(self.g.n()).difference(&self.on_paths);
        if let Some(a) = avoid {
            allowed = allowed.difference(a);
        }
        allowed.insert(src);
        let (dist, parent) = bfs_tree(self.g, src, Some(&allowed), false);
        OuterTree { src, dist, parent }
    }

    fn outer_path(&self, tree: &OuterTree, target: usize) -> Option<Vec<usize>> {
        let path = tree.path_to(self.g, target)?;
        debug_assert!(path[1..path.len() - 1].iter().all(|&v| !self.on_paths.contains(v)));
        Some(path)
    }

    /// Backward jumps between the two paths, and outer paths into `s` or
    /// out of `t`.
    fn outer_scan(&self) -> Option<Vec<usize>> {
        for i in 0..2 {
            let o = 1 - i;
            for j in (1..=self.p(i)).rev() {
                let tree = self.outer_from(self.v(i, j), None);
                for jj in 1..=self.p(o).min(j.saturating_sub(3)) {
                    if let Some(tp) = self.outer_path(&tree, self.v(o, jj)) {
                        let path = concat(&[self.seg(i, 0, j), &tp, self.seg(o, jj, self.p(o) + 1)]);
                        if let Some(p) = self.accept(path) {
                            return Some(p);
                        }
                    }
                }
                if j >= 4 {
                    if let Some(tp) = self.outer_path(&tree, self.s) {
                        if let Some(p) = self.accept(concat(&[self.seg(i, 1, j), &tp, &self.paths[o]])) {
                            return Some(p);
                        }
                    }
                }
            }
        }
        let from_t = self.outer_from(self.t, None);
        for i in 0..2 {
            let o = 1 - i;
            for j in 1..=self.p(i).saturating_sub(3) {
                if let Some(tp) = self.outer_path(&from_t, self.v(i, j)) {
                    if let Some(p) = self.accept(concat(&[&self.paths[o], &tp, self.seg(i, j, self.p(i))])) {
                        return Some(p);
                    }
                }
            }
        }
        let tp = self.outer_path(&from_t, self.s)?;
        if self.p(0) == 0 || self.p(1) == 0 {
            return None;
        }
        self.accept(concat(&[self.seg(0, 1, self.p(0) + 1), &tp, self.seg(1, 0, self.p(1))]))
    }

    /// Walks a `(t,s)`-path `q` through its maximal runs of inner vertices
    /// on one side. Each run is entered from `t` or from the previous run
    /// on the other side; a path follows `q` into the run and then either
    /// stops or continues along the side up to the next run vertex.
    fn alternation_scan(&self, q: &[usize]) -> Option<Vec<usize>> {
        let hits: Vec<(usize, usize, usize)> = q[1..q.len() - 1]
            .iter()
            .enumerate()
            .filter_map(|(idx, &v)| self.pos[v].map(|(i, j)| (idx + 1, i, j)))
            .collect();
        let mut start = 0;
        while start < hits.len() {
            let side = hits[start].1;
            let mut end = start;
            while end + 1 < hits.len() && hits[end + 1].1 == side {
                end += 1;
            }
            let other = 1 - side;
            let (head, from): (Vec<usize>, usize) = if start == 0 {
                (self.full(other), 0)
            } else {
                let (idx, _, j) = hits[start - 1];
                (self.seg(other, 0, j).to_vec(), idx)
            };
            let run = &hits[start..=end];
            for &(idx, _, j) in run {
                let into = &q[from..=idx];
                if let Some(p) = self.accept(concat(&[&head, into])) {
                    return Some(p);
                }
                let next = run.iter().map(|h| h.2).filter(|&jj| jj > j).min().unwrap_or(self.p(side) + 1);
                if next > j + 1 {
                    if let Some(p) = self.accept(concat(&[&head, into, self.seg(side, j, next - 1)])) {
                        return Some(p);
                    }
                }
            }
            start = end + 1;
        }
        None
    }

    /// A path of length at least 5 ending in `v(i, 3)` for some side `i`,
    /// built from the ends of two disjoint `(t,s)`-paths near `s`.
    fn five_path(&self, qs: &[Vec<usize>; 2]) -> Five {
        let mut last_two = Vec::new();
        for q in qs {
            let hits: Vec<usize> = q[1..q.len() - 1].iter().copied().filter(|&v| self.pos[v].is_some()).collect();
            if hits.len() < 2 {
                return Five::Fail;
            }
            last_two.push((hits[hits.len() - 2], hits[hits.len() - 1]));
        }
        let tail = |q: &[usize], from: usize| -> Vec<usize> {
            let at = q.iter().position(|&v| v == from).unwrap_or(0);
            q[at..].to_vec()
        };
        let five = |path: Vec<usize>, side: usize| {
            if path.len() >= 6 && validate_path(self.g, &path).is_ok() {
                Five::Partial(path, side)
            } else {
                Five::Fail
            }
        };

        for (k, &(_, dk)) in last_two.iter().enumerate() {
            let Some((i, j)) = self.pos[dk] else { continue };
            if j < 2 {
                continue;
            }
            let o = 1 - i;
            let back = tail(&qs[k], dk);
            if let Some(p) = self.accept(concat(&[self.seg(i, 1, j), &back, &self.paths[o]])) {
                return Five::Full(p);
            }
            if self.p(o) >= 3 {
                return five(concat(&[self.seg(i, 1, j), &back, self.seg(o, 0, 3)]), o);
            }
            return Five::Fail;
        }

        let Some(k) = last_two.iter().position(|&(_, dk)| self.pos[dk] == Some((0, 1))) else {
            return Five::Fail;
        };
        let (ck, dk) = last_two[k];
        let Some((ic, jc)) = self.pos[ck] else { return Five::Fail };
        let c_to_s = tail(&qs[k], ck);
        let c_to_d = &c_to_s[..=c_to_s.iter().position(|&v| v == dk).unwrap_or(0)];
        if ic == 0 {
            if jc >= 4 {
                if let Some(p) = self.accept(concat(&[self.seg(0, 2, jc), &c_to_s, &self.paths[1]])) {
                    return Five::Full(p);
                }
            }
            if self.p(1) >= 3 {
                return five(concat(&[&c_to_s, self.seg(1, 0, 3)]), 1);
            }
            return Five::Fail;
        }
        if jc >= 4 {
            if let Some(p) = self.accept(concat(&[self.seg(1, 0, jc), c_to_d, self.seg(0, 1, self.p(0) + 1)])) {
                return Five::Full(p);
            }
        }
        if self.p(0) >= 3 {
            return five(concat(&[self.seg(1, 0, jc), c_to_d, self.seg(0, 1, 3)]), 0);
        }
        Five::Fail
    }

    /// Joins `r` (ending in `v(i, 3)`) and `r2` (starting in `v(i2, p - 2)`)
    /// along one side, or across the sides through an outer path.
    fn combine(&self, (r, i): &(Vec<usize>, usize), (r2, i2): &(Vec<usize>, usize)) -> Option<Vec<usize>> {
        let (i, i2) = (*i, *i2);
        let end2 = self.p(i2).checked_sub(2)?;
        if i == i2 {
            if end2 < 3 {
                return None;
            }
            return self.accept(concat(&[r, self.seg(i, 3, end2), r2]));
        }
        let mut avoid = VertexSet::from_vertices(self.g.n(), r.iter().chain(r2.iter()).copied());
        avoid.remove(self.v(i, 3));
        avoid.remove(self.v(i2, end2));
        for v in [self.v(i, 1), self.v(i, 2), self.v(i2, self.p(i2)), self.v(i2, self.p(i2) - 1)] {
            avoid.insert(v);
        }
        for y in 3..=self.p(i) {
            let src = self.v(i, y);
            if avoid.contains(src) {
                continue;
            }
            let tree = self.outer_from(src, Some(&avoid));
            for y2 in 1..=end2 {
                let dst = self.v(i2, y2);
                if avoid.contains(dst) {
                    continue;
                }
                if let Some(tp) = self.outer_path(&tree, dst) {
                    if let Some(p) = self.accept(concat(&[r, self.seg(i, 3, y), &tp, self.seg(i2, y2, end2), r2])) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }
}

struct OuterTree {
    src: usize,
    dist: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
}

impl OuterTree {
    /// Shortest path from the source through reached vertices to `target`,
    /// which itself need not be reachable inside the allowed set.
    fn path_to(&self, g: &DirectedGraph, target: usize) -> Option<Vec<usize>> {
        if target == self.src {
            return None;
        }
        let via =
            g.in_neighbors(target).iter().copied().filter(|&x| self.dist[x].is_some()).min_by_key(|&x| self.dist[x])?;
        let mut path = vec![target, via];
        let mut cur = via;
        while cur != self.src {
            cur = self.parent[cur]?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_g_ell, witness_long_path};
    use crate::oracle::{longest_path_oracle, OracleLimits};
    use crate::testutil::*;

    fn cfg() -> SubroutineConfig {
        SubroutineConfig::default()
    }

    #[test]
    fn undirected_cycle_uses_cycle() {
        let a = solve_lpad_undirected_2connected(&cycle(10), 3, &cfg()).unwrap();
        assert_eq!((a.verdict, a.method, a.diameter), (Verdict::Yes, LpadMethod::Cycle, 5));
        assert_eq!(a.witness.unwrap().length(), 8);
    }

    #[test]
    fn undirected_complete_graph() {
        let k4 = complete_graph(4);
        let a = solve_lpad_undirected_2connected(&k4, 2, &cfg()).unwrap();
        assert_eq!((a.verdict, a.method), (Verdict::Yes, LpadMethod::PathSearch));
        assert_eq!(a.witness.unwrap().length(), 3);
        let a = solve_lpad_undirected_2connected(&k4, 3, &cfg()).unwrap();
        assert_eq!((a.verdict, a.certainty), (Verdict::No, Certainty::Exact));
    }

    #[test]
    fn undirected_precondition() {
        let path = UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(solve_lpad_undirected_2connected(&path, 1, &cfg()), Err(Error::Precondition(_))));
    }

    #[test]
    fn undirected_matches_oracle() {
        let mut r = rng(53);
        for i in 0..300 {
            let n = 3 + i % 10;
            let g = random_2connected_graph(&mut r, n, [0.05, 0.2, 0.5][i % 3]);
            assert!(is_2_connected_undirected(&g));
            let sym = g.symmetrize();
            let longest = longest_path_oracle(&sym, &OracleLimits::default()).unwrap().value;
            let d = diameter_and_pair(&sym).unwrap().0;
            for k in 0..=4 {
                let a = solve_lpad_undirected_2connected(&g, k, &cfg()).unwrap();
                assert_eq!(a.verdict == Verdict::Yes, longest >= d + k, "n={n} k={k}");
                if let Some(w) = a.witness {
                    w.validate(&sym).unwrap();
                    assert!(w.length() >= d + k);
                }
            }
        }
    }

    #[test]
    fn two_cycle_has_no_longer_path() {
        let g = directed_cycle(2);
        let q = LpadQuery { graph: GraphRef::Directed(&g), k: 1, mode: LpadMode::Directed2Sc };
        let a = solve_lpad(&q, &cfg()).unwrap();
        assert_eq!((a.verdict, a.method, a.diameter), (Verdict::No, LpadMethod::Fallback, 1));
        assert!(a.builder.unwrap().failed_at().is_some());
    }

    #[test]
    fn mode_mismatch_is_rejected() {
        let g = directed_cycle(3);
        let q = LpadQuery { graph: GraphRef::Directed(&g), k: 1, mode: LpadMode::Undirected2Connected };
        assert!(matches!(solve_lpad(&q, &cfg()), Err(Error::Precondition(_))));
        let q = LpadQuery { graph: GraphRef::Directed(&g), k: 1, mode: LpadMode::Directed2Sc };
        assert!(matches!(solve_lpad(&q, &cfg()), Err(Error::Precondition(_))));
    }

    #[test]
    fn g1_lpad() {
        let (g, bp) = build_g_ell(1).unwrap();
        let out = build_diam_plus4_path(&g).unwrap();
        assert_eq!(out.diameter, 18);
        match out.status {
            BuilderStatus::Built => assert!(out.witness.unwrap().length() >= 22),
            BuilderStatus::Failed => assert!(out.witness.is_none()),
        }
        assert_eq!(witness_long_path(&bp).length(), 22);
        let q = LpadQuery { graph: GraphRef::Directed(&g), k: 4, mode: LpadMode::Directed2Sc };
        let a = solve_lpad(&q, &cfg()).unwrap();
        assert_eq!(a.verdict, Verdict::Yes);
        assert_eq!(a.witness.unwrap().length(), 22);
    }

    #[test]
    fn builder_fuzz_is_sound() {
        let mut r = rng(59);
        let mut built = 0;
        for i in 0..200 {
            let n = 4 + i % 57;
            let g = random_2sc_digraph(&mut r, n, [0, 2, n / 4][i % 3]);
            let out = build_diam_plus4_path(&g).unwrap();
            match (&out.status, &out.witness) {
                (BuilderStatus::Built, Some(w)) => {
                    w.validate(&g).unwrap();
                    assert!(w.length() >= out.diameter + 4);
                    built += 1;
                }
                (BuilderStatus::Failed, None) => {}
                other => panic!("inconsistent outcome {other:?}"),
            }
        }
        assert!(built > 0);
    }

    #[test]
    fn directed_matches_oracle_with_fallback() {
        let mut r = rng(61);
        for i in 0..150 {
            let n = 3 + i % 9;
            let g = random_2sc_digraph(&mut r, n, i % 4);
            let longest = longest_path_oracle(&g, &OracleLimits::default()).unwrap().value;
            let d = diameter_and_pair(&g).unwrap().0;
            for k in 0..=5 {
                let q = LpadQuery { graph: GraphRef::Directed(&g), k, mode: LpadMode::Directed2Sc };
                let a = solve_lpad(&q, &cfg()).unwrap();
                assert_eq!(a.verdict == Verdict::Yes, longest >= d + k);
                assert_eq!(a.notice.is_some(), k >= 5);
            }
        }
    }
}
