//! Exponential ground-truth solvers.
//!
//! Small inputs go through a subset DP over `(vertex subset, end vertex)`;
//! larger ones through a DFS branch-and-bound whose bound is the number of
//! vertices still reachable from the frontier. Both engines are exact; only
//! branch-and-bound can run out of budget.

use alloc::vec::Vec;

use crate::graph::{induced_subgraph, shortest_path, DirectedGraph, UndirectedGraph, VertexSet};
use crate::path::PathWitness;
use crate::search::{Dfs, Goal, SubsetDp};
use crate::{Certainty, Error, Result, Search};

/// Hard ceiling for the subset DP: its table has `2^n` words.
pub const MAX_DP_VERTEX_CAP: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Subset DP when the graph fits under the cap, branch-and-bound
    /// otherwise.
    #[default]
    Auto,
    SubsetDp,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub dp_vertex_cap: usize,
    pub bnb_node_budget: u64,
    pub engine: Engine,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { dp_vertex_cap: 20, bnb_node_budget: 100_000_000, engine: Engine::Auto }
    }
}

impl OracleLimits {
    pub fn validate(&self) -> Result<()> {
        if self.dp_vertex_cap > MAX_DP_VERTEX_CAP {
            return Err(Error::Config(alloc::format!(
                "dp vertex cap {} exceeds {MAX_DP_VERTEX_CAP}",
                self.dp_vertex_cap
            )));
        }
        Ok(())
    }

    fn use_dp(&self, n: usize) -> Result<bool> {
        self.validate()?;
        match self.engine {
            Engine::Auto => Ok(n <= self.dp_vertex_cap),
            Engine::SubsetDp if n <= self.dp_vertex_cap => Ok(true),
            Engine::SubsetDp => Err(Error::DpCapExceeded { n, cap: self.dp_vertex_cap }),
            Engine::BranchAndBound => Ok(false),
        }
    }
}

/// `exact` is false only when branch-and-bound hit its node budget; the
/// witness is then the best path seen.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleAnswer {
    pub value: usize,
    pub witness: PathWitness,
    pub exact: bool,
}

/// Longest `(s,t)`-path, or a marker that no `(s,t)`-path exists.
#[derive(Debug, Clone, PartialEq)]
pub enum StPathAnswer {
    Path(OracleAnswer),
    NoPath,
}

impl StPathAnswer {
    pub fn value(&self) -> Option<usize> {
        match self {
            StPathAnswer::Path(a) => Some(a.value),
            StPathAnswer::NoPath => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetourValue {
    /// Largest `k` with an `(s,t)`-path of length `dist + k`.
    pub k_star: usize,
    pub dist: usize,
    pub longest: OracleAnswer,
}

/// One exact search over the vertices in `allowed` (all when `None`).
/// `end` forces the last vertex; the path never continues through it.
pub(crate) fn exact_search(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    start: Option<usize>,
    end: Option<usize>,
    goal: Goal,
    limits: &OracleLimits,
) -> Result<(Option<Vec<usize>>, bool)> {
    let size = allowed.map_or(g.n(), VertexSet::len);
    if limits.use_dp(size)? {
        let Some(keep) = allowed else {
            return Ok((SubsetDp::build(g, start).find(end, goal), true));
        };
        let (sub, map) = induced_subgraph(g, keep);
        let start = start.map(|s| map.sub(s));
        let end = end.map(|t| map.sub(t));
        if start == Some(None) || end == Some(None) {
            return Ok((None, true));
        }
        let found = SubsetDp::build(&sub, start.flatten()).find(end.flatten(), goal);
        return Ok((found.map(|p| map.lift(&p)), true));
    }
    let waypoints: Vec<usize> = end.into_iter().collect();
    let out = Dfs { g, allowed, start, waypoints: &waypoints, goal, node_budget: limits.bnb_node_budget }.run();
    Ok((out.best, out.complete))
}

/// Three-valued wrapper around [`exact_search`] for decision goals.
pub(crate) fn exact_decision(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    start: Option<usize>,
    end: Option<usize>,
    goal: Goal,
    limits: &OracleLimits,
) -> Result<Search<Vec<usize>>> {
    Ok(match exact_search(g, allowed, start, end, goal, limits)? {
        (Some(p), _) => Search::Found(p),
        (None, true) => Search::Absent(Certainty::Exact),
        (None, false) => Search::Inconclusive,
    })
}

pub fn longest_path_oracle(g: &DirectedGraph, limits: &OracleLimits) -> Result<OracleAnswer> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (best, exact) = exact_search(g, None, None, None, Goal::Longest, limits)?;
    let vertices = best.unwrap_or_else(|| alloc::vec![0]);
    let witness = PathWitness::checked(g, vertices, "oracle")?;
    Ok(OracleAnswer { value: witness.length(), witness, exact })
}

pub fn longest_st_path_oracle(g: &DirectedGraph, s: usize, t: usize, limits: &OracleLimits) -> Result<StPathAnswer> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let Some(shortest) = shortest_path(g, s, t, None) else {
        return Ok(StPathAnswer::NoPath);
    };
    let (best, exact) = exact_search(g, None, Some(s), Some(t), Goal::Longest, limits)?;
    let vertices = match best {
        Some(p) if p.len() >= shortest.len() => p,
        _ => shortest,
    };
    let witness = PathWitness::checked(g, vertices, "oracle")?;
    Ok(StPathAnswer::Path(OracleAnswer { value: witness.length(), witness, exact }))
}

/// Errors with [`Error::Unreachable`] when `t` cannot be reached, which is
/// distinct from `k_star == 0`.
pub fn detour_oracle(g: &DirectedGraph, s: usize, t: usize, limits: &OracleLimits) -> Result<DetourValue> {
    match longest_st_path_oracle(g, s, t, limits)? {
        StPathAnswer::NoPath => Err(Error::Unreachable { s, t }),
        StPathAnswer::Path(longest) => {
            let dist = shortest_path(g, s, t, None).map_or(0, |p| p.len() - 1);
            Ok(DetourValue { k_star: longest.value - dist, dist, longest })
        }
    }
}

/// A Hamiltonian path of `g` starting at `w`.
pub fn hamiltonian_path_from(g: &UndirectedGraph, w: usize, limits: &OracleLimits) -> Result<Search<PathWitness>> {
    let d = g.symmetrize();
    d.check_vertex(w)?;
    let found = exact_decision(&d, None, Some(w), None, Goal::AtLeast(g.n() - 1), limits)?;
    Ok(match found {
        Search::Found(p) => Search::Found(PathWitness::checked(g, p, "oracle")?),
        Search::Absent(c) => Search::Absent(c),
        Search::Inconclusive => Search::Inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distances_from;
    use crate::testutil::*;

    fn both_engines() -> [OracleLimits; 2] {
        [
            OracleLimits { engine: Engine::SubsetDp, ..Default::default() },
            OracleLimits { engine: Engine::BranchAndBound, ..Default::default() },
        ]
    }

    #[test]
    fn limits_validation() {
        let bad = OracleLimits { dp_vertex_cap: 26, ..Default::default() };
        assert!(matches!(bad.validate(), Err(Error::Config(_))));
        let g = directed_path(22);
        let dp = OracleLimits { engine: Engine::SubsetDp, ..Default::default() };
        assert_eq!(longest_path_oracle(&g, &dp), Err(Error::DpCapExceeded { n: 22, cap: 20 }));
    }

    #[test]
    fn longest_path_examples() {
        for limits in both_engines() {
            assert_eq!(longest_path_oracle(&directed_path(5), &limits).unwrap().value, 4);
            let a = longest_path_oracle(&directed_cycle(6), &limits).unwrap();
            assert_eq!((a.value, a.exact), (5, true));
            assert_eq!(longest_path_oracle(&DirectedGraph::empty(1), &limits).unwrap().value, 0);
        }
    }

    #[test]
    fn longest_st_path_examples() {
        for limits in both_engines() {
            let g = two_parallel_paths();
            assert_eq!(longest_st_path_oracle(&g, 0, 6, &limits).unwrap().value(), Some(5));
            let g = directed_path(2);
            assert_eq!(longest_st_path_oracle(&g, 0, 1, &limits).unwrap().value(), Some(1));
            assert_eq!(longest_st_path_oracle(&g, 1, 0, &limits).unwrap(), StPathAnswer::NoPath);
            assert_eq!(longest_st_path_oracle(&g, 1, 1, &limits), Err(Error::SameEndpoints(1)));
        }
    }

    #[test]
    fn detour_examples() {
        for limits in both_engines() {
            let v = detour_oracle(&two_parallel_paths(), 0, 6, &limits).unwrap();
            assert_eq!((v.dist, v.k_star), (2, 3));
            assert_eq!(detour_oracle(&directed_path(5), 0, 4, &limits).unwrap().k_star, 0);
            assert_eq!(detour_oracle(&complete_digraph(4), 0, 3, &limits).unwrap().k_star, 2);
            assert_eq!(detour_oracle(&directed_path(5), 4, 0, &limits), Err(Error::Unreachable { s: 4, t: 0 }));
        }
    }

    fn petersen() -> UndirectedGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        UndirectedGraph::new(10, edges).unwrap()
    }

    #[test]
    fn hamiltonian_examples() {
        for limits in both_engines() {
            for w in 0..6 {
                let p = hamiltonian_path_from(&cycle(6), w, &limits).unwrap().found().unwrap();
                assert_eq!((p.first(), p.length()), (Some(w), 5));
            }
            let star = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
            assert_eq!(hamiltonian_path_from(&star, 0, &limits).unwrap(), Search::Absent(Certainty::Exact));
            let pet = petersen();
            for w in 0..10 {
                let p = hamiltonian_path_from(&pet, w, &limits).unwrap().found().unwrap();
                p.validate(&pet).unwrap();
                assert_eq!(p.length(), 9);
            }
        }
    }

    #[test]
    fn hamiltonian_budget_is_inconclusive() {
        let limits = OracleLimits { engine: Engine::BranchAndBound, bnb_node_budget: 3, ..Default::default() };
        assert_eq!(hamiltonian_path_from(&cycle(8), 0, &limits).unwrap(), Search::Inconclusive);
    }

    #[test]
    fn engines_agree_on_random_graphs() {
        let mut r = rng(3);
        let [dp, bb] = both_engines();
        for i in 0..500 {
            let n = 2 + i % 11;
            let g = random_digraph(&mut r, n, [0.15, 0.3, 0.5][i % 3]);
            let a = longest_path_oracle(&g, &dp).unwrap();
            let b = longest_path_oracle(&g, &bb).unwrap();
            a.witness.validate(&g).unwrap();
            b.witness.validate(&g).unwrap();
            assert!(b.exact);
            assert_eq!(a.value, b.value);
            let (s, t) = (0, n - 1);
            let x = longest_st_path_oracle(&g, s, t, &dp).unwrap();
            let y = longest_st_path_oracle(&g, s, t, &bb).unwrap();
            assert_eq!(x.value(), y.value());
            assert_eq!(x.value(), st_path_lengths(&g, s, t).last().copied());
            if let (StPathAnswer::Path(x), Some(d)) = (&x, distances_from(&g, s)[t]) {
                x.witness.validate_endpoints(&g, s, t).unwrap();
                assert!(x.value >= d);
            }
        }
    }
}
