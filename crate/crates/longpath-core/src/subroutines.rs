//! The three path subroutines the detour pipeline is built from: a path of
//! length at least `k`, an `(s,t)`-path of length at least `k`, and an
//! `(s,t)`-path of length exactly `dist(s,t) + ell`.
//!
//! Each one runs under a [`Strategy`]. The deterministic strategies are
//! exact (subset DP, branch-and-bound) and may only fail by running out of
//! budget, which is reported as [`Search::Inconclusive`]. Color coding is
//! randomized: a negative answer carries the configured failure
//! probability.
//!
//! With fixed endpoints, "at least `k` arcs" does not reduce to "exactly
//! `k` arcs". Color coding therefore covers [`long_st_path`] only over the
//! length window `k..=2k`; longer paths are settled by an exact search.
//! Color coding is never chosen by [`Strategy::Auto`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bfs_tree, DirectedGraph, VertexSet};
use crate::oracle::{exact_decision, OracleLimits};
use crate::path::PathWitness;
use crate::search::Goal;
use crate::{Certainty, Error, Result, Search};

/// Largest number of colors a color-coding table is built for.
pub const MAX_COLORS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Subset DP when the searched region fits under the DP cap,
    /// branch-and-bound otherwise.
    #[default]
    Auto,
    ColorCoding,
    SubsetDp,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubroutineConfig {
    pub strategy: Strategy,
    pub seed: u64,
    pub failure_probability: f64,
    pub limits: OracleLimits,
}

impl Default for SubroutineConfig {
    fn default() -> Self {
        SubroutineConfig {
            strategy: Strategy::Auto,
            seed: 0,
            failure_probability: 1e-3,
            limits: OracleLimits::default(),
        }
    }
}

impl SubroutineConfig {
    pub fn validate(&self) -> Result<()> {
        let d = self.failure_probability;
        if !(d > 0.0 && d < 1.0) {
            return Err(Error::Config(format!("failure probability {d} outside (0,1)")));
        }
        self.limits.validate()
    }

    /// Limits with the engine pinned by a deterministic strategy.
    fn exact_limits(&self) -> OracleLimits {
        use crate::oracle::Engine;
        let engine = match self.strategy {
            Strategy::SubsetDp => Engine::SubsetDp,
            Strategy::BranchAndBound => Engine::BranchAndBound,
            Strategy::Auto | Strategy::ColorCoding => self.limits.engine,
        };
        OracleLimits { engine, ..self.limits }
    }
}

/// Number of color-coding trials for a path on `colors` vertices:
/// `ceil(e^colors * ln(1/delta))`.
pub fn color_coding_trials(colors: usize, delta: f64) -> u64 {
    libm::ceil(libm::exp(colors as f64) * libm::log(1.0 / delta)) as u64
}

/// A path with at least `k` arcs.
pub fn has_path_at_least(g: &DirectedGraph, k: usize, cfg: &SubroutineConfig) -> Result<Search<PathWitness>> {
    has_path_at_least_within(g, None, k, cfg)
}

pub fn has_path_at_least_within(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    k: usize,
    cfg: &SubroutineConfig,
) -> Result<Search<PathWitness>> {
    cfg.validate()?;
    let found = if cfg.strategy == Strategy::ColorCoding {
        // every path with at least k arcs has a prefix with exactly k
        let size = allowed.map_or(g.n(), VertexSet::len);
        if k >= size {
            Search::Absent(Certainty::Exact)
        } else {
            color_coding(g, allowed, None, None, k, cfg)?
        }
    } else {
        exact_decision(g, allowed, None, None, Goal::AtLeast(k), &cfg.exact_limits())?
    };
    witness(g, found, "k-path")
}

/// An `(s,t)`-path with at least `k` arcs.
pub fn long_st_path(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    k: usize,
    cfg: &SubroutineConfig,
) -> Result<Search<PathWitness>> {
    long_st_path_within(g, None, s, t, k, cfg)
}

/// As [`long_st_path`], with every vertex of the path (endpoints included)
/// drawn from `allowed`.
pub fn long_st_path_within(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    s: usize,
    t: usize,
    k: usize,
    cfg: &SubroutineConfig,
) -> Result<Search<PathWitness>> {
    cfg.validate()?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let found = if cfg.strategy == Strategy::ColorCoding {
        let size = allowed.map_or(g.n(), VertexSet::len);
        let top = (2 * k).max(1);
        let mut certainty = Certainty::Exact;
        let mut inconclusive = false;
        let mut hit = None;
        for len in k.max(1)..=top.min(size.saturating_sub(1)) {
            match color_coding(g, allowed, Some(s), Some(t), len, cfg)? {
                Search::Found(p) => {
                    hit = Some(p);
                    break;
                }
                Search::Absent(c) => certainty = certainty.and(c),
                Search::Inconclusive => inconclusive = true,
            }
        }
        if hit.is_none() && top < size.saturating_sub(1) {
            match exact_decision(g, allowed, Some(s), Some(t), Goal::AtLeast(top + 1), &cfg.exact_limits())? {
                Search::Found(p) => hit = Some(p),
                Search::Absent(_) => {}
                Search::Inconclusive => inconclusive = true,
            }
        }
        match hit {
            Some(p) => Search::Found(p),
            None if inconclusive => Search::Inconclusive,
            None => Search::Absent(certainty),
        }
    } else {
        exact_decision(g, allowed, Some(s), Some(t), Goal::AtLeast(k), &cfg.exact_limits())?
    };
    witness(g, found, "long-st-path")
}

/// An `(s,t)`-path with exactly `dist(s,t) + ell` arcs.
pub fn exact_detour(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    ell: usize,
    cfg: &SubroutineConfig,
) -> Result<Search<PathWitness>> {
    cfg.validate()?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let dist = bfs_tree(g, s, None, false).0[t].ok_or(Error::Unreachable { s, t })?;
    let len = dist + ell;
    let found = if len >= g.n() {
        Search::Absent(Certainty::Exact)
    } else if cfg.strategy == Strategy::ColorCoding {
        color_coding(g, None, Some(s), Some(t), len, cfg)?
    } else {
        exact_decision(g, None, Some(s), Some(t), Goal::Exact(len), &cfg.exact_limits())?
    };
    witness(g, found, "exact-detour")
}

fn witness(g: &DirectedGraph, found: Search<Vec<usize>>, stage: &str) -> Result<Search<PathWitness>> {
    Ok(match found {
        Search::Found(p) => Search::Found(PathWitness::checked(g, p, stage)?),
        Search::Absent(c) => Search::Absent(c),
        Search::Inconclusive => Search::Inconclusive,
    })
}

/// Randomized search for a path with exactly `len` arcs: color the vertices
/// with `len + 1` colors and look for a colorful path by DP over color
/// sets. Stops at the first success.
fn color_coding(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    start: Option<usize>,
    end: Option<usize>,
    len: usize,
    cfg: &SubroutineConfig,
) -> Result<Search<Vec<usize>>> {
    let colors = len + 1;
    if colors > MAX_COLORS {
        return Err(Error::Config(format!("color coding supports at most {} arcs", MAX_COLORS - 1)));
    }
    let delta = cfg.failure_probability;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (len as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut coloring = vec![0u8; g.n()];
    for _ in 0..color_coding_trials(colors, delta) {
        for c in coloring.iter_mut() {
            *c = rng.random_range(0..colors as u8);
        }
        if let Some(p) = colorful_path(g, allowed, start, end, colors, &coloring) {
            return Ok(Search::Found(p));
        }
    }
    Ok(Search::Absent(Certainty::Randomized { delta }))
}

/// `table[mask * n + v]`: a path using exactly the colors in `mask` ends at
/// `v`.
fn colorful_path(
    g: &DirectedGraph,
    allowed: Option<&VertexSet>,
    start: Option<usize>,
    end: Option<usize>,
    colors: usize,
    coloring: &[u8],
) -> Option<Vec<usize>> {
    let n = g.n();
    let usable = |v: usize| allowed.is_none_or(|a| a.contains(v));
    let bit = |v: usize| 1usize << coloring[v];
    let full = (1usize << colors) - 1;
    let mut table = vec![false; (full + 1) * n];
    for v in 0..n {
        if usable(v) && start.is_none_or(|s| s == v) {
            table[bit(v) * n + v] = true;
        }
    }
    for mask in 1..full {
        for v in 0..n {
            if !table[mask * n + v] || Some(v) == end {
                continue;
            }
            for &w in g.out_neighbors(v) {
                if usable(w) && mask & bit(w) == 0 {
                    table[(mask | bit(w)) * n + w] = true;
                }
            }
        }
    }
    let last = (0..n).find(|&v| table[full * n + v] && end.is_none_or(|t| t == v))?;
    let mut path = vec![last];
    let mut mask = full;
    let mut v = last;
    while mask != bit(v) {
        let rest = mask ^ bit(v);
        let &u = g.in_neighbors(v).iter().find(|&&u| rest & bit(u) != 0 && table[rest * n + u])?;
        path.push(u);
        mask = rest;
        v = u;
    }
    path.reverse();
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::build_g_ell;
    use crate::oracle::{detour_oracle, longest_path_oracle, longest_st_path_oracle};
    use crate::testutil::*;

    const STRATEGIES: [Strategy; 3] = [Strategy::Auto, Strategy::SubsetDp, Strategy::BranchAndBound];

    fn cfg(strategy: Strategy) -> SubroutineConfig {
        SubroutineConfig { strategy, ..Default::default() }
    }

    #[test]
    fn trial_count_formula() {
        // e^2 * ln 1000 = 51.04...
        assert_eq!(color_coding_trials(2, 1e-3), 52);
        assert_eq!(color_coding_trials(1, 0.5), 2);
    }

    #[test]
    fn config_validation() {
        let bad = SubroutineConfig { failure_probability: 1.0, ..Default::default() };
        assert!(matches!(has_path_at_least(&directed_path(3), 1, &bad), Err(Error::Config(_))));
    }

    #[test]
    fn k_path_examples() {
        let star = DirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        for s in STRATEGIES.into_iter().chain([Strategy::ColorCoding]) {
            let p = has_path_at_least(&directed_path(5), 4, &cfg(s)).unwrap().found().unwrap();
            assert_eq!(p.length(), 4);
            assert!(has_path_at_least(&star, 2, &cfg(s)).unwrap().is_absent());
        }
    }

    #[test]
    fn k_path_on_gadget() {
        let (g, _) = build_g_ell(1).unwrap();
        for s in [Strategy::Auto, Strategy::BranchAndBound] {
            let p = has_path_at_least(&g, 22, &cfg(s)).unwrap().found().unwrap();
            assert!(p.length() >= 22);
            p.validate(&g).unwrap();
        }
    }

    #[test]
    fn long_st_path_examples() {
        let g = two_parallel_paths();
        for s in STRATEGIES {
            let p = long_st_path(&g, 0, 6, 5, &cfg(s)).unwrap().found().unwrap();
            assert_eq!(p.vertices, vec![0, 2, 3, 4, 5, 6]);
            assert!(long_st_path(&g, 0, 6, 6, &cfg(s)).unwrap().is_absent());
            let p = long_st_path(&g, 0, 6, 0, &cfg(s)).unwrap().found().unwrap();
            p.validate_endpoints(&g, 0, 6).unwrap();
        }
    }

    #[test]
    fn color_coding_long_st_path_beyond_window() {
        // a single (0,7)-path with 7 arcs; the window for k = 2 is 2..=4
        let g = DirectedGraph::new(8, (0..7).map(|v| (v, v + 1))).unwrap();
        let c = cfg(Strategy::ColorCoding);
        let p = long_st_path(&g, 0, 7, 2, &c).unwrap().found().unwrap();
        assert_eq!(p.length(), 7);
        assert!(long_st_path(&g, 7, 0, 2, &c).unwrap().is_absent());
        let starved = SubroutineConfig {
            strategy: Strategy::ColorCoding,
            limits: OracleLimits {
                engine: crate::oracle::Engine::BranchAndBound,
                bnb_node_budget: 1,
                ..Default::default()
            },
            ..Default::default()
        };
        assert!(long_st_path(&g, 0, 7, 2, &starved).unwrap().is_inconclusive());
    }

    #[test]
    fn exact_detour_examples() {
        let g = two_parallel_paths();
        for s in STRATEGIES.into_iter().chain([Strategy::ColorCoding]) {
            let c = cfg(s);
            assert_eq!(exact_detour(&g, 0, 6, 0, &c).unwrap().found().unwrap().length(), 2);
            assert_eq!(exact_detour(&g, 0, 6, 3, &c).unwrap().found().unwrap().length(), 5);
            assert!(exact_detour(&g, 0, 6, 1, &c).unwrap().is_absent());
            assert!(exact_detour(&g, 0, 6, 2, &c).unwrap().is_absent());
            assert!(exact_detour(&directed_cycle(5), 0, 1, 1, &c).unwrap().is_absent());
            assert_eq!(exact_detour(&g, 6, 0, 0, &c), Err(Error::Unreachable { s: 6, t: 0 }));
        }
    }

    #[test]
    fn color_coding_is_deterministic_per_seed() {
        let g = complete_digraph(6);
        let c = cfg(Strategy::ColorCoding);
        let a = has_path_at_least(&g, 4, &c).unwrap();
        let b = has_path_at_least(&g, 4, &c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn randomized_absence_carries_delta() {
        let star = DirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = SubroutineConfig { strategy: Strategy::ColorCoding, failure_probability: 0.01, ..Default::default() };
        assert_eq!(has_path_at_least(&star, 2, &c).unwrap(), Search::Absent(Certainty::Randomized { delta: 0.01 }));
    }

    #[test]
    fn restricted_search_stays_inside() {
        // 0 -> 1 -> 2 -> 3 -> 0 with 2 removed: longest path has 2 arcs
        let g = directed_cycle(4);
        let keep = VertexSet::from_vertices(4, [0, 1, 3]);
        for s in STRATEGIES {
            assert!(has_path_at_least_within(&g, Some(&keep), 2, &cfg(s)).unwrap().is_found());
            assert!(has_path_at_least_within(&g, Some(&keep), 3, &cfg(s)).unwrap().is_absent());
            assert!(long_st_path_within(&g, Some(&keep), 3, 1, 2, &cfg(s)).unwrap().is_found());
            assert!(long_st_path_within(&g, Some(&keep), 1, 3, 1, &cfg(s)).unwrap().is_absent());
        }
    }

    #[test]
    fn deterministic_strategies_match_oracle() {
        let mut r = rng(5);
        let limits = OracleLimits::default();
        for i in 0..200 {
            let n = 2 + i % 11;
            let g = random_digraph(&mut r, n, [0.15, 0.3, 0.5][i % 3]);
            let longest = longest_path_oracle(&g, &limits).unwrap().value;
            let (s, t) = (0, n - 1);
            let st = longest_st_path_oracle(&g, s, t, &limits).unwrap().value();
            let lengths = st_path_lengths(&g, s, t);
            let dist = lengths.first().copied();
            for k in 0..=n {
                for strat in [Strategy::SubsetDp, Strategy::BranchAndBound] {
                    let c = cfg(strat);
                    let a = has_path_at_least(&g, k, &c).unwrap();
                    assert_eq!(a.is_found(), k <= longest);
                    let b = long_st_path(&g, s, t, k, &c).unwrap();
                    assert_eq!(b.is_found(), st.is_some_and(|v| v >= k));
                    if let Some(d) = dist {
                        let e = exact_detour(&g, s, t, k, &c).unwrap();
                        assert_eq!(e.is_found(), lengths.contains(&(d + k)));
                        if let Search::Found(p) = e {
                            p.validate_endpoints(&g, s, t).unwrap();
                            assert_eq!(p.length() - d, k);
                        }
                    }
                }
            }
            if let Some(d) = dist {
                let v = detour_oracle(&g, s, t, &limits).unwrap();
                assert_eq!(v.dist, d);
            }
        }
    }
}
