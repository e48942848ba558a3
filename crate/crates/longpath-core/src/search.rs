//! The two exact path-search engines shared by the oracle, the subroutines
//! and the chain backends.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, VertexSet};

/// What a search is asked to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// A longest qualifying path.
    Longest,
    /// Any qualifying path with at least this many arcs.
    AtLeast(usize),
    /// Any qualifying path with exactly this many arcs.
    Exact(usize),
}

impl Goal {
    fn accepts(self, len: usize) -> bool {
        match self {
            Goal::Longest => true,
            Goal::AtLeast(l) => len >= l,
            Goal::Exact(l) => len == l,
        }
    }
}

/// Subset DP: `reach[mask]` holds the set of vertices `v` such that some
/// simple path covering exactly `mask` ends at `v` (and starts at `start`
/// when one is fixed).
pub(crate) struct SubsetDp<'a> {
    g: &'a DirectedGraph,
    reach: Vec<u32>,
}

impl<'a> SubsetDp<'a> {
    /// Caller guarantees `g.n() <= 25`.
    pub(crate) fn build(g: &'a DirectedGraph, start: Option<usize>) -> Self {
        let n = g.n();
        debug_assert!(n <= 25);
        let mut reach = vec![0u32; 1usize << n];
        match start {
            Some(s) => reach[1 << s] = 1 << s,
            None => (0..n).for_each(|v| reach[1 << v] = 1 << v),
        }
        for mask in 1..reach.len() {
            let mut ends = reach[mask];
            while ends != 0 {
                let v = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                for &w in g.out_neighbors(v) {
                    if mask & (1 << w) == 0 {
                        reach[mask | (1 << w)] |= 1 << w;
                    }
                }
            }
        }
        SubsetDp { g, reach }
    }

    /// A path meeting `goal`, optionally forced to end at `end`. For
    /// `Longest` the returned path is a longest one.
    pub(crate) fn find(&self, end: Option<usize>, goal: Goal) -> Option<Vec<usize>> {
        let end_mask = end.map_or(u32::MAX, |t| 1u32 << t);
        let mut best: Option<(usize, usize)> = None;
        for (mask, &ends) in self.reach.iter().enumerate() {
            let hits = ends & end_mask;
            if hits == 0 {
                continue;
            }
            let len = mask.count_ones() as usize - 1;
            if !goal.accepts(len) {
                continue;
            }
            if goal != Goal::Longest {
                return Some(self.rebuild(mask, hits.trailing_zeros() as usize));
            }
            if best.is_none_or(|(m, _)| len > m.count_ones() as usize - 1) {
                best = Some((mask, hits.trailing_zeros() as usize));
            }
        }
        best.map(|(mask, v)| self.rebuild(mask, v))
    }

    fn rebuild(&self, mut mask: usize, mut v: usize) -> Vec<usize> {
        let mut path = vec![v];
        while mask.count_ones() > 1 {
            let rest = mask ^ (1 << v);
            let Some(&u) =
                self.g.in_neighbors(v).iter().find(|&&u| rest & (1 << u) != 0 && self.reach[rest] & (1 << u) != 0)
            else {
                break;
            };
            path.push(u);
            mask = rest;
            v = u;
        }
        path.reverse();
        path
    }
}

/// Parameters of one branch-and-bound run.
pub(crate) struct Dfs<'a> {
    pub g: &'a DirectedGraph,
    /// Vertices the path may use (all when `None`).
    pub allowed: Option<&'a VertexSet>,
    /// Fixed first vertex; every vertex is tried when `None`.
    pub start: Option<usize>,
    /// Vertices that must be visited in this order; the last one ends the
    /// path. Empty means the path may end anywhere.
    pub waypoints: &'a [usize],
    pub goal: Goal,
    pub node_budget: u64,
}

/// Result of a branch-and-bound run. `complete` is false iff the node
/// budget ran out before the search space was exhausted (a found path for
/// `AtLeast`/`Exact` always counts as complete).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DfsOutcome {
    pub best: Option<Vec<usize>>,
    pub complete: bool,
}

struct State<'a, 'b> {
    spec: &'b Dfs<'a>,
    path: Vec<usize>,
    used: Vec<bool>,
    next_waypoint: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    aborted: bool,
    done: bool,
    queue: VecDeque<usize>,
    seen: Vec<u32>,
    stamp: u32,
    dist: Vec<usize>,
}

impl Dfs<'_> {
    pub(crate) fn run(&self) -> DfsOutcome {
        let n = self.g.n();
        let mut st = State {
            spec: self,
            path: Vec::new(),
            used: vec![false; n],
            next_waypoint: 0,
            best: None,
            nodes: 0,
            aborted: false,
            done: false,
            queue: VecDeque::new(),
            seen: vec![0; n],
            stamp: 0,
            dist: vec![0; n],
        };
        let starts: Vec<usize> = match self.start {
            Some(s) => vec![s],
            None => (0..n).collect(),
        };
        for s in starts {
            if st.done || st.aborted {
                break;
            }
            if !self.usable(s) {
                continue;
            }
            st.enter(s);
            st.expand();
            st.leave();
        }
        DfsOutcome { complete: !st.aborted || st.done, best: st.best }
    }

    fn usable(&self, v: usize) -> bool {
        self.allowed.is_none_or(|a| a.contains(v))
    }
}

impl State<'_, '_> {
    fn enter(&mut self, v: usize) {
        self.path.push(v);
        self.used[v] = true;
        if self.spec.waypoints.get(self.next_waypoint) == Some(&v) {
            self.next_waypoint += 1;
        }
    }

    fn leave(&mut self) {
        if let Some(v) = self.path.pop() {
            self.used[v] = false;
            if self.next_waypoint > 0 && self.spec.waypoints[self.next_waypoint - 1] == v {
                self.next_waypoint -= 1;
            }
        }
    }

    fn finished(&self) -> bool {
        self.next_waypoint == self.spec.waypoints.len()
    }

    fn blocked(&self, v: usize) -> bool {
        // a later waypoint may not be visited out of turn
        self.used[v]
            || !self.spec.usable(v)
            || self.spec.waypoints[self.next_waypoint.min(self.spec.waypoints.len())..].iter().skip(1).any(|&w| w == v)
    }

    fn record(&mut self) {
        let len = self.path.len() - 1;
        if !self.spec.goal.accepts(len) {
            return;
        }
        match self.spec.goal {
            Goal::Longest => {
                if self.best.as_ref().is_none_or(|b| b.len() < self.path.len()) {
                    self.best = Some(self.path.clone());
                }
            }
            _ => {
                self.best = Some(self.path.clone());
                self.done = true;
            }
        }
    }

    /// One BFS from the frontier through unused vertices. Returns the number
    /// of vertices reached (excluding the frontier) and the distance to the
    /// next waypoint, if any waypoint is pending.
    fn bound(&mut self) -> (usize, Option<Option<usize>>) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|x| *x = 0);
            self.stamp = 1;
        }
        let from = *self.path.last().unwrap_or(&0);
        let target = self.spec.waypoints.get(self.next_waypoint).copied();
        let stamp = self.stamp;
        self.seen[from] = stamp;
        self.dist[from] = 0;
        self.queue.clear();
        self.queue.push_back(from);
        let mut count = 0;
        let mut target_dist = None;
        while let Some(x) = self.queue.pop_front() {
            for &y in self.spec.g.out_neighbors(x) {
                if self.seen[y] == stamp || self.used[y] || !self.spec.usable(y) {
                    continue;
                }
                self.seen[y] = stamp;
                self.dist[y] = self.dist[x] + 1;
                count += 1;
                if Some(y) == target && target_dist.is_none() {
                    target_dist = Some(self.dist[y]);
                }
                // the path cannot continue through the final waypoint
                if Some(&y) != self.spec.waypoints.last() {
                    self.queue.push_back(y);
                }
            }
        }
        (count, target.map(|_| target_dist))
    }

    fn expand(&mut self) {
        self.nodes += 1;
        if self.nodes > self.spec.node_budget {
            self.aborted = true;
            return;
        }
        let len = self.path.len() - 1;
        if self.finished() {
            self.record();
            if self.done || !self.spec.waypoints.is_empty() {
                return;
            }
        }
        let (reachable, target_dist) = self.bound();
        if let Some(d) = target_dist {
            let Some(d) = d else { return };
            if let Goal::Exact(l) = self.spec.goal {
                if len + d > l {
                    return;
                }
            }
        }
        let upper = len + reachable;
        match self.spec.goal {
            Goal::Longest => {
                if self.best.as_ref().is_some_and(|b| upper < b.len()) {
                    return;
                }
            }
            Goal::AtLeast(l) | Goal::Exact(l) => {
                if upper < l {
                    return;
                }
            }
        }
        let last = *self.path.last().unwrap_or(&0);
        let g = self.spec.g;
        for &y in g.out_neighbors(last) {
            if self.blocked(y) {
                continue;
            }
            self.enter(y);
            self.expand();
            self.leave();
            if self.done || self.aborted {
                return;
            }
        }
    }
}
