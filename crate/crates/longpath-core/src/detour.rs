//! Longest detour: is there an `(s,t)`-path of length at least
//! `dist(s,t) + k`?
//!
//! The pipeline runs these stages in order and stops at the first witness:
//!
//! 1. `k = 0` is answered by a shortest path, an unreachable `t` by "no".
//!    Everything else works on the subgraph reachable from `s`.
//! 2. Exact probe: a path of length exactly `dist + l` for some
//!    `k <= l <= 2k - 1`. If none exists, every solution has length at least
//!    `dist + 2k`, and a shortest solution `P = P1 P2 P3` (split at the first
//!    two vertices `u`, `v` on the lowest BFS level `p` hit twice) has
//!    `|P2| >= k`.
//! 3. Pair enumeration: for every ordered pair `(w, v)` route `s -> w -> v
//!    -> t` disjointly and keep it when long enough. This catches every
//!    solution whose `P2` climbs at least `k - 1` levels above `p` (or
//!    `ceil(k/2)` on undirected graphs).
//! 4. For every `u` on level `p`, with `r = dist(s,t)` and a threshold level
//!    `h` (`p + k - 2` directed, `p + ceil(k/2)` undirected):
//!    * Case 1, `r <= h`: a `(u,t)`-path of length `>= r - p + k` inside
//!      levels `>= p`, after a shortest `(s,u)`-path.
//!    * Case 2, `r > h`: `X` is the set of vertices reaching `t` inside levels
//!      `> h`. For `y` on level `h` with an arc into `X`, a long `(u,y)`-path
//!      avoiding `X` inside levels `>= p` closes the solution through `X`.
//!
//! Any subroutine that runs out of budget turns a would-be "no" into
//! "inconclusive".

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::chain::{backend_by_name, solve_chain3, ChainBackend, ChainQuery};
use crate::graph::{
    bfs_layering, induced_subgraph, reach_within, reachable_set, shortest_path, BfsLayering, DirectedGraph, GraphRef,
    UndirectedGraph, VertexSet,
};
use crate::path::{concat, Baseline, PathWitness};
use crate::subroutines::{exact_detour, long_st_path_within, Strategy, SubroutineConfig};
use crate::{Certainty, Error, Result, Search};

/// One step of a fan-out: a witness, a proven miss, or a budget overrun.
#[derive(Debug, Clone, PartialEq)]
pub enum Probe<T> {
    Hit(T),
    Miss(Certainty),
    Inconclusive,
}

/// Outcome of probing indices `0..count`.
#[derive(Debug, Clone, PartialEq)]
pub struct FanoutResult<T> {
    /// The hit with the lowest index, if any.
    pub hit: Option<(usize, T)>,
    /// Some probe below the reported hit (or anywhere, without a hit) was
    /// inconclusive.
    pub inconclusive: bool,
    /// Combined certainty of the misses.
    pub certainty: Certainty,
}

/// Strategy for evaluating independent probes. Implementations must
/// report the lowest-index hit so results do not depend on scheduling.
pub trait Fanout: Sync {
    fn first_hit<T, F>(&self, count: usize, probe: F) -> Result<FanoutResult<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<Probe<T>> + Sync;
}

/// Probes in index order on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Fanout for Sequential {
    fn first_hit<T, F>(&self, count: usize, probe: F) -> Result<FanoutResult<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<Probe<T>> + Sync,
    {
        let mut out = FanoutResult { hit: None, inconclusive: false, certainty: Certainty::Exact };
        for i in 0..count {
            match probe(i)? {
                Probe::Hit(t) => {
                    out.hit = Some((i, t));
                    return Ok(out);
                }
                Probe::Miss(c) => out.certainty = out.certainty.and(c),
                Probe::Inconclusive => out.inconclusive = true,
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetourQuery<'a> {
    pub graph: GraphRef<'a>,
    pub s: usize,
    pub t: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetourConfig {
    pub subroutines: SubroutineConfig,
    /// Name from [`crate::chain::BACKEND_NAMES`].
    pub chain_backend: String,
    pub chain_node_budget: u64,
}

impl Default for DetourConfig {
    fn default() -> Self {
        DetourConfig {
            subroutines: SubroutineConfig::default(),
            chain_backend: "exhaustive".into(),
            chain_node_budget: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    TrivialK0,
    Unreachable,
    ExactProbe,
    PairEnumeration,
    Case1,
    Case2,
    Exhausted,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::TrivialK0 => "trivial-k0",
            Stage::Unreachable => "unreachable",
            Stage::ExactProbe => "exact-probe",
            Stage::PairEnumeration => "pair-enumeration",
            Stage::Case1 => "case1",
            Stage::Case2 => "case2",
            Stage::Exhausted => "exhausted",
        }
    }
}

/// The symbols behind a stage's answer. Only the fields that apply to the
/// producing stage are set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DetourTrace {
    pub ell: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub u: Option<usize>,
    pub v: Option<usize>,
    pub w: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    /// `X`: vertices that reach `t` above the threshold level.
    pub x_set: Option<VertexSet>,
    /// Vertex set of the region `H` above the threshold level.
    pub region_h: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetourAnswer {
    pub verdict: Verdict,
    pub witness: Option<PathWitness>,
    pub stage: Stage,
    pub trace: Option<DetourTrace>,
    /// Stages in which some subroutine ran out of budget.
    pub inconclusive_stages: Vec<Stage>,
    /// Stages that ran to completion.
    pub stages_completed: Vec<Stage>,
    /// Trust in a "no": randomized when color coding reported a miss.
    pub certainty: Certainty,
    pub dist: Option<usize>,
}

impl DetourAnswer {
    fn terminal(verdict: Verdict, stage: Stage, witness: Option<PathWitness>, dist: Option<usize>) -> Self {
        DetourAnswer {
            verdict,
            witness,
            stage,
            trace: None,
            inconclusive_stages: Vec::new(),
            stages_completed: Vec::new(),
            certainty: Certainty::Exact,
            dist,
        }
    }
}

pub fn solve_directed_detour(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    k: usize,
    cfg: &DetourConfig,
) -> Result<DetourAnswer> {
    solve_detour_with(&DetourQuery { graph: GraphRef::Directed(g), s, t, k }, cfg, &Sequential)
}

pub fn solve_undirected_detour(
    g: &UndirectedGraph,
    s: usize,
    t: usize,
    k: usize,
    cfg: &DetourConfig,
) -> Result<DetourAnswer> {
    solve_detour_with(&DetourQuery { graph: GraphRef::Undirected(g), s, t, k }, cfg, &Sequential)
}

pub fn solve_detour(q: &DetourQuery<'_>, cfg: &DetourConfig) -> Result<DetourAnswer> {
    solve_detour_with(q, cfg, &Sequential)
}

/// Pipeline knobs used by tests to exercise individual stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct Variant {
    /// Only enumerate pairs whose level gap alone forces a long enough
    /// chain, leaving the remaining solutions to the two cases.
    pub forced_pairs_only: bool,
}

pub fn solve_detour_with<F: Fanout>(q: &DetourQuery<'_>, cfg: &DetourConfig, fanout: &F) -> Result<DetourAnswer> {
    run_pipeline(q, cfg, fanout, Variant::default())
}

pub(crate) fn run_pipeline<F: Fanout>(
    q: &DetourQuery<'_>,
    cfg: &DetourConfig,
    fanout: &F,
    variant: Variant,
) -> Result<DetourAnswer> {
    cfg.subroutines.validate()?;
    let backend = backend_by_name(&cfg.chain_backend, cfg.chain_node_budget)
        .ok_or_else(|| Error::Config(format!("unknown chain backend '{}'", cfg.chain_backend)))?;
    let full = q.graph.to_directed();
    let undirected = matches!(q.graph, GraphRef::Undirected(_));
    let (s, t, k) = (q.s, q.t, q.k);
    full.check_vertex(s)?;
    full.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let Some(shortest) = shortest_path(&full, s, t, None) else {
        let mut a = DetourAnswer::terminal(Verdict::No, Stage::Unreachable, None, None);
        a.stages_completed.push(Stage::Unreachable);
        return Ok(a);
    };
    let dist = shortest.len() - 1;
    if k == 0 {
        let w = PathWitness::checked(&full, shortest, Stage::TrivialK0.name())?.with_baseline(Baseline::Dist(dist));
        let mut a = DetourAnswer::terminal(Verdict::Yes, Stage::TrivialK0, Some(w), Some(dist));
        a.stages_completed.push(Stage::TrivialK0);
        return Ok(a);
    }

    let keep = reachable_set(&full, s);
    let (g, map) = induced_subgraph(&full, &keep);
    let (ls, lt) = (map.sub(s).unwrap_or(0), map.sub(t).unwrap_or(0));
    let run = Run { g: &g, s: ls, t: lt, k, dist, undirected, variant, cfg, backend: backend.as_ref(), fanout };
    let mut answer = run.stages()?;
    if let Some(w) = answer.witness.take() {
        let lifted = PathWitness::checked(&full, map.lift(&w.vertices), w.stage)?.with_baseline(Baseline::Dist(dist));
        lifted.validate_endpoints(&full, s, t)?;
        if lifted.length() < dist + k {
            return Err(Error::InvalidPath(format!(
                "{} produced length {} below dist + k = {}",
                answer.stage.name(),
                lifted.length(),
                dist + k
            )));
        }
        answer.witness = Some(lifted);
    }
    if let Some(tr) = answer.trace.as_mut() {
        for slot in [&mut tr.u, &mut tr.v, &mut tr.w, &mut tr.x, &mut tr.y] {
            *slot = slot.map(|x| map.orig(x));
        }
        for set in [&mut tr.x_set, &mut tr.region_h] {
            *set = set.as_ref().map(|x| VertexSet::from_vertices(full.n(), x.iter().map(|v| map.orig(v))));
        }
    }
    Ok(answer)
}

struct Run<'a, F> {
    g: &'a DirectedGraph,
    s: usize,
    t: usize,
    k: usize,
    dist: usize,
    undirected: bool,
    variant: Variant,
    cfg: &'a DetourConfig,
    backend: &'a dyn ChainBackend,
    fanout: &'a F,
}

type Found = (Vec<usize>, DetourTrace);

impl<F: Fanout> Run<'_, F> {
    fn stages(&self) -> Result<DetourAnswer> {
        let mut answer = DetourAnswer::terminal(Verdict::No, Stage::Exhausted, None, Some(self.dist));
        let layering = bfs_layering(self.g, self.s);
        for stage in [Stage::ExactProbe, Stage::PairEnumeration, Stage::Case1, Stage::Case2] {
            let out = match stage {
                Stage::ExactProbe => self.exact_probe()?,
                Stage::PairEnumeration => self.pairs(&layering)?,
                Stage::Case1 => self.cases(&layering, false)?,
                _ => self.cases(&layering, true)?,
            };
            answer.certainty = answer.certainty.and(out.certainty);
            if out.inconclusive {
                answer.inconclusive_stages.push(stage);
            } else if out.hit.is_none() {
                answer.stages_completed.push(stage);
            }
            if let Some((_, (path, trace))) = out.hit {
                answer.verdict = Verdict::Yes;
                answer.stage = stage;
                answer.witness = Some(PathWitness::checked(self.g, path, stage.name())?);
                answer.trace = Some(trace);
                answer.certainty = Certainty::Exact;
                return Ok(answer);
            }
        }
        if !answer.inconclusive_stages.is_empty() {
            answer.verdict = Verdict::Inconclusive;
            answer.stage = answer.inconclusive_stages[0];
        }
        Ok(answer)
    }

    fn exact_probe(&self) -> Result<FanoutResult<Found>> {
        let ells: Vec<usize> = (self.k..2 * self.k).collect();
        self.fanout.first_hit(ells.len(), |i| {
            let ell = ells[i];
            let out = exact_detour(self.g, self.s, self.t, ell, &self.cfg.subroutines)?;
            Ok(match out {
                Search::Found(p) => Probe::Hit((p.vertices, DetourTrace { ell: Some(ell), ..Default::default() })),
                Search::Absent(c) => Probe::Miss(c),
                Search::Inconclusive => Probe::Inconclusive,
            })
        })
    }

    /// Ordered pairs `(w, v)` with `w` outside `{s, t}` and `v` outside
    /// `{s, w}`; `v = t` gives a chain with an empty last leg.
    fn pairs(&self, layering: &BfsLayering) -> Result<FanoutResult<Found>> {
        let n = self.g.n();
        let pairs: Vec<(usize, usize)> = (0..n)
            .filter(|&w| w != self.s && w != self.t)
            .flat_map(|w| (0..n).filter(move |&v| v != w).map(move |v| (w, v)))
            .filter(|&(_, v)| v != self.s)
            .filter(|&(w, v)| !self.variant.forced_pairs_only || self.forced(layering, w, v))
            .collect();
        self.fanout.first_hit(pairs.len(), |i| {
            let (w, v) = pairs[i];
            let q = ChainQuery::new(self.g, self.s, w, v, self.t)?;
            Ok(match solve_chain3(&q, self.backend)? {
                Search::Found(sol) if sol.total_length >= self.dist + self.k => {
                    let trace = DetourTrace {
                        p: layering.level[v],
                        q: layering.level[w],
                        v: Some(v),
                        w: Some(w),
                        ..Default::default()
                    };
                    Probe::Hit((sol.concatenate(), trace))
                }
                Search::Found(_) => Probe::Miss(Certainty::Exact),
                Search::Absent(c) => Probe::Miss(c),
                Search::Inconclusive => Probe::Inconclusive,
            })
        })
    }

    fn forced(&self, layering: &BfsLayering, w: usize, v: usize) -> bool {
        let (Some(q), Some(p)) = (layering.level[w], layering.level[v]) else {
            return false;
        };
        let gap = if self.undirected { self.k.div_ceil(2) } else { self.k.saturating_sub(1) };
        q >= p + gap
    }

    /// Level `h` separating the cases for a start vertex on level `p`, and
    /// the minimum length of the `(u,y)`-path in Case 2.
    fn threshold(&self, p: usize) -> (isize, usize) {
        let k = self.k;
        if self.undirected {
            (p as isize + k.div_ceil(2) as isize, k + k.div_ceil(2))
        } else {
            (p as isize + k as isize - 2, (2 * k).saturating_sub(2))
        }
    }

    fn in_case2(&self, p: usize) -> bool {
        let (h, _) = self.threshold(p);
        let r = self.dist as isize;
        r > h
    }

    fn cases(&self, layering: &BfsLayering, case2: bool) -> Result<FanoutResult<Found>> {
        let us: Vec<usize> = (0..self.g.n())
            .filter(|&u| u != self.s && u != self.t)
            .filter(|&u| layering.level[u].is_some_and(|p| self.in_case2(p) == case2))
            .collect();
        self.fanout.first_hit(us.len(), |i| {
            let u = us[i];
            let p = layering.level[u].unwrap_or(0);
            if case2 {
                self.case2(layering, u, p)
            } else {
                self.case1(layering, u, p)
            }
        })
    }

    fn case1(&self, layering: &BfsLayering, u: usize, p: usize) -> Result<Probe<Found>> {
        let region = layering.at_or_above(p);
        let need = (self.dist + self.k).saturating_sub(p);
        let found = long_st_path_within(self.g, Some(&region), u, self.t, need, &self.exact_config())?;
        Ok(match found {
            Search::Found(tail) => {
                let head = self.shortest_to(u)?;
                let trace = DetourTrace { p: Some(p), u: Some(u), ..Default::default() };
                Probe::Hit((concat(&[&head, &tail.vertices]), trace))
            }
            Search::Absent(c) => Probe::Miss(c),
            Search::Inconclusive => Probe::Inconclusive,
        })
    }

    fn case2(&self, layering: &BfsLayering, u: usize, p: usize) -> Result<Probe<Found>> {
        let (h, need) = self.threshold(p);
        if h < 0 {
            return Ok(Probe::Miss(Certainty::Exact));
        }
        let h = h as usize;
        let region_h = layering.at_or_above(h + 1);
        if !region_h.contains(self.t) {
            return Ok(Probe::Miss(Certainty::Exact));
        }
        let x_set = reach_within(self.g, self.t, Some(&region_h), true);
        let allowed = layering.at_or_above(p).difference(&x_set);
        let mut certainty = Certainty::Exact;
        let mut inconclusive = false;
        for &y in layering.layer(h) {
            let Some(&x) = self.g.out_neighbors(y).iter().find(|&&x| x_set.contains(x)) else {
                continue;
            };
            if !allowed.contains(u) || !allowed.contains(y) {
                continue;
            }
            let s_path = if y == u {
                if need > 0 {
                    continue;
                }
                Search::Found(PathWitness::new(alloc::vec![u], "case2"))
            } else {
                long_st_path_within(self.g, Some(&allowed), u, y, need, &self.exact_config())?
            };
            match s_path {
                Search::Found(sp) => {
                    let head = self.shortest_to(u)?;
                    let tail = shortest_path(self.g, x, self.t, Some(&x_set))
                        .ok_or_else(|| Error::InvalidPath(format!("{x} does not reach t inside X")))?;
                    for part in [&head[..head.len() - 1], &sp.vertices[..]] {
                        if part.iter().any(|v| x_set.contains(*v)) {
                            return Err(Error::InvalidPath("case 2 prefix meets X".into()));
                        }
                    }
                    let path = concat(&[&head, &sp.vertices, &[y, x], &tail]);
                    let trace = DetourTrace {
                        p: Some(p),
                        u: Some(u),
                        x: Some(x),
                        y: Some(y),
                        x_set: Some(x_set.clone()),
                        region_h: Some(region_h.clone()),
                        ..Default::default()
                    };
                    return Ok(Probe::Hit((path, trace)));
                }
                Search::Absent(c) => certainty = certainty.and(c),
                Search::Inconclusive => inconclusive = true,
            }
        }
        Ok(if inconclusive { Probe::Inconclusive } else { Probe::Miss(certainty) })
    }

    fn shortest_to(&self, u: usize) -> Result<Vec<usize>> {
        shortest_path(self.g, self.s, u, None).ok_or(Error::Unreachable { s: self.s, t: u })
    }

    /// Long-path searches always use an exact engine: color coding only
    /// covers a bounded length window there.
    fn exact_config(&self) -> SubroutineConfig {
        let mut c = self.cfg.subroutines;
        if c.strategy == Strategy::ColorCoding {
            c.strategy = Strategy::Auto;
        }
        c
    }
}

/// Human-readable account of an answer.
pub fn explain(a: &DetourAnswer) -> String {
    let mut out = String::new();
    let verdict = match a.verdict {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(out, "verdict: {verdict} (stage {})", a.stage.name());
    if let Some(d) = a.dist {
        let _ = writeln!(out, "dist(s,t) = {d}");
    }
    if let Some(tr) = &a.trace {
        let mut fields = Vec::new();
        for (name, val) in
            [("l", tr.ell), ("p", tr.p), ("q", tr.q), ("u", tr.u), ("v", tr.v), ("w", tr.w), ("x", tr.x), ("y", tr.y)]
        {
            if let Some(v) = val {
                fields.push(format!("{name}={v}"));
            }
        }
        if let Some(x) = &tr.x_set {
            fields.push(format!("|X|={}", x.len()));
        }
        if let Some(h) = &tr.region_h {
            fields.push(format!("|H|={}", h.len()));
        }
        let _ = writeln!(out, "trace: {}", fields.join(" "));
    }
    if let Some(w) = &a.witness {
        let _ = writeln!(out, "witness: length {} via {:?}", w.length(), w.vertices);
    }
    match a.verdict {
        Verdict::No => {
            let names: Vec<&str> = a.stages_completed.iter().map(|s| s.name()).collect();
            let _ = writeln!(out, "stages completed: {}", names.join(", "));
            if let Certainty::Randomized { delta } = a.certainty {
                let _ = writeln!(out, "randomized: miss probability at most {delta}");
            }
        }
        Verdict::Inconclusive => {
            let names: Vec<&str> = a.inconclusive_stages.iter().map(|s| s.name()).collect();
            let _ = writeln!(out, "budget exhausted in: {}", names.join(", "));
        }
        Verdict::Yes => {}
    }
    out
}
