//! The ten acceptance suites. Each compares solver output against an
//! independent exact computation on seeded random or constructed inputs
//! and returns a [`SuiteReport`]; every solver decision is also recorded as
//! a [`RunRecord`] so negative answers can be audited afterwards.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use longpath_core::detour::{solve_detour_with, DetourAnswer, DetourConfig, DetourQuery, Sequential, Verdict};
use longpath_core::diameter::{build_diam_plus4_path, solve_lpad_undirected_2connected, BuilderStatus};
use longpath_core::gadgets::{
    build_g_ell, lift_ham_witness, reduce_lemma412, reduce_prop41, verify_g_ell, witness_h8_path, witness_long_path,
    InstanceGraph, G1_LONGEST_PATH,
};
use longpath_core::graph::{diameter_and_pair, distances_from, is_2_strongly_connected};
use longpath_core::oracle::{detour_oracle, longest_path_oracle, longest_st_path_oracle, OracleLimits};
use longpath_core::random::{random_2connected_graph, random_2sc_digraph, random_digraph, random_graph};
use longpath_core::subroutines::{exact_detour, has_path_at_least, long_st_path, Strategy, SubroutineConfig};
use longpath_core::{DirectedGraph, Error, GraphRef, PathWitness, Search, UndirectedGraph};

use crate::fanout::Threaded;
use crate::witness::verdict_name;

/// Suite names in criterion order.
pub const SUITES: [&str; 10] = [
    "detour-vs-oracle",
    "undirected-detour",
    "subroutines",
    "gadgets",
    "g1-oracle",
    "reduce-k1",
    "reduce-kge5",
    "lpad-undirected",
    "builder-fuzz",
    "negative-hygiene",
];

/// Failure probability used for the color-coding miss-rate experiment.
pub const MISS_RATE_DELTA: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Worker threads for the detour fan-out; 1 runs sequentially.
    pub threads: usize,
    /// JSONL run log written by the hygiene audit; a temporary file when
    /// unset.
    pub log: Option<PathBuf>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 2024, threads: 1, log: None }
    }
}

/// One solver decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunRecord {
    pub suite: String,
    pub case: String,
    /// `yes`, `no` or `inconclusive`.
    pub verdict: String,
    /// Subroutines or stages that ran out of budget during this run.
    pub inconclusive: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub criterion: usize,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub summary: String,
    /// First few failure descriptions.
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub elapsed: Duration,
    pub records: Vec<RunRecord>,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<18} {}  {} ({} cases, {:.1}s)",
            self.criterion,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.summary,
            self.cases,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite \"{0}\"; expected one of: {list}", list = SUITES.join(", "))]
    Unknown(String),
    #[error("run log {path}: {source}")]
    Log { path: PathBuf, source: std::io::Error },
}

/// Collects cases, failures and records for one suite.
struct Tally {
    suite: &'static str,
    cases: usize,
    failures: Vec<String>,
    failure_count: usize,
    records: Vec<RunRecord>,
}

const KEPT_FAILURES: usize = 10;

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally { suite, cases: 0, failures: Vec::new(), failure_count: 0, records: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    fn record(&mut self, case: String, verdict: &str, inconclusive: Vec<String>) {
        self.records.push(RunRecord { suite: self.suite.into(), case, verdict: verdict.into(), inconclusive });
    }

    fn record_detour(&mut self, case: String, a: &DetourAnswer) {
        let stages = a.inconclusive_stages.iter().map(|s| s.name().to_string()).collect();
        self.record(case, verdict_name(a.verdict), stages);
    }

    fn record_search<T>(&mut self, case: String, r: &Search<T>, subroutine: &str) {
        let (verdict, inconclusive) = match r {
            Search::Found(_) => ("yes", vec![]),
            Search::Absent(_) => ("no", vec![]),
            Search::Inconclusive => ("inconclusive", vec![subroutine.to_string()]),
        };
        self.record(case, verdict, inconclusive);
    }

    fn finish(self, criterion: usize, start: Instant, extra_ok: bool, summary: String) -> SuiteReport {
        SuiteReport {
            criterion,
            name: self.suite,
            passed: self.failure_count == 0 && extra_ok,
            cases: self.cases,
            summary,
            failures: self.failures,
            failure_count: self.failure_count,
            elapsed: start.elapsed(),
            records: self.records,
        }
    }
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs one suite by name. `negative-hygiene` first runs the other nine.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    Ok(match name {
        "detour-vs-oracle" => detour_vs_oracle(opts),
        "undirected-detour" => undirected_detour(opts),
        "subroutines" => subroutines(opts),
        "gadgets" => gadgets(),
        "g1-oracle" => g1_oracle(),
        "reduce-k1" => reduce_k1(opts),
        "reduce-kge5" => reduce_kge5(opts),
        "lpad-undirected" => lpad_undirected(opts),
        "builder-fuzz" => builder_fuzz(opts),
        "negative-hygiene" => {
            let prior = SUITES[..9].iter().map(|n| run_suite(n, opts)).collect::<Result<Vec<_>, _>>()?;
            negative_hygiene(&prior, opts)?
        }
        other => return Err(SuiteError::Unknown(other.into())),
    })
}

/// All ten suites in order; the hygiene audit covers the records of the
/// first nine.
pub fn run_all(opts: &SuiteOptions) -> Result<Vec<SuiteReport>, SuiteError> {
    let mut reports = SUITES[..9].iter().map(|n| run_suite(n, opts)).collect::<Result<Vec<_>, _>>()?;
    let hygiene = negative_hygiene(&reports, opts)?;
    reports.push(hygiene);
    Ok(reports)
}

/// Solves with the configured fan-out and cross-checks the threaded
/// result against the sequential one.
fn solve(q: &DetourQuery<'_>, cfg: &DetourConfig, threads: usize) -> longpath_core::Result<DetourAnswer> {
    if threads <= 1 {
        return solve_detour_with(q, cfg, &Sequential);
    }
    let a = solve_detour_with(q, cfg, &Threaded { threads })?;
    let b = solve_detour_with(q, cfg, &Sequential)?;
    if a != b {
        return Err(Error::InvalidPath(format!("threaded answer {a:?} differs from sequential {b:?}")));
    }
    Ok(a)
}

/// Compares one detour answer with the oracle's `k*`, re-checking the
/// witness independently.
fn check_detour(
    t: &mut Tally,
    case: String,
    q: (&DirectedGraph, usize, usize, usize),
    got: longpath_core::Result<DetourAnswer>,
    expected: Option<(usize, usize)>,
) {
    let (g, s, target, k) = q;
    t.cases += 1;
    let a = match got {
        Ok(a) => a,
        Err(e) => return t.fail(format!("{case}: solver error {e}")),
    };
    t.record_detour(case.clone(), &a);
    let want = matches!(expected, Some((dist, k_star)) if k <= k_star && dist < usize::MAX);
    match a.verdict {
        Verdict::Inconclusive => t.fail(format!("{case}: inconclusive")),
        Verdict::No => t.check(!want, || format!("{case}: solver says no, oracle k* = {expected:?}")),
        Verdict::Yes => {
            t.check(want, || format!("{case}: solver says yes, oracle k* = {expected:?}"));
            let dist = expected.map_or(0, |e| e.0);
            let ok = a
                .witness
                .as_ref()
                .is_some_and(|w| w.validate_endpoints(g, s, target).is_ok() && w.length() >= dist + k);
            t.check(ok, || format!("{case}: witness {:?} invalid", a.witness));
        }
    }
}

fn oracle_detour(g: &DirectedGraph, s: usize, t: usize) -> longpath_core::Result<Option<(usize, usize)>> {
    match detour_oracle(g, s, t, &OracleLimits::default()) {
        Ok(v) if v.longest.exact => Ok(Some((v.dist, v.k_star))),
        Ok(_) => Err(Error::Precondition("oracle did not finish".into())),
        Err(Error::Unreachable { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Picks `t` among the vertices reachable from `s` when there are any.
fn pick_target(rng: &mut impl Rng, g: &DirectedGraph, s: usize) -> usize {
    let reach: Vec<usize> =
        distances_from(g, s).iter().enumerate().filter(|&(v, d)| v != s && d.is_some()).map(|(v, _)| v).collect();
    if reach.is_empty() {
        (s + 1) % g.n()
    } else {
        reach[rng.random_range(0..reach.len())]
    }
}

const DENSITIES: [f64; 3] = [0.15, 0.3, 0.5];
const MAX_K: usize = 5;

fn detour_vs_oracle(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("detour-vs-oracle");
    let mut rng = rng(opts.seed, 1);
    let cfg = DetourConfig::default();
    let instances = 1000;
    let mut yes = 0;
    for i in 0..instances {
        let n = rng.random_range(2..=10);
        let density = DENSITIES[i % DENSITIES.len()];
        let g = random_digraph(&mut rng, n, density);
        let s = rng.random_range(0..n);
        let target = pick_target(&mut rng, &g, s);
        let expected = match oracle_detour(&g, s, target) {
            Ok(e) => e,
            Err(e) => {
                t.fail(format!("instance {i}: oracle error {e}"));
                continue;
            }
        };
        for k in 0..=MAX_K {
            let q = DetourQuery { graph: GraphRef::Directed(&g), s, t: target, k };
            let got = solve(&q, &cfg, opts.threads);
            yes += usize::from(matches!(&got, Ok(a) if a.verdict == Verdict::Yes));
            let case = format!("instance {i} n={n} p={density} k={k}");
            check_detour(&mut t, case, (&g, s, target, k), got, expected);
        }
    }
    let elapsed_ok = start.elapsed() <= Duration::from_secs(600);
    let summary = format!(
        "{instances} instances, {} disagreements, {yes} yes / {} no, agreement {:.1}%",
        t.failure_count,
        t.cases - yes,
        agreement(&t)
    );
    t.finish(1, start, elapsed_ok, summary)
}

fn agreement(t: &Tally) -> f64 {
    if t.cases == 0 {
        return 100.0;
    }
    100.0 * (t.cases - t.failure_count.min(t.cases)) as f64 / t.cases as f64
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> UndirectedGraph {
    loop {
        let g = random_graph(rng, n, density);
        if g.is_connected() {
            return g;
        }
    }
}

fn undirected_detour(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("undirected-detour");
    let mut rng = rng(opts.seed, 2);
    let cfg = DetourConfig::default();
    let instances = 500;
    for i in 0..instances {
        let n = rng.random_range(2..=12);
        let density = [0.2, 0.35, 0.5][i % 3];
        let g = random_connected_graph(&mut rng, n, density);
        let sym = g.symmetrize();
        let s = rng.random_range(0..n);
        let target = (s + rng.random_range(1..n)) % n;
        let expected = match oracle_detour(&sym, s, target) {
            Ok(e) => e,
            Err(e) => {
                t.fail(format!("instance {i}: oracle error {e}"));
                continue;
            }
        };
        for k in 0..=MAX_K {
            let q = DetourQuery { graph: GraphRef::Undirected(&g), s, t: target, k };
            let got = solve(&q, &cfg, opts.threads);
            check_detour(&mut t, format!("instance {i} n={n} k={k}"), (&sym, s, target, k), got, expected);
        }
    }
    let summary = format!("{instances} instances, {} disagreements, agreement {:.1}%", t.failure_count, agreement(&t));
    t.finish(2, start, true, summary)
}

/// `lengths[l]` is true iff some simple `(s,t)`-path has exactly `l` arcs.
/// Subset DP over paths starting at `s`, written independently of the
/// library's engines.
pub fn st_path_lengths(g: &DirectedGraph, s: usize, t: usize) -> Vec<bool> {
    let n = g.n();
    assert!(n <= 16, "brute force limited to 16 vertices");
    let mut reach = vec![0u16; 1 << n];
    reach[1 << s] = 1 << s;
    let mut lengths = vec![false; n];
    for mask in 0..(1usize << n) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for v in 0..n {
            if ends >> v & 1 == 0 {
                continue;
            }
            if v == t {
                lengths[mask.count_ones() as usize - 1] = true;
                continue;
            }
            for &w in g.out_neighbors(v) {
                if mask >> w & 1 == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    lengths
}

fn subroutines(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("subroutines");
    let mut rng = rng(opts.seed, 3);
    let exact = [Strategy::Auto, Strategy::BranchAndBound];
    let instances = 500;
    // yes-instances for the miss-rate experiment: (graph, s, t, param)
    let mut yes_k_path = Vec::new();
    let mut yes_st = Vec::new();
    let mut yes_exact = Vec::new();
    for i in 0..instances {
        let n = rng.random_range(2..=12);
        let g = random_digraph(&mut rng, n, DENSITIES[i % 3]);
        let s = rng.random_range(0..n);
        let target = pick_target(&mut rng, &g, s);
        let lengths = st_path_lengths(&g, s, target);
        let longest = longest_path_oracle(&g, &OracleLimits::default()).map(|a| a.value);
        let longest_st = longest_st_path_oracle(&g, s, target, &OracleLimits::default());
        let dist = lengths.iter().position(|&b| b);
        let k = rng.random_range(0..=6);
        let ell = rng.random_range(0..=4);
        let case = |what: &str| format!("instance {i} n={n} {what}");

        let (Ok(longest), Ok(longest_st)) = (longest, longest_st) else {
            t.fail(case("oracle error"));
            continue;
        };
        // independent cross-check of the two brute forces
        let st_max = lengths.iter().rposition(|&b| b);
        t.check(st_max == longest_st.value(), || case("subset enumeration disagrees with oracle"));

        for strategy in exact {
            let cfg = SubroutineConfig { strategy, ..Default::default() };
            t.cases += 3;
            let r = has_path_at_least(&g, k, &cfg);
            agree(&mut t, &g, r, longest >= k, None, k, case(&format!("k-path k={k} {strategy:?}")));
            let r = long_st_path(&g, s, target, k, &cfg);
            let want = longest_st.value().is_some_and(|v| v >= k);
            agree(&mut t, &g, r, want, Some((s, target)), k, case(&format!("long-st k={k} {strategy:?}")));
            let r = exact_detour(&g, s, target, ell, &cfg);
            match dist {
                None => t.check(matches!(r, Err(Error::Unreachable { .. })), || case("unreachable target accepted")),
                Some(d) => {
                    let want = lengths.get(d + ell).copied().unwrap_or(false);
                    let c = case(&format!("exact-detour l={ell} {strategy:?}"));
                    agree_exact(&mut t, &g, r, want, (s, target), d + ell, c);
                }
            }
        }

        // one color-coding run per instance: found witnesses must be real
        let cc = SubroutineConfig { strategy: Strategy::ColorCoding, seed: i as u64, ..Default::default() };
        if k <= 4 {
            t.cases += 1;
            let r = has_path_at_least(&g, k, &cc);
            let want = longest >= k;
            sound(&mut t, &g, r, want, None, k, case("color-coding k-path"));
            if want {
                yes_k_path.push((g.clone(), k));
            }
        }
        if let Some(d) = dist {
            if d + ell <= 4 {
                t.cases += 1;
                let want = lengths.get(d + ell).copied().unwrap_or(false);
                let r = exact_detour(&g, s, target, ell, &cc);
                sound(&mut t, &g, r, want, Some((s, target)), d + ell, case("color-coding exact-detour"));
                if want {
                    yes_exact.push((g.clone(), s, target, ell));
                }
            }
            let st_k = k.min(3);
            let want = longest_st.value().is_some_and(|v| v >= st_k);
            t.cases += 1;
            let r = long_st_path(&g, s, target, st_k, &cc);
            sound(&mut t, &g, r, want, Some((s, target)), st_k, case("color-coding long-st"));
            if want {
                yes_st.push((g.clone(), s, target, st_k));
            }
        }
    }

    // miss rate on yes-instances over 100 seeds
    let seeds = 100u64;
    let per_kind = 20;
    let mut runs = 0usize;
    let mut misses = 0usize;
    let mut tally_miss = |r: longpath_core::Result<Search<PathWitness>>, t: &mut Tally, case: String| {
        runs += 1;
        match r {
            Ok(Search::Found(_)) => {}
            Ok(Search::Absent(_)) => misses += 1,
            Ok(Search::Inconclusive) => t.fail(format!("{case}: inconclusive")),
            Err(e) => t.fail(format!("{case}: {e}")),
        }
    };
    for seed in 0..seeds {
        let cc = SubroutineConfig {
            strategy: Strategy::ColorCoding,
            seed: seed.wrapping_mul(7919) + 1,
            failure_probability: MISS_RATE_DELTA,
            ..Default::default()
        };
        for (g, k) in yes_k_path.iter().take(per_kind) {
            tally_miss(has_path_at_least(g, *k, &cc), &mut t, format!("miss-rate k-path seed {seed}"));
        }
        for (g, s, target, k) in yes_st.iter().take(per_kind) {
            tally_miss(long_st_path(g, *s, *target, *k, &cc), &mut t, format!("miss-rate long-st seed {seed}"));
        }
        for (g, s, target, ell) in yes_exact.iter().take(per_kind) {
            tally_miss(exact_detour(g, *s, *target, *ell, &cc), &mut t, format!("miss-rate exact seed {seed}"));
        }
    }
    let rate = misses as f64 / runs.max(1) as f64;
    let rate_ok = runs >= 3 * per_kind * seeds as usize && rate <= 3.0 * MISS_RATE_DELTA;
    let summary = format!(
        "{instances} instances, {} disagreements; color-coding miss rate {misses}/{runs} = {rate:.4} (bound {:.2})",
        t.failure_count,
        3.0 * MISS_RATE_DELTA
    );
    t.finish(3, start, rate_ok, summary)
}

/// Exact strategies must match the oracle in both directions.
fn agree(
    t: &mut Tally,
    g: &DirectedGraph,
    r: longpath_core::Result<Search<PathWitness>>,
    want: bool,
    ends: Option<(usize, usize)>,
    min_len: usize,
    case: String,
) {
    match r {
        Ok(Search::Found(w)) => {
            t.check(want, || format!("{case}: found, oracle says no"));
            check_witness(t, g, &w, ends, |l| l >= min_len, &case);
        }
        Ok(Search::Absent(_)) => t.check(!want, || format!("{case}: absent, oracle says yes")),
        Ok(Search::Inconclusive) => t.fail(format!("{case}: inconclusive")),
        Err(e) => t.fail(format!("{case}: {e}")),
    }
}

fn agree_exact(
    t: &mut Tally,
    g: &DirectedGraph,
    r: longpath_core::Result<Search<PathWitness>>,
    want: bool,
    ends: (usize, usize),
    len: usize,
    case: String,
) {
    match r {
        Ok(Search::Found(w)) => {
            t.check(want, || format!("{case}: found, oracle says no"));
            check_witness(t, g, &w, Some(ends), |l| l == len, &case);
        }
        Ok(Search::Absent(_)) => t.check(!want, || format!("{case}: absent, oracle says yes")),
        Ok(Search::Inconclusive) => t.fail(format!("{case}: inconclusive")),
        Err(e) => t.fail(format!("{case}: {e}")),
    }
}

/// Randomized strategies may miss but must never invent a path.
fn sound(
    t: &mut Tally,
    g: &DirectedGraph,
    r: longpath_core::Result<Search<PathWitness>>,
    want: bool,
    ends: Option<(usize, usize)>,
    min_len: usize,
    case: String,
) {
    match r {
        Ok(Search::Found(w)) => {
            t.check(want, || format!("{case}: found, oracle says no"));
            check_witness(t, g, &w, ends, |l| l >= min_len, &case);
        }
        Ok(Search::Absent(_)) => {}
        Ok(Search::Inconclusive) => t.fail(format!("{case}: inconclusive")),
        Err(e) => t.fail(format!("{case}: {e}")),
    }
}

fn check_witness(
    t: &mut Tally,
    g: &DirectedGraph,
    w: &PathWitness,
    ends: Option<(usize, usize)>,
    len_ok: impl Fn(usize) -> bool,
    case: &str,
) {
    let valid = match ends {
        Some((s, target)) => w.validate_endpoints(g, s, target).is_ok(),
        None => w.validate(g).is_ok(),
    };
    t.check(valid && len_ok(w.length()), || format!("{case}: bad witness {:?}", w.vertices));
}

fn gadgets() -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("gadgets");
    for ell in 1..=6 {
        t.cases += 1;
        let (g, bp) = match build_g_ell(ell) {
            Ok(x) => x,
            Err(e) => {
                t.fail(format!("ell={ell}: {e}"));
                continue;
            }
        };
        let report = verify_g_ell(&g, &bp);
        for c in report.failed() {
            t.fail(format!("ell={ell}: clause {} failed: {}", c.id, c.detail));
        }
        t.check(g.n() == 16 * ell + 20, || format!("ell={ell}: {} vertices", g.n()));
        let diam = diameter_and_pair(&g).map(|d| d.0);
        t.check(diam == Ok(8 * ell + 10), || format!("ell={ell}: diameter {diam:?}"));
        t.check(is_2_strongly_connected(&g), || format!("ell={ell}: not 2-strongly-connected"));
        let back = distances_from(&g, bp.t)[bp.s];
        t.check(back.is_some_and(|d| d <= 4 * ell + 7), || format!("ell={ell}: dist(t,s) = {back:?}"));
        let long = witness_long_path(&bp);
        t.check(long.validate(&g).is_ok() && long.length() == 8 * ell + 14, || {
            format!("ell={ell}: long witness length {}", long.length())
        });
        let h8 = witness_h8_path(&bp);
        t.check(h8.validate(&g).is_ok() && h8.length() == 4 * ell + 15, || {
            format!("ell={ell}: h8 witness length {}", h8.length())
        });
    }
    let summary = format!("ell 1..=6, {} clause failures", t.failure_count);
    t.finish(4, start, true, summary)
}

fn g1_oracle() -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("g1-oracle");
    t.cases = 1;
    let summary =
        match build_g_ell(1).and_then(|(g, _)| longest_path_oracle(&g, &OracleLimits::default()).map(|a| (g, a))) {
            Ok((g, a)) => {
                t.check(a.exact, || "oracle did not finish".into());
                t.check((22..=35).contains(&a.value), || format!("value {} outside [22, 35]", a.value));
                t.check(a.value == G1_LONGEST_PATH, || format!("value {} differs from {G1_LONGEST_PATH}", a.value));
                t.check(a.witness.validate(&g).is_ok(), || "oracle witness invalid".into());
                format!("longest path in G_1 = {} (exact: {})", a.value, a.exact)
            }
            Err(e) => {
                t.fail(format!("error: {e}"));
                String::from("oracle error")
            }
        };
    let in_time = start.elapsed() <= Duration::from_secs(300);
    t.finish(5, start, in_time, summary)
}

fn reduce_k1(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("reduce-k1");
    let mut rng = rng(opts.seed, 6);
    let limits = OracleLimits::default();
    let mut ham_count = 0;
    let instances = 50;
    for i in 0..instances {
        t.cases += 1;
        let n = rng.random_range(2..=8);
        let h = random_graph(&mut rng, n, [0.2, 0.35, 0.5, 0.7][i % 4]);
        let r = match reduce_prop41(&h) {
            Ok(r) => r,
            Err(e) => {
                t.fail(format!("instance {i}: {e}"));
                continue;
            }
        };
        let g = r.graph.as_directed();
        let ham = longest_path_oracle(&h.symmetrize(), &limits);
        let long = longest_path_oracle(&g, &limits);
        let (Ok(ham), Ok(long)) = (ham, long) else {
            t.fail(format!("instance {i}: oracle error"));
            continue;
        };
        t.check(ham.exact && long.exact, || format!("instance {i}: oracle did not finish"));
        let has_ham = ham.value == n - 1;
        ham_count += usize::from(has_ham);
        let has_long = long.value >= 2 * n - 1;
        t.check(has_ham == has_long, || {
            format!("instance {i} n={n}: hamiltonian {has_ham}, path of length 2n-1 {has_long}")
        });
        let diam = diameter_and_pair(&g).map(|d| d.0);
        t.check(diam == Ok(2 * n - 2), || format!("instance {i} n={n}: diameter {diam:?}"));
        t.record(format!("instance {i}"), if has_long { "yes" } else { "no" }, vec![]);
    }
    let summary = format!("{instances} graphs ({ham_count} with a hamiltonian path), {} violations", t.failure_count);
    t.finish(6, start, true, summary)
}

fn reduce_kge5(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("reduce-kge5");
    let mut rng = rng(opts.seed, 7);
    let (n_h, k) = (76, 5);
    let cycle = UndirectedGraph::new(n_h, (0..n_h).map(|v| (v, (v + 1) % n_h))).expect("cycle");
    let mut ws: Vec<usize> = Vec::new();
    while ws.len() < 3 {
        let w = rng.random_range(0..n_h);
        if !ws.contains(&w) {
            ws.push(w);
        }
    }
    let mut sizes = Vec::new();
    for &w in &ws {
        t.cases += 1;
        let r = match reduce_lemma412(&cycle, w, k) {
            Ok(r) => r,
            Err(e) => {
                t.fail(format!("w={w}: {e}"));
                continue;
            }
        };
        let InstanceGraph::Directed(g) = &r.graph else {
            t.fail(format!("w={w}: reduction produced an undirected graph"));
            continue;
        };
        sizes.push(g.n());
        t.check(is_2_strongly_connected(g), || format!("w={w}: not 2-strongly-connected"));
        let diam = diameter_and_pair(g).map(|d| d.0);
        t.check(diam == Ok(162), || format!("w={w}: diameter {diam:?}"));
        let ham = PathWitness::new((0..n_h).map(|i| (w + i) % n_h).collect(), "cycle");
        match lift_ham_witness(&r, &ham) {
            Ok(p) => t.check(p.validate(g).is_ok() && p.length() == 167, || {
                format!("w={w}: lifted path length {}", p.length())
            }),
            Err(e) => t.fail(format!("w={w}: lift failed: {e}")),
        }
    }
    let summary = format!("H = C76, k = 5, w in {ws:?}, |V(G)| = {sizes:?}, {} violations", t.failure_count);
    t.finish(7, start, true, summary)
}

fn lpad_undirected(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("lpad-undirected");
    let mut rng = rng(opts.seed, 8);
    let cfg = SubroutineConfig::default();
    let limits = OracleLimits::default();
    let instances = 300;
    for i in 0..instances {
        let n = rng.random_range(3..=12);
        let g = random_2connected_graph(&mut rng, n, [0.1, 0.25, 0.45][i % 3]);
        let sym = g.symmetrize();
        let (Ok((d, _, _)), Ok(longest)) = (diameter_and_pair(&sym), longest_path_oracle(&sym, &limits)) else {
            t.fail(format!("instance {i}: oracle error"));
            continue;
        };
        for k in 0..=4 {
            t.cases += 1;
            let case = format!("instance {i} n={n} d={d} k={k}");
            let want = longest.value >= d + k;
            match solve_lpad_undirected_2connected(&g, k, &cfg) {
                Ok(a) => {
                    t.record(case.clone(), verdict_name(a.verdict), inconclusive_of(a.verdict, "path-search"));
                    let yes = a.verdict == Verdict::Yes;
                    t.check(a.verdict != Verdict::Inconclusive && yes == want, || {
                        format!("{case}: {:?}, oracle longest {}", a.verdict, longest.value)
                    });
                    if let Some(w) = &a.witness {
                        t.check(w.validate(&sym).is_ok() && w.length() >= d + k, || format!("{case}: bad witness"));
                    }
                }
                Err(e) => t.fail(format!("{case}: {e}")),
            }
        }
    }
    let summary = format!("{instances} graphs, k 0..=4, {} disagreements", t.failure_count);
    t.finish(8, start, true, summary)
}

fn inconclusive_of(v: Verdict, what: &str) -> Vec<String> {
    if v == Verdict::Inconclusive {
        vec![what.into()]
    } else {
        vec![]
    }
}

fn builder_fuzz(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::new("builder-fuzz");
    let mut rng = rng(opts.seed, 9);
    let instances = 200;
    let mut built: std::collections::BTreeMap<&str, usize> = Default::default();
    let mut failed: std::collections::BTreeMap<&str, usize> = Default::default();
    for i in 0..instances {
        t.cases += 1;
        let n = 4 + i % 57;
        let extra = rng.random_range(0..=n);
        let g = random_2sc_digraph(&mut rng, n, extra);
        let case = format!("instance {i} n={n}");
        match build_diam_plus4_path(&g) {
            Ok(o) => match o.status {
                BuilderStatus::Built => {
                    *built.entry(o.step.label()).or_default() += 1;
                    let ok = o.witness.as_ref().is_some_and(|w| w.validate(&g).is_ok() && w.length() >= o.diameter + 4);
                    t.check(ok, || format!("{case}: invalid witness from {}", o.step.label()));
                    t.record(case, "yes", vec![]);
                }
                BuilderStatus::Failed => {
                    let label = o.failed_at().map(|s| s.label()).unwrap_or("");
                    t.check(!label.is_empty(), || format!("{case}: failure without a step label"));
                    *failed.entry(label).or_default() += 1;
                    t.record(case, "inconclusive", vec![format!("builder:{label}")]);
                }
            },
            Err(e) => t.fail(format!("{case}: {e}")),
        }
    }
    let summary =
        format!("{instances} digraphs n<=60; built {built:?}; failed {failed:?}; {} invalid", t.failure_count);
    t.finish(9, start, true, summary)
}

/// Budget-starved detour runs: they must come back inconclusive rather
/// than negative whenever a stage overruns.
fn starved_batch(opts: &SuiteOptions) -> Tally {
    let mut t = Tally::new("negative-hygiene");
    let mut rng = rng(opts.seed, 10);
    let mut cfg = DetourConfig::default();
    cfg.subroutines.strategy = Strategy::BranchAndBound;
    for i in 0..200 {
        let n = rng.random_range(4..=10);
        let g = random_digraph(&mut rng, n, DENSITIES[i % 3]);
        let s = rng.random_range(0..n);
        let target = pick_target(&mut rng, &g, s);
        cfg.subroutines.limits.bnb_node_budget = rng.random_range(1..=40);
        cfg.chain_node_budget = rng.random_range(1..=40);
        for k in 0..=MAX_K {
            t.cases += 1;
            let q = DetourQuery { graph: GraphRef::Directed(&g), s, t: target, k };
            match solve(&q, &cfg, opts.threads) {
                Ok(a) => t.record_detour(format!("starved {i} k={k}"), &a),
                Err(e) => t.fail(format!("starved {i} k={k}: {e}")),
            }
        }
    }
    let cc = SubroutineConfig { strategy: Strategy::BranchAndBound, ..Default::default() };
    for i in 0..100 {
        let n = rng.random_range(4..=10);
        let g = random_digraph(&mut rng, n, 0.4);
        let mut cfg = cc;
        cfg.limits.bnb_node_budget = rng.random_range(1..=30);
        let k = rng.random_range(1..n);
        t.cases += 1;
        match has_path_at_least(&g, k, &cfg) {
            Ok(r) => t.record_search(format!("starved k-path {i} k={k}"), &r, "k-path"),
            Err(e) => t.fail(format!("starved k-path {i}: {e}")),
        }
    }
    t
}

fn write_log(path: &Path, records: &[RunRecord]) -> std::io::Result<()> {
    let mut f = std::io::BufWriter::new(fs::File::create(path)?);
    for r in records {
        serde_json::to_writer(&mut f, r)?;
        f.write_all(b"\n")?;
    }
    f.flush()
}

pub fn read_log(path: &Path) -> std::io::Result<Vec<RunRecord>> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for line in f.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

/// Negative answers that coexist with an inconclusive subroutine.
pub fn audit(records: &[RunRecord]) -> Vec<&RunRecord> {
    records.iter().filter(|r| r.verdict == "no" && !r.inconclusive.is_empty()).collect()
}

fn negative_hygiene(prior: &[SuiteReport], opts: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let mut t = starved_batch(opts);
    let mut all: Vec<RunRecord> = prior.iter().flat_map(|r| r.records.iter().cloned()).collect();
    all.extend(t.records.iter().cloned());
    let path = opts.log.clone().unwrap_or_else(|| {
        std::env::temp_dir().join(format!("longpath-runlog-{}-{}.jsonl", std::process::id(), opts.seed))
    });
    let io = |source| SuiteError::Log { path: path.clone(), source };
    write_log(&path, &all).map_err(io)?;
    let logged = read_log(&path).map_err(io)?;
    if opts.log.is_none() {
        let _ = fs::remove_file(&path);
    }
    let violations = audit(&logged);
    for v in &violations {
        t.fail(format!("{} / {}: \"no\" with inconclusive {:?}", v.suite, v.case, v.inconclusive));
    }
    let count = |verdict: &str| logged.iter().filter(|r| r.verdict == verdict).count();
    let starved_inconclusive = t.records.iter().filter(|r| !r.inconclusive.is_empty()).count();
    let starved_no = t.records.iter().filter(|r| r.verdict == "no").count();
    let mut summary = String::new();
    write!(
        summary,
        "{} records audited ({} yes, {} no, {} inconclusive); starved batch: {starved_inconclusive} with overruns, \
         {starved_no} clean no; {} violations",
        logged.len(),
        count("yes"),
        count("no"),
        count("inconclusive"),
        violations.len()
    )
    .unwrap();
    // the audit is only meaningful if both kinds of record occur
    let nontrivial = starved_inconclusive > 0 && count("no") > 0 && logged.len() == all.len();
    t.cases = logged.len();
    Ok(t.finish(10, start, nontrivial, summary))
}

pub fn summary_table(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(out, "{}", r.line()).unwrap();
        for f in &r.failures {
            writeln!(out, "    {f}").unwrap();
        }
        if r.failure_count > r.failures.len() {
            writeln!(out, "    ... {} more", r.failure_count - r.failures.len()).unwrap();
        }
    }
    out
}
