//! Command-line surface. [`run`] maps every outcome to the exit-code
//! contract: 0 yes (or success), 1 no, 2 usage/parse/precondition error,
//! 3 inconclusive.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use longpath_core::detour::{explain, solve_detour_with, DetourConfig, DetourQuery, Sequential, Verdict};
use longpath_core::diameter::{solve_lpad, LpadMode, LpadQuery};
use longpath_core::gadgets::{build_g_ell, reduce_lemma412, reduce_prop41, verify_g_ell, InstanceGraph};
use longpath_core::graph::diameter_and_pair;
use longpath_core::oracle::{
    detour_oracle, longest_path_oracle, longest_st_path_oracle, OracleAnswer, OracleLimits, StPathAnswer,
};
use longpath_core::subroutines::{Strategy, SubroutineConfig};
use longpath_core::GraphRef;

use crate::documents::{BlueprintDocument, EmbeddingDocument};
use crate::fanout::Threaded;
use crate::format::GraphFile;
use crate::suites::{self, RunRecord, SuiteOptions};
use crate::witness::{verdict_name, WitnessDocument};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "longpath", version, about = "Longest detour and longest path above diameter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is there an (S,T)-path of length at least dist(S,T) + K?
    Detour(DetourArgs),
    /// Is there a path of length at least diam + K?
    Lpad(LpadArgs),
    /// Write a gadget graph or a reduction instance.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Check a gadget graph against its blueprint.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Exact exponential solvers.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Run an acceptance suite (or `all`) and print a summary table.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Keep the JSONL run log audited by the hygiene suite.
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Auto,
    ColorCoding,
    SubsetDp,
    BranchAndBound,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::ColorCoding => Strategy::ColorCoding,
            StrategyArg::SubsetDp => Strategy::SubsetDp,
            StrategyArg::BranchAndBound => Strategy::BranchAndBound,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    #[arg(long, value_enum, default_value = "auto")]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Failure probability of color coding.
    #[arg(long, default_value_t = 1e-3)]
    pub delta: f64,
    /// Largest vertex count handed to the subset DP.
    #[arg(long)]
    pub oracle_cap: Option<usize>,
    /// Node budget of each branch-and-bound search.
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Append a JSONL run record to this file.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

impl SolverArgs {
    fn config(&self) -> SubroutineConfig {
        let mut cfg = SubroutineConfig {
            strategy: self.strategy.into(),
            seed: self.seed,
            failure_probability: self.delta,
            ..Default::default()
        };
        if let Some(cap) = self.oracle_cap {
            cfg.limits.dp_vertex_cap = cap;
        }
        if let Some(b) = self.node_budget {
            cfg.limits.bnb_node_budget = b;
        }
        cfg
    }
}

#[derive(Debug, Args)]
pub struct DetourArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// 1-indexed source.
    #[arg(long)]
    pub source: usize,
    /// 1-indexed target.
    #[arg(long)]
    pub target: usize,
    #[arg(long)]
    pub k: usize,
    /// Read a `dg` file's arcs as undirected edges.
    #[arg(long)]
    pub undirected: bool,
    /// Backend for the three-disjoint-paths queries.
    #[arg(long, default_value = "exhaustive")]
    pub backend: String,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Print a human-readable trace to stderr.
    #[arg(long)]
    pub explain: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    #[value(name = "undirected2c")]
    Undirected2c,
    #[value(name = "directed2sc")]
    Directed2sc,
    Oracle,
}

#[derive(Debug, Args)]
pub struct LpadArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// The gadget graph G_l.
    Gl {
        #[arg(long)]
        ell: usize,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        blueprint: Option<PathBuf>,
    },
    /// Hamiltonian path to undirected LPAD with K = 1.
    ReduceK1 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        blueprint: Option<PathBuf>,
    },
    /// Hamiltonian path from W to 2-strongly-connected LPAD with K >= 5.
    ReduceKge5 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// 1-indexed start vertex of the Hamiltonian path.
        #[arg(long)]
        w: usize,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        blueprint: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    Gl {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        blueprint: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OracleGraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub oracle_cap: Option<usize>,
    #[arg(long)]
    pub node_budget: Option<u64>,
}

impl OracleGraphArgs {
    fn limits(&self) -> OracleLimits {
        let mut l = OracleLimits::default();
        if let Some(cap) = self.oracle_cap {
            l.dp_vertex_cap = cap;
        }
        if let Some(b) = self.node_budget {
            l.bnb_node_budget = b;
        }
        l
    }
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    LongestPath(OracleGraphArgs),
    LongestStPath {
        #[command(flatten)]
        g: OracleGraphArgs,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
    },
    Detour {
        #[command(flatten)]
        g: OracleGraphArgs,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
    },
    Diameter(OracleGraphArgs),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: crate::format::FormatError },
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Blueprint(#[from] crate::documents::DocumentError),
    #[error(transparent)]
    Core(#[from] longpath_core::Error),
    #[error(transparent)]
    Suite(#[from] suites::SuiteError),
    #[error("{0}")]
    Usage(String),
}

/// Runs a parsed command, writing results to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Detour(a) => detour(a, out, err),
        Command::Lpad(a) => lpad(a, out),
        Command::Gen { what } => generate(what, out),
        Command::Verify { what: VerifyCommand::Gl { graph, blueprint } } => verify(&graph, &blueprint, out),
        Command::Oracle { what } => oracle(what, out),
        Command::Bench { suite, seed, threads, log } => bench(&suite, SuiteOptions { seed, threads, log }, out),
    }
}

fn read_graph(path: &Path) -> Result<GraphFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    GraphFile::parse(&text).map_err(|source| CliError::Format { path: path.into(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn vertex(v: usize, n: usize, what: &str) -> Result<usize, CliError> {
    if v == 0 || v > n {
        return Err(CliError::Usage(format!("{what} {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn print_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("documents serialize");
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn append_log(path: &Path, record: &RunRecord) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.into(), source };
    let mut f = fs::OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
    let line = serde_json::to_string(record).expect("records serialize");
    writeln!(f, "{line}").map_err(io)
}

fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Yes => EXIT_YES,
        Verdict::No => EXIT_NO,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn detour(a: DetourArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let file = read_graph(&a.graph)?;
    let n = file.n();
    let s = vertex(a.source, n, "source")?;
    let t = vertex(a.target, n, "target")?;
    let undirected_view;
    let graph = match (&file, a.undirected) {
        (GraphFile::Directed(_), true) => {
            undirected_view = file.to_undirected();
            GraphRef::Undirected(&undirected_view)
        }
        _ => file.as_ref(),
    };
    let mut cfg =
        DetourConfig { subroutines: a.solver.config(), chain_backend: a.backend.clone(), ..Default::default() };
    if let Some(b) = a.solver.node_budget {
        cfg.chain_node_budget = b;
    }
    let q = DetourQuery { graph, s, t, k: a.k };
    let answer = if a.threads > 1 {
        solve_detour_with(&q, &cfg, &Threaded { threads: a.threads })?
    } else {
        solve_detour_with(&q, &cfg, &Sequential)?
    };
    let doc = WitnessDocument::from_detour(&answer);
    doc.revalidate(&graph.to_directed())?;
    if a.explain {
        let _ = write!(err, "{}", explain(&answer));
    }
    if let Some(log) = &a.solver.log {
        let stages = answer.inconclusive_stages.iter().map(|s| s.name().to_string()).collect();
        let case = format!("{} s={} t={} k={}", a.graph.display(), a.source, a.target, a.k);
        let rec = RunRecord {
            suite: "cli-detour".into(),
            case,
            verdict: verdict_name(answer.verdict).into(),
            inconclusive: stages,
        };
        append_log(log, &rec)?;
    }
    print_json(out, &doc)?;
    Ok(exit_code(answer.verdict))
}

fn lpad(a: LpadArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = read_graph(&a.graph)?;
    let mode = match a.mode {
        ModeArg::Undirected2c => LpadMode::Undirected2Connected,
        ModeArg::Directed2sc => LpadMode::Directed2Sc,
        ModeArg::Oracle => LpadMode::OracleOnly,
    };
    let answer = solve_lpad(&LpadQuery { graph: file.as_ref(), k: a.k, mode }, &a.solver.config())?;
    let doc = WitnessDocument::from_lpad(&answer);
    doc.revalidate(&file.to_directed())?;
    if let Some(log) = &a.solver.log {
        let inconclusive =
            if answer.verdict == Verdict::Inconclusive { vec!["path-search".to_string()] } else { vec![] };
        let case = format!("{} k={} mode={}", a.graph.display(), a.k, mode.name());
        let rec =
            RunRecord { suite: "cli-lpad".into(), case, verdict: verdict_name(answer.verdict).into(), inconclusive };
        append_log(log, &rec)?;
    }
    print_json(out, &doc)?;
    Ok(exit_code(answer.verdict))
}

fn generate(what: GenCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    let (file, side, path, side_path) = match what {
        GenCommand::Gl { ell, out, blueprint } => {
            let (g, bp) = build_g_ell(ell)?;
            let doc = serde_json::to_string_pretty(&BlueprintDocument::from_blueprint(&bp)).expect("serializes");
            (GraphFile::Directed(g), doc, out, blueprint)
        }
        GenCommand::ReduceK1 { graph, out, blueprint } => {
            let h = match read_graph(&graph)? {
                GraphFile::Undirected(h) => h,
                GraphFile::Directed(_) => {
                    return Err(CliError::Usage("reduce-k1 needs an undirected (ug) graph".into()))
                }
            };
            let r = reduce_prop41(&h)?;
            let doc = serde_json::to_string_pretty(&EmbeddingDocument::from_instance(&r)).expect("serializes");
            (instance_file(r.graph), doc, out, blueprint)
        }
        GenCommand::ReduceKge5 { graph, k, w, out, blueprint } => {
            let h = match read_graph(&graph)? {
                GraphFile::Undirected(h) => h,
                GraphFile::Directed(_) => {
                    return Err(CliError::Usage("reduce-kge5 needs an undirected (ug) graph".into()))
                }
            };
            let w = vertex(w, h.n(), "w")?;
            let r = reduce_lemma412(&h, w, k)?;
            let doc = serde_json::to_string_pretty(&EmbeddingDocument::from_instance(&r)).expect("serializes");
            (instance_file(r.graph), doc, out, blueprint)
        }
    };
    let text = file.write();
    write_file(&path, &text)?;
    if let Some(p) = side_path {
        write_file(&p, &format!("{side}\n"))?;
    }
    let header = text.lines().next().unwrap_or_default();
    let _ = writeln!(out, "wrote {} ({header})", path.display());
    Ok(EXIT_YES)
}

fn instance_file(g: InstanceGraph) -> GraphFile {
    match g {
        InstanceGraph::Undirected(g) => GraphFile::Undirected(g),
        InstanceGraph::Directed(g) => GraphFile::Directed(g),
    }
}

fn verify(graph: &Path, blueprint: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(graph)?.to_directed();
    let text = fs::read_to_string(blueprint).map_err(|source| CliError::Io { path: blueprint.into(), source })?;
    let doc: BlueprintDocument =
        serde_json::from_str(&text).map_err(|source| CliError::Document { path: blueprint.into(), source })?;
    let report = verify_g_ell(&g, &doc.to_blueprint()?);
    let _ = write!(out, "{report}");
    Ok(if report.all_passed() { EXIT_YES } else { EXIT_NO })
}

fn answer_json(a: &OracleAnswer) -> serde_json::Value {
    json!({
        "value": a.value,
        "exact": a.exact,
        "path": a.witness.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
    })
}

fn exactness(exact: bool) -> i32 {
    if exact {
        EXIT_YES
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn oracle(what: OracleCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match what {
        OracleCommand::LongestPath(a) => {
            let g = read_graph(&a.graph)?.to_directed();
            let ans = longest_path_oracle(&g, &a.limits())?;
            print_json(out, &answer_json(&ans))?;
            Ok(exactness(ans.exact))
        }
        OracleCommand::LongestStPath { g: a, source, target } => {
            let g = read_graph(&a.graph)?.to_directed();
            let (s, t) = (vertex(source, g.n(), "source")?, vertex(target, g.n(), "target")?);
            match longest_st_path_oracle(&g, s, t, &a.limits())? {
                StPathAnswer::Path(ans) => {
                    print_json(out, &answer_json(&ans))?;
                    Ok(exactness(ans.exact))
                }
                StPathAnswer::NoPath => {
                    print_json(out, &json!({ "value": null, "exact": true, "path": [] }))?;
                    Ok(EXIT_NO)
                }
            }
        }
        OracleCommand::Detour { g: a, source, target } => {
            let g = read_graph(&a.graph)?.to_directed();
            let (s, t) = (vertex(source, g.n(), "source")?, vertex(target, g.n(), "target")?);
            let v = detour_oracle(&g, s, t, &a.limits())?;
            let mut doc = answer_json(&v.longest);
            doc["dist"] = json!(v.dist);
            doc["kStar"] = json!(v.k_star);
            print_json(out, &doc)?;
            Ok(exactness(v.longest.exact))
        }
        OracleCommand::Diameter(a) => {
            let g = read_graph(&a.graph)?.to_directed();
            let (d, s, t) = diameter_and_pair(&g)?;
            print_json(out, &json!({ "diameter": d, "source": s + 1, "target": t + 1 }))?;
            Ok(EXIT_YES)
        }
    }
}

fn bench(suite: &str, opts: SuiteOptions, out: &mut dyn Write) -> Result<i32, CliError> {
    let reports = if suite == "all" { suites::run_all(&opts)? } else { vec![suites::run_suite(suite, &opts)?] };
    let _ = write!(out, "{}", suites::summary_table(&reports));
    Ok(if reports.iter().all(|r| r.passed) { EXIT_YES } else { EXIT_NO })
}
