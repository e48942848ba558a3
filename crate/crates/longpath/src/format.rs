//! Plain-text graph files.
//!
//! ```text
//! c optional comments
//! p dg 3 2
//! a 1 2
//! a 2 3
//! ```
//!
//! `p dg` files hold arcs (`a u v`), `p ug` files hold edges (`e u v`).
//! Vertices are 1-indexed on disk and 0-indexed in memory.

use std::collections::HashSet;
use std::fmt::Write as _;

use longpath_core::{DirectedGraph, GraphRef, UndirectedGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing header line \"p dg N M\" or \"p ug N M\"")]
    MissingHeader,
    #[error("header declares {declared} arcs/edges, file has {found}")]
    CountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Directed(DirectedGraph),
    Undirected(UndirectedGraph),
}

impl GraphFile {
    pub fn n(&self) -> usize {
        self.as_ref().n()
    }

    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            GraphFile::Directed(g) => GraphRef::Directed(g),
            GraphFile::Undirected(g) => GraphRef::Undirected(g),
        }
    }

    pub fn to_directed(&self) -> DirectedGraph {
        self.as_ref().to_directed()
    }

    /// The undirected view; arcs of a digraph become edges.
    pub fn to_undirected(&self) -> UndirectedGraph {
        match self {
            GraphFile::Undirected(g) => g.clone(),
            GraphFile::Directed(g) => UndirectedGraph::new(g.n(), g.arcs()).expect("arcs are in range and loop-free"),
        }
    }

    pub fn parse(text: &str) -> Result<GraphFile, FormatError> {
        let mut header: Option<(bool, usize, usize)> = None;
        let mut pairs = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |msg: String| FormatError::Line { line, msg };
            let mut tok = raw.split_whitespace();
            let Some(tag) = tok.next() else { continue };
            match tag {
                "c" => continue,
                "p" => {
                    if header.is_some() {
                        return Err(err("second header line".into()));
                    }
                    let directed = match tok.next() {
                        Some("dg") => true,
                        Some("ug") => false,
                        other => return Err(err(format!("expected kind dg or ug, got {other:?}"))),
                    };
                    let n = number(tok.next(), "vertex count").map_err(err)?;
                    let m = number(tok.next(), "arc count").map_err(err)?;
                    if tok.next().is_some() {
                        return Err(err("trailing tokens after header".into()));
                    }
                    header = Some((directed, n, m));
                }
                "a" | "e" => {
                    let Some((directed, n, _)) = header else {
                        return Err(err("arc line before header".into()));
                    };
                    let want = if directed { "a" } else { "e" };
                    if tag != want {
                        return Err(err(format!("\"{tag}\" line in a {} file", if directed { "dg" } else { "ug" })));
                    }
                    let u = number(tok.next(), "endpoint").map_err(err)?;
                    let v = number(tok.next(), "endpoint").map_err(err)?;
                    if tok.next().is_some() {
                        return Err(err("trailing tokens".into()));
                    }
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(err(format!("endpoint {x} outside 1..={n}")));
                        }
                    }
                    if u == v {
                        return Err(err(format!("loop at vertex {u}")));
                    }
                    let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
                    if !seen.insert(key) {
                        return Err(err(format!("duplicate {} {u} {v}", if directed { "arc" } else { "edge" })));
                    }
                    pairs.push((u - 1, v - 1));
                }
                other => return Err(err(format!("unknown line type \"{other}\""))),
            }
        }
        let (directed, n, m) = header.ok_or(FormatError::MissingHeader)?;
        if pairs.len() != m {
            return Err(FormatError::CountMismatch { declared: m, found: pairs.len() });
        }
        let built = if directed {
            DirectedGraph::new(n, pairs).map(GraphFile::Directed)
        } else {
            UndirectedGraph::new(n, pairs).map(GraphFile::Undirected)
        };
        Ok(built.expect("endpoints were range-checked"))
    }

    /// Canonical text: header, then arcs (or edges with `u < v`) in
    /// lexicographic order.
    pub fn write(&self) -> String {
        let mut out = String::new();
        match self {
            GraphFile::Directed(g) => {
                writeln!(out, "p dg {} {}", g.n(), g.arc_count()).unwrap();
                for (u, v) in g.arcs() {
                    writeln!(out, "a {} {}", u + 1, v + 1).unwrap();
                }
            }
            GraphFile::Undirected(g) => {
                writeln!(out, "p ug {} {}", g.n(), g.edge_count()).unwrap();
                for (u, v) in g.edges() {
                    writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
                }
            }
        }
        out
    }
}

fn number(tok: Option<&str>, what: &str) -> Result<usize, String> {
    let tok = tok.ok_or_else(|| format!("missing {what}"))?;
    tok.parse().map_err(|_| format!("{what} \"{tok}\" is not a non-negative integer"))
}
