//! The `G_l` gadget family, its verifier and explicit witness paths, and
//! the two hardness reductions built on top of it.
//!
//! `G_l` chains a source gadget, `2l - 1` hat gadgets and a sink gadget.
//! The sink is the transpose of the source under `s_i -> t_i`, `s -> t`.
//! Consecutive hats share two vertices (`h3` of hat `j` is `h4` of hat
//! `j+1`, `h10` of hat `j` is `h1` of hat `j+1`), and so do the gadget
//! boundaries (`s8 = h1`, `s14 = h4` of the first hat; `h3 = t8`,
//! `h10 = t14` of the last). These identifications make hats alternate
//! between the two rows: odd hats carry `h1` on `P1`, even hats on `P2`.
//!
//! Vertex ids: `s = 0`, `s_i = i`, then the fresh vertices of each hat in
//! role order, then `t` and the sink vertices not shared with the last
//! hat.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{
    distances_from, induced_subgraph, is_2_connected_undirected, is_2_strongly_connected, DirectedGraph,
    UndirectedGraph, VertexSet,
};
use crate::path::{concat, validate_path, PathWitness};
use crate::{Error, Result};

/// Arcs of the source gadget in `(from, to)` form over role indices
/// (`0` is `s`, `i` is `s_i`).
/// Length of a longest path in `G_1`, from exhaustive search.
pub const G1_LONGEST_PATH: usize = 29;

const SOURCE_ARCS: [(usize, usize); 30] = [
    (0, 1),
    (0, 9),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (9, 10),
    (10, 11),
    (11, 12),
    (12, 13),
    (13, 14),
    (9, 2),
    (1, 10),
    (4, 13),
    (14, 7),
    (2, 0),
    (10, 0),
    (2, 9),
    (10, 1),
    (3, 10),
    (11, 2),
    (6, 3),
    (5, 4),
    (7, 5),
    (8, 6),
    (12, 11),
    (13, 12),
];

/// Arcs of one hat over role indices `1..=10`.
const HAT_ARCS: [(usize, usize); 16] = [
    (1, 2),
    (2, 3),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 10),
    (5, 1),
    (3, 9),
    (10, 4),
    (9, 5),
    (2, 8),
    (8, 7),
    (7, 6),
    (6, 2),
];

/// Role map of a constructed `G_l`. Indices in accessors are 1-based to
/// match role names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetBlueprint {
    pub ell: usize,
    pub s: usize,
    pub t: usize,
    /// `source[i - 1]` is `s_i`.
    pub source: [usize; 14],
    /// `sink[i - 1]` is `t_i`.
    pub sink: [usize; 14],
    /// `hats[j - 1][i - 1]` is `h_i` of hat `j`.
    pub hats: Vec<[usize; 10]>,
    /// The two internally disjoint `(s,t)`-paths covering every vertex.
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
}

impl GadgetBlueprint {
    /// Assembles a blueprint from role assignments, checking the
    /// identifications and deriving `P1`, `P2`.
    pub fn from_roles(
        ell: usize,
        s: usize,
        t: usize,
        source: [usize; 14],
        sink: [usize; 14],
        hats: Vec<[usize; 10]>,
    ) -> Result<Self> {
        if ell == 0 || hats.len() != 2 * ell - 1 {
            return Err(Error::Precondition(format!("{} hats do not match ell = {ell}", hats.len())));
        }
        let mismatch = |what: &str| Err(Error::Precondition(format!("identification violated: {what}")));
        if source[7] != hats[0][0] || source[13] != hats[0][3] {
            return mismatch("s8 = hat1.h1, s14 = hat1.h4");
        }
        for j in 1..hats.len() {
            if hats[j - 1][2] != hats[j][3] || hats[j - 1][9] != hats[j][0] {
                return mismatch("hat_j.h3 = hat_j+1.h4, hat_j.h10 = hat_j+1.h1");
            }
        }
        let last = hats[hats.len() - 1];
        if last[2] != sink[7] || last[9] != sink[13] {
            return mismatch("last hat h3 = t8, h10 = t14");
        }
        let mut bp = GadgetBlueprint { ell, s, t, source, sink, hats, p1: Vec::new(), p2: Vec::new() };
        bp.p1 = bp.row_path(true);
        bp.p2 = bp.row_path(false);
        Ok(bp)
    }

    pub fn source(&self, i: usize) -> usize {
        self.source[i - 1]
    }

    pub fn sink(&self, i: usize) -> usize {
        self.sink[i - 1]
    }

    pub fn hat(&self, j: usize, i: usize) -> usize {
        self.hats[j - 1][i - 1]
    }

    /// Index of the median hat.
    pub fn median_hat(&self) -> usize {
        self.ell
    }

    pub fn vertex_count(&self) -> usize {
        16 * self.ell + 20
    }

    /// Every role name with its vertex; shared vertices appear under each
    /// of their names.
    pub fn roles(&self) -> Vec<(String, usize)> {
        let mut out = vec![(String::from("s"), self.s), (String::from("t"), self.t)];
        for i in 1..=14 {
            out.push((format!("s{i}"), self.source(i)));
        }
        for i in 1..=14 {
            out.push((format!("t{i}"), self.sink(i)));
        }
        for j in 1..=self.hats.len() {
            for i in 1..=10 {
                out.push((format!("hat{j}.h{i}"), self.hat(j, i)));
            }
        }
        out
    }

    /// `P1` (`top`) runs `s, s1..s8`, the short side `h2 h3` of odd hats and
    /// the long side `h5..h10` of even hats, then `t7..t1, t`. `P2` is the
    /// complement.
    fn row_path(&self, top: bool) -> Vec<usize> {
        let mut path = vec![self.s];
        let head: &[usize] = if top { &[1, 2, 3, 4, 5, 6, 7, 8] } else { &[9, 10, 11, 12, 13, 14] };
        path.extend(head.iter().map(|&i| self.source(i)));
        for j in 1..=self.hats.len() {
            let short = (j % 2 == 1) == top;
            let part: &[usize] = if short { &[2, 3] } else { &[5, 6, 7, 8, 9, 10] };
            path.extend(part.iter().map(|&i| self.hat(j, i)));
        }
        let tail: &[usize] = if top { &[7, 6, 5, 4, 3, 2, 1] } else { &[13, 12, 11, 10, 9] };
        path.extend(tail.iter().map(|&i| self.sink(i)));
        path.push(self.t);
        path
    }
}

/// Builds `G_l` for `ell >= 1`.
pub fn build_g_ell(ell: usize) -> Result<(DirectedGraph, GadgetBlueprint)> {
    if ell == 0 {
        return Err(Error::Precondition("ell must be at least 1".into()));
    }
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let s = fresh();
    let mut source = [0; 14];
    for x in source.iter_mut() {
        *x = fresh();
    }
    let hat_count = 2 * ell - 1;
    let mut hats: Vec<[usize; 10]> = Vec::with_capacity(hat_count);
    for j in 0..hat_count {
        let (h1, h4) = match j {
            0 => (source[7], source[13]),
            _ => (hats[j - 1][9], hats[j - 1][2]),
        };
        let last = j + 1 == hat_count;
        let mut h = [0; 10];
        for (i, slot) in h.iter_mut().enumerate() {
            *slot = match i + 1 {
                1 => h1,
                4 => h4,
                // the last hat's h3 and h10 belong to the sink
                3 | 10 if last => usize::MAX,
                _ => fresh(),
            };
        }
        hats.push(h);
    }
    let t = fresh();
    let mut sink = [0; 14];
    for (i, x) in sink.iter_mut().enumerate() {
        *x = match i + 1 {
            8 | 14 => usize::MAX,
            _ => fresh(),
        };
    }
    let last = hat_count - 1;
    // h3 = t8 and h10 = t14 get ids after the other sink vertices
    sink[7] = fresh();
    sink[13] = fresh();
    hats[last][2] = sink[7];
    hats[last][9] = sink[13];

    let role = |table: &[usize; 14], centre: usize, i: usize| if i == 0 { centre } else { table[i - 1] };
    let mut arcs = Vec::with_capacity(32 * ell + 44);
    for &(a, b) in &SOURCE_ARCS {
        arcs.push((role(&source, s, a), role(&source, s, b)));
        arcs.push((role(&sink, t, b), role(&sink, t, a)));
    }
    for h in &hats {
        for &(a, b) in &HAT_ARCS {
            arcs.push((h[a - 1], h[b - 1]));
        }
    }
    let g = DirectedGraph::new(next, arcs)?;
    let bp = GadgetBlueprint::from_roles(ell, s, t, source, sink, hats)?;
    Ok((g, bp))
}

/// `s9, s10, s`, then `P1`, then `t, t10, t9`: length `8l + 14`.
pub fn witness_long_path(bp: &GadgetBlueprint) -> PathWitness {
    let mut v = vec![bp.source(9), bp.source(10)];
    v.extend_from_slice(&bp.p1);
    v.push(bp.sink(10));
    v.push(bp.sink(9));
    PathWitness::new(v, "gadget-long")
}

/// A path of length `4l + 15` ending at the median hat's `h8`.
///
/// The path reaches the median hat's `h1` along whichever of `P1`, `P2`
/// carries it (`P2` for even `l`, `P1` for odd `l`), entering that row
/// through the two-arc detour into `s` from the other row's first vertices.
/// It then runs `h1 h2 h3 w h10 h4 h5 h6 h7 h8` where `w` is `h5` of the
/// next hat, or `t7` when the median hat is the last one.
pub fn witness_h8_path(bp: &GadgetBlueprint) -> PathWitness {
    let m = bp.median_hat();
    let (row, lead) = if m.is_multiple_of(2) { (&bp.p2, [1, 2]) } else { (&bp.p1, [9, 10]) };
    let h1 = bp.hat(m, 1);
    let upto = row.iter().position(|&x| x == h1).unwrap_or(0);
    let w = if m < bp.hats.len() { bp.hat(m + 1, 5) } else { bp.sink(7) };
    let mut v: Vec<usize> = lead.iter().map(|&i| bp.source(i)).collect();
    v.extend_from_slice(&row[..=upto]);
    v.extend([2, 3].map(|i| bp.hat(m, i)));
    v.push(w);
    v.extend([10, 4, 5, 6, 7, 8].map(|i| bp.hat(m, i)));
    PathWitness::new(v, "gadget-h8")
}

/// `x -> y` maps `G^T` onto `G`: every arc `(a, b)` of `G` has `(f(b), f(a))`.
fn is_transpose_isomorphism(g: &DirectedGraph, f: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &y in f {
        if y >= g.n() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    g.arcs().all(|(a, b)| g.has_arc(f[b], f[a]))
}

/// The map `s <-> t`, `a_i <-> a_{d-i}`, `b_i <-> b_{d-i}` where `a`, `b`
/// are the vertex sequences of `P1`, `P2`.
pub fn row_reversal_map(g: &DirectedGraph, bp: &GadgetBlueprint) -> Vec<usize> {
    let mut f: Vec<usize> = (0..g.n()).collect();
    for row in [&bp.p1, &bp.p2] {
        let d = row.len() - 1;
        for (i, &x) in row.iter().enumerate() {
            if x < f.len() {
                f[x] = row[d - i];
            }
        }
    }
    f
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub id: &'static str,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    pub ell: usize,
    pub clauses: Vec<Clause>,
}

impl GadgetReport {
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

impl core::fmt::Display for GadgetReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "G_{} verification", self.ell)?;
        for c in &self.clauses {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  [{mark}] {} {}: {}", c.id, c.description, c.detail)?;
        }
        Ok(())
    }
}

/// Checks every structural property `G_l` is built to have. `g` may be
/// any graph; the blueprint supplies the roles.
pub fn verify_g_ell(g: &DirectedGraph, bp: &GadgetBlueprint) -> GadgetReport {
    let ell = bp.ell;
    let d = 8 * ell + 10;
    let mut clauses = Vec::new();
    let mut push = |id, description: &str, passed, detail: String| {
        clauses.push(Clause { id, description: description.into(), passed, detail })
    };

    let n = g.n();
    push(
        "size",
        "vertex count is 16l+20",
        n == bp.vertex_count(),
        format!("{n} vertices, expected {}", bp.vertex_count()),
    );
    let covered = VertexSet::from_vertices(n, bp.p1.iter().chain(&bp.p2).copied().filter(|&v| v < n));
    let rows_ok = covered.len() == n
        && validate_path(g, &bp.p1).is_ok()
        && validate_path(g, &bp.p2).is_ok()
        && bp.p1.len() == d + 1
        && bp.p2.len() == d + 1;
    push(
        "rows",
        "P1, P2 are (s,t)-paths of length 8l+10 covering V",
        rows_ok,
        format!("|P1| = {}, |P2| = {}, covered {}", bp.p1.len() - 1, bp.p2.len() - 1, covered.len()),
    );

    let two_strong = is_2_strongly_connected(g);
    push("1", "2-strongly-connected", two_strong, format!("{two_strong}"));

    let (diam, dist_st) = eccentricities(g, bp);
    let diam_ok = diam == Some(d) && dist_st == Some(d);
    push(
        "2",
        "diameter = dist(s,t) = 8l+10",
        diam_ok,
        format!("diameter {diam:?}, dist(s,t) {dist_st:?}, expected {d}"),
    );

    let back = if bp.t < n && bp.s < n { distances_from(g, bp.t)[bp.s] } else { None };
    push(
        "3",
        "dist(t,s) <= 4l+7",
        back.is_some_and(|x| x <= 4 * ell + 7),
        format!("dist(t,s) {back:?}, bound {}", 4 * ell + 7),
    );

    let mut degree_detail = String::new();
    let degrees_ok = bp.hats.iter().enumerate().all(|(j, h)| {
        [h[0], h[3]].iter().all(|&x| {
            let ok = x < n && g.out_neighbors(x).len() == 2 && g.in_neighbors(x).len() == 2;
            if !ok && degree_detail.is_empty() {
                degree_detail = format!("hat {} vertex {x}", j + 1);
            }
            ok
        })
    });
    push(
        "4",
        "h1 and h4 of every hat have in- and out-degree 2",
        degrees_ok,
        if degrees_ok { "all hats".into() } else { degree_detail },
    );

    let unique = bp.hats.iter().all(|h| hat_h4_h1_paths(g, h) == [vec![h[3], h[4], h[0]]]);
    push("5", "the only in-hat (h4,h1)-path is h4 h5 h1", unique, format!("{unique}"));

    let long = witness_long_path(bp);
    let h8 = witness_h8_path(bp);
    let long_ok = long.validate(g).is_ok() && long.length() == d + 4;
    let h8_ok = h8.validate(g).is_ok() && h8.length() == 4 * ell + 15 && h8.last() == Some(bp.hat(bp.median_hat(), 8));
    push(
        "6",
        "witness paths validate (8l+14, and 4l+15 ending at median h8)",
        long_ok && h8_ok,
        format!("long {} ({long_ok}), h8 {} ({h8_ok})", long.length(), h8.length()),
    );

    let iso = row_reversal_map(g, bp);
    let iso_ok = iso[bp.s] == bp.t && is_transpose_isomorphism(g, &iso);
    push("transpose", "s<->t, a_i<->a_(d-i), b_i<->b_(d-i) maps G^T onto G", iso_ok, format!("{iso_ok}"));

    GadgetReport { ell, clauses }
}

/// `(diameter, dist(s,t))`; `None` entries mean some pair is unreachable.
fn eccentricities(g: &DirectedGraph, bp: &GadgetBlueprint) -> (Option<usize>, Option<usize>) {
    let mut diam = Some(0);
    let mut dist_st = None;
    for x in 0..g.n() {
        let dist = distances_from(g, x);
        if x == bp.s {
            dist_st = dist.get(bp.t).copied().flatten();
        }
        for d in dist {
            diam = match (diam, d) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
        }
    }
    (diam, dist_st)
}

/// All simple `(h4,h1)`-paths inside one hat.
fn hat_h4_h1_paths(g: &DirectedGraph, h: &[usize; 10]) -> Vec<Vec<usize>> {
    if h.iter().any(|&x| x >= g.n()) {
        return Vec::new();
    }
    let keep = VertexSet::from_vertices(g.n(), h.iter().copied());
    let (sub, map) = induced_subgraph(g, &keep);
    let (Some(from), Some(to)) = (map.sub(h[3]), map.sub(h[0])) else {
        return Vec::new();
    };
    let mut found = Vec::new();
    let mut path = vec![from];
    let mut on = vec![false; sub.n()];
    on[from] = true;
    fn go(g: &DirectedGraph, to: usize, path: &mut Vec<usize>, on: &mut [bool], found: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap_or(&to);
        if x == to {
            found.push(path.clone());
            return;
        }
        for &y in g.out_neighbors(x) {
            if !on[y] {
                on[y] = true;
                path.push(y);
                go(g, to, path, on, found);
                path.pop();
                on[y] = false;
            }
        }
    }
    go(&sub, to, &mut path, &mut on, &mut found);
    found.iter().map(|p| map.lift(p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    /// Undirected, `k = 1`: universal vertex plus two long pendant paths.
    Prop41Undirected,
    /// 2-strongly-connected digraph, `k >= 5`: `G_l` joined to a
    /// symmetrized Hamiltonian-path instance through a 4-vertex connector.
    Lemma412TwoStrong,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceGraph {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
}

impl InstanceGraph {
    pub fn n(&self) -> usize {
        match self {
            InstanceGraph::Undirected(g) => g.n(),
            InstanceGraph::Directed(g) => g.n(),
        }
    }

    /// The directed view (undirected graphs are symmetrized).
    pub fn as_directed(&self) -> DirectedGraph {
        match self {
            InstanceGraph::Undirected(g) => g.symmetrize(),
            InstanceGraph::Directed(g) => g.clone(),
        }
    }
}

/// The four connector vertices `c1..c4` and their arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connector {
    pub c: [usize; 4],
}

impl Connector {
    /// `c3 -> c1`, `c4 -> c2`, `c1 -> c4`, `c2 -> c3`.
    pub fn arcs(&self) -> [(usize, usize); 4] {
        let [c1, c2, c3, c4] = self.c;
        [(c3, c1), (c4, c2), (c1, c4), (c2, c3)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: InstanceGraph,
    pub kind: ReductionKind,
    /// The Hamiltonian-path instance the reduction started from.
    pub source: UndirectedGraph,
    /// Start vertex of the Hamiltonian path (second reduction only).
    pub w: Option<usize>,
    /// `embedding[x]` is the id of source vertex `x` in `graph`.
    pub embedding: Vec<usize>,
    pub blueprint: Option<GadgetBlueprint>,
    pub connector: Option<Connector>,
    /// Extra vertices of the first reduction: universal vertex, the two
    /// pendant path ends.
    pub universal: Option<usize>,
    pub pendant_ends: Option<(usize, usize)>,
    pub target_k: usize,
    pub claimed_diameter: usize,
}

/// Copy of `g` plus a universal vertex `u` and pendant paths `s..u`,
/// `u..t` with `n - 1` edges each. `g` has a Hamiltonian path iff the
/// result has a path of length `diam + 1 = 2n - 1`.
pub fn reduce_prop41(g: &UndirectedGraph) -> Result<ReductionInstance> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!("need at least 2 vertices, got {n}")));
    }
    let u = n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).map(|x| (x, u)));
    let mut next = n + 1;
    let mut pendant = |edges: &mut Vec<(usize, usize)>| {
        // n - 1 edges ending at u: n - 1 fresh vertices
        let mut prev = u;
        let mut end = u;
        for _ in 0..n - 1 {
            let x = next;
            next += 1;
            edges.push((prev, x));
            prev = x;
            end = x;
        }
        end
    };
    let s = pendant(&mut edges);
    let t = pendant(&mut edges);
    let graph = UndirectedGraph::new(next, edges)?;
    Ok(ReductionInstance {
        graph: InstanceGraph::Undirected(graph),
        kind: ReductionKind::Prop41Undirected,
        source: g.clone(),
        w: None,
        embedding: (0..n).collect(),
        blueprint: None,
        connector: None,
        universal: Some(u),
        pendant_ends: Some((s, t)),
        target_k: 1,
        claimed_diameter: 2 * n - 2,
    })
}

/// Smallest admissible gadget index for target `k`.
pub fn lemma412_min_ell(k: usize) -> usize {
    k.div_ceil(4) + 17
}

/// The gadget index for `|V(H)| = n_h` and target `k`, or the hint
/// message naming the admissible sizes.
pub fn lemma412_ell(n_h: usize, k: usize) -> Result<usize> {
    if k < 5 {
        return Err(Error::Precondition(format!("k must be at least 5, got {k}")));
    }
    let min_ell = lemma412_min_ell(k);
    let residue = (k - 5) % 4;
    let min_n = 4 * min_ell + (k - 5);
    let hint = || {
        Error::Precondition(format!(
            "|V(H)| = {n_h} is not admissible for k = {k}: need |V(H)| ≡ {residue} (mod 4), ≥ {min_n}"
        ))
    };
    if n_h < min_n || !(n_h - (k - 5)).is_multiple_of(4) {
        return Err(hint());
    }
    Ok((n_h - (k - 5)) / 4)
}

/// `G_l` and the symmetrized `H` joined by the connector with
/// `c2 = w`, `c1` the lowest other vertex of `H`, `c3`, `c4` the median
/// hat's `h6`, `h8`. `H` has a Hamiltonian path from `w` iff the result
/// has a path of length `diam + k`.
pub fn reduce_lemma412(h: &UndirectedGraph, w: usize, k: usize) -> Result<ReductionInstance> {
    let ell = lemma412_ell(h.n(), k)?;
    if w >= h.n() {
        return Err(Error::NoSuchVertex { v: w, n: h.n() });
    }
    if !is_2_connected_undirected(h) {
        return Err(Error::Precondition("H must be 2-connected".into()));
    }
    let (gl, bp) = build_g_ell(ell)?;
    let base = gl.n();
    let embedding: Vec<usize> = (0..h.n()).map(|x| base + x).collect();
    let other = if w == 0 { 1 } else { 0 };
    let m = bp.median_hat();
    let connector = Connector { c: [base + other, base + w, bp.hat(m, 6), bp.hat(m, 8)] };
    let mut arcs: Vec<(usize, usize)> = gl.arcs().collect();
    for (a, b) in h.edges() {
        arcs.push((base + a, base + b));
        arcs.push((base + b, base + a));
    }
    arcs.extend(connector.arcs());
    let graph = DirectedGraph::new(base + h.n(), arcs)?;
    Ok(ReductionInstance {
        graph: InstanceGraph::Directed(graph),
        kind: ReductionKind::Lemma412TwoStrong,
        source: h.clone(),
        w: Some(w),
        embedding,
        blueprint: Some(bp),
        connector: Some(connector),
        universal: None,
        pendant_ends: None,
        target_k: k,
        claimed_diameter: 8 * ell + 10,
    })
}

/// One instance per start vertex of `H`.
pub fn reduce_lemma412_family(h: &UndirectedGraph, k: usize) -> Result<Vec<ReductionInstance>> {
    (0..h.n()).map(|w| reduce_lemma412(h, w, k)).collect()
}

/// Maps a Hamiltonian path of `H` starting at `w` to a path of length
/// `diam + k` in the reduced graph: the `h8` witness (ending at `c4`),
/// the arc `c4 -> c2`, then the path itself.
pub fn lift_ham_witness(r: &ReductionInstance, ham: &PathWitness) -> Result<PathWitness> {
    let (Some(bp), Some(conn), Some(w), InstanceGraph::Directed(g)) = (&r.blueprint, &r.connector, r.w, &r.graph)
    else {
        return Err(Error::Precondition("lifting needs a k >= 5 reduction instance".into()));
    };
    ham.validate(&r.source)?;
    if ham.vertices.len() != r.source.n() || ham.first() != Some(w) {
        return Err(Error::InvalidPath(format!(
            "not a Hamiltonian path of H starting at {w}: {} of {} vertices",
            ham.vertices.len(),
            r.source.n()
        )));
    }
    let prefix = witness_h8_path(bp);
    if prefix.last() != Some(conn.c[3]) {
        return Err(Error::InvalidPath("h8 witness does not end at c4".into()));
    }
    let lifted: Vec<usize> = ham.vertices.iter().map(|&x| r.embedding[x]).collect();
    let vertices = concat(&[&prefix.vertices, &lifted]);
    let out = PathWitness::checked(g, vertices, "lifted-hamiltonian")?;
    Ok(out.with_baseline(crate::Baseline::Diameter(r.claimed_diameter)))
}
