//! Small graph families and brute-force enumerators shared by unit tests.
//! The enumerators walk every simple path without pruning and are kept
//! independent from the solvers they check.

use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{DirectedGraph, UndirectedGraph};

pub fn directed_path(n: usize) -> DirectedGraph {
    DirectedGraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn directed_cycle(n: usize) -> DirectedGraph {
    DirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete_digraph(n: usize) -> DirectedGraph {
    DirectedGraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> UndirectedGraph {
    UndirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete_graph(n: usize) -> UndirectedGraph {
    UndirectedGraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `s=0 -> a=1 -> t=6` and `s -> b1=2 -> b2=3 -> b3=4 -> b4=5 -> t`.
pub fn two_parallel_paths() -> DirectedGraph {
    DirectedGraph::new(7, [(0, 1), (1, 6), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap()
}

pub use crate::random::{random_2connected_graph, random_2sc_digraph, random_digraph, random_graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Calls `visit` on every simple path (as a vertex list) starting at
/// `start`.
pub fn for_each_simple_path(g: &DirectedGraph, start: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(g: &DirectedGraph, path: &mut Vec<usize>, on: &mut Vec<bool>, visit: &mut impl FnMut(&[usize])) {
        visit(path);
        let last = *path.last().unwrap();
        for &w in g.out_neighbors(last) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                go(g, path, on, visit);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    on[start] = true;
    go(g, &mut vec![start], &mut on, visit);
}

/// Every length of a simple `(s,t)`-path.
pub fn st_path_lengths(g: &DirectedGraph, s: usize, t: usize) -> Vec<usize> {
    let mut lengths = Vec::new();
    for_each_simple_path(g, s, &mut |p| {
        if *p.last().unwrap() == t {
            lengths.push(p.len() - 1);
        }
    });
    lengths.sort_unstable();
    lengths.dedup();
    lengths
}

pub fn brute_longest_path(g: &DirectedGraph) -> usize {
    let mut best = 0;
    for s in 0..g.n() {
        for_each_simple_path(g, s, &mut |p| best = best.max(p.len() - 1));
    }
    best
}
