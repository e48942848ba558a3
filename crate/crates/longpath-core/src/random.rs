//! Seeded random graph families used by the test suites.

use alloc::vec::Vec;

use rand::Rng;

use crate::graph::{two_strong_connectivity_defect, DirectedGraph, UndirectedGraph};

/// Each ordered pair becomes an arc with probability `density`.
pub fn random_digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> DirectedGraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    DirectedGraph::new(n, arcs).expect("arcs are in range")
}

/// Each unordered pair becomes an edge with probability `density`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).expect("edges are in range")
}

fn shuffled<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

/// A Hamiltonian cycle on shuffled labels plus chords with probability
/// `density`. 2-connected for `n >= 3`.
pub fn random_2connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> UndirectedGraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    for u in 0..n {
        for v in u + 2..n {
            if !(u == 0 && v == n - 1) && rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let perm = shuffled(rng, n);
    UndirectedGraph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("edges are in range")
}

/// A directed cycle made 2-strongly-connected either by skip arcs
/// `v -> v+2` or by reversing every arc as well, plus `extra` random arcs.
/// Requires `n >= 3`.
pub fn random_2sc_digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: usize) -> DirectedGraph {
    let doubled = rng.random_bool(0.5);
    let mut arcs = Vec::new();
    for v in 0..n {
        arcs.push((v, (v + 1) % n));
        arcs.push(if doubled { ((v + 1) % n, v) } else { (v, (v + 2) % n) });
    }
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            arcs.push((u, v));
        }
    }
    let perm = shuffled(rng, n);
    let mut arcs: Vec<(usize, usize)> = arcs.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    arcs.sort_unstable();
    arcs.dedup();
    let g = DirectedGraph::new(n, arcs).expect("arcs are in range");
    debug_assert!(two_strong_connectivity_defect(&g).is_none());
    g
}
