//! Property tests over the public API.

use longpath_core::chain::{backend_by_name, solve_chain3, ChainQuery};
use longpath_core::detour::{solve_directed_detour, DetourConfig, Verdict};
use longpath_core::flow::two_internally_disjoint_paths;
use longpath_core::graph::{bfs_layering, distances_from, shortest_path};
use longpath_core::oracle::{detour_oracle, longest_path_oracle, Engine, OracleLimits};
use longpath_core::subroutines::{has_path_at_least, Strategy as SearchStrategy, SubroutineConfig};
use longpath_core::{DirectedGraph, Error, Search};
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = DirectedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..n * 3).prop_map(move |pairs| {
            DirectedGraph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).expect("pairs are in range")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bfs_levels_are_distances(g in digraph(12)) {
        let layering = bfs_layering(&g, 0);
        let dist = distances_from(&g, 0);
        prop_assert_eq!(&layering.level, &dist);
        for (i, layer) in layering.layers.iter().enumerate() {
            for &v in layer {
                prop_assert_eq!(dist[v], Some(i));
            }
        }
        // arcs never skip a level forward
        for (u, v) in g.arcs() {
            if let (Some(a), Some(b)) = (dist[u], dist[v]) {
                prop_assert!(b <= a + 1);
            }
        }
    }

    #[test]
    fn transpose_is_an_involution(g in digraph(12)) {
        let t = g.transpose();
        prop_assert_eq!(t.arc_count(), g.arc_count());
        for (u, v) in g.arcs() {
            prop_assert!(t.has_arc(v, u));
        }
        prop_assert_eq!(t.transpose(), g);
    }

    #[test]
    fn shortest_paths_are_valid_and_shortest(g in digraph(12), t in 1usize..12) {
        let t = t % g.n();
        prop_assume!(t != 0);
        let dist = distances_from(&g, 0);
        match shortest_path(&g, 0, t, None) {
            Some(p) => {
                prop_assert_eq!(Some(p.len() - 1), dist[t]);
                for w in p.windows(2) {
                    prop_assert!(g.has_arc(w[0], w[1]));
                }
            }
            None => prop_assert_eq!(dist[t], None),
        }
    }

    #[test]
    fn disjoint_paths_share_only_endpoints(g in digraph(10)) {
        let t = g.n() - 1;
        if let Some((p, q)) = two_internally_disjoint_paths(&g, 0, t).unwrap() {
            p.validate_endpoints(&g, 0, t).unwrap();
            q.validate_endpoints(&g, 0, t).unwrap();
            let inner = |w: &longpath_core::PathWitness| w.vertices[1..w.vertices.len() - 1].to_vec();
            for v in inner(&p) {
                prop_assert!(!q.vertices.contains(&v));
            }
            prop_assert!(p.vertices != q.vertices);
        }
    }

    #[test]
    fn oracle_engines_agree(g in digraph(10)) {
        let dp = OracleLimits { engine: Engine::SubsetDp, ..Default::default() };
        let bnb = OracleLimits { engine: Engine::BranchAndBound, ..Default::default() };
        let a = longest_path_oracle(&g, &dp).unwrap();
        let b = longest_path_oracle(&g, &bnb).unwrap();
        prop_assert!(a.exact && b.exact);
        prop_assert_eq!(a.value, b.value);
        a.witness.validate(&g).unwrap();
        b.witness.validate(&g).unwrap();
    }

    #[test]
    fn detour_yes_exactly_up_to_k_star(g in digraph(9), k in 0usize..6) {
        let t = g.n() - 1;
        let answer = solve_directed_detour(&g, 0, t, k, &DetourConfig::default()).unwrap();
        match detour_oracle(&g, 0, t, &OracleLimits::default()) {
            Err(Error::Unreachable { .. }) => prop_assert_eq!(answer.verdict, Verdict::No),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
            Ok(v) => {
                let want = if k <= v.k_star { Verdict::Yes } else { Verdict::No };
                prop_assert_eq!(answer.verdict, want);
                if let Some(w) = answer.witness {
                    w.validate_endpoints(&g, 0, t).unwrap();
                    prop_assert!(w.length() >= v.dist + k);
                }
            }
        }
    }

    #[test]
    fn color_coding_never_invents_paths(g in digraph(9), k in 0usize..5, seed in any::<u64>()) {
        let cfg = SubroutineConfig { strategy: SearchStrategy::ColorCoding, seed, ..Default::default() };
        let longest = longest_path_oracle(&g, &OracleLimits::default()).unwrap().value;
        match has_path_at_least(&g, k, &cfg).unwrap() {
            Search::Found(w) => {
                w.validate(&g).unwrap();
                prop_assert!(w.length() >= k && longest >= k);
            }
            Search::Absent(_) => {}
            Search::Inconclusive => return Err(TestCaseError::fail("color coding has no budget")),
        }
    }

    #[test]
    fn chain_backends_agree(g in digraph(8)) {
        let n = g.n();
        prop_assume!(n >= 4);
        let q = ChainQuery::new(&g, 0, 1, 2, 3).unwrap();
        let exhaustive = backend_by_name("exhaustive", u64::MAX).unwrap();
        let prefilter = backend_by_name("flow-prefilter", u64::MAX).unwrap();
        let a = solve_chain3(&q, exhaustive.as_ref()).unwrap();
        let b = solve_chain3(&q, prefilter.as_ref()).unwrap();
        prop_assert_eq!(a.is_found(), b.is_found());
        if let Search::Found(sol) = a {
            sol.validate(&q).unwrap();
        }
    }
}

#[test]
fn readme_example() {
    // s -> a -> t and s -> b1 -> b2 -> b3 -> b4 -> t
    let g = DirectedGraph::new(7, [(0, 1), (1, 6), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
    let cfg = DetourConfig::default();
    let yes = solve_directed_detour(&g, 0, 6, 3, &cfg).unwrap();
    assert_eq!(yes.verdict, Verdict::Yes);
    assert_eq!(yes.witness.unwrap().vertices, vec![0, 2, 3, 4, 5, 6]);
    let no = solve_directed_detour(&g, 0, 6, 4, &cfg).unwrap();
    assert_eq!(no.verdict, Verdict::No);
}
