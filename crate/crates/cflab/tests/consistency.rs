//! Cross-validation between independent routes to the same answer: the
//! graph-native verifier against the hypergraph checker, the graph-native
//! exact oracles against the hypergraph oracle, and the bounded search
//! against a from-scratch enumeration written in this file.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cflab::coloring::Coloring;
use cflab::generate::line_graph;
use cflab::graph::Graph;
use cflab::hypergraph::{
    cf_color_bounded, is_cf_coloring, neighborhood_hypergraph, Hypergraph, NeighborhoodMode,
};
use cflab::oracle::{
    chi_cf_exact, chi_cn_exact, chi_cn_witness, chi_on_exact, chi_on_witness, verify, VerifyMode,
};

/// Conflict-freedom checked from first principles: every edge must have a
/// color whose multiplicity among colored members is exactly one.  Shares
/// no code with the library checkers.
fn independent_is_cf(edges: &[Vec<usize>], f: &[usize]) -> bool {
    edges.iter().all(|e| {
        let mut counts = std::collections::HashMap::new();
        for &v in e {
            if f[v] != 0 {
                *counts.entry(f[v]).or_insert(0usize) += 1;
            }
        }
        counts.values().any(|&c| c == 1)
    })
}

/// Exhaustive existence check over all total colorings with `kmax` colors.
fn independent_exists_cf(universe: usize, edges: &[Vec<usize>], kmax: usize) -> bool {
    let mut f = vec![1usize; universe];
    loop {
        if independent_is_cf(edges, &f) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == universe {
                return false;
            }
            if f[i] < kmax {
                f[i] += 1;
                break;
            }
            f[i] = 1;
            i += 1;
        }
    }
}

#[test]
fn verifier_agrees_with_hypergraph_checker_on_random_colorings() {
    let mut graphs = common::gnp_small_no_isolated(40);
    graphs.extend(common::connected_graphs(5));
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for g in &graphs {
        for _ in 0..5 {
            let k = rng.random_range(1..=4usize);
            let mut f = Coloring::blank(g.n());
            for v in 0..g.n() {
                f.set(v, rng.random_range(1..=k));
            }
            for (mode, hmode) in [
                (VerifyMode::Open, NeighborhoodMode::Open),
                (VerifyMode::Closed, NeighborhoodMode::Closed),
            ] {
                let h = neighborhood_hypergraph(g, hmode).unwrap();
                let direct = verify(g, &f, mode).unwrap();
                let via_h = is_cf_coloring(&h, &f);
                assert_eq!(direct.ok, via_h.ok, "mode {mode:?}, edges {:?}", g.edges());
                assert_eq!(direct.violating, via_h.violating_edges);
            }
        }
    }
}

#[test]
fn graph_oracles_agree_with_hypergraph_oracle() {
    let mut graphs: Vec<Graph> = common::connected_graphs(4);
    graphs.extend(common::connected_graphs(5));
    graphs.extend(common::gnp_small_no_isolated(20));
    for g in &graphs {
        let open = neighborhood_hypergraph(g, NeighborhoodMode::Open).unwrap();
        assert_eq!(
            chi_on_exact(g).unwrap(),
            chi_cf_exact(&open),
            "open disagreement on {:?}",
            g.edges()
        );
        let closed = neighborhood_hypergraph(g, NeighborhoodMode::Closed).unwrap();
        assert_eq!(
            chi_cn_exact(g),
            chi_cf_exact(&closed),
            "closed disagreement on {:?}",
            g.edges()
        );
    }
}

#[test]
fn bounded_search_matches_independent_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..150 {
        let u = rng.random_range(2..=6usize);
        let m = rng.random_range(1..=5usize);
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let size = rng.random_range(1..=u);
                let mut verts: Vec<usize> = (0..u).collect();
                for i in 0..size {
                    let j = rng.random_range(i..u);
                    verts.swap(i, j);
                }
                verts.truncate(size);
                verts.sort_unstable();
                verts
            })
            .collect();
        let h = Hypergraph::new(u, edges.clone()).unwrap();
        for kmax in 1..=3 {
            let found = cf_color_bounded(&h, kmax);
            let exists = independent_exists_cf(u, &edges, kmax);
            assert_eq!(
                found.is_some(),
                exists,
                "case {case}, kmax {kmax}, edges {edges:?}"
            );
            if let Some(f) = found {
                let slots: Vec<usize> = (0..u).map(|v| f.get(v).unwrap_or(0)).collect();
                assert!(independent_is_cf(&edges, &slots), "case {case}");
                assert!(f.max_color() <= kmax);
            }
        }
    }
}

/// Builds the graph on `n` vertices whose edges are the set bits of `mask`
/// over the lexicographic pair list.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn line_graphs_never_hold_big_claws(n in 2usize..=7, mask in any::<u64>()) {
        let lg = line_graph(&graph_from_mask(n, mask));
        prop_assert!(lg.claw_number() <= 2);
    }

    #[test]
    fn exact_witnesses_pass_their_own_verification(n in 2usize..=6, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let (k, f) = chi_cn_witness(&g);
        let report = verify(&g, &f, VerifyMode::Closed).unwrap();
        prop_assert!(report.ok);
        prop_assert_eq!(f.num_distinct(), k);
        if g.isolated_vertices().is_empty() {
            let (k, f) = chi_on_witness(&g).unwrap();
            let report = verify(&g, &f, VerifyMode::Open).unwrap();
            prop_assert!(report.ok);
            prop_assert_eq!(f.num_distinct(), k);
        }
    }

    #[test]
    fn degree_plus_one_always_suffices(seed in any::<u64>()) {
        let h = &common::random_hypergraphs(1, seed)[0];
        let f = cf_color_bounded(h, h.max_degree() + 1);
        prop_assert!(f.is_some());
        let f = f.unwrap();
        prop_assert!(is_cf_coloring(h, &f).ok);
    }
}
