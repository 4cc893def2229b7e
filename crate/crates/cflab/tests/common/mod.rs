//! Corpus builders shared by the integration suites.
//!
//! Everything here is deterministic: seed scans accept or reject candidate
//! graphs by fixed rules (no isolated vertices, maximum degree at least 2)
//! so every run sees the same corpus.

// Each integration test target compiles this module separately and none
// uses every helper.
#![allow(dead_code)]

use cflab::generate::{gnp, line_graph, random_geometric, GraphFamily};
use cflab::graph::Graph;
use cflab::hypergraph::Hypergraph;
use cflab::lll::LllParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
    /// Star-freeness parameter for the claw-free pipelines; `None` lets
    /// them infer claw number + 1.
    pub k: Option<usize>,
}

/// All labeled connected graphs on `n` vertices, by edge-mask enumeration.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// `count` random graphs with 2..=8 vertices and no isolated vertex,
/// accepted in deterministic seed order.
pub fn gnp_small_no_isolated(count: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count {
        let n = 2 + (i as usize % 7);
        let p = 0.2 + 0.1 * ((i / 7) % 6) as f64;
        let g = gnp(n, p, i).unwrap();
        if g.isolated_vertices().is_empty() {
            out.push(g);
        }
        i += 1;
    }
    out
}

/// `count` random hypergraphs with universe at most 10 and at most 8
/// edges, each edge a nonempty vertex subset.
pub fn random_hypergraphs(count: usize, seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u = rng.random_range(2..=10usize);
            let m = rng.random_range(1..=8usize);
            let edges: Vec<Vec<usize>> = (0..m)
                .map(|_| {
                    let size = rng.random_range(1..=u);
                    let mut verts: Vec<usize> = (0..u).collect();
                    for i in 0..size {
                        let j = rng.random_range(i..u);
                        verts.swap(i, j);
                    }
                    verts.truncate(size);
                    verts
                })
                .collect();
            Hypergraph::new(u, edges).unwrap()
        })
        .collect()
}

/// The claw-free corpus: 50 line graphs of random bases (k = 3 always
/// suffices there), subdivided cliques, and 20 random geometric graphs.
pub fn clawfree_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut i = 0u64;
    let mut accepted = 0;
    while accepted < 50 {
        let n = 8 + (i as usize * 7) % 33;
        let p = 0.1 + 0.05 * (i % 5) as f64;
        let lg = line_graph(&gnp(n, p, i).unwrap());
        if lg.n() >= 2 && lg.isolated_vertices().is_empty() && lg.max_degree() >= 2 {
            out.push(CorpusEntry {
                name: format!("line(gnp({n},{p:.2},{i}))"),
                graph: lg,
                k: Some(3),
            });
            accepted += 1;
        }
        i += 1;
    }
    for n in 2..=6 {
        out.push(CorpusEntry {
            name: format!("subdivided K_{n}"),
            graph: GraphFamily::SubdividedComplete { n }.generate().unwrap(),
            k: None,
        });
    }
    let mut i = 0u64;
    let mut accepted = 0;
    while accepted < 20 {
        let n = 10 + (i as usize * 3) % 31;
        let radius = 0.25 + 0.05 * (i % 4) as f64;
        let g = random_geometric(n, radius, i).unwrap();
        if g.isolated_vertices().is_empty() && g.max_degree() >= 2 {
            out.push(CorpusEntry {
                name: format!("geometric({n},{radius:.2},{i})"),
                graph: g,
                k: None,
            });
            accepted += 1;
        }
        i += 1;
    }
    out
}

/// `count` near-uniform hypergraphs with their matching local-lemma
/// parameters: clusters of two edges sharing one vertex, sizes in
/// `[8, 16]`, so `ell = 2`, `r = 8`, and actual overlap exactly 1.
pub fn near_uniform_instances(count: usize) -> Vec<(Hypergraph, LllParams)> {
    (0..count as u64)
        .map(|i| {
            let clusters = 6 + (i as usize % 9);
            let mut edges = Vec::new();
            let mut next = 0usize;
            for c in 0..clusters {
                let a = 8 + ((i as usize + c) % 9);
                let b = 8 + ((i as usize + 3 * c + 5) % 9);
                let shared = next;
                let e1: Vec<usize> = std::iter::once(shared)
                    .chain((0..a - 1).map(|t| next + 1 + t))
                    .collect();
                let e2: Vec<usize> = std::iter::once(shared)
                    .chain((0..b - 1).map(|t| next + a + t))
                    .collect();
                next += a + b - 1;
                edges.push(e1);
                edges.push(e2);
            }
            let h = Hypergraph::new(next, edges).unwrap();
            let p = LllParams::new(2.0, 8.0, 1, i).unwrap();
            (h, p)
        })
        .collect()
}
