//! Graph generators: deterministic families plus seeded random models.
//!
//! Randomized families draw from a ChaCha stream seeded with the caller's
//! 64-bit seed, one draw per vertex pair in fixed `(u, v)` lexicographic
//! order, so a seed fully determines the output across platforms.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParam { family: &'static str, reason: String },
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParam { family, reason: reason.into() }
}

/// A parameterized graph family.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    /// Complete graph `K_n`, `n >= 1`.
    Complete { n: usize },
    /// Star `K_{1,k}` with center 0 and `k >= 1` leaves.
    Star { leaves: usize },
    /// Path on `n >= 1` vertices.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// `K_n` with every edge subdivided once, `n >= 2`. Vertices `0..n` are
    /// the originals; vertex `n + i` subdivides the `i`-th pair in
    /// lexicographic order.
    SubdividedComplete { n: usize },
    /// Line graph of a base family.
    LineGraphOf(Box<GraphFamily>),
    /// Erdos-Renyi `G(n, p)` with a fixed seed.
    Gnp { n: usize, p: f64, seed: u64 },
}

impl GraphFamily {
    /// Builds the graph this family describes.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        generate(self)
    }
}

/// Builds the requested family member.
pub fn generate(family: &GraphFamily) -> Result<Graph, FamilyError> {
    match *family {
        GraphFamily::Complete { n } => {
            if n < 1 {
                return Err(bad("complete", "need n >= 1"));
            }
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v).unwrap();
                }
            }
            Ok(g)
        }
        GraphFamily::Star { leaves } => {
            if leaves < 1 {
                return Err(bad("star", "need at least one leaf"));
            }
            let mut g = Graph::empty(leaves + 1);
            for v in 1..=leaves {
                g.add_edge(0, v).unwrap();
            }
            Ok(g)
        }
        GraphFamily::Path { n } => {
            if n < 1 {
                return Err(bad("path", "need n >= 1"));
            }
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(v - 1, v).unwrap();
            }
            Ok(g)
        }
        GraphFamily::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle", "need n >= 3"));
            }
            let mut g = Graph::empty(n);
            for v in 0..n {
                g.add_edge(v, (v + 1) % n).unwrap();
            }
            Ok(g)
        }
        GraphFamily::SubdividedComplete { n } => {
            if n < 2 {
                return Err(bad("subdivided-complete", "need n >= 2"));
            }
            let pairs = n * (n - 1) / 2;
            let mut g = Graph::empty(n + pairs);
            let mut idx = n;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, idx).unwrap();
                    g.add_edge(v, idx).unwrap();
                    idx += 1;
                }
            }
            Ok(g)
        }
        GraphFamily::LineGraphOf(ref base) => Ok(line_graph(&generate(base)?)),
        GraphFamily::Gnp { n, p, seed } => gnp(n, p, seed),
    }
}

/// `G(n, p)`: each of the `n(n-1)/2` vertex pairs becomes an edge
/// independently with probability `p`. One RNG draw per pair, pairs in
/// lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("gnp", "need n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("gnp", format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

/// Line graph: one vertex per edge of `g` (in lexicographic edge order),
/// adjacent when the underlying edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut lg = Graph::empty(edges.len());
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                lg.add_edge(i, j).unwrap();
            }
        }
    }
    lg
}

/// Unit-disk-style random geometric graph: `n` points uniform in the unit
/// square, edges between points at distance at most `radius`.
pub fn random_geometric(n: usize, radius: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("geometric", "need n >= 1"));
    }
    if !radius.is_finite() || radius < 0.0 {
        return Err(bad("geometric", format!("radius {radius} must be finite and nonnegative")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> =
        (0..n).map(|_| (rng.random::<f64>(), rng.random::<f64>())).collect();
    let r2 = radius * radius;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let dx = points[u].0 - points[v].0;
            let dy = points[u].1 - points[v].1;
            if dx * dx + dy * dy <= r2 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}
