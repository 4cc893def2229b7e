//! Exact oracles: CF verification of graph colorings and exact CF
//! chromatic numbers by iterative-deepening backtracking.
//!
//! These are the ground truth the randomized constructions are tested
//! against, so the graph searches here work directly on adjacency lists and
//! deliberately share no code with the hypergraph engine in
//! [`crate::hypergraph`]; agreement between the two routes is itself a
//! tested invariant.

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::hypergraph::{cf_color_bounded, Hypergraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {0} is isolated; its open neighborhood is empty")]
    IsolatedVertex(usize),
}

/// Which neighborhoods a CF graph coloring must serve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Open,
    Closed,
}

/// Outcome of verification: `ok` plus the violating vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub violating: Vec<usize>,
}

/// Checks that every (open or closed) neighborhood sees some color exactly
/// once among its non-blank members. Open mode rejects isolated vertices.
pub fn verify(g: &Graph, f: &Coloring, mode: VerifyMode) -> Result<VerifyReport, OracleError> {
    assert_eq!(f.len(), g.n(), "coloring size must match the graph");
    let mut violating = Vec::new();
    for v in 0..g.n() {
        let mut colors: Vec<usize> = match mode {
            VerifyMode::Open => {
                if g.degree(v) == 0 {
                    return Err(OracleError::IsolatedVertex(v));
                }
                g.neighbors(v).iter().filter_map(|&u| f.get(u)).collect()
            }
            VerifyMode::Closed => {
                g.neighbors(v).iter().chain(std::iter::once(&v)).filter_map(|&u| f.get(u)).collect()
            }
        };
        colors.sort_unstable();
        if !has_singleton(&colors) {
            violating.push(v);
        }
    }
    Ok(VerifyReport { ok: violating.is_empty(), violating })
}

fn has_singleton(sorted: &[usize]) -> bool {
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i == 1 {
            return true;
        }
        i = j;
    }
    false
}

/// Exact CF open-neighborhood chromatic number.
pub fn chi_on_exact(g: &Graph) -> Result<usize, OracleError> {
    Ok(chi_on_witness(g)?.0)
}

/// Exact value together with a witness coloring.
pub fn chi_on_witness(g: &Graph) -> Result<(usize, Coloring), OracleError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(OracleError::IsolatedVertex(v));
    }
    Ok(deepening_search(g, VerifyMode::Open))
}

/// Exact CF closed-neighborhood chromatic number. Defined for every graph:
/// a closed neighborhood always contains the vertex itself.
pub fn chi_cn_exact(g: &Graph) -> usize {
    chi_cn_witness(g).0
}

pub fn chi_cn_witness(g: &Graph) -> (usize, Coloring) {
    deepening_search(g, VerifyMode::Closed)
}

/// Exact CF chromatic number of a hypergraph, via the bounded search with
/// `k = 1, 2, ...`. Never exceeds `max_degree + 1`.
pub fn chi_cf_exact(h: &Hypergraph) -> usize {
    chi_cf_witness(h).0
}

pub fn chi_cf_witness(h: &Hypergraph) -> (usize, Coloring) {
    let cap = h.max_degree() + 1;
    for k in 1..=cap {
        if let Some(f) = cf_color_bounded(h, k) {
            return (k, f);
        }
    }
    unreachable!("a CF coloring with max_degree + 1 colors always exists");
}

/// Iterative deepening on the number of colors. With all colors distinct
/// any graph (without isolated vertices, in open mode) is CF-colored, so
/// the loop terminates by `k = n`.
fn deepening_search(g: &Graph, mode: VerifyMode) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, Coloring::blank(0));
    }
    for k in 1..=g.n() {
        let mut s = GraphSearch::new(g, mode, k);
        if s.assign(0, 0) {
            let mut f = Coloring::blank(g.n());
            for (v, &c) in s.colors.iter().enumerate() {
                f.set(v, c);
            }
            debug_assert!(verify(g, &f, mode).map(|r| r.ok).unwrap_or(false));
            return (k, f);
        }
    }
    unreachable!("an all-distinct coloring is conflict-free");
}

struct GraphSearch<'a> {
    g: &'a Graph,
    mode: VerifyMode,
    kmax: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
    // Per vertex: uncolored members of its relevant neighborhood. When this
    // hits zero the neighborhood is complete and must pass the CF check.
    missing: Vec<usize>,
}

impl<'a> GraphSearch<'a> {
    fn new(g: &'a Graph, mode: VerifyMode, kmax: usize) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let missing = (0..n)
            .map(|v| match mode {
                VerifyMode::Open => g.degree(v),
                VerifyMode::Closed => g.degree(v) + 1,
            })
            .collect();
        GraphSearch { g, mode, kmax, order, colors: vec![0; n], missing }
    }

    /// The watchers of `v`: vertices whose neighborhood contains `v`.
    fn watchers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let own = match self.mode {
            VerifyMode::Open => None,
            VerifyMode::Closed => Some(v),
        };
        self.g.neighbors(v).iter().copied().chain(own)
    }

    fn neighborhood_ok(&self, v: usize) -> bool {
        let mut colors: Vec<usize> = match self.mode {
            VerifyMode::Open => self.g.neighbors(v).iter().map(|&u| self.colors[u]).collect(),
            VerifyMode::Closed => self
                .g
                .neighbors(v)
                .iter()
                .chain(std::iter::once(&v))
                .map(|&u| self.colors[u])
                .collect(),
        };
        colors.sort_unstable();
        has_singleton(&colors)
    }

    fn assign(&mut self, depth: usize, max_used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // New colors only in canonical ascending order: prunes nothing but
        // color permutations.
        let limit = self.kmax.min(max_used + 1);
        for c in 1..=limit {
            self.colors[v] = c;
            let mut ok = true;
            let watchers: Vec<usize> = self.watchers(v).collect();
            for &w in &watchers {
                self.missing[w] -= 1;
                if self.missing[w] == 0 && !self.neighborhood_ok(w) {
                    ok = false;
                }
            }
            if ok && self.assign(depth + 1, max_used.max(c)) {
                return true;
            }
            for &w in &watchers {
                self.missing[w] += 1;
            }
            self.colors[v] = 0;
        }
        false
    }
}
