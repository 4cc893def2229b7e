//! Hypergraphs and conflict-free colorings of them.
//!
//! A coloring is *conflict-free* (CF) when every hyperedge contains a color
//! of multiplicity exactly one among its colored members. Blank members
//! carry no color; an edge all of whose members are blank has no uniquely
//! occurring color and therefore violates the condition.

use crate::coloring::Coloring;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge {index} mentions vertex {id}, outside universe of size {universe}")]
    VertexOutOfRange { index: usize, id: usize, universe: usize },
}

/// A hypergraph over the universe `0..universe`. Edge members are stored
/// sorted and deduplicated; duplicate edges are retained (they are harmless
/// for CF coloring and surface in [`Hypergraph::duplicate_edge_groups`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    universe: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(universe: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut cleaned = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            e.sort_unstable();
            e.dedup();
            if let Some(&id) = e.last() {
                if id >= universe {
                    return Err(HypergraphError::VertexOutOfRange { index, id, universe });
                }
            }
            cleaned.push(e);
        }
        Ok(Hypergraph { universe, edges: cleaned })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Per-vertex list of incident edge indices.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.universe];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Maximum number of edges through a single vertex.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.universe];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Maximum, over edges `E`, of the number of other edges meeting `E`.
    /// Uses per-edge bitmasks; quadratic in the edge count.
    pub fn max_edge_intersections(&self) -> usize {
        let m = self.edges.len();
        if m <= 1 {
            return 0;
        }
        let words = self.universe.div_ceil(64).max(1);
        let mut masks = vec![0u64; m * words];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                masks[i * words + v / 64] |= 1u64 << (v % 64);
            }
        }
        let mut counts = vec![0usize; m];
        for i in 0..m {
            for j in i + 1..m {
                let a = &masks[i * words..(i + 1) * words];
                let b = &masks[j * words..(j + 1) * words];
                if a.iter().zip(b).any(|(&x, &y)| x & y != 0) {
                    counts[i] += 1;
                    counts[j] += 1;
                }
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Groups of indices of identical edges (only groups of size >= 2).
    pub fn duplicate_edge_groups(&self) -> Vec<Vec<usize>> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].cmp(&self.edges[b]).then(a.cmp(&b)));
        let mut groups = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let mut j = i + 1;
            while j < order.len() && self.edges[order[j]] == self.edges[order[i]] {
                j += 1;
            }
            if j - i >= 2 {
                groups.push(order[i..j].to_vec());
            }
            i = j;
        }
        groups
    }
}

/// Outcome of a CF check: `ok` plus the indices of violating edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfReport {
    pub ok: bool,
    pub violating_edges: Vec<usize>,
}

/// Checks the CF condition edge by edge. Blank vertices contribute no
/// color; an edge with no uniquely occurring color (in particular an
/// all-blank edge) is reported as violating.
pub fn is_cf_coloring(h: &Hypergraph, f: &Coloring) -> CfReport {
    assert_eq!(f.len(), h.universe(), "coloring size must match the universe");
    let mut violating = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if !edge_has_unique_color(e, f) {
            violating.push(i);
        }
    }
    CfReport { ok: violating.is_empty(), violating_edges: violating }
}

fn edge_has_unique_color(edge: &[usize], f: &Coloring) -> bool {
    let mut colors: Vec<usize> = edge.iter().filter_map(|&v| f.get(v)).collect();
    colors.sort_unstable();
    let mut i = 0;
    while i < colors.len() {
        let mut j = i + 1;
        while j < colors.len() && colors[j] == colors[i] {
            j += 1;
        }
        if j - i == 1 {
            return true;
        }
        i = j;
    }
    false
}

/// Exact bounded search: a total CF coloring of `h` with colors
/// `{1..=kmax}`, or `None` if none exists.
///
/// Vertices are searched in order of decreasing hypergraph degree and a new
/// color is introduced only when all smaller colors already occur, which
/// prunes color permutations without affecting satisfiability. Branches die
/// as soon as a fully colored edge lacks a uniquely occurring color.
pub fn cf_color_bounded(h: &Hypergraph, kmax: usize) -> Option<Coloring> {
    assert!(kmax >= 1, "need at least one color");
    let n = h.universe();
    let mut order: Vec<usize> = (0..n).collect();
    let mut deg = vec![0usize; n];
    for e in h.edges() {
        for &v in e {
            deg[v] += 1;
        }
    }
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut state = BoundedSearch {
        h,
        incidence: h.incidence(),
        kmax,
        order,
        colors: vec![0; n],
        missing: h.edges().iter().map(Vec::len).collect(),
    };
    if state.assign(0, 0) {
        let mut f = Coloring::blank(n);
        for (v, &c) in state.colors.iter().enumerate() {
            f.set(v, c);
        }
        Some(f)
    } else {
        None
    }
}

struct BoundedSearch<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    kmax: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
    // Per edge: number of still-uncolored members.
    missing: Vec<usize>,
}

impl BoundedSearch<'_> {
    fn assign(&mut self, depth: usize, max_used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let limit = self.kmax.min(max_used + 1);
        for c in 1..=limit {
            self.colors[v] = c;
            let mut ok = true;
            let mut touched = 0;
            for idx in 0..self.incidence[v].len() {
                let e = self.incidence[v][idx];
                self.missing[e] -= 1;
                touched = idx + 1;
                if self.missing[e] == 0 && !self.complete_edge_ok(e) {
                    ok = false;
                    break;
                }
            }
            if ok && self.assign(depth + 1, max_used.max(c)) {
                return true;
            }
            for &e in &self.incidence[v][..touched] {
                self.missing[e] += 1;
            }
            self.colors[v] = 0;
        }
        false
    }

    fn complete_edge_ok(&self, e: usize) -> bool {
        let mut colors: Vec<usize> =
            self.h.edge(e).iter().map(|&v| self.colors[v]).collect();
        colors.sort_unstable();
        let mut i = 0;
        while i < colors.len() {
            let mut j = i + 1;
            while j < colors.len() && colors[j] == colors[i] {
                j += 1;
            }
            if j - i == 1 {
                return true;
            }
            i = j;
        }
        false
    }
}

/// Which neighborhood hypergraph to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodMode {
    Open,
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeighborhoodError {
    #[error("vertex {0} is isolated; open neighborhoods must be nonempty")]
    IsolatedVertex(usize),
}

/// The hypergraph of (open or closed) neighborhoods of `g`, edges in vertex
/// order. Open mode rejects graphs with isolated vertices, whose open
/// neighborhood would be empty.
pub fn neighborhood_hypergraph(
    g: &Graph,
    mode: NeighborhoodMode,
) -> Result<Hypergraph, NeighborhoodError> {
    let mut edges = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut e: Vec<usize> = g.neighbors(v).to_vec();
        match mode {
            NeighborhoodMode::Open => {
                if e.is_empty() {
                    return Err(NeighborhoodError::IsolatedVertex(v));
                }
            }
            NeighborhoodMode::Closed => e.push(v),
        }
        edges.push(e);
    }
    Ok(Hypergraph::new(g.n(), edges).expect("neighborhood edges are valid by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(universe: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(universe, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Hypergraph::new(3, vec![vec![]]).unwrap_err(),
            HypergraphError::EmptyEdge { index: 0 }
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 3]]).unwrap_err(),
            HypergraphError::VertexOutOfRange { index: 0, id: 3, universe: 3 }
        );
    }

    #[test]
    fn members_are_sets_edges_are_not() {
        let hg = Hypergraph::new(3, vec![vec![2, 0, 2], vec![0, 2]]).unwrap();
        assert_eq!(hg.edge(0), &[0, 2]);
        assert_eq!(hg.edge_count(), 2);
        assert_eq!(hg.duplicate_edge_groups(), vec![vec![0, 1]]);
    }

    #[test]
    fn degree_and_intersections() {
        let hg = h(5, &[&[0, 1], &[1, 2], &[3, 4]]);
        assert_eq!(hg.max_degree(), 2);
        assert_eq!(hg.max_edge_intersections(), 1);
        let disjoint = h(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        assert_eq!(disjoint.max_edge_intersections(), 0);
        let star = h(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert_eq!(star.max_edge_intersections(), 2);
        assert_eq!(h(1, &[&[0]]).max_edge_intersections(), 0);
    }

    #[test]
    fn cf_check_reports_violations() {
        let hg = h(4, &[&[0, 1, 2], &[2, 3]]);
        let mut f = Coloring::blank(4);
        for (v, c) in [(0, 1), (1, 1), (2, 2), (3, 2)] {
            f.set(v, c);
        }
        let report = is_cf_coloring(&hg, &f);
        assert!(!report.ok);
        assert_eq!(report.violating_edges, vec![1]);
    }

    #[test]
    fn cf_check_blank_semantics() {
        let hg = h(3, &[&[0, 1, 2]]);
        let mut f = Coloring::blank(3);
        // All blank: no uniquely occurring color.
        assert!(!is_cf_coloring(&hg, &f).ok);
        // One colored member is uniquely colored among the non-blank.
        f.set(1, 5);
        assert!(is_cf_coloring(&hg, &f).ok);
        // Two members sharing the only color violate again.
        f.set(2, 5);
        assert!(!is_cf_coloring(&hg, &f).ok);
    }

    #[test]
    fn bounded_search_small_cases() {
        // Disjoint singleton edges: one color suffices (each edge's lone
        // member is trivially unique within it).
        let singletons = h(2, &[&[0], &[1]]);
        let f = cf_color_bounded(&singletons, 1).unwrap();
        assert!(is_cf_coloring(&singletons, &f).ok);

        // Disjoint size-2 edges are a different story: an edge whose two
        // members share a color has no color of multiplicity one, so a single
        // color is never enough, while alternating two colors is.
        let disjoint = h(4, &[&[0, 1], &[2, 3]]);
        assert!(cf_color_bounded(&disjoint, 1).is_none());
        let f = cf_color_bounded(&disjoint, 2).unwrap();
        assert!(is_cf_coloring(&disjoint, &f).ok);

        // A single size-2 edge cannot be CF-colored with one color...
        let pair = h(2, &[&[0, 1]]);
        assert!(cf_color_bounded(&pair, 1).is_none());
        // ...but two colors work.
        assert!(cf_color_bounded(&pair, 2).is_some());

        // Triple closed-neighborhood-style edge set of a triangle.
        let tri = h(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        assert!(cf_color_bounded(&tri, 1).is_none());
        let f = cf_color_bounded(&tri, 2).unwrap();
        assert!(is_cf_coloring(&tri, &f).ok);
        // Max degree 3, so the degree bound promises success at 4.
        assert!(cf_color_bounded(&tri, 4).is_some());
    }

    #[test]
    fn bounded_search_respects_kmax() {
        let pair = h(2, &[&[0, 1]]);
        let f = cf_color_bounded(&pair, 5).unwrap();
        assert!(f.max_color() <= 5);
        assert!(is_cf_coloring(&pair, &f).ok);
    }

    #[test]
    fn neighborhood_hypergraphs() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let open = neighborhood_hypergraph(&c4, NeighborhoodMode::Open).unwrap();
        assert_eq!(open.edge(0), &[1, 3]);
        let closed = neighborhood_hypergraph(&c4, NeighborhoodMode::Closed).unwrap();
        assert_eq!(closed.edge(0), &[0, 1, 3]);

        let lonely = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            neighborhood_hypergraph(&lonely, NeighborhoodMode::Open).unwrap_err(),
            NeighborhoodError::IsolatedVertex(2)
        );
        let closed = neighborhood_hypergraph(&lonely, NeighborhoodMode::Closed).unwrap();
        assert_eq!(closed.edge(2), &[2]);
    }

    #[test]
    fn empty_universe_is_trivially_colorable() {
        let hg = Hypergraph::new(0, vec![]).unwrap();
        let f = cf_color_bounded(&hg, 1).unwrap();
        assert_eq!(f.len(), 0);
        assert!(is_cf_coloring(&hg, &f).ok);
    }
}
