//! Simple undirected graphs on vertices `0..n` with sorted adjacency lists.

use crate::coloring::Coloring;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// An undirected simple graph. Neighbor lists are kept sorted ascending, so
/// iteration order (and with it every greedy tie-break in this crate) is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos2 = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos2, u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Vertices of degree zero, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Induced subgraph on `verts` (deduplicated, sorted). Returns the
    /// subgraph and the map from local ids to the original vertex ids.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = local[u];
                if j != usize::MAX && j > i {
                    g.adj[i].push(j);
                    g.adj[j].push(i);
                }
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        (g, map)
    }

    /// Greedy maximal independent set: scan vertices ascending, keep every
    /// vertex with no previously kept neighbor. Maximal by construction.
    pub fn greedy_maximal_independent_set(&self) -> Vec<usize> {
        let mut taken = vec![false; self.n()];
        let mut out = Vec::new();
        for v in 0..self.n() {
            if self.adj[v].iter().all(|&u| !taken[u]) {
                taken[v] = true;
                out.push(v);
            }
        }
        out
    }

    /// Greedy proper coloring: scan vertices ascending, give each the
    /// smallest color absent from its neighborhood. Uses at most
    /// `max_degree + 1` colors and never leaves a vertex blank.
    pub fn greedy_proper_coloring(&self) -> Coloring {
        let n = self.n();
        let mut f = Coloring::blank(n);
        let mut used = vec![0usize; n + 2];
        let mut stamp = 0usize;
        for v in 0..n {
            stamp += 1;
            for &u in &self.adj[v] {
                if let Some(c) = f.get(u) {
                    if c <= n + 1 {
                        used[c] = stamp;
                    }
                }
            }
            let mut c = 1;
            while used[c] == stamp {
                c += 1;
            }
            f.set(v, c);
        }
        f
    }

    /// Exact independence number by branch and bound. Intended for small
    /// inputs (tens of vertices); neighborhoods handed to [`Graph::claw_number`]
    /// are typically far smaller.
    pub fn independence_number(&self) -> usize {
        let alive: Vec<usize> = (0..self.n()).collect();
        let mut best = 0;
        self.mis_branch(&alive, 0, &mut best);
        best
    }

    fn mis_branch(&self, alive: &[usize], current: usize, best: &mut usize) {
        if current + alive.len() <= *best {
            return;
        }
        if alive.is_empty() {
            *best = (*best).max(current);
            return;
        }
        // Branch on the vertex with the most surviving neighbors; `alive`
        // stays sorted, so the membership test can use binary search.
        let mut pick = 0;
        let mut pick_deg = 0;
        for (i, &v) in alive.iter().enumerate() {
            let d =
                self.adj[v].iter().filter(|&&u| alive.binary_search(&u).is_ok()).count();
            if i == 0 || d > pick_deg {
                pick = i;
                pick_deg = d;
            }
        }
        if pick_deg == 0 {
            // No edges left among the survivors: take them all.
            *best = (*best).max(current + alive.len());
            return;
        }
        let v = alive[pick];
        // Include v: drop v and its neighbors.
        let kept: Vec<usize> =
            alive.iter().copied().filter(|&u| u != v && !self.has_edge(u, v)).collect();
        self.mis_branch(&kept, current + 1, best);
        // Exclude v.
        let without: Vec<usize> = alive.iter().copied().filter(|&u| u != v).collect();
        self.mis_branch(&without, current, best);
    }

    /// The claw number: the largest `k` such that the graph contains an
    /// induced star `K_{1,k}`, computed as the maximum independence number
    /// over induced neighborhoods. Returns 0 for edgeless graphs.
    pub fn claw_number(&self) -> usize {
        let mut best = 0;
        for v in 0..self.n() {
            if self.adj[v].len() <= best {
                continue;
            }
            let (h, _) = self.induced(&self.adj[v]);
            best = best.max(h.independence_number());
        }
        best
    }
}
