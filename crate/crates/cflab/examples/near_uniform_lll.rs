//! Moser-Tardos resampling on a near-uniform hypergraph.
//!
//! When every edge has size in `[r, l*r]`, edges meet few other edges, and
//! the palette holds `ceil(e*l*r)` colors, the local lemma guarantees a
//! coloring in which every edge sees more than half of its size in
//! distinct colors — so some color appears exactly once.  The algorithm
//! resamples the lowest-index bad edge until none remains; the expected
//! number of resamplings is linear in the number of edges.

use cflab::hypergraph::{is_cf_coloring, Hypergraph};
use cflab::lll::{check_preconditions, color_near_uniform, LllParams};

fn main() {
    // Twelve clusters of two edges sharing one vertex: sizes 8..=16, so
    // ell = 2, r = 8, and each edge intersects exactly one other.
    let mut edges = Vec::new();
    let mut next = 0usize;
    for c in 0..12 {
        let a = 8 + (c % 5);
        let b = 8 + ((c + 3) % 7);
        let shared = next;
        let e1: Vec<usize> = std::iter::once(shared)
            .chain((0..a - 1).map(|i| next + 1 + i))
            .collect();
        let e2: Vec<usize> = std::iter::once(shared)
            .chain((0..b - 1).map(|i| next + a + i))
            .collect();
        next += a + b - 1;
        edges.push(e1);
        edges.push(e2);
    }
    let h = Hypergraph::new(next, edges).unwrap();
    println!(
        "hypergraph: {} vertices, {} edges, sizes {}..={}, max intersections {}",
        h.universe(),
        h.edge_count(),
        h.min_edge_size(),
        h.max_edge_size(),
        h.max_edge_intersections()
    );

    let params = LllParams::new(2.0, 8.0, 1, 42).unwrap();
    println!(
        "palette: ceil(e * 2 * 8) = {} colors; overlap requirement r >= {:.2}",
        params.palette_size,
        2.0 * (4.0 * (params.gamma as f64).max(1.0)).log2()
    );
    let report = check_preconditions(&h, &params);
    println!("preconditions ok: {}", report.ok);

    let f = color_near_uniform(&h, &params).unwrap();
    assert!(f.is_total());
    println!(
        "colored all {} vertices with {} distinct colors",
        f.len(),
        f.num_distinct()
    );
    let check = is_cf_coloring(&h, &f);
    println!("conflict-free: {}", check.ok);

    // Every edge in fact sees more than |e|/2 distinct colors — stronger
    // than merely having a unique one.
    let min_ratio = h
        .edges()
        .iter()
        .map(|e| {
            let mut colors: Vec<usize> = e.iter().filter_map(|&v| f.get(v)).collect();
            colors.sort_unstable();
            colors.dedup();
            colors.len() as f64 / e.len() as f64
        })
        .fold(f64::INFINITY, f64::min);
    println!("minimum distinct/size ratio over edges: {min_ratio:.3} (> 0.5)");
}
