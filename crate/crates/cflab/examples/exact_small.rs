//! Exact conflict-free chromatic numbers on small graphs by brute force.
//!
//! The oracles try every coloring with a growing palette, so they are only
//! usable on small instances — which is exactly what makes them trustworthy
//! reference points for the scalable algorithms.

use cflab::generate::GraphFamily;
use cflab::hypergraph::{neighborhood_hypergraph, NeighborhoodMode};
use cflab::oracle::{chi_cf_exact, chi_cn_exact, chi_on_exact, chi_on_witness};

fn main() {
    println!("open neighborhoods (every N(v) must see a unique color):");
    for (name, f) in [
        ("K_2", GraphFamily::Complete { n: 2 }),
        ("K_4", GraphFamily::Complete { n: 4 }),
        ("K_5", GraphFamily::Complete { n: 5 }),
        ("C_4", GraphFamily::Cycle { n: 4 }),
        ("C_6", GraphFamily::Cycle { n: 6 }),
        ("K_{1,5}", GraphFamily::Star { leaves: 5 }),
    ] {
        let g = f.generate().unwrap();
        println!("  chi_ON({name}) = {}", chi_on_exact(&g).unwrap());
    }

    // Subdividing every edge of K_n forces n colors — the original
    // vertices pairwise share a subdivision vertex whose neighborhood
    // consists of exactly those two.
    for n in 3..=4 {
        let g = GraphFamily::SubdividedComplete { n }.generate().unwrap();
        let (k, f) = chi_on_witness(&g).unwrap();
        println!(
            "  chi_ON(subdivided K_{n}) = {k}  (witness uses colors {:?})",
            f.distinct_colors()
        );
    }

    println!("\nclosed neighborhoods (N[v] includes the vertex itself):");
    for n in 2..=6 {
        let g = GraphFamily::Complete { n }.generate().unwrap();
        println!("  chi_CN(K_{n}) = {}", chi_cn_exact(&g));
    }
    let c6 = GraphFamily::Cycle { n: 6 }.generate().unwrap();
    println!("  chi_CN(C_6) = {}", chi_cn_exact(&c6));

    // The same machinery answers hypergraph questions directly.
    let k3 = GraphFamily::Complete { n: 3 }.generate().unwrap();
    let h = neighborhood_hypergraph(&k3, NeighborhoodMode::Closed).unwrap();
    println!(
        "\nchi_CF of the closed-neighborhood hypergraph of K_3 = {}",
        chi_cf_exact(&h)
    );
}
