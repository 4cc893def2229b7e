//! Iterated-MIS conflict-free coloring of closed neighborhoods.
//!
//! Each round takes a maximal independent set of the still-uncolored
//! subgraph, keeps a random subsample of it, and colors that subsample
//! with the round's color; a vertex is satisfied once it (or exactly one
//! neighbor) is colored.  On K_{1,k}-free graphs a 2^{-i} subsample with
//! random i satisfies a constant fraction of the live vertices per round,
//! so rounds — and therefore colors — stay logarithmic.

use cflab::clawfree_cfcn::{color_clawfree_cfcn, CfcnOutcome, CfcnParams};
use cflab::generate::{gnp, line_graph, GraphFamily};
use cflab::oracle::{verify, VerifyMode};

fn main() {
    let base = gnp(24, 0.2, 9).unwrap();
    let g = line_graph(&base);
    println!(
        "line graph: {} vertices, max degree {}, claw number {}",
        g.n(),
        g.max_degree(),
        g.claw_number()
    );

    let params = CfcnParams::new(3, 21).unwrap();
    let outcome = color_clawfree_cfcn(&g, &params).unwrap();
    println!("\nround history:");
    println!(
        "  {:<6} {:>5} {:>4} {:>6} {:>8} {:>10}",
        "round", "live", "|St|", "|It|", "satisfied", "exponent"
    );
    for r in &outcome.history {
        println!(
            "  {:<6} {:>5} {:>4} {:>6} {:>8} {:>10}",
            r.round, r.live, r.st_size, r.it_size, r.satisfied, r.exponent
        );
    }
    println!(
        "\nrounds: {}, colors used: {}, leftover color: {:?}",
        outcome.rounds_used, outcome.colors_used, outcome.leftover_color
    );
    println!(
        "reported bound ceil(ln n * log2 k / c) + 1 = {:.0}",
        CfcnOutcome::color_bound(g.n(), &params)
    );
    println!(
        "mean satisfied fraction per round: {:.3}",
        outcome.mean_satisfied_fraction()
    );
    let report = verify(&g, &outcome.coloring, VerifyMode::Closed).unwrap();
    println!("closed-neighborhood verification: {}", report.ok);

    // Cliques collapse in one round: the MIS is a single vertex that
    // dominates everyone, and the leftover color finishes the job.
    let k30 = GraphFamily::Complete { n: 30 }.generate().unwrap();
    let outcome = color_clawfree_cfcn(&k30, &CfcnParams::new(2, 4).unwrap()).unwrap();
    println!(
        "\nK_30: {} round(s), {} colors (the closed chromatic number of any clique is 2)",
        outcome.rounds_used, outcome.colors_used
    );
    assert!(verify(&k30, &outcome.coloring, VerifyMode::Closed).unwrap().ok);
}
