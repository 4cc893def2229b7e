//! The layered weighted random graph and its diagnostic battery.
//!
//! Vertices fall into floor(ln n) layers with geometrically decaying
//! weights; each pair is an edge with probability equal to the weight
//! product.  At astronomical sizes this model forces many colors on any
//! closed-neighborhood conflict-free coloring.  At desk scale the
//! asymptotic lemmas are out of reach, so the lab reports the exact finite
//! quantities — weights, expected degrees, heavy/light set behavior — and
//! probes random colorings for how many vertices they leave unserved.

use cflab::layered::{
    classify_set, generate_layered, run_lab, set_weight, unique_neighbor_set, LayeredParams,
};

fn main() {
    let params = LayeredParams::new(512, 0.002, 23).unwrap();
    let (g, meta) = generate_layered(&params).unwrap();
    println!(
        "n = 512, eps0 = {:.5}: {} layers, {} edges",
        meta.eps0,
        meta.layer_count(),
        g.edge_count()
    );
    for i in 1..=meta.layer_count() {
        println!(
            "  layer {i}: {} vertices, weight {:.5}",
            meta.layer_sizes[i - 1],
            meta.layer_weight(i)
        );
    }

    // Set weight decides heavy versus light at the sqrt(n) boundary.
    let s: Vec<usize> = (0..30).collect();
    println!(
        "\nfirst 30 vertices: weight {:.2} vs sqrt(n) = {:.2} -> {:?}",
        set_weight(&meta, &s),
        (512.0f64).sqrt(),
        classify_set(&meta, &s)
    );
    println!(
        "their unique-neighbor set has {} vertices",
        unique_neighbor_set(&g, &s).len()
    );

    let report = run_lab(&params, 0.25, &[1, 2, 3], 50).unwrap();
    println!(
        "\ndegree concentration: {} flagged at alpha = {}, degree range {}..={}",
        report.degree.flagged.len(),
        report.degree.alpha,
        report.degree.min_degree,
        report.degree.max_degree
    );
    println!(
        "heavy sample: {} vertices, weight {:.1}, unique neighbors {}",
        report.heavy_sample.size, report.heavy_sample.weight, report.heavy_sample.unique_neighbor_count
    );
    println!(
        "light sample: {} vertices (bound n^(0.5+2eps0) = {:.1})",
        report.light_sample.size, report.light_sample_size_bound
    );
    println!("\nrandom-coloring probes (50 trials each):");
    println!("  {:>3} {:>14} {:>14}", "r", "min uncovered", "mean uncovered");
    for p in &report.probes {
        println!(
            "  {:>3} {:>14} {:>14.1}",
            p.r, p.min_uncovered, p.mean_uncovered
        );
    }

    // Small instances admit the exact closed-neighborhood oracle next to
    // the asymptotic reference count.
    let small = LayeredParams::new(12, 0.002, 9).unwrap();
    let small_report = run_lab(&small, 0.5, &[2], 200).unwrap();
    let probe = &small_report.probes[0];
    println!(
        "\nn = 12: exact chi_CN = {:?}, asymptotic reference floor(eps0^3 ln^2 n) = {:?}",
        probe.exact_chi_cn, probe.r_colors_reference
    );
}
