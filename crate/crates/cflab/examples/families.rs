//! Tour of the graph generators and the text file formats.
//!
//! Builds one member of each family, prints its shape, and round-trips a
//! graph through the `p edge` format to show the canonical serialization.

use cflab::generate::{gnp, line_graph, random_geometric, GraphFamily};
use cflab::io::{parse_graph, write_graph};

fn main() {
    let families = [
        GraphFamily::Complete { n: 5 },
        GraphFamily::Star { leaves: 4 },
        GraphFamily::Path { n: 6 },
        GraphFamily::Cycle { n: 6 },
        GraphFamily::SubdividedComplete { n: 4 },
        GraphFamily::Gnp {
            n: 12,
            p: 0.4,
            seed: 7,
        },
    ];
    println!("{:<28} {:>8} {:>8} {:>6} {:>6}", "family", "vertices", "edges", "maxdeg", "claw");
    for f in &families {
        let g = f.generate().expect("valid parameters");
        println!(
            "{:<28} {:>8} {:>8} {:>6} {:>6}",
            format!("{f:?}"),
            g.n(),
            g.edge_count(),
            g.max_degree(),
            g.claw_number()
        );
    }

    // Line graphs are always claw-limited: no induced K_{1,3}.
    let base = gnp(10, 0.5, 3).unwrap();
    let lg = line_graph(&base);
    println!(
        "\nline graph of G(10, 0.5): {} vertices, {} edges, claw number {}",
        lg.n(),
        lg.edge_count(),
        lg.claw_number()
    );

    let geo = random_geometric(15, 0.4, 11).unwrap();
    println!(
        "random geometric (n=15, radius 0.4): {} edges, connected: {}",
        geo.edge_count(),
        geo.is_connected()
    );

    // The canonical text form: 1-based ids, sorted edge list.
    let c4 = GraphFamily::Cycle { n: 4 }.generate().unwrap();
    let text = write_graph(&c4);
    println!("\nC_4 in p edge format:\n{text}");
    let back = parse_graph(&text).unwrap();
    assert_eq!(back.edges(), c4.edges());
    println!("round-trip preserved all {} edges", back.edge_count());
}
