//! Emit a constructed graph in the edge-list and DOT formats.
//!
//! ```bash
//! cargo run -p geg --example export_formats
//! ```

use geg::{export_dot, export_edge_list, parse_edge_list, realize, Quadruple};

fn main() {
    let (graph, plan) = realize(Quadruple::new(3, 3, 3, 3)).unwrap();

    let text = export_edge_list(&graph);
    println!("edge list:\n{text}");

    // the format round-trips with labels intact
    let back = parse_edge_list(&text).unwrap();
    assert_eq!(back.vertex_count(), graph.vertex_count());
    assert_eq!(back.edge_count(), graph.edge_count());

    // DOT output styles the plan's vertex classes
    println!("dot:\n{}", export_dot(&graph, Some(&plan)));
}
