//! Compute the four monitoring parameters of a graph, with certificates.
//!
//! ```bash
//! cargo run -p geg --example compute_parameters
//! ```

use geg::{parse_edge_list, quadruple, verify_certificate, Graph, ParamKind, SolverConfig};

fn report(name: &str, graph: &Graph) {
    let result = quadruple(graph, &SolverConfig::default()).unwrap();
    let (g, eg, seg, meg) = result.values();
    println!("{name}: g = {g}, eg = {eg}, seg = {seg}, meg = {meg}");
    for kind in ParamKind::ALL {
        let cert = result.certificate(kind);
        let names: Vec<String> = cert.set.iter().map(|&v| graph.display_name(v)).collect();
        println!("  {kind:>3} set: {{{}}}", names.join(", "));
        // every certificate re-checks against the geodesic predicates
        verify_certificate(graph, cert).unwrap();
    }
}

fn main() {
    report("4-cycle", &Graph::cycle(4));
    report("K_4", &Graph::complete(4));

    // the same edge-list format the CLI reads
    let text = "\
# a 5-cycle with a pendant vertex
v0 v1
v1 v2
v2 v3
v3 v4
v4 v0
v0 tail
";
    let graph = parse_edge_list(text).unwrap();
    report("5-cycle plus pendant", &graph);
}
