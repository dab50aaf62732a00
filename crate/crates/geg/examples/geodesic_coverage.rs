//! The shortest-path layer underneath the solvers: distances, path counts,
//! geodesic enumeration, and the two independent monitoring predicates.
//!
//! ```bash
//! cargo run -p geg --example geodesic_coverage
//! ```

use geg::{
    coverage_tables, edge_monitored_by, edge_monitored_by_deletion, enumerate_geodesics,
    geodesic_tables, Graph,
};

fn main() {
    let c6 = Graph::cycle(6);
    let tables = geodesic_tables(&c6).unwrap();
    println!("6-cycle: dist(0,3) = {}, sigma(0,3) = {}", tables.dist(0, 3), tables.sigma(0, 3));

    let list = enumerate_geodesics(&c6, &tables, 0, 3, 100);
    println!("geodesics between 0 and 3 (lexicographic):");
    for path in &list.paths {
        println!("  {path:?}");
    }

    // the counting predicate and the deletion oracle agree edge by edge
    let coverage = coverage_tables(&c6, &tables);
    for (u, v) in [(0, 1), (0, 2), (0, 3)] {
        let monitored: Vec<(usize, usize)> = coverage
            .monitor_cover(u, v)
            .iter()
            .map(|ei| c6.edges()[ei])
            .collect();
        println!("pair ({u},{v}) monitors {monitored:?}");
        for &e in c6.edges() {
            assert_eq!(
                edge_monitored_by(&tables, u, v, e),
                edge_monitored_by_deletion(&c6, u, v, e)
            );
        }
    }
    println!("counting predicate == deletion oracle on every pair and edge");
}
