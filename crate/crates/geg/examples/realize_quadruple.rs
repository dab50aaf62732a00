//! Build a graph with prescribed parameter values and check it.
//!
//! ```bash
//! cargo run -p geg --example realize_quadruple
//! ```

use geg::{feasibility, quadruple, realize, Quadruple, SolverConfig};

fn main() {
    for (a, b, c, d) in [(2, 3, 4, 6), (2, 2, 5, 5), (4, 5, 6, 7), (2, 2, 2, 5), (2, 3, 3, 4)] {
        let target = Quadruple::new(a, b, c, d);
        println!("target {target}: {}", feasibility(target));
        let (graph, plan) = match realize(target) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        println!(
            "  built {:?} with {} vertices, {} edges, tail length {}",
            plan.family,
            graph.vertex_count(),
            graph.edge_count(),
            plan.r
        );
        for class in &plan.classes {
            let names: Vec<String> = class
                .vertices
                .iter()
                .map(|&v| graph.display_name(v))
                .collect();
            println!("    {:10} ({:?}): {}", class.name, class.role, names.join(", "));
        }
        plan.validate(&graph).unwrap();
        let solved = quadruple(&graph, &SolverConfig::default()).unwrap().values();
        println!("  solver confirms {solved:?}");
        assert_eq!(solved, (a as usize, b as usize, c as usize, d as usize));
    }
}
