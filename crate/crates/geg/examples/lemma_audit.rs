//! Audit the structural facts the solvers lean on — forced and excluded
//! vertices — over every small connected graph and a random sample.
//!
//! ```bash
//! cargo run --release -p geg --example lemma_audit
//! ```

use rand::SeedableRng;

use geg::{
    connected_graph_count, enumerate_connected_graphs, lemma_suite, random_connected_graph,
    LemmaId,
};

fn main() {
    for n in 2..=5 {
        let mut audited = 0u64;
        for graph in enumerate_connected_graphs(n).unwrap() {
            for verdict in lemma_suite(&graph) {
                assert!(verdict.pass, "{} failed on {graph:?}", verdict.id);
            }
            audited += 1;
        }
        assert_eq!(audited, connected_graph_count(n));
        println!("n = {n}: all {audited} connected graphs pass every audit");
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let samples = 100;
    for _ in 0..samples {
        let graph = random_connected_graph(&mut rng, 9, 0.35);
        for verdict in lemma_suite(&graph) {
            assert!(verdict.pass, "{} failed on {graph:?}", verdict.id);
        }
    }
    println!("plus {samples} random 9-vertex graphs (seed 11)");

    println!("\naudits performed per graph:");
    for id in LemmaId::ALL {
        println!("  - {id}");
    }
}
