//! Batch-verification invariants beyond the acceptance gate: the impossible
//! parameter patterns never appear among small graphs, and the structural
//! lemma audits hold exhaustively at n = 6 and on a large seeded random
//! sample up to n = 12.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geg::{
    connected_graph_count, enumerate_connected_graphs, impossible_quadruple_scan, lemma_suite,
    random_connected_graph, sweep,
};

#[test]
fn impossible_patterns_absent_up_to_seven_vertices() {
    for n in 2..=7 {
        let (scanned, violations) = impossible_quadruple_scan(n).unwrap();
        assert_eq!(scanned, connected_graph_count(n), "scan count at n = {n}");
        assert!(
            violations.is_empty(),
            "n = {n}: found {} counterexamples, first: {:?}",
            violations.len(),
            violations.first()
        );
    }
}

#[test]
fn lemma_suite_exhaustive_n6() {
    let mut audited = 0u64;
    for graph in enumerate_connected_graphs(6).unwrap() {
        for verdict in lemma_suite(&graph) {
            assert!(
                verdict.pass,
                "{} failed on {graph:?}: {:?}",
                verdict.id, verdict.note
            );
        }
        audited += 1;
    }
    assert_eq!(audited, connected_graph_count(6));
}

#[test]
fn lemma_suite_random_up_to_n12() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
    for i in 0..1000 {
        let n = rng.gen_range(2..=12);
        let p = (1.8 * (n as f64).ln() / n as f64).clamp(0.3, 0.8);
        let graph = random_connected_graph(&mut rng, n, p);
        for verdict in lemma_suite(&graph) {
            assert!(
                verdict.pass,
                "{} failed on random graph {i} {graph:?}: {:?}",
                verdict.id, verdict.note
            );
        }
    }
}

#[test]
fn small_sweep_reports() {
    let report = sweep(2).unwrap();
    assert_eq!(report.entries.len(), 1);
    assert!(report.entries[0].pass);

    let report = sweep(3).unwrap();
    assert_eq!(report.entries.len(), 5);
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.infeasible, 2);
}
