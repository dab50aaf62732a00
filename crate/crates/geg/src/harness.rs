//! Batch verification: quadruple sweeps over the builders, exhaustive
//! small-graph enumeration, structural-lemma audits and seeded random graph
//! generation.

use std::time::Instant;

use rand::Rng;
use thiserror::Error;

use crate::construct::{feasibility, realize, Feasibility, Quadruple};
use crate::geodesic::{self, coverage_tables};
use crate::graph::Graph;
use crate::solver::{
    self, four_cycle_forced, is_edge_geodetic_set, is_geodetic_set, is_meg_set, quadruple,
    SolverConfig,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("connected-graph enumeration supports 2..=7 vertices, got {0}")]
    RangeTooLarge(usize),
    #[error("sweep requires max_d >= 2, got {0}")]
    BadSweepRange(i64),
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SweepEntry {
    pub target: Quadruple,
    pub feasibility: Feasibility,
    /// `(vertices, edges)` of the built graph, absent for rejections.
    pub graph_size: Option<(usize, usize)>,
    /// What the exact solvers computed on the built graph.
    pub solved: Option<Quadruple>,
    pub pass: bool,
    pub wall_ms: f64,
    /// Failure cause, when a solver error or mismatch occurred.
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SweepSummary {
    pub pass: usize,
    pub fail: usize,
    pub infeasible: usize,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SweepReport {
    pub max_d: i64,
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
}

/// Builds and solver-checks one quadruple. Infeasible targets pass when the
/// realizer rejects them with the right status; feasible targets pass when
/// the built graph's solved quadruple matches exactly.
pub fn verify_quadruple(q: Quadruple) -> SweepEntry {
    let start = Instant::now();
    let status = feasibility(q);
    let mut entry = SweepEntry {
        target: q,
        feasibility: status,
        graph_size: None,
        solved: None,
        pass: false,
        wall_ms: 0.0,
        note: None,
    };
    match realize(q) {
        Err(rejected) => {
            entry.pass = rejected != Feasibility::Feasible && rejected == status;
            if !entry.pass {
                entry.note = Some(format!("unexpected rejection: {rejected:?}"));
            }
        }
        Ok((graph, _plan)) => {
            entry.graph_size = Some((graph.vertex_count(), graph.edge_count()));
            match quadruple(&graph, &SolverConfig::default()) {
                Ok(result) => {
                    let v = result.values();
                    let solved = Quadruple::new(v.0 as i64, v.1 as i64, v.2 as i64, v.3 as i64);
                    entry.solved = Some(solved);
                    entry.pass = solved == q;
                    if !entry.pass {
                        entry.note = Some(format!("built graph solves to {solved}"));
                    }
                }
                Err(e) => {
                    entry.note = Some(format!("solver error: {e}"));
                }
            }
        }
    }
    entry.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    entry
}

/// Verifies every quadruple `2 <= a <= b <= c <= d <= max_d`, in
/// lexicographic order.
pub fn sweep(max_d: i64) -> Result<SweepReport, HarnessError> {
    if max_d < 2 {
        return Err(HarnessError::BadSweepRange(max_d));
    }
    let mut entries = Vec::new();
    let mut summary = SweepSummary::default();
    for a in 2..=max_d {
        for b in a..=max_d {
            for c in b..=max_d {
                for d in c..=max_d {
                    let entry = verify_quadruple(Quadruple::new(a, b, c, d));
                    if entry.feasibility != Feasibility::Feasible {
                        summary.infeasible += 1;
                    }
                    if entry.pass {
                        summary.pass += 1;
                    } else {
                        summary.fail += 1;
                    }
                    entries.push(entry);
                }
            }
        }
    }
    Ok(SweepReport {
        max_d,
        entries,
        summary,
    })
}

// ---------------------------------------------------------------------------
// exhaustive enumeration

/// Exact number of connected labeled graphs on `n` vertices, by the
/// standard subtraction recurrence over the component containing vertex 1.
/// Serves as an independent tally for the enumerator.
pub fn connected_graph_count(n: usize) -> u64 {
    assert!((1..=11).contains(&n), "count overflows beyond n = 11");
    fn choose(n: u64, k: u64) -> u128 {
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        r
    }
    let mut total = vec![0u128; n + 1]; // all labeled graphs on k vertices
    for (k, t) in total.iter_mut().enumerate() {
        *t = 1u128 << (k * k.saturating_sub(1) / 2);
    }
    let mut conn = vec![0u128; n + 1];
    for k in 1..=n {
        let mut c = total[k];
        for s in 1..k {
            c -= choose(k as u64 - 1, s as u64 - 1) * conn[s] * total[k - s];
        }
        conn[k] = c;
    }
    conn[n] as u64
}

/// Iterator over every connected labeled graph on `n` vertices, produced by
/// edge-subset enumeration with a connectivity filter.
pub struct ConnectedGraphIter {
    n: usize,
    slots: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            if mask_connected(self.n, &self.slots, mask) {
                let edges = self
                    .slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                return Some(Graph::from_edges(self.n, edges, []).unwrap());
            }
        }
        None
    }
}

fn mask_connected(n: usize, slots: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in slots.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut seen: u64 = 1;
    let mut frontier: u64 = 1;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Yields every connected labeled graph on `n` vertices exactly once,
/// for `2 <= n <= 7`.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphIter, HarnessError> {
    if !(2..=7).contains(&n) {
        return Err(HarnessError::RangeTooLarge(n));
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let end = 1u64 << slots.len();
    Ok(ConnectedGraphIter {
        n,
        slots,
        mask: 0,
        end,
    })
}

// ---------------------------------------------------------------------------
// random graphs

/// Seeded Erdos-Renyi sampling with rejection until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2 && p > 0.0 && p <= 1.0);
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges, []).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

// ---------------------------------------------------------------------------
// lemma suite

/// The structural claims audited per graph by [`lemma_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaId {
    /// Cut vertices are redundant in every monitoring set containing them.
    CutVertexRedundancy,
    /// Simplicial vertices are forced into edge-covering and monitoring sets.
    SimplicialForcing,
    /// Twin members of positive degree are forced into monitoring sets.
    TwinForcing,
    /// A set monitors all edges iff every one-path-per-pair choice covers E.
    MonitorStrongEquivalence,
    /// The 4-cycle neighborhood test exactly characterizes forced vertices.
    FourCycleForcing,
    /// Vertices forced into edge-covering sets are forced into strong ones.
    EdgeForcingImpliesStrong,
    /// Vertices forced into strong sets are forced into monitoring sets.
    StrongForcingImpliesMonitor,
    /// Vertices forced into edge-covering sets are forced into monitoring sets.
    EdgeForcingImpliesMonitor,
}

impl LemmaId {
    pub const ALL: [LemmaId; 8] = [
        LemmaId::CutVertexRedundancy,
        LemmaId::SimplicialForcing,
        LemmaId::TwinForcing,
        LemmaId::MonitorStrongEquivalence,
        LemmaId::FourCycleForcing,
        LemmaId::EdgeForcingImpliesStrong,
        LemmaId::StrongForcingImpliesMonitor,
        LemmaId::EdgeForcingImpliesMonitor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::CutVertexRedundancy => "cut-vertex-redundancy",
            LemmaId::SimplicialForcing => "simplicial-forcing",
            LemmaId::TwinForcing => "twin-forcing",
            LemmaId::MonitorStrongEquivalence => "monitor-strong-equivalence",
            LemmaId::FourCycleForcing => "four-cycle-forcing",
            LemmaId::EdgeForcingImpliesStrong => "edge-forcing-implies-strong",
            LemmaId::StrongForcingImpliesMonitor => "strong-forcing-implies-monitor",
            LemmaId::EdgeForcingImpliesMonitor => "edge-forcing-implies-monitor",
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct LemmaVerdict {
    pub id: LemmaId,
    pub pass: bool,
    pub note: Option<String>,
}

/// Evaluates every structural claim on one connected graph using the
/// remove-one-vertex forcing oracle and the set predicates.
pub fn lemma_suite(g: &Graph) -> Vec<LemmaVerdict> {
    let n = g.vertex_count();
    assert!(n >= 2, "lemma suite requires at least 2 vertices");
    assert!(g.is_connected(), "lemma suite requires a connected graph");
    let tables = geodesic::geodesic_tables(g).expect("connected");
    let coverage = coverage_tables(g, &tables);
    let cap = SolverConfig::default().geodesic_cap;

    // forcing oracle: the complement of one vertex fails the predicate
    // exactly when that vertex belongs to every set of the kind
    let complement = |v: usize| -> Vec<usize> { (0..n).filter(|&u| u != v).collect() };
    let eg_forced =
        |v: usize| -> bool { !is_edge_geodetic_set(&coverage, &complement(v)) };
    let meg_forced = |v: usize| -> bool { !is_meg_set(&coverage, &complement(v)) };
    let strong_forced = |v: usize| -> bool {
        !matches!(
            solver::has_strong_assignment(g, &complement(v), cap),
            Ok(Some(_))
        )
    };

    let mut out = Vec::new();
    let mut push = |id: LemmaId, pass: bool, note: Option<String>| {
        out.push(LemmaVerdict { id, pass, note });
    };

    // cut vertices: redundant in every monitoring set containing them
    {
        let cuts = g.cut_vertices();
        let mut pass = true;
        let mut note = None;
        'outer: for &u in &cuts {
            for mask in 0u64..(1 << n) {
                if mask >> u & 1 == 0 || mask.count_ones() < 2 {
                    continue;
                }
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if !is_meg_set(&coverage, &set) {
                    continue;
                }
                let without: Vec<usize> = set.iter().copied().filter(|&v| v != u).collect();
                if !is_meg_set(&coverage, &without) {
                    pass = false;
                    note = Some(format!("cut vertex {u} essential in {set:?}"));
                    break 'outer;
                }
            }
        }
        push(LemmaId::CutVertexRedundancy, pass, note);
    }

    // simplicial vertices forced into edge-covering and monitoring sets
    {
        let mut pass = true;
        let mut note = None;
        for v in g.simplicial_vertices() {
            if !eg_forced(v) || !meg_forced(v) {
                pass = false;
                note = Some(format!("simplicial vertex {v} not forced"));
                break;
            }
        }
        push(LemmaId::SimplicialForcing, pass, note);
    }

    // twins of positive degree forced into monitoring sets
    {
        let mut pass = true;
        let mut note = None;
        for t in g.twin_pairs() {
            if g.degree(t.u) >= 1 && g.degree(t.v) >= 1 && (!meg_forced(t.u) || !meg_forced(t.v)) {
                pass = false;
                note = Some(format!("twin pair ({}, {}) not forced", t.u, t.v));
                break;
            }
        }
        push(LemmaId::TwinForcing, pass, note);
    }

    // a set monitors all edges iff every complete geodesic choice covers E
    {
        let (pass, note) = monitor_strong_equivalence(g, &coverage, &tables);
        push(LemmaId::MonitorStrongEquivalence, pass, note);
    }

    // the 4-cycle criterion is exactly the forcing oracle for monitoring
    {
        let mut pass = true;
        let mut note = None;
        for v in 0..n {
            let predicted = four_cycle_forced(g, v);
            let actual = meg_forced(v);
            if predicted != actual {
                pass = false;
                note = Some(format!(
                    "vertex {v}: criterion says {predicted}, oracle says {actual}"
                ));
                break;
            }
        }
        push(LemmaId::FourCycleForcing, pass, note);
    }

    // forcing propagation along the chain
    {
        let mut s_pass = true;
        let mut s_note = None;
        let mut m_pass = true;
        let mut m_note = None;
        let mut em_pass = true;
        let mut em_note = None;
        for v in 0..n {
            let e = eg_forced(v);
            let s = strong_forced(v);
            let m = meg_forced(v);
            if e && !s {
                s_pass = false;
                s_note = Some(format!("vertex {v} edge-forced but not strong-forced"));
            }
            if s && !m {
                m_pass = false;
                m_note = Some(format!("vertex {v} strong-forced but not monitor-forced"));
            }
            if e && !m {
                em_pass = false;
                em_note = Some(format!("vertex {v} edge-forced but not monitor-forced"));
            }
        }
        push(LemmaId::EdgeForcingImpliesStrong, s_pass, s_note);
        push(LemmaId::StrongForcingImpliesMonitor, m_pass, m_note);
        push(LemmaId::EdgeForcingImpliesMonitor, em_pass, em_note);
    }

    out
}

/// Checks, for every subset of up to 4 vertices, that the monitoring
/// predicate agrees with "every complete assignment of one geodesic per
/// pair covers all edges", by enumerating the assignments outright.
fn monitor_strong_equivalence(
    g: &Graph,
    coverage: &crate::geodesic::CoverageTables,
    tables: &crate::geodesic::GeodesicTables,
) -> (bool, Option<String>) {
    const ASSIGNMENT_CAP: u128 = 1_000_000;
    let n = g.vertex_count();
    let m = g.edge_count();
    let verts: Vec<usize> = (0..n).collect();
    for size in 2..=n.min(4) {
        for set in combinations(&verts, size) {
            // gather per-pair geodesic edge sets
            let mut per_pair: Vec<Vec<crate::bits::Bitset>> = Vec::new();
            let mut total: u128 = 1;
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    let list = geodesic::enumerate_geodesics(g, tables, u, v, 100_000);
                    assert!(!list.truncated, "assignment oracle hit the geodesic cap");
                    let sets: Vec<crate::bits::Bitset> = list
                        .paths
                        .iter()
                        .map(|p| {
                            let mut b = crate::bits::Bitset::new(m);
                            for w in p.windows(2) {
                                b.insert(g.edge_index(w[0], w[1]).unwrap());
                            }
                            b
                        })
                        .collect();
                    total = total.saturating_mul(sets.len() as u128);
                    per_pair.push(sets);
                }
            }
            if total > ASSIGNMENT_CAP {
                return (
                    true,
                    Some(format!("subset {set:?} skipped: {total} assignments")),
                );
            }
            let full = crate::bits::Bitset::full(m);
            let mut all_cover = true;
            let mut idx = vec![0usize; per_pair.len()];
            'assignments: loop {
                let mut covered = crate::bits::Bitset::new(m);
                for (pi, sets) in per_pair.iter().enumerate() {
                    covered.union_with(&sets[idx[pi]]);
                }
                if !covered.is_superset(&full) {
                    all_cover = false;
                    break 'assignments;
                }
                // advance mixed-radix counter
                let mut pos = 0;
                loop {
                    if pos == per_pair.len() {
                        break 'assignments;
                    }
                    idx[pos] += 1;
                    if idx[pos] < per_pair[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
            let is_monitor = is_meg_set(coverage, &set);
            if is_monitor != all_cover {
                return (
                    false,
                    Some(format!(
                        "subset {set:?}: monitor predicate {is_monitor}, assignment oracle {all_cover}"
                    )),
                );
            }
        }
    }
    (true, None)
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    items.iter().copied().combinations(size).collect()
}

// ---------------------------------------------------------------------------
// impossibility scan

/// Scans every connected labeled graph on `n` vertices for the two
/// provably-impossible parameter patterns: `(g, eg, seg) = (2, 2, 2)` with
/// `meg > 2`, and `(g, eg, seg) = (2, 3, 3)`. Returns the number of graphs
/// scanned and any violating edge lists (expected: none).
pub fn impossible_quadruple_scan(n: usize) -> Result<(u64, Vec<Graph>), HarnessError> {
    let cap = SolverConfig::default().geodesic_cap;
    let mut scanned = 0;
    let mut violations = Vec::new();
    for g in enumerate_connected_graphs(n)? {
        scanned += 1;
        let tables = geodesic::geodesic_tables(&g).expect("connected");
        let coverage = coverage_tables(&g, &tables);
        let verts: Vec<usize> = (0..n).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();

        // every parameter is at least 2, so the three patterns reduce to
        // existence checks over pairs and 3-sets
        let g_is_2 = pairs.iter().any(|&(u, v)| is_geodetic_set(&coverage, &[u, v]));
        if !g_is_2 {
            continue;
        }
        let seg_is_2 = pairs.iter().any(|&(u, v)| {
            if !is_edge_geodetic_set(&coverage, &[u, v]) {
                return false;
            }
            let list = geodesic::enumerate_geodesics(&g, &tables, u, v, 100_000);
            assert!(!list.truncated);
            list.paths.iter().any(|p| p.len() == g.edge_count() + 1)
        });
        if seg_is_2 {
            // a single geodesic carries every edge; the monitoring number
            // must collapse to 2 as well
            let meg_is_2 = pairs.iter().any(|&(u, v)| is_meg_set(&coverage, &[u, v]));
            if !meg_is_2 {
                violations.push(g.clone());
            }
            continue;
        }

        // remaining pattern: eg = 3 together with seg = 3
        let eg_is_2 = pairs
            .iter()
            .any(|&(u, v)| is_edge_geodetic_set(&coverage, &[u, v]));
        if eg_is_2 {
            continue;
        }
        for set in combinations(&verts, 3) {
            if !is_edge_geodetic_set(&coverage, &set) {
                continue;
            }
            // eg = 3 here; a strong assignment would exhibit seg = 3
            if matches!(solver::has_strong_assignment(&g, &set, cap), Ok(Some(_))) {
                violations.push(g.clone());
                break;
            }
        }
    }
    Ok((scanned, violations))
}
