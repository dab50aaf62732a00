//! Exact solvers for the four monitoring parameters.
//!
//! Each parameter is the minimum size of a vertex set subject to a coverage
//! predicate over the precomputed tables. The search is plain size-ordered
//! subset enumeration over a reduced universe: structurally forced vertices
//! are pinned into every candidate and (for the monitoring parameter) cut
//! vertices are excluded. Ties between equal-size optima are broken toward
//! the lexicographically smallest vertex-index set, so results are
//! deterministic. Turning `use_lemma_pruning` off disables every reduction
//! and serves as the self-check oracle.

use std::collections::HashMap;
use std::rc::Rc;

use itertools::Itertools;
use thiserror::Error;

use crate::bits::Bitset;
use crate::geodesic::{
    self, coverage_tables, edge_monitored_by, edge_on_some_geodesic, enumerate_geodesics,
    CoverageTables, GeodesicError, GeodesicTables,
};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Geodetic,
    EdgeGeodetic,
    StrongEdgeGeodetic,
    MonitoringEdgeGeodetic,
}

impl ParamKind {
    pub const ALL: [ParamKind; 4] = [
        ParamKind::Geodetic,
        ParamKind::EdgeGeodetic,
        ParamKind::StrongEdgeGeodetic,
        ParamKind::MonitoringEdgeGeodetic,
    ];

    /// Short conventional name: g, eg, seg or meg.
    pub fn short_name(self) -> &'static str {
        match self {
            ParamKind::Geodetic => "g",
            ParamKind::EdgeGeodetic => "eg",
            ParamKind::StrongEdgeGeodetic => "seg",
            ParamKind::MonitoringEdgeGeodetic => "meg",
        }
    }
}

impl std::fmt::Display for ParamKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Tie-break rule among equal-size optima. There is exactly one supported
/// rule; it is spelled out so configurations are self-describing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SubsetOrder {
    #[default]
    Lexicographic,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Pin forced vertices and drop excluded ones before searching. Never
    /// changes results, only speed; `false` is the self-check oracle mode.
    pub use_lemma_pruning: bool,
    /// Per-pair cap on geodesic enumeration; exceeding it during a strong
    /// edge-geodetic check is a hard error, never a silent degradation.
    pub geodesic_cap: usize,
    pub subset_order: SubsetOrder,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            use_lemma_pruning: true,
            geodesic_cap: 100_000,
            subset_order: SubsetOrder::Lexicographic,
        }
    }
}

impl SolverConfig {
    pub fn unpruned() -> Self {
        SolverConfig {
            use_lemma_pruning: false,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("solvers require at least 2 vertices")]
    GraphTooSmall,
    #[error("geodesic enumeration cap exceeded for pair ({0}, {1})")]
    EnumerationCapExceeded(usize, usize),
    #[error("shortest-path count overflowed 128 bits")]
    CountOverflow,
    #[error("solver bug: chain g <= eg <= seg <= meg violated by {0:?}")]
    ChainViolation((usize, usize, usize, usize)),
}

impl From<GeodesicError> for SolverError {
    fn from(e: GeodesicError) -> Self {
        match e {
            GeodesicError::Disconnected => SolverError::Disconnected,
            GeodesicError::CountOverflow => SolverError::CountOverflow,
        }
    }
}

/// One chosen geodesic per unordered pair of the set, keyed by pair.
pub type StrongAssignment = Vec<((usize, usize), Vec<usize>)>;

/// Per-parameter witness data attached to an optimal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The set itself is the whole story.
    Geodetic,
    /// For every edge, a set pair with some geodesic through that edge.
    EdgeGeodetic(Vec<((usize, usize), (usize, usize))>),
    /// A full assignment pair -> chosen shortest path whose union covers E.
    Strong(StrongAssignment),
    /// For every edge, a set pair all of whose geodesics use that edge.
    Monitoring(Vec<((usize, usize), (usize, usize))>),
}

/// An optimal vertex set for one parameter, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ParamKind,
    /// Sorted vertex indices; its length is the parameter value.
    pub set: Vec<usize>,
    pub witness: Witness,
}

impl Certificate {
    pub fn value(&self) -> usize {
        self.set.len()
    }
}

/// The four minima of one graph, computed over shared tables.
#[derive(Debug, Clone)]
pub struct QuadrupleResult {
    pub geodetic: Certificate,
    pub edge_geodetic: Certificate,
    pub strong_edge_geodetic: Certificate,
    pub monitoring_edge_geodetic: Certificate,
}

impl QuadrupleResult {
    pub fn values(&self) -> (usize, usize, usize, usize) {
        (
            self.geodetic.value(),
            self.edge_geodetic.value(),
            self.strong_edge_geodetic.value(),
            self.monitoring_edge_geodetic.value(),
        )
    }

    pub fn certificate(&self, kind: ParamKind) -> &Certificate {
        match kind {
            ParamKind::Geodetic => &self.geodetic,
            ParamKind::EdgeGeodetic => &self.edge_geodetic,
            ParamKind::StrongEdgeGeodetic => &self.strong_edge_geodetic,
            ParamKind::MonitoringEdgeGeodetic => &self.monitoring_edge_geodetic,
        }
    }
}

// ---------------------------------------------------------------------------
// set predicates

/// True iff the union of vertex coverage over all pairs of `set` is V.
pub fn is_geodetic_set(ct: &CoverageTables, set: &[usize]) -> bool {
    let mut acc = Bitset::new(ct.vertex_count());
    let full = Bitset::full(ct.vertex_count());
    for_pairs(set, |u, v| {
        acc.union_with(ct.vertex_cover(u, v));
        !acc.is_superset(&full)
    });
    acc.is_superset(&full)
}

/// True iff the union of edge coverage over all pairs of `set` is E.
pub fn is_edge_geodetic_set(ct: &CoverageTables, set: &[usize]) -> bool {
    let mut acc = Bitset::new(ct.edge_count());
    let full = Bitset::full(ct.edge_count());
    for_pairs(set, |u, v| {
        acc.union_with(ct.edge_cover(u, v));
        !acc.is_superset(&full)
    });
    acc.is_superset(&full)
}

/// True iff every edge is monitored by some pair of `set`.
pub fn is_meg_set(ct: &CoverageTables, set: &[usize]) -> bool {
    let mut acc = Bitset::new(ct.edge_count());
    let full = Bitset::full(ct.edge_count());
    for_pairs(set, |u, v| {
        acc.union_with(ct.monitor_cover(u, v));
        !acc.is_superset(&full)
    });
    acc.is_superset(&full)
}

/// Calls `f(u, v)` for each unordered pair while `f` returns true.
fn for_pairs(set: &[usize], mut f: impl FnMut(usize, usize) -> bool) {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if !f(u, v) {
                return;
            }
        }
    }
}

/// Searches for an assignment of one geodesic per unordered pair of `set`
/// whose union covers every edge. Exhaustive backtracking over pairs in
/// ascending order of geodesic count; a branch is pruned as soon as the
/// edges covered so far plus everything the unassigned pairs could still
/// contribute no longer reach E.
pub fn has_strong_assignment(
    g: &Graph,
    set: &[usize],
    geodesic_cap: usize,
) -> Result<Option<StrongAssignment>, SolverError> {
    let tables = geodesic::geodesic_tables(g)?;
    let mut memo = PairPathMemo::default();
    strong_assignment_with(g, &tables, set, geodesic_cap, &mut memo)
}

#[derive(Default)]
struct PairPathMemo {
    map: HashMap<(usize, usize), Rc<PairPaths>>,
}

struct PairPaths {
    pair: (usize, usize),
    paths: Vec<Vec<usize>>,
    edge_sets: Vec<Bitset>,
    all_edges: Bitset,
    truncated: bool,
}

impl PairPathMemo {
    fn get(
        &mut self,
        g: &Graph,
        t: &GeodesicTables,
        u: usize,
        v: usize,
        cap: usize,
    ) -> Rc<PairPaths> {
        let key = (u.min(v), u.max(v));
        if let Some(p) = self.map.get(&key) {
            return Rc::clone(p);
        }
        let list = enumerate_geodesics(g, t, key.0, key.1, cap);
        let m = g.edge_count();
        let mut edge_sets = Vec::with_capacity(list.paths.len());
        let mut all_edges = Bitset::new(m);
        for path in &list.paths {
            let mut set = Bitset::new(m);
            for w in path.windows(2) {
                set.insert(g.edge_index(w[0], w[1]).expect("geodesic step is an edge"));
            }
            all_edges.union_with(&set);
            edge_sets.push(set);
        }
        let entry = Rc::new(PairPaths {
            pair: key,
            paths: list.paths,
            edge_sets,
            all_edges,
            truncated: list.truncated,
        });
        self.map.insert(key, Rc::clone(&entry));
        entry
    }
}

fn strong_assignment_with(
    g: &Graph,
    t: &GeodesicTables,
    set: &[usize],
    cap: usize,
    memo: &mut PairPathMemo,
) -> Result<Option<StrongAssignment>, SolverError> {
    let mut pairs = Vec::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            let p = memo.get(g, t, u, v, cap);
            if p.truncated {
                return Err(SolverError::EnumerationCapExceeded(p.pair.0, p.pair.1));
            }
            pairs.push(p);
        }
    }
    pairs.sort_by_key(|p| (p.paths.len(), p.pair));

    let m = g.edge_count();
    let full = Bitset::full(m);
    // what the pairs from position i onward could still cover, all choices taken together
    let mut suffix = vec![Bitset::new(m); pairs.len() + 1];
    for i in (0..pairs.len()).rev() {
        suffix[i] = suffix[i + 1].clone();
        suffix[i].union_with(&pairs[i].all_edges);
    }

    let mut chosen = vec![0usize; pairs.len()];
    if !backtrack(&pairs, &suffix, &full, 0, &Bitset::new(m), &mut chosen) {
        return Ok(None);
    }
    let mut assignment: StrongAssignment = pairs
        .iter()
        .zip(&chosen)
        .map(|(p, &idx)| (p.pair, p.paths[idx].clone()))
        .collect();
    assignment.sort_by_key(|(pair, _)| *pair);
    Ok(Some(assignment))
}

fn backtrack(
    pairs: &[Rc<PairPaths>],
    suffix: &[Bitset],
    full: &Bitset,
    i: usize,
    covered: &Bitset,
    chosen: &mut [usize],
) -> bool {
    if covered.is_superset(full) {
        // any choice for the remaining pairs keeps the union complete; take
        // the first path of each, which is what plain DFS would settle on
        for j in i..pairs.len() {
            chosen[j] = 0;
        }
        return true;
    }
    if i == pairs.len() {
        return false;
    }
    let mut reach = covered.clone();
    reach.union_with(&suffix[i]);
    if !reach.is_superset(full) {
        return false;
    }
    for (idx, edges) in pairs[i].edge_sets.iter().enumerate() {
        let mut next = covered.clone();
        next.union_with(edges);
        chosen[i] = idx;
        if backtrack(pairs, suffix, full, i + 1, &next, chosen) {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// forced / excluded vertices

/// Vertices that provably belong to every set of the given kind:
/// pendants for the geodetic parameter, simplicial vertices for the two
/// edge-covering parameters, and for the monitoring parameter additionally
/// twin members and vertices passing the 4-cycle neighborhood test
/// (some neighbor u such that every induced 2-path u-v-x closes into a
/// 4-cycle).
pub fn forced_vertices(g: &Graph, kind: ParamKind) -> Vec<usize> {
    match kind {
        ParamKind::Geodetic => g.pendant_vertices(),
        ParamKind::EdgeGeodetic | ParamKind::StrongEdgeGeodetic => g.simplicial_vertices(),
        ParamKind::MonitoringEdgeGeodetic => {
            let n = g.vertex_count();
            let mut forced = vec![false; n];
            for v in g.simplicial_vertices() {
                forced[v] = true;
            }
            for t in g.twin_pairs() {
                if g.degree(t.u) >= 1 {
                    forced[t.u] = true;
                }
                if g.degree(t.v) >= 1 {
                    forced[t.v] = true;
                }
            }
            for v in 0..n {
                if !forced[v] && four_cycle_forced(g, v) {
                    forced[v] = true;
                }
            }
            (0..n).filter(|&v| forced[v]).collect()
        }
    }
}

/// The 4-cycle forcing test: some u in N(v) such that every x in N(v)
/// that is not u and not adjacent to u shares with u a neighbor other
/// than v.
pub(crate) fn four_cycle_forced(g: &Graph, v: usize) -> bool {
    g.neighbors(v).iter().any(|&u| {
        g.neighbors(v).iter().all(|&x| {
            x == u
                || g.has_edge(u, x)
                || g.neighbors(u)
                    .iter()
                    .any(|&t| t != v && g.has_edge(t, x))
        })
    })
}

/// Vertices that can never appear in a minimal set of the given kind:
/// cut vertices for the monitoring parameter, nothing for the others.
pub fn excluded_vertices(g: &Graph, kind: ParamKind) -> Vec<usize> {
    match kind {
        ParamKind::MonitoringEdgeGeodetic => g.cut_vertices(),
        _ => Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// minimum search

struct Ctx<'g> {
    g: &'g Graph,
    tables: GeodesicTables,
    coverage: CoverageTables,
    cfg: SolverConfig,
    memo: PairPathMemo,
}

impl<'g> Ctx<'g> {
    fn new(g: &'g Graph, cfg: &SolverConfig) -> Result<Self, SolverError> {
        if g.vertex_count() < 2 {
            return Err(SolverError::GraphTooSmall);
        }
        let tables = geodesic::geodesic_tables(g)?;
        let coverage = coverage_tables(g, &tables);
        Ok(Ctx {
            g,
            tables,
            coverage,
            cfg: cfg.clone(),
            memo: PairPathMemo::default(),
        })
    }

    /// Size-ordered search for the lexicographically smallest optimal set.
    /// `lower_bound` lets the caller skip sizes ruled out by the chain.
    fn minimum(&mut self, kind: ParamKind, lower_bound: usize) -> Result<Certificate, SolverError> {
        let n = self.g.vertex_count();
        let (forced, excluded) = if self.cfg.use_lemma_pruning {
            (forced_vertices(self.g, kind), excluded_vertices(self.g, kind))
        } else {
            (Vec::new(), Vec::new())
        };
        debug_assert!(
            forced.iter().all(|v| !excluded.contains(v)),
            "a vertex cannot be both forced and excluded"
        );
        let free: Vec<usize> = (0..n)
            .filter(|v| !forced.contains(v) && !excluded.contains(v))
            .collect();
        let universe_len = forced.len() + free.len();

        let k_start = lower_bound.max(2).max(forced.len());
        for k in k_start..=universe_len {
            let pick = k - forced.len();
            if pick > free.len() {
                break;
            }
            for combo in free.iter().copied().combinations(pick) {
                let candidate = merge_sorted(&forced, &combo);
                if let Some(witness) = self.check_candidate(kind, &candidate)? {
                    return Ok(Certificate {
                        kind,
                        set: candidate,
                        witness,
                    });
                }
            }
        }
        // a connected graph always admits V itself (and V minus its cut
        // vertices for the monitoring kind), so the search cannot fall out
        unreachable!("no {kind} set found; forced/excluded reduction is unsound")
    }

    fn check_candidate(
        &mut self,
        kind: ParamKind,
        set: &[usize],
    ) -> Result<Option<Witness>, SolverError> {
        match kind {
            ParamKind::Geodetic => {
                Ok(is_geodetic_set(&self.coverage, set).then_some(Witness::Geodetic))
            }
            ParamKind::EdgeGeodetic => {
                if !is_edge_geodetic_set(&self.coverage, set) {
                    return Ok(None);
                }
                Ok(Some(Witness::EdgeGeodetic(self.edge_witnesses(set, false))))
            }
            ParamKind::MonitoringEdgeGeodetic => {
                if !is_meg_set(&self.coverage, set) {
                    return Ok(None);
                }
                Ok(Some(Witness::Monitoring(self.edge_witnesses(set, true))))
            }
            ParamKind::StrongEdgeGeodetic => {
                // covering all edges with every geodesic available is a
                // cheap necessary condition for a one-path-per-pair cover
                if !is_edge_geodetic_set(&self.coverage, set) {
                    return Ok(None);
                }
                let assignment = strong_assignment_with(
                    self.g,
                    &self.tables,
                    set,
                    self.cfg.geodesic_cap,
                    &mut self.memo,
                )?;
                Ok(assignment.map(Witness::Strong))
            }
        }
    }

    /// For each edge (ascending), the first set pair that covers (or, with
    /// `monitoring`, monitors) it.
    fn edge_witnesses(&self, set: &[usize], monitoring: bool) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::with_capacity(self.g.edge_count());
        for (ei, &edge) in self.g.edges().iter().enumerate() {
            let mut found = None;
            'search: for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    let hit = if monitoring {
                        self.coverage.monitor_cover(u, v).contains(ei)
                    } else {
                        self.coverage.edge_cover(u, v).contains(ei)
                    };
                    if hit {
                        found = Some((u, v));
                        break 'search;
                    }
                }
            }
            out.push((edge, found.expect("validated set covers every edge")));
        }
        out
    }
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Minimum certificate for one parameter of a connected graph on >= 2
/// vertices. Within equal cardinality the lexicographically smallest
/// qualifying set is returned.
pub fn minimum(g: &Graph, kind: ParamKind, cfg: &SolverConfig) -> Result<Certificate, SolverError> {
    Ctx::new(g, cfg)?.minimum(kind, 2)
}

/// All four minima over shared tables. The chain g <= eg <= seg <= meg is
/// asserted before returning; a violation signals a solver bug, never valid
/// output. With pruning enabled each value seeds the next search's lower
/// bound, which the chain makes free.
pub fn quadruple(g: &Graph, cfg: &SolverConfig) -> Result<QuadrupleResult, SolverError> {
    let mut ctx = Ctx::new(g, cfg)?;
    let seed = |prev: usize| if cfg.use_lemma_pruning { prev } else { 2 };

    let geodetic = ctx.minimum(ParamKind::Geodetic, 2)?;
    let edge_geodetic = ctx.minimum(ParamKind::EdgeGeodetic, seed(geodetic.value()))?;
    let strong = ctx.minimum(ParamKind::StrongEdgeGeodetic, seed(edge_geodetic.value()))?;
    let monitoring = ctx.minimum(ParamKind::MonitoringEdgeGeodetic, seed(strong.value()))?;

    let values = (
        geodetic.value(),
        edge_geodetic.value(),
        strong.value(),
        monitoring.value(),
    );
    if !(values.0 <= values.1 && values.1 <= values.2 && values.2 <= values.3) {
        return Err(SolverError::ChainViolation(values));
    }
    Ok(QuadrupleResult {
        geodetic,
        edge_geodetic,
        strong_edge_geodetic: strong,
        monitoring_edge_geodetic: monitoring,
    })
}

/// Re-checks a certificate against a graph from scratch: the set must
/// satisfy its predicate and every witness entry must re-validate against
/// the geodesic predicates.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<(), String> {
    let n = g.vertex_count();
    let set = &cert.set;
    if set.len() < 2 {
        return Err("certificate set has fewer than 2 vertices".into());
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err("certificate set is not sorted and distinct".into());
    }
    if set.iter().any(|&v| v >= n) {
        return Err("certificate set contains an out-of-range vertex".into());
    }
    let tables = geodesic::geodesic_tables(g).map_err(|e| e.to_string())?;
    let coverage = coverage_tables(g, &tables);
    let in_set = |v: usize| set.binary_search(&v).is_ok();

    let check_edge_witnesses = |wits: &Vec<((usize, usize), (usize, usize))>,
                                monitoring: bool|
     -> Result<(), String> {
        let mut seen = Bitset::new(g.edge_count());
        for &((x, y), (u, v)) in wits {
            let ei = g
                .edge_index(x, y)
                .ok_or_else(|| format!("witness edge ({x}, {y}) is not a graph edge"))?;
            if !in_set(u) || !in_set(v) || u == v {
                return Err(format!("witness pair ({u}, {v}) is not a set pair"));
            }
            let ok = if monitoring {
                edge_monitored_by(&tables, u, v, (x, y))
            } else {
                edge_on_some_geodesic(&tables, u, v, (x, y))
            };
            if !ok {
                return Err(format!("pair ({u}, {v}) does not witness edge ({x}, {y})"));
            }
            seen.insert(ei);
        }
        if seen.count() != g.edge_count() {
            return Err("witness does not cover every edge".into());
        }
        Ok(())
    };

    match (&cert.kind, &cert.witness) {
        (ParamKind::Geodetic, Witness::Geodetic) => {
            if !is_geodetic_set(&coverage, set) {
                return Err("set is not a geodetic set".into());
            }
        }
        (ParamKind::EdgeGeodetic, Witness::EdgeGeodetic(wits)) => {
            if !is_edge_geodetic_set(&coverage, set) {
                return Err("set is not an edge-geodetic set".into());
            }
            check_edge_witnesses(wits, false)?;
        }
        (ParamKind::MonitoringEdgeGeodetic, Witness::Monitoring(wits)) => {
            if !is_meg_set(&coverage, set) {
                return Err("set is not a monitoring edge-geodetic set".into());
            }
            check_edge_witnesses(wits, true)?;
        }
        (ParamKind::StrongEdgeGeodetic, Witness::Strong(assignment)) => {
            let mut expected = Vec::new();
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    expected.push((u, v));
                }
            }
            let got: Vec<(usize, usize)> = assignment.iter().map(|(p, _)| *p).collect();
            let mut sorted = got.clone();
            sorted.sort_unstable();
            if sorted != expected {
                return Err("assignment does not cover exactly the set pairs".into());
            }
            let mut covered = Bitset::new(g.edge_count());
            for ((u, v), path) in assignment {
                if path.first() != Some(u) || path.last() != Some(v) {
                    return Err(format!("path for pair ({u}, {v}) has wrong endpoints"));
                }
                if path.len() as u32 != tables.dist(*u, *v) + 1 {
                    return Err(format!("path for pair ({u}, {v}) is not shortest"));
                }
                for w in path.windows(2) {
                    match g.edge_index(w[0], w[1]) {
                        Some(ei) => covered.insert(ei),
                        None => return Err(format!("path step ({}, {}) is not an edge", w[0], w[1])),
                    }
                }
            }
            if covered.count() != g.edge_count() {
                return Err("chosen paths do not cover every edge".into());
            }
        }
        _ => return Err("witness variant does not match certificate kind".into()),
    }
    Ok(())
}
