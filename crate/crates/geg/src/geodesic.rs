//! Shortest-path tables and per-pair coverage predicates.
//!
//! Everything the four parameter solvers consume is precomputed here: hop
//! distances, shortest-path counts, and three bitmaps per vertex pair
//! (vertices on some geodesic, edges on some geodesic, edges on every
//! geodesic). The monitoring predicate additionally has an independent
//! edge-deletion oracle so the two routes can be checked against each other.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bits::Bitset;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeodesicError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("shortest-path count overflowed 128 bits")]
    CountOverflow,
}

/// All-pairs hop distances and shortest-path counts.
#[derive(Clone, Debug)]
pub struct GeodesicTables {
    n: usize,
    dist: Vec<u32>,
    sigma: Vec<u128>,
}

impl GeodesicTables {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Number of distinct shortest u-v paths.
    pub fn sigma(&self, u: usize, v: usize) -> u128 {
        self.sigma[u * self.n + v]
    }
}

/// BFS from every source with path counting. Requires a connected graph.
pub fn geodesic_tables(g: &Graph) -> Result<GeodesicTables, GeodesicError> {
    if !g.is_connected() {
        return Err(GeodesicError::Disconnected);
    }
    let n = g.vertex_count();
    let mut dist = vec![0u32; n * n];
    let mut sigma = vec![0u128; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let d = &mut dist[s * n..(s + 1) * n];
        let c = &mut sigma[s * n..(s + 1) * n];
        let mut seen = vec![false; n];
        seen[s] = true;
        c[s] = 1;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
                if w != s && d[w] == d[v] + 1 {
                    c[w] = c[w].checked_add(c[v]).ok_or(GeodesicError::CountOverflow)?;
                }
            }
        }
    }
    Ok(GeodesicTables { n, dist, sigma })
}

/// True iff `x` lies on some shortest u-v path.
pub fn vertex_on_some_geodesic(t: &GeodesicTables, u: usize, v: usize, x: usize) -> bool {
    t.dist(u, x) + t.dist(x, v) == t.dist(u, v)
}

/// True iff edge `{x, y}` lies on some shortest u-v path.
pub fn edge_on_some_geodesic(t: &GeodesicTables, u: usize, v: usize, (x, y): (usize, usize)) -> bool {
    t.dist(u, x) + 1 + t.dist(y, v) == t.dist(u, v)
        || t.dist(u, y) + 1 + t.dist(x, v) == t.dist(u, v)
}

/// True iff edge `{x, y}` lies on *every* shortest u-v path, decided through
/// path counts: the number of u-v geodesics through the edge must equal
/// sigma(u, v). At most one orientation of the edge can sit on a geodesic.
pub fn edge_monitored_by(t: &GeodesicTables, u: usize, v: usize, (x, y): (usize, usize)) -> bool {
    debug_assert_ne!(u, v);
    let total = t.sigma(u, v);
    let through = if t.dist(u, x) + 1 + t.dist(y, v) == t.dist(u, v) {
        t.sigma(u, x) * t.sigma(y, v)
    } else if t.dist(u, y) + 1 + t.dist(x, v) == t.dist(u, v) {
        t.sigma(u, y) * t.sigma(x, v)
    } else {
        0
    };
    through == total
}

/// Independent oracle for the monitoring predicate: deleting the edge must
/// strictly increase the u-v distance (disconnection counts as an increase).
pub fn edge_monitored_by_deletion(g: &Graph, u: usize, v: usize, (x, y): (usize, usize)) -> bool {
    debug_assert!(g.has_edge(x, y));
    let base = bfs_dist_avoiding(g, u, v, None);
    let cut = bfs_dist_avoiding(g, u, v, Some((x, y)));
    match (base, cut) {
        (Some(b), Some(c)) => c > b,
        (Some(_), None) => true,
        // u and v disconnected even before deletion: nothing to monitor
        (None, _) => false,
    }
}

fn bfs_dist_avoiding(g: &Graph, from: usize, to: usize, skip: Option<(usize, usize)>) -> Option<u32> {
    if from == to {
        return Some(0);
    }
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if let Some((a, b)) = skip {
                if (v == a && w == b) || (v == b && w == a) {
                    continue;
                }
            }
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                if w == to {
                    return Some(dist[w]);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Per-pair coverage bitmaps, pre-computed once per graph.
#[derive(Clone, Debug)]
pub struct CoverageTables {
    n: usize,
    edge_count: usize,
    vertex_cover: Vec<Bitset>,
    edge_cover: Vec<Bitset>,
    monitor_cover: Vec<Bitset>,
}

impl CoverageTables {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Index of the unordered pair `{u, v}` in the flat pair tables.
    pub fn pair_index(&self, u: usize, v: usize) -> usize {
        pair_index(self.n, u, v)
    }

    /// Vertices lying on some u-v geodesic.
    pub fn vertex_cover(&self, u: usize, v: usize) -> &Bitset {
        &self.vertex_cover[self.pair_index(u, v)]
    }

    /// Edges lying on some u-v geodesic.
    pub fn edge_cover(&self, u: usize, v: usize) -> &Bitset {
        &self.edge_cover[self.pair_index(u, v)]
    }

    /// Edges lying on every u-v geodesic.
    pub fn monitor_cover(&self, u: usize, v: usize) -> &Bitset {
        &self.monitor_cover[self.pair_index(u, v)]
    }
}

pub(crate) fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < n && v < n);
    let (a, b) = (u.min(v), u.max(v));
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Builds the three coverage tables for every unordered vertex pair.
pub fn coverage_tables(g: &Graph, t: &GeodesicTables) -> CoverageTables {
    let n = g.vertex_count();
    let m = g.edge_count();
    let pairs = n * (n - 1) / 2;
    let mut vertex_cover = Vec::with_capacity(pairs);
    let mut edge_cover = Vec::with_capacity(pairs);
    let mut monitor_cover = Vec::with_capacity(pairs);
    for u in 0..n {
        for v in u + 1..n {
            let mut vc = Bitset::new(n);
            for x in 0..n {
                if vertex_on_some_geodesic(t, u, v, x) {
                    vc.insert(x);
                }
            }
            let mut ec = Bitset::new(m);
            let mut mc = Bitset::new(m);
            for (ei, &e) in g.edges().iter().enumerate() {
                if edge_on_some_geodesic(t, u, v, e) {
                    ec.insert(ei);
                    if edge_monitored_by(t, u, v, e) {
                        mc.insert(ei);
                    }
                }
            }
            vertex_cover.push(vc);
            edge_cover.push(ec);
            monitor_cover.push(mc);
        }
    }
    CoverageTables {
        n,
        edge_count: m,
        vertex_cover,
        edge_cover,
        monitor_cover,
    }
}

/// Shortest paths of one pair, in lexicographic vertex order.
#[derive(Clone, Debug)]
pub struct GeodesicList {
    pub u: usize,
    pub v: usize,
    pub paths: Vec<Vec<usize>>,
    /// Set when the enumeration cap was hit; `paths` is then a prefix.
    pub truncated: bool,
}

/// Enumerates all shortest u-v paths by walking the shortest-path DAG
/// (only steps that strictly approach `v` along geodesics are taken), in
/// lexicographic order, stopping at `cap` paths.
pub fn enumerate_geodesics(
    g: &Graph,
    t: &GeodesicTables,
    u: usize,
    v: usize,
    cap: usize,
) -> GeodesicList {
    assert_ne!(u, v);
    assert!(cap > 0);
    let mut out = GeodesicList {
        u,
        v,
        paths: Vec::new(),
        truncated: false,
    };
    let mut current = vec![u];
    walk_dag(g, t, v, &mut current, cap, &mut out);
    out
}

fn walk_dag(
    g: &Graph,
    t: &GeodesicTables,
    target: usize,
    current: &mut Vec<usize>,
    cap: usize,
    out: &mut GeodesicList,
) {
    let head = *current.last().unwrap();
    if head == target {
        if out.paths.len() == cap {
            out.truncated = true;
            return;
        }
        out.paths.push(current.clone());
        return;
    }
    for &w in g.neighbors(head) {
        if out.truncated {
            return;
        }
        // stay on a geodesic: one step closer to the target
        if t.dist(out.u, w) == t.dist(out.u, head) + 1
            && t.dist(w, target) + t.dist(out.u, w) == t.dist(out.u, target)
        {
            current.push(w);
            walk_dag(g, t, target, current, cap, out);
            current.pop();
        }
    }
}
