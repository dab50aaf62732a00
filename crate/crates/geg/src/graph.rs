//! Immutable simple undirected graphs with optional vertex labels, plus the
//! structural detectors (cut, pendant, simplicial, twin vertices) the solvers
//! build on.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) out of range for {2} vertices")]
    OutOfRange(usize, usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("label {0:?} used for more than one vertex")]
    DuplicateLabel(String),
    #[error("label for out-of-range vertex {0}")]
    LabelOutOfRange(usize),
}

/// An immutable simple undirected graph over vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and lexicographically sorted, so
/// edge indices are stable and builders are deterministic. Labels are an
/// optional side table; unlabeled vertices print as their index.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Validates and builds a graph. Self-loops, out-of-range endpoints and
    /// duplicate unordered pairs are rejected, not silently dropped.
    pub fn from_edges(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
        labels: impl IntoIterator<Item = (usize, String)>,
    ) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::OutOfRange(a, b, n));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut label_map = BTreeMap::new();
        let mut seen = BTreeMap::new();
        for (v, label) in labels {
            if v >= n {
                return Err(GraphError::LabelOutOfRange(v));
            }
            if let Some(prev) = seen.insert(label.clone(), v) {
                if prev != v {
                    return Err(GraphError::DuplicateLabel(label));
                }
            }
            if label_map.insert(v, label.clone()).is_some() {
                // Two different labels for one vertex also count as duplicates.
                return Err(GraphError::DuplicateLabel(label));
            }
        }

        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels: label_map,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized (`u < v`) edges in lexicographic order; the position of an
    /// edge in this slice is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adj[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in `edges()`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    /// Label if present, otherwise the decimal vertex index.
    pub fn display_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(s) => s.to_string(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// True iff one BFS from vertex 0 reaches every vertex (vacuously true
    /// for n <= 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_reach_count(0, None) == self.n
    }

    fn bfs_reach_count(&self, start: usize, skip: Option<usize>) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        if let Some(s) = skip {
            seen[s] = true;
        }
        queue.push_back(start);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached
    }

    /// Vertices whose removal disconnects the graph (articulation points).
    pub fn cut_vertices(&self) -> Vec<usize> {
        if self.n < 3 {
            return Vec::new();
        }
        // Iterative lowpoint DFS; the recursion is made explicit so deep
        // path-like inputs cannot overflow the stack.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut root_children = 0;
            // stack entries: (vertex, index of next neighbor to consider)
            let mut stack = vec![(root, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if *i < self.adj[v].len() {
                    let w = self.adj[v][*i];
                    *i += 1;
                    if disc[w] == usize::MAX {
                        parent[w] = v;
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, 0));
                    } else if w != parent[v] {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// All degree-1 vertices.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices whose open neighborhood induces a clique. Pendant vertices
    /// qualify (a single neighbor is a clique), isolated vertices do not own
    /// any monitoring role and are included by convention of the empty clique.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| {
                let nb = &self.adj[v];
                nb.iter().enumerate().all(|(i, &a)| {
                    nb[i + 1..].iter().all(|&b| self.has_edge(a, b))
                })
            })
            .collect()
    }

    /// All open- or closed-twin pairs, tagged.
    pub fn twin_pairs(&self) -> Vec<TwinPair> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(kind) = self.twin_kind(u, v) {
                    out.push(TwinPair { u, v, kind });
                }
            }
        }
        out
    }

    fn twin_kind(&self, u: usize, v: usize) -> Option<TwinKind> {
        if self.has_edge(u, v) {
            // closed twins: N[u] = N[v], i.e. N(u) \ {v} = N(v) \ {u}
            let nu: Vec<usize> = self.adj[u].iter().copied().filter(|&x| x != v).collect();
            let nv: Vec<usize> = self.adj[v].iter().copied().filter(|&x| x != u).collect();
            (nu == nv).then_some(TwinKind::Closed)
        } else {
            (self.adj[u] == self.adj[v]).then_some(TwinKind::Open)
        }
    }

    // -- small named families, used all over the tests and examples --

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)), []).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), []).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges, []).unwrap()
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)), []).unwrap()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Open,
    Closed,
}

/// An unordered twin pair (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(2, [(0, 1)], []).is_ok());
        assert_eq!(
            Graph::from_edges(3, [(0, 0)], []).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)], []).unwrap_err(),
            GraphError::OutOfRange(0, 2, 2)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)], []).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1)], [(0, "a".into()), (1, "a".into())]).unwrap_err(),
            GraphError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(3).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)], []).unwrap().is_connected());
        assert!(Graph::from_edges(1, [], []).unwrap().is_connected());
    }

    #[test]
    fn cut_vertices_on_named_graphs() {
        assert_eq!(Graph::path(3).cut_vertices(), vec![1]);
        assert_eq!(Graph::cycle(4).cut_vertices(), Vec::<usize>::new());
        assert_eq!(Graph::star(3).cut_vertices(), vec![0]);
        // two triangles sharing vertex 2
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], []).unwrap();
        assert_eq!(g.cut_vertices(), vec![2]);
    }

    #[test]
    fn cut_vertices_match_removal_oracle() {
        // every vertex reported disconnects the graph; no other vertex does
        for g in [
            Graph::path(6),
            Graph::cycle(5),
            Graph::star(4),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)], [])
                .unwrap(),
        ] {
            let cuts = g.cut_vertices();
            for v in 0..g.vertex_count() {
                let mut start = usize::MAX;
                for s in 0..g.vertex_count() {
                    if s != v {
                        start = s;
                        break;
                    }
                }
                let reached = g.bfs_reach_count(start, Some(v));
                let disconnects = reached < g.vertex_count() - 1;
                assert_eq!(cuts.contains(&v), disconnects, "vertex {v} of {g:?}");
            }
        }
    }

    #[test]
    fn pendant_and_simplicial() {
        assert_eq!(Graph::path(3).pendant_vertices(), vec![0, 2]);
        assert_eq!(Graph::cycle(4).pendant_vertices(), Vec::<usize>::new());
        assert_eq!(Graph::star(3).pendant_vertices(), vec![1, 2, 3]);

        assert_eq!(Graph::complete(4).simplicial_vertices(), vec![0, 1, 2, 3]);
        assert_eq!(Graph::cycle(4).simplicial_vertices(), Vec::<usize>::new());
        assert_eq!(Graph::path(3).simplicial_vertices(), vec![0, 2]);
    }

    #[test]
    fn simplicial_contains_pendants() {
        for g in [Graph::path(5), Graph::star(4), Graph::cycle(6), Graph::complete(3)] {
            let simp = g.simplicial_vertices();
            for p in g.pendant_vertices() {
                assert!(simp.contains(&p));
            }
        }
    }

    #[test]
    fn twins() {
        let c4 = Graph::cycle(4);
        let t = c4.twin_pairs();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|p| p.kind == TwinKind::Open));
        assert!(t.contains(&TwinPair { u: 0, v: 2, kind: TwinKind::Open }));
        assert!(t.contains(&TwinPair { u: 1, v: 3, kind: TwinKind::Open }));

        let k3 = Graph::complete(3);
        let t = k3.twin_pairs();
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|p| p.kind == TwinKind::Closed));

        assert!(Graph::path(4).twin_pairs().is_empty());
    }
}
