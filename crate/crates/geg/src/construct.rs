//! Feasibility classification of target quadruples and deterministic
//! builders for the graph families that realize them.
//!
//! A target `(a, b, c, d)` asks for a connected graph whose geodetic,
//! edge-geodetic, strong edge-geodetic and monitoring edge-geodetic numbers
//! are exactly those values. Quadruples violating `2 <= a <= b <= c <= d`
//! are malformed; `(2, 2, 2, d)` with `d > 2` and `(2, 3, 3, d)` are
//! provably unrealizable; everything else is built by one of three labeled
//! families. Builders are pure and deterministic; they do not verify their
//! own output — the harness and CLI run the exact solvers over built graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// A target quadruple of parameter values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct Quadruple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Quadruple {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quadruple { a, b, c, d }
    }

    pub fn as_tuple(self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }
}

impl std::fmt::Display for Quadruple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// Realizability status of a quadruple. Exactly one status applies to every
/// integer 4-tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Feasibility {
    Feasible,
    /// `2 <= a <= b <= c <= d` is violated.
    InvalidOrder,
    /// `g = eg = seg = 2` forces the graph to be a single shortest path,
    /// whose monitoring number is also 2 — so `(2, 2, 2, d)` with `d > 2`
    /// has no realization.
    Infeasible222,
    /// `(g, eg, seg) = (2, 3, 3)` is unrealizable for every `d`.
    Infeasible233,
}

impl std::fmt::Display for Feasibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Feasibility::Feasible => write!(f, "feasible"),
            Feasibility::InvalidOrder => write!(f, "invalid: requires 2 <= a <= b <= c <= d"),
            Feasibility::Infeasible222 => write!(
                f,
                "infeasible: g = eg = seg = 2 forces a path graph, so meg = 2"
            ),
            Feasibility::Infeasible233 => {
                write!(f, "infeasible: no connected graph has (g, eg, seg) = (2, 3, 3)")
            }
        }
    }
}

/// Total classification of any integer quadruple.
pub fn feasibility(q: Quadruple) -> Feasibility {
    let (a, b, c, d) = q.as_tuple();
    if !(2 <= a && a <= b && b <= c && c <= d) {
        Feasibility::InvalidOrder
    } else if (a, b, c) == (2, 2, 2) && d > 2 {
        Feasibility::Infeasible222
    } else if (a, b, c) == (2, 3, 3) {
        Feasibility::Infeasible233
    } else {
        Feasibility::Feasible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Family {
    PathFamily,
    Family23cd,
    Family2bcd,
    FamilyAbcd,
}

/// Structural role of a named vertex class, used for styling exports and
/// for plan validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ClassRole {
    /// Path-like backbone vertices.
    Spine,
    /// Vertices forming a clique.
    Clique,
    /// Parallel branch or detour vertices.
    Branch,
    /// Degree-1 attachments.
    Pendant,
    /// Added open-twin copies.
    Twin,
    /// Individually distinguished vertices.
    Anchor,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct VertexClass {
    pub name: String,
    pub role: ClassRole,
    pub vertices: Vec<usize>,
}

/// How a built graph decomposes into the family's named classes.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ConstructionPlan {
    pub family: Family,
    /// Tail length parameter of the family (0 when there is no tail).
    pub r: usize,
    /// Disjoint classes covering every vertex exactly once.
    pub classes: Vec<VertexClass>,
    /// Added open twins as (original, copy) index pairs.
    pub twin_pairs: Vec<(usize, usize)>,
    /// Closed-form vertex count for the family at these parameters.
    pub expected_vertices: usize,
}

impl ConstructionPlan {
    pub fn class(&self, name: &str) -> Option<&VertexClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    /// Checks the plan against the built graph: the classes partition the
    /// vertex set, recorded twins are actual open twins, clique classes
    /// induce cliques, pendant classes have degree 1, and the closed-form
    /// size matches.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.vertex_count();
        if self.expected_vertices != n {
            return Err(format!(
                "expected {} vertices, graph has {n}",
                self.expected_vertices
            ));
        }
        let mut seen = vec![false; n];
        for class in &self.classes {
            for &v in &class.vertices {
                if v >= n {
                    return Err(format!("class {} lists out-of-range vertex {v}", class.name));
                }
                if seen[v] {
                    return Err(format!("vertex {v} appears in more than one class"));
                }
                seen[v] = true;
            }
            match class.role {
                ClassRole::Clique => {
                    for (i, &u) in class.vertices.iter().enumerate() {
                        for &v in &class.vertices[i + 1..] {
                            if !g.has_edge(u, v) {
                                return Err(format!(
                                    "clique class {} misses edge ({u}, {v})",
                                    class.name
                                ));
                            }
                        }
                    }
                }
                ClassRole::Pendant => {
                    for &v in &class.vertices {
                        if g.degree(v) != 1 {
                            return Err(format!(
                                "pendant class {} vertex {v} has degree {}",
                                class.name,
                                g.degree(v)
                            ));
                        }
                    }
                }
                _ => {}
            }
        }
        if let Some(v) = (0..n).find(|&v| !seen[v]) {
            return Err(format!("vertex {v} belongs to no class"));
        }
        let twins = g.twin_pairs();
        for &(orig, copy) in &self.twin_pairs {
            let (u, v) = (orig.min(copy), orig.max(copy));
            if !twins.iter().any(|t| t.u == u && t.v == v) {
                return Err(format!("recorded twin pair ({orig}, {copy}) is not a twin pair"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

// ---------------------------------------------------------------------------
// assembler

/// Incremental labeled-graph builder; vertex indices are allocation order,
/// so identical build sequences give identical graphs.
struct Assembler {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Assembler {
    fn new() -> Self {
        Assembler {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn connect(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn neighbors_of(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adds an open twin of `of`: the copy receives the current open
    /// neighborhood of `of` and is never adjacent to `of` itself.
    fn add_twin(&mut self, of: usize, label: String) -> usize {
        let nbrs = self.neighbors_of(of);
        let copy = self.add(label);
        for w in nbrs {
            self.connect(copy, w);
        }
        copy
    }

    /// Adds a closed twin of `of`: neighborhood copy plus the edge to `of`.
    fn add_closed_twin(&mut self, of: usize, label: String) -> usize {
        let copy = self.add_twin(of, label);
        self.connect(copy, of);
        copy
    }

    fn finish(self) -> Result<Graph, GraphError> {
        let n = self.labels.len();
        Graph::from_edges(n, self.edges, self.labels.into_iter().enumerate())
    }
}

fn compact_pair_label(letter: &str, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{letter}_{i}{j}")
    } else {
        format!("{letter}_{i}_{j}")
    }
}

// ---------------------------------------------------------------------------
// shared sub-family builders

/// The single-edge graph realizing an all-2 target.
fn path_pair(family: Family) -> (Graph, ConstructionPlan) {
    let graph = Graph::from_edges(
        2,
        [(0, 1)],
        [(0, "x_0".to_string()), (1, "x_1".to_string())],
    )
    .unwrap();
    let plan = ConstructionPlan {
        family,
        r: 0,
        classes: vec![VertexClass {
            name: "spine".to_string(),
            role: ClassRole::Spine,
            vertices: vec![0, 1],
        }],
        twin_pairs: Vec::new(),
        expected_vertices: 2,
    };
    (graph, plan)
}

/// Braided core for equal-tail targets (`d = c`, `g = 2`).
///
/// Two feed paths `y p_i a_i s_1 x` merge in a collector `s_1`; a bank of
/// `m` mutual open twins `t_j` is braided across both feeds through `q_1`
/// and `q_2`. The twins and the collector path supply matched strong and
/// monitoring obligations, so both parameters land on the same value.
/// Extras raise the edge-geodetic number without splitting them apart:
/// a hub `z` whose edge into the twin bank lies on no pole geodesic
/// (giving 3), or a clique blow-up of the collector into `s_1..s_t`
/// (giving `t + 2`).
fn build_braid(m: usize, hub: bool, clique: usize, family: Family) -> (Graph, ConstructionPlan) {
    assert!(clique >= 1 && (!hub || clique == 1));
    assert!(!hub || m >= 1, "the hub wires into the twin bank");
    let mut asm = Assembler::new();
    let y = asm.add("y".to_string());
    let p1 = asm.add("p_1".to_string());
    let p2 = asm.add("p_2".to_string());
    asm.connect(y, p1);
    asm.connect(y, p2);
    let a1 = asm.add("a_1".to_string());
    let a2 = asm.add("a_2".to_string());
    asm.connect(p1, a1);
    asm.connect(p2, a2);
    let braid_feeds = if m > 0 {
        let q1 = asm.add("q_1".to_string());
        let q2 = asm.add("q_2".to_string());
        asm.connect(p1, q1);
        asm.connect(p2, q2);
        Some((q1, q2))
    } else {
        None
    };
    let coll = asm.add(if clique > 1 { "s_1".to_string() } else { "s".to_string() });
    asm.connect(a1, coll);
    asm.connect(a2, coll);
    let twins: Vec<usize> = (1..=m).map(|j| asm.add(format!("t_{j}"))).collect();
    let x = asm.add("x".to_string());
    if let Some((q1, q2)) = braid_feeds {
        for &t in &twins {
            asm.connect(q1, t);
            asm.connect(q2, t);
            asm.connect(t, x);
        }
    }
    asm.connect(coll, x);

    let mut twin_pairs: Vec<(usize, usize)> =
        twins.windows(2).map(|w| (w[0], w[1])).collect();
    let mut classes = vec![
        VertexClass {
            name: "y".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![y],
        },
        VertexClass {
            name: "P".to_string(),
            role: ClassRole::Branch,
            vertices: vec![p1, p2],
        },
        VertexClass {
            name: "A".to_string(),
            role: ClassRole::Branch,
            vertices: vec![a1, a2],
        },
    ];
    if let Some((q1, q2)) = braid_feeds {
        classes.push(VertexClass {
            name: "Q".to_string(),
            role: ClassRole::Branch,
            vertices: vec![q1, q2],
        });
        classes.push(VertexClass {
            name: "T".to_string(),
            role: ClassRole::Twin,
            vertices: twins.clone(),
        });
    }

    let mut hub_count = 0;
    if hub {
        let z = asm.add("z".to_string());
        let (q1, _) = braid_feeds.unwrap();
        asm.connect(q1, z);
        asm.connect(z, twins[0]);
        asm.connect(z, x);
        classes.push(VertexClass {
            name: "z".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![z],
        });
        hub_count = 1;
    }

    let mut collector_class = vec![coll];
    for j in 2..=clique {
        let copy = asm.add_closed_twin(coll, format!("s_{j}"));
        twin_pairs.push((*collector_class.last().unwrap(), copy));
        collector_class.push(copy);
    }
    classes.push(VertexClass {
        name: "S".to_string(),
        role: if clique > 1 { ClassRole::Clique } else { ClassRole::Anchor },
        vertices: collector_class,
    });
    classes.push(VertexClass {
        name: "x".to_string(),
        role: ClassRole::Anchor,
        vertices: vec![x],
    });

    let expected = 7 + if m > 0 { 2 + m } else { 0 } + hub_count + (clique - 1);
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family,
        r: 0,
        classes,
        twin_pairs,
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    (graph, plan)
}

/// Two-pole chain for `(2, 2, c, d)` with `d > c`: a `K_{2,c-1}` whose
/// middle layer pins the strong number at `c`, followed by 4-cycle blocks
/// (+2 monitoring each), at most one 6-cycle block (+1), and a final
/// pendant when no block follows the bipartite core.
fn build_chain(c: usize, d: usize) -> (Graph, ConstructionPlan) {
    assert!(c >= 3 && d > c);
    let extra = d - c - 1;
    let (four_blocks, six_blocks) = (extra / 2, extra % 2);
    let mut asm = Assembler::new();
    let y = asm.add("y".to_string());
    let middles: Vec<usize> = (1..c).map(|i| asm.add(format!("m_{i}"))).collect();
    let mut pole = asm.add("j_1".to_string());
    for &mid in &middles {
        asm.connect(y, mid);
        asm.connect(mid, pole);
    }
    let mut twin_pairs: Vec<(usize, usize)> =
        middles.windows(2).map(|w| (w[0], w[1])).collect();
    let mut classes = vec![
        VertexClass {
            name: "y".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![y],
        },
        VertexClass {
            name: "M".to_string(),
            role: ClassRole::Twin,
            vertices: middles,
        },
    ];
    let mut junctions = vec![pole];
    let mut gadget_no = 0;
    let mut block_class = Vec::new();
    for _ in 0..four_blocks {
        gadget_no += 1;
        let u1 = asm.add(format!("u_{gadget_no}a"));
        let u2 = asm.add(format!("u_{gadget_no}b"));
        let next = asm.add(format!("j_{}", junctions.len() + 1));
        asm.connect(pole, u1);
        asm.connect(pole, u2);
        asm.connect(u1, next);
        asm.connect(u2, next);
        twin_pairs.push((u1, u2));
        block_class.push(u1);
        block_class.push(u2);
        junctions.push(next);
        pole = next;
    }
    for _ in 0..six_blocks {
        gadget_no += 1;
        let u1 = asm.add(format!("u_{gadget_no}a"));
        let u2 = asm.add(format!("u_{gadget_no}b"));
        let u3 = asm.add(format!("u_{gadget_no}c"));
        let u4 = asm.add(format!("u_{gadget_no}d"));
        let next = asm.add(format!("j_{}", junctions.len() + 1));
        asm.connect(pole, u1);
        asm.connect(u1, u2);
        asm.connect(u2, next);
        asm.connect(pole, u3);
        asm.connect(u3, u4);
        asm.connect(u4, next);
        block_class.extend([u1, u2, u3, u4]);
        junctions.push(next);
        pole = next;
    }
    if four_blocks + six_blocks == 0 {
        let pendant = asm.add("x".to_string());
        asm.connect(pole, pendant);
        classes.push(VertexClass {
            name: "J".to_string(),
            role: ClassRole::Spine,
            vertices: junctions,
        });
        classes.push(VertexClass {
            name: "x".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![pendant],
        });
    } else {
        // the last junction is the far pole
        let far = junctions.pop().unwrap();
        classes.push(VertexClass {
            name: "J".to_string(),
            role: ClassRole::Spine,
            vertices: junctions,
        });
        classes.push(VertexClass {
            name: "blocks".to_string(),
            role: ClassRole::Branch,
            vertices: block_class,
        });
        classes.push(VertexClass {
            name: "x".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![far],
        });
    }

    let expected =
        c + 1 + 3 * four_blocks + 5 * six_blocks + usize::from(four_blocks + six_blocks == 0);
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family: Family::Family2bcd,
        r: 0,
        classes,
        twin_pairs,
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    (graph, plan)
}

/// Clique columns alone, realizing `(2, b, b, b)` for `b >= 4`: paths
/// `y z_i w_i x_0` with a clique over the `w` layer. Every clique edge is
/// reachable only from its own endpoints, and the two poles are needed to
/// finish any cover, so all three edge parameters land on `b`.
fn build_columns_only(b: usize) -> (Graph, ConstructionPlan) {
    assert!(b >= 4);
    let mut asm = Assembler::new();
    let y = asm.add("y".to_string());
    let mut z_col = Vec::new();
    let mut w_col = Vec::new();
    for i in 1..=b - 2 {
        z_col.push(asm.add(format!("z_{i}")));
        w_col.push(asm.add(format!("w_{i}")));
    }
    let x0 = asm.add("x_0".to_string());
    for (&zi, &wi) in z_col.iter().zip(&w_col) {
        asm.connect(y, zi);
        asm.connect(zi, wi);
        asm.connect(wi, x0);
    }
    for (i, &wi) in w_col.iter().enumerate() {
        for &wj in &w_col[i + 1..] {
            asm.connect(wi, wj);
        }
    }
    let classes = vec![
        VertexClass {
            name: "y".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![y],
        },
        VertexClass {
            name: "Z".to_string(),
            role: ClassRole::Branch,
            vertices: z_col,
        },
        VertexClass {
            name: "W".to_string(),
            role: ClassRole::Clique,
            vertices: w_col,
        },
        VertexClass {
            name: "x_0".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![x0],
        },
    ];
    let expected = 2 + 2 * (b - 2);
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family: Family::Family2bcd,
        r: 0,
        classes,
        twin_pairs: Vec::new(),
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    (graph, plan)
}

// ---------------------------------------------------------------------------
// family builders

/// Family realizing `(2, 3, c, d)` for `c >= 4`, `d >= c`: `c - 2` parallel
/// rows `x_i w_i u_i y_i v_i0 ... v_ir` joined by rungs at both ends, a hub
/// `z` on the first two rows, and open twins along row 0 controlling the
/// monitoring number.
///
/// When `d = c` and `c >= 5` the rows collapse (mid-row pairs shortcut
/// through the hub and cover whole rows with route choices, deflating the
/// strong number), so those targets use the braided core with a hub wired
/// into the twin bank instead.
pub fn build_23cd(c: i64, d: i64) -> Result<(Graph, ConstructionPlan), ConstructError> {
    if c < 4 || d < c {
        return Err(ConstructError::InvalidParameters(format!(
            "family (2, 3, c, d) requires 4 <= c <= d, got c = {c}, d = {d}"
        )));
    }
    if d == c && c >= 5 {
        return Ok(build_braid((c - 4) as usize, true, 1, Family::Family23cd));
    }
    let gap = (d - c) as usize;
    let r = if gap % 2 == 1 { gap + 1 } else { gap };
    let rows = (c - 2) as usize;

    let mut asm = Assembler::new();
    let mut row_v = Vec::with_capacity(rows); // v_i0 ... v_ir per row
    let mut row_x = Vec::with_capacity(rows);
    let mut row_w = Vec::with_capacity(rows);
    let mut row_u = Vec::with_capacity(rows);
    let mut classes = Vec::new();

    for i in 0..rows {
        let x = asm.add(format!("x_{i}"));
        let w = asm.add(format!("w_{i}"));
        let u = asm.add(format!("u_{i}"));
        let y = asm.add(format!("y_{i}"));
        let mut vs = Vec::with_capacity(r + 1);
        for j in 0..=r {
            vs.push(asm.add(compact_pair_label("v", i, j)));
        }
        asm.connect(x, w);
        asm.connect(w, u);
        asm.connect(u, y);
        asm.connect(y, vs[0]);
        for j in 0..r {
            asm.connect(vs[j], vs[j + 1]);
        }
        let mut members = vec![x, w, u, y];
        members.extend(&vs);
        classes.push(VertexClass {
            name: format!("row_{i}"),
            role: ClassRole::Spine,
            vertices: members,
        });
        row_x.push(x);
        row_w.push(w);
        row_u.push(u);
        row_v.push(vs);
    }
    for i in 0..rows - 1 {
        asm.connect(row_x[i], row_x[i + 1]);
        asm.connect(row_v[i][r], row_v[i + 1][r]);
    }
    let z = asm.add("z".to_string());
    asm.connect(z, row_w[0]);
    asm.connect(z, row_u[0]);
    asm.connect(z, row_w[1]);
    classes.push(VertexClass {
        name: "z".to_string(),
        role: ClassRole::Anchor,
        vertices: vec![z],
    });

    let mut twin_pairs = Vec::new();
    let mut twin_class = Vec::new();
    if gap > 0 {
        let mut j = 1;
        while j + 1 <= r {
            let orig = row_v[0][j];
            let copy = asm.add_twin(orig, compact_pair_label("v'", 0, j));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
            j += 2;
        }
        if gap % 2 == 0 {
            let orig = row_v[1][r - 1];
            let copy = asm.add_twin(orig, compact_pair_label("v'", 1, r - 1));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
        }
    }
    if !twin_class.is_empty() {
        classes.push(VertexClass {
            name: "twins".to_string(),
            role: ClassRole::Twin,
            vertices: twin_class,
        });
    }

    let expected = rows * (r + 5) + 1 + twin_pairs.len();
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family: Family::Family23cd,
        r,
        classes,
        twin_pairs,
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    Ok((graph, plan))
}

/// Family realizing `(2, b, c, d)` for `b != 3`.
///
/// The general layout is a column of parallel 3-edge paths from `y` to
/// `x_0` carrying a clique (for `b >= 4`), extra plain branches, and a
/// subdivided tail with open twins and a 6-cycle detour controlling the
/// monitoring number. Three corners need different machinery, because in
/// the column layout cross pairs between the clique and branch columns
/// reach each other both through `y` and through `x_0` and cover branch
/// edges for free, deflating a parameter by one:
///
///   - `b = c = d`: the clique columns alone (no branches).
///   - `d = c` otherwise: a braided core — two feed paths into a bank of
///     mutual twins plus a merged collector path — with the collector
///     blown up into a clique of size `b - 2` when `b >= 4`.
///   - `b = 2, d > c`: a two-pole chain: the middle layer of a `K_{2,c-1}`
///     supplies the strong coverage obligations, and appended 4-cycle and
///     6-cycle blocks raise the monitoring number one or two at a time.
pub fn build_2bcd(b: i64, c: i64, d: i64) -> Result<(Graph, ConstructionPlan), ConstructError> {
    if b < 2 || b == 3 || c < b || d < c {
        return Err(ConstructError::InvalidParameters(format!(
            "family (2, b, c, d) requires 2 <= b <= c <= d with b != 3, got b = {b}, c = {c}, d = {d}"
        )));
    }
    if b == 2 {
        if c == 2 {
            if d > 2 {
                return Err(ConstructError::InvalidParameters(
                    "(2, 2, 2, d) with d > 2 is unrealizable".into(),
                ));
            }
            return Ok(path_pair(Family::Family2bcd));
        }
        return if d == c {
            Ok(build_braid((c - 3) as usize, false, 1, Family::Family2bcd))
        } else {
            Ok(build_chain(c as usize, d as usize))
        };
    }
    if d == c && c == b {
        return Ok(build_columns_only(b as usize));
    }
    if d == c {
        let t = (b - 2) as usize;
        let m = if c == b + 1 { 0 } else { (c - b) as usize };
        return Ok(build_braid(m, false, t, Family::Family2bcd));
    }

    let gap = (d - c) as usize;
    let r = if gap % 2 == 1 { gap } else { gap + 2 };

    let mut asm = Assembler::new();
    let mut classes = Vec::new();
    let y = asm.add("y".to_string());
    classes.push(VertexClass {
        name: "y".to_string(),
        role: ClassRole::Anchor,
        vertices: vec![y],
    });

    let mut w_col = Vec::new();
    let mut z_col = Vec::new();
    for i in 1..=(b - 2) as usize {
        z_col.push(asm.add(format!("z_{i}")));
        w_col.push(asm.add(format!("w_{i}")));
    }
    let x0 = asm.add("x_0".to_string());
    for (&zi, &wi) in z_col.iter().zip(&w_col) {
        asm.connect(y, zi);
        asm.connect(zi, wi);
        asm.connect(wi, x0);
    }
    for (i, &wi) in w_col.iter().enumerate() {
        for &wj in &w_col[i + 1..] {
            asm.connect(wi, wj);
        }
    }

    let branch_count = (c - b + 1) as usize;
    let mut f_col = Vec::new();
    let mut v_col = Vec::new();
    for i in 1..=branch_count {
        let fi = asm.add(format!("f_{i}"));
        let vi = asm.add(format!("v_{i}"));
        asm.connect(y, fi);
        asm.connect(fi, vi);
        asm.connect(vi, x0);
        f_col.push(fi);
        v_col.push(vi);
    }

    let mut tail = vec![x0];
    for j in 1..=r {
        let xj = asm.add(format!("x_{j}"));
        asm.connect(*tail.last().unwrap(), xj);
        tail.push(xj);
    }

    let mut twin_pairs = Vec::new();
    let mut twin_class = Vec::new();
    let mut detour = Vec::new();
    if gap > 0 && gap % 2 == 1 {
        for i in 1..=gap / 2 {
            let orig = tail[2 * i];
            let copy = asm.add_twin(orig, format!("x'_{}", 2 * i));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
        }
    } else if gap > 0 {
        for i in 1..=(gap - 1) / 2 {
            let orig = tail[2 * i];
            let copy = asm.add_twin(orig, format!("x'_{}", 2 * i));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
        }
        // parallel 3-edge path closing a 6-cycle on the end of the tail
        let p1 = asm.add(format!("x'_{}", r - 2));
        let p2 = asm.add(format!("x'_{}", r - 1));
        asm.connect(tail[r - 3], p1);
        asm.connect(p1, p2);
        asm.connect(p2, tail[r]);
        detour.push(p1);
        detour.push(p2);
    }

    classes.push(VertexClass {
        name: "Z".to_string(),
        role: ClassRole::Branch,
        vertices: z_col.clone(),
    });
    classes.push(VertexClass {
        name: "W".to_string(),
        role: ClassRole::Clique,
        vertices: w_col.clone(),
    });
    classes.push(VertexClass {
        name: "F".to_string(),
        role: ClassRole::Branch,
        vertices: f_col,
    });
    classes.push(VertexClass {
        name: "V".to_string(),
        role: ClassRole::Branch,
        vertices: v_col,
    });
    classes.push(VertexClass {
        name: "tail".to_string(),
        role: ClassRole::Spine,
        vertices: tail.clone(),
    });
    if !twin_class.is_empty() {
        classes.push(VertexClass {
            name: "twins".to_string(),
            role: ClassRole::Twin,
            vertices: twin_class,
        });
    }
    if !detour.is_empty() {
        classes.push(VertexClass {
            name: "detour".to_string(),
            role: ClassRole::Branch,
            vertices: detour,
        });
    }

    let column = 2 * (b - 2) as usize;
    let extras = if gap % 2 == 1 {
        gap / 2
    } else {
        (gap - 1) / 2 + 2
    };
    let expected = 2 + column + 2 * branch_count + r + extras;
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family: Family::Family2bcd,
        r,
        classes,
        twin_pairs,
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    Ok((graph, plan))
}

/// Family realizing `(a, b, c, d)` for `a >= 3`: a 5-cycle
/// `x, y, w_1, z, v_1`, a clique grown between `y` and `z`, parallel
/// `z`-`x` branches, pendants on the last clique vertex, and a subdivided
/// tail from `x` with open twins and (for odd `d - c`) a 6-cycle detour.
pub fn build_abcd(a: i64, b: i64, c: i64, d: i64) -> Result<(Graph, ConstructionPlan), ConstructError> {
    if a < 3 || b < a || c < b || d < c {
        return Err(ConstructError::InvalidParameters(format!(
            "family (a, b, c, d) requires 3 <= a <= b <= c <= d, got ({a}, {b}, {c}, {d})"
        )));
    }
    let gap = (d - c) as usize;
    let r = if gap % 2 == 1 { gap + 3 } else { gap + 1 };

    let mut asm = Assembler::new();
    let x = asm.add("x".to_string());
    let y = asm.add("y".to_string());
    let w1 = asm.add("w_1".to_string());
    let z = asm.add("z".to_string());
    let v1 = asm.add("v_1".to_string());
    asm.connect(x, y);
    asm.connect(y, w1);
    asm.connect(w1, z);
    asm.connect(z, v1);
    asm.connect(v1, x);

    // clique between y and z: b - a extra vertices when a = 3, one more
    // when a >= 4 so the pendants can hang off a designated clique vertex
    let extra_w = if a == 3 { (b - a) as usize } else { (b - a + 1) as usize };
    let mut clique = vec![w1];
    for i in 2..=extra_w + 1 {
        let wi = asm.add(format!("w_{i}"));
        asm.connect(wi, y);
        asm.connect(wi, z);
        for &wj in &clique {
            asm.connect(wi, wj);
        }
        clique.push(wi);
    }

    let mut v_col = vec![v1];
    for i in 2..=(c - b + 1) as usize {
        let vi = asm.add(format!("v_{i}"));
        asm.connect(z, vi);
        asm.connect(vi, x);
        v_col.push(vi);
    }

    let mut pendants = Vec::new();
    for i in 1..=(a - 3) as usize {
        let ui = asm.add(format!("u_{i}"));
        asm.connect(ui, *clique.last().unwrap());
        pendants.push(ui);
    }

    let mut tail = vec![x];
    for j in 1..=r {
        let xj = asm.add(format!("x_{j}"));
        asm.connect(*tail.last().unwrap(), xj);
        tail.push(xj);
    }

    let mut twin_pairs = Vec::new();
    let mut twin_class = Vec::new();
    let mut detour = Vec::new();
    if gap % 2 == 1 {
        for i in 1..=(r - 3) / 2 {
            let orig = tail[2 * i];
            let copy = asm.add_twin(orig, format!("x'_{}", 2 * i));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
        }
        let p1 = asm.add(format!("x'_{}", r - 2));
        let p2 = asm.add(format!("x'_{}", r - 1));
        asm.connect(tail[r - 3], p1);
        asm.connect(p1, p2);
        asm.connect(p2, tail[r]);
        detour.push(p1);
        detour.push(p2);
    } else {
        for i in 1..=(r - 1) / 2 {
            let orig = tail[2 * i];
            let copy = asm.add_twin(orig, format!("x'_{}", 2 * i));
            twin_pairs.push((orig, copy));
            twin_class.push(copy);
        }
    }

    let mut classes = vec![
        VertexClass {
            name: "x".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![x],
        },
        VertexClass {
            name: "y".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![y],
        },
        VertexClass {
            name: "z".to_string(),
            role: ClassRole::Anchor,
            vertices: vec![z],
        },
        VertexClass {
            name: "W".to_string(),
            role: ClassRole::Clique,
            vertices: clique.clone(),
        },
        VertexClass {
            name: "V".to_string(),
            role: ClassRole::Branch,
            vertices: v_col,
        },
    ];
    if !pendants.is_empty() {
        classes.push(VertexClass {
            name: "U".to_string(),
            role: ClassRole::Pendant,
            vertices: pendants,
        });
    }
    classes.push(VertexClass {
        name: "tail".to_string(),
        role: ClassRole::Spine,
        vertices: tail[1..].to_vec(),
    });
    if !twin_class.is_empty() {
        classes.push(VertexClass {
            name: "twins".to_string(),
            role: ClassRole::Twin,
            vertices: twin_class,
        });
    }
    if !detour.is_empty() {
        classes.push(VertexClass {
            name: "detour".to_string(),
            role: ClassRole::Branch,
            vertices: detour,
        });
    }

    let extras = if gap % 2 == 1 {
        (r - 3) / 2 + 2
    } else {
        (r - 1) / 2
    };
    let expected = 5 + extra_w + (c - b) as usize + (a - 3) as usize + r + extras;
    let graph = asm.finish().expect("family builder emits a valid graph");
    let plan = ConstructionPlan {
        family: Family::FamilyAbcd,
        r,
        classes,
        twin_pairs,
        expected_vertices: expected,
    };
    debug_assert_eq!(graph.vertex_count(), plan.expected_vertices);
    Ok((graph, plan))
}

/// Builds a connected graph realizing the quadruple, or reports why none
/// exists. Dispatch: `(2, 2, 2, 2)` is a single edge; `a = 2, b = 3` goes
/// to the row family (`c >= 4` is guaranteed by feasibility); `a = 2,
/// b != 3` to the branch family; `a >= 3` to the 5-cycle family.
pub fn realize(q: Quadruple) -> Result<(Graph, ConstructionPlan), Feasibility> {
    match feasibility(q) {
        Feasibility::Feasible => {}
        status => return Err(status),
    }
    let (a, b, c, d) = q.as_tuple();
    if (a, b, c, d) == (2, 2, 2, 2) {
        return Ok(path_pair(Family::PathFamily));
    }
    let built = if a == 2 && b == 3 {
        build_23cd(c, d)
    } else if a == 2 {
        build_2bcd(b, c, d)
    } else {
        build_abcd(a, b, c, d)
    };
    Ok(built.expect("feasible quadruples satisfy the family preconditions"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{quadruple, SolverConfig};

    fn solved(g: &Graph) -> (i64, i64, i64, i64) {
        let q = quadruple(g, &SolverConfig::default()).unwrap();
        let v = q.values();
        (v.0 as i64, v.1 as i64, v.2 as i64, v.3 as i64)
    }

    #[test]
    fn feasibility_classification() {
        assert_eq!(feasibility(Quadruple::new(2, 2, 2, 5)), Feasibility::Infeasible222);
        assert_eq!(feasibility(Quadruple::new(2, 3, 3, 4)), Feasibility::Infeasible233);
        assert_eq!(feasibility(Quadruple::new(2, 3, 3, 3)), Feasibility::Infeasible233);
        assert_eq!(feasibility(Quadruple::new(3, 4, 5, 6)), Feasibility::Feasible);
        assert_eq!(feasibility(Quadruple::new(2, 2, 2, 2)), Feasibility::Feasible);
        assert_eq!(feasibility(Quadruple::new(2, 2, 3, 3)), Feasibility::Feasible);
        assert_eq!(feasibility(Quadruple::new(1, 2, 3, 4)), Feasibility::InvalidOrder);
        assert_eq!(feasibility(Quadruple::new(3, 2, 4, 5)), Feasibility::InvalidOrder);
        assert_eq!(feasibility(Quadruple::new(2, 3, 4, 3)), Feasibility::InvalidOrder);
    }

    #[test]
    fn family_23cd_shapes() {
        let (g, plan) = build_23cd(4, 4).unwrap();
        assert_eq!(plan.r, 0);
        assert!(plan.twin_pairs.is_empty());
        assert_eq!(g.vertex_count(), 11);
        plan.validate(&g).unwrap();

        let (g, plan) = build_23cd(4, 5).unwrap();
        assert_eq!(plan.r, 2);
        assert_eq!(plan.twin_pairs.len(), 1);
        plan.validate(&g).unwrap();

        let (g, plan) = build_23cd(5, 7).unwrap();
        assert_eq!(plan.r, 2);
        assert_eq!(plan.twin_pairs.len(), 2);
        plan.validate(&g).unwrap();

        assert!(build_23cd(3, 4).is_err());
        assert!(build_23cd(4, 3).is_err());
    }

    #[test]
    fn family_23cd_verifies() {
        assert_eq!(solved(&build_23cd(4, 4).unwrap().0), (2, 3, 4, 4));
        assert_eq!(solved(&build_23cd(4, 5).unwrap().0), (2, 3, 4, 5));
        assert_eq!(solved(&build_23cd(5, 7).unwrap().0), (2, 3, 5, 7));
        // braided core with hub (d = c >= 5)
        assert_eq!(solved(&build_23cd(5, 5).unwrap().0), (2, 3, 5, 5));
        assert_eq!(solved(&build_23cd(6, 6).unwrap().0), (2, 3, 6, 6));
    }

    #[test]
    fn family_23cd_hub_shape() {
        let (g, plan) = build_23cd(5, 5).unwrap();
        assert!(plan.class("z").is_some());
        assert_eq!(plan.class("T").unwrap().vertices.len(), 1);
        plan.validate(&g).unwrap();
    }

    #[test]
    fn family_2bcd_shapes() {
        let (g, plan) = build_2bcd(4, 5, 7).unwrap();
        assert_eq!(plan.r, 4);
        // the 6-cycle detour alone handles a parameter gap of two
        assert!(plan.twin_pairs.is_empty());
        assert!(plan.class("detour").is_some());
        plan.validate(&g).unwrap();

        let (g, plan) = build_2bcd(4, 5, 9).unwrap();
        assert_eq!(plan.r, 6);
        assert_eq!(plan.twin_pairs.len(), 1);
        plan.validate(&g).unwrap();

        // clique columns only
        let (g, plan) = build_2bcd(4, 4, 4).unwrap();
        assert!(plan.class("F").is_none());
        assert_eq!(g.vertex_count(), 6);
        plan.validate(&g).unwrap();

        // braided core without twins
        let (g, plan) = build_2bcd(2, 3, 3).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert!(plan.class("T").is_none());
        plan.validate(&g).unwrap();

        // braided core with twin bank
        let (g, plan) = build_2bcd(2, 5, 5).unwrap();
        assert_eq!(plan.class("T").unwrap().vertices.len(), 2);
        plan.validate(&g).unwrap();

        // collector blow-up
        let (g, plan) = build_2bcd(5, 6, 6).unwrap();
        assert_eq!(plan.class("S").unwrap().vertices.len(), 3);
        assert_eq!(plan.class("S").unwrap().role, ClassRole::Clique);
        plan.validate(&g).unwrap();

        // bipartite chain
        let (g, plan) = build_2bcd(2, 4, 7).unwrap();
        assert_eq!(plan.class("M").unwrap().vertices.len(), 3);
        plan.validate(&g).unwrap();

        assert!(build_2bcd(3, 4, 5).is_err());
        assert!(build_2bcd(2, 4, 3).is_err());
        assert!(build_2bcd(2, 2, 5).is_err());
    }

    #[test]
    fn family_2bcd_verifies() {
        // paper column layout (d > c)
        assert_eq!(solved(&build_2bcd(4, 4, 5).unwrap().0), (2, 4, 4, 5));
        assert_eq!(solved(&build_2bcd(4, 5, 7).unwrap().0), (2, 4, 5, 7));
        // clique columns (b = c = d)
        assert_eq!(solved(&build_2bcd(4, 4, 4).unwrap().0), (2, 4, 4, 4));
        assert_eq!(solved(&build_2bcd(5, 5, 5).unwrap().0), (2, 5, 5, 5));
        // braided cores (b = 2, d = c)
        assert_eq!(solved(&build_2bcd(2, 3, 3).unwrap().0), (2, 2, 3, 3));
        assert_eq!(solved(&build_2bcd(2, 5, 5).unwrap().0), (2, 2, 5, 5));
        assert_eq!(solved(&build_2bcd(2, 6, 6).unwrap().0), (2, 2, 6, 6));
        // collector blow-ups (b >= 4, d = c > b)
        assert_eq!(solved(&build_2bcd(4, 5, 5).unwrap().0), (2, 4, 5, 5));
        assert_eq!(solved(&build_2bcd(4, 6, 6).unwrap().0), (2, 4, 6, 6));
        assert_eq!(solved(&build_2bcd(5, 6, 6).unwrap().0), (2, 5, 6, 6));
        // chains (b = 2, d > c)
        assert_eq!(solved(&build_2bcd(2, 3, 4).unwrap().0), (2, 2, 3, 4));
        assert_eq!(solved(&build_2bcd(2, 3, 7).unwrap().0), (2, 2, 3, 7));
        assert_eq!(solved(&build_2bcd(2, 4, 6).unwrap().0), (2, 2, 4, 6));
        assert_eq!(solved(&build_2bcd(2, 5, 6).unwrap().0), (2, 2, 5, 6));
        assert_eq!(solved(&build_2bcd(2, 4, 8).unwrap().0), (2, 2, 4, 8));
    }

    #[test]
    fn family_abcd_shapes() {
        let (g, plan) = build_abcd(3, 3, 3, 3).unwrap();
        assert_eq!(plan.r, 1);
        assert!(plan.twin_pairs.is_empty());
        assert_eq!(g.vertex_count(), 6);
        plan.validate(&g).unwrap();

        let (g, plan) = build_abcd(4, 5, 6, 7).unwrap();
        assert_eq!(plan.class("U").unwrap().vertices.len(), 1);
        assert_eq!(plan.class("W").unwrap().vertices.len(), 3);
        assert_eq!(plan.class("V").unwrap().vertices.len(), 2);
        assert!(plan.class("detour").is_some());
        plan.validate(&g).unwrap();

        let (g, plan) = build_abcd(3, 4, 5, 5).unwrap();
        assert_eq!(plan.r, 1);
        assert!(plan.twin_pairs.is_empty());
        plan.validate(&g).unwrap();

        assert!(build_abcd(2, 3, 4, 5).is_err());
    }

    #[test]
    fn family_abcd_verifies() {
        assert_eq!(solved(&build_abcd(3, 3, 3, 3).unwrap().0), (3, 3, 3, 3));
        assert_eq!(solved(&build_abcd(3, 4, 5, 5).unwrap().0), (3, 4, 5, 5));
        assert_eq!(solved(&build_abcd(4, 5, 6, 7).unwrap().0), (4, 5, 6, 7));
    }

    #[test]
    fn realize_dispatch() {
        let (g, plan) = realize(Quadruple::new(2, 2, 2, 2)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(plan.family, Family::PathFamily);

        assert_eq!(
            realize(Quadruple::new(2, 3, 3, 5)).unwrap_err(),
            Feasibility::Infeasible233
        );
        assert_eq!(
            realize(Quadruple::new(2, 2, 2, 4)).unwrap_err(),
            Feasibility::Infeasible222
        );

        let (g, plan) = realize(Quadruple::new(5, 5, 5, 5)).unwrap();
        assert_eq!(plan.family, Family::FamilyAbcd);
        assert_eq!(solved(&g), (5, 5, 5, 5));
    }

    #[test]
    fn builders_are_deterministic() {
        for (q, _) in [(Quadruple::new(2, 3, 4, 5), ()), (Quadruple::new(3, 4, 4, 6), ())] {
            let (g1, p1) = realize(q).unwrap();
            let (g2, p2) = realize(q).unwrap();
            assert_eq!(g1, g2);
            assert_eq!(p1, p2);
            assert_eq!(g1.labels(), g2.labels());
        }
    }
}
