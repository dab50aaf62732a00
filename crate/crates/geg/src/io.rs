//! File formats: the line-oriented edge-list format, DOT export and the
//! JSON result documents emitted by the CLI.
//!
//! Edge lists are ASCII, one edge per line as two whitespace-separated
//! vertex tokens, `#` comments, and an optional `p geg <n> <m>` header.
//! When every vertex token in a document is an unsigned integer the tokens
//! are taken as 0-based vertex indices; otherwise every token is a label
//! and labels map to dense indices in order of first appearance.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::construct::{ClassRole, ConstructionPlan};
use crate::graph::{Graph, GraphError};
use crate::solver::{Certificate, ParamKind, QuadrupleResult, Witness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: expected two vertex tokens, got {1}")]
    BadTokenCount(usize, usize),
    #[error("line {0}: malformed header, expected 'p geg <n> <m>'")]
    BadHeader(usize),
    #[error("line {0}: duplicate header")]
    DuplicateHeader(usize),
    #[error("line {0}: {1}")]
    BadGraph(usize, GraphError),
    #[error("header declares {expected_n} vertices and {expected_m} edges, document has {got_n} and {got_m}")]
    HeaderMismatch {
        expected_n: usize,
        expected_m: usize,
        got_n: usize,
        got_m: usize,
    },
    #[error("empty document")]
    Empty,
}

/// Parses an edge-list document into a labeled graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw_edges: Vec<(String, String, usize)> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader(lineno));
            }
            if tokens.len() != 4 || tokens[1] != "geg" {
                return Err(ParseError::BadHeader(lineno));
            }
            let n = tokens[2].parse().map_err(|_| ParseError::BadHeader(lineno))?;
            let m = tokens[3].parse().map_err(|_| ParseError::BadHeader(lineno))?;
            header = Some((n, m));
            continue;
        }
        if tokens.len() != 2 {
            return Err(ParseError::BadTokenCount(lineno, tokens.len()));
        }
        raw_edges.push((tokens[0].to_string(), tokens[1].to_string(), lineno));
    }
    if raw_edges.is_empty() && header.is_none() {
        return Err(ParseError::Empty);
    }

    let numeric = raw_edges
        .iter()
        .all(|(a, b, _)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());

    fn intern(index: &mut BTreeMap<String, usize>, order: &mut Vec<String>, tok: &str) -> usize {
        if let Some(&i) = index.get(tok) {
            return i;
        }
        let i = order.len();
        index.insert(tok.to_string(), i);
        order.push(tok.to_string());
        i
    }

    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    let n = if numeric {
        let mut max = 0;
        for (a, b, lineno) in &raw_edges {
            let (u, v) = (a.parse().unwrap(), b.parse().unwrap());
            max = max.max(u + 1).max(v + 1);
            edges.push((u, v, *lineno));
        }
        // a header may declare trailing isolated vertices
        match header {
            Some((hn, _)) if hn > max => hn,
            _ => max,
        }
    } else {
        let mut index = BTreeMap::new();
        let mut order = Vec::new();
        for (a, b, lineno) in &raw_edges {
            let u = intern(&mut index, &mut order, a);
            let v = intern(&mut index, &mut order, b);
            edges.push((u, v, *lineno));
        }
        for (i, tok) in order.iter().enumerate() {
            labels.push((i, tok.clone()));
        }
        order.len()
    };

    // reject self-loops and duplicates with the offending line number
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, lineno) in &edges {
        if u == v {
            return Err(ParseError::BadGraph(lineno, GraphError::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::BadGraph(
                lineno,
                GraphError::DuplicateEdge(u.min(v), u.max(v)),
            ));
        }
    }
    let graph = Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v)), labels)
        .map_err(|e| ParseError::BadGraph(0, e))?;

    if let Some((hn, hm)) = header {
        if hn != graph.vertex_count() || hm != graph.edge_count() {
            return Err(ParseError::HeaderMismatch {
                expected_n: hn,
                expected_m: hm,
                got_n: graph.vertex_count(),
                got_m: graph.edge_count(),
            });
        }
    }
    Ok(graph)
}

/// Serializes a graph back to the edge-list format, labels preserved,
/// header included.
pub fn export_edge_list(g: &Graph) -> String {
    let mut out = format!("p geg {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.display_name(u), g.display_name(v)));
    }
    out
}

/// Emits the graph in DOT format. With a plan, vertex classes are styled so
/// cliques, twins and pendants are distinguishable in a rendering.
pub fn export_dot(g: &Graph, plan: Option<&ConstructionPlan>) -> String {
    let mut role_of = vec![None; g.vertex_count()];
    if let Some(plan) = plan {
        for class in &plan.classes {
            for &v in &class.vertices {
                role_of[v] = Some(class.role);
            }
        }
    }
    let mut out = String::from("graph geg {\n  node [shape=circle fontsize=10];\n");
    for v in 0..g.vertex_count() {
        let style = match role_of[v] {
            Some(ClassRole::Clique) => " style=filled fillcolor=lightsteelblue",
            Some(ClassRole::Twin) => " style=filled fillcolor=khaki",
            Some(ClassRole::Pendant) => " shape=triangle",
            Some(ClassRole::Anchor) => " shape=doublecircle",
            Some(ClassRole::Branch) => " style=filled fillcolor=gainsboro",
            Some(ClassRole::Spine) | None => "",
        };
        out.push_str(&format!("  n{v} [label=\"{}\"{style}];\n", g.display_name(v)));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  n{u} -- n{v};\n"));
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// JSON result documents

pub const RESULT_FORMAT: &str = "geg-result";
pub const SWEEP_FORMAT: &str = "geg-sweep-report";
pub const DOCUMENT_VERSION: u32 = 1;

/// A graph embedded in a document as named edges, sufficient to rebuild it.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct GraphDocument {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// One `[endpoint, endpoint]` entry per edge, using labels when present.
    pub edges: Vec<(String, String)>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| (g.display_name(u), g.display_name(v)))
                .collect(),
        }
    }

    /// Rebuilds the graph through the edge-list parsing rules, so documents
    /// round-trip exactly like files.
    pub fn to_graph(&self) -> Result<Graph, ParseError> {
        let mut text = String::new();
        for (a, b) in &self.edges {
            text.push_str(&format!("{a} {b}\n"));
        }
        parse_edge_list(&text)
    }
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct CertificateDocument {
    pub parameter: String,
    pub value: usize,
    /// The optimal set, as sorted display names.
    pub set: Vec<String>,
    /// For edge-covering parameters: per edge, the witnessing pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_witnesses: Option<Vec<EdgeWitnessDocument>>,
    /// For the strong parameter: the chosen path per pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<AssignmentDocument>>,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct EdgeWitnessDocument {
    pub edge: (String, String),
    pub pair: (String, String),
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct AssignmentDocument {
    pub pair: (String, String),
    pub path: Vec<String>,
}

/// The full output of a `compute` run: graph, values, certificates, timing.
/// Certificates re-validate from the document alone via [`GraphDocument::to_graph`]
/// and [`CertificateDocument::to_certificate`].
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct ResultDocument {
    pub format: String,
    pub version: u32,
    pub tool_version: String,
    pub graph: GraphDocument,
    /// Parameter short name -> value, for the computed subset.
    pub parameters: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub certificates: Vec<CertificateDocument>,
    pub wall_ms: f64,
}

impl CertificateDocument {
    pub fn from_certificate(g: &Graph, cert: &Certificate) -> Self {
        let name = |v: usize| g.display_name(v);
        let pair_doc = |&(u, v): &(usize, usize)| (name(u), name(v));
        let (edge_witnesses, assignment) = match &cert.witness {
            Witness::Geodetic => (None, None),
            Witness::EdgeGeodetic(wits) | Witness::Monitoring(wits) => (
                Some(
                    wits.iter()
                        .map(|(edge, pair)| EdgeWitnessDocument {
                            edge: pair_doc(edge),
                            pair: pair_doc(pair),
                        })
                        .collect(),
                ),
                None,
            ),
            Witness::Strong(assign) => (
                None,
                Some(
                    assign
                        .iter()
                        .map(|(pair, path)| AssignmentDocument {
                            pair: pair_doc(pair),
                            path: path.iter().map(|&v| name(v)).collect(),
                        })
                        .collect(),
                ),
            ),
        };
        CertificateDocument {
            parameter: cert.kind.short_name().to_string(),
            value: cert.value(),
            set: cert.set.iter().map(|&v| name(v)).collect(),
            edge_witnesses,
            assignment,
        }
    }

    /// Maps display names back to indices of `g` and reassembles the
    /// in-memory certificate.
    pub fn to_certificate(&self, g: &Graph) -> Result<Certificate, String> {
        let kind = match self.parameter.as_str() {
            "g" => ParamKind::Geodetic,
            "eg" => ParamKind::EdgeGeodetic,
            "seg" => ParamKind::StrongEdgeGeodetic,
            "meg" => ParamKind::MonitoringEdgeGeodetic,
            other => return Err(format!("unknown parameter {other:?}")),
        };
        let mut by_name: BTreeMap<String, usize> = BTreeMap::new();
        for v in 0..g.vertex_count() {
            by_name.insert(g.display_name(v), v);
        }
        let resolve = |name: &String| -> Result<usize, String> {
            by_name
                .get(name)
                .copied()
                .ok_or_else(|| format!("unknown vertex {name:?}"))
        };
        let mut set = self.set.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
        set.sort_unstable();
        let witness = match (&self.edge_witnesses, &self.assignment) {
            (None, None) => Witness::Geodetic,
            (Some(wits), None) => {
                let entries = wits
                    .iter()
                    .map(|w| {
                        Ok((
                            (resolve(&w.edge.0)?, resolve(&w.edge.1)?),
                            (resolve(&w.pair.0)?, resolve(&w.pair.1)?),
                        ))
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                if kind == ParamKind::MonitoringEdgeGeodetic {
                    Witness::Monitoring(entries)
                } else {
                    Witness::EdgeGeodetic(entries)
                }
            }
            (None, Some(assign)) => {
                let mut entries = assign
                    .iter()
                    .map(|a| {
                        let mut pair = (resolve(&a.pair.0)?, resolve(&a.pair.1)?);
                        let mut path =
                            a.path.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
                        // index assignment in the rebuilt graph may flip the
                        // normalized pair order; keep paths pair-aligned
                        if pair.0 > pair.1 {
                            pair = (pair.1, pair.0);
                            path.reverse();
                        }
                        Ok((pair, path))
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                entries.sort_by_key(|(pair, _)| *pair);
                Witness::Strong(entries)
            }
            (Some(_), Some(_)) => return Err("certificate has two witness kinds".into()),
        };
        if kind == ParamKind::Geodetic && witness != Witness::Geodetic {
            return Err("geodetic certificate carries an unexpected witness".into());
        }
        Ok(Certificate { kind, set, witness })
    }
}

impl ResultDocument {
    pub fn new(
        g: &Graph,
        results: &[(ParamKind, usize)],
        certificates: Option<&QuadrupleResult>,
        requested: &[ParamKind],
        wall_ms: f64,
    ) -> Self {
        let parameters = results
            .iter()
            .map(|(k, v)| (k.short_name().to_string(), *v))
            .collect();
        let certificates = match certificates {
            Some(q) => requested
                .iter()
                .map(|&k| CertificateDocument::from_certificate(g, q.certificate(k)))
                .collect(),
            None => Vec::new(),
        };
        ResultDocument {
            format: RESULT_FORMAT.to_string(),
            version: DOCUMENT_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            graph: GraphDocument::from_graph(g),
            parameters,
            certificates,
            wall_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{realize, Quadruple};
    use crate::solver::{quadruple, verify_certificate, SolverConfig};

    #[test]
    fn parse_numeric_and_header() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);

        let g = parse_edge_list("p geg 4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn parse_labels_first_appearance() {
        let g = parse_edge_list("# a triangle with a tail\na b\nb c\nc a\nc tail\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.label(0), Some("a"));
        assert_eq!(g.label(1), Some("b"));
        assert_eq!(g.label(2), Some("c"));
        assert_eq!(g.label(3), Some("tail"));
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(
            parse_edge_list("a b\nb b\n").unwrap_err(),
            ParseError::BadGraph(2, GraphError::SelfLoop(1))
        );
        assert!(matches!(
            parse_edge_list("p geg 2 5\n0 1\n").unwrap_err(),
            ParseError::HeaderMismatch { .. }
        ));
        // a header may declare trailing isolated vertices
        let g = parse_edge_list("p geg 9 1\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(
            parse_edge_list("0 1 2\n").unwrap_err(),
            ParseError::BadTokenCount(1, 3)
        );
        assert_eq!(parse_edge_list("# nothing\n").unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn edge_list_round_trip_preserves_labels() {
        let (g, _) = realize(Quadruple::new(2, 3, 4, 5)).unwrap();
        let text = export_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.vertex_count(), g.vertex_count());
        assert_eq!(back.edge_count(), g.edge_count());
        // same labelled edges, independent of index assignment
        let named = |g: &Graph| -> Vec<(String, String)> {
            let mut v: Vec<(String, String)> = g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (g.display_name(a), g.display_name(b));
                    if x <= y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(named(&back), named(&g));
    }

    #[test]
    fn dot_export_shapes() {
        let g = Graph::path(2);
        let dot = export_dot(&g, None);
        assert!(dot.starts_with("graph geg {"));
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert_eq!(dot.matches("label=").count(), 2);

        let (g, plan) = crate::construct::build_abcd(3, 3, 3, 3).unwrap();
        let dot = export_dot(&g, Some(&plan));
        for label in ["x", "y", "w_1", "z", "v_1", "x_1"] {
            assert!(dot.contains(&format!("label=\"{label}\"")), "{label} in {dot}");
        }
        assert_eq!(dot.matches(" -- ").count(), 6);

        let dot = export_dot(&Graph::cycle(4), None);
        assert_eq!(dot.matches("fillcolor").count(), 0);
    }

    #[test]
    fn result_document_round_trips_and_revalidates() {
        let (g, _) = realize(Quadruple::new(2, 4, 4, 5)).unwrap();
        let q = quadruple(&g, &SolverConfig::default()).unwrap();
        let v = q.values();
        let doc = ResultDocument::new(
            &g,
            &[
                (ParamKind::Geodetic, v.0),
                (ParamKind::EdgeGeodetic, v.1),
                (ParamKind::StrongEdgeGeodetic, v.2),
                (ParamKind::MonitoringEdgeGeodetic, v.3),
            ],
            Some(&q),
            &ParamKind::ALL,
            1.0,
        );
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: ResultDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.parameters, doc.parameters);

        // the document alone suffices to rebuild and re-validate everything
        let rebuilt = parsed.graph.to_graph().unwrap();
        assert_eq!(rebuilt.vertex_count(), g.vertex_count());
        for cert_doc in &parsed.certificates {
            let cert = cert_doc.to_certificate(&rebuilt).unwrap();
            verify_certificate(&rebuilt, &cert).unwrap();
        }
    }
}
