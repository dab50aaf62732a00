//! Exact computation of four path-based monitoring parameters of connected
//! graphs — the geodetic number g, edge-geodetic number eg, strong
//! edge-geodetic number seg and monitoring edge-geodetic number meg — plus
//! constructions that realize any admissible target quadruple
//! `2 <= a <= b <= c <= d` and a verification harness that checks every
//! construction against the exact solvers.
//!
//! The crate is organized as a library first; runnable examples under
//! `examples/` walk through each capability, and a thin `geg` binary exposes
//! the same operations as subcommands.

pub mod bits;
pub mod construct;
pub mod geodesic;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solver;

pub use graph::{Graph, GraphError, TwinKind, TwinPair};
pub use geodesic::{
    coverage_tables, edge_monitored_by, edge_monitored_by_deletion, edge_on_some_geodesic,
    enumerate_geodesics, geodesic_tables, vertex_on_some_geodesic, CoverageTables, GeodesicError,
    GeodesicList, GeodesicTables,
};
pub use solver::{
    excluded_vertices, forced_vertices, has_strong_assignment, is_edge_geodetic_set,
    is_geodetic_set, is_meg_set, minimum, quadruple, verify_certificate, Certificate, ParamKind,
    QuadrupleResult, SolverConfig, SolverError, SubsetOrder, Witness,
};
pub use construct::{
    build_23cd, build_2bcd, build_abcd, feasibility, realize, ClassRole, ConstructError,
    ConstructionPlan, Family, Feasibility, Quadruple, VertexClass,
};
pub use harness::{
    connected_graph_count, enumerate_connected_graphs, impossible_quadruple_scan, lemma_suite,
    random_connected_graph, sweep, verify_quadruple, HarnessError, LemmaId, LemmaVerdict,
    SweepEntry, SweepReport, SweepSummary,
};
pub use io::{export_dot, export_edge_list, parse_edge_list, ParseError, ResultDocument};
