//! Editing vertex-colored digraphs into best match graphs.
//!
//! A best match graph (BMG) on a leaf-colored tree has an arc `(x,y)` when
//! `y` is, among all leaves of its color, one of those closest to `x`. This
//! crate recognizes BMGs, computes the unsatisfiable relations of a vertex
//! partition, and edits arbitrary properly colored digraphs into BMGs by
//! recursive partitioning with several heuristics.
//!
//! ```
//! use bmgedit::{edit_general, fixtures, is_bmg, partition::LouvainCost, rng};
//!
//! let g = fixtures::g2();
//! assert!(!is_bmg(&g));
//! let record = edit_general(&g, &LouvainCost, 5, &mut rng::stream(1)).unwrap();
//! assert!(is_bmg(&record.edited));
//! assert_eq!(record.edits.len(), 2);
//! ```

pub mod bench;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod rng;
pub mod simulation;
pub mod tree;
pub mod triples;
pub mod urcost;

mod editor;

pub use editor::{
    bpmf_builder, bpmf_tree, bpmf_tree_scored, edit_binary, edit_general, edit_simple,
    edit_with_method, general_builder, rebuild_binary_variant, rebuild_for, rebuild_variant,
    replay_tree, unit_score, BpmfScore, EditRecord, Variant,
};
pub use error::{Error, Result};
pub use graph::{ArcEditSet, Color, ColoredDigraph, Labels, Partition, Vertex};
pub use partition::Method;
pub use tree::{PhyloTree, Shape};
pub use triples::{
    aho_graph, binary_triples, build_binary_tree, build_tree, displayed_subset,
    forbidden_triples, informative_triples, is_binary_explainable, is_bmg, lrt, Triple,
    TripleSet,
};
pub use urcost::{gain, u_star, unsatisfiable_relations, ur_cost, URDecomposition};

