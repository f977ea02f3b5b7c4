//! Small reference instances used throughout the tests and examples.
//!
//! * `T1`: root with children `v` and leaf `c`; `v` has leaves `a`, `b`;
//!   colors `a:red`, `b:blue`, `c:blue`.
//! * `G1`: the BMG of `T1`, arcs `(a,b)`, `(b,a)`, `(c,a)`.
//! * `G2`: vertices `a:red`, `a′:red`, `b:blue` with arcs `(a,b)`, `(a′,b)`;
//!   not a BMG, and the simple triple-based heuristic edits it suboptimally.
//! * `G3`: `x:red`, `y:blue` without arcs.

use std::sync::Arc;

use crate::graph::{ColoredDigraph, Labels};
use crate::tree::{PhyloTree, Shape};

pub fn abc_labels() -> Arc<Labels> {
    Arc::new(Labels::new([("a", "red"), ("b", "blue"), ("c", "blue")]).expect("labels"))
}

pub fn g1() -> ColoredDigraph {
    ColoredDigraph::from_parts(
        &[("a", "red"), ("b", "blue"), ("c", "blue")],
        &[("a", "b"), ("b", "a"), ("c", "a")],
    )
    .expect("G1")
}

pub fn g2() -> ColoredDigraph {
    ColoredDigraph::from_parts(
        &[("a", "red"), ("a'", "red"), ("b", "blue")],
        &[("a", "b"), ("a'", "b")],
    )
    .expect("G2")
}

pub fn g3() -> ColoredDigraph {
    ColoredDigraph::from_parts::<_, _, &str, &str>(&[("x", "red"), ("y", "blue")], &[]).expect("G3")
}

pub fn t1() -> PhyloTree {
    PhyloTree::from_shape(
        abc_labels(),
        &Shape::inner([Shape::inner([Shape::Leaf(0), Shape::Leaf(1)]), Shape::Leaf(2)]),
    )
    .expect("T1")
}

/// Star tree on `a:red`, `b:blue`, `c:blue`.
pub fn star_abc() -> PhyloTree {
    PhyloTree::star(abc_labels(), &[0, 1, 2]).expect("star")
}

/// Tree over freshly interned labels; `shape` receives the labels.
pub fn tree_from(vertices: &[(&str, &str)], shape: impl FnOnce(&Labels) -> Shape) -> PhyloTree {
    let labels = Arc::new(Labels::new(vertices.iter().copied()).expect("labels"));
    let s = shape(&labels);
    PhyloTree::from_shape(labels, &s).expect("tree")
}
