//! Rooted phylogenetic trees whose leaves are colored graph vertices.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, Labels, Partition, Vertex};
use crate::triples::Triple;

pub type NodeId = usize;

/// Nested description of a tree, used for construction and traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Leaf(Vertex),
    Inner(Vec<Shape>),
}

impl Shape {
    pub fn inner<I: IntoIterator<Item = Shape>>(children: I) -> Shape {
        Shape::Inner(children.into_iter().collect())
    }

    pub fn star(leaves: &[Vertex]) -> Shape {
        if leaves.len() == 1 {
            Shape::Leaf(leaves[0])
        } else {
            Shape::Inner(leaves.iter().map(|&v| Shape::Leaf(v)).collect())
        }
    }
}

#[derive(Debug, Clone)]
struct Node {
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    leaf: Option<Vertex>,
    depth: usize,
    /// Range into `PhyloTree::dfs_leaves` covering the leaves below.
    span: (usize, usize),
}

/// Incremental construction of a tree by parent/child links.
#[derive(Debug, Default)]
pub(crate) struct TreeArena {
    nodes: Vec<Node>,
}

impl TreeArena {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, leaf: Option<Vertex>) -> NodeId {
        self.nodes.push(Node {
            parent: None,
            children: Vec::new(),
            leaf,
            depth: 0,
            span: (0, 0),
        });
        self.nodes.len() - 1
    }

    pub fn leaf(&mut self, v: Vertex) -> NodeId {
        self.push(Some(v))
    }

    pub fn inner(&mut self) -> NodeId {
        self.push(None)
    }

    pub fn attach(&mut self, parent: NodeId, child: NodeId) {
        self.nodes[child].parent = Some(parent);
        self.nodes[parent].children.push(child);
    }

    /// Turns a leaf node into an inner one (used by tree growth).
    pub fn make_inner(&mut self, u: NodeId) {
        self.nodes[u].leaf = None;
    }

    pub fn is_leaf(&self, u: NodeId) -> bool {
        self.nodes[u].children.is_empty()
    }

    pub fn set_leaf(&mut self, u: NodeId, v: Vertex) {
        self.nodes[u].leaf = Some(v);
    }

    pub fn finish(self, labels: Arc<Labels>, root: NodeId) -> Result<PhyloTree> {
        let mut nodes = self.nodes;
        let mut leaf_node = vec![None; labels.len()];
        let mut dfs_leaves = Vec::new();
        // Iterative DFS computing depths and leaf spans.
        let mut stack = vec![(root, false)];
        while let Some((u, done)) = stack.pop() {
            if done {
                let lo = nodes[u]
                    .children
                    .first()
                    .map_or(dfs_leaves.len(), |&c| nodes[c].span.0);
                if nodes[u].children.is_empty() {
                    let v = nodes[u]
                        .leaf
                        .ok_or_else(|| Error::InvalidInput("childless node without a leaf label".into()))?;
                    if v >= labels.len() {
                        return Err(Error::UnknownVertex(format!("#{v}")));
                    }
                    if leaf_node[v].is_some() {
                        return Err(Error::DuplicateVertex(labels.id(v).to_string()));
                    }
                    leaf_node[v] = Some(u);
                    nodes[u].span = (dfs_leaves.len(), dfs_leaves.len() + 1);
                    dfs_leaves.push(v);
                } else {
                    if nodes[u].children.len() < 2 {
                        return Err(Error::InvalidInput(
                            "inner node with a single child is not phylogenetic".into(),
                        ));
                    }
                    let hi = nodes[*nodes[u].children.last().expect("children")].span.1;
                    nodes[u].span = (lo, hi);
                }
                continue;
            }
            stack.push((u, true));
            let depth = nodes[u].depth;
            for &c in nodes[u].children.clone().iter().rev() {
                nodes[c].depth = depth + 1;
                stack.push((c, false));
            }
        }
        nodes[root].parent = None;
        Ok(PhyloTree {
            labels,
            nodes,
            root,
            leaf_node,
            dfs_leaves,
        })
    }
}

/// A rooted phylogenetic tree. Its leaves are a subset of the vertices of
/// its [`Labels`], each leaf colored by the label's color.
#[derive(Clone)]
pub struct PhyloTree {
    labels: Arc<Labels>,
    nodes: Vec<Node>,
    root: NodeId,
    leaf_node: Vec<Option<NodeId>>,
    dfs_leaves: Vec<Vertex>,
}

impl PhyloTree {
    pub fn from_shape(labels: Arc<Labels>, shape: &Shape) -> Result<PhyloTree> {
        let mut arena = TreeArena::new();
        let root = build_shape(&mut arena, shape);
        arena.finish(labels, root)
    }

    pub fn single_leaf(labels: Arc<Labels>, v: Vertex) -> Result<PhyloTree> {
        Self::from_shape(labels, &Shape::Leaf(v))
    }

    /// Star tree on the given leaves (or a single leaf).
    pub fn star(labels: Arc<Labels>, leaves: &[Vertex]) -> Result<PhyloTree> {
        if leaves.is_empty() {
            return Err(Error::InvalidInput("a tree needs at least one leaf".into()));
        }
        Self::from_shape(labels, &Shape::star(leaves))
    }

    pub fn labels(&self) -> &Arc<Labels> {
        &self.labels
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn children(&self, u: NodeId) -> &[NodeId] {
        &self.nodes[u].children
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        self.nodes[u].parent
    }

    pub fn depth(&self, u: NodeId) -> usize {
        self.nodes[u].depth
    }

    pub fn is_leaf(&self, u: NodeId) -> bool {
        self.nodes[u].children.is_empty()
    }

    pub fn leaf_vertex(&self, u: NodeId) -> Option<Vertex> {
        if self.is_leaf(u) {
            self.nodes[u].leaf
        } else {
            None
        }
    }

    pub fn leaf_node(&self, v: Vertex) -> Option<NodeId> {
        self.leaf_node.get(v).copied().flatten()
    }

    /// Leaf set, sorted by vertex index.
    pub fn leaves(&self) -> Vec<Vertex> {
        let mut l = self.dfs_leaves.clone();
        l.sort_unstable();
        l
    }

    pub fn leaf_count(&self) -> usize {
        self.dfs_leaves.len()
    }

    /// Leaves of the subtree rooted at `u`, in DFS order.
    pub fn leaves_below(&self, u: NodeId) -> &[Vertex] {
        let (lo, hi) = self.nodes[u].span;
        &self.dfs_leaves[lo..hi]
    }

    /// Inner nodes (all nodes with children).
    pub fn inner_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).filter(move |&u| !self.is_leaf(u))
    }

    /// `u ⪯ v`: `v` lies on the path from `u` to the root.
    pub fn is_descendant(&self, u: NodeId, v: NodeId) -> bool {
        let (ulo, uhi) = self.nodes[u].span;
        let (vlo, vhi) = self.nodes[v].span;
        vlo <= ulo && uhi <= vhi && self.nodes[u].depth >= self.nodes[v].depth
    }

    pub(crate) fn lca2(&self, mut a: NodeId, mut b: NodeId) -> NodeId {
        while self.nodes[a].depth > self.nodes[b].depth {
            a = self.nodes[a].parent.expect("non-root has a parent");
        }
        while self.nodes[b].depth > self.nodes[a].depth {
            b = self.nodes[b].parent.expect("non-root has a parent");
        }
        while a != b {
            a = self.nodes[a].parent.expect("non-root has a parent");
            b = self.nodes[b].parent.expect("non-root has a parent");
        }
        a
    }

    /// Last common ancestor of a nonempty node set.
    pub fn lca(&self, nodes: &[NodeId]) -> Result<NodeId> {
        let (&first, rest) = nodes
            .split_first()
            .ok_or_else(|| Error::InvalidInput("lca of an empty set".into()))?;
        if let Some(&u) = nodes.iter().find(|&&u| u >= self.nodes.len()) {
            return Err(Error::InvalidInput(format!("unknown node {u}")));
        }
        Ok(rest.iter().fold(first, |acc, &u| self.lca2(acc, u)))
    }

    /// Last common ancestor of a nonempty leaf set.
    pub fn lca_of_leaves(&self, leaves: &[Vertex]) -> Result<NodeId> {
        let nodes = leaves
            .iter()
            .map(|&v| self.require_leaf(v))
            .collect::<Result<Vec<_>>>()?;
        self.lca(&nodes)
    }

    fn require_leaf(&self, v: Vertex) -> Result<NodeId> {
        self.leaf_node(v)
            .ok_or_else(|| Error::UnknownVertex(self.describe_vertex(v)))
    }

    fn describe_vertex(&self, v: Vertex) -> String {
        if v < self.labels.len() {
            self.labels.id(v).to_string()
        } else {
            format!("#{v}")
        }
    }

    fn leaf_lca(&self, x: Vertex, y: Vertex) -> NodeId {
        self.lca2(
            self.leaf_node[x].expect("leaf"),
            self.leaf_node[y].expect("leaf"),
        )
    }

    /// `lca(x,y) ≺ lca(x,z) = lca(y,z)` for leaves known to be in the tree.
    pub(crate) fn displays_leaves(&self, x: Vertex, y: Vertex, z: Vertex) -> bool {
        let xy = self.leaf_lca(x, y);
        let xz = self.leaf_lca(x, z);
        xy != xz && self.is_descendant(xy, xz) && self.leaf_lca(y, z) == xz
    }

    pub fn displays_triple(&self, t: &Triple) -> Result<bool> {
        let (x, y, z) = t.leaves();
        for v in [x, y, z] {
            self.require_leaf(v)?;
        }
        Ok(self.displays_leaves(x, y, z))
    }

    /// Partition of the leaves by the subtrees of the root's children.
    pub fn root_partition(&self) -> Result<Partition> {
        self.child_partition(self.root)
    }

    pub fn child_partition(&self, u: NodeId) -> Result<Partition> {
        if self.is_leaf(u) {
            return Err(Error::InvalidInput(
                "a single leaf has no child partition".into(),
            ));
        }
        Ok(Partition::from_blocks(
            self.nodes[u]
                .children
                .iter()
                .map(|&c| self.leaves_below(c).to_vec())
                .collect(),
        ))
    }

    pub fn is_binary(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.children.is_empty() || n.children.len() == 2)
    }

    pub fn shape(&self) -> Shape {
        self.shape_at(self.root)
    }

    fn shape_at(&self, u: NodeId) -> Shape {
        match self.leaf_vertex(u) {
            Some(v) => Shape::Leaf(v),
            None => Shape::Inner(self.nodes[u].children.iter().map(|&c| self.shape_at(c)).collect()),
        }
    }

    /// Restriction to a leaf subset: minimal connecting subtree with
    /// degree-two vertices suppressed.
    pub fn restrict(&self, keep: &[Vertex]) -> Result<PhyloTree> {
        if keep.is_empty() {
            return Err(Error::InvalidInput("restriction to an empty leaf set".into()));
        }
        let mut wanted = vec![false; self.labels.len()];
        for &v in keep {
            self.require_leaf(v)?;
            wanted[v] = true;
        }
        let shape = self
            .restricted_shape(self.root, &wanted)
            .expect("nonempty restriction");
        PhyloTree::from_shape(self.labels.clone(), &shape)
    }

    fn restricted_shape(&self, u: NodeId, wanted: &[bool]) -> Option<Shape> {
        if let Some(v) = self.leaf_vertex(u) {
            return wanted[v].then_some(Shape::Leaf(v));
        }
        let mut kept: Vec<Shape> = self.nodes[u]
            .children
            .iter()
            .filter_map(|&c| self.restricted_shape(c, wanted))
            .collect();
        match kept.len() {
            0 => None,
            1 => kept.pop(),
            _ => Some(Shape::Inner(kept)),
        }
    }

    /// The best match graph explained by this tree.
    ///
    /// `(x,y)` is an arc iff `σ(x) ≠ σ(y)` and no leaf of color `σ(y)` is
    /// strictly closer to `x` than `y`. Computed per leaf `x` by walking its
    /// ancestors and recording, for each color, the lowest ancestor whose
    /// subtree contains it.
    pub fn bmg(&self) -> ColoredDigraph {
        let leaves = self.leaves();
        let (labels, index): (Arc<Labels>, Vec<usize>) = if leaves.len() == self.labels.len() {
            (self.labels.clone(), (0..leaves.len()).collect())
        } else {
            let mut index = vec![usize::MAX; self.labels.len()];
            for (i, &v) in leaves.iter().enumerate() {
                index[v] = i;
            }
            (Arc::new(self.labels.restrict(&leaves)), index)
        };
        let mut g = ColoredDigraph::empty(labels);
        let colors = self.labels.color_table_len();
        let mut found = vec![false; colors];
        let mut fresh: Vec<usize> = Vec::new();
        for &x in &self.dfs_leaves {
            found.iter_mut().for_each(|f| *f = false);
            let cx = self.labels.color(x);
            found[cx] = true;
            let mut prev = self.leaf_node[x].expect("leaf");
            while let Some(u) = self.nodes[prev].parent {
                fresh.clear();
                for &c in &self.nodes[u].children {
                    if c == prev {
                        continue;
                    }
                    for &y in self.leaves_below(c) {
                        let cy = self.labels.color(y);
                        if !found[cy] {
                            g.insert_arc(index[x], index[y]);
                            fresh.push(cy);
                        }
                    }
                }
                for &c in &fresh {
                    found[c] = true;
                }
                prev = u;
            }
        }
        g
    }

    /// Child-order independent text form, used for structural equality.
    pub fn canonical(&self) -> String {
        self.canonical_at(self.root)
    }

    fn canonical_at(&self, u: NodeId) -> String {
        match self.leaf_vertex(u) {
            Some(v) => format!(
                "{}:{}",
                self.labels.id(v),
                self.labels.color_name(self.labels.color(v))
            ),
            None => {
                let mut parts: Vec<String> = self.nodes[u]
                    .children
                    .iter()
                    .map(|&c| self.canonical_at(c))
                    .collect();
                parts.sort();
                format!("({})", parts.join(","))
            }
        }
    }
}

fn build_shape(arena: &mut TreeArena, shape: &Shape) -> NodeId {
    match shape {
        Shape::Leaf(v) => arena.leaf(*v),
        Shape::Inner(children) => {
            let u = arena.inner();
            for c in children {
                let cid = build_shape(arena, c);
                arena.attach(u, cid);
            }
            u
        }
    }
}

impl PartialEq for PhyloTree {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for PhyloTree {}

impl fmt::Debug for PhyloTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhyloTree{}", self.canonical())
    }
}
