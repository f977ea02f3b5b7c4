//! Rooted triples, the Aho graph, `BUILD`, and BMG recognition.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, Labels, Partition, UnionFind, Vertex};
use crate::partition::kk_bipartition;
use crate::tree::{NodeId, PhyloTree, TreeArena};

/// The rooted triple `xy|z`. The pair is unordered: `xy|z = yx|z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    x: Vertex,
    y: Vertex,
    z: Vertex,
}

impl Triple {
    /// `xy|z`; panics unless the three leaves are pairwise distinct.
    pub fn new(x: Vertex, y: Vertex, z: Vertex) -> Triple {
        assert!(
            x != y && x != z && y != z,
            "triple leaves must be pairwise distinct"
        );
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        Triple { x, y, z }
    }

    /// `(x, y, z)` with `x < y`.
    pub fn leaves(&self) -> (Vertex, Vertex, Vertex) {
        (self.x, self.y, self.z)
    }

    pub fn pair(&self) -> (Vertex, Vertex) {
        (self.x, self.y)
    }

    pub fn outgroup(&self) -> Vertex {
        self.z
    }

    fn within(&self, mask: &[bool]) -> bool {
        mask[self.x] && mask[self.y] && mask[self.z]
    }

    pub fn display<'a>(&'a self, labels: &'a Labels) -> impl fmt::Display + 'a {
        TripleDisplay(self, labels)
    }
}

struct TripleDisplay<'a>(&'a Triple, &'a Labels);

impl fmt::Display for TripleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = self.0.leaves();
        write!(f, "{}{}|{}", self.1.id(x), self.1.id(y), self.1.id(z))
    }
}

/// A duplicate-free set of triples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleSet(BTreeSet<Triple>);

impl TripleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: Triple) -> bool {
        self.0.insert(t)
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.0.contains(t)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &TripleSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &TripleSet) -> TripleSet {
        TripleSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<Triple> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Triple> for TripleSet {
    fn from_iter<T: IntoIterator<Item = Triple>>(iter: T) -> Self {
        TripleSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a TripleSet {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Which triple set drives the Aho graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    Informative,
    Binary,
}

fn mask_of(n: usize, w: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in w {
        mask[v] = true;
    }
    mask
}

/// Visits every `(a, b, b′)` with `σ(a) ≠ σ(b) = σ(b′)`, `b ≠ b′`,
/// `(a,b) ∈ E`, all within `w`, reporting whether `(a,b′) ∈ E`.
fn scan_pairs(g: &ColoredDigraph, w: &[Vertex], mut visit: impl FnMut(Vertex, Vertex, Vertex, bool)) {
    let mask = mask_of(g.n(), w);
    let mut classes = vec![Vec::new(); g.labels().color_table_len()];
    for &v in w {
        classes[g.color(v)].push(v);
    }
    for &a in w {
        for b in g.out_neighbors(a) {
            if !mask[b] || g.color(b) == g.color(a) {
                continue;
            }
            for &b2 in &classes[g.color(b)] {
                if b2 != b {
                    visit(a, b, b2, g.has_arc(a, b2));
                }
            }
        }
    }
}

pub(crate) fn informative_on(g: &ColoredDigraph, w: &[Vertex]) -> Vec<Triple> {
    let mut out = Vec::new();
    scan_pairs(g, w, |a, b, b2, arc| {
        if !arc {
            out.push(Triple::new(a, b, b2));
        }
    });
    out
}

pub(crate) fn forbidden_on(g: &ColoredDigraph, w: &[Vertex]) -> Vec<Triple> {
    let mut out = Vec::new();
    scan_pairs(g, w, |a, b, b2, arc| {
        if arc {
            out.push(Triple::new(a, b, b2));
        }
    });
    out
}

pub(crate) fn binary_on(g: &ColoredDigraph, w: &[Vertex]) -> Vec<Triple> {
    let mut out = Vec::new();
    scan_pairs(g, w, |a, b, b2, arc| {
        if arc {
            out.push(Triple::new(b, b2, a));
        } else {
            out.push(Triple::new(a, b, b2));
        }
    });
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn triples_on(g: &ColoredDigraph, w: &[Vertex], kind: TripleKind) -> Vec<Triple> {
    match kind {
        TripleKind::Informative => informative_on(g, w),
        TripleKind::Binary => binary_on(g, w),
    }
}

fn all_vertices(g: &ColoredDigraph) -> Vec<Vertex> {
    g.vertices().collect()
}

/// `ab|b′` with `σ(a) ≠ σ(b) = σ(b′)`, `(a,b) ∈ E` and `(a,b′) ∉ E`.
pub fn informative_triples(g: &ColoredDigraph) -> Result<TripleSet> {
    g.ensure_proper()?;
    Ok(informative_on(g, &all_vertices(g)).into_iter().collect())
}

/// `ab|b′` with `σ(a) ≠ σ(b) = σ(b′)`, `b ≠ b′`, and both arcs present.
pub fn forbidden_triples(g: &ColoredDigraph) -> Result<TripleSet> {
    g.ensure_proper()?;
    Ok(forbidden_on(g, &all_vertices(g)).into_iter().collect())
}

/// Informative triples plus `bb′|a` for every forbidden `ab|b′`.
pub fn binary_triples(g: &ColoredDigraph) -> Result<TripleSet> {
    g.ensure_proper()?;
    Ok(binary_on(g, &all_vertices(g)).into_iter().collect())
}

/// Triples whose three leaves all lie in `leaves`.
pub fn restrict_triples(r: &TripleSet, leaves: &[Vertex]) -> TripleSet {
    let n = leaves.iter().copied().max().map_or(0, |m| m + 1);
    let mask = mask_of(n, leaves);
    let fits = |v: Vertex| v < n && mask[v];
    r.iter()
        .filter(|t| {
            let (x, y, z) = t.leaves();
            fits(x) && fits(y) && fits(z)
        })
        .copied()
        .collect()
}

/// Edges `{x,y}` (with `x < y`) of the Aho graph `[r, leaves]`.
pub fn aho_graph(r: &TripleSet, leaves: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = restrict_triples(r, leaves)
        .iter()
        .map(Triple::pair)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

pub(crate) fn aho_edges(triples: &[Triple]) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = triples.iter().map(Triple::pair).collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// `BUILD` found a recursion step with a connected Aho graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistent {
    /// Leaf set of the offending recursion step.
    pub leaves: Vec<Vertex>,
}

impl fmt::Display for Inconsistent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triple set is inconsistent: connected Aho graph on {} leaves",
            self.leaves.len()
        )
    }
}

impl std::error::Error for Inconsistent {}

/// The Aho tree `Aho(r, leaves)`, or the leaf set on which `BUILD` failed.
pub fn build_tree(
    r: &TripleSet,
    leaves: &[Vertex],
    labels: &Arc<Labels>,
) -> std::result::Result<PhyloTree, Inconsistent> {
    build_with(&r.to_vec(), leaves, labels, false)
}

/// `BUILD` variant that coarse-grains every component partition with more
/// than two blocks into a bipartition, yielding a binary tree.
pub fn build_binary_tree(
    r: &TripleSet,
    leaves: &[Vertex],
    labels: &Arc<Labels>,
) -> std::result::Result<PhyloTree, Inconsistent> {
    build_with(&r.to_vec(), leaves, labels, true)
}

pub(crate) fn build_with(
    triples: &[Triple],
    leaves: &[Vertex],
    labels: &Arc<Labels>,
    bipartition: bool,
) -> std::result::Result<PhyloTree, Inconsistent> {
    assert!(!leaves.is_empty(), "BUILD needs at least one leaf");
    let n = labels.len();
    let mask = mask_of(n, leaves);
    let top: Vec<Triple> = triples.iter().filter(|t| t.within(&mask)).copied().collect();

    let mut arena = TreeArena::new();
    // Scratch shared across recursion steps: local position and block label.
    let mut pos = vec![usize::MAX; n];
    let mut block_of = vec![usize::MAX; n];
    let mut stack: Vec<(Vec<Vertex>, Vec<Triple>, Option<NodeId>)> =
        vec![(leaves.to_vec(), top, None)];
    let mut root = None;

    while let Some((set, rs, parent)) = stack.pop() {
        let node = if set.len() == 1 {
            arena.leaf(set[0])
        } else {
            for (i, &v) in set.iter().enumerate() {
                pos[v] = i;
            }
            let mut uf = UnionFind::new(set.len());
            for t in &rs {
                let (x, y, _) = t.leaves();
                uf.union(pos[x], pos[y]);
            }
            if uf.sets() == 1 {
                let mut l = set;
                l.sort_unstable();
                return Err(Inconsistent { leaves: l });
            }
            let assignment: Vec<usize> = (0..set.len()).map(|i| uf.find(i)).collect();
            let mut partition = Partition::from_assignment(&set, &assignment);
            if bipartition && partition.len() > 2 {
                partition = kk_bipartition(&partition).expect("at least two blocks");
            }
            for (i, b) in partition.blocks().iter().enumerate() {
                for &v in b {
                    block_of[v] = i;
                }
            }
            let mut child_triples: Vec<Vec<Triple>> = vec![Vec::new(); partition.len()];
            for t in rs {
                let (x, y, z) = t.leaves();
                let bx = block_of[x];
                if bx == block_of[y] && bx == block_of[z] {
                    child_triples[bx].push(t);
                }
            }
            let u = arena.inner();
            for (b, ts) in partition.blocks().iter().zip(child_triples).rev() {
                stack.push((b.clone(), ts, Some(u)));
            }
            u
        };
        match parent {
            Some(p) => arena.attach(p, node),
            None => root = Some(node),
        }
    }
    let tree = arena
        .finish(labels.clone(), root.expect("root"))
        .expect("BUILD yields a phylogenetic tree");
    Ok(tree)
}

/// Triples of `r` displayed by `t`.
pub fn displayed_subset(r: &TripleSet, t: &PhyloTree) -> Result<TripleSet> {
    let mut out = TripleSet::new();
    for tr in r {
        if t.displays_triple(tr)? {
            out.insert(*tr);
        }
    }
    Ok(out)
}

/// BMG recognition: properly colored, informative triples consistent, and
/// the Aho tree explains the graph. Improperly colored graphs are not BMGs.
pub fn is_bmg(g: &ColoredDigraph) -> bool {
    lrt(g).is_ok()
}

/// The least resolved tree of a BMG.
pub fn lrt(g: &ColoredDigraph) -> Result<PhyloTree> {
    if g.n() == 0 || !g.is_properly_colored() {
        return Err(Error::NotABmg);
    }
    let all = all_vertices(g);
    let r = informative_on(g, &all);
    let tree = build_with(&r, &all, g.labels(), false).map_err(|_| Error::NotABmg)?;
    if tree.bmg() == *g {
        Ok(tree)
    } else {
        Err(Error::NotABmg)
    }
}

/// sf-colored with a consistent binary-refinable triple set.
pub fn is_binary_explainable(g: &ColoredDigraph) -> bool {
    if g.n() == 0 || !g.is_sf_colored() {
        return false;
    }
    let all = all_vertices(g);
    build_with(&binary_on(g, &all), &all, g.labels(), false).is_ok()
}
