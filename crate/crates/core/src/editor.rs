//! BMG editing by recursive partitioning, the triple-based heuristic, BPMF,
//! and the rebuild step.

use std::sync::Arc;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::{ArcEditSet, ColoredDigraph, Labels, Partition, Vertex};
use crate::partition::{kk_bipartition, Method, PartitionStrategy, StepInput, WeightedGraph};
use crate::rng::RngStream;
use crate::tree::{NodeId, PhyloTree, TreeArena};
use crate::triples::{
    aho_edges, binary_on, build_with, displayed_subset, informative_on, triples_on, Triple,
    TripleKind, TripleSet,
};
use crate::urcost::decomposition_on;

/// Which editor produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    General,
    Simple,
    Binary,
    Bpmf,
}

/// Result of an editing run.
#[derive(Debug, Clone)]
pub struct EditRecord {
    /// The edited graph; always the BMG of `tree`.
    pub edited: ColoredDigraph,
    pub tree: PhyloTree,
    /// Arcs toggled relative to the input.
    pub edits: ArcEditSet,
    /// `(|V′|, UR-cost)` of every recursion step in processing order.
    pub step_costs: Vec<(usize, usize)>,
    pub variant: Variant,
}

impl EditRecord {
    pub fn cost(&self) -> usize {
        self.edits.len()
    }

    pub fn step_cost_sum(&self) -> usize {
        self.step_costs.iter().map(|&(_, c)| c).sum()
    }
}

/// Runs the recursion with `split` choosing the partition of each vertex
/// subset with at least two vertices, applying that partition's
/// unsatisfiable relations before recursing into its blocks.
fn recurse(
    g: &ColoredDigraph,
    variant: Variant,
    mut split: impl FnMut(&ColoredDigraph, &[Vertex]) -> Result<Partition>,
) -> Result<EditRecord> {
    let mut work = g.clone();
    let mut arena = TreeArena::new();
    let mut steps = Vec::new();
    let mut stack: Vec<(Vec<Vertex>, Option<NodeId>)> = vec![(g.vertices().collect(), None)];
    let mut root = None;
    while let Some((vs, parent)) = stack.pop() {
        let node = if vs.len() == 1 {
            arena.leaf(vs[0])
        } else {
            let p = split(&work, &vs)?;
            let u = decomposition_on(&work, &p).union();
            work.apply_edits_unchecked(&u);
            steps.push((vs.len(), u.len()));
            let node = arena.inner();
            for b in p.blocks().iter().rev() {
                stack.push((b.clone(), Some(node)));
            }
            node
        };
        match parent {
            Some(p) => arena.attach(p, node),
            None => root = Some(node),
        }
    }
    let tree = arena.finish(g.labels().clone(), root.ok_or_else(|| {
        Error::InvalidInput("cannot edit a graph without vertices".into())
    })?)?;
    let edits = g.arc_difference(&work)?;
    Ok(EditRecord {
        edited: work,
        tree,
        edits,
        step_costs: steps,
        variant,
    })
}

/// Aho-graph driven split: components if disconnected, otherwise the
/// strategy's partition; coarse-grained to two blocks in binary mode.
fn aho_split<'s>(
    kind: TripleKind,
    binary: bool,
    strategy: &'s dyn PartitionStrategy,
    restarts: usize,
    rng: &'s mut RngStream,
) -> impl FnMut(&ColoredDigraph, &[Vertex]) -> Result<Partition> + 's {
    move |work, vs| {
        let edges = aho_edges(&triples_on(work, vs, kind));
        let aho = WeightedGraph::from_edges(vs, &edges);
        let components = aho.components();
        let mut p = if components.len() > 1 {
            components
        } else {
            let input = StepInput {
                graph: work,
                vertices: vs,
                aho: &aho,
                restarts,
            };
            strategy.partition(&input, rng)
        };
        if binary && p.len() > 2 {
            p = kk_bipartition(&p)?;
        }
        Ok(p)
    }
}

fn require_editable(g: &ColoredDigraph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("cannot edit a graph without vertices".into()));
    }
    g.ensure_proper()
}

/// Recursive editing with locally optimal steps on informative triples.
pub fn edit_general(
    g: &ColoredDigraph,
    strategy: &dyn PartitionStrategy,
    restarts: usize,
    rng: &mut RngStream,
) -> Result<EditRecord> {
    require_editable(g)?;
    recurse(
        g,
        Variant::General,
        aho_split(TripleKind::Informative, false, strategy, restarts, rng),
    )
}

/// Editing towards a binary-explainable BMG: Aho graphs on the extended
/// triple set and every split coarse-grained to a bipartition.
pub fn edit_binary(
    g: &ColoredDigraph,
    strategy: &dyn PartitionStrategy,
    restarts: usize,
    rng: &mut RngStream,
) -> Result<EditRecord> {
    require_editable(g)?;
    recurse(
        g,
        Variant::Binary,
        aho_split(TripleKind::Binary, true, strategy, restarts, rng),
    )
}

fn check_leaves(g: &ColoredDigraph, t: &PhyloTree) -> Result<()> {
    if t.labels() != g.labels() {
        return Err(Error::VertexMismatch(
            "tree and graph use different vertex labels".into(),
        ));
    }
    if t.leaf_count() != g.n() {
        return Err(Error::VertexMismatch(format!(
            "tree has {} leaves, graph has {} vertices",
            t.leaf_count(),
            g.n()
        )));
    }
    Ok(())
}

/// Runs the recursion with the partitions dictated by `t`; the result is
/// the BMG of `t`, with its step-wise UR-costs.
pub fn replay_tree(g: &ColoredDigraph, t: &PhyloTree, variant: Variant) -> Result<EditRecord> {
    check_leaves(g, t)?;
    g.ensure_proper()?;
    recurse(g, variant, |_, vs| {
        let u = t.lca_of_leaves(vs)?;
        t.child_partition(u)
    })
}

/// The simple triple-based heuristic: keep the informative triples
/// displayed by `tree_builder`'s tree, rebuild with `BUILD`, and return the
/// BMG of the rebuilt tree.
pub fn edit_simple(
    g: &ColoredDigraph,
    tree_builder: impl FnOnce(&ColoredDigraph, &TripleSet) -> Result<PhyloTree>,
) -> Result<EditRecord> {
    require_editable(g)?;
    let all: Vec<Vertex> = g.vertices().collect();
    let r: TripleSet = informative_on(g, &all).into_iter().collect();
    let heuristic = tree_builder(g, &r)?;
    check_leaves(g, &heuristic)?;
    let kept = displayed_subset(&r, &heuristic)?;
    let tree = build_with(&kept.to_vec(), &all, g.labels(), false)
        .expect("displayed triples are consistent");
    replay_tree(g, &tree, Variant::Simple)
}

/// Tree builder for [`edit_simple`] using the recursive editor's tree.
pub fn general_builder<'a>(
    strategy: &'a dyn PartitionStrategy,
    restarts: usize,
    rng: &'a mut RngStream,
) -> impl FnOnce(&ColoredDigraph, &TripleSet) -> Result<PhyloTree> + 'a {
    move |g, _| Ok(edit_general(g, strategy, restarts, rng)?.tree)
}

/// Tree builder for [`edit_simple`] using BPMF.
pub fn bpmf_builder(rng: &mut RngStream) -> impl FnOnce(&ColoredDigraph, &TripleSet) -> Result<PhyloTree> + '_ {
    move |g, r| {
        let all: Vec<Vertex> = g.vertices().collect();
        bpmf_tree(r, &all, g.labels(), rng)
    }
}

fn rebuild_with(g: &ColoredDigraph, t: &PhyloTree, kind: TripleKind) -> Result<ColoredDigraph> {
    check_leaves(g, t)?;
    g.ensure_proper()?;
    let all: Vec<Vertex> = g.vertices().collect();
    let r: TripleSet = triples_on(g, &all, kind).into_iter().collect();
    let kept = displayed_subset(&r, t)?;
    let tree = build_with(&kept.to_vec(), &all, g.labels(), kind == TripleKind::Binary)
        .expect("displayed triples are consistent");
    Ok(tree.bmg())
}

/// BMG of the Aho tree of the informative triples of `g` displayed by `t`.
pub fn rebuild_variant(g: &ColoredDigraph, t: &PhyloTree) -> Result<ColoredDigraph> {
    rebuild_with(g, t, TripleKind::Informative)
}

/// Binary counterpart of [`rebuild_variant`]: keeps the displayed triples
/// of the extended set and rebuilds with bipartition coarse-graining.
pub fn rebuild_binary_variant(g: &ColoredDigraph, t: &PhyloTree) -> Result<ColoredDigraph> {
    rebuild_with(g, t, TripleKind::Binary)
}

/// Cluster score from the raw `+1/−1` tally and the two cluster sizes.
pub type BpmfScore = dyn Fn(i64, usize, usize) -> f64;

/// Unit scoring: the raw tally.
pub fn unit_score(raw: i64, _: usize, _: usize) -> f64 {
    raw as f64
}

/// Best-Pair-Merge-First with unit scoring.
pub fn bpmf_tree(
    r: &TripleSet,
    leaves: &[Vertex],
    labels: &Arc<Labels>,
    rng: &mut RngStream,
) -> Result<PhyloTree> {
    bpmf_tree_scored(r, leaves, labels, rng, &unit_score)
}

/// Agglomerative binary tree construction from singletons. A triple `xy|z`
/// with its leaves in three distinct clusters adds 1 to the tally of
/// `(S_x, S_y)` and subtracts 1 from `(S_x, S_z)` and `(S_y, S_z)`; the pair
/// of maximal score merges next (random among ties).
pub fn bpmf_tree_scored(
    r: &TripleSet,
    leaves: &[Vertex],
    labels: &Arc<Labels>,
    rng: &mut RngStream,
    score: &BpmfScore,
) -> Result<PhyloTree> {
    if leaves.is_empty() {
        return Err(Error::InvalidInput("a tree needs at least one leaf".into()));
    }
    let n = labels.len();
    let mut cluster = vec![usize::MAX; n];
    let mut nodes = Vec::new();
    let mut sizes = Vec::new();
    let mut arena = TreeArena::new();
    for (i, &v) in leaves.iter().enumerate() {
        if v >= n {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        cluster[v] = i;
        nodes.push(arena.leaf(v));
        sizes.push(1usize);
    }
    let triples: Vec<Triple> = r
        .iter()
        .filter(|t| {
            let (x, y, z) = t.leaves();
            [x, y, z].iter().all(|&v| v < n && cluster[v] != usize::MAX)
        })
        .copied()
        .collect();
    let mut k = leaves.len();
    let mut tally = vec![0i64; k * k];
    while k > 1 {
        tally[..k * k].iter_mut().for_each(|s| *s = 0);
        for t in &triples {
            let (x, y, z) = t.leaves();
            let (a, b, c) = (cluster[x], cluster[y], cluster[z]);
            if a != b && a != c && b != c {
                tally[a.min(b) * k + a.max(b)] += 1;
                tally[a.min(c) * k + a.max(c)] -= 1;
                tally[b.min(c) * k + b.max(c)] -= 1;
            }
        }
        let mut best = f64::NEG_INFINITY;
        let mut ties = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let s = score(tally[i * k + j], sizes[i], sizes[j]);
                if s > best + 1e-12 {
                    best = s;
                    ties.clear();
                }
                if (s - best).abs() <= 1e-12 {
                    ties.push((i, j));
                }
            }
        }
        let &(i, j) = ties.choose(rng).expect("at least one pair");
        let u = arena.inner();
        arena.attach(u, nodes[i]);
        arena.attach(u, nodes[j]);
        nodes[i] = u;
        sizes[i] += sizes[j];
        // Move the last cluster into slot j.
        let last = k - 1;
        for c in cluster.iter_mut() {
            if *c == j {
                *c = i;
            } else if *c == last && last != j {
                *c = j;
            }
        }
        nodes.swap_remove(j);
        sizes.swap_remove(j);
        k -= 1;
    }
    arena.finish(labels.clone(), nodes[0])
}

/// Runs one named method. Partition methods use the recursive editor;
/// BPMF builds its tree from the (binary-extended, if `binary`) triples and
/// the record is the replay of that tree.
pub fn edit_with_method(
    g: &ColoredDigraph,
    method: Method,
    restarts: usize,
    binary: bool,
    rng: &mut RngStream,
) -> Result<EditRecord> {
    match (method.strategy(), binary) {
        (Some(s), false) => edit_general(g, s, restarts, rng),
        (Some(s), true) => edit_binary(g, s, restarts, rng),
        (None, _) => {
            require_editable(g)?;
            let all: Vec<Vertex> = g.vertices().collect();
            let r: TripleSet = if binary {
                binary_on(g, &all).into_iter().collect()
            } else {
                informative_on(g, &all).into_iter().collect()
            };
            let t = bpmf_tree(&r, &all, g.labels(), rng)?;
            replay_tree(g, &t, Variant::Bpmf)
        }
    }
}

/// The rebuild counterpart for a method run: binary rebuild in binary mode.
pub fn rebuild_for(g: &ColoredDigraph, t: &PhyloTree, binary: bool) -> Result<ColoredDigraph> {
    if binary {
        rebuild_binary_variant(g, t)
    } else {
        rebuild_variant(g, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::partition::{LouvainCost, MinCut};
    use crate::rng::stream;
    use crate::tree::Shape;
    use crate::triples::is_bmg;

    fn set(pairs: &[(Vertex, Vertex)]) -> ArcEditSet {
        pairs.iter().copied().collect()
    }

    #[test]
    fn general_editor_on_fixtures() {
        let r = edit_general(&g1(), &MinCut, 5, &mut stream(0)).unwrap();
        assert!(r.edits.is_empty());
        assert_eq!(r.edited, g1());
        assert_eq!(r.tree, t1());

        let r = edit_general(&g2(), &MinCut, 5, &mut stream(0)).unwrap();
        assert_eq!(r.edits, set(&[(2, 0), (2, 1)]));
        assert_eq!(r.step_costs, vec![(3, 2)]);
        assert!(is_bmg(&r.edited));

        let r = edit_general(&g3(), &LouvainCost, 5, &mut stream(0)).unwrap();
        assert_eq!(r.edits, set(&[(0, 1), (1, 0)]));
        assert_eq!(r.edited.arc_count(), 2);
    }

    #[test]
    fn rejects_improper_input() {
        let bad = ColoredDigraph::from_parts(&[("u", "red"), ("w", "red")], &[("u", "w")]).unwrap();
        assert!(matches!(
            edit_general(&bad, &MinCut, 1, &mut stream(0)),
            Err(Error::ImproperColoring(..))
        ));
        assert!(edit_simple(&bad, general_builder(&MinCut, 1, &mut stream(0))).is_err());
    }

    #[test]
    fn simple_editor_on_fixtures() {
        let r = edit_simple(&g2(), general_builder(&MinCut, 5, &mut stream(0))).unwrap();
        assert_eq!(r.edits, set(&[(2, 0), (2, 1)]));
        let r = edit_simple(&g2(), bpmf_builder(&mut stream(9))).unwrap();
        assert_eq!(r.edits, set(&[(2, 0), (2, 1)]));
        let r = edit_simple(&g1(), general_builder(&MinCut, 5, &mut stream(0))).unwrap();
        assert!(r.edits.is_empty());
        let r = edit_simple(&g3(), bpmf_builder(&mut stream(1))).unwrap();
        assert_eq!(r.edits, set(&[(0, 1), (1, 0)]));
        assert_eq!(r.variant, Variant::Simple);
    }

    #[test]
    fn binary_editor_on_fixtures() {
        let r = edit_binary(&g1(), &MinCut, 5, &mut stream(0)).unwrap();
        assert!(r.edits.is_empty());
        assert!(r.tree.is_binary());

        let star = star_abc().bmg();
        let r = edit_binary(&star, &MinCut, 5, &mut stream(0)).unwrap();
        assert_eq!(r.step_costs[0].0, 3);
        let first = Partition::new(vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(r.tree.root_partition().unwrap(), first);
        assert!(r.tree.is_binary());
        assert_eq!(r.cost(), r.step_cost_sum());
        assert_eq!(r.tree.bmg(), r.edited);
    }

    #[test]
    fn replay_reproduces_tree_bmg() {
        let star = PhyloTree::star(g2().labels().clone(), &[0, 1, 2]).unwrap();
        let r = replay_tree(&g2(), &star, Variant::General).unwrap();
        assert_eq!(r.edited, star.bmg());
        assert_eq!(r.cost(), r.step_cost_sum());
        assert_eq!(r.edits, set(&[(2, 0), (2, 1)]));

        let other = PhyloTree::star(abc_labels(), &[0, 1, 2]).unwrap();
        assert!(matches!(replay_tree(&g2(), &other, Variant::General), Err(Error::VertexMismatch(_))));
    }

    #[test]
    fn rebuild_examples() {
        assert_eq!(rebuild_variant(&g1(), &t1()).unwrap(), g1());
        let star = PhyloTree::star(g2().labels().clone(), &[0, 1, 2]).unwrap();
        let expected = g2().apply_edits(&set(&[(2, 0), (2, 1)])).unwrap();
        assert_eq!(rebuild_variant(&g2(), &star).unwrap(), expected);
        let partial = PhyloTree::star(g2().labels().clone(), &[0, 1]).unwrap();
        assert!(rebuild_variant(&g2(), &partial).is_err());
    }

    #[test]
    fn bpmf_examples() {
        let labels = abc_labels();
        let r: TripleSet = [Triple::new(0, 1, 2)].into_iter().collect();
        for seed in 0..5 {
            let t = bpmf_tree(&r, &[0, 1, 2], &labels, &mut stream(seed)).unwrap();
            assert_eq!(t, t1());
        }
        let t = bpmf_tree(&TripleSet::new(), &[0, 1], &labels, &mut stream(0)).unwrap();
        assert_eq!(t.canonical(), "(a:red,b:blue)");
        let t = bpmf_tree(&TripleSet::new(), &[0, 1, 2], &labels, &mut stream(0)).unwrap();
        assert!(t.is_binary());
        assert_eq!(t.leaf_count(), 3);
        let single = bpmf_tree(&TripleSet::new(), &[2], &labels, &mut stream(0)).unwrap();
        assert_eq!(single.leaf_count(), 1);
    }

    #[test]
    fn method_dispatch() {
        for m in Method::ALL {
            for binary in [false, true] {
                let r = edit_with_method(&g2(), m, 3, binary, &mut stream(5)).unwrap();
                assert_eq!(r.tree.bmg(), r.edited, "{m}");
                assert_eq!(r.cost(), r.step_cost_sum(), "{m}");
                if binary {
                    assert!(r.tree.is_binary());
                }
                let rebuilt = rebuild_for(&g2(), &r.tree, binary).unwrap();
                assert!(is_bmg(&rebuilt));
            }
        }
        let t = tree_from(&[("p", "red")], |_| Shape::Leaf(0));
        let lone = t.bmg();
        let r = edit_with_method(&lone, Method::Greedy, 1, false, &mut stream(0)).unwrap();
        assert!(r.edits.is_empty());
        assert!(r.step_costs.is_empty());
    }
}
