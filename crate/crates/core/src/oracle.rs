//! Exhaustive reference computations for small instances.
//!
//! Everything here enumerates trees or partitions and refuses inputs above
//! a fixed size with [`Error::TooLarge`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{ArcEditSet, ColoredDigraph, Labels, Partition, Vertex};
use crate::tree::{PhyloTree, Shape};
use crate::urcost::cost_on;

/// Largest vertex count accepted by tree enumeration.
pub const TREE_LIMIT: usize = 7;
/// Largest vertex count accepted by partition enumeration.
pub const PARTITION_LIMIT: usize = 10;

fn guard(op: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { op, size, limit })
    } else {
        Ok(())
    }
}

/// All set partitions of `items` with at least `min_blocks` blocks, in
/// restricted-growth order.
pub fn set_partitions<T: Copy>(items: &[T], min_blocks: usize) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<T>> = Vec::new();
    fn go<T: Copy>(items: &[T], i: usize, blocks: &mut Vec<Vec<T>>, min: usize, out: &mut Vec<Vec<Vec<T>>>) {
        if i == items.len() {
            if blocks.len() >= min {
                out.push(blocks.clone());
            }
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[i]);
            go(items, i + 1, blocks, min, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[i]]);
        go(items, i + 1, blocks, min, out);
        blocks.pop();
    }
    if !items.is_empty() {
        go(items, 0, &mut blocks, min_blocks, &mut out);
    }
    out
}

/// Memoized shapes of all phylogenetic trees per leaf subset.
struct ShapeTable {
    leaves: Vec<Vertex>,
    memo: HashMap<u32, Arc<Vec<Shape>>>,
}

impl ShapeTable {
    fn new(leaves: &[Vertex]) -> Self {
        ShapeTable {
            leaves: leaves.to_vec(),
            memo: HashMap::new(),
        }
    }

    fn shapes(&mut self, mask: u32) -> Arc<Vec<Shape>> {
        if let Some(s) = self.memo.get(&mask) {
            return s.clone();
        }
        let bits: Vec<u32> = (0..self.leaves.len() as u32).filter(|b| mask >> b & 1 == 1).collect();
        let result = if bits.len() == 1 {
            vec![Shape::Leaf(self.leaves[bits[0] as usize])]
        } else {
            let mut out = Vec::new();
            for blocks in set_partitions(&bits, 2) {
                let masks: Vec<u32> = blocks.iter().map(|b| b.iter().map(|&i| 1 << i).sum()).collect();
                out.extend(self.products(&masks));
            }
            out
        };
        let result = Arc::new(result);
        self.memo.insert(mask, result.clone());
        result
    }

    /// Inner nodes whose children range over all shapes of each block.
    fn products(&mut self, masks: &[u32]) -> Vec<Shape> {
        let options: Vec<Arc<Vec<Shape>>> = masks.iter().map(|&m| self.shapes(m)).collect();
        let mut acc: Vec<Vec<Shape>> = vec![Vec::new()];
        for opt in &options {
            let mut next = Vec::with_capacity(acc.len() * opt.len());
            for prefix in &acc {
                for s in opt.iter() {
                    let mut p = prefix.clone();
                    p.push(s.clone());
                    next.push(p);
                }
            }
            acc = next;
        }
        acc.into_iter().map(Shape::Inner).collect()
    }

    fn mask_of(&self, block: &[Vertex]) -> u32 {
        block
            .iter()
            .map(|v| 1 << self.leaves.iter().position(|u| u == v).expect("leaf"))
            .sum()
    }
}

fn to_trees(labels: &Arc<Labels>, shapes: Vec<Shape>) -> Result<Vec<PhyloTree>> {
    shapes
        .iter()
        .map(|s| PhyloTree::from_shape(labels.clone(), s))
        .collect()
}

/// Every phylogenetic tree on `leaves`, each exactly once up to child order.
pub fn enumerate_trees(labels: &Arc<Labels>, leaves: &[Vertex]) -> Result<Vec<PhyloTree>> {
    guard("tree enumeration", leaves.len(), TREE_LIMIT)?;
    if leaves.is_empty() {
        return Ok(Vec::new());
    }
    let mut table = ShapeTable::new(leaves);
    let full = (1u32 << leaves.len()) - 1;
    let shapes = table.shapes(full);
    to_trees(labels, shapes.to_vec())
}

/// Every phylogenetic tree whose root partition is `p`.
pub fn trees_with_root_partition(labels: &Arc<Labels>, p: &Partition) -> Result<Vec<PhyloTree>> {
    guard("tree enumeration", p.ground_len(), TREE_LIMIT)?;
    if p.len() < 2 {
        return Err(Error::InvalidPartition("need at least two blocks".into()));
    }
    let mut table = ShapeTable::new(&p.ground());
    let masks: Vec<u32> = p.blocks().iter().map(|b| table.mask_of(b)).collect();
    let shapes = table.products(&masks);
    to_trees(labels, shapes)
}

/// `E(g) △ E(BMG(t))`.
pub fn u_of_tree(g: &ColoredDigraph, t: &PhyloTree) -> Result<ArcEditSet> {
    if t.labels() != g.labels() || t.leaf_count() != g.n() {
        return Err(Error::VertexMismatch(
            "tree leaves must be exactly the graph's vertices".into(),
        ));
    }
    g.arc_difference(&t.bmg())
}

fn intersect_all(g: &ColoredDigraph, trees: &[PhyloTree]) -> Result<ArcEditSet> {
    let mut acc: Option<ArcEditSet> = None;
    for t in trees {
        let u = u_of_tree(g, t)?;
        acc = Some(match acc {
            None => u,
            Some(a) => a.intersection(&u),
        });
    }
    Ok(acc.unwrap_or_default())
}

/// Relations wrong in the BMG of every tree with root partition `p`.
pub fn brute_force_u(g: &ColoredDigraph, p: &Partition) -> Result<ArcEditSet> {
    guard("brute-force unsatisfiable relations", g.n(), TREE_LIMIT)?;
    if p.ground_len() != g.n() || p.ground().iter().any(|&v| v >= g.n()) {
        return Err(Error::InvalidPartition("partition must cover the graph".into()));
    }
    intersect_all(g, &trees_with_root_partition(g.labels(), p)?)
}

/// Relations wrong in the BMG of every tree on `V(g)`.
pub fn brute_force_u_star(g: &ColoredDigraph) -> Result<ArcEditSet> {
    guard("brute-force globally unsatisfiable relations", g.n(), TREE_LIMIT)?;
    if g.n() < 2 {
        return Ok(ArcEditSet::new());
    }
    let all: Vec<Vertex> = g.vertices().collect();
    intersect_all(g, &enumerate_trees(g.labels(), &all)?)
}

/// An optimal tree and the minimum edit cost; the first optimum in
/// enumeration order.
pub fn exact_edit(g: &ColoredDigraph) -> Result<(PhyloTree, usize)> {
    guard("exact editing", g.n(), TREE_LIMIT)?;
    g.ensure_proper()?;
    let all: Vec<Vertex> = g.vertices().collect();
    let mut best: Option<(PhyloTree, usize)> = None;
    for t in enumerate_trees(g.labels(), &all)? {
        let c = u_of_tree(g, &t)?.len();
        if best.as_ref().is_none_or(|(_, bc)| c < *bc) {
            best = Some((t, c));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("cannot edit a graph without vertices".into()))
}

/// Cheapest partition into at least two blocks (or exactly two).
pub fn exact_min_cost_partition(g: &ColoredDigraph, bipartition_only: bool) -> Result<(Partition, usize)> {
    guard("exact partition search", g.n(), PARTITION_LIMIT)?;
    g.ensure_proper()?;
    let all: Vec<Vertex> = g.vertices().collect();
    let mut best: Option<(Partition, usize)> = None;
    for blocks in set_partitions(&all, 2) {
        if bipartition_only && blocks.len() != 2 {
            continue;
        }
        let p = Partition::from_blocks(blocks);
        let c = cost_on(g, &p);
        if best.as_ref().is_none_or(|(_, bc)| c < *bc) {
            best = Some((p, c));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("need at least two vertices".into()))
}
