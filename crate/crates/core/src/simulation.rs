//! Random leaf-colored trees and arc perturbations.

use std::sync::Arc;

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, Labels};
use crate::rng::RngStream;
use crate::tree::{NodeId, PhyloTree, TreeArena};

/// Independent arc deletion and insertion probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationSpec {
    pub p_ins: f64,
    pub p_del: f64,
}

impl PerturbationSpec {
    pub fn new(p_ins: f64, p_del: f64) -> Result<Self> {
        for (name, p) in [("insertion", p_ins), ("deletion", p_del)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!(
                    "{name} probability {p} outside [0, 1]"
                )));
            }
        }
        Ok(PerturbationSpec { p_ins, p_del })
    }
}

/// Random tree with `n` leaves and exactly `l` colors.
///
/// Grows from a single vertex: a uniformly chosen inner vertex receives one
/// new leaf, a chosen leaf receives two.
pub fn random_colored_tree(n: usize, l: usize, rng: &mut RngStream) -> Result<PhyloTree> {
    grow(n, l, false, rng)
}

/// Random binary tree: only leaves are chosen, each receiving two new
/// leaves.
pub fn random_binary_colored_tree(n: usize, l: usize, rng: &mut RngStream) -> Result<PhyloTree> {
    grow(n, l, true, rng)
}

fn grow(n: usize, l: usize, binary: bool, rng: &mut RngStream) -> Result<PhyloTree> {
    if n == 0 || l == 0 || l > n {
        return Err(Error::InvalidInput(format!(
            "need 1 <= colors <= leaves, got {l} colors for {n} leaves"
        )));
    }
    let mut arena = TreeArena::new();
    let root = arena.leaf(0);
    let mut leaves: Vec<NodeId> = vec![root];
    let mut all: Vec<NodeId> = vec![root];
    while leaves.len() < n {
        let pool = if binary { &leaves } else { &all };
        let &v = pool.choose(rng).expect("nonempty tree");
        if arena.is_leaf(v) {
            arena.make_inner(v);
            leaves.retain(|&u| u != v);
            for _ in 0..2 {
                let c = arena.leaf(0);
                arena.attach(v, c);
                leaves.push(c);
                all.push(c);
            }
        } else {
            let c = arena.leaf(0);
            arena.attach(v, c);
            leaves.push(c);
            all.push(c);
        }
    }
    for (i, &u) in leaves.iter().enumerate() {
        arena.set_leaf(u, i);
    }
    let colors = assign_colors(n, l, rng);
    let labels = Labels::new(
        colors
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("v{i}"), format!("c{c}"))),
    )?;
    arena.finish(Arc::new(labels), root)
}

/// Colors `0..l` for `n` leaves: `l` distinct leaves get one mandatory color
/// each, the rest are uniform.
fn assign_colors(n: usize, l: usize, rng: &mut RngStream) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..l)).collect();
    for (c, i) in index::sample(rng, n, l).into_iter().enumerate() {
        colors[i] = c;
    }
    colors
}

/// Deletes each arc with probability `p_del` and inserts each missing
/// cross-color arc with probability `p_ins`, one draw per ordered pair.
pub fn perturb(g: &ColoredDigraph, spec: &PerturbationSpec, rng: &mut RngStream) -> Result<ColoredDigraph> {
    g.ensure_proper()?;
    let mut out = g.clone();
    for x in g.vertices() {
        for y in g.vertices() {
            if g.color(x) == g.color(y) {
                continue;
            }
            let u: f64 = rng.gen();
            let p = if g.has_arc(x, y) { spec.p_del } else { spec.p_ins };
            if u < p {
                out.toggle_arc(x, y);
            }
        }
    }
    Ok(out)
}
