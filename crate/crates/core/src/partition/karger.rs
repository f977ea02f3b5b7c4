//! Randomized edge contraction.

use rand::Rng;

use super::weighted::WeightedGraph;
use crate::graph::{ColoredDigraph, Partition, UnionFind};
use crate::rng::{fork, RngStream};
use crate::urcost::cost_on;

/// One contraction run down to two super-vertices. Edges are contracted in
/// weighted random order, which picks each next edge with probability
/// proportional to its weight among the edges still joining two
/// super-vertices.
fn contract(h: &WeightedGraph, rng: &mut RngStream) -> Partition {
    let mut keyed: Vec<(f64, usize, usize)> = h
        .edges()
        .into_iter()
        .map(|(i, j, w)| {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            (-u.ln() / w, i, j)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut uf = UnionFind::new(h.len());
    for (_, i, j) in keyed {
        if uf.sets() == 2 {
            break;
        }
        uf.union(i, j);
    }
    let labels: Vec<usize> = (0..h.len()).map(|i| uf.find(i)).collect();
    h.partition_from_labels(&labels)
}

/// Best of `runs` contraction outcomes by UR-cost of `g`, earliest on ties.
/// A disconnected `h` yields its component partition.
pub fn karger_best(g: &ColoredDigraph, h: &WeightedGraph, runs: usize, rng: &mut RngStream) -> Partition {
    let components = h.components();
    if components.len() > 1 {
        return components;
    }
    let mut best: Option<(usize, Partition)> = None;
    for _ in 0..runs.max(1) {
        let p = contract(h, &mut fork(rng));
        let c = cost_on(g, &p);
        if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
            best = Some((c, p));
        }
    }
    best.expect("at least one run").1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::g1;
    use crate::rng::stream;

    #[test]
    fn forced_outcomes() {
        let g = g1();
        let edge = WeightedGraph::from_edges(&[0, 1], &[(0, 1)]);
        let sub = g.induced_subgraph(&[0, 1]).unwrap();
        for seed in 0..5 {
            let p = karger_best(&sub, &edge, 3, &mut stream(seed));
            assert_eq!(p.blocks(), &[vec![0], vec![1]]);
        }
        let aho = WeightedGraph::from_edges(&[0, 1, 2], &[(0, 1)]);
        let p = karger_best(&g, &aho, 5, &mut stream(3));
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(cost_on(&g, &p), 0);
    }

    #[test]
    fn connected_contraction_yields_two_blocks() {
        let g = g1();
        let tri = WeightedGraph::from_edges(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]);
        for seed in 0..10 {
            let p = karger_best(&g, &tri, 4, &mut stream(seed));
            assert_eq!(p.len(), 2);
        }
    }

    #[test]
    fn more_runs_never_cost_more() {
        let g = g1();
        let tri = WeightedGraph::from_edges(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]);
        for seed in 0..10 {
            let mut last = usize::MAX;
            for runs in 1..6 {
                let c = cost_on(&g, &karger_best(&g, &tri, runs, &mut stream(seed)));
                assert!(c <= last);
                last = c;
            }
        }
    }
}
