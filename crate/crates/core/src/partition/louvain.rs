//! Louvain community detection with modularity or UR-cost as objective.

use rand::seq::SliceRandom;

use super::weighted::WeightedGraph;
use crate::graph::{ColoredDigraph, Partition};
use crate::rng::RngStream;
use crate::urcost::IncrementalCost;

/// What the local moves optimize.
#[derive(Debug, Clone, Copy)]
pub enum Objective<'a> {
    /// Maximize modularity of the Aho graph.
    Modularity,
    /// Minimize UR-cost of the given working graph.
    UrCost(&'a ColoredDigraph),
}

/// `q = Σ_W Σ_{u,v ∈ W} (a_uv − d_u d_v / 2m)`, without the usual `1/2m`
/// prefactor; 0 for an edgeless graph.
pub fn modularity(h: &WeightedGraph, p: &Partition) -> f64 {
    let two_m = 2.0 * h.total_weight();
    if two_m == 0.0 {
        return 0.0;
    }
    let pos = |v| h.vertices().iter().position(|&u| u == v).expect("vertex of h");
    let mut q = 0.0;
    for b in p.blocks() {
        let idx: Vec<usize> = b.iter().map(|&v| pos(v)).collect();
        for &u in &idx {
            for &v in &idx {
                q += h.weight(u, v) - h.degree(u) * h.degree(v) / two_m;
            }
        }
    }
    q
}

/// Louvain optimization on `h`. Never returns the one-block partition:
/// moves that would merge the last two communities are rejected.
pub fn louvain(h: &WeightedGraph, objective: Objective<'_>, rng: &mut RngStream) -> Partition {
    let n = h.len();
    assert!(n >= 2, "community detection needs at least two vertices");
    // Original local indices inside each node of the current level.
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut level = h.clone();
    loop {
        let comm = local_moves(&level, &members, objective, h, rng);
        let groups = compact(&comm);
        if groups == level.len() {
            break;
        }
        let mut next = WeightedGraph::new(&(0..groups).collect::<Vec<_>>());
        for i in 0..level.len() {
            for j in 0..level.len() {
                let w = level.weight(i, j);
                if w > 0.0 {
                    let (a, b) = (comm[i], comm[j]);
                    if a == b {
                        if i <= j {
                            next.add_weight(a, a, if i == j { w } else { 2.0 * w });
                        }
                    } else if i < j {
                        next.add_weight(a, b, w);
                    }
                }
            }
        }
        let mut merged = vec![Vec::new(); groups];
        for (i, m) in members.into_iter().enumerate() {
            merged[comm[i]].extend(m);
        }
        members = merged;
        level = next;
    }
    let mut labels = vec![0; n];
    for (c, m) in members.iter().enumerate() {
        for &i in m {
            labels[i] = c;
        }
    }
    h.partition_from_labels(&labels)
}

/// Relabels communities to `0..k` in order of first appearance; returns `k`.
fn compact(comm: &[usize]) -> usize {
    let mut seen: Vec<Option<usize>> = vec![None; comm.len()];
    let mut k = 0;
    for &c in comm {
        if seen[c].is_none() {
            seen[c] = Some(k);
            k += 1;
        }
    }
    k
}

/// One phase of local moves on a level graph; returns compacted community
/// labels per node.
fn local_moves(
    level: &WeightedGraph,
    members: &[Vec<usize>],
    objective: Objective<'_>,
    original: &WeightedGraph,
    rng: &mut RngStream,
) -> Vec<usize> {
    let n = level.len();
    let mut comm: Vec<usize> = (0..n).collect();
    let mut size = vec![1usize; n];
    let mut communities = n;
    let degree: Vec<f64> = (0..n).map(|i| level.degree(i)).collect();
    let two_m = 2.0 * level.total_weight();
    let mut tot = degree.clone();
    let mut cost_state = match objective {
        Objective::UrCost(g) => {
            let assignment: Vec<usize> = {
                let mut a = vec![0; original.len()];
                for (node, m) in members.iter().enumerate() {
                    for &i in m {
                        a[i] = node;
                    }
                }
                a
            };
            Some(IncrementalCost::new(g, original.vertices(), &assignment, n))
        }
        Objective::Modularity => None,
    };

    let mut order: Vec<usize> = (0..n).collect();
    let mut improved = true;
    while improved {
        improved = false;
        order.shuffle(rng);
        for &i in &order {
            let from = comm[i];
            if size[from] == 1 && communities == 2 {
                continue;
            }
            let mut links = vec![0.0; n];
            let mut candidates = Vec::new();
            for j in level.neighbors(i) {
                if links[comm[j]] == 0.0 && comm[j] != from {
                    candidates.push(comm[j]);
                }
                links[comm[j]] += level.weight(i, j);
            }
            candidates.sort_unstable();
            let mut best: Option<(f64, usize)> = None;
            for &to in &candidates {
                let gain = match cost_state.as_mut() {
                    None => {
                        if two_m == 0.0 {
                            continue;
                        }
                        let away = links[from] - degree[i] * (tot[from] - degree[i]) / two_m;
                        let into = links[to] - degree[i] * tot[to] / two_m;
                        2.0 * (into - away)
                    }
                    Some(state) => -(state.group_delta(&members[i], to) as f64),
                };
                if gain > 1e-9 && best.is_none_or(|(bg, _)| gain > bg + 1e-9) {
                    best = Some((gain, to));
                }
            }
            if let Some((_, to)) = best {
                if let Some(state) = cost_state.as_mut() {
                    for &v in &members[i] {
                        state.apply_move(v, to);
                    }
                }
                tot[from] -= degree[i];
                tot[to] += degree[i];
                size[from] -= 1;
                size[to] += 1;
                if size[from] == 0 {
                    communities -= 1;
                }
                comm[i] = to;
                improved = true;
            }
        }
    }
    let mut relabel: Vec<Option<usize>> = vec![None; n];
    let mut k = 0;
    comm.iter()
        .map(|&c| {
            *relabel[c].get_or_insert_with(|| {
                k += 1;
                k - 1
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::g1;
    use crate::rng::stream;
    use crate::urcost::cost_on;

    #[test]
    fn modularity_values() {
        let h = WeightedGraph::from_edges(&[0, 1], &[(0, 1)]);
        let split = Partition::new(vec![vec![0], vec![1]]).unwrap();
        let whole = Partition::new(vec![vec![0, 1]]).unwrap();
        assert!((modularity(&h, &split) + 1.0).abs() < 1e-12);
        assert!(modularity(&h, &whole).abs() < 1e-12);
        let empty = WeightedGraph::from_edges(&[0, 1, 2], &[]);
        assert_eq!(modularity(&empty, &Partition::discrete(&[0, 1, 2])), 0.0);
    }

    #[test]
    fn separates_disjoint_edges() {
        let h = WeightedGraph::from_edges(&[0, 1, 2, 3], &[(0, 1), (2, 3)]);
        for seed in 0..5 {
            let p = louvain(&h, Objective::Modularity, &mut stream(seed));
            assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
        }
    }

    #[test]
    fn keeps_two_communities() {
        let h = WeightedGraph::from_edges(&[0, 1], &[(0, 1)]);
        let p = louvain(&h, Objective::Modularity, &mut stream(0));
        assert_eq!(p.blocks(), &[vec![0], vec![1]]);
        let k4: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let h = WeightedGraph::from_edges(&[0, 1, 2, 3], &k4);
        for seed in 0..5 {
            assert!(louvain(&h, Objective::Modularity, &mut stream(seed)).len() >= 2);
        }
    }

    #[test]
    fn cost_objective_on_g1() {
        let g = g1();
        let h = WeightedGraph::from_edges(&[0, 1, 2], &[(0, 1)]);
        for seed in 0..5 {
            let p = louvain(&h, Objective::UrCost(&g), &mut stream(seed));
            assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
            assert_eq!(cost_on(&g, &p), 0);
        }
    }

    #[test]
    fn merges_two_cliques() {
        let mut edges = Vec::new();
        for base in [0, 4] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((base + i, base + j));
                }
            }
        }
        edges.push((3, 4));
        let verts: Vec<usize> = (0..8).collect();
        let h = WeightedGraph::from_edges(&verts, &edges);
        let p = louvain(&h, Objective::Modularity, &mut stream(2));
        assert_eq!(p.blocks(), &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
    }
}
