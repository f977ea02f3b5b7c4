//! Exact global minimum cut.

use super::weighted::WeightedGraph;
use crate::error::{Error, Result};
use crate::graph::Partition;

/// Minimum-weight bipartition of `h` and its cut weight.
///
/// A disconnected graph yields one of its components against the rest at
/// weight 0.
pub fn stoer_wagner_mincut(h: &WeightedGraph) -> Result<(Partition, f64)> {
    let n = h.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "minimum cut needs at least two vertices, got {n}"
        )));
    }
    let labels = h.component_labels();
    if labels.iter().any(|&l| l != labels[0]) {
        let side: Vec<usize> = labels.iter().map(|&l| usize::from(l != labels[0])).collect();
        return Ok((h.partition_from_labels(&side), 0.0));
    }

    let mut w: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 0.0 } else { h.weight(i, j) }).collect()).collect();
    // Original vertices merged into each super-vertex.
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    let mut best_side: Vec<usize> = Vec::new();

    while active.len() > 1 {
        let mut conn = vec![0.0; n];
        let mut added = vec![false; n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            let mut pick = usize::MAX;
            for &v in &active {
                if !added[v] && (pick == usize::MAX || conn[v] > conn[pick]) {
                    pick = v;
                }
            }
            added[pick] = true;
            if step == active.len() - 1 {
                if conn[pick] < best {
                    best = conn[pick];
                    best_side = members[pick].clone();
                }
                last = pick;
            } else {
                prev = pick;
                for &v in &active {
                    if !added[v] {
                        conn[v] += w[pick][v];
                    }
                }
            }
        }
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &active {
            let add = w[last][v];
            w[prev][v] += add;
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0.0;
        active.retain(|&v| v != last);
    }

    let mut side = vec![0usize; n];
    for &i in &best_side {
        side[i] = 1;
    }
    Ok((h.partition_from_labels(&side), best))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cuts() {
        let h = WeightedGraph::from_edges(&[0, 1], &[(0, 1)]);
        let (p, w) = stoer_wagner_mincut(&h).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1]]);
        assert_eq!(w, 1.0);

        let path = WeightedGraph::from_edges(&[0, 1, 2], &[(0, 1), (1, 2)]);
        let (p, w) = stoer_wagner_mincut(&path).unwrap();
        assert_eq!(w, 1.0);
        assert_eq!(p.len(), 2);
        assert!(p.blocks().iter().any(|b| b == &vec![1, 2] || b == &vec![0, 1]));

        let k4: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let (p, w) = stoer_wagner_mincut(&WeightedGraph::from_edges(&[0, 1, 2, 3], &k4)).unwrap();
        assert_eq!(w, 3.0);
        assert!(p.has_singleton());
    }

    #[test]
    fn disconnected_and_degenerate() {
        let h = WeightedGraph::from_edges(&[0, 1, 2, 3], &[(0, 1), (2, 3)]);
        let (p, w) = stoer_wagner_mincut(&h).unwrap();
        assert_eq!(w, 0.0);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
        let lone = WeightedGraph::from_edges(&[4], &[]);
        assert!(stoer_wagner_mincut(&lone).is_err());
    }

    #[test]
    fn weighted_cut_prefers_light_edges() {
        let mut h = WeightedGraph::new(&[0, 1, 2, 3]);
        h.set_weight(0, 1, 5.0);
        h.set_weight(1, 2, 1.0);
        h.set_weight(2, 3, 5.0);
        h.set_weight(0, 3, 1.5);
        let (p, w) = stoer_wagner_mincut(&h).unwrap();
        assert_eq!(w, 2.5);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
    }
}
