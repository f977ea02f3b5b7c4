//! Greedy construction of a bipartition by single-vertex moves.

use rand::seq::SliceRandom;

use crate::graph::{ColoredDigraph, Partition, Vertex};
use crate::rng::RngStream;
use crate::urcost::IncrementalCost;

/// Starts with all of `vertices` in the second block and moves, `|V′| − 1`
/// times, the vertex whose move yields the cheapest bipartition (random
/// among ties). Returns the cheapest bipartition seen.
pub fn simple_greedy(g: &ColoredDigraph, vertices: &[Vertex], rng: &mut RngStream) -> Partition {
    let m = vertices.len();
    assert!(m >= 2, "greedy split needs at least two vertices");
    let mut state = IncrementalCost::new(g, vertices, &vec![1; m], 2);
    let mut best: Option<(usize, Partition)> = None;
    for _ in 0..m - 1 {
        let mut min = isize::MAX;
        let mut ties = Vec::new();
        for i in 0..m {
            if state.block_of(i) != 1 {
                continue;
            }
            let d = state.move_delta(i, 0);
            if d < min {
                min = d;
                ties.clear();
            }
            if d == min {
                ties.push(i);
            }
        }
        let &pick = ties.choose(rng).expect("second block nonempty");
        state.apply_move(pick, 0);
        if best.as_ref().is_none_or(|(c, _)| state.cost() < *c) {
            best = Some((state.cost(), state.partition()));
        }
    }
    best.expect("at least one step").1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g1, g3};
    use crate::rng::stream;
    use crate::urcost::cost_on;

    #[test]
    fn fixture_splits() {
        for seed in 0..5 {
            let p = simple_greedy(&g1(), &[0, 1, 2], &mut stream(seed));
            assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
            assert_eq!(cost_on(&g1(), &p), 0);
            let p = simple_greedy(&g3(), &[0, 1], &mut stream(seed));
            assert_eq!(cost_on(&g3(), &p), 2);
        }
    }
}
