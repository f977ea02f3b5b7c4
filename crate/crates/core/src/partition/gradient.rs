//! Hill descent on UR-cost over bipartitions.

use rand::seq::SliceRandom;

use crate::graph::{ColoredDigraph, Partition, Vertex};
use crate::rng::RngStream;
use crate::urcost::IncrementalCost;

/// Descends from a random balanced bipartition of `vertices`.
pub fn gradient_walk(g: &ColoredDigraph, vertices: &[Vertex], rng: &mut RngStream) -> Partition {
    let m = vertices.len();
    assert!(m >= 2, "bipartition needs at least two vertices");
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut assignment = vec![1; m];
    for &i in &order[..m / 2] {
        assignment[i] = 0;
    }
    descend(g, vertices, &assignment, rng)
}

/// Descends from the given bipartition.
pub fn gradient_walk_from(g: &ColoredDigraph, start: &Partition, rng: &mut RngStream) -> Partition {
    assert_eq!(start.len(), 2, "start must be a bipartition");
    let vertices = start.ground();
    let idx = start.block_index(vertices.last().map_or(0, |&v| v + 1));
    let assignment: Vec<usize> = vertices.iter().map(|&v| idx[v].expect("in ground")).collect();
    descend(g, &vertices, &assignment, rng)
}

/// Applies the best improving move (random among ties) until none remain.
/// Moves never empty a block.
fn descend(g: &ColoredDigraph, vertices: &[Vertex], assignment: &[usize], rng: &mut RngStream) -> Partition {
    let m = vertices.len();
    let mut state = IncrementalCost::new(g, vertices, assignment, 2);
    loop {
        let mut min = 0isize;
        let mut ties = Vec::new();
        for i in 0..m {
            let from = state.block_of(i);
            if state.block_size(from) == 1 {
                continue;
            }
            let d = state.move_delta(i, 1 - from);
            if d < min {
                min = d;
                ties.clear();
            }
            if d < 0 && d == min {
                ties.push(i);
            }
        }
        match ties.choose(rng) {
            Some(&i) => {
                let to = 1 - state.block_of(i);
                state.apply_move(i, to);
            }
            None => return state.partition(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g1, g3};
    use crate::rng::stream;
    use crate::urcost::cost_on;

    #[test]
    fn descends_to_cost_zero_on_g1() {
        let start = Partition::new(vec![vec![0, 2], vec![1]]).unwrap();
        let p = gradient_walk_from(&g1(), &start, &mut stream(0));
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
        let p = gradient_walk_from(&g1(), &p, &mut stream(0));
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn stuck_at_forced_split() {
        let start = Partition::new(vec![vec![0], vec![1]]).unwrap();
        assert_eq!(gradient_walk_from(&g3(), &start, &mut stream(0)), start);
        let p = gradient_walk(&g3(), &[0, 1], &mut stream(4));
        assert_eq!(cost_on(&g3(), &p), 2);
    }

    #[test]
    fn random_start_reaches_a_local_minimum() {
        for seed in 0..10 {
            let p = gradient_walk(&g1(), &[0, 1, 2], &mut stream(seed));
            assert_eq!(p.len(), 2);
            assert_eq!(cost_on(&g1(), &p), 0);
        }
    }
}
