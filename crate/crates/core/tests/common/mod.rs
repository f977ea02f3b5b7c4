#![allow(dead_code)]

use std::sync::Arc;

use bmgedit::rng::RngStream;
use bmgedit::{ColoredDigraph, Labels};
use rand::seq::SliceRandom;
use rand::Rng;

/// Properly colored digraph with `n` vertices using exactly `l` colors;
/// each cross-color ordered pair is an arc with probability `density`.
pub fn random_graph(rng: &mut RngStream, n: usize, l: usize, density: f64) -> ColoredDigraph {
    assert!(1 <= l && l <= n);
    let mut colors: Vec<usize> = (0..n).map(|i| if i < l { i } else { rng.gen_range(0..l) }).collect();
    colors.shuffle(rng);
    let labels = Arc::new(
        Labels::new(
            colors
                .iter()
                .enumerate()
                .map(|(i, c)| (format!("x{i}"), format!("k{c}"))),
        )
        .unwrap(),
    );
    let mut arcs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if colors[x] != colors[y] && rng.gen_bool(density) {
                arcs.push((x, y));
            }
        }
    }
    ColoredDigraph::from_arcs(labels, arcs).unwrap()
}

/// Random small graph for oracle comparisons: `|V|` in 3..=6, `ℓ` in
/// 2..=min(4, |V|), density uniform in [0.1, 0.9].
pub fn small_graph(rng: &mut RngStream) -> ColoredDigraph {
    let n = rng.gen_range(3..=6);
    let l = rng.gen_range(2..=4.min(n));
    let density = rng.gen_range(0.1..0.9);
    random_graph(rng, n, l, density)
}
