//! BPMF on a consistent triple set need not display all of it.
//!
//! `cargo run --example bpmf_triples`

use std::sync::Arc;

use bmgedit::io::tree_to_newick;
use bmgedit::{bpmf_tree, build_tree, rng, Labels, Triple, TripleSet};

fn main() -> bmgedit::Result<()> {
    let labels = Arc::new(Labels::new([
        ("a", "A"),
        ("b1", "B"),
        ("b2", "B"),
        ("c1", "C"),
        ("c2", "C"),
        ("c3", "C"),
    ])?);
    let v = |s: &str| labels.vertex(s).unwrap();
    let r: TripleSet = [
        ("a", "b1", "b2"),
        ("a", "c1", "c2"),
        ("a", "c1", "c3"),
        ("b1", "c1", "c2"),
        ("b1", "c1", "c3"),
        ("b2", "c1", "c2"),
        ("b2", "c1", "c3"),
        ("c1", "b2", "b1"),
    ]
    .into_iter()
    .map(|(x, y, z)| Triple::new(v(x), v(y), v(z)))
    .collect();
    let all: Vec<usize> = (0..labels.len()).collect();

    let aho = build_tree(&r, &all, &labels).expect("the triples are consistent");
    println!("BUILD: {}", tree_to_newick(&aho));
    for seed in 0..8 {
        let t = bpmf_tree(&r, &all, &labels, &mut rng::stream(seed))?;
        let shown = r.iter().filter(|x| t.displays_triple(x).unwrap()).count();
        println!("BPMF seed {seed}: {}/{} displayed  {}", shown, r.len(), tree_to_newick(&t));
    }
    Ok(())
}
