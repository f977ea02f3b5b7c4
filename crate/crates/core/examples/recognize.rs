//! Recognize best match graphs and recover their least resolved trees.
//!
//! `cargo run --example recognize`

use bmgedit::io::tree_to_newick;
use bmgedit::simulation::random_colored_tree;
use bmgedit::{fixtures, informative_triples, is_binary_explainable, is_bmg, lrt, rng};

fn main() -> bmgedit::Result<()> {
    for (name, g) in [("G1", fixtures::g1()), ("G2", fixtures::g2()), ("G3", fixtures::g3())] {
        println!("{name}: {} arcs, BMG: {}", g.arc_count(), is_bmg(&g));
    }

    let t = random_colored_tree(10, 3, &mut rng::stream(42))?;
    let g = t.bmg();
    println!("\nsimulated tree  {}", tree_to_newick(&t));
    println!("its BMG has {} arcs and {} informative triples", g.arc_count(), informative_triples(&g)?.len());

    // The least resolved tree explains the same graph with fewer inner nodes.
    let least = lrt(&g)?;
    println!("least resolved  {}", tree_to_newick(&least));
    println!("same BMG: {}, binary-explainable: {}", least.bmg() == g, is_binary_explainable(&g));
    Ok(())
}
