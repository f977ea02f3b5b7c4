//! Compare the heuristics with exhaustive optima on a small graph.
//!
//! `cargo run --release --example oracle_check`

use bmgedit::io::tree_to_newick;
use bmgedit::oracle::{brute_force_u_star, enumerate_trees, exact_edit, exact_min_cost_partition};
use bmgedit::simulation::{perturb, random_colored_tree, PerturbationSpec};
use bmgedit::{edit_with_method, rng, u_star, Method};

fn main() -> bmgedit::Result<()> {
    let mut r = rng::stream(5);
    let t = random_colored_tree(6, 3, &mut r)?;
    let g = perturb(&t.bmg(), &PerturbationSpec::new(0.2, 0.2)?, &mut r)?;
    let all: Vec<usize> = g.vertices().collect();
    println!("{} trees on {} leaves", enumerate_trees(g.labels(), &all)?.len(), g.n());

    let fast = u_star(&g);
    println!("U*: {} relations (matches exhaustive: {})", fast.len(), fast == brute_force_u_star(&g)?);
    let (p, c) = exact_min_cost_partition(&g, false)?;
    println!("cheapest root partition: {:?}, cost {c}", p.blocks());

    let (best, opt) = exact_edit(&g)?;
    println!("optimum {opt} edits via {}", tree_to_newick(&best));
    for m in Method::ALL {
        let record = edit_with_method(&g, m, 5, false, &mut rng::stream(0))?;
        println!("  {:<13} {} edits", m.name(), record.cost());
    }
    Ok(())
}
