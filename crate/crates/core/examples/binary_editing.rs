//! Editing towards binary-explainable BMGs.
//!
//! `cargo run --release --example binary_editing`

use bmgedit::io::tree_to_newick;
use bmgedit::partition::LouvainCost;
use bmgedit::simulation::{perturb, random_binary_colored_tree, PerturbationSpec};
use bmgedit::{binary_triples, edit_binary, edit_general, informative_triples, is_binary_explainable, rebuild_binary_variant, rng};

fn main() -> bmgedit::Result<()> {
    let mut r = rng::stream(11);
    let tree = random_binary_colored_tree(20, 4, &mut r)?;
    let original = tree.bmg();
    println!(
        "binary tree BMG: {} informative triples, {} with the forbidden-triple extension",
        informative_triples(&original)?.len(),
        binary_triples(&original)?.len()
    );

    let g = perturb(&original, &PerturbationSpec::new(0.1, 0.1)?, &mut r)?;
    let general = edit_general(&g, &LouvainCost, 5, &mut rng::stream(0))?;
    let binary = edit_binary(&g, &LouvainCost, 5, &mut rng::stream(0))?;
    println!("general editor: {} edits, binary-explainable {}", general.cost(), is_binary_explainable(&general.edited));
    println!("binary editor:  {} edits, binary-explainable {}", binary.cost(), is_binary_explainable(&binary.edited));
    println!("binary tree     {}", tree_to_newick(&binary.tree));

    let rebuilt = rebuild_binary_variant(&g, &binary.tree)?;
    println!(
        "rebuilt: {} edits from input, {} from the original",
        g.arc_difference(&rebuilt)?.len(),
        original.arc_difference(&rebuilt)?.len()
    );
    Ok(())
}
