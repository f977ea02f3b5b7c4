//! Perturb a simulated BMG and repair it with every method.
//!
//! `cargo run --release --example edit_perturbed`

use bmgedit::bench::classification_metrics;
use bmgedit::simulation::{perturb, random_colored_tree, PerturbationSpec};
use bmgedit::{edit_with_method, is_bmg, rebuild_for, rng, u_star, Method};

fn main() -> bmgedit::Result<()> {
    let mut r = rng::stream(7);
    let tree = random_colored_tree(30, 6, &mut r)?;
    let original = tree.bmg();
    let g = perturb(&original, &PerturbationSpec::new(0.1, 0.1)?, &mut r)?;
    println!(
        "{} arcs, {} after perturbation ({} changed); every BMG needs at least {} edits",
        original.arc_count(),
        g.arc_count(),
        original.arc_difference(&g)?.len(),
        u_star(&g).len()
    );

    println!("\n{:<13} {:>6} {:>8} {:>8} {:>7}", "method", "edits", "d_orig", "rebuilt", "recall");
    for m in Method::ALL {
        let record = edit_with_method(&g, m, 5, false, &mut rng::stream(1))?;
        assert!(is_bmg(&record.edited));
        let rebuilt = rebuild_for(&g, &record.tree, false)?;
        let metrics = classification_metrics(&rebuilt, &original)?;
        println!(
            "{:<13} {:>6} {:>8} {:>8} {:>7.3}",
            m.name(),
            record.cost(),
            record.edited.arc_difference(&original)?.len(),
            rebuilt.arc_difference(&original)?.len(),
            metrics.recall
        );
    }
    Ok(())
}
