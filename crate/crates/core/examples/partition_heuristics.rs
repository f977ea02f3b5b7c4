//! One recursion step in detail: the Aho graph of a perturbed BMG and the
//! root partitions the heuristics choose, scored by UR-cost and gain.
//!
//! `cargo run --example partition_heuristics`

use bmgedit::partition::{
    gradient_walk, karger_best, louvain, modularity, simple_greedy, stoer_wagner_mincut, Objective, WeightedGraph,
};
use bmgedit::simulation::{perturb, random_colored_tree, PerturbationSpec};
use bmgedit::{aho_graph, gain, informative_triples, rng, unsatisfiable_relations, Partition};

fn show(g: &bmgedit::ColoredDigraph, name: &str, p: &Partition) -> bmgedit::Result<()> {
    let u = unsatisfiable_relations(g, p)?;
    let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
    println!(
        "{name:<14} blocks {sizes:?}  U1 {} U2 {} U3 {}  cost {}  gain {}",
        u.u1.len(),
        u.u2.len(),
        u.u3.len(),
        u.len(),
        gain(g, p)?
    );
    Ok(())
}

fn main() -> bmgedit::Result<()> {
    let mut r = rng::stream(3);
    let tree = random_colored_tree(16, 4, &mut r)?;
    show(&tree.bmg(), "true root", &tree.root_partition()?)?;

    let g = perturb(&tree.bmg(), &PerturbationSpec::new(0.15, 0.15)?, &mut r)?;
    let all: Vec<usize> = g.vertices().collect();
    let h = WeightedGraph::from_edges(&all, &aho_graph(&informative_triples(&g)?, &all));
    println!("Aho graph: {} edges, connected: {}", h.edges().len(), h.is_connected());

    show(&g, "true root", &tree.root_partition()?)?;
    let (cut, weight) = stoer_wagner_mincut(&h)?;
    show(&g, "min cut", &cut)?;
    println!("{:14} cut weight {weight}", "");
    let m = louvain(&h, Objective::Modularity, &mut r);
    show(&g, "louvain (mod)", &m)?;
    println!("{:14} modularity (unnormalized) {:.3}", "", modularity(&h, &m));
    show(&g, "louvain (cost)", &louvain(&h, Objective::UrCost(&g), &mut r))?;
    show(&g, "karger", &karger_best(&g, &h, 20, &mut r))?;
    show(&g, "greedy", &simple_greedy(&g, &all, &mut r))?;
    show(&g, "gradient", &gradient_walk(&g, &all, &mut r))?;
    Ok(())
}
