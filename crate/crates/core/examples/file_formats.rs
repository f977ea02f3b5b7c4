//! Reading and writing graphs (JSON) and trees (Newick).
//!
//! `cargo run --example file_formats`

use bmgedit::io::{graph_from_json, graph_to_json, tree_from_newick, tree_on_labels, tree_to_newick};
use bmgedit::ColoredDigraph;

fn main() -> bmgedit::Result<()> {
    let g = ColoredDigraph::from_parts(
        &[("a1", "A"), ("a2", "A"), ("b1", "B"), ("c1", "C")],
        &[("a1", "b1"), ("b1", "a1"), ("a2", "b1"), ("a1", "c1"), ("b1", "c1"), ("c1", "a1"), ("c1", "b1")],
    )?;
    let json = graph_to_json(&g);
    println!("{json}");
    assert_eq!(graph_from_json(&json)?, g);

    // Inner labels and branch lengths are accepted and dropped.
    let t = tree_from_newick("((a1[&color=A]:0.5,b1[&color=B])x,(a2[&color=A],c1[&color=C]):1.0);")?;
    println!("{}", tree_to_newick(&t));
    let t = tree_on_labels(&t, g.labels())?;
    println!("its BMG equals g: {}", t.bmg() == g);

    match tree_from_newick("(a[&color=A],\n b[&color=B]") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
