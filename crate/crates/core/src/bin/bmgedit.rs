use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use bmgedit::bench::{run_benchmark, summarize, write_csv, write_csv_file, BenchmarkConfig};
use bmgedit::io::{read_graph, read_tree, tree_on_labels, tree_to_newick, graph_to_json, write_graph, write_tree};
use bmgedit::oracle::{brute_force_u_star, exact_edit, exact_min_cost_partition, u_of_tree, PARTITION_LIMIT, TREE_LIMIT};
use bmgedit::simulation::{perturb, random_binary_colored_tree, random_colored_tree, PerturbationSpec};
use bmgedit::{edit_with_method, is_binary_explainable, lrt, rebuild_for, rng, u_star, ColoredDigraph, Method, PhyloTree};

#[derive(Parser)]
#[command(name = "bmgedit", version, about = "Best match graph recognition, editing and benchmarking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random leaf-colored tree (Newick).
    Generate {
        #[arg(long, default_value_t = 30)]
        leaves: usize,
        #[arg(long, default_value_t = 10)]
        colors: usize,
        #[arg(long)]
        binary: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    /// Write the best match graph of a tree (JSON).
    Bmg {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomly insert and delete arcs of a graph.
    Perturb {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        p_ins: f64,
        #[arg(long, default_value_t = 0.1)]
        p_del: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is a best match graph.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        /// Write the least resolved tree here if the graph is a BMG.
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    /// Edit a graph into a best match graph.
    Edit {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        method: MethodArgs,
        /// Rebuild from the displayed informative triples.
        #[arg(long, overrides_with = "no_rebuild")]
        rebuild: bool,
        #[arg(long)]
        no_rebuild: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    /// Compare against exhaustive optima on small graphs.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Also report the edit cost of this tree.
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Run the simulation benchmark and write CSV rows.
    Benchmark {
        #[arg(long, default_value_t = 30)]
        leaves: usize,
        #[arg(long, default_value_t = 10)]
        colors: usize,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 0.1)]
        p_ins: f64,
        #[arg(long, default_value_t = 0.1)]
        p_del: f64,
        /// Methods to run (repeatable); all by default.
        #[arg(long = "method")]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 5)]
        restarts: usize,
        #[arg(long)]
        binary: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Report 0 runtimes so output is bit-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long, default_value = "louvain-cost")]
    method: Method,
    #[arg(long, default_value_t = 5)]
    restarts: usize,
    #[arg(long)]
    binary: bool,
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_graph(path: Option<&Path>, g: &ColoredDigraph) -> Result<()> {
    match path {
        Some(p) => Ok(write_graph(p, g)?),
        None => emit(None, &graph_to_json(g)),
    }
}

fn emit_tree(path: Option<&Path>, t: &PhyloTree) -> Result<()> {
    match path {
        Some(p) => Ok(write_tree(p, t)?),
        None => emit(None, &tree_to_newick(t)),
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Generate { leaves, colors, binary, seed, tree_out } => {
            let mut r = rng::stream(seed);
            let t = if binary {
                random_binary_colored_tree(leaves, colors, &mut r)?
            } else {
                random_colored_tree(leaves, colors, &mut r)?
            };
            emit_tree(tree_out.as_deref(), &t)
        }
        Command::Bmg { tree, out } => emit_graph(out.as_deref(), &read_tree(&tree)?.bmg()),
        Command::Perturb { graph, p_ins, p_del, seed, out } => {
            let g = read_graph(&graph)?;
            let spec = PerturbationSpec::new(p_ins, p_del)?;
            emit_graph(out.as_deref(), &perturb(&g, &spec, &mut rng::stream(seed))?)
        }
        Command::Recognize { graph, tree_out } => {
            let g = read_graph(&graph)?;
            match lrt(&g) {
                Ok(t) => {
                    println!("BMG: yes");
                    println!("binary-explainable: {}", if is_binary_explainable(&g) { "yes" } else { "no" });
                    if let Some(p) = tree_out {
                        write_tree(&p, &t)?;
                    } else {
                        println!("least resolved tree: {}", tree_to_newick(&t));
                    }
                }
                Err(_) => println!("BMG: no"),
            }
            Ok(())
        }
        Command::Edit { graph, method, rebuild, no_rebuild: _, seed, out, tree_out } => {
            let g = read_graph(&graph)?;
            let mut r = rng::stream(seed);
            let record = edit_with_method(&g, method.method, method.restarts, method.binary, &mut r)?;
            let (edited, tree) = if rebuild {
                let rebuilt = rebuild_for(&g, &record.tree, method.binary)?;
                let t = lrt(&rebuilt)?;
                (rebuilt, t)
            } else {
                (record.edited.clone(), record.tree.clone())
            };
            let edits = g.arc_difference(&edited)?;
            let (ins, del) = edits.split(&g);
            eprintln!(
                "{}: {} edits ({} insertions, {} deletions), lower bound |U*| = {}",
                method.method,
                edits.len(),
                ins.len(),
                del.len(),
                u_star(&g).len()
            );
            emit_graph(out.as_deref(), &edited)?;
            if let Some(p) = tree_out {
                write_tree(&p, &tree)?;
            }
            Ok(())
        }
        Command::Verify { graph, tree } => {
            let g = read_graph(&graph)?;
            if g.n() > PARTITION_LIMIT {
                bail!("verify handles at most {PARTITION_LIMIT} vertices, got {}", g.n());
            }
            let (p, c) = exact_min_cost_partition(&g, false)?;
            println!("minimum UR-cost partition: {} blocks, cost {c}", p.len());
            let (_, c2) = exact_min_cost_partition(&g, true)?;
            println!("minimum UR-cost bipartition: cost {c2}");
            if g.n() <= TREE_LIMIT {
                let fast = u_star(&g);
                let slow = brute_force_u_star(&g)?;
                println!("U*: {} relations, exhaustive check {}", fast.len(), if fast == slow { "agrees" } else { "DISAGREES" });
                let (t, opt) = exact_edit(&g)?;
                println!("optimal edit cost: {opt}");
                println!("optimal tree: {}", tree_to_newick(&t));
                if let Some(tp) = tree {
                    let t = tree_on_labels(&read_tree(&tp)?, g.labels())?;
                    println!("given tree edit cost: {}", u_of_tree(&g, &t)?.len());
                }
            } else {
                println!("tree enumeration skipped above {TREE_LIMIT} vertices");
            }
            Ok(())
        }
        Command::Benchmark { leaves, colors, instances, p_ins, p_del, methods, restarts, binary, seed, csv, no_timing } => {
            let cfg = BenchmarkConfig {
                leaves,
                colors,
                instances,
                p_ins,
                p_del,
                methods: if methods.is_empty() { Method::ALL.to_vec() } else { methods },
                restarts,
                binary,
                seed,
                timing: !no_timing,
            };
            let rows = run_benchmark(&cfg)?;
            match csv {
                Some(p) => write_csv_file(&rows, &p)?,
                None => write_csv(&rows, std::io::stdout().lock())?,
            }
            eprintln!("{:<13} {:<8} {:>8} {:>8} {:>7} {:>7} {:>9}", "method", "variant", "d_orig", "d_input", "recall", "prec", "ms");
            for s in summarize(&rows) {
                eprintln!(
                    "{:<13} {:<8} {:>8.1} {:>8.1} {:>7.3} {:>7.3} {:>9.3}",
                    s.method, s.variant, s.median_d_orig, s.median_d_input, s.mean_recall, s.mean_precision, s.median_runtime_ms
                );
            }
            Ok(())
        }
    }
}
