//! Benchmark harness: simulated instances, all methods, CSV rows.

use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::editor::{bpmf_tree, edit_binary, edit_general, rebuild_for};
use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, Vertex};
use crate::partition::Method;
use crate::rng::{label, substream};
use crate::simulation::{perturb, random_binary_colored_tree, random_colored_tree, PerturbationSpec};
use crate::tree::PhyloTree;
use crate::triples::{binary_on, informative_on, TripleSet};

/// Recall, precision, specificity and accuracy of a result's arc set
/// against a reference, over all ordered cross-color pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub recall: f64,
    pub precision: f64,
    pub specificity: f64,
    pub accuracy: f64,
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

pub fn classification_metrics(result: &ColoredDigraph, reference: &ColoredDigraph) -> Result<Metrics> {
    if result.labels() != reference.labels() {
        return Err(Error::VertexMismatch(
            "result and reference differ in vertices or colors".into(),
        ));
    }
    let universe = reference.cross_color_pairs();
    let mut tp = 0;
    let mut fp = 0;
    let mut fn_ = 0;
    for x in reference.vertices() {
        for y in reference.vertices() {
            if reference.color(x) == reference.color(y) {
                continue;
            }
            match (result.has_arc(x, y), reference.has_arc(x, y)) {
                (true, true) => tp += 1,
                (true, false) => fp += 1,
                (false, true) => fn_ += 1,
                (false, false) => {}
            }
        }
    }
    let tn = universe - tp - fp - fn_;
    Ok(Metrics {
        recall: ratio(tp, tp + fn_),
        precision: ratio(tp, tp + fp),
        specificity: ratio(tn, tn + fp),
        accuracy: ratio(tp + tn, universe),
    })
}

/// Benchmark parameters.
#[derive(Debug, Clone)]
pub struct BenchmarkConfig {
    pub leaves: usize,
    pub colors: usize,
    pub instances: usize,
    pub p_ins: f64,
    pub p_del: f64,
    pub methods: Vec<Method>,
    pub restarts: usize,
    pub binary: bool,
    pub seed: u64,
    /// Record wall-clock runtimes; when off, `runtime_ms` is 0 and the
    /// output is fully reproducible.
    pub timing: bool,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            leaves: 30,
            colors: 10,
            instances: 100,
            p_ins: 0.1,
            p_del: 0.1,
            methods: Method::ALL.to_vec(),
            restarts: 5,
            binary: false,
            seed: 0,
            timing: true,
        }
    }
}

impl BenchmarkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.colors == 0 || self.colors > self.leaves {
            return Err(Error::InvalidInput(format!(
                "need 1 <= colors <= leaves, got {} colors for {} leaves",
                self.colors, self.leaves
            )));
        }
        if self.instances == 0 {
            return Err(Error::InvalidInput("need at least one instance".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidInput("need at least one method".into()));
        }
        PerturbationSpec::new(self.p_ins, self.p_del)?;
        Ok(())
    }
}

/// One simulated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub tree: PhyloTree,
    pub original: ColoredDigraph,
    pub perturbed: ColoredDigraph,
}

impl Instance {
    /// `|E(original) △ E(perturbed)|`.
    pub fn perturbation_size(&self) -> usize {
        self.original.arc_difference(&self.perturbed).map_or(0, |d| d.len())
    }
}

/// Instance `index` of the benchmark; independent of all other instances.
pub fn generate_instance(cfg: &BenchmarkConfig, index: usize) -> Result<Instance> {
    let mut rng = substream(cfg.seed, &[index as u64, label("instance")]);
    let tree = if cfg.binary {
        random_binary_colored_tree(cfg.leaves, cfg.colors, &mut rng)?
    } else {
        random_colored_tree(cfg.leaves, cfg.colors, &mut rng)?
    };
    let original = tree.bmg();
    let spec = PerturbationSpec::new(cfg.p_ins, cfg.p_del)?;
    let perturbed = perturb(&original, &spec, &mut rng)?;
    Ok(Instance {
        tree,
        original,
        perturbed,
    })
}

/// The tree a method constructs for `g`.
pub fn method_tree(g: &ColoredDigraph, method: Method, restarts: usize, binary: bool, rng: &mut crate::rng::RngStream) -> Result<PhyloTree> {
    match (method.strategy(), binary) {
        (Some(s), false) => Ok(edit_general(g, s, restarts, rng)?.tree),
        (Some(s), true) => Ok(edit_binary(g, s, restarts, rng)?.tree),
        (None, _) => {
            g.ensure_proper()?;
            let all: Vec<Vertex> = g.vertices().collect();
            let r: TripleSet = if binary {
                binary_on(g, &all).into_iter().collect()
            } else {
                informative_on(g, &all).into_iter().collect()
            };
            bpmf_tree(&r, &all, g.labels(), rng)
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkRow {
    pub instance_id: usize,
    pub method: &'static str,
    pub variant: &'static str,
    pub n: usize,
    pub l: usize,
    pub p_ins: f64,
    pub p_del: f64,
    pub arcs_orig: usize,
    pub arcs_perturbed: usize,
    pub d_orig: usize,
    pub d_input: usize,
    pub recall: f64,
    pub precision: f64,
    pub specificity: f64,
    pub accuracy: f64,
    pub runtime_ms: f64,
}

fn instance_rows(cfg: &BenchmarkConfig, index: usize) -> Result<Vec<BenchmarkRow>> {
    let inst = generate_instance(cfg, index)?;
    let mut rows = Vec::with_capacity(2 * cfg.methods.len());
    for &method in &cfg.methods {
        let mut rng = substream(cfg.seed, &[index as u64, label(method.name())]);
        let start = Instant::now();
        let tree = method_tree(&inst.perturbed, method, cfg.restarts, cfg.binary, &mut rng)?;
        let runtime_ms = if cfg.timing {
            start.elapsed().as_secs_f64() * 1000.0
        } else {
            0.0
        };
        let direct = tree.bmg();
        let rebuilt = rebuild_for(&inst.perturbed, &tree, cfg.binary)?;
        for (variant, result) in [("direct", &direct), ("rebuild", &rebuilt)] {
            let m = classification_metrics(result, &inst.original)?;
            rows.push(BenchmarkRow {
                instance_id: index,
                method: method.name(),
                variant,
                n: cfg.leaves,
                l: cfg.colors,
                p_ins: cfg.p_ins,
                p_del: cfg.p_del,
                arcs_orig: inst.original.arc_count(),
                arcs_perturbed: inst.perturbed.arc_count(),
                d_orig: result.arc_difference(&inst.original)?.len(),
                d_input: result.arc_difference(&inst.perturbed)?.len(),
                recall: m.recall,
                precision: m.precision,
                specificity: m.specificity,
                accuracy: m.accuracy,
                runtime_ms,
            });
        }
    }
    Ok(rows)
}

/// Runs every method on every instance, in parallel over instances. Rows
/// are ordered by instance, then method (in configuration order), then
/// variant.
pub fn run_benchmark(cfg: &BenchmarkConfig) -> Result<Vec<BenchmarkRow>> {
    cfg.validate()?;
    let per_instance: Vec<Result<Vec<BenchmarkRow>>> = (0..cfg.instances)
        .into_par_iter()
        .map(|i| instance_rows(cfg, i))
        .collect();
    let mut rows = Vec::new();
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchmarkRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_csv_file(rows: &[BenchmarkRow], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(rows, file)
}

/// Aggregates of one `(method, variant)` group.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub method: &'static str,
    pub variant: &'static str,
    pub rows: usize,
    pub median_d_orig: f64,
    pub median_d_input: f64,
    pub mean_recall: f64,
    pub mean_precision: f64,
    pub median_runtime_ms: f64,
}

pub fn median(values: &mut [f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        (values[m - 1] + values[m]) / 2.0
    }
}

/// Per `(method, variant)` summaries in first-appearance order.
pub fn summarize(rows: &[BenchmarkRow]) -> Vec<Summary> {
    let mut keys: Vec<(&'static str, &'static str)> = Vec::new();
    for r in rows {
        if !keys.contains(&(r.method, r.variant)) {
            keys.push((r.method, r.variant));
        }
    }
    keys.into_iter()
        .map(|(method, variant)| {
            let group: Vec<&BenchmarkRow> = rows
                .iter()
                .filter(|r| r.method == method && r.variant == variant)
                .collect();
            let col = |f: &dyn Fn(&BenchmarkRow) -> f64| -> Vec<f64> { group.iter().map(|r| f(r)).collect() };
            let mean = |v: Vec<f64>| v.iter().sum::<f64>() / v.len() as f64;
            Summary {
                method,
                variant,
                rows: group.len(),
                median_d_orig: median(&mut col(&|r| r.d_orig as f64)),
                median_d_input: median(&mut col(&|r| r.d_input as f64)),
                mean_recall: mean(col(&|r| r.recall)),
                mean_precision: mean(col(&|r| r.precision)),
                median_runtime_ms: median(&mut col(&|r| r.runtime_ms)),
            }
        })
        .collect()
}
