//! Partition strategies used by the recursive editor.
//!
//! Each strategy receives the working graph restricted to the current
//! vertex subset `V′` together with the Aho graph on `V′`, and returns a
//! partition of `V′` into at least two blocks.

mod greedy;
mod gradient;
mod karger;
mod kk;
mod louvain;
mod stoer_wagner;
mod weighted;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{ColoredDigraph, Partition, Vertex};
use crate::rng::{fork, RngStream};
use crate::urcost::cost_on;

pub use greedy::simple_greedy;
pub use gradient::{gradient_walk, gradient_walk_from};
pub use karger::karger_best;
pub use kk::{kk_bipartition, kk_difference};
pub use louvain::{louvain, modularity, Objective};
pub use stoer_wagner::stoer_wagner_mincut;
pub use weighted::WeightedGraph;

/// Everything a strategy may look at in one recursion step.
#[derive(Debug, Clone, Copy)]
pub struct StepInput<'a> {
    /// Current working graph; only `vertices` matter.
    pub graph: &'a ColoredDigraph,
    /// The vertex subset `V′`, sorted, with at least two vertices.
    pub vertices: &'a [Vertex],
    /// Aho graph on `V′`.
    pub aho: &'a WeightedGraph,
    /// Independent runs for randomized strategies.
    pub restarts: usize,
}

pub trait PartitionStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition;
}

/// Runs `run` on `restarts` forked streams and keeps the cheapest result,
/// earliest on ties.
pub(crate) fn best_restart(
    input: &StepInput<'_>,
    rng: &mut RngStream,
    mut run: impl FnMut(&mut RngStream) -> Partition,
) -> Partition {
    let mut best: Option<(usize, Partition)> = None;
    for _ in 0..input.restarts.max(1) {
        let mut sub = fork(rng);
        let p = run(&mut sub);
        let c = cost_on(input.graph, &p);
        if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
            best = Some((c, p));
        }
    }
    best.expect("at least one restart").1
}

/// Minimum edge cut of the Aho graph.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinCut;

impl PartitionStrategy for MinCut {
    fn name(&self) -> &'static str {
        "mincut"
    }

    fn partition(&self, input: &StepInput<'_>, _rng: &mut RngStream) -> Partition {
        stoer_wagner_mincut(input.aho).expect("at least two vertices").0
    }
}

/// Karger contraction, best run by UR-cost.
#[derive(Debug, Clone, Copy, Default)]
pub struct Karger;

impl PartitionStrategy for Karger {
    fn name(&self) -> &'static str {
        "karger"
    }

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition {
        karger_best(input.graph, input.aho, input.restarts.max(1), rng)
    }
}

/// Greedy vertex moves from an empty first block.
#[derive(Debug, Clone, Copy, Default)]
pub struct Greedy;

impl PartitionStrategy for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition {
        best_restart(input, rng, |r| simple_greedy(input.graph, input.vertices, r))
    }
}

/// Best-improvement descent from a random balanced bipartition.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gradient;

impl PartitionStrategy for Gradient {
    fn name(&self) -> &'static str {
        "gradient"
    }

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition {
        best_restart(input, rng, |r| gradient_walk(input.graph, input.vertices, r))
    }
}

/// Louvain method maximizing modularity of the Aho graph. Restarts are
/// compared by modularity.
#[derive(Debug, Clone, Copy, Default)]
pub struct LouvainModularity;

impl PartitionStrategy for LouvainModularity {
    fn name(&self) -> &'static str {
        "louvain-mod"
    }

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition {
        let mut best: Option<(f64, Partition)> = None;
        for _ in 0..input.restarts.max(1) {
            let mut sub = fork(rng);
            let p = louvain(input.aho, Objective::Modularity, &mut sub);
            let q = modularity(input.aho, &p);
            if best.as_ref().is_none_or(|(bq, _)| q > *bq + 1e-9) {
                best = Some((q, p));
            }
        }
        best.expect("at least one restart").1
    }
}

/// Louvain method minimizing UR-cost.
#[derive(Debug, Clone, Copy, Default)]
pub struct LouvainCost;

impl PartitionStrategy for LouvainCost {
    fn name(&self) -> &'static str {
        "louvain-cost"
    }

    fn partition(&self, input: &StepInput<'_>, rng: &mut RngStream) -> Partition {
        best_restart(input, rng, |r| {
            louvain(input.aho, Objective::UrCost(input.graph), r)
        })
    }
}

/// Tree-construction methods selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    MinCut,
    Karger,
    Greedy,
    Gradient,
    LouvainMod,
    LouvainCost,
    Bpmf,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::MinCut,
        Method::Karger,
        Method::Greedy,
        Method::Gradient,
        Method::LouvainMod,
        Method::LouvainCost,
        Method::Bpmf,
    ];

    /// The six partition-based methods.
    pub const PARTITIONING: [Method; 6] = [
        Method::MinCut,
        Method::Karger,
        Method::Greedy,
        Method::Gradient,
        Method::LouvainMod,
        Method::LouvainCost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::MinCut => "mincut",
            Method::Karger => "karger",
            Method::Greedy => "greedy",
            Method::Gradient => "gradient",
            Method::LouvainMod => "louvain-mod",
            Method::LouvainCost => "louvain-cost",
            Method::Bpmf => "bpmf",
        }
    }

    /// The partition strategy, or `None` for BPMF, which builds trees
    /// directly from triples.
    pub fn strategy(self) -> Option<&'static dyn PartitionStrategy> {
        match self {
            Method::MinCut => Some(&MinCut),
            Method::Karger => Some(&Karger),
            Method::Greedy => Some(&Greedy),
            Method::Gradient => Some(&Gradient),
            Method::LouvainMod => Some(&LouvainModularity),
            Method::LouvainCost => Some(&LouvainCost),
            Method::Bpmf => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                Error::InvalidInput(format!("unknown method `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::g1;
    use crate::rng::stream;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("spectral".parse::<Method>().is_err());
        assert!(Method::Bpmf.strategy().is_none());
        assert_eq!(Method::LouvainCost.strategy().unwrap().name(), "louvain-cost");
    }

    #[test]
    fn every_strategy_returns_a_valid_split() {
        let g = g1();
        let verts = [0, 1, 2];
        let aho = WeightedGraph::from_edges(&verts, &[(0, 1)]);
        let input = StepInput { graph: &g, vertices: &verts, aho: &aho, restarts: 3 };
        for m in Method::PARTITIONING {
            let s = m.strategy().unwrap();
            let p = s.partition(&input, &mut stream(1));
            assert!(p.len() >= 2, "{}", s.name());
            assert_eq!(p.ground(), verts.to_vec());
            assert_eq!(p, s.partition(&input, &mut stream(1)));
        }
    }
}
