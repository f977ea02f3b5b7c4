//! Small dense undirected weighted graphs.

use crate::graph::{Partition, UnionFind, Vertex};

/// Undirected graph with nonnegative symmetric weights over a list of
/// vertices. Edges are the pairs of positive weight; the diagonal may carry
/// loop weight after aggregation.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    vertices: Vec<Vertex>,
    w: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(vertices: &[Vertex]) -> Self {
        let m = vertices.len();
        WeightedGraph {
            vertices: vertices.to_vec(),
            w: vec![0.0; m * m],
        }
    }

    /// Unit-weight graph on `vertices` from edges given by vertex names.
    /// Edges touching other vertices are ignored.
    pub fn from_edges(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Self {
        let mut h = Self::new(vertices);
        let pos = h.positions();
        for &(x, y) in edges {
            if let (Some(i), Some(j)) = (pos(x), pos(y)) {
                if i != j {
                    h.set_weight(i, j, 1.0);
                }
            }
        }
        h
    }

    fn positions(&self) -> impl Fn(Vertex) -> Option<usize> {
        let mut sorted: Vec<(Vertex, usize)> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        sorted.sort_unstable();
        move |v| {
            sorted
                .binary_search_by_key(&v, |&(u, _)| u)
                .ok()
                .map(|k| sorted[k].1)
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Weight between local indices `i` and `j`.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.w[i * self.len() + j]
    }

    pub fn set_weight(&mut self, i: usize, j: usize, weight: f64) {
        let m = self.len();
        self.w[i * m + j] = weight;
        self.w[j * m + i] = weight;
    }

    pub fn add_weight(&mut self, i: usize, j: usize, weight: f64) {
        let m = self.len();
        self.w[i * m + j] += weight;
        if i != j {
            self.w[j * m + i] += weight;
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| j != i && self.weight(i, j) > 0.0)
    }

    /// Row sum, counting loop weight once.
    pub fn degree(&self, i: usize) -> f64 {
        (0..self.len()).map(|j| self.weight(i, j)).sum()
    }

    /// `m`: half the total degree.
    pub fn total_weight(&self) -> f64 {
        (0..self.len()).map(|i| self.degree(i)).sum::<f64>() / 2.0
    }

    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let m = self.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let w = self.weight(i, j);
                if w > 0.0 {
                    out.push((i, j, w));
                }
            }
        }
        out
    }

    /// Component label per local index.
    pub(crate) fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.len());
        for (i, j, _) in self.edges() {
            uf.union(i, j);
        }
        (0..self.len()).map(|i| uf.find(i)).collect()
    }

    pub fn components(&self) -> Partition {
        Partition::from_assignment(&self.vertices, &self.component_labels())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Total weight of edges crossing the bipartition `side`.
    pub fn cut_weight(&self, side: &[bool]) -> f64 {
        self.edges()
            .into_iter()
            .filter(|&(i, j, _)| side[i] != side[j])
            .map(|(_, _, w)| w)
            .sum()
    }

    /// Partition of the original vertices from a label per local index.
    pub fn partition_from_labels(&self, labels: &[usize]) -> Partition {
        Partition::from_assignment(&self.vertices, labels)
    }
}
