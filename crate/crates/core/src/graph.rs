//! Vertex-colored digraphs, arc edit sets and vertex partitions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a vertex within its [`Labels`].
pub type Vertex = usize;
/// Index of a color within the color table of its [`Labels`].
pub type Color = usize;

/// Vertex ids and colors, interned to dense integers.
///
/// The color table may list colors that no vertex carries (restrictions keep
/// the table of their parent so that color indices stay comparable).
#[derive(Debug, Clone)]
pub struct Labels {
    ids: Vec<String>,
    colors: Vec<Color>,
    color_names: Vec<String>,
    by_id: HashMap<String, Vertex>,
}

impl Labels {
    pub fn new<I, A, B>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: AsRef<str>,
    {
        let mut labels = Labels {
            ids: Vec::new(),
            colors: Vec::new(),
            color_names: Vec::new(),
            by_id: HashMap::new(),
        };
        let mut color_index: HashMap<String, Color> = HashMap::new();
        for (id, color) in vertices {
            let id = id.into();
            if labels.by_id.contains_key(&id) {
                return Err(Error::DuplicateVertex(id));
            }
            let color = color.as_ref();
            let c = match color_index.get(color) {
                Some(&c) => c,
                None => {
                    let c = labels.color_names.len();
                    labels.color_names.push(color.to_string());
                    color_index.insert(color.to_string(), c);
                    c
                }
            };
            labels.by_id.insert(id.clone(), labels.ids.len());
            labels.ids.push(id);
            labels.colors.push(c);
        }
        Ok(labels)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, v: Vertex) -> &str {
        &self.ids[v]
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn color_name(&self, c: Color) -> &str {
        &self.color_names[c]
    }

    pub fn color_table_len(&self) -> usize {
        self.color_names.len()
    }

    pub fn vertex(&self, id: &str) -> Option<Vertex> {
        self.by_id.get(id).copied()
    }

    pub fn lookup(&self, id: &str) -> Result<Vertex> {
        self.vertex(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Labels of the vertices `w` (in increasing index order), sharing this
    /// color table.
    pub fn restrict(&self, w: &[Vertex]) -> Labels {
        let mut sorted: Vec<Vertex> = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let ids: Vec<String> = sorted.iter().map(|&v| self.ids[v].clone()).collect();
        let by_id = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        Labels {
            ids,
            colors: sorted.iter().map(|&v| self.colors[v]).collect(),
            color_names: self.color_names.clone(),
            by_id,
        }
    }

    fn same_vertex(&self, v: Vertex, other: &Labels, w: Vertex) -> bool {
        self.ids[v] == other.ids[w]
            && self.color_names[self.colors[v]] == other.color_names[other.colors[w]]
    }
}

impl PartialEq for Labels {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && (0..self.len()).all(|v| self.same_vertex(v, other, v))
    }
}

/// Maps every vertex of `from` to the vertex of `to` with the same id,
/// requiring identical vertex sets and colorings.
pub(crate) fn align_labels(from: &Labels, to: &Labels) -> Result<Vec<Vertex>> {
    if from.len() != to.len() {
        return Err(Error::VertexMismatch(format!(
            "{} vs {} vertices",
            from.len(),
            to.len()
        )));
    }
    (0..from.len())
        .map(|v| {
            let w = to
                .vertex(from.id(v))
                .ok_or_else(|| Error::VertexMismatch(format!("`{}` missing", from.id(v))))?;
            if !from.same_vertex(v, to, w) {
                return Err(Error::VertexMismatch(format!(
                    "`{}` colored differently",
                    from.id(v)
                )));
            }
            Ok(w)
        })
        .collect()
}

/// A simple digraph with a total vertex coloring.
#[derive(Clone)]
pub struct ColoredDigraph {
    labels: Arc<Labels>,
    adj: Vec<bool>,
    arc_count: usize,
}

impl ColoredDigraph {
    /// Graph without arcs on the given labels.
    pub fn empty(labels: Arc<Labels>) -> Self {
        let n = labels.len();
        ColoredDigraph {
            labels,
            adj: vec![false; n * n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(labels: Arc<Labels>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(labels);
        for (x, y) in arcs {
            g.check_pair(x, y)?;
            g.insert_arc(x, y);
        }
        Ok(g)
    }

    /// Builds a graph from `(id, color)` vertices and `(src, dst)` arcs given
    /// by id.
    pub fn from_parts<A, B, C, D>(vertices: &[(A, B)], arcs: &[(C, D)]) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
        D: AsRef<str>,
    {
        let labels = Labels::new(
            vertices
                .iter()
                .map(|(id, color)| (id.as_ref().to_string(), color.as_ref())),
        )?;
        let labels = Arc::new(labels);
        let mut resolved = Vec::with_capacity(arcs.len());
        for (x, y) in arcs {
            resolved.push((labels.lookup(x.as_ref())?, labels.lookup(y.as_ref())?));
        }
        Self::from_arcs(labels, resolved)
    }

    fn check_pair(&self, x: Vertex, y: Vertex) -> Result<()> {
        let n = self.n();
        if x >= n {
            return Err(Error::UnknownVertex(format!("#{x}")));
        }
        if y >= n {
            return Err(Error::UnknownVertex(format!("#{y}")));
        }
        if x == y {
            return Err(Error::SelfPair(self.labels.id(x).to_string()));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &Arc<Labels> {
        &self.labels
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.labels.color(v)
    }

    pub fn id(&self, v: Vertex) -> &str {
        self.labels.id(v)
    }

    #[inline]
    pub fn has_arc(&self, x: Vertex, y: Vertex) -> bool {
        self.adj[x * self.n() + y]
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub(crate) fn insert_arc(&mut self, x: Vertex, y: Vertex) {
        let n = self.n();
        if !self.adj[x * n + y] {
            self.adj[x * n + y] = true;
            self.arc_count += 1;
        }
    }

    pub(crate) fn toggle_arc(&mut self, x: Vertex, y: Vertex) {
        let n = self.n();
        let slot = &mut self.adj[x * n + y];
        *slot = !*slot;
        if *slot {
            self.arc_count += 1;
        } else {
            self.arc_count -= 1;
        }
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.n();
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn out_neighbors(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n();
        (0..n).filter(move |&y| self.adj[x * n + y])
    }

    pub fn in_neighbors(&self, y: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n();
        (0..n).filter(move |&x| self.adj[x * n + y])
    }

    /// Vertices grouped by color index (indexed by the color table).
    pub fn color_classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.labels.color_table_len()];
        for v in self.vertices() {
            classes[self.color(v)].push(v);
        }
        classes
    }

    /// Number of distinct colors carried by at least one vertex.
    pub fn colors_present(&self) -> usize {
        self.color_classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// Number of ordered pairs of differently colored vertices.
    pub fn cross_color_pairs(&self) -> usize {
        let n = self.n();
        let same: usize = self
            .color_classes()
            .iter()
            .map(|c| c.len() * c.len())
            .sum();
        n * n - same
    }

    pub fn is_properly_colored(&self) -> bool {
        self.arcs().all(|(x, y)| self.color(x) != self.color(y))
    }

    pub(crate) fn ensure_proper(&self) -> Result<()> {
        match self.arcs().find(|&(x, y)| self.color(x) == self.color(y)) {
            Some((x, y)) => Err(Error::ImproperColoring(
                self.id(x).to_string(),
                self.id(y).to_string(),
            )),
            None => Ok(()),
        }
    }

    /// Proper, and every vertex has an out-neighbor of every other color
    /// present in the graph.
    pub fn is_sf_colored(&self) -> bool {
        if !self.is_properly_colored() {
            return false;
        }
        let table = self.labels.color_table_len();
        let mut present = vec![false; table];
        for v in self.vertices() {
            present[self.color(v)] = true;
        }
        let mut seen = vec![false; table];
        self.vertices().all(|x| {
            seen.iter_mut().for_each(|s| *s = false);
            for y in self.out_neighbors(x) {
                seen[self.color(y)] = true;
            }
            (0..table).all(|c| !present[c] || c == self.color(x) || seen[c])
        })
    }

    /// Subgraph induced by `w`; vertices are renumbered in increasing order
    /// of their index here.
    pub fn induced_subgraph(&self, w: &[Vertex]) -> Result<ColoredDigraph> {
        if let Some(&v) = w.iter().find(|&&v| v >= self.n()) {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let labels = Arc::new(self.labels.restrict(w));
        let mut sorted = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = ColoredDigraph::empty(labels);
        for (i, &x) in sorted.iter().enumerate() {
            for (j, &y) in sorted.iter().enumerate() {
                if self.has_arc(x, y) {
                    g.insert_arc(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn induced_subgraph_by_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<ColoredDigraph> {
        let w = ids
            .iter()
            .map(|id| self.labels.lookup(id.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.induced_subgraph(&w)
    }

    /// `G △ F`.
    pub fn apply_edits(&self, f: &ArcEditSet) -> Result<ColoredDigraph> {
        let mut g = self.clone();
        for &(x, y) in f.iter() {
            g.check_pair(x, y)?;
            g.toggle_arc(x, y);
        }
        Ok(g)
    }

    pub(crate) fn apply_edits_unchecked(&mut self, f: &ArcEditSet) {
        for &(x, y) in f.iter() {
            self.toggle_arc(x, y);
        }
    }

    /// `E(self) △ E(other)`, expressed in this graph's vertex indices.
    pub fn arc_difference(&self, other: &ColoredDigraph) -> Result<ArcEditSet> {
        let map = if Arc::ptr_eq(&self.labels, &other.labels) || *self.labels == *other.labels {
            (0..self.n()).collect()
        } else {
            align_labels(&other.labels, &self.labels)?
        };
        let n = self.n();
        let mut other_adj = vec![false; n * n];
        for (x, y) in other.arcs() {
            other_adj[map[x] * n + map[y]] = true;
        }
        let edits = (0..n * n)
            .filter(|&i| self.adj[i] != other_adj[i])
            .map(|i| (i / n, i % n))
            .collect();
        Ok(ArcEditSet(edits))
    }

    /// Same graph, re-expressed over `labels` (which must hold the same
    /// vertices and colors, possibly in another order).
    pub fn relabel(&self, labels: &Arc<Labels>) -> Result<ColoredDigraph> {
        let map = align_labels(&self.labels, labels)?;
        ColoredDigraph::from_arcs(labels.clone(), self.arcs().map(|(x, y)| (map[x], map[y])))
    }
}

impl PartialEq for ColoredDigraph {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.labels, &other.labels) || *self.labels == *other.labels {
            return self.adj == other.adj;
        }
        match self.arc_difference(other) {
            Ok(d) => d.is_empty(),
            Err(_) => false,
        }
    }
}

impl Eq for ColoredDigraph {}

impl fmt::Debug for ColoredDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vertices: Vec<String> = self
            .vertices()
            .map(|v| format!("{}:{}", self.id(v), self.labels.color_name(self.color(v))))
            .collect();
        let arcs: Vec<String> = self
            .arcs()
            .map(|(x, y)| format!("({},{})", self.id(x), self.id(y)))
            .collect();
        f.debug_struct("ColoredDigraph")
            .field("vertices", &vertices)
            .field("arcs", &arcs)
            .finish()
    }
}

/// A set of ordered vertex pairs to toggle.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArcEditSet(BTreeSet<(Vertex, Vertex)>);

impl ArcEditSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: Vertex, y: Vertex) -> bool {
        self.0.insert((x, y))
    }

    pub fn contains(&self, x: Vertex, y: Vertex) -> bool {
        self.0.contains(&(x, y))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Vertex, Vertex)> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &ArcEditSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ArcEditSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn extend(&mut self, other: &ArcEditSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn intersection(&self, other: &ArcEditSet) -> ArcEditSet {
        ArcEditSet(self.0.intersection(&other.0).copied().collect())
    }

    /// Splits into `(insertions, deletions)` relative to `base`.
    pub fn split(&self, base: &ColoredDigraph) -> (ArcEditSet, ArcEditSet) {
        let (del, ins): (BTreeSet<_>, BTreeSet<_>) =
            self.0.iter().partition(|&&(x, y)| base.has_arc(x, y));
        (ArcEditSet(ins), ArcEditSet(del))
    }

    /// Pairs rendered by vertex id.
    pub fn to_ids(&self, labels: &Labels) -> Vec<(String, String)> {
        self.0
            .iter()
            .map(|&(x, y)| (labels.id(x).to_string(), labels.id(y).to_string()))
            .collect()
    }
}

impl FromIterator<(Vertex, Vertex)> for ArcEditSet {
    fn from_iter<T: IntoIterator<Item = (Vertex, Vertex)>>(iter: T) -> Self {
        ArcEditSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ArcEditSet {
    type Item = &'a (Vertex, Vertex);
    type IntoIter = std::collections::btree_set::Iter<'a, (Vertex, Vertex)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Disjoint nonempty blocks covering a vertex subset.
///
/// Stored canonically: each block sorted, blocks ordered by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!(
                        "vertex #{v} in two blocks"
                    )));
                }
            }
        }
        Ok(Self::from_blocks(blocks))
    }

    /// Canonicalizes without validation; callers guarantee disjoint nonempty
    /// blocks.
    pub(crate) fn from_blocks(mut blocks: Vec<Vec<Vertex>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { blocks }
    }

    /// Builds a partition from a block label per vertex of `vertices`.
    pub(crate) fn from_assignment(vertices: &[Vertex], assignment: &[usize]) -> Self {
        let mut by_label: HashMap<usize, Vec<Vertex>> = HashMap::new();
        for (&v, &a) in vertices.iter().zip(assignment) {
            by_label.entry(a).or_default().push(v);
        }
        Self::from_blocks(by_label.into_values().collect())
    }

    pub fn discrete(vertices: &[Vertex]) -> Self {
        Self::from_blocks(vertices.iter().map(|&v| vec![v]).collect())
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Union of all blocks, sorted.
    pub fn ground(&self) -> Vec<Vertex> {
        let mut g: Vec<Vertex> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn ground_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every vertex in `0..n` (`None` outside the ground set).
    pub fn block_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = Some(i);
            }
        }
        idx
    }

    /// Every block of `self` lies inside some block of `coarser`.
    pub fn is_refinement_of(&self, coarser: &Partition) -> bool {
        if self.ground() != coarser.ground() {
            return false;
        }
        let n = self.ground().last().map_or(0, |&v| v + 1);
        let idx = coarser.block_index(n);
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| idx[v] == idx[b[0]]))
    }

    pub fn is_coarse_graining_of(&self, finer: &Partition) -> bool {
        finer.is_refinement_of(self)
    }

    pub fn has_singleton(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn sets(&self) -> usize {
        self.sets
    }
}

/// Partition of `vertices` into the vertex sets of the connected components
/// of the undirected graph given by `edges`.
pub fn connected_components(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Partition {
    let pos: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(vertices.len());
    for (x, y) in edges {
        if let (Some(&i), Some(&j)) = (pos.get(x), pos.get(y)) {
            uf.union(i, j);
        }
    }
    let labels: Vec<usize> = (0..vertices.len()).map(|i| uf.find(i)).collect();
    Partition::from_assignment(vertices, &labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn proper_coloring() {
        assert!(g1().is_properly_colored());
        assert!(g3().is_properly_colored());
        let bad = ColoredDigraph::from_parts(&[("u", "red"), ("w", "red")], &[("u", "w")]).unwrap();
        assert!(!bad.is_properly_colored());
        assert!(!bad.is_sf_colored());
    }

    #[test]
    fn sink_free_coloring() {
        assert!(g1().is_sf_colored());
        assert!(!g2().is_sf_colored());
        assert!(!g3().is_sf_colored());
    }

    #[test]
    fn induced_subgraphs() {
        let g = g1();
        let ab = g.induced_subgraph_by_ids(&["a", "b"]).unwrap();
        assert_eq!(ab.arcs().count(), 2);
        assert!(ab.has_arc(0, 1) && ab.has_arc(1, 0));
        let c = g.induced_subgraph_by_ids(&["c"]).unwrap();
        assert_eq!((c.n(), c.arc_count()), (1, 0));
        let ac = g.induced_subgraph_by_ids(&["a", "c"]).unwrap();
        let expected = ColoredDigraph::from_parts(&[("a", "red"), ("c", "blue")], &[("c", "a")]).unwrap();
        assert_eq!(ac, expected);
        assert!(matches!(g.induced_subgraph(&[7]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn applying_edits() {
        let g = g1();
        assert_eq!(g.apply_edits(&ArcEditSet::new()).unwrap(), g);

        let g2 = g2();
        let b = g2.labels().lookup("b").unwrap();
        let a = g2.labels().lookup("a").unwrap();
        let edited = g2.apply_edits(&[(b, a)].into_iter().collect()).unwrap();
        assert!(edited.has_arc(b, a));
        assert_eq!(edited.arc_count(), 3);

        let removed = g.apply_edits(&[(0, 1)].into_iter().collect()).unwrap();
        assert!(!removed.has_arc(0, 1));
        assert_eq!(removed.arc_count(), 2);

        assert!(matches!(
            g.apply_edits(&[(1, 1)].into_iter().collect()),
            Err(Error::SelfPair(_))
        ));
        assert!(matches!(
            g.apply_edits(&[(1, 9)].into_iter().collect()),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn arc_differences() {
        let g = g1();
        assert!(g.arc_difference(&g).unwrap().is_empty());

        let g2 = g2();
        let plus = g2.apply_edits(&[(2, 0)].into_iter().collect()).unwrap();
        let d = g2.arc_difference(&plus).unwrap();
        assert_eq!(d.to_ids(g2.labels()), vec![("b".into(), "a".into())]);

        // BMG of the cherry-on-{a,c} tree ((a,c),b).
        let cherry_ac = ColoredDigraph::from_parts(
            &[("a", "red"), ("b", "blue"), ("c", "blue")],
            &[("a", "c"), ("c", "a"), ("b", "a")],
        )
        .unwrap();
        let d = g.arc_difference(&cherry_ac).unwrap();
        assert_eq!(
            d.to_ids(g.labels()),
            vec![("a".into(), "b".into()), ("a".into(), "c".into())]
        );

        let other = g3();
        assert!(matches!(g.arc_difference(&other), Err(Error::VertexMismatch(_))));
    }

    #[test]
    fn arc_difference_aligns_by_id() {
        let g = g1();
        let shuffled = ColoredDigraph::from_parts(
            &[("c", "blue"), ("a", "red"), ("b", "blue")],
            &[("a", "b"), ("b", "a"), ("c", "a")],
        )
        .unwrap();
        assert_eq!(g, shuffled);
    }

    #[test]
    fn components() {
        let p = connected_components(&[0, 1, 2], &[(0, 1)]);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
        let p = connected_components(&[0, 1, 2], &[]);
        assert_eq!(p.blocks(), &[vec![0], vec![1], vec![2]]);
        let p = connected_components(&[0, 1, 2], &[(0, 1), (1, 2)]);
        assert_eq!(p.blocks(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn partitions_validate_and_compare() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![vec![0], vec![]]).is_err());
        assert!(Partition::new(vec![vec![0, 1], vec![1]]).is_err());
        let fine = Partition::new(vec![vec![2], vec![0], vec![1]]).unwrap();
        let coarse = Partition::new(vec![vec![1, 0], vec![2]]).unwrap();
        assert_eq!(coarse.blocks(), &[vec![0, 1], vec![2]]);
        assert!(fine.is_refinement_of(&coarse));
        assert!(coarse.is_coarse_graining_of(&fine));
        assert!(!coarse.is_refinement_of(&fine));
    }
}
