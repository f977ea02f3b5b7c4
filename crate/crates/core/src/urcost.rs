//! Unsatisfiable relations of a partition and the derived UR-cost.
//!
//! For a partition 𝒱 of `V′ ⊆ V(G)` (meaning the induced subgraph `G[V′]`)
//! a relation is unsatisfiable if every tree with root partition 𝒱 gets it
//! wrong. Three disjoint kinds exist:
//!
//! * `U1`: arcs `(x,y)` between blocks where `σ(y)` occurs in `x`'s block;
//! * `U2`: non-arcs `(x,y)` between blocks where `σ(y)` is absent from
//!   `x`'s block;
//! * `U3`: non-arcs `(x,y)` inside one block where `y` is the only vertex
//!   of its color in that block.

use crate::error::{Error, Result};
use crate::graph::{ArcEditSet, ColoredDigraph, Partition, Vertex};

/// Unsatisfiable relations split by origin.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct URDecomposition {
    /// Arcs that must be deleted.
    pub u1: ArcEditSet,
    /// Non-arcs between blocks that must be inserted.
    pub u2: ArcEditSet,
    /// Non-arcs within a block that must be inserted.
    pub u3: ArcEditSet,
}

impl URDecomposition {
    pub fn union(&self) -> ArcEditSet {
        let mut all = self.u1.clone();
        all.extend(&self.u2);
        all.extend(&self.u3);
        all
    }

    pub fn len(&self) -> usize {
        self.u1.len() + self.u2.len() + self.u3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    U1,
    U2,
    U3,
    Tree,
    Satisfied,
}

/// Block indices and per-block color counts for a partition of `V′`.
struct BlockCounts {
    block: Vec<usize>,
    counts: Vec<Vec<u32>>,
}

impl BlockCounts {
    fn new(g: &ColoredDigraph, p: &Partition) -> Self {
        let colors = g.labels().color_table_len();
        let mut block = vec![usize::MAX; g.n()];
        let mut counts = vec![vec![0u32; colors]; p.len()];
        for (i, b) in p.blocks().iter().enumerate() {
            for &v in b {
                block[v] = i;
                counts[i][g.color(v)] += 1;
            }
        }
        BlockCounts { block, counts }
    }

    /// Classifies the ordered cross-color pair `(x, y)`.
    fn classify(&self, g: &ColoredDigraph, x: Vertex, y: Vertex) -> Relation {
        let (bx, by) = (self.block[x], self.block[y]);
        let arc = g.has_arc(x, y);
        let n_y = self.counts[bx][g.color(y)];
        if bx != by {
            match (arc, n_y > 0) {
                (true, true) => Relation::U1,
                (false, false) => Relation::U2,
                _ => Relation::Satisfied,
            }
        } else if n_y == 1 {
            if arc {
                Relation::Satisfied
            } else {
                Relation::U3
            }
        } else {
            Relation::Tree
        }
    }
}

fn check_partition(g: &ColoredDigraph, p: &Partition) -> Result<()> {
    if p.len() < 2 {
        return Err(Error::InvalidPartition(format!(
            "need at least two blocks, got {}",
            p.len()
        )));
    }
    if p.ground_len() != g.n() || p.ground().iter().any(|&v| v >= g.n()) {
        return Err(Error::InvalidPartition(format!(
            "blocks cover {} of {} vertices",
            p.ground_len(),
            g.n()
        )));
    }
    g.ensure_proper()
}

/// Visits every ordered cross-color pair of the ground set with its class.
fn for_each_relation(
    g: &ColoredDigraph,
    p: &Partition,
    mut visit: impl FnMut(Vertex, Vertex, Relation),
) {
    let bc = BlockCounts::new(g, p);
    let ground = p.ground();
    for &x in &ground {
        for &y in &ground {
            if g.color(x) != g.color(y) {
                visit(x, y, bc.classify(g, x, y));
            }
        }
    }
}

pub(crate) fn decomposition_on(g: &ColoredDigraph, p: &Partition) -> URDecomposition {
    let mut d = URDecomposition::default();
    for_each_relation(g, p, |x, y, r| match r {
        Relation::U1 => {
            d.u1.insert(x, y);
        }
        Relation::U2 => {
            d.u2.insert(x, y);
        }
        Relation::U3 => {
            d.u3.insert(x, y);
        }
        _ => {}
    });
    d
}

pub(crate) fn cost_on(g: &ColoredDigraph, p: &Partition) -> usize {
    let mut c = 0;
    for_each_relation(g, p, |_, _, r| {
        if matches!(r, Relation::U1 | Relation::U2 | Relation::U3) {
            c += 1;
        }
    });
    c
}

/// `U1`, `U2`, `U3` of a partition of all of `V(g)` into at least two blocks.
pub fn unsatisfiable_relations(g: &ColoredDigraph, p: &Partition) -> Result<URDecomposition> {
    check_partition(g, p)?;
    Ok(decomposition_on(g, p))
}

/// The UR-cost `|U1 ∪ U2 ∪ U3|`.
pub fn ur_cost(g: &ColoredDigraph, p: &Partition) -> Result<usize> {
    check_partition(g, p)?;
    Ok(cost_on(g, p))
}

/// Ordered cross-color pairs that every tree with root partition `p` gets
/// right.
pub fn gain(g: &ColoredDigraph, p: &Partition) -> Result<usize> {
    check_partition(g, p)?;
    let mut c = 0;
    for_each_relation(g, p, |_, _, r| {
        if r == Relation::Satisfied {
            c += 1;
        }
    });
    Ok(c)
}

/// Non-arcs `(x,y)` whose head is the only vertex of its color; every tree
/// gets these wrong, so they belong to every edit set.
pub fn u_star(g: &ColoredDigraph) -> ArcEditSet {
    let mut out = ArcEditSet::new();
    if g.n() < 2 {
        return out;
    }
    for class in g.color_classes() {
        if let [y] = class[..] {
            for x in g.vertices() {
                if x != y && !g.has_arc(x, y) {
                    out.insert(x, y);
                }
            }
        }
    }
    out
}

/// Block assignment of a vertex subset with per-block color counts,
/// supporting single-vertex moves with cost deltas. Blocks may be empty.
///
/// The cost is kept as a sum over (block, color) cells. Each cell needs the
/// number of its vertices outside the color, the arcs they send into the
/// color overall and the arcs they send into the color within the block, so
/// a move delta touches only the two blocks involved and costs O(#colors).
/// Applying a move additionally updates the neighbors of the moved vertex.
#[derive(Debug, Clone)]
pub struct IncrementalCost {
    verts: Vec<Vertex>,
    color: Vec<usize>,
    colors: usize,
    blocks: usize,
    class_size: Vec<usize>,
    block: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    /// `arcs_into[(x * colors + c) * blocks + b]`: arcs from `x` into color `c` in block `b`.
    arcs_into: Vec<usize>,
    /// `arcs_total[x * colors + c]`.
    arcs_total: Vec<usize>,
    /// `arcs_from[y * blocks + b]`: arcs into `y` from block `b`.
    arcs_from: Vec<usize>,
    /// Per cell `b * colors + c`.
    counts: Vec<usize>,
    sum_total: Vec<usize>,
    sum_inside: Vec<usize>,
    sizes: Vec<usize>,
    cost: usize,
}

#[derive(Clone, Copy)]
struct Cell {
    n: usize,
    others: usize,
    total: usize,
    inside: usize,
}

impl Cell {
    fn violations(self, class: usize) -> usize {
        let cross = if self.n > 0 {
            self.total - self.inside
        } else {
            self.others * class - self.total
        };
        let within = if self.n == 1 { self.others - self.inside } else { 0 };
        cross + within
    }
}

impl IncrementalCost {
    /// `assignment[i]` is the block of `verts[i]`, in `0..blocks`.
    pub fn new(g: &ColoredDigraph, verts: &[Vertex], assignment: &[usize], blocks: usize) -> Self {
        assert_eq!(verts.len(), assignment.len());
        let m = verts.len();
        let colors = g.labels().color_table_len();
        let color: Vec<usize> = verts.iter().map(|&v| g.color(v)).collect();
        let mut class_size = vec![0; colors];
        for &c in &color {
            class_size[c] += 1;
        }
        let mut s = IncrementalCost {
            verts: verts.to_vec(),
            color,
            colors,
            blocks,
            class_size,
            block: assignment.to_vec(),
            out_adj: vec![Vec::new(); m],
            in_adj: vec![Vec::new(); m],
            arcs_into: vec![0; m * colors * blocks],
            arcs_total: vec![0; m * colors],
            arcs_from: vec![0; m * blocks],
            counts: vec![0; blocks * colors],
            sum_total: vec![0; blocks * colors],
            sum_inside: vec![0; blocks * colors],
            sizes: vec![0; blocks],
            cost: 0,
        };
        for (i, &b) in assignment.iter().enumerate() {
            s.counts[b * colors + s.color[i]] += 1;
            s.sizes[b] += 1;
        }
        for x in 0..m {
            for y in 0..m {
                if g.has_arc(verts[x], verts[y]) {
                    let (bx, by, cy) = (assignment[x], assignment[y], s.color[y]);
                    s.out_adj[x].push(y);
                    s.in_adj[y].push(x);
                    s.arcs_into[(x * colors + cy) * blocks + by] += 1;
                    s.arcs_total[x * colors + cy] += 1;
                    s.arcs_from[y * blocks + bx] += 1;
                    s.sum_total[bx * colors + cy] += 1;
                    if bx == by {
                        s.sum_inside[bx * colors + cy] += 1;
                    }
                }
            }
        }
        s.cost = (0..blocks)
            .flat_map(|b| (0..colors).map(move |c| (b, c)))
            .map(|(b, c)| s.cell(b, c).violations(s.class_size[c]))
            .sum();
        s
    }

    fn cell(&self, b: usize, c: usize) -> Cell {
        let k = b * self.colors + c;
        Cell {
            n: self.counts[k],
            others: self.sizes[b] - self.counts[k],
            total: self.sum_total[k],
            inside: self.sum_inside[k],
        }
    }

    /// Cell `(b, c)` after vertex `i` leaves or joins block `b`.
    fn moved_cell(&self, i: usize, b: usize, c: usize, join: bool) -> Cell {
        let mut cell = self.cell(b, c);
        let step = |v: &mut usize, d: usize| if join { *v += d } else { *v -= d };
        if c == self.color[i] {
            step(&mut cell.n, 1);
            step(&mut cell.inside, self.arcs_from[i * self.blocks + b]);
        } else {
            step(&mut cell.others, 1);
            step(&mut cell.total, self.arcs_total[i * self.colors + c]);
            step(&mut cell.inside, self.arcs_into[(i * self.colors + c) * self.blocks + b]);
        }
        cell
    }

    /// Change in cost if vertex `i` (local index) moved to block `to`.
    pub fn move_delta(&self, i: usize, to: usize) -> isize {
        let from = self.block[i];
        if from == to {
            return 0;
        }
        let mut delta = 0isize;
        for c in 0..self.colors {
            let k = self.class_size[c];
            if k == 0 {
                continue;
            }
            delta += self.moved_cell(i, from, c, false).violations(k) as isize
                - self.cell(from, c).violations(k) as isize;
            delta += self.moved_cell(i, to, c, true).violations(k) as isize
                - self.cell(to, c).violations(k) as isize;
        }
        delta
    }

    pub fn apply_move(&mut self, i: usize, to: usize) {
        let from = self.block[i];
        if from == to {
            return;
        }
        let delta = self.move_delta(i, to);
        let (ci, colors, blocks) = (self.color[i], self.colors, self.blocks);
        for c in 0..colors {
            let (kf, kt) = (from * colors + c, to * colors + c);
            if c == ci {
                self.counts[kf] -= 1;
                self.counts[kt] += 1;
                self.sum_inside[kf] -= self.arcs_from[i * blocks + from];
                self.sum_inside[kt] += self.arcs_from[i * blocks + to];
            } else {
                let t = self.arcs_total[i * colors + c];
                self.sum_total[kf] -= t;
                self.sum_total[kt] += t;
                let base = (i * colors + c) * blocks;
                self.sum_inside[kf] -= self.arcs_into[base + from];
                self.sum_inside[kt] += self.arcs_into[base + to];
            }
        }
        self.sizes[from] -= 1;
        self.sizes[to] += 1;
        self.block[i] = to;
        for &x in &self.in_adj[i] {
            let base = (x * colors + ci) * blocks;
            self.arcs_into[base + from] -= 1;
            self.arcs_into[base + to] += 1;
        }
        for &y in &self.out_adj[i] {
            self.arcs_from[y * blocks + from] -= 1;
            self.arcs_from[y * blocks + to] += 1;
        }
        self.cost = (self.cost as isize + delta) as usize;
    }

    /// Change in cost if all of `group` moved to block `to`.
    pub fn group_delta(&mut self, group: &[usize], to: usize) -> isize {
        let origin: Vec<usize> = group.iter().map(|&i| self.block[i]).collect();
        let start = self.cost;
        for &i in group {
            self.apply_move(i, to);
        }
        let delta = self.cost as isize - start as isize;
        for (&i, &b) in group.iter().zip(&origin).rev() {
            self.apply_move(i, b);
        }
        delta
    }

    pub fn cost(&self) -> usize {
        self.cost
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block[i]
    }

    pub fn block_size(&self, b: usize) -> usize {
        self.sizes[b]
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Nonempty blocks as a partition of the original vertices.
    pub fn partition(&self) -> Partition {
        Partition::from_assignment(&self.verts, &self.block)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use proptest::prelude::*;

    fn p(blocks: &[&[Vertex]]) -> Partition {
        Partition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn set(pairs: &[(Vertex, Vertex)]) -> ArcEditSet {
        pairs.iter().copied().collect()
    }

    #[test]
    fn decomposition_examples() {
        let d = unsatisfiable_relations(&g1(), &p(&[&[0, 1], &[2]])).unwrap();
        assert!(d.is_empty());
        let d = unsatisfiable_relations(&g1(), &p(&[&[0, 2], &[1]])).unwrap();
        assert_eq!(d.u1, set(&[(0, 1)]));
        assert!(d.u2.is_empty());
        assert_eq!(d.u3, set(&[(0, 2)]));
        let d = unsatisfiable_relations(&g3(), &p(&[&[0], &[1]])).unwrap();
        assert_eq!(d.u2, set(&[(0, 1), (1, 0)]));
        assert!(d.u1.is_empty() && d.u3.is_empty());
    }

    #[test]
    fn cost_examples() {
        let g = g1();
        assert_eq!(ur_cost(&g, &p(&[&[0, 1], &[2]])).unwrap(), 0);
        assert_eq!(ur_cost(&g, &p(&[&[0, 2], &[1]])).unwrap(), 2);
        assert_eq!(ur_cost(&g, &p(&[&[0], &[1, 2]])).unwrap(), 1);
        assert_eq!(
            unsatisfiable_relations(&g, &p(&[&[0], &[1, 2]])).unwrap().u2,
            set(&[(0, 2)])
        );
    }

    #[test]
    fn invalid_partitions() {
        let g = g1();
        assert!(ur_cost(&g, &p(&[&[0, 1, 2]])).is_err());
        assert!(ur_cost(&g, &p(&[&[0], &[1]])).is_err());
        assert!(ur_cost(&g, &p(&[&[0], &[1, 2, 3]])).is_err());
    }

    #[test]
    fn gain_examples() {
        assert_eq!(gain(&g1(), &p(&[&[0, 1], &[2]])).unwrap(), 4);
        assert_eq!(gain(&g3(), &p(&[&[0], &[1]])).unwrap(), 0);
        assert_eq!(gain(&g1(), &p(&[&[0, 2], &[1]])).unwrap(), 2);
    }

    #[test]
    fn u_star_examples() {
        assert_eq!(u_star(&g3()), set(&[(0, 1), (1, 0)]));
        assert!(u_star(&g1()).is_empty());
        assert!(u_star(&g2()).is_empty());
        let single = g3().induced_subgraph(&[0]).unwrap();
        assert!(u_star(&single).is_empty());
    }

    fn random_graph() -> impl Strategy<Value = ColoredDigraph> {
        (2usize..7, 2usize..4).prop_flat_map(|(n, l)| {
            (
                proptest::collection::vec(0..l, n),
                proptest::collection::vec(any::<bool>(), n * n),
            )
                .prop_map(move |(colors, bits)| {
                    let ids: Vec<(String, String)> = colors
                        .iter()
                        .enumerate()
                        .map(|(i, c)| (format!("v{i}"), format!("c{c}")))
                        .collect();
                    let labels = std::sync::Arc::new(crate::graph::Labels::new(ids).unwrap());
                    let arcs: Vec<(Vertex, Vertex)> = (0..n)
                        .flat_map(|x| (0..n).map(move |y| (x, y)))
                        .filter(|&(x, y)| colors[x] != colors[y] && bits[x * n + y])
                        .collect();
                    ColoredDigraph::from_arcs(labels, arcs).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn sets_are_disjoint_and_bounded(g in random_graph(), seed in any::<u64>()) {
            let n = g.n();
            let assignment: Vec<usize> = (0..n).map(|i| ((seed >> (i % 60)) & 1) as usize).collect();
            let mut assignment = assignment;
            assignment[0] = 0;
            assignment[n - 1] = 1;
            let verts: Vec<Vertex> = g.vertices().collect();
            let part = Partition::from_assignment(&verts, &assignment);
            let d = unsatisfiable_relations(&g, &part).unwrap();
            prop_assert!(d.u1.is_disjoint(&d.u2) && d.u1.is_disjoint(&d.u3) && d.u2.is_disjoint(&d.u3));
            prop_assert_eq!(d.union().len(), ur_cost(&g, &part).unwrap());
            prop_assert!(u_star(&g).is_subset(&d.union()));
            prop_assert!(gain(&g, &part).unwrap() + d.len() <= g.cross_color_pairs());
            for &(x, y) in d.u1.iter() {
                prop_assert!(g.has_arc(x, y));
            }
            for &(x, y) in d.u2.iter().chain(d.u3.iter()) {
                prop_assert!(!g.has_arc(x, y));
            }
        }

        #[test]
        fn incremental_matches_recomputation(g in random_graph(), moves in proptest::collection::vec((0usize..7, 0usize..3), 1..12)) {
            let n = g.n();
            let verts: Vec<Vertex> = g.vertices().collect();
            let mut assignment: Vec<usize> = (0..n).map(|i| i % 3).collect();
            let mut inc = IncrementalCost::new(&g, &verts, &assignment, 3);
            for (v, b) in moves {
                let v = v % n;
                let predicted = inc.cost() as isize + inc.move_delta(v, b);
                inc.apply_move(v, b);
                assignment[v] = b;
                prop_assert_eq!(inc.cost() as isize, predicted);
                let part = Partition::from_assignment(&verts, &assignment);
                prop_assert_eq!(inc.cost(), cost_on(&g, &part));
            }
            let group: Vec<usize> = (0..n).filter(|i| i % 2 == 0).collect();
            let before = inc.clone();
            let d = inc.group_delta(&group, 0);
            for &i in &group {
                inc.apply_move(i, 0);
            }
            prop_assert_eq!(inc.cost() as isize, before.cost() as isize + d);
        }
    }
}
