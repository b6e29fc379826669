//! Edge-colored hypergraphs and the solution objects shared by every solver.
//!
//! Nodes are identified internally by `0..n` and edges by their position in
//! the canonical order, which sorts edges by `(color, label)`. The label is
//! the 1-based position of the edge in the input, and is what reports show.
//! Colors are kept 1-based (`1..=k`) everywhere.

mod format;
mod generate;
mod pairs;
mod stats;

pub use format::{parse_hypergraph, parse_hypergraph_str};
pub use generate::{generate_random, GeneratorParams};
pub use pairs::{BadPair, DEFAULT_PAIR_CAP};
pub use stats::HypergraphStats;

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;
pub type Color = u32;
pub type Weight = u64;

/// Input description of one hyperedge, used to build a [`ColoredHypergraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub color: Color,
    pub weight: Weight,
    /// 0-based node ids, in any order.
    pub nodes: Vec<NodeId>,
}

impl EdgeSpec {
    pub fn new(color: Color, weight: Weight, nodes: impl Into<Vec<NodeId>>) -> Self {
        EdgeSpec {
            color,
            weight,
            nodes: nodes.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperEdge {
    /// 1-based id of the edge in the original input order.
    pub label: usize,
    pub color: Color,
    pub weight: Weight,
    /// Strictly increasing 0-based node ids.
    pub nodes: Vec<NodeId>,
}

impl HyperEdge {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// An immutable edge-colored hypergraph with incidence lists.
///
/// Edges are stored in canonical `(color, label)` order, and each incidence
/// list `E(u)` inherits that order, so the edges around a node are sorted by
/// color. Both incidence lists and per-node color lists `C(u)` are kept in
/// compressed row form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredHypergraph {
    node_count: usize,
    color_count: Color,
    unweighted: bool,
    edges: Vec<HyperEdge>,
    inc_offsets: Vec<usize>,
    inc: Vec<EdgeId>,
    col_offsets: Vec<usize>,
    cols: Vec<Color>,
}

impl ColoredHypergraph {
    /// Validates the edges and builds the canonical hypergraph.
    ///
    /// Edge labels are assigned `1..=m` in the order given.
    pub fn new(node_count: usize, color_count: Color, specs: Vec<EdgeSpec>) -> Result<Self> {
        let mut edges = Vec::with_capacity(specs.len());
        for (idx, spec) in specs.into_iter().enumerate() {
            edges.push(validate_edge(node_count, color_count, idx + 1, spec)?);
        }
        Self::from_validated(node_count, color_count, edges, false)
    }

    pub(crate) fn from_validated(
        node_count: usize,
        color_count: Color,
        mut edges: Vec<HyperEdge>,
        unweighted: bool,
    ) -> Result<Self> {
        let total = edges
            .iter()
            .try_fold(0u64, |acc, e| acc.checked_add(e.weight))
            .ok_or(Error::WeightOverflow)?;
        // Flow capacities are stored doubled, plus one for the infinite arcs.
        total
            .checked_mul(2)
            .and_then(|t| t.checked_add(1))
            .ok_or(Error::WeightOverflow)?;

        edges.sort_by_key(|e| (e.color, e.label));

        let mut degree = vec![0usize; node_count];
        for e in &edges {
            for &u in &e.nodes {
                degree[u] += 1;
            }
        }
        let mut inc_offsets = Vec::with_capacity(node_count + 1);
        inc_offsets.push(0);
        for d in &degree {
            inc_offsets.push(inc_offsets.last().unwrap() + d);
        }
        let mut fill = inc_offsets[..node_count].to_vec();
        let mut inc = vec![0; *inc_offsets.last().unwrap()];
        for (id, e) in edges.iter().enumerate() {
            for &u in &e.nodes {
                inc[fill[u]] = id;
                fill[u] += 1;
            }
        }

        let mut col_offsets = Vec::with_capacity(node_count + 1);
        col_offsets.push(0);
        let mut cols = Vec::new();
        for u in 0..node_count {
            let mut last = None;
            for &id in &inc[inc_offsets[u]..inc_offsets[u + 1]] {
                let c = edges[id].color;
                if last != Some(c) {
                    cols.push(c);
                    last = Some(c);
                }
            }
            col_offsets.push(cols.len());
        }

        Ok(ColoredHypergraph {
            node_count,
            color_count,
            unweighted,
            edges,
            inc_offsets,
            inc,
            col_offsets,
            cols,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Declared number of colors `k`.
    pub fn color_count(&self) -> Color {
        self.color_count
    }

    /// Number of distinct colors carried by at least one edge.
    pub fn colors_present(&self) -> usize {
        let mut n = 0;
        let mut last = None;
        for e in &self.edges {
            if last != Some(e.color) {
                n += 1;
                last = Some(e.color);
            }
        }
        n
    }

    /// True when the instance was read from an `unweighted` file.
    pub fn is_unweighted(&self) -> bool {
        self.unweighted
    }

    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &HyperEdge {
        &self.edges[id]
    }

    /// `E(u)` in canonical order.
    pub fn incident(&self, u: NodeId) -> &[EdgeId] {
        &self.inc[self.inc_offsets[u]..self.inc_offsets[u + 1]]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.inc_offsets[u + 1] - self.inc_offsets[u]
    }

    /// `C(u)`, sorted ascending.
    pub fn colors_at(&self, u: NodeId) -> &[Color] {
        &self.cols[self.col_offsets[u]..self.col_offsets[u + 1]]
    }

    /// Global index of the pair `(u, c)` among all `Σ_u |C(u)|` node-color
    /// pairs, ordered by node and then color.
    pub fn color_slot(&self, u: NodeId, c: Color) -> Option<usize> {
        self.colors_at(u)
            .binary_search(&c)
            .ok()
            .map(|i| self.col_offsets[u] + i)
    }

    /// Range of [`color_slot`](Self::color_slot) indices belonging to `u`.
    pub fn color_slots(&self, u: NodeId) -> std::ops::Range<usize> {
        self.col_offsets[u]..self.col_offsets[u + 1]
    }

    /// Hypergraph size `μ = Σ|e|`.
    pub fn size(&self) -> usize {
        self.inc.len()
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(HyperEdge::len).max().unwrap_or(0)
    }

    /// `Σ_u |C(u)|`.
    pub fn color_incidences(&self) -> usize {
        self.cols.len()
    }

    /// `Σ_u C(|C(u)|, 2)`.
    pub fn color_pairs(&self) -> usize {
        (0..self.node_count)
            .map(|u| {
                let c = self.colors_at(u).len();
                c * c.saturating_sub(1) / 2
            })
            .sum()
    }

    pub fn total_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Canonical edge id for a 1-based input label.
    pub fn edge_by_label(&self, label: usize) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// True iff every node sees at most one color among non-deleted edges.
    pub fn is_conflict_free(&self, deleted: &EdgeDeletionSet) -> bool {
        (0..self.node_count).all(|u| self.surviving_color(u, deleted).is_ok())
    }

    /// The single color of the surviving edges at `u`, `None` if none survive.
    fn surviving_color(
        &self,
        u: NodeId,
        deleted: &EdgeDeletionSet,
    ) -> std::result::Result<Option<Color>, (Color, Color)> {
        let mut seen = None;
        for &id in self.incident(u) {
            if deleted.contains(id) {
                continue;
            }
            let c = self.edges[id].color;
            match seen {
                None => seen = Some(c),
                Some(s) if s != c => return Err((s, c)),
                _ => {}
            }
        }
        Ok(seen)
    }

    /// Colors every node by its surviving edges.
    ///
    /// Nodes with no surviving edge get the smallest color of `C(u)`, or
    /// color 1 when they are isolated.
    pub fn coloring_from_deletions(&self, deleted: &EdgeDeletionSet) -> Result<NodeColoring> {
        let mut colors = Vec::with_capacity(self.node_count);
        for u in 0..self.node_count {
            match self.surviving_color(u, deleted) {
                Ok(Some(c)) => colors.push(c),
                Ok(None) => colors.push(self.colors_at(u).first().copied().unwrap_or(1)),
                Err((a, b)) => {
                    return Err(Error::Precondition(format!(
                        "node {} keeps edges of colors {} and {}",
                        u + 1,
                        a,
                        b
                    )))
                }
            }
        }
        Ok(NodeColoring::new(colors))
    }

    pub fn is_satisfied(&self, id: EdgeId, coloring: &NodeColoring) -> bool {
        let e = &self.edges[id];
        e.nodes.iter().all(|&u| coloring.color_of(u) == e.color)
    }

    /// Total weight of edges with at least one node colored differently.
    pub fn unsatisfied_weight(&self, coloring: &NodeColoring) -> Weight {
        (0..self.edges.len())
            .filter(|&id| !self.is_satisfied(id, coloring))
            .map(|id| self.edges[id].weight)
            .sum()
    }

    /// Edges left unsatisfied by `coloring`.
    pub fn unsatisfied_edges(&self, coloring: &NodeColoring) -> EdgeDeletionSet {
        EdgeDeletionSet::from_ids(
            self.edges.len(),
            (0..self.edges.len()).filter(|&id| !self.is_satisfied(id, coloring)),
        )
    }
}

fn validate_edge(n: usize, k: Color, label: usize, spec: EdgeSpec) -> Result<HyperEdge> {
    let invalid = |msg: String| Error::Invalid(format!("edge {label}: {msg}"));
    if spec.color == 0 || spec.color > k {
        return Err(invalid(format!("color {} out of range 1..={k}", spec.color)));
    }
    if spec.nodes.is_empty() {
        return Err(invalid("edge has no nodes".into()));
    }
    let mut nodes = spec.nodes;
    if let Some(&bad) = nodes.iter().find(|&&u| u >= n) {
        return Err(invalid(format!("node {bad} out of range 0..{n}")));
    }
    nodes.sort_unstable();
    if nodes.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid("repeated node".into()));
    }
    Ok(HyperEdge {
        label,
        color: spec.color,
        weight: spec.weight,
        nodes,
    })
}

/// A total assignment of colors to nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeColoring(Vec<Color>);

impl NodeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        NodeColoring(colors)
    }

    pub fn color_of(&self, u: NodeId) -> Color {
        self.0[u]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A set of canonical edge ids marked for deletion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeDeletionSet {
    member: Vec<bool>,
}

impl EdgeDeletionSet {
    pub fn empty(edge_count: usize) -> Self {
        EdgeDeletionSet {
            member: vec![false; edge_count],
        }
    }

    pub fn all(edge_count: usize) -> Self {
        EdgeDeletionSet {
            member: vec![true; edge_count],
        }
    }

    pub fn from_ids(edge_count: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut set = Self::empty(edge_count);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn insert(&mut self, id: EdgeId) {
        self.member[id] = true;
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.member[id]
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&d| d).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.member.iter().any(|&d| d)
    }

    /// Deleted ids in ascending canonical order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(id, &d)| d.then_some(id))
    }

    pub fn weight(&self, h: &ColoredHypergraph) -> Weight {
        self.iter().map(|id| h.edge(id).weight).sum()
    }

    /// Original 1-based labels of the deleted edges, sorted.
    pub fn labels(&self, h: &ColoredHypergraph) -> Vec<usize> {
        let mut labels: Vec<_> = self.iter().map(|id| h.edge(id).label).collect();
        labels.sort_unstable();
        labels
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Three nodes; e1={1,2} color 1, e2={2,3} color 2, e3={1,3} color 1.
    pub(crate) fn t1() -> ColoredHypergraph {
        ColoredHypergraph::new(
            3,
            2,
            vec![
                EdgeSpec::new(1, 1, [0, 1]),
                EdgeSpec::new(2, 1, [1, 2]),
                EdgeSpec::new(1, 1, [0, 2]),
            ],
        )
        .unwrap()
    }

    fn by_labels(h: &ColoredHypergraph, labels: &[usize]) -> EdgeDeletionSet {
        EdgeDeletionSet::from_ids(
            h.edge_count(),
            labels.iter().map(|&l| h.edge_by_label(l).unwrap()),
        )
    }

    #[test]
    fn canonical_order_and_incidence() {
        let h = t1();
        let labels: Vec<_> = h.edges().iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![1, 3, 2]);
        assert_eq!(h.incident(1), &[0, 2]);
        assert_eq!(h.colors_at(0), &[1]);
        assert_eq!(h.colors_at(1), &[1, 2]);
        assert_eq!(h.colors_at(2), &[1, 2]);
        assert_eq!(h.size(), 6);
        assert_eq!(h.max_edge_size(), 2);
        assert_eq!(h.color_incidences(), 5);
        assert_eq!(h.color_pairs(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        let bad = |spec| ColoredHypergraph::new(3, 2, vec![spec]).is_err();
        assert!(bad(EdgeSpec::new(0, 1, [0])));
        assert!(bad(EdgeSpec::new(3, 1, [0])));
        assert!(bad(EdgeSpec::new(1, 1, [3])));
        assert!(bad(EdgeSpec::new(1, 1, [1, 1])));
        assert!(bad(EdgeSpec::new(1, 1, Vec::new())));
    }

    #[test]
    fn rejects_weight_overflow() {
        let err = ColoredHypergraph::new(
            2,
            1,
            vec![EdgeSpec::new(1, u64::MAX / 2, [0]), EdgeSpec::new(1, 1, [1])],
        )
        .unwrap_err();
        assert_eq!(err, Error::WeightOverflow);
    }

    #[test]
    fn conflict_freeness_on_t1() {
        let h = t1();
        assert!(h.is_conflict_free(&by_labels(&h, &[2])));
        assert!(!h.is_conflict_free(&EdgeDeletionSet::empty(3)));
        assert!(h.is_conflict_free(&EdgeDeletionSet::all(3)));
    }

    #[test]
    fn coloring_from_deletions_on_t1() {
        let h = t1();
        let c = h.coloring_from_deletions(&by_labels(&h, &[2])).unwrap();
        assert_eq!(c.as_slice(), &[1, 1, 1]);
        let c = h.coloring_from_deletions(&EdgeDeletionSet::all(3)).unwrap();
        assert_eq!(c.as_slice(), &[1, 1, 1]);
        assert!(matches!(
            h.coloring_from_deletions(&EdgeDeletionSet::empty(3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn isolated_node_falls_back_to_color_one() {
        let h = ColoredHypergraph::new(3, 3, vec![EdgeSpec::new(3, 1, [0, 1])]).unwrap();
        let c = h.coloring_from_deletions(&EdgeDeletionSet::empty(1)).unwrap();
        assert_eq!(c.as_slice(), &[3, 3, 1]);
    }

    #[test]
    fn unsatisfied_weight_on_t1() {
        let h = t1();
        assert_eq!(h.unsatisfied_weight(&NodeColoring::new(vec![1, 1, 1])), 1);
        assert_eq!(h.unsatisfied_weight(&NodeColoring::new(vec![2, 2, 2])), 2);
        let single = ColoredHypergraph::new(
            3,
            1,
            vec![EdgeSpec::new(1, 4, [0, 1]), EdgeSpec::new(1, 2, [1, 2])],
        )
        .unwrap();
        assert_eq!(single.unsatisfied_weight(&NodeColoring::new(vec![1, 1, 1])), 0);
    }

    #[test]
    fn deletion_labels_are_original_ids() {
        let h = t1();
        let d = by_labels(&h, &[3, 2]);
        assert_eq!(d.labels(&h), vec![2, 3]);
        assert_eq!(d.weight(&h), 2);
    }
}
