//! Deterministic local-ratio 2-approximations.
//!
//! [`local_ratio_vc`] is the Bar-Yehuda–Even weight-reduction pass for
//! node-weighted vertex cover. [`local_ratio_ecc`] runs the same pass on the
//! vertex-cover instance implied by the bad edge pairs of a hypergraph, but
//! discovers those pairs with two pointers over each color-sorted incidence
//! list, so it never materializes them and runs in `O(μ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{ColoredHypergraph, EdgeDeletionSet, Weight};

/// A node-weighted simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcGraph {
    weights: Vec<Weight>,
    edges: Vec<(usize, usize)>,
}

impl VcGraph {
    pub fn new(weights: Vec<Weight>, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::Invalid(format!("self-loop at node {u}")));
            }
            if u >= weights.len() || v >= weights.len() {
                return Err(Error::Invalid(format!("edge ({u}, {v}) out of range")));
            }
        }
        Ok(VcGraph { weights, edges })
    }

    /// The vertex-cover instance of a hypergraph: one node per edge, one
    /// graph edge per bad pair.
    pub fn from_hypergraph(h: &ColoredHypergraph, pair_cap: usize) -> Result<Self> {
        let pairs = h.enumerate_bad_pairs(pair_cap)?;
        Ok(VcGraph {
            weights: h.edges().iter().map(|e| e.weight).collect(),
            edges: pairs.into_iter().map(|p| (p.e, p.f)).collect(),
        })
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_cover(&self, cover: &[usize]) -> bool {
        let mut inside = vec![false; self.weights.len()];
        for &v in cover {
            inside[v] = true;
        }
        self.edges.iter().all(|&(u, v)| inside[u] || inside[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcCover {
    /// Nodes whose residual weight reached zero, ascending.
    pub cover: Vec<usize>,
    pub residual: Vec<Weight>,
}

impl VcCover {
    pub fn weight(&self, g: &VcGraph) -> Weight {
        self.cover.iter().map(|&v| g.weights[v]).sum()
    }
}

/// Edges are processed in the order stored in `g`.
pub fn local_ratio_vc(g: &VcGraph) -> VcCover {
    let mut residual = g.weights.clone();
    for &(u, v) in &g.edges {
        let m = residual[u].min(residual[v]);
        residual[u] -= m;
        residual[v] -= m;
    }
    let cover = (0..residual.len()).filter(|&v| residual[v] == 0).collect();
    VcCover { cover, residual }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRatioWork {
    pub pointer_moves: u64,
    pub weight_updates: u64,
}

impl LocalRatioWork {
    pub fn total(&self) -> u64 {
        self.pointer_moves + self.weight_updates
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRatioOutcome {
    pub deleted: EdgeDeletionSet,
    pub work: LocalRatioWork,
}

/// Linear-time deterministic 2-approximation for MinECC.
///
/// Nodes are visited in ascending id. At each node the front pointer starts
/// at the lowest color and the back pointer at the highest; while they point
/// at live edges of different colors, the pair is bad and both residual
/// weights drop by the smaller one, deleting whichever edge reaches zero
/// (both on a tie). Residual weights live in one array for the whole run.
pub fn local_ratio_ecc(h: &ColoredHypergraph) -> LocalRatioOutcome {
    let mut weight: Vec<Weight> = h.edges().iter().map(|e| e.weight).collect();
    let mut deleted = EdgeDeletionSet::empty(h.edge_count());
    let mut work = LocalRatioWork::default();
    let color = |id: usize| h.edge(id).color;

    for v in 0..h.node_count() {
        let list = h.incident(v);
        if list.is_empty() {
            continue;
        }
        let (mut f, mut b) = (0usize, list.len() - 1);

        macro_rules! skip_back {
            () => {
                while deleted.contains(list[b]) && b > f {
                    b -= 1;
                    work.pointer_moves += 1;
                }
            };
        }
        macro_rules! skip_front {
            () => {
                while deleted.contains(list[f]) && b > f {
                    f += 1;
                    work.pointer_moves += 1;
                }
            };
        }

        skip_back!();
        skip_front!();
        while color(list[f]) != color(list[b]) {
            let (ef, eb) = (list[f], list[b]);
            work.weight_updates += 1;
            if weight[ef] < weight[eb] {
                deleted.insert(ef);
                weight[eb] -= weight[ef];
                weight[ef] = 0;
                skip_front!();
            } else if weight[ef] == weight[eb] {
                deleted.insert(ef);
                deleted.insert(eb);
                weight[ef] = 0;
                weight[eb] = 0;
                skip_front!();
                skip_back!();
            } else {
                deleted.insert(eb);
                weight[ef] -= weight[eb];
                weight[eb] = 0;
                skip_back!();
            }
        }
    }
    LocalRatioOutcome { deleted, work }
}
