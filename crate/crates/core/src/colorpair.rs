//! ColorPair-Flow: a `(2 - 2/k)`-approximation that solves the vertex-cover
//! LP of a MinECC instance without enumerating bad edge pairs.
//!
//! The color-pair binary program has variables `a_e, b_e` per edge and
//! `a_u^i, b_u^i` per node `u` and color `i ∈ C(u)`, with constraints
//!
//! ```text
//! a_e ≤ a_u^ℓ(e),  b_u^ℓ(e) ≤ b_e     for u ∈ e
//! a_u^i ≤ b_u^j,   a_u^j ≤ b_u^i      for {i, j} ⊆ C(u)
//! ```
//!
//! and objective `½ Σ w(e)(b_e − a_e + 1)`. Every `x ≤ y` constraint is an
//! infinite arc from the node of `x` to the node of `y`; a variable is 1 iff
//! its node lies on the source side of a minimum cut. The optimum equals the
//! vertex-cover LP optimum through `x_e = ½(b_e − a_e + 1)`, and that
//! half-integral `x` is then rounded by keeping the heaviest color among the
//! half edges.
//!
//! Network layout, by node index:
//!
//! | range                     | role        |
//! |---------------------------|-------------|
//! | `0`, `1`                  | `s`, `t`    |
//! | `2 .. 2+m`                | `α_e`       |
//! | `2+m .. 2+2m`             | `β_e`       |
//! | `2+2m .. 2+2m+P`          | `α_u^i`     |
//! | `2+2m+P .. 2+2m+2P`       | `β_u^i`     |
//!
//! where `P = Σ_u |C(u)|` and node-color pairs are numbered by
//! [`ColoredHypergraph::color_slot`]. Source and sink arcs carry `w(e)`,
//! i.e. twice the `½ w(e)` of the program, so the cut is integral and the
//! LP value is `cut / 2`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::hypergraph::{Color, ColoredHypergraph, EdgeDeletionSet, EdgeId, Weight};
use crate::maxflow::{max_flow_until, min_cut_source_side, CutResult, FlowNetwork};
use crate::solve::{Algorithm, SolveOptions, SolveResult};

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

/// Index arithmetic for the node roles of the color-pair network.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorPairLayout {
    pub edges: usize,
    pub slots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Source,
    Sink,
    EdgeAlpha(EdgeId),
    EdgeBeta(EdgeId),
    SlotAlpha(usize),
    SlotBeta(usize),
}

impl ColorPairLayout {
    pub fn node_count(&self) -> usize {
        2 + 2 * self.edges + 2 * self.slots
    }

    pub fn edge_alpha(&self, e: EdgeId) -> usize {
        2 + e
    }

    pub fn edge_beta(&self, e: EdgeId) -> usize {
        2 + self.edges + e
    }

    pub fn slot_alpha(&self, slot: usize) -> usize {
        2 + 2 * self.edges + slot
    }

    pub fn slot_beta(&self, slot: usize) -> usize {
        2 + 2 * self.edges + self.slots + slot
    }

    pub fn role(&self, node: usize) -> Role {
        let (m, p) = (self.edges, self.slots);
        match node {
            SOURCE => Role::Source,
            SINK => Role::Sink,
            x if x < 2 + m => Role::EdgeAlpha(x - 2),
            x if x < 2 + 2 * m => Role::EdgeBeta(x - 2 - m),
            x if x < 2 + 2 * m + p => Role::SlotAlpha(x - 2 - 2 * m),
            x => {
                assert!(x < self.node_count(), "node {x} outside layout");
                Role::SlotBeta(x - 2 - 2 * m - p)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColorPairNetwork {
    pub network: FlowNetwork,
    pub layout: ColorPairLayout,
}

/// Builds the color-pair network: `N = 2 + 2|E| + 2Σ|C(u)|` nodes and
/// `M = 2|E| + 2μ + 2Σ C(|C(u)|, 2)` arcs.
pub fn build_colorpair_network(h: &ColoredHypergraph) -> ColorPairNetwork {
    let layout = ColorPairLayout {
        edges: h.edge_count(),
        slots: h.color_incidences(),
    };
    let arcs = 2 * h.edge_count() + 2 * h.size() + 2 * h.color_pairs();
    let mut net = FlowNetwork::new(layout.node_count(), SOURCE, SINK)
        .expect("layout has distinct terminals")
        .with_arc_capacity(arcs);

    for u in 0..h.node_count() {
        let slots = h.color_slots(u);
        for i in slots.clone() {
            for j in i + 1..slots.end {
                net.add_infinite_arc(layout.slot_alpha(i), layout.slot_beta(j));
                net.add_infinite_arc(layout.slot_alpha(j), layout.slot_beta(i));
            }
        }
    }
    for (e, edge) in h.edges().iter().enumerate() {
        for &u in &edge.nodes {
            let slot = h.color_slot(u, edge.color).expect("edge color is in C(u)");
            net.add_infinite_arc(layout.edge_alpha(e), layout.slot_alpha(slot));
            net.add_infinite_arc(layout.slot_beta(slot), layout.edge_beta(e));
        }
    }
    for (e, edge) in h.edges().iter().enumerate() {
        net.add_arc(SOURCE, layout.edge_alpha(e), edge.weight);
        net.add_arc(layout.edge_beta(e), SINK, edge.weight);
    }
    ColorPairNetwork {
        network: net,
        layout,
    }
}

/// Binary solution of the color-pair program. Node-color variables are
/// indexed by color slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlpSolution {
    pub a_edge: Vec<bool>,
    pub b_edge: Vec<bool>,
    pub a_slot: Vec<bool>,
    pub b_slot: Vec<bool>,
}

impl BlpSolution {
    /// Returns the first violated constraint, if any.
    pub fn check(&self, h: &ColoredHypergraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(format!("infeasible color-pair solution: {msg}")));
        for (e, edge) in h.edges().iter().enumerate() {
            for &u in &edge.nodes {
                let slot = h.color_slot(u, edge.color).expect("edge color is in C(u)");
                if self.a_edge[e] && !self.a_slot[slot] {
                    return fail(format!("a_e > a_u for edge {} node {}", edge.label, u + 1));
                }
                if self.b_slot[slot] && !self.b_edge[e] {
                    return fail(format!("b_u > b_e for edge {} node {}", edge.label, u + 1));
                }
            }
        }
        for u in 0..h.node_count() {
            let slots = h.color_slots(u);
            for i in slots.clone() {
                for j in slots.clone() {
                    if i != j && self.a_slot[i] && !self.b_slot[j] {
                        return fail(format!("a_u^i > b_u^j at node {}", u + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Σ w(e)(b_e − a_e + 1)`, twice the program objective.
    pub fn objective_half_units(&self, h: &ColoredHypergraph) -> u128 {
        h.edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let twice = 1 + self.b_edge[e] as u128 - self.a_edge[e] as u128;
                edge.weight as u128 * twice
            })
            .sum()
    }
}

/// Reads the program variables off the source side of a cut.
pub fn extract_blp_solution(cut: &CutResult, layout: &ColorPairLayout) -> BlpSolution {
    let side = |node: usize| cut.contains(node);
    BlpSolution {
        a_edge: (0..layout.edges).map(|e| side(layout.edge_alpha(e))).collect(),
        b_edge: (0..layout.edges).map(|e| side(layout.edge_beta(e))).collect(),
        a_slot: (0..layout.slots).map(|s| side(layout.slot_alpha(s))).collect(),
        b_slot: (0..layout.slots).map(|s| side(layout.slot_beta(s))).collect(),
    }
}

/// A vertex-cover LP solution with every `x_e ∈ {0, ½, 1}`, stored as `2x_e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfIntegralSolution {
    twice: Vec<u8>,
}

impl HalfIntegralSolution {
    /// `twice[e] = 2 x_e`; every entry must be 0, 1 or 2.
    pub fn from_twice(twice: Vec<u8>) -> Result<Self> {
        if let Some(v) = twice.iter().find(|&&v| v > 2) {
            return Err(Error::Invalid(format!("x = {v}/2 is not half-integral")));
        }
        Ok(HalfIntegralSolution { twice })
    }

    pub fn twice(&self, e: EdgeId) -> u8 {
        self.twice[e]
    }

    pub fn value(&self, e: EdgeId) -> Ratio<u8> {
        Ratio::new(self.twice[e], 2)
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    /// `2 Σ w(e) x_e`.
    pub fn objective_half_units(&self, h: &ColoredHypergraph) -> u128 {
        h.edges()
            .iter()
            .zip(&self.twice)
            .map(|(e, &x)| e.weight as u128 * x as u128)
            .sum()
    }

    pub fn objective(&self, h: &ColoredHypergraph) -> Ratio<u128> {
        Ratio::new(self.objective_half_units(h), 2)
    }

    /// `x_e + x_f ≥ 1` for every bad pair.
    pub fn is_feasible(&self, h: &ColoredHypergraph, cap: usize) -> Result<bool> {
        Ok(h.enumerate_bad_pairs(cap)?
            .iter()
            .all(|p| self.twice[p.e] + self.twice[p.f] >= 2))
    }
}

/// `x_e = ½(b_e − a_e + 1)`.
pub fn blp_to_lpvc(blp: &BlpSolution) -> HalfIntegralSolution {
    let twice = blp
        .a_edge
        .iter()
        .zip(&blp.b_edge)
        .map(|(&a, &b)| 1 + b as u8 - a as u8)
        .collect();
    HalfIntegralSolution { twice }
}

/// Deletes every edge at 1 and every half edge outside the color with the
/// largest half weight (smallest color on ties).
pub fn round_half_integral(h: &ColoredHypergraph, x: &HalfIntegralSolution) -> EdgeDeletionSet {
    let mut best: Option<(Color, Weight)> = None;
    let mut current: Option<(Color, Weight)> = None;
    for (e, edge) in h.edges().iter().enumerate() {
        if x.twice(e) != 1 {
            continue;
        }
        match &mut current {
            Some((c, w)) if *c == edge.color => *w += edge.weight,
            _ => {
                if let Some(done) = current {
                    best = better(best, done);
                }
                current = Some((edge.color, edge.weight));
            }
        }
    }
    if let Some(done) = current {
        best = better(best, done);
    }
    let keep = best.map(|(c, _)| c);

    EdgeDeletionSet::from_ids(
        h.edge_count(),
        h.edges().iter().enumerate().filter_map(|(e, edge)| {
            let delete = match x.twice(e) {
                2 => true,
                1 => Some(edge.color) != keep,
                _ => false,
            };
            delete.then_some(e)
        }),
    )
}

/// Colors arrive in ascending order, so only a strictly heavier color wins.
fn better(best: Option<(Color, Weight)>, candidate: (Color, Weight)) -> Option<(Color, Weight)> {
    match best {
        Some(b) if b.1 >= candidate.1 => Some(b),
        _ => Some(candidate),
    }
}

/// Intermediate products of the LP stage, exposed for inspection.
#[derive(Debug, Clone)]
pub struct LpStage {
    pub cut: CutResult,
    pub blp: BlpSolution,
    pub x: HalfIntegralSolution,
}

/// Solves the vertex-cover LP through the color-pair network.
pub fn solve_lpvc(h: &ColoredHypergraph, opts: &SolveOptions) -> Result<(ColorPairNetwork, LpStage, crate::maxflow::FlowStats)> {
    let cp = build_colorpair_network(h);
    let flow = max_flow_until(&cp.network, opts.deadline)?;
    let cut = min_cut_source_side(&cp.network, &flow);
    let blp = extract_blp_solution(&cut, &cp.layout);
    blp.check(h)?;
    if blp.objective_half_units(h) != cut.value {
        return Err(Error::Internal(format!(
            "cut value {} differs from program objective {}",
            cut.value,
            blp.objective_half_units(h)
        )));
    }
    let x = blp_to_lpvc(&blp);
    Ok((cp, LpStage { cut, blp, x }, flow.stats))
}

/// The full ColorPair-Flow pipeline.
pub fn colorpair_flow(h: &ColoredHypergraph, opts: &SolveOptions) -> Result<SolveResult> {
    let (cp, lp, stats) = solve_lpvc(h, opts)?;
    let deleted = round_half_integral(h, &lp.x);
    if !h.is_conflict_free(&deleted) {
        return Err(Error::Internal("rounded deletion set leaves a conflict".into()));
    }
    let lower_bound = Ratio::new(lp.cut.value, 2);
    let mut result = SolveResult::assemble(h, Algorithm::ColorPair, deleted, Some(lower_bound))?;
    result.work.insert("network_nodes".into(), cp.network.node_count() as u64);
    result.work.insert("network_arcs".into(), cp.network.arc_count() as u64);
    result.work.insert("pushes".into(), stats.pushes);
    result.work.insert("relabels".into(), stats.relabels);
    result.work.insert("global_relabels".into(), stats.global_relabels);
    result.work.insert("gap_relabels".into(), stats.gap_relabels);
    result.peak_mem_estimate = cp.network.memory_estimate() + 4 * cp.layout.node_count();
    Ok(result)
}
