//! VC-Flow baseline: the vertex-cover LP solved on the explicit bad-pair
//! graph. Each edge `e` gets an `a_e` and a `b_e` node; each bad pair
//! `(e, f)` adds infinite arcs `a_e → b_f` and `a_f → b_e`. The network has
//! `2|E| + 2` nodes and `2|E| + 2|𝓑|` arcs, so it is only practical when
//! the pair count is moderate.

use num_rational::Ratio;

use crate::colorpair::{round_half_integral, HalfIntegralSolution};
use crate::error::{Error, Result};
use crate::hypergraph::{BadPair, ColoredHypergraph, EdgeId};
use crate::maxflow::{max_flow_until, min_cut_source_side, CutResult, FlowNetwork};
use crate::solve::{Algorithm, SolveOptions, SolveResult};

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

#[derive(Debug, Clone)]
pub struct VcNetwork {
    pub network: FlowNetwork,
    pub edges: usize,
}

impl VcNetwork {
    pub fn a_node(&self, e: EdgeId) -> usize {
        2 + e
    }

    pub fn b_node(&self, e: EdgeId) -> usize {
        2 + self.edges + e
    }

    /// `x_e = ½(b_e − a_e + 1)` read from the cut.
    pub fn extract(&self, cut: &CutResult) -> HalfIntegralSolution {
        let twice = (0..self.edges)
            .map(|e| 1 + cut.contains(self.b_node(e)) as u8 - cut.contains(self.a_node(e)) as u8)
            .collect();
        HalfIntegralSolution::from_twice(twice).expect("values are in 0..=2")
    }
}

/// `pairs` must be the bad pairs of `h`.
pub fn build_vc_network(h: &ColoredHypergraph, pairs: &[BadPair]) -> VcNetwork {
    let m = h.edge_count();
    let mut net = FlowNetwork::new(2 * m + 2, SOURCE, SINK)
        .expect("distinct terminals")
        .with_arc_capacity(2 * m + 2 * pairs.len());
    for (e, edge) in h.edges().iter().enumerate() {
        net.add_arc(SOURCE, 2 + e, edge.weight);
        net.add_arc(2 + m + e, SINK, edge.weight);
    }
    for p in pairs {
        net.add_infinite_arc(2 + p.e, 2 + m + p.f);
        net.add_infinite_arc(2 + p.f, 2 + m + p.e);
    }
    VcNetwork {
        network: net,
        edges: m,
    }
}

pub fn vc_flow(h: &ColoredHypergraph, opts: &SolveOptions) -> Result<SolveResult> {
    let pairs = h.enumerate_bad_pairs(opts.pair_cap)?;
    opts.check_deadline()?;
    let vc = build_vc_network(h, &pairs);
    let flow = max_flow_until(&vc.network, opts.deadline)?;
    let cut = min_cut_source_side(&vc.network, &flow);
    let x = vc.extract(&cut);
    if x.objective_half_units(h) != cut.value {
        return Err(Error::Internal("cut value differs from LP objective".into()));
    }
    let deleted = round_half_integral(h, &x);
    if !h.is_conflict_free(&deleted) {
        return Err(Error::Internal("rounded deletion set leaves a conflict".into()));
    }
    let mut result = SolveResult::assemble(
        h,
        Algorithm::VcFlow,
        deleted,
        Some(Ratio::new(cut.value, 2)),
    )?;
    result.work.insert("bad_pairs".into(), pairs.len() as u64);
    result.work.insert("network_nodes".into(), vc.network.node_count() as u64);
    result.work.insert("network_arcs".into(), vc.network.arc_count() as u64);
    result.work.insert("pushes".into(), flow.stats.pushes);
    result.work.insert("relabels".into(), flow.stats.relabels);
    result.work.insert("global_relabels".into(), flow.stats.global_relabels);
    result.peak_mem_estimate = vc.network.memory_estimate()
        + pairs.capacity() * std::mem::size_of::<BadPair>();
    Ok(result)
}
