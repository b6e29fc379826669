//! Common solver entry point and result type.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{ColoredHypergraph, EdgeDeletionSet, NodeColoring, Weight, DEFAULT_PAIR_CAP};
use crate::{colorpair, exact, localratio, vcflow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    ColorPair,
    VcFlow,
    LocalRatio,
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::ColorPair,
        Algorithm::VcFlow,
        Algorithm::LocalRatio,
        Algorithm::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ColorPair => "colorpair",
            Algorithm::VcFlow => "vcflow",
            Algorithm::LocalRatio => "localratio",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of explicitly stored bad pairs (VC-Flow only).
    pub pair_cap: usize,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            pair_cap: DEFAULT_PAIR_CAP,
            deadline: None,
        }
    }
}

impl SolveOptions {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::TimedOut),
            _ => Ok(()),
        }
    }
}

/// Output of any MinECC solver.
///
/// `objective` is the weight of the deletion set. The coloring satisfies
/// every non-deleted edge, so its own unsatisfied weight never exceeds
/// `objective` and may be smaller when a deleted edge happens to end up
/// satisfied.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub algorithm: Algorithm,
    pub deleted: EdgeDeletionSet,
    pub coloring: NodeColoring,
    pub objective: Weight,
    /// Optimum of the vertex-cover LP, for the flow-based solvers.
    pub lower_bound: Option<Ratio<u128>>,
    pub work: BTreeMap<String, u64>,
    pub runtime: Duration,
    pub peak_mem_estimate: usize,
}

impl SolveResult {
    pub(crate) fn assemble(
        h: &ColoredHypergraph,
        algorithm: Algorithm,
        deleted: EdgeDeletionSet,
        lower_bound: Option<Ratio<u128>>,
    ) -> Result<Self> {
        let coloring = h.coloring_from_deletions(&deleted)?;
        let objective = deleted.weight(h);
        Ok(SolveResult {
            algorithm,
            deleted,
            coloring,
            objective,
            lower_bound,
            work: BTreeMap::new(),
            runtime: Duration::ZERO,
            peak_mem_estimate: 0,
        })
    }

    /// `objective / lower_bound`; 1 when both are zero.
    pub fn ratio(&self) -> Option<Ratio<u128>> {
        self.lower_bound.and_then(|lb| ratio_against(self.objective, lb))
    }
}

/// `objective / bound`, 1 when both vanish, `None` for a zero bound under a
/// positive objective.
pub fn ratio_against(objective: Weight, bound: Ratio<u128>) -> Option<Ratio<u128>> {
    let objective = Ratio::from_integer(objective as u128);
    if bound == Ratio::from_integer(0) {
        (objective == bound).then(|| Ratio::from_integer(1))
    } else {
        Some(objective / bound)
    }
}

/// Runs `algorithm` on `h`, timing only the solver itself.
pub fn solve(h: &ColoredHypergraph, algorithm: Algorithm, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let mut result = match algorithm {
        Algorithm::ColorPair => colorpair::colorpair_flow(h, opts)?,
        Algorithm::VcFlow => vcflow::vc_flow(h, opts)?,
        Algorithm::LocalRatio => {
            let out = localratio::local_ratio_ecc(h);
            let mut r = SolveResult::assemble(h, algorithm, out.deleted, None)?;
            r.work.insert("pointer_moves".into(), out.work.pointer_moves);
            r.work.insert("weight_updates".into(), out.work.weight_updates);
            r.peak_mem_estimate = h.edge_count() * (std::mem::size_of::<Weight>() + 1);
            r
        }
        Algorithm::Exact => {
            let opt = exact::brute_force_minecc(h)?;
            let deleted = h.unsatisfied_edges(&opt.coloring);
            let mut r = SolveResult::assemble(h, algorithm, deleted, None)?;
            // The deletion-derived coloring may differ; keep the optimum itself.
            r.coloring = opt.coloring;
            r.work.insert("nodes_explored".into(), opt.explored);
            r.peak_mem_estimate = h.node_count() * std::mem::size_of::<u32>() * 2
                + h.edge_count() * std::mem::size_of::<usize>();
            r
        }
    };
    result.runtime = start.elapsed();
    Ok(result)
}
