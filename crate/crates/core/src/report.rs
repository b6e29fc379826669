//! Machine-readable solve reports and their independent verification.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::hypergraph::{ColoredHypergraph, EdgeDeletionSet, NodeColoring, Weight};
use crate::solve::{ratio_against, SolveResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numerator: u128,
    pub denominator: u128,
}

impl From<Ratio<u128>> for Fraction {
    fn from(r: Ratio<u128>) -> Self {
        Fraction {
            numerator: *r.numer(),
            denominator: *r.denom(),
        }
    }
}

impl Fraction {
    pub fn to_ratio(self) -> Option<Ratio<u128>> {
        (self.denominator != 0).then(|| Ratio::new(self.numerator, self.denominator))
    }
}

/// An exact ratio together with a 3-place decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub numerator: u128,
    pub denominator: u128,
    pub decimal: String,
}

impl From<Ratio<u128>> for RatioReport {
    fn from(r: Ratio<u128>) -> Self {
        RatioReport {
            numerator: *r.numer(),
            denominator: *r.denom(),
            decimal: format!("{:.3}", *r.numer() as f64 / *r.denom() as f64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub schema: u32,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub colors_present: usize,
    pub r: usize,
    pub mu: usize,
    /// Weight of the deleted edges.
    pub objective: Weight,
    /// Unsatisfied weight under the reported coloring (at most `objective`).
    pub coloring_objective: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<Fraction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<RatioReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_value: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empirical_ratio: Option<RatioReport>,
    /// Original 1-based edge ids, ascending.
    pub deleted_edge_ids: Vec<usize>,
    /// Color of node `i + 1` at position `i`.
    pub coloring: Vec<u32>,
    pub runtime_ms: f64,
    pub work_counters: BTreeMap<String, u64>,
    pub peak_mem_estimate_bytes: usize,
}

impl SolveReport {
    pub fn new(h: &ColoredHypergraph, result: &SolveResult, exact_value: Option<Weight>) -> Self {
        SolveReport {
            schema: SCHEMA_VERSION,
            algorithm: result.algorithm.name().to_string(),
            n: h.node_count(),
            m: h.edge_count(),
            k: h.color_count(),
            colors_present: h.colors_present(),
            r: h.max_edge_size(),
            mu: h.size(),
            objective: result.objective,
            coloring_objective: h.unsatisfied_weight(&result.coloring),
            lower_bound: result.lower_bound.map(Fraction::from),
            ratio: result.ratio().map(RatioReport::from),
            exact_value,
            empirical_ratio: exact_value
                .and_then(|v| ratio_against(result.objective, Ratio::from_integer(v as u128)))
                .map(RatioReport::from),
            deleted_edge_ids: result.deleted.labels(h),
            coloring: result.coloring.as_slice().to_vec(),
            runtime_ms: result.runtime.as_secs_f64() * 1e3,
            work_counters: result.work.clone(),
            peak_mem_estimate_bytes: result.peak_mem_estimate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub const TSV_COLUMNS: [&'static str; 15] = [
        "algorithm",
        "n",
        "m",
        "k",
        "r",
        "mu",
        "objective",
        "coloring_objective",
        "lower_bound",
        "ratio",
        "exact_value",
        "empirical_ratio",
        "runtime_ms",
        "peak_mem_estimate_bytes",
        "deleted_edge_ids",
    ];

    pub fn tsv_header() -> String {
        Self::TSV_COLUMNS.join("\t")
    }

    pub fn to_tsv_row(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let frac = |f: &Fraction| format!("{}/{}", f.numerator, f.denominator);
        let ratio = |r: &RatioReport| format!("{}/{} ({})", r.numerator, r.denominator, r.decimal);
        let ids = self
            .deleted_edge_ids
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let mut row = String::new();
        write!(
            row,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}\t{}\t{}",
            self.algorithm,
            self.n,
            self.m,
            self.k,
            self.r,
            self.mu,
            self.objective,
            self.coloring_objective,
            opt(self.lower_bound.as_ref().map(frac)),
            opt(self.ratio.as_ref().map(ratio)),
            opt(self.exact_value.map(|v| v.to_string())),
            opt(self.empirical_ratio.as_ref().map(ratio)),
            self.runtime_ms,
            self.peak_mem_estimate_bytes,
            if ids.is_empty() { "-".into() } else { ids },
        )
        .unwrap();
        row
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const CHECK_SHAPE: &str = "shape";
pub const CHECK_CONFLICT_FREE: &str = "conflict-free";
pub const CHECK_OBJECTIVE: &str = "objective mismatch";
pub const CHECK_CONSISTENCY: &str = "deleted-set/coloring inconsistency";
pub const CHECK_BOUND: &str = "lower-bound/ratio";

/// Recomputes everything a report claims from the instance alone.
pub fn verify_report(h: &ColoredHypergraph, report: &SolveReport) -> Verification {
    let mut checks = Vec::new();
    let mut push = |name, result: Result<(), String>| {
        checks.push(Check {
            name,
            passed: result.is_ok(),
            detail: result.err().unwrap_or_else(|| "ok".into()),
        })
    };

    let shape = check_shape(h, report);
    let parts = shape.as_ref().ok().cloned();
    push(CHECK_SHAPE, shape.map(|_| ()));
    let Some((deleted, coloring)) = parts else {
        return Verification { checks };
    };

    push(
        CHECK_CONFLICT_FREE,
        if h.is_conflict_free(&deleted) {
            Ok(())
        } else {
            Err("some node keeps surviving edges of two colors".into())
        },
    );

    let deleted_weight = deleted.weight(h);
    let unsatisfied = h.unsatisfied_weight(&coloring);
    push(
        CHECK_OBJECTIVE,
        if report.objective != deleted_weight {
            Err(format!(
                "objective {} but deleted edges weigh {}",
                report.objective, deleted_weight
            ))
        } else if report.coloring_objective != unsatisfied {
            Err(format!(
                "coloring objective {} but coloring leaves {} unsatisfied",
                report.coloring_objective, unsatisfied
            ))
        } else {
            Ok(())
        },
    );

    let violated: Vec<usize> = (0..h.edge_count())
        .filter(|&e| !deleted.contains(e) && !h.is_satisfied(e, &coloring))
        .map(|e| h.edge(e).label)
        .collect();
    push(
        CHECK_CONSISTENCY,
        if violated.is_empty() {
            Ok(())
        } else {
            Err(format!("non-deleted edges unsatisfied: {violated:?}"))
        },
    );

    push(CHECK_BOUND, check_bound(report));
    Verification { checks }
}

fn check_shape(
    h: &ColoredHypergraph,
    report: &SolveReport,
) -> Result<(EdgeDeletionSet, NodeColoring), String> {
    if report.schema != SCHEMA_VERSION {
        return Err(format!("unsupported schema {}", report.schema));
    }
    if (report.n, report.m) != (h.node_count(), h.edge_count()) {
        return Err(format!(
            "report is for n={} m={}, instance has n={} m={}",
            report.n,
            report.m,
            h.node_count(),
            h.edge_count()
        ));
    }
    if report.coloring.len() != h.node_count() {
        return Err(format!(
            "coloring has {} entries for {} nodes",
            report.coloring.len(),
            h.node_count()
        ));
    }
    if let Some(c) = report
        .coloring
        .iter()
        .find(|&&c| c == 0 || c > h.color_count().max(1))
    {
        return Err(format!("color {c} out of range"));
    }
    let label_to_id = {
        let mut map = vec![usize::MAX; h.edge_count() + 1];
        for (id, e) in h.edges().iter().enumerate() {
            map[e.label] = id;
        }
        map
    };
    let mut deleted = EdgeDeletionSet::empty(h.edge_count());
    for &label in &report.deleted_edge_ids {
        if label == 0 || label > h.edge_count() {
            return Err(format!("deleted edge id {label} out of range"));
        }
        deleted.insert(label_to_id[label]);
    }
    Ok((deleted, NodeColoring::new(report.coloring.clone())))
}

fn check_bound(report: &SolveReport) -> Result<(), String> {
    let Some(lb) = report.lower_bound else {
        return if report.ratio.is_some() {
            Err("ratio without lower bound".into())
        } else {
            Ok(())
        };
    };
    let lb = lb.to_ratio().ok_or("zero denominator in lower bound")?;
    if lb > Ratio::from_integer(report.objective as u128) {
        return Err(format!("lower bound {lb} exceeds objective {}", report.objective));
    }
    let expected = ratio_against(report.objective, lb).map(RatioReport::from);
    if report.ratio != expected {
        return Err("ratio does not equal objective / lower bound".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::tests::t1;
    use crate::solve::{solve, Algorithm, SolveOptions};

    fn report(alg: Algorithm) -> (ColoredHypergraph, SolveReport) {
        let h = t1();
        let r = solve(&h, alg, &SolveOptions::default()).unwrap();
        let rep = SolveReport::new(&h, &r, Some(1));
        (h, rep)
    }

    #[test]
    fn every_algorithm_verifies() {
        for alg in Algorithm::ALL {
            let (h, rep) = report(alg);
            let v = verify_report(&h, &rep);
            assert!(v.passed(), "{alg}: {:?}", v.failures().collect::<Vec<_>>());
            let back = SolveReport::from_json(&rep.to_json()).unwrap();
            assert_eq!(back, rep);
        }
    }

    #[test]
    fn localratio_report_fields() {
        let (_, rep) = report(Algorithm::LocalRatio);
        assert_eq!(rep.objective, 2);
        assert_eq!(rep.coloring_objective, 1);
        assert_eq!(rep.exact_value, Some(1));
        assert_eq!(rep.empirical_ratio.unwrap().decimal, "2.000");
        assert!(rep.lower_bound.is_none());
        assert_eq!(rep.deleted_edge_ids, vec![1, 2]);
    }

    #[test]
    fn tampered_objective() {
        let (h, mut rep) = report(Algorithm::ColorPair);
        rep.objective = 0;
        let v = verify_report(&h, &rep);
        let failed: Vec<_> = v.failures().map(|c| c.name).collect();
        assert!(failed.contains(&CHECK_OBJECTIVE));
    }

    #[test]
    fn coloring_violating_kept_edge() {
        let (h, mut rep) = report(Algorithm::ColorPair);
        rep.coloring = vec![2, 2, 2];
        rep.coloring_objective = 2;
        let v = verify_report(&h, &rep);
        let failed: Vec<_> = v.failures().map(|c| c.name).collect();
        assert_eq!(failed, vec![CHECK_CONSISTENCY]);
    }

    #[test]
    fn bad_shape_stops_early() {
        let (h, mut rep) = report(Algorithm::ColorPair);
        rep.deleted_edge_ids = vec![9];
        let v = verify_report(&h, &rep);
        assert_eq!(v.checks.len(), 1);
        assert!(!v.passed());
    }

    #[test]
    fn tsv_row_has_every_column() {
        let (_, rep) = report(Algorithm::ColorPair);
        let row = rep.to_tsv_row();
        assert_eq!(row.split('\t').count(), SolveReport::TSV_COLUMNS.len());
        assert!(row.starts_with("colorpair\t3\t3\t2\t2\t6\t1\t1\t1/1\t1/1 (1.000)"));
    }
}
