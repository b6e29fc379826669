//! Exhaustive oracles for small instances.

use num_rational::Ratio;

use crate::colorpair::HalfIntegralSolution;
use crate::error::{Error, Result};
use crate::hypergraph::{Color, ColoredHypergraph, NodeColoring, Weight, DEFAULT_PAIR_CAP};

/// Limit on `Π_u max(|C(u)|, 1)`.
pub const COLORING_LIMIT: u128 = 10_000_000;
/// Limit on the edge count for the `3^|E|` LP enumeration.
pub const LP_EDGE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactColoring {
    pub coloring: NodeColoring,
    pub value: Weight,
    /// Partial assignments visited.
    pub explored: u64,
}

/// Minimum unsatisfied weight over colorings that give each node a color
/// of `C(u)` (color 1 for isolated nodes). Colors outside `C(u)` satisfy no
/// incident edge, so the restriction loses nothing. Among optimal colorings
/// the lexicographically smallest is returned.
pub fn brute_force_minecc(h: &ColoredHypergraph) -> Result<ExactColoring> {
    let size = (0..h.node_count()).try_fold(1u128, |acc, u| {
        let c = h.colors_at(u).len().max(1) as u128;
        acc.checked_mul(c).filter(|&p| p <= COLORING_LIMIT)
    });
    if size.is_none() {
        let estimate = (0..h.node_count())
            .map(|u| (h.colors_at(u).len().max(1) as f64).log2())
            .sum::<f64>()
            .exp2()
            .min(u128::MAX as f64) as u128;
        return Err(Error::SearchSpace {
            size: estimate,
            limit: COLORING_LIMIT,
        });
    }

    let mut search = Search::new(h);
    for u in 0..h.node_count() {
        match h.colors_at(u) {
            [] => search.colors[u] = 1,
            [only] => search.assign(u, *only),
            _ => search.branch.push(u),
        }
    }
    if search.branch.is_empty() {
        search.best = Some((search.partial, search.colors.clone()));
    } else {
        search.descend(0);
    }
    let (value, colors) = search.best.expect("at least one coloring exists");
    Ok(ExactColoring {
        coloring: NodeColoring::new(colors),
        value,
        explored: search.explored,
    })
}

struct Search<'a> {
    h: &'a ColoredHypergraph,
    colors: Vec<Color>,
    /// Assigned nodes of each edge that disagree with its color.
    broken: Vec<u32>,
    partial: Weight,
    branch: Vec<usize>,
    best: Option<(Weight, Vec<Color>)>,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(h: &'a ColoredHypergraph) -> Self {
        Search {
            h,
            colors: vec![0; h.node_count()],
            broken: vec![0; h.edge_count()],
            partial: 0,
            branch: Vec::new(),
            best: None,
            explored: 0,
        }
    }

    fn assign(&mut self, u: usize, c: Color) {
        self.colors[u] = c;
        for &e in self.h.incident(u) {
            let edge = self.h.edge(e);
            if edge.color != c {
                if self.broken[e] == 0 {
                    self.partial += edge.weight;
                }
                self.broken[e] += 1;
            }
        }
    }

    fn unassign(&mut self, u: usize) {
        let c = self.colors[u];
        for &e in self.h.incident(u) {
            let edge = self.h.edge(e);
            if edge.color != c {
                self.broken[e] -= 1;
                if self.broken[e] == 0 {
                    self.partial -= edge.weight;
                }
            }
        }
    }

    // Depth is bounded by log2 of the coloring limit.
    fn descend(&mut self, depth: usize) {
        if depth == self.branch.len() {
            if self.best.as_ref().is_none_or(|(b, _)| self.partial < *b) {
                self.best = Some((self.partial, self.colors.clone()));
            }
            return;
        }
        let u = self.branch[depth];
        for i in 0..self.h.colors_at(u).len() {
            let c = self.h.colors_at(u)[i];
            self.explored += 1;
            self.assign(u, c);
            if self.best.as_ref().is_none_or(|(b, _)| self.partial < *b) {
                self.descend(depth + 1);
            }
            self.unassign(u);
        }
    }
}

/// Exhaustive optimum of the vertex-cover LP over `x ∈ {0, ½, 1}^E`.
/// The first optimum in enumeration order (edge 0 varying fastest) is
/// returned.
pub fn brute_force_lpvc(h: &ColoredHypergraph) -> Result<(HalfIntegralSolution, Ratio<u128>)> {
    let m = h.edge_count();
    if m > LP_EDGE_LIMIT {
        return Err(Error::SearchSpace {
            size: 3u128.pow(m.min(80) as u32),
            limit: 3u128.pow(LP_EDGE_LIMIT as u32),
        });
    }
    let pairs = h.enumerate_bad_pairs(DEFAULT_PAIR_CAP)?;
    let weights: Vec<u128> = h.edges().iter().map(|e| e.weight as u128).collect();
    let mut x = vec![0u8; m];
    let mut best: Option<(u128, Vec<u8>)> = None;
    loop {
        if pairs.iter().all(|p| x[p.e] + x[p.f] >= 2) {
            let value: u128 = x.iter().zip(&weights).map(|(&v, &w)| v as u128 * w).sum();
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, x.clone()));
            }
        }
        let mut i = 0;
        while i < m && x[i] == 2 {
            x[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        x[i] += 1;
    }
    let (value, twice) = best.expect("all-ones assignment is feasible");
    Ok((HalfIntegralSolution::from_twice(twice)?, Ratio::new(value, 2)))
}
