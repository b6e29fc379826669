//! Bad edge pairs: two edges of different colors sharing a node.

use super::{ColoredHypergraph, EdgeId};
use crate::error::{Error, Result};

/// Default limit on explicitly stored bad pairs.
pub const DEFAULT_PAIR_CAP: usize = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BadPair {
    pub e: EdgeId,
    pub f: EdgeId,
}

impl ColoredHypergraph {
    /// Calls `visit(e, f)` once for every bad pair with `e < f`, ordered by
    /// `e` and then by first discovery of `f`. Stops early if `visit` errs.
    fn for_each_bad_pair<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(EdgeId, EdgeId) -> Result<()>,
    {
        let mut stamp = vec![usize::MAX; self.edges.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            for &u in &edge.nodes {
                for &f in self.incident(u) {
                    if f > e && stamp[f] != e && self.edges[f].color != edge.color {
                        stamp[f] = e;
                        visit(e, f)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// All bad pairs, deduplicated, sorted by `(e, f)`.
    ///
    /// Fails with [`Error::BadPairExplosion`] once more than `cap` pairs
    /// would be stored.
    pub fn enumerate_bad_pairs(&self, cap: usize) -> Result<Vec<BadPair>> {
        let mut pairs = Vec::new();
        let mut start = 0;
        let mut current = usize::MAX;
        self.for_each_bad_pair(|e, f| {
            if pairs.len() == cap {
                return Err(Error::BadPairExplosion { cap });
            }
            if e != current {
                pairs[start..].sort_unstable();
                start = pairs.len();
                current = e;
            }
            pairs.push(BadPair { e, f });
            Ok(())
        })?;
        pairs[start..].sort_unstable();
        Ok(pairs)
    }

    /// `|𝓑|` without storing the pairs.
    pub fn count_bad_pairs(&self) -> u64 {
        let mut count = 0u64;
        self.for_each_bad_pair(|_, _| {
            count += 1;
            Ok(())
        })
        .expect("counting never fails");
        count
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::t1;
    use super::super::EdgeSpec;
    use super::*;

    #[test]
    fn t1_pairs() {
        let h = t1();
        let pairs = h.enumerate_bad_pairs(DEFAULT_PAIR_CAP).unwrap();
        let labels: Vec<_> = pairs
            .iter()
            .map(|p| {
                let (a, b) = (h.edge(p.e).label, h.edge(p.f).label);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(sorted, vec![(1, 2), (2, 3)]);
        assert_eq!(h.count_bad_pairs(), 2);
    }

    #[test]
    fn same_color_has_no_pairs() {
        let h = ColoredHypergraph::new(
            3,
            2,
            vec![EdgeSpec::new(2, 1, [0, 1]), EdgeSpec::new(2, 1, [1, 2])],
        )
        .unwrap();
        assert!(h.enumerate_bad_pairs(10).unwrap().is_empty());
    }

    #[test]
    fn shared_nodes_count_once() {
        let h = ColoredHypergraph::new(
            3,
            2,
            vec![EdgeSpec::new(1, 1, [0, 1, 2]), EdgeSpec::new(2, 1, [0, 1])],
        )
        .unwrap();
        assert_eq!(h.enumerate_bad_pairs(10).unwrap(), vec![BadPair { e: 0, f: 1 }]);
        assert_eq!(h.count_bad_pairs(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let h = t1();
        assert_eq!(
            h.enumerate_bad_pairs(1).unwrap_err(),
            Error::BadPairExplosion { cap: 1 }
        );
        assert_eq!(h.enumerate_bad_pairs(2).unwrap().len(), 2);
    }
}
