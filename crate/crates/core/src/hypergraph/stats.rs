use serde::{Deserialize, Serialize};

use super::ColoredHypergraph;

/// Size statistics and LP constraint counts for an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergraphStats {
    pub n: usize,
    pub m: usize,
    /// Declared color count.
    pub k: u32,
    pub colors_present: usize,
    pub r: usize,
    pub mu: usize,
    /// `Σ_u |C(u)|`.
    pub sum_colors: usize,
    /// `Σ_u C(|C(u)|, 2)`.
    pub sum_color_pairs: usize,
    /// `2 - 2/k` over the colors present.
    pub approx_factor: f64,
    pub bad_pairs: Option<u64>,
    pub lp_ecc_constraints: usize,
    pub lp_vc_constraints: Option<u64>,
    pub lp_cp_constraints: usize,
}

impl ColoredHypergraph {
    /// Bad pairs are only counted when `count_pairs` is set, since that pass
    /// is superlinear in the hypergraph size.
    pub fn compute_stats(&self, count_pairs: bool) -> HypergraphStats {
        let present = self.colors_present();
        let bad_pairs = count_pairs.then(|| self.count_bad_pairs());
        let mu = self.size();
        let sum_color_pairs = self.color_pairs();
        HypergraphStats {
            n: self.node_count(),
            m: self.edge_count(),
            k: self.color_count(),
            colors_present: present,
            r: self.max_edge_size(),
            mu,
            sum_colors: self.color_incidences(),
            sum_color_pairs,
            approx_factor: if present == 0 {
                0.0
            } else {
                2.0 - 2.0 / present as f64
            },
            bad_pairs,
            lp_ecc_constraints: mu + self.node_count(),
            lp_vc_constraints: bad_pairs,
            lp_cp_constraints: mu + sum_color_pairs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::t1;
    use super::super::EdgeSpec;
    use super::*;

    #[test]
    fn t1_stats() {
        let s = t1().compute_stats(true);
        assert_eq!((s.n, s.m, s.k, s.r, s.mu), (3, 3, 2, 2, 6));
        assert_eq!(s.sum_colors, 5);
        assert_eq!(s.bad_pairs, Some(2));
        assert_eq!(s.lp_vc_constraints, Some(2));
        assert_eq!(s.lp_cp_constraints, 8);
        assert_eq!(s.lp_ecc_constraints, 9);
        assert_eq!(s.approx_factor, 1.0);
    }

    #[test]
    fn pairs_only_on_request() {
        let s = t1().compute_stats(false);
        assert_eq!(s.bad_pairs, None);
        assert_eq!(s.lp_vc_constraints, None);
    }

    #[test]
    fn single_edge_single_color() {
        let h = ColoredHypergraph::new(4, 1, vec![EdgeSpec::new(1, 3, [0, 2, 3])]).unwrap();
        let s = h.compute_stats(true);
        assert_eq!(s.bad_pairs, Some(0));
        assert_eq!(s.lp_cp_constraints, s.mu);
    }

    #[test]
    fn empty_instance() {
        let h = ColoredHypergraph::new(0, 0, Vec::new()).unwrap();
        let s = h.compute_stats(true);
        assert_eq!((s.n, s.m, s.r, s.mu, s.sum_colors), (0, 0, 0, 0, 0));
        assert_eq!(s.bad_pairs, Some(0));
        assert_eq!(s.lp_cp_constraints, 0);
    }
}
