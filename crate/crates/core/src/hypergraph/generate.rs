use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Color, ColoredHypergraph, EdgeSpec, Weight};
use crate::error::{Error, Result};

/// Parameters of the uniform random instance generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    pub nodes: usize,
    pub edges: usize,
    pub colors: Color,
    pub max_size: usize,
    pub max_weight: Weight,
    pub seed: u64,
}

/// Every edge gets a uniform size in `1..=max_size`, distinct uniform
/// nodes, a uniform color and a uniform weight in `1..=max_weight`.
/// The same parameters always produce the same instance.
pub fn generate_random(p: GeneratorParams) -> Result<ColoredHypergraph> {
    if p.nodes == 0 || p.colors == 0 || p.max_size == 0 || p.max_weight == 0 {
        return Err(Error::Invalid(
            "nodes, colors, max size and max weight must be at least 1".into(),
        ));
    }
    if p.max_size > p.nodes {
        return Err(Error::Invalid(format!(
            "max size {} exceeds node count {}",
            p.max_size, p.nodes
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let specs = (0..p.edges)
        .map(|_| {
            let size = rng.gen_range(1..=p.max_size);
            let nodes = index::sample(&mut rng, p.nodes, size).into_vec();
            let color = rng.gen_range(1..=p.colors);
            let weight = rng.gen_range(1..=p.max_weight);
            EdgeSpec::new(color, weight, nodes)
        })
        .collect();
    ColoredHypergraph::new(p.nodes, p.colors, specs)
}

#[cfg(test)]
mod tests {
    use super::super::parse_hypergraph_str;
    use super::*;

    fn params(seed: u64) -> GeneratorParams {
        GeneratorParams {
            nodes: 6,
            edges: 8,
            colors: 3,
            max_size: 3,
            max_weight: 4,
            seed,
        }
    }

    #[test]
    fn no_edges() {
        let h = generate_random(GeneratorParams {
            nodes: 5,
            edges: 0,
            ..params(1)
        })
        .unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.node_count(), 5);
    }

    #[test]
    fn deterministic() {
        let a = generate_random(params(7)).unwrap().to_canonical_string();
        let b = generate_random(params(7)).unwrap().to_canonical_string();
        assert_eq!(a, b);
        assert_ne!(a, generate_random(params(8)).unwrap().to_canonical_string());
    }

    #[test]
    fn round_trips_through_text() {
        let h = generate_random(params(7)).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert!(h.edges().iter().all(|e| (1..=3).contains(&e.len())));
        assert!(h.edges().iter().all(|e| (1..=4).contains(&e.weight)));
        let text = h.to_canonical_string();
        assert_eq!(parse_hypergraph_str(&text).unwrap().to_canonical_string(), text);
    }

    #[test]
    fn rejects_oversized_edges() {
        let err = generate_random(GeneratorParams {
            max_size: 7,
            ..params(1)
        })
        .unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }
}
