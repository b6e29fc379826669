//! Independent oracles shared by the integration tests. Nothing here calls
//! into the solver paths it is used to check.

#![allow(dead_code)]

use std::collections::VecDeque;

use minecc::maxflow::{Capacity, FlowNetwork};
use minecc::{generate_random, ColoredHypergraph, GeneratorParams, NodeColoring, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Small random instance: |V| ≤ 8, |E| ≤ 10, k ≤ 4, weights 1–5.
pub fn small_instance(seed: u64) -> ColoredHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_ecc0);
    let nodes = rng.gen_range(2..=8);
    generate_random(GeneratorParams {
        nodes,
        edges: rng.gen_range(1..=10),
        colors: rng.gen_range(2..=4),
        max_size: rng.gen_range(1..=nodes.min(4)),
        max_weight: 5,
        seed,
    })
    .unwrap()
}

/// O(|E|²) bad-pair count by direct intersection tests.
pub fn naive_bad_pairs(h: &ColoredHypergraph) -> Vec<(usize, usize)> {
    let edges = h.edges();
    let mut out = Vec::new();
    for e in 0..edges.len() {
        for f in e + 1..edges.len() {
            if edges[e].color != edges[f].color
                && edges[e].nodes.iter().any(|u| edges[f].nodes.contains(u))
            {
                out.push((e, f));
            }
        }
    }
    out
}

/// Per-edge scan of the unsatisfied weight.
pub fn naive_unsatisfied(h: &ColoredHypergraph, coloring: &[u32]) -> Weight {
    h.edges()
        .iter()
        .filter(|e| e.nodes.iter().any(|&u| coloring[u] != e.color))
        .map(|e| e.weight)
        .sum()
}

/// Minimum weight of a deletion set leaving no bad pair, by enumerating
/// all 2^|E| subsets.
pub fn min_conflict_free_deletion(h: &ColoredHypergraph) -> Weight {
    let pairs = naive_bad_pairs(h);
    let m = h.edge_count();
    (0u32..1 << m)
        .filter(|mask| {
            pairs
                .iter()
                .all(|&(e, f)| mask >> e & 1 == 1 || mask >> f & 1 == 1)
        })
        .map(|mask| {
            (0..m)
                .filter(|&e| mask >> e & 1 == 1)
                .map(|e| h.edge(e).weight)
                .sum()
        })
        .min()
        .unwrap_or(0)
}

/// Minimum unsatisfied weight over all k^n colorings with every color.
pub fn minecc_all_colors(h: &ColoredHypergraph) -> Weight {
    let n = h.node_count();
    let k = h.color_count().max(1);
    let mut coloring = vec![1u32; n];
    let mut best = Weight::MAX;
    loop {
        best = best.min(naive_unsatisfied(h, &coloring));
        let mut i = 0;
        while i < n && coloring[i] == k {
            coloring[i] = 1;
            i += 1;
        }
        if i == n {
            return best;
        }
        coloring[i] += 1;
    }
}

pub fn coloring_value(h: &ColoredHypergraph, c: &NodeColoring) -> Weight {
    naive_unsatisfied(h, c.as_slice())
}

/// Edmonds–Karp on a dense capacity matrix.
pub fn edmonds_karp(net: &FlowNetwork) -> u128 {
    let n = net.node_count();
    let inf = net.infinity() as u128;
    let mut cap = vec![vec![0u128; n]; n];
    for a in net.arcs() {
        cap[a.tail][a.head] += match a.capacity {
            Capacity::Finite(c) => c as u128,
            Capacity::Infinite => inf,
        };
    }
    let (s, t) = (net.source(), net.sink());
    let mut total = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return total;
        }
        let mut bottleneck = u128::MAX;
        let mut v = t;
        while v != s {
            bottleneck = bottleneck.min(cap[parent[v]][v]);
            v = parent[v];
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        total += bottleneck;
    }
}

/// Random network on at most 30 nodes, occasionally with infinite arcs.
pub fn random_network(seed: u64) -> FlowNetwork {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=30);
    let mut net = FlowNetwork::new(n, 0, n - 1).unwrap();
    let arcs = rng.gen_range(0..=4 * n);
    for _ in 0..arcs {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if rng.gen_bool(0.05) {
            net.add_infinite_arc(u, v);
        } else {
            net.add_arc(u, v, rng.gen_range(0..=20));
        }
    }
    net
}
