//! Integer maximum flow by FIFO push-relabel, and minimum cut extraction.
//!
//! The solver runs a single phase: labels of nodes that can no longer reach
//! the sink rise above `n` and their excess drains back to the source, so the
//! result is a proper flow (conservation everywhere but `s` and `t`), not
//! just a maximum preflow. Gap relabeling and a periodic global relabel (one
//! per `n` relabels) keep labels close to exact distances.

use std::collections::VecDeque;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Flow values can exceed `u64` when several infinite arcs line up.
pub type FlowValue = u128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capacity {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub capacity: Capacity,
}

/// A directed network with integer capacities.
///
/// Infinite arcs are resolved at solve time to [`FlowNetwork::infinity`],
/// one more than the sum of all finite capacities, so they never belong to
/// a minimum cut while a finite cut exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    node_count: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
    finite_total: u64,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count {
            return Err(Error::Invalid("source or sink out of range".into()));
        }
        if source == sink {
            return Err(Error::Invalid("source and sink coincide".into()));
        }
        Ok(FlowNetwork {
            node_count,
            source,
            sink,
            arcs: Vec::new(),
            finite_total: 0,
        })
    }

    pub fn with_arc_capacity(mut self, arcs: usize) -> Self {
        self.arcs.reserve(arcs);
        self
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, capacity: u64) -> usize {
        self.finite_total = self
            .finite_total
            .checked_add(capacity)
            .expect("total finite capacity overflows u64");
        self.push(tail, head, Capacity::Finite(capacity))
    }

    pub fn add_infinite_arc(&mut self, tail: usize, head: usize) -> usize {
        self.push(tail, head, Capacity::Infinite)
    }

    fn push(&mut self, tail: usize, head: usize, capacity: Capacity) -> usize {
        assert!(
            tail < self.node_count && head < self.node_count,
            "arc ({tail}, {head}) out of range"
        );
        self.arcs.push(Arc {
            tail,
            head,
            capacity,
        });
        self.arcs.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn infinity(&self) -> u64 {
        self.finite_total.saturating_add(1)
    }

    pub fn capacity(&self, arc: usize) -> u64 {
        match self.arcs[arc].capacity {
            Capacity::Finite(c) => c,
            Capacity::Infinite => self.infinity(),
        }
    }

    /// Approximate heap footprint of the network and its residual graph.
    pub fn memory_estimate(&self) -> usize {
        let arcs = self.arcs.capacity() * std::mem::size_of::<Arc>();
        // Residual: head, reverse index, residual capacity per half-arc,
        // plus per-node labels, excess, counters and offsets.
        let residual = 2 * self.arcs.len() * (2 * std::mem::size_of::<usize>() + 8);
        let nodes = self.node_count * (5 * std::mem::size_of::<usize>() + 16);
        arcs + residual + nodes
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowStats {
    pub pushes: u64,
    pub relabels: u64,
    pub global_relabels: u64,
    pub gap_relabels: u64,
}

/// Residual graph after a maximum flow, in compressed adjacency form with
/// paired reverse arcs.
#[derive(Debug, Clone)]
pub struct Residual {
    offsets: Vec<usize>,
    head: Vec<usize>,
    rev: Vec<usize>,
    cap: Vec<u64>,
    forward: Vec<usize>,
}

impl Residual {
    fn build(net: &FlowNetwork) -> Self {
        let n = net.node_count;
        let mut degree = vec![0usize; n + 1];
        for a in &net.arcs {
            degree[a.tail] += 1;
            degree[a.head] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for u in 0..n {
            offsets[u + 1] = offsets[u] + degree[u];
        }
        let total = offsets[n];
        let mut fill = offsets[..n].to_vec();
        let mut head = vec![0; total];
        let mut rev = vec![0; total];
        let mut cap = vec![0; total];
        let mut forward = Vec::with_capacity(net.arcs.len());
        for (i, a) in net.arcs.iter().enumerate() {
            let f = fill[a.tail];
            fill[a.tail] += 1;
            let b = fill[a.head];
            fill[a.head] += 1;
            head[f] = a.head;
            head[b] = a.tail;
            rev[f] = b;
            rev[b] = f;
            cap[f] = net.capacity(i);
            forward.push(f);
        }
        Residual {
            offsets,
            head,
            rev,
            cap,
            forward,
        }
    }

    fn range(&self, u: usize) -> std::ops::Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    /// Residual capacity left on original arc `arc`.
    pub fn residual_capacity(&self, arc: usize) -> u64 {
        self.cap[self.forward[arc]]
    }

    /// Flow carried by original arc `arc`.
    pub fn flow(&self, arc: usize) -> u64 {
        self.cap[self.rev[self.forward[arc]]]
    }
}

#[derive(Debug, Clone)]
pub struct MaxFlow {
    pub value: FlowValue,
    pub residual: Residual,
    pub stats: FlowStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: FlowValue,
    /// Membership in the source side `S`.
    pub source_side: Vec<bool>,
}

impl CutResult {
    pub fn contains(&self, node: usize) -> bool {
        self.source_side[node]
    }
}

pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    max_flow_until(net, None).expect("no deadline set")
}

/// Like [`max_flow`], but gives up with [`Error::TimedOut`] past `deadline`.
pub fn max_flow_until(net: &FlowNetwork, deadline: Option<Instant>) -> Result<MaxFlow> {
    let mut solver = PushRelabel::new(net);
    solver.run(deadline)?;
    Ok(MaxFlow {
        value: solver.excess[net.sink],
        stats: solver.stats,
        residual: solver.res,
    })
}

/// Source side of the minimum cut: everything reachable from `s` in the
/// residual graph. This is the unique inclusion-minimal minimum cut.
pub fn min_cut_source_side(net: &FlowNetwork, flow: &MaxFlow) -> CutResult {
    let res = &flow.residual;
    let mut seen = vec![false; net.node_count];
    let mut queue = VecDeque::new();
    seen[net.source] = true;
    queue.push_back(net.source);
    while let Some(u) = queue.pop_front() {
        for a in res.range(u) {
            let v = res.head[a];
            if res.cap[a] > 0 && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    let value = (0..net.arcs.len())
        .filter(|&i| seen[net.arcs[i].tail] && !seen[net.arcs[i].head])
        .map(|i| net.capacity(i) as FlowValue)
        .sum();
    CutResult {
        value,
        source_side: seen,
    }
}

struct PushRelabel<'a> {
    net: &'a FlowNetwork,
    res: Residual,
    height: Vec<usize>,
    excess: Vec<FlowValue>,
    current: Vec<usize>,
    count: Vec<usize>,
    queue: VecDeque<usize>,
    stats: FlowStats,
    since_global: usize,
}

impl<'a> PushRelabel<'a> {
    fn new(net: &'a FlowNetwork) -> Self {
        let n = net.node_count;
        let res = Residual::build(net);
        let current = res.offsets[..n].to_vec();
        PushRelabel {
            net,
            res,
            height: vec![0; n],
            excess: vec![0; n],
            current,
            count: vec![0; 2 * n + 1],
            queue: VecDeque::new(),
            stats: FlowStats::default(),
            since_global: 0,
        }
    }

    fn is_terminal(&self, u: usize) -> bool {
        u == self.net.source || u == self.net.sink
    }

    fn run(&mut self, deadline: Option<Instant>) -> Result<()> {
        let s = self.net.source;
        self.global_relabel();
        for a in self.res.range(s) {
            let c = self.res.cap[a];
            if c > 0 {
                let v = self.res.head[a];
                self.res.cap[a] = 0;
                let r = self.res.rev[a];
                self.res.cap[r] += c;
                self.stats.pushes += 1;
                if v != s {
                    if self.excess[v] == 0 && !self.is_terminal(v) {
                        self.queue.push_back(v);
                    }
                    self.excess[v] += c as FlowValue;
                }
            }
        }

        let mut steps = 0u32;
        while let Some(u) = self.queue.pop_front() {
            steps = steps.wrapping_add(1);
            if steps.is_multiple_of(1024) && deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Error::TimedOut);
            }
            self.discharge(u);
            if self.since_global >= self.net.node_count {
                self.global_relabel();
            }
        }
        Ok(())
    }

    fn discharge(&mut self, u: usize) {
        let n = self.net.node_count;
        while self.excess[u] > 0 {
            if self.current[u] == self.res.offsets[u + 1] {
                self.relabel(u);
                if self.height[u] >= 2 * n {
                    break;
                }
                continue;
            }
            let a = self.current[u];
            let v = self.res.head[a];
            if self.res.cap[a] > 0 && self.height[u] == self.height[v] + 1 {
                let delta = self.excess[u].min(self.res.cap[a] as FlowValue) as u64;
                self.res.cap[a] -= delta;
                let r = self.res.rev[a];
                self.res.cap[r] += delta;
                self.excess[u] -= delta as FlowValue;
                self.stats.pushes += 1;
                if v != self.net.source {
                    if self.excess[v] == 0 && v != self.net.sink {
                        self.queue.push_back(v);
                    }
                    self.excess[v] += delta as FlowValue;
                }
            } else {
                self.current[u] += 1;
            }
        }
    }

    fn relabel(&mut self, u: usize) {
        let n = self.net.node_count;
        self.stats.relabels += 1;
        self.since_global += 1;
        let old = self.height[u];
        let mut lowest = 2 * n;
        for a in self.res.range(u) {
            if self.res.cap[a] > 0 {
                lowest = lowest.min(self.height[self.res.head[a]] + 1);
            }
        }
        self.current[u] = self.res.offsets[u];
        self.count[old] -= 1;
        if old < n && self.count[old] == 0 {
            // Nothing above the empty level can reach the sink any more.
            self.stats.gap_relabels += 1;
            for w in 0..n {
                let h = self.height[w];
                if h > old && h < n && !self.is_terminal(w) {
                    self.count[h] -= 1;
                    self.height[w] = n + 1;
                    self.count[n + 1] += 1;
                    self.current[w] = self.res.offsets[w];
                }
            }
            lowest = lowest.max(n + 1);
        }
        let new = lowest.min(2 * n);
        self.height[u] = new;
        self.count[new] += 1;
    }

    /// Exact labels: distance to `t` in the residual graph, or `n` plus the
    /// distance to `s` for nodes cut off from `t`.
    fn global_relabel(&mut self) {
        let n = self.net.node_count;
        let (s, t) = (self.net.source, self.net.sink);
        self.stats.global_relabels += 1;
        self.since_global = 0;
        const UNSET: usize = usize::MAX;
        let mut label = vec![UNSET; n];
        let mut queue = VecDeque::new();

        label[t] = 0;
        queue.push_back(t);
        self.reverse_bfs(&mut label, &mut queue, s);
        label[s] = n;
        queue.push_back(s);
        self.reverse_bfs(&mut label, &mut queue, UNSET);

        self.count.iter_mut().for_each(|c| *c = 0);
        for (u, &l) in label.iter().enumerate() {
            let h = if l == UNSET { 2 * n } else { l };
            self.height[u] = h;
            self.count[h] += 1;
            self.current[u] = self.res.offsets[u];
        }
    }

    /// Breadth-first search over arcs with residual capacity *into* the
    /// dequeued node, never labelling `skip`.
    fn reverse_bfs(&self, label: &mut [usize], queue: &mut VecDeque<usize>, skip: usize) {
        while let Some(v) = queue.pop_front() {
            for a in self.res.range(v) {
                let w = self.res.head[a];
                if w != skip && label[w] == usize::MAX && self.res.cap[self.res.rev[a]] > 0 {
                    label[w] = label[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}
