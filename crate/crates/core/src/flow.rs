//! Integer-capacity max-flow / min-cut (Dinic's blocking-flow scheme).
//!
//! Capacities are i128 so that density networks scaled by large exact
//! denominators stay integral.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i128, // residual capacity
}

/// Directed flow network with paired residual arcs.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> FlowNetwork {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            source,
            sink,
        }
    }

    pub fn nodes(&self) -> usize {
        self.adj.len()
    }

    /// Adds arc u -> v with the given capacity (plus its zero-capacity
    /// reverse). Returns the arc index.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i128) -> usize {
        assert!(cap >= 0, "negative capacity");
        let id = self.arcs.len();
        self.arcs.push(Arc { to: v, cap });
        self.arcs.push(Arc { to: u, cap: 0 });
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
        id
    }

    /// Remaining capacity of arc `id` (flow sent = original cap - this).
    pub fn residual(&self, id: usize) -> i128 {
        self.arcs[id].cap
    }

    fn bfs_levels(&self) -> Option<Vec<i32>> {
        let mut level = vec![-1; self.nodes()];
        let mut q = VecDeque::new();
        level[self.source] = 0;
        q.push_back(self.source);
        while let Some(u) = q.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && level[to] < 0 {
                    level[to] = level[u] + 1;
                    q.push_back(to);
                }
            }
        }
        (level[self.sink] >= 0).then_some(level)
    }

    fn dfs_push(&mut self, u: usize, limit: i128, level: &[i32], iter: &mut [usize]) -> i128 {
        if u == self.sink {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let a = self.adj[u][iter[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.dfs_push(to, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Computes the max flow, mutating residual capacities.
    pub fn max_flow(&mut self) -> i128 {
        let mut total = 0;
        while let Some(level) = self.bfs_levels() {
            let mut iter = vec![0; self.nodes()];
            loop {
                let pushed = self.dfs_push(self.source, i128::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Max flow plus the MAXIMAL source side of a minimum cut: the
    /// complement of the nodes that can still reach the sink in the
    /// residual network.
    pub fn min_cut(&mut self) -> (i128, Vec<bool>) {
        let value = self.max_flow();
        // reverse BFS from the sink over residual arcs
        let mut reaches_sink = vec![false; self.nodes()];
        reaches_sink[self.sink] = true;
        let mut q = VecDeque::new();
        q.push_back(self.sink);
        while let Some(v) = q.pop_front() {
            // arcs stored at v are either forward arcs v->z or reverses of
            // z->v; in both cases arc a^1 runs from arcs[a].to back to v,
            // so residual(u -> v) for u = arcs[a].to is arcs[a^1].cap
            for &a in &self.adj[v] {
                let u = self.arcs[a].to;
                if !reaches_sink[u] && self.arcs[a ^ 1].cap > 0 {
                    reaches_sink[u] = true;
                    q.push_back(u);
                }
            }
        }
        debug_assert!(!reaches_sink[self.source], "residual s-t path after max flow");
        let source_side = reaches_sink.iter().map(|r| !r).collect();
        (value, source_side)
    }
}
